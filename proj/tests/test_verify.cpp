#include "doctest.h"

#include <cmath>

#include "hellmann/verify.hpp"

using namespace hellmann;

TEST_CASE("state lists") {
    CHECK(states_up_to(0).size() == 1);
    CHECK(states_up_to(5).size() == 21);
    const auto r = state_range("2p", "4s");
    REQUIRE(r.size() == 5);
    CHECK(r.front().label() == "2p");
    CHECK(r.back().label() == "4s");
}

TEST_CASE("oracle tolerance schedule") {
    CHECK(oracle_tolerance(0.001) == 1e-5);
    CHECK(oracle_tolerance(0.005) == 1e-3);
    CHECK(oracle_tolerance(0.01) == 1e-3);
    CHECK(oracle_tolerance(0.1) == 1e-2);
}

TEST_CASE("quadrature suite on nodeless states") {
    QuadratureSuite s;
    s.states = {QuantumState(0, 0), QuantumState(0, 1), QuantumState(0, 3)};
    const auto r = verify_quadrature(s);
    CHECK(r.rows.size() == 3 * 4 * 3 * 3);
    CHECK(r.ok());
    CHECK(r.max_deviation() < 1e-6);
}

TEST_CASE("quadrature suite flags the excited-state third order") {
    QuadratureSuite s;
    s.states = {QuantumState(1, 0)};
    s.b_values = {-10};
    s.delta_values = {0.05};
    const auto r = verify_quadrature(s);
    REQUIRE(r.rows.size() == 3);
    CHECK(r.rows[0].pass);
    CHECK(r.rows[1].pass);
    CHECK_FALSE(r.rows[2].pass);
    CHECK(r.rows[2].quantity == "E3");
}

TEST_CASE("oracle suite") {
    OracleSuite weak;
    const auto r = verify_oracle(weak);
    CHECK(r.rows.size() == 6);
    CHECK(r.ok());
    CHECK(r.max_deviation() < 1e-5);

    OracleSuite strong;
    strong.states = state_range("3d", "4f");
    strong.delta_values = {0.3};
    const auto lenient = verify_oracle(strong);
    CHECK(lenient.ok());
    int untrusted = 0;
    for (const auto& row : lenient.rows) untrusted += row.trusted ? 0 : 1;
    CHECK(untrusted == 4);
    strong.strict = true;
    CHECK_FALSE(verify_oracle(strong).ok());
}

TEST_CASE("report formats") {
    OracleSuite s;
    s.states = {QuantumState(0, 0)};
    const auto r = verify_oracle(s);
    CHECK(report_text(r).find("rows 1  failures 0") != std::string::npos);
    CHECK(report_csv(r).rfind("suite,state,b,delta,quantity", 0) == 0);
    CHECK(report_json(r).find("\"ok\": true") != std::string::npos);
}
