#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <string>

#include "hellmann/errors.hpp"
#include "hellmann/table.hpp"
#include "hellmann/verify.hpp"

using namespace hellmann;

namespace {

TableConfig preset_config(const char* name) {
    TableConfig c;
    c.spec = preset(name);
    return c;
}

} // namespace

TEST_CASE("presets") {
    CHECK(preset_names().size() == 4);
    const auto b10 = preset("b-10-scan");
    CHECK(b10.states.size() == 10);
    CHECK(b10.states.front() == "1s");
    CHECK(b10.states.back() == "4f");
    CHECK(b10.delta_values.size() == 6);
    CHECK(preset("delta-0.01-scan").b_values.size() == 11);
    const auto high = preset("high-states");
    CHECK(high.states.size() == 18);
    CHECK(high.states.front() == "5s");
    CHECK(high.states.back() == "7i");
    CHECK(preset("delta-0.1-scan").states.size() == 21);
    for (const auto& n : preset_names()) CHECK_NOTHROW(preset(n).validate());
    CHECK_THROWS_AS(preset("nope"), DomainError);
}

TEST_CASE("spec validation") {
    TableSpec s;
    s.states = {"1s"};
    s.b_values = {-1};
    s.delta_values = {0.01};
    CHECK_THROWS_AS(s.validate(), DomainError); // nothing varies
    s.delta_values = {0.01, 0.02};
    CHECK_NOTHROW(s.validate());
    s.b_values = {-1, 2};
    CHECK_THROWS_AS(s.validate(), DomainError); // a <= max b
    s.engine = Engine::oracle;
    CHECK_NOTHROW(s.validate());
    s.states = {};
    CHECK_THROWS_AS(s.validate(), DomainError);
    s.states = {"2d"};
    CHECK_THROWS_AS(s.validate(), DomainError);
}

TEST_CASE("preset cells") {
    const auto b10 = fill_table(preset_config("b-10-scan"));
    REQUIRE(b10.cells.size() == 60);
    CHECK(std::abs(*b10.find("2p", -10, 0.05)->value(SignConvention::binding) - 8.51025) < 5e-6);
    CHECK(std::abs(*b10.find("1s", -10, 0.1)->value(SignConvention::binding) - 35.0124) < 5e-5);
    const auto d01 = fill_table(preset_config("delta-0.01-scan"));
    CHECK(std::abs(*d01.find("3d", -20, 0.01)->value(SignConvention::binding) - 13.2454) < 5e-5);
    const auto high = fill_table(preset_config("high-states"));
    CHECK(std::abs(*high.find("7i", -10, 0.01)->value(SignConvention::binding) - 0.638942) < 5e-7);
    CHECK(*high.find("7i", -10, 0.01)->value(SignConvention::energy) < 0.0);
    CHECK_FALSE(high.has_errors());
}

TEST_CASE("parallel fill matches the serial reference") {
    for (const auto& name : preset_names()) {
        auto c = preset_config(name.c_str());
        const auto par = fill_table(c);
        const auto ser = fill_table_serial(c);
        CHECK(table_json(par) == table_json(ser));
    }
    TableConfig both = preset_config("b-10-scan");
    both.spec.engine = Engine::both;
    both.spec.states = {"1s", "3p"};
    CHECK(table_csv(fill_table(both)) == table_csv(fill_table_serial(both)));
}

TEST_CASE("thread cap from the environment") {
    setenv("HELLMANN_THREADS", "1", 1);
    CHECK(table_workers() == 1);
    setenv("HELLMANN_THREADS", "garbage", 1);
    CHECK(table_workers() >= 1);
    unsetenv("HELLMANN_THREADS");
}

TEST_CASE("cell failures stay in the cell") {
    TableConfig c;
    c.spec.states = {"1s"};
    c.spec.a = 0.0;
    c.spec.b_values = {-10.0, -1.0};
    c.spec.delta_values = {1.0};
    c.spec.engine = Engine::oracle;
    const auto r = fill_table(c);
    REQUIRE(r.cells.size() == 2);
    CHECK(r.cells[0].error.empty());
    CHECK(r.cells[0].trusted);
    CHECK(r.cells[1].error.find("not bound") != std::string::npos);
    CHECK_FALSE(r.cells[1].value(SignConvention::binding));
    CHECK(r.has_errors());
    CHECK(table_text(r).find("error") != std::string::npos);
}

TEST_CASE("engine both records the gap") {
    TableConfig c;
    c.spec.states = {"1s", "4f"};
    c.spec.b_values = {-10.0};
    c.spec.delta_values = {0.001, 0.3};
    c.spec.engine = Engine::both;
    const auto r = fill_table(c);
    const auto* weak = r.find("1s", -10, 0.001);
    REQUIRE(weak->relative_gap);
    CHECK(*weak->relative_gap < 1e-5);
    const auto* strong = r.find("4f", -10, 0.3);
    CHECK_FALSE(strong->trusted);
    REQUIRE(strong->convergence);
    CHECK(strong->convergence->shift_ratio > 1.0);
}

TEST_CASE("config text") {
    const auto c = parse_table_config("# comment\npreset = b-10-scan\nstates = 1s, 2p\nengine = both\nmass = 0.5\n");
    CHECK(c.spec.name == "b-10-scan");
    CHECK(c.spec.states.size() == 2);
    CHECK(c.spec.engine == Engine::both);
    CHECK(c.spec.delta_values.size() == 6);
    const auto again = parse_table_config(format_table_config(c));
    CHECK(format_table_config(again) == format_table_config(c));
    CHECK(config_hash(again) == config_hash(c));
    CHECK(config_hash(c).size() == 16);

    auto other = c;
    other.spec.a = 2.5;
    CHECK(config_hash(other) != config_hash(c));

    CHECK_THROWS_AS(parse_table_config("states = 1s\nfoo = 1\n"), DomainError);
    CHECK_THROWS_AS(parse_table_config("a = 2\na = 3\n"), DomainError);
    CHECK_THROWS_AS(parse_table_config("a = two\n"), DomainError);
    CHECK_THROWS_AS(parse_table_config("a = 2\npreset = high-states\n"), DomainError);
    CHECK_THROWS_AS(parse_table_config("just words\n"), DomainError);
}

TEST_CASE("hash is fnv-1a") {
    CHECK(hash_text("") == "cbf29ce484222325");
    CHECK(hash_text("a") == "af63dc4c8601ec8c");
}

TEST_CASE("output formats") {
    TableConfig c;
    c.spec.name = "demo";
    c.spec.states = {"1s", "2p"};
    c.spec.b_values = {-1.0, 0.5};
    c.spec.delta_values = {0.01};
    c.spec.layout = Layout::b_by_states;
    const auto r = fill_table(c);

    const auto csv = table_csv(r);
    CHECK(csv.rfind("# hellmann ", 0) == 0);
    CHECK(csv.find("# units hbar=1 mass=0.5") != std::string::npos);
    CHECK(csv.find("# config_hash " + config_hash(c)) != std::string::npos);
    CHECK(csv.find("\nstate,n,l,b,delta,value,") != std::string::npos);
    CHECK(csv.find("\n1s,0,0,-1,0.01,2.2400497790") != std::string::npos);

    const auto text = table_text(r);
    CHECK(text.find("b\\state") != std::string::npos);
    CHECK(text.find("2.24005") != std::string::npos);

    const auto json = table_json(r);
    CHECK(json.find("\"config_hash\": \"" + config_hash(c) + "\"") != std::string::npos);
    const auto back = parse_table_json(json);
    CHECK(table_json(back) == json);
    CHECK(back.cells.size() == 4);
    CHECK(back.cells[0].breakdown->total == r.cells[0].breakdown->total);

    CHECK_THROWS_AS(parse_table_json("{}"), DomainError);
    CHECK_THROWS_AS(parse_table_json("not json"), DomainError);
}

TEST_CASE("table files re-verify") {
    TableConfig c = preset_config("high-states");
    c.spec.engine = Engine::both;
    c.spec.states = {"5s", "7i"};
    const auto json = table_json(fill_table(c));
    const auto ok = verify_table_file(json);
    CHECK(ok.ok());
    CHECK(ok.rows.size() == 24);

    auto tampered = json;
    const auto pos = tampered.find("\"total\": ");
    REQUIRE(pos != std::string::npos);
    const std::size_t at = pos + 9 + (tampered[pos + 9] == '-' ? 1 : 0);
    tampered.insert(at, "1");
    const auto bad = verify_table_file(tampered);
    CHECK_FALSE(bad.ok());
    CHECK(bad.failures() == 1);
}
