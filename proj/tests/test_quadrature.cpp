#include "doctest.h"

#include <cmath>
#include <vector>

#include "hellmann/errors.hpp"
#include "hellmann/numerics.hpp"
#include "hellmann/perturbation.hpp"
#include "hellmann/quadrature.hpp"

using namespace hellmann;

namespace {

std::vector<QuantumState> low_states() {
    std::vector<QuantumState> out;
    for (int shell = 1; shell <= 6; ++shell) {
        for (int l = 0; l < shell; ++l) out.emplace_back(shell - l - 1, l);
    }
    return out;
}

std::vector<double> linear_grid(double lo, double hi, int count) {
    std::vector<double> r;
    for (int i = 0; i < count; ++i) r.push_back(lo + (hi - lo) * i / (count - 1));
    return r;
}

bool within(double num, double ref, double rel, double abs_floor) {
    return std::abs(num - ref) <= std::max(abs_floor, rel * std::abs(ref));
}

} // namespace

TEST_CASE("config validation") {
    QuadratureConfig c;
    CHECK_NOTHROW(c.validate());
    c.r_max_scale = 10;
    CHECK_THROWS_AS(c.validate(), DomainError);
    c = {};
    c.rel_tol = 0;
    CHECK_THROWS_AS(c.validate(), DomainError);
}

TEST_CASE("coulomb functions are normalized") {
    for (const auto& s : low_states()) {
        CHECK(norm_quadrature({2, -10, 0.1}, s) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(norm_quadrature({3, 1, 0.0}, s, UnitSystem(2.0, 3.0)) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("hydrogenic <r> and <r^2>") {
    const PotentialParams p{2, -1, 0.0};
    for (const auto& s : low_states()) {
        const double beta = CoulombWavefunction(p, s).beta();
        const double N = s.N(), L = s.L();
        const double r1 = coulomb_expectation(p, s, {}, {}, [](double r) { return r; });
        const double r2 = coulomb_expectation(p, s, {}, {}, [](double r) { return r * r; });
        CHECK(r1 == doctest::Approx((3 * N * N - L) / (2 * N * beta)).epsilon(1e-10));
        // <r^2> = N^2 (5N^2 + 1 - 3L) / (2 (N beta)^2)
        CHECK(r2 == doctest::Approx(N * N * (5 * N * N + 1 - 3 * L) / (2 * N * N * beta * beta)).epsilon(1e-10));
    }
}

TEST_CASE("first-order energy by quadrature") {
    CHECK(e1_quadrature({2, 0, 0.1}, QuantumState(0, 0)) == 0.0);
    CHECK(e1_quadrature({2, -1, 0.01}, QuantumState(0, 0)) == doctest::Approx(-5e-5).epsilon(1e-9));
    const UnitSystem u(2.0, 3.0);
    for (const auto& s : low_states()) {
        const PotentialParams p{2, -10, 0.05};
        CHECK(within(e1_quadrature(p, s, u), energy_shifts(p, s, u).e1, 1e-9, 1e-12));
    }
}

TEST_CASE("first-order superpotential by quadrature") {
    const PotentialParams p{2, -10, 0.1};
    const auto grid = linear_grid(0.05, 4.0, 40);
    SUBCASE("linear for the ground state") {
        const auto w = w1_quadrature(p, QuantumState(0, 0), {}, {}, grid);
        const double slope = superpotential_terms(p, QuantumState(0, 0)).w1_linear;
        REQUIRE(w.r.size() == grid.size());
        for (std::size_t i = 0; i < w.r.size(); ++i) {
            CHECK(w.value[i] / w.r[i] == doctest::Approx(slope).epsilon(1e-6));
        }
        CHECK(w.warnings.empty());
    }
    SUBCASE("nodeless states of one shell share the slope") {
        const auto wp = w1_quadrature(p, QuantumState::parse("2p"), {}, {}, grid);
        const double slope = superpotential_terms(p, QuantumState::parse("2s")).w1_linear;
        for (std::size_t i = 0; i < wp.r.size(); ++i) CHECK(wp.value[i] / wp.r[i] == doctest::Approx(slope).epsilon(1e-6));
    }
    SUBCASE("excited states are not linear") {
        const QuantumState s2(1, 0);
        const auto nodes = coulomb_nodes(p, s2);
        REQUIRE(nodes.size() == 1);
        std::vector<double> r{0.1, nodes[0], 0.6, 2.0};
        const auto w = w1_quadrature(p, s2, {}, {}, r);
        CHECK(w.excluded.size() == 1);
        CHECK(w.warnings.size() == 1);
        REQUIRE(w.r.size() == 3);
        CHECK(std::abs(w.value[0] / w.r[0] - w.value[2] / w.r[2]) > 1e-3);
    }
    SUBCASE("vanishes without Yukawa term") {
        const auto w = w1_quadrature({2, 0, 0.1}, QuantumState(0, 1), {}, {}, grid);
        for (double v : w.value) CHECK(v == 0.0);
    }
    const std::vector<double> bad{0.0, 1.0};
    CHECK_THROWS_AS(w1_quadrature(p, QuantumState(0, 0), {}, {}, bad), DomainError);
}

TEST_CASE("second and third order by quadrature, nodeless states") {
    SUBCASE("1s at a=2, b=-10, delta=0.1") {
        const PotentialParams p{2, -10, 0.1};
        const auto q = e2_e3_quadrature(p, QuantumState(0, 0));
        const auto c = energy_shifts(p, QuantumState(0, 0));
        CHECK(q.e2_num == doctest::Approx(c.e2).epsilon(1e-6));
        CHECK(q.e3_num == doctest::Approx(c.e3).epsilon(1e-6));
        CHECK(q.e2_num == doctest::Approx(1.374421e-4).epsilon(1e-6));
    }
    SUBCASE("2p at a=2, b=-1, delta=0.01") {
        const PotentialParams p{2, -1, 0.01};
        const QuantumState s = QuantumState::parse("2p");
        const auto q = e2_e3_quadrature(p, s);
        const auto c = energy_shifts(p, s);
        CHECK(q.e2_num == doctest::Approx(c.e2).epsilon(1e-6));
        CHECK(q.e3_num == doctest::Approx(c.e3).epsilon(1e-6));
    }
    SUBCASE("fully numeric path for n = 0") {
        HigherOrderOptions o;
        o.fully_numeric = true;
        const PotentialParams p{2, -2, 0.05};
        for (int l = 0; l <= 3; ++l) {
            const auto q = e2_e3_quadrature(p, QuantumState(0, l), {}, {}, o);
            const auto c = energy_shifts(p, QuantumState(0, l));
            CHECK(q.e2_num == doctest::Approx(c.e2).epsilon(1e-6));
            CHECK(q.e3_num == doctest::Approx(c.e3).epsilon(1e-6));
        }
        CHECK_THROWS_AS(e2_e3_quadrature(p, QuantumState(1, 0), {}, {}, o), UnsupportedStateError);
    }
    SUBCASE("the single W1 W2 term misses the closed form") {
        HigherOrderOptions o;
        o.third_order = ThirdOrderReading::as_printed;
        const PotentialParams p{2, -10, 0.1};
        const auto q = e2_e3_quadrature(p, QuantumState(0, 0), {}, {}, o);
        const auto c = energy_shifts(p, QuantumState(0, 0));
        CHECK(std::abs(q.e3_num / c.e3 - 1.0) > 1e-2);
    }
    SUBCASE("no Yukawa term") {
        const auto q = e2_e3_quadrature({2, 0, 0.1}, QuantumState(0, 2));
        CHECK(q.e2_num == 0.0);
        CHECK(q.e3_num == 0.0);
    }
}

TEST_CASE("third order for excited states departs from the closed form") {
    // E1 and E2 agree for every state; the closed E3 is not <V3> - 2<W1 W2> once n >= 1.
    const PotentialParams p{2, -10, 0.05};
    for (const char* label : {"2s", "3s", "3p"}) {
        const QuantumState s = QuantumState::parse(label);
        const auto q = e2_e3_quadrature(p, s);
        const auto c = energy_shifts(p, s);
        CHECK(q.e2_num == doctest::Approx(c.e2).epsilon(1e-6));
        CHECK(std::abs(q.e3_num / c.e3 - 1.0) > 0.05);
    }
}

TEST_CASE("second-order superpotential by quadrature") {
    const PotentialParams p{2, -10, 0.1};
    const auto grid = linear_grid(0.1, 3.0, 15);
    const auto w = w2_quadrature(p, QuantumState(0, 0), {}, {}, grid);
    const auto closed = superpotential_terms(p, QuantumState(0, 0));
    for (std::size_t i = 0; i < w.r.size(); ++i) {
        CHECK(w.value[i] == doctest::Approx(closed.w2(w.r[i])).epsilon(1e-6));
    }
    const auto mixed = w2_quadrature(p, QuantumState(0, 0), {}, {}, grid, SecondOrderReading::mixed_arguments);
    CHECK(mixed.r.size() == grid.size());
}

TEST_CASE("cutoff robustness") {
    QuadratureConfig wide;
    wide.r_max_scale = 120;
    for (const auto& s : {QuantumState(0, 0), QuantumState(2, 1), QuantumState(1, 3)}) {
        const PotentialParams p{2, -2, 0.01};
        CHECK(std::abs(e1_quadrature(p, s) - e1_quadrature(p, s, {}, wide)) < 1e-10);
        const auto a = e2_e3_quadrature(p, s);
        const auto b = e2_e3_quadrature(p, s, {}, wide);
        CHECK(std::abs(a.e2_num - b.e2_num) < 1e-10);
        CHECK(std::abs(a.e3_num - b.e3_num) < 1e-10);
    }
}

TEST_CASE("nodes of the coulomb functions") {
    const PotentialParams p{2, 0, 0};
    const auto n3s = coulomb_nodes(p, QuantumState(2, 0));
    REQUIRE(n3s.size() == 2);
    // 3s hydrogen-like with Z = 1 (a - b = 2 in these units means Z beta = 2/3): nodes at
    // 2 beta r = 3 -+ sqrt(3)
    const double beta = 2.0 / 3.0 * 0.5;
    CHECK(2 * beta * n3s[0] == doctest::Approx(3 - std::sqrt(3.0)));
    CHECK(2 * beta * n3s[1] == doctest::Approx(3 + std::sqrt(3.0)));
    CHECK(coulomb_nodes(p, QuantumState(0, 4)).empty());
}

TEST_CASE("correction bundle") {
    const PotentialParams p{2, -1, 0.01};
    const auto grid = linear_grid(0.2, 5.0, 10);
    const auto c = correction_integrals(p, QuantumState(0, 1), {}, {}, grid);
    const auto closed = energy_shifts(p, QuantumState(0, 1));
    CHECK(c.e1_num == doctest::Approx(closed.e1).epsilon(1e-9));
    CHECK(c.e2_num == doctest::Approx(closed.e2).epsilon(1e-6));
    CHECK(c.e3_num == doctest::Approx(closed.e3).epsilon(1e-6));
    CHECK(c.w1_samples.r.size() == grid.size());
    CHECK(c.w2_samples.r.size() == grid.size());
}
