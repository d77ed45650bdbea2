#include "doctest.h"

#include <cmath>

#include "hellmann/core.hpp"
#include "hellmann/errors.hpp"
#include "hellmann/numerics.hpp"

using namespace hellmann;

namespace {

double factorial(int n) { return std::tgamma(n + 1.0); }

// Explicit sum for L_n^k(x); magnitude collects sum |term| for the rounding bound.
double laguerre_sum(int n, int k, double x, double& magnitude) {
    double s = 0.0;
    magnitude = 0.0;
    for (int m = 0; m <= n; ++m) {
        const double t = factorial(n + k) / (factorial(n - m) * factorial(m + k) * factorial(m)) * std::pow(x, m);
        s += m % 2 ? -t : t;
        magnitude += t;
    }
    return s;
}

} // namespace

TEST_CASE("default units") {
    const UnitSystem u;
    CHECK(u.kinetic_scale() == 1.0);
    CHECK(u.superpotential_scale() == doctest::Approx(1.0));
    CHECK_NOTHROW(check_default_units());
    CHECK_THROWS_AS(UnitSystem(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(UnitSystem(1.0, -1.0), DomainError);
    const UnitSystem v(2.0, 3.0);
    CHECK(v.kinetic_scale() == doctest::Approx(4.0 / 6.0));
}

TEST_CASE("potential parameters") {
    auto check = [](double a, double b, double d) { PotentialParams{a, b, d}.validate(); };
    CHECK_NOTHROW(check(2, -10, 0.1));
    CHECK_NOTHROW(check(0, -1, 0.5));
    CHECK_THROWS_AS(check(-1, 0, 0), DomainError);
    CHECK_THROWS_AS(check(2, 0, -0.1), DomainError);
    CHECK_THROWS_AS(check(2, NAN, 0), DomainError);
}

TEST_CASE("spectroscopic labels") {
    const auto f = QuantumState::parse("4f");
    CHECK(f.n() == 0);
    CHECK(f.l() == 3);
    CHECK(f.principal() == 4);
    CHECK(f.L() == 12.0);
    CHECK(f.N_next() == 5.0);
    CHECK(QuantumState::parse("2s") == QuantumState(1, 0));
    CHECK(QuantumState::parse("7i") == QuantumState(0, 6));
    CHECK(QuantumState::parse("6h").label() == "6h");
    CHECK(QuantumState(2, 1).label() == "4p");
    CHECK_THROWS_AS(QuantumState::parse("1p"), DomainError);
    CHECK_THROWS_AS(QuantumState::parse("3x"), DomainError);
    CHECK_THROWS_AS(QuantumState::parse("s"), DomainError);
    CHECK_THROWS_AS(QuantumState(-1, 0), DomainError);
}

TEST_CASE("hellmann potential") {
    auto v = [](double a, double b, double d, double r) { return hellmann_potential({a, b, d}, r); };
    CHECK(v(2, 0, 0, 1.0) == -2.0);
    CHECK(v(2, -1, 0.01, 1.0) == doctest::Approx(-2.0 - std::exp(-0.01)));
    // a = 0: pure Yukawa
    CHECK(v(0, -1, 0.5, 2.0) == doctest::Approx(-std::exp(-1.0) / 2.0));
    CHECK_THROWS_AS(v(2, 0, 0, 0.0), DomainError);
    CHECK_THROWS_AS(v(2, 0, 0, -1.0), DomainError);
}

TEST_CASE("expansion coefficients and split") {
    const ExpansionCoefficients c;
    REQUIRE(c.order() == 4);
    CHECK(c.v[0] == 1.0);
    CHECK(c.v[1] == -0.5);
    CHECK(c.v[2] == doctest::Approx(1.0 / 6.0));
    CHECK(c.v[3] == doctest::Approx(-1.0 / 24.0));

    const PotentialParams p{2, -10, 0.01};
    const QuantumState s(0, 1);
    for (double r : {0.1, 1.0, 5.0}) {
        const auto sp = split_potential(p, s, r);
        CHECK(sp.v0 == doctest::Approx(-12.0 / r));
        CHECK(sp.barrier == doctest::Approx(2.0 / (r * r)));
        // truncation error of the series is b delta^5 r^4 / 120
        const double exact = hellmann_potential(p, r);
        CHECK(std::abs(sp.v0 + sp.delta_v - exact) < 1e-9 * (1 + r * r * r * r));
    }
    CHECK(effective_potential(p, s, 2.0) == doctest::Approx(hellmann_potential(p, 2.0) + 0.5));
}

TEST_CASE("laguerre recurrence matches the explicit sum") {
    for (int n = 0; n <= 8; ++n) {
        for (int k = 1; k <= 13; k += 2) {
            for (double x : {0.0, 0.3, 1.7, 6.0, 15.0}) {
                double magnitude = 0.0;
                const double ref = laguerre_sum(n, k, x, magnitude);
                CHECK(std::abs(laguerre(n, k, x) - ref) <= 1e-13 * magnitude);
            }
        }
    }
    CHECK(laguerre(0, 5, 3.0) == 1.0);
    CHECK(laguerre(1, 1, 0.5) == doctest::Approx(1.5));
    CHECK_THROWS_AS(laguerre(-1, 0, 1.0), DomainError);
}

TEST_CASE("coulomb wavefunction closed forms") {
    // a - b = 2, N = 1: beta = 1, u = 2 r exp(-r)
    const PotentialParams p{2, 0, 0};
    const CoulombWavefunction s1(p, QuantumState(0, 0));
    CHECK(s1.beta() == doctest::Approx(1.0));
    for (double r : {0.1, 1.0, 3.0}) CHECK(s1(r) == doctest::Approx(2.0 * r * std::exp(-r)));
    // 2s: beta = 1/2, u = beta^{3/2} r exp(-beta r) (2 - 2 beta r)
    const CoulombWavefunction s2(p, QuantumState(1, 0));
    const double b = 0.5;
    for (double r : {0.2, 2.0, 7.0}) {
        CHECK(s2(r) == doctest::Approx(std::pow(b, 1.5) * r * std::exp(-b * r) * (2.0 - 2.0 * b * r)));
    }
    CHECK(s1(0.0) == 0.0);
    CHECK(coulomb_chi(p, QuantumState(0, 0), 1.0) == doctest::Approx(2.0 * std::exp(-1.0)));
    CHECK(std::log(s2.norm()) == doctest::Approx(s2.log_norm()));
    auto make = [](double b) { return CoulombWavefunction({2, b, 0.1}, QuantumState(0, 0)); };
    CHECK_THROWS_AS(make(2.0), NoBoundStateError);
    CHECK_THROWS_AS(make(3.0), NoBoundStateError);
}

TEST_CASE("coulomb wavefunction stays finite for large l") {
    const CoulombWavefunction w({2, -50, 0.1}, QuantumState(0, 40));
    const double peak = (w.state().l() + 1) / w.beta();
    CHECK(std::isfinite(w(peak)));
    CHECK(w(peak) > 0.0);
}

TEST_CASE("numerics: integrate and running integral") {
    const auto points = numerics::radial_breakpoints(1.0, 60.0);
    CHECK(points.front() == 0.0);
    CHECK(points.back() == doctest::Approx(60.0));
    const auto est = numerics::integrate([](double r) { return r * r * std::exp(-r); }, points, 1e-12, 1e-12, 15);
    CHECK(est.value == doctest::Approx(2.0).epsilon(1e-12));

    const numerics::PanelIntegral run([](double r) { return std::exp(-r); }, 40.0, 200);
    CHECK(run.from_start(1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-13));
    CHECK(run.to_end(1.0) == doctest::Approx(std::exp(-1.0) - std::exp(-40.0)).epsilon(1e-13));
    CHECK(run.total() == doctest::Approx(1.0).epsilon(1e-13));
}
