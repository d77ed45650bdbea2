#include "hellmann/core.hpp"

#include <cctype>
#include <cmath>

#include <fmt/format.h>

#include "hellmann/errors.hpp"

namespace hellmann {

namespace {

constexpr std::string_view kOrbitalLetters = "spdfghi";

} // namespace

UnitSystem::UnitSystem(double hbar, double mass) : hbar_(hbar), mass_(mass) {
    if (!(hbar > 0.0) || !(mass > 0.0)) {
        throw DomainError(fmt::format("units need hbar > 0 and mass > 0 (got {}, {})", hbar, mass));
    }
}

double UnitSystem::superpotential_scale() const { return hbar_ / std::sqrt(2.0 * mass_); }

void check_default_units() {
    const UnitSystem u;
    const double h = u.hbar(), m = u.mass();
    const bool ok = h * h / (2 * m) == 1.0 && h * h / m == 2.0 &&
                    std::pow(h, 4) / (m * m) == 4.0 && std::pow(h, 6) / (m * m * m) == 8.0;
    if (!ok) throw Error("default unit system does not satisfy hbar^2/2m = 1");
}

void PotentialParams::validate() const {
    if (!(a >= 0.0)) throw DomainError(fmt::format("Coulomb strength a must be >= 0 (got {})", a));
    if (!(delta >= 0.0)) throw DomainError(fmt::format("screening delta must be >= 0 (got {})", delta));
    if (!std::isfinite(b)) throw DomainError("Yukawa strength b must be finite");
}

QuantumState::QuantumState(int n, int l) : n_(n), l_(l) {
    if (n < 0 || l < 0) throw DomainError(fmt::format("invalid quantum numbers n={} l={}", n, l));
}

QuantumState QuantumState::parse(std::string_view label) {
    std::size_t i = 0;
    int principal = 0;
    while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) {
        principal = principal * 10 + (label[i] - '0');
        ++i;
    }
    if (i == 0 || i + 1 != label.size()) {
        throw DomainError(fmt::format("malformed state label '{}'", label));
    }
    const auto letter = static_cast<char>(std::tolower(static_cast<unsigned char>(label[i])));
    const auto l = kOrbitalLetters.find(letter);
    if (l == std::string_view::npos) {
        throw DomainError(fmt::format("unknown orbital letter in '{}'", label));
    }
    if (principal < int(l) + 1) {
        throw DomainError(fmt::format("state '{}' needs principal number > l", label));
    }
    return QuantumState(principal - int(l) - 1, int(l));
}

std::string QuantumState::label() const {
    if (l_ >= int(kOrbitalLetters.size())) return fmt::format("{}[l={}]", principal(), l_);
    return fmt::format("{}{}", principal(), kOrbitalLetters[std::size_t(l_)]);
}

double hellmann_potential(const PotentialParams& params, double r) {
    if (!(r > 0.0)) throw DomainError(fmt::format("potential needs r > 0 (got {})", r));
    return (-params.a + params.b * std::exp(-params.delta * r)) / r;
}

ExpansionCoefficients::ExpansionCoefficients(int order) {
    if (order < 1) throw DomainError("expansion order must be >= 1");
    v.reserve(std::size_t(order));
    double factorial = 1.0;
    for (int i = 1; i <= order; ++i) {
        factorial *= i;
        v.push_back((i % 2 == 1 ? 1.0 : -1.0) / factorial);
    }
}

double effective_potential(const PotentialParams& params, const QuantumState& state, double r,
                           const UnitSystem& units) {
    return hellmann_potential(params, r) + units.kinetic_scale() * state.L() / (r * r);
}

PotentialSplit split_potential(const PotentialParams& params, const QuantumState& state, double r,
                               const UnitSystem& units, const ExpansionCoefficients& coeffs) {
    if (!(r > 0.0)) throw DomainError(fmt::format("potential needs r > 0 (got {})", r));
    PotentialSplit s{};
    s.v0 = -(params.a - params.b) / r;
    double power = 1.0; // delta^i r^(i-1)
    for (int i = 0; i < coeffs.order(); ++i) {
        power *= params.delta;
        if (i > 0) power *= r;
        s.delta_v -= params.b * coeffs.v[std::size_t(i)] * power;
    }
    s.barrier = units.kinetic_scale() * state.L() / (r * r);
    return s;
}

double laguerre(int n, int k, double x) {
    if (n < 0 || k < 0) throw DomainError("laguerre needs n, k >= 0");
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 + k - x;
    for (int j = 1; j < n; ++j) {
        const double next = ((2 * j + k + 1 - x) * cur - (j + k) * prev) / (j + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

CoulombWavefunction::CoulombWavefunction(const PotentialParams& params, const QuantumState& state,
                                         const UnitSystem& units)
    : state_(state) {
    const double charge = params.a - params.b;
    if (!(charge > 0.0)) {
        throw NoBoundStateError(
            fmt::format("Coulomb part -(a-b)/r is not attractive (a={}, b={})", params.a, params.b));
    }
    const int n = state.n(), l = state.l();
    const double N = state.N();
    beta_ = units.mass() * charge / (N * units.hbar() * units.hbar());
    // [2 beta]^(l+1) / N * sqrt(N beta n! / (n+2l+1)!)
    log_norm_ = (l + 1) * std::log(2.0 * beta_) - std::log(N) +
                0.5 * (std::log(N * beta_) + std::lgamma(n + 1.0) - std::lgamma(n + 2.0 * l + 2.0));
}

double CoulombWavefunction::norm() const { return std::exp(log_norm_); }

double CoulombWavefunction::operator()(double r) const {
    if (r < 0.0) throw DomainError("radial coordinate must be >= 0");
    if (r == 0.0) return 0.0;
    const int l = state_.l();
    const double envelope = std::exp(log_norm_ + (l + 1) * std::log(r) - beta_ * r);
    return envelope * laguerre(state_.n(), 2 * l + 1, 2.0 * beta_ * r);
}

double coulomb_chi(const PotentialParams& params, const QuantumState& state, double r,
                   const UnitSystem& units) {
    return CoulombWavefunction(params, state, units)(r);
}

} // namespace hellmann
