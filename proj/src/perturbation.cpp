#include "hellmann/perturbation.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "hellmann/errors.hpp"
#include "hellmann/numerics.hpp"

namespace hellmann {

namespace {

// |x / y| with 0/0 -> 0 (term absent) and x/0 -> inf.
double ratio(double x, double y) {
    if (x == 0.0) return 0.0;
    if (y == 0.0) return std::numeric_limits<double>::infinity();
    return std::abs(x / y);
}

} // namespace

void require_perturbative(const PotentialParams& params) {
    params.validate();
    if (params.a == params.b) {
        throw SingularDenominatorError(
            fmt::format("perturbative formulas are singular for a == b (= {})", params.a));
    }
    if (params.a < params.b) {
        throw NoBoundStateError(fmt::format("no Coulomb bound states for a < b (a={}, b={})", params.a, params.b));
    }
}

double zeroth_order_energy(const PotentialParams& params, const QuantumState& state, const UnitSystem& units) {
    require_perturbative(params);
    const double ab = params.a - params.b;
    const double N = state.N();
    return -units.mass() * ab * ab / (2.0 * units.hbar() * units.hbar() * N * N);
}

EnergyShifts energy_shifts(const PotentialParams& params, const QuantumState& state, const UnitSystem& units) {
    require_perturbative(params);
    const double b = params.b, d = params.delta, ab = params.a - params.b;
    const double N = state.N(), N2 = N * N, L = state.L();
    // x = hbar^2 / (m (a-b)) collects the unit and strength powers of every term.
    const double x = units.hbar() * units.hbar() / (units.mass() * ab);
    const double d2 = d * d, d3 = d2 * d, d4 = d3 * d, d5 = d4 * d, d6 = d5 * d;
    const double f = 5.0 * N2 - 3.0 * L + 1.0;
    const double g = 9.0 * N2 - 5.0 * L;

    EnergyShifts s;
    s.e1 = b * (3.0 * N2 - L) * d2 * x / 4.0;
    s.e2 = -b * N2 * f * d3 * x * x / 12.0 - b * b * N2 * N2 * f * d4 * x * x * x / (16.0 * ab);
    s.e3 = b * N2 * (5.0 * N2 - 3.0 * L) * f * d4 * x * x * x / 96.0 +
           b * b * N2 * N2 * f * g * d5 * std::pow(x, 4) / (48.0 * ab) +
           b * b * b * N2 * N2 * N2 * f * g * d6 * std::pow(x, 5) / (64.0 * ab * ab);
    return s;
}

EnergyBreakdown total_energy(const PotentialParams& params, const QuantumState& state, const UnitSystem& units) {
    EnergyBreakdown out;
    out.e0 = zeroth_order_energy(params, state, units);
    out.const_shift = -params.b * params.delta;
    const auto s = energy_shifts(params, state, units);
    out.e1 = s.e1;
    out.e2 = s.e2;
    out.e3 = s.e3;
    double total = out.e0;
    total += out.const_shift;
    total += out.e1;
    total += out.e2;
    total += out.e3;
    out.total = total;
    return out;
}

SuperpotentialTerms superpotential_terms(const PotentialParams& params, const QuantumState& state,
                                         const UnitSystem& units) {
    require_perturbative(params);
    const double h = units.hbar(), m = units.mass();
    const double sqrt2m = std::sqrt(2.0 * m);
    const double b = params.b, d = params.delta, ab = params.a - params.b;
    const double N = state.N(), Nn = state.N_next();

    SuperpotentialTerms w;
    w.w0_inv_r = -h / sqrt2m * N;
    w.w0_const = std::sqrt(m / 2.0) * ab / (N * h);
    w.w1_linear = h * b * N * d * d / (2.0 * sqrt2m * ab);
    const double k = (3.0 * h * h * b * b * N * N * d + 4.0 * m * b * ab * ab) * d * d * d /
                     (24.0 * sqrt2m * m * m * std::pow(ab, 4));
    w.w2_quadratic = -h * N * ab * m * k;
    w.w2_linear = -h * N * h * h * N * Nn * k;
    return w;
}

GroundStateModerator ground_state_moderator(const PotentialParams& params, int l, const UnitSystem& units) {
    require_perturbative(params);
    const double h = units.hbar(), m = units.mass();
    const double b = params.b, d = params.delta, ab = params.a - params.b;
    const double N0 = l + 1.0, N1 = l + 2.0;

    GroundStateModerator p;
    p.c = N0 * d / (12.0 * m * ab * ab * ab) * (3.0 * h * h * b * N0 * N0 * d + 4.0 * m * ab * ab);
    p.p2 = b * N0 * d * d / (4.0 * ab) * (N1 * h * h * p.c / m - 1.0);
    p.p3 = b * p.c * d * d / 6.0;
    return p;
}

ModeratedGroundState::ModeratedGroundState(const PotentialParams& params, int l, const UnitSystem& units)
    : chi_((require_perturbative(params), params), QuantumState(0, l), units),
      moderator_(ground_state_moderator(params, l, units)) {}

std::optional<double> ModeratedGroundState::validity_radius() const {
    // d/dr (-beta r + P) = 3 p3 r^2 + 2 p2 r - beta
    const double p2 = moderator_.p2, p3 = moderator_.p3, beta = chi_.beta();
    if (p3 == 0.0) {
        if (p2 > 0.0) return beta / (2.0 * p2);
        return std::nullopt;
    }
    const double disc = 4.0 * p2 * p2 + 12.0 * p3 * beta;
    if (disc < 0.0) return std::nullopt;
    const double root = std::sqrt(disc);
    std::optional<double> best;
    for (double r : {(-2.0 * p2 + root) / (6.0 * p3), (-2.0 * p2 - root) / (6.0 * p3)}) {
        if (r > 0.0 && (!best || r < *best)) best = r;
    }
    return best;
}

bool ModeratedGroundState::decays() const {
    return moderator_.p3 < 0.0 || (moderator_.p3 == 0.0 && moderator_.p2 <= 0.0);
}

double ModeratedGroundState::factor(double r) const { return std::exp(moderator_.exponent(r)); }

double ModeratedGroundState::operator()(double r) const { return scale_ * chi_(r) * factor(r); }

void ModeratedGroundState::normalize(double r_max_scale) {
    if (!decays()) {
        throw NumericError("moderated ground state grows at large r and cannot be normalized",
                           std::numeric_limits<double>::infinity());
    }
    scale_ = 1.0;
    const auto points = numerics::radial_breakpoints(beta(), r_max_scale);
    const auto norm = numerics::integrate(
        [this](double r) {
            const double v = (*this)(r);
            return v * v;
        },
        points, 1e-14, 1e-12, 15);
    scale_ = 1.0 / std::sqrt(norm.value);
}

double ground_state_wavefunction(const PotentialParams& params, int l, const UnitSystem& units, double r) {
    return ModeratedGroundState(params, l, units)(r);
}

double ConvergenceReport::max_ratio() const { return std::max({shift_ratio, r1, r2, r3}); }

ConvergenceReport convergence_report(const EnergyBreakdown& e) {
    ConvergenceReport c;
    c.shift_ratio = ratio(e.const_shift, e.e0);
    c.r1 = ratio(e.e1, e.e0);
    c.r2 = ratio(e.e2, e.e1);
    c.r3 = ratio(e.e3, e.e2);
    c.trusted = c.max_ratio() < 1.0;
    c.high_confidence = c.max_ratio() < 0.1;
    return c;
}

ConvergenceReport convergence_report(const PotentialParams& params, const QuantumState& state,
                                     const UnitSystem& units) {
    return convergence_report(total_energy(params, state, units));
}

} // namespace hellmann
