#pragma once

#include <optional>

#include "hellmann/core.hpp"

namespace hellmann {

/// Zeroth-order energy plus the three closed-form corrections.
struct EnergyBreakdown {
    double e0 = 0.0;
    double const_shift = 0.0; ///< -b delta
    double e1 = 0.0;
    double e2 = 0.0;
    double e3 = 0.0;
    double total = 0.0;       ///< summed in the order e0, const_shift, e1, e2, e3

    double binding() const { return -total; }
};

struct EnergyShifts {
    double e1 = 0.0;
    double e2 = 0.0;
    double e3 = 0.0;
};

/// Polynomial coefficients of the superpotential hierarchy:
///   W_n(r)     = w0_inv_r / r + w0_const   (ground-state form, n = 0)
///   W_n^(1)(r) = w1_linear r
///   W_n^(2)(r) = w2_quadratic r^2 + w2_linear r
struct SuperpotentialTerms {
    double w0_inv_r = 0.0;
    double w0_const = 0.0;
    double w1_linear = 0.0;
    double w2_quadratic = 0.0;
    double w2_linear = 0.0;

    double w1(double r) const { return w1_linear * r; }
    double w2(double r) const { return (w2_quadratic * r + w2_linear) * r; }
};

/// P(r) = p2 r^2 + p3 r^3, the log of the ground-state moderating factor.
struct GroundStateModerator {
    double p2 = 0.0;
    double p3 = 0.0;
    double c = 0.0;

    double exponent(double r) const { return (p2 + p3 * r) * r * r; }
};

/// Throws NoBoundStateError for a < b and SingularDenominatorError for a == b.
void require_perturbative(const PotentialParams& params);

double zeroth_order_energy(const PotentialParams& params, const QuantumState& state,
                           const UnitSystem& units = {});
EnergyShifts energy_shifts(const PotentialParams& params, const QuantumState& state,
                           const UnitSystem& units = {});
EnergyBreakdown total_energy(const PotentialParams& params, const QuantumState& state,
                             const UnitSystem& units = {});
SuperpotentialTerms superpotential_terms(const PotentialParams& params, const QuantumState& state,
                                         const UnitSystem& units = {});
GroundStateModerator ground_state_moderator(const PotentialParams& params, int l,
                                            const UnitSystem& units = {});

/// chi_{0,l}(r) exp(P(r)): the Coulomb ground state deformed by the first two
/// superpotential corrections. Only n = 0 has a closed-form moderator.
class ModeratedGroundState {
public:
    ModeratedGroundState(const PotentialParams& params, int l, const UnitSystem& units = {});

    const GroundStateModerator& moderator() const { return moderator_; }
    double beta() const { return chi_.beta(); }

    /// Radius past which -beta r + P(r) starts increasing, if it ever does.
    std::optional<double> validity_radius() const;
    /// True when the moderated function vanishes at infinity (p3 < 0, or p3 == 0 and p2 <= 0).
    bool decays() const;

    double coulomb(double r) const { return chi_(r); }
    double factor(double r) const;
    double operator()(double r) const;

    /// Rescales so that the integral of psi^2 over [0, r_max_scale/beta] is 1.
    /// Throws NumericError when the function does not decay.
    void normalize(double r_max_scale = 60.0);
    double scale() const { return scale_; }

private:
    CoulombWavefunction chi_;
    GroundStateModerator moderator_;
    double scale_ = 1.0;
};

double ground_state_wavefunction(const PotentialParams& params, int l, const UnitSystem& units, double r);

/// Successive-term ratios of the series e0, -b delta, e1, e2, e3.
struct ConvergenceReport {
    double shift_ratio = 0.0; ///< |b delta / e0|
    double r1 = 0.0;          ///< |e1 / e0|
    double r2 = 0.0;          ///< |e2 / e1|
    double r3 = 0.0;          ///< |e3 / e2|
    bool trusted = true;          ///< every ratio < 1
    bool high_confidence = true;  ///< every ratio < 0.1

    double max_ratio() const;
};

ConvergenceReport convergence_report(const PotentialParams& params, const QuantumState& state,
                                     const UnitSystem& units = {});
ConvergenceReport convergence_report(const EnergyBreakdown& breakdown);

} // namespace hellmann
