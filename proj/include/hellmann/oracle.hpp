#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hellmann/core.hpp"

namespace hellmann {

/// Grid and convergence controls for the direct radial eigen-solver. Unset
/// radii are derived from the problem: r_min = 1e-6 / beta and
/// r_max = 80 / kappa with kappa = sqrt(2 m |E_guess|) / hbar.
struct SolverConfig {
    std::optional<double> r_min;
    std::optional<double> r_max;
    std::optional<double> energy_guess;
    int grid_points = 20000;
    double energy_tol = 1e-9; ///< relative width of the final energy bracket
    int max_iters = 200;

    void validate() const;
};

struct EigenResult {
    double energy = 0.0;
    int nodes = -1;
    bool converged = false;
    double residual = 0.0; ///< final relative bracket width

    double binding() const { return -energy; }
};

/// Log-spaced radial grid r_i = r_min exp(i h) shared by both solvers.
struct RadialGrid {
    double r_min = 0.0;
    double r_max = 0.0;
    double step = 0.0;
    std::vector<double> r;
};

RadialGrid solver_grid(const PotentialParams& params, const QuantumState& state, const UnitSystem& units,
                       const SolverConfig& config);

/// Eigenvalue of -(hbar^2/2m) u'' + [V(r) + hbar^2 l(l+1)/(2 m r^2)] u = E u with
/// n nodes, by Numerov integration on a log grid and node-count bisection.
/// The exact (untruncated) Hellmann potential is used; a <= b is allowed.
EigenResult solve_bound_state(const PotentialParams& params, const QuantumState& state,
                              const UnitSystem& units = {}, const SolverConfig& config = {});

/// Same eigenvalue from the second-order finite-difference pencil on the
/// same grid, via Sturm-sequence bisection and one Richardson step (h, h/2).
EigenResult solve_bound_state_matrix(const PotentialParams& params, const QuantumState& state,
                                     const UnitSystem& units = {}, const SolverConfig& config = {});

struct SampledWavefunction {
    double energy = 0.0;
    std::vector<double> r;
    std::vector<double> u; ///< reduced radial function, unit norm
    int sign_changes = 0;
    double kinetic = 0.0;   ///< <T>, centrifugal term included
    double potential = 0.0; ///< <V>
};

/// Normalized eigenfunction at a solved energy (outward and inward
/// integrations matched at the outer turning point).
SampledWavefunction bound_state_wavefunction(const PotentialParams& params, const QuantumState& state,
                                             const UnitSystem& units, const SolverConfig& config,
                                             const EigenResult& eigen);

struct SpectrumScan {
    std::vector<EigenResult> levels;
    bool truncated = false;
};

/// Lowest `count` levels at fixed l, node counts 0 .. count-1.
SpectrumScan scan_spectrum(const PotentialParams& params, int l, const UnitSystem& units,
                           const SolverConfig& config, int count);

struct OrderingViolation {
    int principal = 0;
    int l_lower = 0;
    int l_upper = 0;
    double e_lower = 0.0;
    double e_upper = 0.0;
};

struct LevelOrderingReport {
    /// E[principal - 1][l] for l < min(principal, l_max + 1)
    std::vector<std::vector<double>> energies;
    std::vector<OrderingViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// For each shell N <= n_max, checks that E_{N,l} increases with l when b < 0,
/// decreases when b > 0, and stays degenerate when b = 0.
LevelOrderingReport level_ordering_check(const PotentialParams& params, const UnitSystem& units,
                                         const SolverConfig& config, int n_max, int l_max);

struct LevelCrossing {
    QuantumState higher_shell;
    QuantumState lower_shell;
    double e_higher = 0.0;
    double e_lower = 0.0;
};

/// Pairs where a level of a higher shell lies at or below a level of a
/// lower shell. Exploratory; nothing is asserted about them.
std::vector<LevelCrossing> find_crossings(const PotentialParams& params, const UnitSystem& units,
                                          const SolverConfig& config, int n_max);

} // namespace hellmann
