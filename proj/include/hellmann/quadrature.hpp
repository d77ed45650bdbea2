#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hellmann/core.hpp"

namespace hellmann {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    double r_max_scale = 60.0; ///< upper cutoff in units of 1/beta
    unsigned max_subdivisions = 15;
    int panels = 240;          ///< Gauss-Legendre panels for running integrals

    void validate() const;
};

/// How the third-order energy integral weights the W1 W2 cross term.
enum class ThirdOrderReading {
    riccati,    ///< <V3> - 2 <W1 W2>, from multiplying the order-3 Riccati relation by chi^2
    as_printed, ///< <V3> - <W1 W2>, the integrand as typeset
};

/// Inner integrand of the numeric W2: W1(x)^2, or the typeset W1(r) W1(x).
enum class SecondOrderReading { squared, mixed_arguments };

struct SampledFunction {
    std::vector<double> r;
    std::vector<double> value;
    std::vector<double> excluded; ///< grid points dropped next to nodes of chi
    std::vector<std::string> warnings;
};

struct CorrectionIntegrals {
    double e1_num = 0.0;
    double e2_num = 0.0;
    double e3_num = 0.0;
    SampledFunction w1_samples;
    SampledFunction w2_samples;
};

struct HigherOrderOptions {
    ThirdOrderReading third_order = ThirdOrderReading::riccati;
    SecondOrderReading second_order = SecondOrderReading::squared;
    /// Use numeric W1 and W2 inside the integrals instead of the closed forms.
    /// Only meaningful for nodeless (n = 0) states.
    bool fully_numeric = false;
};

/// Integral of chi^2 f over [0, r_max_scale / beta].
double coulomb_expectation(const PotentialParams& params, const QuantumState& state, const UnitSystem& units,
                           const QuadratureConfig& config, const std::function<double(double)>& f);

double norm_quadrature(const PotentialParams& params, const QuantumState& state, const UnitSystem& units = {},
                       const QuadratureConfig& config = {});

double e1_quadrature(const PotentialParams& params, const QuantumState& state, const UnitSystem& units = {},
                     const QuadratureConfig& config = {});

SampledFunction w1_quadrature(const PotentialParams& params, const QuantumState& state, const UnitSystem& units,
                              const QuadratureConfig& config, std::span<const double> r_grid);

struct SecondThirdOrder {
    double e2_num = 0.0;
    double e3_num = 0.0;
};

SecondThirdOrder e2_e3_quadrature(const PotentialParams& params, const QuantumState& state,
                                  const UnitSystem& units = {}, const QuadratureConfig& config = {},
                                  const HigherOrderOptions& options = {});

SampledFunction w2_quadrature(const PotentialParams& params, const QuantumState& state, const UnitSystem& units,
                              const QuadratureConfig& config, std::span<const double> r_grid,
                              SecondOrderReading reading = SecondOrderReading::squared);

CorrectionIntegrals correction_integrals(const PotentialParams& params, const QuantumState& state,
                                         const UnitSystem& units, const QuadratureConfig& config,
                                         std::span<const double> r_grid, const HigherOrderOptions& options = {});

/// Zeros of chi_{n,l} on (0, inf), i.e. of L_n^{2l+1}(2 beta r).
std::vector<double> coulomb_nodes(const PotentialParams& params, const QuantumState& state,
                                  const UnitSystem& units = {});

} // namespace hellmann
