#pragma once

#include <functional>
#include <span>
#include <vector>

namespace hellmann::numerics {

struct IntegralEstimate {
    double value = 0.0;
    double error = 0.0;
};

/// Adaptive Gauss-Kronrod over consecutive breakpoints. Throws NumericError
/// when the summed error estimate exceeds max(abs_tol, rel_tol * |value|).
IntegralEstimate integrate(const std::function<double(double)>& f, std::span<const double> breakpoints,
                           double abs_tol, double rel_tol, unsigned max_depth);

/// Breakpoints 0, 1/beta, 2/beta, 4/beta, ... up to r_max_scale/beta.
std::vector<double> radial_breakpoints(double beta, double r_max_scale);

/// Running integral of g over [0, end], answered for any r by summing whole
/// 20-point Gauss-Legendre panels plus one partial panel.
class PanelIntegral {
public:
    PanelIntegral(std::function<double(double)> g, double end, int panels);

    double from_start(double r) const;
    double to_end(double r) const;
    double total() const { return prefix_.back(); }

private:
    double partial(double lo, double hi) const;

    std::function<double(double)> g_;
    double end_;
    double width_;
    std::vector<double> prefix_;
};

} // namespace hellmann::numerics
