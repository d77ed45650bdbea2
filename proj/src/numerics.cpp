#include "hellmann/numerics.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/format.h>

#include "hellmann/errors.hpp"

namespace hellmann::numerics {

using boost::math::quadrature::gauss;
using boost::math::quadrature::gauss_kronrod;

IntegralEstimate integrate(const std::function<double(double)>& f, std::span<const double> breakpoints,
                           double abs_tol, double rel_tol, unsigned max_depth) {
    IntegralEstimate total;
    double l1_total = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        double err = 0.0, l1 = 0.0;
        total.value += gauss_kronrod<double, 31>::integrate(f, breakpoints[i], breakpoints[i + 1], max_depth,
                                                            rel_tol * 1e-2, &err, &l1);
        total.error += err;
        l1_total += l1;
    }
    // Error relative to the L1 norm handles integrands that cancel to ~0.
    const double budget = std::max({abs_tol, rel_tol * std::abs(total.value), rel_tol * 1e-3 * l1_total});
    if (!std::isfinite(total.value) || total.error > budget) {
        throw NumericError(fmt::format("quadrature did not converge: value {:.6e}, error {:.3e}, budget {:.3e}",
                                       total.value, total.error, budget),
                           total.error);
    }
    return total;
}

std::vector<double> radial_breakpoints(double beta, double r_max_scale) {
    std::vector<double> points{0.0};
    for (double k = 1.0; k < r_max_scale; k *= 2.0) points.push_back(k / beta);
    points.push_back(r_max_scale / beta);
    return points;
}

PanelIntegral::PanelIntegral(std::function<double(double)> g, double end, int panels)
    : g_(std::move(g)), end_(end), width_(end / panels), prefix_(std::size_t(panels) + 1, 0.0) {
    for (int i = 0; i < panels; ++i) {
        prefix_[std::size_t(i) + 1] = prefix_[std::size_t(i)] + partial(i * width_, (i + 1) * width_);
    }
}

double PanelIntegral::partial(double lo, double hi) const {
    if (hi <= lo) return 0.0;
    return gauss<double, 20>::integrate(g_, lo, hi);
}

double PanelIntegral::from_start(double r) const {
    r = std::clamp(r, 0.0, end_);
    const auto panels = prefix_.size() - 1;
    const auto k = std::min(panels, std::size_t(r / width_));
    return prefix_[k] + partial(double(k) * width_, r);
}

double PanelIntegral::to_end(double r) const {
    r = std::clamp(r, 0.0, end_);
    const auto panels = prefix_.size() - 1;
    const auto k = std::min(panels, std::size_t(std::ceil(r / width_)));
    return (prefix_.back() - prefix_[k]) + partial(r, double(k) * width_);
}

} // namespace hellmann::numerics
