#include "hellmann/quadrature.hpp"

#include <algorithm>
#include <optional>
#include <cmath>

#include <boost/math/tools/roots.hpp>
#include <fmt/format.h>

#include "hellmann/errors.hpp"
#include "hellmann/numerics.hpp"
#include "hellmann/perturbation.hpp"

namespace hellmann {

namespace {

// Grid points closer than this (in units of 1/beta) to a node of chi are dropped.
constexpr double kNodeExclusion = 1e-3;

struct Problem {
    Problem(const PotentialParams& p, const QuantumState& s, const UnitSystem& u, const QuadratureConfig& c)
        : params(p), state(s), units(u), config(c), chi((require_perturbative(p), p), s, u) {
        config.validate();
        cutoff = config.r_max_scale / chi.beta();
        inv_scale = 1.0 / units.superpotential_scale();
        nodes = coulomb_nodes(p, s, u);
        breakpoints = numerics::radial_breakpoints(chi.beta(), config.r_max_scale);
        breakpoints.insert(breakpoints.end(), nodes.begin(), nodes.end());
        std::sort(breakpoints.begin(), breakpoints.end());
        breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());
        // Split point between the running integral from 0 and the tail integral.
        split = state.N() / chi.beta();
    }

    double density(double r) const {
        const double v = chi(r);
        return v * v;
    }
    double v1(double r) const { return params.b * params.delta * params.delta * r / 2.0; }
    double v2(double r) const { return -params.b * std::pow(params.delta, 3) * r * r / 6.0; }
    double v3(double r) const { return params.b * std::pow(params.delta, 4) * r * r * r / 24.0; }

    double expectation(const std::function<double(double)>& f) const {
        return numerics::integrate([&](double r) { return density(r) * f(r); }, breakpoints, config.abs_tol,
                                   config.rel_tol, config.max_subdivisions)
            .value;
    }

    bool near_node(double r) const {
        return std::any_of(nodes.begin(), nodes.end(),
                           [&](double node) { return std::abs(r - node) * chi.beta() < kNodeExclusion; });
    }

    void check_grid(std::span<const double> grid) const {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (!(grid[i] > 0.0)) throw DomainError("radial grid must be strictly positive");
            if (i > 0 && !(grid[i] > grid[i - 1])) throw DomainError("radial grid must be strictly increasing");
            if (grid[i] > cutoff) {
                throw DomainError(fmt::format("grid point {} beyond the quadrature cutoff {}", grid[i], cutoff));
            }
        }
    }

    PotentialParams params;
    QuantumState state;
    UnitSystem units;
    QuadratureConfig config;
    CoulombWavefunction chi;
    double cutoff = 0.0;
    double inv_scale = 0.0; ///< sqrt(2m)/hbar
    double split = 0.0;
    std::vector<double> nodes;
    std::vector<double> breakpoints;
};

// W(r) = (sqrt(2m)/hbar) chi^-2(r) int_0^r chi^2 g, for integrands whose
// integral over [0, inf) vanishes; past `split` the equivalent tail form is used.
class BalancedSuperpotential {
public:
    BalancedSuperpotential(const Problem& p, std::function<double(double)> g)
        : p_(p), running_([&p, g](double x) { return p.density(x) * g(x); }, p.cutoff, p.config.panels) {}

    double operator()(double r) const {
        const double rho = p_.density(r);
        if (rho == 0.0) return 0.0;
        const double integral = r <= p_.split ? running_.from_start(r) : -running_.to_end(r);
        return p_.inv_scale * integral / rho;
    }

private:
    const Problem& p_;
    numerics::PanelIntegral running_;
};

SampledFunction sample(const Problem& p, std::span<const double> grid, const std::function<double(double)>& w) {
    p.check_grid(grid);
    SampledFunction out;
    for (double r : grid) {
        if (p.near_node(r)) {
            out.excluded.push_back(r);
            out.warnings.push_back(fmt::format("r = {} lies at a node of chi_{}; quotient skipped", r,
                                               p.state.label()));
            continue;
        }
        out.r.push_back(r);
        out.value.push_back(w(r));
    }
    return out;
}

double third_order_weight(ThirdOrderReading reading) { return reading == ThirdOrderReading::riccati ? 2.0 : 1.0; }

} // namespace

void QuadratureConfig::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw DomainError("quadrature tolerances must be positive");
    if (!(r_max_scale >= 20.0)) throw DomainError("r_max_scale must be >= 20");
    if (max_subdivisions < 1 || panels < 1) throw DomainError("quadrature subdivision caps must be >= 1");
}

std::vector<double> coulomb_nodes(const PotentialParams& params, const QuantumState& state,
                                  const UnitSystem& units) {
    const CoulombWavefunction chi(params, state, units);
    const int n = state.n(), k = 2 * state.l() + 1;
    std::vector<double> roots;
    if (n == 0) return roots;
    // Every zero of L_n^k lies below 2n + k + 1 + 2 sqrt(n (n + k)).
    const double upper = 2.0 * n + k + 1.0 + 2.0 * std::sqrt(double(n) * (n + k)) + 1.0;
    const int steps = 4000 * n;
    const auto f = [&](double x) { return laguerre(n, k, x); };
    double x0 = 0.0, f0 = f(0.0);
    for (int i = 1; i <= steps && int(roots.size()) < n; ++i) {
        const double x1 = upper * i / steps, f1 = f(x1);
        if (f0 * f1 < 0.0) {
            boost::uintmax_t iters = 200;
            const auto bracket =
                boost::math::tools::bisect(f, x0, x1, boost::math::tools::eps_tolerance<double>(52), iters);
            roots.push_back(0.5 * (bracket.first + bracket.second) / (2.0 * chi.beta()));
        }
        x0 = x1;
        f0 = f1;
    }
    return roots;
}

double coulomb_expectation(const PotentialParams& params, const QuantumState& state, const UnitSystem& units,
                           const QuadratureConfig& config, const std::function<double(double)>& f) {
    const Problem p(params, state, units, config);
    return p.expectation(f);
}

double norm_quadrature(const PotentialParams& params, const QuantumState& state, const UnitSystem& units,
                       const QuadratureConfig& config) {
    return coulomb_expectation(params, state, units, config, [](double) { return 1.0; });
}

double e1_quadrature(const PotentialParams& params, const QuantumState& state, const UnitSystem& units,
                     const QuadratureConfig& config) {
    const Problem p(params, state, units, config);
    return p.expectation([&](double r) { return p.v1(r); });
}

SampledFunction w1_quadrature(const PotentialParams& params, const QuantumState& state, const UnitSystem& units,
                              const QuadratureConfig& config, std::span<const double> r_grid) {
    const Problem p(params, state, units, config);
    const double e1 = p.expectation([&](double r) { return p.v1(r); });
    const BalancedSuperpotential w1(p, [&](double x) { return e1 - p.v1(x); });
    return sample(p, r_grid, w1);
}

SecondThirdOrder e2_e3_quadrature(const PotentialParams& params, const QuantumState& state, const UnitSystem& units,
                                  const QuadratureConfig& config, const HigherOrderOptions& options) {
    const Problem p(params, state, units, config);
    const double weight = third_order_weight(options.third_order);
    SecondThirdOrder out;

    if (!options.fully_numeric) {
        const auto w = superpotential_terms(params, state, units);
        out.e2_num = p.expectation([&](double r) {
            const double w1 = w.w1(r);
            return p.v2(r) - w1 * w1;
        });
        out.e3_num = p.expectation([&](double r) { return p.v3(r) - weight * w.w1(r) * w.w2(r); });
        return out;
    }

    if (state.n() != 0) {
        throw UnsupportedStateError(fmt::format(
            "fully numeric superpotentials need a nodeless state; {} has {} nodes", state.label(), state.n()));
    }
    const double e1 = p.expectation([&](double r) { return p.v1(r); });
    const BalancedSuperpotential w1(p, [&](double x) { return e1 - p.v1(x); });
    out.e2_num = p.expectation([&](double r) {
        const double v = w1(r);
        return p.v2(r) - v * v;
    });
    const double e2 = out.e2_num;

    std::function<double(double)> w2;
    std::optional<BalancedSuperpotential> squared;
    std::optional<numerics::PanelIntegral> mass, first, second;
    if (options.second_order == SecondOrderReading::squared) {
        squared.emplace(p, [&](double x) {
            const double v = w1(x);
            return e2 + v * v - p.v2(x);
        });
        w2 = [&](double r) { return (*squared)(r); };
    } else {
        // int_0^r chi^2(x) [E2 + W1(r) W1(x) - V2(x)] dx, assembled from three running integrals.
        mass.emplace([&](double x) { return p.density(x); }, p.cutoff, p.config.panels);
        first.emplace([&](double x) { return p.density(x) * w1(x); }, p.cutoff, p.config.panels);
        second.emplace([&](double x) { return p.density(x) * p.v2(x); }, p.cutoff, p.config.panels);
        w2 = [&](double r) {
            const double rho = p.density(r);
            if (rho == 0.0) return 0.0;
            const double integral = e2 * mass->from_start(r) + w1(r) * first->from_start(r) - second->from_start(r);
            return p.inv_scale * integral / rho;
        };
    }
    out.e3_num = p.expectation([&](double r) { return p.v3(r) - weight * w1(r) * w2(r); });
    return out;
}

SampledFunction w2_quadrature(const PotentialParams& params, const QuantumState& state, const UnitSystem& units,
                              const QuadratureConfig& config, std::span<const double> r_grid,
                              SecondOrderReading reading) {
    const Problem p(params, state, units, config);
    const auto w = superpotential_terms(params, state, units);
    const double e2 = p.expectation([&](double r) {
        const double w1 = w.w1(r);
        return p.v2(r) - w1 * w1;
    });
    if (reading == SecondOrderReading::squared) {
        const BalancedSuperpotential w2(p, [&](double x) {
            const double w1 = w.w1(x);
            return e2 + w1 * w1 - p.v2(x);
        });
        return sample(p, r_grid, w2);
    }
    const numerics::PanelIntegral mass([&](double x) { return p.density(x); }, p.cutoff, p.config.panels);
    const numerics::PanelIntegral first([&](double x) { return p.density(x) * w.w1(x); }, p.cutoff,
                                        p.config.panels);
    const numerics::PanelIntegral second([&](double x) { return p.density(x) * p.v2(x); }, p.cutoff,
                                         p.config.panels);
    return sample(p, r_grid, [&](double r) {
        const double rho = p.density(r);
        if (rho == 0.0) return 0.0;
        return p.inv_scale * (e2 * mass.from_start(r) + w.w1(r) * first.from_start(r) - second.from_start(r)) / rho;
    });
}

CorrectionIntegrals correction_integrals(const PotentialParams& params, const QuantumState& state,
                                         const UnitSystem& units, const QuadratureConfig& config,
                                         std::span<const double> r_grid, const HigherOrderOptions& options) {
    CorrectionIntegrals out;
    out.e1_num = e1_quadrature(params, state, units, config);
    const auto higher = e2_e3_quadrature(params, state, units, config, options);
    out.e2_num = higher.e2_num;
    out.e3_num = higher.e3_num;
    out.w1_samples = w1_quadrature(params, state, units, config, r_grid);
    out.w2_samples = w2_quadrature(params, state, units, config, r_grid, options.second_order);
    return out;
}

} // namespace hellmann
