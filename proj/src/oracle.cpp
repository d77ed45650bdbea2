#include "hellmann/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "hellmann/errors.hpp"
#include "hellmann/perturbation.hpp"

namespace hellmann {

namespace {

constexpr double kRescale = 1e100;

/// Numerov coefficients in x = ln r with u(r) = sqrt(r) y(x):
///   y'' = [ (l+1/2)^2 + (2m/hbar^2) r^2 (V(r) - E) ] y = (base_i - E weight_i) y
struct Discretization {
    Discretization(const PotentialParams& params, const QuantumState& state, const UnitSystem& units,
                   const RadialGrid& grid)
        : grid(grid) {
        const double k = 2.0 * units.mass() / (units.hbar() * units.hbar());
        const double lh = state.l() + 0.5;
        base.resize(grid.r.size());
        weight.resize(grid.r.size());
        for (std::size_t i = 0; i < grid.r.size(); ++i) {
            const double r = grid.r[i];
            weight[i] = k * r * r;
            base[i] = lh * lh + k * r * r * hellmann_potential(params, r);
        }
        // Regular solution near the origin, u ~ r^(l+1) (1 - m (a-b) r / (hbar^2 (l+1))).
        const double slope = units.mass() * (params.a - params.b) / (units.hbar() * units.hbar() * (state.l() + 1.0));
        for (int i = 0; i < 2; ++i) {
            const double r = grid.r[std::size_t(i)];
            start[i] = std::pow(r, state.l() + 0.5) * (1.0 - slope * r);
        }
    }

    double f(std::size_t i, double energy) const { return base[i] - energy * weight[i]; }

    /// Sign changes of the outward solution on (r_min, r_max].
    int count_nodes(double energy) const {
        const double h2 = grid.step * grid.step / 12.0;
        const std::size_t m = grid.r.size();
        double y0 = start[0], y1 = start[1];
        double f0 = f(0, energy), f1 = f(1, energy);
        int nodes = 0;
        double last_sign = y1 >= 0.0 ? 1.0 : -1.0;
        for (std::size_t i = 2; i < m; ++i) {
            const double f2 = f(i, energy);
            double y2 = ((2.0 + 10.0 * h2 * f1) * y1 - (1.0 - h2 * f0) * y0) / (1.0 - h2 * f2);
            if (std::abs(y2) > kRescale) {
                y2 /= kRescale;
                y1 /= kRescale;
            }
            if (y2 != 0.0) {
                const double sign = y2 > 0.0 ? 1.0 : -1.0;
                if (sign != last_sign) ++nodes;
                last_sign = sign;
            }
            y0 = y1;
            y1 = y2;
            f0 = f1;
            f1 = f2;
        }
        return nodes;
    }

    const RadialGrid& grid;
    std::vector<double> base;
    std::vector<double> weight;
    double start[2] = {0.0, 0.0};
};

double energy_guess(const PotentialParams& params, const QuantumState& state, const UnitSystem& units) {
    const double hbar2 = units.hbar() * units.hbar();
    const double N = state.N();
    const double shallow = std::min(params.a, params.a - params.b);
    if (shallow > 0.0) return -units.mass() * shallow * shallow / (2.0 * hbar2 * N * N);
    if (params.a > params.b) {
        const double e = total_energy(params, state, units).total;
        if (e < 0.0) return e;
    }
    const double q = std::max({params.a, std::abs(params.b), 1e-12});
    return -1e-2 * units.mass() * q * q / (2.0 * hbar2 * N * N);
}

// Lower bound on the spectrum from V >= -(a + max(0, -b)) / r.
double energy_floor(const PotentialParams& params, const QuantumState& state, const UnitSystem& units) {
    const double q = params.a + std::max(0.0, -params.b);
    const double N = state.N();
    return -units.mass() * q * q / (2.0 * units.hbar() * units.hbar() * N * N) * 1.01 - 1e-12;
}

RadialGrid make_grid(double r_min, double r_max, int points) {
    RadialGrid g;
    g.r_min = r_min;
    g.r_max = r_max;
    g.step = std::log(r_max / r_min) / (points - 1);
    g.r.resize(std::size_t(points));
    for (int i = 0; i < points; ++i) g.r[std::size_t(i)] = r_min * std::exp(i * g.step);
    g.r.back() = r_max;
    return g;
}

template <typename Count>
EigenResult bisect_level(Count&& count, double lo, double hi, int n, const SolverConfig& config,
                         const QuantumState& state) {
    for (int k = 0; count(lo) > n; ++k) {
        if (k > 60) throw NumericError(fmt::format("no lower energy bracket for {}", state.label()), lo);
        lo *= 2.0;
    }
    if (count(hi) <= n) {
        throw NoBoundStateError(fmt::format("state {} is not bound: only {} levels below E = {}", state.label(),
                                            count(hi), hi));
    }
    EigenResult out;
    for (int it = 0; it < config.max_iters; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (count(mid) > n) {
            hi = mid;
        } else {
            lo = mid;
        }
        const double scale = std::max(std::abs(0.5 * (lo + hi)), std::numeric_limits<double>::min());
        out.residual = (hi - lo) / scale;
        if (out.residual <= config.energy_tol) {
            out.converged = true;
            break;
        }
    }
    out.energy = 0.5 * (lo + hi);
    out.nodes = count(lo);
    if (!out.converged) {
        throw NumericError(fmt::format("eigenvalue bisection for {} stalled at relative width {:.3e}",
                                       state.label(), out.residual),
                           out.residual);
    }
    return out;
}

// Number of eigenvalues of the pencil (A, W) below lambda, by LDL^T inertia.
int sturm_count(const Discretization& d, double lambda) {
    const double off = 1.0 / (d.grid.step * d.grid.step);
    const std::size_t m = d.grid.r.size();
    int negatives = 0;
    double pivot = 1.0;
    for (std::size_t i = 1; i + 1 < m; ++i) {
        double diag = 2.0 * off + d.f(i, lambda);
        if (i > 1) diag -= off * off / pivot;
        if (diag == 0.0) diag = 1e-300;
        if (diag < 0.0) ++negatives;
        pivot = diag;
    }
    return negatives;
}

} // namespace

void SolverConfig::validate() const {
    if (grid_points < 1000) throw DomainError("solver needs at least 1000 grid points");
    if (!(energy_tol > 0.0)) throw DomainError("energy tolerance must be positive");
    if (max_iters < 1) throw DomainError("max_iters must be >= 1");
    if (r_min && !(*r_min > 0.0)) throw DomainError("r_min must be positive");
    if (r_min && r_max && !(*r_min < *r_max)) throw DomainError("r_min must be below r_max");
}

RadialGrid solver_grid(const PotentialParams& params, const QuantumState& state, const UnitSystem& units,
                       const SolverConfig& config) {
    params.validate();
    config.validate();
    const double hbar2 = units.hbar() * units.hbar();
    const double charge = params.a - params.b > 0.0 ? params.a - params.b : std::max({params.a, -params.b, 1e-12});
    const double length = state.N() * hbar2 / (units.mass() * charge);
    const double r_min = config.r_min.value_or(1e-6 * length);
    const double e = config.energy_guess.value_or(energy_guess(params, state, units));
    const double kappa = std::sqrt(2.0 * units.mass() * std::abs(e)) / units.hbar();
    const double r_max = config.r_max.value_or(80.0 / kappa);
    if (!(r_max > r_min)) throw DomainError("solver box is empty: r_max <= r_min");
    return make_grid(r_min, r_max, config.grid_points);
}

EigenResult solve_bound_state(const PotentialParams& params, const QuantumState& state, const UnitSystem& units,
                              const SolverConfig& config) {
    const auto grid = solver_grid(params, state, units, config);
    const Discretization d(params, state, units, grid);
    return bisect_level([&](double e) { return d.count_nodes(e); }, energy_floor(params, state, units), 0.0,
                        state.n(), config, state);
}

EigenResult solve_bound_state_matrix(const PotentialParams& params, const QuantumState& state,
                                     const UnitSystem& units, const SolverConfig& config) {
    // The finite-difference pencil pins y(r_min) = 0, a hard core of radius r_min;
    // pushing r_min four decades further in keeps that shift below 1e-10.
    const auto base = solver_grid(params, state, units, config);
    const int points = config.grid_points * 3 / 2;
    const auto coarse = make_grid(base.r_min * 1e-4, base.r_max, points);
    const auto fine = make_grid(base.r_min * 1e-4, base.r_max, 2 * points - 1);
    const double floor = energy_floor(params, state, units);

    const Discretization dc(params, state, units, coarse);
    const Discretization df(params, state, units, fine);
    const auto ec = bisect_level([&](double e) { return sturm_count(dc, e); }, floor, 0.0, state.n(), config, state);
    const auto ef = bisect_level([&](double e) { return sturm_count(df, e); }, floor, 0.0, state.n(), config, state);

    EigenResult out;
    out.energy = (4.0 * ef.energy - ec.energy) / 3.0;
    out.nodes = state.n();
    out.residual = std::max(ec.residual, ef.residual);
    out.converged = ec.converged && ef.converged;
    return out;
}

SampledWavefunction bound_state_wavefunction(const PotentialParams& params, const QuantumState& state,
                                             const UnitSystem& units, const SolverConfig& config,
                                             const EigenResult& eigen) {
    const auto grid = solver_grid(params, state, units, config);
    const Discretization d(params, state, units, grid);
    const std::size_t m = grid.r.size();
    const double e = eigen.energy;
    const double h2 = grid.step * grid.step / 12.0;

    // Outer classical turning point: last index where the kinetic term is positive.
    std::size_t turn = 1;
    for (std::size_t i = 1; i + 1 < m; ++i) {
        if (d.f(i, e) < 0.0) turn = i;
    }
    turn = std::clamp<std::size_t>(turn, 2, m - 3);

    std::vector<double> y(m, 0.0);
    y[0] = d.start[0];
    y[1] = d.start[1];
    for (std::size_t i = 2; i <= turn; ++i) {
        y[i] = ((2.0 + 10.0 * h2 * d.f(i - 1, e)) * y[i - 1] - (1.0 - h2 * d.f(i - 2, e)) * y[i - 2]) /
               (1.0 - h2 * d.f(i, e));
    }
    std::vector<double> tail(m, 0.0);
    tail[m - 1] = 0.0;
    tail[m - 2] = 1e-200;
    for (std::size_t i = m - 2; i-- > turn;) {
        tail[i] = ((2.0 + 10.0 * h2 * d.f(i + 1, e)) * tail[i + 1] - (1.0 - h2 * d.f(i + 2, e)) * tail[i + 2]) /
                  (1.0 - h2 * d.f(i, e));
        if (std::abs(tail[i]) > kRescale) {
            for (std::size_t j = i; j < m; ++j) tail[j] /= kRescale;
        }
    }
    const double match = y[turn] / tail[turn];
    for (std::size_t i = turn + 1; i < m; ++i) y[i] = tail[i] * match;

    SampledWavefunction out;
    out.energy = e;
    out.r = grid.r;
    out.u.resize(m);
    double norm = 0.0, vexp = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double r = grid.r[i];
        const double w = r * r * y[i] * y[i] * grid.step;
        norm += w;
        vexp += w * hellmann_potential(params, r);
    }
    const double inv = 1.0 / std::sqrt(norm);
    double peak = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        out.u[i] = std::sqrt(grid.r[i]) * y[i] * inv;
        peak = std::max(peak, std::abs(out.u[i]));
    }
    double last = 0.0;
    for (double v : out.u) {
        if (std::abs(v) < 1e-10 * peak) continue;
        if (last != 0.0 && (v > 0.0) != (last > 0.0)) ++out.sign_changes;
        last = v;
    }
    out.potential = vexp / norm;
    out.kinetic = e - out.potential;
    return out;
}

SpectrumScan scan_spectrum(const PotentialParams& params, int l, const UnitSystem& units,
                           const SolverConfig& config, int count) {
    if (count < 1) throw DomainError("spectrum scan needs count >= 1");
    SpectrumScan scan;
    for (int n = 0; n < count; ++n) {
        try {
            scan.levels.push_back(solve_bound_state(params, QuantumState(n, l), units, config));
        } catch (const NoBoundStateError&) {
            scan.truncated = true;
            break;
        }
    }
    return scan;
}

LevelOrderingReport level_ordering_check(const PotentialParams& params, const UnitSystem& units,
                                         const SolverConfig& config, int n_max, int l_max) {
    LevelOrderingReport report;
    for (int shell = 1; shell <= n_max; ++shell) {
        std::vector<double> row;
        for (int l = 0; l < shell && l <= l_max; ++l) {
            row.push_back(solve_bound_state(params, QuantumState(shell - l - 1, l), units, config).energy);
        }
        for (std::size_t l = 0; l + 1 < row.size(); ++l) {
            const double diff = row[l + 1] - row[l];
            const double scale = std::abs(row[l]);
            bool ok = std::abs(diff) <= 1e-7 * scale;
            if (params.b != 0.0 && params.delta != 0.0) ok = params.b < 0.0 ? diff > 0.0 : diff < 0.0;
            if (!ok) report.violations.push_back({shell, int(l), int(l) + 1, row[l], row[l + 1]});
        }
        report.energies.push_back(std::move(row));
    }
    return report;
}

std::vector<LevelCrossing> find_crossings(const PotentialParams& params, const UnitSystem& units,
                                          const SolverConfig& config, int n_max) {
    struct Level {
        QuantumState state;
        double energy;
    };
    std::vector<Level> levels;
    for (int shell = 1; shell <= n_max; ++shell) {
        for (int l = 0; l < shell; ++l) {
            const QuantumState s(shell - l - 1, l);
            levels.push_back({s, solve_bound_state(params, s, units, config).energy});
        }
    }
    std::vector<LevelCrossing> out;
    for (const auto& hi : levels) {
        for (const auto& lo : levels) {
            if (hi.state.principal() > lo.state.principal() && hi.energy <= lo.energy) {
                out.push_back({hi.state, lo.state, hi.energy, lo.energy});
            }
        }
    }
    return out;
}

} // namespace hellmann
