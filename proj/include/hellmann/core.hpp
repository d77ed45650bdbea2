#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hellmann {

/// Physical constants entering every formula. The default pair satisfies
/// hbar^2 / (2 mass) = 1, the unit convention of the published tables.
class UnitSystem {
public:
    UnitSystem() = default;
    UnitSystem(double hbar, double mass);

    double hbar() const { return hbar_; }
    double mass() const { return mass_; }

    /// hbar^2 / (2 m)
    double kinetic_scale() const { return hbar_ * hbar_ / (2.0 * mass_); }
    /// hbar / sqrt(2 m), the prefactor of W = -(hbar/sqrt(2m)) chi'/chi
    double superpotential_scale() const;

private:
    double hbar_ = 1.0;
    double mass_ = 0.5;
};

/// Throws if the default units do not give hbar^2/2m = 1, hbar^2/m = 2,
/// hbar^4/m^2 = 4, hbar^6/m^3 = 8.
void check_default_units();

/// V(r) = -a/r + b exp(-delta r)/r.
struct PotentialParams {
    double a = 2.0;
    double b = 0.0;
    double delta = 0.0;

    /// Requires a >= 0 and delta >= 0; a = 0 is the static screened Coulomb case.
    void validate() const;
};

class QuantumState {
public:
    QuantumState(int n, int l);

    /// Spectroscopic label such as "4f": principal number N = n + l + 1.
    static QuantumState parse(std::string_view label);

    int n() const { return n_; }
    int l() const { return l_; }
    int principal() const { return n_ + l_ + 1; }
    /// l(l+1)
    double L() const { return double(l_) * double(l_ + 1); }
    double N() const { return principal(); }
    double N_next() const { return principal() + 1; }

    std::string label() const;

    friend bool operator==(const QuantumState&, const QuantumState&) = default;

private:
    int n_;
    int l_;
};

double hellmann_potential(const PotentialParams& params, double r);

/// Split of the Hellmann potential around the exactly solvable Coulomb part:
/// V(r) = V0(r) + Delta V(r), V0 = -(a-b)/r.
struct ExpansionCoefficients {
    explicit ExpansionCoefficients(int order = 4);

    /// V_i for i = 1..order: +1, -1/2, 1/6, -1/24, ...
    std::vector<double> v;
    int order() const { return int(v.size()); }
};

struct PotentialSplit {
    double v0;            ///< -(a-b)/r
    double delta_v;       ///< truncated series -b sum_i V_i delta^i r^(i-1)
    double barrier;       ///< hbar^2 l(l+1) / (2 m r^2)
};

double effective_potential(const PotentialParams& params, const QuantumState& state,
                           double r, const UnitSystem& units = {});

PotentialSplit split_potential(const PotentialParams& params, const QuantumState& state,
                               double r, const UnitSystem& units = {},
                               const ExpansionCoefficients& coeffs = ExpansionCoefficients{});

/// Associated Laguerre polynomial L_n^k(x) by the three-term recurrence.
double laguerre(int n, int k, double x);

/// Normalized Coulomb radial function for the unperturbed potential -(a-b)/r.
class CoulombWavefunction {
public:
    CoulombWavefunction(const PotentialParams& params, const QuantumState& state,
                        const UnitSystem& units = {});

    const QuantumState& state() const { return state_; }
    double beta() const { return beta_; }
    /// N_{n,l}; may underflow for very large l, log_norm() stays finite.
    double norm() const;
    double log_norm() const { return log_norm_; }

    double operator()(double r) const;

private:
    QuantumState state_;
    double beta_;
    double log_norm_;
};

double coulomb_chi(const PotentialParams& params, const QuantumState& state, double r,
                   const UnitSystem& units = {});

} // namespace hellmann
