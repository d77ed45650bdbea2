#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hellmann/oracle.hpp"
#include "hellmann/quadrature.hpp"
#include "hellmann/table.hpp"

namespace hellmann {

struct VerifyRow {
    std::string suite;
    std::string state;
    double b = 0.0;
    double delta = 0.0;
    std::string quantity;
    double reference = 0.0; ///< closed form or stored value
    double value = 0.0;     ///< independent evaluation
    double deviation = 0.0; ///< relative, or absolute when |reference| is tiny
    double tolerance = 0.0;
    bool trusted = true;
    bool pass = true;
    std::string note;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;

    bool ok() const;
    int failures() const;
    double max_deviation() const;
};

/// All (n, l) with n + l <= max_sum, ordered by principal number then l.
std::vector<QuantumState> states_up_to(int max_sum);
std::vector<QuantumState> state_range(std::string_view first, std::string_view last);

struct QuadratureSuite {
    double a = 2.0;
    std::vector<QuantumState> states = states_up_to(5);
    std::vector<double> b_values{-10.0, -2.0, -1.0, 1.0};
    std::vector<double> delta_values{0.001, 0.01, 0.05};
    double rel_tol = 1e-6;
    double abs_tol = 1e-10;
    QuadratureConfig quadrature;
    HigherOrderOptions options;
};

/// E1, E2, E3 from quadrature against the closed forms. A row passes when
/// |num - closed| <= max(abs_tol, rel_tol |closed|).
VerifyReport verify_quadrature(const QuadratureSuite& suite, const UnitSystem& units = {});

struct OracleSuite {
    double a = 2.0;
    std::vector<QuantumState> states = state_range("1s", "3d");
    std::vector<double> b_values{-10.0};
    std::vector<double> delta_values{0.001};
    std::optional<double> tolerance; ///< relative; default from oracle_tolerance(delta)
    bool strict = false;             ///< untrusted cells fail too
    SolverConfig solver;
};

/// Expected agreement between the perturbative total and the direct solver:
/// 1e-5 for delta <= 0.001, 1e-3 for delta <= 0.01, 1e-2 beyond.
double oracle_tolerance(double delta);

/// Direct eigenvalues against perturbative totals. Cells that the
/// convergence report marks untrusted are reported and only fail when strict.
VerifyReport verify_oracle(const OracleSuite& suite, const UnitSystem& units = {});

/// Recomputes every cell of a table json and requires exact agreement.
VerifyReport verify_table_file(std::string_view json_text);

std::string report_text(const VerifyReport& report);
std::string report_csv(const VerifyReport& report);
std::string report_json(const VerifyReport& report);

} // namespace hellmann
