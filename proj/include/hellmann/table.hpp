#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hellmann/core.hpp"
#include "hellmann/oracle.hpp"
#include "hellmann/perturbation.hpp"

namespace hellmann {

enum class Engine { perturbation, oracle, both };
enum class SignConvention { binding, energy };

/// Pivot used by the aligned text output. Machine formats are always flat.
enum class Layout {
    states_by_delta, ///< rows: states, columns: delta (single b)
    b_by_states,     ///< rows: b, columns: states (single delta)
    states_by_b,     ///< rows: states, columns: b (single delta)
};

std::string to_string(Engine e);
std::string to_string(SignConvention s);
std::string to_string(Layout l);
Engine parse_engine(std::string_view s);
SignConvention parse_sign(std::string_view s);
Layout parse_layout(std::string_view s);

struct TableSpec {
    std::string name = "custom";
    std::vector<std::string> states;
    std::vector<double> b_values;
    std::vector<double> delta_values;
    double a = 2.0;
    Engine engine = Engine::perturbation;
    SignConvention sign = SignConvention::binding;
    Layout layout = Layout::states_by_delta;

    /// Non-empty states and values, at least one of b/delta with several
    /// entries, parseable labels, and a > max(b) when the perturbation
    /// engine is involved. Throws DomainError.
    void validate() const;
    std::vector<QuantumState> parsed_states() const;
};

std::vector<std::string> preset_names();
/// Throws DomainError for an unknown name.
TableSpec preset(std::string_view name);

/// Everything a table run depends on.
struct TableConfig {
    TableSpec spec;
    UnitSystem units;
    SolverConfig solver;
};

/// Flat ordered `key = value` text; '#' starts a comment. Keys: name, a,
/// states, b, delta, engine, sign, layout, hbar, mass, grid_points,
/// energy_tol, max_iters, preset. `preset` seeds the spec and must come first.
TableConfig parse_table_config(std::string_view text);
std::string format_table_config(const TableConfig& config);
/// 64-bit FNV-1a as 16 hex digits.
std::string hash_text(std::string_view text);
/// hash_text of format_table_config.
std::string config_hash(const TableConfig& config);

struct TableCell {
    std::string state;
    double b = 0.0;
    double delta = 0.0;
    std::optional<EnergyBreakdown> breakdown;
    std::optional<ConvergenceReport> convergence;
    std::optional<double> oracle_energy;
    std::optional<double> relative_gap; ///< |E_pert - E_oracle| / |E_oracle|
    bool trusted = false;
    std::string error;                  ///< empty when the cell computed

    /// Primary value under the spec's sign convention (perturbative when
    /// available, else oracle).
    std::optional<double> value(SignConvention sign) const;
    std::optional<double> oracle_value(SignConvention sign) const;
};

struct TableResult {
    TableConfig config;
    std::vector<TableCell> cells; ///< state-major, then b, then delta

    const TableCell* find(std::string_view state, double b, double delta) const;
    bool has_errors() const;
};

TableCell compute_cell(const TableConfig& config, const QuantumState& state, double b, double delta);

/// Cells in parallel; worker count from table_workers().
TableResult fill_table(const TableConfig& config);
TableResult fill_table_serial(const TableConfig& config);

/// OpenMP thread budget, capped by HELLMANN_THREADS when set to a positive integer.
int table_workers();

std::string version();

std::string table_csv(const TableResult& result);
std::string table_json(const TableResult& result);
std::string table_text(const TableResult& result);
/// Inverse of table_json. Throws DomainError on malformed input.
TableResult parse_table_json(std::string_view text);

} // namespace hellmann
