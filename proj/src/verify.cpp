#include "hellmann/verify.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <omp.h>

#include "json.hpp"

#include "hellmann/errors.hpp"
#include "hellmann/perturbation.hpp"

namespace hellmann {

namespace {

struct Cell {
    QuantumState state;
    double b;
    double delta;
};

std::vector<Cell> grid(const std::vector<QuantumState>& states, const std::vector<double>& bs,
                       const std::vector<double>& ds) {
    std::vector<Cell> out;
    for (const auto& s : states) {
        for (double b : bs) {
            for (double d : ds) out.push_back({s, b, d});
        }
    }
    return out;
}

VerifyRow compare(std::string suite, const Cell& c, std::string quantity, double reference, double value,
                  double rel_tol, double abs_tol) {
    VerifyRow r;
    r.suite = std::move(suite);
    r.state = c.state.label();
    r.b = c.b;
    r.delta = c.delta;
    r.quantity = std::move(quantity);
    r.reference = reference;
    r.value = value;
    const double diff = std::abs(value - reference);
    r.deviation = reference != 0.0 ? diff / std::abs(reference) : diff;
    r.tolerance = rel_tol;
    r.pass = diff <= std::max(abs_tol, rel_tol * std::abs(reference));
    return r;
}

VerifyRow failed(std::string suite, const Cell& c, std::string quantity, const std::exception& e) {
    VerifyRow r;
    r.suite = std::move(suite);
    r.state = c.state.label();
    r.b = c.b;
    r.delta = c.delta;
    r.quantity = std::move(quantity);
    r.deviation = std::nan("");
    r.pass = false;
    r.note = e.what();
    return r;
}

std::vector<VerifyRow> flatten(std::vector<std::vector<VerifyRow>>&& parts) {
    std::vector<VerifyRow> out;
    for (auto& p : parts) {
        for (auto& r : p) out.push_back(std::move(r));
    }
    return out;
}

} // namespace

bool VerifyReport::ok() const { return failures() == 0; }

int VerifyReport::failures() const {
    return int(std::count_if(rows.begin(), rows.end(), [](const VerifyRow& r) { return !r.pass; }));
}

double VerifyReport::max_deviation() const {
    double m = 0.0;
    for (const auto& r : rows) {
        if (std::isnan(r.deviation)) return r.deviation;
        m = std::max(m, r.deviation);
    }
    return m;
}

std::vector<QuantumState> states_up_to(int max_sum) {
    std::vector<QuantumState> out;
    for (int shell = 1; shell <= max_sum + 1; ++shell) {
        for (int l = 0; l < shell; ++l) out.emplace_back(shell - l - 1, l);
    }
    return out;
}

std::vector<QuantumState> state_range(std::string_view first, std::string_view last) {
    const auto a = QuantumState::parse(first);
    const auto b = QuantumState::parse(last);
    std::vector<QuantumState> out;
    for (const auto& s : states_up_to(b.principal() - 1)) {
        const bool after = s.principal() > a.principal() || (s.principal() == a.principal() && s.l() >= a.l());
        const bool before = s.principal() < b.principal() || (s.principal() == b.principal() && s.l() <= b.l());
        if (after && before) out.push_back(s);
    }
    return out;
}

VerifyReport verify_quadrature(const QuadratureSuite& suite, const UnitSystem& units) {
    const auto cells = grid(suite.states, suite.b_values, suite.delta_values);
    std::vector<std::vector<VerifyRow>> parts(cells.size());
    const long count = long(cells.size());
#pragma omp parallel for schedule(dynamic) num_threads(table_workers())
    for (long i = 0; i < count; ++i) {
        const auto& c = cells[std::size_t(i)];
        auto& rows = parts[std::size_t(i)];
        const PotentialParams p{suite.a, c.b, c.delta};
        try {
            const auto closed = energy_shifts(p, c.state, units);
            const double e1 = e1_quadrature(p, c.state, units, suite.quadrature);
            const auto e23 = e2_e3_quadrature(p, c.state, units, suite.quadrature, suite.options);
            rows.push_back(compare("quadrature", c, "E1", closed.e1, e1, suite.rel_tol, suite.abs_tol));
            rows.push_back(compare("quadrature", c, "E2", closed.e2, e23.e2_num, suite.rel_tol, suite.abs_tol));
            rows.push_back(compare("quadrature", c, "E3", closed.e3, e23.e3_num, suite.rel_tol, suite.abs_tol));
        } catch (const std::exception& e) {
            rows.push_back(failed("quadrature", c, "E1..E3", e));
        }
    }
    return {flatten(std::move(parts))};
}

double oracle_tolerance(double delta) {
    if (delta <= 0.001) return 1e-5;
    if (delta <= 0.01) return 1e-3;
    return 1e-2;
}

VerifyReport verify_oracle(const OracleSuite& suite, const UnitSystem& units) {
    const auto cells = grid(suite.states, suite.b_values, suite.delta_values);
    std::vector<std::vector<VerifyRow>> parts(cells.size());
    const long count = long(cells.size());
#pragma omp parallel for schedule(dynamic) num_threads(table_workers())
    for (long i = 0; i < count; ++i) {
        const auto& c = cells[std::size_t(i)];
        const PotentialParams p{suite.a, c.b, c.delta};
        try {
            const auto pert = total_energy(p, c.state, units);
            const auto report = convergence_report(pert);
            const auto eig = solve_bound_state(p, c.state, units, suite.solver);
            const double tol = suite.tolerance.value_or(oracle_tolerance(c.delta));
            auto row = compare("oracle", c, "total", pert.total, eig.energy, tol, 0.0);
            row.deviation = std::abs(pert.total - eig.energy) / std::abs(eig.energy);
            row.pass = row.deviation <= tol;
            row.trusted = report.trusted;
            if (!report.trusted) {
                row.note = fmt::format("untrusted (max ratio {:.3g})", report.max_ratio());
                if (!suite.strict) row.pass = true;
            }
            parts[std::size_t(i)].push_back(std::move(row));
        } catch (const std::exception& e) {
            parts[std::size_t(i)].push_back(failed("oracle", c, "total", e));
        }
    }
    return {flatten(std::move(parts))};
}

VerifyReport verify_table_file(std::string_view json_text) {
    const auto stored = parse_table_json(json_text);
    const auto fresh = fill_table(stored.config);
    VerifyReport report;
    if (fresh.cells.size() != stored.cells.size()) {
        throw DomainError(fmt::format("table json holds {} cells, its spec yields {}", stored.cells.size(),
                                      fresh.cells.size()));
    }
    auto exact = [&](const TableCell& s, std::string quantity, std::optional<double> a, std::optional<double> b) {
        VerifyRow r;
        r.suite = "from-file";
        r.state = s.state;
        r.b = s.b;
        r.delta = s.delta;
        r.quantity = std::move(quantity);
        r.reference = a.value_or(std::nan(""));
        r.value = b.value_or(std::nan(""));
        r.trusted = s.trusted;
        r.pass = a.has_value() == b.has_value() && (!a || *a == *b);
        r.deviation = r.pass ? 0.0 : (a && b ? std::abs(*a - *b) : std::nan(""));
        report.rows.push_back(std::move(r));
    };
    for (std::size_t i = 0; i < stored.cells.size(); ++i) {
        const auto& s = stored.cells[i];
        const auto& f = fresh.cells[i];
        if (s.state != f.state || s.b != f.b || s.delta != f.delta) {
            throw DomainError(fmt::format("table json cell {} is out of order", i));
        }
        auto total = [](const TableCell& c) {
            return c.breakdown ? std::optional<double>(c.breakdown->total) : std::nullopt;
        };
        exact(s, "total", total(s), total(f));
        if (s.oracle_energy || f.oracle_energy) exact(s, "oracle_energy", s.oracle_energy, f.oracle_energy);
        if (s.trusted != f.trusted || s.error != f.error) {
            exact(s, "flags", 0.0, 1.0);
            report.rows.back().note = "trust flag or error text differs";
        }
    }
    return report;
}

std::string report_text(const VerifyReport& report) {
    std::string out = fmt::format("{:<10} {:<4} {:>7} {:>7} {:<13} {:>16} {:>16} {:>10} {:>8}  {}\n", "suite", "state",
                                  "b", "delta", "quantity", "reference", "value", "deviation", "tol", "status");
    for (const auto& r : report.rows) {
        out += fmt::format("{:<10} {:<4} {:>7} {:>7} {:<13} {:>16.9e} {:>16.9e} {:>10.3e} {:>8.1e}  {}{}\n", r.suite,
                           r.state, r.b, r.delta, r.quantity, r.reference, r.value, r.deviation, r.tolerance,
                           r.pass ? "ok" : "FAIL", r.note.empty() ? "" : "  " + r.note);
    }
    out += fmt::format("rows {}  failures {}  max deviation {:.3e}\n", report.rows.size(), report.failures(),
                       report.max_deviation());
    return out;
}

std::string report_csv(const VerifyReport& report) {
    std::string out = "suite,state,b,delta,quantity,reference,value,deviation,tolerance,trusted,pass,note\n";
    for (const auto& r : report.rows) {
        std::string note = r.note;
        if (note.find_first_of(",\"\n") != std::string::npos) {
            std::string q = "\"";
            for (char c : note) q += c == '"' ? std::string("\"\"") : std::string(1, c);
            note = q + "\"";
        }
        out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}\n", r.suite, r.state, r.b, r.delta, r.quantity,
                           r.reference, r.value, r.deviation, r.tolerance, r.trusted, r.pass, note);
    }
    return out;
}

std::string report_json(const VerifyReport& report) {
    using json = nlohmann::ordered_json;
    auto n = [](double x) { return std::isfinite(x) ? json(x) : json(nullptr); };
    json rows = json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"suite", r.suite},         {"state", r.state},       {"b", r.b},
                        {"delta", r.delta},         {"quantity", r.quantity}, {"reference", n(r.reference)},
                        {"value", n(r.value)},      {"deviation", n(r.deviation)},
                        {"tolerance", r.tolerance}, {"trusted", r.trusted},   {"pass", r.pass},
                        {"note", r.note}});
    }
    json root;
    root["metadata"] = {{"program", "hellmann"}, {"version", version()}};
    root["ok"] = report.ok();
    root["failures"] = report.failures();
    root["max_deviation"] = n(report.max_deviation());
    root["rows"] = std::move(rows);
    return root.dump(2) + "\n";
}

} // namespace hellmann
