#include "hellmann/table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include "json.hpp"
#include <omp.h>

#include "hellmann/errors.hpp"

#ifndef HELLMANN_VERSION
#define HELLMANN_VERSION "0.0.0"
#endif

namespace hellmann {

using json = nlohmann::ordered_json;

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

template <typename T>
T parse_number(std::string_view key, std::string_view s) {
    T v{};
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end) throw DomainError(fmt::format("{}: '{}' is not a number", key, s));
    return v;
}

std::vector<double> parse_list(std::string_view key, std::string_view s) {
    std::vector<double> out;
    for (auto item : split(s, ',')) out.push_back(parse_number<double>(key, item));
    return out;
}

std::string join(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + fmt::format("{}", v[i]);
    return out;
}

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
    return out;
}

std::vector<std::string> labels(std::string_view first, std::string_view last) {
    // Consecutive spectroscopic labels ordered by principal number, then l.
    const auto a = QuantumState::parse(first);
    const auto b = QuantumState::parse(last);
    std::vector<std::string> out;
    for (int shell = a.principal(); shell <= b.principal(); ++shell) {
        for (int l = 0; l < shell; ++l) {
            const QuantumState s(shell - l - 1, l);
            if (shell == a.principal() && l < a.l()) continue;
            if (shell == b.principal() && l > b.l()) continue;
            out.push_back(s.label());
        }
    }
    return out;
}

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double number_from(const json& j) {
    return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string num(double x) { return fmt::format("{}", x == 0.0 ? 0.0 : x); }

std::string opt_num(const std::optional<double>& x) { return x ? num(*x) : std::string(); }

std::string metadata_lines(const TableResult& result, std::string_view prefix) {
    const auto& c = result.config;
    std::string out;
    out += fmt::format("{}hellmann {}\n", prefix, version());
    out += fmt::format("{}units hbar={} mass={}\n", prefix, num(c.units.hbar()), num(c.units.mass()));
    out += fmt::format("{}table {} engine={} sign={}\n", prefix, c.spec.name, to_string(c.spec.engine),
                       to_string(c.spec.sign));
    out += fmt::format("{}config_hash {}\n", prefix, config_hash(c));
    return out;
}

} // namespace

std::string to_string(Engine e) {
    switch (e) {
    case Engine::perturbation: return "perturbation";
    case Engine::oracle: return "oracle";
    case Engine::both: return "both";
    }
    return "?";
}

std::string to_string(SignConvention s) { return s == SignConvention::binding ? "binding" : "energy"; }

std::string to_string(Layout l) {
    switch (l) {
    case Layout::states_by_delta: return "states-by-delta";
    case Layout::b_by_states: return "b-by-states";
    case Layout::states_by_b: return "states-by-b";
    }
    return "?";
}

Engine parse_engine(std::string_view s) {
    if (s == "perturbation") return Engine::perturbation;
    if (s == "oracle") return Engine::oracle;
    if (s == "both") return Engine::both;
    throw DomainError(fmt::format("unknown engine '{}'", s));
}

SignConvention parse_sign(std::string_view s) {
    if (s == "binding") return SignConvention::binding;
    if (s == "energy") return SignConvention::energy;
    throw DomainError(fmt::format("unknown sign convention '{}'", s));
}

Layout parse_layout(std::string_view s) {
    if (s == "states-by-delta") return Layout::states_by_delta;
    if (s == "b-by-states") return Layout::b_by_states;
    if (s == "states-by-b") return Layout::states_by_b;
    throw DomainError(fmt::format("unknown layout '{}'", s));
}

std::vector<QuantumState> TableSpec::parsed_states() const {
    std::vector<QuantumState> out;
    for (const auto& s : states) out.push_back(QuantumState::parse(s));
    return out;
}

void TableSpec::validate() const {
    if (states.empty()) throw DomainError("table needs at least one state");
    if (b_values.empty() || delta_values.empty()) throw DomainError("table needs at least one b and one delta");
    if (b_values.size() < 2 && delta_values.size() < 2) {
        throw DomainError("table needs several values of b or of delta");
    }
    parsed_states();
    PotentialParams{a, b_values.front(), delta_values.front()}.validate();
    for (double b : b_values) PotentialParams{a, b, 0.0}.validate();
    for (double d : delta_values) PotentialParams{a, 0.0, d}.validate();
    if (engine != Engine::oracle) {
        const double bmax = *std::max_element(b_values.begin(), b_values.end());
        if (!(a > bmax)) {
            throw DomainError(fmt::format("perturbation engine needs a > max(b), got a = {} and b = {}", a, bmax));
        }
    }
}

std::vector<std::string> preset_names() {
    return {"b-10-scan", "delta-0.01-scan", "high-states", "delta-0.1-scan"};
}

TableSpec preset(std::string_view name) {
    TableSpec s;
    s.name = std::string(name);
    if (name == "b-10-scan") {
        s.states = labels("1s", "4f");
        s.b_values = {-10.0};
        s.delta_values = {0.001, 0.005, 0.01, 0.05, 0.1, 0.2};
        s.layout = Layout::states_by_delta;
    } else if (name == "delta-0.01-scan") {
        s.states = labels("1s", "3d");
        s.b_values = {1.0, 0.5, 0.2, 0.0, -0.2, -0.5, -1.0, -2.0, -5.0, -10.0, -20.0};
        s.delta_values = {0.01};
        s.layout = Layout::b_by_states;
    } else if (name == "high-states") {
        s.states = labels("5s", "7i");
        s.b_values = {1.0, -1.0, -2.0, -4.0, -8.0, -10.0};
        s.delta_values = {0.01};
        s.layout = Layout::states_by_b;
    } else if (name == "delta-0.1-scan") {
        s.states = labels("1s", "6h");
        s.b_values = {-5.0, -8.0, -10.0, -20.0, -30.0, -50.0};
        s.delta_values = {0.1};
        s.layout = Layout::states_by_b;
    } else {
        throw DomainError(fmt::format("unknown preset '{}'", name));
    }
    return s;
}

TableConfig parse_table_config(std::string_view text) {
    TableConfig c;
    std::optional<double> hbar, mass;
    std::set<std::string> seen;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != line.npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == line.npos) throw DomainError(fmt::format("config line {}: expected key = value", line_no));
        const std::string key(trim(line.substr(0, eq)));
        const auto value = trim(line.substr(eq + 1));
        if (!seen.insert(key).second) throw DomainError(fmt::format("config line {}: duplicate key '{}'", line_no, key));
        if (key == "preset") {
            if (seen.size() != 1) throw DomainError("config: preset must be the first key");
            c.spec = preset(value);
        } else if (key == "name") {
            c.spec.name = std::string(value);
        } else if (key == "a") {
            c.spec.a = parse_number<double>(key, value);
        } else if (key == "states") {
            c.spec.states.clear();
            for (auto s : split(value, ',')) c.spec.states.emplace_back(s);
        } else if (key == "b") {
            c.spec.b_values = parse_list(key, value);
        } else if (key == "delta") {
            c.spec.delta_values = parse_list(key, value);
        } else if (key == "engine") {
            c.spec.engine = parse_engine(value);
        } else if (key == "sign") {
            c.spec.sign = parse_sign(value);
        } else if (key == "layout") {
            c.spec.layout = parse_layout(value);
        } else if (key == "hbar") {
            hbar = parse_number<double>(key, value);
        } else if (key == "mass") {
            mass = parse_number<double>(key, value);
        } else if (key == "grid_points") {
            c.solver.grid_points = parse_number<int>(key, value);
        } else if (key == "energy_tol") {
            c.solver.energy_tol = parse_number<double>(key, value);
        } else if (key == "max_iters") {
            c.solver.max_iters = parse_number<int>(key, value);
        } else if (key == "r_min") {
            c.solver.r_min = parse_number<double>(key, value);
        } else if (key == "r_max") {
            c.solver.r_max = parse_number<double>(key, value);
        } else {
            throw DomainError(fmt::format("config line {}: unknown key '{}'", line_no, key));
        }
    }
    if (hbar || mass) c.units = UnitSystem(hbar.value_or(1.0), mass.value_or(0.5));
    c.spec.validate();
    c.solver.validate();
    return c;
}

std::string format_table_config(const TableConfig& c) {
    std::string out;
    out += fmt::format("name = {}\n", c.spec.name);
    out += fmt::format("a = {}\n", num(c.spec.a));
    out += fmt::format("states = {}\n", join(c.spec.states));
    out += fmt::format("b = {}\n", join(c.spec.b_values));
    out += fmt::format("delta = {}\n", join(c.spec.delta_values));
    out += fmt::format("engine = {}\n", to_string(c.spec.engine));
    out += fmt::format("sign = {}\n", to_string(c.spec.sign));
    out += fmt::format("layout = {}\n", to_string(c.spec.layout));
    out += fmt::format("hbar = {}\n", num(c.units.hbar()));
    out += fmt::format("mass = {}\n", num(c.units.mass()));
    out += fmt::format("grid_points = {}\n", c.solver.grid_points);
    out += fmt::format("energy_tol = {}\n", num(c.solver.energy_tol));
    out += fmt::format("max_iters = {}\n", c.solver.max_iters);
    if (c.solver.r_min) out += fmt::format("r_min = {}\n", num(*c.solver.r_min));
    if (c.solver.r_max) out += fmt::format("r_max = {}\n", num(*c.solver.r_max));
    return out;
}

std::string config_hash(const TableConfig& config) { return hash_text(format_table_config(config)); }

std::string hash_text(std::string_view text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return fmt::format("{:016x}", h);
}

std::optional<double> TableCell::value(SignConvention sign) const {
    const double s = sign == SignConvention::binding ? -1.0 : 1.0;
    if (breakdown) return s * breakdown->total;
    if (oracle_energy) return s * *oracle_energy;
    return std::nullopt;
}

std::optional<double> TableCell::oracle_value(SignConvention sign) const {
    if (!oracle_energy) return std::nullopt;
    return (sign == SignConvention::binding ? -1.0 : 1.0) * *oracle_energy;
}

const TableCell* TableResult::find(std::string_view state, double b, double delta) const {
    for (const auto& c : cells) {
        if (c.state == state && c.b == b && c.delta == delta) return &c;
    }
    return nullptr;
}

bool TableResult::has_errors() const {
    return std::any_of(cells.begin(), cells.end(), [](const TableCell& c) { return !c.error.empty(); });
}

TableCell compute_cell(const TableConfig& config, const QuantumState& state, double b, double delta) {
    TableCell cell;
    cell.state = state.label();
    cell.b = b;
    cell.delta = delta;
    const PotentialParams params{config.spec.a, b, delta};
    const Engine engine = config.spec.engine;
    std::vector<std::string> errors;
    if (engine != Engine::oracle) {
        try {
            cell.breakdown = total_energy(params, state, config.units);
            cell.convergence = convergence_report(*cell.breakdown);
            cell.trusted = cell.convergence->trusted;
        } catch (const std::exception& e) {
            errors.emplace_back(e.what());
        }
    }
    if (engine != Engine::perturbation) {
        try {
            const auto eig = solve_bound_state(params, state, config.units, config.solver);
            cell.oracle_energy = eig.energy;
            if (engine == Engine::oracle) cell.trusted = eig.converged;
        } catch (const std::exception& e) {
            errors.emplace_back(e.what());
        }
    }
    if (cell.breakdown && cell.oracle_energy) {
        cell.relative_gap = std::abs(cell.breakdown->total - *cell.oracle_energy) / std::abs(*cell.oracle_energy);
    }
    for (std::size_t i = 0; i < errors.size(); ++i) cell.error += (i ? "; " : "") + errors[i];
    return cell;
}

namespace {

struct Job {
    QuantumState state;
    double b;
    double delta;
};

std::vector<Job> jobs_for(const TableConfig& config) {
    config.spec.validate();
    config.solver.validate();
    std::vector<Job> jobs;
    for (const auto& s : config.spec.parsed_states()) {
        for (double b : config.spec.b_values) {
            for (double d : config.spec.delta_values) jobs.push_back({s, b, d});
        }
    }
    return jobs;
}

} // namespace

int table_workers() {
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("HELLMANN_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0) n = std::min(n, cap);
    }
    return std::max(n, 1);
}

TableResult fill_table(const TableConfig& config) {
    const auto jobs = jobs_for(config);
    TableResult result{config, std::vector<TableCell>(jobs.size())};
    const long count = long(jobs.size());
#pragma omp parallel for schedule(dynamic) num_threads(table_workers())
    for (long i = 0; i < count; ++i) {
        const auto& j = jobs[std::size_t(i)];
        result.cells[std::size_t(i)] = compute_cell(config, j.state, j.b, j.delta);
    }
    return result;
}

TableResult fill_table_serial(const TableConfig& config) {
    const auto jobs = jobs_for(config);
    TableResult result{config, {}};
    result.cells.reserve(jobs.size());
    for (const auto& j : jobs) result.cells.push_back(compute_cell(config, j.state, j.b, j.delta));
    return result;
}

std::string version() { return HELLMANN_VERSION; }

std::string table_csv(const TableResult& result) {
    const auto sign = result.config.spec.sign;
    std::string out = metadata_lines(result, "# ");
    out += "state,n,l,b,delta,value,e0,const_shift,e1,e2,e3,total,trusted,shift_ratio,r1,r2,r3,"
           "oracle_energy,oracle_value,relative_gap,error\n";
    for (const auto& c : result.cells) {
        const auto s = QuantumState::parse(c.state);
        std::string row = fmt::format("{},{},{},{},{},{}", c.state, s.n(), s.l(), num(c.b), num(c.delta),
                                      opt_num(c.value(sign)));
        if (c.breakdown) {
            const auto& e = *c.breakdown;
            row += fmt::format(",{},{},{},{},{},{}", num(e.e0), num(e.const_shift), num(e.e1), num(e.e2),
                               num(e.e3), num(e.total));
        } else {
            row += ",,,,,,";
        }
        row += c.trusted ? ",true" : ",false";
        if (c.convergence) {
            const auto& r = *c.convergence;
            row += fmt::format(",{},{},{},{}", num(r.shift_ratio), num(r.r1), num(r.r2), num(r.r3));
        } else {
            row += ",,,,";
        }
        row += fmt::format(",{},{},{},{}\n", opt_num(c.oracle_energy), opt_num(c.oracle_value(sign)),
                           opt_num(c.relative_gap), csv_field(c.error));
        out += row;
    }
    return out;
}

std::string table_json(const TableResult& result) {
    const auto& cfg = result.config;
    json meta;
    meta["program"] = "hellmann";
    meta["version"] = version();
    meta["units"] = {{"hbar", cfg.units.hbar()}, {"mass", cfg.units.mass()}};
    meta["engine"] = to_string(cfg.spec.engine);
    meta["config_hash"] = config_hash(cfg);
    meta["config"] = format_table_config(cfg);

    json spec;
    spec["name"] = cfg.spec.name;
    spec["a"] = cfg.spec.a;
    spec["states"] = cfg.spec.states;
    spec["b_values"] = cfg.spec.b_values;
    spec["delta_values"] = cfg.spec.delta_values;
    spec["engine"] = to_string(cfg.spec.engine);
    spec["sign"] = to_string(cfg.spec.sign);
    spec["layout"] = to_string(cfg.spec.layout);

    json solver;
    solver["grid_points"] = cfg.solver.grid_points;
    solver["energy_tol"] = cfg.solver.energy_tol;
    solver["max_iters"] = cfg.solver.max_iters;
    solver["r_min"] = cfg.solver.r_min ? json(*cfg.solver.r_min) : json(nullptr);
    solver["r_max"] = cfg.solver.r_max ? json(*cfg.solver.r_max) : json(nullptr);

    json cells = json::array();
    for (const auto& c : result.cells) {
        json j;
        j["state"] = c.state;
        j["b"] = c.b;
        j["delta"] = c.delta;
        const auto v = c.value(cfg.spec.sign);
        j["value"] = v ? json(*v) : json(nullptr);
        j["trusted"] = c.trusted;
        if (c.breakdown) {
            const auto& e = *c.breakdown;
            j["breakdown"] = {{"e0", e.e0},         {"const_shift", e.const_shift}, {"e1", e.e1},
                              {"e2", e.e2},         {"e3", e.e3},                   {"total", e.total}};
        } else {
            j["breakdown"] = nullptr;
        }
        if (c.convergence) {
            const auto& r = *c.convergence;
            j["convergence"] = {{"shift_ratio", number_or_null(r.shift_ratio)},
                                {"r1", number_or_null(r.r1)},
                                {"r2", number_or_null(r.r2)},
                                {"r3", number_or_null(r.r3)},
                                {"trusted", r.trusted},
                                {"high_confidence", r.high_confidence}};
        } else {
            j["convergence"] = nullptr;
        }
        j["oracle_energy"] = c.oracle_energy ? json(*c.oracle_energy) : json(nullptr);
        j["relative_gap"] = c.relative_gap ? json(*c.relative_gap) : json(nullptr);
        j["error"] = c.error;
        cells.push_back(std::move(j));
    }

    json root;
    root["metadata"] = std::move(meta);
    root["spec"] = std::move(spec);
    root["solver"] = std::move(solver);
    root["cells"] = std::move(cells);
    return root.dump(2) + "\n";
}

TableResult parse_table_json(std::string_view text) {
    try {
        const auto root = json::parse(text);
        TableResult r;
        const auto& units = root.at("metadata").at("units");
        r.config.units = UnitSystem(units.at("hbar").get<double>(), units.at("mass").get<double>());
        const auto& spec = root.at("spec");
        r.config.spec.name = spec.at("name").get<std::string>();
        r.config.spec.a = spec.at("a").get<double>();
        r.config.spec.states = spec.at("states").get<std::vector<std::string>>();
        r.config.spec.b_values = spec.at("b_values").get<std::vector<double>>();
        r.config.spec.delta_values = spec.at("delta_values").get<std::vector<double>>();
        r.config.spec.engine = parse_engine(spec.at("engine").get<std::string>());
        r.config.spec.sign = parse_sign(spec.at("sign").get<std::string>());
        r.config.spec.layout = parse_layout(spec.at("layout").get<std::string>());
        const auto& solver = root.at("solver");
        r.config.solver.grid_points = solver.at("grid_points").get<int>();
        r.config.solver.energy_tol = solver.at("energy_tol").get<double>();
        r.config.solver.max_iters = solver.at("max_iters").get<int>();
        if (!solver.at("r_min").is_null()) r.config.solver.r_min = solver.at("r_min").get<double>();
        if (!solver.at("r_max").is_null()) r.config.solver.r_max = solver.at("r_max").get<double>();
        for (const auto& j : root.at("cells")) {
            TableCell c;
            c.state = j.at("state").get<std::string>();
            c.b = j.at("b").get<double>();
            c.delta = j.at("delta").get<double>();
            c.trusted = j.at("trusted").get<bool>();
            if (const auto& e = j.at("breakdown"); !e.is_null()) {
                c.breakdown = EnergyBreakdown{e.at("e0").get<double>(), e.at("const_shift").get<double>(),
                                              e.at("e1").get<double>(),  e.at("e2").get<double>(),
                                              e.at("e3").get<double>(),  e.at("total").get<double>()};
            }
            if (const auto& v = j.at("convergence"); !v.is_null()) {
                ConvergenceReport rep;
                rep.shift_ratio = number_from(v.at("shift_ratio"));
                rep.r1 = number_from(v.at("r1"));
                rep.r2 = number_from(v.at("r2"));
                rep.r3 = number_from(v.at("r3"));
                rep.trusted = v.at("trusted").get<bool>();
                rep.high_confidence = v.at("high_confidence").get<bool>();
                c.convergence = rep;
            }
            if (!j.at("oracle_energy").is_null()) c.oracle_energy = j.at("oracle_energy").get<double>();
            if (!j.at("relative_gap").is_null()) c.relative_gap = j.at("relative_gap").get<double>();
            c.error = j.at("error").get<std::string>();
            r.cells.push_back(std::move(c));
        }
        if (root.at("metadata").at("config_hash").get<std::string>() != config_hash(r.config)) {
            throw DomainError("table json: config hash does not match its spec");
        }
        return r;
    } catch (const json::exception& e) {
        throw DomainError(fmt::format("table json: {}", e.what()));
    }
}

std::string table_text(const TableResult& result) {
    const auto& spec = result.config.spec;
    enum Dim { kState, kB, kDelta };
    Dim row = kState, col = kDelta, block = kB;
    switch (spec.layout) {
    case Layout::states_by_delta: row = kState, col = kDelta, block = kB; break;
    case Layout::b_by_states: row = kB, col = kState, block = kDelta; break;
    case Layout::states_by_b: row = kState, col = kB, block = kDelta; break;
    }
    auto size = [&](Dim d) {
        return d == kState ? spec.states.size() : d == kB ? spec.b_values.size() : spec.delta_values.size();
    };
    auto label = [&](Dim d, std::size_t i) {
        if (d == kState) return spec.states[i];
        return num(d == kB ? spec.b_values[i] : spec.delta_values[i]);
    };
    auto dim_name = [](Dim d) { return d == kState ? "state" : d == kB ? "b" : "delta"; };

    std::vector<std::pair<std::string, bool>> passes{{"", false}};
    if (spec.engine == Engine::both) passes = {{"perturbation", false}, {"oracle", true}};

    std::string out = metadata_lines(result, "# ");
    out += fmt::format("# values: {}; '*' marks untrusted cells\n",
                       spec.sign == SignConvention::binding ? "-E (binding)" : "E");
    for (const auto& [pass_name, oracle_pass] : passes) {
        for (std::size_t k = 0; k < size(block); ++k) {
            out += fmt::format("\n{} = {}{}\n", dim_name(block), label(block, k),
                               pass_name.empty() ? "" : "  [" + pass_name + "]");
            std::vector<std::vector<std::string>> grid;
            std::vector<std::string> header{std::string(dim_name(row)) + "\\" + dim_name(col)};
            for (std::size_t j = 0; j < size(col); ++j) header.push_back(label(col, j));
            grid.push_back(header);
            for (std::size_t i = 0; i < size(row); ++i) {
                std::vector<std::string> line{label(row, i)};
                for (std::size_t j = 0; j < size(col); ++j) {
                    std::size_t idx[3] = {0, 0, 0};
                    idx[row] = i;
                    idx[col] = j;
                    idx[block] = k;
                    const auto* c = result.find(spec.states[idx[kState]], spec.b_values[idx[kB]],
                                                spec.delta_values[idx[kDelta]]);
                    const auto v = c ? (oracle_pass ? c->oracle_value(spec.sign) : c->value(spec.sign))
                                     : std::nullopt;
                    if (!v) {
                        line.emplace_back("error");
                    } else {
                        line.push_back(fmt::format("{:#.6g}{}", *v, c->trusted ? "" : "*"));
                    }
                }
                grid.push_back(std::move(line));
            }
            std::vector<std::size_t> width(grid.front().size(), 0);
            for (const auto& line : grid) {
                for (std::size_t j = 0; j < line.size(); ++j) width[j] = std::max(width[j], line[j].size());
            }
            for (const auto& line : grid) {
                std::string text;
                for (std::size_t j = 0; j < line.size(); ++j) {
                    text += j == 0 ? fmt::format("{:<{}}", line[j], width[j])
                                   : fmt::format("  {:>{}}", line[j], width[j]);
                }
                out += text + "\n";
            }
        }
    }
    return out;
}

} // namespace hellmann
