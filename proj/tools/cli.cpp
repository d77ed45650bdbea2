#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "hellmann/errors.hpp"
#include "hellmann/oracle.hpp"
#include "hellmann/perturbation.hpp"
#include "hellmann/quadrature.hpp"
#include "hellmann/table.hpp"
#include "hellmann/verify.hpp"

namespace hellmann::cli {

namespace {

using json = nlohmann::ordered_json;

struct UnitFlags {
    double hbar = 1.0;
    double mass = 0.5;
    UnitSystem get() const { return UnitSystem(hbar, mass); }
};

struct StateFlags {
    std::string label;
    std::optional<int> n;
    std::optional<int> l;

    QuantumState get() const {
        if (!label.empty()) {
            if (n || l) throw CLI::ValidationError("--state", "use either --state or --n/--l, not both");
            try {
                return QuantumState::parse(label);
            } catch (const DomainError& e) {
                throw CLI::ValidationError("--state", e.what());
            }
        }
        if (!n || !l) throw CLI::ValidationError("--state", "a state is required: --state 2p or --n 0 --l 1");
        return QuantumState(*n, *l);
    }
};

void add_units(CLI::App* cmd, UnitFlags& u) {
    cmd->add_option("--hbar", u.hbar, "Reduced Planck constant")->capture_default_str();
    cmd->add_option("--mass", u.mass, "Particle mass")->capture_default_str();
}

void add_state(CLI::App* cmd, StateFlags& s) {
    cmd->add_option("--state", s.label, "Spectroscopic label, e.g. 4f (principal 4, l = 3, radial n = 0)");
    cmd->add_option("--n", s.n, "Radial quantum number (nodes), not the principal number");
    cmd->add_option("--l", s.l, "Angular momentum");
}

std::string num(double x) { return fmt::format("{}", x == 0.0 ? 0.0 : x); }

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::string metadata(std::string_view prefix, const UnitSystem& units, std::string_view hash) {
    return fmt::format("{0}hellmann {1}\n{0}units hbar={2} mass={3}\n{0}config_hash {4}\n", prefix, version(),
                       num(units.hbar()), num(units.mass()), hash);
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw CLI::FileError(fmt::format("cannot write {}", path));
    f << text;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw CLI::FileError(fmt::format("cannot read {}", path));
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

// energy ---------------------------------------------------------------

struct EnergyFlags {
    double a = 2.0;
    double b = 0.0;
    double delta = 0.0;
    StateFlags state;
    UnitFlags units;
    std::string format = "text";
};

int cmd_energy(const EnergyFlags& f, std::ostream& out) {
    const PotentialParams p{f.a, f.b, f.delta};
    p.validate();
    const auto s = f.state.get();
    const auto units = f.units.get();
    const auto e = total_energy(p, s, units);
    const auto r = convergence_report(e);
    const std::string input = fmt::format("a={}\nb={}\ndelta={}\nn={}\nl={}\nhbar={}\nmass={}\n", num(p.a), num(p.b),
                                          num(p.delta), s.n(), s.l(), num(units.hbar()), num(units.mass()));
    const auto hash = hash_text(input);
    if (f.format == "json") {
        json j;
        j["metadata"] = {{"program", "hellmann"},
                         {"version", version()},
                         {"units", {{"hbar", units.hbar()}, {"mass", units.mass()}}},
                         {"config_hash", hash}};
        j["input"] = {{"a", p.a}, {"b", p.b}, {"delta", p.delta}, {"state", s.label()}, {"n", s.n()}, {"l", s.l()}};
        j["breakdown"] = {{"e0", e.e0}, {"const_shift", e.const_shift}, {"e1", e.e1},
                          {"e2", e.e2}, {"e3", e.e3},                   {"total", e.total}};
        j["binding"] = e.binding();
        j["convergence"] = {{"shift_ratio", finite_or_null(r.shift_ratio)},
                            {"r1", finite_or_null(r.r1)},
                            {"r2", finite_or_null(r.r2)},
                            {"r3", finite_or_null(r.r3)},
                            {"trusted", r.trusted},
                            {"high_confidence", r.high_confidence}};
        out << j.dump(2) << "\n";
    } else if (f.format == "csv") {
        out << metadata("# ", units, hash);
        out << "state,n,l,a,b,delta,e0,const_shift,e1,e2,e3,total,binding,trusted,max_ratio\n";
        out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", s.label(), s.n(), s.l(), num(p.a),
                           num(p.b), num(p.delta), num(e.e0), num(e.const_shift), num(e.e1), num(e.e2), num(e.e3),
                           num(e.total), num(e.binding()), r.trusted, num(r.max_ratio()));
    } else {
        out << fmt::format("state     {} (n = {}, l = {})\n", s.label(), s.n(), s.l());
        out << fmt::format("params    a = {}  b = {}  delta = {}\n", num(p.a), num(p.b), num(p.delta));
        out << fmt::format("e0        {:>20.12e}\n", e.e0);
        out << fmt::format("-b delta  {:>20.12e}\n", e.const_shift);
        out << fmt::format("e1        {:>20.12e}\n", e.e1);
        out << fmt::format("e2        {:>20.12e}\n", e.e2);
        out << fmt::format("e3        {:>20.12e}\n", e.e3);
        out << fmt::format("total     {:>20.12e}\n", e.total);
        out << fmt::format("binding   {:.6g}\n", e.binding());
        out << fmt::format("trusted   {} (max ratio {:.3g})\n", r.trusted ? "yes" : "no", r.max_ratio());
    }
    return kOk;
}

// table ----------------------------------------------------------------

struct TableFlags {
    std::string preset;
    std::string config;
    std::vector<std::string> states;
    std::vector<double> b_values;
    std::vector<double> delta_values;
    std::optional<double> a;
    std::string engine;
    std::string sign;
    std::string layout;
    std::optional<int> grid_points;
    UnitFlags units;
    std::string format = "text";
    std::string output;
    bool strict = false;
    bool serial = false;
};

TableConfig table_config(const TableFlags& f, const CLI::App* cmd) {
    if (!f.preset.empty() && !f.config.empty()) {
        throw CLI::ValidationError("--preset", "use either --preset or --config");
    }
    TableConfig c;
    if (!f.config.empty()) {
        c = parse_table_config(read_file(f.config));
    } else if (!f.preset.empty()) {
        c.spec = preset(f.preset);
    }
    if (!f.states.empty()) c.spec.states = f.states;
    if (!f.b_values.empty()) c.spec.b_values = f.b_values;
    if (!f.delta_values.empty()) c.spec.delta_values = f.delta_values;
    if (f.a) c.spec.a = *f.a;
    if (!f.engine.empty()) c.spec.engine = parse_engine(f.engine);
    if (!f.sign.empty()) c.spec.sign = parse_sign(f.sign);
    if (!f.layout.empty()) c.spec.layout = parse_layout(f.layout);
    if (f.grid_points) c.solver.grid_points = *f.grid_points;
    if (cmd->count("--hbar") || cmd->count("--mass")) c.units = f.units.get();
    c.spec.validate();
    c.solver.validate();
    return c;
}

int cmd_table(const TableFlags& f, const CLI::App* cmd, std::ostream& out, std::ostream& err) {
    const auto config = table_config(f, cmd);
    const auto result = f.serial ? fill_table_serial(config) : fill_table(config);
    std::string text;
    if (f.format == "json") {
        text = table_json(result);
    } else if (f.format == "csv") {
        text = table_csv(result);
    } else {
        text = table_text(result);
    }
    write_output(text, f.output, out);
    int failed = 0;
    for (const auto& c : result.cells) {
        if (c.error.empty()) continue;
        ++failed;
        err << fmt::format("cell {} b={} delta={}: {}\n", c.state, num(c.b), num(c.delta), c.error);
    }
    return failed > 0 && f.strict ? kDomain : kOk;
}

// verify ---------------------------------------------------------------

struct VerifyFlags {
    std::string mode = "all";
    std::string from_file;
    std::vector<std::string> states;
    std::vector<double> b_values;
    std::vector<double> delta_values;
    double a = 2.0;
    std::optional<double> tolerance;
    std::string third_order = "riccati";
    bool strict = false;
    std::string format = "text";
    UnitFlags units;
};

std::vector<QuantumState> parse_states(const std::vector<std::string>& labels) {
    std::vector<QuantumState> out;
    try {
        for (const auto& s : labels) out.push_back(QuantumState::parse(s));
    } catch (const DomainError& e) {
        throw CLI::ValidationError("--states", e.what());
    }
    return out;
}

int cmd_verify(const VerifyFlags& f, std::ostream& out) {
    VerifyReport report;
    if (!f.from_file.empty()) {
        report = verify_table_file(read_file(f.from_file));
    } else {
        const auto units = f.units.get();
        if (f.mode == "quadrature" || f.mode == "all") {
            QuadratureSuite q;
            q.a = f.a;
            if (!f.states.empty()) q.states = parse_states(f.states);
            if (!f.b_values.empty()) q.b_values = f.b_values;
            if (!f.delta_values.empty()) q.delta_values = f.delta_values;
            if (f.tolerance) q.rel_tol = *f.tolerance;
            q.options.third_order =
                f.third_order == "as-printed" ? ThirdOrderReading::as_printed : ThirdOrderReading::riccati;
            const auto r = verify_quadrature(q, units);
            report.rows.insert(report.rows.end(), r.rows.begin(), r.rows.end());
        }
        if (f.mode == "oracle" || f.mode == "all") {
            OracleSuite o;
            o.a = f.a;
            if (!f.states.empty()) o.states = parse_states(f.states);
            if (!f.b_values.empty()) o.b_values = f.b_values;
            if (!f.delta_values.empty()) o.delta_values = f.delta_values;
            o.tolerance = f.tolerance;
            o.strict = f.strict;
            const auto r = verify_oracle(o, units);
            report.rows.insert(report.rows.end(), r.rows.begin(), r.rows.end());
        }
    }
    if (f.format == "json") {
        out << report_json(report);
    } else if (f.format == "csv") {
        out << report_csv(report);
    } else {
        out << report_text(report);
    }
    return report.ok() ? kOk : kVerification;
}

// oracle ---------------------------------------------------------------

struct OracleFlags {
    double a = 2.0;
    double b = 0.0;
    double delta = 0.0;
    StateFlags state;
    UnitFlags units;
    std::optional<int> scan;
    bool ordering = false;
    bool crossings = false;
    bool matrix = false;
    int n_max = 4;
    int l_max = 3;
    int grid_points = 20000;
    std::optional<double> r_max;
    std::string format = "text";
};

int cmd_oracle(const OracleFlags& f, std::ostream& out) {
    const PotentialParams p{f.a, f.b, f.delta};
    p.validate();
    const auto units = f.units.get();
    SolverConfig config;
    config.grid_points = f.grid_points;
    config.r_max = f.r_max;
    config.validate();
    const bool as_json = f.format == "json";
    json j;
    j["metadata"] = {{"program", "hellmann"},
                     {"version", version()},
                     {"units", {{"hbar", units.hbar()}, {"mass", units.mass()}}}};
    j["input"] = {{"a", p.a}, {"b", p.b}, {"delta", p.delta}};

    if (f.ordering) {
        const auto rep = level_ordering_check(p, units, config, f.n_max, f.l_max);
        j["ordering"] = {{"energies", rep.energies}, {"violations", json::array()}};
        for (const auto& v : rep.violations) {
            j["ordering"]["violations"].push_back({{"principal", v.principal},
                                                   {"l_lower", v.l_lower},
                                                   {"l_upper", v.l_upper},
                                                   {"e_lower", v.e_lower},
                                                   {"e_upper", v.e_upper}});
        }
        if (!as_json) {
            for (std::size_t shell = 0; shell < rep.energies.size(); ++shell) {
                out << fmt::format("N = {}:", shell + 1);
                for (double e : rep.energies[shell]) out << fmt::format("  {:.10g}", e);
                out << "\n";
            }
            for (const auto& v : rep.violations) {
                out << fmt::format("violation N = {}: E(l={}) = {:.10g}, E(l={}) = {:.10g}\n", v.principal,
                                   v.l_lower, v.e_lower, v.l_upper, v.e_upper);
            }
            out << fmt::format("ordering {}\n", rep.ok() ? "ok" : "violated");
        } else {
            out << j.dump(2) << "\n";
        }
        return rep.ok() ? kOk : kVerification;
    }
    if (f.crossings) {
        const auto found = find_crossings(p, units, config, f.n_max);
        j["crossings"] = json::array();
        for (const auto& c : found) {
            j["crossings"].push_back({{"higher_shell", c.higher_shell.label()},
                                      {"lower_shell", c.lower_shell.label()},
                                      {"e_higher", c.e_higher},
                                      {"e_lower", c.e_lower}});
            if (!as_json) {
                out << fmt::format("{} ({:.10g}) at or below {} ({:.10g})\n", c.higher_shell.label(), c.e_higher,
                                   c.lower_shell.label(), c.e_lower);
            }
        }
        if (as_json) {
            out << j.dump(2) << "\n";
        } else {
            out << fmt::format("{} crossing(s) up to shell {}\n", found.size(), f.n_max);
        }
        return kOk;
    }
    if (f.scan) {
        if (!f.state.l) throw CLI::ValidationError("--scan", "needs --l");
        const auto scan = scan_spectrum(p, *f.state.l, units, config, *f.scan);
        j["l"] = *f.state.l;
        j["levels"] = json::array();
        for (std::size_t n = 0; n < scan.levels.size(); ++n) {
            const auto& e = scan.levels[n];
            j["levels"].push_back({{"n", n}, {"energy", e.energy}, {"binding", e.binding()}});
            if (!as_json) out << fmt::format("n = {}  E = {:.12g}  -E = {:.6g}\n", n, e.energy, e.binding());
        }
        j["truncated"] = scan.truncated;
        if (as_json) {
            out << j.dump(2) << "\n";
        } else if (scan.truncated) {
            out << fmt::format("only {} bound level(s) found\n", scan.levels.size());
        }
        return kOk;
    }

    const auto s = f.state.get();
    const auto eig = solve_bound_state(p, s, units, config);
    j["state"] = s.label();
    j["energy"] = eig.energy;
    j["binding"] = eig.binding();
    j["nodes"] = eig.nodes;
    j["residual"] = eig.residual;
    std::optional<double> pert;
    if (p.a > p.b) pert = total_energy(p, s, units).total;
    j["perturbative"] = pert ? json(*pert) : json(nullptr);
    std::optional<EigenResult> mat;
    if (f.matrix) mat = solve_bound_state_matrix(p, s, units, config);
    j["matrix_energy"] = mat ? json(mat->energy) : json(nullptr);
    if (as_json) {
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << fmt::format("state         {}\n", s.label());
    out << fmt::format("energy        {:.12g}\n", eig.energy);
    out << fmt::format("binding       {:.6g}\n", eig.binding());
    out << fmt::format("nodes         {}\n", eig.nodes);
    out << fmt::format("residual      {:.3e}\n", eig.residual);
    if (pert) {
        out << fmt::format("perturbative  {:.12g}  (relative gap {:.3e})\n", *pert,
                           std::abs(*pert - eig.energy) / std::abs(eig.energy));
    }
    if (mat) {
        out << fmt::format("matrix        {:.12g}  (relative gap {:.3e})\n", mat->energy,
                           std::abs(mat->energy - eig.energy) / std::abs(eig.energy));
    }
    return kOk;
}

// wavefunction ---------------------------------------------------------

struct WaveFlags {
    double a = 2.0;
    double b = 0.0;
    double delta = 0.0;
    StateFlags state;
    UnitFlags units;
    double r_min = 0.0;
    double r_max = 40.0;
    int samples = 401;
    bool normalize = false;
    std::string output;
};

int cmd_wavefunction(const WaveFlags& f, std::ostream& out, std::ostream& err) {
    const PotentialParams p{f.a, f.b, f.delta};
    p.validate();
    const auto s = f.state.get();
    if (s.n() != 0) {
        throw UnsupportedStateError(
            fmt::format("wavefunction covers nodeless states only (n = 0), got {}", s.label()));
    }
    if (!(f.r_max > f.r_min) || f.r_min < 0.0) throw CLI::ValidationError("--r-max", "need 0 <= r_min < r_max");
    if (f.samples < 2) throw CLI::ValidationError("--samples", "need at least 2 samples");
    const auto units = f.units.get();
    ModeratedGroundState psi(p, s.l(), units);
    if (f.normalize) psi.normalize();
    const auto& m = psi.moderator();
    const std::string input =
        fmt::format("a={}\nb={}\ndelta={}\nl={}\nhbar={}\nmass={}\nr_min={}\nr_max={}\nsamples={}\nnormalize={}\n",
                    num(p.a), num(p.b), num(p.delta), s.l(), num(units.hbar()), num(units.mass()), num(f.r_min),
                    num(f.r_max), f.samples, f.normalize);
    std::string text = metadata("# ", units, hash_text(input));
    text += fmt::format("# state {} a={} b={} delta={}\n", s.label(), num(p.a), num(p.b), num(p.delta));
    text += fmt::format("# p2={} p3={} c={} scale={}\n", num(m.p2), num(m.p3), num(m.c), num(psi.scale()));
    std::optional<std::string> warning;
    if (const auto rv = psi.validity_radius()) {
        warning = fmt::format("P(r) outgrows the Coulomb decay beyond r = {:.6g}; psi is not trustworthy there", *rv);
    }
    if (warning) text += "# warning: " + *warning + "\n";
    text += "r,chi,psi,u\n";
    for (int i = 0; i < f.samples; ++i) {
        const double r = f.r_min + (f.r_max - f.r_min) * i / (f.samples - 1);
        const double chi = r > 0.0 ? psi.coulomb(r) : 0.0;
        const double u = psi.factor(r);
        const double v = r > 0.0 ? psi(r) : 0.0;
        text += fmt::format("{},{},{},{}\n", num(r), num(chi), num(v), num(u));
    }
    write_output(text, f.output, out);
    if (warning) err << "warning: " << *warning << "\n";
    return kOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bound states of the Hellmann potential V(r) = -a/r + b exp(-delta r)/r", "hellmann"};
    app.set_version_flag("--version", version());
    app.require_subcommand(1);
    const std::vector<std::string> formats{"text", "csv", "json"};

    EnergyFlags ef;
    auto* energy = app.add_subcommand("energy", "Perturbative energy breakdown for one state");
    energy->add_option("--a", ef.a, "Coulomb strength")->capture_default_str();
    energy->add_option("--b", ef.b, "Yukawa strength (negative is attractive)")->capture_default_str();
    energy->add_option("--delta", ef.delta, "Screening parameter")->capture_default_str();
    add_state(energy, ef.state);
    add_units(energy, ef.units);
    energy->add_option("--format", ef.format)->check(CLI::IsMember(formats))->capture_default_str();

    TableFlags tf;
    auto* table = app.add_subcommand("table", "Grid of energies over states, b and delta");
    table->add_option("--preset", tf.preset)->check(CLI::IsMember(preset_names()));
    table->add_option("--config", tf.config, "Flat key = value file")->check(CLI::ExistingFile);
    table->add_option("--states", tf.states)->delimiter(',');
    table->add_option("--b", tf.b_values)->delimiter(',');
    table->add_option("--delta", tf.delta_values)->delimiter(',');
    table->add_option("--a", tf.a);
    table->add_option("--engine", tf.engine)->check(CLI::IsMember({"perturbation", "oracle", "both"}));
    table->add_option("--sign", tf.sign)->check(CLI::IsMember({"binding", "energy"}));
    table->add_option("--layout", tf.layout)->check(CLI::IsMember({"states-by-delta", "b-by-states", "states-by-b"}));
    table->add_option("--grid-points", tf.grid_points, "Oracle grid size");
    add_units(table, tf.units);
    table->add_option("--format", tf.format)->check(CLI::IsMember(formats))->capture_default_str();
    table->add_option("-o,--output", tf.output, "Output file (default stdout)");
    table->add_flag("--strict", tf.strict, "Exit nonzero when any cell fails");
    table->add_flag("--serial", tf.serial, "Fill cells on one thread");

    VerifyFlags vf;
    auto* verify = app.add_subcommand("verify", "Cross-check closed forms against quadrature and the direct solver");
    verify->add_option("mode", vf.mode)->check(CLI::IsMember({"quadrature", "oracle", "all"}))->capture_default_str();
    verify->add_option("--from-file", vf.from_file, "Recompute a table json and compare")->check(CLI::ExistingFile);
    verify->add_option("--states", vf.states)->delimiter(',');
    verify->add_option("--b", vf.b_values)->delimiter(',');
    verify->add_option("--delta", vf.delta_values)->delimiter(',');
    verify->add_option("--a", vf.a)->capture_default_str();
    verify->add_option("--tol", vf.tolerance, "Relative tolerance override");
    verify->add_option("--third-order", vf.third_order)
        ->check(CLI::IsMember({"riccati", "as-printed"}))
        ->capture_default_str();
    verify->add_flag("--strict", vf.strict, "Untrusted cells count as failures");
    verify->add_option("--format", vf.format)->check(CLI::IsMember(formats))->capture_default_str();
    add_units(verify, vf.units);

    OracleFlags of;
    auto* oracle = app.add_subcommand("oracle", "Direct radial eigenvalues of the exact potential");
    oracle->add_option("--a", of.a)->capture_default_str();
    oracle->add_option("--b", of.b)->capture_default_str();
    oracle->add_option("--delta", of.delta)->capture_default_str();
    add_state(oracle, of.state);
    add_units(oracle, of.units);
    oracle->add_option("--scan", of.scan, "Lowest COUNT levels at fixed --l");
    oracle->add_flag("--ordering", of.ordering, "Check l-ordering within each shell");
    oracle->add_flag("--crossings", of.crossings, "List levels of higher shells at or below lower shells");
    oracle->add_flag("--matrix", of.matrix, "Also solve with the finite-difference pencil");
    oracle->add_option("--n-max", of.n_max, "Highest shell for --ordering and --crossings")->capture_default_str();
    oracle->add_option("--l-max", of.l_max, "Highest l for --ordering")->capture_default_str();
    oracle->add_option("--grid-points", of.grid_points)->capture_default_str();
    oracle->add_option("--r-max", of.r_max);
    oracle->add_option("--format", of.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    WaveFlags wf;
    auto* wave = app.add_subcommand("wavefunction", "Sample the moderated ground-state wavefunction");
    wave->add_option("--a", wf.a)->capture_default_str();
    wave->add_option("--b", wf.b)->capture_default_str();
    wave->add_option("--delta", wf.delta)->capture_default_str();
    add_state(wave, wf.state);
    add_units(wave, wf.units);
    wave->add_option("--r-min", wf.r_min)->capture_default_str();
    wave->add_option("--r-max", wf.r_max)->capture_default_str();
    wave->add_option("--samples", wf.samples)->capture_default_str();
    wave->add_flag("--normalize", wf.normalize, "Scale psi to unit norm");
    wave->add_option("-o,--output", wf.output, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
        if (energy->parsed()) return cmd_energy(ef, out);
        if (table->parsed()) return cmd_table(tf, table, out, err);
        if (verify->parsed()) return cmd_verify(vf, out);
        if (oracle->parsed()) return cmd_oracle(of, out);
        if (wave->parsed()) return cmd_wavefunction(wf, out, err);
        return kUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    } catch (const SingularDenominatorError& e) {
        err << "error: " << e.what() << "\n";
        return kSingular;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const UnsupportedStateError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const NumericError& e) {
        err << "error: " << e.what() << "\n";
        return kNumeric;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kNumeric;
    }
}

} // namespace hellmann::cli
