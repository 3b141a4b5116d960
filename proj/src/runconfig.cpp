#include "pgyro/runconfig.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace pgyro {

namespace {

using KVTree = std::map<std::string, std::map<std::string, std::string>>;

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

KVTree parse_tree(const std::string& text) {
    KVTree tree;
    std::istringstream is(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) +
                                  ": malformed section header");
            section = trim(t.substr(1, t.size() - 2));
            tree[section];
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos || section.empty())
            throw ConfigError("line " + std::to_string(lineno) +
                              ": expected key = value inside a section");
        tree[section][trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
    }
    return tree;
}

double to_double(const std::string& section, const std::string& key,
                 const std::string& v) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing chars");
        return d;
    } catch (const std::exception&) {
        throw ConfigError(section + "." + key + ": not a number: " + v);
    }
}

long to_long(const std::string& section, const std::string& key,
             const std::string& v) {
    try {
        std::size_t pos = 0;
        const long d = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing chars");
        return d;
    } catch (const std::exception&) {
        throw ConfigError(section + "." + key + ": not an integer: " + v);
    }
}

void check_choice(const std::string& section, const std::string& key,
                  const std::string& v,
                  const std::vector<std::string>& choices) {
    for (const auto& c : choices)
        if (v == c) return;
    std::string msg = section + "." + key + ": '" + v + "' is not one of {";
    for (std::size_t i = 0; i < choices.size(); ++i)
        msg += (i ? ", " : "") + choices[i];
    throw ConfigError(msg + "}");
}

void assign(RunConfig& c, const std::string& section, const std::string& key,
            const std::string& v) {
    auto bad_key = [&]() -> void {
        throw ConfigError(section + "." + key + ": unknown key");
    };
    if (section == "grid") {
        if (key == "nx") c.nx = static_cast<int>(to_long(section, key, v));
        else if (key == "ny") c.ny = static_cast<int>(to_long(section, key, v));
        else if (key == "lx") c.lx = to_double(section, key, v);
        else if (key == "ly") c.ly = to_double(section, key, v);
        else if (key == "boundary") {
            check_choice(section, key, v, {"periodic", "dirichlet"});
            c.boundary = v == "periodic" ? Boundary::Periodic
                                         : Boundary::DirichletZero;
        } else bad_key();
    } else if (section == "units") {
        if (key == "kind") {
            check_choice(section, key, v, {"dimensionless", "mev"});
            c.unit_kind = v == "mev" ? UnitSystem::Kind::PhysicalMeV
                                     : UnitSystem::Kind::Dimensionless;
        } else if (key == "length_scale") c.length_scale = to_double(section, key, v);
        else bad_key();
    } else if (section == "params") {
        if (key == "g") c.g = to_double(section, key, v);
        else if (key == "gamma") c.gamma = to_double(section, key, v);
        else if (key == "eta") c.eta = to_double(section, key, v);
        else bad_key();
    } else if (section == "potential") {
        if (key == "kind") {
            check_choice(section, key, v,
                         {"flat", "disorder", "mexican_hat", "kagome",
                          "periodic_1d"});
            c.potential_kind = v;
        } else if (key == "v0") c.pot_v0 = to_double(section, key, v);
        else if (key == "r_min") c.pot_r_min = to_double(section, key, v);
        else if (key == "k0") c.pot_k0 = to_double(section, key, v);
        else if (key == "p_param") c.pot_p_param = to_double(section, key, v);
        else if (key == "rms") c.disorder_rms = to_double(section, key, v);
        else if (key == "corr_len") c.disorder_corr_len = to_double(section, key, v);
        else if (key == "seed") c.disorder_seed =
            static_cast<std::uint64_t>(to_long(section, key, v));
        else bad_key();
    } else if (section == "pump") {
        if (key == "kind") {
            check_choice(section, key, v,
                         {"none", "gaussian", "uniform", "periodic", "ring"});
            c.pump_kind = v;
        } else if (key == "p0") c.pump_p0 = to_double(section, key, v);
        else if (key == "r0") c.pump_r0 = to_double(section, key, v);
        else if (key == "k0") c.pump_k0 = to_double(section, key, v);
        else if (key == "v0") c.pump_v0 = to_double(section, key, v);
        else if (key == "r_min") c.pump_r_min = to_double(section, key, v);
        else bad_key();
    } else if (section == "seed") {
        if (key == "kind") {
            check_choice(section, key, v, {"none", "vortex", "ring", "momentum"});
            c.seed_kind = v;
        } else if (key == "l") c.seed_l = static_cast<int>(to_long(section, key, v));
        else if (key == "lg_waist") c.lg_waist = to_double(section, key, v);
        else if (key == "lg_k") c.lg_k = to_double(section, key, v);
        else if (key == "v0") c.seed_v0 = to_double(section, key, v);
        else if (key == "r_min") c.seed_r_min = to_double(section, key, v);
        else if (key == "xi_zero") c.xi_zero = to_double(section, key, v);
        else if (key == "xi_k") c.xi_k = to_double(section, key, v);
        else if (key == "k0") c.seed_k0 = to_double(section, key, v);
        else bad_key();
    } else if (section == "solver") {
        if (key == "scheme") {
            check_choice(section, key, v, {"rk4", "gfdtd"});
            c.scheme = v;
        } else if (key == "dt") c.dt = to_double(section, key, v);
        else if (key == "safety") c.safety = to_double(section, key, v);
        else if (key == "t_end") c.t_end = to_double(section, key, v);
        else if (key == "snapshot_every") c.snapshot_every =
            static_cast<int>(to_long(section, key, v));
        else bad_key();
    } else if (section == "observers") {
        if (key == "set") {
            check_choice(section, key, v, {"default", "lobe", "momentum"});
            c.observer_set = v;
        } else bad_key();
    } else if (section == "output") {
        if (key == "dir") c.out_dir = v;
        else bad_key();
    } else {
        throw ConfigError(section + ": unknown section");
    }
}

void validate(const RunConfig& c) {
    if (c.nx < 8 || c.ny < 8) throw ConfigError("grid.nx/ny: must be >= 8");
    if (!(c.lx > 0.0) || !(c.ly > 0.0))
        throw ConfigError("grid.lx/ly: must be > 0");
    if (c.gamma < 0.0) throw ConfigError("params.gamma: must be >= 0");
    if (c.eta < 0.0) throw ConfigError("params.eta: must be >= 0");
    if (c.dt < 0.0) throw ConfigError("solver.dt: must be >= 0");
    if (!(c.safety > 0.0) || c.safety > 1.0)
        throw ConfigError("solver.safety: must be in (0, 1]");
    if (c.t_end < 0.0) throw ConfigError("solver.t_end: must be >= 0");
    if (c.snapshot_every < 0)
        throw ConfigError("solver.snapshot_every: must be >= 0");
    if (c.seed_kind == "momentum" && c.boundary != Boundary::Periodic)
        throw ConfigError("seed.kind: momentum seed requires periodic boundary");
}

} // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig c;
    const KVTree tree = parse_tree(text);
    for (const auto& [section, entries] : tree)
        for (const auto& [key, value] : entries)
            assign(c, section, key, value);
    validate(c);
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file: " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return parse_config(os.str());
}

std::string serialize_config(const RunConfig& c) {
    std::ostringstream os;
    os << "[grid]\n"
       << "nx = " << c.nx << "\nny = " << c.ny << "\nlx = " << fmt(c.lx)
       << "\nly = " << fmt(c.ly) << "\nboundary = "
       << (c.boundary == Boundary::Periodic ? "periodic" : "dirichlet")
       << "\n\n";
    os << "[units]\nkind = "
       << (c.unit_kind == UnitSystem::Kind::PhysicalMeV ? "mev"
                                                        : "dimensionless")
       << "\nlength_scale = " << fmt(c.length_scale) << "\n\n";
    os << "[params]\ng = " << fmt(c.g) << "\ngamma = " << fmt(c.gamma)
       << "\neta = " << fmt(c.eta) << "\n\n";
    os << "[potential]\nkind = " << c.potential_kind << "\nv0 = "
       << fmt(c.pot_v0) << "\nr_min = " << fmt(c.pot_r_min) << "\nk0 = "
       << fmt(c.pot_k0) << "\np_param = " << fmt(c.pot_p_param)
       << "\nrms = " << fmt(c.disorder_rms) << "\ncorr_len = "
       << fmt(c.disorder_corr_len) << "\nseed = " << c.disorder_seed
       << "\n\n";
    os << "[pump]\nkind = " << c.pump_kind << "\np0 = " << fmt(c.pump_p0)
       << "\nr0 = " << fmt(c.pump_r0) << "\nk0 = " << fmt(c.pump_k0)
       << "\nv0 = " << fmt(c.pump_v0) << "\nr_min = " << fmt(c.pump_r_min)
       << "\n\n";
    os << "[seed]\nkind = " << c.seed_kind << "\nl = " << c.seed_l
       << "\nlg_waist = " << fmt(c.lg_waist) << "\nlg_k = " << fmt(c.lg_k)
       << "\nv0 = " << fmt(c.seed_v0) << "\nr_min = " << fmt(c.seed_r_min)
       << "\nxi_zero = " << fmt(c.xi_zero) << "\nxi_k = " << fmt(c.xi_k)
       << "\nk0 = " << fmt(c.seed_k0) << "\n\n";
    os << "[solver]\nscheme = " << c.scheme << "\ndt = " << fmt(c.dt)
       << "\nsafety = " << fmt(c.safety) << "\nt_end = " << fmt(c.t_end)
       << "\nsnapshot_every = " << c.snapshot_every << "\n\n";
    os << "[observers]\nset = " << c.observer_set << "\n\n";
    os << "[output]\ndir = " << c.out_dir << "\n";
    return os.str();
}

void apply_override(RunConfig& c, const std::string& dotted_key,
                    const std::string& value) {
    const auto dot = dotted_key.find('.');
    if (dot == std::string::npos)
        throw ConfigError("override key must be section.key: " + dotted_key);
    assign(c, dotted_key.substr(0, dot), dotted_key.substr(dot + 1), value);
    validate(c);
}

std::vector<std::string> preset_names() {
    return {"fig-flat",         "fig-flat-meV",
            "fig-disorder",     "fig-disorder-meV",
            "fig-ring-l1",      "fig-ring-l5",
            "fig-metastable-uniform", "fig-metastable-periodic",
            "fig-kagome"};
}

RunConfig preset(const std::string& name) {
    RunConfig c; // defaults already describe the flat-potential run
    const double k0 = 2.0 * std::numbers::pi / 10.0;

    auto mev_params = [&]() {
        // hbar g = 0.05, hbar gamma = 1.0, hbar eta = 0.1, energies in meV
        c.unit_kind = UnitSystem::Kind::PhysicalMeV;
        c.g = 0.05;
        c.gamma = 1.0;
        c.eta = 0.1;
    };
    auto ring_geometry = [&](int l) {
        c.lx = c.ly = 24.0;
        c.potential_kind = "mexican_hat";
        c.pot_v0 = 1.0;
        c.pot_r_min = 5.0;
        c.pump_kind = "ring";
        c.pump_p0 = 2.0;
        c.pump_v0 = 1.0;
        c.pump_r_min = 5.0;
        c.seed_kind = "ring";
        c.seed_l = l;
        c.seed_v0 = 1.0;
        c.seed_r_min = 5.0;
    };
    auto metastable = [&]() {
        c.nx = c.ny = 128;
        c.lx = c.ly = 40.0;
        c.boundary = Boundary::Periodic;
        c.potential_kind = "periodic_1d";
        c.pot_v0 = 1.0;
        c.pot_k0 = k0;
        c.seed_kind = "momentum";
        c.xi_zero = 1.0 / std::sqrt(3.0);
        c.xi_k = 1.0 / std::sqrt(3.0);
        c.seed_k0 = k0;
        c.observer_set = "momentum";
        c.t_end = 100.0;
    };

    if (name == "fig-flat") {
        // defaults
    } else if (name == "fig-flat-meV") {
        mev_params();
    } else if (name == "fig-disorder") {
        c.potential_kind = "disorder";
    } else if (name == "fig-disorder-meV") {
        mev_params();
        c.potential_kind = "disorder";
    } else if (name == "fig-ring-l1") {
        ring_geometry(1);
    } else if (name == "fig-ring-l5") {
        ring_geometry(5);
    } else if (name == "fig-metastable-uniform") {
        metastable();
        c.pump_kind = "uniform";
        c.pump_p0 = 2.0;
    } else if (name == "fig-metastable-periodic") {
        metastable();
        c.pump_kind = "periodic";
        c.pump_p0 = 2.0;
        c.pump_k0 = k0;
    } else if (name == "fig-kagome") {
        mev_params();
        c.potential_kind = "kagome";
        c.pot_v0 = 0.05;
        c.pot_k0 = 10.0;
    } else {
        throw ConfigError("unknown preset: " + name);
    }
    return c;
}

} // namespace pgyro
