#include "pgyro/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <thread>

#include "pgyro/snapshot.hpp"

namespace fs = std::filesystem;

namespace pgyro {

Landscape build_landscape(const RunConfig& c) {
    Landscape ls;
    ls.potential_kind = c.potential_kind;
    ls.pump_kind = c.pump_kind;

    if (c.potential_kind == "flat" || c.potential_kind == "disorder") {
        // Disorder realizations are grid-dependent; build_state swaps in the
        // sampled field. The analytic part of the landscape stays flat.
        ls.potential = potential_flat();
    } else if (c.potential_kind == "mexican_hat") {
        ls.potential = potential_mexican_hat(c.pot_v0, c.pot_r_min);
    } else if (c.potential_kind == "kagome") {
        ls.potential = potential_kagome(c.pot_v0, c.pot_k0, c.pot_p_param);
    } else if (c.potential_kind == "periodic_1d") {
        ls.potential = potential_periodic_1d(c.pot_v0, c.pot_k0);
        if (c.boundary == Boundary::Periodic && !commensurate(c.lx, c.pot_k0))
            std::cerr << "pgyro: periodic_1d potential not commensurate with "
                         "lx on a periodic domain\n";
    } else {
        throw ConfigError("potential.kind: unknown kind " + c.potential_kind);
    }

    if (c.pump_kind == "none") {
        ls.pump = [](double, double) { return 0.0; };
    } else if (c.pump_kind == "gaussian") {
        ls.pump = pump_gaussian(c.pump_p0, c.pump_r0);
    } else if (c.pump_kind == "uniform") {
        ls.pump = pump_uniform(c.pump_p0);
    } else if (c.pump_kind == "periodic") {
        ls.pump = pump_periodic(c.pump_p0, c.pump_k0, c.eta, c.gamma);
    } else if (c.pump_kind == "ring") {
        ls.pump = pump_ring(c.pump_p0, c.pump_v0, c.pump_r_min);
    } else {
        throw ConfigError("pump.kind: unknown kind " + c.pump_kind);
    }
    return ls;
}

ComplexField build_seed(const RunConfig& c, const GridSpec& grid,
                        const Landscape& landscape) {
    SimParams params{c.g, c.gamma, c.eta,
                     UnitSystem{c.unit_kind, c.length_scale}};
    if (c.seed_kind == "none") return ComplexField(grid);
    if (c.seed_kind == "vortex") {
        const LGParams lg = LGParams::from_waist(c.lg_waist, c.lg_k);
        return seed_vortex_superposition(c.seed_l, grid, landscape, params, lg);
    }
    if (c.seed_kind == "ring")
        return seed_ring_superposition(c.seed_l, c.seed_v0, c.seed_r_min, grid);
    if (c.seed_kind == "momentum") {
        std::map<double, cdouble> xi;
        xi[0.0] = c.xi_zero;
        xi[c.seed_k0] += c.xi_k;
        xi[-c.seed_k0] += c.xi_k;
        return seed_momentum_mixture(xi, grid);
    }
    throw ConfigError("seed.kind: unknown kind " + c.seed_kind);
}

SimState build_state(const RunConfig& c) {
    const GridSpec grid = make_grid(c.nx, c.ny, c.lx, c.ly, c.boundary);
    const Landscape ls = build_landscape(c);
    ComplexField seed = build_seed(c, grid, ls);
    SimParams params{c.g, c.gamma, c.eta,
                     UnitSystem{c.unit_kind, c.length_scale}};
    if (c.potential_kind == "disorder") {
        DisorderSpec spec{c.disorder_rms, c.disorder_corr_len, c.disorder_seed};
        return make_state(std::move(seed), params, ls,
                          potential_disorder(spec, grid));
    }
    return make_state(std::move(seed), params, ls);
}

std::vector<Observer> build_observers(const RunConfig& c) {
    if (c.observer_set == "default") return default_observers();
    if (c.observer_set == "lobe") return lobe_observers();
    if (c.observer_set == "momentum") {
        auto obs = default_observers();
        const double k0 = c.seed_k0;
        auto pop = [k0](const SimState& s, int which) {
            const std::vector<std::pair<double, double>> targets = {
                {0.0, 0.0}, {k0, 0.0}, {-k0, 0.0}};
            return momentum_populations(s.field, targets)[which];
        };
        obs.push_back({"pop_zero",
                       [pop](const SimState& s) { return pop(s, 0); }});
        obs.push_back({"pop_k0_plus",
                       [pop](const SimState& s) { return pop(s, 1); }});
        obs.push_back({"pop_k0_minus",
                       [pop](const SimState& s) { return pop(s, 2); }});
        return obs;
    }
    throw ConfigError("observers.set: unknown set " + c.observer_set);
}

namespace {

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

void write_pgm(const std::vector<unsigned char>& pixels, int nx, int ny,
               const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_pgm: cannot open " + path);
    os << "P5\n" << nx << " " << ny << "\n255\n";
    os.write(reinterpret_cast<const char*>(pixels.data()),
             static_cast<std::streamsize>(pixels.size()));
}

} // namespace

void write_density_pgm(const ComplexField& f, const std::string& path) {
    double peak = 0.0;
    for (const auto& v : f.values) peak = std::max(peak, std::norm(v));
    std::vector<unsigned char> px(f.values.size());
    for (std::size_t m = 0; m < px.size(); ++m)
        px[m] = peak > 0.0
                    ? static_cast<unsigned char>(
                          std::lround(std::norm(f.values[m]) / peak * 255.0))
                    : 0;
    write_pgm(px, f.grid.nx, f.grid.ny, path);
}

void write_phase_pgm(const ComplexField& f, const std::string& path) {
    std::vector<unsigned char> px(f.values.size());
    for (std::size_t m = 0; m < px.size(); ++m) {
        const double ph = f.values[m] == cdouble{0.0, 0.0}
                              ? 0.0
                              : std::arg(f.values[m]);
        px[m] = static_cast<unsigned char>(std::lround(
            (ph + std::numbers::pi) / (2.0 * std::numbers::pi) * 255.0));
    }
    write_pgm(px, f.grid.nx, f.grid.ny, path);
}

void write_summary(const RunSummary& summary, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_summary: cannot open " + path);
    for (const auto& [k, v] : summary) os << k << " = " << v << "\n";
}

namespace {

RunSummary field_summary(const ComplexField& f) {
    RunSummary s;
    s.emplace_back("t", fmt_double(f.t));
    s.emplace_back("norm", fmt_double(field_norm(f)));
    double peak = 0.0;
    for (const auto& v : f.values) peak = std::max(peak, std::norm(v));
    s.emplace_back("peak_density", fmt_double(peak));
    if (peak > 0.0) {
        const double r = peak_density_radius(f);
        const auto prof = angular_profile(f, r, 360);
        const auto st = lobe_stats(prof);
        s.emplace_back("lobe_radius", fmt_double(r));
        s.emplace_back("lobe_count", std::to_string(st.count));
        s.emplace_back("lobe_contrast", fmt_double(st.contrast));
        if (st.count >= 2)
            s.emplace_back("interlobe_phase",
                           fmt_double(interlobe_phase(f, prof)));
    }
    return s;
}

} // namespace

RunSummary run(const RunConfig& c) {
    fs::create_directories(c.out_dir);
    SimState state = build_state(c);
    const auto observers = build_observers(c);

    SolverConfig scfg;
    scfg.dt = c.dt;
    scfg.scheme = c.scheme == "gfdtd" ? Scheme::Gfdtd : Scheme::Rk4Fd4;
    scfg.safety = c.safety;
    scfg.t_end = c.t_end;
    scfg.snapshot_every = c.snapshot_every;

    ComplexField last_good = state.field;
    auto hook = [&](const ComplexField& f, long step_count) {
        std::ostringstream name;
        name << "snapshot_" << std::setfill('0') << std::setw(8) << step_count
             << ".pgyr";
        save_snapshot(f, (fs::path(c.out_dir) / name.str()).string());
        last_good = f;
    };

    ObservableSeries series;
    try {
        series = evolve(state, scfg, observers, hook);
    } catch (const NumericError&) {
        save_snapshot(last_good,
                      (fs::path(c.out_dir) / "last_good.pgyr").string());
        throw;
    }

    {
        std::ofstream os(fs::path(c.out_dir) / "observables.csv");
        series.write_csv(os);
    }
    std::ofstream cfg_os(fs::path(c.out_dir) / "config.ini");
    cfg_os << serialize_config(c);
    cfg_os.close();
    save_snapshot(state.field, (fs::path(c.out_dir) / "final.pgyr").string());
    write_density_pgm(state.field,
                      (fs::path(c.out_dir) / "density.pgm").string());
    write_phase_pgm(state.field, (fs::path(c.out_dir) / "phase.pgm").string());

    RunSummary summary = field_summary(state.field);
    summary.emplace_back(
        "steady_state",
        steady_state_reached(series, 1e-3, 2.0) ? "true" : "false");
    if (c.observer_set == "momentum") {
        for (const auto& name : {"pop_zero", "pop_k0_plus", "pop_k0_minus"})
            summary.emplace_back(name,
                                 fmt_double(series.channel(name).back()));
    }
    write_summary(summary, (fs::path(c.out_dir) / "summary.txt").string());
    return summary;
}

std::vector<RunSummary>
sweep(const RunConfig& base,
      const std::map<std::string, std::vector<std::string>>& axes,
      const std::string& out_dir, int workers) {
    fs::create_directories(out_dir);

    // Cartesian product of axis values.
    std::vector<RunConfig> configs{base};
    std::vector<std::vector<std::pair<std::string, std::string>>> labels{{}};
    for (const auto& [key, values] : axes) {
        std::vector<RunConfig> next;
        std::vector<std::vector<std::pair<std::string, std::string>>> next_labels;
        for (std::size_t i = 0; i < configs.size(); ++i) {
            for (const auto& v : values) {
                RunConfig c = configs[i];
                apply_override(c, key, v);
                next.push_back(c);
                auto lab = labels[i];
                lab.emplace_back(key, v);
                next_labels.push_back(lab);
            }
        }
        configs = std::move(next);
        labels = std::move(next_labels);
    }

    for (std::size_t i = 0; i < configs.size(); ++i) {
        std::ostringstream dir;
        dir << "run_" << std::setfill('0') << std::setw(3) << i;
        configs[i].out_dir = (fs::path(out_dir) / dir.str()).string();
    }

    std::vector<RunSummary> results(configs.size());
    std::vector<std::string> errors(configs.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= configs.size()) return;
            try {
                results[i] = run(configs[i]);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    const int nthreads = std::max(1, std::min<int>(workers,
                                                   static_cast<int>(configs.size())));
    std::vector<std::thread> pool;
    for (int w = 0; w < nthreads; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (std::size_t i = 0; i < errors.size(); ++i)
        if (!errors[i].empty())
            throw std::runtime_error("sweep run " + std::to_string(i) +
                                     " failed: " + errors[i]);

    // Aggregate CSV: axis columns then the union of summary keys.
    std::vector<std::string> keys;
    for (const auto& r : results)
        for (const auto& [k, v] : r)
            if (std::find(keys.begin(), keys.end(), k) == keys.end())
                keys.push_back(k);
    std::ofstream os(fs::path(out_dir) / "sweep.csv");
    os << "run";
    for (const auto& [k, v] : labels[0]) os << "," << k;
    for (const auto& k : keys) os << "," << k;
    os << "\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
        os << i;
        for (const auto& [k, v] : labels[i]) os << "," << v;
        for (const auto& k : keys) {
            auto it = std::find_if(results[i].begin(), results[i].end(),
                                   [&](const auto& kv) { return kv.first == k; });
            os << "," << (it != results[i].end() ? it->second : "");
        }
        os << "\n";
    }
    return results;
}

RunSummary analyze_snapshot(const std::string& snapshot_path) {
    return field_summary(load_snapshot(snapshot_path));
}

} // namespace pgyro
