// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit when any
// criterion fails. Runs the library directly (no CLI) so the checks stay
// close to the numerical core.
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "pgyro/analysis.hpp"
#include "pgyro/metrology.hpp"
#include "pgyro/oam.hpp"
#include "pgyro/runconfig.hpp"
#include "pgyro/runner.hpp"
#include "pgyro/solver.hpp"

using namespace pgyro;

namespace {

int g_failures = 0;

void report(int n, bool pass, const std::string& detail) {
    std::printf("CRITERION %d: %s — %s\n", n, pass ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof(buf), f, ap);
    va_end(ap);
    return buf;
}

double rel_l2(const ComplexField& a, const ComplexField& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < a.values.size(); ++k) {
        num += std::norm(a.values[k] - b.values[k]);
        den += std::norm(b.values[k]);
    }
    return std::sqrt(num / den);
}

SolverConfig solver_config_of(const RunConfig& c) {
    SolverConfig cfg;
    cfg.scheme = c.scheme == "gfdtd" ? Scheme::Gfdtd : Scheme::Rk4Fd4;
    cfg.dt = c.dt;
    cfg.safety = c.safety;
    cfg.t_end = c.t_end;
    cfg.snapshot_every = c.snapshot_every;
    return cfg;
}

struct LobeMetrics {
    int count = 0;
    double contrast = 0.0;
    double phase = 0.0;
};

LobeMetrics lobe_metrics(const ComplexField& f) {
    LobeMetrics m;
    const double r = peak_density_radius(f);
    const AngularProfile prof = angular_profile(f, r, 360);
    const LobeStats st = lobe_stats(prof);
    m.count = st.count;
    m.contrast = st.contrast;
    m.phase = st.count >= 2 ? interlobe_phase(f, prof) : 0.0;
    return m;
}

ComplexField gaussian_field(const GridSpec& g, double w) {
    ComplexField f(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const double x = g.x(i), y = g.y(j);
            f.at(i, j) = std::exp(-(x * x + y * y) / (w * w));
        }
    return f;
}

// ---- criterion bodies ------------------------------------------------------

void criterion_1() {
    const GridSpec g = make_grid(128, 128, 32.0, 32.0, Boundary::Periodic);
    Landscape ls = Landscape::trivial();
    ls.pump = pump_uniform(2.0);
    ls.pump_kind = "uniform";
    SimState s = make_state(ComplexField(g, {1.0, 0.0}),
                            SimParams{.g = 1.0, .gamma = 1.0, .eta = 1.0,
                                      .units = {}},
                            ls);
    SolverConfig cfg;
    cfg.t_end = 10.0;
    cfg.snapshot_every = 0;
    evolve(s, cfg, {});

    double max_dev = 0.0;
    for (const auto& v : s.field.values)
        max_dev = std::max(max_dev, std::abs(std::norm(v) - 1.0));
    // mu = g (P0 - gamma)/eta = 1; the global phase should sit at -mu t.
    const double phase_err = std::abs(
        std::remainder(std::arg(s.field.at(17, 41)) + 10.0,
                       2.0 * std::numbers::pi));
    const bool pass = max_dev <= 1e-6 && phase_err <= 1e-4 * 10.0;
    report(1, pass,
           fmt("uniform pump fixed point: max| |psi|^2 - 1 | = %.3g, "
               "phase residual %.3g over t = 10",
               max_dev, phase_err));
}

void criterion_2() {
    const GridSpec g = make_grid(128, 128, 16.0, 16.0, Boundary::Periodic);
    auto drift = [&](double gg) {
        SimState s = make_state(gaussian_field(g, 2.0),
                                SimParams{.g = gg, .gamma = 0.0, .eta = 0.0,
                                          .units = {}},
                                Landscape::trivial());
        const double n0 = field_norm(s.field);
        SolverConfig cfg;
        cfg.t_end = 10.0;
        cfg.snapshot_every = 0;
        evolve(s, cfg, {});
        return std::abs(field_norm(s.field) - n0) / n0;
    };
    const double d0 = drift(0.0);
    const double d1 = drift(1.0);
    const bool pass = d0 <= 1e-8 && d1 <= 1e-6;
    report(2, pass,
           fmt("conservative limit: norm drift %.3g (g=0), %.3g (g=1) "
               "over t = 10",
               d0, d1));
}

ObservableSeries run_preset(const std::string& name, SimState& out_state,
                            const std::vector<std::pair<std::string,
                                                        std::string>>& ov = {}) {
    RunConfig c = preset(name);
    for (const auto& [k, v] : ov) apply_override(c, k, v);
    out_state = build_state(c);
    return evolve(out_state, solver_config_of(c), build_observers(c));
}

void criterion_3() {
    SimState s;
    const ObservableSeries series = run_preset("fig-flat", s);
    const LobeMetrics m = lobe_metrics(s.field);
    const bool steady = steady_state_reached(series, 1e-3, 2.0);
    const bool pass = m.count == 2 && m.contrast >= 0.9 &&
                      std::abs(m.phase - std::numbers::pi) <= 0.1 && steady;
    report(3, pass,
           fmt("flat-potential dipole at t = 10: lobes %d, contrast %.4f, "
               "interlobe phase %.4f, steady %s",
               m.count, m.contrast, m.phase, steady ? "yes" : "no"));
}

void criterion_4() {
    SimState s;
    run_preset("fig-flat-meV", s);
    const LobeMetrics m = lobe_metrics(s.field);
    const bool pass = m.count == 2 && m.contrast >= 0.9 &&
                      std::abs(m.phase - std::numbers::pi) <= 0.1;
    report(4, pass,
           fmt("meV-unit dipole at t = 10: lobes %d, contrast %.4f, "
               "interlobe phase %.4f",
               m.count, m.contrast, m.phase));
}

void criterion_5() {
    auto survey = [&](const std::string& rms) {
        int ok = 0;
        std::string detail;
        for (int seed = 1; seed <= 5; ++seed) {
            SimState s;
            run_preset("fig-disorder", s,
                       {{"potential.seed", std::to_string(seed)},
                        {"potential.rms", rms}});
            const LobeMetrics m = lobe_metrics(s.field);
            const bool good = m.count == 2 && m.contrast >= 0.8 &&
                              std::abs(m.phase - std::numbers::pi) <= 0.1;
            ok += good ? 1 : 0;
            detail += fmt("%s[seed %d: %d lobes, c=%.2f]", seed > 1 ? " " : "",
                          seed, m.count, m.contrast);
        }
        return std::make_pair(ok, detail);
    };

    const auto [ok_full, detail_full] = survey("0.5");
    report(5, ok_full == 5,
           fmt("disorder V_rms = 0.5: %d/5 seeds keep the dipole — %s",
               ok_full, detail_full.c_str()));
    if (ok_full < 5) {
        const auto [ok_weak, detail_weak] = survey("0.02");
        std::printf("  note: at V_rms = 0.02 the dipole survives %d/5 seeds "
                    "— %s\n", ok_weak, detail_weak.c_str());
        std::printf("  note: at V_rms = 0.5 disorder couples the dipole to "
                    "the faster-growing rotationally symmetric mode of the "
                    "gain channel; see the observed single-lobe collapse "
                    "above.\n");
    }
}

void criterion_6() {
    SimState s1, s5;
    run_preset("fig-ring-l1", s1);
    run_preset("fig-ring-l5", s5);
    const LobeMetrics m1 = lobe_metrics(s1.field);
    const LobeMetrics m5 = lobe_metrics(s5.field);
    const bool pass = m1.count == 2 && m1.contrast >= 0.9 &&
                      std::abs(m1.phase - std::numbers::pi) <= 0.1 &&
                      m5.count == 10 && m5.contrast >= 0.9 &&
                      std::abs(m5.phase - std::numbers::pi) <= 0.1;
    report(6, pass,
           fmt("ring geometry at t = 10: l=1 -> %d lobes (c=%.3f, phi=%.3f); "
               "l=5 -> %d lobes (c=%.3f, phi=%.3f)",
               m1.count, m1.contrast, m1.phase, m5.count, m5.contrast,
               m5.phase));
}

void criterion_7() {
    const std::vector<std::pair<std::string, std::string>> shrink = {
        {"grid.nx", "128"}, {"grid.ny", "128"}, {"solver.t_end", "100"}};

    SimState su;
    RunConfig cu = preset("fig-metastable-uniform");
    run_preset("fig-metastable-uniform", su, shrink);
    const double k0 = cu.seed_k0;
    const auto pu = momentum_populations(
        su.field, {{0.0, 0.0}, {k0, 0.0}, {-k0, 0.0}});

    SimState sp;
    run_preset("fig-metastable-periodic", sp, shrink);
    const auto pp = momentum_populations(
        sp.field, {{0.0, 0.0}, {k0, 0.0}, {-k0, 0.0}});

    const double zero_frac = pu[0];
    const double pm_frac = pp[1] + pp[2];
    const bool pass = zero_frac >= 0.9 && pm_frac >= 0.9;
    report(7, pass,
           fmt("metastable targeting at t = 100: uniform pump k=0 fraction "
               "%.4f; periodic pump +-k0 fraction %.4f",
               zero_frac, pm_frac));
}

void criterion_8() {
    SimState s;
    run_preset("fig-kagome", s);
    const LobeMetrics m = lobe_metrics(s.field);
    const bool pass =
        m.count == 2 && std::abs(m.phase - std::numbers::pi) <= 0.1;
    report(8, pass,
           fmt("Kagome lattice at t = 10: lobes %d, interlobe phase %.4f",
               m.count, m.phase));
}

void criterion_9() {
    const GridSpec g = make_grid(256, 256, 32.0, 32.0, Boundary::DirichletZero);
    const LGParams lg = LGParams::from_waist(3.0, 2.0);
    double worst = 0.0;
    int wl = 0, wp = 0;
    for (int l = -3; l <= 3; ++l)
        for (int p = 0; p <= 2; ++p) {
            const double err =
                rel_l2(ladder_lg(l, p, lg, g), lg_mode(l, p, lg, 0.0, g));
            if (err > worst) {
                worst = err;
                wl = l;
                wp = p;
            }
        }
    report(9, worst <= 1e-5,
           fmt("ladder vs closed-form modes, |l| <= 3, p <= 2 at 256^2: "
               "max rel L2 = %.3g at (l=%d, p=%d)",
               worst, wl, wp));
}

void criterion_10() {
    const double coeff = sagnac_ring_laser(1.0, 1.0, 5e-7, 1.0, 1.0);
    const bool c1 = std::abs(coeff - 5.0e7) <= 0.01 * 5.0e7;
    const double k0r = 1e7 * 1e-4;
    const bool c2 = std::abs(k0r - 1e3) <= 1e-9;
    GyroConfig ring;
    ring.kind = GyroConfig::Kind::RingBEC;
    ring.k0 = 1e7;
    ring.radius = 1e-4;
    const double om = omega_min(ring, 1.0, 1e14);
    const bool c3 = std::abs(om - 5e-11) <= 1e-12;

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const double t = u(rng), k0 = u(rng) * 1e6, r = u(rng) * 1e-4;
        const double m = u(rng) * 1e-28, omega = u(rng);
        const double a = bec_loop_phase(revolutions(t, k0, r, m), m,
                                        std::numbers::pi * r * r, omega);
        const double b = sagnac_ring_bec(k0, r, omega, t);
        worst = std::max(worst, std::abs(a - b) / std::abs(b));
    }
    const bool c4 = worst <= 1e-12;
    report(10, c1 && c2 && c3 && c4,
           fmt("metrology: ring-laser coeff %.5g, k0 r %.4g, ring "
               "Omega_min %.4g rad/s, loop/ring identity worst rel dev %.3g",
               coeff, k0r, om, worst));
}

void criterion_11() {
    const GridSpec g = make_grid(256, 256, 32.0, 32.0, Boundary::DirichletZero);
    const int nbins = 720;
    const double binw = 2.0 * std::numbers::pi / nbins;
    ComplexField ring(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const double x = g.x(i), y = g.y(j);
            const double r = std::sqrt(x * x + y * y);
            ring.at(i, j) = std::exp(-(r - 6.0) * (r - 6.0));
        }
    double worst = 0.0;
    for (int l : {1, 5}) {
        const ComplexField before = synth_rotated_pattern(ring, l, 0.0, 1.0);
        const AngularProfile pb = angular_profile(before, 6.0, nbins);
        for (double theta : {0.05, 0.1, 0.3}) {
            const ComplexField after =
                synth_rotated_pattern(ring, l, theta, 1.0);
            const AngularProfile pa = angular_profile(after, 6.0, nbins);
            const double est = estimate_rotation(pb, pa, l);
            const double err = std::abs(
                std::remainder(est - theta, std::numbers::pi / l));
            worst = std::max(worst, err);
        }
    }
    report(11, worst <= binw,
           fmt("rotation estimator closed loop (720 bins, l in {1,5}): "
               "max |error| = %.3g rad vs bin width %.3g",
               worst, binw));
}

void criterion_12() {
    // Spatial order on the analytic free-dispersion solution.
    const double w = 2.0, t = 0.25;
    auto error_at = [&](int n) {
        const GridSpec g = make_grid(n, n, 16.0, 16.0, Boundary::Periodic);
        SimState s = make_state(gaussian_field(g, w),
                                SimParams{.g = 0.0, .gamma = 0.0, .eta = 0.0,
                                          .units = {}},
                                Landscape::trivial());
        SolverConfig cfg;
        cfg.t_end = t;
        cfg.snapshot_every = 0;
        evolve(s, cfg, {});
        const cdouble denom{w * w, 4.0 * t};
        ComplexField exact(g);
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const double x = g.x(i), y = g.y(j);
                exact.at(i, j) =
                    (w * w / denom) * std::exp(-(x * x + y * y) / denom);
            }
        return rel_l2(s.field, exact);
    };
    const double ratio = error_at(64) / error_at(128);

    // Scheme cross-check at t = 1 on the flat-potential configuration.
    RunConfig c = preset("fig-flat");
    apply_override(c, "solver.t_end", "1");
    SimState ref = build_state(c);
    SimState alt = build_state(c);
    SolverConfig cfg = solver_config_of(c);
    cfg.snapshot_every = 0;
    evolve(ref, cfg, {});
    cfg.scheme = Scheme::Gfdtd;
    evolve(alt, cfg, {});
    const double scheme_err = rel_l2(alt.field, ref.field);

    report(12, ratio >= 8.0 && scheme_err <= 1e-6,
           fmt("numerical order: dx-halving error ratio %.2f (>= 8), "
               "scheme cross-check rel L2 %.3g at t = 1",
               ratio, scheme_err));
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    if (g_failures > 0)
        std::printf("%d criterion(s) failed\n", g_failures);
    else
        std::printf("all criteria passed\n");
    return g_failures == 0 ? 0 : 1;
}
