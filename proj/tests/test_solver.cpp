#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "pgyro/analysis.hpp"
#include "pgyro/solver.hpp"

using namespace pgyro;

namespace {

Landscape flat_with_pump(Sampler pump, const std::string& kind) {
    Landscape ls = Landscape::trivial();
    ls.pump = std::move(pump);
    ls.pump_kind = kind;
    return ls;
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

double rel_l2(const ComplexField& a, const ComplexField& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < a.values.size(); ++k) {
        num += std::norm(a.values[k] - b.values[k]);
        den += std::norm(b.values[k]);
    }
    return std::sqrt(num / den);
}

} // namespace

TEST_CASE("stable_dt: kinetic bound, scaling, and pump/potential limits") {
    const SimParams params{.g = 0.0, .gamma = 0.0, .eta = 0.0, .units = {}};
    const Landscape trivial = Landscape::trivial();

    const GridSpec g = make_grid(64, 64, 32.0, 32.0, Boundary::Periodic);
    CHECK(stable_dt(g, params, trivial, 0.5) ==
          doctest::Approx(0.03125).epsilon(1e-14));

    // Halving dx quarters dt.
    const GridSpec fine = make_grid(128, 128, 32.0, 32.0, Boundary::Periodic);
    CHECK(stable_dt(fine, params, trivial, 0.5) ==
          doctest::Approx(0.03125 / 4.0).epsilon(1e-14));

    // A strong pump activates the gain bound 2/maxP.
    const Landscape pumped = flat_with_pump(pump_uniform(100.0), "uniform");
    CHECK(stable_dt(g, params, pumped, 0.5) ==
          doctest::Approx(0.5 * 2.0 / 100.0).epsilon(1e-12));

    CHECK_THROWS_AS(stable_dt(g, params, trivial, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(stable_dt(g, params, trivial, 1.5), std::invalid_argument);
}

TEST_CASE("seed_vortex_superposition: clamp, zero case, and net winding") {
    const GridSpec g = make_grid(128, 128, 32.0, 32.0, Boundary::DirichletZero);
    const LGParams lg = LGParams::from_waist(5.35, 2.0);
    SimParams params{.g = 1.0, .gamma = 1.0, .eta = 1.0, .units = {}};

    // P identically gamma: the clamped amplitude vanishes everywhere.
    const Landscape even = flat_with_pump(pump_uniform(1.0), "uniform");
    const ComplexField zero = seed_vortex_superposition(1, g, even, params, lg);
    for (const auto& v : zero.values) CHECK(std::abs(v) == 0.0);

    const Landscape fig2 = flat_with_pump(pump_gaussian(2.0, 5.35), "gaussian");
    const ComplexField seed = seed_vortex_superposition(1, g, fig2, params, lg);
    CHECK(field_norm(seed) > 0.0);
    // Two lobes along the x axis, node on the y axis.
    CHECK(std::abs(interpolate(seed, 3.0, 0.0)) >
          10.0 * std::abs(interpolate(seed, 0.1, 3.0)));
    // Net phase winding of the +-l superposition is zero (contour offset
    // from the nodal lines).
    CHECK(phase_winding(seed, 0.11, 0.07, 2.5) == 0);

    params.eta = 0.0;
    CHECK_THROWS_AS(seed_vortex_superposition(1, g, fig2, params, lg),
                    std::invalid_argument);
}

TEST_CASE("seed_ring_superposition: lobes on the annulus and cos nodes") {
    const GridSpec g = make_grid(128, 128, 20.0, 20.0, Boundary::DirichletZero);
    for (int l : {1, 5}) {
        const ComplexField seed = seed_ring_superposition(l, 1.0, 5.0, g);
        const AngularProfile prof = angular_profile(seed, 5.0, 360);
        CHECK(lobe_stats(prof).count == 2 * l);
    }
    // Destructive interference where cos(l phi) = 0: for l = 1 that is the
    // y axis at r = r_min.
    const ComplexField s1 = seed_ring_superposition(1, 1.0, 5.0, g);
    CHECK(std::abs(interpolate(s1, 0.0, 5.0)) <= 1e-12);
    CHECK(std::abs(interpolate(s1, 5.0, 0.0)) ==
          doctest::Approx(std::numbers::sqrt2).epsilon(1e-6));
}

TEST_CASE("seed_momentum_mixture: populations and preconditions") {
    const GridSpec g = make_grid(64, 64, 20.0, 20.0, Boundary::Periodic);
    const double k0 = 2.0 * std::numbers::pi / 10.0; // 2 cycles across lx

    const cdouble amp{1.0 / std::sqrt(3.0), 0.0};
    const ComplexField seed =
        seed_momentum_mixture({{0.0, amp}, {k0, amp}, {-k0, amp}}, g);
    const auto pops =
        momentum_populations(seed, {{0.0, 0.0}, {k0, 0.0}, {-k0, 0.0}});
    for (double p : pops) CHECK(p == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    const ComplexField flat = seed_momentum_mixture({{0.0, cdouble{1.0, 0.0}}}, g);
    for (const auto& v : flat.values)
        CHECK(std::abs(v - cdouble{1.0, 0.0}) <= 1e-15);

    CHECK_THROWS_AS(seed_momentum_mixture({{0.123, amp}}, g),
                    std::invalid_argument);
    const GridSpec gd = make_grid(64, 64, 20.0, 20.0, Boundary::DirichletZero);
    CHECK_THROWS_AS(seed_momentum_mixture({{0.0, amp}}, gd),
                    std::invalid_argument);
}

TEST_CASE("conservative limit preserves norm and energy") {
    const GridSpec g = make_grid(64, 64, 16.0, 16.0, Boundary::Periodic);
    for (double gg : {0.0, 1.0}) {
        SimState s = make_state(gaussian_field(g, 2.0),
                                SimParams{.g = gg, .gamma = 0.0, .eta = 0.0,
                                          .units = {}},
                                Landscape::trivial());
        const double norm0 = field_norm(s.field);
        const double e0 = energy_functional(s);
        SolverConfig cfg;
        cfg.t_end = 1.0;
        cfg.snapshot_every = 0;
        evolve(s, cfg, {});
        CHECK(std::abs(field_norm(s.field) - norm0) / norm0 <=
              (gg == 0.0 ? 1e-9 : 1e-6));
        CHECK(std::abs(energy_functional(s) - e0) /
                  std::max(std::abs(e0), 1.0) <=
              1e-6);
    }
}

TEST_CASE("free dispersion matches the analytic Gaussian solution") {
    const GridSpec g = make_grid(128, 128, 16.0, 16.0, Boundary::Periodic);
    const double w = 2.0, t = 0.5;
    SimState s = make_state(gaussian_field(g, w),
                            SimParams{.g = 0.0, .gamma = 0.0, .eta = 0.0,
                                      .units = {}},
                            Landscape::trivial());
    SolverConfig cfg;
    cfg.t_end = t;
    cfg.snapshot_every = 0;
    evolve(s, cfg, {});

    // i d_t psi = -lap psi with psi0 = exp(-r^2/w^2):
    // psi(t) = w^2/(w^2 + 4 i t) * exp(-r^2/(w^2 + 4 i t)).
    const cdouble denom{w * w, 4.0 * t};
    ComplexField exact(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const double x = g.x(i), y = g.y(j);
            exact.at(i, j) = (w * w / denom) * std::exp(-(x * x + y * y) / denom);
        }
    CHECK(rel_l2(s.field, exact) <= 1e-5);
}

TEST_CASE("homogeneous fixed point holds for any g") {
    const GridSpec g = make_grid(64, 64, 16.0, 16.0, Boundary::Periodic);
    for (double gg : {0.0, 1.7}) {
        SimState s = make_state(ComplexField(g, {1.0, 0.0}),
                                SimParams{.g = gg, .gamma = 1.0, .eta = 1.0,
                                          .units = {}},
                                flat_with_pump(pump_uniform(2.0), "uniform"));
        SolverConfig cfg;
        cfg.t_end = 2.0;
        cfg.snapshot_every = 0;
        evolve(s, cfg, {});
        for (const auto& v : s.field.values)
            CHECK(std::abs(std::norm(v) - 1.0) <= 1e-6);
        // Global phase rotates at mu = g (P0 - gamma)/eta.
        const double expected = -gg * cfg.t_end;
        const double got = std::arg(s.field.at(10, 20));
        const double diff = std::remainder(got - expected, 2.0 * std::numbers::pi);
        CHECK(std::abs(diff) <= 1e-4);
    }
}

TEST_CASE("gauge covariance under a constant potential shift") {
    const GridSpec g = make_grid(64, 64, 16.0, 16.0, Boundary::Periodic);
    const double c = 0.8, t = 1.0;
    // Conservative nonlinear dynamics: without gain there is no transient
    // amplification of the step-by-step commutator defect.
    auto run = [&](double shift) {
        Landscape ls = Landscape::trivial();
        ls.potential = [shift](double, double) { return shift; };
        SimState s = make_state(gaussian_field(g, 3.0),
                                SimParams{.g = 1.0, .gamma = 0.0, .eta = 0.0,
                                          .units = {}},
                                ls);
        SolverConfig cfg;
        cfg.t_end = t;
        cfg.snapshot_every = 0;
        // Shared dt so both runs take identical steps; the 4th-order
        // commutator defect scales as dt^4 and sits below 1e-10 here.
        cfg.dt = 0.001;
        evolve(s, cfg, {});
        return s.field;
    };
    const ComplexField base = run(0.0);
    const ComplexField shifted = run(c);
    const cdouble gauge = std::polar(1.0, -c * t);
    for (std::size_t k = 0; k < base.values.size(); ++k) {
        CHECK(std::abs(std::norm(shifted.values[k]) - std::norm(base.values[k]))
              <= 1e-10);
        CHECK(std::abs(shifted.values[k] - gauge * base.values[k]) <= 1e-6);
    }
}

TEST_CASE("GFDTD agrees with the reference integrator") {
    const GridSpec g = make_grid(64, 64, 32.0, 32.0, Boundary::DirichletZero);
    const LGParams lg = LGParams::from_waist(5.35, 2.0);
    const SimParams params{.g = 1.0, .gamma = 1.0, .eta = 1.0, .units = {}};
    const Landscape fig2 = flat_with_pump(pump_gaussian(2.0, 5.35), "gaussian");
    const ComplexField seed = seed_vortex_superposition(1, g, fig2, params, lg);

    auto run = [&](Scheme scheme) {
        SimState s = make_state(seed, params, fig2);
        SolverConfig cfg;
        cfg.scheme = scheme;
        cfg.t_end = 1.0;
        cfg.snapshot_every = 0;
        evolve(s, cfg, {});
        return s.field;
    };
    CHECK(rel_l2(run(Scheme::Gfdtd), run(Scheme::Rk4Fd4)) <= 1e-6);
}

TEST_CASE("evolve is deterministic and handles t_end = now") {
    const GridSpec g = make_grid(64, 64, 16.0, 16.0, Boundary::Periodic);
    const SimParams params{.g = 1.0, .gamma = 1.0, .eta = 1.0, .units = {}};
    const Landscape ls = flat_with_pump(pump_uniform(2.0), "uniform");

    auto run = [&]() {
        SimState s = make_state(gaussian_field(g, 3.0), params, ls);
        SolverConfig cfg;
        cfg.t_end = 0.5;
        cfg.snapshot_every = 10;
        evolve(s, cfg, default_observers());
        return s.field.values;
    };
    CHECK(run() == run()); // bitwise determinism

    SimState s = make_state(gaussian_field(g, 3.0), params, ls);
    SolverConfig cfg;
    cfg.t_end = 0.0;
    const ObservableSeries series = evolve(s, cfg, default_observers());
    REQUIRE(series.times.size() == 1);
    CHECK(series.times[0] == 0.0);
    CHECK(s.step_count == 0);
}

TEST_CASE("evolve samples observers at start, cadence, and t_end") {
    const GridSpec g = make_grid(64, 64, 16.0, 16.0, Boundary::Periodic);
    SimState s = make_state(gaussian_field(g, 3.0),
                            SimParams{.g = 0.0, .gamma = 0.0, .eta = 0.0,
                                      .units = {}},
                            Landscape::trivial());
    SolverConfig cfg;
    cfg.dt = 0.005;
    cfg.t_end = 0.1; // 20 steps
    cfg.snapshot_every = 6;
    const ObservableSeries series = evolve(s, cfg, default_observers());
    REQUIRE(series.has_channel("norm"));
    REQUIRE(series.times.size() >= 3);
    CHECK(series.times.front() == 0.0);
    CHECK(series.times.back() == doctest::Approx(0.1).epsilon(1e-12));
    for (std::size_t k = 1; k < series.times.size(); ++k)
        CHECK(series.times[k] > series.times[k - 1]);
}

TEST_CASE("unstable dt is rejected, and forced instability raises NumericError") {
    const GridSpec g = make_grid(64, 64, 32.0, 32.0, Boundary::Periodic);
    SimState s = make_state(gaussian_field(g, 3.0),
                            SimParams{.g = 0.0, .gamma = 0.0, .eta = 0.0,
                                      .units = {}},
                            Landscape::trivial());
    SolverConfig cfg;
    cfg.dt = 1.0; // far beyond h^2/4 = 0.0625
    cfg.t_end = 100.0;
    CHECK_THROWS_AS(evolve(s, cfg, {}), std::invalid_argument);

    cfg.allow_unstable_dt = true;
    CHECK_THROWS_AS(evolve(s, cfg, {}), NumericError);
}

TEST_CASE("spatial accuracy improves at 4th order under dx halving") {
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
    const double coarse = error_at(64);
    const double fine = error_at(128);
    CHECK(coarse / fine >= 8.0);
}

TEST_CASE("make_state rejects invalid parameters and negative pumps") {
    const GridSpec g = make_grid(16, 16, 8.0, 8.0, Boundary::Periodic);
    CHECK_THROWS(make_state(ComplexField(g),
                            SimParams{.g = 0.0, .gamma = -1.0, .eta = 0.0,
                                      .units = {}},
                            Landscape::trivial()));
    Landscape bad = Landscape::trivial();
    bad.pump = [](double, double) { return -1.0; };
    CHECK_THROWS(make_state(ComplexField(g),
                            SimParams{.g = 0.0, .gamma = 0.0, .eta = 0.0,
                                      .units = {}},
                            bad));
}
