#include <doctest.h>

#include <algorithm>
#include <string>

#include "pgyro/runconfig.hpp"
#include "pgyro/runner.hpp"

using namespace pgyro;

TEST_CASE("every preset round-trips through serialization losslessly") {
    for (const std::string& name : preset_names()) {
        const RunConfig c = preset(name);
        const RunConfig back = parse_config(serialize_config(c));
        CHECK(back == c);
    }
    const RunConfig d;
    CHECK(parse_config(serialize_config(d)) == d);
}

TEST_CASE("preset catalogue") {
    const auto names = preset_names();
    for (const char* expected :
         {"fig-flat", "fig-flat-meV", "fig-disorder", "fig-disorder-meV",
          "fig-ring-l1", "fig-ring-l5", "fig-metastable-uniform",
          "fig-metastable-periodic", "fig-kagome"})
        CHECK(std::find(names.begin(), names.end(), expected) != names.end());
    CHECK_THROWS_AS(preset("fig-unknown"), ConfigError);
}

TEST_CASE("preset parameters match the reference configurations") {
    const RunConfig flat = preset("fig-flat");
    CHECK(flat.pump_kind == "gaussian");
    CHECK(flat.pump_p0 == 2.0);
    CHECK(flat.pump_r0 == 5.35);
    CHECK(flat.g == 1.0);
    CHECK(flat.gamma == 1.0);
    CHECK(flat.eta == 1.0);
    CHECK(flat.potential_kind == "flat");
    CHECK(flat.t_end == 10.0);

    const RunConfig mev = preset("fig-flat-meV");
    CHECK(mev.unit_kind == UnitSystem::Kind::PhysicalMeV);
    CHECK(mev.g == 0.05);
    CHECK(mev.gamma == 1.0);
    CHECK(mev.eta == 0.1);

    const RunConfig ring5 = preset("fig-ring-l5");
    CHECK(ring5.potential_kind == "mexican_hat");
    CHECK(ring5.pump_kind == "ring");
    CHECK(ring5.seed_l == 5);

    const RunConfig dis = preset("fig-disorder");
    CHECK(dis.potential_kind == "disorder");
    CHECK(dis.disorder_rms == 0.5);
    CHECK(dis.disorder_corr_len == 2.0);

    const RunConfig kag = preset("fig-kagome");
    CHECK(kag.potential_kind == "kagome");
}

TEST_CASE("parse diagnostics name the offending section and key") {
    CHECK_THROWS_WITH_AS(parse_config("[grid]\nnx = abc\n"),
                         doctest::Contains("grid.nx"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("[grid]\nbogus = 1\n"),
                         doctest::Contains("unknown key"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("[nosuch]\nx = 1\n"),
                         doctest::Contains("unknown section"), ConfigError);
    CHECK_THROWS_AS(parse_config("[grid]\nnx = 4\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[solver]\nsafety = 2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[grid]\nboundary = moebius\n"), ConfigError);
}

TEST_CASE("apply_override mutates single fields and validates") {
    RunConfig c = preset("fig-flat");
    apply_override(c, "solver.t_end", "3.5");
    CHECK(c.t_end == 3.5);
    apply_override(c, "grid.nx", "128");
    CHECK(c.nx == 128);
    apply_override(c, "potential.seed", "1234");
    CHECK(c.disorder_seed == 1234u);
    apply_override(c, "pump.kind", "uniform");
    CHECK(c.pump_kind == "uniform");

    CHECK_THROWS_AS(apply_override(c, "no_dot", "1"), ConfigError);
    CHECK_THROWS_AS(apply_override(c, "solver.t_end", "-1"), ConfigError);
    CHECK_THROWS_AS(apply_override(c, "grid.frobnicate", "1"), ConfigError);
}

TEST_CASE("momentum seeds require a periodic boundary") {
    RunConfig c = preset("fig-metastable-uniform");
    CHECK(c.seed_kind == "momentum");
    CHECK(c.boundary == Boundary::Periodic);
    CHECK_THROWS_WITH_AS(apply_override(c, "grid.boundary", "dirichlet"),
                         doctest::Contains("seed.kind"), ConfigError);
}

TEST_CASE("build_landscape and build_state reject unknown kinds") {
    RunConfig c = preset("fig-flat");
    c.potential_kind = "escher";
    CHECK_THROWS_AS(build_landscape(c), ConfigError);
    c = preset("fig-flat");
    c.pump_kind = "firehose";
    CHECK_THROWS_AS(build_landscape(c), ConfigError);
    c = preset("fig-flat");
    c.seed_kind = "entropy";
    CHECK_THROWS_AS(build_state(c), ConfigError);
    c = preset("fig-flat");
    c.observer_set = "kitchen-sink";
    CHECK_THROWS_AS(build_observers(c), ConfigError);
}

TEST_CASE("build_state wires grid, landscape, and seed together") {
    RunConfig c = preset("fig-flat");
    c.nx = 64;
    c.ny = 64;
    const SimState s = build_state(c);
    CHECK(s.field.grid.nx == 64);
    CHECK(s.field.grid.boundary == Boundary::DirichletZero);
    CHECK(s.potential.size() == s.field.grid.size());
    CHECK(s.pump.size() == s.field.grid.size());
    CHECK(field_norm(s.field) > 0.0);
    // Gaussian pump peaks at the center.
    CHECK(s.pump[s.field.grid.index(32, 32)] == doctest::Approx(2.0));

    // Disorder realizations are deterministic in the seed.
    RunConfig d = preset("fig-disorder");
    d.nx = 64;
    d.ny = 64;
    const SimState s1 = build_state(d);
    const SimState s2 = build_state(d);
    CHECK(s1.potential == s2.potential);
    apply_override(d, "potential.seed", "99");
    const SimState s3 = build_state(d);
    CHECK(s3.potential != s1.potential);
}
