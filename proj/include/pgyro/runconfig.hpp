#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pgyro/grid.hpp"
#include "pgyro/units.hpp"

namespace pgyro {

/// Thrown with a "section.key: reason" message on malformed configs.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Complete description of one simulation run. Serializes to sectioned
/// key = value text and round-trips losslessly.
struct RunConfig {
    // [grid]
    int nx = 256;
    int ny = 256;
    double lx = 32.0;
    double ly = 32.0;
    Boundary boundary = Boundary::DirichletZero;

    // [units]
    UnitSystem::Kind unit_kind = UnitSystem::Kind::Dimensionless;
    double length_scale = 1.0;

    // [params]
    double g = 1.0;
    double gamma = 1.0;
    double eta = 1.0;

    // [potential]
    std::string potential_kind = "flat"; // flat|disorder|mexican_hat|kagome|periodic_1d
    double pot_v0 = 1.0;
    double pot_r_min = 5.0;
    double pot_k0 = 1.0;
    double pot_p_param = 1.5;
    double disorder_rms = 0.5;
    double disorder_corr_len = 2.0;
    std::uint64_t disorder_seed = 1;

    // [pump]
    std::string pump_kind = "gaussian"; // none|gaussian|uniform|periodic|ring
    double pump_p0 = 2.0;
    double pump_r0 = 5.35;
    double pump_k0 = 1.0;
    double pump_v0 = 1.0;
    double pump_r_min = 5.0;

    // [seed]
    std::string seed_kind = "vortex"; // none|vortex|ring|momentum
    int seed_l = 1;
    double lg_waist = 5.35;
    double lg_k = 2.0;
    double seed_v0 = 1.0;
    double seed_r_min = 5.0;
    double xi_zero = 0.0;
    double xi_k = 0.0;
    double seed_k0 = 0.6283185307179586;

    // [solver]
    std::string scheme = "rk4"; // rk4|gfdtd
    double dt = 0.0;            // 0 selects stable_dt
    double safety = 0.8;
    double t_end = 10.0;
    int snapshot_every = 200;

    // [observers]
    std::string observer_set = "lobe"; // default|lobe|momentum

    // [output]
    std::string out_dir = "out";

    bool operator==(const RunConfig&) const = default;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
std::string serialize_config(const RunConfig& c);

/// Applies "section.key=value" to a config.
void apply_override(RunConfig& c, const std::string& dotted_key,
                    const std::string& value);

std::vector<std::string> preset_names();
RunConfig preset(const std::string& name);

} // namespace pgyro
