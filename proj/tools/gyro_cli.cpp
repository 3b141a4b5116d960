// gyro: batch front end for the polariton gyroscope simulation library.
// Talks to the core exclusively through the C API in pgyro.h.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pgyro.h"

namespace {

int exit_code_for(pgyro_status st) {
    switch (st) {
    case PGYRO_OK: return 0;
    case PGYRO_ERR_NUMERIC: return 2;
    default: return 1;
    }
}

int report(pgyro_status st) {
    if (st != PGYRO_OK)
        std::fprintf(stderr, "gyro: %s\n", pgyro_last_error());
    return exit_code_for(st);
}

struct ConfigGuard {
    pgyro_config* cfg = nullptr;
    ~ConfigGuard() { pgyro_config_free(cfg); }
};

// Builds a config from --preset/--config plus --override/--seed flags.
int make_config(const std::string& config_path, const std::string& preset,
                const std::vector<std::string>& overrides, long long seed,
                ConfigGuard& out) {
    if (!preset.empty())
        out.cfg = pgyro_config_preset(preset.c_str());
    else if (!config_path.empty())
        out.cfg = pgyro_config_load(config_path.c_str());
    else
        out.cfg = pgyro_config_default();
    if (!out.cfg) {
        std::fprintf(stderr, "gyro: %s\n", pgyro_last_error());
        return 1;
    }
    for (const auto& ov : overrides) {
        const auto eq = ov.find('=');
        if (eq == std::string::npos) {
            std::fprintf(stderr, "gyro: --override expects key=value: %s\n",
                         ov.c_str());
            return 1;
        }
        const pgyro_status st = pgyro_config_set(
            out.cfg, ov.substr(0, eq).c_str(), ov.substr(eq + 1).c_str());
        if (st != PGYRO_OK) return report(st);
    }
    if (seed >= 0) {
        const pgyro_status st = pgyro_config_set(
            out.cfg, "potential.seed", std::to_string(seed).c_str());
        if (st != PGYRO_OK) return report(st);
    }
    return 0;
}

std::string fetch_string(pgyro_status (*fn)(char*, size_t, size_t*)) {
    size_t needed = 0;
    fn(nullptr, 0, &needed);
    std::string buf(needed, '\0');
    fn(buf.data(), buf.size(), &needed);
    buf.resize(needed > 0 ? needed - 1 : 0);
    return buf;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polariton gyroscope simulation toolkit"};
    app.require_subcommand(1);

    std::string config_path, preset_name, out_dir;
    std::vector<std::string> overrides;
    long long seed = -1;
    int workers = 1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "run config file");
        cmd->add_option("--preset", preset_name, "named experiment preset");
        cmd->add_option("--out", out_dir, "output directory");
        cmd->add_option("--override", overrides,
                        "config override key=value (repeatable)");
        cmd->add_option("--seed", seed, "disorder seed");
    };

    auto* cmd_run = app.add_subcommand("run", "run one simulation");
    add_common(cmd_run);

    auto* cmd_sweep = app.add_subcommand("sweep", "parameter sweep");
    add_common(cmd_sweep);
    std::vector<std::string> axis_specs;
    cmd_sweep->add_option("--axis", axis_specs,
                          "sweep axis section.key=v1,v2,... (repeatable)");
    cmd_sweep->add_option("--workers", workers, "parallel sweep workers");

    auto* cmd_metrology =
        app.add_subcommand("metrology", "gyroscope comparison table");
    bool as_csv = false;
    cmd_metrology->add_flag("--csv", as_csv, "emit CSV instead of text");

    auto* cmd_analyze =
        app.add_subcommand("analyze", "analyze an existing PGYR snapshot");
    std::string snapshot_path;
    cmd_analyze->add_option("snapshot", snapshot_path, "snapshot file")
        ->required();

    auto* cmd_presets = app.add_subcommand("presets", "list presets");

    CLI11_PARSE(app, argc, argv);

    if (cmd_run->parsed()) {
        ConfigGuard guard;
        if (int rc = make_config(config_path, preset_name, overrides, seed,
                                 guard))
            return rc;
        return report(pgyro_run(guard.cfg,
                                out_dir.empty() ? nullptr : out_dir.c_str()));
    }

    if (cmd_sweep->parsed()) {
        ConfigGuard guard;
        if (int rc = make_config(config_path, preset_name, overrides, seed,
                                 guard))
            return rc;
        std::string spec;
        for (const auto& a : axis_specs) {
            if (!spec.empty()) spec += ";";
            spec += a;
        }
        const std::string dir = out_dir.empty() ? "sweep_out" : out_dir;
        return report(
            pgyro_sweep(guard.cfg, spec.c_str(), dir.c_str(), workers));
    }

    if (cmd_metrology->parsed()) {
        size_t needed = 0;
        pgyro_metrology_table(as_csv ? 1 : 0, nullptr, 0, &needed);
        std::string buf(needed, '\0');
        const pgyro_status st =
            pgyro_metrology_table(as_csv ? 1 : 0, buf.data(), buf.size(),
                                  &needed);
        if (st != PGYRO_OK) return report(st);
        std::fputs(buf.c_str(), stdout);
        return 0;
    }

    if (cmd_analyze->parsed()) {
        size_t needed = 0;
        pgyro_analyze(snapshot_path.c_str(), nullptr, 0, &needed);
        std::string buf(needed, '\0');
        const pgyro_status st =
            pgyro_analyze(snapshot_path.c_str(), buf.data(), buf.size(),
                          &needed);
        if (st != PGYRO_OK) return report(st);
        std::fputs(buf.c_str(), stdout);
        return 0;
    }

    if (cmd_presets->parsed()) {
        std::fputs(fetch_string(pgyro_preset_names).c_str(), stdout);
        return 0;
    }
    return 0;
}
