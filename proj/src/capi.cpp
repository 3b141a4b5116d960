#include "pgyro.h"

#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pgyro/metrology.hpp"
#include "pgyro/runconfig.hpp"
#include "pgyro/runner.hpp"
#include "pgyro/solver.hpp"

namespace {

thread_local std::string g_last_error = "ok";

struct ConfigHandle {
    pgyro::RunConfig cfg;
};

pgyro_status fail(pgyro_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

pgyro_status classify(const std::exception& e) {
    if (dynamic_cast<const pgyro::ConfigError*>(&e) ||
        dynamic_cast<const std::invalid_argument*>(&e))
        return fail(PGYRO_ERR_CONFIG, e.what());
    if (dynamic_cast<const pgyro::NumericError*>(&e))
        return fail(PGYRO_ERR_NUMERIC, e.what());
    return fail(PGYRO_ERR_IO, e.what());
}

pgyro_status copy_out(const std::string& s, char* buf, size_t cap,
                      size_t* needed) {
    if (needed) *needed = s.size() + 1;
    if (!buf || cap < s.size() + 1)
        return fail(PGYRO_ERR_INVALID, "buffer too small");
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return PGYRO_OK;
}

pgyro::RunConfig* unwrap(pgyro_config* cfg) {
    return cfg ? &reinterpret_cast<ConfigHandle*>(cfg)->cfg : nullptr;
}
const pgyro::RunConfig* unwrap(const pgyro_config* cfg) {
    return cfg ? &reinterpret_cast<const ConfigHandle*>(cfg)->cfg : nullptr;
}

} // namespace

extern "C" {

const char* pgyro_last_error(void) { return g_last_error.c_str(); }

pgyro_config* pgyro_config_default(void) {
    return reinterpret_cast<pgyro_config*>(new ConfigHandle{});
}

pgyro_config* pgyro_config_preset(const char* name) {
    if (!name) {
        fail(PGYRO_ERR_INVALID, "preset name is null");
        return nullptr;
    }
    try {
        return reinterpret_cast<pgyro_config*>(
            new ConfigHandle{pgyro::preset(name)});
    } catch (const std::exception& e) {
        classify(e);
        return nullptr;
    }
}

pgyro_config* pgyro_config_load(const char* path) {
    if (!path) {
        fail(PGYRO_ERR_INVALID, "config path is null");
        return nullptr;
    }
    try {
        return reinterpret_cast<pgyro_config*>(
            new ConfigHandle{pgyro::load_config(path)});
    } catch (const std::exception& e) {
        classify(e);
        return nullptr;
    }
}

void pgyro_config_free(pgyro_config* cfg) {
    delete reinterpret_cast<ConfigHandle*>(cfg);
}

pgyro_status pgyro_config_set(pgyro_config* cfg, const char* dotted_key,
                              const char* value) {
    auto* c = unwrap(cfg);
    if (!c || !dotted_key || !value)
        return fail(PGYRO_ERR_INVALID, "null argument");
    try {
        pgyro::apply_override(*c, dotted_key, value);
        return PGYRO_OK;
    } catch (const std::exception& e) {
        return classify(e);
    }
}

pgyro_status pgyro_config_save(const pgyro_config* cfg, const char* path) {
    const auto* c = unwrap(cfg);
    if (!c || !path) return fail(PGYRO_ERR_INVALID, "null argument");
    std::ofstream os(path);
    if (!os) return fail(PGYRO_ERR_IO, std::string("cannot open ") + path);
    os << pgyro::serialize_config(*c);
    return PGYRO_OK;
}

pgyro_status pgyro_config_serialize(const pgyro_config* cfg, char* buf,
                                    size_t cap, size_t* needed) {
    const auto* c = unwrap(cfg);
    if (!c) return fail(PGYRO_ERR_INVALID, "null config");
    return copy_out(pgyro::serialize_config(*c), buf, cap, needed);
}

pgyro_status pgyro_preset_names(char* buf, size_t cap, size_t* needed) {
    std::string out;
    for (const auto& n : pgyro::preset_names()) out += n + "\n";
    return copy_out(out, buf, cap, needed);
}

pgyro_status pgyro_run(const pgyro_config* cfg, const char* out_dir) {
    const auto* c = unwrap(cfg);
    if (!c) return fail(PGYRO_ERR_INVALID, "null config");
    try {
        pgyro::RunConfig local = *c;
        if (out_dir) local.out_dir = out_dir;
        pgyro::run(local);
        return PGYRO_OK;
    } catch (const std::exception& e) {
        return classify(e);
    }
}

pgyro_status pgyro_sweep(const pgyro_config* cfg, const char* axes_spec,
                         const char* out_dir, int workers) {
    const auto* c = unwrap(cfg);
    if (!c || !out_dir) return fail(PGYRO_ERR_INVALID, "null argument");
    try {
        std::map<std::string, std::vector<std::string>> axes;
        if (axes_spec && *axes_spec) {
            std::istringstream is(axes_spec);
            std::string axis;
            while (std::getline(is, axis, ';')) {
                if (axis.empty()) continue;
                const auto eq = axis.find('=');
                if (eq == std::string::npos)
                    throw pgyro::ConfigError("axis must be key=v1,v2,...: " +
                                             axis);
                std::vector<std::string> values;
                std::istringstream vs(axis.substr(eq + 1));
                std::string v;
                while (std::getline(vs, v, ',')) values.push_back(v);
                if (values.empty())
                    throw pgyro::ConfigError("axis has no values: " + axis);
                axes[axis.substr(0, eq)] = values;
            }
        }
        pgyro::sweep(*c, axes, out_dir, workers);
        return PGYRO_OK;
    } catch (const std::exception& e) {
        return classify(e);
    }
}

pgyro_status pgyro_analyze(const char* snapshot_path, char* buf, size_t cap,
                           size_t* needed) {
    if (!snapshot_path) return fail(PGYRO_ERR_INVALID, "null path");
    try {
        std::string out;
        for (const auto& [k, v] : pgyro::analyze_snapshot(snapshot_path))
            out += k + " = " + v + "\n";
        return copy_out(out, buf, cap, needed);
    } catch (const std::exception& e) {
        return classify(e);
    }
}

pgyro_status pgyro_metrology_table(int as_csv, char* buf, size_t cap,
                                   size_t* needed) {
    const auto rows = pgyro::comparison_table(pgyro::reference_gyros());
    return copy_out(pgyro::render_comparison(rows, as_csv != 0), buf, cap,
                    needed);
}

double pgyro_sagnac_fiber(double area, double lambda, double omega) {
    return pgyro::sagnac_fiber(area, lambda, omega);
}

double pgyro_sagnac_ring_laser(double area, double perimeter, double lambda,
                               double omega, double t) {
    return pgyro::sagnac_ring_laser(area, perimeter, lambda, omega, t);
}

double pgyro_sagnac_vortex(int l, double omega, double t) {
    return pgyro::sagnac_vortex(l, omega, t);
}

double pgyro_sagnac_ring_bec(double k0, double r, double omega, double t) {
    return pgyro::sagnac_ring_bec(k0, r, omega, t);
}

double pgyro_snr(double phi, double n_rate, double t) {
    return pgyro::snr(phi, n_rate, t);
}

double pgyro_omega_min_vortex(int l, double t, double n_total) {
    pgyro::GyroConfig cfg;
    cfg.kind = pgyro::GyroConfig::Kind::VortexSuperposition;
    cfg.l = l;
    return pgyro::omega_min(cfg, t, n_total);
}

double pgyro_omega_min_ring(double k0, double r, double t, double n_total) {
    pgyro::GyroConfig cfg;
    cfg.kind = pgyro::GyroConfig::Kind::RingBEC;
    cfg.k0 = k0;
    cfg.radius = r;
    return pgyro::omega_min(cfg, t, n_total);
}

} // extern "C"
