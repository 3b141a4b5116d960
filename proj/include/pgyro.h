/* C API for the polariton gyroscope simulation library.
 *
 * All functions returning pgyro_status set a thread-local error message
 * retrievable via pgyro_last_error(). Handles are opaque; free them with
 * the matching _free function. String-returning calls follow the
 * buffer/needed pattern: pass buf = NULL (or a too-small cap) to query the
 * required size via *needed (including the NUL terminator).
 */
#ifndef PGYRO_H
#define PGYRO_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    PGYRO_OK = 0,
    PGYRO_ERR_CONFIG = 1,  /* invalid configuration */
    PGYRO_ERR_NUMERIC = 2, /* blow-up / numerical failure */
    PGYRO_ERR_IO = 3,      /* filesystem failure */
    PGYRO_ERR_INVALID = 4  /* bad argument (null handle, bad buffer) */
} pgyro_status;

typedef struct pgyro_config pgyro_config;

/* Message for the most recent failure on this thread; never NULL. */
const char* pgyro_last_error(void);

/* ---- run configuration ---- */

pgyro_config* pgyro_config_default(void);
pgyro_config* pgyro_config_preset(const char* name);
pgyro_config* pgyro_config_load(const char* path);
void pgyro_config_free(pgyro_config* cfg);

/* dotted_key is "section.key", e.g. "params.g". */
pgyro_status pgyro_config_set(pgyro_config* cfg, const char* dotted_key,
                              const char* value);
pgyro_status pgyro_config_save(const pgyro_config* cfg, const char* path);
pgyro_status pgyro_config_serialize(const pgyro_config* cfg, char* buf,
                                    size_t cap, size_t* needed);

/* Newline-separated preset names. */
pgyro_status pgyro_preset_names(char* buf, size_t cap, size_t* needed);

/* ---- execution ---- */

/* Runs one simulation; artifacts land in out_dir (NULL keeps the config's
 * output directory). */
pgyro_status pgyro_run(const pgyro_config* cfg, const char* out_dir);

/* axes_spec: semicolon-separated axes "section.key=v1,v2,...". */
pgyro_status pgyro_sweep(const pgyro_config* cfg, const char* axes_spec,
                         const char* out_dir, int workers);

/* Field analysis of an existing PGYR snapshot; result is key = value text. */
pgyro_status pgyro_analyze(const char* snapshot_path, char* buf, size_t cap,
                           size_t* needed);

/* ---- metrology ---- */

/* Comparison table over the built-in reference gyroscope configurations. */
pgyro_status pgyro_metrology_table(int as_csv, char* buf, size_t cap,
                                   size_t* needed);

double pgyro_sagnac_fiber(double area, double lambda, double omega);
double pgyro_sagnac_ring_laser(double area, double perimeter, double lambda,
                               double omega, double t);
double pgyro_sagnac_vortex(int l, double omega, double t);
double pgyro_sagnac_ring_bec(double k0, double r, double omega, double t);
double pgyro_snr(double phi, double n_rate, double t);
double pgyro_omega_min_vortex(int l, double t, double n_total);
double pgyro_omega_min_ring(double k0, double r, double t, double n_total);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PGYRO_H */
