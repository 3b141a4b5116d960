#pragma once

#include <map>
#include <string>
#include <vector>

#include "pgyro/runconfig.hpp"
#include "pgyro/solver.hpp"

namespace pgyro {

/// Landscape described by a RunConfig; disorder realizations are sampled
/// separately (see build_state).
Landscape build_landscape(const RunConfig& c);

ComplexField build_seed(const RunConfig& c, const GridSpec& grid,
                        const Landscape& landscape);

SimState build_state(const RunConfig& c);

std::vector<Observer> build_observers(const RunConfig& c);

/// Ordered key=value pairs of the machine-readable run summary.
using RunSummary = std::vector<std::pair<std::string, std::string>>;

/// Executes one run: PGYR snapshots at the configured cadence, observables
/// CSV, density/phase PGM heatmaps, and summary.txt under c.out_dir.
/// Throws ConfigError for invalid configs; on blow-up rethrows NumericError
/// after writing the last good snapshot.
RunSummary run(const RunConfig& c);

/// 8-bit binary PGM. Density maps linearly 0..max to 0..255; phase maps
/// (-pi, pi] to 0..255.
void write_density_pgm(const ComplexField& f, const std::string& path);
void write_phase_pgm(const ComplexField& f, const std::string& path);

/// Cartesian-product sweep over "section.key" -> value list axes. Each run
/// owns out_dir/run_NNN; summaries aggregate into out_dir/sweep.csv.
/// Runs execute on up to `workers` threads.
std::vector<RunSummary> sweep(const RunConfig& base,
                              const std::map<std::string, std::vector<std::string>>& axes,
                              const std::string& out_dir, int workers = 1);

/// Re-runs field analysis on an existing PGYR snapshot.
RunSummary analyze_snapshot(const std::string& snapshot_path);

void write_summary(const RunSummary& summary, const std::string& path);

} // namespace pgyro
