#pragma once

#include <string>
#include <vector>

#include "pgyro/grid.hpp"

namespace pgyro {

/// Gyroscope technology descriptor for the comparison table.
struct GyroConfig {
    enum class Kind { FiberOptic, RingLaser, VortexSuperposition, RingBEC };

    Kind kind = Kind::VortexSuperposition;
    std::string label;
    double area = 0.0;      // loop area, m^2
    double perimeter = 0.0; // loop perimeter, m
    double radius = 0.0;    // ring radius, m
    double lambda = 0.0;    // wavelength, m
    double k0 = 0.0;        // wavenumber, 1/m
    int l = 1;              // winding number
    double photon_rate = 0.0; // detected photons per second
    double integration_time = 1.0; // s
};

/// Fiber-optic Sagnac phase: 8 pi A Omega / (lambda c).
double sagnac_fiber(double area, double lambda, double omega);

/// Ring-laser (time-accumulating) phase: 8 pi A Omega t / (lambda p).
double sagnac_ring_laser(double area, double perimeter, double lambda,
                         double omega, double t);

/// Vortex-superposition phase: 2 l Omega t. Independent of area and mass.
double sagnac_vortex(int l, double omega, double t);

/// Revolutions of a ring-current particle in time t: t hbar k0 / (2 pi r m).
double revolutions(double t, double k0, double r, double mass);

/// Loop-BEC phase: n_rev * 4 m A Omega / hbar.
double bec_loop_phase(double n_rev, double mass, double area, double omega);

/// Ring-BEC phase: 2 k0 r Omega t.
double sagnac_ring_bec(double k0, double r, double omega, double t);

/// Shot-noise-limited SNR = phi * sqrt(N_rate * t).
double snr(double phi, double n_rate, double t);

/// Minimum detectable rotation at SNR = 1 from the total detected photon
/// count n_total: 1/(2 l t sqrt(N)) for the vortex kind, 1/(2 k0 r t sqrt(N))
/// for the ring kind, and the corresponding inverse phase coefficient for
/// the optical kinds.
double omega_min(const GyroConfig& cfg, double t, double n_total);

/// Phase accumulated per unit Omega*t for the configuration.
double phase_coefficient(const GyroConfig& cfg);

struct ComparisonRow {
    std::string label;
    std::string kind;
    double coefficient = 0.0; // phase per Omega*t
    double omega_min = 0.0;   // rad/s at the config's N and t
};

std::vector<ComparisonRow> comparison_table(const std::vector<GyroConfig>& configs);

/// Built-in reference configurations: ring laser (1 m^2 loop),
/// cold-atom interferometer, and polariton ring.
std::vector<GyroConfig> reference_gyros();

std::string render_comparison(const std::vector<ComparisonRow>& rows,
                              bool as_csv);

/// Rotation-rate field from a sampled ground-velocity field:
/// Omega = (dx vy - dy vx) / 2, centered differences (one-sided at
/// non-periodic edges).
std::vector<double> ground_rotation(const GridSpec& grid,
                                    const std::vector<double>& vx,
                                    const std::vector<double>& vy);

} // namespace pgyro
