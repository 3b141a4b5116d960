#include "pgyro/metrology.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "pgyro/constants.hpp"

namespace pgyro {

using constants::c_light;
using constants::hbar;

double sagnac_fiber(double area, double lambda, double omega) {
    if (!(area > 0.0) || !(lambda > 0.0))
        throw std::invalid_argument("sagnac_fiber: area, lambda must be > 0");
    return 8.0 * std::numbers::pi * area * omega / (lambda * c_light);
}

double sagnac_ring_laser(double area, double perimeter, double lambda,
                         double omega, double t) {
    if (!(area > 0.0) || !(perimeter > 0.0) || !(lambda > 0.0))
        throw std::invalid_argument("sagnac_ring_laser: bad geometry");
    return 8.0 * std::numbers::pi * area * omega * t / (lambda * perimeter);
}

double sagnac_vortex(int l, double omega, double t) {
    return 2.0 * l * omega * t;
}

double revolutions(double t, double k0, double r, double mass) {
    if (!(r > 0.0) || !(mass > 0.0))
        throw std::invalid_argument("revolutions: r, mass must be > 0");
    return t * hbar * k0 / (2.0 * std::numbers::pi * r * mass);
}

double bec_loop_phase(double n_rev, double mass, double area, double omega) {
    return n_rev * 4.0 * mass * area * omega / hbar;
}

double sagnac_ring_bec(double k0, double r, double omega, double t) {
    return 2.0 * k0 * r * omega * t;
}

double snr(double phi, double n_rate, double t) {
    if (n_rate < 0.0 || t < 0.0)
        throw std::invalid_argument("snr: negative rate or time");
    return phi * std::sqrt(n_rate * t);
}

double phase_coefficient(const GyroConfig& cfg) {
    switch (cfg.kind) {
    case GyroConfig::Kind::FiberOptic:
        // Per Omega (not time-accumulating); reported on the common
        // 8 pi A/(lambda p) footing when a perimeter is given.
        return cfg.perimeter > 0.0
                   ? 8.0 * std::numbers::pi * cfg.area /
                         (cfg.lambda * cfg.perimeter)
                   : 8.0 * std::numbers::pi * cfg.area / (cfg.lambda * c_light);
    case GyroConfig::Kind::RingLaser:
        return 8.0 * std::numbers::pi * cfg.area /
               (cfg.lambda * cfg.perimeter);
    case GyroConfig::Kind::VortexSuperposition:
        return 2.0 * cfg.l;
    case GyroConfig::Kind::RingBEC:
        return 2.0 * cfg.k0 * cfg.radius;
    }
    throw std::logic_error("phase_coefficient: unknown kind");
}

double omega_min(const GyroConfig& cfg, double t, double n_total) {
    if (!(t > 0.0) || !(n_total > 0.0))
        throw std::invalid_argument("omega_min: t, n_total must be > 0");
    const double coeff = phase_coefficient(cfg);
    if (!(coeff > 0.0)) throw std::invalid_argument("omega_min: zero coefficient");
    return 1.0 / (coeff * t * std::sqrt(n_total));
}

std::vector<ComparisonRow>
comparison_table(const std::vector<GyroConfig>& configs) {
    std::vector<ComparisonRow> rows;
    for (const auto& cfg : configs) {
        ComparisonRow row;
        row.label = cfg.label;
        switch (cfg.kind) {
        case GyroConfig::Kind::FiberOptic: row.kind = "fiber-optic"; break;
        case GyroConfig::Kind::RingLaser: row.kind = "ring-laser"; break;
        case GyroConfig::Kind::VortexSuperposition:
            row.kind = "vortex-superposition";
            break;
        case GyroConfig::Kind::RingBEC: row.kind = "ring-bec"; break;
        }
        row.coefficient = phase_coefficient(cfg);
        row.omega_min = omega_min(cfg, cfg.integration_time,
                                  cfg.photon_rate * cfg.integration_time);
        rows.push_back(row);
    }
    return rows;
}

std::vector<GyroConfig> reference_gyros() {
    std::vector<GyroConfig> configs;

    GyroConfig ring_laser;
    ring_laser.kind = GyroConfig::Kind::RingLaser;
    ring_laser.label = "ring-laser (optical)";
    ring_laser.area = 1.0;
    ring_laser.perimeter = 1.0;
    ring_laser.lambda = 0.5e-6;
    ring_laser.photon_rate = 1e14;
    ring_laser.integration_time = 1.0;
    configs.push_back(ring_laser);

    GyroConfig cold_atom;
    cold_atom.kind = GyroConfig::Kind::RingLaser;
    cold_atom.label = "cold-atom interferometer";
    cold_atom.area = 1e-6;   // 1 mm^2
    cold_atom.perimeter = 1e-2; // 1 cm
    // de Broglie wavelength h/(m v) for Rb-87 at 1 m/s.
    cold_atom.lambda = constants::planck_h / (1.443e-25 * 1.0);
    cold_atom.photon_rate = 1e6;
    cold_atom.integration_time = 1.0;
    configs.push_back(cold_atom);

    GyroConfig polariton;
    polariton.kind = GyroConfig::Kind::RingBEC;
    polariton.label = "polariton ring";
    polariton.k0 = 1e7;      // 10 um^-1
    polariton.radius = 1e-4; // 100 um
    polariton.photon_rate = 1e14;
    polariton.integration_time = 1.0;
    configs.push_back(polariton);

    return configs;
}

std::string render_comparison(const std::vector<ComparisonRow>& rows,
                              bool as_csv) {
    std::ostringstream os;
    if (as_csv) {
        os << "label,kind,phase_coefficient,omega_min\n";
        os << std::scientific << std::setprecision(6);
        for (const auto& r : rows)
            os << r.label << "," << r.kind << "," << r.coefficient << ","
               << r.omega_min << "\n";
        return os.str();
    }
    os << std::left << std::setw(28) << "label" << std::setw(24) << "kind"
       << std::setw(16) << "phi/(Omega t)" << "omega_min [rad/s]\n";
    os << std::scientific << std::setprecision(3);
    for (const auto& r : rows)
        os << std::left << std::setw(28) << r.label << std::setw(24) << r.kind
           << std::setw(16) << r.coefficient << r.omega_min << "\n";
    return os.str();
}

std::vector<double> ground_rotation(const GridSpec& grid,
                                    const std::vector<double>& vx,
                                    const std::vector<double>& vy) {
    if (vx.size() != grid.size() || vy.size() != grid.size())
        throw std::invalid_argument("ground_rotation: field size mismatch");
    std::vector<double> omega(grid.size(), 0.0);
    const bool periodic = grid.boundary == Boundary::Periodic;
    auto dxc = [&](const std::vector<double>& f, int i, int j) {
        if (periodic) {
            const int ip = (i + 1) % grid.nx, im = (i + grid.nx - 1) % grid.nx;
            return (f[grid.index(ip, j)] - f[grid.index(im, j)]) /
                   (2.0 * grid.dx);
        }
        if (i == 0)
            return (f[grid.index(1, j)] - f[grid.index(0, j)]) / grid.dx;
        if (i == grid.nx - 1)
            return (f[grid.index(i, j)] - f[grid.index(i - 1, j)]) / grid.dx;
        return (f[grid.index(i + 1, j)] - f[grid.index(i - 1, j)]) /
               (2.0 * grid.dx);
    };
    auto dyc = [&](const std::vector<double>& f, int i, int j) {
        if (periodic) {
            const int jp = (j + 1) % grid.ny, jm = (j + grid.ny - 1) % grid.ny;
            return (f[grid.index(i, jp)] - f[grid.index(i, jm)]) /
                   (2.0 * grid.dy);
        }
        if (j == 0)
            return (f[grid.index(i, 1)] - f[grid.index(i, 0)]) / grid.dy;
        if (j == grid.ny - 1)
            return (f[grid.index(i, j)] - f[grid.index(i, j - 1)]) / grid.dy;
        return (f[grid.index(i, j + 1)] - f[grid.index(i, j - 1)]) /
               (2.0 * grid.dy);
    };
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i)
            omega[grid.index(i, j)] =
                0.5 * (dxc(vy, i, j) - dyc(vx, i, j));
    return omega;
}

} // namespace pgyro
