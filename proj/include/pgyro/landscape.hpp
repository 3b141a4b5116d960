#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pgyro/grid.hpp"

namespace pgyro {

using Sampler = std::function<double(double, double)>;

/// Paired external potential V_ext(x,y) and pump profile P(x,y).
struct Landscape {
    Sampler potential;
    Sampler pump;
    std::string potential_kind = "flat";
    std::string pump_kind = "none";

    /// Zero potential, zero pump.
    static Landscape trivial();

    std::vector<double> sample_potential(const GridSpec& grid) const;
    std::vector<double> sample_pump(const GridSpec& grid) const;
};

/// Mean-zero Gaussian random field with Gaussian autocorrelation
/// exp(-r^2 / corr_len^2), rescaled to the requested RMS. Deterministic in
/// (seed, grid).
struct DisorderSpec {
    double rms = 0.0;
    double corr_len = 1.0;
    std::uint64_t seed = 0;
};

Sampler potential_flat();

std::vector<double> potential_disorder(const DisorderSpec& spec,
                                       const GridSpec& grid);

/// V = V0 (r^4/r_min^4 - 2 r^2/r_min^2); minimum -V0 at r = r_min.
Sampler potential_mexican_hat(double v0, double r_min);

/// Lowest-order Fourier decomposition of a Kagome lattice:
/// V = V0 |f1(x) e^{i k0 b1.x} + e^{i k0 b2.x} + e^{i k0 b3.x}|^2 with
/// f1(x) = e^{i k0 p x/(1+4p/3)} cos(k0 p x/(1+4p/3)),
/// b1 = (1/(1+4p/3), 0), b2 = (-1/(2+8p/3), -sqrt(3)/2),
/// b3 = (-1/(2+8p/3), sqrt(3)/2), p = 3/2.
Sampler potential_kagome(double v0, double k0, double p_param = 1.5);

/// V = V0 cos(2 k0 x). Warns when lx*k0/pi is not an integer on periodic
/// domains.
Sampler potential_periodic_1d(double v0, double k0);

/// P = P0 exp(-(r/r0)^2).
Sampler pump_gaussian(double p0, double r0);

Sampler pump_uniform(double p0);

/// P = P0 eta cos^2(k0 x) + gamma.
Sampler pump_periodic(double p0, double k0, double eta, double gamma);

/// P = P0 |psi_l|^2 with the annular ring wavefunction; phi-independent:
/// P = P0 exp(-2 sqrt(V0) (r - r_min)^2 / r_min).
Sampler pump_ring(double p0, double v0, double r_min);

/// Warn-only commensurability check used by periodic potentials and pumps.
bool commensurate(double length, double k0);

} // namespace pgyro
