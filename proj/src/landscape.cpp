#include "pgyro/landscape.hpp"

#include <cmath>
#include <complex>
#include <iostream>
#include <numbers>
#include <random>
#include <stdexcept>

namespace pgyro {

Landscape Landscape::trivial() {
    Landscape ls;
    ls.potential = potential_flat();
    ls.pump = [](double, double) { return 0.0; };
    ls.potential_kind = "flat";
    ls.pump_kind = "none";
    return ls;
}

std::vector<double> Landscape::sample_potential(const GridSpec& grid) const {
    std::vector<double> v(grid.size(), 0.0);
    if (!potential) return v;
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i)
            v[grid.index(i, j)] = potential(grid.x(i), grid.y(j));
    return v;
}

std::vector<double> Landscape::sample_pump(const GridSpec& grid) const {
    std::vector<double> v(grid.size(), 0.0);
    if (!pump) return v;
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i)
            v[grid.index(i, j)] = pump(grid.x(i), grid.y(j));
    return v;
}

Sampler potential_flat() {
    return [](double, double) { return 0.0; };
}

std::vector<double> potential_disorder(const DisorderSpec& spec,
                                       const GridSpec& grid) {
    if (spec.rms < 0.0)
        throw std::invalid_argument("potential_disorder: rms < 0");
    if (spec.corr_len <= std::max(grid.dx, grid.dy))
        throw std::invalid_argument(
            "potential_disorder: corr_len must exceed the grid spacing");

    std::vector<double> field(grid.size(), 0.0);
    if (spec.rms == 0.0) return field;

    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (auto& v : field) v = gauss(rng);

    // Separable Gaussian smoothing with kernel std corr_len/2 gives the
    // field an autocorrelation ~ exp(-r^2/corr_len^2). Indices wrap.
    auto smooth = [&](bool along_x) {
        const int n = along_x ? grid.nx : grid.ny;
        const double h = along_x ? grid.dx : grid.dy;
        const double sigma = 0.5 * spec.corr_len;
        const int half = static_cast<int>(std::ceil(4.0 * sigma / h));
        std::vector<double> kernel(2 * half + 1);
        for (int m = -half; m <= half; ++m)
            kernel[m + half] = std::exp(-0.5 * (m * h) * (m * h) / (sigma * sigma));
        std::vector<double> out(field.size(), 0.0);
        for (int j = 0; j < grid.ny; ++j) {
            for (int i = 0; i < grid.nx; ++i) {
                double acc = 0.0;
                for (int m = -half; m <= half; ++m) {
                    int ii = i, jj = j;
                    int& c = along_x ? ii : jj;
                    c = (((c + m) % n) + n) % n;
                    acc += kernel[m + half] * field[grid.index(ii, jj)];
                }
                out[grid.index(i, j)] = acc;
            }
        }
        field = std::move(out);
    };
    smooth(true);
    smooth(false);

    double mean = 0.0;
    for (double v : field) mean += v;
    mean /= static_cast<double>(field.size());
    double var = 0.0;
    for (auto& v : field) {
        v -= mean;
        var += v * v;
    }
    var /= static_cast<double>(field.size());
    const double scale = spec.rms / std::sqrt(var);
    for (auto& v : field) v *= scale;
    return field;
}

Sampler potential_mexican_hat(double v0, double r_min) {
    if (!(v0 > 0.0) || !(r_min > 0.0))
        throw std::invalid_argument("potential_mexican_hat: V0, r_min must be > 0");
    return [v0, r_min](double x, double y) {
        const double q = (x * x + y * y) / (r_min * r_min);
        return v0 * (q * q - 2.0 * q);
    };
}

Sampler potential_kagome(double v0, double k0, double p_param) {
    if (!(v0 > 0.0) || !(k0 > 0.0))
        throw std::invalid_argument("potential_kagome: V0, k0 must be > 0");
    const double denom = 1.0 + 4.0 * p_param / 3.0;
    const double b1x = 1.0 / denom;
    const double b23x = -1.0 / (2.0 * denom);
    const double b23y = std::sqrt(3.0) / 2.0;
    const double fq = k0 * p_param / denom; // argument scale of f1
    return [=](double x, double y) {
        const std::complex<double> iu{0.0, 1.0};
        const std::complex<double> f1 =
            std::exp(iu * (fq * x)) * std::cos(fq * x);
        const std::complex<double> s =
            f1 * std::exp(iu * (k0 * b1x * x)) +
            std::exp(iu * (k0 * (b23x * x - b23y * y))) +
            std::exp(iu * (k0 * (b23x * x + b23y * y)));
        return v0 * std::norm(s);
    };
}

Sampler potential_periodic_1d(double v0, double k0) {
    if (!(v0 > 0.0) || !(k0 > 0.0))
        throw std::invalid_argument("potential_periodic_1d: V0, k0 must be > 0");
    return [v0, k0](double x, double) { return v0 * std::cos(2.0 * k0 * x); };
}

Sampler pump_gaussian(double p0, double r0) {
    if (p0 < 0.0 || !(r0 > 0.0))
        throw std::invalid_argument("pump_gaussian: need P0 >= 0, r0 > 0");
    return [p0, r0](double x, double y) {
        return p0 * std::exp(-(x * x + y * y) / (r0 * r0));
    };
}

Sampler pump_uniform(double p0) {
    if (p0 < 0.0) throw std::invalid_argument("pump_uniform: P0 < 0");
    return [p0](double, double) { return p0; };
}

Sampler pump_periodic(double p0, double k0, double eta, double gamma) {
    if (p0 < 0.0 || eta < 0.0 || gamma < 0.0)
        throw std::invalid_argument("pump_periodic: negative parameter");
    return [=](double x, double) {
        const double c = std::cos(k0 * x);
        return p0 * eta * c * c + gamma;
    };
}

Sampler pump_ring(double p0, double v0, double r_min) {
    if (p0 < 0.0 || !(v0 > 0.0) || !(r_min > 0.0))
        throw std::invalid_argument("pump_ring: need P0 >= 0, V0 > 0, r_min > 0");
    return [=](double x, double y) {
        const double r = std::sqrt(x * x + y * y);
        const double d = r - r_min;
        return p0 * std::exp(-2.0 * std::sqrt(v0) * d * d / r_min);
    };
}

bool commensurate(double length, double k0) {
    const double periods = length * k0 / std::numbers::pi;
    return std::abs(periods - std::round(periods)) < 1e-9;
}

} // namespace pgyro
