#include "pgyro/field.hpp"

#include <cmath>
#include <stdexcept>

namespace pgyro {

GridSpec make_grid(int nx, int ny, double lx, double ly, Boundary boundary) {
    if (nx < 8 || ny < 8)
        throw std::invalid_argument("make_grid: nx and ny must be >= 8");
    if (!(lx > 0.0) || !(ly > 0.0))
        throw std::invalid_argument("make_grid: lx and ly must be > 0");
    GridSpec g;
    g.nx = nx;
    g.ny = ny;
    g.lx = lx;
    g.ly = ly;
    g.dx = lx / nx;
    g.dy = ly / ny;
    g.boundary = boundary;
    return g;
}

bool ComplexField::all_finite() const {
    for (const auto& v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
    return true;
}

double pairwise_sum(const double* data, std::size_t n) {
    if (n == 0) return 0.0;
    if (n <= 16) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += data[i];
        return s;
    }
    std::size_t half = n / 2;
    return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

double field_norm(const ComplexField& f) {
    std::vector<double> dens(f.values.size());
    for (std::size_t i = 0; i < f.values.size(); ++i)
        dens[i] = std::norm(f.values[i]);
    return pairwise_sum(dens.data(), dens.size()) * f.grid.dx * f.grid.dy;
}

std::pair<std::vector<double>, std::vector<double>>
density_and_phase(const ComplexField& f) {
    std::vector<double> dens(f.values.size()), phase(f.values.size());
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const cdouble v = f.values[i];
        dens[i] = std::norm(v);
        phase[i] = (v == cdouble{0.0, 0.0}) ? 0.0 : std::arg(v);
    }
    return {std::move(dens), std::move(phase)};
}

namespace {

cdouble sample_wrapped(const ComplexField& f, int i, int j) {
    const GridSpec& g = f.grid;
    if (g.boundary == Boundary::Periodic) {
        i = ((i % g.nx) + g.nx) % g.nx;
        j = ((j % g.ny) + g.ny) % g.ny;
        return f.values[g.index(i, j)];
    }
    if (i < 0 || i >= g.nx || j < 0 || j >= g.ny) return {0.0, 0.0};
    return f.values[g.index(i, j)];
}

} // namespace

cdouble interpolate(const ComplexField& f, double x, double y) {
    const GridSpec& g = f.grid;
    const double fi = (x + 0.5 * g.lx) / g.dx;
    const double fj = (y + 0.5 * g.ly) / g.dy;
    const int i0 = static_cast<int>(std::floor(fi));
    const int j0 = static_cast<int>(std::floor(fj));
    const double tx = fi - i0;
    const double ty = fj - j0;
    const cdouble v00 = sample_wrapped(f, i0, j0);
    const cdouble v10 = sample_wrapped(f, i0 + 1, j0);
    const cdouble v01 = sample_wrapped(f, i0, j0 + 1);
    const cdouble v11 = sample_wrapped(f, i0 + 1, j0 + 1);
    return v00 * ((1 - tx) * (1 - ty)) + v10 * (tx * (1 - ty)) +
           v01 * ((1 - tx) * ty) + v11 * (tx * ty);
}

void normalize(ComplexField& f) {
    const double n = field_norm(f);
    if (!(n > 0.0)) throw std::runtime_error("normalize: zero field");
    const double s = 1.0 / std::sqrt(n);
    for (auto& v : f.values) v *= s;
}

} // namespace pgyro
