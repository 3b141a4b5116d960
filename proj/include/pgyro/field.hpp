#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "pgyro/grid.hpp"

namespace pgyro {

using cdouble = std::complex<double>;

/// Complex order parameter sampled on a GridSpec.
struct ComplexField {
    GridSpec grid;
    std::vector<cdouble> values;
    double t = 0.0;

    ComplexField() = default;
    explicit ComplexField(const GridSpec& g, cdouble fill = {0.0, 0.0})
        : grid(g), values(g.size(), fill) {}

    cdouble& at(int i, int j) { return values[grid.index(i, j)]; }
    const cdouble& at(int i, int j) const { return values[grid.index(i, j)]; }

    bool all_finite() const;
};

/// Pairwise (cascade) summation. Reductions use this fixed order so results
/// are reproducible independent of any data-parallel execution.
double pairwise_sum(const double* data, std::size_t n);

/// Discrete L2 norm: sum |psi_ij|^2 dx dy, midpoint rule.
double field_norm(const ComplexField& f);

/// Element-wise |psi|^2 and principal argument in (-pi, pi].
/// arg of an exact zero is reported as 0.
std::pair<std::vector<double>, std::vector<double>>
density_and_phase(const ComplexField& f);

/// Bilinear interpolation of the complex field at a physical point.
/// Out-of-range points wrap (Periodic) or evaluate to zero (DirichletZero).
cdouble interpolate(const ComplexField& f, double x, double y);

/// Normalizes the field so field_norm == 1. Throws if the field is zero.
void normalize(ComplexField& f);

} // namespace pgyro
