#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace pgyro {

/// Boundary handling for fields sampled on the grid.
enum class Boundary { Periodic, DirichletZero };

/// Uniform 2D grid centered on the origin.
///
/// Sample (i,j) sits at (x_i, y_j) = (-lx/2 + i*dx, -ly/2 + j*dy).
/// With even nx the origin is the grid point i = nx/2 exactly, which keeps
/// vortex cores representable at the domain center.
struct GridSpec {
    int nx = 0;
    int ny = 0;
    double lx = 0.0;
    double ly = 0.0;
    double dx = 0.0;
    double dy = 0.0;
    Boundary boundary = Boundary::Periodic;

    std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }

    /// Row-major storage, x fastest: values[j*nx + i].
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(j) * nx + i;
    }

    double x(int i) const { return -0.5 * lx + i * dx; }
    double y(int j) const { return -0.5 * ly + j * dy; }

    int nearest_i(double xv) const {
        return static_cast<int>(std::lround((xv + 0.5 * lx) / dx));
    }
    int nearest_j(double yv) const {
        return static_cast<int>(std::lround((yv + 0.5 * ly) / dy));
    }

    bool operator==(const GridSpec&) const = default;
};

/// Builds a grid. Rejects nx or ny below 8 and non-positive extents.
GridSpec make_grid(int nx, int ny, double lx, double ly, Boundary boundary);

} // namespace pgyro
