#pragma once

#include <string>

#include "pgyro/field.hpp"

namespace pgyro {

/// Binary field snapshot, little-endian:
///   magic "PGYR", version uint32=1, nx uint32, ny uint32,
///   dx float64, dy float64, t float64, boundary uint8 (0=Periodic,
///   1=Dirichlet), then nx*ny interleaved (re, im) float64 pairs, row-major.
void save_snapshot(const ComplexField& f, const std::string& path);

ComplexField load_snapshot(const std::string& path);

} // namespace pgyro
