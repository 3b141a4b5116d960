#include "pgyro/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

static_assert(std::endian::native == std::endian::little,
              "PGYR snapshot I/O assumes a little-endian host");

namespace pgyro {

namespace {

template <typename T> void put(std::ofstream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T> T get(std::ifstream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    return v;
}

} // namespace

void save_snapshot(const ComplexField& f, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("save_snapshot: cannot open " + path);
    os.write("PGYR", 4);
    put<std::uint32_t>(os, 1);
    put<std::uint32_t>(os, static_cast<std::uint32_t>(f.grid.nx));
    put<std::uint32_t>(os, static_cast<std::uint32_t>(f.grid.ny));
    put<double>(os, f.grid.dx);
    put<double>(os, f.grid.dy);
    put<double>(os, f.t);
    put<std::uint8_t>(os, f.grid.boundary == Boundary::Periodic ? 0 : 1);
    for (const auto& v : f.values) {
        put<double>(os, v.real());
        put<double>(os, v.imag());
    }
    if (!os) throw std::runtime_error("save_snapshot: write failed: " + path);
}

ComplexField load_snapshot(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("load_snapshot: cannot open " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "PGYR", 4) != 0)
        throw std::runtime_error("load_snapshot: bad magic in " + path);
    const auto version = get<std::uint32_t>(is);
    if (version != 1)
        throw std::runtime_error("load_snapshot: unsupported version");
    const auto nx = get<std::uint32_t>(is);
    const auto ny = get<std::uint32_t>(is);
    const double dx = get<double>(is);
    const double dy = get<double>(is);
    const double t = get<double>(is);
    const auto bc = get<std::uint8_t>(is);
    if (!is || nx == 0 || ny == 0 || !(dx > 0.0) || !(dy > 0.0) || bc > 1)
        throw std::runtime_error("load_snapshot: corrupt header in " + path);

    GridSpec g;
    g.nx = static_cast<int>(nx);
    g.ny = static_cast<int>(ny);
    g.dx = dx;
    g.dy = dy;
    g.lx = dx * nx;
    g.ly = dy * ny;
    g.boundary = bc == 0 ? Boundary::Periodic : Boundary::DirichletZero;

    ComplexField f(g);
    f.t = t;
    for (auto& v : f.values) {
        const double re = get<double>(is);
        const double im = get<double>(is);
        v = {re, im};
    }
    if (!is) throw std::runtime_error("load_snapshot: truncated file " + path);
    return f;
}

} // namespace pgyro
