#include "pgyro/oam.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>

namespace pgyro {

LGParams LGParams::from_waist(double w0, double k) {
    if (!(w0 > 0.0) || !(k > 0.0))
        throw std::invalid_argument("LGParams::from_waist: w0, k must be > 0");
    LGParams p;
    p.k = k;
    p.b = 0.5 * k * w0 * w0;
    return p;
}

double LGParams::waist() const { return std::sqrt(2.0 * b / k); }

double LGParams::w(double z) const {
    return std::sqrt(2.0 * (z * z + b * b) / (k * b));
}

double LGParams::gouy(double z, int l, int p) const {
    return (2 * p + std::abs(l) + 1) * std::atan2(z, b);
}

void LGParams::validate() const {
    if (!(b > 0.0) || !(k > 0.0))
        throw std::invalid_argument("LGParams: b and k must be > 0");
}

void ModeSpec::merge_duplicates() {
    std::vector<ModeTerm> merged;
    for (const auto& t : terms) {
        auto it = std::find_if(merged.begin(), merged.end(), [&](const ModeTerm& m) {
            return m.l == t.l && m.p == t.p;
        });
        if (it != merged.end())
            it->c += t.c;
        else
            merged.push_back(t);
    }
    terms = std::move(merged);
}

double ModeSpec::total_weight() const {
    double s = 0.0;
    for (const auto& t : terms) s += std::norm(t.c);
    return s;
}

bool ModeSpec::is_normalized() const {
    return std::abs(total_weight() - 1.0) <= 1e-12;
}

double laguerre_poly(int p, int l_abs, double r) {
    if (p < 0) throw std::invalid_argument("laguerre_poly: p < 0");
    if (l_abs < 0) throw std::invalid_argument("laguerre_poly: l_abs < 0");
    // term_m = (-1)^m (l+p)! / ((p-m)! (l+m)! m!) r^m, accumulated by the
    // ratio term_{m+1}/term_m = -(p-m) r / ((l+m+1)(m+1)).
    double term = 1.0;
    for (int i = l_abs + 1; i <= l_abs + p; ++i) term *= i;
    for (int i = 2; i <= p; ++i) term /= i; // term_0 = binom(l+p, p)
    double sum = term;
    for (int m = 0; m < p; ++m) {
        term *= -(static_cast<double>(p - m) * r) /
                (static_cast<double>(l_abs + m + 1) * (m + 1));
        sum += term;
    }
    return sum;
}

namespace {

double log_factorial(int n) {
    return std::lgamma(static_cast<double>(n) + 1.0);
}

} // namespace

ComplexField lg_mode(int l, int p, const LGParams& params, double z,
                     const GridSpec& grid) {
    params.validate();
    if (p < 0) throw std::invalid_argument("lg_mode: p < 0");
    const double wz = params.w(z);
    if (std::min(grid.lx, grid.ly) < 6.0 * wz) {
        std::cerr << "pgyro: lg_mode: grid extent < 6 w(z); "
                     "normalization may be inaccurate\n";
    }
    const int la = std::abs(l);
    const double amp0 = std::sqrt(
        2.0 / (std::numbers::pi * wz * wz) *
        std::exp(log_factorial(p) - log_factorial(la + p)));
    const double gouy = params.gouy(z, l, p);
    // Curvature term k r^2 / (2 R); R(z) = (z^2 + b^2)/z, so at z = 0 the
    // limit value is 0.
    const double curv = (z == 0.0)
                            ? 0.0
                            : params.k * z / (2.0 * (z * z + params.b * params.b));

    ComplexField f(grid);
    f.t = 0.0;
    for (int j = 0; j < grid.ny; ++j) {
        const double y = grid.y(j);
        for (int i = 0; i < grid.nx; ++i) {
            const double x = grid.x(i);
            const double r2 = x * x + y * y;
            const double r = std::sqrt(r2);
            const double phi = std::atan2(y, x);
            const double radial = amp0 *
                                  std::pow(std::numbers::sqrt2 * r / wz, la) *
                                  std::exp(-r2 / (wz * wz)) *
                                  laguerre_poly(p, la, 2.0 * r2 / (wz * wz));
            const double ph = -(curv * r2 + l * phi - gouy);
            f.values[grid.index(i, j)] = std::polar(radial, ph);
        }
    }
    return f;
}

namespace {

// 6th-order centered first derivatives along x and y; out-of-range samples
// wrap (Periodic) or read zero (DirichletZero).
ComplexField deriv(const ComplexField& f, bool along_x) {
    const GridSpec& g = f.grid;
    const int n = along_x ? g.nx : g.ny;
    const double h = along_x ? g.dx : g.dy;
    const bool periodic = g.boundary == Boundary::Periodic;
    ComplexField out(g);
    out.t = f.t;
    auto sample = [&](int i, int j, int off) -> cdouble {
        int& c = along_x ? i : j;
        c += off;
        if (periodic)
            c = ((c % n) + n) % n;
        else if (c < 0 || c >= n)
            return {0.0, 0.0};
        return f.values[g.index(i, j)];
    };
    const double inv60h = 1.0 / (60.0 * h);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const cdouble d =
                45.0 * (sample(i, j, 1) - sample(i, j, -1)) -
                9.0 * (sample(i, j, 2) - sample(i, j, -2)) +
                (sample(i, j, 3) - sample(i, j, -3));
            out.values[g.index(i, j)] = d * inv60h;
        }
    }
    return out;
}

// Creation operators of the waist-plane operator algebra:
//   Ax+ f = (k x f - b dx f)/sqrt(2 b k),  Ay+ analogous.
// raise = (Ax+ - i Ay+)/sqrt(2) adds one unit of winding in the e^{-il phi}
// convention; lower = (Ax+ + i Ay+)/sqrt(2) removes one.
ComplexField apply_creation(const ComplexField& f, const LGParams& lg,
                            int winding_sign) {
    const GridSpec& g = f.grid;
    const ComplexField dfx = deriv(f, true);
    const ComplexField dfy = deriv(f, false);
    const double s = 1.0 / std::sqrt(4.0 * lg.b * lg.k);
    const cdouble iu{0.0, 1.0};
    const cdouble sign = winding_sign > 0 ? -iu : iu;
    ComplexField out(g);
    out.t = f.t;
    for (int j = 0; j < g.ny; ++j) {
        const double y = g.y(j);
        for (int i = 0; i < g.nx; ++i) {
            const double x = g.x(i);
            const std::size_t id = g.index(i, j);
            const cdouble ax = lg.k * x * f.values[id] - lg.b * dfx.values[id];
            const cdouble ay = lg.k * y * f.values[id] - lg.b * dfy.values[id];
            out.values[id] = s * (ax + sign * ay);
        }
    }
    return out;
}

} // namespace

ComplexField ladder_lg(int l, int p, const LGParams& params,
                       const GridSpec& grid) {
    params.validate();
    if (p < 0) throw std::invalid_argument("ladder_lg: p < 0");
    const double w0 = params.waist();
    if (grid.dx > w0 / 8.0 || grid.dy > w0 / 8.0)
        throw std::invalid_argument(
            "ladder_lg: grid too coarse for ladder derivatives "
            "(need dx, dy <= w0/8)");

    const int n_plus = p + (std::abs(l) + l) / 2;
    const int n_minus = p + (std::abs(l) - l) / 2;

    ComplexField f = lg_mode(0, 0, params, 0.0, grid);
    for (int i = 0; i < n_plus; ++i) f = apply_creation(f, params, +1);
    for (int i = 0; i < n_minus; ++i) f = apply_creation(f, params, -1);
    // Operator ordering yields (-1)^p relative to the analytic sign
    // convention of the closed-form modes.
    if (p % 2 == 1)
        for (auto& v : f.values) v = -v;
    normalize(f);
    return f;
}

ModeSpec mach_zehnder(int l, int p, double alpha_sq, double beta_sq,
                      double phase) {
    if (alpha_sq < 0.0 || beta_sq < 0.0 ||
        std::abs(alpha_sq + beta_sq - 1.0) > 1e-9)
        throw std::invalid_argument(
            "mach_zehnder: split ratios must be non-negative and sum to 1");
    ModeSpec spec;
    if (alpha_sq > 0.0)
        spec.terms.push_back({l, p, cdouble{std::sqrt(alpha_sq), 0.0}});
    if (beta_sq > 0.0)
        spec.terms.push_back({-l, p, std::polar(std::sqrt(beta_sq), phase)});
    spec.merge_duplicates();
    return spec;
}

ComplexField sample_superposition(const ModeSpec& spec, const LGParams& params,
                                  double z, const GridSpec& grid) {
    ComplexField out(grid);
    for (const auto& t : spec.terms) {
        const ComplexField m = lg_mode(t.l, t.p, params, z, grid);
        for (std::size_t i = 0; i < out.values.size(); ++i)
            out.values[i] += t.c * m.values[i];
    }
    return out;
}

} // namespace pgyro
