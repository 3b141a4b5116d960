#include "pgyro/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pgyro {

void ObservableSeries::set_names(std::vector<std::string> n) {
    names = std::move(n);
    channels.assign(names.size(), {});
}

void ObservableSeries::add_sample(double t, const std::vector<double>& values) {
    if (values.size() != names.size())
        throw std::invalid_argument("ObservableSeries: sample size mismatch");
    if (!times.empty() && t <= times.back())
        throw std::invalid_argument("ObservableSeries: times must increase");
    times.push_back(t);
    for (std::size_t c = 0; c < values.size(); ++c)
        channels[c].push_back(values[c]);
}

const std::vector<double>&
ObservableSeries::channel(const std::string& name) const {
    for (std::size_t c = 0; c < names.size(); ++c)
        if (names[c] == name) return channels[c];
    throw std::invalid_argument("ObservableSeries: no channel " + name);
}

bool ObservableSeries::has_channel(const std::string& name) const {
    return std::find(names.begin(), names.end(), name) != names.end();
}

void ObservableSeries::write_csv(std::ostream& os) const {
    os << "t";
    for (const auto& n : names) os << "," << n;
    os << "\n";
    os.precision(17);
    for (std::size_t k = 0; k < times.size(); ++k) {
        os << times[k];
        for (const auto& ch : channels) os << "," << ch[k];
        os << "\n";
    }
}

int phase_winding(const ComplexField& f, double cx, double cy, double radius) {
    const int nsamp = std::max(
        64, 8 * static_cast<int>(std::ceil(2.0 * std::numbers::pi * radius /
                                           std::min(f.grid.dx, f.grid.dy))));
    std::vector<cdouble> ring(nsamp);
    double peak = 0.0;
    for (int m = 0; m < nsamp; ++m) {
        const double phi = 2.0 * std::numbers::pi * m / nsamp;
        ring[m] = interpolate(f, cx + radius * std::cos(phi),
                              cy + radius * std::sin(phi));
        peak = std::max(peak, std::abs(ring[m]));
    }
    const double floor = 1e-8 * peak;
    double total = 0.0;
    for (int m = 0; m < nsamp; ++m) {
        const cdouble a = ring[m];
        const cdouble b = ring[(m + 1) % nsamp];
        if (std::abs(a) <= floor || std::abs(b) <= floor)
            throw std::runtime_error(
                "phase_winding: density below floor on sampling circle");
        total += std::arg(b / a);
    }
    return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

AngularProfile angular_profile(const ComplexField& f, double radius,
                               int nbins) {
    if (nbins < 8) throw std::invalid_argument("angular_profile: nbins < 8");
    AngularProfile prof;
    prof.radius = radius;
    prof.nbins = nbins;
    prof.values.assign(nbins, 0.0);
    // Annulus half-width fixed at 2*dx. The integral over each angular
    // sector is quadrature over interpolated samples so that bins narrower
    // than the grid spacing stay well defined.
    const double h = std::min(f.grid.dx, f.grid.dy);
    const double half = 2.0 * h;
    const int nr = 9;
    const double dr = 2.0 * half / (nr - 1);
    const double binw = 2.0 * std::numbers::pi / nbins;
    const int nsub = std::max(
        1, static_cast<int>(std::ceil(binw * (radius + half) / (0.5 * h))));
    for (int b = 0; b < nbins; ++b) {
        double acc = 0.0;
        for (int q = 0; q < nsub; ++q) {
            const double phi = (b + (q + 0.5) / nsub) * binw;
            const double c = std::cos(phi), s = std::sin(phi);
            for (int m = 0; m < nr; ++m) {
                const double r = radius - half + m * dr;
                if (r < 0.0) continue;
                acc += std::norm(interpolate(f, r * c, r * s)) * r * dr *
                       binw / nsub;
            }
        }
        prof.values[b] = acc;
    }
    return prof;
}

namespace {

// Strict-on-the-left local maxima of a circular profile whose prominence
// (drop to the higher of the two flanking minima, walking until a taller
// value is met) reaches 10% of the profile maximum.
std::vector<int> lobe_maxima_bins(const AngularProfile& profile) {
    const auto& v = profile.values;
    const int n = profile.nbins;
    std::vector<int> maxima;
    const double vmax = *std::max_element(v.begin(), v.end());
    if (!(vmax > 0.0)) return maxima;
    const double prominence = 0.1 * vmax;
    for (int i = 0; i < n; ++i) {
        if (!(v[i] > v[(i + n - 1) % n] && v[i] >= v[(i + 1) % n])) continue;
        double left_min = v[i];
        for (int s = 1; s < n; ++s) {
            const double w = v[(i + n - s) % n];
            if (w > v[i]) break;
            left_min = std::min(left_min, w);
        }
        double right_min = v[i];
        for (int s = 1; s < n; ++s) {
            const double w = v[(i + s) % n];
            if (w > v[i]) break;
            right_min = std::min(right_min, w);
        }
        if (v[i] - std::max(left_min, right_min) >= prominence)
            maxima.push_back(i);
    }
    return maxima;
}

} // namespace

LobeStats lobe_stats(const AngularProfile& profile) {
    const auto& v = profile.values;
    LobeStats st;
    const double vmax = *std::max_element(v.begin(), v.end());
    const double vmin = *std::min_element(v.begin(), v.end());
    st.contrast = (vmax + vmin) > 0.0 ? (vmax - vmin) / (vmax + vmin) : 0.0;
    st.count = static_cast<int>(lobe_maxima_bins(profile).size());
    return st;
}

double interlobe_phase(const ComplexField& f, const AngularProfile& profile) {
    const auto maxima = lobe_maxima_bins(profile);
    if (maxima.size() < 2)
        throw std::runtime_error("interlobe_phase: fewer than 2 lobes");
    const double binw = 2.0 * std::numbers::pi / profile.nbins;
    double acc = 0.0;
    for (std::size_t m = 0; m < maxima.size(); ++m) {
        const double phi_a = (maxima[m] + 0.5) * binw;
        const double phi_b =
            (maxima[(m + 1) % maxima.size()] + 0.5) * binw;
        const cdouble a = interpolate(f, profile.radius * std::cos(phi_a),
                                      profile.radius * std::sin(phi_a));
        const cdouble b = interpolate(f, profile.radius * std::cos(phi_b),
                                      profile.radius * std::sin(phi_b));
        acc += std::abs(std::arg(b / a));
    }
    return acc / static_cast<double>(maxima.size());
}

std::vector<double>
momentum_populations(const ComplexField& f,
                     const std::vector<std::pair<double, double>>& targets) {
    const GridSpec& g = f.grid;
    if (g.boundary != Boundary::Periodic)
        throw std::invalid_argument(
            "momentum_populations: requires periodic boundaries");
    const double kx_unit = 2.0 * std::numbers::pi / g.lx;
    const double ky_unit = 2.0 * std::numbers::pi / g.ly;
    for (const auto& [kx, ky] : targets) {
        const double nxk = kx / kx_unit, nyk = ky / ky_unit;
        if (std::abs(nxk - std::round(nxk)) > 1e-6 ||
            std::abs(nyk - std::round(nyk)) > 1e-6)
            throw std::invalid_argument(
                "momentum_populations: target off the reciprocal lattice");
    }
    double total = 0.0;
    for (const auto& v : f.values) total += std::norm(v);
    std::vector<double> fractions(targets.size(), 0.0);
    if (total <= 0.0) return fractions;
    const double n = static_cast<double>(g.size());
    for (std::size_t q = 0; q < targets.size(); ++q) {
        const auto [kx, ky] = targets[q];
        cdouble amp{0.0, 0.0};
        for (int j = 0; j < g.ny; ++j) {
            const double y = g.y(j);
            for (int i = 0; i < g.nx; ++i) {
                const double x = g.x(i);
                amp += f.values[g.index(i, j)] *
                       std::polar(1.0, -(kx * x + ky * y));
            }
        }
        amp /= n;
        // Parseval: sum_k |A_k|^2 = sum |psi|^2 / n.
        fractions[q] = std::norm(amp) * n / total;
    }
    return fractions;
}

bool steady_state_reached(const ObservableSeries& series, double eps,
                          double window) {
    if (!series.has_channel("peak_density") || series.times.size() < 2)
        return false;
    const auto& d = series.channel("peak_density");
    const double t_end = series.times.back();
    const double ref = d.back();
    // Densities are in units of the homogeneous equilibrium density, so the
    // change is measured against the larger of the channel value and 1.
    const double scale = std::max(std::abs(ref), 1.0);
    int used = 0;
    for (std::size_t k = 0; k < series.times.size(); ++k) {
        if (series.times[k] < t_end - window) continue;
        ++used;
        if (std::abs(d[k] - ref) / scale > eps) return false;
    }
    return used >= 2;
}

ComplexField synth_rotated_pattern(const ComplexField& f, int l, double omega,
                                   double t) {
    ComplexField out = f;
    const GridSpec& g = f.grid;
    for (int j = 0; j < g.ny; ++j) {
        const double y = g.y(j);
        for (int i = 0; i < g.nx; ++i) {
            const double x = g.x(i);
            const double phi = std::atan2(y, x);
            const double mod = 1.0 + std::cos(2.0 * l * (phi + omega * t));
            out.values[g.index(i, j)] *= std::sqrt(std::max(mod, 0.0));
        }
    }
    return out;
}

double estimate_rotation(const AngularProfile& before,
                         const AngularProfile& after, int l) {
    if (before.nbins != after.nbins ||
        std::abs(before.radius - after.radius) > 1e-12)
        throw std::invalid_argument(
            "estimate_rotation: profiles must share radius and binning");
    if (l < 1) throw std::invalid_argument("estimate_rotation: l < 1");
    if (lobe_stats(before).contrast < 0.1 || lobe_stats(after).contrast < 0.1)
        throw std::runtime_error("estimate_rotation: contrast below threshold");

    const int n = before.nbins;
    auto corr = [&](int s) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i)
            acc += after.values[i] * before.values[(i + s) % n];
        return acc;
    };
    int best = 0;
    double best_val = corr(0);
    for (int s = 1; s < n; ++s) {
        const double c = corr(s);
        if (c > best_val) {
            best_val = c;
            best = s;
        }
    }
    // Quadratic sub-bin refinement around the correlation peak.
    const double cm = corr((best + n - 1) % n);
    const double cp = corr((best + 1) % n);
    double frac = 0.0;
    const double denom = cm - 2.0 * best_val + cp;
    if (denom < 0.0) frac = 0.5 * (cm - cp) / denom;
    const double binw = 2.0 * std::numbers::pi / n;
    double angle = (best + frac) * binw;
    // Identifiable only modulo pi/l by lobe symmetry.
    const double period = std::numbers::pi / l;
    angle = std::fmod(angle, period);
    if (angle < 0.0) angle += period;
    if (period - angle < 0.5 * binw) angle = 0.0; // snap wrap-around to 0
    return angle;
}

double peak_density_radius(const ComplexField& f) {
    const GridSpec& g = f.grid;
    const double rmax = 0.5 * std::min(g.lx, g.ly);
    const double dr = std::min(g.dx, g.dy);
    const int nr = static_cast<int>(rmax / dr);
    std::vector<double> sum(nr, 0.0);
    std::vector<int> cnt(nr, 0);
    for (int j = 0; j < g.ny; ++j) {
        const double y = g.y(j);
        for (int i = 0; i < g.nx; ++i) {
            const double x = g.x(i);
            const int b = static_cast<int>(std::sqrt(x * x + y * y) / dr);
            if (b >= nr) continue;
            sum[b] += std::norm(f.values[g.index(i, j)]);
            ++cnt[b];
        }
    }
    int best = 0;
    double best_val = -1.0;
    for (int b = 0; b < nr; ++b) {
        if (cnt[b] == 0) continue;
        const double v = sum[b] / cnt[b];
        if (v > best_val) {
            best_val = v;
            best = b;
        }
    }
    return (best + 0.5) * dr;
}

} // namespace pgyro
