#include "pgyro/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace pgyro {

namespace {

// 4th-order centered Laplacian, honoring the grid boundary condition.
// Stencil per axis: (-1/12, 4/3, -5/2, 4/3, -1/12)/h^2.
void laplacian(const GridSpec& g, const std::vector<cdouble>& in,
               std::vector<cdouble>& out) {
    const int nx = g.nx, ny = g.ny;
    const bool periodic = g.boundary == Boundary::Periodic;
    const double cx1 = 4.0 / 3.0 / (g.dx * g.dx);
    const double cx2 = -1.0 / 12.0 / (g.dx * g.dx);
    const double cy1 = 4.0 / 3.0 / (g.dy * g.dy);
    const double cy2 = -1.0 / 12.0 / (g.dy * g.dy);
    const double c0 = -2.5 / (g.dx * g.dx) - 2.5 / (g.dy * g.dy);

    auto wrap = [](int c, int n) { return ((c % n) + n) % n; };
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            cdouble acc = c0 * in[g.index(i, j)];
            if (periodic) {
                acc += cx1 * (in[g.index(wrap(i - 1, nx), j)] +
                              in[g.index(wrap(i + 1, nx), j)]);
                acc += cx2 * (in[g.index(wrap(i - 2, nx), j)] +
                              in[g.index(wrap(i + 2, nx), j)]);
                acc += cy1 * (in[g.index(i, wrap(j - 1, ny))] +
                              in[g.index(i, wrap(j + 1, ny))]);
                acc += cy2 * (in[g.index(i, wrap(j - 2, ny))] +
                              in[g.index(i, wrap(j + 2, ny))]);
            } else {
                auto at = [&](int ii, int jj) -> cdouble {
                    if (ii < 0 || ii >= nx || jj < 0 || jj >= ny)
                        return {0.0, 0.0};
                    return in[g.index(ii, jj)];
                };
                acc += cx1 * (at(i - 1, j) + at(i + 1, j));
                acc += cx2 * (at(i - 2, j) + at(i + 2, j));
                acc += cy1 * (at(i, j - 1) + at(i, j + 1));
                acc += cy2 * (at(i, j - 2) + at(i, j + 2));
            }
            out[g.index(i, j)] = acc;
        }
    }
}

// dGPE right-hand side:
// psi_t = i lap psi - i (V + g|psi|^2) psi + 0.5 (P - gamma - eta|psi|^2) psi
void rhs(const SimState& s, const std::vector<cdouble>& in,
         std::vector<cdouble>& lap, std::vector<cdouble>& out) {
    const GridSpec& g = s.field.grid;
    laplacian(g, in, lap);
    const double gg = s.params.g;
    const double gamma = s.params.gamma;
    const double eta = s.params.eta;
    const cdouble iu{0.0, 1.0};
    for (std::size_t n = 0; n < in.size(); ++n) {
        const double dens = std::norm(in[n]);
        const cdouble lin = iu * lap[n];
        const cdouble pot = -iu * (s.potential[n] + gg * dens) * in[n];
        const cdouble gain = 0.5 * (s.pump[n] - gamma - eta * dens) * in[n];
        out[n] = lin + pot + gain;
    }
}

void check_finite(const SimState& s, double dt) {
    if (s.field.all_finite()) return;
    std::ostringstream os;
    os << "dGPE blow-up: non-finite value at step " << s.step_count
       << ", t = " << s.field.t << ", dt = " << dt;
    throw NumericError(os.str());
}

void step_rk4(SimState& s, double dt) {
    const std::size_t n = s.field.values.size();
    std::vector<cdouble> lap(n), k1(n), k2(n), k3(n), k4(n), tmp(n);
    const auto& y = s.field.values;

    rhs(s, y, lap, k1);
    for (std::size_t m = 0; m < n; ++m) tmp[m] = y[m] + 0.5 * dt * k1[m];
    rhs(s, tmp, lap, k2);
    for (std::size_t m = 0; m < n; ++m) tmp[m] = y[m] + 0.5 * dt * k2[m];
    rhs(s, tmp, lap, k3);
    for (std::size_t m = 0; m < n; ++m) tmp[m] = y[m] + dt * k3[m];
    rhs(s, tmp, lap, k4);
    for (std::size_t m = 0; m < n; ++m)
        s.field.values[m] =
            y[m] + dt / 6.0 * (k1[m] + 2.0 * k2[m] + 2.0 * k3[m] + k4[m]);
}

// Split-component Taylor scheme: the field's temporal Taylor coefficients
// are generated by substituting time derivatives back through the coupled
// equations. The cubic term propagates exactly via Cauchy products:
//   (k+1) psi_{k+1} = i lap psi_k - i V psi_k + (P - gamma)/2 psi_k
//                     + (-i g - eta/2) sum_{a+b+c=k} psi_a conj(psi_b) psi_c
// The update is the degree-4 Taylor polynomial at dt.
void step_gfdtd(SimState& s, double dt) {
    constexpr int order = 4;
    const GridSpec& g = s.field.grid;
    const std::size_t n = s.field.values.size();
    std::vector<std::vector<cdouble>> coef(order + 1,
                                           std::vector<cdouble>(n));
    coef[0] = s.field.values;
    std::vector<cdouble> lap(n);
    const double gg = s.params.g;
    const double gamma = s.params.gamma;
    const double eta = s.params.eta;
    const cdouble iu{0.0, 1.0};
    const cdouble cubic_coef = -iu * gg - 0.5 * eta;

    for (int k = 0; k < order; ++k) {
        laplacian(g, coef[k], lap);
        auto& next = coef[k + 1];
        for (std::size_t m = 0; m < n; ++m) {
            cdouble cubic{0.0, 0.0};
            for (int a = 0; a <= k; ++a)
                for (int b = 0; a + b <= k; ++b)
                    cubic += coef[a][m] * std::conj(coef[b][m]) *
                             coef[k - a - b][m];
            next[m] = (iu * lap[m] - iu * s.potential[m] * coef[k][m] +
                       0.5 * (s.pump[m] - gamma) * coef[k][m] +
                       cubic_coef * cubic) /
                      static_cast<double>(k + 1);
        }
    }
    for (std::size_t m = 0; m < n; ++m) {
        cdouble acc = coef[order][m];
        for (int k = order - 1; k >= 0; --k) acc = coef[k][m] + acc * dt;
        // Horner in dt starting from the highest coefficient; the first
        // multiply folds in dt^1 for coef[order].
        s.field.values[m] = acc;
    }
}

} // namespace

SimState make_state(ComplexField field, const SimParams& params,
                    const Landscape& landscape) {
    params.validate();
    SimState s;
    s.field = std::move(field);
    s.params = params;
    s.landscape = landscape;
    s.potential = landscape.sample_potential(s.field.grid);
    s.pump = landscape.sample_pump(s.field.grid);
    for (double p : s.pump)
        if (p < 0.0) throw std::invalid_argument("make_state: negative pump");
    return s;
}

SimState make_state(ComplexField field, const SimParams& params,
                    const Landscape& landscape,
                    std::vector<double> sampled_potential) {
    SimState s = make_state(std::move(field), params, landscape);
    if (sampled_potential.size() != s.field.grid.size())
        throw std::invalid_argument("make_state: sampled potential size");
    s.potential = std::move(sampled_potential);
    return s;
}

ComplexField seed_vortex_superposition(int l, const GridSpec& grid,
                                       const Landscape& landscape,
                                       const SimParams& params,
                                       const LGParams& lg) {
    if (!(params.eta > 0.0))
        throw std::invalid_argument("seed_vortex_superposition: eta must be > 0");
    const ComplexField up = lg_mode(l, 0, lg, 0.0, grid);
    const ComplexField dn = lg_mode(-l, 0, lg, 0.0, grid);
    ComplexField seed(grid);
    const double inv = 1.0 / (std::numbers::sqrt2 * params.eta);
    for (int j = 0; j < grid.ny; ++j) {
        const double y = grid.y(j);
        for (int i = 0; i < grid.nx; ++i) {
            const double x = grid.x(i);
            const std::size_t m = grid.index(i, j);
            const double p = landscape.pump ? landscape.pump(x, y) : 0.0;
            const double amp = std::max(p - params.gamma, 0.0) * inv;
            seed.values[m] = amp * (up.values[m] + dn.values[m]);
        }
    }
    return seed;
}

ComplexField seed_ring_superposition(int l, double v0, double r_min,
                                     const GridSpec& grid) {
    if (!(v0 > 0.0) || !(r_min > 0.0))
        throw std::invalid_argument("seed_ring_superposition: V0, r_min > 0");
    ComplexField seed(grid);
    const double a = std::sqrt(v0) / r_min;
    for (int j = 0; j < grid.ny; ++j) {
        const double y = grid.y(j);
        for (int i = 0; i < grid.nx; ++i) {
            const double x = grid.x(i);
            const double r = std::sqrt(x * x + y * y);
            const double phi = std::atan2(y, x);
            const double env = std::exp(-a * (r - r_min) * (r - r_min));
            // (e^{-il phi} + e^{il phi})/sqrt(2) = sqrt(2) cos(l phi)
            seed.values[grid.index(i, j)] =
                env * std::numbers::sqrt2 * std::cos(l * phi);
        }
    }
    return seed;
}

ComplexField seed_momentum_mixture(const std::map<double, cdouble>& xi,
                                   const GridSpec& grid) {
    if (grid.boundary != Boundary::Periodic)
        throw std::invalid_argument(
            "seed_momentum_mixture: periodic boundary required");
    const double k_unit = 2.0 * std::numbers::pi / grid.lx;
    for (const auto& [k, c] : xi) {
        const double cyc = k / k_unit;
        if (std::abs(cyc - std::round(cyc)) > 1e-9)
            throw std::invalid_argument(
                "seed_momentum_mixture: k not commensurate with lx");
    }
    ComplexField seed(grid);
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            const double x = grid.x(i);
            cdouble v{0.0, 0.0};
            for (const auto& [k, c] : xi) v += c * std::polar(1.0, k * x);
            seed.values[grid.index(i, j)] = v;
        }
    }
    return seed;
}

double stable_dt(const GridSpec& grid, const SimParams& params,
                 const Landscape& landscape, double safety) {
    if (!(safety > 0.0) || safety > 1.0)
        throw std::invalid_argument("stable_dt: safety must be in (0, 1]");
    const double h = std::min(grid.dx, grid.dy);
    double dt = h * h / 4.0;

    double vmax = 0.0, pmax = 0.0;
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            const double x = grid.x(i), y = grid.y(j);
            if (landscape.potential)
                vmax = std::max(vmax, std::abs(landscape.potential(x, y)));
            if (landscape.pump) pmax = std::max(pmax, landscape.pump(x, y));
        }
    }
    const double n_est =
        params.eta > 0.0 ? std::max(pmax - params.gamma, 0.0) / params.eta : 0.0;
    const double rot_rate = vmax + params.g * n_est;
    if (rot_rate > 0.0) dt = std::min(dt, 1.0 / rot_rate);
    if (pmax > 0.0) dt = std::min(dt, 2.0 / pmax);
    return safety * dt;
}

void step(SimState& state, double dt, Scheme scheme) {
    if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be > 0");
    if (scheme == Scheme::Rk4Fd4)
        step_rk4(state, dt);
    else
        step_gfdtd(state, dt);
    state.field.t += dt;
    ++state.step_count;
    check_finite(state, dt);
}

std::vector<Observer> default_observers() {
    return {
        {"norm", [](const SimState& s) { return field_norm(s.field); }},
        {"peak_density",
         [](const SimState& s) {
             double peak = 0.0;
             for (const auto& v : s.field.values)
                 peak = std::max(peak, std::norm(v));
             return peak;
         }},
    };
}

std::vector<Observer> lobe_observers() {
    auto profile_of = [](const SimState& s) {
        const double r = peak_density_radius(s.field);
        return angular_profile(s.field, r, 360);
    };
    std::vector<Observer> obs = default_observers();
    obs.push_back({"lobe_count", [profile_of](const SimState& s) {
                       return static_cast<double>(
                           lobe_stats(profile_of(s)).count);
                   }});
    obs.push_back({"lobe_contrast", [profile_of](const SimState& s) {
                       return lobe_stats(profile_of(s)).contrast;
                   }});
    obs.push_back({"interlobe_phase", [profile_of](const SimState& s) {
                       const auto prof = profile_of(s);
                       if (lobe_stats(prof).count < 2) return 0.0;
                       return interlobe_phase(s.field, prof);
                   }});
    return obs;
}

ObservableSeries evolve(SimState& state, const SolverConfig& cfg,
                        const std::vector<Observer>& observers,
                        const SnapshotHook& on_snapshot) {
    if (cfg.t_end < state.field.t)
        throw std::invalid_argument("evolve: t_end before current time");
    double dt = cfg.dt;
    const double dt_max =
        stable_dt(state.field.grid, state.params, state.landscape, cfg.safety);
    if (dt <= 0.0)
        dt = dt_max;
    else if (dt > dt_max && !cfg.allow_unstable_dt)
        throw std::invalid_argument("evolve: dt exceeds stable_dt");

    ObservableSeries series;
    std::vector<std::string> names;
    for (const auto& o : observers) names.push_back(o.name);
    series.set_names(std::move(names));

    auto record = [&]() {
        std::vector<double> vals;
        vals.reserve(observers.size());
        for (const auto& o : observers) vals.push_back(o.eval(state));
        series.add_sample(state.field.t, vals);
        if (on_snapshot) on_snapshot(state.field, state.step_count);
    };

    record();
    const double span = cfg.t_end - state.field.t;
    const long nsteps = static_cast<long>(std::ceil(span / dt - 1e-12));
    if (nsteps <= 0) return series;
    const double dt_actual = span / static_cast<double>(nsteps);
    for (long k = 0; k < nsteps; ++k) {
        step(state, dt_actual, cfg.scheme);
        if ((cfg.snapshot_every > 0 && state.step_count % cfg.snapshot_every == 0) ||
            k == nsteps - 1)
            record();
    }
    return series;
}

double energy_functional(const SimState& state) {
    const GridSpec& g = state.field.grid;
    std::vector<cdouble> lap(state.field.values.size());
    laplacian(g, state.field.values, lap);
    std::vector<double> terms(state.field.values.size());
    for (std::size_t m = 0; m < terms.size(); ++m) {
        const cdouble psi = state.field.values[m];
        const double dens = std::norm(psi);
        terms[m] = -std::real(std::conj(psi) * lap[m]) +
                   state.potential[m] * dens +
                   0.5 * state.params.g * dens * dens;
    }
    return pairwise_sum(terms.data(), terms.size()) * g.dx * g.dy;
}

} // namespace pgyro
