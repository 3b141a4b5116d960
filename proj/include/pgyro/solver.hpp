#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgyro/analysis.hpp"
#include "pgyro/field.hpp"
#include "pgyro/landscape.hpp"
#include "pgyro/oam.hpp"
#include "pgyro/units.hpp"

namespace pgyro {

/// Thrown when a step produces a non-finite value.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Scheme {
    Rk4Fd4, // reference: classical 4-stage explicit integrator, FD4 stencil
    Gfdtd   // split real/imaginary higher-order Taylor expansion in time
};

struct SolverConfig {
    double dt = 0.0; // 0 selects stable_dt automatically
    Scheme scheme = Scheme::Rk4Fd4;
    double safety = 0.8; // CFL safety factor in (0, 1]
    double t_end = 10.0;
    int snapshot_every = 100;
    bool allow_unstable_dt = false;
};

/// Field plus the dGPE coefficients and pre-sampled landscape.
struct SimState {
    ComplexField field;
    SimParams params;
    Landscape landscape;
    long step_count = 0;

    // V_ext and P sampled once on the grid.
    std::vector<double> potential;
    std::vector<double> pump;
};

SimState make_state(ComplexField field, const SimParams& params,
                    const Landscape& landscape);

/// Variant taking an explicitly sampled potential (disorder realizations).
SimState make_state(ComplexField field, const SimParams& params,
                    const Landscape& landscape,
                    std::vector<double> sampled_potential);

/// Equilibrium-amplitude vortex-antivortex seed:
/// max(P - gamma, 0)/(sqrt(2) eta) * (u_{l,0} + u_{-l,0}) at z = 0.
ComplexField seed_vortex_superposition(int l, const GridSpec& grid,
                                       const Landscape& landscape,
                                       const SimParams& params,
                                       const LGParams& lg);

/// Annular counter-current seed (psi_l + psi_{-l})/sqrt(2) with the
/// Gaussian-channel radial envelope exp(-sqrt(V0)(r-r_min)^2/r_min).
ComplexField seed_ring_superposition(int l, double v0, double r_min,
                                     const GridSpec& grid);

/// Plane-wave mixture sum_k xi_k e^{i k x}. Periodic boundary only; each k
/// must be commensurate with lx.
ComplexField seed_momentum_mixture(const std::map<double, cdouble>& xi,
                                   const GridSpec& grid);

/// Explicit-scheme step bound:
/// dt = safety * min( h^2/4, 1/(max|V| + g n_est), 2/max P ),
/// h = min(dx, dy), n_est = max(P - gamma, 0)/eta.
double stable_dt(const GridSpec& grid, const SimParams& params,
                 const Landscape& landscape, double safety);

/// Advances the state by dt in place. Throws NumericError on blow-up.
void step(SimState& state, double dt, Scheme scheme = Scheme::Rk4Fd4);

struct Observer {
    std::string name;
    std::function<double(const SimState&)> eval;
};

/// Built-in observers: norm, peak_density, and (when lobes are expected)
/// lobe_count / lobe_contrast / interlobe_phase on the peak-density annulus.
std::vector<Observer> default_observers();
std::vector<Observer> lobe_observers();

using SnapshotHook = std::function<void(const ComplexField&, long step)>;

/// Fixed-step time integration; observers run at step 0, every
/// snapshot_every steps, and at t_end. Deterministic given (state, cfg).
ObservableSeries evolve(SimState& state, const SolverConfig& cfg,
                        const std::vector<Observer>& observers,
                        const SnapshotHook& on_snapshot = {});

/// Conservative energy functional sum [ -Re(psi* lap psi) + V|psi|^2
/// + (g/2)|psi|^4 ] dA with the solver's FD4 Laplacian.
double energy_functional(const SimState& state);

} // namespace pgyro
