#pragma once

#include <vector>

#include "pgyro/field.hpp"

namespace pgyro {

/// Beam parameters for Laguerre-Gauss modes.
/// Waist radius at the focus: w(0)^2 = 2 b / k.
struct LGParams {
    double b = 1.0; // Rayleigh range
    double k = 2.0; // optical wavenumber

    /// Convenience: pick b so the waist radius equals w0 for the given k.
    static LGParams from_waist(double w0, double k);

    double waist() const; // w(0)
    double w(double z) const;
    double gouy(double z, int l, int p) const;

    void validate() const;
};

struct ModeTerm {
    int l = 0;
    int p = 0;
    cdouble c{1.0, 0.0};

    bool operator==(const ModeTerm&) const = default;
};

/// Weighted list of OAM mode labels. Duplicate (l,p) labels are merged.
struct ModeSpec {
    std::vector<ModeTerm> terms;

    /// Merges duplicate labels in place.
    void merge_duplicates();

    /// Sum of |c|^2 over terms.
    double total_weight() const;

    /// True when total_weight is 1 within 1e-12.
    bool is_normalized() const;
};

/// Associated Laguerre polynomial L_p^{|l|}(r) by direct finite summation.
double laguerre_poly(int p, int l_abs, double r);

/// Samples the closed-form LG mode u_{l,p}(r, phi, z) on the grid.
/// Azimuthal phase convention e^{-i l phi}; at z = 0 the curvature term is
/// taken in its R -> infinity limit (0) and the Gouy phase vanishes.
ComplexField lg_mode(int l, int p, const LGParams& params, double z,
                     const GridSpec& grid);

/// Builds the (l,p) mode by repeated application of the discrete-differential
/// raising/lowering ladder operators to the sampled TEM00 at z = 0, with
/// n_+ = p + (|l|+l)/2 OAM-raising and n_- = p + (|l|-l)/2 OAM-lowering
/// applications. The result is normalized to field_norm == 1.
///
/// Resolution floor: requires dx, dy <= w(0)/8 (throws otherwise); derivative
/// stencils are centered finite differences.
ComplexField ladder_lg(int l, int p, const LGParams& params,
                       const GridSpec& grid);

/// Mach-Zehnder with a Dove prism in one arm: spiral-phase-plate input
/// (l,p), an |alpha|^2:|beta|^2 first splitter, a phase shifter phi, and a
/// recombiner with the imaginary port discarded. Output is
/// alpha a_{l,p} + beta e^{i phi} a_{-l,p}.
ModeSpec mach_zehnder(int l, int p, double alpha_sq, double beta_sq,
                      double phase);

/// Linear combination sum_terms c * lg_mode(l, p).
ComplexField sample_superposition(const ModeSpec& spec, const LGParams& params,
                                  double z, const GridSpec& grid);

} // namespace pgyro
