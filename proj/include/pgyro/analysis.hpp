#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pgyro/field.hpp"

namespace pgyro {

/// Time-stamped named scalar diagnostics.
struct ObservableSeries {
    std::vector<double> times;
    std::vector<std::string> names;
    std::vector<std::vector<double>> channels; // channels[c][sample]

    void set_names(std::vector<std::string> n);
    void add_sample(double t, const std::vector<double>& values);
    const std::vector<double>& channel(const std::string& name) const;
    bool has_channel(const std::string& name) const;
    void write_csv(std::ostream& os) const;
};

/// Density integrated over a thin annulus, resolved in angular bins.
/// Bin b covers angles [b, b+1) * 2pi/nbins measured from the +x axis.
struct AngularProfile {
    double radius = 0.0;
    int nbins = 0;
    std::vector<double> values;
};

/// Discrete phase-winding integral around a circle: sum of principal-branch
/// phase differences / 2pi, rounded to the nearest integer.
/// Throws when |psi| dips below 1e-8 * peak amplitude on the circle.
int phase_winding(const ComplexField& f, double cx, double cy, double radius);

AngularProfile angular_profile(const ComplexField& f, double radius, int nbins);

struct LobeStats {
    int count = 0;
    double contrast = 0.0; // (max - min)/(max + min)
};

/// Counts angular maxima with prominence >= 10% of the profile maximum.
LobeStats lobe_stats(const AngularProfile& profile);

/// Mean absolute phase difference of psi between adjacent lobe maxima,
/// in [0, pi]. Throws when fewer than 2 lobes are present.
double interlobe_phase(const ComplexField& f, const AngularProfile& profile);

/// Fraction of spectral power in each target reciprocal-lattice mode.
/// Requires periodic boundaries and targets on the reciprocal lattice.
std::vector<double>
momentum_populations(const ComplexField& f,
                     const std::vector<std::pair<double, double>>& targets);

/// True iff the relative change of the peak-density channel over the
/// trailing time window stays within eps.
bool steady_state_reached(const ObservableSeries& series, double eps,
                          double window);

/// Applies the rotated-lobe modulation (1 + cos[2 l (phi + omega t)]) to the
/// density, as an amplitude factor on psi. Synthetic generator used to
/// exercise the rotation estimator.
ComplexField synth_rotated_pattern(const ComplexField& f, int l, double omega,
                                   double t);

/// Rotation angle s in [0, pi/l) such that after(phi) ~ before(phi + s),
/// from the circular cross-correlation peak, sub-bin refined by quadratic
/// interpolation. Throws when either profile's contrast is below 0.1.
double estimate_rotation(const AngularProfile& before,
                         const AngularProfile& after, int l);

/// Radius of the maximum of the angle-averaged density; used to place
/// analysis annuli without hand-tuning.
double peak_density_radius(const ComplexField& f);

} // namespace pgyro
