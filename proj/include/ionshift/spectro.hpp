#ifndef IONSHIFT_SPECTRO_HPP
#define IONSHIFT_SPECTRO_HPP

#include <stdexcept>

namespace ionshift {

/// Lorentzian line model L(nu) = A / (1 + ((nu - f0) / (Gamma/2))^2).
struct Lorentzian {
  double center_mhz = 0.0;     // f0
  double width_mhz = 24.63;    // Gamma (FWHM)
  double amplitude = 1.0;      // counts per pulse at line center

  void validate() const;
};

/// Photon fluxes sampled at the guess center f' and at f' +- Gamma'/2,
/// in counts per pulse (any common normalization cancels in the estimators).
struct ThreePointSample {
  double guess_center_mhz = 0.0;  // f'
  double guess_width_mhz = 24.63; // Gamma'
  double flux_center = 0.0;       // L0
  double flux_plus = 0.0;         // L+
  double flux_minus = 0.0;        // L-

  void validate() const;
};

/// Sample with zero center flux (or other unusable values).
class InvalidSampleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact-estimator denominator below the conditioning threshold. Not silently
/// downgraded to the approximate form; the caller decides.
class IllConditionedSampleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double lorentzian_flux(const Lorentzian& model, double frequency_mhz);

/// Exact three-point center estimate
///   f = f' + (Gamma'/2) (L+ - L-) / (2 (L+ + L-) - 4 L+ L- / L0).
/// For noiseless fluxes of a true Lorentzian with Gamma' = Gamma this inverts
/// the lineshape exactly for any f' where the denominator is regular.
/// The denominator is considered ill-conditioned below epsilon_scale * L0.
double estimate_center_exact_mhz(const ThreePointSample& sample,
                                 double epsilon_scale = 1e-6);

/// First-order form f = f' + (Gamma'/2) (L+ - L-) / L0.
double estimate_center_approx_mhz(const ThreePointSample& sample);

/// Photon shot-noise limit on a line-center measurement,
/// Gamma / (2 sqrt(N)) for N detected photons.
double shot_noise_sigma_mhz(double linewidth_mhz, long long total_photons);

}  // namespace ionshift

#endif
