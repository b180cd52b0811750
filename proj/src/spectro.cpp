#include "ionshift/spectro.hpp"

#include <cmath>

namespace ionshift {

void Lorentzian::validate() const {
  if (!(width_mhz > 0.0))
    throw std::invalid_argument("Lorentzian.width_mhz must be > 0");
  if (!(amplitude > 0.0))
    throw std::invalid_argument("Lorentzian.amplitude must be > 0");
}

void ThreePointSample::validate() const {
  if (!(guess_width_mhz > 0.0))
    throw std::invalid_argument("ThreePointSample.guess_width_mhz must be > 0");
  if (flux_center < 0.0 || flux_plus < 0.0 || flux_minus < 0.0)
    throw std::invalid_argument("ThreePointSample fluxes must be >= 0");
}

double lorentzian_flux(const Lorentzian& model, double frequency_mhz) {
  model.validate();
  const double x = (frequency_mhz - model.center_mhz) / (0.5 * model.width_mhz);
  return model.amplitude / (1.0 + x * x);
}

double estimate_center_exact_mhz(const ThreePointSample& sample,
                                 double epsilon_scale) {
  sample.validate();
  if (sample.flux_center <= 0.0)
    throw InvalidSampleError("estimate_center_exact: zero center flux");
  const double lp = sample.flux_plus;
  const double lm = sample.flux_minus;
  const double denom = 2.0 * (lp + lm) - 4.0 * lp * lm / sample.flux_center;
  // Conditioning threshold in flux units; L0 is the natural amplitude scale.
  if (std::abs(denom) < epsilon_scale * sample.flux_center)
    throw IllConditionedSampleError(
        "estimate_center_exact: denominator below conditioning threshold");
  return sample.guess_center_mhz +
         0.5 * sample.guess_width_mhz * (lp - lm) / denom;
}

double estimate_center_approx_mhz(const ThreePointSample& sample) {
  sample.validate();
  if (sample.flux_center <= 0.0)
    throw InvalidSampleError("estimate_center_approx: zero center flux");
  return sample.guess_center_mhz + 0.5 * sample.guess_width_mhz *
                                       (sample.flux_plus - sample.flux_minus) /
                                       sample.flux_center;
}

double shot_noise_sigma_mhz(double linewidth_mhz, long long total_photons) {
  if (!(linewidth_mhz > 0.0))
    throw std::invalid_argument("shot_noise_sigma_mhz: linewidth must be > 0");
  if (total_photons < 1)
    throw std::invalid_argument("shot_noise_sigma_mhz: need at least one photon");
  return 0.5 * linewidth_mhz / std::sqrt(double(total_photons));
}

}  // namespace ionshift
