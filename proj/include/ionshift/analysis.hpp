#ifndef IONSHIFT_ANALYSIS_HPP
#define IONSHIFT_ANALYSIS_HPP

#include <span>
#include <vector>

#include "ionshift/chain.hpp"
#include "ionshift/collective.hpp"
#include "ionshift/experiment.hpp"

namespace ionshift {

/// Histogram with Freedman-Diaconis binning. Presentation only; statistics
/// are always computed on the raw samples.
struct Histogram {
  std::vector<double> bin_centers_mhz;
  std::vector<long long> counts;
  double bin_width_mhz = 0.0;
};

Histogram make_histogram(std::span<const double> samples);

struct RelativeShiftResult {
  double mean_mhz = 0.0;
  double stderr_mhz = 0.0;
  double sample_std_mhz = 0.0;
  std::vector<double> differences_mhz;  // b relative to a, one per pair
  Histogram histogram;
};

/// Difference statistics between two settings of an interlaced series.
/// Consecutive dwell blocks of setting a and setting b form difference
/// samples (k-th measurement of the a-block with the k-th of the b-block);
/// an unmatched trailing block is dropped. Common drift cancels.
RelativeShiftResult relative_shift(const MeasurementSeries& series,
                                   int setting_a, int setting_b);

/// Non-overlapping Allan deviation sigma_y(tau) over averaging windows of
/// length tau. Each tau must be a multiple of the sample interval and leave
/// at least two windows.
std::vector<double> allan_deviation(std::span<const double> values,
                                    double sample_interval_s,
                                    std::span<const double> taus_s);

/// Add to `measured` the constant that makes its mean equal the mean of
/// `theory`. Idempotent; preserves all pairwise differences. For parallel
/// polarization pass an all-zero theory curve, which anchors the mean to 0.
std::vector<double> anchor_mean(std::span<const double> measured_mhz,
                                std::span<const double> theory_mhz);

/// Fit failed because the model gradient vanishes at every data point
/// (all spacings at shift zeros).
class UnidentifiableFitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OscillatorStrengthFit {
  double a0_mhz = 0.0;
  double stderr_mhz = 0.0;
};

/// Weighted least-squares fit of the oscillator strength A0 to anchored
/// relative shifts. The model is the observable collective shift of the
/// chain rebuilt at each spacing, re-anchored to the data mean at every
/// trial A0 (the common offset is not measurable). The shift is linear in
/// A0, so the minimum is closed-form; the uncertainty comes from the
/// curvature of the chi-square.
OscillatorStrengthFit fit_oscillator_strength(
    std::span<const double> anchored_shifts_mhz,
    std::span<const double> uncertainties_mhz,
    std::span<const double> spacings_um, const TrapConfig& trap_template,
    const Transition& transition_template, Polarization pol);

}  // namespace ionshift

#endif
