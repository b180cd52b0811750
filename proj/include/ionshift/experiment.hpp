#ifndef IONSHIFT_EXPERIMENT_HPP
#define IONSHIFT_EXPERIMENT_HPP

#include <cstdint>
#include <vector>

#include "ionshift/spectro.hpp"

namespace ionshift {

/// Slow frequency drift of the apparatus: a deterministic linear ramp plus a
/// Gaussian random walk.
struct DriftModel {
  double linear_rate_khz_per_hour = 0.0;
  double random_walk_khz_per_sqrt_s = 0.8;

  void validate() const;
};

/// Virtual-experiment schedule and photon budget.
///
/// Each dwell block probes one distance setting; settings cycle. A block
/// holds `measurements_per_block` center estimates. One measurement spends
/// `pulses_per_measurement` probe pulses on the three detunings
/// {f', f' +- Gamma'/2}: a small fraction `center_pulse_fraction` at f'
/// (enough to pin the amplitude) and the rest split evenly between the two
/// half-width points, where the frequency information lives. With n photons
/// collected at each wing the estimate reaches the Gamma/(2 sqrt(n)) shot
/// limit.
struct ExperimentConfig {
  std::vector<double> distance_settings_um;  // labels for the settings
  double dwell_per_setting_s = 30.0;
  double probe_pulse_us = 8.0;
  double photons_per_pulse_mean = 9.0;   // scattered per pulse at line center
  double detection_efficiency = 0.055;   // detected fraction
  double guess_center_mhz = 0.0;         // f'
  double guess_width_mhz = 24.63;        // Gamma'
  long long pulses_per_measurement = 5631;
  double center_pulse_fraction = 0.05;
  int measurements_per_block = 1;
  DriftModel drift;
  std::uint64_t seed = 1;
  int cycles = 100;

  void validate() const;

  /// Detected counts per pulse at line center (Lorentzian amplitude).
  double detected_amplitude() const {
    return photons_per_pulse_mean * detection_efficiency;
  }
  /// Expected detected photons at each wing detuning per measurement, the n
  /// of the shot-noise formula.
  double expected_wing_photons() const;
};

struct MeasurementRecord {
  double time_s = 0.0;
  int setting = 0;
  double center_mhz = 0.0;
  long long photons = 0;
};

struct MeasurementSeries {
  std::vector<MeasurementRecord> records;  // times nondecreasing
  long long skipped = 0;                   // estimator failures, block skipped
};

/// Run the virtual experiment: cycle through the distance settings, draw
/// Poisson counts at the three probe detunings of the drifting line, apply
/// the exact three-point estimator, and record each estimate. Bit
/// reproducible for a fixed seed: every dwell block and the drift stream use
/// counter-based sub-seeds, so results are independent of evaluation order.
MeasurementSeries simulate_series(const std::vector<double>& truth_centers_mhz,
                                  const ExperimentConfig& cfg);

/// Drift value (MHz) at the k-th measurement slot; exposed for tests.
std::vector<double> drift_track_mhz(const ExperimentConfig& cfg,
                                    std::size_t slots);

}  // namespace ionshift

#endif
