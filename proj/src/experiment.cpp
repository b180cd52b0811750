#include "ionshift/experiment.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "ionshift/rng.hpp"

namespace ionshift {

namespace {
constexpr std::uint64_t kDriftStream = 0xd21f7;
constexpr std::uint64_t kPhotonStream = 0x9b0c5;
}  // namespace

void DriftModel::validate() const {
  if (linear_rate_khz_per_hour < 0.0)
    throw std::invalid_argument("DriftModel.linear_rate_khz_per_hour must be >= 0");
  if (random_walk_khz_per_sqrt_s < 0.0)
    throw std::invalid_argument("DriftModel.random_walk_khz_per_sqrt_s must be >= 0");
}

void ExperimentConfig::validate() const {
  if (distance_settings_um.empty())
    throw std::invalid_argument("ExperimentConfig.distance_settings_um must be nonempty");
  for (double d : distance_settings_um)
    if (!(d > 0.0))
      throw std::invalid_argument("ExperimentConfig.distance_settings_um entries must be > 0");
  if (!(dwell_per_setting_s > 0.0))
    throw std::invalid_argument("ExperimentConfig.dwell_per_setting_s must be > 0");
  if (!(probe_pulse_us > 0.0))
    throw std::invalid_argument("ExperimentConfig.probe_pulse_us must be > 0");
  if (!(photons_per_pulse_mean > 0.0))
    throw std::invalid_argument("ExperimentConfig.photons_per_pulse_mean must be > 0");
  if (!(detection_efficiency > 0.0) || detection_efficiency > 1.0)
    throw std::invalid_argument("ExperimentConfig.detection_efficiency must be in (0, 1]");
  if (!(guess_width_mhz > 0.0))
    throw std::invalid_argument("ExperimentConfig.guess_width_mhz must be > 0");
  if (pulses_per_measurement < 3)
    throw std::invalid_argument("ExperimentConfig.pulses_per_measurement must be >= 3");
  if (!(center_pulse_fraction > 0.0) || center_pulse_fraction >= 1.0)
    throw std::invalid_argument("ExperimentConfig.center_pulse_fraction must be in (0, 1)");
  if (measurements_per_block < 1)
    throw std::invalid_argument("ExperimentConfig.measurements_per_block must be >= 1");
  if (cycles < 1)
    throw std::invalid_argument("ExperimentConfig.cycles must be >= 1");
  drift.validate();
}

namespace {

struct PulseSplit {
  long long center;
  long long wing;  // per wing
};

PulseSplit split_pulses(const ExperimentConfig& cfg) {
  long long center = static_cast<long long>(
      std::llround(cfg.center_pulse_fraction * double(cfg.pulses_per_measurement)));
  if (center < 1) center = 1;
  long long wing = (cfg.pulses_per_measurement - center) / 2;
  if (wing < 1)
    throw std::invalid_argument("pulses_per_measurement leaves no wing pulses");
  center = cfg.pulses_per_measurement - 2 * wing;  // absorb rounding remainder
  return {center, wing};
}

}  // namespace

double ExperimentConfig::expected_wing_photons() const {
  const PulseSplit split = split_pulses(*this);
  // Half the center amplitude at the half-width detunings.
  return double(split.wing) * 0.5 * detected_amplitude();
}

std::vector<double> drift_track_mhz(const ExperimentConfig& cfg,
                                    std::size_t slots) {
  const double slot_s = cfg.dwell_per_setting_s / cfg.measurements_per_block;
  const double rw_mhz = cfg.drift.random_walk_khz_per_sqrt_s * 1e-3;
  const double linear_mhz_per_s = cfg.drift.linear_rate_khz_per_hour * 1e-3 / 3600.0;

  std::vector<double> track(slots);
  double walk = 0.0;
  for (std::size_t k = 0; k < slots; ++k) {
    // Increment for the interval leading into slot k; sub-seeded per slot so
    // the walk is reproducible regardless of how blocks are scheduled.
    if (k > 0 && rw_mhz > 0.0) {
      SplitMix64 rng(substream_seed(cfg.seed, kDriftStream, k));
      std::normal_distribution<double> unit(0.0, 1.0);
      walk += rw_mhz * std::sqrt(slot_s) * unit(rng);
    }
    const double t_mid = (double(k) + 0.5) * slot_s;
    track[k] = walk + linear_mhz_per_s * t_mid;
  }
  return track;
}

MeasurementSeries simulate_series(const std::vector<double>& truth_centers_mhz,
                                  const ExperimentConfig& cfg) {
  cfg.validate();
  if (truth_centers_mhz.size() != cfg.distance_settings_um.size())
    throw std::invalid_argument(
        "simulate_series: one truth center required per distance setting");

  const int settings = static_cast<int>(truth_centers_mhz.size());
  const PulseSplit split = split_pulses(cfg);
  const double slot_s = cfg.dwell_per_setting_s / cfg.measurements_per_block;
  const std::size_t blocks = std::size_t(cfg.cycles) * settings;
  const std::size_t slots = blocks * std::size_t(cfg.measurements_per_block);

  const std::vector<double> drift = drift_track_mhz(cfg, slots);

  MeasurementSeries series;
  series.records.reserve(slots);

  for (std::size_t b = 0; b < blocks; ++b) {
    const int setting = static_cast<int>(b % settings);
    for (int j = 0; j < cfg.measurements_per_block; ++j) {
      const std::size_t k = b * cfg.measurements_per_block + j;
      const double t_mid = (double(k) + 0.5) * slot_s;

      Lorentzian line;
      line.center_mhz = truth_centers_mhz[setting] + drift[k];
      line.width_mhz = cfg.guess_width_mhz;
      line.amplitude = cfg.detected_amplitude();

      const double f_prime = cfg.guess_center_mhz;
      const double half_width = 0.5 * cfg.guess_width_mhz;

      SplitMix64 rng(substream_seed(cfg.seed, kPhotonStream, k));
      auto draw = [&rng](double mean) {
        std::poisson_distribution<long long> poisson(mean);
        return poisson(rng);
      };
      const long long c0 =
          draw(double(split.center) * lorentzian_flux(line, f_prime));
      const long long cp =
          draw(double(split.wing) * lorentzian_flux(line, f_prime + half_width));
      const long long cm =
          draw(double(split.wing) * lorentzian_flux(line, f_prime - half_width));

      ThreePointSample sample;
      sample.guess_center_mhz = f_prime;
      sample.guess_width_mhz = cfg.guess_width_mhz;
      sample.flux_center = double(c0) / double(split.center);
      sample.flux_plus = double(cp) / double(split.wing);
      sample.flux_minus = double(cm) / double(split.wing);

      MeasurementRecord rec;
      rec.time_s = t_mid;
      rec.setting = setting;
      rec.photons = c0 + cp + cm;
      try {
        rec.center_mhz = estimate_center_exact_mhz(sample);
      } catch (const InvalidSampleError&) {
        ++series.skipped;
        continue;
      } catch (const IllConditionedSampleError&) {
        ++series.skipped;
        continue;
      }
      series.records.push_back(rec);
    }
  }
  return series;
}

}  // namespace ionshift
