#include "ionshift/collective.hpp"

#include <cmath>
#include <random>

#include "ionshift/rng.hpp"

namespace ionshift {

ExcitationAmplitudes ExcitationAmplitudes::symmetric(int ion_count) {
  if (ion_count < 1)
    throw std::invalid_argument("ExcitationAmplitudes: ion_count must be >= 1");
  ExcitationAmplitudes s;
  s.amplitudes = Eigen::VectorXcd::Constant(ion_count,
                                            1.0 / std::sqrt(double(ion_count)));
  return s;
}

void ExcitationAmplitudes::validate() const {
  if (std::abs(amplitudes.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("ExcitationAmplitudes must be unit-normalized");
}

ThermalModel ThermalModel::common_sigma(int ion_count, double sigma_um,
                                        int sample_count) {
  ThermalModel t;
  t.position_stddev_um.assign(ion_count, sigma_um);
  t.sample_count = sample_count;
  return t;
}

void ThermalModel::validate() const {
  for (double s : position_stddev_um)
    if (!(s >= 0.0))
      throw std::invalid_argument("ThermalModel.position_stddev_um must be >= 0");
  if (sample_count < 1)
    throw std::invalid_argument("ThermalModel.sample_count must be >= 1");
}

namespace {

double pair_sum_shift_mhz(const std::vector<double>& positions_um,
                          const Transition& transition) {
  const std::size_t m = positions_um.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      sum += far_field_shift_mhz(std::abs(positions_um[i] - positions_um[j]),
                                 transition);
  return 2.0 * sum / double(m);  // ordered pairs count each one twice
}

}  // namespace

double collective_shift_mhz(const IonChain& chain, const Transition& transition,
                            Polarization pol) {
  if (chain.size() < 2)
    throw std::domain_error("collective_shift_mhz requires at least 2 ions");
  return polarization_factor(pol) * pair_sum_shift_mhz(chain.positions_um,
                                                       transition);
}

EigenmodeSpectrum eigenmode_spectrum(const IonChain& chain,
                                     const Transition& transition) {
  const int m = static_cast<int>(chain.size());
  if (m < 2)
    throw std::domain_error("eigenmode_spectrum requires at least 2 ions");
  Eigen::MatrixXd coupling = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const double d =
          std::abs(chain.positions_um[i] - chain.positions_um[j]);
      coupling(i, j) = coupling(j, i) = far_field_shift_mhz(d, transition);
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(coupling);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double mode_weighted_shift_mhz(const EigenmodeSpectrum& spectrum,
                               const ExcitationAmplitudes& state) {
  state.validate();
  if (state.amplitudes.size() != spectrum.eigenvalues_mhz.size())
    throw std::invalid_argument("mode_weighted_shift_mhz: size mismatch");
  double total = 0.0;
  for (int k = 0; k < spectrum.eigenvalues_mhz.size(); ++k) {
    const std::complex<double> overlap =
        spectrum.modes.col(k).cast<std::complex<double>>().dot(state.amplitudes);
    total += std::norm(overlap) * spectrum.eigenvalues_mhz(k);
  }
  return total;
}

MonteCarloShift smeared_collective_shift_mhz(const IonChain& chain,
                                             const Transition& transition,
                                             Polarization pol,
                                             const ThermalModel& thermal,
                                             std::uint64_t seed) {
  if (chain.size() < 2)
    throw std::domain_error("smeared_collective_shift_mhz requires >= 2 ions");
  thermal.validate();
  if (thermal.position_stddev_um.size() != chain.size())
    throw std::invalid_argument(
        "ThermalModel must carry one sigma per ion in the chain");

  const double factor = polarization_factor(pol);
  const int draws = thermal.sample_count;
  std::vector<double> jittered(chain.size());

  double sum = 0.0;
  double sum_sq = 0.0;
  for (int d = 0; d < draws; ++d) {
    SplitMix64 rng(substream_seed(seed, /*stream=*/0x745a1, d));
    std::normal_distribution<double> unit_normal(0.0, 1.0);
    for (std::size_t i = 0; i < chain.size(); ++i)
      jittered[i] = chain.positions_um[i] +
                    thermal.position_stddev_um[i] * unit_normal(rng);
    const double value = factor * pair_sum_shift_mhz(jittered, transition);
    sum += value;
    sum_sq += value * value;
  }

  MonteCarloShift out;
  out.mean_mhz = sum / draws;
  if (draws > 1) {
    const double var = (sum_sq - sum * sum / draws) / (draws - 1);
    out.stderr_mhz = std::sqrt(std::max(var, 0.0) / draws);
  }
  return out;
}

double axial_frequency_for_spacing_mhz(const TrapConfig& trap_template,
                                       double target_spacing_um) {
  if (!(target_spacing_um > 0.0))
    throw std::invalid_argument("target spacing must be > 0");
  TrapConfig cfg = trap_template;
  cfg.validate();
  if (cfg.ion_count < 2)
    throw std::domain_error("spacing inversion requires at least 2 ions");

  // Normalized geometry is frequency-independent; only the scale p moves.
  const std::vector<double> t = equilibrium_positions(cfg.ion_count);
  const std::size_t lo = (t.size() - 1) / 2;
  const double dt_inner = t[lo + 1] - t[lo];

  auto spacing_at = [&](double f_mhz) {
    TrapConfig c = cfg;
    c.axial_com_frequency_mhz = f_mhz;
    return dt_inner * length_scale_um(c);
  };

  // Bracket around the p ~ f^(-2/3) closed-form estimate, then bisect the
  // monotone decreasing map down to 1e-6 um.
  const double p_ref = length_scale_um(cfg);
  const double f_est = cfg.axial_com_frequency_mhz *
                       std::pow(dt_inner * p_ref / target_spacing_um, 1.5);
  double f_lo = f_est / 1.5;
  double f_hi = f_est * 1.5;
  while (spacing_at(f_lo) < target_spacing_um) f_lo *= 0.5;
  while (spacing_at(f_hi) > target_spacing_um) f_hi *= 2.0;

  constexpr double tol_um = 1e-6;
  for (int it = 0; it < 200; ++it) {
    const double f_mid = 0.5 * (f_lo + f_hi);
    const double s = spacing_at(f_mid);
    if (std::abs(s - target_spacing_um) < tol_um) return f_mid;
    (s > target_spacing_um ? f_lo : f_hi) = f_mid;
  }
  throw SolverError("axial_frequency_for_spacing_mhz: bisection did not reach tolerance",
                    std::abs(spacing_at(0.5 * (f_lo + f_hi)) - target_spacing_um));
}

ShiftCurve shift_curve(const TrapConfig& trap_template, double spacing_min_um,
                       double spacing_max_um, int points,
                       const Transition& transition, Polarization pol,
                       const std::optional<ThermalModel>& thermal,
                       std::uint64_t seed) {
  if (!(spacing_min_um > 0.0) || !(spacing_max_um > spacing_min_um))
    throw std::invalid_argument("shift_curve: spacing range must be positive and increasing");
  if (points < 2) throw std::invalid_argument("shift_curve: points must be >= 2");
  if (thermal) thermal->validate();

  ShiftCurve curve;
  curve.spacings_um.reserve(points);
  for (int i = 0; i < points; ++i) {
    const double r = spacing_min_um +
                     (spacing_max_um - spacing_min_um) * i / double(points - 1);
    TrapConfig cfg = trap_template;
    cfg.axial_com_frequency_mhz = axial_frequency_for_spacing_mhz(cfg, r);
    const IonChain chain = build_chain(cfg);
    curve.spacings_um.push_back(r);
    curve.predicted_shift_khz.push_back(
        1e3 * collective_shift_mhz(chain, transition, pol));
    if (thermal) {
      const MonteCarloShift mc = smeared_collective_shift_mhz(
          chain, transition, pol, *thermal, substream_seed(seed, 0xc42e, i));
      curve.smeared_shift_khz.push_back(1e3 * mc.mean_mhz);
      curve.smeared_stderr_khz.push_back(1e3 * mc.stderr_mhz);
    }
  }
  return curve;
}

}  // namespace ionshift
