#ifndef IONSHIFT_COLLECTIVE_HPP
#define IONSHIFT_COLLECTIVE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "ionshift/chain.hpp"
#include "ionshift/dipole.hpp"

namespace ionshift {

/// Single-excitation amplitudes c_i over an M-ion chain, unit-normalized.
struct ExcitationAmplitudes {
  Eigen::VectorXcd amplitudes;

  /// Equal-amplitude superposition 1/sqrt(M), the state a uniform weak probe
  /// prepares.
  static ExcitationAmplitudes symmetric(int ion_count);
  void validate() const;  // unit norm to 1e-12
};

/// Independent Gaussian position jitter per ion, standing in for thermal
/// motion of the chain.
struct ThermalModel {
  std::vector<double> position_stddev_um;  // sigma_m, one per ion
  int sample_count = 1000;

  static ThermalModel common_sigma(int ion_count, double sigma_um,
                                   int sample_count);
  void validate() const;
};

/// Predicted observable line-center shift versus inner-pair spacing.
struct ShiftCurve {
  std::vector<double> spacings_um;           // strictly increasing
  std::vector<double> predicted_shift_khz;   // polarization factor applied
  std::vector<double> smeared_shift_khz;     // empty unless thermal model given
  std::vector<double> smeared_stderr_khz;
};

/// Observable collective shift of the symmetric excitation of an M-ion chain:
/// polarization factor times (1/M) sum_{m != n} delta(|r_m - r_n|) over
/// ordered pairs. Requires M >= 2.
double collective_shift_mhz(const IonChain& chain, const Transition& transition,
                            Polarization pol);

/// Eigen-decomposition of the M x M far-field coupling matrix
/// J_mn = delta(|r_m - r_n|), zero diagonal.
struct EigenmodeSpectrum {
  Eigen::VectorXd eigenvalues_mhz;  // ascending
  Eigen::MatrixXd modes;            // columns, same order
};

EigenmodeSpectrum eigenmode_spectrum(const IonChain& chain,
                                     const Transition& transition);

/// Eigenvalue sum weighted by the overlap of each mode with the given
/// excitation state; for the symmetric state this equals the direct
/// double-sum shift (no polarization factor).
double mode_weighted_shift_mhz(const EigenmodeSpectrum& spectrum,
                               const ExcitationAmplitudes& state);

struct MonteCarloShift {
  double mean_mhz = 0.0;
  double stderr_mhz = 0.0;
};

/// Monte Carlo average of the collective shift over Gaussian-jittered ion
/// positions. Deterministic for a fixed seed; each draw owns a counter-based
/// sub-stream, so the result does not depend on evaluation order.
MonteCarloShift smeared_collective_shift_mhz(const IonChain& chain,
                                             const Transition& transition,
                                             Polarization pol,
                                             const ThermalModel& thermal,
                                             std::uint64_t seed);

/// Shift-versus-spacing curve. For each target inner-pair spacing the axial
/// frequency is found by root-finding on the monotone map omega_z -> spacing
/// (tolerance 1e-6 um), the chain rebuilt, and the observable (optionally
/// smeared) shift evaluated.
ShiftCurve shift_curve(const TrapConfig& trap_template, double spacing_min_um,
                       double spacing_max_um, int points,
                       const Transition& transition, Polarization pol,
                       const std::optional<ThermalModel>& thermal = std::nullopt,
                       std::uint64_t seed = 0);

/// Axial COM frequency (MHz) at which the chain's inner-pair spacing equals
/// the target.
double axial_frequency_for_spacing_mhz(const TrapConfig& trap_template,
                                       double target_spacing_um);

}  // namespace ionshift

#endif
