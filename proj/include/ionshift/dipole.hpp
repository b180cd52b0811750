#ifndef IONSHIFT_DIPOLE_HPP
#define IONSHIFT_DIPOLE_HPP

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <stdexcept>

namespace ionshift {

/// Optical transition constants. The observable scale of every coupling is
/// carried by the oscillator strength A0; absolute dipole moments never enter.
struct Transition {
  double wavelength_um = 0.4216;
  double oscillator_strength_mhz = 20.05;  // A0, total
  double natural_linewidth_mhz = 21.5;     // Gamma_0
  double effective_linewidth_mhz = 24.63;  // Gamma as observed on the line

  double wavenumber_per_um() const;  // k = 2 pi / lambda, rad/um
  /// Strength of the spin-flip channel, A0 times the 2/3 angular factor.
  double spin_flip_strength_mhz() const;

  void validate() const;
};

/// Relative geometry of an emitter pair.
struct PairGeometry {
  double separation_um = 5.0;
  Eigen::Vector3d axis_unit_vector = Eigen::Vector3d::UnitZ();

  static PairGeometry along_z(double separation_um);
  void validate() const;  // separation > 0, |axis| = 1 within 1e-12
};

/// Two unit-normalized complex transition-dipole polarization vectors;
/// magnitudes are absorbed into the interaction prefactor.
struct DipolePair {
  Eigen::Vector3cd dipole_a = Eigen::Vector3cd::Zero();
  Eigen::Vector3cd dipole_b = Eigen::Vector3cd::Zero();

  void validate() const;
};

/// Probe polarization relative to the chain axis.
enum class Polarization { PerpendicularToAxis, ParallelToAxis };

/// Thrown when a coupling is requested at zero separation, where the
/// near-field terms diverge.
class SingularSeparationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Full resonant dipole-dipole coupling between two unit dipoles: the
/// transverse cos(kr)/kr far-field term plus the sin(kr)/(kr)^2 and
/// cos(kr)/(kr)^3 near-field terms. Normalized so that for the spin-flip
/// sigma channel along the axis the far-field part equals far_field_shift.
/// Complex in general; real for the physical channel combinations.
std::complex<double> coupling_strength_mhz(const DipolePair& pair,
                                           const PairGeometry& geom,
                                           const Transition& transition);

/// Far-field pairwise shift
///   delta(r) = -(3/8) * (2/3) A0 * cos(kr) / (kr).
double far_field_shift_mhz(double separation_um, const Transition& transition);

/// Fraction of the pair shift visible on the line center for a given probe
/// polarization: 1/2 perpendicular to the axis, 0 parallel.
double polarization_factor(Polarization pol);

/// One basis state of the singly-excited two-ion manifold. Spins are the
/// projections on the chain axis, stored as +1 (up) / -1 (down).
struct TwoIonBasisState {
  int excited_ion;  // 0 or 1
  int spin[2];
};

/// The 8-state singly-excited block of a two-ion system, its coupling matrix
/// in the product basis, and the eigen-decomposition.
struct TwoIonManifold {
  double separation_um = 0.0;
  bool near_field_included = false;
  std::array<TwoIonBasisState, 8> basis;
  Eigen::Matrix<double, 8, 8> coupling_mhz;
  Eigen::Matrix<double, 8, 1> eigenvalues_mhz;  // ascending
  Eigen::Matrix<double, 8, 8> eigenvectors;     // columns, same order
};

/// Build and diagonalize the singly-excited block. Quantization axis along
/// the chain; every allowed sigma/pi virtual-photon exchange channel enters
/// with its angular-momentum weight. With near field off the spectrum is
/// exactly {+delta x2, -delta x2, 0 x4}.
TwoIonManifold two_ion_manifold(double separation_um, const Transition& transition,
                                bool include_near_field = false);

/// Strength-weighted mean shift of the lines excited from the (equally
/// populated) ground manifold by a probe of the given polarization, computed
/// from the manifold eigenvectors and the single-ion selection rules.
/// Perpendicular polarization gives delta/2, parallel gives 0.
double observed_mean_shift_mhz(const TwoIonManifold& manifold, Polarization pol);

/// Spherical basis vector e_{+1}, e_0 or e_{-1} for q = +1, 0, -1.
Eigen::Vector3cd spherical_unit_vector(int q);

/// Transition dipole (raising) matrix element direction for the single-ion
/// transition |g, spin_g> -> |e, spin_e>, including the angular-momentum
/// weight: sqrt(2/3) on the spin-flip sigma channels, sqrt(1/3) on pi.
/// Spins are +1 / -1.
Eigen::Vector3cd raising_dipole(int spin_g, int spin_e);

}  // namespace ionshift

#endif
