#include "ionshift/dipole.hpp"

#include <cmath>

#include "ionshift/constants.hpp"

namespace ionshift {

using std::complex;

double Transition::wavenumber_per_um() const {
  return 2.0 * constants::pi / wavelength_um;
}

double Transition::spin_flip_strength_mhz() const {
  return (2.0 / 3.0) * oscillator_strength_mhz;
}

void Transition::validate() const {
  if (!(wavelength_um > 0.0))
    throw std::invalid_argument("Transition.wavelength_um must be > 0");
  if (!(oscillator_strength_mhz > 0.0))
    throw std::invalid_argument("Transition.oscillator_strength_mhz must be > 0");
  if (!(natural_linewidth_mhz > 0.0))
    throw std::invalid_argument("Transition.natural_linewidth_mhz must be > 0");
  if (!(effective_linewidth_mhz >= natural_linewidth_mhz))
    throw std::invalid_argument(
        "Transition.effective_linewidth_mhz must be >= natural_linewidth_mhz");
}

PairGeometry PairGeometry::along_z(double separation_um) {
  PairGeometry g;
  g.separation_um = separation_um;
  g.axis_unit_vector = Eigen::Vector3d::UnitZ();
  return g;
}

void PairGeometry::validate() const {
  if (!(separation_um > 0.0))
    throw std::invalid_argument("PairGeometry.separation_um must be > 0");
  if (std::abs(axis_unit_vector.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("PairGeometry.axis_unit_vector must be unit norm");
}

void DipolePair::validate() const {
  if (std::abs(dipole_a.norm() - 1.0) > 1e-12 ||
      std::abs(dipole_b.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("DipolePair dipoles must be unit-normalized");
}

Eigen::Vector3cd spherical_unit_vector(int q) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (q) {
    case +1:
      return {complex<double>(-s, 0), complex<double>(0, -s), 0.0};
    case 0:
      return {0.0, 0.0, 1.0};
    case -1:
      return {complex<double>(s, 0), complex<double>(0, -s), 0.0};
    default:
      throw std::invalid_argument("spherical_unit_vector: q must be -1, 0 or +1");
  }
}

Eigen::Vector3cd raising_dipole(int spin_g, int spin_e) {
  const double w_sigma = std::sqrt(2.0 / 3.0);
  const double w_pi = std::sqrt(1.0 / 3.0);
  if (spin_g == -1 && spin_e == +1) return w_sigma * spherical_unit_vector(+1);
  if (spin_g == +1 && spin_e == -1) return -w_sigma * spherical_unit_vector(-1);
  if (spin_g == +1 && spin_e == +1) return -w_pi * spherical_unit_vector(0);
  if (spin_g == -1 && spin_e == -1) return w_pi * spherical_unit_vector(0);
  throw std::invalid_argument("raising_dipole: spins must be +1 or -1");
}

namespace {

// Angular tensor of the interaction for dipole directions d1, d2 and
// separation direction n: the far-field transverse term and the two
// near-field terms, kept separate so theory curves can drop the latter.
struct InteractionTerms {
  complex<double> far;
  complex<double> near;
};

InteractionTerms interaction_terms(const Eigen::Vector3cd& d1,
                                   const Eigen::Vector3cd& d2,
                                   const Eigen::Vector3d& n, double kr) {
  // Plain (unconjugated) dot products: one vector is an emission matrix
  // element, the other an absorption one.
  const complex<double> dd = d1(0) * d2(0) + d1(1) * d2(1) + d1(2) * d2(2);
  const complex<double> nd1 = d1(0) * n(0) + d1(1) * n(1) + d1(2) * n(2);
  const complex<double> nd2 = d2(0) * n(0) + d2(1) * n(1) + d2(2) * n(2);
  InteractionTerms t;
  t.far = -(dd - nd1 * nd2) * std::cos(kr) / kr;
  t.near = (dd - 3.0 * nd1 * nd2) *
           (std::sin(kr) / (kr * kr) + std::cos(kr) / (kr * kr * kr));
  return t;
}

}  // namespace

std::complex<double> coupling_strength_mhz(const DipolePair& pair,
                                           const PairGeometry& geom,
                                           const Transition& transition) {
  pair.validate();
  transition.validate();
  if (!(geom.separation_um > 0.0))
    throw SingularSeparationError(
        "coupling_strength_mhz: zero separation, near-field terms diverge");
  geom.validate();
  const double kr = transition.wavenumber_per_um() * geom.separation_um;
  const InteractionTerms t = interaction_terms(pair.dipole_a, pair.dipole_b,
                                               geom.axis_unit_vector, kr);
  const double scale = (3.0 / 8.0) * transition.spin_flip_strength_mhz();
  return scale * (t.far + t.near);
}

double far_field_shift_mhz(double separation_um, const Transition& transition) {
  transition.validate();
  if (!(separation_um > 0.0))
    throw std::invalid_argument("far_field_shift_mhz: separation must be > 0");
  const double kr = transition.wavenumber_per_um() * separation_um;
  return -(3.0 / 8.0) * transition.spin_flip_strength_mhz() * std::cos(kr) / kr;
}

double polarization_factor(Polarization pol) {
  return pol == Polarization::PerpendicularToAxis ? 0.5 : 0.0;
}

TwoIonManifold two_ion_manifold(double separation_um, const Transition& transition,
                                bool include_near_field) {
  transition.validate();
  if (!(separation_um > 0.0)) {
    if (include_near_field)
      throw SingularSeparationError(
          "two_ion_manifold: zero separation with near field enabled");
    throw std::invalid_argument("two_ion_manifold: separation must be > 0");
  }

  TwoIonManifold m;
  m.separation_um = separation_um;
  m.near_field_included = include_near_field;

  // Product basis: excited ion index major, then spins of ion 0 and ion 1.
  int idx = 0;
  for (int excited = 0; excited < 2; ++excited)
    for (int s0 : {+1, -1})
      for (int s1 : {+1, -1}) m.basis[idx++] = {excited, {s0, s1}};

  const double kr = transition.wavenumber_per_um() * separation_um;
  const Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();
  const double scale = (3.0 / 8.0) * transition.oscillator_strength_mhz;

  m.coupling_mhz.setZero();
  for (int col = 0; col < 8; ++col) {
    for (int row = 0; row < 8; ++row) {
      const TwoIonBasisState& from = m.basis[col];
      const TwoIonBasisState& to = m.basis[row];
      if (from.excited_ion == to.excited_ion) continue;  // pure exchange coupling
      const int src = from.excited_ion;  // ion losing the excitation
      const int dst = to.excited_ion;    // ion gaining it
      // Emission: ion src goes e(from.spin[src]) -> g(to.spin[src]).
      // Absorption: ion dst goes g(from.spin[dst]) -> e(to.spin[dst]).
      const Eigen::Vector3cd d_emit =
          raising_dipole(to.spin[src], from.spin[src]).conjugate();
      const Eigen::Vector3cd d_absorb =
          raising_dipole(from.spin[dst], to.spin[dst]);
      InteractionTerms t = interaction_terms(d_emit, d_absorb, axis, kr);
      complex<double> v = scale * (include_near_field ? t.far + t.near : t.far);
      // Along the quantization axis the tensor enforces the sigma/pi selection
      // rules, so the element is real up to roundoff.
      m.coupling_mhz(row, col) = v.real();
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 8, 8>> solver(m.coupling_mhz);
  m.eigenvalues_mhz = solver.eigenvalues();
  m.eigenvectors = solver.eigenvectors();
  return m;
}

double observed_mean_shift_mhz(const TwoIonManifold& manifold, Polarization pol) {
  // Probe propagates perpendicular to the chain, so both ions share the same
  // optical phase; its linear polarization is either x (perpendicular) or z.
  const Eigen::Vector3d probe = pol == Polarization::PerpendicularToAxis
                                    ? Eigen::Vector3d::UnitX()
                                    : Eigen::Vector3d::UnitZ();

  double weight_sum = 0.0;
  double shift_sum = 0.0;
  // Equally populated ground states |g s0, g s1>.
  for (int g0 : {+1, -1}) {
    for (int g1 : {+1, -1}) {
      // Amplitude into each basis state: the excited ion absorbs along the
      // probe polarization, the spectator spin is unchanged.
      Eigen::Matrix<complex<double>, 8, 1> amp;
      amp.setZero();
      for (int b = 0; b < 8; ++b) {
        const TwoIonBasisState& st = manifold.basis[b];
        const int spect = 1 - st.excited_ion;
        const int gspin = st.excited_ion == 0 ? g0 : g1;
        const int sspin = st.excited_ion == 0 ? g1 : g0;
        if (st.spin[spect] != sspin) continue;
        const Eigen::Vector3cd d = raising_dipole(gspin, st.spin[st.excited_ion]);
        amp(b) = d(0) * probe(0) + d(1) * probe(1) + d(2) * probe(2);
      }
      // Project onto eigenstates; |<E|amp>|^2 is the line strength.
      for (int e = 0; e < 8; ++e) {
        const complex<double> overlap =
            manifold.eigenvectors.col(e).cast<complex<double>>().dot(amp);
        const double w = std::norm(overlap);
        weight_sum += w;
        shift_sum += w * manifold.eigenvalues_mhz(e);
      }
    }
  }
  return shift_sum / weight_sum;
}

}  // namespace ionshift
