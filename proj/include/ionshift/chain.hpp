#ifndef IONSHIFT_CHAIN_HPP
#define IONSHIFT_CHAIN_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ionshift {

/// Axial trap parameters that set the chain geometry.
struct TrapConfig {
  int ion_count = 2;
  double axial_com_frequency_mhz = 0.810;  // omega_z / 2pi
  double ion_mass_u = 87.906;              // Sr+
  int ion_charge = 1;                      // elementary charges

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Equilibrium chain geometry: dimensionless positions t_m and the physical
/// length scale p, with r_m = t_m * p.
struct IonChain {
  std::vector<double> normalized_positions;  // t_m, strictly ascending
  double length_scale_um = 0.0;              // p
  std::vector<double> positions_um;          // t_m * p

  std::size_t size() const { return positions_um.size(); }

  /// Distance between the two adjacent ions closest to the chain center
  /// (for even N the middle pair; for odd N the pair on the positive side
  /// of the center ion, which equals the negative-side pair by symmetry).
  double inner_pair_spacing_um() const;
};

/// Equilibrium solver failure; carries the last force residual reached.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Dimensionless equilibrium positions of n ions minimizing
///   U(u) = sum_m u_m^2 / 2 + sum_{m<n} 1 / |u_m - u_n|.
/// Damped Newton on the force balance; converges in a handful of iterations
/// for n <= 20. Positions are strictly ascending and antisymmetric about 0,
/// with residual dimensionless force below 1e-10 at every ion.
std::vector<double> equilibrium_positions(int n);

/// Max absolute dimensionless force over the ions at the given positions.
double force_residual(std::span<const double> positions);

/// Chain length scale p = (q^2 / (4 pi eps0 m omega_z^2))^(1/3), in um.
/// Scales as omega_z^(-2/3).
double length_scale_um(const TrapConfig& cfg);

/// Solve the geometry and attach the physical scale.
IonChain build_chain(const TrapConfig& cfg);

}  // namespace ionshift

#endif
