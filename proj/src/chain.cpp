#include "ionshift/chain.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "ionshift/constants.hpp"

namespace ionshift {

void TrapConfig::validate() const {
  if (ion_count < 1)
    throw std::invalid_argument("TrapConfig.ion_count must be >= 1");
  if (!(axial_com_frequency_mhz > 0.0))
    throw std::invalid_argument("TrapConfig.axial_com_frequency_mhz must be > 0");
  if (!(ion_mass_u > 0.0))
    throw std::invalid_argument("TrapConfig.ion_mass_u must be > 0");
  if (ion_charge < 1)
    throw std::invalid_argument("TrapConfig.ion_charge must be >= 1");
}

double IonChain::inner_pair_spacing_um() const {
  if (positions_um.size() < 2)
    throw std::domain_error("inner_pair_spacing_um requires at least 2 ions");
  const std::size_t lo = (positions_um.size() - 1) / 2;
  return positions_um[lo + 1] - positions_um[lo];
}

double force_residual(std::span<const double> u) {
  const int n = static_cast<int>(u.size());
  double worst = 0.0;
  for (int m = 0; m < n; ++m) {
    double f = u[m];
    for (int j = 0; j < n; ++j) {
      if (j == m) continue;
      const double d = u[m] - u[j];
      f -= (d > 0.0 ? 1.0 : -1.0) / (d * d);
    }
    worst = std::max(worst, std::abs(f));
  }
  return worst;
}

namespace {

// Gradient of U and its (strictly diagonally dominant, hence SPD) Hessian.
void gradient_and_hessian(const Eigen::VectorXd& u, Eigen::VectorXd& grad,
                          Eigen::MatrixXd& hess) {
  const int n = static_cast<int>(u.size());
  grad = u;  // harmonic trap term
  hess = Eigen::MatrixXd::Identity(n, n);
  for (int m = 0; m < n; ++m) {
    for (int j = m + 1; j < n; ++j) {
      const double d = u[m] - u[j];
      const double sgn = (d > 0.0 ? 1.0 : -1.0);
      const double inv2 = 1.0 / (d * d);
      const double inv3 = 2.0 * inv2 / std::abs(d);
      grad[m] -= sgn * inv2;  // Coulomb repulsion
      grad[j] += sgn * inv2;
      hess(m, m) += inv3;
      hess(j, j) += inv3;
      hess(m, j) -= inv3;
      hess(j, m) -= inv3;
    }
  }
}

bool strictly_ascending(const Eigen::VectorXd& u) {
  for (int i = 1; i < u.size(); ++i)
    if (!(u[i] > u[i - 1])) return false;
  return true;
}

}  // namespace

std::vector<double> equilibrium_positions(int n) {
  if (n < 1) throw std::invalid_argument("equilibrium_positions: n must be >= 1");
  if (n == 1) return {0.0};

  // Uniform initial guess; the empirical minimum spacing 2.018 n^-0.559 keeps
  // the guess inside the basin of attraction for all chain sizes of interest.
  const double spacing = 2.018 / std::pow(n, 0.559);
  Eigen::VectorXd u(n);
  for (int m = 0; m < n; ++m) u[m] = spacing * (m - 0.5 * (n - 1));

  constexpr int max_iterations = 200;
  constexpr double tolerance = 1e-12;
  Eigen::VectorXd grad;
  Eigen::MatrixXd hess;
  double residual = 0.0;

  for (int it = 0; it < max_iterations; ++it) {
    gradient_and_hessian(u, grad, hess);
    residual = grad.lpNorm<Eigen::Infinity>();
    if (residual < tolerance) {
      // Exact antisymmetrization removes accumulated floating-point bias;
      // it maps the solution onto itself up to roundoff.
      Eigen::VectorXd sym(n);
      for (int m = 0; m < n; ++m) sym[m] = 0.5 * (u[m] - u[n - 1 - m]);
      u = sym;
      std::vector<double> out(u.data(), u.data() + n);
      const double final_residual = force_residual(out);
      if (final_residual >= 1e-10)
        throw SolverError("equilibrium_positions: residual above bound after convergence",
                          final_residual);
      return out;
    }

    const Eigen::VectorXd step = hess.llt().solve(-grad);
    // Backtrack until the iterate stays ordered and the residual shrinks.
    double alpha = 1.0;
    bool accepted = false;
    for (int bt = 0; bt < 60; ++bt) {
      Eigen::VectorXd trial = u + alpha * step;
      if (strictly_ascending(trial)) {
        Eigen::VectorXd g2;
        Eigen::MatrixXd h2;
        gradient_and_hessian(trial, g2, h2);
        if (g2.lpNorm<Eigen::Infinity>() < residual) {
          u = trial;
          accepted = true;
          break;
        }
      }
      alpha *= 0.5;
    }
    if (!accepted)
      throw SolverError("equilibrium_positions: line search stalled", residual);
  }
  throw SolverError("equilibrium_positions: no convergence after max iterations",
                    residual);
}

double length_scale_um(const TrapConfig& cfg) {
  cfg.validate();
  using namespace constants;
  const double omega = 2.0 * pi * cfg.axial_com_frequency_mhz * 1e6;  // rad/s
  const double q = cfg.ion_charge * elementary_charge;
  const double m = cfg.ion_mass_u * atomic_mass;
  const double p3 = q * q / (4.0 * pi * vacuum_permittivity * m * omega * omega);
  return std::cbrt(p3) * 1e6;
}

IonChain build_chain(const TrapConfig& cfg) {
  cfg.validate();
  IonChain chain;
  chain.normalized_positions = equilibrium_positions(cfg.ion_count);
  chain.length_scale_um = length_scale_um(cfg);
  chain.positions_um.resize(chain.normalized_positions.size());
  for (std::size_t i = 0; i < chain.positions_um.size(); ++i)
    chain.positions_um[i] = chain.normalized_positions[i] * chain.length_scale_um;
  return chain;
}

}  // namespace ionshift
