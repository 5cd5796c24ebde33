#pragma once

#include <numbers>

namespace eprmol {

/// Physical constants and entanglement parameters of the molecule.
///
/// Immutable once built. Energy and composite mass are derived from the
/// wavenumber so that E = hbar^2 k^2 / (2 M) with M = m (1 + alpha^2)
/// always holds. beta is stored reduced into (-pi, pi].
class ModelParams {
public:
  /// Validates and normalizes. Throws ValidationError naming the first
  /// non-positive (or non-finite) field.
  static ModelParams create(double hbar, double m, double alpha, double beta,
                            double k, double tau = 0.0);

  /// Fig. 1 parameter set: hbar = m = 1, k = pi/2, alpha = 0.5, beta = 0.
  static ModelParams figure_one();

  double hbar() const noexcept { return hbar_; }
  double m() const noexcept { return m_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double k() const noexcept { return k_; }
  double tau() const noexcept { return tau_; }
  double energy() const noexcept { return energy_; }
  double composite_mass() const noexcept { return composite_mass_; }

  ModelParams with_alpha(double alpha) const;
  ModelParams with_beta(double beta) const;
  ModelParams with_k(double k) const;
  ModelParams with_tau(double tau) const;
  /// Same constants with k re-derived from the given energy.
  ModelParams with_energy(double energy) const;

private:
  ModelParams() = default;

  double hbar_ = 1.0;
  double m_ = 1.0;
  double alpha_ = 0.5;
  double beta_ = 0.0;
  double k_ = std::numbers::pi / 2;
  double tau_ = 0.0;
  double energy_ = 0.0;
  double composite_mass_ = 0.0;
};

/// Positions of the two recoiling particles for one molecule coordinate.
/// Relative-position conservation pins x1 = -x2 / alpha^2.
struct ParticlePositions {
  double x1;
  double x2;
};

ModelParams validate_params(double hbar, double m, double alpha, double beta,
                            double k);

/// E = hbar^2 k^2 / (2 m (1 + alpha^2)). Only hbar, m and alpha of
/// `params` are used.
double energy_from_wavenumber(double k, const ModelParams& params);

/// Inverse of energy_from_wavenumber.
double wavenumber_from_energy(double energy, const ModelParams& params);

ParticlePositions particle_positions(double x, const ModelParams& params);

/// Reduces an angle into (-pi, pi].
double normalize_phase(double beta);

}  // namespace eprmol
