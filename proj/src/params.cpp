#include "eprmol/params.hpp"

#include <cmath>
#include <string>

#include "eprmol/errors.hpp"

namespace eprmol {
namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw ValidationError(std::string(name) + " must be positive");
  }
}

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw ValidationError(std::string(name) + " must be finite");
  }
}

}  // namespace

double normalize_phase(double beta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double reduced = std::remainder(beta, two_pi);  // [-pi, pi]
  if (reduced <= -std::numbers::pi) reduced += two_pi;
  return reduced;
}

ModelParams ModelParams::create(double hbar, double m, double alpha,
                                double beta, double k, double tau) {
  require_positive(hbar, "hbar");
  require_positive(m, "m");
  require_positive(alpha, "alpha");
  require_finite(beta, "beta");
  require_positive(k, "k");
  require_finite(tau, "tau");

  ModelParams p;
  p.hbar_ = hbar;
  p.m_ = m;
  p.alpha_ = alpha;
  p.beta_ = normalize_phase(beta);
  p.k_ = k;
  p.tau_ = tau;
  p.composite_mass_ = m * (1.0 + alpha * alpha);
  p.energy_ = hbar * hbar * k * k / (2.0 * p.composite_mass_);
  return p;
}

ModelParams ModelParams::figure_one() {
  return create(1.0, 1.0, 0.5, 0.0, std::numbers::pi / 2);
}

ModelParams ModelParams::with_alpha(double alpha) const {
  return create(hbar_, m_, alpha, beta_, k_, tau_);
}

ModelParams ModelParams::with_beta(double beta) const {
  return create(hbar_, m_, alpha_, beta, k_, tau_);
}

ModelParams ModelParams::with_k(double k) const {
  return create(hbar_, m_, alpha_, beta_, k, tau_);
}

ModelParams ModelParams::with_tau(double tau) const {
  return create(hbar_, m_, alpha_, beta_, k_, tau);
}

ModelParams ModelParams::with_energy(double energy) const {
  return with_k(wavenumber_from_energy(energy, *this));
}

ModelParams validate_params(double hbar, double m, double alpha, double beta,
                            double k) {
  return ModelParams::create(hbar, m, alpha, beta, k);
}

double energy_from_wavenumber(double k, const ModelParams& params) {
  if (!(k >= 0.0) || !std::isfinite(k)) {
    throw ValidationError("wavenumber must be non-negative");
  }
  const double hbar = params.hbar();
  return hbar * hbar * k * k / (2.0 * params.composite_mass());
}

double wavenumber_from_energy(double energy, const ModelParams& params) {
  if (!(energy >= 0.0) || !std::isfinite(energy)) {
    throw ValidationError("energy must be non-negative");
  }
  return std::sqrt(2.0 * params.composite_mass() * energy) / params.hbar();
}

ParticlePositions particle_positions(double x, const ModelParams& params) {
  const double a2 = params.alpha() * params.alpha();
  return {x, -a2 * x};
}

}  // namespace eprmol
