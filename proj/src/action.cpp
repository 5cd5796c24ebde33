#include "eprmol/action.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "eprmol/errors.hpp"
#include "eprmol/wavefunction.hpp"

namespace eprmol {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMinRelStep = 1e-10;

// Perturbed-energy pair for central differences in E.
struct EnergyStencil {
  ModelParams plus;
  ModelParams minus;
  double delta_e;  // E_plus - E_minus
};

EnergyStencil energy_stencil(const ModelParams& params, double rel_step) {
  if (!(rel_step > 0.0) || !std::isfinite(rel_step)) {
    throw ValidationError("step must be positive");
  }
  if (rel_step < kMinRelStep) {
    throw NumericalError("energy step too small for double precision");
  }
  const double e = params.energy();
  const double e_plus = e * (1.0 + rel_step);
  const double e_minus = e * (1.0 - rel_step);
  if (!(e_plus > e_minus)) {
    throw NumericalError("energy step does not change E");
  }
  return {params.with_energy(e_plus), params.with_energy(e_minus),
          e_plus - e_minus};
}

// Principal folded value of the phase angle, in units of hbar.
double principal_angle(double x, const ModelParams& params) {
  double angle = psi_polar(x, params).phase;
  if (angle > 0.5 * kPi) {
    angle -= kPi;
  } else if (angle <= -0.5 * kPi) {
    angle += kPi;
  }
  return angle;
}

// Upper bound of |dW/dx| / hbar over all x.
double max_phase_rate(const ModelParams& params) {
  const double a = params.alpha();
  const double gap = std::abs(1.0 - a);
  if (gap == 0.0) return 0.0;
  return params.k() * (1.0 + a) / gap;
}

}  // namespace

double guarded_amplitude_squared(double x, const ModelParams& params) {
  const double d = amplitude_squared(x, params);
  if (d < kNodeGuard) {
    std::ostringstream msg;
    msg << "amplitude vanishes at x = " << x;
    throw SingularityError(msg.str(), x);
  }
  return d;
}

double reduced_action_principal(double x, const ModelParams& params) {
  return params.hbar() * principal_angle(x, params);
}

ActionSample reduced_action_unwrapped(double x, const ModelParams& params) {
  const double rate = max_phase_rate(params);
  // pi/8 per step keeps genuine motion well below the pi/2 jump threshold.
  double step = rate > 0.0 ? (kPi / 8.0) / rate : (kPi / 8.0) / params.k();
  const double length = std::abs(x);
  const auto n = std::max<long>(1, static_cast<long>(std::ceil(length / step)));
  step = x / static_cast<double>(n);

  long sheet = 0;
  double prev = principal_angle(0.0, params);
  for (long i = 1; i <= n; ++i) {
    const double xi = (i == n) ? x : step * static_cast<double>(i);
    const double cur = principal_angle(xi, params);
    const double jump = cur - prev;
    if (jump < -0.5 * kPi) {
      ++sheet;
    } else if (jump > 0.5 * kPi) {
      --sheet;
    }
    prev = cur;
  }

  const double hbar = params.hbar();
  const double principal = hbar * prev;
  return {x, principal, principal + static_cast<double>(sheet) * kPi * hbar,
          sheet};
}

double conjugate_momentum(double x, const ModelParams& params) {
  return params.hbar() * params.k() / guarded_amplitude_squared(x, params);
}

double quantum_potential(double x, const ModelParams& params) {
  const double d = guarded_amplitude_squared(x, params);
  return params.energy() * (1.0 - 1.0 / (d * d));
}

QuantumMassSample effective_quantum_mass(double x, const ModelParams& params,
                                         double rel_step) {
  const double q = quantum_potential(x, params);
  const EnergyStencil s = energy_stencil(params, rel_step);
  const double dq_de =
      (quantum_potential(x, s.plus) - quantum_potential(x, s.minus)) /
      s.delta_e;
  const double m_q = params.composite_mass() * (1.0 - dq_de);
  if (!std::isfinite(m_q)) {
    throw NumericalError("effective quantum mass is not finite");
  }
  return {x, q, m_q};
}

double action_energy_derivative(double x, const ModelParams& params,
                                 double rel_step) {
  const EnergyStencil s = energy_stencil(params, rel_step);
  return (reduced_action_unwrapped(x, s.plus).w_unwrapped -
          reduced_action_unwrapped(x, s.minus).w_unwrapped) /
         s.delta_e;
}

}  // namespace eprmol
