#pragma once

#include "eprmol/params.hpp"

namespace eprmol {

/// One evaluation of the reduced action.
///
/// The closed form is an arctangent, so it is only known modulo pi*hbar.
/// `w_principal` lives on the principal tangent branch (-pi hbar/2,
/// pi hbar/2]; `w_unwrapped` continues it across every tangent singularity
/// starting from the origin, so that
///   w_unwrapped == w_principal + sheet * pi * hbar.
struct ActionSample {
  double x;
  double w_principal;
  double w_unwrapped;
  long sheet;
};

struct QuantumMassSample {
  double x;
  double q;    // quantum potential
  double m_q;  // effective quantum mass
};

/// Smallest D(x) accepted before an evaluation is treated as sitting on a
/// node of the amplitude.
inline constexpr double kNodeGuard = 1e-14;

/// Throws SingularityError if D(x) < kNodeGuard; returns D(x) otherwise.
double guarded_amplitude_squared(double x, const ModelParams& params);

double reduced_action_principal(double x, const ModelParams& params);

/// Marches from x = 0 to x in steps small enough that the principal value
/// moves by less than pi*hbar/8 between samples, and bumps the sheet index
/// whenever the principal value jumps by about pi*hbar.
ActionSample reduced_action_unwrapped(double x, const ModelParams& params);

/// hbar k / D(x).
double conjugate_momentum(double x, const ModelParams& params);

/// Residual of the free stationary quantum Hamilton-Jacobi equation,
/// Q = E - (W')^2 / (2M) = E (1 - 1/D^2), with W' the conjugate momentum.
double quantum_potential(double x, const ModelParams& params);

/// m_Q = M (1 - dQ/dE).
///
/// dQ/dE is a central difference in energy at fixed x, alpha, beta, m and
/// hbar: E(1 +- rel_step), with k re-derived from each perturbed energy.
/// Second-order accurate in rel_step. Throws NumericalError if rel_step is
/// too small to resolve (below 1e-10) or the result is not finite.
QuantumMassSample effective_quantum_mass(double x, const ModelParams& params,
                                         double rel_step = 1e-6);

/// dW_unwrapped/dE by a central difference with the same energy stencil
/// as effective_quantum_mass. Jacobi's theorem identifies this with t - tau.
double action_energy_derivative(double x, const ModelParams& params,
                                double rel_step = 1e-6);

}  // namespace eprmol
