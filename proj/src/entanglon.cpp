#include "eprmol/entanglon.hpp"

#include <cmath>

#include "eprmol/action.hpp"
#include "eprmol/errors.hpp"
#include "eprmol/trajectory.hpp"
#include "eprmol/wavefunction.hpp"

namespace eprmol {

Decomposition decompose_time(double x, const ModelParams& params) {
  const double d = guarded_amplitude_squared(x, params);
  const double a = params.alpha();
  const double a2 = a * a;
  const double s = params.m() * x / (params.hbar() * params.k());
  const double weight = (1.0 - a) * (1.0 + a) / (1.0 + a2);

  Decomposition out{};
  out.c_p1 = s / (1.0 + a2);
  out.c_p2 = -s * a2 / (1.0 + a2);
  out.c_ent = -s * 2.0 * a * weight * interference_cosine(x, params) / d;
  out.total = time_of_position(x, params) - params.tau();
  return out;
}

bool is_trigger_point(double x, const ModelParams& params) {
  return std::abs(interference_cosine(x, params) + 1.0) < kTriggerTolerance;
}

LimitSeries<double> entanglon_divergence(double x, const ModelParams& params,
                                         std::span<const double> alphas) {
  if (!is_trigger_point(x, params)) {
    throw ValidationError(
        "x is not a trigger point (cos(2kx+beta) != -1); use decompose_time");
  }
  validate_alpha_sequence(alphas, LimitSide::below);

  LimitSeries<double> series{"ratio", LimitSide::below, {}};
  for (double a : alphas) {
    const ModelParams p = params.with_alpha(a);
    const double t = time_of_position(x, p) - p.tau();
    const double reference = 2.0 * p.m() * x / (p.hbar() * p.k() * (1.0 - a));
    series.entries.emplace_back(a, t / reference);
  }
  return series;
}

LimitSeries<double> epr_limit_time(double x, const ModelParams& params,
                                   std::span<const double> alphas,
                                   LimitSide side) {
  validate_alpha_sequence(alphas, side);
  if (side == LimitSide::below && !(x > 0.0)) {
    throw ValidationError("alpha -> 1- studies need x > 0");
  }
  if (side == LimitSide::above && !(x < 0.0)) {
    throw ValidationError("alpha -> 1+ studies need x < 0");
  }

  LimitSeries<double> series{"t", side, {}};
  for (double a : alphas) {
    series.entries.emplace_back(a, time_of_position(x, params.with_alpha(a)));
  }
  return series;
}

LimitSeries<double> epr_limit_mass(double x, const ModelParams& params,
                                   std::span<const double> alphas,
                                   double rel_step) {
  validate_alpha_sequence(alphas, LimitSide::below);
  LimitSeries<double> series{"m_q", LimitSide::below, {}};
  for (double a : alphas) {
    series.entries.emplace_back(
        a, effective_quantum_mass(x, params.with_alpha(a), rel_step).m_q);
  }
  return series;
}

}  // namespace eprmol
