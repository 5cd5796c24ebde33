#pragma once

#include <span>

#include "eprmol/limit_series.hpp"
#include "eprmol/params.hpp"

namespace eprmol {

/// Signed addends of the equation of motion. With s = m x / (hbar k):
///   c_p1  =  s / (1 + alpha^2)
///   c_p2  = -s alpha^2 / (1 + alpha^2)
///   c_ent = -s 2 alpha (1 - alpha^2)/(1 + alpha^2) cos(2kx + beta) / D(x)
/// and c_p1 + c_p2 + c_ent == total == t - tau.
struct Decomposition {
  double c_p1;
  double c_p2;
  double c_ent;
  double total;
};

/// |cos(2kx + beta) + 1| below this marks a trigger point, where
/// D = (1 - alpha)^2.
inline constexpr double kTriggerTolerance = 1e-9;

Decomposition decompose_time(double x, const ModelParams& params);

bool is_trigger_point(double x, const ModelParams& params);

/// At a trigger point x, the ratio (t - tau) / (2 m x / (hbar k (1 - alpha)))
/// for each alpha; it equals (1 + alpha)/2 and tends to 1 from below.
/// Throws ValidationError if x is not a trigger point.
LimitSeries<double> entanglon_divergence(double x, const ModelParams& params,
                                         std::span<const double> alphas);

/// t(x) along an alpha sequence. side == below needs x > 0, side == above
/// needs x < 0.
LimitSeries<double> epr_limit_time(double x, const ModelParams& params,
                                   std::span<const double> alphas,
                                   LimitSide side);

/// Effective quantum mass along an alpha -> 1- sequence.
LimitSeries<double> epr_limit_mass(double x, const ModelParams& params,
                                   std::span<const double> alphas,
                                   double rel_step = 1e-6);

}  // namespace eprmol
