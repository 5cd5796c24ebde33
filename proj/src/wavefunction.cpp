#include "eprmol/wavefunction.hpp"

#include <cmath>

namespace eprmol {

ComplexValue psi_particle_one(double x, const ModelParams& params) {
  return std::polar(1.0, params.k() * x);
}

ComplexValue psi_particle_two(double x, const ModelParams& params) {
  return std::polar(params.alpha(), -(params.k() * x + params.beta()));
}

ComplexValue psi_bipolar(double x, const ModelParams& params) {
  return psi_particle_one(x, params) + psi_particle_two(x, params);
}

double interference_cosine(double x, const ModelParams& params) {
  return std::cos(2.0 * params.k() * x + params.beta());
}

double amplitude_squared(double x, const ModelParams& params) {
  const double a = params.alpha();
  const double half = std::cos(params.k() * x + 0.5 * params.beta());
  const double gap = 1.0 - a;
  return gap * gap + 4.0 * a * half * half;
}

PolarForm psi_polar(double x, const ModelParams& params) {
  const double a = params.alpha();
  const double kx = params.k() * x;
  const double b = params.beta();
  const double num = std::sin(kx) - a * std::sin(kx + b);
  const double den = std::cos(kx) + a * std::cos(kx + b);
  const double d = amplitude_squared(x, params);
  return {std::sqrt(d), std::atan2(num, den), d};
}

LimitSeries<ComplexValue> epr_limit_wave(double x, const ModelParams& params,
                                         std::span<const double> alphas) {
  const LimitSide side = infer_side(alphas);
  validate_alpha_sequence(alphas, side);

  LimitSeries<ComplexValue> series{"psi", side, {}};
  series.entries.reserve(alphas.size());
  for (double a : alphas) {
    series.entries.emplace_back(a, psi_bipolar(x, params.with_alpha(a)));
  }
  return series;
}

}  // namespace eprmol
