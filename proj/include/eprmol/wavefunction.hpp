#pragma once

#include <complex>
#include <span>

#include "eprmol/limit_series.hpp"
#include "eprmol/params.hpp"

namespace eprmol {

using ComplexValue = std::complex<double>;

/// Amplitude/phase pair of the molecule wave function at one point.
struct PolarForm {
  double amplitude;          // R >= 0
  double phase;              // (-pi, pi]
  double amplitude_squared;  // D = R^2
};

/// psi_1(x) = exp(ikx).
ComplexValue psi_particle_one(double x, const ModelParams& params);

/// psi_2(x) = alpha exp(-ikx - i beta). The beta sign is chosen so that
/// |psi_1 + psi_2|^2 = 1 + alpha^2 + 2 alpha cos(2kx + beta), the form
/// every downstream quantity is written in.
ComplexValue psi_particle_two(double x, const ModelParams& params);

/// Superposition psi_1 + psi_2.
ComplexValue psi_bipolar(double x, const ModelParams& params);

/// Same function written as R exp(i phi), with R = sqrt(D) and the phase
/// from a two-argument arctangent (no branch continuation here).
PolarForm psi_polar(double x, const ModelParams& params);

/// D(x) = 1 + alpha^2 + 2 alpha cos(2kx + beta).
///
/// Evaluated as (1 - alpha)^2 + 4 alpha cos^2((2kx + beta)/2), which keeps
/// full relative accuracy near the trigger points when alpha -> 1.
double amplitude_squared(double x, const ModelParams& params);

/// cos(2kx + beta), the interference factor shared by D, W' and t.
double interference_cosine(double x, const ModelParams& params);

/// Wave function values along an alpha sequence approaching 1. The side is
/// taken from the first entry (alpha < 1 is `below`).
LimitSeries<ComplexValue> epr_limit_wave(double x, const ModelParams& params,
                                         std::span<const double> alphas);

}  // namespace eprmol
