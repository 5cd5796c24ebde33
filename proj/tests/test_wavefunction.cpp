#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "eprmol/errors.hpp"
#include "eprmol/wavefunction.hpp"
#include "oracles.hpp"

using namespace eprmol;
constexpr double kPi = std::numbers::pi;

namespace {
ModelParams fig1() { return ModelParams::figure_one(); }
}  // namespace

TEST(PsiBipolar, Examples) {
  auto v = psi_bipolar(0, fig1());
  EXPECT_NEAR(v.real(), 1.5, 1e-15);
  EXPECT_NEAR(v.imag(), 0.0, 1e-15);
  v = psi_bipolar(1, fig1());
  EXPECT_NEAR(v.real(), 0.0, 1e-15);
  EXPECT_NEAR(v.imag(), 0.5, 1e-15);
  v = psi_bipolar(0.5, fig1());
  EXPECT_NEAR(v.real(), 1.5 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(v.imag(), 0.5 / std::sqrt(2.0), 1e-15);
}

TEST(PsiBipolar, MatchesLongDoubleReference) {
  for (double beta : {0.0, 0.7, -2.0, kPi}) {
    const auto p = fig1().with_beta(beta).with_alpha(0.8);
    oracle::Phys ph{1, 1, 0.8, p.beta(), kPi / 2};
    for (double x = -5; x <= 5; x += 0.173) {
      const auto ref = oracle::naive_psi(x, ph);
      const auto got = psi_bipolar(x, p);
      EXPECT_NEAR(got.real(), static_cast<double>(ref.real()), 1e-14);
      EXPECT_NEAR(got.imag(), static_cast<double>(ref.imag()), 1e-14);
    }
  }
}

TEST(PsiPolar, Examples) {
  auto pf = psi_polar(0, fig1());
  EXPECT_NEAR(pf.amplitude, 1.5, 1e-15);
  EXPECT_NEAR(pf.phase, 0.0, 1e-15);
  pf = psi_polar(1, fig1());
  EXPECT_NEAR(pf.amplitude, 0.5, 1e-15);
  EXPECT_NEAR(pf.phase, kPi / 2, 1e-15);
}

TEST(PsiPolar, AgreesWithBipolarOnGrid) {
  for (double a : {0.1, 0.5, 0.9, 1.0}) {
    for (double b : {0.0, kPi / 2, -kPi / 2, kPi}) {
      const auto p = fig1().with_alpha(a).with_beta(b);
      double worst = 0;
      for (int i = 0; i < 2001; ++i) {
        const double x = -10 + 20.0 * i / 2000;
        const auto pf = psi_polar(x, p);
        worst = std::max(worst, std::abs(std::polar(pf.amplitude, pf.phase) - psi_bipolar(x, p)));
        EXPECT_GT(pf.phase, -kPi - 1e-15);
        EXPECT_LE(pf.phase, kPi);
      }
      EXPECT_LE(worst, 1e-12) << "alpha=" << a << " beta=" << b;
    }
  }
}

TEST(AmplitudeSquared, Examples) {
  EXPECT_NEAR(amplitude_squared(0, fig1()), 2.25, 1e-15);
  EXPECT_NEAR(amplitude_squared(1, fig1()), 0.25, 1e-15);
  EXPECT_NEAR(amplitude_squared(0.5, fig1()), 1.25, 1e-15);
}

TEST(AmplitudeSquared, MatchesNaiveFormAndLowerBound) {
  for (double a : {0.05, 0.5, 0.99, 1.0, 1.7}) {
    for (double b : {-3.0, -1.0, 0.0, 2.2}) {
      const auto p = fig1().with_alpha(a).with_beta(b);
      oracle::Phys ph{1, 1, a, p.beta(), kPi / 2};
      for (double x = -4; x <= 4; x += 0.0137) {
        const double d = amplitude_squared(x, p);
        EXPECT_NEAR(d, oracle::naive_d(x, ph), 4e-15 * (1 + a) * (1 + a));
        EXPECT_GE(d, (1 - a) * (1 - a) * (1 - 1e-15));
        const auto pf = psi_polar(x, p);
        EXPECT_DOUBLE_EQ(pf.amplitude_squared, d);
        EXPECT_DOUBLE_EQ(pf.amplitude, std::sqrt(d));
        EXPECT_NEAR(d, std::norm(psi_bipolar(x, p)), 1e-13);
      }
    }
  }
}

TEST(Wavefunction, NotFactorable) {
  // psi_1 psi_2 is the constant alpha e^{-i beta}; psi_epr is not constant,
  // so no K makes psi_epr == K psi_1 psi_2 over half a period.
  const auto p = fig1().with_beta(0.4);
  const auto prod0 = psi_particle_one(0, p) * psi_particle_two(0, p);
  EXPECT_NEAR(std::abs(prod0 - std::polar(0.5, -p.beta())), 0, 1e-15);

  std::vector<double> xs;
  for (int i = 0; i <= 50; ++i) xs.push_back(i * 1.0 / 50);  // half period: pi/(2k) = 1
  double psi_spread = 0;
  for (double x : xs) {
    const auto prod = psi_particle_one(x, p) * psi_particle_two(x, p);
    EXPECT_NEAR(std::abs(prod - prod0), 0, 1e-15);
    psi_spread = std::max(psi_spread, std::abs(psi_bipolar(x, p) - psi_bipolar(0, p)));
  }
  EXPECT_GT(psi_spread, 0.5);

  // Best K in the least-squares sense still leaves a residual.
  std::complex<double> num = 0;
  double den = 0;
  for (double x : xs) {
    num += psi_bipolar(x, p) * std::conj(prod0);
    den += std::norm(prod0);
  }
  const auto k_best = num / den;
  double residual = 0;
  for (double x : xs) residual = std::max(residual, std::abs(psi_bipolar(x, p) - k_best * prod0));
  EXPECT_GT(residual, 0.1);
}

TEST(Wavefunction, EigenfunctionResidual) {
  for (double a : {0.2, 0.5, 0.9}) {
    const auto p = fig1().with_alpha(a).with_beta(0.3);
    const double h = 1e-3;
    for (double x = -3; x <= 3; x += 0.05) {
      auto re = [&](double s) { return psi_bipolar(s, p).real(); };
      auto im = [&](double s) { return psi_bipolar(s, p).imag(); };
      const std::complex<double> lap(oracle::d2(re, x, h), oracle::d2(im, x, h));
      const auto psi = psi_bipolar(x, p);
      const auto residual = -lap / (2 * p.composite_mass()) - p.energy() * psi;
      EXPECT_LE(std::abs(residual), 1e-6 * p.energy() * std::abs(psi) + 1e-10) << x;
    }
  }
}

TEST(EprLimitWave, ExactStandingWaves) {
  const std::vector<double> one{1.0};
  for (double x = -3; x <= 3; x += 0.1) {
    const double kx = kPi / 2 * x;
    const auto even = epr_limit_wave(x, fig1().with_beta(0), one).entries[0].second;
    EXPECT_NEAR(std::abs(even - std::complex<double>(2 * std::cos(kx), 0)), 0, 1e-14);
    const auto odd = epr_limit_wave(x, fig1().with_beta(kPi), one).entries[0].second;
    EXPECT_NEAR(std::abs(odd - std::complex<double>(0, 2 * std::sin(kx))), 0, 1e-14);
  }
}

TEST(EprLimitWave, ConvergesFromBelow) {
  const std::vector<double> alphas{0.9, 0.99, 0.999};
  const auto s = epr_limit_wave(0, fig1(), alphas);
  EXPECT_EQ(s.side, LimitSide::below);
  ASSERT_EQ(s.entries.size(), 3u);
  EXPECT_LE(std::abs(s.entries[2].second - 2.0), 1.0e-3 + 1e-12);
  double prev = INFINITY;
  for (const auto& [a, v] : s.entries) {
    EXPECT_NEAR(std::abs(v - 2.0), 1 - a, 1e-14);
    EXPECT_LT(std::abs(v - 2.0), prev);
    prev = std::abs(v - 2.0);
  }
}

TEST(EprLimitWave, PolarFormForPureImaginaryCase) {
  const auto p = fig1().with_alpha(1.0).with_beta(kPi);
  for (double x : {0.3, 0.9, 1.4, 2.7, -0.6}) {
    const auto pf = psi_polar(x, p);
    const double s = std::sin(kPi / 2 * x);
    EXPECT_NEAR(pf.amplitude, 2 * std::abs(s), 1e-14);
    EXPECT_NEAR(pf.phase, s > 0 ? kPi / 2 : -kPi / 2, 1e-12);
  }
}

TEST(EprLimitWave, Errors) {
  const std::vector<double> empty;
  EXPECT_THROW(epr_limit_wave(0, fig1(), empty), ValidationError);
  const std::vector<double> wrong_way{0.99, 0.9};
  EXPECT_THROW(epr_limit_wave(0, fig1(), wrong_way), ValidationError);
}
