#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "eprmol/errors.hpp"
#include "eprmol/params.hpp"
#include "eprmol/wavefunction.hpp"
#include "oracles.hpp"

using namespace eprmol;
constexpr double kPi = std::numbers::pi;

TEST(Params, DerivedEnergyAndMass) {
  const auto p = validate_params(1, 1, 0.5, 0, kPi / 2);
  EXPECT_DOUBLE_EQ(p.composite_mass(), 1.25);
  EXPECT_NEAR(p.energy(), kPi * kPi / 10, 1e-15);
  EXPECT_NEAR(p.energy(), oracle::frozen::energy, 1e-15);
}

TEST(Params, EnergySatisfiesFreeSchrodinger) {
  // -hbar^2 psi'' / (2M) = E psi, psi'' by finite differences.
  const auto p = validate_params(1, 1, 0.5, 0, kPi / 2);
  for (double x : {0.1, 0.37, 0.9, 1.6}) {
    const double h = 1e-3;
    auto re = [&](double s) { return psi_bipolar(s, p).real(); };
    auto im = [&](double s) { return psi_bipolar(s, p).imag(); };
    const std::complex<double> lap(oracle::d2(re, x, h), oracle::d2(im, x, h));
    const auto lhs = -lap / (2.0 * p.composite_mass());
    const auto rhs = p.energy() * psi_bipolar(x, p);
    EXPECT_LT(std::abs(lhs - rhs), 1e-6 * std::abs(rhs) + 1e-9) << "x=" << x;
  }
}

TEST(Params, BetaNormalization) {
  EXPECT_NEAR(validate_params(1, 1, 0.5, 3 * kPi / 2, kPi / 2).beta(), -kPi / 2, 1e-15);
  EXPECT_DOUBLE_EQ(validate_params(1, 1, 0.5, kPi, 1).beta(), kPi);
  EXPECT_DOUBLE_EQ(validate_params(1, 1, 0.5, -kPi, 1).beta(), kPi);
  EXPECT_NEAR(validate_params(1, 1, 0.5, 7 * kPi / 4, 1).beta(), -kPi / 4, 1e-15);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-50, 50);
  for (int i = 0; i < 1000; ++i) {
    const double b = validate_params(1, 1, 0.5, dist(rng), 1).beta();
    EXPECT_GT(b, -kPi);
    EXPECT_LE(b, kPi);
  }
}

TEST(Params, RejectsNonPositiveFields) {
  try {
    validate_params(1, 1, 0, 0, kPi / 2);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_STREQ(e.what(), "alpha must be positive");
  }
  EXPECT_THROW(validate_params(0, 1, 0.5, 0, 1), ValidationError);
  EXPECT_THROW(validate_params(1, -1, 0.5, 0, 1), ValidationError);
  EXPECT_THROW(validate_params(1, 1, 0.5, 0, 0), ValidationError);
  EXPECT_THROW(validate_params(1, 1, NAN, 0, 1), ValidationError);
  EXPECT_THROW(validate_params(1, 1, 0.5, INFINITY, 1), ValidationError);
}

TEST(Params, AcceptsAlphaAboveOne) {
  EXPECT_NO_THROW(validate_params(1, 1, 1.5, 0, 1));
}

TEST(EnergyWavenumber, Examples) {
  const auto p = ModelParams::figure_one();
  EXPECT_NEAR(energy_from_wavenumber(kPi / 2, p), kPi * kPi / 10, 1e-15);
  EXPECT_EQ(energy_from_wavenumber(0, p), 0.0);
  EXPECT_NEAR(wavenumber_from_energy(kPi * kPi / 10, p), kPi / 2, 1e-15);
  EXPECT_EQ(wavenumber_from_energy(0, p), 0.0);
  EXPECT_THROW(energy_from_wavenumber(-1, p), ValidationError);
  EXPECT_THROW(wavenumber_from_energy(-1e-9, p), ValidationError);
}

TEST(EnergyWavenumber, RoundTripProperty) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> logu(-6, 6);
  for (int i = 0; i < 2000; ++i) {
    const auto p = validate_params(std::pow(10, logu(rng) / 3), std::pow(10, logu(rng) / 3),
                                   std::pow(10, logu(rng) / 6), 0, 1);
    const double k = std::pow(10, logu(rng));
    const double k2 = wavenumber_from_energy(energy_from_wavenumber(k, p), p);
    EXPECT_NEAR(k2 / k, 1.0, 1e-14);
    const double e = std::pow(10, logu(rng));
    const double e2 = energy_from_wavenumber(wavenumber_from_energy(e, p), p);
    EXPECT_NEAR(e2 / e, 1.0, 1e-14);
  }
}

TEST(Params, ConstructedEnergyInvariant) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.05, 5);
  for (int i = 0; i < 2000; ++i) {
    const double hbar = u(rng), m = u(rng), a = u(rng), k = u(rng);
    const auto p = ModelParams::create(hbar, m, a, u(rng), k);
    const double expected = hbar * hbar * k * k / (2 * m * (1 + a * a));
    EXPECT_NEAR(p.energy() / expected, 1.0, 1e-14);
  }
}

TEST(ParticlePositions, Examples) {
  const auto p = ModelParams::figure_one();
  auto pos = particle_positions(2, p);
  EXPECT_EQ(pos.x1, 2.0);
  EXPECT_EQ(pos.x2, -0.5);
  pos = particle_positions(3, p.with_alpha(1.0));
  EXPECT_EQ(pos.x1, 3.0);
  EXPECT_EQ(pos.x2, -3.0);
  pos = particle_positions(0, p);
  EXPECT_EQ(pos.x1, 0.0);
  EXPECT_EQ(pos.x2, 0.0);
}

TEST(ParticlePositions, RelativePositionConserved) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ua(0.01, 3), ux(-100, 100);
  for (int i = 0; i < 5000; ++i) {
    const auto p = ModelParams::figure_one().with_alpha(ua(rng));
    const double x = ux(rng);
    const auto pos = particle_positions(x, p);
    const double a2 = p.alpha() * p.alpha();
    // x1 == -x2/alpha^2 up to the rounding of one multiply and one divide.
    EXPECT_NEAR(pos.x1, -pos.x2 / a2, 4e-16 * std::abs(x));
  }
}
