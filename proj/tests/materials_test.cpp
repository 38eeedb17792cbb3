#include <cmath>
#include <complex>
#include <random>

#include "casimir/error.hpp"
#include "casimir/materials.hpp"
#include "doctest.h"

using namespace casimir;

TEST_CASE("imaginary-axis permittivity of the basic models") {
  CHECK(epsilon_imag_axis(Vacuum{}, 1e15) == 1.0);
  CHECK(epsilon_imag_axis(ConstantEpsilon{2.5}, 3e14) == 2.5);
  CHECK(epsilon_imag_axis(Drude{1e16, 0.0}, 1e16) == doctest::Approx(2.0).epsilon(1e-15));

  const Lorentz l{2e15, 1e15, 1e14};
  const double static_limit = 1.0 + 1e30 / 4e30;
  CHECK(epsilon_imag_axis(l, 1e3) == doctest::Approx(static_limit).epsilon(1e-10));
}

TEST_CASE("real-axis permittivity") {
  CHECK(epsilon_real_axis(Vacuum{}, 7e14) == std::complex<double>(1.0, 0.0));
  const auto plasma_zero = epsilon_real_axis(Drude{1e16, 0.0}, 1e16);
  CHECK(std::abs(plasma_zero) < 1e-15);

  // Lorentz at resonance: 1 + wp^2 / (-i gamma w0) = 1 + i/2 for w0 = 2, wp = 1, gamma = 1.
  const auto at_resonance = epsilon_real_axis(Lorentz{2e15, 1e15, 1e15}, 2e15);
  CHECK(at_resonance.real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(at_resonance.imag() == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("perfect conductors and bad frequencies are rejected") {
  CHECK_THROWS_AS(epsilon_imag_axis(PerfectConductor{}, 1e15), ModelError);
  CHECK_THROWS_AS(epsilon_real_axis(PerfectConductor{}, 1e15), ModelError);
  CHECK_THROWS_AS(epsilon_imag_axis(Vacuum{}, 0.0), InputError);
  CHECK_THROWS_AS(epsilon_imag_axis(Drude{1e16, 1e14}, -1.0), InputError);
  CHECK_THROWS_AS(epsilon_real_axis(Vacuum{}, 0.0), InputError);
}

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(validate(Drude{1e16, 0.0}));
  CHECK_THROWS_AS(validate(ConstantEpsilon{0.5}), InputError);
  CHECK_THROWS_AS(validate(Drude{-1.0, 0.0}), InputError);
  CHECK_THROWS_AS(validate(Lorentz{1e15, 1e15, std::nan("")}), InputError);
  CHECK_THROWS_AS(validate(Drude{1e16, INFINITY}), InputError);
}

TEST_CASE("eps(i xi) is >= 1, non-increasing, and tends to 1") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> log_u(12.0, 17.0);
  for (int n = 0; n < 500; ++n) {
    const double wp = std::pow(10.0, log_u(rng));
    const Material models[] = {Vacuum{}, ConstantEpsilon{1.0 + wp * 1e-16},
                               Drude{wp, wp * 1e-2}, Lorentz{wp * 0.3, wp, wp * 1e-3}};
    const double xi1 = std::pow(10.0, log_u(rng));
    const double xi2 = xi1 * (1.0 + std::uniform_real_distribution<double>(1e-6, 10.0)(rng));
    for (const auto& m : models) {
      const double e1 = epsilon_imag_axis(m, xi1);
      const double e2 = epsilon_imag_axis(m, xi2);
      CHECK(e1 >= 1.0);
      CHECK(e2 <= e1);
      CHECK(epsilon_imag_axis_derivative(m, xi1) <= 0.0);
    }
    for (const Material& m : {Material{Vacuum{}}, Material{Drude{wp, wp * 1e-2}},
                              Material{Lorentz{wp * 0.3, wp, wp * 1e-3}}}) {
      CHECK(epsilon_imag_axis(m, 1e6 * wp) == doctest::Approx(1.0).epsilon(1e-6));
    }
  }
}

TEST_CASE("passivity on the real axis") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> log_u(12.0, 17.0);
  for (int n = 0; n < 500; ++n) {
    const double w = std::pow(10.0, log_u(rng));
    const double wp = std::pow(10.0, log_u(rng));
    CHECK(epsilon_real_axis(Drude{wp, wp * 1e-3}, w).imag() >= 0.0);
    CHECK(epsilon_real_axis(Lorentz{wp * 0.5, wp, wp * 1e-2}, w).imag() >= 0.0);
  }
}

TEST_CASE("lossless Drude and Lorentz agree with their real-axis form at omega = i xi") {
  // Substituting omega = i xi into the gamma = 0 real-axis formulas gives the
  // imaginary-axis ones: 1 - wp^2/(i xi)^2 = 1 + wp^2/xi^2, and
  // 1 + wp^2/(w0^2 - (i xi)^2) = 1 + wp^2/(w0^2 + xi^2).
  const double wp = 3e15;
  const double w0 = 1e15;
  for (double xi : {1e13, 1e14, 1e15, 1e16}) {
    const std::complex<double> w{0.0, xi};
    const auto drude = 1.0 - wp * wp / (w * w);
    const auto lorentz = 1.0 + wp * wp / (w0 * w0 - w * w);
    CHECK(epsilon_imag_axis(Drude{wp, 0.0}, xi) == doctest::Approx(drude.real()).epsilon(1e-14));
    CHECK(epsilon_imag_axis(Lorentz{w0, wp, 0.0}, xi) ==
          doctest::Approx(lorentz.real()).epsilon(1e-14));
  }
}

TEST_CASE("lossless classification") {
  CHECK(is_lossless(Vacuum{}));
  CHECK(is_lossless(ConstantEpsilon{3.0}));
  CHECK_FALSE(is_lossless(Drude{1e16, 0.0}));
  CHECK_FALSE(is_lossless(PerfectConductor{}));
  CHECK(is_perfect_conductor(PerfectConductor{}));
}
