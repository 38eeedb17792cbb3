#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "casimir/cavity.hpp"
#include "casimir/constants.hpp"
#include "casimir/error.hpp"
#include "casimir/fresnel.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace casimir;
using cd = std::complex<double>;
using fixtures::uniform;

namespace {

constexpr Polarization P = Polarization::p;
constexpr Polarization S = Polarization::s;

ImagPoint random_imag_point(std::mt19937_64& rng) {
  return {uniform(rng, 1e13, 3e14), uniform(rng, 0.0, 1e6)};
}

RealPoint random_real_point(std::mt19937_64& rng) {
  const double omega = uniform(rng, 1e14, 1e15);
  return {omega, uniform(rng, 0.0, 1.5) * omega / constants::c};
}

}  // namespace

TEST_CASE("wavenumbers") {
  const double x = 1e15 / constants::c;
  CHECK(kappa(1.0, 1e15, 0.0) == doctest::Approx(x).epsilon(1e-15));
  CHECK(kappa(4.0, 1e15, 0.0) == doctest::Approx(2.0 * x).epsilon(1e-15));
  const cd b = beta(1.0, 1e15, 2.0 * x);
  CHECK(b.real() == 0.0);
  CHECK(b.imag() == doctest::Approx(std::sqrt(3.0) * x).epsilon(1e-15));

  // eps = 2 + i, omega / c = 1, k = 1: beta = sqrt(1 + i).
  const cd lossy = beta(cd{2.0, 1.0}, constants::c, 1.0);
  CHECK(lossy.real() == doctest::Approx(1.0986841134678100).epsilon(1e-14));
  CHECK(lossy.imag() == doctest::Approx(0.45508986056222733).epsilon(1e-14));

  CHECK_THROWS_AS(kappa(1.0, 0.0, 1.0), InputError);
  CHECK_THROWS_AS(beta(1.0, 1e15, -1.0), InputError);
}

TEST_CASE("single interface vacuum to eps = 4 at normal incidence") {
  const double x = 1e15 / constants::c;
  const auto s = interface_coeffs(S, 1.0, 4.0, x, 2.0 * x);
  const auto p = interface_coeffs(P, 1.0, 4.0, x, 2.0 * x);
  CHECK(s.r == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
  CHECK(p.r == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(s.t == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(p.t == doctest::Approx(0.5 * 4.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("all-vacuum stack reflects nothing") {
  const Stack stack({Layer::half_space(Vacuum{}), Layer::slab(Vacuum{}, 1e-6),
                     Layer::half_space(Vacuum{})});
  const ImagPoint sp{1e15, 1e6};
  for (auto q : kPolarizations) {
    CHECK(stack_reflection(stack, 1, Side::minus, q, sp) == 0.0);
    CHECK(stack_reflection(stack, 1, Side::plus, q, sp) == 0.0);
    CHECK(d_function(stack, 1, q, sp) == 1.0);
  }
}

TEST_CASE("ideal mirrors give D = 1 - exp(-2 kappa d)") {
  const double d = 1e-6;
  const Stack stack({Layer::half_space(PerfectConductor{}), Layer::slab(Vacuum{}, d),
                     Layer::half_space(PerfectConductor{})});
  const ImagPoint sp{2e14, 3e5};
  const double kap = kappa(1.0, sp.xi, sp.k);
  for (auto q : kPolarizations) {
    CHECK(d_function(stack, 1, q, sp) ==
          doctest::Approx(1.0 - std::exp(-2.0 * kap * d)).epsilon(1e-15));
  }
  CHECK(stack_reflection(stack, 1, Side::plus, P, sp) == 1.0);
  CHECK(stack_reflection(stack, 1, Side::plus, S, sp) == -1.0);
}

TEST_CASE("recursion agrees with the characteristic-matrix product on the imaginary axis") {
  std::mt19937_64 rng(101);
  for (int draw = 0; draw < 200; ++draw) {
    Stack stack = fixtures::five_layer(rng);
    if (draw % 4 == 0) stack = Stack({stack[0], stack[1], stack[2], stack[3],
                                      Layer::half_space(PerfectConductor{})});
    const ImagPoint sp = random_imag_point(rng);
    for (auto q : kPolarizations) {
      for (std::size_t j : {0u, 1u, 3u}) {
        const double r = stack_reflection(stack, j, Side::plus, q, sp);
        const cd ref = oracle::stack_reflection_imag(stack, j, true, q, sp);
        CHECK(oracle::agrees(r, ref));
      }
      if (draw % 4 != 0) {
        for (std::size_t j : {1u, 3u, 4u}) {
          const double r = stack_reflection(stack, j, Side::minus, q, sp);
          const cd ref = oracle::stack_reflection_imag(stack, j, false, q, sp);
          CHECK(oracle::agrees(r, ref));
        }
      }
    }
  }
}

TEST_CASE("recursion agrees with the characteristic-matrix product on the real axis") {
  std::mt19937_64 rng(202);
  for (int draw = 0; draw < 200; ++draw) {
    const Stack stack = fixtures::five_layer(rng);
    const RealPoint sp = random_real_point(rng);
    for (auto q : kPolarizations) {
      for (std::size_t j : {0u, 1u, 3u}) {
        const cd r = stack_reflection(stack, j, Side::plus, q, sp);
        const cd ref = oracle::stack_reflection_real(stack, j, true, q, sp);
        CHECK(oracle::agrees(r, ref));
      }
      for (std::size_t j : {1u, 3u, 4u}) {
        const cd r = stack_reflection(stack, j, Side::minus, q, sp);
        const cd ref = oracle::stack_reflection_real(stack, j, false, q, sp);
        CHECK(oracle::agrees(r, ref));
      }
    }
  }
}

TEST_CASE("transmission reciprocity t_{i/j/k} beta_k = t_{k/j/i} beta_i") {
  std::mt19937_64 rng(303);
  for (int draw = 0; draw < 200; ++draw) {
    const Stack stack = fixtures::five_layer(rng);
    const ImagPoint isp = random_imag_point(rng);
    const RealPoint rsp = random_real_point(rng);
    StackModes<ImagAxis> im(stack, isp.xi);
    StackModes<RealAxis> re(stack, rsp.omega);
    im.set_k(isp.k);
    re.set_k(rsp.k);
    for (auto q : kPolarizations) {
      const double a = im.transmission(1, 3, q) * im.wavenumber(3);
      const double b = im.transmission(3, 1, q) * im.wavenumber(1);
      CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
      const cd c = re.transmission(1, 3, q) * re.wavenumber(3);
      const cd d = re.transmission(3, 1, q) * re.wavenumber(1);
      CHECK(std::abs(c - d) <= 1e-12 * std::abs(c));
    }
  }
}

TEST_CASE("slab coefficients match the generic recursion for a slab in one medium") {
  std::mt19937_64 rng(404);
  for (int draw = 0; draw < 200; ++draw) {
    const Material medium = fixtures::lossless(rng);
    const Material slab = fixtures::absorbing(rng);
    const double l = 1e-9 * uniform(rng, 5.0, 50.0);
    const Stack stack({Layer::half_space(medium), Layer::slab(slab, l),
                       Layer::half_space(medium)});
    const ImagPoint sp = random_imag_point(rng);
    StackModes<ImagAxis> im(stack, sp.xi);
    im.set_k(sp.k);
    for (auto q : kPolarizations) {
      const auto c = slab_coefficients(q, im.epsilon(0), im.epsilon(1), im.wavenumber(0),
                                       im.wavenumber(1), l);
      const double r = im.reflection(0, Side::plus, q);
      const double t = im.transmission(0, 2, q);
      CHECK(oracle::agrees(c.r, r));
      CHECK(oracle::agrees(c.t, t));
    }
  }
}

TEST_CASE("D-function identity between two probe layers") {
  std::mt19937_64 rng(505);
  for (int draw = 0; draw < 300; ++draw) {
    const Stack stack = fixtures::five_layer(rng);
    const ImagPoint sp = random_imag_point(rng);
    StackModes<ImagAxis> m(stack, sp.xi);
    m.set_k(sp.k);
    for (auto q : kPolarizations) {
      const auto pj = m.pair(1, q);
      const auto pl = m.pair(3, q);
      const double lhs = pl.d * (1.0 - m.partial_reflection(1, 3, q) * pj.r_minus * m.round_trip(1));
      const double rhs = pj.d * (1.0 - m.partial_reflection(3, 1, q) * pl.r_plus * m.round_trip(3));
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
    }
  }
}

TEST_CASE("inserting a vanishing layer leaves reflection unchanged") {
  std::mt19937_64 rng(606);
  for (int draw = 0; draw < 200; ++draw) {
    const Stack stack = fixtures::five_layer(rng);
    const std::size_t at = 1 + static_cast<std::size_t>(uniform(rng, 0.0, 4.0));
    const Stack thin = stack.with_inserted(at, Layer::slab(fixtures::absorbing(rng), 1e-30));
    const ImagPoint isp = random_imag_point(rng);
    const RealPoint rsp = random_real_point(rng);
    for (auto q : kPolarizations) {
      CHECK(std::abs(stack_reflection(stack, 0, Side::plus, q, isp) -
                     stack_reflection(thin, 0, Side::plus, q, isp)) < 1e-10);
      CHECK(std::abs(stack_reflection(stack, 0, Side::plus, q, rsp) -
                     stack_reflection(thin, 0, Side::plus, q, rsp)) < 1e-10);
    }
  }
}

TEST_CASE("splitting a layer in two of the same medium is exact") {
  std::mt19937_64 rng(707);
  for (int draw = 0; draw < 100; ++draw) {
    const Stack stack = fixtures::five_layer(rng);
    const double d1 = stack.thickness(1);
    const double f = uniform(rng, 0.1, 0.9);
    const Stack split =
        stack.with_thickness(1, f * d1).with_inserted(2, Layer::slab(stack[1].material, (1 - f) * d1));
    const ImagPoint sp = random_imag_point(rng);
    for (auto q : kPolarizations) {
      const double a = stack_reflection(stack, 0, Side::plus, q, sp);
      const double b = stack_reflection(split, 0, Side::plus, q, sp);
      CHECK(oracle::agrees(b, a));
    }
  }
}

TEST_CASE("passivity bound |r| <= 1") {
  std::mt19937_64 rng(808);
  for (int draw = 0; draw < 300; ++draw) {
    const Stack stack = fixtures::five_layer(rng);
    const ImagPoint isp = random_imag_point(rng);
    const double omega = uniform(rng, 1e14, 1e15);
    // Normal incidence from the lossless layers; evanescent incidence may exceed 1.
    const RealPoint rsp{omega, 0.0};
    StackModes<ImagAxis> im(stack, isp.xi);
    im.set_k(isp.k);
    for (auto q : kPolarizations) {
      for (std::size_t j = 0; j < stack.size(); ++j) {
        const double rp = im.reflection(j, Side::plus, q);
        const double rm = im.reflection(j, Side::minus, q);
        CHECK(std::abs(rp) <= 1.0 + 1e-12);
        CHECK(std::abs(rm) <= 1.0 + 1e-12);
      }
      CHECK(im.d_function(1, q) > 0.0);
      CHECK(im.d_function(1, q) < 2.0);
      CHECK(std::abs(stack_reflection(stack, 1, Side::plus, q, rsp)) <= 1.0 + 1e-12);
      CHECK(std::abs(stack_reflection(stack, 3, Side::minus, q, rsp)) <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("error paths") {
  const Stack stack({Layer::half_space(Vacuum{}), Layer::slab(Vacuum{}, 1e-6),
                     Layer::half_space(PerfectConductor{})});
  const ImagPoint sp{1e15, 0.0};
  CHECK_THROWS_AS(d_function(stack, 0, P, sp), InputError);
  CHECK_THROWS_AS(d_function(stack, 2, P, sp), InputError);
  CHECK_THROWS_AS(stack_reflection(stack, 5, Side::plus, P, sp), InputError);
  CHECK_THROWS_AS(stack_reflection(stack, 1, Side::plus, P, ImagPoint{0.0, 1.0}), InputError);
}
