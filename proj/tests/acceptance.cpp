// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "casimir/cavity.hpp"
#include "casimir/constants.hpp"
#include "casimir/force.hpp"
#include "casimir/fresnel.hpp"
#include "casimir/greens.hpp"
#include "oracles.hpp"

using namespace casimir;
using constants::hbar;
using constants::ideal_energy;
using constants::ideal_pressure;
using constants::pi;
using fixtures::uniform;

namespace {

int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("criterion %d %-38s %s  %s\n", id, title, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

Stack gap(const Material& outer, const Material& medium, double d) {
  return Stack({Layer::half_space(outer), Layer::slab(medium, d), Layer::half_space(outer)});
}

void ideal_pressure_check() {
  const double d = 1e-6;
  const auto t0 = std::chrono::steady_clock::now();
  const ForceResult f = force_per_area(gap(PerfectConductor{}, Vacuum{}, d), 1);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double err = rel(f.f_minus, ideal_pressure(d));
  const bool ok = f.quadrature.converged && err <= 1e-6 && rel(f.f_minus, 1.30013e-3) <= 1e-5 &&
                  seconds < 1.0;
  report(1, "ideal Casimir pressure", ok,
         fmt("f=%.9e Pa rel_err=%.2e runtime=%.3fs", f.f_minus, err, seconds));
}

void dispersive_cavity_check() {
  const double d = 1e-6;
  const IdealCavityResult r = ideal_cavity_force(ConstantEpsilon{4.0}, d);
  const double target = ideal_pressure(d) / 2.0;
  const double err = rel(r.force, target);
  const double forms = rel(r.single_integral, r.force);
  const bool ok = r.quadrature.converged && r.single_quadrature.converged && err <= 1e-6 &&
                  forms <= 1e-5;
  report(2, "dispersive ideal cavity", ok,
         fmt("f=%.9e Pa rel_err=%.2e forms_diff=%.2e", r.force, err, forms));
}

void energy_force_check() {
  const double d = 1e-6;
  const EnergyResult e = energy_per_area(gap(PerfectConductor{}, Vacuum{}, d), 1);
  const double e_err = rel(e.energy, ideal_energy(d));
  bool ok = e.quadrature.converged && e_err <= 1e-6;

  std::mt19937_64 rng(3001);
  const QuadratureSpec spec{1e-10};
  double worst = 0.0;
  for (int n = 0; n < 5; ++n) {
    const Stack s = fixtures::five_layer(rng);
    const std::size_t j = n % 2 == 0 ? 1 : 3;
    const double dj = s.thickness(j);
    const double h = 1e-4 * dj;
    const EnergyResult ep = energy_per_area(s.with_thickness(j, dj + h), j, spec);
    const EnergyResult em = energy_per_area(s.with_thickness(j, dj - h), j, spec);
    const ForceResult f = force_per_area(s, j, spec);
    ok = ok && ep.quadrature.converged && em.quadrature.converged && f.quadrature.converged;
    worst = std::max(worst, rel((ep.energy - em.energy) / (2.0 * h), f.f_minus));
  }
  ok = ok && worst <= 1e-4;
  report(3, "energy-force consistency", ok,
         fmt("E=%.9e J/m^2 rel_err=%.2e worst_fd_rel=%.2e", e.energy, e_err, worst));
}

void lifshitz_check() {
  const double d = 1e-6;
  const ForceResult f = force_per_area(gap(ConstantEpsilon{2.0}, Vacuum{}, d), 1, QuadratureSpec{1e-10});
  const double grid = oracle::lifshitz_grid(2.0, d, 10000);
  const double err = rel(f.f_minus, grid);
  const bool ok = f.quadrature.converged && err <= 1e-4 && f.f_minus > 0.0 &&
                  f.f_minus < ideal_pressure(d);
  report(4, "Lifshitz oracle", ok,
         fmt("f=%.9e Pa grid=%.9e rel_diff=%.2e", f.f_minus, grid, err));
}

void d_identity_check() {
  std::mt19937_64 rng(5001);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const Stack s = fixtures::five_layer(rng);
    const ImagPoint sp{uniform(rng, 1e13, 3e15), uniform(rng, 0.0, 1e7)};
    StackModes<ImagAxis> m(s, sp.xi);
    m.set_k(sp.k);
    for (Polarization q : kPolarizations) {
      const auto pj = m.pair(1, q);
      const auto pl = m.pair(3, q);
      const double lhs = pl.d * (1.0 - m.partial_reflection(1, 3, q) * pj.r_minus * m.round_trip(1));
      const double rhs = pj.d * (1.0 - m.partial_reflection(3, 1, q) * pl.r_plus * m.round_trip(3));
      worst = std::max(worst, rel(lhs, rhs));
    }
  }
  report(5, "D-function identity", worst <= 1e-12, fmt("draws=1000 worst_rel=%.2e", worst));
}

void greens_check() {
  const GreensCheck c = verify_greens(20020718, 10, 4, 5);
  const bool ok = c.cases == 40 && c.max_z_variation < 1e-10 && c.max_closed_form_deviation < 1e-10;
  report(6, "appendix cancellation", ok,
         fmt("cases=%.0f z_variation=%.2e closed_form_dev=%.2e", c.cases, c.max_z_variation,
             c.max_closed_form_deviation));
}

void slab_check() {
  const double d1 = 1e-6;
  CavityConfig centred;
  centred.slab = ConstantEpsilon{5.0};
  centred.slab_thickness = 1e-7;
  centred.d1 = d1;
  centred.d2 = d1;
  const double scale = ideal_pressure(d1);
  const double centred_f = std::abs(slab_in_cavity_force(centred).force) / scale;

  CavityConfig pec = centred;
  pec.slab = PerfectConductor{};
  pec.d2 = 0.5e-6;
  const SlabForceResult p = slab_in_cavity_force(pec);
  const double pec_err = rel(p.force, ideal_pressure(0.5e-6) - ideal_pressure(d1));

  std::mt19937_64 rng(7001);
  const QuadratureSpec spec{1e-10};
  double worst = 0.0;
  bool converged = p.quadrature.converged;
  for (int n = 0; n < 5; ++n) {
    CavityConfig c;
    c.medium = fixtures::lossless(rng);
    c.slab = fixtures::absorbing(rng);
    c.slab_thickness = 1e-9 * uniform(rng, 10.0, 100.0);
    c.d1 = 1e-7 * uniform(rng, 2.0, 5.0);
    c.d2 = 1e-7 * uniform(rng, 6.0, 10.0);
    c.left_mirror = {Layer::half_space(fixtures::absorbing(rng))};
    c.right_mirror = {Layer::slab(fixtures::lossless(rng), 1e-7 * uniform(rng, 1.0, 3.0)),
                      Layer::half_space(fixtures::absorbing(rng))};
    const Stack s = c.assemble();
    const ForceResult f2 = force_per_area(s, c.right_gap(), spec);
    const ForceResult f1 = force_per_area(s, c.left_gap(), spec);
    const SlabForceResult closed = slab_in_cavity_force(c, spec);
    converged = converged && f1.quadrature.converged && f2.quadrature.converged &&
                closed.quadrature.converged;
    worst = std::max(worst, rel(closed.force, f2.f_minus - f1.f_minus));
  }
  const bool ok = converged && centred_f < 1e-12 && pec_err <= 1e-6 &&
                  rel(p.force, 1.9502e-2) <= 1e-4 && worst <= 1e-5;
  report(7, "slab in cavity", ok,
         fmt("centred=%.2e pec_f=%.9e Pa pec_rel_err=%.2e worst_vs_generic=%.2e", centred_f,
             p.force, pec_err, worst));
}

void recursion_check() {
  std::mt19937_64 rng(8001);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const Stack s = fixtures::five_layer(rng);
    const ImagPoint isp{uniform(rng, 1e13, 3e14), uniform(rng, 0.0, 1e6)};
    const double omega = uniform(rng, 1e14, 1e15);
    const RealPoint rsp{omega, uniform(rng, 0.0, 1.5) * omega / constants::c};
    for (Polarization q : kPolarizations) {
      for (std::size_t j : {0u, 1u, 3u}) {
        const std::complex<double> a = stack_reflection(s, j, Side::plus, q, isp);
        const auto b = oracle::stack_reflection_imag(s, j, true, q, isp);
        const auto c = stack_reflection(s, j, Side::plus, q, rsp);
        const auto e = oracle::stack_reflection_real(s, j, true, q, rsp);
        worst = std::max({worst, std::abs(a - b) / std::max(std::abs(b), 1e-3),
                          std::abs(c - e) / std::max(std::abs(e), 1e-3)});
      }
    }
  }

  std::mt19937_64 frng(8002);
  const QuadratureSpec spec{1e-9};
  double insertion = 0.0;
  for (int n = 0; n < 3; ++n) {
    const Stack s = fixtures::five_layer(frng);
    const Stack thin = s.with_inserted(2, Layer::slab(fixtures::absorbing(frng), 1e-30));
    const double f = force_per_area(s, 1, spec).f_minus;
    const double g = force_per_area(thin, 1, spec).f_minus;
    insertion = std::max(insertion, rel(g, f));
  }
  const bool ok = worst <= 1e-12 && insertion < 1e-10;
  report(8, "Fresnel recursion vs transfer matrix", ok,
         fmt("draws=1000 worst_rel=%.2e insertion_rel=%.2e", worst, insertion));
}

void one_dimensional_check() {
  const double d = 1e-6;
  auto one = [](double) { return 1.0; };
  const ForceResult f = force_1d(one, one, Vacuum{}, d);
  const double err = rel(f.f_minus, oracle::ideal_1d_force(d));

  std::mt19937_64 rng(9001);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const auto a = std::polar(uniform(rng, 0.0, 0.999), uniform(rng, -pi, pi));
    const double x = stress_1d_from_d(a);
    const double y = stress_1d_from_modulus(a);
    worst = std::max(worst, std::abs(x - y) / std::max(1.0, std::abs(x)));
  }
  const bool ok = f.quadrature.converged && err <= 1e-6 && worst <= 1e-14;
  report(9, "1D reduction", ok,
         fmt("f_1d=%.9e rel_err=%.2e identity_worst=%.2e", f.f_minus, err, worst));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> checks{
      ideal_pressure_check, dispersive_cavity_check, energy_force_check,
      lifshitz_check,       d_identity_check,        greens_check,
      slab_check,           recursion_check,         one_dimensional_check};
  for (const auto& check : checks) {
    try {
      check();
    } catch (const std::exception& e) {
      std::printf("criterion threw: %s\n", e.what());
      ++failures;
    }
  }
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
