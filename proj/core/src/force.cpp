#include "casimir/force.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"
#include "casimir/fresnel.hpp"
#include "probe.hpp"

namespace casimir {
namespace {

using constants::hbar;
using constants::pi;

constexpr double kForcePrefactor = hbar / (2.0 * pi * pi);
constexpr double kEnergyPrefactor = hbar / (4.0 * pi * pi);

ForceResult make_force(double value, const QuadratureResult& q) {
  return {value, -value, q};
}

void require_ordered(const Stack& stack, std::size_t j, std::size_t l) {
  detail::require_probe(stack, j);
  detail::require_probe(stack, l);
  if (l < j) {
    throw InputError("relation requires j <= l");
  }
}

QuadratureResult add_errors(QuadratureResult correction, const QuadratureResult& base) {
  correction.abs_error_estimate += base.abs_error_estimate;
  correction.evals += base.evals;
  correction.converged = correction.converged && base.converged;
  return correction;
}

}  // namespace

ForceResult force_per_area(const Stack& stack, std::size_t j, const QuadratureSpec& spec) {
  detail::require_probe(stack, j);
  spec.validate();
  detail::ModesAtXi cache(stack, j);
  auto integrand = [&](double xi, double kap) {
    const auto& modes = cache.at(xi, kap);
    double sum = 0.0;
    for (Polarization q : kPolarizations) {
      const auto pr = modes.pair(j, q);
      const double x = pr.r_minus * pr.r_plus * modes.round_trip(j);
      sum += x / (1.0 - x);
    }
    return kForcePrefactor * kap * sum;
  };
  const auto q = integrate_xi_kappa(integrand, detail::light_line(stack[j].material), spec,
                                    stack.thickness(j));
  return make_force(q.value, q);
}

EnergyResult energy_per_area(const Stack& stack, std::size_t j, const QuadratureSpec& spec) {
  detail::require_probe(stack, j);
  spec.validate();
  detail::ModesAtXi cache(stack, j);
  auto integrand = [&](double xi, double kap) {
    const auto& modes = cache.at(xi, kap);
    double sum = 0.0;
    for (Polarization q : kPolarizations) {
      const auto pr = modes.pair(j, q);
      sum += std::log1p(-pr.r_minus * pr.r_plus * modes.round_trip(j));
    }
    return kEnergyPrefactor * sum;
  };
  const auto q = integrate_xi_kappa(integrand, detail::light_line(stack[j].material), spec,
                                    stack.thickness(j));
  return {q.value, q};
}

EnergyResult energy_via_relation(const Stack& stack, std::size_t j, std::size_t l,
                                 const EnergyResult& energy_j, const QuadratureSpec& spec) {
  require_ordered(stack, j, l);
  spec.validate();
  if (j == l) return energy_j;
  detail::ModesAtXi cache(stack, j);
  auto integrand = [&](double xi, double kap) {
    const auto& modes = cache.at(xi, kap);
    double sum = 0.0;
    for (Polarization q : kPolarizations) {
      const double toward_j = modes.partial_reflection(l, j, q) *
                              modes.reflection(l, Side::plus, q) * modes.round_trip(l);
      const double toward_l = modes.partial_reflection(j, l, q) *
                              modes.reflection(j, Side::minus, q) * modes.round_trip(j);
      sum += std::log1p(-toward_j) - std::log1p(-toward_l);
    }
    return kEnergyPrefactor * sum;
  };
  const double length = std::min(stack.thickness(j), stack.thickness(l));
  const auto q =
      integrate_xi_kappa(integrand, detail::light_line(stack[j].material), spec, length);
  return {energy_j.energy + q.value, add_errors(q, energy_j.quadrature)};
}

ForceResult force_via_relation(const Stack& stack, std::size_t j, std::size_t l,
                               const ForceResult& force_j, const QuadratureSpec& spec) {
  require_ordered(stack, j, l);
  spec.validate();
  if (!(stack[j].material == stack[l].material)) {
    throw InputError("force relation requires layers " + std::to_string(j) + " and " +
                     std::to_string(l) + " to share the same medium");
  }
  if (j == l) return force_j;
  detail::ModesAtXi cache(stack, j);
  auto integrand = [&](double xi, double kap) {
    const auto& modes = cache.at(xi, kap);
    double sum = 0.0;
    for (Polarization q : kPolarizations) {
      const double x_l = modes.partial_reflection(l, j, q) * modes.reflection(l, Side::plus, q) *
                         modes.round_trip(l);
      const double x_j = modes.partial_reflection(j, l, q) *
                         modes.reflection(j, Side::minus, q) * modes.round_trip(j);
      // (1/D_j) [(1 - x_j) / (1 - x_l) - 1] without the cancellation.
      sum += (x_l - x_j) / (modes.d_function(j, q) * (1.0 - x_l));
    }
    return kForcePrefactor * kap * sum;
  };
  const double length = std::min(stack.thickness(j), stack.thickness(l));
  const auto q =
      integrate_xi_kappa(integrand, detail::light_line(stack[j].material), spec, length);
  return make_force(force_j.f_minus + q.value, add_errors(q, force_j.quadrature));
}

IdealCavityResult ideal_cavity_force(const Material& medium, double d,
                                     const QuadratureSpec& spec) {
  validate(medium);
  spec.validate();
  if (!is_lossless(medium)) {
    throw InputError("ideal cavity medium must be lossless (vacuum or constant permittivity)");
  }
  if (!(d > 0.0) || !std::isfinite(d)) {
    throw InputError("cavity width must be finite and > 0");
  }
  using constants::c;
  IdealCavityResult out;

  auto integrand = [d](double, double kap) {
    return (hbar / (pi * pi)) * kap / std::expm1(2.0 * kap * d);
  };
  out.quadrature = integrate_xi_kappa(integrand, detail::light_line(medium), spec, d);
  out.force = out.quadrature.value;

  // (hbar / 3 pi^2 c^3) int dxi xi (d/dxi)[sqrt(eps) xi]^3 / (e^{2 sqrt(eps) xi d / c} - 1)
  auto single = [&medium, d](double xi) {
    const double eps = epsilon_imag_axis(medium, xi);
    const double root = std::sqrt(eps);
    const double cube_rate = 3.0 * root * xi * xi * (eps + 0.5 * xi * epsilon_imag_axis_derivative(medium, xi));
    return hbar / (3.0 * pi * pi * c * c * c) * xi * cube_rate /
           std::expm1(2.0 * root * xi * d / c);
  };
  out.single_quadrature = integrate_halfline(single, spec, c / (2.0 * d));
  out.single_integral = out.single_quadrature.value;
  out.forms_agree = std::abs(out.force - out.single_integral) <=
                    10.0 * spec.rel_tol * std::abs(out.force) + spec.abs_floor;
  return out;
}

ForceResult force_1d(const ImagReflection& r_minus, const ImagReflection& r_plus,
                     const Material& medium, double d, const QuadratureSpec& spec) {
  validate(medium);
  spec.validate();
  if (!is_lossless(medium)) {
    throw InputError("1D force medium must be lossless (vacuum or constant permittivity)");
  }
  if (!(d > 0.0) || !std::isfinite(d)) {
    throw InputError("layer thickness must be finite and > 0");
  }
  const auto k0 = detail::light_line(medium);
  auto integrand = [&](double xi) {
    const double kap = k0(xi);
    const double a = r_minus(xi) * r_plus(xi) * std::exp(-2.0 * kap * d);
    return (2.0 * hbar / pi) * kap * a / (1.0 - a);
  };
  const auto q = integrate_halfline(integrand, spec, constants::c / (2.0 * d));
  return make_force(q.value, q);
}

ForceResult force_1d(const Stack& stack, std::size_t j, const QuadratureSpec& spec) {
  detail::require_probe(stack, j);
  auto side = [&stack, j](Side s) {
    return [&stack, j, s](double xi) {
      StackModes<ImagAxis> modes(stack, xi);
      modes.set_k2(0.0);
      return modes.reflection(j, s, Polarization::p);
    };
  };
  return force_1d(side(Side::minus), side(Side::plus), stack[j].material, stack.thickness(j),
                  spec);
}

double stress_1d_from_d(std::complex<double> a) {
  return -2.0 * (a / (1.0 - a)).real();
}

double stress_1d_from_modulus(std::complex<double> a) {
  return 1.0 - (1.0 - std::norm(a)) / std::norm(1.0 - a);
}

}  // namespace casimir
