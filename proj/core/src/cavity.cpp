#include "casimir/cavity.hpp"

#include <algorithm>
#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"
#include "casimir/fresnel.hpp"
#include "probe.hpp"

namespace casimir {
namespace {

template <class T>
SlabCoeffs<T> slab_impl(Polarization q, T eps, T eps_slab, T wave, T wave_slab, T round_trip,
                        T half_trip) {
  const T eta = q == Polarization::p ? eps * wave_slab / (eps_slab * wave) : wave_slab / wave;
  const T rho = (T(1.0) - eta) / (T(1.0) + eta);
  const T den = T(1.0) - rho * rho * round_trip;
  return {rho * (T(1.0) - round_trip) / den, (T(1.0) - rho * rho) * half_trip / den};
}

void require_length(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw InputError(std::string(name) + " must be finite and > 0");
  }
}

}  // namespace

void CavityConfig::validate() const {
  require_length(d1, "d1");
  require_length(d2, "d2");
  require_length(slab_thickness, "slab thickness");
  casimir::validate(medium);
  casimir::validate(slab);
  if (!is_lossless(medium)) {
    throw InputError("cavity medium must be lossless (vacuum or constant permittivity)");
  }
  if (left_mirror.empty() || right_mirror.empty()) {
    throw InputError("both mirrors need at least one layer");
  }
  (void)assemble();
}

Stack CavityConfig::assemble() const {
  std::vector<Layer> layers = left_mirror;
  layers.push_back(Layer::slab(medium, d1));
  layers.push_back(Layer::slab(slab, slab_thickness));
  layers.push_back(Layer::slab(medium, d2));
  layers.insert(layers.end(), right_mirror.begin(), right_mirror.end());
  return Stack(std::move(layers));
}

SlabCoeffs<double> slab_coefficients(Polarization q, double eps, double eps_slab, double kappa,
                                     double kappa_slab, double thickness) {
  return slab_impl<double>(q, eps, eps_slab, kappa, kappa_slab,
                           std::exp(-2.0 * kappa_slab * thickness),
                           std::exp(-kappa_slab * thickness));
}

SlabCoeffs<std::complex<double>> slab_coefficients(Polarization q, std::complex<double> eps,
                                                   std::complex<double> eps_slab,
                                                   std::complex<double> beta,
                                                   std::complex<double> beta_slab,
                                                   double thickness) {
  using cd = std::complex<double>;
  return slab_impl<cd>(q, eps, eps_slab, beta, beta_slab,
                       std::exp(cd{0.0, 2.0} * beta_slab * thickness),
                       std::exp(cd{0.0, 1.0} * beta_slab * thickness));
}

SlabForceResult slab_in_cavity_force(const CavityConfig& config, const QuadratureSpec& spec) {
  config.validate();
  spec.validate();
  const Stack stack = config.assemble();
  const std::size_t gap1 = config.left_gap();
  const std::size_t gap2 = config.right_gap();
  const std::size_t slab = config.slab_index();
  const bool pec_slab = is_perfect_conductor(config.slab);

  detail::ModesAtXi cache(stack, gap1);
  auto integrand = [&](double xi, double kap) {
    const auto& modes = cache.at(xi, kap);
    const double e1 = modes.round_trip(gap1);
    const double e2 = modes.round_trip(gap2);
    double sum = 0.0;
    for (Polarization q : kPolarizations) {
      const double r1 = modes.reflection(gap1, Side::minus, q);
      const double r2 = modes.reflection(gap2, Side::plus, q);
      SlabCoeffs<double> s{pec_reflection(q), 0.0};
      if (!pec_slab) {
        s = slab_coefficients(q, modes.epsilon(gap1), modes.epsilon(slab), kap,
                              modes.wavenumber(slab), config.slab_thickness);
      }
      const double n = 1.0 - s.r * (r1 * e1 + r2 * e2) + (s.r * s.r - s.t * s.t) * r1 * r2 * e1 * e2;
      sum += s.r * (r2 * e2 - r1 * e1) / n;
    }
    return constants::hbar / (2.0 * constants::pi * constants::pi) * kap * sum;
  };
  const auto q = integrate_xi_kappa(integrand, detail::light_line(config.medium), spec,
                                    std::min(config.d1, config.d2));
  return {q.value, q};
}

}  // namespace casimir
