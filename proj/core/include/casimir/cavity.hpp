#pragma once

#include <complex>
#include <vector>

#include "casimir/force.hpp"
#include "casimir/stack.hpp"

namespace casimir {

/// A slab of thickness l between two mirrors, separated from them by gaps
/// d1 (left) and d2 (right) of a lossless medium:
///
///   left_mirror | medium(d1) | slab(l) | medium(d2) | right_mirror
///
/// Mirror layers are listed left to right; the outermost mirror layer must be
/// a half-space or a perfect conductor.
struct CavityConfig {
  Material medium = Vacuum{};
  Material slab = PerfectConductor{};
  double slab_thickness = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  std::vector<Layer> left_mirror{Layer::half_space(PerfectConductor{})};
  std::vector<Layer> right_mirror{Layer::half_space(PerfectConductor{})};

  std::size_t left_gap() const { return left_mirror.size(); }
  std::size_t slab_index() const { return left_mirror.size() + 1; }
  std::size_t right_gap() const { return left_mirror.size() + 2; }

  /// Throws InputError on non-positive gaps or thickness, a lossy medium, or
  /// an invalid assembled stack.
  void validate() const;

  /// The full five-region (or longer) stack.
  Stack assemble() const;
};

template <class T>
struct SlabCoeffs {
  T r;
  T t;
};

/// Reflection and transmission of a slab embedded symmetrically in one
/// medium, from the medium-slab interface coefficient rho = (1 - eta) /
/// (1 + eta), eta^p = eps kappa_s / (eps_s kappa), eta^s = kappa_s / kappa:
///   r = rho (1 - E) / (1 - rho^2 E),  t = (1 - rho^2) e^{-kappa_s l} / (1 - rho^2 E),
/// E = e^{-2 kappa_s l}. Imaginary axis; pass decay constants.
SlabCoeffs<double> slab_coefficients(Polarization q, double eps, double eps_slab, double kappa,
                                     double kappa_slab, double thickness);

/// Same on the real axis with perpendicular wavenumbers beta, E = e^{2 i beta_s l}.
SlabCoeffs<std::complex<double>> slab_coefficients(Polarization q, std::complex<double> eps,
                                                   std::complex<double> eps_slab,
                                                   std::complex<double> beta,
                                                   std::complex<double> beta_slab,
                                                   double thickness);

struct SlabForceResult {
  /// Force per unit area on the slab along +z [Pa], f_{2-} - f_{1-}.
  double force = 0.0;
  QuadratureResult quadrature;
};

/// Net force on the slab from the closed-form cavity expression
///   (hbar / 2 pi^2) int dxi int dk k kappa sum_q r (r2 e2 - r1 e1) / N,
///   N = 1 - r (r1 e1 + r2 e2) + (r^2 - t^2) r1 r2 e1 e2,  e_i = e^{-2 kappa d_i},
/// where r1, r2 are the mirror reflections seen from the gaps and r, t the
/// slab coefficients. A perfectly conducting slab has r^p = -r^s = 1, t = 0.
SlabForceResult slab_in_cavity_force(const CavityConfig& config, const QuadratureSpec& spec = {});

}  // namespace casimir
