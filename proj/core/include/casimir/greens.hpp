#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>

#include "casimir/fresnel.hpp"
#include "casimir/stack.hpp"

namespace casimir {

// Equal-point scattered Green function of a planar multilayer at real
// frequency, per transverse mode. Every quantity here is the integrand of
// int d^2k / (2 pi)^2, i.e. the common measure is stripped so that checks are
// pointwise in (omega, k). Components are taken in the mode basis
// (k_hat, n_hat = k_hat x z_hat, z_hat).

using Dyadic = std::array<std::array<std::complex<double>, 3>, 3>;

enum class FieldKind { electric, magnetic };

struct GreensDiagonal {
  std::complex<double> g_kk, g_nn, g_zz;
  std::complex<double> gb_kk, gb_nn, gb_zz;
  double z = 0.0;

  std::complex<double> parallel() const { return g_kk + g_nn; }
  std::complex<double> magnetic_parallel() const { return gb_kk + gb_nn; }
};

/// Diagonal of the equal-point scattered dyadic from its compact form, e.g.
///   g_kk = (2 pi i / (kt^2 beta)) (beta^2 / D_p) [2 R_p - r^p_- e^{2i beta z} - r^p_+ e^{2i beta (d - z)}],
/// with R_q = r^q_- r^q_+ e^{2 i beta d} and kt = sqrt(eps_j) omega / c. The
/// magnetic part is kt^2 times the electric one with p and s exchanged.
/// Layer j must be finite and lossless; 0 <= z <= d_j.
GreensDiagonal greens_diagonal(const Stack& stack, std::size_t j, double z, const RealPoint& sp);

/// Full equal-point dyadic assembled from the plane-wave expansion with
/// explicit polarization vectors. The magnetic dyadic uses the curl rule:
/// multiply by -kt^2 and swap the polarization vectors of p and s.
Dyadic greens_dyadic(const Stack& stack, std::size_t j, double z, const RealPoint& sp,
                     FieldKind kind);

struct StressBracket {
  /// kt^2 (G_zz - G_par) + G^B_zz - G^B_par from the diagonal elements.
  std::complex<double> from_greens;
  /// -8 pi i beta sum_q R_q / D_q.
  std::complex<double> closed_form;
};

StressBracket stress_bracket(const Stack& stack, std::size_t j, double z, const RealPoint& sp);

struct GreensCheck {
  /// max |b(z) - b(z0)| / |b(z0)| over all cases and z samples.
  double max_z_variation = 0.0;
  /// max |b(z) - closed| / |closed|.
  double max_closed_form_deviation = 0.0;
  int cases = 0;
};

/// Random absorbing five-layer stacks with a lossless probe layer in the
/// middle, checked at propagating and evanescent (omega, k) and several z.
GreensCheck verify_greens(std::uint64_t seed = 20020718, int stacks = 10, int points = 4,
                          int z_samples = 5);

}  // namespace casimir
