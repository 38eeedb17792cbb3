#pragma once

// Shared plumbing for the imaginary-axis integrands.

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"
#include "casimir/fresnel.hpp"

namespace casimir::detail {

/// Throws unless layer j is finite and lossless.
inline void require_probe(const Stack& stack, std::size_t j) {
  const Layer& layer = stack.at(j);
  (void)stack.thickness(j);
  if (!is_lossless(layer.material)) {
    throw InputError("layer " + std::to_string(j) + " (" + describe(layer.material) +
                     ") must be lossless (vacuum or constant permittivity) to probe its stress");
  }
}

/// Holds the per-frequency StackModes of the current outer node. The inner
/// integral sweeps kappa at fixed xi, so permittivities are evaluated once
/// per xi.
class ModesAtXi {
 public:
  ModesAtXi(const Stack& stack, std::size_t j) : stack_(stack), j_(j) {}

  /// Modes at (xi, kappa_j), with k^2 = kappa^2 - kappa_0^2.
  const StackModes<ImagAxis>& at(double xi, double kappa) {
    if (!modes_ || xi != xi_) {
      modes_.emplace(stack_, xi);
      xi_ = xi;
      kappa0_ = std::sqrt(modes_->epsilon(j_)) * xi / constants::c;
    }
    const double k2 = (kappa - kappa0_) * (kappa + kappa0_);
    modes_->set_k2(k2 > 0.0 ? k2 : 0.0);
    return *modes_;
  }

 private:
  const Stack& stack_;
  std::size_t j_;
  std::optional<StackModes<ImagAxis>> modes_;
  double xi_ = 0.0;
  double kappa0_ = 0.0;
};

/// kappa_0(xi) = sqrt(eps(i xi)) xi / c for a non-conducting material.
inline auto light_line(const Material& m) {
  return [&m](double xi) { return std::sqrt(epsilon_imag_axis(m, xi)) * xi / constants::c; };
}

}  // namespace casimir::detail
