#pragma once

#include <cstdint>
#include <functional>

namespace casimir {

/// Tolerances for the adaptive integrators.
struct QuadratureSpec {
  double rel_tol = 1e-8;
  /// Absolute error below which the relative tolerance is waived, in the
  /// units of the integrated quantity.
  double abs_floor = 1e-30;
  std::int64_t max_evals = 10'000'000;

  /// Throws InputError unless rel_tol is in (0, 1e-2] and max_evals >= 1000.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::int64_t evals = 0;
  bool converged = true;
};

/// Integral of f over [0, inf) by globally adaptive 15-point Gauss-Kronrod
/// panels on the map x = scale * u / (1 - u), u in (0, 1). No node ever sits on
/// an endpoint, so f(0) and f(inf) are never evaluated. `scale` should be the
/// length over which f decays.
QuadratureResult integrate_halfline(const std::function<double(double)>& f,
                                    const QuadratureSpec& spec, double scale = 1.0);

/// Adaptive integral of f over the open interval (a, b).
QuadratureResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureSpec& spec);

/// I = int_0^inf dxi int_{kappa0(xi)}^inf dkappa kappa f(xi, kappa)
///
/// This is the transverse-wavevector integral int_0^inf dk k (...) rewritten
/// through k dk = kappa dkappa; the measure factor kappa is supplied here, so
/// f must not include it. `length` sets the node placement:
///   xi    = (c / 2 length) v / (1 - v),
///   kappa = kappa0 + (1 / 2 length) u / (1 - u).
/// Inner kappa integrals run at rel_tol / 10 and their error estimates are
/// carried into the outer estimate. Evaluation is sequential with a fixed
/// summation order, so results are bit-reproducible.
QuadratureResult integrate_xi_kappa(const std::function<double(double, double)>& f,
                                    const std::function<double(double)>& kappa0,
                                    const QuadratureSpec& spec, double length);

}  // namespace casimir
