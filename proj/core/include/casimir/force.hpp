#pragma once

#include <complex>
#include <cstddef>
#include <functional>

#include "casimir/materials.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/stack.hpp"

namespace casimir {

/// Force per unit area on the stacks bounding a layer.
///
/// f_minus acts on the left stack along +z; positive values mean the two
/// bounding stacks attract. f_plus = -f_minus is the force on the right stack.
struct ForceResult {
  double f_minus = 0.0;
  double f_plus = 0.0;
  QuadratureResult quadrature;
};

/// Casimir energy per unit area [J/m^2], zero for an infinitely thick layer.
struct EnergyResult {
  double energy = 0.0;
  QuadratureResult quadrature;
};

/// Zero-temperature force per unit area [Pa] in layer j:
///
///   f_{j-} = (hbar / 2 pi^2) int_0^inf dxi int_0^inf dk k kappa_j
///            sum_q r_{j-} r_{j+} e^{-2 kappa_j d_j} / D_qj(i xi, k).
///
/// Layer j must be finite and lossless (vacuum or constant permittivity); the
/// rest of the stack may be dispersive and absorbing. Throws InputError
/// otherwise. Non-convergence is reported through quadrature.converged.
ForceResult force_per_area(const Stack& stack, std::size_t j, const QuadratureSpec& spec = {});

/// E_j = (hbar / 4 pi^2) int dxi int dk k sum_q ln D_qj(i xi, k), so that
/// f_{j-} = dE_j / dd_j.
EnergyResult energy_per_area(const Stack& stack, std::size_t j, const QuadratureSpec& spec = {});

/// Energy in layer l from the energy in layer j, adding
///   (hbar / 4 pi^2) int int k sum_q ln[(1 - r_{l/j} r_{l+} e_l) / (1 - r_{j/l} r_{j-} e_j)],
/// where r_{j/l} (r_{l/j}) reflects off the layers strictly between j and l.
/// The correction's error estimate is added to energy_j's.
EnergyResult energy_via_relation(const Stack& stack, std::size_t j, std::size_t l,
                                 const EnergyResult& energy_j, const QuadratureSpec& spec = {});

/// Force in layer l from the force in layer j for layers filled with the same
/// medium.
ForceResult force_via_relation(const Stack& stack, std::size_t j, std::size_t l,
                               const ForceResult& force_j, const QuadratureSpec& spec = {});

struct IdealCavityResult {
  /// Double-integral form [Pa].
  double force = 0.0;
  /// Single-integral form obtained by partial integration over xi [Pa].
  double single_integral = 0.0;
  /// |force - single_integral| <= 10 rel_tol |force|.
  bool forms_agree = false;
  QuadratureResult quadrature;
  QuadratureResult single_quadrature;
};

/// Force on the left mirror of an ideal (perfectly reflecting) cavity of
/// width d filled with a lossless medium, evaluated both ways.
IdealCavityResult ideal_cavity_force(const Material& medium, double d,
                                     const QuadratureSpec& spec = {});

/// Reflection amplitude on the imaginary axis as a function of xi [rad/s].
using ImagReflection = std::function<double(double)>;

/// Normal-incidence (k = 0) force,
///   (2 hbar / pi) int_0^inf dxi kappa_0 a / (1 - a),  a = r_- r_+ e^{-2 kappa_0 d},
/// with kappa_0 = sqrt(eps(i xi)) xi / c.
ForceResult force_1d(const ImagReflection& r_minus, const ImagReflection& r_plus,
                     const Material& medium, double d, const QuadratureSpec& spec = {});

/// force_1d with the k = 0 reflection coefficients of the stacks bounding
/// layer j.
ForceResult force_1d(const Stack& stack, std::size_t j, const QuadratureSpec& spec = {});

/// The two real-axis forms of the normal-incidence stress integrand for a
/// round-trip amplitude a, |a| < 1: -2 Re[a / (1 - a)] and
/// 1 - (1 - |a|^2) / |1 - a|^2. They are algebraically identical.
double stress_1d_from_d(std::complex<double> a);
double stress_1d_from_modulus(std::complex<double> a);

}  // namespace casimir
