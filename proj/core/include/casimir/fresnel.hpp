#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "casimir/stack.hpp"

namespace casimir {

/// Real angular frequency omega [rad/s] and transverse wavenumber k [1/m].
struct RealPoint {
  double omega;
  double k;
};

/// Imaginary frequency omega = i xi, xi [rad/s], transverse wavenumber k [1/m].
struct ImagPoint {
  double xi;
  double k;
};

enum class Side { minus, plus };

/// Perpendicular wavenumber sqrt(eps w^2/c^2 - k^2) on the branch with
/// non-negative imaginary part (and non-negative real part for passive media).
std::complex<double> beta(std::complex<double> eps, double omega, double k);

/// Decay constant sqrt(eps(i xi) xi^2/c^2 + k^2); beta(i xi, k) = i kappa.
double kappa(double eps_imag, double xi, double k);

template <class T>
struct InterfaceCoeffs {
  T r;
  T t;
};

/// Single-interface Fresnel coefficients for a wave in medium i hitting
/// medium j:
///   r = (b_i - g b_j) / (b_i + g b_j),  t = sqrt(g) (1 + r),
/// with g = eps_i/eps_j for p and g = 1 for s. On the imaginary axis pass the
/// decay constants kappa in place of beta; the common factor i cancels.
/// Throws PoleError if the denominator vanishes.
InterfaceCoeffs<double> interface_coeffs(Polarization q, double eps_i, double eps_j,
                                         double kappa_i, double kappa_j);
InterfaceCoeffs<std::complex<double>> interface_coeffs(Polarization q, std::complex<double> eps_i,
                                                       std::complex<double> eps_j,
                                                       std::complex<double> beta_i,
                                                       std::complex<double> beta_j);

/// r_{j-}, r_{j+} and D_j = 1 - r_{j-} r_{j+} exp(2 i beta_j d_j) for one
/// layer, polarization and spectral point.
template <class T>
struct ReflectionPair {
  T r_minus;
  T r_plus;
  T d;
};

struct ImagAxis {
  using Scalar = double;
};
struct RealAxis {
  using Scalar = std::complex<double>;
};

/// Per-layer wave data of a stack at one frequency, the scratch context shared
/// by all reflection queries of a single spectral point.
///
/// Construct once per frequency (evaluates every permittivity), then call
/// set_k() for each transverse wavenumber. On ImagAxis every quantity is real:
/// wavenumber() is kappa_j and round_trip() is exp(-2 kappa_j d_j), flushed to
/// zero below 1e-300. On RealAxis wavenumber() is beta_j and round_trip() is
/// exp(2 i beta_j d_j).
template <class Axis>
class StackModes {
 public:
  using Scalar = typename Axis::Scalar;

  StackModes(const Stack& stack, double frequency);

  void set_k(double k) { set_k2(k * k); }
  /// Sets the squared transverse wavenumber k^2 >= 0.
  void set_k2(double k2);

  const Stack& stack() const { return *stack_; }
  double frequency() const { return frequency_; }
  Scalar epsilon(std::size_t j) const { return eps_[j]; }
  Scalar wavenumber(std::size_t j) const { return wave_[j]; }
  Scalar round_trip(std::size_t j) const { return round_trip_[j]; }

  /// r_{j-} (stack left of j) or r_{j+} (stack right of j) seen from layer j.
  /// The outermost layers see nothing: r_{0-} = r_{n+} = 0.
  Scalar reflection(std::size_t j, Side side, Polarization q) const;

  /// Reflection seen from layer `from` of the layers strictly between `from`
  /// and `to`, with `to` taken as semi-infinite. Truncated at the first
  /// perfect conductor on the way.
  Scalar partial_reflection(std::size_t from, std::size_t to, Polarization q) const;

  /// Transmission amplitude t_{from/.../to} through the layers strictly
  /// between, zero if a perfect conductor lies in the way.
  Scalar transmission(std::size_t from, std::size_t to, Polarization q) const;

  /// D_qj for a finite, non-conducting layer j.
  Scalar d_function(std::size_t j, Polarization q) const;

  ReflectionPair<Scalar> pair(std::size_t j, Polarization q) const;

 private:
  struct Interface {
    Scalar r_fwd, r_bwd, t_fwd, t_bwd;
  };
  Interface interface(std::size_t i, std::size_t j, Polarization q) const;
  std::size_t stop_index(std::size_t from, std::size_t to) const;
  void require_probe_layer(std::size_t j) const;

  const Stack* stack_;
  double frequency_;
  std::vector<bool> pec_;
  std::vector<Scalar> eps_;
  std::vector<Scalar> wave_;
  std::vector<Scalar> half_trip_;
  std::vector<Scalar> round_trip_;
};

extern template class StackModes<ImagAxis>;
extern template class StackModes<RealAxis>;

double stack_reflection(const Stack& stack, std::size_t j, Side side, Polarization q,
                        const ImagPoint& sp);
std::complex<double> stack_reflection(const Stack& stack, std::size_t j, Side side,
                                      Polarization q, const RealPoint& sp);

double stack_transmission(const Stack& stack, std::size_t from, std::size_t to, Polarization q,
                          const ImagPoint& sp);
std::complex<double> stack_transmission(const Stack& stack, std::size_t from, std::size_t to,
                                        Polarization q, const RealPoint& sp);

double d_function(const Stack& stack, std::size_t j, Polarization q, const ImagPoint& sp);
std::complex<double> d_function(const Stack& stack, std::size_t j, Polarization q,
                                const RealPoint& sp);

}  // namespace casimir
