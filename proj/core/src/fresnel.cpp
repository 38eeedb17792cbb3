#include "casimir/fresnel.hpp"

#include <cmath>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"

namespace casimir {
namespace {

using cd = std::complex<double>;

constexpr double kUnderflow = 1e-300;

void require_point(double frequency, double k) {
  if (!(frequency > 0.0) || !std::isfinite(frequency)) {
    throw InputError("frequency must be finite and > 0");
  }
  if (!(k >= 0.0) || !std::isfinite(k)) {
    throw InputError("transverse wavenumber must be finite and >= 0");
  }
}

template <class T>
InterfaceCoeffs<T> interface_impl(Polarization q, T eps_i, T eps_j, T b_i, T b_j) {
  const T gamma = q == Polarization::p ? eps_i / eps_j : T(1.0);
  const T den = b_i + gamma * b_j;
  if (den == T(0.0)) {
    throw PoleError("interface coefficient pole: b_i + gamma b_j = 0");
  }
  const T r = (b_i - gamma * b_j) / den;
  return {r, std::sqrt(gamma) * (T(1.0) + r)};
}

struct ImagTraits {
  static double epsilon(const Material& m, double xi) { return epsilon_imag_axis(m, xi); }
  static double wave(double eps, double xi, double k2) {
    const double x = xi / constants::c;
    return std::sqrt(eps * x * x + k2);
  }
  static double trip(double kappa, double d) {
    const double e = std::exp(-2.0 * kappa * d);
    return e < kUnderflow ? 0.0 : e;
  }
  static double half(double kappa, double d) { return std::exp(-kappa * d); }
};

struct RealTraits {
  static cd epsilon(const Material& m, double omega) { return epsilon_real_axis(m, omega); }
  static cd wave(cd eps, double omega, double k2) {
    const double x = omega / constants::c;
    cd b = std::sqrt(eps * (x * x) - k2);
    if (b.imag() < 0.0) b = -b;
    return b;
  }
  static cd trip(cd beta, double d) { return std::exp(cd{0.0, 2.0} * beta * d); }
  static cd half(cd beta, double d) { return std::exp(cd{0.0, 1.0} * beta * d); }
};

template <class Axis>
struct TraitsFor;
template <>
struct TraitsFor<ImagAxis> {
  using type = ImagTraits;
};
template <>
struct TraitsFor<RealAxis> {
  using type = RealTraits;
};

}  // namespace

std::complex<double> beta(std::complex<double> eps, double omega, double k) {
  require_point(omega, k);
  return RealTraits::wave(eps, omega, k * k);
}

double kappa(double eps_imag, double xi, double k) {
  require_point(xi, k);
  return ImagTraits::wave(eps_imag, xi, k * k);
}

InterfaceCoeffs<double> interface_coeffs(Polarization q, double eps_i, double eps_j,
                                         double kappa_i, double kappa_j) {
  return interface_impl<double>(q, eps_i, eps_j, kappa_i, kappa_j);
}

InterfaceCoeffs<cd> interface_coeffs(Polarization q, cd eps_i, cd eps_j, cd beta_i, cd beta_j) {
  return interface_impl<cd>(q, eps_i, eps_j, beta_i, beta_j);
}

template <class Axis>
StackModes<Axis>::StackModes(const Stack& stack, double frequency)
    : stack_(&stack), frequency_(frequency) {
  require_point(frequency, 0.0);
  const std::size_t n = stack.size();
  pec_.resize(n);
  eps_.assign(n, Scalar(1.0));
  wave_.assign(n, Scalar(0.0));
  half_trip_.assign(n, Scalar(0.0));
  round_trip_.assign(n, Scalar(0.0));
  for (std::size_t j = 0; j < n; ++j) {
    pec_[j] = is_perfect_conductor(stack[j].material);
    if (!pec_[j]) eps_[j] = TraitsFor<Axis>::type::epsilon(stack[j].material, frequency);
  }
}

template <class Axis>
void StackModes<Axis>::set_k2(double k2) {
  using Tr = typename TraitsFor<Axis>::type;
  if (!(k2 >= 0.0) || !std::isfinite(k2)) {
    throw InputError("transverse wavenumber must be finite and >= 0");
  }
  const std::size_t n = stack_->size();
  for (std::size_t j = 0; j < n; ++j) {
    if (pec_[j]) continue;
    wave_[j] = Tr::wave(eps_[j], frequency_, k2);
    const Layer& layer = (*stack_)[j];
    if (layer.thickness && j != 0 && j + 1 != n) {
      round_trip_[j] = Tr::trip(wave_[j], *layer.thickness);
      half_trip_[j] = Tr::half(wave_[j], *layer.thickness);
    } else {
      round_trip_[j] = Scalar(0.0);
      half_trip_[j] = Scalar(0.0);
    }
  }
}

template <class Axis>
typename StackModes<Axis>::Interface StackModes<Axis>::interface(std::size_t i, std::size_t j,
                                                                 Polarization q) const {
  const auto fwd = interface_impl<Scalar>(q, eps_[i], eps_[j], wave_[i], wave_[j]);
  // Reverse coefficients share the square-root branch of the forward ones so
  // that t_ij t_ji = 1 - r_ij^2 holds for any complex permittivities.
  const Scalar sqrt_gamma = q == Polarization::p ? std::sqrt(eps_[i] / eps_[j]) : Scalar(1.0);
  const Scalar r_bwd = -fwd.r;
  return {fwd.r, r_bwd, fwd.t, (Scalar(1.0) + r_bwd) / sqrt_gamma};
}

template <class Axis>
std::size_t StackModes<Axis>::stop_index(std::size_t from, std::size_t to) const {
  std::size_t m = from;
  do {
    m = to > from ? m + 1 : m - 1;
  } while (m != to && !pec_[m]);
  return m;
}

template <class Axis>
void StackModes<Axis>::require_probe_layer(std::size_t j) const {
  if (j >= stack_->size()) {
    throw InputError("layer index " + std::to_string(j) + " out of range [0, " +
                     std::to_string(stack_->last()) + "]");
  }
  if (pec_[j]) {
    throw InputError("layer " + std::to_string(j) + " is a perfect conductor");
  }
}

template <class Axis>
typename StackModes<Axis>::Scalar StackModes<Axis>::partial_reflection(std::size_t from,
                                                                       std::size_t to,
                                                                       Polarization q) const {
  require_probe_layer(from);
  if (to >= stack_->size() || to == from) {
    throw InputError("partial reflection needs a distinct target layer in range");
  }
  const std::size_t end = stop_index(from, to);
  const bool rightward = end > from;
  auto toward_from = [rightward](std::size_t m) { return rightward ? m - 1 : m + 1; };

  // Start at the far boundary and fold inward, one finite layer at a time:
  // r_{h/i/...} = r_{hi} + t_{hi} t_{ih} R e_i / (1 - r_{ih} R e_i).
  std::size_t i = toward_from(end);
  Scalar acc = pec_[end] ? Scalar(pec_reflection(q)) : interface(i, end, q).r_fwd;
  while (i != from) {
    const std::size_t h = toward_from(i);
    const Interface hi = interface(h, i, q);
    const Scalar e = round_trip_[i];
    acc = hi.r_fwd + hi.t_fwd * hi.t_bwd * acc * e / (Scalar(1.0) - hi.r_bwd * acc * e);
    i = h;
  }
  return acc;
}

template <class Axis>
typename StackModes<Axis>::Scalar StackModes<Axis>::reflection(std::size_t j, Side side,
                                                               Polarization q) const {
  require_probe_layer(j);
  if (side == Side::plus) {
    return j == stack_->last() ? Scalar(0.0) : partial_reflection(j, stack_->last(), q);
  }
  return j == 0 ? Scalar(0.0) : partial_reflection(j, 0, q);
}

template <class Axis>
typename StackModes<Axis>::Scalar StackModes<Axis>::transmission(std::size_t from, std::size_t to,
                                                                 Polarization q) const {
  require_probe_layer(from);
  require_probe_layer(to);
  if (to == from) {
    throw InputError("transmission needs two distinct layers");
  }
  if (stop_index(from, to) != to) return Scalar(0.0);
  const bool rightward = to > from;
  auto toward_from = [rightward](std::size_t m) { return rightward ? m - 1 : m + 1; };

  // t_{h/i/...} = t_{hi} T e^{i beta_i d_i} / (1 - r_{ih} R e_i), folding from
  // the far end; R is the reflection from i toward `to`.
  std::size_t i = toward_from(to);
  Interface last = interface(i, to, q);
  Scalar acc_t = last.t_fwd;
  Scalar acc_r = last.r_fwd;
  while (i != from) {
    const std::size_t h = toward_from(i);
    const Interface hi = interface(h, i, q);
    const Scalar e = round_trip_[i];
    const Scalar den = Scalar(1.0) - hi.r_bwd * acc_r * e;
    acc_t = hi.t_fwd * acc_t * half_trip_[i] / den;
    acc_r = hi.r_fwd + hi.t_fwd * hi.t_bwd * acc_r * e / den;
    i = h;
  }
  return acc_t;
}

template <class Axis>
typename StackModes<Axis>::Scalar StackModes<Axis>::d_function(std::size_t j,
                                                               Polarization q) const {
  return pair(j, q).d;
}

template <class Axis>
ReflectionPair<typename StackModes<Axis>::Scalar> StackModes<Axis>::pair(std::size_t j,
                                                                        Polarization q) const {
  require_probe_layer(j);
  if (j == 0 || j == stack_->last()) {
    throw InputError("layer " + std::to_string(j) + " is semi-infinite; D needs a finite layer");
  }
  const Scalar rm = reflection(j, Side::minus, q);
  const Scalar rp = reflection(j, Side::plus, q);
  return {rm, rp, Scalar(1.0) - rm * rp * round_trip_[j]};
}

template class StackModes<ImagAxis>;
template class StackModes<RealAxis>;

namespace {

template <class Axis>
StackModes<Axis> modes_at(const Stack& stack, double frequency, double k) {
  require_point(frequency, k);
  StackModes<Axis> modes(stack, frequency);
  modes.set_k(k);
  return modes;
}

}  // namespace

double stack_reflection(const Stack& stack, std::size_t j, Side side, Polarization q,
                        const ImagPoint& sp) {
  return modes_at<ImagAxis>(stack, sp.xi, sp.k).reflection(j, side, q);
}

cd stack_reflection(const Stack& stack, std::size_t j, Side side, Polarization q,
                    const RealPoint& sp) {
  return modes_at<RealAxis>(stack, sp.omega, sp.k).reflection(j, side, q);
}

double stack_transmission(const Stack& stack, std::size_t from, std::size_t to, Polarization q,
                          const ImagPoint& sp) {
  return modes_at<ImagAxis>(stack, sp.xi, sp.k).transmission(from, to, q);
}

cd stack_transmission(const Stack& stack, std::size_t from, std::size_t to, Polarization q,
                      const RealPoint& sp) {
  return modes_at<RealAxis>(stack, sp.omega, sp.k).transmission(from, to, q);
}

double d_function(const Stack& stack, std::size_t j, Polarization q, const ImagPoint& sp) {
  return modes_at<ImagAxis>(stack, sp.xi, sp.k).d_function(j, q);
}

cd d_function(const Stack& stack, std::size_t j, Polarization q, const RealPoint& sp) {
  return modes_at<RealAxis>(stack, sp.omega, sp.k).d_function(j, q);
}

}  // namespace casimir
