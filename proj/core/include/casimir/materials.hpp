#pragma once

#include <complex>
#include <string>
#include <variant>

namespace casimir {

// Dielectric-response models. All frequencies and rates are angular [rad/s].

struct Vacuum {
  bool operator==(const Vacuum&) const = default;
};

/// Frequency-independent permittivity, epsilon >= 1.
struct ConstantEpsilon {
  double epsilon = 1.0;
  bool operator==(const ConstantEpsilon&) const = default;
};

/// eps(w) = 1 - wp^2 / (w (w + i gamma))
struct Drude {
  double plasma_frequency = 0.0;
  double damping = 0.0;
  bool operator==(const Drude&) const = default;
};

/// eps(w) = 1 + wp^2 / (w0^2 - w^2 - i gamma w)
struct Lorentz {
  double resonance_frequency = 0.0;
  double plasma_frequency = 0.0;
  double damping = 0.0;
  bool operator==(const Lorentz&) const = default;
};

/// Ideal mirror. Has no permittivity; it enters only through its reflection
/// coefficients r^p = +1, r^s = -1.
struct PerfectConductor {
  bool operator==(const PerfectConductor&) const = default;
};

using Material = std::variant<Vacuum, ConstantEpsilon, Drude, Lorentz, PerfectConductor>;

/// Throws InputError if any parameter is negative, non-finite, or a constant
/// permittivity is below one.
void validate(const Material& m);

bool is_perfect_conductor(const Material& m);

/// True for the media in which the stress tensor may be probed: vacuum and
/// constant (real, frequency-independent) permittivity.
bool is_lossless(const Material& m);

/// Permittivity on the imaginary frequency axis, eps(i xi). Real and >= 1.
/// Throws ModelError for a perfect conductor and InputError for xi <= 0.
double epsilon_imag_axis(const Material& m, double xi);

/// d eps(i xi) / d xi, used by the single-integral ideal-cavity formula.
double epsilon_imag_axis_derivative(const Material& m, double xi);

/// Complex permittivity at real angular frequency omega > 0, Im eps >= 0.
std::complex<double> epsilon_real_axis(const Material& m, double omega);

std::string describe(const Material& m);

}  // namespace casimir
