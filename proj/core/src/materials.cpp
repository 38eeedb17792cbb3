#include "casimir/materials.hpp"

#include <cmath>
#include <sstream>

#include "casimir/error.hpp"

namespace casimir {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require_rate(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0) {
    throw InputError(std::string(name) + " must be finite and >= 0");
  }
}

void require_frequency(double w) {
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw InputError("frequency must be finite and > 0");
  }
}

[[noreturn]] void no_pec_epsilon() {
  throw ModelError("a perfect conductor has no permittivity; use its reflection coefficients");
}

}  // namespace

void validate(const Material& m) {
  std::visit(overloaded{
                 [](const Vacuum&) {},
                 [](const ConstantEpsilon& c) {
                   if (!std::isfinite(c.epsilon) || c.epsilon < 1.0) {
                     throw InputError("constant epsilon must be finite and >= 1");
                   }
                 },
                 [](const Drude& d) {
                   require_rate(d.plasma_frequency, "omega_p");
                   require_rate(d.damping, "gamma");
                 },
                 [](const Lorentz& l) {
                   require_rate(l.resonance_frequency, "omega_0");
                   require_rate(l.plasma_frequency, "omega_p");
                   require_rate(l.damping, "gamma");
                 },
                 [](const PerfectConductor&) {},
             },
             m);
}

bool is_perfect_conductor(const Material& m) {
  return std::holds_alternative<PerfectConductor>(m);
}

bool is_lossless(const Material& m) {
  return std::holds_alternative<Vacuum>(m) || std::holds_alternative<ConstantEpsilon>(m);
}

double epsilon_imag_axis(const Material& m, double xi) {
  require_frequency(xi);
  return std::visit(overloaded{
                        [](const Vacuum&) { return 1.0; },
                        [](const ConstantEpsilon& c) { return c.epsilon; },
                        [xi](const Drude& d) {
                          const double wp2 = d.plasma_frequency * d.plasma_frequency;
                          return 1.0 + wp2 / (xi * (xi + d.damping));
                        },
                        [xi](const Lorentz& l) {
                          const double wp2 = l.plasma_frequency * l.plasma_frequency;
                          const double w02 = l.resonance_frequency * l.resonance_frequency;
                          return 1.0 + wp2 / (w02 + xi * xi + l.damping * xi);
                        },
                        [](const PerfectConductor&) -> double { no_pec_epsilon(); },
                    },
                    m);
}

double epsilon_imag_axis_derivative(const Material& m, double xi) {
  require_frequency(xi);
  return std::visit(overloaded{
                        [](const Vacuum&) { return 0.0; },
                        [](const ConstantEpsilon&) { return 0.0; },
                        [xi](const Drude& d) {
                          const double wp2 = d.plasma_frequency * d.plasma_frequency;
                          const double den = xi * (xi + d.damping);
                          return -wp2 * (2.0 * xi + d.damping) / (den * den);
                        },
                        [xi](const Lorentz& l) {
                          const double wp2 = l.plasma_frequency * l.plasma_frequency;
                          const double w02 = l.resonance_frequency * l.resonance_frequency;
                          const double den = w02 + xi * xi + l.damping * xi;
                          return -wp2 * (2.0 * xi + l.damping) / (den * den);
                        },
                        [](const PerfectConductor&) -> double { no_pec_epsilon(); },
                    },
                    m);
}

std::complex<double> epsilon_real_axis(const Material& m, double omega) {
  require_frequency(omega);
  using cd = std::complex<double>;
  return std::visit(overloaded{
                        [](const Vacuum&) { return cd{1.0, 0.0}; },
                        [](const ConstantEpsilon& c) { return cd{c.epsilon, 0.0}; },
                        [omega](const Drude& d) {
                          const double wp2 = d.plasma_frequency * d.plasma_frequency;
                          return cd{1.0, 0.0} - wp2 / (omega * cd{omega, d.damping});
                        },
                        [omega](const Lorentz& l) {
                          const double wp2 = l.plasma_frequency * l.plasma_frequency;
                          const double w02 = l.resonance_frequency * l.resonance_frequency;
                          return cd{1.0, 0.0} + wp2 / cd{w02 - omega * omega, -l.damping * omega};
                        },
                        [](const PerfectConductor&) -> cd { no_pec_epsilon(); },
                    },
                    m);
}

std::string describe(const Material& m) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const Vacuum&) { os << "vacuum"; },
                 [&](const ConstantEpsilon& c) { os << "constant(eps=" << c.epsilon << ")"; },
                 [&](const Drude& d) {
                   os << "drude(omega_p=" << d.plasma_frequency << ", gamma=" << d.damping << ")";
                 },
                 [&](const Lorentz& l) {
                   os << "lorentz(omega_0=" << l.resonance_frequency
                      << ", omega_p=" << l.plasma_frequency << ", gamma=" << l.damping << ")";
                 },
                 [&](const PerfectConductor&) { os << "perfect_conductor"; },
             },
             m);
  return os.str();
}

}  // namespace casimir
