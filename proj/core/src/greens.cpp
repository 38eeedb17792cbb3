#include "casimir/greens.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"

namespace casimir {
namespace {

using cd = std::complex<double>;

constexpr cd kI{0.0, 1.0};
constexpr double kTwoPi = 2.0 * constants::pi;

struct ModeData {
  cd r_minus, r_plus, d, round_trip, bulk;
};

// Everything the equal-point formulas need at one (omega, k, z).
struct LayerMode {
  cd beta;
  cd kt2;
  double k;
  ModeData p, s;

  const ModeData& of(Polarization q) const { return q == Polarization::p ? p : s; }
};

LayerMode layer_mode(const Stack& stack, std::size_t j, double z, const RealPoint& sp) {
  const Layer& layer = stack.at(j);
  const double d = stack.thickness(j);
  if (!is_lossless(layer.material)) {
    throw InputError("layer " + std::to_string(j) + " must be lossless to evaluate its stress");
  }
  if (!(z >= 0.0 && z <= d)) {
    throw InputError("z must lie in [0, d_j]");
  }
  StackModes<RealAxis> modes(stack, sp.omega);
  modes.set_k(sp.k);
  LayerMode m;
  m.beta = modes.wavenumber(j);
  const double x = sp.omega / constants::c;
  m.kt2 = modes.epsilon(j) * (x * x);
  m.k = sp.k;
  const cd e_left = std::exp(2.0 * kI * m.beta * z);
  const cd e_right = std::exp(2.0 * kI * m.beta * (d - z));
  for (Polarization q : kPolarizations) {
    const auto pr = modes.pair(j, q);
    ModeData md{pr.r_minus, pr.r_plus, pr.d, pr.r_minus * pr.r_plus * modes.round_trip(j),
                pr.r_minus * e_left + pr.r_plus * e_right};
    (q == Polarization::p ? m.p : m.s) = md;
  }
  return m;
}

struct Diagonal3 {
  cd kk, nn, zz;
};

// Electric equal-point diagonal with `tm` in the role of p and `te` in the
// role of s.
Diagonal3 electric_diagonal(const LayerMode& m, const ModeData& tm, const ModeData& te) {
  const cd pre = kTwoPi * kI / (m.kt2 * m.beta);
  return {pre * m.beta * m.beta / tm.d * (2.0 * tm.round_trip - tm.bulk),
          pre * m.kt2 / te.d * (2.0 * te.round_trip + te.bulk),
          pre * (m.k * m.k) / tm.d * (2.0 * tm.round_trip + tm.bulk)};
}

using Vec3 = std::array<cd, 3>;

void add_outer(Dyadic& acc, cd weight, const Vec3& a, const Vec3& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 3; ++k) acc[i][k] += weight * a[i] * b[k];
  }
}

}  // namespace

GreensDiagonal greens_diagonal(const Stack& stack, std::size_t j, double z, const RealPoint& sp) {
  const LayerMode m = layer_mode(stack, j, z, sp);
  const Diagonal3 e = electric_diagonal(m, m.p, m.s);
  const Diagonal3 b = electric_diagonal(m, m.s, m.p);
  return {e.kk, e.nn, e.zz, m.kt2 * b.kk, m.kt2 * b.nn, m.kt2 * b.zz, z};
}

Dyadic greens_dyadic(const Stack& stack, std::size_t j, double z, const RealPoint& sp,
                     FieldKind kind) {
  const LayerMode m = layer_mode(stack, j, z, sp);
  const double d = stack.thickness(j);
  const cd kt = std::sqrt(m.kt2);
  const cd k{m.k, 0.0};

  // Polarization vectors in the (k_hat, n_hat, z_hat) frame of +k; at -k the
  // in-plane unit vectors k_hat and n_hat both flip.
  const Vec3 p_up_k{-m.beta / kt, 0.0, k / kt};    // e^+_p(k)
  const Vec3 p_down_k{m.beta / kt, 0.0, k / kt};   // e^-_p(k)
  const Vec3 p_up_mk{m.beta / kt, 0.0, k / kt};    // e^+_p(-k)
  const Vec3 p_down_mk{-m.beta / kt, 0.0, k / kt}; // e^-_p(-k)
  const Vec3 s_k{0.0, 1.0, 0.0};
  const Vec3 s_mk{0.0, -1.0, 0.0};

  Dyadic g{};
  const cd e_left = std::exp(2.0 * kI * m.beta * z);
  const cd e_right = std::exp(2.0 * kI * m.beta * (d - z));
  for (Polarization q : kPolarizations) {
    const ModeData& md = m.of(q);
    // The magnetic dyadic takes the field vectors of the other polarization.
    const bool tm_vectors = (q == Polarization::p) == (kind == FieldKind::electric);
    const Vec3& up_k = tm_vectors ? p_up_k : s_k;
    const Vec3& down_k = tm_vectors ? p_down_k : s_k;
    const Vec3& up_mk = tm_vectors ? p_up_mk : s_mk;
    const Vec3& down_mk = tm_vectors ? p_down_mk : s_mk;
    const cd w = polarization_sign(q) / md.d;
    add_outer(g, w * md.r_minus * e_left, up_k, up_mk);
    add_outer(g, w * md.round_trip, up_k, down_mk);
    add_outer(g, w * md.r_plus * e_right, down_k, down_mk);
    add_outer(g, w * md.round_trip, down_k, up_mk);
  }
  cd pre = kTwoPi * kI / m.beta;
  if (kind == FieldKind::magnetic) pre *= -m.kt2;
  for (auto& row : g) {
    for (auto& v : row) v *= pre;
  }
  return g;
}

StressBracket stress_bracket(const Stack& stack, std::size_t j, double z, const RealPoint& sp) {
  const GreensDiagonal g = greens_diagonal(stack, j, z, sp);
  const LayerMode m = layer_mode(stack, j, z, sp);
  const cd from_greens =
      m.kt2 * (g.g_zz - g.parallel()) + g.gb_zz - g.magnetic_parallel();
  const cd closed = -4.0 * kTwoPi * kI * m.beta *
                    (m.p.round_trip / m.p.d + m.s.round_trip / m.s.d);
  return {from_greens, closed};
}

GreensCheck verify_greens(std::uint64_t seed, int stacks, int points, int z_samples) {
  if (stacks < 1 || points < 1 || z_samples < 2) {
    throw InputError("verify_greens needs stacks >= 1, points >= 1, z_samples >= 2");
  }
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };

  GreensCheck out;
  for (int n = 0; n < stacks; ++n) {
    const double d = 1e-6 * uniform(0.5, 2.0);
    const Material probe = n % 2 == 0 ? Material{Vacuum{}} : Material{ConstantEpsilon{uniform(1.0, 3.0)}};
    const Stack stack({
        Layer::half_space(Drude{1e16 * uniform(0.5, 2.0), 1e14 * uniform(0.5, 5.0)}),
        Layer::slab(Lorentz{1e15 * uniform(1.0, 5.0), 1e15 * uniform(1.0, 5.0),
                            1e14 * uniform(0.5, 5.0)},
                    1e-7 * uniform(0.5, 5.0)),
        Layer::slab(probe, d),
        Layer::slab(Drude{1e16 * uniform(0.2, 1.0), 1e14 * uniform(1.0, 5.0)},
                    1e-8 * uniform(1.0, 5.0)),
        Layer::half_space(Lorentz{1e15 * uniform(1.0, 5.0), 1e15 * uniform(1.0, 5.0),
                                  1e14 * uniform(0.5, 5.0)}),
    });
    const double n_probe = std::sqrt(epsilon_real_axis(probe, 1.0).real());
    for (int p = 0; p < points; ++p) {
      const double omega = uniform(0.5, 3.0) * constants::c / d;
      const double kt = n_probe * omega / constants::c;
      double k = 0.0;
      if (p % 2 == 0) {
        k = kt * uniform(0.0, 0.9);
      } else {
        const double decay = uniform(0.2, 1.5) / d;
        k = std::sqrt(kt * kt + decay * decay);
      }
      const RealPoint sp{omega, k};
      const StressBracket ref = stress_bracket(stack, 2, 0.0, sp);
      for (int i = 0; i < z_samples; ++i) {
        const double z = d * static_cast<double>(i) / (z_samples - 1);
        const StressBracket b = stress_bracket(stack, 2, z, sp);
        out.max_z_variation = std::max(
            out.max_z_variation, std::abs(b.from_greens - ref.from_greens) / std::abs(ref.from_greens));
        out.max_closed_form_deviation =
            std::max(out.max_closed_form_deviation,
                     std::abs(b.from_greens - b.closed_form) / std::abs(b.closed_form));
      }
      ++out.cases;
    }
  }
  return out;
}

}  // namespace casimir
