#include "casimir/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"

namespace casimir {
namespace {

// 15-point Kronrod abscissae and weights with the embedded 7-point Gauss rule
// (QUADPACK qk15). Index 7 is the centre node; odd indices carry Gauss weights.
constexpr std::array<double, 8> kXgk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kMaxPanels = 200000;

// A node value together with the error already committed in producing it
// (non-zero only when the node is itself an inner integral).
struct Sample {
  double value;
  double error;
};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  // Rounding floor 50 eps |f| of this panel's error estimate.
  double noise;
};

struct Outcome {
  QuadratureResult result;
  // Every panel sits at its rounding floor; further bisection cannot help.
  bool roundoff_limited = false;
};

template <class F>
Panel kronrod15(F& f, double a, double b, std::int64_t& evals) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double abs_half = std::abs(half);

  std::array<double, 15> fv{};
  double carried = 0.0;
  auto eval = [&](double x, double w, std::size_t slot) {
    const Sample s = f(x);
    fv[slot] = s.value;
    carried += w * std::abs(s.error);
  };
  for (std::size_t k = 0; k < 7; ++k) {
    const double dx = half * kXgk[k];
    eval(centre - dx, kWgk[k], 2 * k);
    eval(centre + dx, kWgk[k], 2 * k + 1);
  }
  eval(centre, kWgk[7], 14);
  evals += 15;

  double resk = kWgk[7] * fv[14];
  double resg = kWg[3] * fv[14];
  double resabs = std::abs(resk);
  for (std::size_t k = 0; k < 7; ++k) {
    const double pair = fv[2 * k] + fv[2 * k + 1];
    resk += kWgk[k] * pair;
    resabs += kWgk[k] * (std::abs(fv[2 * k]) + std::abs(fv[2 * k + 1]));
    if (k % 2 == 1) resg += kWg[k / 2] * pair;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fv[14] - mean);
  for (std::size_t k = 0; k < 7; ++k) {
    resasc += kWgk[k] * (std::abs(fv[2 * k] - mean) + std::abs(fv[2 * k + 1] - mean));
  }

  double err = std::abs((resk - resg) * half);
  resasc *= abs_half;
  resabs *= abs_half;
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  double noise = 0.0;
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    noise = 50.0 * kEps * resabs;
    err = std::max(noise, err);
  }
  return {a, b, resk * half, err + carried * abs_half, noise};
}

template <class F>
Outcome adaptive(F& f, double a, double b, double rel_tol, double abs_floor,
                 std::int64_t max_evals, std::int64_t& evals) {
  std::vector<Panel> panels{kronrod15(f, a, b, evals)};
  Outcome outcome;
  QuadratureResult& out = outcome.result;
  for (;;) {
    // Panels stay ordered by position, so the summation order is fixed.
    double total = 0.0;
    double err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      total += panels[i].value;
      err += panels[i].error;
      if (panels[i].error > panels[worst].error) worst = i;
    }
    out.value = total;
    out.abs_error_estimate = err;
    if (err <= std::max(rel_tol * std::abs(total), abs_floor)) {
      out.converged = true;
      break;
    }
    const Panel p = panels[worst];
    if (p.error <= p.noise) {
      out.converged = false;
      outcome.roundoff_limited = true;
      break;
    }
    const double mid = 0.5 * (p.a + p.b);
    if (evals + 30 > max_evals || panels.size() >= kMaxPanels || !(mid > p.a && mid < p.b)) {
      out.converged = false;
      break;
    }
    panels[worst] = kronrod15(f, p.a, mid, evals);
    panels.insert(panels.begin() + static_cast<std::ptrdiff_t>(worst) + 1,
                  kronrod15(f, mid, p.b, evals));
  }
  out.evals = evals;
  return outcome;
}

// Maps u in (0, 1) onto [0, inf): x = scale u / (1 - u), dx = scale / (1 - u)^2 du.
struct HalflineMap {
  double scale;
  bool node(double u, double& x, double& jac) const {
    const double w = 1.0 - u;
    if (!(w > 0.0) || !(u > 0.0)) return false;
    x = scale * u / w;
    jac = scale / (w * w);
    return std::isfinite(x);
  }
};

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || rel_tol > 1e-2) {
    throw InputError("rel_tol must lie in (0, 1e-2]");
  }
  if (!(abs_floor >= 0.0) || !std::isfinite(abs_floor)) {
    throw InputError("abs_floor must be finite and >= 0");
  }
  if (max_evals < 1000) {
    throw InputError("max_evals must be >= 1000");
  }
}

QuadratureResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureSpec& spec) {
  spec.validate();
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw InputError("interval endpoints must be finite");
  }
  if (a == b) return {};
  auto sampler = [&f](double x) { return Sample{f(x), 0.0}; };
  std::int64_t evals = 0;
  return adaptive(sampler, a, b, spec.rel_tol, spec.abs_floor, spec.max_evals, evals).result;
}

QuadratureResult integrate_halfline(const std::function<double(double)>& f,
                                    const QuadratureSpec& spec, double scale) {
  spec.validate();
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw InputError("halfline scale must be finite and > 0");
  }
  const HalflineMap map{scale};
  auto sampler = [&](double u) {
    double x = 0.0;
    double jac = 0.0;
    if (!map.node(u, x, jac)) return Sample{0.0, 0.0};
    return Sample{f(x) * jac, 0.0};
  };
  std::int64_t evals = 0;
  return adaptive(sampler, 0.0, 1.0, spec.rel_tol, spec.abs_floor, spec.max_evals, evals).result;
}

QuadratureResult integrate_xi_kappa(const std::function<double(double, double)>& f,
                                    const std::function<double(double)>& kappa0,
                                    const QuadratureSpec& spec, double length) {
  spec.validate();
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw InputError("reference length must be finite and > 0");
  }
  const HalflineMap xi_map{constants::c / (2.0 * length)};
  const HalflineMap kappa_map{1.0 / (2.0 * length)};
  const double inner_rel = spec.rel_tol / 10.0;
  const double inner_floor = spec.abs_floor / (10.0 * xi_map.scale);

  std::int64_t evals = 0;
  bool inner_ok = true;

  auto outer = [&](double v) {
    double xi = 0.0;
    double xi_jac = 0.0;
    if (!xi_map.node(v, xi, xi_jac)) return Sample{0.0, 0.0};
    const double k0 = kappa0(xi);
    auto inner = [&](double u) {
      double dk = 0.0;
      double k_jac = 0.0;
      if (!kappa_map.node(u, dk, k_jac)) return Sample{0.0, 0.0};
      const double kap = k0 + dk;
      return Sample{kap * f(xi, kap) * k_jac, 0.0};
    };
    const std::int64_t budget = std::max<std::int64_t>(1000, spec.max_evals - evals);
    std::int64_t inner_evals = 0;
    const Outcome o = adaptive(inner, 0.0, 1.0, inner_rel, inner_floor, budget, inner_evals);
    const QuadratureResult& r = o.result;
    evals += inner_evals;
    // A rounding-limited inner value still carries its error into the outer
    // estimate, which decides convergence.
    inner_ok = inner_ok && (r.converged || o.roundoff_limited);
    return Sample{r.value * xi_jac, r.abs_error_estimate * xi_jac};
  };

  // Outer nodes add their inner evaluation counts to the same counter.
  QuadratureResult out =
      adaptive(outer, 0.0, 1.0, spec.rel_tol, spec.abs_floor, spec.max_evals, evals).result;
  out.converged = out.converged && inner_ok;
  return out;
}

}  // namespace casimir
