#include "eosvac/numint.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "eosvac/errors.hpp"

namespace eosvac::numint {

void QuadratureSpec::validate() const {
  if (!(rel_tol >= 1e-14 && rel_tol <= 1e-2)) {
    throw DomainError("quadrature rel_tol must lie in [1e-14, 1e-2]");
  }
  if (max_depth < 1 || max_depth > 60) throw DomainError("quadrature max_depth must be in [1, 60]");
  if (!(grid_step >= 0.0)) throw DomainError("quadrature grid_step must be >= 0");
}

namespace {

std::vector<double> segment_edges(double a, double b, std::span<const double> breakpoints) {
  std::vector<double> edges{a};
  for (double x : breakpoints) {
    if (x > a && x < b && std::isfinite(x)) edges.push_back(x);
  }
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

double composite_simpson(const Integrand& f, double a, double b, long panels, long& evals) {
  // panels is even
  const double h = (b - a) / static_cast<double>(panels);
  double odd = 0.0;
  double even = 0.0;
  for (long i = 1; i < panels; ++i) {
    const double x = a + h * static_cast<double>(i);
    (i % 2 ? odd : even) += f(x);
  }
  evals += panels + 1;
  return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

QuadratureResult simpson_segment(const Integrand& f, double a, double b, const QuadratureSpec& spec,
                                 double abs_floor) {
  long panels = 2;
  if (spec.grid_step > 0.0) {
    panels = static_cast<long>(std::ceil((b - a) / spec.grid_step - 1e-9));
    panels = std::max<long>(2, panels + (panels % 2));
  }
  QuadratureResult r;
  double coarse = composite_simpson(f, a, b, panels, r.evaluations);
  for (int depth = 0; depth < spec.max_depth; ++depth) {
    panels *= 2;
    const double fine = composite_simpson(f, a, b, panels, r.evaluations);
    r.value = fine;
    // Richardson: Simpson error scales as h^4.
    r.error = std::abs(fine - coarse) / 15.0;
    if (r.error <= std::max(spec.rel_tol * std::abs(fine), abs_floor)) return r;
    coarse = fine;
  }
  throw QuadratureError("fixed-grid Simpson did not converge on [" + std::to_string(a) + ", " +
                            std::to_string(b) + "]",
                        r.value, r.error);
}

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct KronrodPair {
  double kronrod;
  double gauss;
};

KronrodPair gauss_kronrod_15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resk = fc * kWgk[7];
  double resg = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(center - dx) + f(center + dx);
    resk += kWgk[j] * sum;
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  return {resk * half, resg * half};
}

struct AdaptiveState {
  const Integrand& f;
  int max_depth;
  long evals = 0;
  bool exhausted = false;
};

QuadratureResult adaptive_step(AdaptiveState& st, double a, double b, double tol, int depth,
                               const KronrodPair& whole) {
  const double mid = 0.5 * (a + b);
  const auto left = gauss_kronrod_15(st.f, a, mid);
  const auto right = gauss_kronrod_15(st.f, mid, b);
  st.evals += 30;
  const double refined = left.kronrod + right.kronrod;
  // Error of the refined estimate, bounded by the Kronrod-Gauss gaps of both
  // halves plus the disagreement with the parent.
  const double gap = std::abs(left.kronrod - left.gauss) + std::abs(right.kronrod - right.gauss);
  const double err = std::max(gap, std::abs(refined - whole.kronrod));
  if (err <= tol || b - a <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(mid)) {
    return {refined, err, 0};
  }
  if (depth >= st.max_depth) {
    st.exhausted = true;
    return {refined, err, 0};
  }
  const auto l = adaptive_step(st, a, mid, 0.5 * tol, depth + 1, left);
  const auto r = adaptive_step(st, mid, b, 0.5 * tol, depth + 1, right);
  return {l.value + r.value, l.error + r.error, 0};
}

QuadratureResult adaptive_segment(const Integrand& f, double a, double b,
                                  const QuadratureSpec& spec, double abs_floor) {
  AdaptiveState st{f, spec.max_depth};
  const auto whole = gauss_kronrod_15(f, a, b);
  st.evals += 15;
  const double tol = std::max(spec.rel_tol * std::abs(whole.kronrod), abs_floor);
  auto r = adaptive_step(st, a, b, tol, 0, whole);
  r.evaluations = st.evals;
  // The first tolerance came from a coarse estimate; re-check against the result.
  if (st.exhausted && r.error > std::max(spec.rel_tol * std::abs(r.value), abs_floor)) {
    throw QuadratureError("adaptive quadrature hit max_depth on [" + std::to_string(a) + ", " +
                              std::to_string(b) + "]",
                          r.value, r.error);
  }
  return r;
}

}  // namespace

QuadratureResult integrate_1d(const Integrand& f, double a, double b, const QuadratureSpec& spec,
                              std::span<const double> breakpoints) {
  spec.validate();
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("integration bounds must be finite");
  if (a == b) return {};
  if (b < a) {
    auto r = integrate_1d(f, b, a, spec, breakpoints);
    r.value = -r.value;
    return r;
  }
  const auto edges = segment_edges(a, b, breakpoints);

  // Scale for an absolute floor so segments where f vanishes identically
  // (e.g. a zeroed response) terminate instead of chasing relative accuracy on 0.
  double scale = 0.0;
  {
    const int probes = 64;
    for (int i = 0; i <= probes; ++i) {
      scale = std::max(scale, std::abs(f(a + (b - a) * i / probes)));
    }
  }
  const double abs_floor = 1e-3 * spec.rel_tol * scale * (b - a) /
                           static_cast<double>(edges.size() - 1);

  QuadratureResult total;
  total.evaluations = 65;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double lo = edges[i];
    const double hi = edges[i + 1];
    const auto part = spec.method == Method::FixedGridSimpson
                          ? simpson_segment(f, lo, hi, spec, abs_floor)
                          : adaptive_segment(f, lo, hi, spec, abs_floor);
    total.value += part.value;
    total.error += part.error;
    total.evaluations += part.evaluations;
  }
  return total;
}

double simpson_samples(std::span<const double> values, double step) {
  const std::size_t n = values.size();
  if (n < 2) return 0.0;
  if (n == 2) return 0.5 * step * (values[0] + values[1]);
  const std::size_t panels = n - 1;
  std::size_t simpson_end = panels % 2 == 0 ? panels : panels - 3;
  double sum = 0.0;
  for (std::size_t i = 0; i + 2 <= simpson_end; i += 2) {
    sum += step / 3.0 * (values[i] + 4.0 * values[i + 1] + values[i + 2]);
  }
  if (simpson_end != panels) {
    const std::size_t i = simpson_end;
    sum += 3.0 * step / 8.0 *
           (values[i] + 3.0 * values[i + 1] + 3.0 * values[i + 2] + values[i + 3]);
  }
  return sum;
}

double find_root(const std::function<double(double)>& f, double lo, double hi, double tol,
                 int max_iter) {
  double a = lo;
  double b = hi;
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) {
    throw RootFindingError("no sign change on bracket [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
  }
  if (std::abs(fa) < std::abs(fb)) {
    std::swap(a, b);
    std::swap(fa, fb);
  }
  double c = a;
  double fc = fa;
  double d = b - a;
  bool bisected = true;
  for (int it = 0; it < max_iter; ++it) {
    if (fb == 0.0 || std::abs(b - a) <= tol) return b;
    double s;
    if (fa != fc && fb != fc) {
      s = a * fb * fc / ((fa - fb) * (fa - fc)) + b * fa * fc / ((fb - fa) * (fb - fc)) +
          c * fa * fb / ((fc - fa) * (fc - fb));
    } else {
      s = b - fb * (b - a) / (fb - fa);
    }
    const double m = 0.25 * (3.0 * a + b);
    const bool outside = !((s > std::min(m, b) && s < std::max(m, b)));
    const bool slow = bisected ? std::abs(s - b) >= 0.5 * std::abs(b - c)
                               : std::abs(s - b) >= 0.5 * std::abs(c - d);
    const bool tiny = bisected ? std::abs(b - c) < tol : std::abs(c - d) < tol;
    if (outside || slow || tiny) {
      s = 0.5 * (a + b);
      bisected = true;
    } else {
      bisected = false;
    }
    const double fs = f(s);
    d = c;
    c = b;
    fc = fb;
    if ((fa > 0.0) != (fs > 0.0)) {
      b = s;
      fb = fs;
    } else {
      a = s;
      fa = fs;
    }
    if (std::abs(fa) < std::abs(fb)) {
      std::swap(a, b);
      std::swap(fa, fb);
    }
  }
  throw RootFindingError("root finder exceeded iteration limit");
}

GaussLegendre gauss_legendre(int order) {
  if (order < 1) throw DomainError("Gauss-Legendre order must be >= 1");
  GaussLegendre gl;
  gl.nodes.resize(order);
  gl.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
    }
    gl.nodes[i] = -x;
    gl.nodes[order - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    gl.weights[i] = w;
    gl.weights[order - 1 - i] = w;
  }
  return gl;
}

}  // namespace eosvac::numint
