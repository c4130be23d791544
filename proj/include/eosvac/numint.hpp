#pragma once

#include <functional>
#include <span>
#include <vector>

namespace eosvac::numint {

enum class Method {
  FixedGridSimpson,     // composite Simpson on uniform panels, refined by doubling
  AdaptiveSubdivision,  // recursive bisection with Gauss-Kronrod 7/15 pairs
};

struct QuadratureSpec {
  Method method = Method::AdaptiveSubdivision;
  double rel_tol = 1e-8;
  int max_depth = 40;
  // Panel width for the fixed-grid method; 0 lets the integrator start coarse.
  double grid_step = 0.0;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  long evaluations = 0;
};

using Integrand = std::function<double(double)>;

/// Integrates f over [a, b]. Breakpoints strictly inside (a, b) split the
/// interval so kinks and jumps sit on segment boundaries; points outside are
/// ignored. Throws QuadratureError (carrying the best estimate) when rel_tol is
/// not reached within max_depth.
QuadratureResult integrate_1d(const Integrand& f, double a, double b, const QuadratureSpec& spec,
                              std::span<const double> breakpoints = {});

/// Composite Simpson over uniformly spaced samples. An even number of panels
/// uses Simpson throughout; an odd count finishes with the 3/8 rule.
double simpson_samples(std::span<const double> values, double step);

/// Brent-style bracketing root finder (bisection / secant / inverse quadratic).
/// Throws RootFindingError if f(lo) and f(hi) have the same sign.
double find_root(const std::function<double(double)>& f, double lo, double hi, double tol,
                 int max_iter = 200);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(int order);

}  // namespace eosvac::numint
