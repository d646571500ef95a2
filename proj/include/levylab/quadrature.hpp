#pragma once

#include <functional>
#include <span>

namespace levylab {

/// Tolerances and budgets shared by the quadrature-backed density routines.
struct QuadratureConfig {
  double abs_tol = 1e-10;     ///< absolute tolerance on the integral
  double rel_tol = 1e-8;      ///< relative tolerance on the integral
  int max_subdivisions = 200; ///< panel budget for adaptive refinement
  double x_switch = 1e-6;     ///< |x| below which densities interpolate to x=0
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;    ///< estimated absolute error
  int subdivisions = 0;  ///< panels in the final partition
};

/// Adaptive Gauss-Kronrod (7/15) integration of `f` over [lo, hi].
///
/// Interior `breakpoints` seed the initial partition so refinement starts
/// around known features (sharply peaked integrands in particular); points
/// outside (lo, hi) are ignored.  The worst panel by error estimate is split
/// until the summed error meets max(abs_tol, rel_tol * |value|) or the panel
/// budget is exhausted, in which case QuadratureFailure is thrown.
QuadratureResult integrate_gk(const std::function<double(double)>& f,
                              double lo, double hi,
                              const QuadratureConfig& cfg = {},
                              std::span<const double> breakpoints = {});

}  // namespace levylab
