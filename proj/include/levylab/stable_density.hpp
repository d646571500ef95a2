#pragma once

#include <complex>
#include <vector>

#include "levylab/params.hpp"
#include "levylab/quadrature.hpp"

namespace levylab {

/// theta0(alpha, beta) = arctan(beta tan(pi alpha/2)) / alpha for alpha != 1,
/// and pi/2 for alpha = 1.  The integral representation of the density runs
/// over theta in (-theta0, pi/2).
double theta0(double alpha, double beta);

/// The positive kernel V_{alpha,beta}(theta) of the integral representation:
///
///   alpha != 1, theta in (-theta0, pi/2):
///     V = (cos(a t0))^{1/(a-1)} (cos th / sin(a(t0+th)))^{a/(a-1)}
///         * cos(a t0 + (a-1) th) / cos th
///   alpha = 1, beta != 0, theta in (-pi/2, pi/2):
///     V = (2/pi) ((pi/2 + b th)/cos th) exp((pi/2 + b th) tan(th)/b)
///
/// Throws Unsupported for (alpha, beta) = (1, 0) and OutOfDomain for theta
/// outside the open interval.
double nolan_v(double alpha, double beta, double theta);

/// Density of the standard law S_alpha(1, beta, 0) by adaptive quadrature of
/// the integral representation:
///
///   x > 0, alpha != 1:
///     f(x) = (alpha x^{1/(alpha-1)} / (pi |alpha-1|))
///            * int_{-theta0}^{pi/2} V(th) exp(-x^{alpha/(alpha-1)} V(th)) dth
///   x = 0, alpha != 1:
///     f(0) = Gamma(1 + 1/alpha) cos(theta0) (cos(alpha theta0))^{1/alpha} / pi
///   alpha = 1, beta > 0:
///     f(x) = (1/(2 beta)) e^{-pi x/(2 beta)}
///            * int_{-pi/2}^{pi/2} V(th) exp(-e^{-pi x/(2 beta)} V(th)) dth
///
/// x < 0 is evaluated by the reflection f(alpha, beta; x) = f(alpha, -beta; -x)
/// (likewise alpha = 1 with beta < 0); (alpha, beta) = (1, 0) short-circuits to
/// the Cauchy density 1/(pi (1+x^2)); alpha = 2 is the N(0, 2) density.  For
/// 0 < |x| < cfg.x_switch the value interpolates quadratically through the
/// points -x_switch, 0, +x_switch so the degenerate x -> 0 exponent is never
/// evaluated.
double pdf_standard(double alpha, double beta, double x,
                    const QuadratureConfig& cfg = {});

/// Density of S_alpha(sigma, beta, delta) via standardization.
double pdf(const StableParams& p, double x, const QuadratureConfig& cfg = {});

/// P(X <= x) by adaptive integration of the density from the lower support
/// bound (or a tail-truncated bound chosen so the omitted mass is < 1e-9).
double cdf(const StableParams& p, double x, const QuadratureConfig& cfg = {});

/// Characteristic function E e^{iuX} evaluated directly from the definition.
std::complex<double> char_fn(const StableParams& p, double u);

enum class TailSide { lower, upper };

/// First-order tail asymptote:
///
///   P(X > x)  ~ c_alpha sigma^alpha (1 + beta) x^{-alpha}   (upper)
///   P(X < -x) ~ c_alpha sigma^alpha (1 - beta) x^{-alpha}   (lower)
///
/// with c_alpha = (1-alpha)/(2 Gamma(2-alpha) cos(pi alpha/2)) for alpha != 1
/// and 1/pi for alpha = 1.  `x` is the (positive) distance into the tail.
/// Requires alpha < 2; throws Unsupported when the requested side has zero
/// tail constant (beta = -1 upper / beta = +1 lower).
double tail_asymptote(const StableParams& p, double x, TailSide side);

/// Tabulated CDF of a standard law S_alpha(1, beta, 0) for bulk evaluation
/// (goodness-of-fit statistics need the CDF at every sample point; integrating
/// the density per query would be wasteful).  The table integrates the density
/// with Simpson's rule on a graded grid covering all but ~1e-9 of the mass and
/// anchors the ends with the tail asymptote; queries interpolate monotonically
/// and clamp to [0, 1].
class StableCdf {
 public:
  StableCdf(double alpha, double beta, std::size_t points = 4001,
            const QuadratureConfig& cfg = {});

  double operator()(double x) const;

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

 private:
  double alpha_;
  double beta_;
  std::vector<double> xs_;
  std::vector<double> cdf_;
};

}  // namespace levylab
