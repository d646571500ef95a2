#pragma once

#include <utility>

namespace levylab {

/// Half-width of the band around alpha = 1 inside which all routines switch
/// to the alpha = 1 formulas (the generic expressions degenerate there).
inline constexpr double kAlphaOneBand = 1e-9;

/// True when alpha falls in the alpha = 1 band.
bool alpha_is_one(double alpha) noexcept;

/// Alpha-stable law S_alpha(sigma, beta, delta) with characteristic function
///
///   E e^{iuX} = exp(-sigma^a |u|^a (1 - i beta sgn(u) tan(pi a/2)) + i delta u),  a != 1
///   E e^{iuX} = exp(-sigma |u| (1 + i beta (2/pi) sgn(u) log|u|) + i delta u),    a  = 1
///
/// with alpha in (0,2], sigma >= 0, beta in [-1,1], delta real.  alpha = 2 is
/// the Gaussian N(delta, 2 sigma^2); beta is then meaningless and canonicalized
/// to 0 by validate().
struct StableParams {
  double alpha;
  double sigma;
  double beta;
  double delta;
};

/// Levy triplet of a pure-jump alpha-stable process: Levy density
///
///   nu(x) = P x^{-1-alpha} 1{x>0} + Q |x|^{-1-alpha} 1{x<0}
///
/// with drift b, alpha in (0,2), P, Q >= 0, P + Q > 0.
struct StableLevyTriplet {
  double alpha;
  double p;  ///< positive-jump mass P
  double q;  ///< negative-jump mass Q
  double b;  ///< drift
};

/// x -> scale * x + shift.
struct AffineMap {
  double scale;
  double shift;
  double apply(double x) const { return scale * x + shift; }
};

/// Closed support interval of a stable law; infinite endpoints use +-inf.
struct SupportInterval {
  double lower;
  double upper;
};

/// Checks domain constraints and returns the canonicalized parameters
/// (beta forced to 0 when alpha = 2).  Throws OutOfDomain.
StableParams validate(const StableParams& p);

/// Checks domain constraints on a Levy triplet.  Throws OutOfDomain.
StableLevyTriplet validate(const StableLevyTriplet& t);

/// The location constant c = \int_1^inf sin(r)/r^2 dr + \int_0^1 (sin(r)-r)/r^2 dr
/// (~0.4228) entering the alpha = 1 Levy-to-stable conversion.  Computed once
/// by quadrature to 1e-12 absolute accuracy and cached.
double levy_location_constant();

/// Marginal law at time 1 of the Levy process with triplet t:
///
///   sigma^alpha = (P+Q) Gamma(1-alpha) cos(pi alpha/2) / alpha   (alpha != 1)
///   sigma       = (pi/2) (P+Q)                                   (alpha  = 1)
///   beta        = (P-Q)/(P+Q)
///   delta       = (Q-P)/(1-alpha)          (alpha != 1)
///   delta       = c (P-Q)                  (alpha  = 1, c = levy_location_constant())
///
/// plus the drift b added to delta.
StableParams levy_to_stable(const StableLevyTriplet& t);

/// Represents X ~ p as scale * Z + shift with Z standard (sigma = 1, delta = 0,
/// same alpha and beta).  For alpha = 1 the shift absorbs the
/// (2/pi) beta sigma log sigma location correction.  Requires sigma > 0.
std::pair<StableParams, AffineMap> standardize(const StableParams& p);

/// Law of a X + b for X ~ p and a != 0:
///
///   a X + b ~ S_alpha(|a| sigma, sgn(a) beta, a delta + b)                        (alpha != 1)
///   a X + b ~ S_1(|a| sigma, sgn(a) beta, a delta + b - (2/pi) beta sigma a log|a|) (alpha = 1)
StableParams scale_shift_law(const StableParams& p, double a, double b);

/// Law of X0 + X1 for independent X0 ~ p0, X1 ~ p1 sharing the same alpha:
///
///   sigma = (sigma0^a + sigma1^a)^(1/a),
///   beta  = (beta0 sigma0^a + beta1 sigma1^a) / (sigma0^a + sigma1^a),
///   delta = delta0 + delta1.
///
/// Throws AlphaMismatch when the alphas differ beyond 1e-12.
StableParams sum_law(const StableParams& p0, const StableParams& p1);

/// Marginal law of X_t for the Levy process whose unit-time law is p:
/// X_t ~ S_alpha(t^{1/alpha} sigma, beta, t delta) for every alpha (the alpha=1
/// log correction belongs to the sampling representation t X_1 + ..., not to
/// the marginal parameters).  Requires t > 0.
StableParams marginal_at_time(const StableParams& p, double t);

/// Support of the law:
///   [delta - sigma tan(pi alpha/2), +inf)  for alpha < 1, beta = 1,
///   (-inf, delta + sigma tan(pi alpha/2)]  for alpha < 1, beta = -1,
///   (-inf, +inf) otherwise.
SupportInterval support(const StableParams& p);

/// Whether E|X|^r is finite: true iff r < alpha, or alpha = 2 (all r > 0).
bool moment_finite(const StableParams& p, double r);

}  // namespace levylab
