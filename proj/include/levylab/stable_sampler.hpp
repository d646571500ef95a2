#pragma once

#include "levylab/params.hpp"
#include "levylab/rng.hpp"

namespace levylab {

/// Deterministic Chambers-Mallows-Stuck kernel: maps an angle u uniform on
/// (-pi/2, pi/2) and an exponential v > 0 to a draw from S_alpha(1, beta, 0).
/// With theta = arctan(beta tan(pi alpha/2)) / alpha,
///
///   alpha != 1:
///     X = sin(alpha (theta+u)) / (cos(alpha theta) cos u)^{1/alpha}
///         * (cos(alpha theta + (alpha-1) u) / v)^{(1-alpha)/alpha}
///   alpha  = 1:
///     X = (2/pi) [ (pi/2 + beta u) tan u
///                  - beta log( (pi/2) v cos u / (pi/2 + beta u) ) ]
///
/// Exposed so tests can pin the transform at chosen (u, v).
double cms_transform(double alpha, double beta, double u, double v);

/// One draw from the standard law S_alpha(1, beta, 0).  alpha in (0, 2] and
/// beta in [-1, 1]; alpha = 2 uses Box-Muller (variance 2).  Consumes exactly
/// one (angle, exponential) pair for alpha < 2.
double sample_standard(double alpha, double beta, RngStream& rng);

/// One draw from S_alpha(sigma, beta, delta):
///   X = delta + sigma Z                                 (alpha != 1)
///   X = delta + sigma Z + (2/pi) beta sigma log sigma   (alpha  = 1)
///   X = delta + sigma sqrt(2) N(0,1)                    (alpha  = 2)
double sample(const StableParams& p, RngStream& rng);

/// One draw from S_alpha(1, beta, 0) built from two independent totally
/// skewed draws Y1, Y2 ~ S_alpha(1, 1, 0):
///
///   alpha != 1:
///     X = ((1+beta)/2)^{1/alpha} Y1 - ((1-beta)/2)^{1/alpha} Y2
///   alpha  = 1:
///     X = ((1+beta)/2) Y1 - ((1-beta)/2) Y2
///         + (1/pi) [ (1+beta) log((1+beta)/2) - (1-beta) log((1-beta)/2) ]
///
/// Consumes two (angle, exponential) pairs.
double sample_from_skewed_pair(double alpha, double beta, RngStream& rng);

/// One increment over time step delta > 0 of the Levy process whose unit-time
/// law is `unit` (the law already converted from a triplet):
///
///   X_delta = delta^{1/alpha} Y + (delta - delta^{1/alpha}) delta_loc      (alpha != 1)
///   X_delta = delta Y + (2/pi) beta sigma delta log(delta)                 (alpha  = 1)
///
/// where Y ~ unit.  This realizes the self-similar scaling of the marginal
/// at time delta from a unit-time draw.
double sample_increment(const StableParams& unit, double delta, RngStream& rng);

/// Convenience overload: converts the triplet to its unit-time stable law and
/// draws one increment.  Callers generating many increments should convert
/// once and use the StableParams overload.
double sample_increment(const StableLevyTriplet& t, double delta, RngStream& rng);

}  // namespace levylab
