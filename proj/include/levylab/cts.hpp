#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "levylab/quadrature.hpp"
#include "levylab/rng.hpp"

namespace levylab {

/// Bilateral classical tempered stable (CTS) Levy measure
///
///   nu(x) = P e^{-A x} x^{-1-alpha} 1{x>0} + Q e^{-B |x|} |x|^{-1-alpha} 1{x<0}
///
/// with alpha in (0,1) u (1,2) and P, A, Q, B >= 0.  The process convention is
/// the fully compensated (centered) one: the characteristic exponent carries
/// the drift b_nu built in and has zero derivative at u = 0.
struct CtsTriplet {
  double alpha;
  double p;  ///< positive-jump mass P
  double a;  ///< positive-side tempering rate A
  double q;  ///< negative-jump mass Q
  double b;  ///< negative-side tempering rate B
};

/// Time step and truncation parameter for increment sampling.
struct CtsIncrementConfig {
  double delta;                              ///< time step, > 0
  double c = 1.0;                            ///< truncation, used only for alpha in (1,2)
  std::uint64_t max_rejections = 100000000;  ///< proposal budget per draw
};

/// Controls for characteristic-function inversion of the CTS density.
struct FourierDensityConfig {
  double du;        ///< frequency grid spacing
  double m_init;    ///< initial truncation bound M
  double m_max;     ///< escalation limit for M
  double eta = 1e-8;       ///< stabilization threshold on |f_M - f_2M|
  double tail_eps = 1e-12; ///< required CF modulus at +-M

  /// A config suitable for densities evaluated on [x_lo, x_hi]: du small
  /// enough that the aliasing period well exceeds the x-range.
  static FourierDensityConfig for_range(double x_lo, double x_hi);
};

/// A Monte-Carlo rate estimate with its standard error.
struct McRate {
  double rate;
  double std_error;
  std::uint64_t n;
};

/// A draw together with the number of proposals the rejection loop used.
struct DrawDetail {
  double value;
  std::uint64_t proposals;
};

/// Domain check.  For alpha < 1 a positive jump mass requires a positive
/// tempering rate on the same side (the centering term Gamma(1-alpha) A^{alpha-1}
/// diverges otherwise); for alpha in (1,2) untempered sides are admitted so
/// the stable limit A, B -> 0 stays expressible.  Throws OutOfDomain.
CtsTriplet validate(const CtsTriplet& t);

/// Characteristic exponent log E e^{iu X_time} of the centered CTS process:
///
///   alpha != 1:
///     time * { P Gamma(-alpha) [(A-iu)^alpha - A^alpha + iu alpha A^{alpha-1}]
///            + Q Gamma(-alpha) [(B+iu)^alpha - B^alpha - iu alpha B^{alpha-1}] }
///   alpha  = 1:
///     iu time (P-Q) + time P (A-iu) log(1 - iu/A) + time Q (B+iu) log(1 + iu/B)
///
/// using principal-branch complex powers (A > 0 keeps A - iu off the negative
/// real axis).  Sides with zero mass contribute nothing, so the untempered
/// one-sided case (Q=0, A=0, alpha in (1,2)) reduces to the stable exponent
/// time P Gamma(-alpha) (-iu)^alpha.
std::complex<double> char_exponent(const CtsTriplet& t, double time, double u);

/// Drift b_nu = int_{|x|>1} x nu(dx) = P A^{alpha-1} Gamma(1-alpha, A)
///                                    - Q B^{alpha-1} Gamma(1-alpha, B)
/// with the upper incomplete gamma function.  Requires A > 0 when P > 0 and
/// B > 0 when Q > 0.
double drift_b_nu(const CtsTriplet& t);

/// Scale of the totally skewed stable law attached to a one-sided mass:
/// sigma = (P Gamma(1-alpha) cos(pi alpha/2) / alpha)^{1/alpha}.  The radicand
/// is positive on both alpha branches (both factors change sign at alpha = 1).
/// Requires alpha in (0,1) u (1,2) and P > 0.
double skewed_stable_scale(double alpha, double mass);

/// One draw of the centered one-sided increment Y_delta^+ by tempering
/// rejection:  propose S ~ S_alpha(delta^{1/alpha} sigma, 1, 0), accept with
/// probability min(1, e^{-A(S + c~)}) where c~ = c for alpha in (1,2) and 0
/// otherwise, and return S - Gamma(1-alpha) delta P A^{alpha-1}.  Exact for
/// alpha in (0,1); the c-truncated approximation for alpha in (1,2).
/// Throws RejectionBudgetExceeded when cfg.max_rejections proposals all fail.
double sample_y_plus(double alpha, double mass, double temper,
                     const CtsIncrementConfig& cfg, RngStream& rng);

/// Same draw, also reporting how many proposals were consumed.
DrawDetail sample_y_plus_detail(double alpha, double mass, double temper,
                                const CtsIncrementConfig& cfg, RngStream& rng);

/// One bilateral increment X_delta = Y_delta^+ - Y_delta^-, the two sides
/// drawn from independent sub-streams (rng.derive(0) / rng.derive(1)); a side
/// with zero mass contributes exactly 0.
double sample_bilateral_increment(const CtsTriplet& t,
                                  const CtsIncrementConfig& cfg,
                                  const RngStream& rng);

/// Acceptance probability of the finite-variation (alpha < 1) rejection loop:
/// e^{Gamma(-alpha) delta P A^alpha}.
double acceptance_rate_fv(double alpha, double mass, double temper, double delta);

/// Expected total proposals per bilateral increment for alpha < 1:
/// e^{-Gamma(-alpha) P delta A^alpha} + e^{-Gamma(-alpha) Q delta B^alpha}.
/// Throws OutOfDomain for alpha in (1,2) (no closed form; use
/// acceptance_rate_iv_mc).
double expected_iterations_bilateral(const CtsTriplet& t, double delta);

/// Monte-Carlo estimate of the infinite-variation acceptance rate
/// s+ = E[e^{-A(S+c)} 1{S > -c}] + P(S <= -c) = E[min(1, e^{-A(S+c)})]
/// over n_mc >= 1000 proposals.  alpha must lie in (1,2).
McRate acceptance_rate_iv_mc(double alpha, double mass, double temper,
                             double delta, double c, std::uint64_t n_mc,
                             RngStream& rng);

/// Density of the centered one-sided increment Y_time^+ through the stable
/// density:
///
///   f(x) = e^{-Ax - (1-alpha) time P Gamma(-alpha) A^alpha}
///          * f_S(x - time P alpha Gamma(-alpha) A^{alpha-1}),
///
/// where S ~ S_alpha(time^{1/alpha} sigma, 1, 0), sigma = skewed_stable_scale.
/// The alpha = 1 branch uses f(x) = e^{-Ax + time P A} f_S(x - P time (1 + log A))
/// with sigma = (pi/2) P.
double pdf_skewed_via_stable(double alpha, double mass, double temper,
                             double time, double x,
                             const QuadratureConfig& cfg = {});

/// CTS density by characteristic-function inversion: trapezoid evaluation of
/// (2 pi)^{-1} int_{-M}^{M} e^{t psi(u)} e^{-iux} du on spacing cfg.du, with M
/// doubled from cfg.m_init until |phi(+-M)| < tail_eps and the values move by
/// less than eta; throws QuadratureFailure when m_max is reached first.
double pdf_fourier(const CtsTriplet& t, double time, double x,
                   const FourierDensityConfig& cfg);

/// Batch version sharing one M escalation across all x (the stabilization
/// criterion is then the sup over the grid).
std::vector<double> pdf_fourier_grid(const CtsTriplet& t, double time,
                                     std::span<const double> xs,
                                     const FourierDensityConfig& cfg);

}  // namespace levylab
