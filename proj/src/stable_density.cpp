#include "levylab/stable_density.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <iterator>
#include <numbers>
#include <vector>

#include "levylab/errors.hpp"

namespace levylab {

namespace {

constexpr double kPi = std::numbers::pi;

void check_alpha_beta(double alpha, double beta) {
  if (!(alpha > 0.0 && alpha <= 2.0))
    throw OutOfDomain("alpha", "must lie in (0, 2]");
  if (!(beta >= -1.0 && beta <= 1.0))
    throw OutOfDomain("beta", "must lie in [-1, 1]");
}

/// log V_{alpha,beta}(theta) for alpha != 1, written so every factor stays in
/// log space (V spans hundreds of orders of magnitude near the endpoints).
class LogVKernel {
 public:
  LogVKernel(double alpha, double beta)
      : alpha_(alpha),
        th0_(theta0(alpha, beta)),
        a_th0_(std::atan(beta * std::tan(0.5 * kPi * alpha))),
        log_cos_a_th0_(std::log(std::cos(a_th0_))),
        inv_am1_(1.0 / (alpha - 1.0)) {}

  double lo() const { return -th0_; }
  double hi() const { return 0.5 * kPi; }

  double operator()(double th) const {
    const double s = std::sin(alpha_ * (th0_ + th));
    const double c1 = std::cos(th);
    const double c2 = std::cos(a_th0_ + (alpha_ - 1.0) * th);
    return inv_am1_ * (log_cos_a_th0_ + std::log(c1)) -
           alpha_ * inv_am1_ * std::log(s) + std::log(c2);
  }

 private:
  double alpha_, th0_, a_th0_, log_cos_a_th0_, inv_am1_;
};

/// log V_{1,beta}(theta) on (-pi/2, pi/2), beta != 0.
class LogVKernelOne {
 public:
  explicit LogVKernelOne(double beta) : beta_(beta) {}

  double lo() const { return -0.5 * kPi; }
  double hi() const { return 0.5 * kPi; }

  double operator()(double th) const {
    const double w = 0.5 * kPi + beta_ * th;
    return std::log(2.0 / kPi) + std::log(w) - std::log(std::cos(th)) +
           w * std::tan(th) / beta_;
  }

 private:
  double beta_;
};

/// Bisect the monotone function logv for logv(theta) = target; returns the
/// exact endpoint when the target lies outside the sampled range (the caller
/// drops those: a panel edge hugging the endpoint sits where cos(theta)
/// cancellation makes the integrand noisy, and carries no structure anyway).
template <typename F>
double solve_logv(const F& logv, double lo, double hi, double target) {
  // The inset must stay below the integrand's boundary-layer width, which
  // shrinks proportionally to x: at x ~ 1e-9 the whole peak sits within
  // 1e-9 of an endpoint, so probe as close as double spacing allows.
  const double h = 1e-15 * (hi - lo);
  double a = lo + h, b = hi - h;
  double fa = logv(a), fb = logv(b);
  double edge_a = lo, edge_b = hi;
  const bool increasing = fb > fa;
  if (!increasing) {
    std::swap(a, b);
    std::swap(fa, fb);
    std::swap(edge_a, edge_b);
  }
  if (!(target > fa)) return edge_a;
  if (!(target < fb)) return edge_b;
  for (int i = 0; i < 100; ++i) {
    const double m = 0.5 * (a + b);
    if (m == a || m == b) break;
    if (logv(m) < target)
      a = m;
    else
      b = m;
  }
  return 0.5 * (a + b);
}

/// Integral of exp(u - e^u) over (lo, hi) with u(theta) = logv(theta) + log_w.
/// This is the overflow-free form of int V e^{-W V} dtheta = e^{-log_w} * I:
/// the integrand is bounded by 1/e, peaks where u = 0 and decays (doubly)
/// exponentially away from the peak, so we bracket a ladder of u levels by
/// bisection on the monotone logv and seed the panels there.  Panels where
/// e^u would overflow contribute exactly 0 (the true factor e^{-e^u} has long
/// underflowed).
///
/// The ladder must run deep on the e^u side: for small x the structure lives
/// in a boundary layer of width ~x radians at one endpoint, and a panel whose
/// spike hugs an edge at 1e-6 of its width is invisible to the fixed
/// quadrature nodes (the error estimate then reads zero and adaptive
/// subdivision never triggers).  Rungs down to u = -40 hand the estimator
/// panels of bounded dynamic range; beyond -40 the remaining mass is below
/// e^{-40} of the peak panel even after the 1/x amplification in the density
/// prefactor.  On the doubly-exponential side e^{-e^u} dies so fast that two
/// extra rungs suffice.
template <typename F>
double peak_integral(const F& logv, double log_w, const QuadratureConfig& cfg) {
  const double lo = logv.lo(), hi = logv.hi();
  if (!(hi - lo > 1e-12)) return 0.0;
  auto g = [&](double th) {
    const double u = logv(th) + log_w;
    if (std::isnan(u)) return 0.0;  // endpoint rounding spilled out of domain
    if (u > 700.0) return 0.0;
    return std::exp(u - std::exp(u));
  };
  // Keep every interior bracket, however close to an endpoint: at extreme x
  // the peak genuinely hugs +-pi/2 and dropping its seeds blinds the
  // quadrature to the entire bump.  Out-of-range targets come back as exactly
  // lo or hi and are discarded (a clamped near-endpoint seed would carve off a
  // structureless sliver whose cos(theta) cancellation noise stalls the
  // adaptive error estimate).
  constexpr double kTargets[] = {5.0,   4.0,   3.0,   0.0,   -4.0,  -10.0,
                                 -16.0, -22.0, -28.0, -34.0, -40.0};
  constexpr int kMaxBps = int(std::size(kTargets));
  double bps[kMaxBps];
  int nbps = 0;
  for (double target : kTargets) {
    const double th = solve_logv(logv, lo, hi, target - log_w);
    if (th > lo && th < hi) bps[nbps++] = th;
  }
  std::sort(bps, bps + nbps);
  nbps = int(std::unique(bps, bps + nbps) - bps);
  return integrate_gk(g, lo, hi, cfg, std::span<const double>(bps, nbps))
      .value;
}

double pdf_at_zero(double alpha, double beta) {
  const double t0 = theta0(alpha, beta);
  const double a_t0 = std::atan(beta * std::tan(0.5 * kPi * alpha));
  return std::tgamma(1.0 + 1.0 / alpha) * std::cos(t0) *
         std::pow(std::cos(a_t0), 1.0 / alpha) / kPi;
}

/// f_Z(x) for x > 0, alpha != 1 (no reflection, no small-x guard).
double pdf_positive(double alpha, double beta, double x,
                    const QuadratureConfig& cfg) {
  const LogVKernel logv(alpha, beta);
  if (!(logv.hi() - logv.lo() > 1e-12)) return 0.0;  // beta = -1, alpha < 1
  const double log_w = alpha / (alpha - 1.0) * std::log(x);
  // The density is prefactor * integral, so when the prefactor amplifies
  // (small x, where it grows like 1/x) the integral must be resolved
  // proportionally tighter for the density itself to meet cfg.abs_tol.
  // Never loosen on the attenuating side: the far tail depends on the
  // absolute floor staying put.
  const double prefactor = alpha / (kPi * std::abs(alpha - 1.0) * x);
  QuadratureConfig local = cfg;
  if (prefactor > 1.0) local.abs_tol = cfg.abs_tol / prefactor;
  return prefactor * peak_integral(logv, log_w, local);
}

/// f_Z(x) for alpha = 1, beta > 0.
double pdf_alpha_one(double beta, double x, const QuadratureConfig& cfg) {
  const LogVKernelOne logv(beta);
  const double log_w = -0.5 * kPi * x / beta;  // log of e^{-pi x / (2 beta)}
  QuadratureConfig local = cfg;
  if (beta < 0.5) local.abs_tol = cfg.abs_tol * (2.0 * beta);
  return peak_integral(logv, log_w, local) / (2.0 * beta);
}

double tail_constant(double alpha) {
  if (alpha_is_one(alpha)) return 1.0 / kPi;
  return (1.0 - alpha) /
         (2.0 * std::tgamma(2.0 - alpha) * std::cos(0.5 * kPi * alpha));
}

}  // namespace

double theta0(double alpha, double beta) {
  check_alpha_beta(alpha, beta);
  if (alpha >= 2.0) throw OutOfDomain("alpha", "must lie in (0, 2)");
  if (alpha_is_one(alpha)) return 0.5 * kPi;
  return std::atan(beta * std::tan(0.5 * kPi * alpha)) / alpha;
}

double nolan_v(double alpha, double beta, double theta) {
  check_alpha_beta(alpha, beta);
  if (alpha >= 2.0) throw OutOfDomain("alpha", "must lie in (0, 2)");
  if (alpha_is_one(alpha)) {
    if (beta == 0.0)
      throw Unsupported("V is undefined for (alpha, beta) = (1, 0)");
    if (!(theta > -0.5 * kPi && theta < 0.5 * kPi))
      throw OutOfDomain("theta", "must lie in (-pi/2, pi/2)");
    return std::exp(LogVKernelOne(beta)(theta));
  }
  const LogVKernel logv(alpha, beta);
  if (!(theta > logv.lo() && theta < logv.hi()))
    throw OutOfDomain("theta", "must lie in (-theta0, pi/2)");
  return std::exp(logv(theta));
}

double pdf_standard(double alpha, double beta, double x,
                    const QuadratureConfig& cfg) {
  check_alpha_beta(alpha, beta);
  if (alpha == 2.0) {
    return std::exp(-0.25 * x * x) / (2.0 * std::sqrt(kPi));
  }
  if (alpha_is_one(alpha)) {
    if (beta == 0.0) return 1.0 / (kPi * (1.0 + x * x));
    if (beta < 0.0) return pdf_alpha_one(-beta, -x, cfg);
    return pdf_alpha_one(beta, x, cfg);
  }
  const double s = cfg.x_switch;
  if (std::abs(x) < s) {
    // Quadratic through (-s, f(-s)), (0, f(0)), (s, f(s)): the direct integral
    // degenerates as x -> 0 (x^{alpha/(alpha-1)} under/overflows).
    const double f0 = pdf_at_zero(alpha, beta);
    const double fp = pdf_positive(alpha, beta, s, cfg);
    const double fm = pdf_positive(alpha, -beta, s, cfg);
    const double value = f0 + x * (fp - fm) / (2.0 * s) +
                         x * x * (fp - 2.0 * f0 + fm) / (2.0 * s * s);
    return std::max(value, 0.0);
  }
  if (x < 0.0) return pdf_positive(alpha, -beta, -x, cfg);
  return pdf_positive(alpha, beta, x, cfg);
}

double pdf(const StableParams& p, double x, const QuadratureConfig& cfg) {
  const auto [z, map] = standardize(p);
  return pdf_standard(z.alpha, z.beta, (x - map.shift) / map.scale, cfg) /
         map.scale;
}

double cdf(const StableParams& p, double x, const QuadratureConfig& cfg) {
  const StableParams v = validate(p);
  if (!(v.sigma > 0.0)) throw OutOfDomain("sigma", "must be > 0");
  if (std::isnan(x)) throw OutOfDomain("x", "must not be NaN");
  const SupportInterval sup = support(v);
  if (x <= sup.lower) return 0.0;
  if (x >= sup.upper) return 1.0;
  if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;

  // Lower integration bound: the support edge when finite, otherwise far
  // enough out that the omitted mass (first-order tail asymptote) is < 1e-9;
  // for power-law tails that mass is added back below, leaving only the
  // higher-order remainder of the asymptote.
  double lower;
  double below_lower = 0.0;
  if (std::isfinite(sup.lower)) {
    lower = sup.lower;
  } else if (v.alpha == 2.0) {
    lower = v.delta - 20.0 * v.sigma;  // N(delta, 2 sigma^2): < 1e-44 omitted
  } else if (v.beta < 1.0) {
    const double radius =
        std::pow(tail_constant(v.alpha) * std::pow(v.sigma, v.alpha) *
                     (1.0 - v.beta) * 1e9,
                 1.0 / v.alpha);
    lower = v.delta - std::max(radius, 10.0 * v.sigma);
    below_lower = tail_asymptote(v, v.delta - lower, TailSide::lower);
  } else {
    // beta = 1 with alpha >= 1: the lower tail decays faster than any
    // exponential; 40 scale units is far below 1e-9 of mass.
    lower = v.delta - 40.0 * v.sigma;
  }
  if (x <= lower) return below_lower;

  // Geometric ladder of panel seeds around the central mass.
  const double center = standardize(v).second.shift;
  std::vector<double> bps;
  for (double off = 0.5 * v.sigma;; off *= 2.0) {
    const double lo_pt = center - off, hi_pt = center + off;
    const bool lo_in = lo_pt > lower && lo_pt < x;
    const bool hi_in = hi_pt > lower && hi_pt < x;
    if (lo_in) bps.push_back(lo_pt);
    if (hi_in) bps.push_back(hi_pt);
    if (off > std::max(center - lower, x - center)) break;
  }
  if (center > lower && center < x) bps.push_back(center);
  std::sort(bps.begin(), bps.end());

  auto f = [&](double y) { return pdf(v, y, cfg); };
  return std::min(below_lower + integrate_gk(f, lower, x, cfg, bps).value, 1.0);
}

std::complex<double> char_fn(const StableParams& p, double u) {
  const StableParams v = validate(p);
  if (u == 0.0) return {1.0, 0.0};
  const double au = std::abs(u);
  const double sgn = u > 0.0 ? 1.0 : -1.0;
  std::complex<double> psi;
  if (alpha_is_one(v.alpha)) {
    psi = {-v.sigma * au,
           -v.sigma * au * v.beta * (2.0 / kPi) * sgn * std::log(au) +
               v.delta * u};
  } else {
    const double mag = std::pow(v.sigma * au, v.alpha);
    psi = {-mag,
           mag * v.beta * sgn * std::tan(0.5 * kPi * v.alpha) + v.delta * u};
  }
  return std::exp(psi);
}

double tail_asymptote(const StableParams& p, double x, TailSide side) {
  const StableParams v = validate(p);
  if (v.alpha >= 2.0)
    throw OutOfDomain("alpha", "Gaussian tails are not power laws");
  if (!(x > 0.0)) throw OutOfDomain("x", "tail distance must be > 0");
  const double coef = side == TailSide::upper ? 1.0 + v.beta : 1.0 - v.beta;
  if (coef == 0.0)
    throw Unsupported("requested tail is lighter than any power law");
  return tail_constant(v.alpha) * std::pow(v.sigma, v.alpha) * coef *
         std::pow(x, -v.alpha);
}

StableCdf::StableCdf(double alpha, double beta, std::size_t points,
                     const QuadratureConfig& cfg)
    : alpha_(alpha), beta_(beta) {
  check_alpha_beta(alpha, beta);
  if (alpha == 2.0) return;  // operator() uses the Gaussian closed form
  if (points < 101) throw OutOfDomain("points", "need at least 101");

  const StableParams std_p{alpha, 1.0, beta, 0.0};
  const SupportInterval sup = support(std_p);
  const double c_tail = tail_constant(alpha);
  const double coef_lo = 1.0 - beta, coef_hi = 1.0 + beta;

  // Core covers [-16, 16] clipped to the support; geometric tails continue on
  // each unbounded side until the asymptote mass falls below 1e-8.
  const double core_lo = std::max(-16.0, sup.lower);
  const double core_hi = std::min(16.0, sup.upper);
  const bool lo_open = !std::isfinite(sup.lower);
  const bool hi_open = !std::isfinite(sup.upper);
  const std::size_t n_tail_sides = (lo_open ? 1 : 0) + (hi_open ? 1 : 0);
  const std::size_t n_core = points - (points / 4) * n_tail_sides;
  const std::size_t n_tail = n_tail_sides ? points / 4 : 0;

  xs_.reserve(points + 2);
  if (lo_open) {
    const double reach =
        coef_lo > 0.0 ? std::pow(c_tail * coef_lo * 1e8, 1.0 / alpha) : 40.0;
    const double lo_end = std::min(-std::max(reach, 40.0), core_lo - 1.0);
    const double ratio = std::log(lo_end / core_lo) / double(n_tail);
    for (std::size_t i = 0; i < n_tail; ++i)  // lo_end rising toward core_lo
      xs_.push_back(lo_end * std::exp(-ratio * double(i)));
  }
  for (std::size_t i = 0; i < n_core; ++i)
    xs_.push_back(core_lo +
                  (core_hi - core_lo) * double(i) / double(n_core - 1));
  if (hi_open) {
    const double reach =
        coef_hi > 0.0 ? std::pow(c_tail * coef_hi * 1e8, 1.0 / alpha) : 40.0;
    const double hi_end = std::max(std::max(reach, 40.0), core_hi + 1.0);
    const double ratio = std::log(hi_end / core_hi) / double(n_tail);
    for (std::size_t i = 1; i <= n_tail; ++i)
      xs_.push_back(core_hi * std::exp(ratio * double(i)));
  }
  std::sort(xs_.begin(), xs_.end());
  xs_.erase(std::unique(xs_.begin(), xs_.end()), xs_.end());

  // Simpson on each interval, accumulated from the lower tail anchor.
  cdf_.resize(xs_.size());
  double mass_lo = 0.0;
  if (lo_open && coef_lo > 0.0)
    mass_lo = c_tail * coef_lo * std::pow(-xs_.front(), -alpha);
  cdf_[0] = mass_lo;
  double f_prev = pdf_standard(alpha, beta, xs_[0], cfg);
  for (std::size_t i = 1; i < xs_.size(); ++i) {
    const double h = xs_[i] - xs_[i - 1];
    const double f_mid =
        pdf_standard(alpha, beta, xs_[i - 1] + 0.5 * h, cfg);
    const double f_cur = pdf_standard(alpha, beta, xs_[i], cfg);
    cdf_[i] = cdf_[i - 1] + h / 6.0 * (f_prev + 4.0 * f_mid + f_cur);
    f_prev = f_cur;
  }
}

double StableCdf::operator()(double x) const {
  if (alpha_ == 2.0) return 0.5 * std::erfc(-0.5 * x);
  if (std::isnan(x)) throw OutOfDomain("x", "must not be NaN");
  if (x <= xs_.front()) {
    const double f0 = cdf_.front();
    if (f0 == 0.0 || x >= 0.0) return f0;
    // continue the lower tail with the asymptote's power law
    return std::min(f0 * std::pow(xs_.front() / x, alpha_), f0);
  }
  if (x >= xs_.back()) {
    const double s_end = 1.0 - cdf_.back();
    if (s_end <= 0.0 || x <= 0.0) return 1.0;
    return 1.0 - std::min(s_end * std::pow(xs_.back() / x, alpha_), s_end);
  }
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const std::size_t i = std::size_t(it - xs_.begin());
  const double t = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
  const double v = cdf_[i - 1] + t * (cdf_[i] - cdf_[i - 1]);
  return std::clamp(v, 0.0, 1.0);
}

}  // namespace levylab
