#include "levylab/cts.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "levylab/errors.hpp"
#include "levylab/params.hpp"
#include "levylab/stable_density.hpp"

namespace levylab {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw OutOfDomain(name, "must be finite");
}

// Sampler-facing domain: alpha in (0,1) u (1,2).
void check_sampler_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0) || alpha_is_one(alpha))
    throw OutOfDomain("alpha", "rejection sampling requires alpha in (0,1) or (1,2)");
}

// Upper incomplete gamma Gamma(1 - alpha, x) for x > 0 on all three alpha
// branches.  boost::math::tgamma(a, x) needs a > 0, so alpha in (1,2) goes
// through the recurrence Gamma(s, x) = (Gamma(s+1, x) - x^s e^{-x}) / s with
// s = 1 - alpha in (-1, 0), and alpha = 1 is the exponential integral E_1.
double upper_gamma_one_minus_alpha(double alpha, double x) {
  if (alpha_is_one(alpha)) return boost::math::expint(1, x);
  const double s = 1.0 - alpha;
  if (s > 0.0) return boost::math::tgamma(s, x);
  return (boost::math::tgamma(s + 1.0, x) - std::pow(x, s) * std::exp(-x)) / s;
}

// Totally skewed stable proposal S ~ S_alpha(scale, 1, 0) with the
// angle-dependent constants hoisted out of the rejection loop.  The arithmetic
// matches cms_transform(alpha, 1, u, v) exactly.
class SkewedProposer {
 public:
  SkewedProposer(double alpha, double scale)
      : scale_(scale),
        alpha_(alpha),
        a_th_(std::atan(std::tan(0.5 * kPi * alpha))),
        cos_a_th_(std::cos(a_th_)),
        inv_alpha_(1.0 / alpha),
        exp_m_((1.0 - alpha) / alpha) {}

  double operator()(RngStream& rng) const {
    const double u = rng.next_angle();
    const double v = rng.next_exponential();
    const double c2 = std::max(std::cos(a_th_ + (alpha_ - 1.0) * u), 0.0);
    const double z = std::sin(a_th_ + alpha_ * u) /
                         std::pow(cos_a_th_ * std::cos(u), inv_alpha_) *
                     std::pow(c2 / v, exp_m_);
    return scale_ * z;
  }

 private:
  double scale_;
  double alpha_;
  double a_th_;
  double cos_a_th_;
  double inv_alpha_;
  double exp_m_;
};

DrawDetail draw_y_plus(double alpha, double mass, double temper,
                       const CtsIncrementConfig& cfg, RngStream& rng) {
  check_sampler_alpha(alpha);
  require_finite(mass, "mass");
  require_finite(temper, "temper");
  if (!(mass > 0.0)) throw OutOfDomain("mass", "one-sided draw needs a positive jump mass");
  if (!(temper > 0.0)) throw OutOfDomain("temper", "tempering rate must be positive");
  if (!(cfg.delta > 0.0) || !std::isfinite(cfg.delta))
    throw OutOfDomain("delta", "time step must be positive and finite");
  const bool infinite_variation = alpha > 1.0;
  if (infinite_variation && !(cfg.c > 0.0))
    throw OutOfDomain("c", "truncation must be positive for alpha in (1,2)");
  if (cfg.max_rejections == 0)
    throw OutOfDomain("max_rejections", "proposal budget must be positive");

  const double sigma = skewed_stable_scale(alpha, mass);
  const SkewedProposer propose(alpha, std::pow(cfg.delta, 1.0 / alpha) * sigma);
  const double c_eff = infinite_variation ? cfg.c : 0.0;
  const double shift =
      std::tgamma(1.0 - alpha) * cfg.delta * mass * std::pow(temper, alpha - 1.0);

  for (std::uint64_t n = 1; n <= cfg.max_rejections; ++n) {
    const double s = propose(rng);
    const double u = rng.next_uniform01();
    if (u <= std::exp(-temper * (s + c_eff))) return {s - shift, n};
  }
  throw RejectionBudgetExceeded("tempering rejection used up its proposal budget");
}

}  // namespace

CtsTriplet validate(const CtsTriplet& t) {
  require_finite(t.alpha, "alpha");
  require_finite(t.p, "p");
  require_finite(t.a, "a");
  require_finite(t.q, "q");
  require_finite(t.b, "b");
  if (!(t.alpha > 0.0 && t.alpha < 2.0))
    throw OutOfDomain("alpha", "stability index must lie in (0, 2)");
  if (t.p < 0.0) throw OutOfDomain("p", "jump mass must be nonnegative");
  if (t.q < 0.0) throw OutOfDomain("q", "jump mass must be nonnegative");
  if (t.a < 0.0) throw OutOfDomain("a", "tempering rate must be nonnegative");
  if (t.b < 0.0) throw OutOfDomain("b", "tempering rate must be nonnegative");
  if (!(t.p + t.q > 0.0)) throw OutOfDomain("p", "total jump mass must be positive");
  // Below and at alpha = 1 the centering integral needs exponential decay on
  // every active side; above it A, B -> 0 recovers the stable law, so
  // untempered sides stay admissible.
  if (!(t.alpha > 1.0) || alpha_is_one(t.alpha)) {
    if (t.p > 0.0 && !(t.a > 0.0))
      throw OutOfDomain("a", "alpha <= 1 requires tempering on the positive side");
    if (t.q > 0.0 && !(t.b > 0.0))
      throw OutOfDomain("b", "alpha <= 1 requires tempering on the negative side");
  }
  return t;
}

std::complex<double> char_exponent(const CtsTriplet& t, double time, double u) {
  validate(t);
  if (!(time > 0.0) || !std::isfinite(time))
    throw OutOfDomain("time", "time must be positive and finite");
  require_finite(u, "u");
  if (u == 0.0) return {0.0, 0.0};

  const std::complex<double> iu(0.0, u);
  if (alpha_is_one(t.alpha)) {
    std::complex<double> psi = iu * (t.p - t.q);
    if (t.p > 0.0) psi += t.p * (t.a - iu) * std::log(1.0 - iu / t.a);
    if (t.q > 0.0) psi += t.q * (t.b + iu) * std::log(1.0 + iu / t.b);
    return time * psi;
  }

  const double g = std::tgamma(-t.alpha);
  std::complex<double> psi(0.0, 0.0);
  if (t.p > 0.0) {
    psi += t.p * g *
           (std::pow(t.a - iu, t.alpha) - std::pow(t.a, t.alpha) +
            iu * t.alpha * std::pow(t.a, t.alpha - 1.0));
  }
  if (t.q > 0.0) {
    psi += t.q * g *
           (std::pow(t.b + iu, t.alpha) - std::pow(t.b, t.alpha) -
            iu * t.alpha * std::pow(t.b, t.alpha - 1.0));
  }
  return time * psi;
}

double drift_b_nu(const CtsTriplet& t) {
  validate(t);
  if (t.p > 0.0 && !(t.a > 0.0))
    throw OutOfDomain("a", "drift needs tempering on the positive side");
  if (t.q > 0.0 && !(t.b > 0.0))
    throw OutOfDomain("b", "drift needs tempering on the negative side");
  double drift = 0.0;
  if (t.p > 0.0)
    drift += t.p * std::pow(t.a, t.alpha - 1.0) *
             upper_gamma_one_minus_alpha(t.alpha, t.a);
  if (t.q > 0.0)
    drift -= t.q * std::pow(t.b, t.alpha - 1.0) *
             upper_gamma_one_minus_alpha(t.alpha, t.b);
  return drift;
}

double skewed_stable_scale(double alpha, double mass) {
  check_sampler_alpha(alpha);
  if (!(mass > 0.0) || !std::isfinite(mass))
    throw OutOfDomain("mass", "jump mass must be positive and finite");
  // Gamma(1-alpha) and cos(pi alpha/2) are both positive for alpha < 1 and
  // both negative for alpha in (1,2), so the radicand is always positive.
  const double radicand =
      mass * std::tgamma(1.0 - alpha) * std::cos(0.5 * kPi * alpha) / alpha;
  return std::pow(radicand, 1.0 / alpha);
}

double sample_y_plus(double alpha, double mass, double temper,
                     const CtsIncrementConfig& cfg, RngStream& rng) {
  return draw_y_plus(alpha, mass, temper, cfg, rng).value;
}

DrawDetail sample_y_plus_detail(double alpha, double mass, double temper,
                                const CtsIncrementConfig& cfg, RngStream& rng) {
  return draw_y_plus(alpha, mass, temper, cfg, rng);
}

double sample_bilateral_increment(const CtsTriplet& t,
                                  const CtsIncrementConfig& cfg,
                                  const RngStream& rng) {
  validate(t);
  double x = 0.0;
  if (t.p > 0.0) {
    RngStream plus = rng.derive(0);
    x += sample_y_plus(t.alpha, t.p, t.a, cfg, plus);
  }
  if (t.q > 0.0) {
    RngStream minus = rng.derive(1);
    x -= sample_y_plus(t.alpha, t.q, t.b, cfg, minus);
  }
  return x;
}

double acceptance_rate_fv(double alpha, double mass, double temper, double delta) {
  if (!(alpha > 0.0 && alpha < 1.0) || alpha_is_one(alpha))
    throw OutOfDomain("alpha", "closed-form acceptance rate requires alpha in (0,1)");
  require_finite(mass, "mass");
  require_finite(temper, "temper");
  if (mass < 0.0) throw OutOfDomain("mass", "jump mass must be nonnegative");
  if (temper < 0.0) throw OutOfDomain("temper", "tempering rate must be nonnegative");
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw OutOfDomain("delta", "time step must be positive and finite");
  return std::exp(std::tgamma(-alpha) * delta * mass * std::pow(temper, alpha));
}

double expected_iterations_bilateral(const CtsTriplet& t, double delta) {
  validate(t);
  if (!(t.alpha < 1.0) || alpha_is_one(t.alpha))
    throw OutOfDomain("alpha",
                      "no closed form for alpha >= 1; use acceptance_rate_iv_mc");
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw OutOfDomain("delta", "time step must be positive and finite");
  const double g = std::tgamma(-t.alpha);
  return std::exp(-g * t.p * delta * std::pow(t.a, t.alpha)) +
         std::exp(-g * t.q * delta * std::pow(t.b, t.alpha));
}

McRate acceptance_rate_iv_mc(double alpha, double mass, double temper,
                             double delta, double c, std::uint64_t n_mc,
                             RngStream& rng) {
  if (!(alpha > 1.0 && alpha < 2.0) || alpha_is_one(alpha))
    throw OutOfDomain("alpha", "Monte-Carlo rate is for alpha in (1,2)");
  require_finite(mass, "mass");
  require_finite(temper, "temper");
  if (!(mass > 0.0)) throw OutOfDomain("mass", "jump mass must be positive");
  if (!(temper > 0.0)) throw OutOfDomain("temper", "tempering rate must be positive");
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw OutOfDomain("delta", "time step must be positive and finite");
  if (!(c >= 0.0) || !std::isfinite(c))
    throw OutOfDomain("c", "truncation must be nonnegative and finite");
  if (n_mc < 1000)
    throw OutOfDomain("n_mc", "at least 1000 proposals are required");

  const double sigma = skewed_stable_scale(alpha, mass);
  const SkewedProposer propose(alpha, std::pow(delta, 1.0 / alpha) * sigma);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t i = 0; i < n_mc; ++i) {
    const double s = propose(rng);
    const double w = std::min(1.0, std::exp(-temper * (s + c)));
    sum += w;
    sum_sq += w * w;
  }
  const double n = static_cast<double>(n_mc);
  const double mean = sum / n;
  const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
  return {mean, std::sqrt(var / n), n_mc};
}

double pdf_skewed_via_stable(double alpha, double mass, double temper,
                             double time, double x, const QuadratureConfig& cfg) {
  if (!(alpha > 0.0 && alpha < 2.0))
    throw OutOfDomain("alpha", "stability index must lie in (0, 2)");
  require_finite(mass, "mass");
  require_finite(temper, "temper");
  if (!(mass > 0.0)) throw OutOfDomain("mass", "jump mass must be positive");
  if (!(temper > 0.0)) throw OutOfDomain("temper", "tempering rate must be positive");
  if (!(time > 0.0) || !std::isfinite(time))
    throw OutOfDomain("time", "time must be positive and finite");
  require_finite(x, "x");

  if (alpha_is_one(alpha)) {
    const StableParams stable{1.0, time * 0.5 * kPi * mass, 1.0, 0.0};
    const double shifted = x - mass * time * (1.0 + std::log(temper));
    const double log_pref = -temper * x + time * mass * temper;
    return std::exp(log_pref) * pdf(stable, shifted, cfg);
  }

  const double g = std::tgamma(-alpha);
  const double sigma = skewed_stable_scale(alpha, mass);
  const StableParams stable{alpha, std::pow(time, 1.0 / alpha) * sigma, 1.0, 0.0};
  const double shifted =
      x - time * mass * alpha * g * std::pow(temper, alpha - 1.0);
  const double log_pref =
      -temper * x - (1.0 - alpha) * time * mass * g * std::pow(temper, alpha);
  return std::exp(log_pref) * pdf(stable, shifted, cfg);
}

FourierDensityConfig FourierDensityConfig::for_range(double x_lo, double x_hi) {
  if (!std::isfinite(x_lo) || !std::isfinite(x_hi) || !(x_hi >= x_lo))
    throw OutOfDomain("x_hi", "range must be finite and ordered");
  const double reach = std::max({std::abs(x_lo), std::abs(x_hi), 8.0});
  FourierDensityConfig cfg{};
  // Aliasing period 2 pi / du = 16 * reach keeps every alias image at least
  // 15 * reach away from the evaluation range.
  cfg.du = 2.0 * kPi / (16.0 * reach);
  cfg.m_init = 16.0;
  cfg.m_max = 65536.0;
  return cfg;
}

std::vector<double> pdf_fourier_grid(const CtsTriplet& t, double time,
                                     std::span<const double> xs,
                                     const FourierDensityConfig& cfg) {
  validate(t);
  if (!(time > 0.0) || !std::isfinite(time))
    throw OutOfDomain("time", "time must be positive and finite");
  if (xs.empty()) throw EmptyInput("pdf_fourier_grid: no evaluation points");
  for (double x : xs) require_finite(x, "x");
  if (!(cfg.du > 0.0) || !std::isfinite(cfg.du))
    throw OutOfDomain("du", "frequency spacing must be positive and finite");
  if (!(cfg.m_init > 0.0) || !(cfg.m_max > cfg.m_init))
    throw OutOfDomain("m_init", "need 0 < m_init < m_max");
  if (!(cfg.eta > 0.0) || !(cfg.tail_eps > 0.0))
    throw OutOfDomain("eta", "thresholds must be positive");

  // CF samples on both half-axes.  The negative side is evaluated explicitly
  // (rather than by conjugate symmetry) so that a non-Hermitian exponent --
  // i.e. a formula bug -- shows up in the imaginary part of the result.
  std::vector<std::complex<double>> phi_pos(1, {1.0, 0.0});
  std::vector<std::complex<double>> phi_neg(1, {1.0, 0.0});
  auto extend_cf = [&](std::size_t upto) {
    for (std::size_t k = phi_pos.size(); k <= upto; ++k) {
      const double u = static_cast<double>(k) * cfg.du;
      phi_pos.push_back(std::exp(char_exponent(t, time, u)));
      phi_neg.push_back(std::exp(char_exponent(t, time, -u)));
    }
  };

  std::vector<double> prev;
  std::vector<double> cur(xs.size());
  for (double m = cfg.m_init;; m *= 2.0) {
    const auto k_end = static_cast<std::size_t>(std::ceil(m / cfg.du));
    extend_cf(k_end);

    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double x = xs[i];
      const std::complex<double> step = std::polar(1.0, -cfg.du * x);
      std::complex<double> rot(1.0, 0.0);
      std::complex<double> acc = phi_pos[0];
      for (std::size_t k = 1; k <= k_end; ++k) {
        if ((k & 4095u) == 0) rot = std::polar(1.0, -cfg.du * x * static_cast<double>(k));
        else rot *= step;
        const double w = (k == k_end) ? 0.5 : 1.0;
        acc += w * (phi_pos[k] * rot + phi_neg[k] * std::conj(rot));
      }
      acc *= cfg.du / (2.0 * kPi);
      if (!(std::abs(acc.imag()) < 1e-8))
        throw QuadratureFailure(
            "CF inversion produced a non-real density; exponent is not Hermitian");
      cur[i] = acc.real();
    }

    const bool tail_ok = std::abs(phi_pos[k_end]) < cfg.tail_eps &&
                         std::abs(phi_neg[k_end]) < cfg.tail_eps;
    if (!prev.empty() && tail_ok) {
      double sup = 0.0;
      for (std::size_t i = 0; i < xs.size(); ++i)
        sup = std::max(sup, std::abs(cur[i] - prev[i]));
      if (sup < cfg.eta) return cur;
    }
    if (2.0 * m > cfg.m_max)
      throw QuadratureFailure("CF inversion did not stabilize before m_max");
    prev = cur;
  }
}

double pdf_fourier(const CtsTriplet& t, double time, double x,
                   const FourierDensityConfig& cfg) {
  const double xs[1] = {x};
  return pdf_fourier_grid(t, time, std::span<const double>(xs, 1), cfg)[0];
}

}  // namespace levylab
