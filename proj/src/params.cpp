#include "levylab/params.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "levylab/errors.hpp"
#include "levylab/quadrature.hpp"

namespace levylab {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(double v, const char* field) {
  if (!std::isfinite(v)) throw OutOfDomain(field, "must be finite");
}

}  // namespace

bool alpha_is_one(double alpha) noexcept {
  return std::abs(alpha - 1.0) < kAlphaOneBand;
}

StableParams validate(const StableParams& p) {
  require_finite(p.alpha, "alpha");
  require_finite(p.sigma, "sigma");
  require_finite(p.beta, "beta");
  require_finite(p.delta, "delta");
  if (!(p.alpha > 0.0 && p.alpha <= 2.0))
    throw OutOfDomain("alpha", "must lie in (0, 2]");
  if (!(p.sigma >= 0.0)) throw OutOfDomain("sigma", "must be >= 0");
  if (!(p.beta >= -1.0 && p.beta <= 1.0))
    throw OutOfDomain("beta", "must lie in [-1, 1]");
  StableParams out = p;
  if (p.alpha == 2.0) out.beta = 0.0;  // skewness is meaningless for Gaussian
  return out;
}

StableLevyTriplet validate(const StableLevyTriplet& t) {
  require_finite(t.alpha, "alpha");
  require_finite(t.p, "p");
  require_finite(t.q, "q");
  require_finite(t.b, "b");
  if (!(t.alpha > 0.0 && t.alpha < 2.0))
    throw OutOfDomain("alpha", "must lie in (0, 2)");
  if (!(t.p >= 0.0)) throw OutOfDomain("p", "must be >= 0");
  if (!(t.q >= 0.0)) throw OutOfDomain("q", "must be >= 0");
  if (!(t.p + t.q > 0.0)) throw OutOfDomain("p", "p + q must be > 0");
  return t;
}

double levy_location_constant() {
  static const double cached = [] {
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-13;
    cfg.rel_tol = 1e-13;
    // \int_0^1 (sin r - r)/r^2 dr; the integrand extends continuously by 0 at
    // r = 0 (sin r - r ~ -r^3/6).
    const double head =
        integrate_gk(
            [](double r) { return r == 0.0 ? 0.0 : (std::sin(r) - r) / (r * r); },
            0.0, 1.0, cfg)
            .value;
    // \int_1^R sin(r)/r^2 dr, one adaptive panel per half-period so the
    // oscillation never cancels inside a panel.
    const double big_r = 400.0 * kPi;
    double body = 0.0, comp = 0.0;  // Kahan-compensated sum
    double lo = 1.0;
    for (double hi = kPi; hi <= big_r + 1e-9; hi += kPi) {
      const double piece =
          integrate_gk([](double r) { return std::sin(r) / (r * r); }, lo, hi,
                       cfg)
              .value;
      const double y = piece - comp;
      const double s = body + y;
      comp = (s - body) - y;
      body = s;
      lo = hi;
    }
    // Tail \int_R^inf sin(r)/r^2 dr by repeated integration by parts:
    // cos R/R^2 + 2 sin R/R^3 - 6 cos R/R^4 - 24 sin R/R^5 + O(R^-6).
    const double r2 = big_r * big_r, r3 = r2 * big_r, r4 = r3 * big_r,
                 r5 = r4 * big_r;
    const double tail = std::cos(big_r) / r2 + 2.0 * std::sin(big_r) / r3 -
                        6.0 * std::cos(big_r) / r4 -
                        24.0 * std::sin(big_r) / r5;
    return head + body + tail;
  }();
  return cached;
}

StableParams levy_to_stable(const StableLevyTriplet& t) {
  const StableLevyTriplet v = validate(t);
  const double total = v.p + v.q;
  StableParams out;
  out.alpha = v.alpha;
  out.beta = (v.p - v.q) / total;
  if (alpha_is_one(v.alpha)) {
    out.sigma = 0.5 * kPi * total;
    out.delta = levy_location_constant() * (v.p - v.q) + v.b;
  } else {
    const double radicand = total * std::tgamma(1.0 - v.alpha) *
                            std::cos(0.5 * kPi * v.alpha) / v.alpha;
    out.sigma = std::pow(radicand, 1.0 / v.alpha);
    out.delta = (v.q - v.p) / (1.0 - v.alpha) + v.b;
  }
  return out;
}

std::pair<StableParams, AffineMap> standardize(const StableParams& p) {
  const StableParams v = validate(p);
  if (!(v.sigma > 0.0)) throw OutOfDomain("sigma", "must be > 0 to standardize");
  const StableParams z{v.alpha, 1.0, v.beta, 0.0};
  double shift = v.delta;
  if (alpha_is_one(v.alpha)) {
    shift += (2.0 / kPi) * v.beta * v.sigma * std::log(v.sigma);
  }
  return {z, AffineMap{v.sigma, shift}};
}

StableParams scale_shift_law(const StableParams& p, double a, double b) {
  const StableParams v = validate(p);
  require_finite(a, "a");
  require_finite(b, "b");
  if (a == 0.0) throw OutOfDomain("a", "must be nonzero");
  StableParams out = v;
  out.sigma = std::abs(a) * v.sigma;
  out.beta = (a < 0.0 ? -v.beta : v.beta);
  out.delta = a * v.delta + b;
  if (alpha_is_one(v.alpha)) {
    out.delta -= (2.0 / kPi) * v.beta * v.sigma * a * std::log(std::abs(a));
  }
  if (v.alpha == 2.0) out.beta = 0.0;
  return out;
}

StableParams sum_law(const StableParams& p0, const StableParams& p1) {
  const StableParams a = validate(p0);
  const StableParams b = validate(p1);
  if (std::abs(a.alpha - b.alpha) > 1e-12)
    throw AlphaMismatch("summands must share the stability index");
  const double sa = std::pow(a.sigma, a.alpha);
  const double sb = std::pow(b.sigma, a.alpha);
  if (sa + sb == 0.0) {
    return {a.alpha, 0.0, 0.0, a.delta + b.delta};
  }
  StableParams out;
  out.alpha = a.alpha;
  out.sigma = std::pow(sa + sb, 1.0 / a.alpha);
  out.beta = (a.beta * sa + b.beta * sb) / (sa + sb);
  out.delta = a.delta + b.delta;
  return out;
}

StableParams marginal_at_time(const StableParams& p, double t) {
  const StableParams v = validate(p);
  require_finite(t, "t");
  if (!(t > 0.0)) throw OutOfDomain("t", "must be > 0");
  return {v.alpha, std::pow(t, 1.0 / v.alpha) * v.sigma, v.beta, t * v.delta};
}

SupportInterval support(const StableParams& p) {
  const StableParams v = validate(p);
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (v.alpha < 1.0 && v.beta == 1.0) {
    return {v.delta - v.sigma * std::tan(0.5 * kPi * v.alpha), inf};
  }
  if (v.alpha < 1.0 && v.beta == -1.0) {
    return {-inf, v.delta + v.sigma * std::tan(0.5 * kPi * v.alpha)};
  }
  return {-inf, inf};
}

bool moment_finite(const StableParams& p, double r) {
  const StableParams v = validate(p);
  require_finite(r, "r");
  if (!(r > 0.0)) throw OutOfDomain("r", "moment order must be > 0");
  if (v.alpha == 2.0) return true;
  return r < v.alpha;
}

}  // namespace levylab
