#include "levylab/stable_sampler.hpp"

#include <cmath>
#include <numbers>

#include "levylab/errors.hpp"

namespace levylab {

namespace {

constexpr double kPi = std::numbers::pi;

void check_alpha_beta(double alpha, double beta, bool allow_two) {
  const bool ok = alpha > 0.0 && (allow_two ? alpha <= 2.0 : alpha < 2.0);
  if (!ok)
    throw OutOfDomain("alpha",
                      allow_two ? "must lie in (0, 2]" : "must lie in (0, 2)");
  if (!(beta >= -1.0 && beta <= 1.0))
    throw OutOfDomain("beta", "must lie in [-1, 1]");
}

}  // namespace

double cms_transform(double alpha, double beta, double u, double v) {
  check_alpha_beta(alpha, beta, true);
  if (!(u > -0.5 * kPi && u < 0.5 * kPi))
    throw OutOfDomain("u", "angle must lie in (-pi/2, pi/2)");
  if (!(v > 0.0)) throw OutOfDomain("v", "exponential draw must be > 0");

  if (alpha_is_one(alpha)) {
    const double w = 0.5 * kPi + beta * u;
    return (2.0 / kPi) *
           (w * std::tan(u) -
            beta * std::log(0.5 * kPi * v * std::cos(u) / w));
  }
  const double a_th = std::atan(beta * std::tan(0.5 * kPi * alpha));
  // cos(a_th + (alpha-1) u) >= 0 throughout the domain; clamp the rounding
  // spill at the boundary so pow never sees a negative base.
  const double c2 = std::max(std::cos(a_th + (alpha - 1.0) * u), 0.0);
  return std::sin(a_th + alpha * u) /
         std::pow(std::cos(a_th) * std::cos(u), 1.0 / alpha) *
         std::pow(c2 / v, (1.0 - alpha) / alpha);
}

double sample_standard(double alpha, double beta, RngStream& rng) {
  check_alpha_beta(alpha, beta, true);
  if (alpha == 2.0) return std::numbers::sqrt2 * rng.next_gaussian();
  const double u = rng.next_angle();
  const double v = rng.next_exponential();
  return cms_transform(alpha, beta, u, v);
}

double sample(const StableParams& p, RngStream& rng) {
  const StableParams v = validate(p);
  const double z = sample_standard(v.alpha, v.beta, rng);
  if (v.sigma == 0.0) return v.delta;  // point mass; draw consumed regardless
  double x = v.delta + v.sigma * z;
  if (alpha_is_one(v.alpha))
    x += (2.0 / kPi) * v.beta * v.sigma * std::log(v.sigma);
  return x;
}

double sample_from_skewed_pair(double alpha, double beta, RngStream& rng) {
  check_alpha_beta(alpha, beta, false);
  const double y1 = sample_standard(alpha, 1.0, rng);
  const double y2 = sample_standard(alpha, 1.0, rng);
  const double wp = 0.5 * (1.0 + beta);
  const double wm = 0.5 * (1.0 - beta);
  if (alpha_is_one(alpha)) {
    auto xlx = [](double a) { return a == 0.0 ? 0.0 : a * std::log(0.5 * a); };
    return wp * y1 - wm * y2 +
           (xlx(1.0 + beta) - xlx(1.0 - beta)) / kPi;
  }
  return std::pow(wp, 1.0 / alpha) * y1 - std::pow(wm, 1.0 / alpha) * y2;
}

double sample_increment(const StableParams& unit, double delta,
                        RngStream& rng) {
  const StableParams v = validate(unit);
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw OutOfDomain("delta", "time step must be finite and > 0");
  const double y = sample(v, rng);
  if (alpha_is_one(v.alpha))
    return delta * y +
           (2.0 / kPi) * v.beta * v.sigma * delta * std::log(delta);
  const double r = std::pow(delta, 1.0 / v.alpha);
  return r * y + (delta - r) * v.delta;
}

double sample_increment(const StableLevyTriplet& t, double delta,
                        RngStream& rng) {
  return sample_increment(levy_to_stable(t), delta, rng);
}

}  // namespace levylab
