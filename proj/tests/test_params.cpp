#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "levylab/errors.hpp"
#include "levylab/params.hpp"
#include "test_util.hpp"

using levylab::AlphaMismatch;
using levylab::OutOfDomain;
using levylab::StableLevyTriplet;
using levylab::StableParams;
using levylab::alpha_is_one;
using levylab::levy_location_constant;
using levylab::levy_to_stable;
using levylab::marginal_at_time;
using levylab::moment_finite;
using levylab::scale_shift_law;
using levylab::standardize;
using levylab::sum_law;
using levylab::support;
using levylab::validate;
using testutil::rel_err;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
// Gamma(-1/2) = -2 sqrt(pi).
constexpr double kGammaMinusHalf = -3.5449077018110321;
}  // namespace

TEST_SUITE("params") {

TEST_CASE("stable-law domain checks") {
  CHECK_THROWS_AS(validate(StableParams{0.0, 1, 0, 0}), OutOfDomain);
  CHECK_THROWS_AS(validate(StableParams{-0.5, 1, 0, 0}), OutOfDomain);
  CHECK_THROWS_AS(validate(StableParams{2.5, 1, 0, 0}), OutOfDomain);
  CHECK_THROWS_AS(validate(StableParams{kNan, 1, 0, 0}), OutOfDomain);
  CHECK_THROWS_AS(validate(StableParams{1.5, -1, 0, 0}), OutOfDomain);
  CHECK_THROWS_AS(validate(StableParams{1.5, kInf, 0, 0}), OutOfDomain);
  CHECK_THROWS_AS(validate(StableParams{1.5, 1, 1.5, 0}), OutOfDomain);
  CHECK_THROWS_AS(validate(StableParams{1.5, 1, -1.01, 0}), OutOfDomain);
  CHECK_THROWS_AS(validate(StableParams{1.5, 1, 0, kInf}), OutOfDomain);

  // Degenerate scale and the full boundary values are admitted.
  CHECK(validate(StableParams{1.5, 0, 1, 3}).sigma == 0.0);
  CHECK(validate(StableParams{2.0, 1, 0, 0}).alpha == 2.0);

  // alpha = 2 canonicalizes the (meaningless) skewness to zero.
  CHECK(validate(StableParams{2.0, 1, 0.7, 0}).beta == 0.0);
  CHECK(validate(StableParams{2.0, 1, -1.0, 0}).beta == 0.0);

  // The field name of the offending parameter is reported.
  try {
    validate(StableParams{1.5, -1, 0, 0});
    CHECK(false);
  } catch (const OutOfDomain& e) {
    CHECK(e.field() == "sigma");
  }
}

TEST_CASE("triplet domain checks") {
  CHECK_THROWS_AS(validate(StableLevyTriplet{2.0, 1, 0, 0}), OutOfDomain);
  CHECK_THROWS_AS(validate(StableLevyTriplet{0.0, 1, 0, 0}), OutOfDomain);
  CHECK_THROWS_AS(validate(StableLevyTriplet{1.5, -0.1, 0, 0}), OutOfDomain);
  CHECK_THROWS_AS(validate(StableLevyTriplet{1.5, 0, -0.1, 0}), OutOfDomain);
  CHECK_THROWS_AS(validate(StableLevyTriplet{1.5, 0, 0, 1}), OutOfDomain);
  CHECK_THROWS_AS(validate(StableLevyTriplet{1.5, 1, 0, kNan}), OutOfDomain);
  CHECK(validate(StableLevyTriplet{1.0, 1, 0, 0}).alpha == 1.0);
}

TEST_CASE("alpha-one band") {
  CHECK(alpha_is_one(1.0));
  CHECK(alpha_is_one(1.0 + 0.5e-9));
  CHECK(alpha_is_one(1.0 - 0.5e-9));
  CHECK_FALSE(alpha_is_one(1.0 + 2e-9));
  CHECK_FALSE(alpha_is_one(1.0 - 2e-9));
  CHECK_FALSE(alpha_is_one(1.5));
}

TEST_CASE("location constant equals 1 - EulerGamma") {
  // int_1^inf sin(r)/r^2 dr + int_0^1 (sin(r)-r)/r^2 dr = 1 - EulerGamma
  // (integrate by parts twice; the cosine-integral terms cancel).
  CHECK(std::abs(levy_location_constant() - 0.42278433509846714) < 1e-11);
}

TEST_CASE("triplet to stable law, generic branch") {
  const StableParams law = levy_to_stable(StableLevyTriplet{1.5, 1.7, 0.3, 0});
  CHECK(law.alpha == 1.5);
  CHECK(rel_err(law.beta, 0.7) < 1e-15);
  CHECK(rel_err(law.delta, 2.8) < 1e-15);  // (Q-P)/(1-alpha) = -1.4/-0.5
  const double radicand =
      2.0 * kGammaMinusHalf * std::cos(0.75 * kPi) / 1.5;  // (P+Q) Gamma(1-a) cos(pi a/2)/a
  CHECK(rel_err(law.sigma, std::pow(radicand, 1.0 / 1.5)) < 1e-14);
  CHECK(rel_err(law.sigma, 2.2353855909596581) < 1e-14);

  // Drift lands in the location parameter.
  const StableParams shifted =
      levy_to_stable(StableLevyTriplet{1.5, 1.7, 0.3, 1.25});
  CHECK(rel_err(shifted.delta, 2.8 + 1.25) < 1e-15);
}

TEST_CASE("triplet to stable law, alpha = 1 branch") {
  const StableParams law = levy_to_stable(StableLevyTriplet{1.0, 2, 0, 0});
  CHECK(rel_err(law.sigma, kPi) < 1e-15);  // (pi/2)(P+Q)
  CHECK(law.beta == 1.0);
  CHECK(rel_err(law.delta, 2.0 * levy_location_constant()) < 1e-14);
}

TEST_CASE("standardize splits a law into standard law plus affine map") {
  {
    const auto [z, map] = standardize(StableParams{1.5, 2, 0.5, -3});
    CHECK(z.alpha == 1.5);
    CHECK(z.sigma == 1.0);
    CHECK(z.beta == 0.5);
    CHECK(z.delta == 0.0);
    CHECK(map.scale == 2.0);
    CHECK(map.shift == -3.0);
    CHECK(map.apply(1.7) == 2.0 * 1.7 - 3.0);
  }
  {
    // alpha = 1 absorbs the (2/pi) beta sigma log sigma location correction.
    const auto [z, map] = standardize(StableParams{1.0, 2, 0.5, -3});
    CHECK(z.sigma == 1.0);
    CHECK(rel_err(map.shift, -3.0 + (2.0 / kPi) * 0.5 * 2.0 * std::log(2.0)) <
          1e-15);
  }
  CHECK_THROWS_AS(standardize(StableParams{1.5, 0, 0.5, 0}), OutOfDomain);
}

TEST_CASE("affine image law") {
  const StableParams p{1.5, 2, 0.5, 1};
  const StableParams q = scale_shift_law(p, -3.0, 4.0);
  CHECK(q.sigma == 6.0);
  CHECK(q.beta == -0.5);
  CHECK(q.delta == -3.0 * 1.0 + 4.0);

  // Round trip.
  const StableParams r = scale_shift_law(q, -1.0 / 3.0, 4.0 / 3.0);
  CHECK(rel_err(r.sigma, p.sigma) < 1e-15);
  CHECK(r.beta == p.beta);
  CHECK(rel_err(r.delta, p.delta) < 1e-14);

  // alpha = 1 log correction.
  const StableParams c1 = scale_shift_law(StableParams{1.0, 2, 0.5, 0}, 2.0, 0.0);
  CHECK(rel_err(c1.delta, -(2.0 / kPi) * 0.5 * 2.0 * 2.0 * std::log(2.0)) <
        1e-15);

  // alpha = 2 keeps beta canonicalized.
  CHECK(scale_shift_law(StableParams{2.0, 1, 0, 0}, -2.0, 0.0).beta == 0.0);

  CHECK_THROWS_AS(scale_shift_law(p, 0.0, 1.0), OutOfDomain);
  CHECK_THROWS_AS(scale_shift_law(p, kNan, 1.0), OutOfDomain);
}

TEST_CASE("sum of independent laws") {
  const StableParams s =
      sum_law(StableParams{1.5, 1, 1, 0}, StableParams{1.5, 1, -1, 2});
  CHECK(rel_err(s.sigma, std::pow(2.0, 1.0 / 1.5)) < 1e-15);
  CHECK(s.beta == 0.0);
  CHECK(s.delta == 2.0);

  // Skewness combines weighted by sigma^alpha.
  const StableParams t =
      sum_law(StableParams{0.5, 4, 1, 0}, StableParams{0.5, 1, 0, 0});
  CHECK(rel_err(t.sigma, std::pow(3.0, 2.0), 1.0) < 1e-14);  // (4^.5+1^.5)^2
  CHECK(rel_err(t.beta, 2.0 / 3.0) < 1e-15);

  CHECK_THROWS_AS(
      sum_law(StableParams{1.5, 1, 0, 0}, StableParams{1.6, 1, 0, 0}),
      AlphaMismatch);
  CHECK_THROWS_AS(
      sum_law(StableParams{1.5, 1, 0, 0}, StableParams{1.5 + 1e-10, 1, 0, 0}),
      AlphaMismatch);
  CHECK_NOTHROW(
      sum_law(StableParams{1.5, 1, 0, 0}, StableParams{1.5 + 1e-13, 1, 0, 0}));
}

TEST_CASE("marginal at time t") {
  const StableParams m = marginal_at_time(StableParams{1.5, 2, 0.5, 3}, 8.0);
  CHECK(rel_err(m.sigma, 8.0) < 1e-15);  // 8^(2/3) * 2
  CHECK(m.beta == 0.5);
  CHECK(m.delta == 24.0);

  // No alpha = 1 log correction in the marginal parameters.
  const StableParams c = marginal_at_time(StableParams{1.0, 2, 0.5, 3}, 4.0);
  CHECK(c.sigma == 8.0);
  CHECK(c.beta == 0.5);
  CHECK(c.delta == 12.0);

  CHECK_THROWS_AS(marginal_at_time(StableParams{1.5, 1, 0, 0}, 0.0),
                  OutOfDomain);
  CHECK_THROWS_AS(marginal_at_time(StableParams{1.5, 1, 0, 0}, -1.0),
                  OutOfDomain);
}

TEST_CASE("support interval") {
  const auto s1 = support(StableParams{0.5, 1, 1, 0});
  CHECK(rel_err(s1.lower, -std::tan(0.25 * kPi)) < 1e-15);
  CHECK(std::isinf(s1.upper));

  const auto s2 = support(StableParams{0.5, 2, -1, 3});
  CHECK(std::isinf(s2.lower));
  CHECK(s2.lower < 0.0);
  CHECK(rel_err(s2.upper, 3.0 + 2.0 * std::tan(0.25 * kPi)) < 1e-15);

  const auto s3 = support(StableParams{1.5, 1, 1, 0});
  CHECK(std::isinf(s3.lower));
  CHECK(std::isinf(s3.upper));

  const auto s4 = support(StableParams{2.0, 1, 0, 0});
  CHECK(std::isinf(s4.lower));
  CHECK(std::isinf(s4.upper));
}

TEST_CASE("moment finiteness") {
  CHECK(moment_finite(StableParams{1.5, 1, 0, 0}, 1.0));
  CHECK(moment_finite(StableParams{1.5, 1, 0, 0}, 1.4999));
  CHECK_FALSE(moment_finite(StableParams{1.5, 1, 0, 0}, 1.5));
  CHECK_FALSE(moment_finite(StableParams{1.5, 1, 0, 0}, 2.0));
  CHECK(moment_finite(StableParams{0.5, 1, 1, 0}, 0.4));
  CHECK_FALSE(moment_finite(StableParams{0.5, 1, 1, 0}, 0.5));
  CHECK(moment_finite(StableParams{2.0, 1, 0, 0}, 7.0));
  CHECK_THROWS_AS(moment_finite(StableParams{1.5, 1, 0, 0}, 0.0), OutOfDomain);
  CHECK_THROWS_AS(moment_finite(StableParams{1.5, 1, 0, 0}, -1.0), OutOfDomain);
}

}  // TEST_SUITE("params")
