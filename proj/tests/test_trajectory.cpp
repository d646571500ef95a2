#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "doctest.h"
#include "levylab/cts.hpp"
#include "levylab/errors.hpp"
#include "levylab/params.hpp"
#include "levylab/rng.hpp"
#include "levylab/stable_sampler.hpp"
#include "levylab/trajectory.hpp"

using levylab::CtsIncrementConfig;
using levylab::CtsTriplet;
using levylab::OutOfDomain;
using levylab::OutOfRange;
using levylab::Path;
using levylab::RejectionBudgetExceeded;
using levylab::RngStream;
using levylab::SamplingGrid;
using levylab::StableLevyTriplet;
using levylab::interpolate;
using levylab::levy_to_stable;
using levylab::sample_bilateral_increment;
using levylab::sample_increment;
using levylab::simulate_cts_path;
using levylab::simulate_stable_path;

namespace {

const StableLevyTriplet kStable{1.5, 1.7, 1.0, 0.3};
const CtsTriplet kCts{0.5, 1.0, 1.0, 0.5, 2.0};

void check_invariants(const Path& path) {
  REQUIRE(path.values.size() == path.grid.n + 1);
  REQUIRE(path.increments.size() == path.grid.n);
  CHECK(path.values[0] == 0.0);
  for (std::size_t k = 0; k < path.grid.n; ++k) {
    const double scale =
        std::max({1.0, std::abs(path.values[k]), std::abs(path.values[k + 1])});
    CHECK(std::abs(path.values[k + 1] - path.values[k] - path.increments[k]) <=
          1e-12 * scale);
  }
}

}  // namespace

TEST_SUITE("trajectory") {

TEST_CASE("stable path: invariants, determinism, thread independence") {
  const SamplingGrid grid{0.05, 200};
  const RngStream rng(9001, 0);
  const Path p1 = simulate_stable_path(kStable, grid, rng, 1);
  check_invariants(p1);

  const Path p2 = simulate_stable_path(kStable, grid, rng, 2);
  const Path p7 = simulate_stable_path(kStable, grid, rng, 7);
  CHECK(p1.values == p2.values);
  CHECK(p1.increments == p2.increments);
  CHECK(p1.values == p7.values);
  CHECK(p1.increments == p7.increments);

  const Path same = simulate_stable_path(kStable, grid, RngStream(9001, 0));
  CHECK(same.values == p1.values);
  const Path other = simulate_stable_path(kStable, grid, RngStream(9001, 1));
  CHECK(other.values != p1.values);
}

TEST_CASE("stable path: increment k comes from sub-stream k") {
  const SamplingGrid grid{0.05, 32};
  const RngStream root(9002, 0);
  const Path path = simulate_stable_path(kStable, grid, root, 3);
  const auto unit = levy_to_stable(kStable);
  for (std::size_t k = 0; k < grid.n; ++k) {
    auto sub = root.derive(k);
    CHECK(path.increments[k] == sample_increment(unit, grid.delta, sub));
  }
}

TEST_CASE("cts path: invariants, thread independence, sub-streams") {
  const SamplingGrid grid{0.1, 60};
  const CtsIncrementConfig cfg{0.1};
  const RngStream root(9003, 0);
  const Path p1 = simulate_cts_path(kCts, grid, cfg, root, 1);
  check_invariants(p1);

  const Path p4 = simulate_cts_path(kCts, grid, cfg, root, 4);
  CHECK(p1.values == p4.values);
  CHECK(p1.increments == p4.increments);

  for (std::size_t k = 0; k < grid.n; ++k) {
    CHECK(p1.increments[k] ==
          sample_bilateral_increment(kCts, cfg, root.derive(k)));
  }
}

TEST_CASE("cts path: the grid owns the time step") {
  // A wildly wrong cfg.delta must not change the trajectory.
  const SamplingGrid grid{0.1, 40};
  const RngStream root(9004, 0);
  CtsIncrementConfig matching{0.1, 1.0};
  CtsIncrementConfig mismatched{999.0, 1.0};
  const Path a = simulate_cts_path(kCts, grid, matching, root, 2);
  const Path b = simulate_cts_path(kCts, grid, mismatched, root, 2);
  CHECK(a.values == b.values);
  CHECK(a.increments == b.increments);
}

TEST_CASE("interpolation: nodes, midpoints, bounds") {
  const SamplingGrid grid{0.5, 4, 10.0};
  const RngStream rng(9005, 0);
  const Path path = simulate_stable_path(kStable, grid, rng);

  // Grid times reproduce the stored values exactly.
  for (std::size_t k = 0; k <= grid.n; ++k) {
    const double t = grid.origin + static_cast<double>(k) * grid.delta;
    CHECK(interpolate(path, t) == path.values[k]);
  }
  // Off-grid times interpolate linearly.
  {
    const double t = 10.75;  // halfway between nodes 1 and 2
    const double lerp = 0.5 * (path.values[1] + path.values[2]);
    const double scale = std::max(1.0, std::abs(lerp));
    CHECK(std::abs(interpolate(path, t) - lerp) <= 1e-12 * scale);
  }
  // Domain is the closed span of the grid.
  CHECK(interpolate(path, 10.0) == 0.0);
  CHECK(interpolate(path, 12.0) == path.values[4]);
  CHECK_THROWS_AS(interpolate(path, 9.999999), OutOfRange);
  CHECK_THROWS_AS(interpolate(path, 12.000001), OutOfRange);
  CHECK_THROWS_AS(interpolate(path, std::numeric_limits<double>::quiet_NaN()),
                  OutOfRange);
}

TEST_CASE("degenerate grids and bad inputs") {
  const RngStream rng(9006, 0);
  // n = 0: a single point at the origin.
  {
    const SamplingGrid grid{1.0, 0, 2.5};
    const Path path = simulate_stable_path(kStable, grid, rng);
    REQUIRE(path.values.size() == 1);
    CHECK(path.values[0] == 0.0);
    CHECK(path.increments.empty());
    CHECK(interpolate(path, 2.5) == 0.0);
    CHECK_THROWS_AS(interpolate(path, 2.6), OutOfRange);
  }
  CHECK_THROWS_AS(simulate_stable_path(kStable, SamplingGrid{0.0, 5}, rng),
                  OutOfDomain);
  CHECK_THROWS_AS(simulate_stable_path(kStable, SamplingGrid{-1.0, 5}, rng),
                  OutOfDomain);
  CHECK_THROWS_AS(
      simulate_stable_path(
          kStable,
          SamplingGrid{1.0, 5, std::numeric_limits<double>::infinity()}, rng),
      OutOfDomain);
  CHECK_THROWS_AS(
      simulate_cts_path(kCts, SamplingGrid{0.0, 5}, CtsIncrementConfig{1.0},
                        rng),
      OutOfDomain);
}

TEST_CASE("worker exceptions surface from threaded runs") {
  // At delta = 5 the tempering acceptance is ~2e-8 per proposal, so a budget
  // of one proposal per draw is exhausted on every increment.
  const SamplingGrid grid{5.0, 8};
  CtsIncrementConfig cfg{5.0};
  cfg.max_rejections = 1;
  const RngStream rng(9007, 0);
  CHECK_THROWS_AS(simulate_cts_path(kCts, grid, cfg, rng, 4),
                  RejectionBudgetExceeded);
}

}  // TEST_SUITE("trajectory")
