#include "levylab/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

#include "levylab/errors.hpp"
#include "levylab/stable_sampler.hpp"

namespace levylab {

namespace {

void check_grid(const SamplingGrid& grid) {
  if (!(grid.delta > 0.0) || !std::isfinite(grid.delta))
    throw OutOfDomain("delta", "grid step must be positive and finite");
  if (!std::isfinite(grid.origin))
    throw OutOfDomain("origin", "grid origin must be finite");
}

// Fill increments[k] for k in [0, n) with draw(k, rng.derive(k)), splitting the
// index range over `threads` workers.  Every increment owns the sub-stream
// keyed by its index, so the result is identical for any thread count.
template <typename Draw>
void fill_increments(std::vector<double>& increments, const RngStream& rng,
                     unsigned threads, Draw&& draw) {
  const std::size_t n = increments.size();
  if (n == 0) return;
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(threads, n));

  auto run_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      RngStream sub = rng.derive(k);
      increments[k] = draw(sub);
    }
  };

  if (workers == 1) {
    run_range(0, n);
    return;
  }

  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    pool.emplace_back([&, w, lo, hi] {
      try {
        run_range(lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

// Cumulative sums with Kahan compensation; values[0] = 0.
std::vector<double> accumulate_path(const std::vector<double>& increments) {
  std::vector<double> values(increments.size() + 1);
  values[0] = 0.0;
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t k = 0; k < increments.size(); ++k) {
    const double y = increments[k] - comp;
    const double next = sum + y;
    comp = (next - sum) - y;
    sum = next;
    values[k + 1] = sum;
  }
  return values;
}

}  // namespace

Path simulate_stable_path(const StableLevyTriplet& t, const SamplingGrid& grid,
                          const RngStream& rng, unsigned threads) {
  check_grid(grid);
  const StableParams unit = levy_to_stable(t);
  Path path{grid, {}, std::vector<double>(grid.n)};
  fill_increments(path.increments, rng, threads, [&](RngStream& sub) {
    return sample_increment(unit, grid.delta, sub);
  });
  path.values = accumulate_path(path.increments);
  return path;
}

Path simulate_cts_path(const CtsTriplet& t, const SamplingGrid& grid,
                       const CtsIncrementConfig& cfg, const RngStream& rng,
                       unsigned threads) {
  check_grid(grid);
  validate(t);
  CtsIncrementConfig step_cfg = cfg;
  step_cfg.delta = grid.delta;  // the grid owns the time step
  Path path{grid, {}, std::vector<double>(grid.n)};
  fill_increments(path.increments, rng, threads, [&](RngStream& sub) {
    return sample_bilateral_increment(t, step_cfg, sub);
  });
  path.values = accumulate_path(path.increments);
  return path;
}

double interpolate(const Path& path, double t) {
  check_grid(path.grid);
  const std::size_t n = path.grid.n;
  if (path.values.size() != n + 1 || path.increments.size() != n)
    throw OutOfDomain("path", "inconsistent value/increment lengths");
  if (!std::isfinite(t)) throw OutOfRange("interpolate: time must be finite");

  const double origin = path.grid.origin;
  const double horizon = origin + static_cast<double>(n) * path.grid.delta;
  if (t < origin || t > horizon)
    throw OutOfRange("interpolate: time outside [origin, origin + n*delta]");

  const double s = (t - origin) / path.grid.delta;
  // Grid times are reproduced exactly (not through the division, which can
  // land one ulp off a whole number).
  const auto near = static_cast<std::size_t>(std::llround(std::max(0.0, s)));
  if (near <= n && origin + static_cast<double>(near) * path.grid.delta == t)
    return path.values[near];

  const auto k = std::min(static_cast<std::size_t>(std::floor(s)), n - 1);
  const double frac = s - static_cast<double>(k);
  return path.values[k] + frac * (path.values[k + 1] - path.values[k]);
}

}  // namespace levylab
