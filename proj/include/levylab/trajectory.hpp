#pragma once

#include <cstddef>
#include <vector>

#include "levylab/cts.hpp"
#include "levylab/params.hpp"
#include "levylab/rng.hpp"

namespace levylab {

/// Uniform observation grid t_k = origin + k * delta, k = 0..n.
struct SamplingGrid {
  double delta;       ///< step, > 0
  std::size_t n;      ///< number of increments (n+1 grid points)
  double origin = 0.0;
};

/// A simulated trajectory: values[k] = X_{t_k} with values[0] = 0, and
/// increments[k] = values[k+1] - values[k] stored alongside (the cumulative
/// pass uses compensated summation; keeping the raw increments makes that
/// reproducible and interpolation O(1)).
struct Path {
  SamplingGrid grid;
  std::vector<double> values;      ///< n+1 entries
  std::vector<double> increments;  ///< n entries
};

/// Trajectory of the alpha-stable Levy process with the given triplet.  The
/// triplet is converted to its unit-time stable law once; increment k is then
/// drawn from the sub-stream rng.derive(k), so the result is independent of
/// `threads` and identical to the serial evaluation.
Path simulate_stable_path(const StableLevyTriplet& t, const SamplingGrid& grid,
                          const RngStream& rng, unsigned threads = 1);

/// Trajectory of the bilateral CTS process; increment k uses sub-stream
/// rng.derive(k) (each side of the bilateral draw derives again below that).
/// The grid owns the time step: cfg.delta is overridden by grid.delta, so cfg
/// only contributes the truncation c and the proposal budget.
Path simulate_cts_path(const CtsTriplet& t, const SamplingGrid& grid,
                       const CtsIncrementConfig& cfg, const RngStream& rng,
                       unsigned threads = 1);

/// Linear interpolation of the path at time t in [origin, origin + n*delta];
/// grid points return the stored values exactly.  Throws OutOfRange outside.
double interpolate(const Path& path, double t);

}  // namespace levylab
