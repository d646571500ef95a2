#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace levylab {

/// Outcome of a goodness-of-fit check.  The threshold is always derived from
/// the sample size(s), never a hard-coded absolute.
struct GofReport {
  std::string name;
  double statistic;
  std::size_t n;      ///< effective sample size backing the threshold
  double threshold;
  bool pass;
};

/// Default multiplier for KS thresholds: statistic <= mult / sqrt(N)
/// (one-sample) or mult * sqrt((n+m)/(n m)) (two-sample).
inline constexpr double kKsMultiplier = 1.95;

double one_sample_ks_threshold(std::size_t n, double mult = kKsMultiplier);
double two_sample_ks_threshold(std::size_t n, std::size_t m,
                               double mult = kKsMultiplier);

/// One-sample Kolmogorov-Smirnov distance sup_x |F_n(x) - F(x)| against the
/// model CDF, evaluating both one-sided gaps at every sample point.  The
/// sample is copied and sorted internally.  Throws EmptyInput.
double ks_distance(std::vector<double> samples,
                   const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov distance sup_x |F_a(x) - F_b(x)|.
/// Throws EmptyInput when either sample is empty.
double two_sample_ks(std::vector<double> a, std::vector<double> b);

/// Empirical characteristic function at one frequency.
struct CfPoint {
  double u;
  double re, im;        ///< mean cos(u x), mean sin(u x)
  double se_re, se_im;  ///< Monte-Carlo standard errors of the two means
};

/// Empirical CF over a frequency grid.  Throws EmptyInput.
std::vector<CfPoint> empirical_cf(std::span<const double> samples,
                                  std::span<const double> u_grid);

/// Least-squares slope of log(survival) against log(x) over the order
/// statistics between the q_lo and q_hi empirical quantiles (0.5 < q_lo <
/// q_hi < 1).  For a power tail P(X>x) ~ C x^{-alpha} the slope estimates
/// -alpha.  Throws InsufficientTail when fewer than 100 positive order
/// statistics fall in the window; throws EmptyInput / OutOfDomain for bad
/// input.
double tail_slope(std::span<const double> samples, double q_lo = 0.99,
                  double q_hi = 0.9999);

/// Equal-width histogram over [lo, hi); samples outside are dropped but still
/// counted in `total` (bin heights normalize by the full sample size).
struct Histogram {
  std::vector<double> edges;         ///< bins+1 ascending edges
  std::vector<std::size_t> counts;   ///< bins entries
  std::size_t total;                 ///< full sample size including dropped
};

Histogram make_histogram(std::span<const double> samples, double lo, double hi,
                         std::size_t bins);

/// Sup over bins of |empirical bin density - bin-averaged pdf| on the central
/// region between the empirical 2.5% and 97.5% quantiles.  The bin average of
/// the pdf uses adaptive Simpson refinement per bin, so it stays accurate
/// even when heavy tails stretch a bin far beyond the density's peak width.
/// Throws EmptyInput.
double hist_vs_density(std::span<const double> samples,
                       const std::function<double(double)>& pdf,
                       std::size_t bins = 40);

/// Convenience wrappers producing a filled GofReport.
GofReport gof_one_sample(std::string name, std::vector<double> samples,
                         const std::function<double(double)>& cdf,
                         double mult = kKsMultiplier);
GofReport gof_two_sample(std::string name, std::vector<double> a,
                         std::vector<double> b, double mult = kKsMultiplier);

/// CDF tabulated from a density on [lo, hi]: Simpson integration on a uniform
/// grid (points made odd), linear interpolation between nodes, clamped to
/// [0, 1].  `mass_below_lo` anchors the left end when [lo, hi] does not carry
/// all of the mass.
class TabulatedCdf {
 public:
  TabulatedCdf(const std::function<double(double)>& pdf, double lo, double hi,
               std::size_t points = 4001, double mass_below_lo = 0.0);

  double operator()(double x) const;

 private:
  std::vector<double> xs_;
  std::vector<double> cdf_;
};

}  // namespace levylab
