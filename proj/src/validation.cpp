#include "levylab/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "levylab/errors.hpp"

namespace levylab {

namespace {

void require_all_finite(std::span<const double> xs, const char* what) {
  for (double x : xs)
    if (!std::isfinite(x)) throw OutOfDomain(what, "observations must be finite");
}

// Linear-interpolation empirical quantile of a sorted sample.
double sorted_quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto k = static_cast<std::size_t>(std::floor(pos));
  if (k + 1 >= sorted.size()) return sorted.back();
  const double frac = pos - static_cast<double>(k);
  return sorted[k] + frac * (sorted[k + 1] - sorted[k]);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double fa, double m, double fm, double b, double fb,
                        double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson(f, a, fa, lm, flm, m, fm, left, 0.5 * tol,
                          depth - 1) +
         adaptive_simpson(f, m, fm, rm, frm, b, fb, right, 0.5 * tol,
                          depth - 1);
}

// Mean of `pdf` over [a, b].  Heavy-tailed samples put nearly the whole
// central region into a few bins, so a bin can be orders of magnitude wider
// than the density's peak; a fixed-node rule cannot average such a bin and
// the estimate must refine adaptively.  The tolerance is on the bin's
// integral, i.e. on probability mass, so 1e-6 is far below any histogram
// comparison threshold.
double bin_mean(const std::function<double(double)>& pdf, double a, double b) {
  const double fa = pdf(a);
  const double m = 0.5 * (a + b);
  const double fm = pdf(m);
  const double fb = pdf(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(pdf, a, fa, m, fm, b, fb, whole, 1e-6, 40) /
         (b - a);
}

}  // namespace

double one_sample_ks_threshold(std::size_t n, double mult) {
  if (n == 0) throw EmptyInput("ks threshold: sample size is zero");
  return mult / std::sqrt(static_cast<double>(n));
}

double two_sample_ks_threshold(std::size_t n, std::size_t m, double mult) {
  if (n == 0 || m == 0) throw EmptyInput("ks threshold: sample size is zero");
  const double dn = static_cast<double>(n);
  const double dm = static_cast<double>(m);
  return mult * std::sqrt((dn + dm) / (dn * dm));
}

double ks_distance(std::vector<double> samples,
                   const std::function<double(double)>& cdf) {
  if (samples.empty()) throw EmptyInput("ks_distance: no samples");
  require_all_finite(samples, "samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    const double hi = static_cast<double>(i + 1) / n - f;  // gap just right of x_i
    const double lo = f - static_cast<double>(i) / n;      // gap just left of x_i
    sup = std::max({sup, hi, lo});
  }
  return sup;
}

double two_sample_ks(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw EmptyInput("two_sample_ks: empty sample");
  require_all_finite(a, "a");
  require_all_finite(b, "b");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double sup = 0.0;
  while (i < a.size() || j < b.size()) {
    double v;
    if (j >= b.size() || (i < a.size() && a[i] <= b[j])) v = a[i];
    else v = b[j];
    while (i < a.size() && a[i] <= v) ++i;
    while (j < b.size() && b[j] <= v) ++j;
    sup = std::max(sup, std::abs(static_cast<double>(i) / na -
                                 static_cast<double>(j) / nb));
  }
  return sup;
}

std::vector<CfPoint> empirical_cf(std::span<const double> samples,
                                  std::span<const double> u_grid) {
  if (samples.empty()) throw EmptyInput("empirical_cf: no samples");
  require_all_finite(samples, "samples");
  const double n = static_cast<double>(samples.size());
  std::vector<CfPoint> out;
  out.reserve(u_grid.size());
  for (double u : u_grid) {
    if (!std::isfinite(u)) throw OutOfDomain("u", "frequency must be finite");
    double sc = 0.0, ss = 0.0, sc2 = 0.0, ss2 = 0.0;
    for (double x : samples) {
      const double c = std::cos(u * x);
      const double s = std::sin(u * x);
      sc += c;
      ss += s;
      sc2 += c * c;
      ss2 += s * s;
    }
    const double mc = sc / n;
    const double ms = ss / n;
    double se_c = 0.0, se_s = 0.0;
    if (samples.size() > 1) {
      const double vc = std::max(0.0, (sc2 - n * mc * mc) / (n - 1.0));
      const double vs = std::max(0.0, (ss2 - n * ms * ms) / (n - 1.0));
      se_c = std::sqrt(vc / n);
      se_s = std::sqrt(vs / n);
    }
    out.push_back({u, mc, ms, se_c, se_s});
  }
  return out;
}

double tail_slope(std::span<const double> samples, double q_lo, double q_hi) {
  if (samples.empty()) throw EmptyInput("tail_slope: no samples");
  require_all_finite(samples, "samples");
  if (!(0.5 < q_lo && q_lo < q_hi && q_hi < 1.0))
    throw OutOfDomain("q_lo", "need 0.5 < q_lo < q_hi < 1");

  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());

  // Midpoint plotting convention: order statistic i (1-based) sits at
  // empirical CDF (i - 0.5)/n, so its survival is 1 - (i - 0.5)/n.
  std::vector<double> log_x;
  std::vector<double> log_s;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    const double rank = (static_cast<double>(i) - 0.5) / n;
    if (rank < q_lo || rank > q_hi) continue;
    const double x = sorted[i - 1];
    if (!(x > 0.0)) continue;
    log_x.push_back(std::log(x));
    log_s.push_back(std::log(1.0 - rank));
  }
  if (log_x.size() < 100)
    throw InsufficientTail("tail_slope: fewer than 100 positive order statistics in window");

  const double m = static_cast<double>(log_x.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t k = 0; k < log_x.size(); ++k) {
    mean_x += log_x[k];
    mean_y += log_s[k];
  }
  mean_x /= m;
  mean_y /= m;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t k = 0; k < log_x.size(); ++k) {
    sxy += (log_x[k] - mean_x) * (log_s[k] - mean_y);
    sxx += (log_x[k] - mean_x) * (log_x[k] - mean_x);
  }
  if (!(sxx > 0.0))
    throw InsufficientTail("tail_slope: degenerate tail window (no spread)");
  return sxy / sxx;
}

Histogram make_histogram(std::span<const double> samples, double lo, double hi,
                         std::size_t bins) {
  if (samples.empty()) throw EmptyInput("make_histogram: no samples");
  require_all_finite(samples, "samples");
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
    throw OutOfDomain("lo", "need finite lo < hi");
  if (bins == 0) throw OutOfDomain("bins", "need at least one bin");

  Histogram h;
  h.edges.resize(bins + 1);
  const double width = hi - lo;
  for (std::size_t k = 0; k <= bins; ++k)
    h.edges[k] = lo + width * static_cast<double>(k) / static_cast<double>(bins);
  h.counts.assign(bins, 0);
  h.total = samples.size();
  for (double x : samples) {
    if (!(x >= lo && x < hi)) continue;
    auto idx = static_cast<std::size_t>((x - lo) / width * static_cast<double>(bins));
    if (idx >= bins) idx = bins - 1;
    ++h.counts[idx];
  }
  return h;
}

double hist_vs_density(std::span<const double> samples,
                       const std::function<double(double)>& pdf,
                       std::size_t bins) {
  if (samples.empty()) throw EmptyInput("hist_vs_density: no samples");
  if (bins < 10) throw OutOfDomain("bins", "need at least 10 bins");
  require_all_finite(samples, "samples");

  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double lo = sorted_quantile(sorted, 0.025);
  const double hi = sorted_quantile(sorted, 0.975);
  if (!(lo < hi))
    throw OutOfDomain("samples", "central region is degenerate");

  const Histogram h = make_histogram(samples, lo, hi, bins);
  const double n = static_cast<double>(h.total);
  double sup = 0.0;
  for (std::size_t k = 0; k < bins; ++k) {
    const double a = h.edges[k];
    const double b = h.edges[k + 1];
    const double width = b - a;
    const double empirical = static_cast<double>(h.counts[k]) / (n * width);
    const double model = bin_mean(pdf, a, b);
    sup = std::max(sup, std::abs(empirical - model));
  }
  return sup;
}

GofReport gof_one_sample(std::string name, std::vector<double> samples,
                         const std::function<double(double)>& cdf, double mult) {
  const std::size_t n = samples.size();
  const double stat = ks_distance(std::move(samples), cdf);
  const double threshold = one_sample_ks_threshold(n, mult);
  return {std::move(name), stat, n, threshold, stat <= threshold};
}

GofReport gof_two_sample(std::string name, std::vector<double> a,
                         std::vector<double> b, double mult) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  const double threshold = two_sample_ks_threshold(n, m, mult);
  const double stat = two_sample_ks(std::move(a), std::move(b));
  const auto n_eff = static_cast<std::size_t>(
      std::llround(static_cast<double>(n) * static_cast<double>(m) /
                   static_cast<double>(n + m)));
  return {std::move(name), stat, n_eff, threshold, stat <= threshold};
}

TabulatedCdf::TabulatedCdf(const std::function<double(double)>& pdf, double lo,
                           double hi, std::size_t points, double mass_below_lo) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
    throw OutOfDomain("lo", "need finite lo < hi");
  if (!(mass_below_lo >= 0.0 && mass_below_lo <= 1.0))
    throw OutOfDomain("mass_below_lo", "must lie in [0, 1]");
  if (points < 3) points = 3;
  if (points % 2 == 0) ++points;

  xs_.resize(points);
  cdf_.resize(points);
  const double width = hi - lo;
  for (std::size_t k = 0; k < points; ++k)
    xs_[k] = lo + width * static_cast<double>(k) / static_cast<double>(points - 1);

  // Midpoint-Simpson per interval gives the cumulative at every node.
  cdf_[0] = mass_below_lo;
  double f_left = pdf(xs_[0]);
  for (std::size_t k = 1; k < points; ++k) {
    const double a = xs_[k - 1];
    const double b = xs_[k];
    const double f_mid = pdf(0.5 * (a + b));
    const double f_right = pdf(b);
    cdf_[k] = cdf_[k - 1] + (b - a) / 6.0 * (f_left + 4.0 * f_mid + f_right);
    f_left = f_right;
  }
}

double TabulatedCdf::operator()(double x) const {
  if (std::isnan(x)) throw OutOfDomain("x", "query must not be NaN");
  if (x <= xs_.front()) return std::clamp(cdf_.front(), 0.0, 1.0);
  if (x >= xs_.back()) return std::clamp(cdf_.back(), 0.0, 1.0);
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const auto k = static_cast<std::size_t>(it - xs_.begin());
  const double frac = (x - xs_[k - 1]) / (xs_[k] - xs_[k - 1]);
  const double v = cdf_[k - 1] + frac * (cdf_[k] - cdf_[k - 1]);
  return std::clamp(v, 0.0, 1.0);
}

}  // namespace levylab
