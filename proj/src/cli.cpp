#include "levylab/cli.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "levylab/cts.hpp"
#include "levylab/errors.hpp"
#include "levylab/params.hpp"
#include "levylab/rng.hpp"
#include "levylab/stable_density.hpp"
#include "levylab/stable_sampler.hpp"
#include "levylab/trajectory.hpp"
#include "levylab/validation.hpp"

namespace levylab {

namespace {

/// Default seed for every command; fixed (never wall-clock) so that runs
/// without --seed are reproducible.
constexpr std::uint64_t kDefaultSeed = 12345;

class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 17 significant digits (round-trip safe); integral values gain a ".0"
/// suffix so every cell reads back as a float.
std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s.find_first_not_of("-0123456789") == std::string::npos) s += ".0";
  return s;
}

enum class Format { csv, json };

/// Writes a rectangular table (row-major `flat`, cols.size() columns) as CSV
/// with a header row or as JSON lines with one object per row.
void write_table(const std::string& path, Format format,
                 const std::vector<std::string>& cols,
                 const std::vector<double>& flat) {
  const std::size_t ncols = cols.size();
  std::string out;
  out.reserve(flat.size() * 20 + 64);
  if (format == Format::csv) {
    for (std::size_t j = 0; j < ncols; ++j) {
      if (j) out += ',';
      out += cols[j];
    }
    out += '\n';
    for (std::size_t i = 0; i < flat.size(); i += ncols) {
      for (std::size_t j = 0; j < ncols; ++j) {
        if (j) out += ',';
        out += format_number(flat[i + j]);
      }
      out += '\n';
    }
  } else {
    for (std::size_t i = 0; i < flat.size(); i += ncols) {
      out += '{';
      for (std::size_t j = 0; j < ncols; ++j) {
        if (j) out += ',';
        out += '"';
        out += cols[j];
        out += "\":";
        out += format_number(flat[i + j]);
      }
      out += "}\n";
    }
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoFailure("cannot open " + path + " for writing");
  f << out;
  f.flush();
  if (!f) throw IoFailure("write to " + path + " failed");
}

/// Worker cap: all cores by default, reduced by LEVY_LAB_THREADS when set to
/// a positive integer.  Outputs never depend on this (increments come from
/// per-index sub-streams).
unsigned thread_cap() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LEVY_LAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) {
      n = std::min<unsigned>(n, static_cast<unsigned>(v));
    }
  }
  return n;
}

const char* error_code(const std::exception& e) {
  if (dynamic_cast<const OutOfDomain*>(&e)) return "out_of_domain";
  if (dynamic_cast<const AlphaMismatch*>(&e)) return "alpha_mismatch";
  if (dynamic_cast<const Unsupported*>(&e)) return "unsupported";
  if (dynamic_cast<const EmptyInput*>(&e)) return "empty_input";
  if (dynamic_cast<const OutOfRange*>(&e)) return "out_of_range";
  if (dynamic_cast<const QuadratureFailure*>(&e)) return "quadrature_failure";
  if (dynamic_cast<const RejectionBudgetExceeded*>(&e))
    return "rejection_budget_exceeded";
  if (dynamic_cast<const InsufficientTail*>(&e)) return "insufficient_tail";
  if (dynamic_cast<const IoFailure*>(&e)) return "io";
  return "internal";
}

int fail(int exit_code, const std::exception& e) {
  std::fprintf(stderr, "error: %s: %s\n", error_code(e), e.what());
  return exit_code;
}

struct SampleStableArgs {
  double alpha = 0, sigma = 1, beta = 0, delta = 0;
  std::size_t n = 0;
};

struct CtsArgs {
  double alpha = 0, p = 0, a = 0, q = 0, b = 0;
  double delta = 1, c = 1;
  std::uint64_t max_rejections = CtsIncrementConfig{1.0}.max_rejections;
  std::size_t n = 0;

  CtsTriplet triplet() const { return {alpha, p, a, q, b}; }
  CtsIncrementConfig increment_config() const {
    return {delta, c, max_rejections};
  }
  /// c only matters for alpha in (1,2); there it must be positive.
  void check_c() const {
    if (alpha > 1.0 && !alpha_is_one(alpha) && !(c > 0.0))
      throw OutOfDomain("c", "must be > 0 for alpha in (1,2)");
  }
};

struct TrajectoryArgs {
  std::string process;
  double alpha = 0, p = 0, q = 0, b = 0;  // stable triplet (b = drift)
  double a = 0, b_temper = 0, c = 1;      // CTS extras (b-temper = rate B)
  std::uint64_t max_rejections = CtsIncrementConfig{1.0}.max_rejections;
  double delta = 0;
  std::size_t n = 0;
};

struct DensityArgs {
  std::string dist;
  double alpha = 0, sigma = 1, beta = 0, delta = 0;  // stable law
  double p = 0, a = 0, q = 0, b = 0, time = 1;       // CTS law
  double x_min = 0, x_max = 0;
  std::size_t points = 0;
};

struct ConvertArgs {
  double alpha = 0, p = 0, q = 0, b = 0, time = 1;
};

struct ExploreCArgs {
  double alpha = 0, p = 0, a = 0, delta = 0;
  std::vector<double> c_grid{1.0, 2.0, 5.0, 10.0};
  std::size_t n = 2000;
  std::uint64_t n_mc = 100000;
  std::uint64_t max_rejections = CtsIncrementConfig{1.0}.max_rejections;
};

struct ValidateArgs {
  std::size_t n = 20000;
};

void run_sample_stable(const SampleStableArgs& args, const StableParams& law,
                       std::uint64_t seed, const std::string& out,
                       Format format) {
  RngStream rng(seed, 0);
  std::vector<double> flat;
  flat.reserve(args.n);
  for (std::size_t i = 0; i < args.n; ++i) flat.push_back(sample(law, rng));
  write_table(out, format, {"x"}, flat);
  std::printf("wrote %zu samples to %s\n", args.n, out.c_str());
}

void run_sample_cts(const CtsArgs& args, std::uint64_t seed,
                    const std::string& out, Format format) {
  const CtsTriplet t = args.triplet();
  const CtsIncrementConfig cfg = args.increment_config();
  const RngStream root(seed, 0);
  std::vector<double> flat;
  flat.reserve(args.n);
  for (std::size_t i = 0; i < args.n; ++i) {
    flat.push_back(sample_bilateral_increment(t, cfg, root.derive(i)));
  }
  write_table(out, format, {"x"}, flat);
  std::printf("wrote %zu samples to %s\n", args.n, out.c_str());
}

void run_trajectory(const TrajectoryArgs& args, std::uint64_t seed,
                    const std::string& out, Format format) {
  const SamplingGrid grid{args.delta, args.n, 0.0};
  const RngStream root(seed, 0);
  Path path;
  if (args.process == "stable") {
    path = simulate_stable_path({args.alpha, args.p, args.q, args.b}, grid,
                                root, thread_cap());
  } else {
    path = simulate_cts_path({args.alpha, args.p, args.a, args.q,
                              args.b_temper},
                             grid, {args.delta, args.c, args.max_rejections},
                             root, thread_cap());
  }
  std::vector<double> flat;
  flat.reserve(2 * (args.n + 1));
  for (std::size_t k = 0; k <= args.n; ++k) {
    flat.push_back(static_cast<double>(k) * args.delta);
    flat.push_back(path.values[k]);
  }
  write_table(out, format, {"t", "x"}, flat);
  std::printf("wrote %zu grid points to %s\n", args.n + 1, out.c_str());
}

void run_density(const DensityArgs& args, const std::string& out,
                 Format format) {
  std::vector<double> xs(args.points);
  const double step = (args.x_max - args.x_min) / double(args.points - 1);
  for (std::size_t i = 0; i < args.points; ++i) {
    xs[i] = args.x_min + double(i) * step;
  }
  std::vector<double> fs;
  if (args.dist == "stable") {
    const StableParams law =
        validate(StableParams{args.alpha, args.sigma, args.beta, args.delta});
    fs.reserve(args.points);
    for (double x : xs) fs.push_back(pdf(law, x));
  } else {
    const CtsTriplet t{args.alpha, args.p, args.a, args.q, args.b};
    fs = pdf_fourier_grid(t, args.time, xs,
                          FourierDensityConfig::for_range(args.x_min,
                                                          args.x_max));
  }
  std::vector<double> flat;
  flat.reserve(2 * args.points);
  for (std::size_t i = 0; i < args.points; ++i) {
    flat.push_back(xs[i]);
    flat.push_back(fs[i]);
  }
  write_table(out, format, {"x", "f"}, flat);
  std::printf("wrote %zu density points to %s\n", args.points, out.c_str());
}

void run_convert(const ConvertArgs& args) {
  const StableLevyTriplet t{args.alpha, args.p, args.q, args.b};
  const StableParams law = marginal_at_time(levy_to_stable(t), args.time);
  std::printf("marginal law of X_t at t = %s:\n",
              format_number(args.time).c_str());
  std::printf("  alpha = %s\n", format_number(law.alpha).c_str());
  std::printf("  sigma = %s\n", format_number(law.sigma).c_str());
  std::printf("  beta  = %s\n", format_number(law.beta).c_str());
  std::printf("  delta = %s\n", format_number(law.delta).c_str());
}

void run_explore_c(const ExploreCArgs& args, std::uint64_t seed,
                   const std::string& out, Format format) {
  const CtsTriplet one_sided{args.alpha, args.p, args.a, 0.0, 0.0};
  const RngStream root(seed, 0);
  std::vector<double> flat;
  flat.reserve(3 * args.c_grid.size());
  for (std::size_t i = 0; i < args.c_grid.size(); ++i) {
    const double c = args.c_grid[i];
    RngStream mc_stream = root.derive(2 * i);
    const McRate rate = acceptance_rate_iv_mc(args.alpha, args.p, args.a,
                                              args.delta, c, args.n_mc,
                                              mc_stream);

    RngStream draw_stream = root.derive(2 * i + 1);
    const CtsIncrementConfig cfg{args.delta, c, args.max_rejections};
    std::vector<double> draws;
    draws.reserve(args.n);
    for (std::size_t k = 0; k < args.n; ++k) {
      draws.push_back(
          sample_y_plus(args.alpha, args.p, args.a, cfg, draw_stream));
    }

    const auto [mn, mx] = std::minmax_element(draws.begin(), draws.end());
    const double span = std::max(*mx - *mn, 1e-6);
    const double lo = *mn - 0.05 * span, hi = *mx + 0.05 * span;
    std::vector<double> grid(4001);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      grid[k] = lo + double(k) * (hi - lo) / double(grid.size() - 1);
    }
    const std::vector<double> dens = pdf_fourier_grid(
        one_sided, args.delta, grid, FourierDensityConfig::for_range(lo, hi));
    auto pdf_interp = [&](double x) {
      const double s = (x - lo) / (hi - lo) * double(grid.size() - 1);
      const std::size_t k =
          std::min(static_cast<std::size_t>(std::max(s, 0.0)),
                   grid.size() - 2);
      const double w = s - double(k);
      return dens[k] + w * (dens[k + 1] - dens[k]);
    };
    const TabulatedCdf cdf(pdf_interp, lo, hi, 2001, 0.0);
    const double ks = ks_distance(draws, cdf);

    flat.insert(flat.end(), {c, rate.rate, ks});
  }
  write_table(out, format, {"c", "mc_acceptance_rate", "ks_vs_fourier"}, flat);
  std::printf("wrote %zu rows to %s\n", args.c_grid.size(), out.c_str());
}

int run_validate(const ValidateArgs& args, std::uint64_t seed,
                 const std::string& out) {
  const std::size_t n = args.n;
  const RngStream root(seed, 0);
  std::vector<GofReport> reports;

  {  // direct sampler vs quadrature CDF, symmetric and totally skewed
    const struct {
      double alpha, beta;
    } cases[] = {{1.5, 0.0}, {0.7, 1.0}};
    for (std::size_t i = 0; i < 2; ++i) {
      RngStream s = root.derive(i);
      std::vector<double> draws(n);
      for (auto& d : draws) d = sample_standard(cases[i].alpha, cases[i].beta, s);
      const StableCdf cdf(cases[i].alpha, cases[i].beta, 2001);
      char name[64];
      std::snprintf(name, sizeof name, "stable_sampler_vs_cdf_alpha%g_beta%g",
                    cases[i].alpha, cases[i].beta);
      reports.push_back(gof_one_sample(name, std::move(draws), cdf));
    }
  }
  {  // skewed-pair representation vs direct draw
    RngStream s1 = root.derive(2), s2 = root.derive(3);
    std::vector<double> a(n), b(n);
    for (auto& d : a) d = sample_from_skewed_pair(1.5, -0.5, s1);
    for (auto& d : b) d = sample_standard(1.5, -0.5, s2);
    reports.push_back(gof_two_sample("skewed_pair_vs_direct_alpha1.5_beta-0.5",
                                     std::move(a), std::move(b)));
  }
  {  // finite-variation CTS increment vs its stable-tilting density
    RngStream s = root.derive(4);
    const CtsIncrementConfig cfg{0.1};
    std::vector<double> draws(n);
    for (auto& d : draws) d = sample_y_plus(0.5, 1.0, 1.0, cfg, s);
    auto dens = [](double x) { return pdf_skewed_via_stable(0.5, 1.0, 1.0, 0.1, x); };
    const TabulatedCdf cdf(dens, -0.2, 30.0, 2001, 0.0);
    reports.push_back(
        gof_one_sample("cts_fv_increment_vs_density_alpha0.5", std::move(draws),
                       cdf));
  }
  {  // increment scaling route vs marginal-at-time parameters
    RngStream s1 = root.derive(5), s2 = root.derive(6);
    const StableParams unit = levy_to_stable({1.5, 0.5, 0.5, 0.0});
    const StableParams at_time = marginal_at_time(unit, 0.01);
    std::vector<double> a(n), b(n);
    for (auto& d : a) d = sample_increment(unit, 0.01, s1);
    for (auto& d : b) d = sample(at_time, s2);
    reports.push_back(gof_two_sample("increment_vs_marginal_alpha1.5_dt0.01",
                                     std::move(a), std::move(b)));
  }

  std::string lines;
  bool all_pass = true;
  for (const GofReport& r : reports) {
    lines += "{\"name\":\"" + r.name +
             "\",\"statistic\":" + format_number(r.statistic) +
             ",\"n\":" + std::to_string(r.n) +
             ",\"threshold\":" + format_number(r.threshold) +
             ",\"pass\":" + (r.pass ? "true" : "false") + "}\n";
    all_pass = all_pass && r.pass;
  }
  std::fputs(lines.c_str(), stdout);
  if (!out.empty()) {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw IoFailure("cannot open " + out + " for writing");
    f << lines;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{
      "levylab: sampling, trajectories, and densities for alpha-stable and "
      "classical tempered stable (CTS) laws"};
  app.require_subcommand(1);

  // Per-subcommand copies: a shared variable would be rewritten by the
  // registered defaults of every other subcommand at parse time.
  struct CommonArgs {
    std::uint64_t seed = kDefaultSeed;
    std::string out;
    std::string format_name = "csv";
    Format format() const {
      return format_name == "json" ? Format::json : Format::csv;
    }
  };
  std::array<CommonArgs, 6> common{};
  const auto add_common = [&](CLI::App* cmd, CommonArgs& c,
                              const std::string& default_out) {
    c.out = default_out;
    cmd->add_option("--seed", c.seed, "RNG seed (default " +
                                          std::to_string(kDefaultSeed) + ")");
    cmd->add_option("--out", c.out,
                    "output file (default " + default_out + ")");
    cmd->add_option("--format", c.format_name,
                    "output format: csv or json lines")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  SampleStableArgs ss;
  CLI::App* c_ss = app.add_subcommand(
      "sample-stable", "draw from the stable law S_alpha(sigma, beta, delta)");
  c_ss->add_option("--alpha", ss.alpha, "stability index in (0, 2]")
      ->required();
  c_ss->add_option("--sigma", ss.sigma, "scale, > 0 (default 1)");
  c_ss->add_option("--beta", ss.beta, "skewness in [-1, 1] (default 0)");
  c_ss->add_option("--delta", ss.delta, "location (default 0)");
  c_ss->add_option("--n", ss.n, "number of draws")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common(c_ss, common[0], "sample_stable.csv");

  CtsArgs sc;
  CLI::App* c_sc = app.add_subcommand(
      "sample-cts", "draw bilateral CTS increments over a time step");
  c_sc->add_option("--alpha", sc.alpha, "stability index in (0,1) or (1,2)")
      ->required();
  c_sc->add_option("--p", sc.p, "positive-jump mass P >= 0")->required();
  c_sc->add_option("--a", sc.a, "positive-side tempering rate A >= 0");
  c_sc->add_option("--q", sc.q, "negative-jump mass Q >= 0 (default 0)");
  c_sc->add_option("--b-temper", sc.b, "negative-side tempering rate B >= 0");
  c_sc->add_option("--delta", sc.delta, "time step, > 0 (default 1)")
      ->check(CLI::PositiveNumber);
  c_sc->add_option("--c", sc.c, "truncation constant for alpha in (1,2)");
  c_sc->add_option("--max-rejections", sc.max_rejections,
                   "proposal budget per draw");
  c_sc->add_option("--n", sc.n, "number of draws")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common(c_sc, common[1], "sample_cts.csv");

  TrajectoryArgs tj;
  CLI::App* c_tj = app.add_subcommand(
      "trajectory", "simulate a process skeleton on a uniform grid");
  c_tj->add_option("--process", tj.process, "stable or cts")
      ->required()
      ->check(CLI::IsMember({"stable", "cts"}));
  c_tj->add_option("--alpha", tj.alpha, "stability index")->required();
  c_tj->add_option("--p", tj.p, "positive-jump mass P >= 0")->required();
  c_tj->add_option("--q", tj.q, "negative-jump mass Q >= 0 (default 0)");
  c_tj->add_option("--b", tj.b, "drift (stable process only, default 0)");
  c_tj->add_option("--a", tj.a, "positive tempering rate A (cts only)");
  c_tj->add_option("--b-temper", tj.b_temper,
                   "negative tempering rate B (cts only)");
  c_tj->add_option("--c", tj.c, "truncation constant (cts, alpha in (1,2))");
  c_tj->add_option("--max-rejections", tj.max_rejections,
                   "proposal budget per draw (cts only)");
  c_tj->add_option("--delta", tj.delta, "grid step, > 0")
      ->required()
      ->check(CLI::PositiveNumber);
  c_tj->add_option("--n", tj.n, "number of increments (n+1 grid points)")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common(c_tj, common[2], "trajectory.csv");

  DensityArgs dn;
  CLI::App* c_dn = app.add_subcommand(
      "density", "tabulate a probability density on a uniform x-grid");
  c_dn->add_option("--dist", dn.dist, "stable or cts")
      ->required()
      ->check(CLI::IsMember({"stable", "cts"}));
  c_dn->add_option("--alpha", dn.alpha, "stability index")->required();
  c_dn->add_option("--sigma", dn.sigma, "stable scale (default 1)");
  c_dn->add_option("--beta", dn.beta, "stable skewness (default 0)");
  c_dn->add_option("--delta", dn.delta, "stable location (default 0)");
  c_dn->add_option("--p", dn.p, "CTS positive-jump mass P");
  c_dn->add_option("--a", dn.a, "CTS positive tempering rate A");
  c_dn->add_option("--q", dn.q, "CTS negative-jump mass Q");
  c_dn->add_option("--b-temper", dn.b, "CTS negative tempering rate B");
  c_dn->add_option("--time", dn.time, "CTS horizon t > 0 (default 1)")
      ->check(CLI::PositiveNumber);
  c_dn->add_option("--x-min", dn.x_min, "left end of the x-grid")->required();
  c_dn->add_option("--x-max", dn.x_max, "right end of the x-grid")->required();
  c_dn->add_option("--points", dn.points, "grid size, >= 2")
      ->required()
      ->check(CLI::Range(std::size_t{2}, std::size_t{10000000}));
  add_common(c_dn, common[3], "density.csv");

  ConvertArgs cv;
  CLI::App* c_cv = app.add_subcommand(
      "convert",
      "convert a stable Levy triplet (alpha, P, Q, drift) to the marginal "
      "S_alpha(sigma, beta, delta) at time t");
  c_cv->add_option("--alpha", cv.alpha, "stability index in (0, 2)")
      ->required();
  c_cv->add_option("--p", cv.p, "positive-jump mass P >= 0")->required();
  c_cv->add_option("--q", cv.q, "negative-jump mass Q >= 0")->required();
  c_cv->add_option("--b", cv.b, "drift (default 0)");
  c_cv->add_option("--t", cv.time, "time horizon, > 0 (default 1)")
      ->check(CLI::PositiveNumber);

  ExploreCArgs ec;
  CLI::App* c_ec = app.add_subcommand(
      "explore-c",
      "table of (c, MC acceptance rate, KS vs Fourier CDF) for the "
      "infinite-variation one-sided CTS sampler");
  c_ec->add_option("--alpha", ec.alpha, "stability index in (1, 2)")
      ->required();
  c_ec->add_option("--p", ec.p, "jump mass P > 0")->required();
  c_ec->add_option("--a", ec.a, "tempering rate A > 0")->required();
  c_ec->add_option("--delta", ec.delta, "time step, > 0")
      ->required()
      ->check(CLI::PositiveNumber);
  c_ec->add_option("--c-grid", ec.c_grid,
                   "truncation constants to explore (default 1,2,5,10)")
      ->delimiter(',');
  c_ec->add_option("--n", ec.n, "KS sample size per c (default 2000)")
      ->check(CLI::PositiveNumber);
  c_ec->add_option("--n-mc", ec.n_mc,
                   "proposals for the acceptance-rate estimate (default 1e5)")
      ->check(CLI::Range(std::uint64_t{1000},
                         std::numeric_limits<std::uint64_t>::max()));
  c_ec->add_option("--max-rejections", ec.max_rejections,
                   "proposal budget per draw");
  add_common(c_ec, common[4], "explore_c.csv");

  ValidateArgs vl;
  CLI::App* c_vl = app.add_subcommand(
      "validate", "run the built-in goodness-of-fit suites (JSON lines)");
  c_vl->add_option("--n", vl.n, "sample size per suite (default 20000)")
      ->check(CLI::Range(std::size_t{1000}, std::size_t{100000000}));
  c_vl->add_option("--seed", common[5].seed,
                   "RNG seed (default " + std::to_string(kDefaultSeed) + ")");
  c_vl->add_option("--out", common[5].out,
                   "also write the JSON lines to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::fprintf(stderr, "error: argument: %s\n", e.what());
    return 2;
  }

  // Validation phase: domain checks on the flag values are argument errors.
  StableParams ss_law{};
  try {
    if (c_ss->parsed()) {
      ss_law = validate(StableParams{ss.alpha, ss.sigma, ss.beta, ss.delta});
    }
    if (c_sc->parsed()) {
      validate(sc.triplet());
      sc.check_c();
    }
    if (c_tj->parsed()) {
      if (tj.process == "stable") {
        validate(StableLevyTriplet{tj.alpha, tj.p, tj.q, tj.b});
      } else {
        validate(CtsTriplet{tj.alpha, tj.p, tj.a, tj.q, tj.b_temper});
        CtsArgs probe;
        probe.alpha = tj.alpha;
        probe.c = tj.c;
        probe.check_c();
      }
    }
    if (c_dn->parsed()) {
      if (!(dn.x_max > dn.x_min))
        throw OutOfDomain("x-max", "must exceed x-min");
      if (dn.dist == "stable") {
        standardize(
            validate(StableParams{dn.alpha, dn.sigma, dn.beta, dn.delta}));
      } else {
        validate(CtsTriplet{dn.alpha, dn.p, dn.a, dn.q, dn.b});
      }
    }
    if (c_cv->parsed()) validate(StableLevyTriplet{cv.alpha, cv.p, cv.q, cv.b});
    if (c_ec->parsed()) {
      validate(CtsTriplet{ec.alpha, ec.p, ec.a, 0.0, 0.0});
      if (!(ec.alpha > 1.0) || alpha_is_one(ec.alpha))
        throw OutOfDomain("alpha", "explore-c requires alpha in (1, 2)");
      for (double c : ec.c_grid) {
        if (!(c > 0.0)) throw OutOfDomain("c-grid", "entries must be > 0");
      }
    }
  } catch (const std::exception& e) {
    return fail(2, e);
  }

  // Execution phase: domain/numerical errors map to exit 3.
  try {
    if (c_ss->parsed()) {
      run_sample_stable(ss, ss_law, common[0].seed, common[0].out,
                        common[0].format());
    }
    if (c_sc->parsed()) {
      run_sample_cts(sc, common[1].seed, common[1].out, common[1].format());
    }
    if (c_tj->parsed()) {
      run_trajectory(tj, common[2].seed, common[2].out, common[2].format());
    }
    if (c_dn->parsed()) run_density(dn, common[3].out, common[3].format());
    if (c_cv->parsed()) run_convert(cv);
    if (c_ec->parsed()) {
      run_explore_c(ec, common[4].seed, common[4].out, common[4].format());
    }
    if (c_vl->parsed()) return run_validate(vl, common[5].seed, common[5].out);
  } catch (const std::exception& e) {
    return fail(3, e);
  }
  return 0;
}

}  // namespace levylab
