#include "su11/runner.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "su11/errors.hpp"
#include "su11/kacrice.hpp"
#include "su11/mcstats.hpp"
#include "su11/svg.hpp"
#include "su11/table.hpp"
#include "su11/theory.hpp"

namespace su11 {

namespace {

std::vector<double> linspace(double lo, double hi, std::size_t points) {
  if (points < 2) throw ConfigError("grid needs at least two points");
  if (!(lo < hi)) throw ConfigError("grid needs lo < hi");
  std::vector<double> grid(points);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i)
    grid[i] = lo + step * static_cast<double>(i);
  grid.back() = hi;
  return grid;
}

std::string svg_path_for(const std::string& output) {
  const std::size_t slash = output.find_last_of('/');
  const std::size_t dot = output.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return output + ".svg";
  return output.substr(0, dot) + ".svg";
}

void require_output(const RunConfig& config) {
  if (config.output.empty())
    throw ConfigError(config.command + " requires --output");
}

SimulationConfig simulation_part(const RunConfig& config) {
  SimulationConfig sim;
  sim.l = config.l;
  sim.n = config.n;
  sim.trials = config.trials;
  sim.seed = config.seed;
  sim.threads = config.threads;
  sim.tail_eps = config.tail_eps;
  return sim;
}

void maybe_plot(const RunConfig& config, const std::string& title,
                const std::string& x_label, const std::string& y_label,
                const std::vector<PlotSeries>& series, std::ostream& out) {
  if (config.format == "csv") return;
  if (config.format != "svg")
    throw ConfigError("unknown format '" + config.format + "'");
  const std::string path = svg_path_for(config.output);
  write_svg_plot(path, title, x_label, y_label, series);
  out << "wrote " << path << '\n';
}

std::string ensemble_tag(const RunConfig& config, bool with_degree) {
  std::string tag = "l=" + std::to_string(config.l);
  if (with_degree) tag += " n=" + std::to_string(config.n);
  return tag;
}

int run_density(const RunConfig& config, std::ostream& out) {
  require_output(config);
  const SimulationConfig sim = simulation_part(config);
  ZeroDump dump;
  const bool want_dump = !config.dump_zeros.empty();
  const DensityEstimate est = scaled_density_estimate(
      sim, config.s_lo, config.s_hi, config.bins, want_dump ? &dump : nullptr);

  Table table;
  table.add_column("s", est.s);
  table.add_column("p_theory", est.p_theory);
  table.add_column("p_hat", est.p_hat);
  table.add_column("std_err", est.std_err);
  table.add_column("count", est.count);
  write_csv_file(config.output, table);
  out << "wrote " << config.output << '\n';

  if (want_dump) {
    std::vector<double> re, im;
    re.reserve(dump.z.size());
    im.reserve(dump.z.size());
    for (const auto& z : dump.z) {
      re.push_back(z.real());
      im.push_back(z.imag());
    }
    Table zeros;
    zeros.add_column("trial",
                     std::vector<double>(dump.trial.begin(),
                                         dump.trial.end()));
    zeros.add_column("re", std::move(re));
    zeros.add_column("im", std::move(im));
    zeros.add_column("residual", dump.residual);
    write_csv_file(config.dump_zeros, zeros);
    out << "wrote " << config.dump_zeros << " (" << dump.z.size()
        << " zeros)\n";
  }

  const double limit =
      static_cast<double>(config.l) / static_cast<double>(config.l + 1);
  out << "inside fraction " << format_double(est.inside_fraction)
      << " (std err " << format_double(est.inside_std_err) << "), limit "
      << format_double(limit) << '\n';

  maybe_plot(config, "scaled zero density (" + ensemble_tag(config, true) + ")",
             "s = n (|z|^2 - 1)", "p(s)",
             {PlotSeries{"limit", est.s, est.p_theory, {}, true, "#d62728"},
              PlotSeries{"simulation", est.s, est.p_hat, est.std_err, false,
                         "#1f77b4"}},
             out);
  return 0;
}

int run_distribution(const RunConfig& config, std::ostream& out) {
  require_output(config);
  const SimulationConfig sim = simulation_part(config);
  const DistributionEstimate est = empirical_distribution(
      sim, linspace(config.s_lo, config.s_hi, config.points));

  Table table;
  table.add_column("s", est.s);
  table.add_column("P_theory", est.cap_p_theory);
  table.add_column("P_hat", est.cap_p_hat);
  table.add_column("std_err", est.std_err);
  write_csv_file(config.output, table);
  out << "wrote " << config.output << '\n';

  maybe_plot(
      config,
      "scaled zero distribution (" + ensemble_tag(config, true) + ")", "s",
      "P(s)",
      {PlotSeries{"limit", est.s, est.cap_p_theory, {}, true, "#d62728"},
       PlotSeries{"simulation", est.s, est.cap_p_hat, est.std_err, false,
                  "#1f77b4"}},
      out);
  return 0;
}

int run_correlation(const RunConfig& config, std::ostream& out) {
  require_output(config);
  const SimulationConfig sim = simulation_part(config);
  const PairCorrelationEstimate est = pair_correlation_estimate(
      sim, config.r_max, config.bins, config.quadrature_points);

  Table table;
  table.add_column("tau", est.tau);
  table.add_column("r", est.r);
  table.add_column("k2_theory", est.k2_theory);
  table.add_column("k2_hat", est.k2_hat);
  table.add_column("std_err", est.std_err);
  table.add_column("pairs", est.pairs);
  write_csv_file(config.output, table);
  out << "wrote " << config.output << '\n';

  double total_pairs = 0.0;
  for (double p : est.pairs) total_pairs += p;
  out << "observed pairs " << format_double(total_pairs) << " over "
      << est.trials << " trials\n";

  maybe_plot(config,
             "zero pair correlation (" + ensemble_tag(config, false) + ")",
             "tau", "k2",
             {PlotSeries{"theory", est.tau, est.k2_theory, {}, true,
                         "#d62728"},
              PlotSeries{"simulation", est.tau, est.k2_hat, est.std_err,
                         false, "#1f77b4"}},
             out);
  return 0;
}

int run_outer(const RunConfig& config, std::ostream& out) {
  require_output(config);
  const SimulationConfig sim = simulation_part(config);
  const OuterZeroReport report = outer_zero_report(
      sim, config.w_max, config.bins, config.quadrature_points);
  const PairCorrelationEstimate& est = report.correlation;

  Table table;
  table.add_column("tau", est.tau);
  table.add_column("r", est.r);
  table.add_column("k2_theory", est.k2_theory);
  table.add_column("k2_hat", est.k2_hat);
  table.add_column("std_err", est.std_err);
  table.add_column("pairs", est.pairs);
  write_csv_file(config.output, table);
  out << "wrote " << config.output << '\n';

  const IndependenceReport& ind = report.independence;
  out << "inner mean " << format_double(ind.inner_mean) << ", outer mean "
      << format_double(ind.outer_mean) << '\n';
  out << "inner/outer covariance " << format_double(ind.covariance)
      << " (std err " << format_double(ind.covariance_std_err) << ")\n";

  maybe_plot(config,
             "outer zero pair correlation mapped by w = 1/z (" +
                 ensemble_tag(config, true) + ")",
             "tau", "k2",
             {PlotSeries{"l=1 theory", est.tau, est.k2_theory, {}, true,
                         "#d62728"},
              PlotSeries{"simulation", est.tau, est.k2_hat, est.std_err,
                         false, "#1f77b4"}},
             out);
  return 0;
}

int run_theory_table(const RunConfig& config, std::ostream& out) {
  require_output(config);
  Table table;
  std::vector<PlotSeries> series;
  std::string title, x_label, y_label;

  if (config.kind == "density") {
    const std::vector<double> s = linspace(config.s_lo, config.s_hi,
                                           config.points);
    std::vector<double> cap_p(s.size()), p(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      cap_p[i] = distribution_P(static_cast<int>(config.l), s[i]);
      p[i] = scaled_density(static_cast<int>(config.l), s[i]);
    }
    table.add_column("s", s);
    table.add_column("P", cap_p);
    table.add_column("p", p);
    title = "limiting scaled distribution and density (" +
            ensemble_tag(config, false) + ")";
    x_label = "s";
    y_label = "P, pi p";
    series = {PlotSeries{"P(s)", s, cap_p, {}, true, "#d62728"},
              PlotSeries{"p(s)", s, p, {}, true, "#1f77b4"}};
  } else if (config.kind == "correlation") {
    if (!(config.r_max > 0.0 && config.r_max < 1.0))
      throw ConfigError("r_max must lie in (0, 1)");
    std::vector<double> r(config.points), tau(config.points),
        k2(config.points);
    for (std::size_t i = 0; i < config.points; ++i) {
      r[i] = config.r_max * static_cast<double>(i + 1) /
             static_cast<double>(config.points);
      tau[i] = 2.0 * std::atanh(r[i]);
      k2[i] = k2_closed_form(config.l, r[i]);
    }
    table.add_column("r", r);
    table.add_column("tau", tau);
    table.add_column("k2", k2);
    title = "two-point correlation (" + ensemble_tag(config, false) + ")";
    x_label = "r";
    y_label = "k2";
    series = {PlotSeries{"k2(r)", r, k2, {}, true, "#1f77b4"}};
  } else if (config.kind == "finite-n") {
    if (!(config.s_lo > -static_cast<double>(config.n)))
      throw ConfigError("finite-n table needs s_lo > -n so that x > 0");
    const std::vector<double> s = linspace(config.s_lo, config.s_hi,
                                           config.points);
    const double dn = static_cast<double>(config.n);
    std::vector<double> x(s.size()), scaled(s.size()), limit(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      x[i] = 1.0 + s[i] / dn;
      scaled[i] = finite_n_density(config.l, config.n, x[i]) / (dn * dn);
      limit[i] = scaled_density(static_cast<int>(config.l), s[i]);
    }
    table.add_column("s", s);
    table.add_column("x", x);
    table.add_column("p_scaled_n", scaled);
    table.add_column("p_limit", limit);
    title = "finite-degree density against its limit (" +
            ensemble_tag(config, true) + ")";
    x_label = "s";
    y_label = "p";
    series = {PlotSeries{"degree n", s, scaled, {}, true, "#1f77b4"},
              PlotSeries{"limit", s, limit, {}, true, "#d62728"}};
  } else {
    throw ConfigError("unknown theory table kind '" + config.kind + "'");
  }

  write_csv_file(config.output, table);
  out << "wrote " << config.output << '\n';
  maybe_plot(config, title, x_label, y_label, series, out);
  return 0;
}

int run_kacrice_eval(const RunConfig& config, std::ostream& out) {
  if (config.at.empty())
    throw ConfigError("kacrice-eval requires at least one --at point");
  PointConfig points;
  points.l = config.l;
  points.z = config.at;

  out << "kacrice-eval: l=" << config.l << " points=" << points.z.size()
      << '\n';
  for (std::size_t i = 0; i < points.z.size(); ++i) {
    out << "z[" << i << "] = " << format_double(points.z[i].real()) << (
               points.z[i].imag() < 0.0 ? "-" : "+")
        << format_double(std::abs(points.z[i].imag())) << "i  k1 = "
        << format_double(k1_density(config.l, points.z[i])) << '\n';
  }
  const double via_permanent = kn_correlation(points);
  const double via_berezin = kn_berezin(points);
  out << "kn_permanent = " << format_double(via_permanent) << '\n';
  out << "kn_berezin = " << format_double(via_berezin) << '\n';
  out << "difference = " << format_double(std::abs(via_permanent -
                                                   via_berezin))
      << '\n';

  if (!config.output.empty()) {
    Table table;
    table.add_column("points",
                     {static_cast<double>(points.z.size())});
    table.add_column("kn_permanent", {via_permanent});
    table.add_column("kn_berezin", {via_berezin});
    table.add_column("abs_diff", {std::abs(via_permanent - via_berezin)});
    write_csv_file(config.output, table);
    out << "wrote " << config.output << '\n';
  }
  return 0;
}

int run_compare(const RunConfig& config, std::ostream& out) {
  if (config.compare_a.empty() || config.compare_b.empty())
    throw ConfigError("compare requires two csv paths");
  const Table a = read_csv_file(config.compare_a);
  const Table b = read_csv_file(config.compare_b);
  if (a.header != b.header) {
    out << "headers differ\n";
    return 1;
  }
  if (a.rows() != b.rows()) {
    out << "row counts differ: " << a.rows() << " vs " << b.rows() << '\n';
    return 1;
  }
  bool ok = true;
  for (std::size_t c = 0; c < a.columns.size(); ++c) {
    double worst = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      const double va = a.columns[c][r];
      const double vb = b.columns[c][r];
      if (std::isnan(va) && std::isnan(vb)) continue;
      const double diff = std::abs(va - vb);
      if (std::isnan(diff))
        worst = std::numeric_limits<double>::infinity();
      else
        worst = std::max(worst, diff);
    }
    out << "column " << a.header[c] << ": max |diff| = "
        << format_double(worst) << '\n';
    if (!(worst <= config.tolerance)) ok = false;
  }
  out << (ok ? "MATCH" : "MISMATCH") << " (tolerance "
      << format_double(config.tolerance) << ")\n";
  return ok ? 0 : 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out) {
  if (config.command == "simulate-density") return run_density(config, out);
  if (config.command == "simulate-distribution")
    return run_distribution(config, out);
  if (config.command == "simulate-correlation")
    return run_correlation(config, out);
  if (config.command == "simulate-outer") return run_outer(config, out);
  if (config.command == "theory-table") return run_theory_table(config, out);
  if (config.command == "kacrice-eval") return run_kacrice_eval(config, out);
  if (config.command == "compare") return run_compare(config, out);
  throw ConfigError("unknown command '" + config.command + "'");
}

}  // namespace su11
