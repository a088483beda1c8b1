#include "su11/mcstats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "su11/ensemble.hpp"
#include "su11/rootfind.hpp"
#include "su11/theory.hpp"

namespace su11 {

namespace {

constexpr double kPi = std::numbers::pi;

double invariant_r(std::complex<double> z, std::complex<double> w) {
  return std::abs(z - w) / std::abs(1.0 - z * std::conj(w));
}

std::vector<std::complex<double>> certified_zeros(
    const CoefficientPolynomial& poly, long long trial,
    std::vector<double>* residuals = nullptr) {
  ZeroSet set = find_roots(poly);
  if (!set.converged)
    throw DegenerateInput("zero certification failed at trial " +
                          std::to_string(trial));
  if (residuals) *residuals = std::move(set.residuals);
  return std::move(set.zeros);
}

// Base-b radical inverse of i; pairs of Halton coordinates act as the
// uniform draws of a deterministic low-discrepancy rule.
double radical_inverse(std::uint64_t i, std::uint64_t base) {
  const double inv = 1.0 / static_cast<double>(base);
  double scale = inv;
  double value = 0.0;
  while (i != 0) {
    value += static_cast<double>(i % base) * scale;
    i /= base;
    scale *= inv;
  }
  return value;
}

std::complex<double> disk_point(double u, double v, double r_max) {
  const double rad = r_max * std::sqrt(u);
  const double ang = 2.0 * kPi * v;
  return {rad * std::cos(ang), rad * std::sin(ang)};
}

double limit_intensity(long long l, std::complex<double> z) {
  const double q = 1.0 - std::norm(z);
  return static_cast<double>(l) / (kPi * q * q);
}

struct PairBaseline {
  std::vector<double> plain;     // I_b, expected independent pairs per trial
  std::vector<double> weighted;  // same integral with the k2(l, r) weight
};

// Halton integration of I_b = 1/2 V^2 mean(rho(z) rho(w) [tau in bin]) with
// V = pi r_max^2 and rho the limiting intensity.  The rule is accepted only
// if its first half reproduces the full estimate on every bin that carries
// at least 1% of the mass.
PairBaseline pair_baseline(long long l, double r_max, double tau_hi,
                           std::size_t bins, std::size_t points) {
  if (points < 1024)
    throw QuadratureError("pair baseline needs at least 1024 points");
  std::vector<double> sum_plain(bins, 0.0), sum_weighted(bins, 0.0);
  std::vector<double> half_plain, half_weighted;
  const std::size_t half = points / 2;
  const double width = tau_hi / static_cast<double>(bins);
  for (std::size_t i = 1; i <= points; ++i) {
    const std::complex<double> z =
        disk_point(radical_inverse(i, 2), radical_inverse(i, 3), r_max);
    const std::complex<double> w =
        disk_point(radical_inverse(i, 5), radical_inverse(i, 7), r_max);
    const double r = invariant_r(z, w);
    const double tau = 2.0 * std::atanh(r);
    const auto idx = static_cast<std::size_t>(tau / width);
    if (idx < bins) {
      const double base = limit_intensity(l, z) * limit_intensity(l, w);
      sum_plain[idx] += base;
      sum_weighted[idx] += base * k2_closed_form(l, r);
    }
    if (i == half) {
      half_plain = sum_plain;
      half_weighted = sum_weighted;
    }
  }
  const auto check = [&](const std::vector<double>& full,
                         const std::vector<double>& part, const char* what) {
    double total = 0.0;
    for (double v : full) total += v;
    for (std::size_t b = 0; b < bins; ++b) {
      if (full[b] < 0.01 * total) continue;
      const double mean_full = full[b] / static_cast<double>(points);
      const double mean_half = part[b] / static_cast<double>(half);
      if (std::abs(mean_half - mean_full) > 0.005 * mean_full)
        throw QuadratureError(std::string("pair baseline (") + what +
                              ") drifts between rule sizes in bin " +
                              std::to_string(b) +
                              "; raise the quadrature point count");
    }
  };
  check(sum_plain, half_plain, "plain");
  check(sum_weighted, half_weighted, "weighted");

  const double volume = kPi * r_max * r_max;
  const double factor = 0.5 * volume * volume / static_cast<double>(points);
  PairBaseline out{std::vector<double>(bins), std::vector<double>(bins)};
  for (std::size_t b = 0; b < bins; ++b) {
    out.plain[b] = factor * sum_plain[b];
    out.weighted[b] = factor * sum_weighted[b];
  }
  return out;
}

// Fills tau/r/k2 columns of a pair estimate from the accumulated pair
// histogram and the baseline integrals.
PairCorrelationEstimate assemble_pairs(const Histogram& hist,
                                       const PairBaseline& baseline) {
  PairCorrelationEstimate out;
  out.trials = hist.trials();
  for (std::size_t b = 0; b < hist.bins(); ++b) {
    const double tau = hist.bin_center(b);
    out.tau.push_back(tau);
    out.r.push_back(std::tanh(0.5 * tau));
    const double ib = baseline.plain[b];
    out.k2_theory.push_back(ib > 0.0 ? baseline.weighted[b] / ib : 0.0);
    out.k2_hat.push_back(ib > 0.0 ? hist.mean(b) / ib : 0.0);
    out.std_err.push_back(ib > 0.0 ? hist.std_error(b) / ib : 0.0);
    out.pairs.push_back(hist.count(b));
  }
  return out;
}

void require_trials(const SimulationConfig& config, long long minimum) {
  if (config.trials < minimum)
    throw SizeError("estimator needs at least " + std::to_string(minimum) +
                    " trials");
}

double pair_tau_limit(double r_max) {
  const double r_pair = 2.0 * r_max / (1.0 + r_max * r_max);
  return 2.0 * std::atanh(r_pair);
}

IndependenceReport independence_from(const std::vector<double>& x,
                                     const std::vector<double>& y) {
  const auto t = static_cast<double>(x.size());
  IndependenceReport report;
  report.trials = static_cast<long long>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= t;
  my /= t;
  double cross = 0.0, m22 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    cross += dx * dy;
    m22 += dx * dx * dy * dy;
  }
  report.inner_mean = mx;
  report.outer_mean = my;
  report.covariance = cross / (t - 1.0);
  m22 /= t;
  report.covariance_std_err =
      std::sqrt(std::max(m22 - report.covariance * report.covariance, 0.0) / t);
  return report;
}

}  // namespace

Histogram::Histogram(double lo, double hi, std::size_t bins)
    : lo_(lo),
      hi_(hi),
      scratch_(bins, 0.0),
      sum_(bins, 0.0),
      sum_sq_(bins, 0.0) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
    throw DomainError("histogram range must be finite with lo < hi");
  if (bins == 0) throw SizeError("histogram needs at least one bin");
}

void Histogram::record(double value) {
  if (!(value >= lo_) || !(value < hi_)) return;
  auto idx = static_cast<std::size_t>((value - lo_) / bin_width());
  if (idx >= bins()) idx = bins() - 1;  // top-edge rounding guard
  scratch_[idx] += 1.0;
}

void Histogram::commit_trial() {
  for (std::size_t i = 0; i < sum_.size(); ++i) {
    sum_[i] += scratch_[i];
    sum_sq_[i] += scratch_[i] * scratch_[i];
    scratch_[i] = 0.0;
  }
  ++trials_;
}

void Histogram::merge(const Histogram& other) {
  if (lo_ != other.lo_ || hi_ != other.hi_ || bins() != other.bins())
    throw SizeError("histogram merge requires identical binning");
  for (std::size_t i = 0; i < sum_.size(); ++i) {
    sum_[i] += other.sum_[i];
    sum_sq_[i] += other.sum_sq_[i];
  }
  trials_ += other.trials_;
}

double Histogram::mean(std::size_t i) const {
  return trials_ > 0 ? sum_[i] / static_cast<double>(trials_) : 0.0;
}

double Histogram::std_error(std::size_t i) const {
  if (trials_ < 2) return 0.0;
  const auto t = static_cast<double>(trials_);
  const double var = (sum_sq_[i] - sum_[i] * sum_[i] / t) / (t - 1.0);
  return std::sqrt(std::max(var, 0.0) / t);
}

void TrialCounter::commit_trial() {
  sum_ += scratch_;
  sum_sq_ += scratch_ * scratch_;
  scratch_ = 0.0;
  ++trials_;
}

void TrialCounter::merge(const TrialCounter& other) {
  sum_ += other.sum_;
  sum_sq_ += other.sum_sq_;
  trials_ += other.trials_;
}

double TrialCounter::mean() const {
  return trials_ > 0 ? sum_ / static_cast<double>(trials_) : 0.0;
}

double TrialCounter::std_error() const {
  if (trials_ < 2) return 0.0;
  const auto t = static_cast<double>(trials_);
  const double var = (sum_sq_ - sum_ * sum_ / t) / (t - 1.0);
  return std::sqrt(std::max(var, 0.0) / t);
}

CumulativeCounts::CumulativeCounts(std::vector<double> thresholds)
    : thresholds_(std::move(thresholds)),
      scratch_first_(thresholds_.size(), 0.0),
      sum_(thresholds_.size(), 0.0),
      sum_sq_(thresholds_.size(), 0.0) {
  if (thresholds_.empty()) throw SizeError("threshold grid is empty");
  for (std::size_t i = 1; i < thresholds_.size(); ++i)
    if (!(thresholds_[i - 1] < thresholds_[i]))
      throw DomainError("threshold grid must be strictly increasing");
}

void CumulativeCounts::record(double value) {
  const auto it =
      std::lower_bound(thresholds_.begin(), thresholds_.end(), value);
  if (it == thresholds_.end()) return;
  scratch_first_[static_cast<std::size_t>(it - thresholds_.begin())] += 1.0;
}

void CumulativeCounts::commit_trial() {
  double running = 0.0;
  for (std::size_t i = 0; i < sum_.size(); ++i) {
    running += scratch_first_[i];
    scratch_first_[i] = 0.0;
    sum_[i] += running;
    sum_sq_[i] += running * running;
  }
  ++trials_;
}

void CumulativeCounts::merge(const CumulativeCounts& other) {
  if (thresholds_ != other.thresholds_)
    throw SizeError("cumulative merge requires an identical grid");
  for (std::size_t i = 0; i < sum_.size(); ++i) {
    sum_[i] += other.sum_[i];
    sum_sq_[i] += other.sum_sq_[i];
  }
  trials_ += other.trials_;
}

double CumulativeCounts::mean(std::size_t i) const {
  return trials_ > 0 ? sum_[i] / static_cast<double>(trials_) : 0.0;
}

double CumulativeCounts::std_error(std::size_t i) const {
  if (trials_ < 2) return 0.0;
  const auto t = static_cast<double>(trials_);
  const double var = (sum_sq_[i] - sum_[i] * sum_[i] / t) / (t - 1.0);
  return std::sqrt(std::max(var, 0.0) / t);
}

int resolve_threads(int requested) {
  if (requested < 0) throw ConfigError("thread count must be >= 0");
  if (requested == 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    requested = hw != 0 ? static_cast<int>(hw) : 1;
  }
  return std::clamp(requested, 1, 256);
}

DensityEstimate scaled_density_estimate(const SimulationConfig& config,
                                        double s_lo, double s_hi,
                                        std::size_t bins, ZeroDump* dump) {
  require_trials(config, 2);
  const EnsembleParams params{config.l, config.n};
  struct Acc {
    Histogram hist;
    TrialCounter inside;
    void merge(const Acc& other) {
      hist.merge(other.hist);
      inside.merge(other.inside);
    }
  };
  Acc acc{Histogram(s_lo, s_hi, bins), TrialCounter{}};
  std::vector<std::vector<std::complex<double>>> slot_z;
  std::vector<std::vector<double>> slot_res;
  if (dump != nullptr) {
    slot_z.resize(static_cast<std::size_t>(config.trials));
    slot_res.resize(static_cast<std::size_t>(config.trials));
  }
  const double scale = static_cast<double>(config.n);
  run_trials(config.trials, config.threads, acc, [&](Acc& a, long long t) {
    const CoefficientPolynomial poly =
        sample_polynomial(params, config.seed, t);
    std::vector<double> residuals;
    const auto zeros =
        certified_zeros(poly, t, dump != nullptr ? &residuals : nullptr);
    for (const auto& z : zeros) {
      a.hist.record(scale * (std::norm(z) - 1.0));
      if (std::abs(z) < 1.0) a.inside.add();
    }
    a.hist.commit_trial();
    a.inside.commit_trial();
    if (dump != nullptr) {
      slot_z[static_cast<std::size_t>(t)] = zeros;
      slot_res[static_cast<std::size_t>(t)] = std::move(residuals);
    }
  });

  DensityEstimate out;
  out.trials = acc.hist.trials();
  const double unit = scale * kPi * acc.hist.bin_width();
  for (std::size_t i = 0; i < bins; ++i) {
    out.s.push_back(acc.hist.bin_center(i));
    out.p_theory.push_back(
        scaled_density(static_cast<int>(config.l), out.s.back()));
    out.p_hat.push_back(acc.hist.mean(i) / unit);
    out.std_err.push_back(acc.hist.std_error(i) / unit);
    out.count.push_back(acc.hist.count(i));
  }
  out.inside_fraction = acc.inside.mean() / scale;
  out.inside_std_err = acc.inside.std_error() / scale;

  if (dump != nullptr) {
    for (std::size_t t = 0; t < slot_z.size(); ++t) {
      for (std::size_t k = 0; k < slot_z[t].size(); ++k) {
        dump->trial.push_back(static_cast<long long>(t));
        dump->z.push_back(slot_z[t][k]);
        dump->residual.push_back(slot_res[t][k]);
      }
    }
  }
  return out;
}

DistributionEstimate empirical_distribution(const SimulationConfig& config,
                                            std::vector<double> s_grid) {
  require_trials(config, 2);
  const EnsembleParams params{config.l, config.n};
  CumulativeCounts acc(std::move(s_grid));
  const double scale = static_cast<double>(config.n);
  run_trials(config.trials, config.threads, acc,
             [&](CumulativeCounts& a, long long t) {
               const CoefficientPolynomial poly =
                   sample_polynomial(params, config.seed, t);
               for (const auto& z : certified_zeros(poly, t))
                 a.record(scale * (std::norm(z) - 1.0));
               a.commit_trial();
             });

  DistributionEstimate out;
  out.trials = acc.trials();
  for (std::size_t i = 0; i < acc.thresholds().size(); ++i) {
    const double s = acc.thresholds()[i];
    out.s.push_back(s);
    out.cap_p_theory.push_back(distribution_P(static_cast<int>(config.l), s));
    out.cap_p_hat.push_back(acc.mean(i) / scale);
    out.std_err.push_back(acc.std_error(i) / scale);
  }
  return out;
}

RadialDensityEstimate radial_density_estimate(const SimulationConfig& config,
                                              double r_max, std::size_t bins) {
  require_trials(config, 2);
  if (!(r_max > 0.0 && r_max < 1.0))
    throw DomainError("r_max must lie in (0, 1)");
  Histogram acc(0.0, r_max, bins);
  run_trials(config.trials, config.threads, acc,
             [&](Histogram& a, long long t) {
               const CoefficientPolynomial poly = sample_analytic_truncated(
                   config.l, r_max, config.tail_eps, config.seed, t);
               for (const auto& z : certified_zeros(poly, t))
                 a.record(std::abs(z));
               a.commit_trial();
             });

  RadialDensityEstimate out;
  out.trials = acc.trials();
  const double l = static_cast<double>(config.l);
  for (std::size_t i = 0; i < bins; ++i) {
    const double r_lo = acc.bin_lo(i);
    const double r_hi = r_lo + acc.bin_width();
    const double x_lo = r_lo * r_lo;
    const double x_hi = r_hi * r_hi;
    const double area = kPi * (x_hi - x_lo);
    // Exact bin integral of the intensity: int rho dA = l [1/(1-x)].
    const double expected = l * (1.0 / (1.0 - x_hi) - 1.0 / (1.0 - x_lo));
    out.r.push_back(acc.bin_center(i));
    out.rho_theory.push_back(expected / area);
    out.rho_hat.push_back(acc.mean(i) / area);
    out.std_err.push_back(acc.std_error(i) / area);
    out.count.push_back(acc.count(i));
  }
  return out;
}

PairCorrelationEstimate pair_correlation_estimate(
    const SimulationConfig& config, double r_max, std::size_t bins,
    std::size_t quadrature_points) {
  require_trials(config, 2);
  if (!(r_max > 0.0 && r_max < 1.0))
    throw DomainError("r_max must lie in (0, 1)");
  const double tau_hi = pair_tau_limit(r_max);
  const PairBaseline baseline =
      pair_baseline(config.l, r_max, tau_hi, bins, quadrature_points);

  Histogram acc(0.0, tau_hi, bins);
  run_trials(config.trials, config.threads, acc,
             [&](Histogram& a, long long t) {
               const CoefficientPolynomial poly = sample_analytic_truncated(
                   config.l, r_max, config.tail_eps, config.seed, t);
               std::vector<std::complex<double>> pts;
               for (const auto& z : certified_zeros(poly, t))
                 if (std::abs(z) <= r_max) pts.push_back(z);
               for (std::size_t p = 0; p < pts.size(); ++p)
                 for (std::size_t q = p + 1; q < pts.size(); ++q)
                   a.record(2.0 * std::atanh(invariant_r(pts[p], pts[q])));
               a.commit_trial();
             });
  return assemble_pairs(acc, baseline);
}

OuterZeroReport outer_zero_report(const SimulationConfig& config, double w_max,
                                  std::size_t bins,
                                  std::size_t quadrature_points) {
  require_trials(config, 2);
  if (!(w_max > 0.0 && w_max < 1.0))
    throw DomainError("w_max must lie in (0, 1)");
  const double tau_hi = pair_tau_limit(w_max);
  // Mapped outer zeros are compared against the l = 1 ensemble.
  const PairBaseline baseline =
      pair_baseline(1, w_max, tau_hi, bins, quadrature_points);

  const EnsembleParams params{config.l, config.n};
  const double cut = 1.0 / w_max;
  std::vector<double> inner(static_cast<std::size_t>(config.trials), 0.0);
  std::vector<double> outer(static_cast<std::size_t>(config.trials), 0.0);
  Histogram acc(0.0, tau_hi, bins);
  run_trials(config.trials, config.threads, acc,
             [&](Histogram& a, long long t) {
               const CoefficientPolynomial poly =
                   sample_polynomial(params, config.seed, t);
               std::vector<std::complex<double>> mapped;
               double inner_count = 0.0;
               for (const auto& z : certified_zeros(poly, t)) {
                 const double az = std::abs(z);
                 if (az <= w_max) inner_count += 1.0;
                 if (az >= cut) mapped.push_back(1.0 / z);
               }
               for (std::size_t p = 0; p < mapped.size(); ++p)
                 for (std::size_t q = p + 1; q < mapped.size(); ++q)
                   a.record(2.0 *
                            std::atanh(invariant_r(mapped[p], mapped[q])));
               a.commit_trial();
               inner[static_cast<std::size_t>(t)] = inner_count;
               outer[static_cast<std::size_t>(t)] =
                   static_cast<double>(mapped.size());
             });

  OuterZeroReport report;
  report.correlation = assemble_pairs(acc, baseline);
  report.independence = independence_from(inner, outer);
  return report;
}

}  // namespace su11
