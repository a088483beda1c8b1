#pragma once

#include <atomic>
#include <complex>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "su11/errors.hpp"

namespace su11 {

// Per-trial histogram over [lo, hi) with uniform bins.  record() fills a
// scratch row; commit_trial() folds it into running sums of per-trial
// counts and squared counts.  All sums stay integer-valued, so merges are
// exact in any order and results do not depend on the thread count.
class Histogram {
 public:
  Histogram(double lo, double hi, std::size_t bins);

  void record(double value);  // out-of-range values are dropped
  void commit_trial();
  void merge(const Histogram& other);

  std::size_t bins() const { return sum_.size(); }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double bin_width() const { return (hi_ - lo_) / static_cast<double>(bins()); }
  double bin_lo(std::size_t i) const {
    return lo_ + static_cast<double>(i) * bin_width();
  }
  double bin_center(std::size_t i) const {
    return lo_ + (static_cast<double>(i) + 0.5) * bin_width();
  }
  long long trials() const { return trials_; }
  double count(std::size_t i) const { return sum_[i]; }
  double mean(std::size_t i) const;       // per-trial mean count
  double std_error(std::size_t i) const;  // standard error of that mean

 private:
  double lo_ = 0.0;
  double hi_ = 1.0;
  long long trials_ = 0;
  std::vector<double> scratch_, sum_, sum_sq_;
};

// Single per-trial count with the same exact-merge discipline.
class TrialCounter {
 public:
  void add(double k = 1.0) { scratch_ += k; }
  void commit_trial();
  void merge(const TrialCounter& other);

  long long trials() const { return trials_; }
  double total() const { return sum_; }
  double mean() const;
  double std_error() const;

 private:
  double scratch_ = 0.0, sum_ = 0.0, sum_sq_ = 0.0;
  long long trials_ = 0;
};

// Per-trial counts of values <= t for a fixed increasing threshold grid.
class CumulativeCounts {
 public:
  explicit CumulativeCounts(std::vector<double> thresholds);

  void record(double value);
  void commit_trial();
  void merge(const CumulativeCounts& other);

  const std::vector<double>& thresholds() const { return thresholds_; }
  long long trials() const { return trials_; }
  double mean(std::size_t i) const;
  double std_error(std::size_t i) const;

 private:
  std::vector<double> thresholds_;
  long long trials_ = 0;
  std::vector<double> scratch_first_, sum_, sum_sq_;
};

// Maps a requested thread count to a usable one (0 picks the hardware
// concurrency), clamped to [1, 256].
int resolve_threads(int requested);

// Runs per_trial(acc, t) for every t in [0, trials).  Workers pull
// fixed-size chunks of trial indices and fill private copies of `acc`,
// which must be freshly constructed (nothing committed); the copies are
// merged back at the end.  Exactness of the merge, not the schedule, is
// what makes results thread-count independent.
template <typename Acc, typename Fn>
void run_trials(long long trials, int threads, Acc& acc, Fn&& per_trial) {
  if (trials < 0) throw SizeError("trial count must be nonnegative");
  const int workers = resolve_threads(threads);
  if (workers <= 1 || trials < 2) {
    for (long long t = 0; t < trials; ++t) per_trial(acc, t);
    return;
  }
  constexpr long long kChunk = 16;
  std::atomic<long long> cursor{0};
  std::vector<Acc> partial(static_cast<std::size_t>(workers), acc);
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mu;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      Acc& mine = partial[static_cast<std::size_t>(w)];
      try {
        for (;;) {
          const long long begin = cursor.fetch_add(kChunk);
          if (begin >= trials) break;
          const long long end = std::min(trials, begin + kChunk);
          for (long long t = begin; t < end; ++t) per_trial(mine, t);
        }
      } catch (...) {
        const std::scoped_lock lock(failure_mu);
        if (!failure) failure = std::current_exception();
        cursor.store(trials);  // drain remaining work
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  for (const Acc& p : partial) acc.merge(p);
}

struct SimulationConfig {
  long long l = 1;
  long long n = 80;             // polynomial degree where one applies
  long long trials = 2000;
  std::uint64_t seed = 1;
  int threads = 1;
  double tail_eps = 1e-12;      // truncation budget for analytic sampling
};

// All zeros of every trial, ordered by trial index regardless of threads.
struct ZeroDump {
  std::vector<long long> trial;
  std::vector<std::complex<double>> z;
  std::vector<double> residual;
};

// Histogram of the boundary-scaled coordinate s = n (|z|^2 - 1) over the
// polynomial ensemble, plus the fraction of zeros inside the unit disk.
// p_hat estimates the scaled density: counts / (trials n pi bin_width).
struct DensityEstimate {
  std::vector<double> s;         // bin centers
  std::vector<double> p_theory;  // limiting scaled density at the center
  std::vector<double> p_hat;
  std::vector<double> std_err;
  std::vector<double> count;     // total zeros observed in the bin
  double inside_fraction = 0.0;
  double inside_std_err = 0.0;
  long long trials = 0;
};

DensityEstimate scaled_density_estimate(const SimulationConfig& config,
                                        double s_lo, double s_hi,
                                        std::size_t bins,
                                        ZeroDump* dump = nullptr);

// Empirical distribution of the scaled coordinate on a fixed s grid:
// P_hat(s) = E #(zeros with n (|z|^2 - 1) <= s) / n.
struct DistributionEstimate {
  std::vector<double> s;
  std::vector<double> cap_p_theory;  // limiting distribution P(s)
  std::vector<double> cap_p_hat;
  std::vector<double> std_err;
  long long trials = 0;
};

DistributionEstimate empirical_distribution(const SimulationConfig& config,
                                            std::vector<double> s_grid);

// Areal zero density over annular bins r in [0, r_max] for the analytic
// ensemble (sampled through its truncated series).  rho_theory is the
// exact bin average of l / (pi (1 - |z|^2)^2).
struct RadialDensityEstimate {
  std::vector<double> r;  // bin centers
  std::vector<double> rho_theory;
  std::vector<double> rho_hat;
  std::vector<double> std_err;
  std::vector<double> count;
  long long trials = 0;
};

RadialDensityEstimate radial_density_estimate(const SimulationConfig& config,
                                              double r_max, std::size_t bins);

// Normalized two-point function over bins of the invariant distance
// tau = 2 atanh(|z - w| / |1 - z conj(w)|) between unordered zero pairs in
// the disk |z| <= r_max.  The independent-pair baseline I_b and the
// k2-weighted variant are integrated by a Halton rule; k2_theory is their
// ratio, the correct bin-averaged comparator for k2_hat = pairs/(T I_b).
struct PairCorrelationEstimate {
  std::vector<double> tau;  // bin centers
  std::vector<double> r;    // tanh(tau/2) at the center
  std::vector<double> k2_theory;
  std::vector<double> k2_hat;
  std::vector<double> std_err;
  std::vector<double> pairs;  // total observed pair count
  long long trials = 0;
};

PairCorrelationEstimate pair_correlation_estimate(
    const SimulationConfig& config, double r_max, std::size_t bins,
    std::size_t quadrature_points);

// Sample covariance of two per-trial counts with its plug-in asymptotic
// standard error sqrt((m22_hat - cov^2) / trials).
struct IndependenceReport {
  double inner_mean = 0.0;
  double outer_mean = 0.0;
  double covariance = 0.0;
  double covariance_std_err = 0.0;
  long long trials = 0;
};

// Zeros of the degree-n polynomial ensemble with |z| >= 1/w_max, mapped
// through w = 1/z and correlated inside |w| <= w_max against the l = 1
// limiting intensity 1 / (pi (1 - |w|^2)^2), alongside the independence
// check between per-trial inner (|z| <= w_max) and outer counts.
struct OuterZeroReport {
  PairCorrelationEstimate correlation;
  IndependenceReport independence;
};

OuterZeroReport outer_zero_report(const SimulationConfig& config, double w_max,
                                  std::size_t bins,
                                  std::size_t quadrature_points);

}  // namespace su11
