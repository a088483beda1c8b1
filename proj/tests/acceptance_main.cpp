// Acceptance gate: every closed-form and statistical claim the library is
// built around, checked end to end at fixed seeds.  One line per criterion;
// exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "su11/ensemble.hpp"
#include "su11/kacrice.hpp"
#include "su11/mcstats.hpp"
#include "su11/rng.hpp"
#include "su11/theory.hpp"

namespace {

using namespace su11;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, bool pass, const std::string& detail, double seconds) {
  std::printf("%s criterion %2d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", id,
              detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++failures;
}

template <typename Fn>
void criterion(int id, Fn&& fn) {
  const auto start = Clock::now();
  bool pass = false;
  std::ostringstream detail;
  try {
    pass = fn(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  const double seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  report(id, pass, detail.str(), seconds);
}

std::complex<double> disk_point(TrialRng& rng, double radius) {
  const double r = radius * std::sqrt(rng.next_uniform());
  const double phi = 6.283185307179586 * rng.next_uniform();
  return {r * std::cos(phi), r * std::sin(phi)};
}

// Pairwise separated points keep k_n away from the near-singular regime.
std::vector<std::complex<double>> separated_points(TrialRng& rng,
                                                   std::size_t count,
                                                   double radius) {
  std::vector<std::complex<double>> pts;
  while (pts.size() < count) {
    const std::complex<double> z = disk_point(rng, radius);
    bool ok = true;
    for (const auto& w : pts)
      if (std::abs(z - w) / std::abs(1.0 - z * std::conj(w)) < 0.1) ok = false;
    if (ok) pts.push_back(z);
  }
  return pts;
}

// 1. Fraction of zeros inside the unit disk vs the l/(l+1) limit.
bool inside_fraction(std::ostringstream& detail) {
  const long long weights[] = {4, 1, 30};
  bool pass = true;
  for (long long l : weights) {
    SimulationConfig cfg;
    cfg.l = l;
    cfg.n = 200;
    cfg.trials = 1000;
    cfg.seed = 101;
    const DensityEstimate est = scaled_density_estimate(cfg, -10.0, 10.0, 20);
    const double expected =
        static_cast<double>(l) / static_cast<double>(l + 1);
    const double dev = std::abs(est.inside_fraction - expected);
    const double budget = 3.0 * est.inside_std_err + 0.01;
    if (dev > budget) pass = false;
    detail << "l=" << l << " dev " << dev << " budget " << budget << "; ";
  }
  detail << "inside fraction vs l/(l+1)";
  return pass;
}

// 2. Scaled-density histogram against the limiting p(s).
bool scaled_density_histogram(std::ostringstream& detail) {
  SimulationConfig cfg;
  cfg.l = 4;
  cfg.n = 150;
  cfg.trials = 1000;
  cfg.seed = 7;
  const std::size_t bins = 20;
  const DensityEstimate est = scaled_density_estimate(cfg, -5.0, 5.0, bins);
  const double width = 10.0 / static_cast<double>(bins);
  const double per_unit = static_cast<double>(cfg.trials) *
                          static_cast<double>(cfg.n) *
                          3.141592653589793 * width;
  bool pass = true;
  double worst = 0.0;
  std::size_t checked = 0;
  for (std::size_t i = 0; i < bins; ++i) {
    if (per_unit * est.p_theory[i] < 200.0) continue;
    ++checked;
    const double rel = std::abs(est.p_hat[i] - est.p_theory[i]) /
                       est.p_theory[i];
    worst = std::max(worst, rel);
    if (!(rel < 0.1)) pass = false;
  }
  detail << checked << " bins with >=200 expected counts, worst |p_hat-p|/p "
         << worst << " (limit 0.1)";
  return pass && checked >= 10;
}

// 3. Finite-degree density converges to the scaled limit.
bool finite_degree_convergence(std::ostringstream& detail) {
  const long long l = 4, n = 10000;
  const double dn = static_cast<double>(n);
  bool pass = true;
  double worst = 0.0;
  for (double s : {-2.0, 0.0, 2.0}) {
    const double scaled = finite_n_density(l, n, 1.0 + s / dn) / (dn * dn);
    const double limit = scaled_density(static_cast<int>(l), s);
    const double rel = std::abs(scaled - limit) / limit;
    worst = std::max(worst, rel);
    if (!(rel < 5e-3)) pass = false;
  }
  detail << "worst relative gap " << worst << " at n=10^4 (limit 5e-3)";
  return pass;
}

// 4. Areal zero density of the analytic ensemble inside |z| <= 0.7.
bool areal_density(std::ostringstream& detail) {
  bool pass = true;
  for (long long l : {1LL, 4LL}) {
    SimulationConfig cfg;
    cfg.l = l;
    cfg.trials = 10000;
    cfg.seed = 19;
    const RadialDensityEstimate est = radial_density_estimate(cfg, 0.7, 3);
    double worst = 0.0;
    for (std::size_t i = 0; i < est.r.size(); ++i) {
      const double rel = std::abs(est.rho_hat[i] / est.rho_theory[i] - 1.0);
      worst = std::max(worst, rel);
      if (!(rel < 0.05)) pass = false;
    }
    detail << "l=" << l << " worst |rho_hat/rho - 1| " << worst << "; ";
  }
  detail << "annuli to r=0.7 (limit 0.05)";
  return pass;
}

// 5. Permanent-route two-point correlation equals the closed form.
bool two_point_closed_form(std::ostringstream& detail) {
  bool pass = true;
  double worst = 0.0, worst_l1 = 0.0;
  for (long long l : {1LL, 2LL, 5LL, 50LL}) {
    for (double r : {0.05, 0.1, 0.3, 0.5, 0.7, 0.9}) {
      PointConfig pc;
      pc.l = l;
      pc.z = {{0.0, 0.0}, {r, 0.0}};
      const double via_perm = kn_correlation(pc);
      const double closed = k2_closed_form(l, r);
      worst = std::max(worst, std::abs(via_perm - closed));
      if (!(std::abs(via_perm - closed) <= 1e-9)) pass = false;
      if (l == 1) {
        const double elementary = r * r * (2.0 - r * r);
        worst_l1 = std::max({worst_l1, std::abs(via_perm - elementary),
                             std::abs(closed - elementary)});
        if (!(worst_l1 <= 1e-10)) pass = false;
      }
    }
  }
  detail << "worst |permanent - closed| " << worst
         << " (limit 1e-9), worst l=1 gap to r^2(2-r^2) " << worst_l1
         << " (limit 1e-10)";
  return pass;
}

// 6. Quadratic repulsion constant at small separation.
bool small_r_law(std::ostringstream& detail) {
  bool pass = true;
  double worst = 0.0;
  for (long long l : {1LL, 5LL, 50LL}) {
    const double dl = static_cast<double>(l);
    const double expected = (dl + 1.0) * (dl + 1.0) / (2.0 * dl);
    const double got = k2_closed_form(l, 1e-3) / 1e-6;
    const double rel = std::abs(got - expected) / expected;
    worst = std::max(worst, rel);
    if (!(rel < 1e-4)) pass = false;
  }
  detail << "worst relative deviation of k2/r^2 from (l+1)^2/(2l) " << worst
         << " at r=1e-3 (limit 1e-4)";
  return pass;
}

// 7. Large-weight limit under r = u / sqrt(l).
bool hannay_limit(std::ostringstream& detail) {
  const long long l = 10000;
  const double sqrt_l = 100.0;
  bool pass = true;
  double worst = 0.0;
  for (double u : {0.5, 1.0, 2.0}) {
    const double gap =
        std::abs(k2_closed_form(l, u / sqrt_l) - k2_hannay(u));
    worst = std::max(worst, gap);
    if (!(gap < 1e-3)) pass = false;
  }
  detail << "worst |k2(l, u/sqrt(l)) - hannay(u)| " << worst
         << " at l=10^4 (limit 1e-3)";
  return pass;
}

// 8. k2 is invariant under random disk automorphisms.
bool mobius_invariance(std::ostringstream& detail) {
  PointConfig pc;
  pc.l = 3;
  pc.z = {{0.31, 0.12}, {-0.22, 0.4}};
  TrialRng rng(777, 0);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double t = 1.2 * rng.next_uniform();
    const double phi = 6.283185307179586 * rng.next_uniform();
    const double psi = 6.283185307179586 * rng.next_uniform();
    const std::complex<double> a = std::cosh(t) *
        std::complex<double>(std::cos(phi), std::sin(phi));
    const std::complex<double> b = std::sinh(t) *
        std::complex<double>(std::cos(psi), std::sin(psi));
    worst = std::max(worst, mobius_invariance_check(pc, a, b));
  }
  detail << "max |k2 - k2 after map| over 50 maps " << worst
         << " (limit 1e-8)";
  return worst < 1e-8;
}

// 9. Grassmann route agrees with the permanent route.
bool berezin_permanent(std::ostringstream& detail) {
  TrialRng rng(4242, 0);
  bool pass = true;
  double worst = 0.0;
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = k < 20 ? 2 : 3;
    PointConfig pc;
    pc.l = 1 + static_cast<long long>(rng.next_u64() % 6);
    pc.z = separated_points(rng, n, 0.85);
    const double via_perm = kn_correlation(pc);
    const double via_ber = kn_berezin(pc);
    const double diff = std::abs(via_perm - via_ber);
    worst = std::max(worst, diff);
    if (!(diff <= 1e-9 * std::max(1.0, std::abs(via_perm)))) pass = false;
  }
  detail << "worst |permanent - berezin| " << worst
         << " over 20 pair + 10 triple configs (limit 1e-9)";
  return pass;
}

// 10. Empirical pair correlation of the analytic ensemble.
bool empirical_pair_correlation(std::ostringstream& detail) {
  SimulationConfig cfg;
  cfg.l = 1;
  cfg.trials = 10000;
  cfg.seed = 23;
  const PairCorrelationEstimate est =
      pair_correlation_estimate(cfg, 0.7, 20, std::size_t{1} << 22);

  const double tau_half = 2.0 * std::atanh(0.5);
  std::size_t at_half = 0;
  for (std::size_t i = 1; i < est.tau.size(); ++i)
    if (std::abs(est.tau[i] - tau_half) <
        std::abs(est.tau[at_half] - tau_half))
      at_half = i;
  const double dev = std::abs(est.k2_hat[at_half] - 0.4375);
  bool pass = dev <= 3.0 * est.std_err[at_half];
  detail << "k2_hat(r~0.5) " << est.k2_hat[at_half] << " vs 0.4375 ("
         << dev / est.std_err[at_half] << " sigma); ";

  std::size_t tail_bins = 0;
  double worst_sigma = 0.0;
  for (std::size_t i = 0; i < est.tau.size(); ++i) {
    if (est.tau[i] < 3.0 || est.pairs[i] <= 0.0) continue;
    ++tail_bins;
    const double sigmas = std::abs(est.k2_hat[i] - 1.0) / est.std_err[i];
    worst_sigma = std::max(worst_sigma, sigmas);
    if (sigmas > 3.0) pass = false;
  }
  detail << tail_bins << " bins with tau>=3 within " << worst_sigma
         << " sigma of 1 (limit 3)";
  return pass && tail_bins > 0;
}

// 11. Outer zeros mapped by w = 1/z: l=1 statistics, decoupled from the
// inner zeros, with the cross-covariance bound holding with margin.
bool outer_zero_behavior(std::ostringstream& detail) {
  SimulationConfig cfg;
  cfg.l = 5;
  cfg.n = 300;
  cfg.trials = 5000;
  cfg.seed = 11;
  const OuterZeroReport report =
      outer_zero_report(cfg, 0.6, 16, std::size_t{1} << 22);
  const PairCorrelationEstimate& est = report.correlation;

  bool pass = true;
  for (double target : {0.3, 0.5}) {
    const double tau_t = 2.0 * std::atanh(target);
    std::size_t at = 0;
    for (std::size_t i = 1; i < est.tau.size(); ++i)
      if (std::abs(est.tau[i] - tau_t) < std::abs(est.tau[at] - tau_t))
        at = i;
    const double sigmas =
        std::abs(est.k2_hat[at] - est.k2_theory[at]) / est.std_err[at];
    if (sigmas > 3.0) pass = false;
    detail << "mapped k2 at r~" << target << ": " << sigmas << " sigma; ";
  }

  const IndependenceReport& ind = report.independence;
  const double cov_sigmas =
      std::abs(ind.covariance) / ind.covariance_std_err;
  if (cov_sigmas > 3.0) pass = false;
  detail << "inner/outer covariance " << ind.covariance << " ("
         << cov_sigmas << " sigma); ";

  double min_margin = 1e300;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const std::complex<double> z(1.05 + 0.1 * i, 0.0);
      const std::complex<double> zp(0.05 + 0.1 * j, 0.0);
      const double cross =
          std::abs(inner_outer_cross_covariance(5, 300, z, zp));
      const double bound =
          std::exp(5.0 * std::log(300.0) +
                   300.0 * std::log(std::max(1.0 / std::abs(z),
                                             std::abs(zp))));
      const double margin = cross > 0.0 ? bound / cross : 1e300;
      min_margin = std::min(min_margin, margin);
    }
  }
  if (!(min_margin >= 10.0)) pass = false;
  detail << "decay bound margin >= " << min_margin << " (limit 10)";
  return pass;
}

// 12. Structural properties: positivity, monotonicity, normalization,
// positive definiteness, exact merges, seed determinism.
bool property_bundle(std::ostringstream& detail) {
  bool pass = true;

  for (int j : {0, 1, 2, 3, 4, 6, 10, 20, 40, 64})
    for (double s = -40.0; s <= 40.0; s += 0.5)
      if (!(g_derivative(j, s) > 0.0)) pass = false;
  detail << "g^(j) positive; ";

  double prev = 0.0;
  bool monotone = true, symmetric = true;
  for (double s = -30.0; s <= 30.0; s += 0.25) {
    const double value = distribution_P(1, s);
    if (s > -30.0 && !(value > prev)) monotone = false;
    prev = value;
    if (std::abs(distribution_P(1, s) + distribution_P(1, -s) - 1.0) > 1e-12)
      symmetric = false;
  }
  if (!monotone || !symmetric) pass = false;
  detail << "P monotone and P(s)+P(-s)=1 at l=1; ";

  for (const auto& [l, n] : std::vector<std::pair<long long, long long>>{
           {2, 40}, {4, 100}}) {
    const double integral = finite_n_density_integral(l, n);
    if (std::abs(integral - static_cast<double>(n)) >
        1e-8 * static_cast<double>(n))
      pass = false;
  }
  detail << "plane integral of the degree-n density equals n; ";

  TrialRng rng(99, 0);
  for (int k = 0; k < 20; ++k) {
    PointConfig pc;
    pc.l = 1 + static_cast<long long>(rng.next_u64() % 8);
    pc.z = separated_points(rng, 2 + rng.next_u64() % 5, 0.9);
    if (!check_positive_definite(pc).positive_definite) pass = false;
  }
  detail << "covariance positive definite; ";

  Histogram ha(0.0, 1.0, 8), hb(0.0, 1.0, 8), hc(0.0, 1.0, 8);
  TrialRng hr(5, 1);
  const auto fill = [&hr](Histogram& h, int trials) {
    for (int t = 0; t < trials; ++t) {
      for (int k = 0; k < 3; ++k) h.record(hr.next_uniform());
      h.commit_trial();
    }
  };
  fill(ha, 5);
  fill(hb, 7);
  fill(hc, 9);
  Histogram left = ha, right_inner = hb, right = ha;
  left.merge(hb);
  left.merge(hc);
  right_inner.merge(hc);
  right.merge(right_inner);
  for (std::size_t i = 0; i < left.bins(); ++i) {
    if (left.count(i) != right.count(i)) pass = false;
    if (left.mean(i) != right.mean(i)) pass = false;
    if (left.std_error(i) != right.std_error(i)) pass = false;
  }
  detail << "histogram merge associative; ";

  SimulationConfig cfg;
  cfg.l = 2;
  cfg.n = 40;
  cfg.trials = 64;
  cfg.seed = 99;
  const DensityEstimate serial = scaled_density_estimate(cfg, -8.0, 8.0, 8);
  cfg.threads = 3;
  const DensityEstimate threaded = scaled_density_estimate(cfg, -8.0, 8.0, 8);
  for (std::size_t i = 0; i < serial.p_hat.size(); ++i)
    if (serial.p_hat[i] != threaded.p_hat[i] ||
        serial.count[i] != threaded.count[i])
      pass = false;
  detail << "results independent of thread count";
  return pass;
}

}  // namespace

int main() {
  criterion(1, inside_fraction);
  criterion(2, scaled_density_histogram);
  criterion(3, finite_degree_convergence);
  criterion(4, areal_density);
  criterion(5, two_point_closed_form);
  criterion(6, small_r_law);
  criterion(7, hannay_limit);
  criterion(8, mobius_invariance);
  criterion(9, berezin_permanent);
  criterion(10, empirical_pair_correlation);
  criterion(11, outer_zero_behavior);
  criterion(12, property_bundle);
  if (failures == 0)
    std::printf("all 12 acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures;
}
