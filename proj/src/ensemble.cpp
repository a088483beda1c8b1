#include "su11/ensemble.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "su11/errors.hpp"
#include "su11/rng.hpp"

namespace su11 {

namespace {

void require_params(long long l, long long n) {
  if (l < 1) throw DomainError("weight parameter must satisfy l >= 1, got " +
                               std::to_string(l));
  if (n < 1) throw DomainError("degree must satisfy n >= 1, got " +
                               std::to_string(n));
}

}  // namespace

double log_binomial_weight(long long m, long long l) {
  if (m < 0) throw DomainError("weight index must satisfy m >= 0, got " +
                               std::to_string(m));
  if (l < 1) throw DomainError("weight parameter must satisfy l >= 1, got " +
                               std::to_string(l));
  // C(m+l-1, m) == C(m+l-1, l-1); sum logs over the smaller index when it is
  // short, otherwise take the lgamma route (safe once the result is large
  // enough to absorb the cancellation).
  const long long k = (m < l - 1) ? m : l - 1;
  if (k <= 64) {
    const long long other = m + l - 1 - k;
    double acc = 0.0;
    for (long long i = 1; i <= k; ++i)
      acc += std::log(static_cast<double>(other + i) /
                      static_cast<double>(i));
    return acc;
  }
  return std::lgamma(static_cast<double>(m + l)) -
         std::lgamma(static_cast<double>(l)) -
         std::lgamma(static_cast<double>(m + 1));
}

CoefficientPolynomial sample_polynomial(const EnsembleParams& params,
                                        std::uint64_t seed,
                                        std::uint64_t trial) {
  require_params(params.l, params.n);
  TrialRng rng(seed, trial);
  CoefficientPolynomial poly;
  poly.coeff.resize(static_cast<std::size_t>(params.n) + 1);
  double log_weight = 0.0;  // ln C(m+l-1, m), updated iteratively
  for (long long m = 0; m <= params.n; ++m) {
    poly.coeff[static_cast<std::size_t>(m)] =
        std::exp(0.5 * log_weight) * rng.next_complex_gaussian();
    log_weight += std::log(static_cast<double>(m + params.l) /
                           static_cast<double>(m + 1));
  }
  return poly;
}

CoefficientPolynomial sample_w1(long long n, std::uint64_t seed,
                                std::uint64_t trial) {
  require_params(1, n);
  TrialRng rng(seed, trial);
  CoefficientPolynomial poly;
  poly.coeff.resize(static_cast<std::size_t>(n) + 1);
  for (auto& c : poly.coeff) c = rng.next_complex_gaussian();
  return poly;
}

CoefficientPolynomial reversed_polynomial(const CoefficientPolynomial& poly,
                                          const EnsembleParams& params) {
  if (poly.coeff.empty())
    throw DegenerateInput("cannot reverse an empty polynomial");
  const std::size_t n = poly.coeff.size();
  if (n != static_cast<std::size_t>(params.n) + 1)
    throw SizeError("polynomial degree does not match ensemble degree");
  CoefficientPolynomial rev;
  rev.coeff.resize(n);
  const double scale =
      std::exp(-0.5 * log_binomial_weight(params.n, params.l));
  for (std::size_t m = 0; m < n; ++m)
    rev.coeff[m] = poly.coeff[n - 1 - m] * scale;
  return rev;
}

long long truncation_degree(long long l, double r_max, double tail_eps) {
  require_params(l, 1);
  if (!(r_max > 0.0 && r_max < 1.0))
    throw DomainError("truncation radius must lie in (0, 1)");
  if (!(tail_eps > 0.0 && tail_eps < 1.0))
    throw DomainError("tail tolerance must lie in (0, 1)");
  // Covariance at coincident points |z| = r_max: full kernel (1-x)^-l with
  // x = r_max^2.  The term ratio x(m+l)/(m+1) decreases in m, so once it
  // drops below 1 the tail past m is bounded by the next term times a
  // geometric factor; that bound avoids the cancellation a literal
  // full-minus-partial comparison would hit below ~1e-16.
  const double x = r_max * r_max;
  const double full = std::pow(1.0 - x, -static_cast<double>(l));
  const double target = full * tail_eps;
  double term = 1.0;  // C(m+l-1, m) x^m at m = 0
  const long long cap = 100000000;
  for (long long m = 0; m < cap; ++m) {
    const double next =
        term * x * static_cast<double>(m + l) / static_cast<double>(m + 1);
    const double next_ratio =
        x * static_cast<double>(m + 1 + l) / static_cast<double>(m + 2);
    if (next_ratio < 1.0 && next / (1.0 - next_ratio) <= target) return m;
    term = next;
  }
  throw DomainError("truncation degree exceeds internal cap");
}

CoefficientPolynomial sample_analytic_truncated(long long l, double r_max,
                                                double tail_eps,
                                                std::uint64_t seed,
                                                std::uint64_t trial) {
  EnsembleParams params;
  params.l = l;
  params.n = truncation_degree(l, r_max, tail_eps);
  if (params.n < 1) params.n = 1;
  return sample_polynomial(params, seed, trial);
}

std::complex<double> inner_outer_cross_covariance(long long l, long long n,
                                                  std::complex<double> z,
                                                  std::complex<double> zp) {
  require_params(l, n);
  if (!(std::abs(z) > 1.0))
    throw DomainError("outer point must satisfy |z| > 1");
  if (!(std::abs(zp) < 1.0))
    throw DomainError("inner point must satisfy |z'| < 1");
  // sum_m C(l+m-1, m) t^m * z^-n / sqrt(C(n+l-1, n)) with t = z conj(z').
  // Term magnitudes can cross the double exponent range for large n, so
  // accumulate in log-magnitude/phase form around the largest term.
  const std::complex<double> t = z * std::conj(zp);
  const double log_abs_t = std::log(std::abs(t));
  const double arg_t = std::arg(t);
  const double log_abs_z = std::log(std::abs(z));
  const double arg_z = std::arg(z);
  const double half_log_lead = 0.5 * log_binomial_weight(n, l);

  const std::size_t count = static_cast<std::size_t>(n) + 1;
  std::vector<double> log_mag(count);
  double log_weight = 0.0;
  double peak = -std::numeric_limits<double>::infinity();
  for (long long m = 0; m <= n; ++m) {
    const double lm = log_weight + static_cast<double>(m) * log_abs_t -
                      static_cast<double>(n) * log_abs_z - half_log_lead;
    log_mag[static_cast<std::size_t>(m)] = lm;
    if (lm > peak) peak = lm;
    log_weight += std::log(static_cast<double>(m + l) /
                           static_cast<double>(m + 1));
  }
  std::complex<double> acc = 0.0;
  for (long long m = 0; m <= n; ++m) {
    const double theta =
        static_cast<double>(m) * arg_t - static_cast<double>(n) * arg_z;
    acc += std::exp(log_mag[static_cast<std::size_t>(m)] - peak) *
           std::complex<double>(std::cos(theta), std::sin(theta));
  }
  return std::exp(peak) * acc;
}

}  // namespace su11
