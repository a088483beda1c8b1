#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace su11 {

// Gaussian random polynomial on the unit disk:
//   psi(z) = sum_{m=0}^{N} sqrt(C(m+L-1, m)) a_m z^m
// with independent standard complex Gaussian a_m.  L >= 1 sets the weight
// family; L = 1 makes all weights equal 1.
struct EnsembleParams {
  long long l = 1;
  long long n = 1;
};

// Coefficients low order first; degree() == coeff.size() - 1.
struct CoefficientPolynomial {
  std::vector<std::complex<double>> coeff;

  std::size_t degree() const { return coeff.empty() ? 0 : coeff.size() - 1; }
};

// ln C(m+l-1, m).  Exact-sum path for small min(m, l-1), lgamma otherwise;
// relative error stays below 1e-12 for m <= 1e4, l <= 1e3.
double log_binomial_weight(long long m, long long l);

// Degree-n weighted sample, one independent stream per (seed, trial).
CoefficientPolynomial sample_polynomial(const EnsembleParams& params,
                                        std::uint64_t seed,
                                        std::uint64_t trial);

// L = 1 sample (all weights 1); identical draws to sample_polynomial with
// l = 1 for the same (seed, trial).
CoefficientPolynomial sample_w1(long long n, std::uint64_t seed,
                                std::uint64_t trial);

// z -> z^degree * psi(1/z), scaled by the inverse square root of the
// leading weight C(n+l-1, n) so the constant coefficient of the result is a
// unit Gaussian.  params must be the ensemble the polynomial was drawn
// from; the weight cannot be recovered from the coefficients alone.
CoefficientPolynomial reversed_polynomial(const CoefficientPolynomial& poly,
                                          const EnsembleParams& params);

// Smallest degree M such that the covariance of the truncated series at
// |z| = r_max is within tail_eps (relatively) of the full kernel.
long long truncation_degree(long long l, double r_max, double tail_eps);

// Degree-M truncation of the full analytic-function ensemble, with M from
// truncation_degree.  Zero statistics inside |z| <= r_max are those of the
// infinite series up to tail_eps.
CoefficientPolynomial sample_analytic_truncated(long long l, double r_max,
                                                double tail_eps,
                                                std::uint64_t seed,
                                                std::uint64_t trial);

// E eta(z) conj(eta(z')) for |z| > 1 >= |z'|, where eta is psi rescaled by
// z^-N / sqrt(C(N+L-1, N)) outside the disk and psi itself inside.  Decays
// like max(1/|z|, |z'|)^N; the inner and mapped outer zero sets decouple at
// this rate.
std::complex<double> inner_outer_cross_covariance(long long l, long long n,
                                                  std::complex<double> z,
                                                  std::complex<double> zp);

}  // namespace su11
