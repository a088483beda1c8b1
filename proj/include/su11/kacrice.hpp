#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace su11 {

// Evaluation points for an n-point zero correlation, all strictly inside
// the unit disk and pairwise distinct.
struct PointConfig {
  long long l = 1;
  std::vector<std::complex<double>> z;

  std::size_t size() const { return z.size(); }
};

// Gaussian covariance blocks of (psi(z_p), psi'(z_p)) for the analytic
// ensemble, entries indexed (row p, column q):
//   a_pq = E psi(z_p) conj(psi(z_q))   = (1 - z_p conj(z_q))^-l
//   b_pq = E psi(z_p) conj(psi'(z_q))  = l z_p (1 - z_p conj(z_q))^-(l+1)
//   c_pq = E psi'(z_p) conj(psi'(z_q))
//        = l (1 + l z_p conj(z_q)) (1 - z_p conj(z_q))^-(l+2)
struct CovarianceBlocks {
  Eigen::MatrixXcd a, b, c;
};

CovarianceBlocks build_blocks(const PointConfig& config);

// Conditional covariance of the derivatives given psi = 0 at every point:
// c - b^* a^-1 b.  Hermitian positive semidefinite.
Eigen::MatrixXcd lambda_matrix(const CovarianceBlocks& blocks);

// One-point zero intensity from the same blocks,
// (a c - |b|^2) / (pi a^2); equals density_rho.
double k1_density(long long l, std::complex<double> z);

// Normalized n-point correlation via the Wick/permanent route:
//   k_n = perm(lambda) / (pi^n det a  prod_p k1(z_p)).
double kn_correlation(const PointConfig& config);

// Same statistic through the Grassmann/Berezin representation: expand
// det(I + lambda Omega)^-1 in the nilpotent subset algebra, extract the
// top coefficient, and normalize against the one-point case.  Independent
// arithmetic path from kn_correlation; the two must agree.
double kn_berezin(const PointConfig& config);

struct PosDefReport {
  bool positive_definite = false;
  double min_eigenvalue = 0.0;
};

// Smallest eigenvalue of the Hermitian block a (the psi covariance).
PosDefReport check_positive_definite(const PointConfig& config);

// |k_n(config) - k_n(mapped config)| under the disk automorphism (a, b).
double mobius_invariance_check(const PointConfig& config,
                               std::complex<double> a,
                               std::complex<double> b);

}  // namespace su11
