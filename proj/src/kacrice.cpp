#include "su11/kacrice.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "su11/errors.hpp"
#include "su11/theory.hpp"

namespace su11 {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxPoints = 12;  // permanent cost grows as 2^n n

void require_config(const PointConfig& config) {
  if (config.l < 1)
    throw DomainError("weight parameter must satisfy l >= 1");
  if (config.z.empty()) throw SizeError("point configuration is empty");
  if (config.z.size() > kMaxPoints)
    throw SizeError("more than " + std::to_string(kMaxPoints) +
                    " correlation points");
  for (const auto& z : config.z)
    if (!(std::abs(z) < 1.0))
      throw DomainError("correlation points must lie inside the unit disk");
  for (std::size_t p = 0; p < config.z.size(); ++p)
    for (std::size_t q = p + 1; q < config.z.size(); ++q)
      if (std::abs(config.z[p] - config.z[q]) < 1e-8)
        throw SingularConfiguration(
            "correlation points closer than 1e-8 are degenerate");
}

// perm(m) by Ryser's formula with Gray-code subset updates, O(2^n n).
std::complex<double> permanent(const Eigen::MatrixXcd& m) {
  const int n = static_cast<int>(m.rows());
  if (n == 1) return m(0, 0);
  std::vector<std::complex<double>> row_sum(static_cast<std::size_t>(n),
                                            {0.0, 0.0});
  std::complex<double> total = 0.0;
  const std::uint64_t subsets = 1ull << n;
  std::uint64_t gray = 0;
  int parity = 1;  // (-1)^|S|; each Gray step flips one bit
  for (std::uint64_t i = 1; i < subsets; ++i) {
    const std::uint64_t next_gray = i ^ (i >> 1);
    const std::uint64_t flipped = gray ^ next_gray;
    const int col = std::countr_zero(flipped);
    const double sign = (next_gray & flipped) ? 1.0 : -1.0;
    for (int r = 0; r < n; ++r)
      row_sum[static_cast<std::size_t>(r)] += sign * m(r, col);
    gray = next_gray;
    parity = -parity;
    std::complex<double> prod = 1.0;
    for (int r = 0; r < n; ++r) prod *= row_sum[static_cast<std::size_t>(r)];
    total += static_cast<double>(parity) * prod;
  }
  const double front = (n % 2 == 0) ? 1.0 : -1.0;
  return front * total;
}

struct Conditioned {
  Eigen::MatrixXcd lambda;
  double det_a = 0.0;
};

// Factor a once, then form the conditional covariance c - b^* a^-1 b and
// det a from the Cholesky diagonal.
Conditioned condition_on_zeros(const CovarianceBlocks& blocks) {
  Eigen::LLT<Eigen::MatrixXcd> llt(blocks.a);
  if (llt.info() != Eigen::Success)
    throw SingularConfiguration(
        "covariance block is numerically singular for this configuration");
  Conditioned out;
  out.lambda = blocks.c - blocks.b.adjoint() * llt.solve(blocks.b);
  out.det_a = 1.0;
  const auto& chol = llt.matrixLLT();
  for (Eigen::Index i = 0; i < chol.rows(); ++i) {
    const double d = chol(i, i).real();
    out.det_a *= d * d;
  }
  return out;
}

// Shared tail of both correlation routes: value / (det a  prod_p u k1(z_p))
// where `value` is the route's top statistic and u its per-point unit.
double normalize(const PointConfig& config, double det_a, double value,
                 double route_unit) {
  double denom = det_a;
  for (const auto& z : config.z)
    denom *= route_unit * k1_density(config.l, z);
  return value / denom;
}

// Top (full-set) coefficient of det(I + lambda Omega)^-1 in the commuting
// nilpotent algebra generated by omega_p, omega_p^2 = 0.  The determinant
// itself expands as sum_S det(lambda[S]) omega_S over principal minors.
double berezin_top_coefficient(const Eigen::MatrixXcd& lambda) {
  const int n = static_cast<int>(lambda.rows());
  const std::uint64_t full = (1ull << n) - 1;
  std::vector<std::complex<double>> det_minor(full + 1);
  det_minor[0] = 1.0;
  for (std::uint64_t s = 1; s <= full; ++s) {
    const int k = std::popcount(s);
    Eigen::MatrixXcd sub(k, k);
    int ri = 0;
    for (int p = 0; p < n; ++p) {
      if (!(s & (1ull << p))) continue;
      int ci = 0;
      for (int q = 0; q < n; ++q) {
        if (!(s & (1ull << q))) continue;
        sub(ri, ci) = lambda(p, q);
        ++ci;
      }
      ++ri;
    }
    det_minor[s] = (k == 1) ? sub(0, 0) : sub.determinant();
  }

  // Solve y (1 + x) = 1 by increasing subsets, x = sum_{S != 0} det_minor[S]
  // omega_S:  y[S] = -sum_{T subset S, T != 0} x[T] y[S \ T].
  std::vector<std::complex<double>> inv(full + 1);
  inv[0] = 1.0;
  for (std::uint64_t s = 1; s <= full; ++s) {
    std::complex<double> acc = 0.0;
    for (std::uint64_t t = s; t != 0; t = (t - 1) & s)
      acc += det_minor[t] * inv[s ^ t];
    inv[s] = -acc;
  }
  return inv[full].real();
}

}  // namespace

CovarianceBlocks build_blocks(const PointConfig& config) {
  require_config(config);
  const std::size_t n = config.size();
  const double l = static_cast<double>(config.l);
  CovarianceBlocks blocks;
  blocks.a.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  blocks.b.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  blocks.c.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const std::complex<double> zp = config.z[p];
      const std::complex<double> cross = zp * std::conj(config.z[q]);
      const std::complex<double> base =
          covariance_kernel(config.l, zp, config.z[q]);
      const std::complex<double> inv = 1.0 / (1.0 - cross);
      const auto i = static_cast<Eigen::Index>(p);
      const auto j = static_cast<Eigen::Index>(q);
      blocks.a(i, j) = base;
      blocks.b(i, j) = l * zp * base * inv;
      blocks.c(i, j) = l * (1.0 + l * cross) * base * inv * inv;
    }
  }
  return blocks;
}

Eigen::MatrixXcd lambda_matrix(const CovarianceBlocks& blocks) {
  return condition_on_zeros(blocks).lambda;
}

double k1_density(long long l, std::complex<double> z) {
  PointConfig config;
  config.l = l;
  config.z = {z};
  const CovarianceBlocks blocks = build_blocks(config);
  const double a = blocks.a(0, 0).real();
  const double c = blocks.c(0, 0).real();
  const double b2 = std::norm(blocks.b(0, 0));
  return (a * c - b2) / (kPi * a * a);
}

double kn_correlation(const PointConfig& config) {
  const Conditioned cond = condition_on_zeros(build_blocks(config));
  const std::complex<double> perm = permanent(cond.lambda);
  return normalize(config, cond.det_a, perm.real(), kPi);
}

double kn_berezin(const PointConfig& config) {
  const Conditioned cond = condition_on_zeros(build_blocks(config));
  const double raw = berezin_top_coefficient(cond.lambda);

  // The representation fixes the per-point unit only up to a constant;
  // calibrate it once against the exactly known one-point intensity.
  static const double unit = [] {
    PointConfig ref;
    ref.l = 2;
    ref.z = {std::complex<double>(0.3, 0.1)};
    const Conditioned rc = condition_on_zeros(build_blocks(ref));
    const double rraw = berezin_top_coefficient(rc.lambda);
    return rraw / (rc.det_a * k1_density(ref.l, ref.z[0]));
  }();

  return normalize(config, cond.det_a, raw, unit);
}

PosDefReport check_positive_definite(const PointConfig& config) {
  const CovarianceBlocks blocks = build_blocks(config);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(blocks.a);
  PosDefReport report;
  report.min_eigenvalue = solver.eigenvalues().minCoeff();
  report.positive_definite = report.min_eigenvalue > 0.0;
  return report;
}

double mobius_invariance_check(const PointConfig& config,
                               std::complex<double> a,
                               std::complex<double> b) {
  PointConfig mapped = config;
  for (auto& z : mapped.z) z = mobius_apply(a, b, z);
  return std::abs(kn_correlation(config) - kn_correlation(mapped));
}

}  // namespace su11
