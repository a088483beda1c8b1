#pragma once

#include <complex>
#include <vector>

#include "su11/ensemble.hpp"

namespace su11 {

struct RootFindOptions {
  // Convergence requires every root's relative backward error (residual)
  // at or below tol.
  double tol = 1e-12;
  int max_iter = 200;
};

struct ZeroSet {
  std::vector<std::complex<double>> zeros;
  // Relative backward error per zero: (|p(z)| + eval bound) / sum|c_k||z|^k.
  std::vector<double> residuals;
  int iterations = 0;
  bool converged = false;
};

struct HornerResult {
  std::complex<double> value;
  // Rigorous bound on |value - p(z)| for the compensated evaluation.
  double error_bound = 0.0;
};

// Compensated (double-double) Horner evaluation.
HornerResult evaluate_horner(const std::vector<std::complex<double>>& coeff,
                             std::complex<double> z);

// All complex zeros via simultaneous Ehrlich-Aberth iteration: initial
// guesses on Newton-polygon rings (one circle per upper-hull edge of
// (k, log |c_k|)), third-order corrections, and per-root stopping once the
// step stalls or the value sinks below the Horner evaluation noise floor.
// Points beyond |z| = 1 evaluate through the reversed coefficients at 1/z,
// so zeros of any modulus certify without overflow.  Zeros at the origin
// are split off exactly beforehand.  Deterministic: identical input gives
// identical output on the same build and machine.
ZeroSet find_roots(const CoefficientPolynomial& poly,
                   const RootFindOptions& options = {});

}  // namespace su11
