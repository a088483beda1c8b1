#pragma once

#include <complex>

namespace su11 {

// j-th derivative of g(s) = (e^s - 1)/s, j >= 0.  Everywhere positive.
// Power series near zero, closed forms in the stable far regimes, and a
// regularized series where the literal closed forms cancel; relative error
// <= 1e-12 for j <= 64, |s| <= 50 (degrades gracefully outside).
double g_derivative(int j, double s);

// Limiting scaled distribution P(s) = g^(l)(s) / g^(l-1)(s): the expected
// fraction of zeros with N(|z|^2 - 1) <= s as the degree N -> infinity.
double distribution_P(int l, double s);

// Limiting scaled density p(s) = P'(s)/pi as a closed form in g ratios.
double scaled_density(int l, double s);

// Exact finite-degree zero density at |z|^2 = x >= 0 for the degree-n
// ensemble, via log-scaled partial sums of F(x) = sum C(m+l-1, m) x^m:
//   (1/pi) [x (F'/F)' + F'/F].
double finite_n_density(long long l, long long n, double x);

// Expected number of zeros with |z|^2 <= x, exactly x F'(x)/F(x).  Tends to
// n at large x and equals n l / (l + 1) at x = 1 for every degree.
double finite_n_zero_count(long long l, long long n, double x);

// Plane integral of finite_n_density (adaptive quadrature); equals n.
double finite_n_density_integral(long long l, long long n);

// Zero density of the full analytic-function ensemble, |z| < 1:
//   rho(z) = l / (pi (1 - |z|^2)^2).
double density_rho(long long l, std::complex<double> z);

// Geodesic distance for the metric of curvature -4 on the unit disk:
//   tanh(tau/2) = |z1 - z2| / |1 - z1 conj(z2)|.
double hyperbolic_distance(std::complex<double> z1, std::complex<double> z2);

// Disk automorphism z -> (a z + b) / (conj(b) z + conj(a)) with
// |a|^2 - |b|^2 = 1 (checked).  Isometry of hyperbolic_distance.
std::complex<double> mobius_apply(std::complex<double> a,
                                  std::complex<double> b,
                                  std::complex<double> z);

// Two-point correlation k2 of the analytic-function ensemble as a function
// of r = tanh(tau/2), 0 <= r < 1.  Closed rational form in (1-r^2)^l with
// double-double assembly; series expansion below the cancellation knee.
double k2_closed_form(long long l, double r);

// Large-l limit of k2 at r = u/sqrt(l):
//   ((sinh^2 t + t^2) cosh t - 2 t sinh t) / sinh^3 t,  t = u^2/2.
double k2_hannay(double u);

// E psi(z) conj(psi(w)) = (1 - z conj(w))^-l, |z conj(w)| < 1.
std::complex<double> covariance_kernel(long long l, std::complex<double> z,
                                       std::complex<double> w);

}  // namespace su11
