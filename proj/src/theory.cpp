#include "su11/theory.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "su11/dd.hpp"
#include "su11/ensemble.hpp"
#include "su11/errors.hpp"

namespace su11 {

namespace {

constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------------
// g^(j) branches.  g^(j)(s) = integral_0^1 t^j e^{st} dt, so every branch
// below is a rearrangement of the same positive quantity.
// ---------------------------------------------------------------------

// Power series sum_i s^i / (i! (j+i+1)).  All terms positive for s >= 0;
// alternating but mildly cancelling for -4 <= s < 0.
double g_series(int j, double s) {
  double term = 1.0 / (j + 1);
  double acc = term;
  for (int i = 0; i < 400; ++i) {
    term *= s * static_cast<double>(j + i + 1) /
            (static_cast<double>(i + 1) * static_cast<double>(j + i + 2));
    acc += term;
    if (std::abs(term) <= 0.25 * std::numeric_limits<double>::epsilon() *
                              std::abs(acc))
      return acc;
  }
  return acc;  // |s| <= ~300 converges well before the cap
}

// s < 0 via sigma = -s:
//   g^(j)(-sigma) = e^-sigma / (j+1) * sum_n sigma^n / prod_{k=1..n}(j+1+k),
// the regularized lower-incomplete-gamma series; all terms positive.
double g_gamma_series(int j, double sigma) {
  double term = 1.0;
  double acc = term;
  for (int n = 1; n < 2000; ++n) {
    term *= sigma / static_cast<double>(j + 1 + n);
    acc += term;
    if (term <= 0.25 * std::numeric_limits<double>::epsilon() * acc) break;
  }
  return std::exp(-sigma) * acc / (j + 1);
}

// Literal closed form for s < 0 (sigma = -s), stable once the partial
// exponential sum e^-sigma sum_{k<=j} sigma^k/k! is well below 1:
//   g^(j)(-sigma) = j!/sigma^(j+1) [1 - e^-sigma sum_{k<=j} sigma^k/k!].
double g_closed_negative(int j, double sigma) {
  double term = 1.0;
  double partial = 1.0;
  for (int k = 1; k <= j; ++k) {
    term *= sigma / k;
    partial += term;
  }
  const double bracket = 1.0 - std::exp(-sigma) * partial;
  return std::exp(std::lgamma(j + 1.0) -
                  (j + 1.0) * std::log(sigma) + std::log(bracket));
}

// Literal closed form for s > 0, stable for s >= 2j:
//   g^(j)(s) = (e^s/s) sum_{k<=j} (-1)^k j!/((j-k)! s^k)
//              + (-1)^(j+1) j!/s^(j+1).
double g_closed_positive(int j, double s) {
  double term = 1.0;
  double bracket = 1.0;
  for (int k = 1; k <= j; ++k) {
    term *= -static_cast<double>(j - k + 1) / s;
    bracket += term;
  }
  const double log_tail = std::lgamma(j + 1.0) - (j + 1.0) * std::log(s);
  const double tail = ((j % 2) == 0 ? -1.0 : 1.0) * std::exp(log_tail);
  return std::exp(s) / s * bracket + tail;
}

// ---------------------------------------------------------------------

struct LogScaledSums {
  double s0 = 0.0;  // sum w_m
  double s1 = 0.0;  // sum m w_m
  double s2 = 0.0;  // sum m (m-1) w_m
};

// Weights w_m = C(m+l-1, m) x^m rescaled by the peak log term.
LogScaledSums finite_n_sums(long long l, long long n, double x) {
  const std::size_t count = static_cast<std::size_t>(n) + 1;
  std::vector<double> lt(count);
  const double logx = std::log(x);
  double log_weight = 0.0;
  double peak = -std::numeric_limits<double>::infinity();
  for (long long m = 0; m <= n; ++m) {
    const double v = log_weight + static_cast<double>(m) * logx;
    lt[static_cast<std::size_t>(m)] = v;
    if (v > peak) peak = v;
    log_weight +=
        std::log(static_cast<double>(m + l) / static_cast<double>(m + 1));
  }
  LogScaledSums sums;
  for (long long m = 0; m <= n; ++m) {
    const double w = std::exp(lt[static_cast<std::size_t>(m)] - peak);
    const double md = static_cast<double>(m);
    sums.s0 += w;
    sums.s1 += md * w;
    sums.s2 += md * (md - 1.0) * w;
  }
  return sums;
}

void require_l(long long l) {
  if (l < 1)
    throw DomainError("weight parameter must satisfy l >= 1, got " +
                      std::to_string(l));
}

void require_inside_disk(std::complex<double> z, const char* what) {
  if (!(std::abs(z) < 1.0))
    throw DomainError(std::string(what) + " must lie inside the unit disk");
}

// q^l - 1 is needed to double-double accuracy for the two-point form; for
// omega = -l log1p(-r^2) <= 1/2 the alternating binomial series in r^2 has
// decaying terms and every factor is exactly representable, so eta keeps
// ~30 digits.  Beyond 1/2 the plain expm1 value is already uncancelled.
DD eta_dd(long long l, double r, double omega) {
  if (omega > 0.5) return DD(-std::expm1(-omega));
  const DD r2 = detail::two_prod(r, r);
  DD term = r2 * DD(static_cast<double>(l));
  DD acc = term;
  for (long long k = 1; k <= l; ++k) {
    term = term * r2 * DD(-static_cast<double>(l - k));
    term = term / DD(static_cast<double>(k + 1));
    acc = acc + term;
    if (std::abs(term.hi) < 1e-40 * std::abs(acc.hi)) break;
  }
  return acc;
}

}  // namespace

double g_derivative(int j, double s) {
  if (j < 0) throw DomainError("derivative order must satisfy j >= 0");
  if (s == 0.0) return 1.0 / (j + 1);
  if (s > 0.0) {
    if (s >= 8.0 && s >= 2.0 * j) return g_closed_positive(j, s);
    return g_series(j, s);
  }
  const double sigma = -s;
  if (sigma <= 4.0) return g_series(j, s);
  if (sigma >= 3.0 * (j + 1)) return g_closed_negative(j, sigma);
  return g_gamma_series(j, sigma);
}

double distribution_P(int l, double s) {
  require_l(l);
  return g_derivative(l, s) / g_derivative(l - 1, s);
}

double scaled_density(int l, double s) {
  require_l(l);
  const double g0 = g_derivative(l - 1, s);
  const double g1 = g_derivative(l, s);
  const double g2 = g_derivative(l + 1, s);
  const double ratio = g1 / g0;
  return (g2 / g0 - ratio * ratio) / kPi;
}

double finite_n_density(long long l, long long n, double x) {
  require_l(l);
  if (n < 1) throw DomainError("degree must satisfy n >= 1");
  if (!(x >= 0.0)) throw DomainError("x = |z|^2 must be nonnegative");
  if (x == 0.0) return static_cast<double>(l) / kPi;
  const LogScaledSums sums = finite_n_sums(l, n, x);
  const double u = sums.s1 / sums.s0;
  const double v = sums.s2 / sums.s0;
  // x (F'/F)' + F'/F with F'/F = u/x and (F'/F)' = (v - u^2)/x^2.
  return (v - u * u + u) / (x * kPi);
}

double finite_n_zero_count(long long l, long long n, double x) {
  require_l(l);
  if (n < 1) throw DomainError("degree must satisfy n >= 1");
  if (!(x >= 0.0)) throw DomainError("x = |z|^2 must be nonnegative");
  if (x == 0.0) return 0.0;
  const LogScaledSums sums = finite_n_sums(l, n, x);
  return sums.s1 / sums.s0;  // x F'(x)/F(x)
}

double finite_n_density_integral(long long l, long long n) {
  require_l(l);
  if (n < 1) throw DomainError("degree must satisfy n >= 1");
  using boost::math::quadrature::gauss_kronrod;
  double err1 = 0.0, err2 = 0.0;
  const auto f = [l, n](double x) {
    return kPi * finite_n_density(l, n, x);
  };
  // Split at the scaling window around x = 1 where the peak lives.
  const double integral =
      gauss_kronrod<double, 15>::integrate(f, 0.0, 1.0, 15, 1e-10, &err1) +
      gauss_kronrod<double, 15>::integrate(
          f, 1.0, std::numeric_limits<double>::infinity(), 15, 1e-10, &err2);
  if (!(err1 + err2 < 1e-5 * static_cast<double>(n)))
    throw QuadratureError("density integral failed to converge: error " +
                          std::to_string(err1 + err2));
  return integral;
}

double density_rho(long long l, std::complex<double> z) {
  require_l(l);
  require_inside_disk(z, "evaluation point");
  const double one_minus = 1.0 - std::norm(z);
  return static_cast<double>(l) / (kPi * one_minus * one_minus);
}

double hyperbolic_distance(std::complex<double> z1, std::complex<double> z2) {
  require_inside_disk(z1, "first point");
  require_inside_disk(z2, "second point");
  const double num = std::abs(z1 - z2);
  const double den = std::abs(1.0 - z1 * std::conj(z2));
  return 2.0 * std::atanh(num / den);
}

std::complex<double> mobius_apply(std::complex<double> a,
                                  std::complex<double> b,
                                  std::complex<double> z) {
  const double unit = std::norm(a) - std::norm(b);
  if (std::abs(unit - 1.0) > 1e-10 * (std::norm(a) + std::norm(b)) + 1e-12)
    throw DomainError("map parameters must satisfy |a|^2 - |b|^2 = 1");
  return (a * z + b) / (std::conj(b) * z + std::conj(a));
}

double k2_closed_form(long long l, double r) {
  require_l(l);
  if (!(r >= 0.0 && r < 1.0))
    throw DomainError("r = tanh(tau/2) must lie in [0, 1)");
  if (r == 0.0) return 0.0;

  const double ld = static_cast<double>(l);
  const double r2 = r * r;
  const double omega = -ld * std::log1p(-r2);  // (1-r^2)^l = e^-omega

  if (omega <= 1e-3) {
    // Series about r = 0; next omitted term is O(r^10) with an
    // l-uniform relative contribution ~ (l r^2)^4 at this cutoff.
    const double lp1 = ld + 1.0;
    const double lsq = (ld * ld - 1.0) * (ld * ld - 1.0);
    const double r4 = r2 * r2;
    return (lp1 * lp1 / (2.0 * ld)) * r2 - (lp1 * lp1 / (4.0 * ld)) * r4 -
           (lsq / (36.0 * ld)) * r4 * r2 - (lsq / (72.0 * ld)) * r4 * r4;
  }

  // Rational form in q = (1-r^2)^l.  The numerator cancels to
  // O((l r^2)^3 k2), far past double precision near the knee, so q and the
  // assembly are carried in double-double.
  const DD eta = eta_dd(l, r, omega);
  const DD one(1.0);
  const DD ql = one - eta;            // q^l
  const DD q2l = ql * ql;             // q^2l
  const DD r2dd = detail::two_prod(r, r);
  const DD r4dd = r2dd * r2dd;
  const DD one_minus_r2 = one - r2dd;
  const DD q3l2 = ql * ql * ql * one_minus_r2 * one_minus_r2;  // q^(3l+2)

  const DD alpha = DD(ld * ld - 2.0 * ld - 2.0) * r4dd +
                   DD(4.0 * ld + 4.0) * r2dd - one;
  const DD beta = DD((ld + 1.0) * (ld + 1.0)) * r4dd -
                  DD(4.0 * ld + 2.0) * r2dd - one;
  const DD num = q3l2 + alpha * q2l + beta * ql + one;
  const DD den = eta * eta * eta;
  return (num / den).value();
}

double k2_hannay(double u) {
  if (!(u >= 0.0)) throw DomainError("separation u must be nonnegative");
  if (u == 0.0) return 0.0;
  const double t = 0.5 * u * u;
  if (t < 0.05) {
    // Series of the closed form; coefficients 1, -2/9, 2/45, -4/525,
    // 2/1701 in odd powers of t.  Next term is ~1.7e-4 t^11.
    const double t2 = t * t;
    return t * (1.0 +
                t2 * (-2.0 / 9.0 +
                      t2 * (2.0 / 45.0 +
                            t2 * (-4.0 / 525.0 + t2 * (2.0 / 1701.0)))));
  }
  if (t > 20.0) {
    // sinh/cosh overflow guard; exact to double precision here:
    // k2 = [(1-q)^2 (1+q) + 4q(t^2(1+q) - 2t(1-q))]/(1-q)^3, q = e^-2t.
    const double q = std::exp(-2.0 * t);
    const double om = -std::expm1(-2.0 * t);
    return (om * om * (1.0 + q) + 4.0 * q * (t * t * (1.0 + q) - 2.0 * t * om)) /
           (om * om * om);
  }
  const double sh = std::sinh(t);
  const double ch = std::cosh(t);
  return ((sh * sh + t * t) * ch - 2.0 * t * sh) / (sh * sh * sh);
}

std::complex<double> covariance_kernel(long long l, std::complex<double> z,
                                       std::complex<double> w) {
  require_l(l);
  const std::complex<double> cross = z * std::conj(w);
  if (!(std::abs(cross) < 1.0))
    throw DomainError("covariance kernel requires |z conj(w)| < 1");
  // (1 - z conj(w))^-l by integer squaring: tighter than exp(l log(...))
  // and exact about the integer exponent.
  std::complex<double> base = 1.0 / (1.0 - cross);
  std::complex<double> acc = 1.0;
  long long e = l;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace su11
