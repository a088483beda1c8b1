#include "su11/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>

#include "su11/dd.hpp"
#include "su11/errors.hpp"
#include "su11/kernels.hpp"

namespace su11 {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Complex double-double Horner; returns the value and sum|c_k| |z|^k.
struct CompensatedEval {
  std::complex<double> value;
  double abs_value;  // sum |c_k| |z|^k
};

CompensatedEval dd_horner(const std::vector<std::complex<double>>& coeff,
                          std::complex<double> z) {
  const std::size_t top = coeff.size() - 1;
  const DD zr(z.real()), zi(z.imag());
  DD vr(coeff[top].real()), vi(coeff[top].imag());
  const double az = std::abs(z);
  double amax = std::abs(coeff[top]);
  for (std::size_t k = top; k-- > 0;) {
    DD nvr = vr * zr - vi * zi + DD(coeff[k].real());
    DD nvi = vr * zi + vi * zr + DD(coeff[k].imag());
    vr = nvr;
    vi = nvi;
    amax = amax * az + std::abs(coeff[k]);
  }
  return {{vr.value(), vi.value()}, amax};
}

}  // namespace

HornerResult evaluate_horner(const std::vector<std::complex<double>>& coeff,
                             std::complex<double> z) {
  if (coeff.empty()) throw DegenerateInput("empty coefficient vector");
  const CompensatedEval ev = dd_horner(coeff, z);
  const double n2 = 2.0 * static_cast<double>(coeff.size());
  // Final rounding of the compensated value plus the second-order term of
  // the double-double recurrence.
  const double bound =
      kEps * std::abs(ev.value) + 2.0 * (n2 * kEps) * (n2 * kEps) * ev.abs_value;
  return {ev.value, bound};
}

ZeroSet find_roots(const CoefficientPolynomial& poly,
                   const RootFindOptions& options) {
  if (poly.coeff.empty()) throw DegenerateInput("empty coefficient vector");
  if (!(options.tol > 0.0)) throw DomainError("tolerance must be positive");
  if (options.max_iter < 1) throw DomainError("max_iter must be >= 1");

  // Effective degree: highest nonzero coefficient.
  std::size_t top = poly.coeff.size();
  while (top > 0 && std::abs(poly.coeff[top - 1]) == 0.0) --top;
  if (top == 0) throw DegenerateInput("zero polynomial has no defined zeros");

  // Exact zeros at the origin: strip low-order zero coefficients.
  std::size_t low = 0;
  while (low < top - 1 && std::abs(poly.coeff[low]) == 0.0) ++low;

  ZeroSet out;
  const std::size_t degree = top - 1 - low;
  out.zeros.assign(low, {0.0, 0.0});
  out.residuals.assign(low, 0.0);
  out.converged = true;
  if (degree == 0) return out;

  // Scale by a power of two so the largest coefficient lands near 1; exact,
  // so the iteration (and thus the zeros) is bit-identical to the unscaled
  // problem up to overflow protection.
  double cmax = 0.0;
  for (std::size_t k = low; k < top; ++k)
    cmax = std::max(cmax, std::abs(poly.coeff[k]));
  const double scale = std::ldexp(1.0, -std::ilogb(cmax));

  const std::size_t ncoef = degree + 1;
  std::vector<double> cre(ncoef), cim(ncoef), cabs(ncoef);
  for (std::size_t k = 0; k < ncoef; ++k) {
    const std::complex<double> c = poly.coeff[low + k] * scale;
    cre[k] = c.real();
    cim[k] = c.imag();
    cabs[k] = std::abs(c);
  }
  std::vector<std::complex<double>> scaled(ncoef);
  for (std::size_t k = 0; k < ncoef; ++k) scaled[k] = {cre[k], cim[k]};

  // Start moduli from the Newton polygon: the upper convex hull of
  // (k, log |c_k|).  A hull edge spanning m degrees contributes m guesses on
  // the circle of its edge radius, which tracks the asymptotic moduli of the
  // zeros; a single shared ring stalls once the moduli span a wide range.
  std::vector<std::size_t> hull;
  for (std::size_t k = 0; k <= degree; ++k) {
    if (cabs[k] == 0.0) continue;
    const double h = std::log(cabs[k]);
    while (hull.size() >= 2) {
      const std::size_t k1 = hull[hull.size() - 2];
      const std::size_t k2 = hull[hull.size() - 1];
      const double h1 = std::log(cabs[k1]);
      const double h2 = std::log(cabs[k2]);
      // Keep k2 only while it lies strictly above the chord k1 -> k.
      if ((h2 - h1) * static_cast<double>(k - k1) >
          (h - h1) * static_cast<double>(k2 - k1))
        break;
      hull.pop_back();
    }
    hull.push_back(k);
  }

  // Irrational phases keep input symmetries and neighboring rings from
  // aligning guesses.
  constexpr double kPhase = 0.41421356237309515;
  constexpr double kRingShift = 0.61803398874989485;
  std::vector<double> zre(degree), zim(degree);
  double radius = 0.0;  // largest ring, reused as the nudge scale
  {
    std::size_t j = 0;
    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
      const std::size_t k1 = hull[e];
      const std::size_t k2 = hull[e + 1];
      const std::size_t span = k2 - k1;
      double ring = std::exp((std::log(cabs[k1]) - std::log(cabs[k2])) /
                             static_cast<double>(span));
      // Keeps the arithmetic finite for absurd coefficient scales.
      ring = std::clamp(ring, 1e-150, 1e150);
      radius = std::max(radius, ring);
      for (std::size_t t = 0; t < span; ++t, ++j) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) /
                                 static_cast<double>(span) +
                             kPhase + kRingShift * static_cast<double>(e);
        zre[j] = ring * std::cos(angle);
        zim[j] = ring * std::sin(angle);
      }
    }
  }

  // Fujiwara bound: every zero satisfies |z| <= barrier.  An iterate beyond
  // it is a repulsion-pole artifact, not progress; such lanes get parked on
  // the barrier circle and pulled back in by later sweeps.
  double barrier = 0.0;
  for (std::size_t k = 0; k < degree; ++k) {
    if (cabs[k] == 0.0) continue;
    barrier = std::max(barrier,
                       std::pow(cabs[k] / cabs[degree],
                                1.0 / static_cast<double>(degree - k)));
  }
  barrier = std::min(2.0 * std::max(barrier, radius), 1e150);

  // Lanes beyond |z| = 1 are evaluated through the reversed coefficients at
  // 1/z: a draw with a tiny leading coefficient puts a zero at large modulus
  // where the plain evaluation overflows, while the reversed polynomial sees
  // it safely inside the unit disk.  p(z) = z^deg q(1/z) gives
  // p/p' = q / (w (deg q - w q')) with w = 1/z, and the relative residual of
  // p at z equals that of q at 1/z.
  const std::vector<double> qre_c(cre.rbegin(), cre.rend());
  const std::vector<double> qim_c(cim.rbegin(), cim.rend());
  const std::vector<double> qabs_c(cabs.rbegin(), cabs.rend());

  const kernels::Dispatch& lane = kernels::active();
  std::vector<double> pre(degree), pim(degree), dre(degree), dim(degree);
  std::vector<double> qre(degree), qim(degree), qdre(degree), qdim(degree);
  std::vector<double> vre(degree), vim(degree), vrad(degree);
  std::vector<double> rrep(degree), irep(degree), rad(degree), noise(degree);
  std::vector<double> qnoise(degree);
  std::vector<char> frozen(degree, 0);
  const double deg_d = static_cast<double>(degree);

  int iter = 0;
  std::size_t active_roots = degree;
  for (; iter < options.max_iter && active_roots > 0; ++iter) {
    for (std::size_t j = 0; j < degree; ++j) {
      rad[j] = std::hypot(zre[j], zim[j]);
      if (rad[j] > 1.0) {
        const std::complex<double> v =
            1.0 / std::complex<double>(zre[j], zim[j]);
        vre[j] = v.real();
        vim[j] = v.imag();
        vrad[j] = 1.0 / rad[j];
      } else {
        vre[j] = 0.0;
        vim[j] = 0.0;
        vrad[j] = 0.0;
      }
    }
    lane.horner_value_deriv(cre.data(), cim.data(), ncoef, zre.data(),
                            zim.data(), degree, pre.data(), pim.data(),
                            dre.data(), dim.data());
    lane.horner_value_deriv(qre_c.data(), qim_c.data(), ncoef, vre.data(),
                            vim.data(), degree, qre.data(), qim.data(),
                            qdre.data(), qdim.data());
    lane.aberth_repulsion(zre.data(), zim.data(), degree, rrep.data(),
                          irep.data());
    lane.horner_abs(cabs.data(), ncoef, rad.data(), degree, noise.data());
    lane.horner_abs(qabs_c.data(), ncoef, vrad.data(), degree, qnoise.data());

    for (std::size_t j = 0; j < degree; ++j) {
      if (frozen[j]) continue;
      const bool far = rad[j] > 1.0;
      const std::complex<double> pv = far
                                          ? std::complex<double>(qre[j], qim[j])
                                          : std::complex<double>(pre[j], pim[j]);
      const std::complex<double> dv =
          far ? std::complex<double>(qdre[j], qdim[j])
              : std::complex<double>(dre[j], dim[j]);
      if (!std::isfinite(pv.real()) || !std::isfinite(pv.imag()) ||
          !std::isfinite(dv.real()) || !std::isfinite(dv.imag())) {
        // Evaluation overflowed: the lane sits far outside the root annulus
        // where nudges cannot help.  Halve it back toward the origin.
        zre[j] *= 0.5;
        zim[j] *= 0.5;
        continue;
      }
      // Evaluation is noise-limited: the value cannot be distinguished
      // from zero, so the iterate is as good as it gets.
      const double floor_bound = 2.5 * static_cast<double>(ncoef) * kEps *
                                 (far ? qnoise[j] : noise[j]);
      if (std::isfinite(floor_bound) && std::abs(pv) <= floor_bound) {
        frozen[j] = 1;
        --active_roots;
        continue;
      }
      std::complex<double> w;
      if (far) {
        const std::complex<double> v(vre[j], vim[j]);
        const std::complex<double> dq = v * (deg_d * pv - v * dv);
        if (dq == std::complex<double>(0.0, 0.0)) {
          zre[j] += (rad[j] + radius) * 1e-3;
          continue;
        }
        w = pv / dq;
      } else {
        if (dv == std::complex<double>(0.0, 0.0)) {
          // Stationary point; nudge deterministically and retry next sweep.
          zre[j] += (rad[j] + radius) * 1e-3;
          continue;
        }
        w = pv / dv;
      }
      const std::complex<double> denom =
          1.0 - w * std::complex<double>(rrep[j], irep[j]);
      std::complex<double> step;
      if (denom == std::complex<double>(0.0, 0.0)) {
        step = w;  // fall back to Newton
      } else {
        step = w / denom;
      }
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
        zre[j] += (rad[j] + radius) * 1e-3;
        continue;
      }
      // One sweep never needs to move a guess further than its distance
      // from the origin plus the outermost start ring; longer steps are
      // repulsion artifacts that fling lanes into overflow territory.
      const double cap = rad[j] + radius;
      const double len = std::abs(step);
      if (len > cap) step *= cap / len;
      zre[j] -= step.real();
      zim[j] -= step.imag();
      const double rnew = std::hypot(zre[j], zim[j]);
      if (rnew > barrier) {
        zre[j] *= barrier / rnew;
        zim[j] *= barrier / rnew;
        continue;  // projection, not a convergence signal
      }
      // A step can be spuriously tiny when another guess sits nearby and the
      // repulsion denominator blows up; only freeze once the value is within
      // a few digits of its evaluation floor.
      if (std::abs(step) <= 4.0 * kEps * std::hypot(zre[j], zim[j]) &&
          std::abs(pv) <= 1e6 * floor_bound) {
        frozen[j] = 1;
        --active_roots;
      }
    }
  }
  out.iterations = iter;

  // Certify every root with the compensated evaluation; far roots through
  // the reversed polynomial, whose relative residual at 1/z is the same.
  const std::vector<std::complex<double>> reversed(scaled.rbegin(),
                                                   scaled.rend());
  bool all_good = active_roots == 0;
  const double n2 = 2.0 * static_cast<double>(ncoef);
  for (std::size_t j = 0; j < degree; ++j) {
    const std::complex<double> z(zre[j], zim[j]);
    const CompensatedEval ev =
        std::abs(z) > 1.0 ? dd_horner(reversed, 1.0 / z) : dd_horner(scaled, z);
    const double bound = kEps * std::abs(ev.value) +
                         2.0 * (n2 * kEps) * (n2 * kEps) * ev.abs_value;
    const double residual =
        ev.abs_value > 0.0 ? (std::abs(ev.value) + bound) / ev.abs_value
                           : 0.0;
    out.zeros.push_back(z);
    out.residuals.push_back(residual);
    if (!(residual <= options.tol)) all_good = false;
  }
  out.converged = all_good;
  return out;
}

}  // namespace su11
