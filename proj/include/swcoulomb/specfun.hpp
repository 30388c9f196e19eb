#pragma once

// Self-contained special-function evaluators used by the closed-form
// bound-state solution: log-gamma, Jacobi and generalized Laguerre
// polynomials, Kummer M/U, Whittaker M/W and modified Bessel I.
// Everything is plain double precision; normalization constants elsewhere
// are assembled in the log-Gamma domain to survive large quantum numbers.

#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "swcoulomb/errors.hpp"

namespace swc {

// Truncation control for the power-series evaluators.
struct SeriesControl {
  int max_terms = 600;
  double rel_tol = 1e-15;

  void validate() const {
    if (max_terms < 1) throw domain_error("SeriesControl: max_terms must be >= 1");
    if (!(rel_tol > 0.0)) throw domain_error("SeriesControl: rel_tol must be > 0");
  }
};

namespace detail {

inline constexpr double half_log_two_pi = 0.91893853320467274178; // ln(2*pi)/2

// Stirling series for ln Gamma, valid for x >= 10 to full double precision.
inline double log_gamma_stirling(double x) {
  // Bernoulli coefficients B_{2k}/(2k(2k-1))
  static constexpr double c[7] = {
      1.0 / 12.0,  -1.0 / 360.0,    1.0 / 1260.0, -1.0 / 1680.0,
      1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0};
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = c[6];
  for (int k = 5; k >= 0; --k) series = c[k] + series * inv2;
  return (x - 0.5) * std::log(x) - x + half_log_two_pi + series * inv;
}

} // namespace detail

// ln Gamma(x) for x > 0. Stirling beyond 10, recurrence below.
inline double log_gamma(double x) {
  if (!(x > 0.0)) throw domain_error("log_gamma: argument must be positive");
  double shift = 0.0;
  while (x < 10.0) {
    shift -= std::log(x);
    x += 1.0;
  }
  return detail::log_gamma_stirling(x) + shift;
}

// ln|Gamma(x)| together with the sign of Gamma(x); sign 0 at the poles.
inline std::pair<double, double> log_gamma_signed(double x) {
  if (x > 0.0) return {log_gamma(x), 1.0};
  if (x == std::floor(x)) return {std::numeric_limits<double>::infinity(), 0.0};
  // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
  const double s = std::sin(M_PI * x);
  const double lg = std::log(M_PI) - std::log(std::abs(s)) - log_gamma(1.0 - x);
  return {lg, s > 0.0 ? 1.0 : -1.0};
}

// Digamma psi(x) away from the nonpositive integers.
inline double digamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) throw domain_error("digamma: pole");
  if (x < 0.0) return digamma(1.0 - x) - M_PI / std::tan(M_PI * x);
  double acc = 0.0;
  while (x < 8.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x, inv2 = inv * inv;
  return acc + std::log(x) - 0.5 * inv -
         inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 * (1.0 / 240 - inv2 * (1.0 / 132)))));
}

// Jacobi polynomial P_J^(a,b)(x) by the three-term recurrence in degree.
inline double jacobi_poly(int J, double a, double b, double x) {
  if (J < 0) throw domain_error("jacobi_poly: degree must be nonnegative");
  if (!(a > -1.0) || !(b > -1.0)) throw domain_error("jacobi_poly: parameters must exceed -1");
  if (std::abs(x) > 1.0 + 1e-12) throw domain_error("jacobi_poly: argument outside [-1,1]");
  if (J == 0) return 1.0;
  double pm1 = 1.0;
  double p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
  for (int k = 2; k <= J; ++k) {
    const double s = 2.0 * k + a + b;
    const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
    const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    const double next = (c2 * p - c3 * pm1) / c1;
    pm1 = p;
    p = next;
  }
  return p;
}

// Generalized Laguerre polynomial L_N^alpha(x).
inline double laguerre_poly(int N, double alpha, double x) {
  if (N < 0) throw domain_error("laguerre_poly: degree must be nonnegative");
  if (!(alpha > -1.0)) throw domain_error("laguerre_poly: alpha must exceed -1");
  if (x < 0.0) throw domain_error("laguerre_poly: argument must be nonnegative");
  if (N == 0) return 1.0;
  double lm1 = 1.0;
  double l = 1.0 + alpha - x;
  for (int k = 1; k < N; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * l - (k + alpha) * lm1) / (k + 1.0);
    lm1 = l;
    l = next;
  }
  return l;
}

// Confluent hypergeometric M(a,b,x).  Negative arguments go through the
// Kummer transformation M(a,b,x) = e^x M(b-a,b,-x) so the series keeps
// positive terms where possible.
inline double kummer_m(double a, double b, double x, const SeriesControl& ctrl = {}) {
  ctrl.validate();
  if (b <= 0.0 && b == std::floor(b)) throw domain_error("kummer_m: b must not be a nonpositive integer");
  if (x < 0.0) return std::exp(x) * kummer_m(b - a, b, -x, ctrl);
  double sum = 1.0, term = 1.0;
  for (int k = 0; k < ctrl.max_terms; ++k) {
    term *= (a + k) * x / ((b + k) * (k + 1.0));
    sum += term;
    if (std::abs(term) <= ctrl.rel_tol * std::abs(sum)) return sum;
  }
  throw convergence_error("kummer_m: series did not converge within max_terms");
}

namespace detail {

// U(-n, b, x) polynomial case, exact and stable.
inline double kummer_u_polynomial(int n, double b, double x) {
  // U(-n,b,x) = (-1)^n n! L_n^{b-1}(x); evaluate the Laguerre part directly
  // (b-1 may dip below -1 here, so bypass laguerre_poly's domain guard).
  double l;
  if (n == 0) {
    l = 1.0;
  } else {
    double lm1 = 1.0;
    l = b - x; // 1 + (b-1) - x
    for (int k = 1; k < n; ++k) {
      const double next = ((2.0 * k + b - x) * l - (k + b - 1.0) * lm1) / (k + 1.0);
      lm1 = l;
      l = next;
    }
  }
  double fac = 1.0;
  for (int k = 2; k <= n; ++k) fac *= k;
  return (n % 2 == 0 ? fac : -fac) * l;
}

// Divergent large-x expansion U ~ x^{-a} 2F0(a, a-b+1; -1/x); returns the
// value only when the series actually reaches rel_tol before turning.
inline std::optional<double> kummer_u_asymptotic(double a, double b, double x,
                                                 const SeriesControl& ctrl) {
  double sum = 1.0, term = 1.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 0; k < ctrl.max_terms; ++k) {
    term *= (a + k) * (a - b + 1.0 + k) / ((k + 1.0) * (-x));
    if (std::abs(term) >= prev) return std::nullopt;
    prev = std::abs(term);
    sum += term;
    if (std::abs(term) <= 1e-13 * std::abs(sum))
      return std::exp(-a * std::log(x)) * sum;
  }
  return std::nullopt;
}

// Tricomi U for non-integer b via the Gamma-weighted pair of M solutions.
inline double kummer_u_gamma_pair(double a, double b, double x, const SeriesControl& ctrl) {
  double total = 0.0;
  {
    const auto [lgn, sgn] = log_gamma_signed(1.0 - b);
    const auto [lgd, sgd] = log_gamma_signed(a - b + 1.0);
    if (sgn == 0.0) throw pole_error("kummer_u: Gamma prefactor pole (integer b path misrouted)");
    if (sgd != 0.0) total += sgn * sgd * std::exp(lgn - lgd) * kummer_m(a, b, x, ctrl);
  }
  {
    const auto [lgn, sgn] = log_gamma_signed(b - 1.0);
    const auto [lgd, sgd] = log_gamma_signed(a);
    if (sgn == 0.0) throw pole_error("kummer_u: Gamma prefactor pole (integer b path misrouted)");
    if (sgd != 0.0)
      total += sgn * sgd * std::exp(lgn - lgd + (1.0 - b) * std::log(x)) *
               kummer_m(a - b + 1.0, 2.0 - b, x, ctrl);
  }
  return total;
}

// U(a, m, x) for exactly integer m >= 1 by the logarithmic series
// (the limit of the Gamma pair; needed because the perturbed pair loses
// ~7 digits near the Green's-function poles).
inline double kummer_u_integer_b(double a, int m, double x, const SeriesControl& ctrl) {
  const int n = m - 1; // b = n + 1
  double total = 0.0;
  const auto [lga, sga] = log_gamma_signed(a - n);
  if (sga != 0.0) {
    double lfac = 0.0;
    for (int k = 2; k <= n; ++k) lfac += std::log(static_cast<double>(k));
    const double pref = ((n % 2 == 0) ? -1.0 : 1.0) * sga * std::exp(-lfac - lga);
    const double lnx = std::log(x);
    double term = 1.0;
    double psi_a = digamma(a), psi_1 = digamma(1.0), psi_n1 = digamma(n + 1.0);
    double s = 0.0;
    bool done = false;
    for (int k = 0; k < ctrl.max_terms; ++k) {
      const double contrib = term * (lnx + psi_a - psi_1 - psi_n1);
      s += contrib;
      if (k > 2 && std::abs(contrib) <= ctrl.rel_tol * std::abs(s) && std::abs(term) <= ctrl.rel_tol) {
        done = true;
        break;
      }
      term *= (a + k) * x / ((n + 1.0 + k) * (k + 1.0));
      psi_a += 1.0 / (a + k);
      psi_1 += 1.0 / (1.0 + k);
      psi_n1 += 1.0 / (n + 1.0 + k);
    }
    if (!done) throw convergence_error("kummer_u: logarithmic series did not converge");
    total += pref * s;
  }
  if (n >= 1) {
    const auto [lgd, sgd] = log_gamma_signed(a);
    if (sgd != 0.0) {
      double lfac = 0.0;
      for (int k = 2; k <= n - 1; ++k) lfac += std::log(static_cast<double>(k));
      const double pref = sgd * std::exp(lfac - lgd - n * std::log(x));
      double term = 1.0, s = 1.0;
      for (int k = 1; k < n; ++k) {
        term *= (a - n + k - 1.0) * x / ((k - static_cast<double>(n)) * k);
        s += term;
      }
      total += pref * s;
    }
  }
  return total;
}

} // namespace detail

// Offset used to regularize U at near-integer b (perturb-and-average limit).
inline constexpr double kummer_u_integer_b_offset = 1e-7;
// Crossover to the large-x expansion of U (falls back to the series forms
// whenever the expansion fails to converge).
inline constexpr double kummer_u_asymptotic_min_x = 30.0;

// Tricomi confluent hypergeometric U(a,b,x), x > 0.
inline double kummer_u(double a, double b, double x, const SeriesControl& ctrl = {}) {
  ctrl.validate();
  if (!(x > 0.0)) throw domain_error("kummer_u: argument must be positive");
  if (a <= 0.0 && std::abs(a - std::round(a)) < 1e-9)
    return detail::kummer_u_polynomial(static_cast<int>(std::round(-a)), b, x);
  if (x >= kummer_u_asymptotic_min_x) {
    if (auto u = detail::kummer_u_asymptotic(a, b, x, ctrl)) return *u;
  }
  const double bround = std::round(b);
  const double bdist = std::abs(b - bround);
  if (bdist <= 1e-9) {
    // exactly-integer b: use x^{1-b} U(a-b+1, 2-b, x) to raise b above 0 first
    const int m = static_cast<int>(bround);
    double u = (m >= 1) ? detail::kummer_u_integer_b(a, m, x, ctrl)
                        : std::exp((1.0 - m) * std::log(x)) *
                              detail::kummer_u_integer_b(a - m + 1.0, 2 - m, x, ctrl);
    if (!std::isfinite(u)) throw pole_error("kummer_u: non-finite result (prefactor pole)");
    return u;
  }
  if (bdist <= 1e-5) {
    // documented limiting procedure: evaluate at b +/- offset and average
    const double d = kummer_u_integer_b_offset;
    const double u = 0.5 * (detail::kummer_u_gamma_pair(a, bround + d, x, ctrl) +
                            detail::kummer_u_gamma_pair(a, bround - d, x, ctrl));
    if (!std::isfinite(u)) throw pole_error("kummer_u: non-finite result near integer b");
    return u;
  }
  const double u = detail::kummer_u_gamma_pair(a, b, x, ctrl);
  if (!std::isfinite(u)) throw pole_error("kummer_u: non-finite result (prefactor pole)");
  return u;
}

// Whittaker M_{kappa,mu}(x) = e^{-x/2} x^{mu+1/2} M(mu-kappa+1/2, 2mu+1, x).
inline double whittaker_m(double kappa, double mu, double x, const SeriesControl& ctrl = {}) {
  if (!(x > 0.0)) throw domain_error("whittaker_m: argument must be positive");
  if (!(mu > -0.5)) throw domain_error("whittaker_m: mu must exceed -1/2");
  return std::exp(-0.5 * x + (mu + 0.5) * std::log(x)) *
         kummer_m(mu - kappa + 0.5, 2.0 * mu + 1.0, x, ctrl);
}

// Whittaker W_{kappa,mu}(x) = e^{-x/2} x^{mu+1/2} U(mu-kappa+1/2, 2mu+1, x).
inline double whittaker_w(double kappa, double mu, double x, const SeriesControl& ctrl = {}) {
  if (!(x > 0.0)) throw domain_error("whittaker_w: argument must be positive");
  return std::exp(-0.5 * x + (mu + 0.5) * std::log(x)) *
         kummer_u(mu - kappa + 0.5, 2.0 * mu + 1.0, x, ctrl);
}

// Crossover between the ascending series and the large-x expansion of I_nu.
inline constexpr double bessel_i_asymptotic_min_x = 20.0;

// Modified Bessel I_nu(x) for nu >= 0, x >= 0.
inline double bessel_i(double nu, double x, const SeriesControl& ctrl = {}) {
  ctrl.validate();
  if (nu < 0.0) throw domain_error("bessel_i: order must be nonnegative");
  if (x < 0.0) throw domain_error("bessel_i: argument must be nonnegative");
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;

  const auto ascending = [&]() {
    const double q = 0.25 * x * x;
    double term = std::exp(nu * std::log(0.5 * x) - log_gamma(nu + 1.0));
    double sum = term;
    for (int k = 0; k < ctrl.max_terms; ++k) {
      term *= q / ((k + 1.0) * (nu + k + 1.0));
      sum += term;
      if (term <= ctrl.rel_tol * sum) return sum;
    }
    throw convergence_error("bessel_i: ascending series did not converge");
  };

  if (x > bessel_i_asymptotic_min_x) {
    // e^x/sqrt(2 pi x) * sum_k (-1)^k a_k(nu)/x^k; usable while terms shrink
    const double mu4 = 4.0 * nu * nu;
    double term = 1.0, sum = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 60; ++k) {
      const double odd = 2.0 * k + 1.0;
      term *= -(mu4 - odd * odd) / (8.0 * x * (k + 1.0));
      if (std::abs(term) >= prev) break;
      prev = std::abs(term);
      sum += term;
      if (std::abs(term) <= 1e-15 * std::abs(sum))
        return std::exp(x) / std::sqrt(2.0 * M_PI * x) * sum;
    }
    // expansion unusable for this (nu, x); the ascending series still is
  }
  return ascending();
}

} // namespace swc
