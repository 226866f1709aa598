#include "catsum/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace catsum {

namespace {

constexpr mpfr_prec_t kGuardBits = 32;

mpz_class cube(long n) {
  mpz_class z(n);
  return z * z * z;
}

// 4^(n+1) / (3 sqrt(pi n^3))
Interval u_at(long n, mpfr_prec_t w) {
  Interval num = Interval::pow2(2 * n + 2, w);
  Interval rad = (Interval::pi(w) * Interval::point(cube(n), w)).sqrt();
  return num / (Interval::point(3L, w) * rad);
}

// 4^(n+1) / (3 (n+1) sqrt(pi n))
Interval theta_at(long n, mpfr_prec_t w) {
  Interval num = Interval::pow2(2 * n + 2, w);
  Interval rad = (Interval::pi(w) * Interval::point(n, w)).sqrt();
  return num / (Interval::point(3 * (n + 1), w) * rad);
}

// 2^(2k+1) / ((k+1) sqrt(pi (4k+1)))
Interval nu_at(long k, mpfr_prec_t w) {
  Interval num = Interval::pow2(2 * k + 1, w);
  Interval rad = (Interval::pi(w) * Interval::point(4 * k + 1, w)).sqrt();
  return num / (Interval::point(k + 1, w) * rad);
}

// 2^(2k-1) / (k (k+1) sqrt(pi / (4k-1)))
Interval dutton_at(long k, mpfr_prec_t w) {
  Interval num = Interval::pow2(2 * k - 1, w);
  Interval rad = (Interval::pi(w) / Interval::point(4 * k - 1, w)).sqrt();
  Interval kk = Interval::point(mpz_class(mpz_class(k) * (k + 1)), w);
  return num / (kk * rad);
}

// 4^k / ((k+1) sqrt(pi k))
Interval upsilon_at(long k, mpfr_prec_t w) {
  Interval num = Interval::pow2(2 * k, w);
  Interval rad = (Interval::pi(w) * Interval::point(k, w)).sqrt();
  return num / (Interval::point(k + 1, w) * rad);
}

}  // namespace

const char* bound_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::upper_u: return "u";
    case BoundKind::lower_theta: return "theta";
    case BoundKind::mean_mu: return "mu";
    case BoundKind::nu_upper: return "nu";
    case BoundKind::dutton_lower: return "dutton";
    case BoundKind::upsilon: return "upsilon";
  }
  return "?";
}

mpfr_prec_t default_precision_bits(long n) {
  mpfr_prec_t magnitude = 2 * static_cast<mpfr_prec_t>(n) + 64;
  return magnitude < 128 ? 128 : magnitude;
}

Interval eval_bound(BoundKind kind, long n, mpfr_prec_t precision_bits) {
  if (n < 1) throw std::domain_error("eval_bound: index must be >= 1");
  if (precision_bits < 64) throw std::domain_error("eval_bound: precision must be >= 64 bits");
  const mpfr_prec_t w = precision_bits + kGuardBits;
  Interval v(w);
  switch (kind) {
    case BoundKind::upper_u: v = u_at(n, w); break;
    case BoundKind::lower_theta: v = theta_at(n, w); break;
    case BoundKind::mean_mu: v = (u_at(n, w) + theta_at(n, w)).scale_pow2(-1); break;
    case BoundKind::nu_upper: v = nu_at(n, w); break;
    case BoundKind::dutton_lower: v = dutton_at(n, w); break;
    case BoundKind::upsilon: v = upsilon_at(n, w); break;
  }
  return v.round_to(precision_bits);
}

double log2_estimate(BoundKind kind, long n) {
  if (n < 1) throw std::domain_error("log2_estimate: index must be >= 1");
  const double dn = static_cast<double>(n);
  const double log2pi = std::log2(M_PI);
  switch (kind) {
    case BoundKind::upper_u:
      return 2.0 * (dn + 1) - std::log2(3.0) - 0.5 * (log2pi + 3.0 * std::log2(dn));
    case BoundKind::lower_theta:
      return 2.0 * (dn + 1) - std::log2(3.0) - std::log2(dn + 1) - 0.5 * (log2pi + std::log2(dn));
    case BoundKind::mean_mu:
      // mu = u (2n+1)/(2(n+1)), since theta/u = n/(n+1) exactly.
      return log2_estimate(BoundKind::upper_u, n) + std::log2((2.0 * dn + 1) / (dn + 1)) - 1.0;
    case BoundKind::nu_upper:
      return (2.0 * dn + 1) - std::log2(dn + 1) - 0.5 * (log2pi + std::log2(4.0 * dn + 1));
    case BoundKind::dutton_lower:
      return (2.0 * dn - 1) - std::log2(dn) - std::log2(dn + 1) -
             0.5 * (log2pi - std::log2(4.0 * dn - 1));
    case BoundKind::upsilon:
      return 2.0 * dn - std::log2(dn + 1) - 0.5 * (log2pi + std::log2(dn));
  }
  return 0.0;
}

}  // namespace catsum
