#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "catsum/bounds.hpp"
#include "catsum/exact.hpp"
#include "catsum/interval.hpp"
#include "catsum/report.hpp"

namespace catsum {

/// Per-n analytics row: the error ratios and differences between S_n and
/// its estimators.  delta = (S-theta)/(u-S), zeta = (mu-S)/(u-S).
struct RatioRecord {
  long n = 0;
  Interval delta;
  Interval zeta;
  Interval diff_u;      // u(n) - S_n, positive for n >= 1
  Interval diff_theta;  // S_n - theta(n), positive for n >= 2
  Interval diff_mu;     // mu(n) - S_n
  mpz_class diff_cn;    // S_n - C_n, exact
};

/// Integer polynomial in one variable, coefficients in ascending powers.
using PolyVector = std::vector<mpz_class>;

PolyVector poly_mul(const PolyVector& a, const PolyVector& b);
PolyVector poly_sub(const PolyVector& a, const PolyVector& b);
PolyVector poly_scale(long c, const PolyVector& a);
mpz_class poly_eval(const PolyVector& a, long n);

/// Enclosure of delta(n) = (S_n - theta(n)) / (u(n) - S_n), S_n exact.
/// Starts at precision_bits (0 selects the default policy) and doubles the
/// precision until the width drops below 1e-6, up to 16x the start; throws
/// PrecisionCapError if the cap is hit, and std::domain_error if the
/// denominator enclosure still contains zero at the cap (it cannot for any
/// n >= 1 unless the evaluation itself is broken).
Interval delta(CatalanTable& table, long n, mpfr_prec_t precision_bits = 0);

/// Enclosure of zeta(n) = (mu(n) - S_n) / (u(n) - S_n), same refinement
/// contract as delta().
Interval zeta(CatalanTable& table, long n, mpfr_prec_t precision_bits = 0);

/// Everything in one pass per n (u, theta and mu are evaluated once).
RatioRecord ratio_record(CatalanTable& table, long n, mpfr_prec_t precision_bits = 0);
std::vector<RatioRecord> difference_table(CatalanTable& table, long n_lo, long n_hi,
                                          mpfr_prec_t precision_bits = 0);

/// Rigorous sweep of u(n) > S_n and S_n > theta(n) for 1 <= n <= n_max.
/// Each side's smallest index from which it holds through n_max is recorded
/// in thresholds ("upper", "lower"); genuine violations below a threshold
/// are listed as exceptions, not failures (the lower side is false at
/// n = 1, which is the reason this claim is threshold-reported).
VerificationReport verify_thm1(CatalanTable& table, long n_max);

/// Rigorous per-n sweep of u(n) + theta(n) > 2 S_n on [n_lo, n_hi].
/// Genuinely false for n in {4,5,6,7}; holds from n = 8 on.
VerificationReport verify_thm2(CatalanTable& table, long n_lo, long n_hi);

/// Exact sweep of 4 C_n < 3 S_n (the coarse lower estimate) with the same
/// threshold reporting as verify_thm1; false at n = 1 only.
VerificationReport verify_lemma1(CatalanTable& table, long n_lo, long n_hi);

/// Exact expansion of (h.n)^2 - 4 (q.n)(r.n) for the fixed seventh-degree
/// coefficient vectors h, q, r, checked against its published
/// twelve-coefficient result j (plus a vanishing degree-12 term), then an
/// exact positivity sweep of j.N over 13 <= n <= 10^4.
VerificationReport lemma2_polynomial_identity();

/// Exact sweep over 1 <= n <= n_max of
///   (a) 9n(8n-1)^2(4n-1) - 4(4n+1)^2(6n-3)^2 > 0
///   (b) 68n^2 - 17n - 4 > 0
/// plus the sign-agreement of (a) and (b) at every n.
VerificationReport lemma3_reduction(long n_max);

/// Rigorous per-k sweep, 1 <= k <= k_max, of
///   nu(k) > C_k,   C_k > dutton(k),   nu(k) - C_k <= (upsilon(k) - C_k)/3.
VerificationReport verify_catalan_bounds(CatalanTable& table, long k_max);

/// Smallest n in [n_lo, n_hi] with delta(n) rigorously below `threshold`
/// while delta(n-1) is not below it (the predecessor condition is skipped
/// when n-1 < 1).  Returns nullopt when there is no such n; throws
/// PrecisionCapError if some needed verdict stays undecided at the cap.
std::optional<long> find_crossing(CatalanTable& table, const mpq_class& threshold,
                                  long n_lo, long n_hi);

}  // namespace catsum
