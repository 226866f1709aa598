#pragma once

#include <mpfr.h>

#include "catsum/interval.hpp"

namespace catsum {

/// The closed-form estimators.  All are functions of a single positive
/// integer; u, theta and mu estimate the Catalan prefix sum S_n, while nu,
/// dutton and upsilon bound the single Catalan number C_k.
///
///   u(n)       = 4^(n+1) / (3 sqrt(pi n^3))
///   theta(n)   = 4^(n+1) / (3 (n+1) sqrt(pi n))
///   mu(n)      = (u(n) + theta(n)) / 2
///   nu(k)      = 2^(2k+1) / ((k+1) sqrt(pi (4k+1)))
///   dutton(k)  = 2^(2k-1) / (k (k+1) sqrt(pi / (4k-1)))
///   upsilon(k) = 4^k / ((k+1) sqrt(pi k))
enum class BoundKind { upper_u, lower_theta, mean_mu, nu_upper, dutton_lower, upsilon };

/// Short stable name used in CLI output ("u", "theta", ...).
const char* bound_name(BoundKind kind);

/// Default working precision for index n: max(128, 2n + 64).  The 4^(n+1)
/// factor alone occupies 2n+2 bits of magnitude; the slack keeps relative
/// enclosure widths small enough for the ratio work downstream.
mpfr_prec_t default_precision_bits(long n);

/// Enclosure of the selected estimator at n, width at most 4 ulp at the
/// requested precision (evaluated with guard bits internally, then rounded
/// outward).  Requires n >= 1 and precision_bits >= 64; throws
/// std::domain_error otherwise.
Interval eval_bound(BoundKind kind, long n, mpfr_prec_t precision_bits);

/// log2 of the selected estimator in machine precision, for indices far
/// beyond floating-point range (relative error of the log value stays
/// below 1e-12 for n up to 1e9).  Requires n >= 1.
double log2_estimate(BoundKind kind, long n);

}  // namespace catsum
