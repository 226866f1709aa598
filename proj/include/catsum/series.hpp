#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "catsum/exact.hpp"
#include "catsum/interval.hpp"

namespace catsum {

/// Truncated power series in x with exact rational coefficients; index r
/// holds the coefficient of x^r.  Operations never read or write beyond
/// the truncation order.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : c_(order + 1) {}

  std::size_t order() const { return c_.size() - 1; }
  const mpq_class& operator[](std::size_t r) const { return c_[r]; }
  mpq_class& operator[](std::size_t r) { return c_[r]; }

 private:
  std::vector<mpq_class> c_;
};

/// x^r truncated at `order` (zero series when r > order).
PowerSeries ps_monomial(std::size_t r, std::size_t order);

/// Generalized binomial series (1 + scale*x)^alpha: the coefficient of x^r
/// is C(alpha, r) * scale^r with C(alpha, r) = alpha(alpha-1)...(alpha-r+1)/r!.
PowerSeries ps_binomial(const mpq_class& alpha, const mpq_class& scale, std::size_t order);

/// Elementwise sum/difference; the shorter operand is zero-extended and the
/// result has the longer truncation order.
PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b);

/// Cauchy product truncated at the longer operand's order.
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);

PowerSeries ps_scale(const mpq_class& c, const PowerSeries& a);

/// Substitutes x -> x/(1 - shift*x), i.e. re-expands A(1/(n-shift)) around
/// 1/n.  Only shift 1 and 2 are supported (the sum recurrence reaches back
/// two terms); throws std::invalid_argument otherwise.
PowerSeries ps_compose_shift(const PowerSeries& a, unsigned shift);

/// Which estimator the expansion multiplies: u(n) (upper) or theta(n) (lower).
enum class SeriesBase { upper, lower };

/// Coefficients a_0..a_p of the correction polynomial in 1/n:
///   S_n ~ B(n) * (a_0 + a_1/n + ... + a_p/n^p),  a_0 = 1.
struct SeriesExpansion {
  SeriesBase base;
  unsigned order;
  std::vector<mpq_class> coeffs;
};

/// Raised when the substituted recurrence is structurally inconsistent
/// (nonvanishing leading residual, or a degenerate linear equation) —
/// either indicates a transcription bug in the base-ratio series.
class SeriesConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Substitutes S_n = B(n) A(1/n) into the exact sum recurrence
///   (n+1) S_n + (1-5n) S_{n-1} = 2(1-2n) S_{n-2},
/// divides by B(n), multiplies by x = 1/n to clear the prefactor poles, and
/// zeroes the residual's coefficients order by order.
///
/// The system is triangular but shifted: the x^0 and x^1 residual
/// coefficients vanish identically (that is checked, loudly), and the x^(r+1)
/// equation is the one that determines a_r — its pivot is a nonzero rational,
/// so the solution is unique.  Solving to order p therefore expands the
/// residual through x^(p+1).
SeriesExpansion solve_expansion(SeriesBase base, unsigned p);

/// Enclosure of B(n) * sum_{r<=p} a_r n^-r; the polynomial part is exact
/// rational, only the base estimator evaluation is interval-valued.
Interval refined_estimate(SeriesBase base, unsigned p, long n, mpfr_prec_t precision_bits);

struct DecayPoint {
  long n;
  double rel_error;  // |refined - S_n| / S_n, midpoint of the enclosure
};

struct DecayReport {
  SeriesBase base;
  unsigned order;
  std::vector<DecayPoint> points;
  double loglog_slope;  // least-squares slope of ln(rel_error) vs ln(n)
};

/// Relative error of the order-p refinement at each n in ascending n_list
/// (every entry >= 8), plus the fitted log-log decay slope, which should
/// sit near -(p+1).
DecayReport error_decay_check(CatalanTable& table, SeriesBase base, unsigned p,
                              const std::vector<long>& n_list);

}  // namespace catsum
