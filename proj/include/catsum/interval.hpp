#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>

namespace catsum {

/// Verdict of a rigorous interval comparison.
enum class Ordering { Less, Greater, Undecided };

/// Raised when adaptive precision refinement hits its cap without reaching
/// the requested enclosure width or a comparison verdict.
class PrecisionCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A directed-rounded enclosure [lo, hi] of a real value.
///
/// Every constructor and arithmetic operation rounds lo toward -inf and hi
/// toward +inf, so the exact value of the represented expression is always
/// inside the interval.  That makes comparisons between disjoint intervals
/// proofs, not estimates.  Endpoints are finite MPFR numbers at a fixed
/// per-interval precision; binary operations work at the wider of the two
/// operand precisions.
class Interval {
 public:
  Interval() : Interval(64) {}
  explicit Interval(mpfr_prec_t prec);  // [0, 0]
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval point(long value, mpfr_prec_t prec);
  static Interval point(const mpz_class& value, mpfr_prec_t prec);
  static Interval point(const mpq_class& value, mpfr_prec_t prec);
  /// Interval from machine endpoints, mostly for tests. Requires lo <= hi.
  static Interval of(double lo, double hi, mpfr_prec_t prec = 64);
  static Interval pi(mpfr_prec_t prec);
  /// Exact 2^exponent (one mantissa bit, representable at any precision).
  static Interval pow2(long exponent, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return prec_; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Throws std::domain_error if b contains zero.
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const;

  Interval sqrt() const;  // throws std::domain_error if lo < 0
  Interval abs() const;
  /// Exact scaling by 2^e.
  Interval scale_pow2(long e) const;
  /// Outward re-rounding to a (usually smaller) precision.
  Interval round_to(mpfr_prec_t prec) const;

  bool contains_zero() const;
  bool contains(const mpq_class& value) const;
  bool is_positive() const;  // lo > 0
  bool is_negative() const;  // hi < 0

  double lo_double() const;   // rounded down
  double hi_double() const;   // rounded up
  double mid_double() const;  // (lo+hi)/2, nearest
  /// hi - lo, rounded up.
  double width_double() const;
  /// Width measured in units of 2^(exponent(hi) - precision).
  double width_ulps() const;

  /// Decimal endpoint rendering with directed rounding, `digits`
  /// significant digits, scientific notation.
  std::string lo_string(int digits) const;
  std::string hi_string(int digits) const;
  std::string to_string() const;  // "[lo, hi]" for diagnostics

  friend Ordering enclosure_compare(const Interval& a, const Interval& b);
  /// Position of the whole interval relative to an exact rational.
  friend Ordering compare_with(const Interval& a, const mpq_class& value);
  friend bool intersects(const Interval& a, const Interval& b);

 private:
  mpfr_t lo_;
  mpfr_t hi_;
  mpfr_prec_t prec_;
};

Ordering enclosure_compare(const Interval& a, const Interval& b);
Ordering compare_with(const Interval& a, const mpq_class& value);
bool intersects(const Interval& a, const Interval& b);

}  // namespace catsum
