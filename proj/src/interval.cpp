#include "catsum/interval.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>

namespace catsum {

namespace {

// Applies op to each of the four endpoint pairs with the given rounding and
// keeps the extreme result.  Used for multiplication and division, where the
// extremum can come from any corner once signs mix.
using BinOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

void corner_extremum(mpfr_ptr out, BinOp op, mpfr_srcptr alo, mpfr_srcptr ahi,
                     mpfr_srcptr blo, mpfr_srcptr bhi, mpfr_rnd_t rnd, bool want_min) {
  mpfr_t t;
  mpfr_init2(t, mpfr_get_prec(out));
  op(out, alo, blo, rnd);
  mpfr_srcptr lhs[3] = {alo, ahi, ahi};
  mpfr_srcptr rhs[3] = {bhi, blo, bhi};
  for (int i = 0; i < 3; ++i) {
    op(t, lhs[i], rhs[i], rnd);
    if (want_min ? (mpfr_cmp(t, out) < 0) : (mpfr_cmp(t, out) > 0)) mpfr_set(out, t, rnd);
  }
  mpfr_clear(t);
}

}  // namespace

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(lo_, 2);
  mpfr_init2(hi_, 2);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    Interval tmp(other);
    mpfr_swap(lo_, tmp.lo_);
    mpfr_swap(hi_, tmp.hi_);
    std::swap(prec_, tmp.prec_);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  std::swap(prec_, other.prec_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::point(long value, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_, value, MPFR_RNDD);
  mpfr_set_si(r.hi_, value, MPFR_RNDU);
  return r;
}

Interval Interval::point(const mpz_class& value, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_, value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, value.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::point(const mpq_class& value, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, value.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::of(double lo, double hi, mpfr_prec_t prec) {
  if (!(lo <= hi)) throw std::invalid_argument("Interval::of: lo > hi");
  Interval r(prec);
  mpfr_set_d(r.lo_, lo, MPFR_RNDD);
  mpfr_set_d(r.hi_, hi, MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::pow2(long exponent, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_ui_2exp(r.lo_, 1, exponent, MPFR_RNDD);
  mpfr_set_ui_2exp(r.hi_, 1, exponent, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  corner_extremum(r.lo_, mpfr_mul, a.lo_, a.hi_, b.lo_, b.hi_, MPFR_RNDD, true);
  corner_extremum(r.hi_, mpfr_mul, a.lo_, a.hi_, b.lo_, b.hi_, MPFR_RNDU, false);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw std::domain_error("Interval: division by enclosure containing zero");
  Interval r(std::max(a.prec_, b.prec_));
  corner_extremum(r.lo_, mpfr_div, a.lo_, a.hi_, b.lo_, b.hi_, MPFR_RNDD, true);
  corner_extremum(r.hi_, mpfr_div, a.lo_, a.hi_, b.lo_, b.hi_, MPFR_RNDU, false);
  return r;
}

Interval Interval::operator-() const {
  Interval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(lo_) < 0) throw std::domain_error("Interval::sqrt: enclosure reaches below zero");
  Interval r(prec_);
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::abs() const {
  Interval r(prec_);
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  if (mpfr_cmp(hi_, r.hi_) > 0) mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::scale_pow2(long e) const {
  Interval r(prec_);
  mpfr_mul_2si(r.lo_, lo_, e, MPFR_RNDD);
  mpfr_mul_2si(r.hi_, hi_, e, MPFR_RNDU);
  return r;
}

Interval Interval::round_to(mpfr_prec_t prec) const {
  Interval r(prec);
  mpfr_set(r.lo_, lo_, MPFR_RNDD);
  mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::contains(const mpq_class& value) const {
  return mpfr_cmp_q(lo_, value.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, value.get_mpq_t()) >= 0;
}

bool Interval::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::is_negative() const { return mpfr_sgn(hi_) < 0; }

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid_double() const {
  mpfr_t t;
  mpfr_init2(t, prec_);
  mpfr_add(t, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(t, t, 1, MPFR_RNDN);
  double d = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return d;
}

double Interval::width_double() const {
  mpfr_t t;
  mpfr_init2(t, prec_);
  mpfr_sub(t, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  return d;
}

double Interval::width_ulps() const {
  if (mpfr_zero_p(hi_)) return mpfr_zero_p(lo_) ? 0.0 : HUGE_VAL;
  mpfr_t t;
  mpfr_init2(t, prec_);
  mpfr_sub(t, hi_, lo_, MPFR_RNDU);
  mpfr_mul_2si(t, t, prec_ - mpfr_get_exp(hi_), MPFR_RNDU);
  double d = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  return d;
}

namespace {
std::string directed_string(mpfr_srcptr x, int digits, char rounding) {
  char fmt[32];
  std::snprintf(fmt, sizeof(fmt), "%%.%dR%ce", digits - 1, rounding);
  char* s = nullptr;
  mpfr_asprintf(&s, fmt, x);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}
}  // namespace

std::string Interval::lo_string(int digits) const { return directed_string(lo_, digits, 'D'); }
std::string Interval::hi_string(int digits) const { return directed_string(hi_, digits, 'U'); }

std::string Interval::to_string() const {
  return "[" + lo_string(17) + ", " + hi_string(17) + "]";
}

Ordering enclosure_compare(const Interval& a, const Interval& b) {
  if (mpfr_cmp(a.hi_, b.lo_) < 0) return Ordering::Less;
  if (mpfr_cmp(a.lo_, b.hi_) > 0) return Ordering::Greater;
  return Ordering::Undecided;
}

Ordering compare_with(const Interval& a, const mpq_class& value) {
  if (mpfr_cmp_q(a.hi_, value.get_mpq_t()) < 0) return Ordering::Less;
  if (mpfr_cmp_q(a.lo_, value.get_mpq_t()) > 0) return Ordering::Greater;
  return Ordering::Undecided;
}

bool intersects(const Interval& a, const Interval& b) {
  return mpfr_cmp(a.hi_, b.lo_) >= 0 && mpfr_cmp(b.hi_, a.lo_) >= 0;
}

}  // namespace catsum
