#include "catsum/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace catsum {

namespace {

// Adaptive precision: start at the default policy, double on Undecided,
// give up after 16x the start.  A cap hit is reported, never guessed.
constexpr int kMaxDoublings = 4;
constexpr double kRatioWidthTarget = 1e-6;

template <typename CmpFn>
Ordering decide_adaptive(CmpFn cmp, mpfr_prec_t start, VerificationReport& report) {
  mpfr_prec_t p = start;
  for (int attempt = 0;; ++attempt) {
    Ordering o = cmp(p);
    report.max_precision_used = std::max<long>(report.max_precision_used, p);
    if (o != Ordering::Undecided || attempt == kMaxDoublings) return o;
    p *= 2;
    ++report.escalations;
  }
}

// Shared threshold bookkeeping for claims whose small-n behaviour differs
// from the asymptotic statement: records the smallest index from which the
// inequality holds through the end of the range, and files the earlier
// violations as informational exceptions.
void record_threshold(VerificationReport& report, const std::string& side,
                      const std::vector<long>& violations, long n_lo, long n_hi,
                      const std::string& what) {
  long threshold = violations.empty() ? n_lo : violations.back() + 1;
  if (threshold <= n_hi) {
    report.thresholds[side] = threshold;
    report.notes.push_back(what + " holds for " + std::to_string(threshold) + " <= n <= " +
                           std::to_string(n_hi));
  } else {
    report.notes.push_back(what + " holds nowhere in range");
  }
  for (long n : violations) report.exceptions.push_back({n, "violated: " + what + " is false"});
}

struct RatioParts {
  Interval delta, zeta, diff_u, diff_theta, diff_mu;
  bool ok = false;
  bool zero_denominator = false;
};

RatioParts ratio_parts_at(CatalanTable& table, long n, mpfr_prec_t p) {
  RatioParts parts;
  Interval u = eval_bound(BoundKind::upper_u, n, p);
  Interval th = eval_bound(BoundKind::lower_theta, n, p);
  Interval mu = (u + th).scale_pow2(-1);
  Interval s = Interval::point(table.sum(n), p);
  parts.diff_u = u - s;
  parts.diff_theta = s - th;
  parts.diff_mu = mu - s;
  if (parts.diff_u.contains_zero()) {
    parts.zero_denominator = true;
    return parts;
  }
  parts.delta = parts.diff_theta / parts.diff_u;
  parts.zeta = parts.diff_mu / parts.diff_u;
  parts.ok = true;
  return parts;
}

RatioParts refine_ratio_parts(CatalanTable& table, long n, mpfr_prec_t precision_bits,
                              const char* who) {
  if (n < 1) throw std::domain_error(std::string(who) + ": index must be >= 1");
  if (precision_bits != 0 && precision_bits < 64)
    throw std::domain_error(std::string(who) + ": precision must be >= 64 bits");
  mpfr_prec_t p = precision_bits ? precision_bits : default_precision_bits(n);
  bool saw_zero_den = false;
  for (int attempt = 0; attempt <= kMaxDoublings; ++attempt, p *= 2) {
    RatioParts parts = ratio_parts_at(table, n, p);
    if (parts.zero_denominator) {
      saw_zero_den = true;
      continue;
    }
    if (parts.delta.width_double() <= kRatioWidthTarget &&
        parts.zeta.width_double() <= kRatioWidthTarget)
      return parts;
  }
  if (saw_zero_den)
    throw std::domain_error(std::string(who) + ": denominator enclosure of u(n) - S_n contains "
                            "zero at the precision cap (internal error for n >= 1)");
  throw PrecisionCapError(std::string(who) + "(" + std::to_string(n) +
                          "): enclosure width above target at precision cap");
}

}  // namespace

PolyVector poly_mul(const PolyVector& a, const PolyVector& b) {
  PolyVector r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

PolyVector poly_sub(const PolyVector& a, const PolyVector& b) {
  PolyVector r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  return r;
}

PolyVector poly_scale(long c, const PolyVector& a) {
  PolyVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

mpz_class poly_eval(const PolyVector& a, long n) {
  mpz_class acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * n + a[i];
  return acc;
}

Interval delta(CatalanTable& table, long n, mpfr_prec_t precision_bits) {
  return refine_ratio_parts(table, n, precision_bits, "delta").delta;
}

Interval zeta(CatalanTable& table, long n, mpfr_prec_t precision_bits) {
  return refine_ratio_parts(table, n, precision_bits, "zeta").zeta;
}

RatioRecord ratio_record(CatalanTable& table, long n, mpfr_prec_t precision_bits) {
  RatioParts parts = refine_ratio_parts(table, n, precision_bits, "ratio_record");
  RatioRecord rec;
  rec.n = n;
  rec.delta = std::move(parts.delta);
  rec.zeta = std::move(parts.zeta);
  rec.diff_u = std::move(parts.diff_u);
  rec.diff_theta = std::move(parts.diff_theta);
  rec.diff_mu = std::move(parts.diff_mu);
  rec.diff_cn = table.sum(n) - table.catalan(n);
  return rec;
}

std::vector<RatioRecord> difference_table(CatalanTable& table, long n_lo, long n_hi,
                                          mpfr_prec_t precision_bits) {
  if (n_lo < 1 || n_lo > n_hi) throw std::domain_error("difference_table: need 1 <= n_lo <= n_hi");
  std::vector<RatioRecord> rows;
  rows.reserve(n_hi - n_lo + 1);
  for (long n = n_lo; n <= n_hi; ++n) rows.push_back(ratio_record(table, n, precision_bits));
  return rows;
}

VerificationReport verify_thm1(CatalanTable& table, long n_max) {
  if (n_max < 1) throw std::domain_error("verify_thm1: n_max must be >= 1");
  VerificationReport report;
  report.claim_id = "thm1";
  report.n_lo = 1;
  report.n_hi = n_max;
  report.checked = n_max;
  std::vector<long> upper_bad, lower_bad;
  for (long n = 1; n <= n_max; ++n) {
    auto cmp_upper = [&](mpfr_prec_t p) {
      return enclosure_compare(eval_bound(BoundKind::upper_u, n, p),
                               Interval::point(table.sum(n), p));
    };
    Ordering ou = decide_adaptive(cmp_upper, default_precision_bits(n), report);
    if (ou == Ordering::Undecided)
      report.failures.push_back({n, "inconclusive: u(n) vs S_n undecided at precision cap"});
    else if (ou != Ordering::Greater)
      upper_bad.push_back(n);

    auto cmp_lower = [&](mpfr_prec_t p) {
      return enclosure_compare(Interval::point(table.sum(n), p),
                               eval_bound(BoundKind::lower_theta, n, p));
    };
    Ordering ol = decide_adaptive(cmp_lower, default_precision_bits(n), report);
    if (ol == Ordering::Undecided)
      report.failures.push_back({n, "inconclusive: S_n vs theta(n) undecided at precision cap"});
    else if (ol != Ordering::Greater)
      lower_bad.push_back(n);
  }
  record_threshold(report, "upper", upper_bad, 1, n_max, "u(n) > S_n");
  record_threshold(report, "lower", lower_bad, 1, n_max, "S_n > theta(n)");
  return report;
}

VerificationReport verify_thm2(CatalanTable& table, long n_lo, long n_hi) {
  if (n_lo < 1 || n_lo > n_hi) throw std::domain_error("verify_thm2: need 1 <= n_lo <= n_hi");
  VerificationReport report;
  report.claim_id = "thm2";
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  report.checked = n_hi - n_lo + 1;
  for (long n = n_lo; n <= n_hi; ++n) {
    auto cmp = [&](mpfr_prec_t p) {
      Interval lhs = eval_bound(BoundKind::upper_u, n, p) + eval_bound(BoundKind::lower_theta, n, p);
      return enclosure_compare(lhs, Interval::point(mpz_class(2 * table.sum(n)), p));
    };
    Ordering o = decide_adaptive(cmp, default_precision_bits(n), report);
    if (o == Ordering::Undecided)
      report.failures.push_back({n, "inconclusive: u(n)+theta(n) vs 2 S_n undecided at precision cap"});
    else if (o != Ordering::Greater)
      report.failures.push_back({n, "violated: u(n)+theta(n) <= 2 S_n"});
  }
  return report;
}

VerificationReport verify_lemma1(CatalanTable& table, long n_lo, long n_hi) {
  if (n_lo < 1 || n_lo > n_hi) throw std::domain_error("verify_lemma1: need 1 <= n_lo <= n_hi");
  VerificationReport report;
  report.claim_id = "lemma1";
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  report.checked = n_hi - n_lo + 1;
  std::vector<long> bad;
  for (long n = n_lo; n <= n_hi; ++n)
    if (4 * table.catalan(n) >= 3 * table.sum(n)) bad.push_back(n);
  record_threshold(report, "lower", bad, n_lo, n_hi, "4 C_n / 3 < S_n");
  return report;
}

VerificationReport lemma2_polynomial_identity() {
  static const PolyVector h = {-4, -24, -84, -91, 129, 135, 24};
  static const PolyVector q = {0, 0, 0, 36, 108, 108, 36};
  static const PolyVector r = {4, 24, 84, 119, 83, 29, 4};
  static const PolyVector j = {16,      192,     1248,    4184,   5208,  -16176,
                               -84431, -150414, -115497, -35634, -1791, 576};
  VerificationReport report;
  report.claim_id = "lemma2";
  report.n_lo = 13;
  report.n_hi = 10000;
  report.checked = report.n_hi - report.n_lo + 1;

  PolyVector expansion = poly_sub(poly_mul(h, h), poly_scale(4, poly_mul(q, r)));
  for (std::size_t power = 0; power < expansion.size(); ++power) {
    mpz_class expected = power < j.size() ? j[power] : mpz_class(0);
    if (expansion[power] != expected)
      report.failures.push_back({static_cast<long>(power),
                                 "violated: coefficient of n^" + std::to_string(power) + " is " +
                                     expansion[power].get_str() + ", expected " +
                                     expected.get_str()});
  }
  if (report.failures.empty())
    report.notes.push_back(
        "(h.n)^2 - 4 (q.n)(r.n) reproduces all 12 coefficients of j; degree-12 term vanishes");

  for (long n = 13; n <= 10000; ++n)
    if (poly_eval(j, n) <= 0) report.failures.push_back({n, "violated: j.N <= 0"});
  return report;
}

VerificationReport lemma3_reduction(long n_max) {
  if (n_max < 1) throw std::domain_error("lemma3_reduction: n_max must be >= 1");
  VerificationReport report;
  report.claim_id = "lemma3";
  report.n_lo = 1;
  report.n_hi = n_max;
  report.checked = n_max;
  for (long n = 1; n <= n_max; ++n) {
    mpz_class z(n);
    mpz_class a = 9 * z * (8 * z - 1) * (8 * z - 1) * (4 * z - 1) -
                  4 * (4 * z + 1) * (4 * z + 1) * (6 * z - 3) * (6 * z - 3);
    mpz_class b = 68 * z * z - 17 * z - 4;
    if (a <= 0) report.failures.push_back({n, "violated: 9n(8n-1)^2(4n-1) <= 4(4n+1)^2(6n-3)^2"});
    if (b <= 0) report.failures.push_back({n, "violated: 68n^2 <= 17n + 4"});
    if ((a > 0) != (b > 0))
      report.failures.push_back({n, "violated: sign mismatch between the two reductions"});
  }
  return report;
}

VerificationReport verify_catalan_bounds(CatalanTable& table, long k_max) {
  if (k_max < 1) throw std::domain_error("verify_catalan_bounds: k_max must be >= 1");
  VerificationReport report;
  report.claim_id = "catalan_bounds";
  report.n_lo = 1;
  report.n_hi = k_max;
  report.checked = k_max;
  const mpq_class third(1, 3);
  for (long k = 1; k <= k_max; ++k) {
    auto cmp_nu = [&](mpfr_prec_t p) {
      return enclosure_compare(eval_bound(BoundKind::nu_upper, k, p),
                               Interval::point(table.catalan(k), p));
    };
    Ordering o = decide_adaptive(cmp_nu, default_precision_bits(k), report);
    if (o == Ordering::Undecided)
      report.failures.push_back({k, "inconclusive: nu(k) vs C_k undecided at precision cap"});
    else if (o != Ordering::Greater)
      report.failures.push_back({k, "violated: nu(k) <= C_k"});

    auto cmp_dutton = [&](mpfr_prec_t p) {
      return enclosure_compare(Interval::point(table.catalan(k), p),
                               eval_bound(BoundKind::dutton_lower, k, p));
    };
    o = decide_adaptive(cmp_dutton, default_precision_bits(k), report);
    if (o == Ordering::Undecided)
      report.failures.push_back({k, "inconclusive: C_k vs lower bound undecided at precision cap"});
    else if (o != Ordering::Greater)
      report.failures.push_back({k, "violated: C_k <= dutton lower bound"});

    auto cmp_improvement = [&](mpfr_prec_t p) {
      Interval c = Interval::point(table.catalan(k), p);
      Interval lhs = eval_bound(BoundKind::nu_upper, k, p) - c;
      Interval rhs = (eval_bound(BoundKind::upsilon, k, p) - c) * Interval::point(third, p);
      return enclosure_compare(lhs, rhs);
    };
    o = decide_adaptive(cmp_improvement, default_precision_bits(k), report);
    if (o == Ordering::Undecided)
      report.failures.push_back(
          {k, "inconclusive: 3(nu(k)-C_k) vs upsilon(k)-C_k undecided at precision cap"});
    else if (o != Ordering::Less)
      report.failures.push_back({k, "violated: nu(k)-C_k > (upsilon(k)-C_k)/3"});
  }
  return report;
}

std::optional<long> find_crossing(CatalanTable& table, const mpq_class& threshold, long n_lo,
                                  long n_hi) {
  if (n_lo < 1 || n_lo > n_hi) throw std::domain_error("find_crossing: need 1 <= n_lo <= n_hi");
  auto below = [&](long n) -> bool {
    mpfr_prec_t p = default_precision_bits(n);
    for (int attempt = 0; attempt <= kMaxDoublings; ++attempt, p *= 2) {
      Ordering o = compare_with(delta(table, n, p), threshold);
      if (o == Ordering::Less) return true;
      if (o == Ordering::Greater) return false;
    }
    throw PrecisionCapError("find_crossing: delta(" + std::to_string(n) +
                            ") vs threshold undecided at precision cap");
  };
  bool prev_not_below = n_lo >= 2 ? !below(n_lo - 1) : true;
  for (long n = n_lo; n <= n_hi; ++n) {
    bool b = below(n);
    if (b && prev_not_below) return n;
    prev_not_below = !b;
  }
  return std::nullopt;
}

}  // namespace catsum
