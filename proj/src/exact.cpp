#include "catsum/exact.hpp"

#include <cassert>
#include <stdexcept>

namespace catsum {

void CatalanTable::extend(long k) {
  if (k <= max_) return;
  cat_.reserve(k + 1);
  sum_.reserve(k + 1);
  for (long i = max_ + 1; i <= k; ++i) {
    if (i == 1) {
      cat_.emplace_back(1);
      sum_.emplace_back(1);
    } else {
      // (i+1) C_i = 2(2i-1) C_{i-1}; the division by i+1 is always exact.
      mpz_class next = cat_[i - 1] * (2 * (2 * i - 1));
      assert(mpz_divisible_ui_p(next.get_mpz_t(), i + 1));
      mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), i + 1);
      cat_.push_back(next);
      sum_.push_back(sum_[i - 1] + next);
    }
  }
  max_ = k;
}

const mpz_class& CatalanTable::catalan(long k) {
  if (k < 1) throw std::domain_error("catalan: index must be >= 1");
  extend(k);
  return cat_[k];
}

const mpz_class& CatalanTable::sum(long n) {
  if (n < 1) throw std::domain_error("sum_catalan: index must be >= 1");
  extend(n);
  return sum_[n];
}

mpq_class CatalanTable::ell(long n) {
  if (n < 1) throw std::domain_error("ell: index must be >= 1");
  mpq_class r(catalan(n) * 4, 3);
  r.canonicalize();
  return r;
}

VerificationReport verify_sum_recurrence(CatalanTable& table, long n_max) {
  if (n_max < 3) throw std::domain_error("verify_sum_recurrence: n_max must be >= 3");
  VerificationReport report;
  report.claim_id = "recurrence";
  report.n_lo = 3;
  report.n_hi = n_max;
  report.checked = n_max - 2;
  table.sum(n_max);
  for (long n = 3; n <= n_max; ++n) {
    mpz_class lhs = (n + 1) * table.sum(n) + (1 - 5 * n) * table.sum(n - 1);
    mpz_class rhs = 2 * (1 - 2 * n) * table.sum(n - 2);
    if (lhs != rhs) report.failures.push_back({n, "violated"});
  }
  return report;
}

}  // namespace catsum
