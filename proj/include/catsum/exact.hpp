#pragma once

#include <gmpxx.h>

#include <vector>

#include "catsum/report.hpp"

namespace catsum {

/// Memoized exact Catalan numbers C_1, C_2, ... and their prefix sums
/// S_n = C_1 + ... + C_n.  The table only grows: asking for index k
/// extends it through k and later queries reuse the stored values.
///
/// Not thread-safe: one instance per thread (values are plain mpz reads
/// once computed, but extension mutates the vectors).
class CatalanTable {
 public:
  /// C_k for k >= 1.  Throws std::domain_error for k < 1.
  const mpz_class& catalan(long k);

  /// S_n = sum of C_1..C_n for n >= 1.  Throws std::domain_error for n < 1.
  const mpz_class& sum(long n);

  /// 4*C_n/3 in lowest terms, the coarse lower estimate of S_n.
  /// Note: S_n exceeds it only from n = 2 on (4/3 > S_1 = 1).
  mpq_class ell(long n);

  long max_index() const { return max_; }

 private:
  void extend(long k);

  long max_ = 0;
  std::vector<mpz_class> cat_{mpz_class(0)};  // slot 0 unused, 1-based
  std::vector<mpz_class> sum_{mpz_class(0)};
};

/// Checks (n+1)S_n + (1-5n)S_{n-1} = 2(1-2n)S_{n-2} exactly for
/// 3 <= n <= n_max.  Throws std::domain_error for n_max < 3.
VerificationReport verify_sum_recurrence(CatalanTable& table, long n_max);

}  // namespace catsum
