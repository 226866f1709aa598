#include "catsum/series.hpp"

#include <cmath>
#include <string>

#include "catsum/bounds.hpp"

namespace catsum {

PowerSeries ps_monomial(std::size_t r, std::size_t order) {
  PowerSeries s(order);
  if (r <= order) s[r] = 1;
  return s;
}

PowerSeries ps_binomial(const mpq_class& alpha, const mpq_class& scale, std::size_t order) {
  PowerSeries s(order);
  s[0] = 1;
  for (std::size_t r = 1; r <= order; ++r) {
    // C(alpha, r) = C(alpha, r-1) * (alpha - r + 1) / r
    s[r] = s[r - 1] * (alpha - static_cast<long>(r - 1)) * scale / static_cast<long>(r);
  }
  return s;
}

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(std::max(a.order(), b.order()));
  for (std::size_t i = 0; i <= r.order(); ++i) {
    if (i <= a.order()) r[i] += a[i];
    if (i <= b.order()) r[i] += b[i];
  }
  return r;
}

PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(std::max(a.order(), b.order()));
  for (std::size_t i = 0; i <= r.order(); ++i) {
    if (i <= a.order()) r[i] += a[i];
    if (i <= b.order()) r[i] -= b[i];
  }
  return r;
}

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(std::max(a.order(), b.order()));
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j <= b.order() && i + j <= r.order(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

PowerSeries ps_scale(const mpq_class& c, const PowerSeries& a) {
  PowerSeries r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) r[i] = c * a[i];
  return r;
}

PowerSeries ps_compose_shift(const PowerSeries& a, unsigned shift) {
  if (shift != 1 && shift != 2)
    throw std::invalid_argument("ps_compose_shift: shift must be 1 or 2");
  const std::size_t order = a.order();
  PowerSeries out(order);
  out[0] = a[0];
  // (x/(1-sx))^r = sum_m C(m-1, r-1) s^(m-r) x^m
  for (std::size_t r = 1; r <= order; ++r) {
    if (a[r] == 0) continue;
    mpz_class spow = 1;
    for (std::size_t m = r; m <= order; ++m) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), m - 1, r - 1);
      out[m] += a[r] * binom * spow;
      spow *= shift;
    }
  }
  return out;
}

namespace {

PowerSeries linear_poly(const mpq_class& c0, const mpq_class& c1, std::size_t order) {
  PowerSeries s(order);
  s[0] = c0;
  if (order >= 1) s[1] = c1;
  return s;
}

mpq_class frac(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

// Prefactor series g0, g1, g2 of the residual
//   R(x) = g0 A(x) + g1 A(x/(1-x)) + g2 A(x/(1-2x)),
// obtained from the recurrence by dividing through by B(n) and multiplying
// by x.  The base ratios are B(n-1)/B(n) = (1/4)(1-x)^{-3/2} for B = u and
// (1/4)(1+x)(1-x)^{-1/2} for B = theta, and similarly with shift 2.
struct Prefactors {
  PowerSeries g0, g1, g2;
};

Prefactors residual_prefactors(SeriesBase base, std::size_t order) {
  PowerSeries one_plus_x = linear_poly(1, 1, order);
  PowerSeries f1 = linear_poly(frac(-5, 4), frac(1, 4), order);   // x(1-5n)/(4n) = (x-5)/4
  PowerSeries f2 = linear_poly(frac(1, 4), frac(-1, 8), order);   // -2x(1-2n)/(16n) = (2-x)/8
  if (base == SeriesBase::upper) {
    return {one_plus_x, ps_mul(f1, ps_binomial(frac(-3, 2), -1, order)),
            ps_mul(f2, ps_binomial(frac(-3, 2), -2, order))};
  }
  PowerSeries g1 = ps_mul(ps_mul(f1, one_plus_x), ps_binomial(frac(-1, 2), -1, order));
  PowerSeries g2 = ps_mul(ps_mul(ps_mul(f2, one_plus_x), ps_binomial(frac(-1, 2), -2, order)),
                          ps_binomial(-1, -1, order));
  return {one_plus_x, g1, g2};
}

}  // namespace

SeriesExpansion solve_expansion(SeriesBase base, unsigned p) {
  const std::size_t order = p + 1;  // equation x^(r+1) determines a_r
  Prefactors g = residual_prefactors(base, order);

  // T[r] = contribution of a_r to the residual.
  std::vector<PowerSeries> T;
  T.reserve(p + 1);
  for (std::size_t r = 0; r <= p; ++r) {
    PowerSeries xr = ps_monomial(r, order);
    PowerSeries t = ps_add(ps_mul(g.g0, xr), ps_add(ps_mul(g.g1, ps_compose_shift(xr, 1)),
                                                    ps_mul(g.g2, ps_compose_shift(xr, 2))));
    T.push_back(std::move(t));
  }

  if (T[0][0] != 0)
    throw SeriesConsistencyError("solve_expansion: x^0 residual is " + T[0][0].get_str() +
                                 ", expected exactly 0");
  if (T[0][1] != 0)
    throw SeriesConsistencyError("solve_expansion: x^1 residual does not vanish identically");
  for (std::size_t r = 1; r <= p; ++r)
    if (T[r][r] != 0)
      throw SeriesConsistencyError("solve_expansion: leading coefficient of a_" +
                                   std::to_string(r) + " does not vanish at order " +
                                   std::to_string(r));

  std::vector<mpq_class> a(p + 1);
  a[0] = 1;
  for (std::size_t m = 2; m <= order; ++m) {
    const mpq_class& pivot = T[m - 1][m];
    if (pivot == 0)
      throw SeriesConsistencyError("solve_expansion: degenerate equation at order " +
                                   std::to_string(m));
    mpq_class rhs = 0;
    for (std::size_t r = 0; r + 2 <= m; ++r) rhs += a[r] * T[r][m];
    a[m - 1] = -rhs / pivot;
  }

  // The solved residual must vanish through x^(p+1) coefficientwise.
  for (std::size_t m = 0; m <= order; ++m) {
    mpq_class res = 0;
    for (std::size_t r = 0; r <= p; ++r) res += a[r] * T[r][m];
    if (res != 0)
      throw SeriesConsistencyError("solve_expansion: residual of x^" + std::to_string(m) +
                                   " is " + res.get_str() + " after solve");
  }

  return {base, p, std::move(a)};
}

Interval refined_estimate(SeriesBase base, unsigned p, long n, mpfr_prec_t precision_bits) {
  if (n < 1) throw std::domain_error("refined_estimate: index must be >= 1");
  if (precision_bits < 64) throw std::domain_error("refined_estimate: precision must be >= 64 bits");
  SeriesExpansion e = solve_expansion(base, p);
  mpq_class poly = 0;
  mpq_class npow = 1;
  for (unsigned r = 0; r <= p; ++r) {
    poly += e.coeffs[r] / npow;
    npow *= n;
  }
  BoundKind kind = base == SeriesBase::upper ? BoundKind::upper_u : BoundKind::lower_theta;
  Interval b = eval_bound(kind, n, precision_bits + 32);
  return (b * Interval::point(poly, precision_bits + 32)).round_to(precision_bits);
}

DecayReport error_decay_check(CatalanTable& table, SeriesBase base, unsigned p,
                              const std::vector<long>& n_list) {
  if (n_list.size() < 2)
    throw std::invalid_argument("error_decay_check: need at least two indices for a slope");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 8) throw std::invalid_argument("error_decay_check: indices must be >= 8");
    if (i > 0 && n_list[i] <= n_list[i - 1])
      throw std::invalid_argument("error_decay_check: indices must be strictly ascending");
  }

  DecayReport report{base, p, {}, 0.0};
  for (long n : n_list) {
    mpfr_prec_t prec = default_precision_bits(n);
    Interval est = refined_estimate(base, p, n, prec);
    Interval s = Interval::point(table.sum(n), prec);
    Interval rel = (est - s).abs() / s;
    report.points.push_back({n, rel.mid_double()});
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(report.points.size());
  for (const auto& pt : report.points) {
    double x = std::log(static_cast<double>(pt.n));
    double y = std::log(pt.rel_error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  report.loglog_slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return report;
}

}  // namespace catsum
