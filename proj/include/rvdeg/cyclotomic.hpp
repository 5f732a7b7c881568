#pragma once

// Exact values in Z[zeta_n] as multisets of n-th roots of unity.

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "rvdeg/modp.hpp"

namespace rvdeg {

/// Value sum_j mult[j] * zeta_n^j.
///
/// For character values the multiplicities are the eigenvalue multiplicities
/// of the representing matrix, so they are nonnegative and sum to the degree.
struct CycloValue {
  std::uint64_t n = 1;
  std::vector<std::int64_t> mult;

  std::int64_t total() const { return std::accumulate(mult.begin(), mult.end(), std::int64_t{0}); }

  /// Complex conjugate: zeta^j -> zeta^-j.
  CycloValue conjugate() const {
    CycloValue r{n, std::vector<std::int64_t>(mult.size(), 0)};
    for (std::size_t j = 0; j < mult.size(); ++j) r.mult[(n - j) % n] = mult[j];
    return r;
  }

  friend bool operator==(const CycloValue&, const CycloValue&) = default;
};

/// Integer coefficients of the n-th cyclotomic polynomial, low-to-high.
inline const std::vector<std::int64_t>& cyclotomic_poly(std::uint64_t n) {
  static thread_local std::map<std::uint64_t, std::vector<std::int64_t>> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  // x^n - 1 divided by every Phi_d with d | n, d < n.
  std::vector<std::int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto& den = cyclotomic_poly(d);
    std::vector<std::int64_t> q(num.size() - den.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
      const std::int64_t f = num[i + den.size() - 1];  // den is monic
      q[i] = f;
      for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= f * den[j];
    }
    num = std::move(q);
  }
  return memo.emplace(n, std::move(num)).first->second;
}

/// Remainder of an integer polynomial modulo Phi_n; length deg Phi_n.
inline std::vector<std::int64_t> reduce_cyclotomic(std::vector<std::int64_t> poly, std::uint64_t n) {
  const auto& phi = cyclotomic_poly(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    const std::int64_t f = poly[i];
    if (f == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) poly[i - deg + j] -= f * phi[j];
  }
  poly.resize(deg, 0);
  return poly;
}

/// True iff the value is a rational (hence integer) number.
inline bool is_rational(const CycloValue& v) {
  const auto r = reduce_cyclotomic(v.mult, v.n);
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) return false;
  return true;
}

/// Equality as elements of Z[zeta] (multisets may differ for equal values).
inline bool same_value(const CycloValue& a, const CycloValue& b) {
  const std::uint64_t n = std::lcm(a.n, b.n);
  std::vector<std::int64_t> d(n, 0);
  for (std::size_t j = 0; j < a.mult.size(); ++j) d[j * (n / a.n)] += a.mult[j];
  for (std::size_t j = 0; j < b.mult.size(); ++j) d[j * (n / b.n)] -= b.mult[j];
  for (auto x : reduce_cyclotomic(std::move(d), n))
    if (x != 0) return false;
  return true;
}

/// Image in GF(p) under zeta_n -> root_e^(e/n).
inline modp::u64 reduce_value(const modp::FpContext& ctx, const CycloValue& v) {
  const modp::u64 z = ctx.root_of_order(v.n);
  modp::u64 acc = 0, zp = 1;
  for (auto m : v.mult) {
    acc = ctx.add(acc, ctx.mul(ctx.reduce(m), zp));
    zp = ctx.mul(zp, z);
  }
  return acc;
}

}  // namespace rvdeg
