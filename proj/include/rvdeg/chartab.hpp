#pragma once

// Dixon-Schneider character tables over GF(p), with exact cyclotomic lifting.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rvdeg/cyclotomic.hpp"
#include "rvdeg/errors.hpp"
#include "rvdeg/modp.hpp"
#include "rvdeg/permcore.hpp"

namespace rvdeg {

using modp::u64;

inline constexpr std::uint64_t kDefaultSeed = 0x5eed;

/// Character table reduced mod p. Row r is an irreducible character, column c a class.
struct ModPTable {
  modp::FpContext ctx;
  std::size_t k = 0;
  std::uint64_t order = 1;
  std::vector<std::vector<u64>> values;
  std::vector<std::uint64_t> degrees;
  std::vector<bool> real_flags;
  std::vector<int> indicators;

  std::size_t rows() const noexcept { return values.size(); }
};

/// Structure constants a_ijk for fixed i: entry (j, k) = #{x in C_i : x^-1 z_k in C_j}.
inline std::vector<std::vector<std::uint64_t>> class_matrix_counts(const ClassData& cd, const GroupElements& g,
                                                                   ClassId i) {
  const std::size_t k = cd.count();
  std::vector<std::vector<std::uint64_t>> a(k, std::vector<std::uint64_t>(k, 0));
  for (ClassId c = 0; c < k; ++c) {
    const ElemId z = cd.reps[c];
    for (ElemId x : cd.classes[i]) ++a[cd.class_of[g.mul(g.inv(x), z)]][c];
  }
  return a;
}

inline modp::FpMatrix class_matrix(const ClassData& cd, const GroupElements& g, ClassId i, u64 p) {
  const auto a = class_matrix_counts(cd, g, i);
  modp::FpMatrix m(cd.count(), cd.count());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) m(r, c) = a[r][c] % p;
  return m;
}

/// nu(chi) = |G|^-1 sum_k |C_k| chi(rep_k^2), matched against {0, 1, -1}.
inline int fs_indicator(const ModPTable& t, const ClassData& cd, std::size_t row) {
  const auto& ctx = t.ctx;
  u64 acc = 0;
  for (ClassId c = 0; c < t.k; ++c)
    acc = ctx.add(acc, ctx.mul(cd.sizes[c] % ctx.p, t.values[row][cd.power_class(c, 2)]));
  const u64 nu = ctx.mul(acc, ctx.inv(t.order % ctx.p));
  if (nu == 1) return 1;
  if (nu == 0) return 0;
  if (nu == ctx.p - 1) return -1;
  throw InternalError("Frobenius-Schur indicator of row " + std::to_string(row) + " is not in {-1, 0, 1}");
}

namespace detail {

inline std::uint64_t exact_isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline void finish_table(ModPTable& t, const ClassData& cd) {
  t.real_flags.assign(t.rows(), true);
  t.indicators.assign(t.rows(), 0);
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (ClassId c = 0; c < t.k; ++c)
      if (t.values[r][cd.inv_map[c]] != t.values[r][c]) t.real_flags[r] = false;
    t.indicators[r] = fs_indicator(t, cd, r);
  }
}

}  // namespace detail

/// Chooses the prime: the override when given (validated), else select_prime.
inline modp::FpContext table_context(std::uint64_t order, std::uint64_t exponent,
                                     std::optional<u64> prime_override) {
  if (!prime_override) return modp::select_prime(order, exponent);
  if (*prime_override <= order)
    throw StructuralError("prime override " + std::to_string(*prime_override) + " must exceed |G| = " +
                          std::to_string(order));
  return modp::make_context(*prime_override, exponent);
}

/// Dixon-Schneider: common eigenvectors of the class matrices give the central
/// characters; degrees follow from d^2 = |G| / sum_k w(k) w(k') / |C_k|.
inline ModPTable compute_table(const GroupElements& g, const ClassData& cd, std::uint64_t seed = kDefaultSeed,
                               std::optional<u64> prime_override = std::nullopt) {
  ModPTable t;
  t.ctx = table_context(g.order(), cd.exponent, prime_override);
  t.k = cd.count();
  t.order = g.order();
  const auto& ctx = t.ctx;
  const u64 p = ctx.p;

  std::vector<std::vector<u64>> vecs;
  if (t.k == 1) {
    vecs.push_back({1});
  } else {
    std::vector<modp::FpMatrix> mats;
    for (ClassId i = 1; i < t.k; ++i) mats.push_back(class_matrix(cd, g, i, p));
    vecs = modp::common_eigenbasis(mats, ctx, seed);
  }

  std::vector<u64> inv_size(t.k);
  for (ClassId c = 0; c < t.k; ++c) inv_size[c] = ctx.inv(cd.sizes[c] % p);

  for (auto& v : vecs) {
    if (v[0] == 0) throw InternalError("central character vanishes at the identity class");
    const u64 s = ctx.inv(v[0]);
    for (auto& x : v) x = ctx.mul(x, s);
    u64 norm = 0;
    for (ClassId c = 0; c < t.k; ++c)
      norm = ctx.add(norm, ctx.mul(ctx.mul(v[c], v[cd.inv_map[c]]), inv_size[c]));
    if (norm == 0) throw InternalError("degenerate central character norm");
    const u64 d2 = ctx.mul(g.order() % p, ctx.inv(norm));
    const std::uint64_t d = detail::exact_isqrt(d2);
    if (d2 > g.order() || d * d != d2 || d == 0)
      throw InternalError("degree lift failed: d^2 = " + std::to_string(d2) + " mod " + std::to_string(p));
    std::vector<u64> row(t.k);
    for (ClassId c = 0; c < t.k; ++c) row[c] = ctx.mul(ctx.mul(d % p, v[c]), inv_size[c]);
    t.degrees.push_back(d);
    t.values.push_back(std::move(row));
  }

  std::vector<std::size_t> perm(t.rows());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (t.degrees[a] != t.degrees[b]) return t.degrees[a] < t.degrees[b];
    return t.values[a] < t.values[b];
  });
  ModPTable sorted = t;
  for (std::size_t r = 0; r < perm.size(); ++r) {
    sorted.degrees[r] = t.degrees[perm[r]];
    sorted.values[r] = t.values[perm[r]];
  }
  t = std::move(sorted);

  std::uint64_t sum_sq = 0;
  for (auto d : t.degrees) sum_sq += d * d;
  if (sum_sq != g.order()) throw InternalError("sum of squared degrees differs from |G|");
  detail::finish_table(t, cd);
  return t;
}

/// Eigenvalue multiplicities of chi at a class, by discrete Fourier over the powers of its representative.
inline CycloValue lift_value(const ModPTable& t, const ClassData& cd, std::size_t row, ClassId cls) {
  const auto& ctx = t.ctx;
  const std::uint64_t n = cd.rep_orders[cls];
  const u64 z = ctx.root_of_order(n);
  std::vector<u64> zp(n);
  zp[0] = 1;
  for (std::uint64_t i = 1; i < n; ++i) zp[i] = ctx.mul(zp[i - 1], z);
  const u64 ninv = ctx.inv(n % ctx.p);
  const std::uint64_t d = t.degrees[row];
  CycloValue v{n, std::vector<std::int64_t>(n, 0)};
  for (std::uint64_t j = 0; j < n; ++j) {
    u64 acc = 0;
    for (std::uint64_t s = 0; s < n; ++s) {
      const u64 chi = t.values[row][cd.power_classes[cls][s]];
      acc = ctx.add(acc, ctx.mul(chi, zp[(n - (j * s) % n) % n]));
    }
    acc = ctx.mul(acc, ninv);
    if (acc > d)
      throw InternalError("lifted multiplicity out of range at row " + std::to_string(row) + ", class " +
                          std::to_string(cls));
    v.mult[j] = static_cast<std::int64_t>(acc);
  }
  if (static_cast<std::uint64_t>(v.total()) != d)
    throw InternalError("lifted multiplicities do not sum to the degree");
  return v;
}

using ExactRow = std::vector<CycloValue>;

inline ExactRow exact_row(const ModPTable& t, const ClassData& cd, std::size_t row) {
  ExactRow r;
  for (ClassId c = 0; c < t.k; ++c) r.push_back(lift_value(t, cd, row, c));
  return r;
}

/// Every row lifted.
struct ExactTable {
  std::vector<ExactRow> rows;
};

inline ExactTable exact_table(const ModPTable& t, const ClassData& cd) {
  ExactTable e;
  for (std::size_t r = 0; r < t.rows(); ++r) e.rows.push_back(exact_row(t, cd, r));
  return e;
}

inline bool is_rational_row(const ExactRow& row) {
  return std::all_of(row.begin(), row.end(), [](const CycloValue& v) { return is_rational(v); });
}

/// Realness read off the lift: multiplicities symmetric under j -> n - j at every class.
inline bool is_real_row(const ExactRow& row) {
  return std::all_of(row.begin(), row.end(), [](const CycloValue& v) { return v.conjugate() == v; });
}

/// Classes on which chi takes the value chi(1).
inline std::vector<ClassId> kernel_of(const ModPTable& t, const ClassData& cd, std::size_t row) {
  std::vector<ClassId> ker;
  const auto d = static_cast<std::int64_t>(t.degrees[row]);
  for (ClassId c = 0; c < t.k; ++c)
    if (lift_value(t, cd, row, c).mult[0] == d) ker.push_back(c);
  return ker;
}

inline std::vector<ClassId> kernel_of(const ExactRow& row, std::int64_t degree) {
  std::vector<ClassId> ker;
  for (ClassId c = 0; c < row.size(); ++c)
    if (row[c].mult[0] == degree) ker.push_back(c);
  return ker;
}

/// Degrees of the real rows. `set` and `odd` are sorted and deduplicated;
/// `odd` keeps the trivial degree 1.
struct RealDegrees {
  std::vector<std::uint64_t> multiset;
  std::vector<std::uint64_t> set;
  std::vector<std::uint64_t> odd;
};

inline RealDegrees real_degree_set(const ModPTable& t) {
  RealDegrees r;
  for (std::size_t i = 0; i < t.rows(); ++i)
    if (t.real_flags[i]) r.multiset.push_back(t.degrees[i]);
  r.set = r.multiset;
  r.set.erase(std::unique(r.set.begin(), r.set.end()), r.set.end());
  for (auto d : r.set)
    if (d % 2 == 1) r.odd.push_back(d);
  return r;
}

struct OrthogonalityResult {
  bool ok = true;
  std::string detail;
};

/// Row and column orthogonality mod p.
inline OrthogonalityResult verify_orthogonality(const ModPTable& t, const ClassData& cd) {
  const auto& ctx = t.ctx;
  const u64 order = t.order % ctx.p;
  for (std::size_t a = 0; a < t.rows(); ++a)
    for (std::size_t b = 0; b < t.rows(); ++b) {
      u64 acc = 0;
      for (ClassId c = 0; c < t.k; ++c)
        acc = ctx.add(acc, ctx.mul(cd.sizes[c] % ctx.p, ctx.mul(t.values[a][c], t.values[b][cd.inv_map[c]])));
      if (acc != (a == b ? order : 0))
        return {false, "row orthogonality fails for rows (" + std::to_string(a) + ", " + std::to_string(b) + ")"};
    }
  for (ClassId c1 = 0; c1 < t.k; ++c1)
    for (ClassId c2 = 0; c2 < t.k; ++c2) {
      u64 acc = 0;
      for (std::size_t r = 0; r < t.rows(); ++r)
        acc = ctx.add(acc, ctx.mul(t.values[r][c1], t.values[r][cd.inv_map[c2]]));
      const u64 want = c1 == c2 ? ctx.mul(order, ctx.inv(cd.sizes[c1] % ctx.p)) : 0;
      if (acc != want)
        return {false,
                "column orthogonality fails for classes (" + std::to_string(c1) + ", " + std::to_string(c2) + ")"};
    }
  return {};
}

/// First orthogonality over Z[zeta_e]: sum_k |C_k| chi(k) conj(psi(k)) = |G| delta.
inline OrthogonalityResult verify_exact_orthogonality(const ExactTable& e, const ClassData& cd,
                                                      std::uint64_t order) {
  const std::uint64_t ex = cd.exponent;
  for (std::size_t a = 0; a < e.rows.size(); ++a)
    for (std::size_t b = a; b < e.rows.size(); ++b) {
      std::vector<std::int64_t> acc(ex, 0);
      for (ClassId c = 0; c < cd.count(); ++c) {
        const auto& x = e.rows[a][c];
        const auto& y = e.rows[b][c];
        const std::uint64_t n = x.n, step = ex / n;
        const auto w = static_cast<std::int64_t>(cd.sizes[c]);
        for (std::uint64_t i = 0; i < n; ++i) {
          if (x.mult[i] == 0) continue;
          for (std::uint64_t j = 0; j < n; ++j) {
            if (y.mult[j] == 0) continue;
            // zeta^i * conj(zeta^j) = zeta^(i - j)
            acc[((i + n - j) % n) * step] += w * x.mult[i] * y.mult[j];
          }
        }
      }
      auto r = reduce_cyclotomic(std::move(acc), ex);
      const auto want = static_cast<std::int64_t>(a == b ? order : 0);
      bool ok = r[0] == want;
      for (std::size_t i = 1; i < r.size(); ++i) ok = ok && r[i] == 0;
      if (!ok)
        return {false,
                "exact row orthogonality fails for rows (" + std::to_string(a) + ", " + std::to_string(b) + ")"};
    }
  return {};
}

/// Text dump: header line, then one line per row:
/// `degree indicator real v_0 ... v_{k-1}`, optionally followed by
/// `exact <row> m,m,... m,m,...` lines (one comma-separated vector per class).
inline std::string format_table(const ModPTable& t, const ExactTable* exact = nullptr) {
  std::ostringstream os;
  os << "p=" << t.ctx.p << ", e=" << t.ctx.e << ", k=" << t.k << ", |G|=" << t.order << '\n';
  for (std::size_t r = 0; r < t.rows(); ++r) {
    os << t.degrees[r] << ' ' << (t.indicators[r] > 0 ? "+1" : t.indicators[r] < 0 ? "-1" : "0") << ' '
       << (t.real_flags[r] ? 1 : 0);
    for (auto v : t.values[r]) os << ' ' << v;
    os << '\n';
  }
  if (exact) {
    for (std::size_t r = 0; r < exact->rows.size(); ++r) {
      os << "exact " << r;
      for (const auto& v : exact->rows[r]) {
        os << ' ';
        for (std::size_t j = 0; j < v.mult.size(); ++j) os << (j ? "," : "") << v.mult[j];
      }
      os << '\n';
    }
  }
  return os.str();
}

/// Inverse of format_table for the mod-p part; exact lines are ignored.
/// Realness and indicators are read back as written.
inline ModPTable parse_table(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  ModPTable t;
  auto fail = [&](const std::string& what) { throw ParseError("table dump: " + what, lineno); };
  if (!std::getline(is, line)) fail("empty dump");
  ++lineno;
  unsigned long long p = 0, e = 0, k = 0, order = 0;
  if (std::sscanf(line.c_str(), "p=%llu, e=%llu, k=%llu, |G|=%llu", &p, &e, &k, &order) != 4) fail("bad header");
  t.ctx = modp::make_context(p, e);
  t.k = k;
  t.order = order;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line.rfind("exact", 0) == 0) continue;
    std::istringstream ls(line);
    std::uint64_t d = 0;
    std::string ind;
    int real = 0;
    if (!(ls >> d >> ind >> real)) fail("bad row");
    std::vector<u64> vals(k);
    for (auto& v : vals)
      if (!(ls >> v) || v >= p) fail("bad row value");
    t.degrees.push_back(d);
    t.indicators.push_back(ind == "+1" ? 1 : ind == "-1" ? -1 : 0);
    t.real_flags.push_back(real != 0);
    t.values.push_back(std::move(vals));
  }
  if (t.rows() != k) fail("row count differs from k");
  return t;
}

}  // namespace rvdeg
