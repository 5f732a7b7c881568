#pragma once

// Arithmetic, linear algebra and root finding over GF(p), p < 2^61.

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rvdeg/errors.hpp"

namespace rvdeg::modp {

using u64 = std::uint64_t;

inline u64 mulmod(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}
inline u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 negmod(u64 a, u64 p) { return a == 0 ? 0 : p - a; }

inline u64 powmod(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1u) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1u;
  }
  return r;
}

inline u64 invmod(u64 a, u64 p) {
  if (a % p == 0) throw StructuralError("inverse of zero mod " + std::to_string(p));
  return powmod(a, p - 2, p);
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1u;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> f;
  for (u64 q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    f.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) f.push_back(n);
  return f;
}

/// Smallest generator of GF(p)^*.
inline u64 primitive_root(u64 p) {
  if (p == 2) return 1;
  const auto fs = prime_factors(p - 1);
  for (u64 g = 2;; ++g) {
    if (std::all_of(fs.begin(), fs.end(), [&](u64 q) { return powmod(g, (p - 1) / q, p) != 1; })) return g;
  }
}

/// Prime field together with a fixed primitive e-th root of unity.
struct FpContext {
  u64 p = 2;
  u64 e = 1;
  u64 root_e = 1;

  u64 add(u64 a, u64 b) const { return addmod(a, b, p); }
  u64 sub(u64 a, u64 b) const { return submod(a, b, p); }
  u64 mul(u64 a, u64 b) const { return mulmod(a, b, p); }
  u64 pow(u64 a, u64 k) const { return powmod(a, k, p); }
  u64 inv(u64 a) const { return invmod(a, p); }
  u64 reduce(std::int64_t v) const {
    auto r = static_cast<std::int64_t>(v % static_cast<std::int64_t>(p));
    return static_cast<u64>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  }
  /// Primitive n-th root of unity, n | e.
  u64 root_of_order(u64 n) const { return pow(root_e, e / n); }
};

/// Context for a given prime. Throws StructuralError unless p is prime and p = 1 mod e.
inline FpContext make_context(u64 p, u64 e) {
  if (!is_prime(p)) throw StructuralError(std::to_string(p) + " is not prime");
  if (e == 0 || (p - 1) % e != 0)
    throw StructuralError("prime " + std::to_string(p) + " is not 1 mod " + std::to_string(e));
  if (p >= (u64{1} << 61)) throw StructuralError("prime exceeds 2^61");
  return FpContext{p, e, powmod(primitive_root(p), (p - 1) / e, p)};
}

/// Smallest prime p > order with p = 1 mod exponent.
inline FpContext select_prime(u64 order, u64 exponent) {
  u64 p = 1 + exponent * (order / exponent);
  while (p <= order) p += exponent;
  while (!is_prime(p)) p += exponent;
  return make_context(p, exponent);
}

/// Dense row-major matrix with entries in [0, p).
struct FpMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<u64> data;

  FpMatrix() = default;
  FpMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  static FpMatrix identity(std::size_t n) {
    FpMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  u64& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  u64 operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  std::span<const u64> row(std::size_t r) const { return {data.data() + r * cols, cols}; }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
};

inline FpMatrix multiply(const FpMatrix& a, const FpMatrix& b, u64 p) {
  if (a.cols != b.rows) throw StructuralError("matrix shape mismatch");
  FpMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t l = 0; l < a.cols; ++l) {
      const u64 x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) = addmod(c(i, j), mulmod(x, b(l, j), p), p);
    }
  return c;
}

inline std::vector<u64> apply(const FpMatrix& m, std::span<const u64> v, u64 p) {
  std::vector<u64> r(m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    u64 acc = 0;
    for (std::size_t j = 0; j < m.cols; ++j) acc = addmod(acc, mulmod(m(i, j), v[j], p), p);
    r[i] = acc;
  }
  return r;
}

/// In-place reduced row echelon form; returns pivot columns (leftmost first).
inline std::vector<std::size_t> rref(FpMatrix& m, u64 p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(r, j), m(piv, j));
    const u64 s = invmod(m(r, c), p);
    for (std::size_t j = 0; j < m.cols; ++j) m(r, j) = mulmod(m(r, j), s, p);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const u64 f = m(i, c);
      for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = submod(m(i, j), mulmod(f, m(r, j), p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Basis of { v : m v = 0 }, one vector per free column (ascending), free entry 1.
inline std::vector<std::vector<u64>> nullspace(const FpMatrix& m, u64 p) {
  FpMatrix a = m;
  const auto pivots = rref(a, p);
  std::vector<bool> is_pivot(a.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<u64>> basis;
  for (std::size_t f = 0; f < a.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<u64> v(a.cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = negmod(a(i, f), p);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Polynomial with coefficients low-to-high; the zero polynomial has no coefficients.
struct FpPoly {
  std::vector<u64> c;

  FpPoly() = default;
  explicit FpPoly(std::vector<u64> coeffs) : c(std::move(coeffs)) { trim(); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const noexcept { return c.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c.size()) - 1; }
  u64 lead() const { return c.back(); }

  friend bool operator==(const FpPoly&, const FpPoly&) = default;
};

namespace poly {

inline FpPoly sub(const FpPoly& a, const FpPoly& b, u64 p) {
  std::vector<u64> r(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] = submod(r[i], b.c[i], p);
  return FpPoly(std::move(r));
}

inline FpPoly mul(const FpPoly& a, const FpPoly& b, u64 p) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<u64> r(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] = addmod(r[i + j], mulmod(a.c[i], b.c[j], p), p);
  return FpPoly(std::move(r));
}

/// Quotient and remainder; b nonzero.
inline std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b, u64 p) {
  if (b.is_zero()) throw StructuralError("polynomial division by zero");
  if (a.degree() < b.degree()) return {FpPoly{}, a};
  std::vector<u64> r = a.c;
  std::vector<u64> q(a.c.size() - b.c.size() + 1, 0);
  const u64 li = invmod(b.lead(), p);
  for (std::size_t i = q.size(); i-- > 0;) {
    const u64 f = mulmod(r[i + b.c.size() - 1], li, p);
    q[i] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] = submod(r[i + j], mulmod(f, b.c[j], p), p);
  }
  return {FpPoly(std::move(q)), FpPoly(std::move(r))};
}

inline FpPoly rem(const FpPoly& a, const FpPoly& b, u64 p) { return divmod(a, b, p).second; }

inline FpPoly monic(FpPoly a, u64 p) {
  if (a.is_zero()) return a;
  const u64 li = invmod(a.lead(), p);
  for (auto& x : a.c) x = mulmod(x, li, p);
  return a;
}

inline FpPoly gcd(FpPoly a, FpPoly b, u64 p) {
  while (!b.is_zero()) {
    FpPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), p);
}

inline FpPoly powmod(FpPoly base, u64 e, const FpPoly& m, u64 p) {
  FpPoly r({1});
  base = rem(base, m, p);
  while (e) {
    if (e & 1u) r = rem(mul(r, base, p), m, p);
    base = rem(mul(base, base, p), m, p);
    e >>= 1u;
  }
  return rem(r, m, p);
}

inline u64 eval(const FpPoly& f, u64 x, u64 p) {
  u64 acc = 0;
  for (std::size_t i = f.c.size(); i-- > 0;) acc = addmod(mulmod(acc, x, p), f.c[i], p);
  return acc;
}

}  // namespace poly

/// det(xI - m), by Hessenberg reduction.
inline FpPoly char_poly(const FpMatrix& m, u64 p) {
  if (m.rows != m.cols) throw StructuralError("char_poly of a non-square matrix");
  const std::size_t n = m.rows;
  FpMatrix h = m;
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h(i, j) == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(i, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, j + 1));
    }
    const u64 pinv = invmod(h(j + 1, j), p);
    for (std::size_t r = j + 2; r < n; ++r) {
      const u64 u = mulmod(h(r, j), pinv, p);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h(r, c) = submod(h(r, c), mulmod(u, h(j + 1, c), p), p);
      for (std::size_t c = 0; c < n; ++c) h(c, j + 1) = addmod(h(c, j + 1), mulmod(u, h(c, r), p), p);
    }
  }
  std::vector<FpPoly> ps(n + 1);
  ps[0] = FpPoly({1});
  for (std::size_t k = 1; k <= n; ++k) {
    FpPoly acc = poly::mul(FpPoly({negmod(h(k - 1, k - 1), p), 1}), ps[k - 1], p);
    u64 t = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      t = mulmod(t, h(i, i - 1), p);
      const u64 f = mulmod(h(i - 1, k - 1), t, p);
      if (f != 0) acc = poly::sub(acc, poly::mul(FpPoly({f}), ps[i - 1], p), p);
    }
    ps[k] = std::move(acc);
  }
  return ps[n];
}

namespace detail {

// Splits a squarefree monic polynomial whose roots all lie in GF(p) into its roots.
inline void split_linear(const FpPoly& f, u64 p, std::mt19937_64& rng, std::vector<u64>& out) {
  if (f.degree() <= 0) return;
  if (f.degree() == 1) {
    out.push_back(negmod(mulmod(f.c[0], invmod(f.c[1], p), p), p));
    return;
  }
  std::uniform_int_distribution<u64> dist(0, p - 1);
  for (;;) {
    FpPoly shifted({dist(rng), 1});
    FpPoly w = poly::powmod(shifted, (p - 1) / 2, f, p);
    FpPoly d = poly::gcd(f, poly::sub(w, FpPoly({1}), p), p);
    if (d.degree() > 0 && d.degree() < f.degree()) {
      split_linear(d, p, rng, out);
      split_linear(poly::monic(poly::divmod(f, d, p).first, p), p, rng, out);
      return;
    }
  }
}

}  // namespace detail

/// Roots of f in GF(p) with multiplicities, ascending. Deterministic in `seed`.
inline std::vector<std::pair<u64, unsigned>> roots(const FpPoly& f, u64 p, std::uint64_t seed) {
  if (f.is_zero()) throw StructuralError("roots of the zero polynomial");
  std::vector<u64> distinct;
  const FpPoly fm = poly::monic(f, p);
  if (p == 2) {
    for (u64 x = 0; x < 2; ++x)
      if (poly::eval(fm, x, p) == 0) distinct.push_back(x);
  } else if (fm.degree() > 0) {
    const FpPoly x({0, 1});
    FpPoly xp = poly::powmod(x, p, fm, p);
    FpPoly g = poly::gcd(fm, poly::sub(xp, x, p), p);
    std::mt19937_64 rng(seed);
    detail::split_linear(g, p, rng, distinct);
  }
  std::sort(distinct.begin(), distinct.end());
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 r : distinct) {
    unsigned mult = 0;
    FpPoly rest = fm;
    const FpPoly lin({negmod(r, p), 1});
    for (;;) {
      auto [q, rm] = poly::divmod(rest, lin, p);
      if (!rm.is_zero()) break;
      ++mult;
      rest = std::move(q);
    }
    out.emplace_back(r, mult);
  }
  return out;
}

inline bool commutes(const FpMatrix& a, const FpMatrix& b, u64 p) {
  return multiply(a, b, p) == multiply(b, a, p);
}

/// Simultaneous eigenvectors of pairwise commuting, simultaneously diagonalizable matrices.
///
/// Invariant subspaces (kept as row-reduced bases) are split against each
/// matrix in turn by the roots of the restricted characteristic polynomial.
/// Returns exactly `dim` vectors, each in row-reduced form (first nonzero 1).
inline std::vector<std::vector<u64>> common_eigenbasis(const std::vector<FpMatrix>& mats, u64 p,
                                                       std::uint64_t seed) {
  if (mats.empty()) throw StructuralError("common_eigenbasis needs at least one matrix");
  const std::size_t n = mats.front().rows;
  for (const auto& m : mats)
    if (m.rows != n || m.cols != n) throw StructuralError("common_eigenbasis: shape mismatch");

  constexpr std::size_t kExactCommuteCheck = 48;
  if (n <= kExactCommuteCheck) {
    for (std::size_t i = 0; i < mats.size(); ++i)
      for (std::size_t j = i + 1; j < mats.size(); ++j)
        if (!commutes(mats[i], mats[j], p)) throw StructuralError("common_eigenbasis: matrices do not commute");
  } else {
    // Freivalds-style probe: each false pass has probability at most 1/p.
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<u64> dist(0, p - 1);
    for (int probe = 0; probe < 2; ++probe) {
      std::vector<u64> v(n);
      for (auto& x : v) x = dist(rng);
      std::vector<std::vector<u64>> mv;
      for (const auto& m : mats) mv.push_back(apply(m, v, p));
      for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i + 1; j < mats.size(); ++j)
          if (apply(mats[i], mv[j], p) != apply(mats[j], mv[i], p))
            throw StructuralError("common_eigenbasis: matrices do not commute");
    }
  }

  struct Subspace {
    FpMatrix basis;  // rows, row-reduced
    std::vector<std::size_t> pivots;
  };
  auto make_subspace = [&](FpMatrix rows) {
    auto piv = rref(rows, p);
    return Subspace{std::move(rows), std::move(piv)};
  };

  std::vector<Subspace> spaces;
  spaces.push_back(make_subspace(FpMatrix::identity(n)));
  std::uint64_t call = 0;
  for (const auto& m : mats) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Subspace& s) { return s.basis.rows == 1; })) break;
    std::vector<Subspace> next;
    for (auto& s : spaces) {
      const std::size_t d = s.basis.rows;
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      FpMatrix restricted(d, d);
      for (std::size_t i = 0; i < d; ++i) {
        const auto img = apply(m, s.basis.row(i), p);
        for (std::size_t j = 0; j < d; ++j) restricted(j, i) = img[s.pivots[j]];
      }
      const auto rts = roots(char_poly(restricted, p), p, seed + call++);
      if (rts.size() == 1 && rts.front().second == d) {
        next.push_back(std::move(s));
        continue;
      }
      std::size_t total = 0;
      for (auto [lambda, mult] : rts) {
        FpMatrix shifted = restricted;
        for (std::size_t i = 0; i < d; ++i) shifted(i, i) = submod(shifted(i, i), lambda, p);
        const auto coords = nullspace(shifted, p);
        if (coords.size() != mult) throw InternalError("common_eigenbasis: matrix is not diagonalizable");
        FpMatrix rows(coords.size(), n);
        for (std::size_t r = 0; r < coords.size(); ++r)
          for (std::size_t j = 0; j < d; ++j) {
            if (coords[r][j] == 0) continue;
            for (std::size_t c = 0; c < n; ++c)
              rows(r, c) = addmod(rows(r, c), mulmod(coords[r][j], s.basis(j, c), p), p);
          }
        total += coords.size();
        next.push_back(make_subspace(std::move(rows)));
      }
      if (total != d) throw InternalError("common_eigenbasis: characteristic polynomial does not split");
    }
    spaces = std::move(next);
  }
  std::vector<std::vector<u64>> out;
  for (const auto& s : spaces) {
    if (s.basis.rows != 1) throw InternalError("common_eigenbasis: subspaces did not split to dimension 1");
    out.emplace_back(s.basis.row(0).begin(), s.basis.row(0).end());
  }
  return out;
}

inline std::vector<std::pair<u64, unsigned>> roots(const FpPoly& f, const FpContext& ctx, std::uint64_t seed) {
  return roots(f, ctx.p, seed);
}

inline std::vector<std::vector<u64>> common_eigenbasis(const std::vector<FpMatrix>& mats, const FpContext& ctx,
                                                       std::uint64_t seed) {
  return common_eigenbasis(mats, ctx.p, seed);
}

}  // namespace rvdeg::modp
