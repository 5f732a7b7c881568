#pragma once

// Named permutation groups and the default verification corpus.

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rvdeg/errors.hpp"
#include "rvdeg/modp.hpp"
#include "rvdeg/permcore.hpp"

namespace rvdeg::catalog {

/// GF(q) for q prime or q in {4, 8, 9}, elements encoded as base-p digit
/// strings of polynomial coefficients (x^3+x+1 over GF(2) for q = 8,
/// x^2+x+1 for q = 4, x^2+1 over GF(3) for q = 9).
class SmallField {
 public:
  explicit SmallField(unsigned q) : q_(q) {
    std::vector<unsigned> irreducible;  // monic, low-to-high
    if (q == 4) {
      p_ = 2, f_ = 2, irreducible = {1, 1, 1};
    } else if (q == 8) {
      p_ = 2, f_ = 3, irreducible = {1, 1, 0, 1};
    } else if (q == 9) {
      p_ = 3, f_ = 2, irreducible = {1, 0, 1};
    } else if (q >= 2 && q < 128 && modp::is_prime(q)) {
      p_ = q, f_ = 1;
    } else {
      throw UnknownGroupError("unsupported field size " + std::to_string(q));
    }
    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) {
        auto da = digits(a), db = digits(b);
        std::vector<unsigned> sum(f_), prod(2 * f_ - 1, 0);
        for (unsigned i = 0; i < f_; ++i) sum[i] = (da[i] + db[i]) % p_;
        for (unsigned i = 0; i < f_; ++i)
          for (unsigned j = 0; j < f_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        for (std::size_t i = prod.size(); i-- > f_;) {
          const unsigned c = prod[i];
          if (c == 0) continue;
          for (unsigned j = 0; j <= f_; ++j)
            prod[i - f_ + j] = (prod[i - f_ + j] + (p_ - c) * irreducible[j]) % p_;
        }
        prod.resize(f_);
        add_[a * q + b] = encode(sum);
        mul_[a * q + b] = encode(prod);
      }
  }

  unsigned size() const noexcept { return q_; }
  unsigned characteristic() const noexcept { return p_; }
  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const {
    for (unsigned b = 0; b < q_; ++b)
      if (add(a, b) == 0) return b;
    return 0;
  }
  unsigned inv(unsigned a) const {
    for (unsigned b = 1; b < q_; ++b)
      if (mul(a, b) == 1) return b;
    throw StructuralError("inverse of zero in GF(" + std::to_string(q_) + ")");
  }
  /// x^i, i < degree: an additive basis over the prime field.
  std::vector<unsigned> basis() const {
    std::vector<unsigned> b;
    unsigned v = 1;
    for (unsigned i = 0; i < f_; ++i, v *= p_) b.push_back(v);
    return b;
  }

 private:
  std::vector<unsigned> digits(unsigned a) const {
    std::vector<unsigned> d(f_);
    for (unsigned i = 0; i < f_; ++i, a /= p_) d[i] = a % p_;
    return d;
  }
  unsigned encode(const std::vector<unsigned>& d) const {
    unsigned v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
    return v;
  }

  unsigned q_, p_ = 0, f_ = 0;
  std::vector<unsigned> add_, mul_;
};

using Mat2 = std::array<unsigned, 4>;  // row-major a b / c d

/// Elementary transvections generating SL2(q).
inline std::vector<Mat2> sl2_generators(const SmallField& f) {
  std::vector<Mat2> gens;
  for (unsigned b : f.basis()) {
    gens.push_back({1, b, 0, 1});
    gens.push_back({1, 0, b, 1});
  }
  return gens;
}

inline GroupSpec symmetric(unsigned n) {
  if (n < 2) return trivial_group_spec("S" + std::to_string(n));
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), Point{0});
  return {n, {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {cyc})}, "S" + std::to_string(n)};
}

inline GroupSpec alternating(unsigned n) {
  if (n < 3) return trivial_group_spec("A" + std::to_string(n));
  std::vector<Point> cyc;
  for (Point i = (n % 2 == 1 ? 0 : 1); i < n; ++i) cyc.push_back(i);
  return {n, {Permutation::from_cycles(n, {{0, 1, 2}}), Permutation::from_cycles(n, {cyc})},
          "A" + std::to_string(n)};
}

inline GroupSpec cyclic(unsigned n) {
  if (n < 2) return trivial_group_spec("C1");
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), Point{0});
  return {n, {Permutation::from_cycles(n, {cyc})}, "C" + std::to_string(n)};
}

/// Dihedral group of order `order` (>= 6) on order/2 points.
inline GroupSpec dihedral(unsigned order) {
  if (order < 6 || order % 2) throw UnknownGroupError("dihedral order must be even and >= 6");
  const unsigned n = order / 2;
  std::vector<Point> rot(n), refl(n);
  for (unsigned i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return {n, {Permutation(rot), Permutation(refl)}, "D" + std::to_string(order)};
}

/// Q8 in its regular representation; point 2b + s is the unit (-1)^s e_b, e = (1, i, j, k).
inline GroupSpec quaternion() {
  // e_a * e_b = sign * e_index
  static constexpr int kIndex[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto left_mult = [](int a) {
    std::vector<Point> img(8);
    for (int b = 0; b < 4; ++b)
      for (int s = 0; s < 2; ++s) {
        const int sign = kSign[a][b] * (s ? -1 : 1);
        img[2 * b + s] = static_cast<Point>(2 * kIndex[a][b] + (sign < 0 ? 1 : 0));
      }
    return Permutation(img);
  };
  return {8, {left_mult(1), left_mult(2)}, "Q8"};
}

/// PSL2(q) acting on the q + 1 points of the projective line; point q is infinity.
inline GroupSpec psl2(unsigned q) {
  const SmallField f(q);
  auto act = [&](const Mat2& m) {
    std::vector<Point> img(q + 1);
    const auto [a, b, c, d] = m;
    img[q] = c == 0 ? q : f.mul(a, f.inv(c));
    for (unsigned z = 0; z < q; ++z) {
      const unsigned den = f.add(f.mul(c, z), d);
      img[z] = den == 0 ? q : f.mul(f.add(f.mul(a, z), b), f.inv(den));
    }
    return Permutation(img);
  };
  GroupSpec s{q + 1, {}, "PSL2_" + std::to_string(q)};
  for (const auto& m : sl2_generators(f)) s.generators.push_back(act(m));
  return s;
}

/// SL2(q) acting on the q^2 - 1 nonzero column vectors; vector (x, y) is point x*q + y - 1.
inline GroupSpec sl2(unsigned q) {
  const SmallField f(q);
  GroupSpec s{q * q - 1, {}, "SL2_" + std::to_string(q)};
  for (const auto& m : sl2_generators(f)) {
    std::vector<Point> img(q * q - 1);
    for (unsigned v = 1; v < q * q; ++v) {
      const unsigned x = v / q, y = v % q;
      const unsigned nx = f.add(f.mul(m[0], x), f.mul(m[1], y));
      const unsigned ny = f.add(f.mul(m[2], x), f.mul(m[3], y));
      img[v - 1] = nx * q + ny - 1;
    }
    s.generators.emplace_back(img);
  }
  return s;
}

/// GF(4)^2 x| SL2(4) acting affinely on 16 points; SL2(4) is A5 and GF(4)^2 its natural module.
inline GroupSpec affine_2_4_a5() {
  const SmallField f(4);
  GroupSpec s{16, {}, "aff_2_4_a5"};
  std::vector<Point> shift(16);
  for (unsigned v = 0; v < 16; ++v) shift[v] = f.add(v / 4, 1) * 4 + v % 4;
  s.generators.emplace_back(shift);
  for (const auto& m : sl2_generators(f)) {
    std::vector<Point> img(16);
    for (unsigned v = 0; v < 16; ++v) {
      const unsigned x = v / 4, y = v % 4;
      img[v] = f.add(f.mul(m[0], x), f.mul(m[1], y)) * 4 + f.add(f.mul(m[2], x), f.mul(m[3], y));
    }
    s.generators.emplace_back(img);
  }
  return s;
}

/// K o C4 with Z(K) (of order 2) identified with the order-2 subgroup of C4.
inline GroupSpec central_product_with_c4(const GroupSpec& k, std::string name) {
  const auto a = enumerate(k);
  const auto b = enumerate(cyclic(4));
  const auto za = center(a);
  if (za.size() != 2) throw StructuralError("central_product_with_c4: center of " + k.name + " is not of order 2");
  const ElemId gen = b.generators().front();
  ElemSet zb{0, b.mul(gen, gen)};
  std::sort(zb.begin(), zb.end());
  const std::vector<std::pair<ElemId, ElemId>> matching{{0, 0}, {za[1], b.mul(gen, gen)}};
  return central_product(a, b, za, zb, matching, std::move(name));
}

namespace detail {

inline std::optional<unsigned> parse_uint(std::string_view s) {
  unsigned v = 0;
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

inline std::optional<GroupSpec> try_resolve(std::string_view name);

}  // namespace detail

/// Family constructor: make("PSL2", 8), make("A", 5), make("aff_2_4_a5").
inline GroupSpec make(std::string_view family, unsigned param = 0) {
  if (family == "A") return alternating(param);
  if (family == "S") return symmetric(param);
  if (family == "C") return cyclic(param);
  if (family == "D") return dihedral(param);
  if (family == "Q" && param == 8) return quaternion();
  if (family == "PSL2" || family == "L2") return psl2(param);
  if (family == "SL2") return sl2(param);
  if (family == "aff_2_4_a5") return affine_2_4_a5();
  throw UnknownGroupError("unknown group family '" + std::string(family) + "'");
}

inline std::optional<GroupSpec> detail::try_resolve(std::string_view name) {
  // "L2(8)" is accepted as a spelling of "L2_8"
  if (auto open = name.find('('); open != std::string_view::npos && name.back() == ')' && open > 0) {
    std::string alt = std::string(name.substr(0, open)) + "_" + std::string(name.substr(open + 1, name.size() - open - 2));
    return try_resolve(alt);
  }
  if (name == "1") return trivial_group_spec();
  if (name == "Q8") return quaternion();
  if (name == "aff_2_4_a5") return affine_2_4_a5();
  if (name == "SL2_5oC4" || name == "SL2x5circC4") return central_product_with_c4(sl2(5), "SL2_5oC4");
  if (name == "Q8oC4") return central_product_with_c4(quaternion(), "Q8oC4");
  for (std::string_view fam : {"PSL2_", "L2_", "SL2_"}) {
    if (name.starts_with(fam)) {
      auto q = parse_uint(name.substr(fam.size()));
      if (!q) break;  // maybe a product such as PSL2_8xC4
      auto spec = fam == "SL2_" ? sl2(*q) : psl2(*q);
      spec.name = std::string(name);
      return spec;
    }
  }
  if (name.size() >= 2 && std::string_view("ASCD").find(name[0]) != std::string_view::npos) {
    if (auto n = parse_uint(name.substr(1))) {
      auto spec = make(std::string_view(name.data(), 1), *n);
      spec.name = std::string(name);
      return spec;
    }
  }
  for (std::size_t x = name.find('x'); x != std::string_view::npos; x = name.find('x', x + 1)) {
    auto left = try_resolve(name.substr(0, x));
    if (!left) continue;
    auto right = try_resolve(name.substr(x + 1));
    if (!right) continue;
    return direct_product(*left, *right, std::string(name));
  }
  return std::nullopt;
}

/// Resolves a catalog name such as "A5", "PSL2_8", "SL2_5", "A5xQ8", "SL2_5oC4".
inline GroupSpec resolve(std::string_view name) {
  if (auto spec = detail::try_resolve(name)) return *spec;
  throw UnknownGroupError("unknown group '" + std::string(name) + "'");
}

struct CatalogEntry {
  std::string name;
  std::uint64_t expected_order = 0;
  /// Expected verdict kind name, when pinned.
  std::optional<std::string> expected_verdict;
};

inline std::vector<CatalogEntry> default_corpus() {
  return {
      {"A5", 60, "CaseI"},
      {"PSL2_4", 60, "CaseI"},
      {"PSL2_5", 60, "CaseI"},
      {"S5", 120, "HypothesisFails"},
      {"A6", 360, "HypothesisFails"},
      {"PSL2_7", 168, "HypothesisFails"},
      {"PSL2_8", 504, "CaseI"},
      {"PSL2_9", 360, "HypothesisFails"},
      {"PSL2_17", 2448, "HypothesisFails"},
      {"SL2_5", 120, "HypothesisFails"},
      {"SL2_5oC4", 240, "CaseII"},
      {"A5xC3", 180, "CaseI"},
      {"A5xC4", 240, "CaseI"},
      {"A5xQ8", 480, "HypothesisFails"},
      {"aff_2_4_a5", 960, "HypothesisFails"},
      {"Q8xC3", 24, "SolvableSkip"},
      {"S3", 6, "SolvableSkip"},
      {"Q8", 8, "SolvableSkip"},
      {"C4", 4, "SolvableSkip"},
      {"D8", 8, "SolvableSkip"},
      {"Q8oC4", 16, "SolvableSkip"},
  };
}

/// Entry for a catalog name, if it is part of the default corpus.
inline std::optional<CatalogEntry> corpus_entry(std::string_view name) {
  for (auto& e : default_corpus())
    if (e.name == name) return e;
  return std::nullopt;
}

}  // namespace rvdeg::catalog
