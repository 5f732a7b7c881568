#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rvdeg/errors.hpp"
#include "rvdeg/permutation.hpp"

namespace rvdeg {

using ElemId = std::uint32_t;
using ClassId = std::uint32_t;

/// Sorted list of element indices of one enumerated group.
using ElemSet = std::vector<ElemId>;

inline constexpr std::size_t kDefaultOrderCap = 100000;

/// Every element of a permutation group, in BFS insertion order.
///
/// Element 0 is the identity. Elements are discovered by right-multiplying
/// already-known elements by the generators, generators taken in spec order.
class GroupElements {
 public:
  const GroupSpec& spec() const noexcept { return spec_; }
  std::size_t order() const noexcept { return elems_.size(); }
  std::size_t degree() const noexcept { return spec_.degree; }
  const Permutation& operator[](ElemId i) const { return elems_[i]; }
  const std::vector<Permutation>& elements() const noexcept { return elems_; }

  std::optional<ElemId> find(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  ElemId index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw StructuralError("permutation is not an element of " + spec_.name);
    return it->second;
  }

  ElemId mul(ElemId a, ElemId b) const { return index_.at(compose(elems_[a], elems_[b])); }
  ElemId inv(ElemId a) const { return inverse_[a]; }
  /// by^-1 * x * by
  ElemId conj(ElemId x, ElemId by) const { return mul(mul(inverse_[by], x), by); }
  bool commute(ElemId a, ElemId b) const {
    return compose(elems_[a], elems_[b]) == compose(elems_[b], elems_[a]);
  }

  /// Indices of the spec generators, in spec order.
  const std::vector<ElemId>& generators() const noexcept { return gens_; }

  ElemId power(ElemId x, std::uint64_t m) const {
    ElemId r = 0, b = x;
    while (m) {
      if (m & 1u) r = mul(r, b);
      b = mul(b, b);
      m >>= 1u;
    }
    return r;
  }

  std::uint64_t element_order(ElemId x) const {
    std::uint64_t n = 1;
    for (ElemId y = x; y != 0; y = mul(y, x)) ++n;
    return n;
  }

  ElemSet all() const {
    ElemSet s(elems_.size());
    std::iota(s.begin(), s.end(), ElemId{0});
    return s;
  }

 private:
  friend GroupElements enumerate(const GroupSpec& spec, std::size_t cap);
  GroupSpec spec_;
  std::vector<Permutation> elems_;
  std::unordered_map<Permutation, ElemId, PermutationHash> index_;
  std::vector<ElemId> inverse_;
  std::vector<ElemId> gens_;
};

/// Breadth-first closure of the generators. Throws CapacityError once the
/// order would exceed `cap`.
inline GroupElements enumerate(const GroupSpec& spec, std::size_t cap = kDefaultOrderCap) {
  spec.validate();
  GroupElements g;
  g.spec_ = spec;
  g.elems_.push_back(Permutation::identity(spec.degree));
  g.index_.emplace(g.elems_.back(), 0);
  for (std::size_t i = 0; i < g.elems_.size(); ++i) {
    for (const auto& s : spec.generators) {
      Permutation y = compose(g.elems_[i], s);
      if (g.index_.contains(y)) continue;
      if (g.elems_.size() >= cap)
        throw CapacityError("group " + spec.name + " exceeds the order cap", cap);
      g.index_.emplace(y, static_cast<ElemId>(g.elems_.size()));
      g.elems_.push_back(std::move(y));
    }
  }
  g.inverse_.resize(g.elems_.size());
  for (std::size_t i = 0; i < g.elems_.size(); ++i) g.inverse_[i] = g.index_.at(g.elems_[i].inverse());
  for (const auto& s : spec.generators) g.gens_.push_back(g.index_.at(s));
  return g;
}

/// Conjugacy classes with inversion and power-map data.
struct ClassData {
  std::vector<ElemSet> classes;
  std::vector<std::size_t> sizes;
  std::vector<ElemId> reps;
  std::vector<ClassId> class_of;
  /// C_{inv_map[k]} = { x^-1 : x in C_k }
  std::vector<ClassId> inv_map;
  std::vector<std::uint64_t> rep_orders;
  /// power_classes[k][t] = class of rep_k^t for 0 <= t < rep_orders[k].
  std::vector<std::vector<ClassId>> power_classes;
  std::uint64_t exponent = 1;

  std::size_t count() const noexcept { return classes.size(); }

  ClassId power_class(ClassId k, std::uint64_t m) const {
    return power_classes[k][m % rep_orders[k]];
  }

  std::vector<ClassId> power_map(std::uint64_t m) const {
    std::vector<ClassId> r(count());
    for (ClassId k = 0; k < count(); ++k) r[k] = power_class(k, m);
    return r;
  }
};

/// Classes by orbit closure under conjugation by the generators. Classes are
/// numbered by their smallest element, which is also the representative.
inline ClassData conjugacy_classes(const GroupElements& g) {
  constexpr ClassId kNone = ~ClassId{0};
  ClassData cd;
  cd.class_of.assign(g.order(), kNone);
  for (ElemId x = 0; x < g.order(); ++x) {
    if (cd.class_of[x] != kNone) continue;
    const auto c = static_cast<ClassId>(cd.classes.size());
    ElemSet members{x};
    cd.class_of[x] = c;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (ElemId s : g.generators()) {
        ElemId y = g.conj(members[i], s);
        if (cd.class_of[y] == kNone) {
          cd.class_of[y] = c;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    cd.sizes.push_back(members.size());
    cd.reps.push_back(x);
    cd.classes.push_back(std::move(members));
  }
  const std::size_t k = cd.classes.size();
  cd.inv_map.resize(k);
  cd.rep_orders.resize(k);
  cd.power_classes.resize(k);
  for (ClassId c = 0; c < k; ++c) {
    cd.inv_map[c] = cd.class_of[g.inv(cd.reps[c])];
    ElemId y = 0;
    do {
      cd.power_classes[c].push_back(cd.class_of[y]);
      y = g.mul(y, cd.reps[c]);
    } while (y != 0);
    cd.rep_orders[c] = cd.power_classes[c].size();
    cd.exponent = std::lcm(cd.exponent, cd.rep_orders[c]);
  }
  return cd;
}

/// Incrementally maintained subgroup of an enumerated group.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const GroupElements& g) : g_(&g), mask_(g.order(), false) {
    mask_[0] = true;
    elems_.push_back(0);
  }

  bool contains(ElemId x) const { return mask_[x]; }
  std::size_t size() const noexcept { return elems_.size(); }
  const std::vector<ElemId>& generators() const noexcept { return gens_; }

  /// Extends the subgroup by `s`. No-op when s is already a member.
  void add_generator(ElemId s) {
    if (mask_[s]) return;
    gens_.push_back(s);
    std::deque<ElemId> fresh;
    const std::size_t known = elems_.size();
    for (std::size_t i = 0; i < known; ++i) visit(g_->mul(elems_[i], s), fresh);
    while (!fresh.empty()) {
      ElemId x = fresh.front();
      fresh.pop_front();
      for (ElemId t : gens_) visit(g_->mul(x, t), fresh);
    }
  }

  ElemSet sorted() const {
    ElemSet s = elems_;
    std::sort(s.begin(), s.end());
    return s;
  }

 private:
  void visit(ElemId y, std::deque<ElemId>& fresh) {
    if (mask_[y]) return;
    mask_[y] = true;
    elems_.push_back(y);
    fresh.push_back(y);
  }

  const GroupElements* g_;
  std::vector<bool> mask_;
  std::vector<ElemId> elems_;
  std::vector<ElemId> gens_;
};

inline std::vector<bool> membership_mask(const GroupElements& g, std::span<const ElemId> set) {
  std::vector<bool> m(g.order(), false);
  for (ElemId x : set) m[x] = true;
  return m;
}

inline ElemSet intersect(std::span<const ElemId> a, std::span<const ElemId> b) {
  ElemSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline bool is_subset(std::span<const ElemId> a, std::span<const ElemId> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Smallest subgroup containing `seed`.
inline ElemSet subgroup_closure(const GroupElements& g, std::span<const ElemId> seed) {
  SubgroupBuilder b(g);
  for (ElemId s : seed) b.add_generator(s);
  return b.sorted();
}

/// A small generating set of the subgroup `h`, chosen greedily in index order.
inline std::vector<ElemId> subgroup_generators(const GroupElements& g, std::span<const ElemId> h) {
  SubgroupBuilder b(g);
  for (ElemId x : h) b.add_generator(x);
  return b.generators();
}

/// Smallest subgroup containing `seed` and invariant under conjugation by `conjugators`.
inline ElemSet normal_closure(const GroupElements& g, std::span<const ElemId> seed,
                              std::span<const ElemId> conjugators) {
  SubgroupBuilder b(g);
  for (ElemId s : seed) b.add_generator(s);
  for (std::size_t i = 0; i < b.generators().size(); ++i) {
    for (ElemId c : conjugators) {
      ElemId y = g.conj(b.generators()[i], c);
      b.add_generator(y);
    }
  }
  return b.sorted();
}

inline bool is_normal(const GroupElements& g, std::span<const ElemId> h) {
  auto mask = membership_mask(g, h);
  for (ElemId x : subgroup_generators(g, h))
    for (ElemId s : g.generators())
      if (!mask[g.conj(x, s)]) return false;
  return true;
}

/// Elements commuting with every generator.
inline ElemSet center(const GroupElements& g) {
  ElemSet z;
  for (ElemId x = 0; x < g.order(); ++x) {
    bool central = true;
    for (ElemId s : g.generators()) {
      if (!g.commute(x, s)) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(x);
  }
  return z;
}

/// Center of the subgroup `h`.
inline ElemSet center_of(const GroupElements& g, std::span<const ElemId> h) {
  auto gens = subgroup_generators(g, h);
  ElemSet z;
  for (ElemId x : h)
    if (std::all_of(gens.begin(), gens.end(), [&](ElemId s) { return g.commute(x, s); }))
      z.push_back(x);
  return z;
}

/// [A, B]: normal closure in <A, B> of the commutators of generator pairs.
inline ElemSet commutator_subgroup(const GroupElements& g, std::span<const ElemId> a,
                                   std::span<const ElemId> b) {
  auto ga = subgroup_generators(g, a);
  auto gb = subgroup_generators(g, b);
  std::vector<ElemId> comms;
  for (ElemId x : ga)
    for (ElemId y : gb) comms.push_back(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
  std::vector<ElemId> conjugators = ga;
  conjugators.insert(conjugators.end(), gb.begin(), gb.end());
  return normal_closure(g, comms, conjugators);
}

/// Last term of the derived series of the subgroup `h`.
inline ElemSet derived_series_limit(const GroupElements& g, ElemSet h) {
  for (;;) {
    ElemSet d = commutator_subgroup(g, h, h);
    if (d.size() == h.size()) return h;
    h = std::move(d);
  }
}

inline ElemSet derived_series_limit(const GroupElements& g) { return derived_series_limit(g, g.all()); }

inline bool is_solvable(const GroupElements& g, const ElemSet& h) {
  return derived_series_limit(g, h).size() == 1;
}

/// Largest normal subgroup of g inside h: the elements whose whole class lies in h.
inline ElemSet core(const GroupElements& g, std::span<const ElemId> h) {
  auto mask = membership_mask(g, h);
  bool changed = true;
  while (changed) {
    changed = false;
    for (ElemId x = 0; x < g.order(); ++x) {
      if (!mask[x]) continue;
      for (ElemId s : g.generators()) {
        if (!mask[g.conj(x, s)]) {
          mask[x] = false;
          changed = true;
          break;
        }
      }
    }
  }
  ElemSet r;
  for (ElemId x = 0; x < g.order(); ++x)
    if (mask[x]) r.push_back(x);
  return r;
}

/// Action of g by left multiplication on the left cosets xH. Coset H is point 0.
/// The result has degree [G:H] and is transitive.
inline GroupSpec coset_action(const GroupElements& g, std::span<const ElemId> h, std::string name = {}) {
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> coset_of(g.order(), kNone);
  std::vector<ElemId> coset_rep;
  for (ElemId x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kNone) continue;
    const auto id = static_cast<std::uint32_t>(coset_rep.size());
    coset_rep.push_back(x);
    for (ElemId y : h) coset_of[g.mul(x, y)] = id;
  }
  const std::size_t n = coset_rep.size();
  GroupSpec out;
  out.degree = n;
  out.name = name.empty() ? g.spec().name + "/cosets" : std::move(name);
  for (ElemId s : g.generators()) {
    std::vector<Point> img(n);
    for (std::size_t c = 0; c < n; ++c) img[c] = coset_of[g.mul(s, coset_rep[c])];
    out.generators.emplace_back(std::move(img));
  }
  return out;
}

/// Faithful permutation image of G/N, for N normal.
///
/// Acts on the cosets of the largest subgroup <N, x> (x ranging over elements
/// by decreasing order) whose core is exactly N; falls back to the regular
/// action of G/N.
inline GroupSpec quotient(const GroupElements& g, std::span<const ElemId> n, std::string name = {}) {
  constexpr std::size_t kMaxCandidates = 512;
  std::vector<ElemId> order_sorted = g.all();
  std::vector<std::uint64_t> orders(g.order());
  for (ElemId x = 0; x < g.order(); ++x) orders[x] = g.element_order(x);
  std::stable_sort(order_sorted.begin(), order_sorted.end(),
                   [&](ElemId a, ElemId b) { return orders[a] > orders[b]; });
  auto nmask = membership_mask(g, n);
  ElemSet best(n.begin(), n.end());
  std::set<ElemSet> seen;
  for (ElemId x : order_sorted) {
    if (nmask[x]) continue;
    std::vector<ElemId> seed(n.begin(), n.end());
    seed.push_back(x);
    ElemSet u = subgroup_closure(g, seed);
    if (!seen.insert(u).second) continue;
    if (seen.size() > kMaxCandidates) break;
    if (u.size() > best.size() && core(g, u).size() == n.size()) best = std::move(u);
  }
  return coset_action(g, best, name.empty() ? g.spec().name + "/N" : std::move(name));
}

inline ElemSet point_stabilizer(const GroupElements& g, Point pt) {
  ElemSet r;
  for (ElemId x = 0; x < g.order(); ++x)
    if (g[x](pt) == pt) r.push_back(x);
  return r;
}

/// Elements mapping the point set `pts` onto itself.
inline ElemSet setwise_stabilizer(const GroupElements& g, std::span<const Point> pts) {
  std::vector<bool> in(g.degree(), false);
  for (Point p : pts) in[p] = true;
  ElemSet r;
  for (ElemId x = 0; x < g.order(); ++x)
    if (std::all_of(pts.begin(), pts.end(), [&](Point p) { return in[g[x](p)]; })) r.push_back(x);
  return r;
}

inline ElemSet normalizer(const GroupElements& g, std::span<const ElemId> h) {
  auto mask = membership_mask(g, h);
  auto gens = subgroup_generators(g, h);
  ElemSet r;
  for (ElemId x = 0; x < g.order(); ++x)
    if (std::all_of(gens.begin(), gens.end(), [&](ElemId s) { return mask[g.conj(s, x)]; }))
      r.push_back(x);
  return r;
}

/// Number of elements with x^2 = 1, identity included.
inline std::size_t involution_count(const GroupElements& g) {
  std::size_t n = 0;
  for (ElemId x = 0; x < g.order(); ++x)
    if (g.mul(x, x) == 0) ++n;
  return n;
}

/// Generators of the subgroup `h` as a standalone spec on the same points.
inline GroupSpec subgroup_spec(const GroupElements& g, std::span<const ElemId> h, std::string name) {
  GroupSpec s;
  s.degree = g.degree();
  s.name = std::move(name);
  for (ElemId x : subgroup_generators(g, h)) s.generators.push_back(g[x]);
  if (s.generators.empty()) s.generators.push_back(Permutation::identity(g.degree()));
  return s;
}

namespace detail {

inline Permutation juxtapose(const Permutation& a, const Permutation& b) {
  std::vector<Point> img;
  img.reserve(a.degree() + b.degree());
  for (Point p : a.images()) img.push_back(p);
  const auto off = static_cast<Point>(a.degree());
  for (Point p : b.images()) img.push_back(p + off);
  return Permutation(std::move(img));
}

}  // namespace detail

/// A x B acting on the disjoint union of the two point sets.
inline GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b, std::string name = {}) {
  a.validate();
  b.validate();
  GroupSpec out;
  out.degree = a.degree + b.degree;
  out.name = name.empty() ? a.name + "x" + b.name : std::move(name);
  const auto ida = Permutation::identity(a.degree);
  const auto idb = Permutation::identity(b.degree);
  for (const auto& s : a.generators) out.generators.push_back(detail::juxtapose(s, idb));
  for (const auto& s : b.generators) out.generators.push_back(detail::juxtapose(ida, s));
  return out;
}

/// (A x B) / { (z, matching(z)^-1) : z in za }, returned as a faithful permutation group.
///
/// `matching` lists pairs (element of za, element of zb) and must be an
/// isomorphism between the central subgroups za <= A and zb <= B.
inline GroupSpec central_product(const GroupElements& a, const GroupElements& b, std::span<const ElemId> za,
                                 std::span<const ElemId> zb,
                                 std::span<const std::pair<ElemId, ElemId>> matching, std::string name = {},
                                 std::size_t cap = kDefaultOrderCap) {
  auto check_central_subgroup = [](const GroupElements& g, std::span<const ElemId> z, const char* which) {
    ElemSet zs(z.begin(), z.end());
    std::sort(zs.begin(), zs.end());
    if (subgroup_closure(g, zs) != zs)
      throw StructuralError(std::string("central_product: ") + which + " is not a subgroup");
    for (ElemId x : zs)
      for (ElemId s : g.generators())
        if (!g.commute(x, s)) throw StructuralError(std::string("central_product: ") + which + " is not central");
  };
  check_central_subgroup(a, za, "za");
  check_central_subgroup(b, zb, "zb");
  if (za.size() != zb.size() || matching.size() != za.size())
    throw StructuralError("central_product: matching is not a bijection");
  std::unordered_map<ElemId, ElemId> m;
  std::set<ElemId> image;
  auto za_mask = membership_mask(a, za);
  auto zb_mask = membership_mask(b, zb);
  for (auto [x, y] : matching) {
    if (!za_mask[x] || !zb_mask[y] || !m.emplace(x, y).second || !image.insert(y).second)
      throw StructuralError("central_product: matching is not a bijection");
  }
  for (auto [x1, y1] : matching)
    for (auto [x2, y2] : matching)
      if (m.at(a.mul(x1, x2)) != b.mul(y1, y2))
        throw StructuralError("central_product: matching is not a homomorphism");

  GroupSpec d = direct_product(a.spec(), b.spec());
  GroupElements dg = enumerate(d, cap);
  ElemSet n;
  for (auto [x, y] : matching) n.push_back(dg.index_of(detail::juxtapose(a[x], b[b.inv(y)])));
  std::sort(n.begin(), n.end());
  return quotient(dg, n, name.empty() ? a.spec().name + "o" + b.spec().name : std::move(name));
}

}  // namespace rvdeg
