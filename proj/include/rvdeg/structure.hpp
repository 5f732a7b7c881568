#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rvdeg/chartab.hpp"
#include "rvdeg/errors.hpp"
#include "rvdeg/permcore.hpp"

namespace rvdeg {

inline constexpr std::size_t kDefaultLatticeCap = 10000;

/// Normal subgroups as unions of conjugacy classes, ordered by (order, class set).
struct NormalLattice {
  std::vector<std::vector<bool>> class_sets;
  std::vector<ElemSet> subgroups;

  std::size_t size() const noexcept { return subgroups.size(); }
};

/// Union of the given classes as a sorted element set.
inline ElemSet elements_of_classes(const ClassData& cd, const std::vector<bool>& classes) {
  ElemSet r;
  for (ClassId c = 0; c < cd.count(); ++c)
    if (classes[c]) r.insert(r.end(), cd.classes[c].begin(), cd.classes[c].end());
  std::sort(r.begin(), r.end());
  return r;
}

/// Classes meeting the element set (a union of classes for normal subgroups).
inline std::vector<bool> classes_of(const ClassData& cd, std::span<const ElemId> set) {
  std::vector<bool> r(cd.count(), false);
  for (ElemId x : set) r[cd.class_of[x]] = true;
  return r;
}

/// All normal subgroups, by BFS over closures N u C for known N and classes C.
///
/// Closures are taken over class indices: C_i C_j is the union of the classes
/// of rep_i * y for y in C_j.
inline NormalLattice normal_subgroups(const GroupElements& g, const ClassData& cd,
                                      std::size_t cap = kDefaultLatticeCap) {
  const std::size_t k = cd.count();
  std::map<std::pair<ClassId, ClassId>, std::vector<ClassId>> support;
  auto product_support = [&](ClassId i, ClassId j) -> const std::vector<ClassId>& {
    auto key = std::minmax(i, j);
    auto it = support.find(key);
    if (it != support.end()) return it->second;
    std::vector<bool> hit(k, false);
    for (ElemId y : cd.classes[key.second]) hit[cd.class_of[g.mul(cd.reps[key.first], y)]] = true;
    std::vector<ClassId> s;
    for (ClassId c = 0; c < k; ++c)
      if (hit[c]) s.push_back(c);
    return support.emplace(key, std::move(s)).first->second;
  };
  auto close = [&](std::vector<bool> set) {
    std::vector<ClassId> members;
    for (ClassId c = 0; c < k; ++c)
      if (set[c]) members.push_back(c);
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = 0; b <= a; ++b)
        for (ClassId c : product_support(members[a], members[b]))
          if (!set[c]) {
            set[c] = true;
            members.push_back(c);
          }
    return set;
  };

  std::vector<std::vector<bool>> found;
  std::set<std::vector<bool>> seen;
  std::vector<bool> trivial(k, false);
  trivial[0] = true;
  found.push_back(trivial);
  seen.insert(trivial);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (ClassId c = 0; c < k; ++c) {
      if (found[i][c]) continue;
      auto next = found[i];
      next[c] = true;
      next = close(std::move(next));
      if (!seen.insert(next).second) continue;
      if (found.size() >= cap) throw CapacityError("normal subgroup lattice of " + g.spec().name + " too large", cap);
      found.push_back(std::move(next));
    }
  }

  NormalLattice lat;
  std::vector<std::pair<std::size_t, std::vector<bool>>> keyed;
  for (auto& s : found) {
    std::size_t n = 0;
    for (ClassId c = 0; c < k; ++c)
      if (s[c]) n += cd.sizes[c];
    keyed.emplace_back(n, std::move(s));
  }
  std::sort(keyed.begin(), keyed.end());
  for (auto& [n, s] : keyed) {
    lat.subgroups.push_back(elements_of_classes(cd, s));
    lat.class_sets.push_back(std::move(s));
  }
  return lat;
}

inline bool is_perfect(const GroupElements& g, const ElemSet& h) {
  return commutator_subgroup(g, h, h).size() == h.size();
}

/// Largest solvable normal subgroup.
inline ElemSet solvable_radical(const GroupElements& g, const NormalLattice& lat) {
  std::vector<std::size_t> solvable;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (is_solvable(g, lat.subgroups[i])) solvable.push_back(i);
  std::size_t best = solvable.front();
  for (auto i : solvable)
    if (lat.subgroups[i].size() > lat.subgroups[best].size()) best = i;
  for (auto i : solvable)
    if (!is_subset(lat.subgroups[i], lat.subgroups[best]))
      throw InternalError("solvable normal subgroups have no unique maximum");
  return lat.subgroups[best];
}

namespace detail {

template <class Pred>
ElemSet largest_normal_where(const NormalLattice& lat, Pred pred, const char* what) {
  std::size_t best = 0;  // the trivial subgroup always qualifies
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (pred(lat.subgroups[i].size()) && lat.subgroups[i].size() > lat.subgroups[best].size()) best = i;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (pred(lat.subgroups[i].size()) && !is_subset(lat.subgroups[i], lat.subgroups[best]))
      throw InternalError(std::string("no unique largest normal ") + what);
  return lat.subgroups[best];
}

inline bool is_power_of_two(std::uint64_t n) { return n && (n & (n - 1)) == 0; }

}  // namespace detail

/// O_2: largest normal 2-subgroup.
inline ElemSet largest_normal_2_subgroup(const NormalLattice& lat) {
  return detail::largest_normal_where(lat, detail::is_power_of_two, "2-subgroup");
}

/// O_2': largest normal subgroup of odd order.
inline ElemSet largest_normal_odd_subgroup(const NormalLattice& lat) {
  return detail::largest_normal_where(lat, [](std::uint64_t n) { return n % 2 == 1; }, "odd-order subgroup");
}

/// A subgroup re-enumerated as a group in its own right, with the map back
/// to the ambient element indices.
struct Standalone {
  GroupElements elems;
  ClassData classes;
  std::vector<ElemId> to_ambient;

  ElemSet lift(std::span<const ElemId> local) const {
    ElemSet r;
    for (ElemId x : local) r.push_back(to_ambient[x]);
    std::sort(r.begin(), r.end());
    return r;
  }
};

inline Standalone materialize(const GroupElements& g, std::span<const ElemId> h, std::string name,
                              std::size_t cap = kDefaultOrderCap) {
  Standalone s{enumerate(subgroup_spec(g, h, std::move(name)), cap), {}, {}};
  s.classes = conjugacy_classes(s.elems);
  for (const auto& p : s.elems.elements()) s.to_ambient.push_back(g.index_of(p));
  return s;
}

/// (O_2(R), O_2'(R)) computed in the radical's own normal lattice.
inline std::pair<ElemSet, ElemSet> core_subgroups(const GroupElements& r, const ClassData& cd,
                                                  std::size_t lattice_cap = kDefaultLatticeCap) {
  const auto lat = normal_subgroups(r, cd, lattice_cap);
  return {largest_normal_2_subgroup(lat), largest_normal_odd_subgroup(lat)};
}

/// True iff every real irreducible character is linear.
inline bool chillag_mann_type(const ModPTable& t) {
  for (std::size_t r = 0; r < t.rows(); ++r)
    if (t.real_flags[r] && t.degrees[r] != 1) return false;
  return true;
}

inline bool chillag_mann_type(const GroupElements& g, const ClassData& cd, std::uint64_t seed = kDefaultSeed) {
  return chillag_mann_type(compute_table(g, cd, seed));
}

enum class Recognized { A5, L2_8, SL2_5, Other };

inline const char* to_string(Recognized r) {
  switch (r) {
    case Recognized::A5: return "A5";
    case Recognized::L2_8: return "L2_8";
    case Recognized::SL2_5: return "SL2_5";
    case Recognized::Other: return "other";
  }
  return "other";
}

/// Invariant-based recognition of A5, L2(8) and SL2(5):
/// perfect groups of order 60 and 504 are simple and unique, and the unique
/// perfect group of order 120 with center of order 2 is SL2(5).
inline Recognized recognize(const GroupElements& g, const NormalLattice& lat) {
  const std::size_t n = g.order();
  if (n != 60 && n != 504 && n != 120) return Recognized::Other;
  if (!is_perfect(g, g.all())) return Recognized::Other;
  if (n == 60 || n == 504) {
    if (lat.size() != 2) throw InternalError("perfect group of order " + std::to_string(n) + " is not simple");
    return n == 60 ? Recognized::A5 : Recognized::L2_8;
  }
  const auto z = center(g);
  if (z.size() != 2) return Recognized::Other;
  if (lat.size() != 3 || lat.subgroups[1] != z)
    throw InternalError("perfect group of order 120 with center 2 has unexpected normal subgroups");
  return Recognized::SL2_5;
}

/// A and B generate G as an internal direct product.
inline bool internal_direct_product(const GroupElements& g, const ElemSet& a, const ElemSet& b) {
  if (intersect(a, b).size() != 1) return false;
  if (a.size() * b.size() != g.order()) return false;
  const auto ga = subgroup_generators(g, a);
  const auto gb = subgroup_generators(g, b);
  for (ElemId x : ga)
    for (ElemId y : gb)
      if (!g.commute(x, y)) return false;
  return true;
}

/// [K, H] = 1, K n H = Z(K) and Z(K) < H strictly.
inline bool central_product_check(const GroupElements& g, const ElemSet& k, const ElemSet& h) {
  const auto gk = subgroup_generators(g, k);
  const auto gh = subgroup_generators(g, h);
  for (ElemId x : gk)
    for (ElemId y : gh)
      if (!g.commute(x, y)) return false;
  const auto zk = center_of(g, k);
  return intersect(k, h) == zk && zk.size() < h.size() && is_subset(zk, h);
}

struct StructureReport {
  ElemSet radical;
  ElemSet derived_limit;  // K
  ElemSet o2_radical;     // H
  ElemSet odd_radical;    // O
  ElemSet center_k;
  bool is_solvable = false;
  bool is_perfect = false;
  bool is_simple = false;
};

inline StructureReport analyze_structure(const GroupElements& g, const NormalLattice& lat,
                                         std::size_t order_cap = kDefaultOrderCap,
                                         std::size_t lattice_cap = kDefaultLatticeCap) {
  StructureReport s;
  s.radical = solvable_radical(g, lat);
  s.derived_limit = derived_series_limit(g);
  s.is_solvable = s.derived_limit.size() == 1;
  s.is_perfect = s.derived_limit.size() == g.order();
  s.is_simple = lat.size() == 2;
  s.center_k = center_of(g, s.derived_limit);
  const auto r = materialize(g, s.radical, g.spec().name + ":Rad", order_cap);
  auto [h, o] = core_subgroups(r.elems, r.classes, lattice_cap);
  s.o2_radical = r.lift(h);
  s.odd_radical = r.lift(o);
  return s;
}

}  // namespace rvdeg
