#pragma once

// Verdicts for the classification of non-solvable groups whose real
// character degrees are all prime powers, and the supporting lemma checks.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "rvdeg/analysis.hpp"
#include "rvdeg/catalog.hpp"
#include "rvdeg/chartab.hpp"
#include "rvdeg/structure.hpp"

namespace rvdeg {

/// 1 counts as a prime power (p^0).
inline bool is_prime_power(std::uint64_t n) {
  if (n == 0) return false;
  if (n == 1) return true;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    while (n % q == 0) n /= q;
    return n == 1;
  }
  return true;
}

inline bool prime_power_set(const std::vector<std::uint64_t>& degrees) {
  return std::all_of(degrees.begin(), degrees.end(), is_prime_power);
}

enum class VerdictKind { SolvableSkip, HypothesisFails, CaseI, CaseII, Violation };

inline const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::SolvableSkip: return "SolvableSkip";
    case VerdictKind::HypothesisFails: return "HypothesisFails";
    case VerdictKind::CaseI: return "CaseI";
    case VerdictKind::CaseII: return "CaseII";
    case VerdictKind::Violation: return "Violation";
  }
  return "Violation";
}

/// Real row of composite degree falsifying the hypothesis.
struct Witness {
  std::size_t row = 0;
  std::uint64_t degree = 0;
};

/// Orders of the subgroups bound by the decomposition.
struct Bindings {
  Recognized k = Recognized::Other;
  std::size_t k_order = 0;
  std::size_t radical_order = 0;
  std::size_t h_order = 0;
  std::size_t o_order = 0;
  std::size_t k_cap_radical_order = 0;
};

struct Verdict {
  VerdictKind kind = VerdictKind::SolvableSkip;
  std::optional<Witness> witness;
  std::optional<Bindings> details;
  std::string violation_reason;
};

namespace detail {

inline Verdict violation(Bindings b, std::string why) {
  return {VerdictKind::Violation, std::nullopt, b, std::move(why)};
}

}  // namespace detail

/// Runs the decomposition pipeline: solvable groups are skipped; groups with a
/// real row of composite degree fail the hypothesis; all others must match
/// case I (G = K x Rad(G), K = A5 or L2(8)) or case II (G = (KH) x O with
/// K = SL2(5) and KH a central product over Z(K) < H). Anything else is a Violation.
inline Verdict theorem_a_verdict(GroupAnalysis& a) {
  if (a.solvable()) return {VerdictKind::SolvableSkip, std::nullopt, std::nullopt, {}};

  const auto& t = a.table();
  for (std::size_t r = 0; r < t.rows(); ++r) {
    // rows are sorted by degree, so the first hit is the smallest composite degree
    if (t.real_flags[r] && !is_prime_power(t.degrees[r]))
      return {VerdictKind::HypothesisFails, Witness{r, t.degrees[r]}, std::nullopt, {}};
  }

  const auto& g = a.elements();
  const ElemSet& rad = a.radical();
  const ElemSet& k = a.derived_limit();
  const auto r = a.materialize(rad, "Rad");
  auto [h_local, o_local] = core_subgroups(r.elems, r.classes, a.config().lattice_cap);
  const ElemSet h = r.lift(h_local);
  const ElemSet o = r.lift(o_local);

  Bindings b;
  b.k_order = k.size();
  b.radical_order = rad.size();
  b.h_order = h.size();
  b.o_order = o.size();
  b.k_cap_radical_order = intersect(k, rad).size();

  const auto ks = a.materialize(k, "K");
  b.k = recognize(ks.elems, normal_subgroups(ks.elems, ks.classes, a.config().lattice_cap));

  if (!internal_direct_product(r.elems, h_local, o_local))
    return detail::violation(b, "Rad(G) is not the direct product of O_2 and O_2'");
  {
    const auto hs = a.materialize(h, "H");
    if (!chillag_mann_type(compute_table(hs.elems, hs.classes, a.config().seed)))
      return detail::violation(b, "H is not of Chillag-Mann type");
  }

  if (b.k == Recognized::A5 || b.k == Recognized::L2_8) {
    if (b.k_cap_radical_order != 1) return detail::violation(b, "K meets Rad(G) nontrivially");
    if (!internal_direct_product(g, k, rad)) return detail::violation(b, "G is not K x Rad(G)");
    return {VerdictKind::CaseI, std::nullopt, b, {}};
  }
  if (b.k == Recognized::SL2_5) {
    if (!central_product_check(g, k, h)) return detail::violation(b, "KH is not a central product with K n H = Z(K) < H");
    ElemSet seed = k;
    seed.insert(seed.end(), h.begin(), h.end());
    const ElemSet kh = subgroup_closure(g, seed);
    if (!internal_direct_product(g, kh, o)) return detail::violation(b, "G is not (KH) x O");
    if (2 * g.order() != k.size() * h.size() * o.size()) return detail::violation(b, "|G| != |K||H||O|/2");
    return {VerdictKind::CaseII, std::nullopt, b, {}};
  }
  return detail::violation(b, "K is not A5, L2(8) or SL2(5)");
}

/// cd_rv(L2(8)) and the odd part of cd_rv(A5), computed by the tool itself.
struct ReferenceSets {
  std::vector<std::uint64_t> cd_rv_l2_8;
  std::vector<std::uint64_t> cd_rv_odd_a5;
};

inline const ReferenceSets& reference_sets() {
  static const ReferenceSets refs = [] {
    GroupAnalysis a5(catalog::resolve("A5"));
    GroupAnalysis l28(catalog::resolve("PSL2_8"));
    return ReferenceSets{real_degree_set(l28.table()).set, real_degree_set(a5.table()).odd};
  }();
  return refs;
}

struct TheoremBResult {
  bool pass = false;
  /// 1: cd_rv(G) = cd_rv(L2(8)); 2: odd parts agree with A5; 0: neither.
  int branch = 0;
};

/// Only meaningful for CaseI / CaseII verdicts; returns nullopt otherwise.
inline std::optional<TheoremBResult> theorem_b_verdict(GroupAnalysis& a, const Verdict& v,
                                                       const ReferenceSets& refs = reference_sets()) {
  if (v.kind != VerdictKind::CaseI && v.kind != VerdictKind::CaseII) return std::nullopt;
  const auto degs = real_degree_set(a.table());
  if (degs.set == refs.cd_rv_l2_8) return TheoremBResult{true, 1};
  if (degs.odd == refs.cd_rv_odd_a5) return TheoremBResult{true, 2};
  return TheoremBResult{false, 0};
}

struct LemmaResults {
  /// Odd nonlinear real degrees <=> normal Chillag-Mann Sylow 2-subgroup.
  bool l1 = true;
  /// Even nonlinear real degrees => normal 2-complement.
  bool l2 = true;
  /// Odd-degree real characters contain O_2'(G) in their kernel.
  bool l3 = true;
  /// Non-solvable => some real row with indicator +1 has even degree.
  bool l4 = true;

  bool all() const noexcept { return l1 && l2 && l3 && l4; }
};

inline LemmaResults lemma_suite(GroupAnalysis& a) {
  const auto& t = a.table();
  const auto& cd = a.classes();
  const std::uint64_t order = a.order();
  std::uint64_t two_part = 1;
  while (order % (two_part * 2) == 0) two_part *= 2;
  const std::uint64_t odd_part = order / two_part;

  bool nonlinear_odd = true, nonlinear_even = true;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    if (!t.real_flags[r] || t.degrees[r] == 1) continue;
    if (t.degrees[r] % 2 == 0) nonlinear_odd = false;
    else nonlinear_even = false;
  }

  const auto& lat = a.lattice();
  const ElemSet o2 = largest_normal_2_subgroup(lat);
  const ElemSet o2p = largest_normal_odd_subgroup(lat);

  LemmaResults res;
  bool normal_cm_sylow = o2.size() == two_part;
  if (normal_cm_sylow) {
    const auto s = a.materialize(o2, "O2");
    normal_cm_sylow = chillag_mann_type(compute_table(s.elems, s.classes, a.config().seed));
  }
  res.l1 = nonlinear_odd == normal_cm_sylow;
  res.l2 = !nonlinear_even || o2p.size() == odd_part;

  const auto o2p_classes = classes_of(cd, o2p);
  for (std::size_t r = 0; r < t.rows() && res.l3; ++r) {
    if (!t.real_flags[r] || t.degrees[r] % 2 == 0) continue;
    const auto ker = kernel_of(a.exact(r), static_cast<std::int64_t>(t.degrees[r]));
    std::vector<bool> in_ker(cd.count(), false);
    for (auto c : ker) in_ker[c] = true;
    for (ClassId c = 0; c < cd.count(); ++c)
      if (o2p_classes[c] && !in_ker[c]) res.l3 = false;
  }

  if (!a.solvable()) {
    res.l4 = false;
    for (std::size_t r = 0; r < t.rows(); ++r)
      if (t.real_flags[r] && t.indicators[r] == 1 && t.degrees[r] % 2 == 0) res.l4 = true;
  }
  return res;
}

}  // namespace rvdeg
