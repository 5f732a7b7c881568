#pragma once

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rvdeg/analysis.hpp"
#include "rvdeg/classify.hpp"

namespace rvdeg {

/// Outcome of verifying one group.
struct Report {
  std::string name;
  std::uint64_t order = 0;
  std::size_t classes = 0;
  std::uint64_t prime = 0;
  std::vector<std::uint64_t> cd_rv;
  std::vector<std::uint64_t> cd_rv_odd;
  Verdict verdict;
  std::optional<TheoremBResult> theorem_b;
  LemmaResults lemmas;
  std::optional<double> ms;
  std::optional<std::string> error;
  /// Set by the scanner when a corpus entry's pinned properties differ.
  std::optional<std::string> mismatch;
};

inline Report build_report(GroupAnalysis& a) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.name = a.spec().name;
  r.order = a.order();
  r.classes = a.classes().count();
  const auto& t = a.table();
  r.prime = t.ctx.p;
  const auto degs = real_degree_set(t);
  r.cd_rv = degs.set;
  r.cd_rv_odd = degs.odd;
  r.verdict = theorem_a_verdict(a);
  r.theorem_b = theorem_b_verdict(a, r.verdict);
  r.lemmas = lemma_suite(a);
  if (a.config().timing)
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline Report error_report(std::string name, std::string what) {
  Report r;
  r.name = std::move(name);
  r.error = std::move(what);
  return r;
}

/// One JSON object per line; keys in fixed order.
inline std::string to_machine_line(const Report& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["name"] = r.name;
  if (r.error) {
    j["error"] = *r.error;
    if (r.mismatch) j["mismatch"] = *r.mismatch;
    return j.dump();
  }
  const auto& v = r.verdict;
  j["order"] = r.order;
  j["classes"] = r.classes;
  j["prime"] = r.prime;
  j["cd_rv"] = r.cd_rv;
  j["cd_rv_odd"] = r.cd_rv_odd;
  j["verdict"] = to_string(v.kind);
  j["case"] = v.kind == VerdictKind::CaseI ? ordered_json("I") : v.kind == VerdictKind::CaseII ? ordered_json("II") : ordered_json();
  j["theorem_b"] = r.theorem_b ? ordered_json(r.theorem_b->pass) : ordered_json();
  j["witness_degree"] = v.witness ? ordered_json(v.witness->degree) : ordered_json();
  j["K"] = v.details ? ordered_json(to_string(v.details->k)) : ordered_json();
  j["H_order"] = v.details ? ordered_json(v.details->h_order) : ordered_json();
  j["O_order"] = v.details ? ordered_json(v.details->o_order) : ordered_json();
  j["lemmas"] = ordered_json{{"L1", r.lemmas.l1}, {"L2", r.lemmas.l2}, {"L3", r.lemmas.l3}, {"L4", r.lemmas.l4}};
  j["ms"] = r.ms ? ordered_json(*r.ms) : ordered_json();
  if (!v.violation_reason.empty()) j["violation"] = v.violation_reason;
  if (r.mismatch) j["mismatch"] = *r.mismatch;
  return j.dump();
}

namespace detail {

inline std::string brace_list(const std::vector<std::uint64_t>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

}  // namespace detail

inline std::string to_text(const Report& r) {
  std::ostringstream os;
  if (r.error) {
    os << r.name << ": error: " << *r.error << '\n';
    if (r.mismatch) os << "  mismatch: " << *r.mismatch << '\n';
    return os.str();
  }
  const auto& v = r.verdict;
  os << r.name << ": order " << r.order << ", " << r.classes << " classes, p = " << r.prime << '\n';
  os << "  cd_rv = " << detail::brace_list(r.cd_rv) << ", odd part " << detail::brace_list(r.cd_rv_odd) << '\n';
  os << "  verdict: " << to_string(v.kind);
  if (v.witness) os << " (witness degree " << v.witness->degree << ")";
  if (v.details) {
    const auto& b = *v.details;
    os << " (K = " << to_string(b.k) << ", |K| = " << b.k_order << ", |Rad| = " << b.radical_order
       << ", |H| = " << b.h_order << ", |O| = " << b.o_order << ", |K n Rad| = " << b.k_cap_radical_order << ")";
  }
  os << '\n';
  if (!v.violation_reason.empty()) os << "  violation: " << v.violation_reason << '\n';
  if (r.theorem_b)
    os << "  real degree sets: " << (r.theorem_b->pass ? "pass" : "FAIL")
       << (r.theorem_b->branch == 1 ? " (equals L2(8))" : r.theorem_b->branch == 2 ? " (odd part equals A5)" : "")
       << '\n';
  auto pf = [](bool b) { return b ? "pass" : "FAIL"; };
  os << "  lemmas: L1 " << pf(r.lemmas.l1) << ", L2 " << pf(r.lemmas.l2) << ", L3 " << pf(r.lemmas.l3) << ", L4 "
     << pf(r.lemmas.l4) << '\n';
  if (r.ms) os << "  time: " << *r.ms << " ms\n";
  if (r.mismatch) os << "  mismatch: " << *r.mismatch << '\n';
  return os.str();
}

}  // namespace rvdeg
