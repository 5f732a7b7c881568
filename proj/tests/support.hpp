#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracle/burnside.hpp"
#include "rvdeg/rvdeg.hpp"

namespace testing {

using namespace rvdeg;

struct Built {
  GroupElements g;
  ClassData cd;
};

inline Built build(const GroupSpec& spec) {
  auto g = enumerate(spec);
  auto cd = conjugacy_classes(g);
  return {std::move(g), std::move(cd)};
}

inline Built build(const std::string& name) { return build(catalog::resolve(name)); }

inline oracle::Perm raw(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

inline oracle::Group oracle_group(const GroupSpec& spec) {
  std::vector<oracle::Perm> gens;
  for (const auto& s : spec.generators) gens.push_back(raw(s));
  return oracle::close(gens, spec.degree);
}

inline std::complex<double> evaluate(const CycloValue& v) {
  std::complex<double> z = 0;
  for (std::size_t j = 0; j < v.mult.size(); ++j)
    z += static_cast<double>(v.mult[j]) * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(v.n));
  return z;
}

/// Checks that every row of the computed table, lifted exactly, equals a
/// distinct row of the oracle table, with classes matched through their
/// representatives. Returns an empty string on success.
inline std::string compare_with_oracle(const GroupSpec& spec, const Built& b, const ModPTable& t) {
  const auto og = oracle_group(spec);
  const auto oc = oracle::classes(og);
  const auto ot = oracle::burnside(og, oc);
  if (og.elems.size() != b.g.order()) return "order differs from oracle";
  if (oc.members.size() != b.cd.count()) return "class count differs from oracle";
  std::vector<int> col(b.cd.count());
  for (ClassId c = 0; c < b.cd.count(); ++c) {
    col[c] = oc.of[og.index.at(raw(b.g[b.cd.reps[c]]))];
    if (oc.members[col[c]].size() != b.cd.sizes[c]) return "class size differs from oracle";
  }
  std::vector<bool> used(ot.chi.size(), false);
  for (std::size_t r = 0; r < t.rows(); ++r) {
    const auto row = exact_row(t, b.cd, r);
    bool found = false;
    for (std::size_t s = 0; s < ot.chi.size() && !found; ++s) {
      if (used[s]) continue;
      bool same = true;
      for (ClassId c = 0; c < b.cd.count() && same; ++c) same = std::abs(evaluate(row[c]) - ot.chi[s][col[c]]) < 1e-6;
      if (!same) continue;
      if (ot.degrees[s] != static_cast<long>(t.degrees[r])) return "degree mismatch on row " + std::to_string(r);
      if (ot.real[s] != t.real_flags[r]) return "realness mismatch on row " + std::to_string(r);
      if (ot.indicators[s] != t.indicators[r]) return "indicator mismatch on row " + std::to_string(r);
      used[s] = found = true;
    }
    if (!found) return "row " + std::to_string(r) + " has no match in the oracle table";
  }
  return {};
}

/// Random subgroup of S_n generated by `ngens` random permutations.
inline GroupSpec random_group(std::mt19937& rng, std::size_t degree, std::size_t ngens) {
  GroupSpec s;
  s.degree = degree;
  s.name = "random";
  for (std::size_t i = 0; i < ngens; ++i) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    std::shuffle(img.begin(), img.end(), rng);
    s.generators.emplace_back(std::move(img));
  }
  return s;
}

}  // namespace testing
