#pragma once

#include <map>
#include <optional>
#include <utility>

#include "rvdeg/chartab.hpp"
#include "rvdeg/config.hpp"
#include "rvdeg/permcore.hpp"
#include "rvdeg/structure.hpp"

namespace rvdeg {

/// One group with its lazily computed derived data.
class GroupAnalysis {
 public:
  GroupAnalysis(GroupSpec spec, Config cfg = {})
      : cfg_(std::move(cfg)), elems_(enumerate(spec, cfg_.order_cap)), classes_(conjugacy_classes(elems_)) {}

  const Config& config() const noexcept { return cfg_; }
  const GroupSpec& spec() const noexcept { return elems_.spec(); }
  const GroupElements& elements() const noexcept { return elems_; }
  const ClassData& classes() const noexcept { return classes_; }
  std::uint64_t order() const noexcept { return elems_.order(); }

  bool has_table() const noexcept { return table_.has_value(); }

  const ModPTable& table() {
    if (!table_) table_ = compute_table(elems_, classes_, cfg_.seed, cfg_.prime_override);
    return *table_;
  }

  /// Installs a table obtained elsewhere (e.g. from the cache) after a shape check.
  void set_table(ModPTable t) {
    if (t.k != classes_.count() || t.order != order() || t.rows() != t.k)
      throw StructuralError("table does not match group " + spec().name);
    table_ = std::move(t);
    exact_.clear();
  }

  const ExactRow& exact(std::size_t row) {
    auto it = exact_.find(row);
    if (it == exact_.end()) it = exact_.emplace(row, exact_row(table(), classes_, row)).first;
    return it->second;
  }

  const NormalLattice& lattice() {
    if (!lattice_) lattice_ = normal_subgroups(elems_, classes_, cfg_.lattice_cap);
    return *lattice_;
  }

  const ElemSet& derived_limit() {
    if (!derived_) derived_ = derived_series_limit(elems_);
    return *derived_;
  }

  bool solvable() { return derived_limit().size() == 1; }

  const ElemSet& radical() {
    if (!radical_) radical_ = solvable_radical(elems_, lattice());
    return *radical_;
  }

  Standalone materialize(const ElemSet& h, const std::string& suffix) const {
    return rvdeg::materialize(elems_, h, spec().name + ":" + suffix, cfg_.order_cap);
  }

 private:
  Config cfg_;
  GroupElements elems_;
  ClassData classes_;
  std::optional<ModPTable> table_;
  std::map<std::size_t, ExactRow> exact_;
  std::optional<NormalLattice> lattice_;
  std::optional<ElemSet> derived_;
  std::optional<ElemSet> radical_;
};

}  // namespace rvdeg
