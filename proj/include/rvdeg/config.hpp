#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rvdeg/chartab.hpp"
#include "rvdeg/permcore.hpp"
#include "rvdeg/structure.hpp"

namespace rvdeg {

struct Config {
  std::size_t order_cap = kDefaultOrderCap;
  std::size_t lattice_cap = kDefaultLatticeCap;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::uint64_t> prime_override;
  bool machine = false;
  std::optional<std::string> cache_dir;
  unsigned jobs = 1;
  /// Record wall-clock timings in reports (makes output run-dependent).
  bool timing = false;
};

}  // namespace rvdeg
