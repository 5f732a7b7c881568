#pragma once

// On-disk cache of table dumps, keyed by the generator list and the
// parameters that influence the table (prime choice and seed).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "rvdeg/analysis.hpp"
#include "rvdeg/chartab.hpp"

namespace rvdeg {

inline std::string cache_key(const GroupSpec& spec, const Config& cfg) {
  std::string canon = "degree " + std::to_string(spec.degree) + "\n";
  for (const auto& g : spec.generators) canon += g.to_cycles() + "\n";
  canon += "prime=" + (cfg.prime_override ? std::to_string(*cfg.prime_override) : std::string("auto"));
  canon += "\nseed=" + std::to_string(cfg.seed) + "\n";
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// Loads the table from the cache if present and consistent, otherwise
/// computes it and stores it. Returns true on a cache hit.
inline bool load_or_compute_table(GroupAnalysis& a) {
  const auto& cfg = a.config();
  if (!cfg.cache_dir) {
    a.table();
    return false;
  }
  namespace fs = std::filesystem;
  const fs::path file = fs::path(*cfg.cache_dir) / (cache_key(a.spec(), cfg) + ".tab");
  if (fs::exists(file)) {
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      a.set_table(parse_table(ss.str()));
      return true;
    } catch (const Error&) {
      // stale or corrupt entry: recompute and overwrite
    }
  }
  const auto& t = a.table();
  fs::create_directories(file.parent_path());
  std::ofstream(file) << format_table(t);
  return false;
}

}  // namespace rvdeg
