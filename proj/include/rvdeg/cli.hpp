#pragma once

// Command implementations behind the rvdeg executable. Each command writes to
// the given streams and returns the process exit status.

#include <array>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rvdeg/analysis.hpp"
#include "rvdeg/cache.hpp"
#include "rvdeg/catalog.hpp"
#include "rvdeg/classify.hpp"
#include "rvdeg/grp_format.hpp"
#include "rvdeg/report.hpp"

namespace rvdeg::cli {

enum ExitCode : int { kOk = 0, kViolation = 2, kError = 1 };

/// A catalog name, or a path to a .grp file.
inline GroupSpec load_source(const std::string& src) {
  namespace fs = std::filesystem;
  if (src.ends_with(".grp") || (src.find('/') != std::string::npos && fs::exists(src))) {
    if (!fs::exists(src)) throw Error("cannot open '" + src + "'");
    return read_grp_file(src);
  }
  return catalog::resolve(src);
}

/// Reads a manifest: one catalog name or .grp path per line, '#' comments.
/// Relative paths that do not exist from the working directory are tried
/// relative to the manifest's own directory.
inline std::vector<std::string> read_manifest(const std::string& path) {
  namespace fs = std::filesystem;
  std::ifstream in(path);
  if (!in) throw Error("cannot open manifest '" + path + "'");
  const fs::path base = fs::path(path).parent_path();
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = detail::trim(line);
    if (line.empty()) continue;
    if (line.ends_with(".grp") && !fs::exists(line) && fs::exists(base / line)) line = (base / line).string();
    out.push_back(line);
  }
  return out;
}

inline GroupAnalysis open_analysis(const std::string& src, const Config& cfg) {
  GroupAnalysis a(load_source(src), cfg);
  load_or_compute_table(a);
  return a;
}

inline int cmd_table(const std::string& src, const Config& cfg, std::ostream& out, std::ostream& err) {
  try {
    auto a = open_analysis(src, cfg);
    const auto& t = a.table();
    if (cfg.machine) {
      nlohmann::ordered_json j;
      j["name"] = a.spec().name;
      j["order"] = a.order();
      j["classes"] = t.k;
      j["prime"] = t.ctx.p;
      j["degrees"] = t.degrees;
      std::vector<bool> real(t.real_flags.begin(), t.real_flags.end());
      j["real"] = real;
      j["indicators"] = t.indicators;
      j["class_sizes"] = a.classes().sizes;
      j["values"] = t.values;
      out << j.dump() << '\n';
      return kOk;
    }
    out << format_table(t);
    std::size_t nreal = 0;
    out << "degrees:";
    for (auto d : t.degrees) out << ' ' << d;
    out << "\nreal:";
    for (std::size_t r = 0; r < t.rows(); ++r) {
      out << ' ' << (t.real_flags[r] ? 1 : 0);
      nreal += t.real_flags[r] ? 1 : 0;
    }
    out << "\nindicators:";
    for (auto v : t.indicators) out << ' ' << (v > 0 ? "+1" : v < 0 ? "-1" : "0");
    out << '\n' << t.rows() << " rows, " << nreal << " real\n";
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
}

inline int cmd_verify(const std::string& src, const Config& cfg, std::ostream& out, std::ostream& err) {
  Report r;
  try {
    auto a = open_analysis(src, cfg);
    r = build_report(a);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  out << (cfg.machine ? to_machine_line(r) + "\n" : to_text(r));
  return r.verdict.kind == VerdictKind::Violation ? kViolation : kOk;
}

inline int cmd_info(const std::string& src, const Config& cfg, std::ostream& out, std::ostream& err) {
  try {
    GroupAnalysis a(load_source(src), cfg);
    const bool solvable = a.solvable();
    const auto& lat = a.lattice();
    const auto& rad = a.radical();
    const auto& k = a.derived_limit();
    std::string kname = "1";
    if (!solvable) {
      const auto ks = a.materialize(k, "K");
      kname = to_string(recognize(ks.elems, normal_subgroups(ks.elems, ks.classes, cfg.lattice_cap)));
    }
    const std::size_t zorder = center(a.elements()).size();
    if (cfg.machine) {
      nlohmann::ordered_json j;
      j["name"] = a.spec().name;
      j["degree"] = a.spec().degree;
      j["order"] = a.order();
      j["classes"] = a.classes().count();
      j["exponent"] = a.classes().exponent;
      j["center_order"] = zorder;
      j["normal_subgroups"] = lat.subgroups.size();
      j["solvable"] = solvable;
      j["radical_order"] = rad.size();
      j["K_order"] = k.size();
      j["K"] = kname;
      out << j.dump() << '\n';
    } else {
      out << a.spec().name << ": degree " << a.spec().degree << ", order " << a.order() << ", "
          << a.classes().count() << " classes, exponent " << a.classes().exponent << '\n'
          << "  |Z| = " << zorder << ", " << lat.subgroups.size() << " normal subgroups, "
          << (solvable ? "solvable" : "not solvable") << '\n'
          << "  |Rad| = " << rad.size() << ", |K| = " << k.size() << ", K = " << kname << '\n';
    }
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
}

namespace detail {

inline Report scan_one(const std::string& src, const Config& cfg) {
  Report r;
  try {
    auto a = open_analysis(src, cfg);
    r = build_report(a);
    r.name = src;
  } catch (const std::exception& e) {
    r = error_report(src, e.what());
  }
  if (auto entry = catalog::corpus_entry(src)) {
    std::string why;
    if (r.error) why = "expected order " + std::to_string(entry->expected_order) + ", got error";
    else if (r.order != entry->expected_order)
      why = "expected order " + std::to_string(entry->expected_order) + ", got " + std::to_string(r.order);
    else if (entry->expected_verdict && *entry->expected_verdict != to_string(r.verdict.kind))
      why = "expected verdict " + *entry->expected_verdict + ", got " + to_string(r.verdict.kind);
    if (!why.empty()) r.mismatch = why;
  }
  return r;
}

}  // namespace detail

/// Verifies every manifest entry (the default corpus when none is given).
/// Output is in manifest order whatever the parallelism width.
inline int cmd_scan(const std::optional<std::string>& manifest, const Config& cfg, std::ostream& out,
                    std::ostream& err) {
  std::vector<std::string> names;
  try {
    if (manifest) names = read_manifest(*manifest);
    else
      for (const auto& e : catalog::default_corpus()) names.push_back(e.name);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  // computed before fanning out so no worker races on its initialization
  if (!names.empty()) reference_sets();

  const std::size_t width = std::max(1u, cfg.jobs);
  std::vector<Report> reports(names.size());
  for (std::size_t lo = 0; lo < names.size(); lo += width) {
    const std::size_t hi = std::min(names.size(), lo + width);
    if (width == 1) {
      reports[lo] = detail::scan_one(names[lo], cfg);
      continue;
    }
    std::vector<std::future<Report>> batch;
    for (std::size_t i = lo; i < hi; ++i)
      batch.push_back(std::async(std::launch::async, detail::scan_one, names[i], cfg));
    for (std::size_t i = lo; i < hi; ++i) reports[i] = batch[i - lo].get();
  }

  std::map<std::string, std::size_t> counts;
  for (auto k : {VerdictKind::SolvableSkip, VerdictKind::HypothesisFails, VerdictKind::CaseI, VerdictKind::CaseII,
                 VerdictKind::Violation})
    counts[to_string(k)] = 0;
  std::size_t errors = 0, mismatches = 0;
  for (const auto& r : reports) {
    out << (cfg.machine ? to_machine_line(r) + "\n" : to_text(r));
    if (r.error) ++errors;
    else ++counts[to_string(r.verdict.kind)];
    if (r.mismatch) ++mismatches;
  }

  const std::array order{"SolvableSkip", "HypothesisFails", "CaseI", "CaseII", "Violation"};
  if (cfg.machine) {
    nlohmann::ordered_json s;
    s["groups"] = reports.size();
    for (const char* k : order) s[k] = counts[k];
    s["errors"] = errors;
    s["mismatches"] = mismatches;
    out << nlohmann::ordered_json{{"summary", s}}.dump() << '\n';
  } else {
    out << "summary: " << reports.size() << " groups";
    for (const char* k : order) out << ", " << k << " " << counts[k];
    out << ", errors " << errors << ", mismatches " << mismatches << '\n';
  }
  return counts["Violation"] || mismatches ? kViolation : kOk;
}

}  // namespace rvdeg::cli
