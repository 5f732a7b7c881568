#pragma once

// The .grp text format:
//
//   degree N
//   (1,2)(3,4,5)
//   ()
//
// One generator per line in disjoint-cycle notation with 1-based points.
// '#' starts a comment; blank lines are ignored; "()" is the identity.

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rvdeg/errors.hpp"
#include "rvdeg/permutation.hpp"

namespace rvdeg {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline Permutation parse_cycles(std::string_view text, std::size_t degree, std::size_t line) {
  std::vector<std::vector<Point>> cycles;
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty generator", line);
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("malformed cycle: expected '('", line);
    ++i;
    std::vector<Point> cyc;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;
      skip_ws();
      continue;  // "()" contributes nothing
    }
    for (;;) {
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw ParseError("malformed cycle: expected a point", line);
      const unsigned long long pt = std::stoull(std::string(text.substr(start, i - start)));
      if (pt < 1 || pt > degree)
        throw ParseError("point " + std::to_string(pt) + " out of range 1.." + std::to_string(degree), line);
      if (used[pt - 1]) throw ParseError("point " + std::to_string(pt) + " repeated", line);
      used[pt - 1] = true;
      cyc.push_back(static_cast<Point>(pt - 1));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      throw ParseError("malformed cycle: expected ',' or ')'", line);
    }
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return Permutation::from_cycles(degree, cycles);
}

}  // namespace detail

inline GroupSpec parse_grp(std::string_view text, std::string name = "input") {
  GroupSpec spec;
  spec.name = std::move(name);
  bool have_degree = false;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    if (!have_degree) {
      if (line.substr(0, 6) != "degree") throw ParseError("expected 'degree N' header", lineno);
      std::string_view num = detail::trim(line.substr(6));
      if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("malformed degree", lineno);
      spec.degree = std::stoull(std::string(num));
      if (spec.degree == 0) throw ParseError("degree must be positive", lineno);
      have_degree = true;
      continue;
    }
    spec.generators.push_back(detail::parse_cycles(line, spec.degree, lineno));
  }
  if (!have_degree) throw ParseError("missing 'degree N' header", lineno);
  if (spec.generators.empty()) throw ParseError("no generators", lineno);
  return spec;
}

inline GroupSpec read_grp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
  if (name.size() > 4 && name.ends_with(".grp")) name.resize(name.size() - 4);
  return parse_grp(ss.str(), name);
}

inline std::string format_grp(const GroupSpec& spec) {
  std::string out = "# " + spec.name + "\ndegree " + std::to_string(spec.degree) + "\n";
  for (const auto& g : spec.generators) out += g.to_cycles() + "\n";
  return out;
}

}  // namespace rvdeg
