#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "rvdeg/errors.hpp"

namespace rvdeg {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1}. images()[i] is the image of point i.
class Permutation {
 public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point p : images_) {
      if (p >= images_.size() || seen[p])
        throw StructuralError("permutation images are not a bijection");
      seen[p] = true;
    }
  }

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Builds a permutation from 0-based disjoint cycles.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    std::vector<bool> used(degree, false);
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        Point a = cyc[i];
        if (a >= degree) throw StructuralError("cycle point out of range");
        if (used[a]) throw StructuralError("point repeated across cycles");
        used[a] = true;
        img[a] = cyc[(i + 1) % cyc.size()];
      }
    }
    return Permutation(std::move(img));
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation inverse() const {
    std::vector<Point> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
    Permutation r;
    r.images_ = std::move(inv);
    return r;
  }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  /// Disjoint-cycle string, 1-based points, fixed points omitted; identity is "()".
  std::string to_cycles() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      out += '(';
      std::size_t j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = true;
        if (!first) out += ',';
        out += std::to_string(j + 1);
        first = false;
        j = images_[j];
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  friend Permutation compose(const Permutation& a, const Permutation& b);
  std::vector<Point> images_;
};

/// (a . b)(i) = a(b(i)): b is applied first.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw StructuralError("compose: degree mismatch");
  Permutation r;
  r.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) r.images_[i] = a.images_[b.images_[i]];
  return r;
}

inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// A finite group given by generators on `degree` points.
struct GroupSpec {
  std::size_t degree = 1;
  std::vector<Permutation> generators;
  std::string name;

  void validate() const {
    if (generators.empty()) throw StructuralError("group spec has no generators");
    for (const auto& g : generators)
      if (g.degree() != degree) throw StructuralError("generator degree does not match group degree");
  }
};

inline GroupSpec trivial_group_spec(std::string name = "1") {
  return GroupSpec{1, {Permutation::identity(1)}, std::move(name)};
}

}  // namespace rvdeg
