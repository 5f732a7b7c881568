#pragma once

// Reference implementations used only by the tests. Nothing here calls into
// the library beyond reading generator images: the group is re-closed from
// raw image vectors, classes come from full pairwise conjugation, structure
// constants from enumerating all element pairs, and the table from a floating
// point eigen-decomposition of a random combination of class matrices.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using Perm = std::vector<std::uint32_t>;
using cplx = std::complex<double>;

struct Group {
  std::vector<Perm> elems;
  std::map<Perm, int> index;
  std::vector<std::vector<int>> mul;  // mul[a][b] = index of a(b(.))
  std::vector<int> inv;
};

inline Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Group close(const std::vector<Perm>& gens, std::size_t degree) {
  Group g;
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        auto y = compose(x, s);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  g.elems.assign(seen.begin(), seen.end());
  for (std::size_t i = 0; i < g.elems.size(); ++i) g.index[g.elems[i]] = static_cast<int>(i);
  const std::size_t n = g.elems.size();
  g.mul.assign(n, std::vector<int>(n));
  g.inv.assign(n, 0);
  const int e = g.index.at(id);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      g.mul[a][b] = g.index.at(compose(g.elems[a], g.elems[b]));
      if (g.mul[a][b] == e) g.inv[a] = static_cast<int>(b);
    }
  return g;
}

inline int identity(const Group& g) { return g.index.begin()->second; }  // identity sorts first

struct Classes {
  std::vector<std::vector<int>> members;  // class 0 is the identity
  std::vector<int> of;
};

/// Full pairwise conjugation: C(x) = { y^-1 x y : y in G }.
inline Classes classes(const Group& g) {
  const int n = static_cast<int>(g.elems.size());
  Classes c;
  c.of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (c.of[x] >= 0) continue;
    std::set<int> orbit;
    for (int y = 0; y < n; ++y) orbit.insert(g.mul[g.mul[g.inv[y]][x]][y]);
    const int id = static_cast<int>(c.members.size());
    c.members.emplace_back(orbit.begin(), orbit.end());
    for (int z : orbit) c.of[z] = id;
  }
  return c;
}

/// a[i][j][k] = #{(x, y) in C_i x C_j : xy = z_k} for a fixed z_k in C_k.
inline std::vector<std::vector<std::vector<long>>> structure_constants(const Group& g, const Classes& c) {
  const std::size_t k = c.members.size();
  std::vector<std::vector<std::vector<long>>> a(k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<long> hits(k, 0);
      for (int x : c.members[i])
        for (int y : c.members[j]) ++hits[c.of[g.mul[x][y]]];
      for (std::size_t t = 0; t < k; ++t) a[i][j][t] = hits[t] / static_cast<long>(c.members[t].size());
    }
  return a;
}

struct Table {
  std::vector<long> degrees;
  std::vector<std::vector<cplx>> chi;  // chi[row][class]
  std::vector<int> indicators;
  std::vector<bool> real;
};

inline Table burnside(const Group& g, const Classes& c, unsigned seed = 7) {
  const std::size_t k = c.members.size();
  const double order = static_cast<double>(g.elems.size());
  const auto a = structure_constants(g, c);
  // omega_i omega_j = sum_t a_ijt omega_t, so omega is an eigenvector of
  // M_i[j][t] = a_ijt with eigenvalue omega_i; mix the M_i to separate them.
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<long>(k), static_cast<long>(k));
  for (std::size_t i = 0; i < k; ++i) {
    const double w = coef(rng);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t t = 0; t < k; ++t) m(static_cast<long>(j), static_cast<long>(t)) += w * static_cast<double>(a[i][j][t]);
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success) throw std::runtime_error("oracle eigen-decomposition failed");
  Table t;
  for (std::size_t r = 0; r < k; ++r) {
    Eigen::VectorXcd v = es.eigenvectors().col(static_cast<long>(r));
    v /= v(0);
    double norm = 0;
    for (std::size_t j = 0; j < k; ++j) norm += std::norm(v(static_cast<long>(j))) / static_cast<double>(c.members[j].size());
    const double d = std::sqrt(order / norm);
    const long di = std::lround(d);
    if (std::abs(d - static_cast<double>(di)) > 1e-6) throw std::runtime_error("oracle degree is not an integer");
    std::vector<cplx> row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = static_cast<double>(di) * v(static_cast<long>(j)) / static_cast<double>(c.members[j].size());
    t.degrees.push_back(di);
    t.chi.push_back(row);
    bool real = true;
    for (auto z : row) real = real && std::abs(z.imag()) < 1e-6;
    t.real.push_back(real);
    cplx nu = 0;
    for (std::size_t x = 0; x < g.elems.size(); ++x) nu += row[c.of[g.mul[x][x]]];
    nu /= order;
    t.indicators.push_back(static_cast<int>(std::lround(nu.real())));
  }
  return t;
}

/// Table of A x B as the tensor product of factor tables. Columns are indexed
/// by pairs (i, j) flattened as i * kB + j.
inline Table tensor(const Table& a, const Table& b) {
  Table t;
  for (std::size_t r = 0; r < a.chi.size(); ++r)
    for (std::size_t s = 0; s < b.chi.size(); ++s) {
      std::vector<cplx> row;
      for (auto x : a.chi[r])
        for (auto y : b.chi[s]) row.push_back(x * y);
      t.degrees.push_back(a.degrees[r] * b.degrees[s]);
      t.chi.push_back(row);
      t.real.push_back(a.real[r] && b.real[s]);
      t.indicators.push_back(a.indicators[r] * b.indicators[s]);
    }
  return t;
}

inline std::vector<long> real_degree_set(const Table& t) {
  std::set<long> s;
  for (std::size_t r = 0; r < t.degrees.size(); ++r)
    if (t.real[r]) s.insert(t.degrees[r]);
  return {s.begin(), s.end()};
}

inline std::vector<long> sorted_degrees(const Table& t) {
  auto d = t.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace oracle
