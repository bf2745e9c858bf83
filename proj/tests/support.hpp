#pragma once

// Shared fixtures and brute-force oracles for the test suites. The oracles
// read only the order relation and recompute everything from first
// principles, so they do not share code with the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sectional/sectional.hpp"

namespace fixtures {

using namespace sectional;

inline std::string corpus(const std::string& file) { return std::string(SECTIONAL_CORPUS) + "/" + file; }

inline Document load(const std::string& file) { return load_document(corpus(file)); }

inline Poset poset(const std::string& file, const std::string& name) { return load(file).poset(name).poset; }

inline const PartialTable& partial(const Document& d, const std::string& name) {
  return std::get<PartialTable>(d.table(name).table);
}

inline const TotalTable& total(const Document& d, const std::string& name) {
  return std::get<TotalTable>(d.table(name).table);
}

inline Poset make(const std::string& name, std::vector<std::string> elements,
                  std::vector<std::pair<std::string, std::string>> covers) {
  std::vector<OrderDeclaration> decl;
  for (auto& [a, b] : covers) decl.push_back({OrderDeclaration::Kind::cover, a, b});
  return build_poset(name, std::move(elements), decl);
}

/// Builds a table from rows of labels, "-" for undefined cells.
inline std::vector<int> cells(const Poset& p, const std::vector<std::vector<std::string>>& rows) {
  std::vector<int> out;
  for (const auto& row : rows)
    for (const auto& v : row) out.push_back(v == "-" ? kUndefinedCell : p.index_of(v));
  return out;
}

}  // namespace fixtures

namespace oracle {

/// Order relation as a plain matrix.
struct Order {
  int n = 0;
  std::vector<std::vector<bool>> le;

  explicit Order(const sectional::Poset& p) : n(static_cast<int>(p.size())), le(n, std::vector<bool>(n)) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) le[i][j] = p.leq(i, j);
  }

  // greatest element of a list, or -1
  int greatest(const std::vector<int>& s) const {
    for (int g : s)
      if (std::all_of(s.begin(), s.end(), [&](int v) { return le[v][g]; })) return g;
    return -1;
  }
  std::vector<int> above(int y) const {
    std::vector<int> out;
    for (int u = 0; u < n; ++u)
      if (le[y][u]) out.push_back(u);
    return out;
  }
  int top(int y) const { return greatest(above(y)); }
  std::optional<int> meet(int a, int b) const {
    std::vector<int> lower;
    for (int v = 0; v < n; ++v)
      if (le[v][a] && le[v][b]) lower.push_back(v);
    int g = greatest(lower);
    if (g < 0) return std::nullopt;
    return g;
  }
};

/// x*y for y <= x: the greatest u >= y whose only common lower bound with x
/// above y is y itself. -1 if there is no greatest such u.
inline int sp_cell(const Order& o, int x, int y) {
  std::vector<int> cand;
  for (int u = 0; u < o.n; ++u) {
    if (!o.le[y][u]) continue;
    bool only_y = true;
    for (int w = 0; w < o.n; ++w)
      if (o.le[y][w] && o.le[w][u] && o.le[w][x] && w != y) only_y = false;
    if (only_y) cand.push_back(u);
  }
  return o.greatest(cand);
}

/// Full star table (row-major, -1 off the domain), or nullopt if some
/// pseudocomplement is missing.
inline std::optional<std::vector<int>> sp_table(const Order& o) {
  std::vector<int> t(static_cast<std::size_t>(o.n * o.n), -1);
  for (int x = 0; x < o.n; ++x)
    for (int y = 0; y < o.n; ++y)
      if (o.le[y][x]) {
        int v = sp_cell(o, x, y);
        if (v < 0) return std::nullopt;
        t[static_cast<std::size_t>(x * o.n + y)] = v;
      }
  return t;
}

/// An arrow table is an extended sp-complementation iff it agrees with the
/// star table on y <= x.
inline bool is_esp(const Order& o, const std::vector<int>& t) {
  auto s = sp_table(o);
  if (!s) return false;
  for (int x = 0; x < o.n; ++x)
    for (int y = 0; y < o.n; ++y)
      if (o.le[y][x] && t[static_cast<std::size_t>(x * o.n + y)] != (*s)[static_cast<std::size_t>(x * o.n + y)])
        return false;
  return true;
}

/// The natural extension: x*y on y <= x, 1_y elsewhere.
inline std::optional<std::vector<int>> natural(const Order& o) {
  auto s = sp_table(o);
  if (!s) return std::nullopt;
  for (int x = 0; x < o.n; ++x)
    for (int y = 0; y < o.n; ++y)
      if (!o.le[y][x]) {
        int t = o.top(y);
        if (t < 0) return std::nullopt;
        (*s)[static_cast<std::size_t>(x * o.n + y)] = t;
      }
  return s;
}

/// j1: x <= y->z implies y <= x->z. j2: x <= x->y implies x <= y.
/// j3: if x ∧ y exists, x <= y -> (x ∧ y).
inline bool satisfies_j(const Order& o, const std::vector<int>& t) {
  auto at = [&](int x, int y) { return t[static_cast<std::size_t>(x * o.n + y)]; };
  for (int x = 0; x < o.n; ++x)
    for (int y = 0; y < o.n; ++y) {
      for (int z = 0; z < o.n; ++z)
        if (o.le[x][at(y, z)] && !o.le[y][at(x, z)]) return false;
      if (o.le[x][at(x, y)] && !o.le[x][y]) return false;
      if (auto m = o.meet(x, y); m && !o.le[x][at(y, *m)]) return false;
    }
  return true;
}

/// Partial orders on n labeled points by filtering every relation: each
/// off-diagonal pair is in or out, keep the antisymmetric transitive ones.
inline std::uint64_t count_labeled_posets(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::uint64_t count = 0;
  std::uint64_t limit = std::uint64_t{1} << pairs.size();
  std::vector<std::uint32_t> rel(static_cast<std::size_t>(n));
  for (std::uint64_t m = 0; m < limit; ++m) {
    std::fill(rel.begin(), rel.end(), 0U);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (m >> k & 1U) rel[static_cast<std::size_t>(pairs[k].first)] |= 1U << pairs[k].second;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (!(rel[i] >> j & 1U)) continue;
        if (rel[j] >> i & 1U) ok = false;
        if ((rel[j] & ~rel[i] & ~(1U << i)) != 0) ok = false;  // transitivity
      }
    if (ok) ++count;
  }
  return count;
}

/// Relation of a labeled poset as a bit matrix; used for brute-force
/// isomorphism classes.
inline std::uint64_t relation_bits(const std::vector<std::vector<bool>>& le, const std::vector<int>& perm) {
  int n = static_cast<int>(le.size());
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (le[i][j]) bits |= std::uint64_t{1} << (perm[i] * n + perm[j]);
  return bits;
}

/// Posets on n points up to isomorphism: smallest relation code over all
/// n! relabelings, counted over the labeled enumeration.
inline std::uint64_t count_unlabeled(const std::vector<sectional::Poset>& labeled) {
  std::vector<std::uint64_t> codes;
  for (const auto& p : labeled) {
    Order o(p);
    std::vector<int> perm(static_cast<std::size_t>(o.n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do best = std::min(best, relation_bits(o.le, perm));
    while (std::next_permutation(perm.begin(), perm.end()));
    codes.push_back(best);
  }
  std::sort(codes.begin(), codes.end());
  return static_cast<std::uint64_t>(std::unique(codes.begin(), codes.end()) - codes.begin());
}

}  // namespace oracle
