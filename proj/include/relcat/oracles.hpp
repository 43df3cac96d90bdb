#ifndef RELCAT_ORACLES_HPP
#define RELCAT_ORACLES_HPP

#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "relation.hpp"

// Reference computations that share no code path with the chain machinery.
// The harness checks the chain-based joins and closures against these.

namespace relcat::oracle {

/// Reflexive-transitive closure by Warshall's algorithm.
inline Relation warshall_closure(Relation const& r) {
  std::size_t const n = r.size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = true;
    r.for_each_in_row(i, [&](std::size_t j) { m[i][j] = true; });
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (m[k][j]) m[i][j] = true;
      }
    }
  }
  Relation out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j]) out.insert(i, j);
    }
  }
  return out;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

/// Equivalence closure by union-find.
inline Relation union_find_closure(Relation const& r) {
  std::size_t const n = r.size();
  DisjointSets ds(n);
  for (auto [i, j] : r.pairs()) ds.unite(i, j);
  Relation out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (ds.find(i) == ds.find(j)) out.insert(i, j);
    }
  }
  return out;
}

/// Least element of `candidates` under inclusion, if one exists.
inline std::optional<Relation> least_of(std::vector<Relation> const& candidates) {
  for (auto const& c : candidates) {
    bool least = true;
    for (auto const& d : candidates) {
      if (!leq(c, d)) {
        least = false;
        break;
      }
    }
    if (least) return c;
  }
  return std::nullopt;
}

}  // namespace relcat::oracle

#endif  // RELCAT_ORACLES_HPP
