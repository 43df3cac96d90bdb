#ifndef RELCAT_RANDOM_HPP
#define RELCAT_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "algebra.hpp"
#include "chains.hpp"
#include "finite_map.hpp"
#include "relation.hpp"

namespace relcat {

/// SplitMix64 finalizer.
inline constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of sample `index` under `master`:
///   splitmix64(master ^ splitmix64(index))
/// Independent of thread count and evaluation order.
inline constexpr std::uint64_t sample_seed(std::uint64_t master,
                                           std::uint64_t index) noexcept {
  return splitmix64(master ^ splitmix64(index));
}

/// mt19937_64 with distribution code kept here so that draws are identical
/// across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound); bound must be positive.
  std::size_t below(std::size_t bound) {
    std::uint64_t const b = bound;
    std::uint64_t const limit = ~std::uint64_t{0} - (~std::uint64_t{0} % b);
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return static_cast<std::size_t>(v % b);
  }

  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return u < p;
  }

 private:
  std::mt19937_64 engine_;
};

inline constexpr std::size_t kMaxRandomCarrier = 64;
inline constexpr double kDefaultDensity = 0.25;

enum class RandomKind { relation, reflexive, preorder, equivalence, surjection, algebra };

struct GenParams {
  std::size_t n = 4;                      // carrier (domain for maps)
  std::size_t m = 0;                      // codomain for surjections
  double density = kDefaultDensity;
  std::vector<std::size_t> arities{2};    // signature for algebras
};

namespace detail {
inline void check_random_carrier(std::size_t n) {
  if (n > kMaxRandomCarrier) {
    throw InputError("random carrier " + std::to_string(n) + " exceeds " +
                     std::to_string(kMaxRandomCarrier));
  }
}
}  // namespace detail

/// Plain relations draw every bit; the other kinds draw off-diagonal bits
/// and then normalize (add Δ, symmetrize, close).
inline Relation random_relation(Rng& rng, RandomKind kind, std::size_t n,
                                double density = kDefaultDensity) {
  detail::check_random_carrier(n);
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((i != j || kind == RandomKind::relation) && rng.bernoulli(density)) {
        r.insert(i, j);
      }
    }
  }
  switch (kind) {
    case RandomKind::relation:
      return r;
    case RandomKind::reflexive:
      return unite(r, Relation::delta(n));
    case RandomKind::preorder:
      return closure(OrderKind::preorder, r);
    case RandomKind::equivalence:
      return closure(OrderKind::equivalence, r);
    default:
      throw InputError("random_relation: not a relation kind");
  }
}

/// Random values, then a patch pass so every codomain point is attained.
inline FiniteMap random_surjection(Rng& rng, std::size_t n, std::size_t m) {
  detail::check_random_carrier(n);
  if (m > n || (m == 0 && n > 0)) {
    throw InputError("no surjection from " + std::to_string(n) + " onto " +
                     std::to_string(m));
  }
  std::vector<std::size_t> v(n);
  std::vector<std::size_t> hits(m, 0);
  for (auto& x : v) {
    x = rng.below(m);
    ++hits[x];
  }
  for (std::size_t y = 0; y < m; ++y) {
    if (hits[y] != 0) continue;
    std::vector<std::size_t> donors;
    for (std::size_t x = 0; x < n; ++x) {
      if (hits[v[x]] > 1) donors.push_back(x);
    }
    std::size_t x = donors[rng.below(donors.size())];
    --hits[v[x]];
    v[x] = y;
    ++hits[y];
  }
  return FiniteMap(m, std::move(v));
}

inline FiniteAlgebra random_algebra(Rng& rng, std::size_t n,
                                    std::vector<std::size_t> const& arities) {
  detail::check_random_carrier(n);
  if (n == 0 && !arities.empty()) {
    throw InputError("random_algebra: empty carrier with operations");
  }
  std::vector<Operation> ops;
  for (std::size_t k = 0; k < arities.size(); ++k) {
    if (arities[k] > 3) throw InputError("random_algebra: arity above 3");
    std::size_t len = 1;
    for (std::size_t i = 0; i < arities[k]; ++i) len *= n;
    Operation op{"op" + std::to_string(k), arities[k], std::vector<std::size_t>(len)};
    for (auto& e : op.table) e = rng.below(n);
    ops.push_back(std::move(op));
  }
  return make_algebra(n, std::move(ops));
}

using RandomInstance = std::variant<Relation, FiniteMap, FiniteAlgebra>;

/// Deterministic in (kind, params, seed).
inline RandomInstance gen_random(RandomKind kind, GenParams const& params,
                                 std::uint64_t seed) {
  Rng rng(seed);
  switch (kind) {
    case RandomKind::surjection:
      return random_surjection(rng, params.n, params.m);
    case RandomKind::algebra:
      return random_algebra(rng, params.n, params.arities);
    default:
      return random_relation(rng, kind, params.n, params.density);
  }
}

}  // namespace relcat

#endif  // RELCAT_RANDOM_HPP
