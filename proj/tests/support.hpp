#ifndef RELCAT_TESTS_SUPPORT_HPP
#define RELCAT_TESTS_SUPPORT_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include <relcat/relcat.hpp>

// Brute-force references used by the tests. None of these call into the
// chain code or the bit-row composition.

namespace relcat::testing {

inline Relation rel(std::size_t n, std::initializer_list<Pair> pairs) {
  return make_relation(n, pairs);
}

/// Δ plus the given pairs.
inline Relation refl(std::size_t n, std::initializer_list<Pair> pairs) {
  return unite(Relation::delta(n), make_relation(n, pairs));
}

/// Equivalence from a block label per element.
inline Relation partition(std::vector<std::size_t> const& block) {
  Relation r(block.size());
  for (std::size_t i = 0; i < block.size(); ++i) {
    for (std::size_t j = 0; j < block.size(); ++j) {
      if (block[i] == block[j]) r.insert(i, j);
    }
  }
  return r;
}

/// s∘r by the triple loop: x r y, y s z.
inline Relation naive_compose(Relation const& s, Relation const& r) {
  std::size_t const n = r.size();
  Relation out(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!r.contains(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (s.contains(y, z)) out.insert(x, z);
      }
    }
  }
  return out;
}

/// Chain term by explicit path search: x reaches z in n steps where step i
/// (1-based) is taken in `r` when i ≡ n (mod 2) and in `s` otherwise.
inline Relation path_term(Relation const& r, Relation const& s, std::size_t n) {
  std::size_t const k = r.size();
  Relation out(k);
  std::function<void(std::size_t, std::size_t, std::size_t)> walk =
      [&](std::size_t start, std::size_t at, std::size_t step) {
        if (step > n) {
          out.insert(start, at);
          return;
        }
        Relation const& l = (step % 2 == n % 2) ? r : s;
        for (std::size_t y = 0; y < k; ++y) {
          if (l.contains(at, y) && !(step == n && out.contains(start, y))) {
            walk(start, y, step + 1);
          }
        }
      };
  for (std::size_t x = 0; x < k; ++x) walk(x, x, 1);
  return out;
}

/// Every relation on n points (n <= 4).
inline void for_each_relation(std::size_t n, std::function<void(Relation const&)> const& fn) {
  std::size_t const bits = n * n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    Relation r(n);
    for (std::size_t b = 0; b < bits; ++b) {
      if ((mask >> b) & 1U) r.insert(b / n, b % n);
    }
    fn(r);
  }
}

inline bool naive_reflexive(Relation const& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!r.contains(i, i)) return false;
  }
  return true;
}

inline bool naive_transitive(Relation const& r) {
  std::size_t const n = r.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (r.contains(a, b) && r.contains(b, c) && !r.contains(a, c)) return false;
      }
    }
  }
  return true;
}

inline bool naive_symmetric(Relation const& r) {
  for (std::size_t a = 0; a < r.size(); ++a) {
    for (std::size_t b = 0; b < r.size(); ++b) {
      if (r.contains(a, b) != r.contains(b, a)) return false;
    }
  }
  return true;
}

/// Least preorder (or equivalence) above `t` by scanning all of them.
inline Relation least_above(RelationKind kind, Relation const& t) {
  std::vector<Relation> above;
  for (auto const& p : enumerate(kind, t.size())) {
    if (leq(t, p)) above.push_back(p);
  }
  return *oracle::least_of(above);
}

/// Least congruence containing t: intersection of every compatible
/// equivalence above it.
inline Relation congruence_by_intersection(FiniteAlgebra const& a, Relation const& t) {
  Relation out = Relation::nabla(a.size());
  for (auto const& e : enumerate(RelationKind::equivalence, a.size(), 6)) {
    if (leq(t, e) && is_compatible(a, e)) out = intersect(out, e);
  }
  return out;
}

}  // namespace relcat::testing

#endif  // RELCAT_TESTS_SUPPORT_HPP
