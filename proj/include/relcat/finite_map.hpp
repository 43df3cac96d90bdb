#ifndef RELCAT_FINITE_MAP_HPP
#define RELCAT_FINITE_MAP_HPP

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "relation.hpp"

namespace relcat {

/// A function {0..domain-1} -> {0..codomain-1} given by its value table.
class FiniteMap {
 public:
  FiniteMap() = default;

  FiniteMap(std::size_t codomain, std::vector<std::size_t> values)
      : codomain_(codomain), values_(std::move(values)) {
    if (values_.size() > max_carrier() || codomain_ > max_carrier()) {
      throw CapacityError("map carrier exceeds bound " +
                          std::to_string(max_carrier()));
    }
    for (std::size_t x = 0; x < values_.size(); ++x) {
      if (values_[x] >= codomain_) {
        throw InputError("map value f(" + std::to_string(x) + ") = " +
                         std::to_string(values_[x]) + " out of range for codomain " +
                         std::to_string(codomain_));
      }
    }
  }

  static FiniteMap identity(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return FiniteMap(n, std::move(v));
  }

  [[nodiscard]] std::size_t domain() const noexcept { return values_.size(); }
  [[nodiscard]] std::size_t codomain() const noexcept { return codomain_; }
  [[nodiscard]] std::span<std::size_t const> values() const noexcept {
    return values_;
  }
  std::size_t operator()(std::size_t x) const { return values_[x]; }

  /// Every codomain element is attained. In finite sets these are exactly
  /// the regular epimorphisms.
  [[nodiscard]] bool is_surjective() const {
    std::vector<bool> hit(codomain_, false);
    std::size_t seen = 0;
    for (auto v : values_) {
      if (!hit[v]) {
        hit[v] = true;
        ++seen;
      }
    }
    return seen == codomain_;
  }

  friend bool operator==(FiniteMap const&, FiniteMap const&) = default;

 private:
  std::size_t codomain_ = 0;
  std::vector<std::size_t> values_;
};

inline FiniteMap make_map(std::size_t domain, std::size_t codomain,
                          std::vector<std::size_t> values) {
  if (values.size() != domain) {
    throw InputError("map expects " + std::to_string(domain) + " values, got " +
                     std::to_string(values.size()));
  }
  return FiniteMap(codomain, std::move(values));
}

/// R[f] = {(x, x') : f(x) = f(x')}.
inline Relation kernel_pair(FiniteMap const& f) {
  Relation r(f.domain());
  for (std::size_t x = 0; x < f.domain(); ++x) {
    for (std::size_t y = 0; y < f.domain(); ++y) {
      if (f(x) == f(y)) r.insert(x, y);
    }
  }
  return r;
}

/// f(R) = {(f x, f x') : x R x'}.
inline Relation direct_image(FiniteMap const& f, Relation const& r) {
  if (r.size() != f.domain()) {
    throw InputError("direct_image: relation carrier " + std::to_string(r.size()) +
                     " differs from map domain " + std::to_string(f.domain()));
  }
  Relation out(f.codomain());
  for (std::size_t x = 0; x < r.size(); ++x) {
    r.for_each_in_row(x, [&](std::size_t y) { out.insert(f(x), f(y)); });
  }
  return out;
}

/// f^{-1}(S) = {(x, x') : f x S f x'}.
inline Relation inverse_image(FiniteMap const& f, Relation const& s) {
  if (s.size() != f.codomain()) {
    throw InputError("inverse_image: relation carrier " +
                     std::to_string(s.size()) + " differs from map codomain " +
                     std::to_string(f.codomain()));
  }
  Relation out(f.domain());
  for (std::size_t x = 0; x < f.domain(); ++x) {
    for (std::size_t y = 0; y < f.domain(); ++y) {
      if (s.contains(f(x), f(y))) out.insert(x, y);
    }
  }
  return out;
}

/// Right inverse of a surjection choosing the least preimage of each point.
inline FiniteMap section(FiniteMap const& f) {
  if (!f.is_surjective()) {
    throw InputError("section: map is not surjective");
  }
  std::vector<std::size_t> s(f.codomain(), f.domain());
  for (std::size_t x = f.domain(); x-- > 0;) {
    s[f(x)] = x;
  }
  return FiniteMap(f.domain(), std::move(s));
}

using Quadruple = std::array<std::size_t, 4>;

/// R □ S as the set of (u, v, u', v') with u R u', v R v', u S v, u' S v',
/// sorted lexicographically.
inline std::vector<Quadruple> square(Relation const& r, Relation const& s) {
  detail::require_same_carrier(r, s, "square");
  std::vector<Quadruple> out;
  std::size_t const n = r.size();
  for (std::size_t u = 0; u < n; ++u) {
    s.for_each_in_row(u, [&](std::size_t v) {
      r.for_each_in_row(u, [&](std::size_t u2) {
        r.for_each_in_row(v, [&](std::size_t v2) {
          if (s.contains(u2, v2)) out.push_back({u, v, u2, v2});
        });
      });
    });
  }
  return out;
}

/// A relation viewed as an object: its pairs, in lexicographic order, index
/// a fresh carrier with the two projections d0, d1 back to the base carrier.
struct PairCarrier {
  std::vector<Pair> pairs;
  FiniteMap d0;
  FiniteMap d1;
};

inline PairCarrier relation_as_carrier(Relation const& r) {
  PairCarrier pc;
  pc.pairs = r.pairs();
  std::vector<std::size_t> v0, v1;
  v0.reserve(pc.pairs.size());
  v1.reserve(pc.pairs.size());
  for (auto [a, b] : pc.pairs) {
    v0.push_back(a);
    v1.push_back(b);
  }
  pc.d0 = FiniteMap(r.size(), std::move(v0));
  pc.d1 = FiniteMap(r.size(), std::move(v1));
  return pc;
}

}  // namespace relcat

#endif  // RELCAT_FINITE_MAP_HPP
