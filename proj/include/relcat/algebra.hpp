#ifndef RELCAT_ALGEBRA_HPP
#define RELCAT_ALGEBRA_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chains.hpp"
#include "relation.hpp"

namespace relcat {

/// A finitary operation given by its full table. Argument tuples are laid
/// out row-major: (a_1, ..., a_k) sits at index a_1 n^{k-1} + ... + a_k.
struct Operation {
  std::string name;
  std::size_t arity = 0;
  std::vector<std::size_t> table;

  friend bool operator==(Operation const&, Operation const&) = default;
};

class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;

  FiniteAlgebra(std::size_t n, std::vector<Operation> ops)
      : n_(n), ops_(std::move(ops)) {
    if (n_ > max_carrier()) {
      throw CapacityError("algebra carrier exceeds bound " +
                          std::to_string(max_carrier()));
    }
    for (auto const& op : ops_) {
      std::size_t expected = 1;
      for (std::size_t i = 0; i < op.arity; ++i) {
        if (n_ != 0 && expected > (std::size_t{1} << 26) / n_) {
          throw CapacityError("operation '" + op.name + "' table too large");
        }
        expected *= n_;
      }
      if (op.table.size() != expected) {
        throw InputError("operation '" + op.name + "' of arity " +
                         std::to_string(op.arity) + " needs " +
                         std::to_string(expected) + " entries, got " +
                         std::to_string(op.table.size()));
      }
      for (auto v : op.table) {
        if (v >= n_) {
          throw InputError("operation '" + op.name + "' has entry " +
                           std::to_string(v) + " outside the carrier");
        }
      }
    }
  }

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] std::vector<Operation> const& operations() const noexcept {
    return ops_;
  }

  [[nodiscard]] std::size_t apply(Operation const& op,
                                  std::span<std::size_t const> args) const {
    std::size_t idx = 0;
    for (auto a : args) idx = idx * n_ + a;
    return op.table[idx];
  }

  friend bool operator==(FiniteAlgebra const&, FiniteAlgebra const&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Operation> ops_;
};

inline FiniteAlgebra make_algebra(std::size_t n, std::vector<Operation> ops) {
  return FiniteAlgebra(n, std::move(ops));
}

namespace detail {

// Calls fn(xs, ys) for every pair of k-tuples related componentwise by r.
// Returns false as soon as fn does.
template <typename Fn>
bool for_each_related_tuple(Relation const& r, std::size_t arity, Fn&& fn) {
  auto const pairs = r.pairs();
  std::vector<std::size_t> pick(arity, 0), xs(arity), ys(arity);
  if (arity > 0 && pairs.empty()) return true;
  while (true) {
    for (std::size_t i = 0; i < arity; ++i) {
      xs[i] = pairs[pick[i]].first;
      ys[i] = pairs[pick[i]].second;
    }
    if (!fn(std::span<std::size_t const>(xs), std::span<std::size_t const>(ys))) {
      return false;
    }
    std::size_t i = arity;
    while (i > 0) {
      --i;
      if (++pick[i] < pairs.size()) break;
      pick[i] = 0;
      if (i == 0) return true;
    }
    if (arity == 0) return true;
  }
}

}  // namespace detail

/// Every operation maps componentwise-related tuples to related results.
inline bool is_compatible(FiniteAlgebra const& a, Relation const& r) {
  if (r.size() != a.size()) {
    throw InputError("is_compatible: relation carrier differs from algebra");
  }
  for (auto const& op : a.operations()) {
    bool ok = detail::for_each_related_tuple(
        r, op.arity, [&](auto xs, auto ys) {
          return r.contains(a.apply(op, xs), a.apply(op, ys));
        });
    if (!ok) return false;
  }
  return true;
}

struct Congruence {
  Relation relation;
  bool compatible = false;

  friend bool operator==(Congruence const&, Congruence const&) = default;
};

/// Least congruence containing t: alternate equivalence closure with one
/// round of operation closure until nothing changes.
inline Congruence congruence_generated(FiniteAlgebra const& a, Relation const& t) {
  if (t.size() != a.size()) {
    throw InputError("congruence_generated: relation carrier differs from algebra");
  }
  Relation cur = closure(OrderKind::equivalence, t);
  while (true) {
    Relation next = cur;
    for (auto const& op : a.operations()) {
      detail::for_each_related_tuple(cur, op.arity, [&](auto xs, auto ys) {
        next.insert(a.apply(op, xs), a.apply(op, ys));
        return true;
      });
    }
    next = closure(OrderKind::equivalence, next);
    if (next == cur) break;
    cur = std::move(next);
  }
  return {cur, true};
}

inline Congruence make_congruence(FiniteAlgebra const& a, Relation const& r) {
  if (!is_equivalence(r)) {
    throw InputError("congruence: relation is not an equivalence");
  }
  if (!is_compatible(a, r)) {
    throw InputError("congruence: relation is not compatible with the operations");
  }
  return {r, true};
}

/// R ∨ S in the congruence lattice, as Σ((R, S)).
inline Congruence congruence_join(FiniteAlgebra const& a, Congruence const& r,
                                  Congruence const& s) {
  Relation j = supremum_sigma(r.relation, s.relation);
  return {j, is_compatible(a, j)};
}

inline constexpr std::size_t kDefaultLatticeBound = 6;

struct CongruenceLattice {
  std::vector<Relation> elements;  // row-major lexicographic order
  std::vector<std::vector<std::size_t>> meet;
  std::vector<std::vector<std::size_t>> join;

  [[nodiscard]] std::size_t index_of(Relation const& r) const {
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i] == r) return i;
    }
    throw InputError("relation is not a congruence of this algebra");
  }
};

inline CongruenceLattice congruence_lattice(FiniteAlgebra const& a,
                                            std::size_t bound = kDefaultLatticeBound) {
  CongruenceLattice lat;
  for (auto& e : enumerate(RelationKind::equivalence, a.size(), bound)) {
    if (is_compatible(a, e)) lat.elements.push_back(std::move(e));
  }
  std::size_t const k = lat.elements.size();
  lat.meet.assign(k, std::vector<std::size_t>(k, 0));
  lat.join.assign(k, std::vector<std::size_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      auto const& x = lat.elements[i];
      auto const& y = lat.elements[j];
      lat.meet[i][j] = lat.meet[j][i] = lat.index_of(intersect(x, y));
      lat.join[i][j] = lat.join[j][i] = lat.index_of(supremum_sigma(x, y));
    }
  }
  return lat;
}

/// Congruences (R, S, T) with R ⊆ T violating (R ∨ S) ∧ T = R ∨ (S ∧ T).
struct ModularTriple {
  Relation r;
  Relation s;
  Relation t;
};

struct ModularityVerdict {
  bool modular = true;
  std::optional<ModularTriple> witness;
};

inline bool modular_law_holds(FiniteAlgebra const& a, Relation const& r,
                              Relation const& s, Relation const& t) {
  Congruence const cr = make_congruence(a, r);
  Congruence const cs = make_congruence(a, s);
  Congruence const ct = make_congruence(a, t);
  if (!leq(r, t)) throw InputError("modular law needs R included in T");
  Relation lhs = intersect(congruence_join(a, cr, cs).relation, ct.relation);
  Relation rhs = congruence_join(a, cr, {intersect(s, t), true}).relation;
  return lhs == rhs;
}

inline ModularityVerdict modularity_check(FiniteAlgebra const& a,
                                          std::size_t bound = kDefaultLatticeBound) {
  CongruenceLattice const lat = congruence_lattice(a, bound);
  std::size_t const k = lat.elements.size();
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t t = 0; t < k; ++t) {
      if (!leq(lat.elements[r], lat.elements[t])) continue;
      for (std::size_t s = 0; s < k; ++s) {
        std::size_t lhs = lat.meet[lat.join[r][s]][t];
        std::size_t rhs = lat.join[r][lat.meet[s][t]];
        if (lhs != rhs) {
          return {false, ModularTriple{lat.elements[r], lat.elements[s],
                                       lat.elements[t]}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

using ShiftingQuadruple = std::array<std::size_t, 4>;  // (x, x', t, t')

struct ShiftingVerdict {
  bool holds = true;
  std::optional<ShiftingQuadruple> witness;
};

/// Scans (x, x', t, t') with x S t, x' S t', x R x', t T t' for a case where
/// x T x' fails. Requires congruences T ⊆ R and a compatible reflexive
/// symmetric S with S ∩ R ⊆ T.
inline ShiftingVerdict shifting_principle_check(FiniteAlgebra const& a,
                                                Relation const& t,
                                                Relation const& s,
                                                Relation const& r) {
  std::size_t const n = a.size();
  if (t.size() != n || s.size() != n || r.size() != n) {
    throw InputError("shifting: relation carrier differs from algebra");
  }
  if (!is_equivalence(t) || !is_compatible(a, t)) {
    throw InputError("shifting: T is not a congruence");
  }
  if (!is_equivalence(r) || !is_compatible(a, r)) {
    throw InputError("shifting: R is not a congruence");
  }
  if (!leq(t, r)) throw InputError("shifting: T is not included in R");
  if (!is_reflexive(s) || !is_symmetric(s) || !is_compatible(a, s)) {
    throw InputError("shifting: S is not a compatible reflexive symmetric relation");
  }
  if (!leq(intersect(s, r), t)) {
    throw InputError("shifting: S ∩ R is not included in T");
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t x2 = 0; x2 < n; ++x2) {
      if (!r.contains(x, x2) || t.contains(x, x2)) continue;
      for (std::size_t u = 0; u < n; ++u) {
        if (!s.contains(x, u)) continue;
        for (std::size_t u2 = 0; u2 < n; ++u2) {
          if (s.contains(x2, u2) && t.contains(u, u2)) {
            return {false, ShiftingQuadruple{x, x2, u, u2}};
          }
        }
      }
    }
  }
  return {true, std::nullopt};
}

/// Compatible reflexive symmetric relations, in row-major lexicographic
/// order. Exponential in n(n-1)/2.
inline std::vector<Relation> compatible_tolerances(FiniteAlgebra const& a) {
  std::size_t const n = a.size();
  std::vector<Pair> slots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  if (slots.size() > 24) {
    throw CapacityError("too many symmetric relations on " + std::to_string(n) +
                        " elements to scan");
  }
  std::vector<Relation> out;
  std::uint64_t const total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Relation s = Relation::delta(n);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if ((mask >> k) & 1U) {
        s.insert(slots[k].first, slots[k].second);
        s.insert(slots[k].second, slots[k].first);
      }
    }
    if (is_compatible(a, s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), row_major_less);
  return out;
}

enum class ShiftingRange { tolerances, congruences };

struct ShiftingWitness {
  Relation t;
  Relation s;
  Relation r;
  ShiftingQuadruple quadruple{};
};

struct ShiftingScan {
  bool holds = true;
  std::size_t admissible = 0;  // triples satisfying the hypotheses
  std::optional<ShiftingWitness> witness;
};

/// Runs the shifting check over every admissible triple: congruences T ⊆ R
/// and S drawn from the compatible tolerances (or congruences only).
inline ShiftingScan shifting_principle_scan(
    FiniteAlgebra const& a, ShiftingRange range = ShiftingRange::tolerances,
    std::size_t bound = kDefaultLatticeBound) {
  CongruenceLattice const lat = congruence_lattice(a, bound);
  std::vector<Relation> const ss =
      range == ShiftingRange::tolerances ? compatible_tolerances(a) : lat.elements;
  ShiftingScan scan;
  for (auto const& t : lat.elements) {
    for (auto const& r : lat.elements) {
      if (!leq(t, r)) continue;
      for (auto const& s : ss) {
        if (!leq(intersect(s, r), t)) continue;
        ++scan.admissible;
        auto v = shifting_principle_check(a, t, s, r);
        if (!v.holds) {
          scan.holds = false;
          scan.witness = ShiftingWitness{t, s, r, *v.witness};
          return scan;
        }
      }
    }
  }
  return scan;
}

/// (T ∨ S) ∩ R against the stabilized union of (T,S)_i ∩ R.
inline bool day_formula_check(FiniteAlgebra const& a, Congruence const& t,
                              Congruence const& s, Congruence const& r) {
  Relation lhs = intersect(congruence_join(a, t, s).relation, r.relation);
  auto trace = chain_trace(t.relation, s.relation);
  Relation rhs(a.size());
  for (std::size_t i = 0; i <= *trace.stationary_index + 2; ++i) {
    rhs = unite(rhs, intersect(trace.terms[i], r.relation));
  }
  return lhs == rhs;
}

}  // namespace relcat

#endif  // RELCAT_ALGEBRA_HPP
