#ifndef RELCAT_COCARTESIAN_HPP
#define RELCAT_COCARTESIAN_HPP

#include <string>
#include <vector>

#include "chains.hpp"
#include "finite_map.hpp"
#include "relation.hpp"

namespace relcat {

inline char const* to_string(OrderKind kind) {
  return kind == OrderKind::preorder ? "preorder" : "equivalence";
}

inline bool has_kind(Relation const& r, OrderKind kind) {
  return kind == OrderKind::preorder ? is_preorder(r) : is_equivalence(r);
}

namespace detail {
inline void require_kind(Relation const& r, OrderKind kind, char const* what) {
  if (!has_kind(r, kind)) {
    throw InputError(std::string(what) + " is not a " + to_string(kind));
  }
}

inline void require_surjective(FiniteMap const& f) {
  if (!f.is_surjective()) {
    throw InputError("map is not surjective");
  }
}
}  // namespace detail

/// R ∨ S among preorders (or equivalences), computed as Σ((R, S)).
inline Relation join(OrderKind kind, Relation const& r, Relation const& s) {
  detail::require_same_carrier(r, s, "join");
  detail::require_kind(r, kind, "left join operand");
  detail::require_kind(s, kind, "right join operand");
  return supremum_sigma(r, s);
}

struct CocartesianResult {
  FiniteMap map;
  Relation source;
  Relation image;             // f_!(T)
  Relation join_over_kernel;  // R[f] ∨ T
  bool certified = false;
};

/// Cocartesian image of T along a surjection f:
///   T ↪ Σ((R[f], T)) ↠ f(Σ((R[f], T))),
/// certified by f^{-1}(image) = R[f] ∨ T.
inline CocartesianResult cocartesian_image(OrderKind kind, FiniteMap const& f,
                                           Relation const& t) {
  detail::require_surjective(f);
  if (t.size() != f.domain()) {
    throw InputError("cocartesian_image: relation carrier differs from map domain");
  }
  detail::require_kind(t, kind, "source relation");
  CocartesianResult res{f, t, {}, {}, false};
  res.join_over_kernel = supremum_sigma(kernel_pair(f), t);
  res.image = direct_image(f, res.join_over_kernel);
  res.certified = inverse_image(f, res.image) == res.join_over_kernel;
  return res;
}

/// Whether T -> S above f is cocartesian, i.e. f^{-1}(S) = R[f] ∨ T.
inline bool is_cocartesian(OrderKind kind, FiniteMap const& f, Relation const& t,
                           Relation const& s) {
  detail::require_surjective(f);
  if (t.size() != f.domain() || s.size() != f.codomain()) {
    throw InputError("is_cocartesian: carrier mismatch");
  }
  detail::require_kind(t, kind, "source relation");
  detail::require_kind(s, kind, "target relation");
  Relation pulled = inverse_image(f, s);
  if (!leq(t, pulled)) {
    throw InputError("is_cocartesian: T is not contained in f^{-1}(S)");
  }
  return pulled == supremum_sigma(kernel_pair(f), t);
}

enum class FormulaMode { strict, exploratory };

struct ModularFormulaVerdict {
  bool holds = false;
  bool preconditions_met = false;
  std::vector<std::string> unmet;  // names of the violated preconditions
  Relation lhs;                    // (R[f] ∨ S) ∧ T
  Relation rhs;                    // R[f] ∨ (S ∧ T)
};

/// (R[f] ∨ S) ∧ T = R[f] ∨ (S ∧ T) for a surjection f, preorders S, T with
/// R[f] ⊆ T and f(S) a preorder. Strict mode throws on any unmet
/// precondition; exploratory mode evaluates anyway and lists them.
inline ModularFormulaVerdict modular_formula_check(
    FiniteMap const& f, Relation const& s, Relation const& t,
    FormulaMode mode = FormulaMode::strict) {
  if (s.size() != f.domain() || t.size() != f.domain()) {
    throw InputError("modular_formula_check: carrier mismatch");
  }
  ModularFormulaVerdict v;
  Relation const kernel = kernel_pair(f);
  if (!f.is_surjective()) v.unmet.emplace_back("f surjective");
  if (!is_preorder(s)) v.unmet.emplace_back("S preorder");
  if (!is_preorder(t)) v.unmet.emplace_back("T preorder");
  if (!leq(kernel, t)) v.unmet.emplace_back("R[f] included in T");
  if (!is_preorder(direct_image(f, s))) v.unmet.emplace_back("f(S) preorder");
  v.preconditions_met = v.unmet.empty();
  if (mode == FormulaMode::strict && !v.preconditions_met) {
    std::string msg = "modular formula precondition violated:";
    for (auto const& u : v.unmet) msg += " [" + u + "]";
    throw InputError(msg);
  }
  // Joins are taken through Σ-chains; in exploratory mode the operands may
  // be arbitrary reflexive relations, where Σ is still the least preorder
  // above both.
  auto sup = [](Relation const& a, Relation const& b) {
    Relation const d = Relation::delta(a.size());
    return supremum_sigma(unite(a, d), unite(b, d));
  };
  v.lhs = intersect(sup(kernel, s), t);
  v.rhs = sup(kernel, intersect(s, t));
  v.holds = v.lhs == v.rhs;
  return v;
}

/// R ∨ S for an equivalence R and a preorder S, computed on the carrier of
/// R's pairs as the cocartesian image of (d0)^{-1}(S) along d1.
inline Relation join_via_square(Relation const& r, Relation const& s) {
  detail::require_same_carrier(r, s, "join_via_square");
  detail::require_kind(r, OrderKind::equivalence, "left operand");
  detail::require_kind(s, OrderKind::preorder, "right operand");
  PairCarrier pc = relation_as_carrier(r);
  Relation lifted = inverse_image(pc.d0, s);
  return cocartesian_image(OrderKind::preorder, pc.d1, lifted).image;
}

}  // namespace relcat

#endif  // RELCAT_COCARTESIAN_HPP
