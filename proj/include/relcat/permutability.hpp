#ifndef RELCAT_PERMUTABILITY_HPP
#define RELCAT_PERMUTABILITY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chains.hpp"
#include "relation.hpp"

namespace relcat {

enum class Parity { odd, even };

inline char const* to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

/// Truth values of the numbered stationarity conditions for one (R, S, m).
struct StatReport {
  Parity parity = Parity::odd;
  std::size_t m = 1;
  std::vector<std::pair<std::string, bool>> conditions;
  bool consistent = false;
  bool validated = true;  // false when evaluated with relaxed hypotheses

  [[nodiscard]] bool condition(std::size_t i) const {
    return conditions.at(i - 1).second;
  }
};

namespace detail {
inline bool stationary_from(std::vector<Relation> const& terms, std::size_t n) {
  // terms must reach n + 2
  return terms[n] == terms[n + 1] && terms[n + 1] == terms[n + 2];
}
}  // namespace detail

// Odd case, R a preorder and S reflexive, index 2m+1:
//   1) (R,S)_{2m+2} = (R,S)_{2m+1}
//   2) ((R,S)) is stationary from 2m+1
//   3) (R,S)_{2m+1} is a preorder
//   4) (S,R)_{2m+2} = (R,S)_{2m+1}
//   5) (S,R)_{2m+1} ⊆ (R,S)_{2m+1}
// All five are equivalent.
//
// Even case, R reflexive and S a preorder, index 2m:
//   1) (R,S)_{2m+1} = (R,S)_{2m}
//   2) ((R,S)) is stationary from 2m
//   3) (R,S)_{2m} is a preorder
//   4) (S,R)_{2m+1} = (R,S)_{2m}
//   5) (S,R)_{2m} ⊆ (R,S)_{2m}
// 1-3 are equivalent, 4-5 are equivalent, and 1-3 imply 4-5.
inline StatReport stationarity_conditions(Parity parity, Relation const& r,
                                          Relation const& s, std::size_t m,
                                          Hypotheses hyp = Hypotheses::enforce) {
  if (m < 1) {
    throw InputError("stationarity_conditions: m must be at least 1");
  }
  detail::require_same_carrier(r, s, "stationarity_conditions");
  if (hyp == Hypotheses::enforce) {
    if (parity == Parity::odd) {
      if (!is_preorder(r)) throw InputError("odd case needs R a preorder");
      detail::require_reflexive(s, "S");
    } else {
      detail::require_reflexive(r, "R");
      if (!is_preorder(s)) throw InputError("even case needs S a preorder");
    }
  }
  std::size_t const base = parity == Parity::odd ? 2 * m + 1 : 2 * m;
  auto rs = chain_terms(r, s, base + 2, Hypotheses::relax);
  auto sr = chain_terms(s, r, base + 1, Hypotheses::relax);

  StatReport rep;
  rep.parity = parity;
  rep.m = m;
  rep.validated = hyp == Hypotheses::enforce;
  rep.conditions = {
      {"chain step equal", rs[base + 1] == rs[base]},
      {"stationary", detail::stationary_from(rs, base)},
      {"term is preorder", is_preorder(rs[base])},
      {"dual step equal", sr[base + 1] == rs[base]},
      {"mixed subpermutable", leq(sr[base], rs[base])},
  };
  bool const c1 = rep.condition(1), c2 = rep.condition(2), c3 = rep.condition(3),
             c4 = rep.condition(4), c5 = rep.condition(5);
  if (parity == Parity::odd) {
    rep.consistent = c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5;
  } else {
    rep.consistent = c1 == c2 && c2 == c3 && c4 == c5 && (!c1 || c4);
  }
  return rep;
}

struct PermutabilityLevel {
  std::size_t n = 0;
  Relation common;  // (R,S)_n = (S,R)_n
};

/// Least n in [2, nmax] with (R,S)_n = (S,R)_n.
inline std::optional<PermutabilityLevel> pair_permutability_level(
    Relation const& r, Relation const& s, std::size_t nmax,
    Hypotheses hyp = Hypotheses::enforce) {
  detail::require_same_carrier(r, s, "pair_permutability_level");
  if (hyp == Hypotheses::enforce) {
    if (!is_equivalence(r) || !is_equivalence(s)) {
      throw InputError("pair_permutability_level: inputs must be equivalences");
    }
  }
  if (nmax < 2) return std::nullopt;
  auto rs = chain_terms(r, s, nmax, Hypotheses::relax);
  auto sr = chain_terms(s, r, nmax, Hypotheses::relax);
  for (std::size_t n = 2; n <= nmax; ++n) {
    if (rs[n] == sr[n]) return PermutabilityLevel{n, rs[n]};
  }
  return std::nullopt;
}

struct ZurabConditions {
  bool dual_below_power = false;   // R^op ⊆ R^{n-1}
  bool power_stationary = false;   // R^n = R^{n-1}
  bool dual_chain_closed = false;  // (R,R^op)_{n+1} = (R,R^op)_{n-1}
};

/// Instance values of the three relation-level conditions characterizing
/// n-permutability. These are raw data; the characterization itself only
/// holds when each is quantified over every relation.
inline ZurabConditions zurab_conditions(Relation const& r, std::size_t n) {
  if (n < 3) throw InputError("zurab_conditions: n must be at least 3");
  ZurabConditions z;
  Relation const prev = power(r, n - 1);
  z.dual_below_power = leq(dual(r), prev);
  z.power_stationary = compose(prev, r) == prev;
  auto terms = chain_terms(r, dual(r), n + 1, Hypotheses::relax);
  z.dual_chain_closed = terms[n + 1] == terms[n - 1];
  return z;
}

/// (S,R)_{2n-1} ⊆ (R,S)_{2n-1}.
inline bool mixed_subpermutability(Relation const& r, Relation const& s,
                                   std::size_t n,
                                   Hypotheses hyp = Hypotheses::enforce) {
  if (n < 2) throw InputError("mixed_subpermutability: n must be at least 2");
  detail::require_same_carrier(r, s, "mixed_subpermutability");
  if (hyp == Hypotheses::enforce) {
    if (!is_preorder(r)) throw InputError("mixed_subpermutability: R must be a preorder");
    detail::require_reflexive(s, "S");
  }
  return leq(chain_term(s, r, 2 * n - 1, Hypotheses::relax),
             chain_term(r, s, 2 * n - 1, Hypotheses::relax));
}

struct ClosurePower {
  Relation relation;  // R^{n-1}
  RelationFlags flags;
};

/// R^{n-1} with its classification. In an n-permutable setting this is the
/// equivalence relation generated by R.
inline ClosurePower closure_power(Relation const& r, std::size_t n) {
  if (n < 1) throw InputError("closure_power: n must be at least 1");
  detail::require_reflexive(r, "R");
  ClosurePower out{power(r, n - 1), {}};
  out.flags = classify(out.relation);
  return out;
}

}  // namespace relcat

#endif  // RELCAT_PERMUTABILITY_HPP
