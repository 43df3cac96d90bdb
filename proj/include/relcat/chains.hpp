#ifndef RELCAT_CHAINS_HPP
#define RELCAT_CHAINS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "relation.hpp"

namespace relcat {

/// Whether an operation validates its inputs against the hypotheses it
/// documents, or evaluates on arbitrary inputs and reports raw results.
enum class Hypotheses { enforce, relax };

enum class OrderKind { preorder, equivalence };

namespace detail {
inline void require_reflexive(Relation const& r, char const* what) {
  if (!is_reflexive(r)) {
    throw InputError(std::string(what) + " must be reflexive");
  }
}

inline void check_chain_inputs(Relation const& r, Relation const& s,
                               Hypotheses hyp) {
  require_same_carrier(r, s, "chain");
  if (hyp == Hypotheses::enforce) {
    require_reflexive(r, "left chain relation");
    require_reflexive(s, "right chain relation");
  }
}
}  // namespace detail

// Terms of the intertwined chain ((R, S)):
//
//   (R,S)_0 = Δ, (R,S)_1 = R, (R,S)_2 = RS, (R,S)_3 = RSR, ...
//
// where juxtaposition is composition, RS = R o S. Read as paths, a pair
// (x, z) is in (R,S)_n iff x = y_0, ..., y_n = z with step i (1-based) in R
// when i ≡ n (mod 2) and in S otherwise. Every other module obtains chain
// terms from here so the orientation is fixed in one place.

/// Terms (R,S)_0 .. (R,S)_upto.
inline std::vector<Relation> chain_terms(Relation const& r, Relation const& s,
                                         std::size_t upto,
                                         Hypotheses hyp = Hypotheses::enforce) {
  detail::check_chain_inputs(r, s, hyp);
  std::vector<Relation> terms;
  terms.reserve(upto + 1);
  terms.push_back(Relation::delta(r.size()));
  for (std::size_t k = 1; k <= upto; ++k) {
    // (R,S)_k = (R,S)_{k-1} o L_k with L_k = R for odd k, S for even k.
    terms.push_back(compose(terms.back(), (k % 2 == 1) ? r : s));
  }
  return terms;
}

inline Relation chain_term(Relation const& r, Relation const& s, std::size_t n,
                           Hypotheses hyp = Hypotheses::enforce) {
  detail::check_chain_inputs(r, s, hyp);
  Relation term = Relation::delta(r.size());
  for (std::size_t k = 1; k <= n; ++k) {
    term = compose(term, (k % 2 == 1) ? r : s);
  }
  return term;
}

struct ChainTrace {
  Relation left;
  Relation right;
  std::vector<Relation> terms;
  /// Least n from which the chain is constant; empty when the cutoff was
  /// reached first.
  std::optional<std::size_t> stationary_index;

  [[nodiscard]] bool truncated() const noexcept {
    return !stationary_index.has_value();
  }

  /// The stabilized term, or the last computed one for a truncated trace.
  [[nodiscard]] Relation const& supremum() const {
    return stationary_index ? terms[*stationary_index] : terms.back();
  }
};

/// Default cutoff n^2 + 1; the chain of a reflexive pair strictly grows until
/// it stabilizes, so this always suffices.
inline std::size_t default_chain_cutoff(std::size_t n) { return n * n + 1; }

// For a reflexive pair, (R,S)_{n+2} = (R,S)_n forces the chain to be
// constant from n on, since L_{n+3} = L_{n+1}. One equal step alone does not:
// (Δ, S)_1 = (Δ, S)_0 but (Δ, S)_2 = S.
inline ChainTrace chain_trace(Relation const& r, Relation const& s,
                              std::optional<std::size_t> cutoff = std::nullopt) {
  detail::check_chain_inputs(r, s, Hypotheses::enforce);
  std::size_t const limit = cutoff.value_or(default_chain_cutoff(r.size()));
  ChainTrace trace{r, s, {}, std::nullopt};
  trace.terms.push_back(Relation::delta(r.size()));
  trace.terms.push_back(r);
  for (std::size_t k = 0; k <= limit; ++k) {
    while (trace.terms.size() < k + 3) {
      std::size_t next = trace.terms.size();
      trace.terms.push_back(compose(trace.terms.back(), (next % 2 == 1) ? r : s));
    }
    if (trace.terms[k] == trace.terms[k + 2]) {
      trace.stationary_index = k;
      break;
    }
  }
  return trace;
}

/// Σ((R, S)): the stabilized term of the chain. Always a preorder; an
/// equivalence when R and S are both symmetric.
inline Relation supremum_sigma(Relation const& r, Relation const& s) {
  auto trace = chain_trace(r, s);
  return trace.terms[*trace.stationary_index];
}

/// Least preorder (or equivalence) containing t. Non-reflexive input is
/// first joined with Δ.
inline Relation closure(OrderKind kind, Relation const& t) {
  Relation base = unite(t, Relation::delta(t.size()));
  return kind == OrderKind::preorder ? supremum_sigma(base, base)
                                     : supremum_sigma(base, dual(base));
}

}  // namespace relcat

#endif  // RELCAT_CHAINS_HPP
