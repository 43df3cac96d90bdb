#ifndef RELCAT_CATALOG_HPP
#define RELCAT_CATALOG_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algebra.hpp"
#include "chains.hpp"
#include "cocartesian.hpp"
#include "corpus.hpp"
#include "finite_map.hpp"
#include "instance.hpp"
#include "oracles.hpp"
#include "permutability.hpp"
#include "random.hpp"
#include "relation.hpp"

namespace relcat::harness {

enum class CheckMode { verify, falsify, explore };
enum class Exhaustive { automatic, never, always };

inline char const* to_string(CheckMode m) {
  switch (m) {
    case CheckMode::verify: return "verify";
    case CheckMode::falsify: return "falsify";
    default: return "explore";
  }
}

inline std::optional<CheckMode> parse_mode(std::string_view s) {
  if (s == "verify") return CheckMode::verify;
  if (s == "falsify") return CheckMode::falsify;
  if (s == "explore") return CheckMode::explore;
  return std::nullopt;
}

struct CheckSpec {
  std::string theorem_id;
  std::optional<std::size_t> size;      // largest carrier; checker default if unset
  std::optional<std::size_t> codomain;  // codomain size, where a check has one
  std::size_t max_index = 4;            // bound for chain indices m, n, k
  std::size_t order = 3;                // n for the parametrized falsify entries
  std::size_t samples = 1000;           // samples, or search budget
  std::uint64_t seed = 1;
  std::optional<CheckMode> mode;        // checker default if unset
  Exhaustive exhaustive = Exhaustive::automatic;
  std::size_t threads = 1;
};

struct Outcome {
  bool qualifies = true;
  bool holds = true;
  std::string note;
};

/// A registered statement. `evaluate` must be a pure function of the
/// instance so that witnesses replay.
struct Checker {
  std::string id;
  std::string statement;
  CheckMode mode = CheckMode::verify;
  bool gating = true;
  std::string unit = "instances";
  std::size_t default_size = 6;
  std::size_t min_carrier = 1;
  std::size_t search_limit = 5;  // largest carrier tried by the witness search
  std::function<Instance(Rng&, std::size_t, CheckSpec const&)> generate;
  std::function<std::vector<Instance>(CheckSpec const&)> exhaust;
  std::function<std::size_t(CheckSpec const&)> space;  // size of `exhaust`
  std::function<std::vector<Instance>(std::size_t, CheckSpec const&)> candidates;
  std::function<Outcome(Instance const&)> evaluate;
};

namespace detail {

inline constexpr std::size_t kHuge = std::numeric_limits<std::size_t>::max();

inline std::size_t resolved_size(CheckSpec const& spec, std::size_t fallback) {
  return spec.size.value_or(fallback);
}

/// Collects the first failed clause.
class Clauses {
 public:
  void need(bool ok, std::string_view what) {
    if (!ok && out_.holds) {
      out_.holds = false;
      out_.note = std::string(what);
    }
  }
  void skip(std::string_view why) {
    out_.qualifies = false;
    out_.note = std::string(why);
  }
  [[nodiscard]] bool failed() const { return !out_.holds; }
  [[nodiscard]] Outcome result() const { return out_; }

 private:
  Outcome out_;
};

inline Relation term(Relation const& r, Relation const& s, std::size_t n) {
  return chain_term(r, s, n, Hypotheses::relax);
}

inline std::vector<Relation> terms(Relation const& r, Relation const& s, std::size_t upto) {
  return chain_terms(r, s, upto, Hypotheses::relax);
}

/// Δ ∪ {(i, i+1)} on k points.
inline Relation path_relation(std::size_t k) {
  Relation r = Relation::delta(k);
  for (std::size_t i = 0; i + 1 < k; ++i) r.insert(i, i + 1);
  return r;
}

/// Equivalences {01}{23}... and {0}{12}{34}... on k points.
inline std::pair<Relation, Relation> zigzag_partitions(std::size_t k) {
  Relation a = Relation::delta(k);
  Relation b = Relation::delta(k);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    Relation& r = (i % 2 == 0) ? a : b;
    r.insert(i, i + 1);
    r.insert(i + 1, i);
  }
  return {a, b};
}

inline std::vector<FiniteMap> all_surjections(std::size_t n, std::size_t m) {
  std::vector<FiniteMap> out;
  if (m == 0 || m > n) return out;
  std::vector<std::size_t> v(n, 0);
  while (true) {
    std::vector<bool> hit(m, false);
    for (auto x : v) hit[x] = true;
    if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
      out.emplace_back(m, v);
    }
    std::size_t i = n;
    while (i > 0 && v[i - 1] + 1 == m) v[--i] = 0;
    if (i == 0) break;
    ++v[i - 1];
  }
  return out;
}

inline std::size_t surjection_count(std::size_t n, std::size_t m) {
  // inclusion-exclusion; only used for small n
  long long total = 0;
  long long binom = 1;
  for (std::size_t j = 0; j <= m; ++j) {
    long long p = 1;
    for (std::size_t i = 0; i < n; ++i) p *= static_cast<long long>(m - j);
    total += (j % 2 == 0 ? 1 : -1) * binom * p;
    binom = binom * static_cast<long long>(m - j) / static_cast<long long>(j + 1);
  }
  return static_cast<std::size_t>(total);
}

inline std::size_t preorder_count(std::size_t n) {
  static constexpr std::size_t table[] = {1, 1, 4, 29, 355, 6942};
  return n < 6 ? table[n] : kHuge;
}

inline std::size_t equivalence_count(std::size_t n) {
  static constexpr std::size_t table[] = {1, 1, 2, 5, 15, 52};
  return n < 6 ? table[n] : kHuge;
}

inline double draw_density(Rng& rng) {
  static constexpr double levels[] = {0.1, 0.2, 0.3, 0.45};
  return levels[rng.below(4)];
}

inline Relation draw(Rng& rng, RandomKind kind, std::size_t k) {
  double const d = draw_density(rng);
  return random_relation(rng, kind, k, d);
}

inline FiniteMap draw_surjection(Rng& rng, std::size_t n) {
  return random_surjection(rng, n, rng.between(1, n));
}

/// Reflexive relation, symmetric half of the time.
inline Relation draw_reflexive_maybe_symmetric(Rng& rng, std::size_t k) {
  Relation r = draw(rng, RandomKind::reflexive, k);
  return rng.bernoulli(0.5) ? unite(r, dual(r)) : r;
}

inline std::size_t draw_index(Rng& rng, std::size_t lo, CheckSpec const& spec) {
  return rng.between(lo, std::max(lo, spec.max_index));
}

inline bool violates(Outcome const& o) { return o.qualifies && !o.holds; }

}  // namespace detail

// Each make_* below documents its instance layout.

namespace checks {

using detail::Clauses;

/// params [n, m], relations [S preorder on m], map optional.
/// Without a map every surjection n -> m is checked.
inline Checker make_main3_bijection() {
  Checker c;
  c.id = "thm-main3-bijection";
  c.statement =
      "for a surjection f, S |-> f^-1(S) is an order isomorphism from preorders "
      "(equivalences) on the codomain onto those on the domain containing R[f], "
      "with inverse T |-> f(T)";
  c.unit = "codomain preorders";
  c.default_size = 3;
  c.search_limit = 4;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    std::size_t const n = inst.params.at(0);
    std::size_t const m = inst.params.at(1);
    Relation const& s = inst.relations.at(0);
    if (!is_preorder(s)) {
      cl.skip("S is not a preorder");
      return cl.result();
    }
    std::vector<FiniteMap> maps =
        inst.map ? std::vector<FiniteMap>{*inst.map} : detail::all_surjections(n, m);
    std::vector<Relation> const domain_preorders = enumerate(RelationKind::preorder, n);
    for (auto const& f : maps) {
      Relation const k = kernel_pair(f);
      Relation const p = inverse_image(f, s);
      cl.need(is_preorder(p) && leq(k, p), "f^-1(S) is not a preorder above R[f]");
      cl.need(direct_image(f, p) == s, "f(f^-1(S)) differs from S");
      cl.need(inverse_image(section(f), p) == s, "s^-1(f^-1(S)) differs from S");
      cl.need(is_equivalence(p) == is_equivalence(s),
              "f^-1 does not match equivalences with equivalences");
      std::size_t fiber = 0;
      for (auto const& q : domain_preorders) {
        if (!leq(k, q)) continue;
        Relation const fq = direct_image(f, q);
        cl.need(is_preorder(fq), "f(Q) is not a preorder for a preorder Q above R[f]");
        cl.need(inverse_image(f, fq) == q, "f^-1(f(Q)) differs from Q");
        cl.need(leq(q, p) == leq(fq, s), "the correspondence does not preserve order");
        if (fq == s) ++fiber;
      }
      cl.need(fiber == 1, "S does not have exactly one preimage above R[f]");
      if (cl.failed()) break;
    }
    return cl.result();
  };
  c.space = [](CheckSpec const& spec) {
    std::size_t const n = detail::resolved_size(spec, 3);
    if (n > kDefaultEnumerationBound) return detail::kHuge;
    std::size_t const m = spec.codomain.value_or(n > 1 ? n - 1 : n);
    return detail::preorder_count(m);
  };
  c.exhaust = [](CheckSpec const& spec) {
    std::size_t const n = detail::resolved_size(spec, 3);
    std::size_t const m = spec.codomain.value_or(n > 1 ? n - 1 : n);
    if (m == 0 || m > n) {
      throw InputError("no surjection from " + std::to_string(n) + " onto " +
                       std::to_string(m));
    }
    std::vector<Instance> out;
    for (auto& s : enumerate(RelationKind::preorder, m)) {
      out.push_back(Instance{{n, m}, std::nullopt, {std::move(s)}, std::nullopt});
    }
    return out;
  };
  c.generate = [](Rng& rng, std::size_t k, CheckSpec const&) {
    std::size_t const n = std::min<std::size_t>(k, 4);
    FiniteMap f = detail::draw_surjection(rng, n);
    std::size_t const m = f.codomain();
    Relation s = detail::draw(rng, rng.bernoulli(0.3) ? RandomKind::equivalence
                                                     : RandomKind::preorder, m);
    return Instance{{n, m}, std::move(f), {std::move(s)}, std::nullopt};
  };
  return c;
}

/// map f, relations [T reflexive].
inline Checker make_main3_finv_f() {
  Checker c;
  c.id = "thm-main3-finv-f";
  c.statement =
      "for a surjection f and reflexive T, f^-1(f(T)) = R[f] T R[f]; when T is a "
      "preorder containing R[f], f^-1(f(T)) = T and f^-1(s^-1(T)) = T for a section s";
  c.default_size = 7;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    FiniteMap const& f = *inst.map;
    Relation const& t = inst.relations.at(0);
    if (!is_reflexive(t) || !f.is_surjective()) {
      cl.skip("needs a surjection and a reflexive T");
      return cl.result();
    }
    Relation const k = kernel_pair(f);
    Relation const back = inverse_image(f, direct_image(f, t));
    cl.need(back == compose(k, compose(t, k)), "f^-1(f(T)) differs from R[f] T R[f]");
    if (is_preorder(t) && leq(k, t)) {
      cl.need(back == t, "f^-1(f(T)) differs from T");
      cl.need(inverse_image(f, inverse_image(section(f), t)) == t,
              "f^-1(s^-1(T)) differs from T");
    }
    return cl.result();
  };
  c.generate = [](Rng& rng, std::size_t k, CheckSpec const&) {
    FiniteMap f = detail::draw_surjection(rng, k);
    Relation t = detail::draw(rng, RandomKind::reflexive, k);
    if (rng.bernoulli(1.0 / 3.0)) t = closure(OrderKind::preorder, unite(t, kernel_pair(f)));
    return Instance{{}, std::move(f), {std::move(t)}, std::nullopt};
  };
  return c;
}

/// relations [R equivalence, T preorder].
inline Checker make_square2_cartesian() {
  Checker c;
  c.id = "lem-square2-cartesian";
  c.statement =
      "for an equivalence R and a preorder T: R is contained in T iff uRu' and vRv' "
      "always give (uTv iff u'Tv')";
  c.default_size = 6;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    Relation const& r = inst.relations.at(0);
    Relation const& t = inst.relations.at(1);
    if (!is_equivalence(r) || !is_preorder(t)) {
      cl.skip("needs an equivalence R and a preorder T");
      return cl.result();
    }
    std::size_t const n = r.size();
    bool invariant = true;
    for (std::size_t u = 0; u < n && invariant; ++u) {
      for (std::size_t v = 0; v < n && invariant; ++v) {
        r.for_each_in_row(u, [&](std::size_t u2) {
          r.for_each_in_row(v, [&](std::size_t v2) {
            if (t.contains(u, v) != t.contains(u2, v2)) invariant = false;
          });
        });
      }
    }
    cl.need(leq(r, t) == invariant, "inclusion and square invariance disagree");
    if (leq(r, t)) {
      // every quadruple of R□T is then an R-translate of a T-pair
      for (auto const& q : square(r, t)) {
        cl.need(r.contains(q[0], q[2]) && r.contains(q[1], q[3]) &&
                    t.contains(q[0], q[1]) && t.contains(q[2], q[3]),
                "square quadruple outside R and T");
      }
    }
    return cl.result();
  };
  c.generate = [](Rng& rng, std::size_t k, CheckSpec const&) {
    Relation r = detail::draw(rng, RandomKind::equivalence, k);
    Relation t = detail::draw(rng, RandomKind::preorder, k);
    if (rng.bernoulli(0.5)) t = closure(OrderKind::preorder, unite(t, r));
    return Instance{{}, std::nullopt, {std::move(r), std::move(t)}, std::nullopt};
  };
  return c;
}

/// relations [S reflexive].
inline Checker make_d1_kernel() {
  Checker c;
  c.id = "lem-d1-kernel";
  c.statement =
      "viewing a reflexive S as a set of pairs with projections d0, d1: "
      "d1(R[d0]) = S S^op, which is S exactly when S is an equivalence";
  c.default_size = 6;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    Relation const& s = inst.relations.at(0);
    if (!is_reflexive(s)) {
      cl.skip("S is not reflexive");
      return cl.result();
    }
    PairCarrier const pc = relation_as_carrier(s);
    Relation const img = direct_image(pc.d1, kernel_pair(pc.d0));
    cl.need(img == compose(s, dual(s)), "d1(R[d0]) differs from S S^op");
    cl.need(is_equivalence(s) == (img == s), "d1(R[d0]) = S does not track equivalence");
    return cl.result();
  };
  c.generate = [](Rng& rng, std::size_t k, CheckSpec const&) {
    Relation s = detail::draw(rng, rng.bernoulli(0.5) ? RandomKind::equivalence
                                                     : RandomKind::reflexive, k);
    return Instance{{}, std::nullopt, {std::move(s)}, std::nullopt};
  };
  return c;
}

/// map f, relations [R, S] (arbitrary), params [k].
inline Checker make_idcomp_star() {
  Checker c;
  c.id = "prop-idcomp-star";
  c.statement =
      "for a surjection f: f^-1(f(S) f(R)) = R[f] S R[f] R R[f], "
      "f(SR) is contained in f(S) f(R) = f(S R[f] R), and f(R)^k = f(R R[f] R ... R)";
  c.default_size = 7;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    FiniteMap const& f = *inst.map;
    Relation const& r = inst.relations.at(0);
    Relation const& s = inst.relations.at(1);
    std::size_t const k = inst.params.at(0);
    if (!f.is_surjective() || k < 1) {
      cl.skip("needs a surjection and k >= 1");
      return cl.result();
    }
    Relation const ker = kernel_pair(f);
    Relation const fr = direct_image(f, r);
    Relation const fs = direct_image(f, s);
    Relation const prod = compose(fs, fr);
    cl.need(inverse_image(f, prod) == compose(ker, compose(s, compose(ker, compose(r, ker)))),
            "f^-1(f(S) f(R)) differs from R[f] S R[f] R R[f]");
    cl.need(leq(direct_image(f, compose(s, r)), prod), "f(SR) not contained in f(S) f(R)");
    cl.need(prod == direct_image(f, compose(s, compose(ker, r))),
            "f(S) f(R) differs from f(S R[f] R)");
    Relation word = r;
    for (std::size_t i = 1; i < k; ++i) word = compose(r, compose(ker, word));
    cl.need(power(fr, k) == direct_image(f, word), "f(R)^k differs from f(R R[f] ... R)");
    return cl.result();
  };
  c.generate = [](Rng& rng, std::size_t k, CheckSpec const& spec) {
    FiniteMap f = detail::draw_surjection(rng, k);
    RandomKind const kind = rng.bernoulli(0.5) ? RandomKind::reflexive : RandomKind::relation;
    Relation r = detail::draw(rng, kind, k);
    Relation s = detail::draw(rng, kind, k);
    std::size_t const idx = detail::draw_index(rng, 1, spec);
    return Instance{{idx}, std::move(f), {std::move(r), std::move(s)}, std::nullopt};
  };
  return c;
}

/// params [kind], map f, relations [T]; kind 0 = preorder, 1 = equivalence.
inline Checker make_prop10_cocartesian() {
  Checker c;
  c.id = "prop10-cocartesian";
  c.statement =
      "the cocartesian image of T along a surjection f is the least preorder "
      "(equivalence) S with T contained in f^-1(S), and f^-1 of it is R[f] v T";
  c.unit = "(f, T) pairs";
  c.default_size = 4;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    OrderKind const kind = inst.params.at(0) ? OrderKind::equivalence : OrderKind::preorder;
    FiniteMap const& f = *inst.map;
    Relation const& t = inst.relations.at(0);
    if (!f.is_surjective() || !has_kind(t, kind) ||
        f.codomain() > kDefaultEnumerationBound) {
      cl.skip("needs a surjection onto at most 5 points and T of the given kind");
      return cl.result();
    }
    RelationKind const rk =
        kind == OrderKind::preorder ? RelationKind::preorder : RelationKind::equivalence;
    std::vector<Relation> above;
    for (auto& s : enumerate(rk, f.codomain())) {
      if (leq(t, inverse_image(f, s))) above.push_back(std::move(s));
    }
    auto least = oracle::least_of(above);
    cl.need(least.has_value(), "no least codomain relation above T");
    if (cl.failed()) return cl.result();
    CocartesianResult const res = cocartesian_image(kind, f, t);
    cl.need(res.certified, "cocartesian image not certified");
    cl.need(res.image == *least, "cocartesian image is not the least one");
    Relation const base = unite(kernel_pair(f), t);
    Relation const expected = kind == OrderKind::preorder ? oracle::warshall_closure(base)
                                                          : oracle::union_find_closure(base);
    cl.need(inverse_image(f, res.image) == expected,
            "f^-1 of the image differs from the closure of R[f] and T");
    for (auto const& s : above) {
      cl.need(is_cocartesian(kind, f, t, s) == (s == *least),
              "is_cocartesian disagrees with leastness");
    }
    return cl.result();
  };
  c.space = [](CheckSpec const& spec) {
    std::size_t const n = detail::resolved_size(spec, 4);
    if (n > kDefaultEnumerationBound) return detail::kHuge;
    std::size_t const mmax = std::min(n, spec.codomain.value_or(3));
    std::size_t total = 0;
    for (std::size_t d = 1; d <= n; ++d) {
      for (std::size_t m = 1; m <= std::min(d, mmax); ++m) {
        total += detail::surjection_count(d, m) *
                 (detail::preorder_count(d) + detail::equivalence_count(d));
      }
    }
    return total;
  };
  c.exhaust = [](CheckSpec const& spec) {
    std::size_t const n = detail::resolved_size(spec, 4);
    std::size_t const mmax = std::min(n, spec.codomain.value_or(3));
    std::vector<Instance> out;
    for (std::size_t d = 1; d <= n; ++d) {
      auto const pre = enumerate(RelationKind::preorder, d);
      auto const eqv = enumerate(RelationKind::equivalence, d);
      for (std::size_t m = 1; m <= std::min(d, mmax); ++m) {
        for (auto const& f : detail::all_surjections(d, m)) {
          for (auto const& t : pre) out.push_back(Instance{{0}, f, {t}, std::nullopt});
          for (auto const& t : eqv) out.push_back(Instance{{1}, f, {t}, std::nullopt});
        }
      }
    }
    return out;
  };
  c.generate = [](Rng& rng, std::size_t k, CheckSpec const&) {
    std::size_t const n = std::min<std::size_t>(k, 6);
    FiniteMap f = random_surjection(rng, n, rng.between(1, std::min<std::size_t>(n, 4)));
    std::size_t const kind = rng.below(2);
    Relation t = detail::draw(rng, kind ? RandomKind::equivalence : RandomKind::preorder, n);
    return Instance{{kind}, std::move(f), {std::move(t)}, std::nullopt};
  };
  return c;
}

/// map f, relations [S, T].
/// S is built so that f(S) is often a preorder: either lifted along a
/// random section from a codomain preorder, or drawn and then filtered.
inline Checker make_modular_formula() {
  Checker c;
  c.id = "cor-modular-formula";
  c.statement =
      "for a surjection f, a preorder S with f(S) a preorder and a preorder T "
      "containing R[f]: R[f] v S = f^-1(f(S)), f(S) ^ f(T) = f(S ^ T), and "
      "(R[f] v S) ^ T = R[f] v (S ^ T)";
  c.default_size = 7;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    FiniteMap const& f = *inst.map;
    Relation const& s = inst.relations.at(0);
    Relation const& t = inst.relations.at(1);
    auto v = modular_formula_check(f, s, t, FormulaMode::exploratory);
    if (!v.preconditions_met) {
      cl.skip("preconditions not met");
      return cl.result();
    }
    Relation const k = kernel_pair(f);
    Relation const fs = direct_image(f, s);
    cl.need(join(OrderKind::preorder, k, s) == inverse_image(f, fs),
            "R[f] v S differs from f^-1(f(S))");
    Relation const fst = direct_image(f, intersect(s, t));
    cl.need(intersect(fs, direct_image(f, t)) == fst, "f(S) ^ f(T) differs from f(S ^ T)");
    cl.need(is_preorder(fst), "f(S ^ T) is not a preorder");
    cl.need(v.holds, "modular formula fails");
    return cl.result();
  };
  c.generate = [](Rng& rng, std::size_t k, CheckSpec const&) {
    FiniteMap f = detail::draw_surjection(rng, k);
    std::size_t const m = f.codomain();
    Relation s(k);
    if (rng.bernoulli(0.5)) {
      Relation const q = detail::draw(rng, RandomKind::preorder, m);
      std::vector<std::vector<std::size_t>> fibers(m);
      for (std::size_t x = 0; x < k; ++x) fibers[f(x)].push_back(x);
      std::vector<std::size_t> sec(m);
      for (std::size_t y = 0; y < m; ++y) sec[y] = fibers[y][rng.below(fibers[y].size())];
      s = Relation::delta(k);
      for (auto [y, y2] : q.pairs()) s.insert(sec[y], sec[y2]);
    } else {
      s = detail::draw(rng, RandomKind::preorder, k);
    }
    Relation t = closure(OrderKind::preorder,
                         unite(kernel_pair(f), detail::draw(rng, RandomKind::relation, k)));
    return Instance{{}, std::move(f), {std::move(s), std::move(t)}, std::nullopt};
  };
  return c;
}

/// relations [R reflexive], params [n].
inline Checker make_rn_stationary() {
  Checker c;
  c.id = "prop-Rn-stationary";
  c.statement =
      "for reflexive R: R^(n+1) = R^n iff R^n is a preorder, and for symmetric R "
      "iff R^n is an equivalence";
  c.default_size = 7;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    Relation const& r = inst.relations.at(0);
    std::size_t const n = inst.params.at(0);
    if (!is_reflexive(r) || n < 1) {
      cl.skip("needs reflexive R and n >= 1");
      return cl.result();
    }
    Relation const rn = power(r, n);
    bool const stat = compose(rn, r) == rn;
    cl.need(stat == is_preorder(rn), "R^(n+1) = R^n disagrees with R^n preorder");
    if (is_symmetric(r)) {
      cl.need(stat == is_equivalence(rn), "R^(n+1) = R^n disagrees with R^n equivalence");
    }
    return cl.result();
  };
  c.generate = [](Rng& rng, std::size_t k, CheckSpec const& spec) {
    Relation r = detail::draw_reflexive_maybe_symmetric(rng, k);
    std::size_t const n = detail::draw_index(rng, 1, spec);
    return Instance{{n}, std::nullopt, {std::move(r)}, std::nullopt};
  };
  return c;
}

/// params [kind, n], map f, relations [T].
inline Checker make_firstex_cocart() {
  Checker c;
  c.id = "cor-firstex-cocart";
  c.statement =
      "for a preorder (equivalence) T with f(T)^(n+1) = f(T)^n, T -> f(T)^n is "
      "cocartesian above f and R[f] v T = f^-1(f(T)^n)";
  c.default_size = 7;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    OrderKind const kind = inst.params.at(0) ? OrderKind::equivalence : OrderKind::preorder;
    std::size_t const n = inst.params.at(1);
    FiniteMap const& f = *inst.map;
    Relation const& t = inst.relations.at(0);
    if (!f.is_surjective() || !has_kind(t, kind) || n < 1) {
      cl.skip("needs a surjection, T of the given kind and n >= 1");
      return cl.result();
    }
    Relation const ft = direct_image(f, t);
    Relation const ftn = power(ft, n);
    if (compose(ftn, ft) != ftn) {
      cl.skip("f(T)^(n+1) differs from f(T)^n");
      return cl.result();
    }
    cl.need(cocartesian_image(kind, f, t).image == ftn, "cocartesian image differs from f(T)^n");
    cl.need(is_cocartesian(kind, f, t, ftn), "T -> f(T)^n is not cocartesian");
    cl.need(join(kind, kernel_pair(f), t) == inverse_image(f, ftn),
            "R[f] v T differs from f^-1(f(T)^n)");
    return cl.result();
  };
  c.generate = [](Rng& rng, std::size_t k, CheckSpec const& spec) {
    FiniteMap f = detail::draw_surjection(rng, k);
    std::size_t const kind = rng.below(2);
    Relation t = detail::draw(rng, kind ? RandomKind::equivalence : RandomKind::preorder, k);
    std::size_t const n = detail::draw_index(rng, 1, spec);
    return Instance{{kind, n}, std::move(f), {std::move(t)}, std::nullopt};
  };
  return c;
}

/// relations [R, S reflexive], params [n, k].
inline Checker make_chain_intertwine() {
  Checker c;
  c.id = "chain-intertwine";
  c.statement =
      "(S,R)_n is contained in (R,S)_(n+k) and (R,S)_n in (S,R)_(n+k); when ((R,S)) "
      "is stationary from n >= 2, (S,R)_n is contained in (R,S)_n and "
      "(S,R)_(n+k) = (R,S)_(n+k) = (R,S)_n";
  c.default_size = 7;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    Relation const& r = inst.relations.at(0);
    Relation const& s = inst.relations.at(1);
    std::size_t const n = inst.params.at(0);
    std::size_t const k = inst.params.at(1);
    if (!is_reflexive(r) || !is_reflexive(s) || k < 1) {
      cl.skip("needs a reflexive pair and k >= 1");
      return cl.result();
    }
    auto const rs = detail::terms(r, s, n + k + 2);
    auto const sr = detail::terms(s, r, n + k + 2);
    cl.need(leq(sr[n], rs[n + k]), "(S,R)_n not in (R,S)_(n+k)");
    cl.need(leq(rs[n], sr[n + k]), "(R,S)_n not in (S,R)_(n+k)");
    if (n >= 2 && rs[n + 2] == rs[n]) {
      cl.need(leq(sr[n], rs[n]), "stationary chain but (S,R)_n not in (R,S)_n");
      cl.need(sr[n + k] == rs[n + k] && rs[n + k] == rs[n],
              "stationary chain but the chains do not coincide after n");
    }
    return cl.result();
  };
  c.generate = [](Rng& rng, std::size_t k, CheckSpec const& spec) {
    Relation r = detail::draw(rng, RandomKind::reflexive, k);
    Relation s = detail::draw(rng, RandomKind::reflexive, k);
    std::size_t const n = detail::draw_index(rng, 0, spec);
    std::size_t const kk = detail::draw_index(rng, 1, spec);
    return Instance{{n, kk}, std::nullopt, {std::move(r), std::move(s)}, std::nullopt};
  };
  return c;
}

/// relations [R, S reflexive], params [n, m, k].
inline Checker make_chain_identities() {
  Checker c;
  c.id = "prop-chain-identities";
  c.statement =
      "products of chain terms: T_2n T_m = T_(2n+m); T_(2(n+m)) in T_(2n+1) T_2m in "
      "T_(2n+2m+2); T_(2(n+m)+1) in T_(2n+1) T_(2m+1) in T_(2n+2m+3); T_(n+m-1) in "
      "T_n T_m in T_(n+m+1); T_(2nk+1) in T_(2n+1)^k in T_(2(n+1)k-1); with "
      "equalities when R is a preorder";
  c.default_size = 7;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    Relation const& r = inst.relations.at(0);
    Relation const& s = inst.relations.at(1);
    std::size_t const n = inst.params.at(0);
    std::size_t const m = inst.params.at(1);
    std::size_t const k = inst.params.at(2);
    if (!is_reflexive(r) || !is_reflexive(s) || k < 1) {
      cl.skip("needs a reflexive pair and k >= 1");
      return cl.result();
    }
    std::size_t const top = std::max({2 * n * k + 2, 2 * (n + 1) * k, 2 * n + 2 * m + 3,
                                      2 * n + m + 1});
    auto const t = detail::terms(r, s, top);
    bool const pre = is_preorder(r);
    auto prod = [](Relation const& a, Relation const& b) { return compose(a, b); };

    // 1)
    cl.need(prod(t[2 * n], t[m]) == t[2 * n + m], "T_2n T_m differs from T_(2n+m)");
    cl.need(power(t[2 * n], k) == t[2 * k * n], "T_2n^k differs from T_2kn");
    // 2)
    Relation const p2 = prod(t[2 * n + 1], t[2 * m]);
    cl.need(leq(t[2 * (n + m)], p2) && leq(p2, t[2 * n + 2 * m + 2]),
            "T_(2n+1) T_2m outside its bounds");
    if (pre && m >= 1) {
      // for m = 0 the product is T_(2n+1) itself
      cl.need(p2 == t[2 * (n + m)], "T_(2n+1) T_2m differs from T_(2(n+m)) for preorder R");
    }
    // 3)
    Relation const p3 = prod(t[2 * n + 1], t[2 * m + 1]);
    cl.need(leq(t[2 * (n + m) + 1], p3) && leq(p3, t[2 * n + 2 * m + 3]),
            "T_(2n+1) T_(2m+1) outside its bounds");
    if (pre) {
      cl.need(p3 == t[2 * (n + m) + 1],
              "T_(2n+1) T_(2m+1) differs from T_(2(n+m)+1) for preorder R");
    }
    // 4)
    if (n + m >= 1) {
      Relation const p4 = prod(t[n], t[m]);
      cl.need(leq(t[n + m - 1], p4) && leq(p4, t[n + m + 1]), "T_n T_m outside its bounds");
    }
    if (n >= 1) {
      Relation const sq = prod(t[n], t[n]);
      cl.need(leq(t[2 * n - 1], sq) && leq(sq, t[2 * n + 1]), "T_n^2 outside its bounds");
    }
    // 5)
    Relation const p5 = power(t[2 * n + 1], k);
    cl.need(leq(t[2 * n * k + 1], p5) && leq(p5, t[2 * (n + 1) * k - 1]),
            "T_(2n+1)^k outside its bounds");
    if (pre) cl.need(p5 == t[2 * n * k + 1], "T_(2n+1)^k differs from T_(2nk+1)");
    return cl.result();
  };
  c.generate = [](Rng& rng, std::size_t k, CheckSpec const& spec) {
    Relation r = detail::draw(rng, rng.bernoulli(0.5) ? RandomKind::preorder
                                                     : RandomKind::reflexive, k);
    Relation s = detail::draw(rng, RandomKind::reflexive, k);
    std::size_t const n = detail::draw_index(rng, 0, spec);
    std::size_t const m = detail::draw_index(rng, 0, spec);
    std::size_t const kk = detail::draw_index(rng, 1, spec);
    return Instance{{n, m, kk}, std::nullopt, {std::move(r), std::move(s)}, std::nullopt};
  };
  return c;
}

/// relations [R, S reflexive], params [k].
inline Checker make_rsr_power() {
  Checker c;
  c.id = "cor-RSR-power";
  c.statement =
      "(R,S)_(2k+1) is contained in (RSR)^k, which is contained in (R,S)_(4k-1); "
      "(RSR)^k = (R,S)_(2k+1) when R is a preorder";
  c.default_size = 7;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    Relation const& r = inst.relations.at(0);
    Relation const& s = inst.relations.at(1);
    std::size_t const k = inst.params.at(0);
    if (!is_reflexive(r) || !is_reflexive(s) || k < 1) {
      cl.skip("needs a reflexive pair and k >= 1");
      return cl.result();
    }
    auto const t = detail::terms(r, s, 4 * k - 1);
    Relation const p = power(t[3], k);
    cl.need(leq(t[2 * k + 1], p) && leq(p, t[4 * k - 1]), "(RSR)^k outside its bounds");
    if (is_preorder(r)) cl.need(p == t[2 * k + 1], "(RSR)^k differs from (R,S)_(2k+1)");
    return cl.result();
  };
  c.generate = [](Rng& rng, std::size_t k, CheckSpec const& spec) {
    Relation r = detail::draw(rng, rng.bernoulli(0.5) ? RandomKind::preorder
                                                     : RandomKind::reflexive, k);
    Relation s = detail::draw(rng, RandomKind::reflexive, k);
    std::size_t const kk = detail::draw_index(rng, 1, spec);
    return Instance{{kk}, std::nullopt, {std::move(r), std::move(s)}, std::nullopt};
  };
  return c;
}

/// map f, relations [T reflexive], params [m].
inline Checker make_image_powers() {
  Checker c;
  c.id = "lem-image-powers";
  c.statement =
      "for a surjection f and reflexive T: f((T,R[f])_(2m-1)) = f(T)^m = "
      "f((R[f],T)_(2m+1)) and f((R[f],T)_2m) = f(T)^m = f((T,R[f])_2m)";
  c.default_size = 7;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    FiniteMap const& f = *inst.map;
    Relation const& t = inst.relations.at(0);
    std::size_t const m = inst.params.at(0);
    if (!f.is_surjective() || !is_reflexive(t) || m < 1) {
      cl.skip("needs a surjection, reflexive T and m >= 1");
      return cl.result();
    }
    Relation const k = kernel_pair(f);
    Relation const pm = power(direct_image(f, t), m);
    auto const tk = detail::terms(t, k, 2 * m + 1);
    auto const kt = detail::terms(k, t, 2 * m + 1);
    cl.need(direct_image(f, tk[2 * m - 1]) == pm, "f((T,R[f])_(2m-1)) differs from f(T)^m");
    cl.need(direct_image(f, kt[2 * m + 1]) == pm, "f((R[f],T)_(2m+1)) differs from f(T)^m");
    cl.need(direct_image(f, kt[2 * m]) == pm, "f((R[f],T)_2m) differs from f(T)^m");
    cl.need(direct_image(f, tk[2 * m]) == pm, "f((T,R[f])_2m) differs from f(T)^m");
    return cl.result();
  };
  c.generate = [](Rng& rng, std::size_t k, CheckSpec const& spec) {
    FiniteMap f = detail::draw_surjection(rng, k);
    Relation t = detail::draw(rng, RandomKind::reflexive, k);
    std::size_t const m = detail::draw_index(rng, 1, spec);
    return Instance{{m}, std::move(f), {std::move(t)}, std::nullopt};
  };
  return c;
}

/// relations [R, S reflexive].
inline Checker make_sigma_preorder() {
  Checker c;
  c.id = "supermain-sigma-preorder";
  c.statement =
      "for reflexive R, S the supremum of ((R,S)) is a preorder, an equivalence when "
      "R and S are symmetric, equals the supremum of ((S,R)) and is the least "
      "preorder containing R and S";
  c.default_size = 8;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    Relation const& r = inst.relations.at(0);
    Relation const& s = inst.relations.at(1);
    if (!is_reflexive(r) || !is_reflexive(s)) {
      cl.skip("needs a reflexive pair");
      return cl.result();
    }
    Relation const sig = supremum_sigma(r, s);
    cl.need(is_preorder(sig), "supremum is not a preorder");
    if (is_symmetric(r) && is_symmetric(s)) {
      cl.need(is_equivalence(sig), "supremum of symmetric relations is not an equivalence");
    }
    cl.need(sig == supremum_sigma(s, r), "supremum of ((R,S)) differs from that of ((S,R))");
    cl.need(dual(sig) == supremum_sigma(dual(r), dual(s)), "supremum does not commute with op");
    cl.need(sig == oracle::warshall_closure(unite(r, s)),
            "supremum differs from the reflexive-transitive closure of R u S");
    return cl.result();
  };
  c.generate = [](Rng& rng, std::size_t k, CheckSpec const&) {
    bool const sym = rng.bernoulli(0.5);
    Relation r = detail::draw(rng, RandomKind::reflexive, k);
    Relation s = detail::draw(rng, RandomKind::reflexive, k);
    if (sym) {
      r = unite(r, dual(r));
      s = unite(s, dual(s));
    }
    return Instance{{}, std::nullopt, {std::move(r), std::move(s)}, std::nullopt};
  };
  return c;
}

/// relations [R, S reflexive], params [n].
inline Checker make_keylemma() {
  Checker c;
  c.id = "keylemma-implications";
  c.statement =
      "for a reflexive pair and n >= 2 with (R,S)_(n+1) = (R,S)_n: the chains "
      "alternate between equalities and cross inclusions from n on";
  c.default_size = 6;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    Relation const& r = inst.relations.at(0);
    Relation const& s = inst.relations.at(1);
    std::size_t const n = inst.params.at(0);
    if (!is_reflexive(r) || !is_reflexive(s) || n < 2) {
      cl.skip("needs a reflexive pair and n >= 2");
      return cl.result();
    }
    std::size_t constexpr kSteps = 3;
    auto const rs = detail::terms(r, s, n + 2 * kSteps + 2);
    auto const sr = detail::terms(s, r, n + 2 * kSteps + 2);
    if (rs[n + 1] != rs[n]) {
      cl.skip("(R,S)_(n+1) differs from (R,S)_n");
      return cl.result();
    }
    cl.need(sr[n + 2] == sr[n + 1], "(S,R)_(n+2) differs from (S,R)_(n+1)");
    cl.need(rs[n + 3] == rs[n + 2], "(R,S)_(n+3) differs from (R,S)_(n+2)");
    for (std::size_t i = 1; i <= kSteps; ++i) {
      cl.need(sr[n + 2 * i] == sr[n + 2 * i - 1], "(S,R)_(n+2i) differs from (S,R)_(n+2i-1)");
      cl.need(rs[n + 2 * i + 1] == rs[n + 2 * i], "(R,S)_(n+2i+1) differs from (R,S)_(n+2i)");
    }
    for (std::size_t i = 0; i <= kSteps; ++i) {
      cl.need(leq(sr[n + 2 * i], rs[n + 2 * i]), "(S,R)_(n+2i) not in (R,S)_(n+2i)");
      cl.need(leq(rs[n + 2 * i + 1], sr[n + 2 * i + 1]),
              "(R,S)_(n+2i+1) not in (S,R)_(n+2i+1)");
    }
    return cl.result();
  };
  c.generate = [](Rng& rng, std::size_t k, CheckSpec const& spec) {
    // sparse pairs reach the hypothesis late, dense ones early; mix both
    Relation r = detail::draw(rng, rng.bernoulli(0.5) ? RandomKind::preorder
                                                     : RandomKind::reflexive, k);
    Relation s = detail::draw(rng, RandomKind::reflexive, k);
    std::size_t const n = detail::draw_index(rng, 2, spec);
    return Instance{{n}, std::nullopt, {std::move(r), std::move(s)}, std::nullopt};
  };
  return c;
}

/// relations [R, S reflexive], params [n].
inline Checker make_keylemma2() {
  Checker c;
  c.id = "keylemma2-equivalence";
  c.statement =
      "for a reflexive pair and n >= 2 these agree: (R,S)_(n+2) = (R,S)_n; the chain "
      "is stationary from n; (R,S)_n is a preorder";
  c.default_size = 6;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    Relation const& r = inst.relations.at(0);
    Relation const& s = inst.relations.at(1);
    std::size_t const n = inst.params.at(0);
    if (!is_reflexive(r) || !is_reflexive(s) || n < 2) {
      cl.skip("needs a reflexive pair and n >= 2");
      return cl.result();
    }
    auto const t = detail::terms(r, s, n + 2);
    bool const c1 = t[n + 2] == t[n];
    // the chain increases to the closure of R u S, so it is constant from n
    // exactly when T_n already is that closure
    bool const c2 = t[n] == oracle::warshall_closure(unite(r, s));
    bool const c3 = is_preorder(t[n]);
    cl.need(c1 == c2 && c2 == c3, "the three stationarity conditions disagree");
    return cl.result();
  };
  c.generate = make_keylemma().generate;
  return c;
}

/// relations [R preorder, S reflexive], params [m].
inline Checker make_stat_odd() {
  Checker c;
  c.id = "stat-odd-equivalence";
  c.statement =
      "for a preorder R, reflexive S and m >= 1 the five odd stationarity conditions "
      "at 2m+1 agree; then (R,S)_(2m+1) = R v S for preorders (equivalences)";
  c.default_size = 6;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    Relation const& r = inst.relations.at(0);
    Relation const& s = inst.relations.at(1);
    std::size_t const m = inst.params.at(0);
    if (!is_preorder(r) || !is_reflexive(s) || m < 1) {
      cl.skip("needs a preorder R, reflexive S and m >= 1");
      return cl.result();
    }
    StatReport const rep = stationarity_conditions(Parity::odd, r, s, m);
    cl.need(rep.consistent, "odd stationarity conditions disagree");
    bool const c2 = detail::term(r, s, 2 * m + 1) == oracle::warshall_closure(unite(r, s));
    cl.need(c2 == rep.condition(1), "stationarity disagrees with the closure oracle");
    if (rep.condition(1) && is_preorder(s)) {
      Relation const top = detail::term(r, s, 2 * m + 1);
      cl.need(top == join(OrderKind::preorder, r, s), "(R,S)_(2m+1) is not the join");
      if (is_equivalence(r) && is_equivalence(s)) {
        cl.need(is_equivalence(top) && top == oracle::union_find_closure(unite(r, s)),
                "(R,S)_(2m+1) is not the equivalence join");
      }
    }
    return cl.result();
  };
  c.generate = [](Rng& rng, std::size_t k, CheckSpec const& spec) {
    std::size_t const variant = rng.below(3);
    Relation r = detail::draw(rng, variant == 2 ? RandomKind::equivalence
                                                : RandomKind::preorder, k);
    Relation s = detail::draw(rng, variant == 0   ? RandomKind::reflexive
                                   : variant == 1 ? RandomKind::preorder
                                                  : RandomKind::equivalence, k);
    std::size_t const m = detail::draw_index(rng, 1, spec);
    return Instance{{m}, std::nullopt, {std::move(r), std::move(s)}, std::nullopt};
  };
  return c;
}

/// relations [R reflexive, S preorder], params [m].
inline Checker make_stat_even() {
  Checker c;
  c.id = "stat-even-implication";
  c.statement =
      "for reflexive R, a preorder S and m >= 1: even conditions 1-3 agree, 4-5 agree, "
      "1-3 imply 4-5; then (R,S)_2m = R v S for preorders (equivalences)";
  c.default_size = 6;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    Relation const& r = inst.relations.at(0);
    Relation const& s = inst.relations.at(1);
    std::size_t const m = inst.params.at(0);
    if (!is_reflexive(r) || !is_preorder(s) || m < 1) {
      cl.skip("needs reflexive R, a preorder S and m >= 1");
      return cl.result();
    }
    StatReport const rep = stationarity_conditions(Parity::even, r, s, m);
    cl.need(rep.consistent, "even stationarity conditions violate the stated pattern");
    bool const c2 = detail::term(r, s, 2 * m) == oracle::warshall_closure(unite(r, s));
    cl.need(c2 == rep.condition(1), "stationarity disagrees with the closure oracle");
    if (rep.condition(1) && is_preorder(r)) {
      Relation const top = detail::term(r, s, 2 * m);
      cl.need(top == join(OrderKind::preorder, r, s), "(R,S)_2m is not the join");
      if (is_equivalence(r) && is_equivalence(s)) {
        cl.need(is_equivalence(top), "(R,S)_2m is not an equivalence");
      }
    }
    return cl.result();
  };
  c.generate = [](Rng& rng, std::size_t k, CheckSpec const& spec) {
    std::size_t const variant = rng.below(3);
    Relation r = detail::draw(rng, variant == 0   ? RandomKind::reflexive
                                   : variant == 1 ? RandomKind::preorder
                                                  : RandomKind::equivalence, k);
    Relation s = detail::draw(rng, variant == 2 ? RandomKind::equivalence
                                                : RandomKind::preorder, k);
    std::size_t const m = detail::draw_index(rng, 1, spec);
    return Instance{{m}, std::nullopt, {std::move(r), std::move(s)}, std::nullopt};
  };
  return c;
}

/// map f, relations [T reflexive], params [m].
inline Checker make_stat11() {
  Checker c;
  c.id = "cor-stat11-two-way";
  c.statement =
      "for a surjection f, reflexive T and m >= 1: f(T)^m is a preorder iff "
      "(T,R[f])_(2m+1) is contained in (R[f],T)_(2m+1); (T,R[f])_(2m+1) = "
      "(T,R[f])_2m forces it; then f(T)^m is the cocartesian image of a preorder T";
  c.default_size = 7;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    FiniteMap const& f = *inst.map;
    Relation const& t = inst.relations.at(0);
    std::size_t const m = inst.params.at(0);
    if (!f.is_surjective() || !is_reflexive(t) || m < 1) {
      cl.skip("needs a surjection, reflexive T and m >= 1");
      return cl.result();
    }
    Relation const k = kernel_pair(f);
    Relation const pm = power(direct_image(f, t), m);
    auto const tk = detail::terms(t, k, 2 * m + 1);
    auto const kt = detail::terms(k, t, 2 * m + 1);
    bool const a = is_preorder(pm);
    bool const b = leq(tk[2 * m + 1], kt[2 * m + 1]);
    cl.need(a == b, "f(T)^m preorder disagrees with mixed subpermutability");
    if (tk[2 * m + 1] == tk[2 * m]) cl.need(a, "even-case hypothesis holds but f(T)^m is not a preorder");
    if (a && is_preorder(t)) {
      cl.need(cocartesian_image(OrderKind::preorder, f, t).image == pm,
              "cocartesian image differs from f(T)^m");
    }
    if (a && is_equivalence(t)) {
      cl.need(cocartesian_image(OrderKind::equivalence, f, t).image == pm,
              "equivalence cocartesian image differs from f(T)^m");
    }
    return cl.result();
  };
  c.generate = [](Rng& rng, std::size_t k, CheckSpec const& spec) {
    FiniteMap f = detail::draw_surjection(rng, k);
    std::size_t const variant = rng.below(3);
    Relation t = detail::draw(rng, variant == 0   ? RandomKind::reflexive
                                   : variant == 1 ? RandomKind::preorder
                                                  : RandomKind::equivalence, k);
    std::size_t const m = detail::draw_index(rng, 1, spec);
    return Instance{{m}, std::move(f), {std::move(t)}, std::nullopt};
  };
  return c;
}

/// map f, relations [R, S equivalences], params [m].
inline Checker make_disy() {
  Checker c;
  c.id = "disy-instance";
  c.statement =
      "for equivalences R, S: d1(d0^-1(S)) over the pairs of R is R S R, "
      "(RSR)^m = (R,S)_(2m+1), and f(R)^m is an equivalence iff "
      "(R,R[f])_(2m+1) is contained in (R[f],R)_(2m+1)";
  c.default_size = 7;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    FiniteMap const& f = *inst.map;
    Relation const& r = inst.relations.at(0);
    Relation const& s = inst.relations.at(1);
    std::size_t const m = inst.params.at(0);
    if (!f.is_surjective() || !is_equivalence(r) || !is_equivalence(s) || m < 1) {
      cl.skip("needs a surjection, two equivalences and m >= 1");
      return cl.result();
    }
    PairCarrier const pc = relation_as_carrier(r);
    Relation const rsr = compose(r, compose(s, dual(r)));
    cl.need(direct_image(pc.d1, inverse_image(pc.d0, s)) == rsr,
            "d1(d0^-1(S)) differs from R S R");
    cl.need(power(rsr, m) == detail::term(r, s, 2 * m + 1), "(RSR)^m differs from (R,S)_(2m+1)");
    Relation const k = kernel_pair(f);
    bool const a = is_equivalence(power(direct_image(f, r), m));
    bool const b = leq(detail::term(r, k, 2 * m + 1), detail::term(k, r, 2 * m + 1));
    cl.need(a == b, "f(R)^m equivalence disagrees with subpermutability");
    return cl.result();
  };
  c.generate = [](Rng& rng, std::size_t k, CheckSpec const& spec) {
    FiniteMap f = detail::draw_surjection(rng, k);
    Relation r = detail::draw(rng, RandomKind::equivalence, k);
    Relation s = detail::draw(rng, RandomKind::equivalence, k);
    std::size_t const m = detail::draw_index(rng, 1, spec);
    return Instance{{m}, std::move(f), {std::move(r), std::move(s)}, std::nullopt};
  };
  return c;
}

namespace scan {

/// First equivalence pair on at most `kmax` points with (R,S)_n != (S,R)_n:
/// zigzag partitions first, then every pair on up to 4 points.
inline std::optional<std::size_t> non_permuting_pair(std::size_t n, std::size_t kmax) {
  for (std::size_t k = 1; k <= kmax; ++k) {
    auto [a, b] = detail::zigzag_partitions(k);
    if (detail::term(a, b, n) != detail::term(b, a, n)) return k;
  }
  for (std::size_t k = 1; k <= std::min<std::size_t>(kmax, 4); ++k) {
    auto const eq = enumerate(RelationKind::equivalence, k);
    for (auto const& a : eq) {
      for (auto const& b : eq) {
        if (detail::term(a, b, n) != detail::term(b, a, n)) return k;
      }
    }
  }
  return std::nullopt;
}

/// Every relation on k points (k <= 3), reflexive or not.
inline std::vector<Relation> all_relations(std::size_t k) {
  std::vector<Relation> out;
  std::size_t const bits = k * k;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    Relation r(k);
    for (std::size_t b = 0; b < bits; ++b) {
      if ((mask >> b) & 1U) r.insert(b / k, b % k);
    }
    out.push_back(std::move(r));
  }
  return out;
}

/// Relations tried by the universal scans: everything on at most 3 points,
/// then reflexive paths up to `kmax` points.
inline std::vector<Relation> scan_relations(std::size_t kmax, bool reflexive_only) {
  std::vector<Relation> out;
  for (std::size_t k = 1; k <= 3; ++k) {
    for (auto& r : all_relations(k)) {
      if (!reflexive_only || is_reflexive(r)) out.push_back(std::move(r));
    }
  }
  for (std::size_t k = 4; k <= kmax; ++k) out.push_back(detail::path_relation(k));
  return out;
}

template <class Pred>
std::optional<std::size_t> first_carrier(std::vector<Relation> const& rels, Pred pred) {
  for (auto const& r : rels) {
    if (pred(r)) return r.size();
  }
  return std::nullopt;
}

inline std::string found(std::optional<std::size_t> k) {
  return k ? "witness on " + std::to_string(*k) : "no witness";
}

}  // namespace scan

/// params [n]; no relations. Searches finite sets for a witness to the
/// failure of each of the four conditions characterizing n-permutability.
inline Checker make_zurab_scan() {
  Checker c;
  c.id = "zurab-instance-scan";
  c.statement =
      "in finite sets the four conditions for n-permutability (n >= 3) fail together: "
      "equivalence pairs permuting at n, (T,T^op)_(n+1) = (T,T^op)_(n-1), "
      "R^op in R^(n-1), R^n = R^(n-1)";
  c.unit = "orders n";
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    std::size_t const n = inst.params.at(0);
    if (n < 3) {
      cl.skip("needs n >= 3");
      return cl.result();
    }
    std::size_t const kmax = 2 * n + 4;
    auto const w1 = scan::non_permuting_pair(n, kmax);
    auto const any = scan::scan_relations(kmax, false);
    auto const refl = scan::scan_relations(kmax, true);
    auto const w2 = scan::first_carrier(any, [n](Relation const& t) {
      auto const tt = detail::terms(t, dual(t), n + 1);
      return tt[n + 1] != tt[n - 1];
    });
    auto const w3 = scan::first_carrier(
        refl, [n](Relation const& r) { return !zurab_conditions(r, n).dual_below_power; });
    auto const w4 = scan::first_carrier(
        refl, [n](Relation const& r) { return !zurab_conditions(r, n).power_stationary; });
    bool const agree = w1.has_value() == w2.has_value() && w2.has_value() == w3.has_value() &&
                       w3.has_value() == w4.has_value();
    cl.need(agree, "conditions fail separately: " + scan::found(w1) + ", " + scan::found(w2) +
                       ", " + scan::found(w3) + ", " + scan::found(w4));
    auto out = cl.result();
    if (agree) {
      out.note = "pairs: " + scan::found(w1) + "; dual chain: " + scan::found(w2) +
                 "; dual below power: " + scan::found(w3) + "; powers: " + scan::found(w4);
    }
    return out;
  };
  c.space = [](CheckSpec const& spec) { return spec.max_index; };
  c.exhaust = [](CheckSpec const& spec) {
    std::vector<Instance> out;
    for (std::size_t n = 3; n <= std::max<std::size_t>(3, spec.max_index + 2); ++n) {
      out.push_back(Instance{{n}, std::nullopt, {}, std::nullopt});
    }
    return out;
  };
  return c;
}

/// params [n]; no relations.
inline Checker make_genmal_scan() {
  Checker c;
  c.id = "genmal-instance-scan";
  c.statement =
      "in finite sets (n+1)-permutability and 'R^n is an equivalence for every "
      "reflexive R' fail together; whenever R^n is an equivalence it is the "
      "equivalence generated by R";
  c.unit = "orders n";
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    std::size_t const n = inst.params.at(0);
    if (n < 1) {
      cl.skip("needs n >= 1");
      return cl.result();
    }
    std::size_t const kmax = 2 * n + 4;
    auto const wa = scan::non_permuting_pair(n + 1, kmax);
    auto const refl = scan::scan_relations(kmax, true);
    auto const wb = scan::first_carrier(
        refl, [n](Relation const& r) { return !closure_power(r, n + 1).flags.equivalence; });
    cl.need(wa.has_value() == wb.has_value(),
            "conditions fail separately: " + scan::found(wa) + ", " + scan::found(wb));
    for (auto const& r : refl) {
      ClosurePower const cp = closure_power(r, n + 1);
      if (cp.flags.equivalence) {
        cl.need(cp.relation == oracle::union_find_closure(r),
                "R^n is an equivalence other than the one generated by R");
      }
    }
    auto out = cl.result();
    if (out.holds) {
      out.note = "pairs: " + scan::found(wa) + "; powers: " + scan::found(wb);
    }
    return out;
  };
  c.space = [](CheckSpec const& spec) { return spec.max_index; };
  c.exhaust = [](CheckSpec const& spec) {
    std::vector<Instance> out;
    for (std::size_t n = 1; n <= std::max<std::size_t>(1, spec.max_index + 1); ++n) {
      out.push_back(Instance{{n}, std::nullopt, {}, std::nullopt});
    }
    return out;
  };
  return c;
}

/// relations [R preorder, S reflexive], params [n].
inline Checker make_mixed_instance() {
  Checker c;
  c.id = "mixed-instance";
  c.statement =
      "for a preorder R, reflexive S and n >= 2: (S,R)_(2n-1) is contained in "
      "(R,S)_(2n-1) iff (R,S)_(2n-1) is a preorder";
  c.default_size = 6;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    Relation const& r = inst.relations.at(0);
    Relation const& s = inst.relations.at(1);
    std::size_t const n = inst.params.at(0);
    if (!is_preorder(r) || !is_reflexive(s) || n < 2) {
      cl.skip("needs a preorder R, reflexive S and n >= 2");
      return cl.result();
    }
    cl.need(mixed_subpermutability(r, s, n) == is_preorder(detail::term(r, s, 2 * n - 1)),
            "mixed subpermutability disagrees with (R,S)_(2n-1) preorder");
    return cl.result();
  };
  c.generate = [](Rng& rng, std::size_t k, CheckSpec const& spec) {
    Relation r = rng.bernoulli(0.25) ? Relation::delta(k)
                                     : detail::draw(rng, RandomKind::preorder, k);
    Relation s = detail::draw(rng, RandomKind::reflexive, k);
    std::size_t const n = detail::draw_index(rng, 2, spec);
    return Instance{{n}, std::nullopt, {std::move(r), std::move(s)}, std::nullopt};
  };
  return c;
}

/// relations [R equivalence, S preorder].
inline Checker make_join_via_square() {
  Checker c;
  c.id = "main2-join-via-square";
  c.statement =
      "for an equivalence R and a preorder S, the join through Sigma-chains equals "
      "the codomain of the cocartesian map above d1 of d0^-1(S) on the pairs of R";
  c.default_size = 5;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    Relation const& r = inst.relations.at(0);
    Relation const& s = inst.relations.at(1);
    if (!is_equivalence(r) || !is_preorder(s)) {
      cl.skip("needs an equivalence R and a preorder S");
      return cl.result();
    }
    Relation const j = join(OrderKind::preorder, r, s);
    cl.need(j == join_via_square(r, s), "Sigma join differs from the square construction");
    cl.need(j == oracle::warshall_closure(unite(r, s)), "Sigma join differs from the closure oracle");
    PairCarrier const pc = relation_as_carrier(r);
    cl.need(cocartesian_image(OrderKind::equivalence, pc.d1, kernel_pair(pc.d0)).image == r,
            "d1 does not carry R[d0] onto R");
    return cl.result();
  };
  c.generate = [](Rng& rng, std::size_t k, CheckSpec const&) {
    Relation r = detail::draw(rng, RandomKind::equivalence, k);
    Relation s = detail::draw(rng, RandomKind::preorder, k);
    return Instance{{}, std::nullopt, {std::move(r), std::move(s)}, std::nullopt};
  };
  return c;
}

/// algebra, relations [T, S, R] congruences.
inline Checker make_day_formula() {
  Checker c;
  c.id = "day-formula";
  c.statement =
      "for congruences T, S, R of a finite algebra: (T v S) ^ R is the union of "
      "the (T,S)_i ^ R";
  c.unit = "congruence triples";
  c.default_size = 4;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    FiniteAlgebra const& a = *inst.algebra;
    auto const& rel = inst.relations;
    for (std::size_t i = 0; i < 3; ++i) {
      if (!is_equivalence(rel.at(i)) || !is_compatible(a, rel[i])) {
        cl.skip("relations must be congruences");
        return cl.result();
      }
    }
    cl.need(day_formula_check(a, {rel[0], true}, {rel[1], true}, {rel[2], true}),
            "(T v S) ^ R differs from the union of the (T,S)_i ^ R");
    Relation rhs(a.size());
    for (auto const& t : detail::terms(rel[0], rel[1], a.size() * a.size() + 2)) {
      rhs = unite(rhs, intersect(t, rel[2]));
    }
    cl.need(rhs == intersect(oracle::union_find_closure(unite(rel[0], rel[1])), rel[2]),
            "union of the (T,S)_i ^ R differs from the oracle");
    return cl.result();
  };
  c.space = [](CheckSpec const&) {
    std::size_t total = 0;
    for (auto const& na : bundled_corpus()) {
      std::size_t const k = congruence_lattice(na.algebra).elements.size();
      total += k * k * k;
    }
    return total;
  };
  c.exhaust = [](CheckSpec const&) {
    std::vector<Instance> out;
    for (auto const& na : bundled_corpus()) {
      auto const lat = congruence_lattice(na.algebra);
      for (auto const& t : lat.elements) {
        for (auto const& s : lat.elements) {
          for (auto const& r : lat.elements) {
            out.push_back(Instance{{}, std::nullopt, {t, s, r}, na.algebra});
          }
        }
      }
    }
    return out;
  };
  c.generate = [](Rng& rng, std::size_t k, CheckSpec const&) {
    std::size_t const n = std::min<std::size_t>(k, 5);
    std::vector<std::size_t> const arities =
        rng.bernoulli(0.5) ? std::vector<std::size_t>{2} : std::vector<std::size_t>{1, 1};
    FiniteAlgebra a = random_algebra(rng, n, arities);
    std::vector<Relation> rels;
    for (int i = 0; i < 3; ++i) {
      Relation seed(n);
      std::size_t const pairs = rng.below(3);
      for (std::size_t p = 0; p < pairs; ++p) seed.insert(rng.below(n), rng.below(n));
      rels.push_back(congruence_generated(a, seed).relation);
    }
    return Instance{{}, std::nullopt, std::move(rels), std::move(a)};
  };
  return c;
}

/// algebra, params [corpus index, modular variety flag].
inline Checker make_gumm() {
  Checker c;
  c.id = "gumm-shifting-vs-modular";
  c.statement =
      "on the bundled algebras: modularity agrees with the shifting principle over "
      "congruences S; shifting over all compatible tolerances S implies modularity; "
      "algebras from modular varieties pass both; bare sets of 4 or more points fail both";
  c.unit = "corpus algebras";
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    FiniteAlgebra const& a = *inst.algebra;
    bool const variety = inst.params.at(1) != 0;
    bool const mod = modularity_check(a).modular;
    bool const cong = shifting_principle_scan(a, ShiftingRange::congruences).holds;
    bool const tol = shifting_principle_scan(a, ShiftingRange::tolerances).holds;
    cl.need(mod == cong, "modularity disagrees with shifting over congruences");
    cl.need(!tol || mod, "shifting over tolerances holds in a non-modular algebra");
    if (variety) cl.need(mod && tol, "algebra of a modular variety fails modularity or shifting");
    if (a.operations().empty() && a.size() >= 4) {
      cl.need(!mod && !tol, "bare set of 4 or more points passes modularity or shifting");
    }
    auto out = cl.result();
    if (out.holds) {
      out.note = std::string("modular ") + (mod ? "yes" : "no") + ", shifting over congruences " +
                 (cong ? "yes" : "no") + ", over tolerances " + (tol ? "yes" : "no");
    }
    return out;
  };
  c.space = [](CheckSpec const&) { return bundled_corpus().size(); };
  c.exhaust = [](CheckSpec const&) {
    std::vector<Instance> out;
    auto const& corpus = bundled_corpus();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      out.push_back(Instance{{i, corpus[i].modular_variety ? 1u : 0u}, std::nullopt, {},
                             corpus[i].algebra});
    }
    return out;
  };
  return c;
}

// Falsify-mode entries: each states a claim that is false in finite sets.

/// params [kind], map f, relations [T]; kind 0 = preorder, 1 = equivalence.
inline Checker make_goursat_direct_image() {
  Checker c;
  c.id = "goursat-direct-image";
  c.statement = "claim: direct images of preorders (equivalences) along surjections are transitive";
  c.mode = CheckMode::falsify;
  c.default_size = 5;
  c.search_limit = 5;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    OrderKind const kind = inst.params.at(0) ? OrderKind::equivalence : OrderKind::preorder;
    FiniteMap const& f = *inst.map;
    Relation const& t = inst.relations.at(0);
    if (!f.is_surjective() || !has_kind(t, kind)) {
      cl.skip("needs a surjection and T of the given kind");
      return cl.result();
    }
    cl.need(is_transitive(direct_image(f, t)), "f(T) is not transitive");
    return cl.result();
  };
  c.candidates = [](std::size_t k, CheckSpec const&) {
    std::vector<Instance> out;
    // two disjoint steps glued into a path of length two
    if (k >= 4) {
      std::vector<std::size_t> v(k);
      for (std::size_t x = 0; x < k; ++x) v[x] = x <= 1 ? x : x - 1;
      Relation t = Relation::delta(k);
      t.insert(0, 1);
      t.insert(2, 3);
      out.push_back(Instance{{0}, FiniteMap(k - 1, v), {t}, std::nullopt});
      Relation e = closure(OrderKind::equivalence, t);
      out.push_back(Instance{{1}, FiniteMap(k - 1, v), {e}, std::nullopt});
    }
    if (k <= 4) {
      auto const pre = enumerate(RelationKind::preorder, k);
      for (std::size_t m = k; m >= 1; --m) {
        for (auto const& f : detail::all_surjections(k, m)) {
          for (auto const& t : pre) out.push_back(Instance{{0}, f, {t}, std::nullopt});
        }
      }
    }
    return out;
  };
  c.generate = [](Rng& rng, std::size_t k, CheckSpec const&) {
    FiniteMap f = detail::draw_surjection(rng, k);
    std::size_t const kind = rng.below(2);
    Relation t = detail::draw(rng, kind ? RandomKind::equivalence : RandomKind::preorder, k);
    return Instance{{kind}, std::move(f), {std::move(t)}, std::nullopt};
  };
  return c;
}

/// relations [R], params [n]. `fixed` pins n; otherwise the spec's order is used.
inline Checker make_set_not_permutable(std::optional<std::size_t> fixed) {
  Checker c;
  c.id = fixed ? "set-not-" + std::to_string(*fixed) + "-permutable" : "set-not-n-permutable";
  c.statement = "claim: every reflexive relation R on a finite set has R^n = R^(n-1)";
  c.mode = CheckMode::falsify;
  c.search_limit = 12;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    Relation const& r = inst.relations.at(0);
    std::size_t const n = inst.params.at(0);
    if (!is_reflexive(r) || n < 2) {
      cl.skip("needs reflexive R and n >= 2");
      return cl.result();
    }
    cl.need(power(r, n) == power(r, n - 1), "R^n differs from R^(n-1)");
    return cl.result();
  };
  auto order = [fixed](CheckSpec const& spec) {
    std::size_t const n = fixed.value_or(spec.order);
    if (n < 2) throw InputError("set-not-n-permutable needs n >= 2");
    return n;
  };
  c.candidates = [order](std::size_t k, CheckSpec const& spec) {
    std::size_t const n = order(spec);
    std::vector<Instance> out;
    out.push_back(Instance{{n}, std::nullopt, {detail::path_relation(k)}, std::nullopt});
    if (k <= 3) {
      for (auto& r : enumerate(RelationKind::reflexive, k)) {
        out.push_back(Instance{{n}, std::nullopt, {std::move(r)}, std::nullopt});
      }
    }
    return out;
  };
  c.generate = [order](Rng& rng, std::size_t k, CheckSpec const& spec) {
    Relation r = detail::draw(rng, RandomKind::reflexive, k);
    return Instance{{order(spec)}, std::nullopt, {std::move(r)}, std::nullopt};
  };
  return c;
}

/// relations [R preorder, S reflexive].
inline Checker make_mixed3_fails() {
  Checker c;
  c.id = "mixed-3-subperm-fails-in-set";
  c.statement =
      "claim: (S,R)_3 is contained in (R,S)_3 for every preorder R and reflexive S "
      "on a finite set";
  c.mode = CheckMode::falsify;
  c.search_limit = 5;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    Relation const& r = inst.relations.at(0);
    Relation const& s = inst.relations.at(1);
    if (!is_preorder(r) || !is_reflexive(s)) {
      cl.skip("needs a preorder R and reflexive S");
      return cl.result();
    }
    cl.need(mixed_subpermutability(r, s, 2), "(S,R)_3 is not contained in (R,S)_3");
    return cl.result();
  };
  c.candidates = [](std::size_t k, CheckSpec const&) {
    std::vector<Instance> out;
    out.push_back(Instance{{}, std::nullopt, {Relation::delta(k), detail::path_relation(k)},
                           std::nullopt});
    if (k <= 3) {
      auto const pre = enumerate(RelationKind::preorder, k);
      auto const refl = enumerate(RelationKind::reflexive, k);
      for (auto const& r : pre) {
        for (auto const& s : refl) out.push_back(Instance{{}, std::nullopt, {r, s}, std::nullopt});
      }
    }
    return out;
  };
  c.generate = [](Rng& rng, std::size_t k, CheckSpec const&) {
    Relation r = detail::draw(rng, RandomKind::preorder, k);
    Relation s = detail::draw(rng, RandomKind::reflexive, k);
    return Instance{{}, std::nullopt, {std::move(r), std::move(s)}, std::nullopt};
  };
  return c;
}

/// algebra (bare set), relations [R, S, T] with R contained in T.
inline Checker make_partition_nonmodular() {
  Checker c;
  c.id = "partition-lattice-nonmodular";
  c.statement = "claim: the lattice of equivalences on a finite set is modular";
  c.mode = CheckMode::falsify;
  c.search_limit = 5;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    FiniteAlgebra const& a = *inst.algebra;
    auto const& rel = inst.relations;
    if (!a.operations().empty() || !is_equivalence(rel.at(0)) || !is_equivalence(rel.at(1)) ||
        !is_equivalence(rel.at(2)) || !leq(rel[0], rel[2])) {
      cl.skip("needs equivalences R, S, T on a bare set with R in T");
      return cl.result();
    }
    cl.need(modular_law_holds(a, rel[0], rel[1], rel[2]), "(R v S) ^ T differs from R v (S ^ T)");
    return cl.result();
  };
  c.candidates = [](std::size_t k, CheckSpec const&) {
    std::vector<Instance> out;
    FiniteAlgebra const a = bare_set(k);
    auto const eq = enumerate(RelationKind::equivalence, k);
    for (auto const& t : eq) {
      for (auto const& r : eq) {
        if (!leq(r, t)) continue;
        for (auto const& s : eq) out.push_back(Instance{{}, std::nullopt, {r, s, t}, a});
      }
    }
    return out;
  };
  return c;
}

/// relations [R reflexive, S preorder], params [m].
inline Checker make_stat_even_converse() {
  Checker c;
  c.id = "stat-even-converse";
  c.statement =
      "question: do even conditions 4-5 imply 1-3 for reflexive R and a preorder S? "
      "a witness has 4-5 true and 1-3 false";
  c.mode = CheckMode::explore;
  c.gating = false;
  c.search_limit = 6;
  c.evaluate = [](Instance const& inst) {
    Clauses cl;
    Relation const& r = inst.relations.at(0);
    Relation const& s = inst.relations.at(1);
    std::size_t const m = inst.params.at(0);
    if (!is_reflexive(r) || !is_preorder(s) || m < 1) {
      cl.skip("needs reflexive R, a preorder S and m >= 1");
      return cl.result();
    }
    StatReport const rep = stationarity_conditions(Parity::even, r, s, m);
    if (!(rep.condition(4) && rep.condition(5))) {
      cl.skip("conditions 4-5 do not hold");
      return cl.result();
    }
    cl.need(rep.condition(1), "conditions 4-5 hold but 1-3 fail");
    return cl.result();
  };
  c.candidates = [](std::size_t k, CheckSpec const& spec) {
    std::vector<Instance> out;
    if (k > 3) return out;
    auto const refl = enumerate(RelationKind::reflexive, k);
    auto const pre = enumerate(RelationKind::preorder, k);
    for (std::size_t m = 1; m <= std::min<std::size_t>(spec.max_index, 2); ++m) {
      for (auto const& r : refl) {
        for (auto const& s : pre) out.push_back(Instance{{m}, std::nullopt, {r, s}, std::nullopt});
      }
    }
    return out;
  };
  c.generate = [](Rng& rng, std::size_t k, CheckSpec const& spec) {
    Relation r = detail::draw(rng, RandomKind::reflexive, k);
    Relation s = detail::draw(rng, RandomKind::preorder, k);
    std::size_t const m = detail::draw_index(rng, 1, spec);
    return Instance{{m}, std::nullopt, {std::move(r), std::move(s)}, std::nullopt};
  };
  return c;
}

}  // namespace checks

inline std::vector<Checker> const& catalog() {
  static std::vector<Checker> const all = [] {
    using namespace checks;
    std::vector<Checker> v = {
        make_main3_bijection(),  make_main3_finv_f(),     make_square2_cartesian(),
        make_d1_kernel(),        make_idcomp_star(),      make_prop10_cocartesian(),
        make_modular_formula(),  make_rn_stationary(),    make_firstex_cocart(),
        make_chain_intertwine(), make_chain_identities(), make_rsr_power(),
        make_image_powers(),     make_sigma_preorder(),   make_keylemma(),
        make_keylemma2(),        make_stat_odd(),         make_stat_even(),
        make_stat11(),           make_disy(),             make_zurab_scan(),
        make_genmal_scan(),      make_mixed_instance(),   make_join_via_square(),
        make_day_formula(),      make_gumm(),             make_goursat_direct_image(),
        make_set_not_permutable(std::nullopt),
    };
    for (std::size_t n = 2; n <= 6; ++n) v.push_back(make_set_not_permutable(n));
    v.push_back(make_mixed3_fails());
    v.push_back(make_partition_nonmodular());
    v.push_back(make_stat_even_converse());
    return v;
  }();
  return all;
}

inline Checker const& find_checker(std::string_view id) {
  for (auto const& c : catalog()) {
    if (c.id == id) return c;
  }
  throw InputError("unknown theorem id '" + std::string(id) + "'");
}

}  // namespace relcat::harness

#endif  // RELCAT_CATALOG_HPP
