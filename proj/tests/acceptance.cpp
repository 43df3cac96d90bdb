// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Independent reference computations live in support.hpp.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <relcat/cli.hpp>

#include "support.hpp"

using namespace relcat;
using namespace relcat::testing;
using harness::CheckMode;
using harness::CheckReport;
using harness::CheckSpec;
using harness::Verdict;

namespace {

struct Result {
  bool ok = true;
  std::string detail;

  void fail(std::string const& why) {
    if (ok) detail.clear();
    ok = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
  void note(std::string const& s) {
    if (ok) detail += (detail.empty() ? "" : ", ") + s;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

CheckReport run(std::string const& id, std::size_t samples, std::optional<std::size_t> size = {},
                std::size_t max_index = 3) {
  CheckSpec s;
  s.theorem_id = id;
  s.samples = samples;
  s.size = size;
  s.max_index = max_index;
  return harness::run_check(s);
}

void require_pass(Result& res, CheckReport const& rep, std::size_t min_qualifying = 1) {
  std::string const line = rep.spec.theorem_id + " " + harness::summary_line(rep);
  if (rep.verdict != Verdict::pass) {
    res.fail(line + (rep.witness ? ": " + rep.witness_note : ""));
  } else if (rep.qualifying < min_qualifying) {
    res.fail(line + ": fewer than " + std::to_string(min_qualifying) + " qualifying");
  } else {
    res.note(line);
  }
}

void within(Result& res, Clock::time_point t0, double limit) {
  double const s = seconds_since(t0);
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  if (s > limit) {
    res.fail("took " + os.str() + ", limit " + std::to_string(static_cast<int>(limit)) + " s");
  }
}

/// Runs until at least `want` instances qualify, growing the sample count.
CheckReport run_qualifying(std::string const& id, std::size_t want, std::size_t size) {
  std::size_t samples = want;
  while (true) {
    CheckReport rep = run(id, samples, size, 3);
    if (rep.verdict != Verdict::pass || rep.qualifying >= want) return rep;
    samples = samples * want / std::max<std::size_t>(rep.qualifying, 1) + want / 10;
  }
}

std::vector<FiniteMap> surjections(std::size_t n, std::size_t m) {
  std::vector<FiniteMap> out;
  std::vector<std::size_t> v(n, 0);
  while (true) {
    FiniteMap f(m, v);
    if (f.is_surjective()) out.push_back(f);
    std::size_t i = n;
    while (i > 0 && ++v[i - 1] == m) v[--i] = 0;
    if (i == 0) return out;
  }
}

// 1
Result closures_match_oracles() {
  Result res;
  auto const t0 = Clock::now();
  std::size_t exhaustive = 0, random = 0;
  for (std::size_t n = 0; n <= 3; ++n) {
    for_each_relation(n, [&](Relation const& t) {
      ++exhaustive;
      if (closure(OrderKind::preorder, t) != oracle::warshall_closure(t) ||
          closure(OrderKind::equivalence, t) != oracle::union_find_closure(t)) {
        res.fail("mismatch on " + io::format_relation(t));
      }
    });
  }
  Rng rng(20240601);
  for (; random < 10000; ++random) {
    std::size_t const n = rng.between(1, 8);
    double const d = 0.05 + 0.1 * static_cast<double>(rng.below(5));
    Relation const t = random_relation(rng, RandomKind::relation, n, d);
    if (closure(OrderKind::preorder, t) != oracle::warshall_closure(t) ||
        closure(OrderKind::equivalence, t) != oracle::union_find_closure(t)) {
      res.fail("mismatch on random relation " + std::to_string(random));
    }
  }
  res.note(std::to_string(exhaustive) + " exhaustive, " + std::to_string(random) + " random");
  within(res, t0, 10);
  return res;
}

// 2
Result enumeration_counts() {
  Result res;
  std::vector<std::size_t> const pre{1, 1, 4, 29, 355};
  std::vector<std::size_t> const eq{1, 1, 2, 5, 15};
  for (std::size_t n = 0; n <= 4; ++n) {
    std::size_t brute_pre = 0, brute_eq = 0;
    for_each_relation(n, [&](Relation const& r) {
      if (!naive_reflexive(r) || !naive_transitive(r)) return;
      ++brute_pre;
      if (naive_symmetric(r)) ++brute_eq;
    });
    std::size_t const got_pre = enumerate(RelationKind::preorder, n).size();
    std::size_t const got_eq = enumerate(RelationKind::equivalence, n).size();
    if (got_pre != pre[n] || brute_pre != pre[n] || got_eq != eq[n] || brute_eq != eq[n]) {
      res.fail("n=" + std::to_string(n) + ": preorders " + std::to_string(got_pre) +
               " (filter " + std::to_string(brute_pre) + "), equivalences " +
               std::to_string(got_eq) + " (filter " + std::to_string(brute_eq) + ")");
    }
  }
  res.note("preorders 1 1 4 29 355, equivalences 1 1 2 5 15");
  return res;
}

// 3
Result correspondence_suite() {
  Result res;
  auto const t0 = Clock::now();
  std::size_t instances = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m = 1; m <= std::min<std::size_t>(n, 3); ++m) {
      CheckSpec s;
      s.theorem_id = "thm-main3-bijection";
      s.size = n;
      s.codomain = m;
      s.exhaustive = harness::Exhaustive::always;
      CheckReport const rep = harness::run_check(s);
      instances += rep.tested;
      if (rep.verdict != Verdict::pass) {
        res.fail("bijection n=" + std::to_string(n) + " m=" + std::to_string(m) + ": " +
                 harness::summary_line(rep) + " " + rep.witness_note);
      }
    }
  }
  res.note("bijection exhaustive over " + std::to_string(instances) + " codomain preorders");
  require_pass(res, run("thm-main3-finv-f", 1000), 1000);
  within(res, t0, 30);
  return res;
}

// 4
Result chain_identity_suite() {
  Result res;
  for (char const* id : {"chain-intertwine", "prop-chain-identities", "cor-RSR-power",
                         "lem-image-powers"}) {
    require_pass(res, run(id, 1000, 7, 3));
  }
  return res;
}

// 5
Result sigma_preorder() {
  Result res;
  require_pass(res, run("supermain-sigma-preorder", 1000, 8), 1000);
  return res;
}

// 6
Result stationarity_suite() {
  Result res;
  for (char const* id : {"keylemma2-equivalence", "stat-odd-equivalence",
                         "stat-even-implication"}) {
    require_pass(res, run_qualifying(id, 1000, 6), 1000);
  }
  return res;
}

// 7
Result cocartesian_universal_property() {
  Result res;
  std::size_t pairs = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const domain = enumerate(RelationKind::preorder, n);
    for (std::size_t m = 1; m <= std::min<std::size_t>(n, 3); ++m) {
      auto const targets = enumerate(RelationKind::preorder, m);
      for (auto const& f : surjections(n, m)) {
        for (auto const& t : domain) {
          ++pairs;
          auto const img = cocartesian_image(OrderKind::preorder, f, t);
          std::vector<Relation> above;
          for (auto const& s : targets) {
            if (leq(t, inverse_image(f, s))) above.push_back(s);
          }
          auto const least = oracle::least_of(above);
          Relation const sigma = oracle::warshall_closure(unite(kernel_pair(f), t));
          if (!least || img.image != *least || inverse_image(f, img.image) != sigma ||
              img.join_over_kernel != sigma) {
            res.fail("f=" + io::format_map(f) + " T=" + io::format_relation(t));
          }
        }
      }
    }
  }
  res.note(std::to_string(pairs) + " (f, T) pairs against the least-target oracle");
  require_pass(res, run("prop10-cocartesian", 1000));
  return res;
}

// 8
Result negative_witnesses() {
  Result res;
  auto timed = [&](std::string const& label, std::function<CheckReport()> const& search) {
    auto const t0 = Clock::now();
    CheckReport const rep = search();
    if (rep.verdict != Verdict::counterexample) res.fail(label + ": no witness");
    else res.note(label + " witness at " + std::to_string(*rep.witness_index));
    within(res, t0, 1);
    return rep;
  };

  timed("goursat", [] { return harness::find_counterexample("goursat-direct-image", 1000); });
  harness::Instance g;
  g.params = {0};
  g.map = make_map(4, 3, {0, 1, 1, 2});
  g.relations = {refl(4, {{0, 1}, {2, 3}})};
  auto const go = harness::evaluate_witness("goursat-direct-image", g);
  if (!go.qualifies || go.holds) res.fail("f=[0,1,1,2] instance is not a witness");

  for (std::size_t n = 2; n <= 5; ++n) {
    timed("set-not-" + std::to_string(n), [n] {
      CheckSpec s;
      s.theorem_id = "set-not-n-permutable";
      s.order = n;
      s.samples = 1000;
      return harness::run_check(s);
    });
    harness::Instance p;
    p.params = {n};
    p.relations = {Relation::delta(n + 1)};
    for (std::size_t i = 0; i < n; ++i) p.relations[0].insert(i, i + 1);
    auto const o = harness::evaluate_witness("set-not-n-permutable", p);
    if (!o.qualifies || o.holds) res.fail("path on " + std::to_string(n + 1) + " is not a witness");
  }

  timed("mixed-3", [] { return harness::find_counterexample("mixed-3-subperm-fails-in-set", 1000); });
  harness::Instance mx;
  mx.relations = {Relation::delta(3), refl(3, {{0, 1}, {1, 2}})};
  auto const mo = harness::evaluate_witness("mixed-3-subperm-fails-in-set", mx);
  if (!mo.qualifies || mo.holds) res.fail("R=Δ, S=two-step path is not a witness");
  return res;
}

// 9
Result algebra_suite() {
  Result res;
  auto const t0 = Clock::now();
  std::size_t generated = 0;
  Rng rng(99);
  for (auto const& named : bundled_corpus()) {
    FiniteAlgebra const& a = named.algebra;
    std::size_t const n = a.size();
    std::vector<Relation> seeds;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) seeds.push_back(make_relation(n, {{i, j}}));
    }
    for (int k = 0; k < 50; ++k) seeds.push_back(random_relation(rng, RandomKind::relation, n, 0.1));
    for (auto const& t : seeds) {
      ++generated;
      if (congruence_generated(a, t).relation != congruence_by_intersection(a, t)) {
        res.fail(named.name + ": generated congruence differs from the intersection");
      }
    }
  }
  res.note(std::to_string(generated) + " generated congruences");

  for (char const* name : {"Z4", "Z2xZ2", "Z6", "S3"}) {
    FiniteAlgebra const& a = corpus_algebra(name).algebra;
    auto const mod = modularity_check(a);
    auto const shift = shifting_principle_scan(a, ShiftingRange::tolerances);
    if (!mod.modular || !shift.holds) res.fail(std::string(name) + " fails modularity or shifting");
  }
  FiniteAlgebra const set4 = bare_set(4);
  if (modularity_check(set4).modular) res.fail("bare 4-set passes modularity");
  if (shifting_principle_scan(set4).holds) res.fail("bare 4-set passes shifting");
  Relation const r = partition({0, 0, 1, 2});
  Relation const s = partition({0, 1, 0, 1});
  Relation const t = partition({0, 0, 1, 1});
  if (!leq(r, t) || modular_law_holds(set4, r, s, t)) res.fail("pentagon witness not confirmed");

  require_pass(res, run("day-formula", 1000));
  require_pass(res, run("gumm-shifting-vs-modular", 1000));
  within(res, t0, 60);
  return res;
}

// 10
Result join_via_square_cross_check() {
  Result res;
  require_pass(res, run("main2-join-via-square", 100, 5), 100);
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    std::size_t const n = rng.between(1, 5);
    Relation const e = random_relation(rng, RandomKind::equivalence, n, 0.2);
    Relation const p = random_relation(rng, RandomKind::preorder, n, 0.2);
    if (join_via_square(e, p) != join(OrderKind::preorder, closure(OrderKind::preorder, e), p)) {
      res.fail("square join differs on pair " + std::to_string(i));
    }
  }
  return res;
}

// 11
Result determinism_and_replay() {
  Result res;
  for (auto const& c : harness::catalog()) {
    if (c.mode == CheckMode::verify) continue;
    CheckReport const rep = harness::find_counterexample(c.id, 1000);
    if (!rep.witness) {
      res.fail(c.id + ": no witness to replay");
      continue;
    }
    std::string const text = harness::format_report(rep);
    harness::Instance const back = harness::parse_instance(text.substr(text.find("instance\n")));
    if (back != *rep.witness || harness::replay(rep) != rep.verdict ||
        harness::evaluate_witness(c.id, back).note != rep.witness_note) {
      res.fail(c.id + ": replay differs");
    }
  }
  CheckReport const pass = run("keylemma-implications", 300);
  if (harness::replay(pass) != pass.verdict) res.fail("pass report does not replay");

  auto cli = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    int const code = cli::dispatch(args, out, err);
    return std::to_string(code) + "\n" + out.str() + err.str();
  };
  for (char const* id : {"chain-intertwine", "stat-odd-equivalence", "cor-modular-formula",
                         "goursat-direct-image"}) {
    std::vector<std::string> base{"check", id, "--samples", "500", "--seed", "7"};
    auto with_threads = [&](char const* t) {
      auto a = base;
      a.insert(a.end(), {"--threads", t});
      return cli(a);
    };
    std::string const first = cli(base);
    if (first != cli(base) || first != with_threads("1") || first != with_threads("4")) {
      res.fail(std::string(id) + ": CLI output differs between runs");
    }
  }
  res.note("witnesses replay, CLI output identical across 1 and 4 threads");
  return res;
}

}  // namespace

int main() {
  std::vector<std::pair<char const*, std::function<Result()>>> const criteria = {
      {"closures match Warshall and union-find", closures_match_oracles},
      {"enumeration counts", enumeration_counts},
      {"preimage/image correspondence", correspondence_suite},
      {"chain identities", chain_identity_suite},
      {"sigma is a preorder", sigma_preorder},
      {"stationarity conditions", stationarity_suite},
      {"cocartesian universal property", cocartesian_universal_property},
      {"negative witnesses", negative_witnesses},
      {"universal algebra suite", algebra_suite},
      {"join via square", join_via_square_cross_check},
      {"determinism and replay", determinism_and_replay},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto const t0 = Clock::now();
    Result res;
    try {
      res = criteria[i].second();
    } catch (std::exception const& e) {
      res.fail(std::string("exception: ") + e.what());
    }
    if (!res.ok) ++failures;
    std::printf("criterion %2zu %s  %s (%.2f s): %s\n", i + 1, res.ok ? "PASS" : "FAIL",
                criteria[i].first, seconds_since(t0), res.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
