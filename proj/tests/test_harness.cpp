#include <catch_amalgamated.hpp>

#include <set>

#include "support.hpp"

using namespace relcat;
using namespace relcat::testing;
using harness::CheckMode;
using harness::CheckSpec;
using harness::Verdict;

namespace {
CheckSpec spec_for(std::string id, std::size_t samples = 200) {
  CheckSpec s;
  s.theorem_id = std::move(id);
  s.samples = samples;
  return s;
}
}  // namespace

TEST_CASE("catalog ids are unique and resolvable") {
  std::set<std::string> ids;
  for (auto const& c : harness::catalog()) {
    CHECK(ids.insert(c.id).second);
    CHECK(&harness::find_checker(c.id) == &c);
    CHECK_FALSE(c.statement.empty());
    CHECK(static_cast<bool>(c.evaluate));
  }
  for (char const* id :
       {"thm-main3-bijection", "thm-main3-finv-f", "lem-square2-cartesian", "lem-d1-kernel",
        "prop-idcomp-star", "prop10-cocartesian", "cor-modular-formula", "prop-Rn-stationary",
        "cor-firstex-cocart", "chain-intertwine", "prop-chain-identities", "cor-RSR-power",
        "lem-image-powers", "supermain-sigma-preorder", "keylemma-implications",
        "keylemma2-equivalence", "stat-odd-equivalence", "stat-even-implication",
        "cor-stat11-two-way", "disy-instance", "zurab-instance-scan", "genmal-instance-scan",
        "mixed-instance", "main2-join-via-square", "day-formula", "gumm-shifting-vs-modular",
        "goursat-direct-image", "set-not-n-permutable", "stat-even-converse"}) {
    CHECK(ids.count(id) == 1);
  }
  CHECK_THROWS_AS(harness::find_checker("no-such-check"), InputError);
  CHECK_THROWS_AS(harness::run_check(spec_for("no-such-check")), InputError);
}

TEST_CASE("every gating verify check passes on a short run") {
  for (auto const& c : harness::catalog()) {
    if (c.mode != CheckMode::verify) continue;
    INFO(c.id);
    auto rep = harness::run_check(spec_for(c.id));
    CHECK(rep.verdict == Verdict::pass);
    CHECK(rep.qualifying > 0);
    CHECK(rep.qualifying <= rep.tested);
  }
}

TEST_CASE("every falsify check finds a witness") {
  for (auto const& c : harness::catalog()) {
    if (c.mode != CheckMode::falsify) continue;
    INFO(c.id);
    auto rep = harness::find_counterexample(c.id, 1000);
    REQUIRE(rep.verdict == Verdict::counterexample);
    REQUIRE(rep.witness);
    CHECK_FALSE(harness::evaluate_witness(c.id, *rep.witness).holds);
    CHECK(harness::evaluate_witness(c.id, *rep.witness).qualifies);
  }
}

TEST_CASE("direct image witness is the smallest one") {
  auto rep = harness::find_counterexample("goursat-direct-image", 1000);
  REQUIRE(rep.witness);
  CHECK(rep.witness->map == make_map(4, 3, {0, 1, 1, 2}));
  CHECK(rep.witness->relations.at(0) == refl(4, {{0, 1}, {2, 3}}));
}

TEST_CASE("non-permutability witnesses are paths") {
  for (std::size_t n = 2; n <= 5; ++n) {
    CheckSpec s = spec_for("set-not-n-permutable", 1000);
    s.order = n;
    s.mode = CheckMode::falsify;
    auto rep = harness::run_check(s);
    REQUIRE(rep.verdict == Verdict::counterexample);
    auto const& r = rep.witness->relations.at(0);
    CHECK(power(r, n) != power(r, n - 1));
    CHECK(r.size() == n + 1);
  }
}

TEST_CASE("exploration of the even converse") {
  auto rep = harness::run_check(spec_for("stat-even-converse", 1000));
  CHECK(*rep.spec.mode == CheckMode::explore);
  CHECK_FALSE(rep.gating);
  REQUIRE(rep.verdict == Verdict::counterexample);
  auto const& r = rep.witness->relations.at(0);
  auto const& s = rep.witness->relations.at(1);
  auto st = stationarity_conditions(Parity::even, r, s, rep.witness->params.at(0));
  CHECK(st.condition(4));
  CHECK(st.condition(5));
  CHECK_FALSE(st.condition(1));
}

TEST_CASE("bijection check counts codomain preorders") {
  auto s = spec_for("thm-main3-bijection");
  s.size = 3;
  s.exhaustive = harness::Exhaustive::always;
  auto rep = harness::run_check(s);
  CHECK(harness::summary_line(rep) == "pass (4/4 codomain preorders)");
  CHECK(rep.search == "exhaustive");
}

TEST_CASE("sampling mode selection") {
  auto auto_rep = harness::run_check(spec_for("prop10-cocartesian"));
  CHECK(auto_rep.search == "exhaustive");
  auto s = spec_for("prop10-cocartesian", 50);
  s.exhaustive = harness::Exhaustive::never;
  auto rnd = harness::run_check(s);
  CHECK(rnd.search == "random");
  CHECK(rnd.tested == 50);
  auto big = spec_for("chain-intertwine", 50);
  CHECK(harness::run_check(big).search == "random");
  big.exhaustive = harness::Exhaustive::always;
  CHECK_THROWS_AS(harness::run_check(big), InputError);
}

TEST_CASE("reports do not depend on thread count") {
  for (char const* id : {"chain-intertwine", "keylemma2-equivalence", "prop10-cocartesian"}) {
    auto one = spec_for(id, 300);
    auto four = one;
    four.threads = 4;
    CHECK(harness::format_report(harness::run_check(one)) ==
          harness::format_report(harness::run_check(four)));
  }
}

TEST_CASE("seeds change samples but runs are reproducible") {
  auto a = spec_for("supermain-sigma-preorder", 100);
  auto b = a;
  b.seed = 2;
  auto ra = harness::run_check(a);
  CHECK(harness::format_report(ra) == harness::format_report(harness::run_check(a)));
  CHECK(harness::detail::random_instance(harness::find_checker(a.theorem_id), ra.spec, 0) !=
        harness::detail::random_instance(harness::find_checker(a.theorem_id),
                                         harness::run_check(b).spec, 0));
}

TEST_CASE("replay") {
  auto rep = harness::find_counterexample("mixed-3-subperm-fails-in-set", 1000);
  CHECK(harness::replay(rep) == Verdict::counterexample);
  auto text = harness::format_report(rep);
  auto inst = harness::parse_instance(text.substr(text.find("instance\n")));
  CHECK(inst == *rep.witness);

  auto pass = harness::run_check(spec_for("cor-RSR-power", 100));
  CHECK(harness::replay(pass) == Verdict::pass);
}

TEST_CASE("report layout") {
  auto rep = harness::find_counterexample("goursat-direct-image", 1000);
  auto text = harness::format_report(rep);
  CHECK(text.rfind("counterexample (at ", 0) == 0);
  CHECK(text.find("\ntheorem: goursat-direct-image\n") != std::string::npos);
  CHECK(text.find("\nmode: falsify\n") != std::string::npos);
  CHECK(text.find("\nsearch: smallest-carrier-first\n") != std::string::npos);
  CHECK(text.find("\nviolation: f(T) is not transitive\n") != std::string::npos);
  CHECK(text.substr(text.size() - 4) == "end\n");
}

TEST_CASE("bad specs") {
  auto s = spec_for("chain-intertwine");
  s.samples = 0;
  CHECK_THROWS_AS(harness::run_check(s), InputError);
  auto z = spec_for("set-not-n-permutable");
  z.order = 1;
  CHECK_THROWS_AS(harness::run_check(z), InputError);
}
