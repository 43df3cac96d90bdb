#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <relcat/cli.hpp>

#include "support.hpp"

using namespace relcat;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int const code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(std::string const& name) { return std::string(RELCAT_SAMPLES_DIR) + "/" + name; }

std::string temp_file(std::string const& name, std::string const& content) {
  auto path = std::filesystem::temp_directory_path() / ("relcat_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("compose takes A then B with B applied first") {
  auto ab = run({"compose", sample("r1.rel"), sample("s1.rel")});
  CHECK(ab.code == 0);
  CHECK(ab.out == "rel 3\n0 0\n0 1\n1 1\n1 2\n2 2\n");
  auto ba = run({"compose", sample("s1.rel"), sample("r1.rel")});
  CHECK(ba.out == "rel 3\n0 0\n0 1\n0 2\n1 1\n1 2\n2 2\n");
}

TEST_CASE("closure and join") {
  auto c = run({"closure", "--kind", "preorder", sample("path3.rel")});
  CHECK(c.code == 0);
  CHECK(c.out == "rel 3\n0 0\n0 1\n0 2\n1 1\n1 2\n2 2\n");
  auto e = run({"closure", "--kind", "equivalence", sample("path3.rel")});
  CHECK(e.out == io::format_relation(Relation::nabla(3)));
  auto j = run({"join", "--kind", "equivalence", sample("e01.rel"), sample("e12.rel")});
  CHECK(j.code == 0);
  CHECK(io::format_partition(io::parse_relation(j.out)) == "{0,1,2}{3}");
}

TEST_CASE("chain listing") {
  auto r = run({"chain", sample("r1.rel"), sample("s1.rel")});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "0: 3\n1: 4\n2: 5\n3: 6\nstationary: 3\nrel 3\n0 0\n0 1\n0 2\n1 1\n1 2\n2 2\n");
  auto t = run({"chain", sample("r1.rel"), sample("s1.rel"), "--max", "1"});
  CHECK(t.out.find("truncated: ") != std::string::npos);
}

TEST_CASE("cocartesian image") {
  auto r = run({"cocart", sample("f.map"), sample("t1.rel")});
  CHECK(r.code == 0);
  CHECK(r.out.find("image:\nrel 3\n0 0\n0 1\n0 2\n1 1\n1 2\n2 2\n") != std::string::npos);
  CHECK(r.out.find("certified: yes\n") != std::string::npos);
}

TEST_CASE("enumeration") {
  auto r = run({"enum", "--kind", "preorder", "--size", "3", "--count-only"});
  CHECK(r.code == 0);
  CHECK(r.out == "29\n");
  auto all = run({"enum", "--kind", "equivalence", "--size", "2"});
  CHECK(all.out == "rel 2\n0 0\n1 1\nrel 2\n0 0\n0 1\n1 0\n1 1\n");
  CHECK(run({"enum", "--kind", "preorder", "--size", "9", "--count-only"}).code == 4);
  CHECK(run({"enum", "--kind", "lattice", "--size", "2"}).code == 2);
}

TEST_CASE("algebra commands") {
  auto c = run({"alg", "congruences", sample("z4.alg")});
  CHECK(c.code == 0);
  CHECK(c.out == "congruences: 3\n{0}{1}{2}{3}\n{0,2}{1,3}\n{0,1,2,3}\n");
  CHECK(run({"alg", "modular", sample("z4.alg")}).code == 0);
  auto m = run({"alg", "modular", sample("set4.alg")});
  CHECK(m.code == 1);
  CHECK(m.out.rfind("modular: no\n", 0) == 0);
  CHECK(run({"alg", "shifting", sample("z4.alg")}).code == 0);
  CHECK(run({"alg", "shifting", sample("set4.alg")}).code == 1);
  auto s = run({"alg", "shifting", sample("z4.alg"), sample("delta4.rel"), sample("mod2.rel"),
                sample("delta4.rel")});
  CHECK(s.code == 0);
  CHECK(s.out == "shifting: holds\n");
  CHECK(run({"alg", "shifting", sample("z4.alg"), sample("mod2.rel"), sample("delta4.rel"),
             sample("delta4.rel")})
            .code == 3);
  CHECK(run({"alg", "shifting", sample("z4.alg"), sample("mod2.rel")}).code == 2);
}

TEST_CASE("check, falsify and replay") {
  auto b = run({"check", "thm-main3-bijection", "--exhaustive", "--size", "3"});
  CHECK(b.code == 0);
  CHECK(b.out.rfind("pass (4/4 codomain preorders)\n", 0) == 0);

  auto via_check = run({"check", "goursat-direct-image"});
  CHECK(via_check.code == 1);
  CHECK(via_check.out.find("\ninstance\n") != std::string::npos);

  auto f = run({"falsify", "goursat-direct-image"});
  CHECK(f.code == 1);
  auto saved = temp_file("goursat.txt", f.out);
  auto r = run({"replay", "goursat-direct-image", saved});
  CHECK(r.code == 1);
  CHECK(r.out == "violated: f(T) is not transitive\n");

  auto holds = temp_file("holds.txt", "instance\nparams 0\nmap 2 1\n0 0\nrel 2\n0 0\n1 1\nend\n");
  CHECK(run({"replay", "goursat-direct-image", holds}).out == "holds\n");
  auto skip = temp_file("skip.txt", "instance\nparams 0\nmap 2 2\n0 0\nrel 2\n0 0\n1 1\nend\n");
  CHECK(run({"replay", "goursat-direct-image", skip}).out.rfind("not qualifying", 0) == 0);

  auto explore = run({"check", "stat-even-converse"});
  CHECK(explore.code == 0);
  CHECK(explore.out.find("mode: explore (informational)") != std::string::npos);

  auto falsify_verify = run({"check", "cor-RSR-power", "--mode", "falsify", "--samples", "50"});
  CHECK(falsify_verify.code == 0);
  CHECK(falsify_verify.out.rfind("inconclusive", 0) == 0);
}

TEST_CASE("check output is byte-identical across thread counts") {
  for (char const* id : {"chain-intertwine", "day-formula", "cor-modular-formula"}) {
    auto one = run({"check", id, "--samples", "300", "--threads", "1"});
    auto three = run({"check", id, "--samples", "300", "--threads", "3"});
    CHECK(one.code == 0);
    CHECK(one.out == three.out);
  }
}

TEST_CASE("list") {
  auto r = run({"list"});
  CHECK(r.code == 0);
  CHECK(r.out.find("goursat-direct-image (falsify)\n") != std::string::npos);
  CHECK(r.out.find("stat-even-converse (explore, informational)\n") != std::string::npos);
}

TEST_CASE("exit codes for bad input") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check", "no-such-check"}).code == 2);
  CHECK(run({"replay", "no-such-check", sample("t1.rel")}).code == 2);
  CHECK(run({"check", "chain-intertwine", "--threads", "0"}).code == 2);
  CHECK(run({"check", "chain-intertwine", "--mode", "guess"}).code == 2);
  CHECK(run({"closure", "--kind", "lattice", sample("t1.rel")}).code == 2);

  auto missing = run({"closure", "/nonexistent/x.rel"});
  CHECK(missing.code == 3);
  CHECK(missing.err.rfind("error: ", 0) == 0);
  CHECK(run({"closure", temp_file("bad.rel", "rel 2\n0 5\n")}).code == 3);
  CHECK(run({"compose", sample("t1.rel"), sample("r1.rel")}).code == 3);
  CHECK(run({"cocart", sample("f.map"), sample("path3.rel")}).code == 3);
  CHECK(run({"replay", "goursat-direct-image", sample("t1.rel")}).code == 3);
  CHECK(run({"closure", temp_file("huge.rel", "rel 99999999\n")}).code == 4);
}

TEST_CASE("help") {
  auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("check") != std::string::npos);
}
