#ifndef RELCAT_CLI_HPP
#define RELCAT_CLI_HPP

#include <CLI11.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "chains.hpp"
#include "cocartesian.hpp"
#include "finite_map.hpp"
#include "harness.hpp"
#include "relation.hpp"
#include "text_io.hpp"

// Exit codes: 0 success or property holds, 1 property fails or witness
// found, 2 usage error, 3 malformed or unusable input, 4 capacity bound.

namespace relcat::cli {

inline constexpr int kOk = 0;
inline constexpr int kFails = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInput = 3;
inline constexpr int kCapacity = 4;

namespace detail {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Relation load_relation(std::string const& path) {
  return io::parse_relation(io::read_file(path));
}

inline OrderKind parse_kind(std::string const& s) {
  if (s == "preorder") return OrderKind::preorder;
  if (s == "equivalence") return OrderKind::equivalence;
  throw UsageError("--kind must be 'preorder' or 'equivalence', got '" + s + "'");
}

/// The first "instance" ... "end" block of a file, so that saved check
/// reports can be replayed as they are.
inline harness::Instance load_instance(std::string const& path) {
  std::string const text = io::read_file(path);
  auto const begin = text.find("instance\n");
  auto const end = text.find("\nend", begin == std::string::npos ? 0 : begin);
  if (begin == std::string::npos || end == std::string::npos) {
    throw ParseError("no instance block in '" + path + "'");
  }
  return harness::parse_instance(text.substr(begin, end + 4 - begin) + "\n");
}

inline int check_exit(harness::CheckReport const& rep) {
  switch (*rep.spec.mode) {
    case harness::CheckMode::verify:
      return rep.verdict == harness::Verdict::pass ? kOk : kFails;
    case harness::CheckMode::falsify:
      return rep.verdict == harness::Verdict::counterexample ? kFails : kOk;
    default:
      return kOk;  // exploratory results are informational
  }
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int dispatch(std::vector<std::string> const& args, std::ostream& out,
                    std::ostream& err) {
  CLI::App app{"Finite relation calculus and theorem checks", "relcat"};
  app.require_subcommand(1);

  std::string a_path, b_path, kind_str = "preorder", id, alg_path;
  std::size_t chain_max = 0;
  auto* compose_cmd = app.add_subcommand("compose", "print the composite A∘B (B first, then A)");
  compose_cmd->add_option("A", a_path)->required();
  compose_cmd->add_option("B", b_path)->required();

  auto* closure_cmd = app.add_subcommand("closure", "least preorder or equivalence containing T");
  closure_cmd->add_option("--kind", kind_str, "preorder or equivalence");
  closure_cmd->add_option("T", a_path)->required();

  auto* chain_cmd = app.add_subcommand("chain", "terms of the chain ((R,S)) until it stabilizes");
  chain_cmd->add_option("R", a_path)->required();
  chain_cmd->add_option("S", b_path)->required();
  chain_cmd->add_option("--max", chain_max, "cutoff index (default n^2+1)");

  auto* join_cmd = app.add_subcommand("join", "join of two preorders or equivalences");
  join_cmd->add_option("--kind", kind_str, "preorder or equivalence");
  join_cmd->add_option("R", a_path)->required();
  join_cmd->add_option("S", b_path)->required();

  auto* cocart_cmd = app.add_subcommand("cocart", "cocartesian image of T along a surjection");
  cocart_cmd->add_option("f", a_path)->required();
  cocart_cmd->add_option("T", b_path)->required();
  cocart_cmd->add_option("--kind", kind_str, "preorder or equivalence");

  harness::CheckSpec spec;
  std::size_t size = 0, codomain = 0, budget = 1000;
  std::string mode_str;
  bool exhaustive = false, random_only = false;
  auto* check_cmd = app.add_subcommand("check", "run a registered check");
  check_cmd->add_option("id", id)->required();
  check_cmd->add_option("--samples", spec.samples, "samples, or search budget");
  check_cmd->add_option("--size", size, "largest carrier");
  check_cmd->add_option("--codomain", codomain, "codomain size, where used");
  check_cmd->add_option("--max-index", spec.max_index, "bound for chain indices");
  check_cmd->add_option("--order", spec.order, "n for set-not-n-permutable");
  check_cmd->add_option("--seed", spec.seed, "master seed");
  check_cmd->add_option("--threads", spec.threads, "worker threads");
  check_cmd->add_option("--mode", mode_str, "verify, falsify or explore");
  auto* exh = check_cmd->add_flag("--exhaustive", exhaustive, "enumerate every instance");
  check_cmd->add_flag("--random", random_only, "sample even when enumeration is small")
      ->excludes(exh);

  auto* falsify_cmd = app.add_subcommand("falsify", "search for a witness, smallest carrier first");
  falsify_cmd->add_option("id", id)->required();
  falsify_cmd->add_option("--budget", budget, "evaluation budget");
  falsify_cmd->add_option("--seed", spec.seed, "master seed");
  falsify_cmd->add_option("--order", spec.order, "n for set-not-n-permutable");

  auto* replay_cmd = app.add_subcommand("replay", "re-evaluate a saved witness");
  replay_cmd->add_option("id", id)->required();
  replay_cmd->add_option("file", a_path)->required();

  auto* list_cmd = app.add_subcommand("list", "list registered checks");

  auto* alg_cmd = app.add_subcommand("alg", "finite algebra commands");
  alg_cmd->require_subcommand(1);
  auto* cong_cmd = alg_cmd->add_subcommand("congruences", "list the congruences");
  cong_cmd->add_option("A", alg_path)->required();
  auto* mod_cmd = alg_cmd->add_subcommand("modular", "check the modular law");
  mod_cmd->add_option("A", alg_path)->required();
  std::vector<std::string> shift_paths;
  auto* shift_cmd = alg_cmd->add_subcommand(
      "shifting", "shifting principle for T S R, or over all admissible triples");
  shift_cmd->add_option("A", alg_path)->required();
  shift_cmd->add_option("relations", shift_paths, "T.rel S.rel R.rel");

  std::size_t enum_size = 0;
  bool count_only = false;
  auto* enum_cmd = app.add_subcommand("enum", "enumerate relations of a kind");
  enum_cmd->add_option("--kind", kind_str, "reflexive, preorder or equivalence");
  enum_cmd->add_option("--size", enum_size)->required();
  enum_cmd->add_flag("--count-only", count_only);

  std::vector<std::string> argv_store{"relcat"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char const*> argv;
  for (auto const& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (compose_cmd->parsed()) {
      Relation const a = detail::load_relation(a_path);
      Relation const b = detail::load_relation(b_path);
      out << io::format_relation(compose(a, b));
      return kOk;
    }
    if (closure_cmd->parsed()) {
      OrderKind const kind = detail::parse_kind(kind_str);
      out << io::format_relation(closure(kind, detail::load_relation(a_path)));
      return kOk;
    }
    if (chain_cmd->parsed()) {
      Relation const r = detail::load_relation(a_path);
      Relation const s = detail::load_relation(b_path);
      auto cutoff = chain_max ? std::optional<std::size_t>(chain_max) : std::nullopt;
      ChainTrace const trace = chain_trace(r, s, cutoff);
      std::size_t const last =
          trace.stationary_index ? *trace.stationary_index : trace.terms.size() - 1;
      for (std::size_t k = 0; k <= last; ++k) {
        out << k << ": " << trace.terms[k].count() << "\n";
      }
      if (trace.stationary_index) {
        out << "stationary: " << *trace.stationary_index << "\n";
      } else {
        out << "truncated: " << last << "\n";
      }
      out << io::format_relation(trace.supremum());
      return kOk;
    }
    if (join_cmd->parsed()) {
      OrderKind const kind = detail::parse_kind(kind_str);
      out << io::format_relation(
          join(kind, detail::load_relation(a_path), detail::load_relation(b_path)));
      return kOk;
    }
    if (cocart_cmd->parsed()) {
      OrderKind const kind = detail::parse_kind(kind_str);
      FiniteMap const f = io::parse_map(io::read_file(a_path));
      Relation const t = detail::load_relation(b_path);
      CocartesianResult const res = cocartesian_image(kind, f, t);
      out << "kernel:\n" << io::format_relation(kernel_pair(f));
      out << "join-over-kernel:\n" << io::format_relation(res.join_over_kernel);
      out << "image:\n" << io::format_relation(res.image);
      out << "pulled-back:\n" << io::format_relation(inverse_image(f, res.image));
      out << "certified: " << (res.certified ? "yes" : "no") << "\n";
      return res.certified ? kOk : kFails;
    }
    if (check_cmd->parsed() || falsify_cmd->parsed()) {
      try {
        harness::find_checker(id);
      } catch (InputError const& e) {
        throw detail::UsageError(e.what());
      }
      harness::CheckReport rep;
      if (falsify_cmd->parsed()) {
        spec.theorem_id = id;
        spec.samples = budget;
        harness::Checker const& c = harness::find_checker(id);
        spec.mode = c.mode == harness::CheckMode::verify ? harness::CheckMode::falsify : c.mode;
        rep = harness::run_check(spec);
        out << harness::format_report(rep);
        return rep.verdict == harness::Verdict::counterexample ? kFails : kOk;
      }
      spec.theorem_id = id;
      if (size) spec.size = size;
      if (codomain) spec.codomain = codomain;
      if (!mode_str.empty()) {
        spec.mode = harness::parse_mode(mode_str);
        if (!spec.mode) throw detail::UsageError("--mode must be verify, falsify or explore");
      }
      if (exhaustive) spec.exhaustive = harness::Exhaustive::always;
      if (random_only) spec.exhaustive = harness::Exhaustive::never;
      if (spec.samples == 0) throw detail::UsageError("--samples must be at least 1");
      if (spec.threads == 0) throw detail::UsageError("--threads must be at least 1");
      rep = harness::run_check(spec);
      out << harness::format_report(rep);
      return detail::check_exit(rep);
    }
    if (replay_cmd->parsed()) {
      try {
        harness::find_checker(id);
      } catch (InputError const& e) {
        throw detail::UsageError(e.what());
      }
      harness::Instance const inst = detail::load_instance(a_path);
      harness::Outcome const o = harness::evaluate_witness(id, inst);
      if (!o.qualifies) {
        out << "not qualifying: " << o.note << "\n";
        return kOk;
      }
      if (o.holds) {
        out << "holds\n";
        return kOk;
      }
      out << "violated: " << o.note << "\n";
      return kFails;
    }
    if (list_cmd->parsed()) {
      for (auto const& c : harness::catalog()) {
        out << c.id << " (" << harness::to_string(c.mode) << (c.gating ? "" : ", informational")
            << ")\n";
      }
      return kOk;
    }
    if (alg_cmd->parsed()) {
      FiniteAlgebra const a = io::parse_algebra(io::read_file(alg_path));
      if (cong_cmd->parsed()) {
        CongruenceLattice const lat = congruence_lattice(a);
        out << "congruences: " << lat.elements.size() << "\n";
        for (auto const& e : lat.elements) out << io::format_partition(e) << "\n";
        return kOk;
      }
      if (mod_cmd->parsed()) {
        ModularityVerdict const v = modularity_check(a);
        out << "modular: " << (v.modular ? "yes" : "no") << "\n";
        if (v.witness) {
          out << "R: " << io::format_partition(v.witness->r) << "\n";
          out << "S: " << io::format_partition(v.witness->s) << "\n";
          out << "T: " << io::format_partition(v.witness->t) << "\n";
        }
        return v.modular ? kOk : kFails;
      }
      if (shift_paths.empty()) {
        ShiftingScan const scan = shifting_principle_scan(a);
        out << "shifting: " << (scan.holds ? "holds" : "fails") << "\n";
        out << "admissible: " << scan.admissible << "\n";
        if (scan.witness) {
          auto const& w = *scan.witness;
          out << "T: " << io::format_partition(w.t) << "\n";
          out << "S:\n" << io::format_relation(w.s);
          out << "R: " << io::format_partition(w.r) << "\n";
          out << "quadruple: " << w.quadruple[0] << " " << w.quadruple[1] << " "
              << w.quadruple[2] << " " << w.quadruple[3] << "\n";
        }
        return scan.holds ? kOk : kFails;
      }
      if (shift_paths.size() != 3) {
        throw detail::UsageError("alg shifting takes T.rel S.rel R.rel or no relations");
      }
      ShiftingVerdict const v = shifting_principle_check(
          a, detail::load_relation(shift_paths[0]), detail::load_relation(shift_paths[1]),
          detail::load_relation(shift_paths[2]));
      out << "shifting: " << (v.holds ? "holds" : "fails") << "\n";
      if (v.witness) {
        auto const& q = *v.witness;
        out << "quadruple: " << q[0] << " " << q[1] << " " << q[2] << " " << q[3] << "\n";
      }
      return v.holds ? kOk : kFails;
    }
    if (enum_cmd->parsed()) {
      RelationKind kind;
      if (kind_str == "reflexive") {
        kind = RelationKind::reflexive;
      } else if (kind_str == "preorder") {
        kind = RelationKind::preorder;
      } else if (kind_str == "equivalence") {
        kind = RelationKind::equivalence;
      } else {
        throw detail::UsageError("--kind must be reflexive, preorder or equivalence");
      }
      auto const all = enumerate(kind, enum_size);
      if (count_only) {
        out << all.size() << "\n";
      } else {
        for (auto const& r : all) out << io::format_relation(r);
      }
      return kOk;
    }
  } catch (detail::UsageError const& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (CapacityError const& e) {
    err << "error: " << e.what() << "\n";
    return kCapacity;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }
  err << "error: no command\n";
  return kUsage;
}

}  // namespace relcat::cli

#endif  // RELCAT_CLI_HPP
