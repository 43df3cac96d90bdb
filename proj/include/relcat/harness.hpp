#ifndef RELCAT_HARNESS_HPP
#define RELCAT_HARNESS_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "catalog.hpp"
#include "instance.hpp"
#include "random.hpp"

namespace relcat::harness {

enum class Verdict { pass, counterexample, inconclusive };

inline char const* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::counterexample: return "counterexample";
    default: return "inconclusive";
  }
}

inline constexpr std::size_t kExhaustiveThreshold = 1'000'000;

struct CheckReport {
  CheckSpec spec;  // as run: size and mode resolved
  std::string statement;
  bool gating = true;
  std::string search;  // exhaustive, random or smallest-carrier-first
  std::string unit;
  std::size_t tested = 0;
  std::size_t qualifying = 0;
  Verdict verdict = Verdict::inconclusive;
  std::optional<std::size_t> witness_index;
  std::optional<Instance> witness;
  std::string witness_note;
};

namespace detail {

struct Tally {
  std::vector<char> qualifies;
  std::vector<char> violates;
};

/// Evaluates instances 0..count-1, produced by `make`, on `threads` workers.
/// Results are per index, so aggregation does not depend on scheduling.
template <class Make>
Tally evaluate_all(Checker const& c, std::size_t count, std::size_t threads, Make make) {
  Tally tally{std::vector<char>(count, 0), std::vector<char>(count, 0)};
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr error;
  std::size_t error_index = count;
  auto work = [&] {
    constexpr std::size_t kChunk = 16;
    while (true) {
      std::size_t const start = next.fetch_add(kChunk);
      if (start >= count) return;
      for (std::size_t i = start; i < std::min(count, start + kChunk); ++i) {
        try {
          Outcome const o = c.evaluate(make(i));
          tally.qualifies[i] = o.qualifies;
          tally.violates[i] = violates(o);
        } catch (...) {
          std::lock_guard lock(err_mu);
          if (i < error_index) {
            error_index = i;
            error = std::current_exception();
          }
        }
      }
    }
  };
  std::size_t const n = std::max<std::size_t>(1, std::min(threads, count));
  if (n == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return tally;
}

inline Instance random_instance(Checker const& c, CheckSpec const& spec, std::size_t index) {
  Rng rng(sample_seed(spec.seed, index));
  std::size_t const k = rng.between(c.min_carrier, *spec.size);
  return c.generate(rng, k, spec);
}

inline void attach_witness(CheckReport& rep, Checker const& c, std::size_t index,
                           Instance inst) {
  rep.verdict = Verdict::counterexample;
  rep.witness_index = index;
  rep.witness_note = c.evaluate(inst).note;
  rep.witness = std::move(inst);
}

inline CheckReport base_report(Checker const& c, CheckSpec spec) {
  spec.size = spec.size.value_or(c.default_size);
  spec.mode = spec.mode.value_or(c.mode);
  if (*spec.size < c.min_carrier) {
    throw InputError("size " + std::to_string(*spec.size) + " is below the smallest carrier " +
                     std::to_string(c.min_carrier) + " for '" + c.id + "'");
  }
  CheckReport rep;
  rep.spec = spec;
  rep.statement = c.statement;
  rep.gating = c.gating;
  rep.unit = c.unit;
  return rep;
}

/// Smallest carrier first: structured and exhaustive candidates at each
/// carrier, then an even share of the remaining budget in random draws.
inline CheckReport search(Checker const& c, CheckSpec const& spec_in) {
  CheckReport rep = base_report(c, spec_in);
  CheckSpec const& spec = rep.spec;
  rep.search = "smallest-carrier-first";
  std::size_t const budget = spec.samples;
  std::size_t const top = std::max(c.min_carrier, c.search_limit);
  auto consider = [&](Instance inst) {
    Outcome const o = c.evaluate(inst);
    std::size_t const index = rep.tested++;
    if (o.qualifies) ++rep.qualifying;
    if (violates(o)) {
      attach_witness(rep, c, index, std::move(inst));
      return true;
    }
    return false;
  };
  for (std::size_t k = c.min_carrier; k <= top && rep.tested < budget; ++k) {
    if (c.candidates) {
      for (auto& inst : c.candidates(k, spec)) {
        if (rep.tested >= budget) break;
        if (consider(std::move(inst))) return rep;
      }
    }
    if (c.generate) {
      std::size_t const levels = top - k + 1;
      std::size_t const share = (budget - rep.tested) / levels;
      for (std::size_t j = 0; j < share && rep.tested < budget; ++j) {
        Rng rng(sample_seed(spec.seed, rep.tested));
        if (consider(c.generate(rng, k, spec))) return rep;
      }
    }
  }
  rep.verdict = Verdict::inconclusive;
  return rep;
}

}  // namespace detail

/// Runs a registered check. Verify-mode entries sample (or exhaust) and
/// report pass, counterexample or inconclusive; falsify and explore entries
/// search for a witness smallest carrier first.
inline CheckReport run_check(CheckSpec const& spec_in) {
  Checker const& c = find_checker(spec_in.theorem_id);
  if (spec_in.samples == 0) throw InputError("sample count must be at least 1");
  CheckMode const mode = spec_in.mode.value_or(c.mode);
  if (mode != CheckMode::verify) {
    if (!c.candidates && !c.generate) {
      throw InputError("'" + c.id + "' has no falsifiable form");
    }
    CheckSpec s = spec_in;
    s.mode = mode;
    return detail::search(c, s);
  }
  CheckReport rep = detail::base_report(c, spec_in);
  CheckSpec const& spec = rep.spec;

  bool exhaustive = false;
  switch (spec.exhaustive) {
    case Exhaustive::always:
      if (!c.exhaust) throw InputError("'" + c.id + "' has no exhaustive mode");
      exhaustive = true;
      break;
    case Exhaustive::never:
      exhaustive = !c.generate;
      break;
    case Exhaustive::automatic:
      exhaustive = c.exhaust && (!c.generate || c.space(spec) < kExhaustiveThreshold);
      break;
  }
  if (!exhaustive && !c.generate) throw InputError("'" + c.id + "' cannot be sampled");

  detail::Tally tally;
  std::vector<Instance> pool;
  if (exhaustive) {
    rep.search = "exhaustive";
    pool = c.exhaust(spec);
    tally = detail::evaluate_all(c, pool.size(), spec.threads,
                                 [&](std::size_t i) -> Instance const& { return pool[i]; });
  } else {
    rep.search = "random";
    tally = detail::evaluate_all(c, spec.samples, spec.threads, [&](std::size_t i) {
      return detail::random_instance(c, spec, i);
    });
  }
  rep.tested = tally.qualifies.size();
  rep.qualifying = static_cast<std::size_t>(
      std::count(tally.qualifies.begin(), tally.qualifies.end(), char{1}));
  auto first = std::find(tally.violates.begin(), tally.violates.end(), char{1});
  if (first != tally.violates.end()) {
    auto const i = static_cast<std::size_t>(first - tally.violates.begin());
    detail::attach_witness(rep, c, i,
                           exhaustive ? pool[i] : detail::random_instance(c, spec, i));
  } else {
    rep.verdict = rep.qualifying > 0 ? Verdict::pass : Verdict::inconclusive;
  }
  return rep;
}

/// Witness search for `id` within `budget` evaluations.
inline CheckReport find_counterexample(std::string const& id, std::size_t budget,
                                       std::uint64_t seed = 1) {
  Checker const& c = find_checker(id);
  if (!c.candidates && !c.generate) throw InputError("'" + id + "' has no falsifiable form");
  CheckSpec spec;
  spec.theorem_id = id;
  spec.samples = std::max<std::size_t>(budget, 1);
  spec.seed = seed;
  spec.mode = c.mode == CheckMode::verify ? CheckMode::falsify : c.mode;
  return detail::search(c, spec);
}

/// Outcome of re-evaluating a witness.
inline Outcome evaluate_witness(std::string const& id, Instance const& inst) {
  return find_checker(id).evaluate(inst);
}

/// Recomputes the verdict: a witness is re-evaluated on its own, a report
/// without one is re-run from its spec.
inline Verdict replay(CheckReport const& rep) {
  if (rep.witness) {
    Outcome const o = evaluate_witness(rep.spec.theorem_id, *rep.witness);
    return detail::violates(o) ? Verdict::counterexample : Verdict::pass;
  }
  return run_check(rep.spec).verdict;
}

inline std::string summary_line(CheckReport const& rep) {
  std::string const counts = std::to_string(rep.qualifying) + "/" +
                             std::to_string(rep.tested) + " " + rep.unit;
  switch (rep.verdict) {
    case Verdict::pass: return "pass (" + counts + ")";
    case Verdict::counterexample:
      return "counterexample (at " + std::to_string(*rep.witness_index) + ", " + counts + ")";
    default: return "inconclusive (" + counts + ")";
  }
}

inline std::string format_report(CheckReport const& rep) {
  auto const& s = rep.spec;
  std::string out = summary_line(rep) + "\n";
  out += "theorem: " + s.theorem_id + "\n";
  out += "statement: " + rep.statement + "\n";
  out += std::string("mode: ") + to_string(*s.mode) + (rep.gating ? "" : " (informational)") +
         "\n";
  out += "search: " + rep.search + "\n";
  out += "seed: " + std::to_string(s.seed) + "\n";
  out += "size: " + std::to_string(*s.size) + "\n";
  if (s.codomain) out += "codomain: " + std::to_string(*s.codomain) + "\n";
  out += "max-index: " + std::to_string(s.max_index) + "\n";
  out += "samples: " + std::to_string(s.samples) + "\n";
  out += "tested: " + std::to_string(rep.tested) + "\n";
  out += "qualifying: " + std::to_string(rep.qualifying) + "\n";
  if (rep.witness) {
    out += "witness-index: " + std::to_string(*rep.witness_index) + "\n";
    out += "violation: " + rep.witness_note + "\n";
    out += format_instance(*rep.witness);
  }
  return out;
}

}  // namespace relcat::harness

#endif  // RELCAT_HARNESS_HPP
