#ifndef RELCAT_INSTANCE_HPP
#define RELCAT_INSTANCE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algebra.hpp"
#include "finite_map.hpp"
#include "relation.hpp"
#include "text_io.hpp"

namespace relcat::harness {

/// One evaluated case of a check. Which fields are used, and what the
/// integer parameters mean, is up to the checker.
struct Instance {
  std::vector<std::size_t> params;
  std::optional<FiniteMap> map;
  std::vector<Relation> relations;
  std::optional<FiniteAlgebra> algebra;

  friend bool operator==(Instance const&, Instance const&) = default;
};

// Text form:
//
//   instance
//   params 2 1
//   map 3 2          (optional)
//   0 1 1
//   rel 3            (zero or more, in order)
//   0 0
//   alg 3            (optional)
//   ...
//   end
inline std::string format_instance(Instance const& inst) {
  std::string out = "instance\nparams";
  for (auto p : inst.params) out += " " + std::to_string(p);
  out += "\n";
  if (inst.map) out += io::format_map(*inst.map);
  for (auto const& r : inst.relations) out += io::format_relation(r);
  if (inst.algebra) out += io::format_algebra(*inst.algebra);
  return out + "end\n";
}

inline Instance parse_instance(std::string_view text) {
  auto lines = io::detail::content_lines(text);
  if (lines.size() < 2 || lines.front() != "instance" || lines.back() != "end") {
    throw ParseError("instance block must start with 'instance' and end with 'end'");
  }
  auto keyword = [](std::string const& line) {
    auto t = io::detail::tokens(line);
    if (t.empty()) return std::string();
    auto const& k = t[0];
    return (k == "params" || k == "map" || k == "rel" || k == "alg" || k == "end")
               ? k
               : std::string();
  };
  Instance inst;
  bool seen_params = false;
  std::size_t i = 1;
  while (i + 1 < lines.size()) {
    std::string const kw = keyword(lines[i]);
    if (kw.empty()) throw ParseError("unexpected line '" + lines[i] + "' in instance");
    std::string block = lines[i] + "\n";
    std::size_t j = i + 1;
    while (j + 1 < lines.size() && keyword(lines[j]).empty()) block += lines[j++] + "\n";
    if (kw == "params") {
      if (seen_params) throw ParseError("duplicate params line");
      seen_params = true;
      if (j != i + 1) throw ParseError("params must fit on one line");
      auto t = io::detail::tokens(lines[i]);
      for (std::size_t k = 1; k < t.size(); ++k) {
        inst.params.push_back(io::detail::parse_index(t[k], "parameter"));
      }
    } else if (kw == "map") {
      if (inst.map) throw ParseError("duplicate map block");
      inst.map = io::parse_map(block);
    } else if (kw == "rel") {
      inst.relations.push_back(io::parse_relation(block));
    } else if (kw == "alg") {
      if (inst.algebra) throw ParseError("duplicate alg block");
      inst.algebra = io::parse_algebra(block);
    } else {
      throw ParseError("'end' before the last line");
    }
    i = j;
  }
  return inst;
}

}  // namespace relcat::harness

#endif  // RELCAT_INSTANCE_HPP
