#ifndef RELCAT_TEXT_IO_HPP
#define RELCAT_TEXT_IO_HPP

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "algebra.hpp"
#include "finite_map.hpp"
#include "relation.hpp"

// Text formats. Blank lines and lines starting with '#' are ignored.
//
//   rel <n>            followed by one "<i> <j>" line per pair
//   map <n> <m>        followed by one line of n codomain indices
//   alg <n>            followed, per operation, by "op <name> <arity>" and
//                      n^arity result indices in row-major tuple order

namespace relcat::io {

namespace detail {

inline std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

inline std::vector<std::string> tokens(std::string const& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

inline std::size_t parse_index(std::string const& tok, std::string_view what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos ||
      tok.size() > 18) {
    throw ParseError("expected a nonnegative integer for " + std::string(what) +
                     ", got '" + tok + "'");
  }
  return static_cast<std::size_t>(std::stoull(tok));
}

inline void expect_header(std::vector<std::string> const& head,
                          std::string_view keyword, std::size_t args) {
  if (head.empty() || head[0] != keyword || head.size() != args + 1) {
    throw ParseError("expected header '" + std::string(keyword) + "' with " +
                     std::to_string(args) + " argument(s)");
  }
}

}  // namespace detail

/// Canonical block: header plus pairs in lexicographic order.
inline std::string format_relation(Relation const& r) {
  std::string out = "rel " + std::to_string(r.size()) + "\n";
  for (auto [i, j] : r.pairs()) {
    out += std::to_string(i) + " " + std::to_string(j) + "\n";
  }
  return out;
}

inline Relation parse_relation(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty relation file");
  auto head = detail::tokens(lines[0]);
  detail::expect_header(head, "rel", 1);
  std::size_t const n = detail::parse_index(head[1], "carrier size");
  if (n > max_carrier()) {
    throw CapacityError("carrier size " + std::to_string(n) + " exceeds bound " +
                        std::to_string(max_carrier()));
  }
  Relation r(n);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    auto t = detail::tokens(lines[k]);
    if (t.size() != 2) throw ParseError("expected '<i> <j>', got '" + lines[k] + "'");
    std::size_t i = detail::parse_index(t[0], "pair index");
    std::size_t j = detail::parse_index(t[1], "pair index");
    if (i >= n || j >= n) {
      throw ParseError("pair (" + t[0] + "," + t[1] + ") out of range");
    }
    r.insert(i, j);
  }
  return r;
}

inline std::string format_map(FiniteMap const& f) {
  std::string out = "map " + std::to_string(f.domain()) + " " +
                    std::to_string(f.codomain()) + "\n";
  for (std::size_t x = 0; x < f.domain(); ++x) {
    if (x) out += " ";
    out += std::to_string(f(x));
  }
  return out + "\n";
}

inline FiniteMap parse_map(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty map file");
  auto head = detail::tokens(lines[0]);
  detail::expect_header(head, "map", 2);
  std::size_t const n = detail::parse_index(head[1], "domain size");
  std::size_t const m = detail::parse_index(head[2], "codomain size");
  if (n > max_carrier() || m > max_carrier()) {
    throw CapacityError("map carrier exceeds bound " + std::to_string(max_carrier()));
  }
  std::vector<std::size_t> values;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    for (auto const& t : detail::tokens(lines[k])) {
      values.push_back(detail::parse_index(t, "map value"));
    }
  }
  if (values.size() != n) {
    throw ParseError("map declares " + std::to_string(n) + " values, found " +
                     std::to_string(values.size()));
  }
  for (auto v : values) {
    if (v >= m) throw ParseError("map value " + std::to_string(v) + " out of range");
  }
  return FiniteMap(m, std::move(values));
}

inline std::string format_algebra(FiniteAlgebra const& a) {
  std::string out = "alg " + std::to_string(a.size()) + "\n";
  for (auto const& op : a.operations()) {
    out += "op " + op.name + " " + std::to_string(op.arity) + "\n";
    // one row per last-argument sweep keeps tables readable
    std::size_t const width = op.arity == 0 ? 1 : a.size();
    for (std::size_t k = 0; k < op.table.size(); ++k) {
      out += std::to_string(op.table[k]);
      out += (width == 0 || (k + 1) % width == 0) ? "\n" : " ";
    }
  }
  return out;
}

inline FiniteAlgebra parse_algebra(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty algebra file");
  auto head = detail::tokens(lines[0]);
  detail::expect_header(head, "alg", 1);
  std::size_t const n = detail::parse_index(head[1], "carrier size");
  if (n > max_carrier()) {
    throw CapacityError("algebra carrier exceeds bound " + std::to_string(max_carrier()));
  }
  std::vector<Operation> ops;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    auto t = detail::tokens(lines[k]);
    if (!t.empty() && t[0] == "op") {
      if (t.size() != 3) throw ParseError("expected 'op <name> <arity>'");
      std::size_t arity = detail::parse_index(t[2], "arity");
      if (arity > 8) throw CapacityError("operation arity above 8");
      ops.push_back({t[1], arity, {}});
      continue;
    }
    if (ops.empty()) throw ParseError("table entries before any 'op' line");
    for (auto const& tok : t) {
      ops.back().table.push_back(detail::parse_index(tok, "table entry"));
    }
  }
  try {
    return FiniteAlgebra(n, std::move(ops));
  } catch (CapacityError const&) {
    throw;
  } catch (InputError const& e) {
    throw ParseError(e.what());
  }
}

inline std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Partition notation for an equivalence: classes in order of least
/// element, e.g. "{0,2}{1,3}".
inline std::string format_partition(Relation const& e) {
  std::string out;
  std::vector<bool> done(e.size(), false);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (done[i]) continue;
    out += "{";
    bool first = true;
    e.for_each_in_row(i, [&](std::size_t j) {
      done[j] = true;
      if (!first) out += ",";
      out += std::to_string(j);
      first = false;
    });
    out += "}";
  }
  return out;
}

}  // namespace relcat::io

#endif  // RELCAT_TEXT_IO_HPP
