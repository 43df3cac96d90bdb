#ifndef RELCAT_CORPUS_HPP
#define RELCAT_CORPUS_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace relcat {

/// Small algebras used throughout the checks.
struct NamedAlgebra {
  std::string name;
  FiniteAlgebra algebra;
  /// The algebra lies in a variety known to be congruence modular (groups).
  bool modular_variety = false;
};

inline FiniteAlgebra cyclic_group(std::size_t n) {
  Operation add{"add", 2, std::vector<std::size_t>(n * n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) add.table[i * n + j] = (i + j) % n;
  }
  return make_algebra(n, {add});
}

inline FiniteAlgebra klein_four() {
  Operation add{"add", 2, std::vector<std::size_t>(16)};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) add.table[i * 4 + j] = i ^ j;
  }
  return make_algebra(4, {add});
}

/// S3 as the multiplication table of its six permutations, listed in
/// lexicographic order of their images (identity first).
inline FiniteAlgebra symmetric_group_s3() {
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  Operation mul{"mul", 2, std::vector<std::size_t>(36)};
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<std::size_t, 3> c{};
      for (std::size_t k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
      mul.table[i * 6 + j] =
          static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return make_algebra(6, {mul});
}

/// The chain 0 < 1 < ... < n-1 under meet.
inline FiniteAlgebra chain_semilattice(std::size_t n) {
  Operation meet{"meet", 2, std::vector<std::size_t>(n * n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) meet.table[i * n + j] = std::min(i, j);
  }
  return make_algebra(n, {meet});
}

inline FiniteAlgebra bare_set(std::size_t n) { return make_algebra(n, {}); }

inline std::vector<NamedAlgebra> const& bundled_corpus() {
  static std::vector<NamedAlgebra> const corpus = {
      {"Z2", cyclic_group(2), true},
      {"Z4", cyclic_group(4), true},
      {"Z2xZ2", klein_four(), true},
      {"Z6", cyclic_group(6), true},
      {"S3", symmetric_group_s3(), true},
      {"semilattice2", chain_semilattice(2), false},
      {"semilattice3", chain_semilattice(3), false},
      {"set3", bare_set(3), false},
      {"set4", bare_set(4), false},
      {"set5", bare_set(5), false},
  };
  return corpus;
}

inline NamedAlgebra const& corpus_algebra(std::string const& name) {
  for (auto const& a : bundled_corpus()) {
    if (a.name == name) return a;
  }
  throw InputError("unknown corpus algebra '" + name + "'");
}

}  // namespace relcat

#endif  // RELCAT_CORPUS_HPP
