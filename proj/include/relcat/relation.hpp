#ifndef RELCAT_RELATION_HPP
#define RELCAT_RELATION_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace relcat {

/// Raised when an argument violates an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a text file cannot be parsed.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// Raised when a carrier or enumeration exceeds a configured bound.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kDefaultMaxCarrier = 4096;
inline constexpr std::size_t kDefaultEnumerationBound = 5;

namespace detail {
inline std::size_t& carrier_limit_storage() {
  static std::size_t limit = [] {
    if (char const* env = std::getenv("RELCAT_MAX_CARRIER")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) {
        return static_cast<std::size_t>(v);
      }
    }
    return kDefaultMaxCarrier;
  }();
  return limit;
}
}  // namespace detail

/// Largest carrier a Relation may be built on. Read once from
/// RELCAT_MAX_CARRIER, defaulting to 4096.
inline std::size_t max_carrier() { return detail::carrier_limit_storage(); }

inline void set_max_carrier(std::size_t limit) {
  detail::carrier_limit_storage() = limit;
}

using Pair = std::pair<std::size_t, std::size_t>;

/// Binary endorelation on the carrier {0, ..., n-1}, stored as a dense bit
/// matrix with one machine-word-packed row per element.
class Relation {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  Relation() = default;

  explicit Relation(std::size_t n)
      : n_(n), stride_((n + word_bits - 1) / word_bits) {
    if (n > max_carrier()) {
      throw CapacityError("carrier size " + std::to_string(n) +
                          " exceeds bound " + std::to_string(max_carrier()));
    }
    bits_.assign(n_ * stride_, 0);
  }

  static Relation delta(std::size_t n) {
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i) {
      r.insert(i, i);
    }
    return r;
  }

  static Relation nabla(std::size_t n) {
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t w = 0; w < r.stride_; ++w) {
        r.bits_[i * r.stride_ + w] = r.full_word(w);
      }
    }
    return r;
  }

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] std::size_t stride() const noexcept { return stride_; }

  [[nodiscard]] bool contains(std::size_t i, std::size_t j) const {
    return (bits_[i * stride_ + j / word_bits] >> (j % word_bits)) & 1U;
  }

  void insert(std::size_t i, std::size_t j) {
    bits_[i * stride_ + j / word_bits] |= word_type{1} << (j % word_bits);
  }

  void erase(std::size_t i, std::size_t j) {
    bits_[i * stride_ + j / word_bits] &= ~(word_type{1} << (j % word_bits));
  }

  [[nodiscard]] std::span<word_type const> row(std::size_t i) const {
    return {bits_.data() + i * stride_, stride_};
  }

  [[nodiscard]] std::span<word_type> row(std::size_t i) {
    return {bits_.data() + i * stride_, stride_};
  }

  /// Number of related pairs.
  [[nodiscard]] std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : bits_) {
      c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
  }

  [[nodiscard]] bool empty() const noexcept { return count() == 0; }

  /// Related pairs in lexicographic order.
  [[nodiscard]] std::vector<Pair> pairs() const {
    std::vector<Pair> out;
    for (std::size_t i = 0; i < n_; ++i) {
      for_each_in_row(i, [&](std::size_t j) { out.emplace_back(i, j); });
    }
    return out;
  }

  /// Calls fn(j) for every j with (i, j) related, in increasing order.
  template <typename Fn>
  void for_each_in_row(std::size_t i, Fn&& fn) const {
    auto const* r = bits_.data() + i * stride_;
    for (std::size_t w = 0; w < stride_; ++w) {
      word_type bits = r[w];
      while (bits != 0) {
        auto b = static_cast<std::size_t>(std::countr_zero(bits));
        fn(w * word_bits + b);
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(Relation const&, Relation const&) = default;

 private:
  [[nodiscard]] word_type full_word(std::size_t w) const noexcept {
    std::size_t rem = n_ - w * word_bits;
    return rem >= word_bits ? ~word_type{0} : ((word_type{1} << rem) - 1);
  }

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<word_type> bits_;
};

namespace detail {
inline void require_same_carrier(Relation const& a, Relation const& b,
                                 char const* op) {
  if (a.size() != b.size()) {
    throw InputError(std::string(op) + ": carrier mismatch (" +
                     std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()) + ")");
  }
}
}  // namespace detail

/// Relation on n elements containing exactly the given pairs.
inline Relation make_relation(std::size_t n, std::span<Pair const> pairs) {
  Relation r(n);
  for (auto [i, j] : pairs) {
    if (i >= n || j >= n) {
      throw InputError("pair (" + std::to_string(i) + "," + std::to_string(j) +
                       ") out of range for carrier " + std::to_string(n));
    }
    r.insert(i, j);
  }
  return r;
}

inline Relation make_relation(std::size_t n, std::initializer_list<Pair> pairs) {
  return make_relation(n, std::span<Pair const>(pairs.begin(), pairs.size()));
}

enum class ConstKind { delta, nabla };

inline Relation const_relation(ConstKind kind, std::size_t n) {
  return kind == ConstKind::delta ? Relation::delta(n) : Relation::nabla(n);
}

/// S o R: (x, z) is related iff x R y and y S z for some y.
inline Relation compose(Relation const& s, Relation const& r) {
  detail::require_same_carrier(s, r, "compose");
  Relation out(r.size());
  std::size_t const stride = r.stride();
  for (std::size_t x = 0; x < r.size(); ++x) {
    auto dst = out.row(x);
    r.for_each_in_row(x, [&](std::size_t y) {
      auto src = s.row(y);
      for (std::size_t w = 0; w < stride; ++w) {
        dst[w] |= src[w];
      }
    });
  }
  return out;
}

inline Relation dual(Relation const& r) {
  Relation out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    r.for_each_in_row(i, [&](std::size_t j) { out.insert(j, i); });
  }
  return out;
}

inline Relation unite(Relation const& a, Relation const& b) {
  detail::require_same_carrier(a, b, "union");
  Relation out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto dst = out.row(i);
    auto src = b.row(i);
    for (std::size_t w = 0; w < a.stride(); ++w) {
      dst[w] |= src[w];
    }
  }
  return out;
}

inline Relation intersect(Relation const& a, Relation const& b) {
  detail::require_same_carrier(a, b, "intersect");
  Relation out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto dst = out.row(i);
    auto src = b.row(i);
    for (std::size_t w = 0; w < a.stride(); ++w) {
      dst[w] &= src[w];
    }
  }
  return out;
}

/// Inclusion a ⊆ b.
inline bool leq(Relation const& a, Relation const& b) {
  detail::require_same_carrier(a, b, "leq");
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto ra = a.row(i);
    auto rb = b.row(i);
    for (std::size_t w = 0; w < a.stride(); ++w) {
      if ((ra[w] & ~rb[w]) != 0) {
        return false;
      }
    }
  }
  return true;
}

inline bool equal(Relation const& a, Relation const& b) {
  detail::require_same_carrier(a, b, "equal");
  return a == b;
}

/// k-fold composite of r with itself; power(r, 0) is the identity.
inline Relation power(Relation const& r, std::size_t k) {
  Relation out = Relation::delta(r.size());
  for (std::size_t i = 0; i < k; ++i) {
    out = compose(out, r);
  }
  return out;
}

struct RelationFlags {
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  bool preorder = false;
  bool equivalence = false;

  friend bool operator==(RelationFlags const&, RelationFlags const&) = default;
};

inline bool is_reflexive(Relation const& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!r.contains(i, i)) {
      return false;
    }
  }
  return true;
}

inline bool is_symmetric(Relation const& r) { return leq(dual(r), r); }

inline bool is_transitive(Relation const& r) { return leq(compose(r, r), r); }

inline RelationFlags classify(Relation const& r) {
  RelationFlags f;
  f.reflexive = is_reflexive(r);
  f.symmetric = is_symmetric(r);
  f.transitive = is_transitive(r);
  f.preorder = f.reflexive && f.transitive;
  f.equivalence = f.preorder && f.symmetric;
  return f;
}

inline bool is_preorder(Relation const& r) {
  return is_reflexive(r) && is_transitive(r);
}

inline bool is_equivalence(Relation const& r) {
  return is_preorder(r) && is_symmetric(r);
}

/// Lexicographic order on the row-major bit string, '0' < '1'.
inline bool row_major_less(Relation const& a, Relation const& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      bool x = a.contains(i, j);
      bool y = b.contains(i, j);
      if (x != y) {
        return y;
      }
    }
  }
  return false;
}

enum class RelationKind { reflexive, preorder, equivalence };

namespace detail {

inline void enumerate_reflexive(std::size_t n,
                                std::function<void(Relation const&)> const& fn) {
  std::vector<Pair> slots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) {
        slots.emplace_back(i, j);
      }
    }
  }
  if (slots.size() >= 63) {
    throw CapacityError("too many reflexive relations on " + std::to_string(n) +
                        " elements to enumerate");
  }
  std::uint64_t const total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Relation r = Relation::delta(n);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      // The first slot in row-major order is the most significant bit.
      if ((mask >> (slots.size() - 1 - k)) & 1U) {
        r.insert(slots[k].first, slots[k].second);
      }
    }
    fn(r);
  }
}

// Every preorder on n+1 points restricts to a preorder on the first n, and a
// new point p extends P iff its down-set D is P-downward closed, its up-set U
// is P-upward closed and d <= u in P for all d in D, u in U.
inline std::vector<Relation> preorders_unsorted(std::size_t n) {
  std::vector<Relation> level{Relation(0)};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Relation> next;
    for (auto const& p : level) {
      std::uint64_t const subsets = std::uint64_t{1} << k;
      std::vector<std::uint64_t> downs, ups;
      for (std::uint64_t s = 0; s < subsets; ++s) {
        bool down = true, up = true;
        for (std::size_t x = 0; x < k && (down || up); ++x) {
          if (!((s >> x) & 1U)) {
            continue;
          }
          for (std::size_t y = 0; y < k; ++y) {
            if (p.contains(y, x) && !((s >> y) & 1U)) {
              down = false;
            }
            if (p.contains(x, y) && !((s >> y) & 1U)) {
              up = false;
            }
          }
        }
        if (down) downs.push_back(s);
        if (up) ups.push_back(s);
      }
      for (auto d : downs) {
        for (auto u : ups) {
          bool ok = true;
          for (std::size_t x = 0; x < k && ok; ++x) {
            if (!((d >> x) & 1U)) continue;
            for (std::size_t y = 0; y < k; ++y) {
              if (((u >> y) & 1U) && !p.contains(x, y)) {
                ok = false;
                break;
              }
            }
          }
          if (!ok) continue;
          Relation q(k + 1);
          for (std::size_t x = 0; x < k; ++x) {
            p.for_each_in_row(x, [&](std::size_t y) { q.insert(x, y); });
            if ((d >> x) & 1U) q.insert(x, k);
            if ((u >> x) & 1U) q.insert(k, x);
          }
          q.insert(k, k);
          next.push_back(std::move(q));
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

// Restricted growth strings enumerate set partitions.
inline std::vector<Relation> equivalences_unsorted(std::size_t n) {
  std::vector<Relation> out;
  std::vector<std::size_t> block(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                          std::size_t used) {
    if (i == n) {
      Relation r(n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (block[x] == block[y]) r.insert(x, y);
        }
      }
      out.push_back(std::move(r));
      return;
    }
    for (std::size_t b = 0; b <= used && b < n; ++b) {
      block[i] = b;
      rec(i + 1, b == used ? used + 1 : used);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace detail

/// All relations of the given kind on n elements, duplicate-free, ordered
/// lexicographically on the row-major bit string.
inline std::vector<Relation> enumerate(RelationKind kind, std::size_t n,
                                       std::size_t bound = kDefaultEnumerationBound) {
  if (n > bound) {
    throw CapacityError("enumeration size " + std::to_string(n) +
                        " exceeds bound " + std::to_string(bound));
  }
  std::vector<Relation> out;
  switch (kind) {
    case RelationKind::reflexive:
      detail::enumerate_reflexive(n, [&](Relation const& r) { out.push_back(r); });
      return out;  // already in order
    case RelationKind::preorder:
      out = detail::preorders_unsorted(n);
      break;
    case RelationKind::equivalence:
      out = detail::equivalences_unsorted(n);
      break;
  }
  std::sort(out.begin(), out.end(), row_major_less);
  return out;
}

}  // namespace relcat

#endif  // RELCAT_RELATION_HPP
