#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace prefrev {

/// Dense index of an item in a universe.
using Item = std::size_t;

/// Hard upper bound on universe size: one 64-bit word per adjacency row.
inline constexpr std::size_t kMaxItems = 64;

/// Raised for any input that violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive enumeration would exceed its configured size.
class GuardExceeded : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Enumeration and size limits. Callers may tighten these, never raise
/// max_items above kMaxItems.
struct Limits {
  std::size_t max_items = kMaxItems;
  std::size_t max_enumerated_comparisons = 20;
};

/// An ordered pair: `better` is strictly preferred to `worse`.
struct Comparison {
  Item better = 0;
  Item worse = 0;

  Comparison reversed() const { return {worse, better}; }
  friend auto operator<=>(const Comparison&, const Comparison&) = default;
};

/// Finite binary relation over {0, ..., universe-1}, stored as a bit matrix.
///
/// Value type: equality is set equality of pairs (plus equal universes).
/// Ordering is an arbitrary but stable total order used for sorting sets of
/// relations.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t universe);
  Relation(std::size_t universe, std::initializer_list<Comparison> pairs);
  Relation(std::size_t universe, std::span<const Comparison> pairs);

  std::size_t universe() const { return universe_; }

  bool contains(Item better, Item worse) const {
    return better < universe_ && worse < universe_ && ((rows_[better] >> worse) & 1U) != 0;
  }
  bool contains(Comparison c) const { return contains(c.better, c.worse); }

  void insert(Item better, Item worse);
  void insert(Comparison c) { insert(c.better, c.worse); }
  void erase(Item better, Item worse);
  void erase(Comparison c) { erase(c.better, c.worse); }

  /// Successor bitmask of `item`.
  std::uint64_t row(Item item) const { return rows_.at(item); }

  /// Replaces the successor bitmask of `item`; bits at or beyond the universe
  /// size are rejected.
  void set_row(Item item, std::uint64_t successors);

  std::size_t size() const;
  bool empty() const;

  /// True iff some (i,i) is present.
  bool has_self_pair() const;

  bool subset_of(const Relation& other) const;

  /// Pairs sorted by (better, worse).
  std::vector<Comparison> pairs() const;

  Relation& operator|=(const Relation& other);
  Relation& operator-=(const Relation& other);
  friend Relation operator|(Relation lhs, const Relation& rhs) { return lhs |= rhs; }
  friend Relation operator-(Relation lhs, const Relation& rhs) { return lhs -= rhs; }

  /// Intersection.
  friend Relation operator&(const Relation& lhs, const Relation& rhs);

  /// Removes every (i,i).
  Relation without_self_pairs() const;

  /// Set of all reversed pairs.
  Relation converse() const;

  friend bool operator==(const Relation&, const Relation&) = default;
  friend auto operator<=>(const Relation&, const Relation&) = default;

  std::size_t hash() const;

 private:
  void check_item(Item item) const;
  void require_same_universe(const Relation& other) const;

  std::size_t universe_ = 0;
  std::array<std::uint64_t, kMaxItems> rows_{};
};

struct RelationHash {
  std::size_t operator()(const Relation& r) const { return r.hash(); }
};

/// Throws InvalidInput unless 1 <= universe <= limits.max_items.
void validate_universe(std::size_t universe, const Limits& limits = {});

}  // namespace prefrev
