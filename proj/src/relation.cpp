#include "prefrev/relation.hpp"

#include <algorithm>
#include <bit>

namespace prefrev {

void validate_universe(std::size_t universe, const Limits& limits) {
  const std::size_t cap = std::min(limits.max_items, kMaxItems);
  if (universe == 0 || universe > cap) {
    throw InvalidInput("universe size " + std::to_string(universe) + " outside [1, " +
                       std::to_string(cap) + "]");
  }
}

Relation::Relation(std::size_t universe) : universe_(universe) { validate_universe(universe); }

Relation::Relation(std::size_t universe, std::initializer_list<Comparison> pairs)
    : Relation(universe, std::span<const Comparison>(pairs.begin(), pairs.size())) {}

Relation::Relation(std::size_t universe, std::span<const Comparison> pairs) : Relation(universe) {
  for (const auto& c : pairs) {
    insert(c);
  }
}

void Relation::check_item(Item item) const {
  if (item >= universe_) {
    throw InvalidInput("item " + std::to_string(item) + " outside universe of size " +
                       std::to_string(universe_));
  }
}

void Relation::require_same_universe(const Relation& other) const {
  if (universe_ != other.universe_) {
    throw InvalidInput("universe mismatch: " + std::to_string(universe_) + " vs " +
                       std::to_string(other.universe_));
  }
}

void Relation::insert(Item better, Item worse) {
  check_item(better);
  check_item(worse);
  rows_[better] |= std::uint64_t{1} << worse;
}

void Relation::erase(Item better, Item worse) {
  check_item(better);
  check_item(worse);
  rows_[better] &= ~(std::uint64_t{1} << worse);
}

void Relation::set_row(Item item, std::uint64_t successors) {
  check_item(item);
  if (universe_ < 64 && (successors >> universe_) != 0) {
    throw InvalidInput("successor mask reaches outside universe");
  }
  rows_[item] = successors;
}

std::size_t Relation::size() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < universe_; ++i) {
    n += static_cast<std::size_t>(std::popcount(rows_[i]));
  }
  return n;
}

bool Relation::empty() const {
  for (std::size_t i = 0; i < universe_; ++i) {
    if (rows_[i] != 0) {
      return false;
    }
  }
  return true;
}

bool Relation::has_self_pair() const {
  for (std::size_t i = 0; i < universe_; ++i) {
    if ((rows_[i] >> i) & 1U) {
      return true;
    }
  }
  return false;
}

bool Relation::subset_of(const Relation& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < universe_; ++i) {
    if ((rows_[i] & ~other.rows_[i]) != 0) {
      return false;
    }
  }
  return true;
}

std::vector<Comparison> Relation::pairs() const {
  std::vector<Comparison> out;
  for (std::size_t i = 0; i < universe_; ++i) {
    for (std::uint64_t bits = rows_[i]; bits != 0; bits &= bits - 1) {
      out.push_back({i, static_cast<Item>(std::countr_zero(bits))});
    }
  }
  return out;
}

Relation& Relation::operator|=(const Relation& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < universe_; ++i) {
    rows_[i] |= other.rows_[i];
  }
  return *this;
}

Relation& Relation::operator-=(const Relation& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < universe_; ++i) {
    rows_[i] &= ~other.rows_[i];
  }
  return *this;
}

Relation operator&(const Relation& lhs, const Relation& rhs) {
  lhs.require_same_universe(rhs);
  Relation out = lhs;
  for (std::size_t i = 0; i < lhs.universe_; ++i) {
    out.rows_[i] &= rhs.rows_[i];
  }
  return out;
}

Relation Relation::without_self_pairs() const {
  Relation out = *this;
  for (std::size_t i = 0; i < universe_; ++i) {
    out.rows_[i] &= ~(std::uint64_t{1} << i);
  }
  return out;
}

Relation Relation::converse() const {
  Relation out(universe_);
  for (const auto& c : pairs()) {
    out.insert(c.reversed());
  }
  return out;
}

std::size_t Relation::hash() const {
  // FNV-1a over the used rows.
  std::uint64_t h = 1469598103934665603ULL ^ universe_;
  for (std::size_t i = 0; i < universe_; ++i) {
    h ^= rows_[i];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace prefrev
