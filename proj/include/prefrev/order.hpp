#pragma once

#include <cstddef>
#include <vector>

#include "prefrev/relation.hpp"

namespace prefrev {

/// Smallest transitive superset of `r`. Items on a cycle end up with
/// self-pairs (i,i).
Relation transitive_closure(const Relation& r);

/// Transitive and irreflexive.
bool is_spo(const Relation& r);

/// Throws InvalidInput naming `what` unless `r` is a strict partial order.
void require_spo(const Relation& r, const char* what);

/// A strict linear order on a subset of the universe, kept as its item
/// sequence (best first) together with the induced relation.
class Chain {
 public:
  /// Rejects duplicates and out-of-range items.
  static Chain from_sequence(std::size_t universe, std::vector<Item> sequence);

  std::size_t universe() const { return relation_.universe(); }
  const std::vector<Item>& sequence() const { return sequence_; }
  const Relation& relation() const { return relation_; }

  /// Number of direct comparisons, i.e. sequence length minus one (or 0).
  std::size_t comparison_count() const { return sequence_.empty() ? 0 : sequence_.size() - 1; }

  /// The k-th direct comparison (sequence[k], sequence[k+1]); k is 0-based.
  Comparison comparison(std::size_t k) const;

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  Chain(std::vector<Item> sequence, Relation relation)
      : sequence_(std::move(sequence)), relation_(relation) {}

  std::vector<Item> sequence_;
  Relation relation_;
};

/// c_0, ..., c_{m-1} in chain order. The position is the comparison's
/// identity for assignments and choice-inducing preferences.
std::vector<Comparison> direct_comparisons(const Chain& chain);

/// The direct comparisons as a relation.
Relation direct_relation(const Chain& chain);

/// (r1 ∪ r2)^+.
Relation union_plus(const Relation& r1, const Relation& r2);

/// Direct comparisons of `chain` whose reverse is absent from (π∪σ)^+.
/// The closure of σ with this set reproduces (π∪σ)^+ whenever the latter
/// is a strict partial order.
Relation cycle_free_part(const Chain& chain, const Relation& sigma);

/// Direct comparisons of `chain` whose reverse lies in (π∪σ)^+.
Relation cyclic_part(const Chain& chain, const Relation& sigma);

/// Indices k of the direct comparisons in cyclic_part, ascending.
std::vector<std::size_t> cyclic_indices(const Chain& chain, const Relation& sigma);

/// Every strict partial order (σ ∪ δ)^+ with δ ⊆ dir_π, deduplicated and
/// sorted.
std::vector<Relation> completions(const Chain& chain, const Relation& sigma,
                                  const Limits& limits = {});

/// As completions() but with δ non-empty. May be empty.
std::vector<Relation> decisive_completions(const Chain& chain, const Relation& sigma,
                                           const Limits& limits = {});

}  // namespace prefrev
