#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "prefrev/order.hpp"
#include "prefrev/relation.hpp"

namespace prefrev {

/// A total preorder on a chain's direct comparisons, stored as an ordered
/// partition of the indices {0, ..., m-1}. Level 0 holds the best
/// comparisons; indices sharing a level are tied.
class PreferenceAssignment {
 public:
  /// Throws InvalidInput unless `levels` partitions {0, ..., comparison_count-1}
  /// into non-empty blocks.
  PreferenceAssignment(std::size_t comparison_count, std::vector<std::vector<std::size_t>> levels);

  static PreferenceAssignment trivial(std::size_t comparison_count);
  static PreferenceAssignment lexicographic(std::size_t comparison_count);

  std::size_t comparison_count() const { return count_; }
  const std::vector<std::vector<std::size_t>>& levels() const { return levels_; }

  /// Level holding comparison k.
  std::size_t level_of(std::size_t k) const;

  /// Every level is a singleton.
  bool decisive() const;

  friend bool operator==(const PreferenceAssignment&, const PreferenceAssignment&) = default;

 private:
  std::size_t count_ = 0;
  std::vector<std::vector<std::size_t>> levels_;
};

/// Single level holding every direct comparison.
PreferenceAssignment trivial_assignment(const Chain& chain);

/// c_0 < c_1 < ... in chain order.
PreferenceAssignment lex_assignment(const Chain& chain);

/// One level of the addition operator.
struct RevisionStep {
  std::size_t level = 0;
  /// Level members that are contested (in cyc(π,σ)).
  Relation attempted;
  bool accepted = false;
  /// State after the step.
  Relation state;
};

struct RevisionTrace {
  /// (σ ∪ cf(π,σ))^+.
  Relation base;
  std::vector<RevisionStep> steps;
  /// Fixed point.
  Relation result;
};

/// Runs the level-wise addition operator to its fixed point.
///
/// Starting from (σ ∪ cf)^+, each level in order tries to add all of its
/// contested comparisons at once; the level is accepted iff the closure stays
/// a strict partial order, otherwise it contributes nothing.
RevisionTrace add_fixpoint(const Chain& chain, const Relation& sigma,
                           const PreferenceAssignment& assignment);

/// Result of the assignment-induced revision operator.
Relation revise(const Chain& chain, const Relation& sigma, const PreferenceAssignment& assignment);

/// Any map (π, σ) -> SPO. Induced operators, lookup tables and test doubles
/// all fit here.
using RevisionOperator = std::function<Relation(const Chain&, const Relation&)>;

/// Operator induced by a fixed assignment. The assignment is used for every
/// chain passed in, so its comparison count must match.
RevisionOperator induced_operator(PreferenceAssignment assignment);

/// Operators of the trivial and lexicographic assignments for any chain.
RevisionOperator trivial_operator();
RevisionOperator lex_operator();

}  // namespace prefrev
