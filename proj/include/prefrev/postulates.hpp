#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prefrev/order.hpp"
#include "prefrev/relation.hpp"
#include "prefrev/revision.hpp"

namespace prefrev {

enum class Postulate { P1, P2, P3, P4, PD };

const char* to_string(Postulate p);

/// Enough to re-run the failed check: the inputs plus the pairs that broke it.
struct PostulateWitness {
  Chain chain;
  Relation sigma;
  std::optional<Relation> sigma2;
  /// P1/PD: pairs on which the result and (σ ∪ (dir_π ∩ result))^+ differ.
  /// P2: cf pairs missing from the result. P3: left side minus right side.
  /// P4: right side minus left side.
  Relation offending;
  std::string note;
};

struct PostulateReport {
  Postulate postulate = Postulate::P1;
  bool holds = true;
  std::optional<PostulateWitness> witness;
};

/// result ∈ ⌈σ⌉_π.
PostulateReport check_p1(const Chain& chain, const Relation& sigma, const Relation& result);

/// cf(π,σ) ⊆ result.
PostulateReport check_p2(const Chain& chain, const Relation& sigma, const Relation& result);

/// op(π,(σ1∪σ2)^+) ⊆ (op(π,σ1) ∪ σ2)^+.
PostulateReport check_p3(const Chain& chain, const Relation& sigma1, const Relation& sigma2,
                         const RevisionOperator& op);

/// If (op(π,σ1) ∪ σ2)^+ is an SPO it is contained in op(π,(σ1∪σ2)^+).
PostulateReport check_p4(const Chain& chain, const Relation& sigma1, const Relation& sigma2,
                         const RevisionOperator& op);

/// result ∈ ⌈σ⌉^D_π (a completion using at least one direct comparison).
PostulateReport check_pd(const Chain& chain, const Relation& sigma, const Relation& result);

/// σ1, σ2 and (σ1∪σ2)^+ are all strict partial orders on the same universe.
bool is_valid_pair(const Relation& sigma1, const Relation& sigma2);

struct CoordinationWitness {
  /// Subset of cyc(π,σ1) addable to σ1 but not to (σ1∪σ2)^+.
  Relation delta;
  std::string reason;
};

struct CoordinationResult {
  bool coordinated = true;
  std::optional<CoordinationWitness> witness;

  explicit operator bool() const { return coordinated; }
};

/// Coordination of σ1 and σ2 with respect to π. On failure the witness has
/// minimum size; ties go to the lexicographically smallest index set.
CoordinationResult is_coordinated(const Chain& chain, const Relation& sigma1,
                                  const Relation& sigma2, const Limits& limits = {});

/// Smallest new preference forcing a choice between c_k and c_l (0-based,
/// k < l). For l = k+1 it is the single pair (i_{k+2}, i_k).
Relation choice_inducing_sigma(const Chain& chain, std::size_t k, std::size_t l);

/// Revealed preference over direct comparisons: k ≤ l iff c_l is dropped when
/// revising by the choice-inducing preference for (k, l).
class RevealedRelation {
 public:
  explicit RevealedRelation(std::size_t comparison_count);

  std::size_t comparison_count() const { return count_; }
  bool leq(std::size_t k, std::size_t l) const { return (rows_.at(k) >> l) & 1U; }
  void set_leq(std::size_t k, std::size_t l, bool value);

  bool total() const;

  /// A triple (a, b, c) with a ≤ b, b ≤ c but not a ≤ c, if any.
  std::optional<std::array<std::size_t, 3>> transitivity_violation() const;

  /// The preorder as an ordered partition, best first, if it is total and
  /// transitive.
  std::optional<PreferenceAssignment> as_assignment() const;

 private:
  std::size_t count_;
  std::vector<std::uint64_t> rows_;
};

/// Throws InvalidInput if the operator returns something that is not an SPO.
RevealedRelation revealed_relation(const Chain& chain, const RevisionOperator& op);

struct RoundtripResult {
  bool holds = true;
  /// Revealed preorder, when it is a total preorder.
  std::optional<PreferenceAssignment> revealed;
  std::optional<std::array<std::size_t, 3>> transitivity_violation;
  /// First pool member on which the two operators differ.
  std::optional<Relation> disagreement;
};

/// Reveals the preorder of the `assignment`-induced operator, re-induces an
/// operator from it, and compares the two on every member of `pool`.
RoundtripResult roundtrip_representation(const Chain& chain, const PreferenceAssignment& assignment,
                                         std::span<const Relation> pool);

}  // namespace prefrev
