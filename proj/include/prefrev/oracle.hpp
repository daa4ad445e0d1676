#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prefrev/order.hpp"
#include "prefrev/relation.hpp"
#include "prefrev/revision.hpp"

namespace prefrev {

/// Every chain over the universe {0..n-1}; with `full_only` just the n!
/// permutations, otherwise chains on every non-empty subset.
std::vector<Chain> enumerate_chains(std::size_t n, bool full_only);

/// Every strict partial order on n ≤ 5 items, by filtering all irreflexive
/// relations.
std::vector<Relation> enumerate_spos(std::size_t n);

/// Every ordered partition of {0..m-1} (m ≤ 5); the count is the ordered
/// Bell number.
std::vector<PreferenceAssignment> enumerate_assignments(std::size_t comparison_count);
std::vector<PreferenceAssignment> enumerate_assignments(const Chain& chain);

/// Reference implementation of the induced operator, computed by a different
/// route than revise(): own boolean-matrix closure, explicit enumeration of
/// the feasible subsets δ ⊆ cyc(π,σ), then a level scan that keeps a level
/// iff the running selection plus its contested members is feasible.
Relation greedy_oracle_revision(const Chain& chain, const Relation& sigma,
                                const PreferenceAssignment& assignment);

enum class Suite {
  CompletionAndCycleFree,
  Coordination,
  RevealedOrder,
  Roundtrip,
  Decisive,
  TrivialAndLex,
  Oracle,
};

std::string_view to_string(Suite suite);
/// Throws InvalidInput for unknown names.
Suite parse_suite(std::string_view name);
std::vector<Suite> all_suites();

struct InstanceSpace {
  std::size_t n = 3;
  bool full_chains_only = true;
  /// 0 means exhaustive; otherwise the number of random instances.
  std::size_t samples = 0;
  std::uint64_t seed = 0x5eed;
};

struct SuiteFailure {
  Chain chain;
  Relation sigma;
  std::optional<Relation> sigma2;
  std::optional<PreferenceAssignment> assignment;
  std::string detail;

  /// Single-line rendering used for sorting and de-duplication.
  std::string describe() const;
};

struct SuiteResult {
  Suite suite = Suite::CompletionAndCycleFree;
  InstanceSpace space;
  /// Units examined (chain, (chain,σ) or (chain,σ1,σ2) depending on suite).
  std::size_t instances = 0;
  /// Individual operator/postulate evaluations.
  std::size_t checks = 0;
  /// Failing units before shrinking.
  std::size_t failure_count = 0;
  /// Shrunk, de-duplicated and sorted witnesses (capped).
  std::vector<SuiteFailure> failures;

  bool passed() const { return failure_count == 0; }
};

/// Runs one property suite over the instance space.
///
/// Exhaustive mode is bounded: n ≤ 5 in general and n ≤ 4 for the suites
/// that quantify over pairs of preferences (coordination, decisive, trivial-lex). Failing units are
/// shrunk to the smallest sub-universe on which they still fail.
SuiteResult run_property_suite(const InstanceSpace& space, Suite suite,
                              std::size_t max_witnesses = 10);

}  // namespace prefrev
