#include "prefrev/revision.hpp"

#include <string>

namespace prefrev {

PreferenceAssignment::PreferenceAssignment(std::size_t comparison_count,
                                           std::vector<std::vector<std::size_t>> levels)
    : count_(comparison_count), levels_(std::move(levels)) {
  std::vector<bool> seen(count_, false);
  std::size_t covered = 0;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (levels_[i].empty()) {
      throw InvalidInput("assignment level " + std::to_string(i + 1) + " is empty");
    }
    for (std::size_t k : levels_[i]) {
      if (k >= count_) {
        throw InvalidInput("assignment names comparison " + std::to_string(k) + " but the chain has " +
                           std::to_string(count_));
      }
      if (seen[k]) {
        throw InvalidInput("assignment lists comparison " + std::to_string(k) + " twice");
      }
      seen[k] = true;
      ++covered;
    }
  }
  if (covered != count_) {
    throw InvalidInput("assignment levels do not cover every direct comparison");
  }
}

PreferenceAssignment PreferenceAssignment::trivial(std::size_t comparison_count) {
  if (comparison_count == 0) {
    return {0, {}};
  }
  std::vector<std::size_t> all(comparison_count);
  for (std::size_t k = 0; k < comparison_count; ++k) {
    all[k] = k;
  }
  return {comparison_count, {std::move(all)}};
}

PreferenceAssignment PreferenceAssignment::lexicographic(std::size_t comparison_count) {
  std::vector<std::vector<std::size_t>> levels;
  for (std::size_t k = 0; k < comparison_count; ++k) {
    levels.push_back({k});
  }
  return {comparison_count, std::move(levels)};
}

std::size_t PreferenceAssignment::level_of(std::size_t k) const {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (std::size_t member : levels_[i]) {
      if (member == k) {
        return i;
      }
    }
  }
  throw InvalidInput("comparison " + std::to_string(k) + " not in assignment");
}

bool PreferenceAssignment::decisive() const {
  for (const auto& level : levels_) {
    if (level.size() != 1) {
      return false;
    }
  }
  return true;
}

PreferenceAssignment trivial_assignment(const Chain& chain) {
  return PreferenceAssignment::trivial(chain.comparison_count());
}

PreferenceAssignment lex_assignment(const Chain& chain) {
  return PreferenceAssignment::lexicographic(chain.comparison_count());
}

RevisionTrace add_fixpoint(const Chain& chain, const Relation& sigma,
                           const PreferenceAssignment& assignment) {
  if (assignment.comparison_count() != chain.comparison_count()) {
    throw InvalidInput("assignment ranks " + std::to_string(assignment.comparison_count()) +
                       " comparisons, chain has " + std::to_string(chain.comparison_count()));
  }
  const Relation contested = cyclic_part(chain, sigma);

  RevisionTrace trace;
  trace.base = transitive_closure(sigma | cycle_free_part(chain, sigma));
  Relation state = trace.base;
  for (std::size_t i = 0; i < assignment.levels().size(); ++i) {
    RevisionStep step;
    step.level = i;
    step.attempted = Relation(chain.universe());
    for (std::size_t k : assignment.levels()[i]) {
      const Comparison c = chain.comparison(k);
      if (contested.contains(c)) {
        step.attempted.insert(c);
      }
    }
    Relation next = transitive_closure(state | step.attempted);
    step.accepted = !next.has_self_pair();
    if (step.accepted) {
      state = next;
    }
    step.state = state;
    trace.steps.push_back(std::move(step));
  }
  trace.result = state;
  return trace;
}

Relation revise(const Chain& chain, const Relation& sigma, const PreferenceAssignment& assignment) {
  return add_fixpoint(chain, sigma, assignment).result;
}

RevisionOperator induced_operator(PreferenceAssignment assignment) {
  return [a = std::move(assignment)](const Chain& chain, const Relation& sigma) {
    return revise(chain, sigma, a);
  };
}

RevisionOperator trivial_operator() {
  return [](const Chain& chain, const Relation& sigma) {
    return revise(chain, sigma, trivial_assignment(chain));
  };
}

RevisionOperator lex_operator() {
  return [](const Chain& chain, const Relation& sigma) {
    return revise(chain, sigma, lex_assignment(chain));
  };
}

}  // namespace prefrev
