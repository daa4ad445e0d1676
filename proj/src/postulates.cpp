#include "prefrev/postulates.hpp"

#include <numeric>

namespace prefrev {

const char* to_string(Postulate p) {
  switch (p) {
    case Postulate::P1:
      return "P1";
    case Postulate::P2:
      return "P2";
    case Postulate::P3:
      return "P3";
    case Postulate::P4:
      return "P4";
    case Postulate::PD:
      return "PD";
  }
  return "?";
}

namespace {

void require_same_universe(const Chain& chain, const Relation& r, const char* what) {
  if (r.universe() != chain.universe()) {
    throw InvalidInput(std::string(what) + " lives on a different universe than the chain");
  }
}

void require_pair(const Chain& chain, const Relation& sigma1, const Relation& sigma2) {
  require_same_universe(chain, sigma1, "first preference");
  require_same_universe(chain, sigma2, "second preference");
  require_spo(sigma1, "first preference");
  require_spo(sigma2, "second preference");
  if (union_plus(sigma1, sigma2).has_self_pair()) {
    throw InvalidInput("closure of the two preferences is not a strict partial order");
  }
}

PostulateReport failed(Postulate p, const Chain& chain, const Relation& sigma,
                       std::optional<Relation> sigma2, Relation offending, std::string note) {
  return {p, false,
          PostulateWitness{chain, sigma, std::move(sigma2), offending, std::move(note)}};
}

// Shared core of P1 and PD. A relation is a π-completion of σ iff it is an
// SPO equal to (σ ∪ (dir_π ∩ result))^+: any generating δ is contained in
// dir_π ∩ result, and the closure of σ ∪ (dir_π ∩ result) cannot exceed a
// transitive result containing it.
PostulateReport check_completion(Postulate p, const Chain& chain, const Relation& sigma,
                                 const Relation& result) {
  require_same_universe(chain, sigma, "new preference");
  require_same_universe(chain, result, "result");
  require_spo(sigma, "new preference");
  const Relation retained = direct_relation(chain) & result;
  const Relation generated = transitive_closure(sigma | retained);
  if (!is_spo(result)) {
    return failed(p, chain, sigma, std::nullopt, (result - generated) | (generated - result),
                  "result is not a strict partial order");
  }
  if (result != generated) {
    return failed(p, chain, sigma, std::nullopt, (result - generated) | (generated - result),
                  "result is not generated by the new preference and direct comparisons");
  }
  if (p == Postulate::PD && retained.empty()) {
    return failed(p, chain, sigma, std::nullopt, Relation(chain.universe()),
                  "result keeps no direct comparison");
  }
  return {p, true, std::nullopt};
}

}  // namespace

PostulateReport check_p1(const Chain& chain, const Relation& sigma, const Relation& result) {
  return check_completion(Postulate::P1, chain, sigma, result);
}

PostulateReport check_pd(const Chain& chain, const Relation& sigma, const Relation& result) {
  return check_completion(Postulate::PD, chain, sigma, result);
}

PostulateReport check_p2(const Chain& chain, const Relation& sigma, const Relation& result) {
  require_same_universe(chain, result, "result");
  const Relation missing = cycle_free_part(chain, sigma) - result;
  if (!missing.empty()) {
    return failed(Postulate::P2, chain, sigma, std::nullopt, missing,
                  "cycle-free comparisons missing from result");
  }
  return {Postulate::P2, true, std::nullopt};
}

PostulateReport check_p3(const Chain& chain, const Relation& sigma1, const Relation& sigma2,
                         const RevisionOperator& op) {
  require_pair(chain, sigma1, sigma2);
  const Relation joint = union_plus(sigma1, sigma2);
  const Relation lhs = op(chain, joint);
  const Relation rhs = transitive_closure(op(chain, sigma1) | sigma2);
  const Relation extra = lhs - rhs;
  if (!extra.empty()) {
    return failed(Postulate::P3, chain, sigma1, sigma2, extra,
                  "revising by the joint preference keeps pairs that expansion does not");
  }
  return {Postulate::P3, true, std::nullopt};
}

PostulateReport check_p4(const Chain& chain, const Relation& sigma1, const Relation& sigma2,
                         const RevisionOperator& op) {
  require_pair(chain, sigma1, sigma2);
  const Relation rhs = transitive_closure(op(chain, sigma1) | sigma2);
  if (rhs.has_self_pair()) {
    return {Postulate::P4, true, std::nullopt};
  }
  const Relation lhs = op(chain, union_plus(sigma1, sigma2));
  const Relation missing = rhs - lhs;
  if (!missing.empty()) {
    return failed(Postulate::P4, chain, sigma1, sigma2, missing,
                  "expansion keeps pairs that revising by the joint preference drops");
  }
  return {Postulate::P4, true, std::nullopt};
}

bool is_valid_pair(const Relation& sigma1, const Relation& sigma2) {
  return sigma1.universe() == sigma2.universe() && is_spo(sigma1) && is_spo(sigma2) &&
         !union_plus(sigma1, sigma2).has_self_pair();
}

CoordinationResult is_coordinated(const Chain& chain, const Relation& sigma1,
                                  const Relation& sigma2, const Limits& limits) {
  require_pair(chain, sigma1, sigma2);
  const auto contested = cyclic_indices(chain, sigma1);
  if (contested.size() > limits.max_enumerated_comparisons) {
    throw GuardExceeded("coordination check over " + std::to_string(contested.size()) +
                        " contested comparisons exceeds guard of " +
                        std::to_string(limits.max_enumerated_comparisons));
  }
  const Relation joint = union_plus(sigma1, sigma2);

  // Only comparisons the joint preference leaves undecided are on the menu.
  std::vector<Comparison> menu;
  for (std::size_t k : contested) {
    const Comparison c = chain.comparison(k);
    if (!joint.contains(c) && !joint.contains(c.reversed())) {
      menu.push_back(c);
    }
  }

  // Subsets by size, each size in lexicographic index order.
  std::vector<std::size_t> pick;
  for (std::size_t size = 1; size <= menu.size(); ++size) {
    pick.resize(size);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
      Relation delta(chain.universe());
      for (std::size_t i : pick) {
        delta.insert(menu[i]);
      }
      if (!union_plus(sigma1, delta).has_self_pair() && union_plus(joint, delta).has_self_pair()) {
        return {false, CoordinationWitness{
                           delta, "addable to the first preference but not to the joint closure"}};
      }
      // Advance to the next combination.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == menu.size() - size + i - 1) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) {
        pick[j] = pick[j - 1] + 1;
      }
    }
  }
  return {true, std::nullopt};
}

Relation choice_inducing_sigma(const Chain& chain, std::size_t k, std::size_t l) {
  const std::size_t m = chain.comparison_count();
  if (k >= l) {
    throw InvalidInput("choice-inducing preference needs k < l");
  }
  if (l >= m) {
    throw InvalidInput("comparison index " + std::to_string(l) + " out of range");
  }
  const auto& seq = chain.sequence();
  Relation sigma(chain.universe());
  if (seq[k + 1] != seq[l]) {
    sigma.insert(seq[k + 1], seq[l]);
  }
  sigma.insert(seq[l + 1], seq[k]);
  return sigma;
}

RevealedRelation::RevealedRelation(std::size_t comparison_count)
    : count_(comparison_count), rows_(comparison_count, 0) {
  if (comparison_count > 64) {
    throw GuardExceeded("revealed relation supports at most 64 comparisons");
  }
  for (std::size_t k = 0; k < count_; ++k) {
    rows_[k] |= std::uint64_t{1} << k;
  }
}

void RevealedRelation::set_leq(std::size_t k, std::size_t l, bool value) {
  if (value) {
    rows_.at(k) |= std::uint64_t{1} << l;
  } else {
    rows_.at(k) &= ~(std::uint64_t{1} << l);
  }
}

bool RevealedRelation::total() const {
  for (std::size_t k = 0; k < count_; ++k) {
    for (std::size_t l = k + 1; l < count_; ++l) {
      if (!leq(k, l) && !leq(l, k)) {
        return false;
      }
    }
  }
  return true;
}

std::optional<std::array<std::size_t, 3>> RevealedRelation::transitivity_violation() const {
  for (std::size_t a = 0; a < count_; ++a) {
    for (std::size_t b = 0; b < count_; ++b) {
      if (!leq(a, b)) {
        continue;
      }
      for (std::size_t c = 0; c < count_; ++c) {
        if (leq(b, c) && !leq(a, c)) {
          return std::array<std::size_t, 3>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<PreferenceAssignment> RevealedRelation::as_assignment() const {
  if (!total() || transitivity_violation()) {
    return std::nullopt;
  }
  std::vector<std::vector<std::size_t>> levels;
  std::vector<bool> placed(count_, false);
  std::size_t remaining = count_;
  while (remaining > 0) {
    std::vector<std::size_t> level;
    for (std::size_t k = 0; k < count_; ++k) {
      if (placed[k]) {
        continue;
      }
      bool best = true;
      for (std::size_t l = 0; l < count_ && best; ++l) {
        best = placed[l] || leq(k, l);
      }
      if (best) {
        level.push_back(k);
      }
    }
    for (std::size_t k : level) {
      placed[k] = true;
    }
    remaining -= level.size();
    levels.push_back(std::move(level));
  }
  return PreferenceAssignment(count_, std::move(levels));
}

RevealedRelation revealed_relation(const Chain& chain, const RevisionOperator& op) {
  const std::size_t m = chain.comparison_count();
  RevealedRelation revealed(m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = k + 1; l < m; ++l) {
      const Relation result = op(chain, choice_inducing_sigma(chain, k, l));
      if (!is_spo(result)) {
        throw InvalidInput("operator returned a relation that is not a strict partial order");
      }
      revealed.set_leq(k, l, !result.contains(chain.comparison(l)));
      revealed.set_leq(l, k, !result.contains(chain.comparison(k)));
    }
  }
  return revealed;
}

RoundtripResult roundtrip_representation(const Chain& chain, const PreferenceAssignment& assignment,
                                         std::span<const Relation> pool) {
  RoundtripResult out;
  const RevealedRelation revealed = revealed_relation(chain, induced_operator(assignment));
  out.transitivity_violation = revealed.transitivity_violation();
  out.revealed = revealed.as_assignment();
  if (!out.revealed) {
    out.holds = false;
    return out;
  }
  for (const Relation& sigma : pool) {
    if (revise(chain, sigma, assignment) != revise(chain, sigma, *out.revealed)) {
      out.holds = false;
      out.disagreement = sigma;
      return out;
    }
  }
  return out;
}

}  // namespace prefrev
