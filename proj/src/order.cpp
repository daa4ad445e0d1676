#include "prefrev/order.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace prefrev {

Relation transitive_closure(const Relation& r) {
  // Warshall over bit rows: whenever i reaches k, i inherits k's successors.
  const std::size_t n = r.universe();
  std::vector<std::uint64_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i] = r.row(i);
  }
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t bit = std::uint64_t{1} << k;
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i] & bit) {
        rows[i] |= rows[k];
      }
    }
  }
  Relation out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.set_row(i, rows[i]);
  }
  return out;
}

bool is_spo(const Relation& r) {
  if (r.has_self_pair()) {
    return false;
  }
  const std::size_t n = r.universe();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint64_t bits = r.row(i); bits != 0; bits &= bits - 1) {
      const auto k = static_cast<Item>(std::countr_zero(bits));
      if ((r.row(k) & ~r.row(i)) != 0) {
        return false;
      }
    }
  }
  return true;
}

void require_spo(const Relation& r, const char* what) {
  if (!is_spo(r)) {
    throw InvalidInput(std::string(what) + " is not a strict partial order");
  }
}

Chain Chain::from_sequence(std::size_t universe, std::vector<Item> sequence) {
  Relation rel(universe);
  std::uint64_t seen = 0;
  for (Item item : sequence) {
    if (item >= universe) {
      throw InvalidInput("chain item " + std::to_string(item) + " outside universe");
    }
    if ((seen >> item) & 1U) {
      throw InvalidInput("chain repeats item " + std::to_string(item));
    }
    seen |= std::uint64_t{1} << item;
  }
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    for (std::size_t l = k + 1; l < sequence.size(); ++l) {
      rel.insert(sequence[k], sequence[l]);
    }
  }
  return Chain(std::move(sequence), rel);
}

Comparison Chain::comparison(std::size_t k) const {
  if (k >= comparison_count()) {
    throw InvalidInput("direct comparison index " + std::to_string(k) + " out of range");
  }
  return {sequence_[k], sequence_[k + 1]};
}

std::vector<Comparison> direct_comparisons(const Chain& chain) {
  std::vector<Comparison> out;
  out.reserve(chain.comparison_count());
  for (std::size_t k = 0; k < chain.comparison_count(); ++k) {
    out.push_back(chain.comparison(k));
  }
  return out;
}

Relation direct_relation(const Chain& chain) {
  const auto dir = direct_comparisons(chain);
  return Relation(chain.universe(), dir);
}

Relation union_plus(const Relation& r1, const Relation& r2) { return transitive_closure(r1 | r2); }

namespace {

void require_inputs(const Chain& chain, const Relation& sigma) {
  if (chain.universe() != sigma.universe()) {
    throw InvalidInput("chain and preference live on different universes");
  }
  require_spo(sigma, "new preference");
}

}  // namespace

std::vector<std::size_t> cyclic_indices(const Chain& chain, const Relation& sigma) {
  require_inputs(chain, sigma);
  const Relation joint = union_plus(chain.relation(), sigma);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < chain.comparison_count(); ++k) {
    if (joint.contains(chain.comparison(k).reversed())) {
      out.push_back(k);
    }
  }
  return out;
}

Relation cyclic_part(const Chain& chain, const Relation& sigma) {
  Relation out(chain.universe());
  for (std::size_t k : cyclic_indices(chain, sigma)) {
    out.insert(chain.comparison(k));
  }
  return out;
}

Relation cycle_free_part(const Chain& chain, const Relation& sigma) {
  require_inputs(chain, sigma);
  const Relation joint = union_plus(chain.relation(), sigma);
  Relation out(chain.universe());
  for (const auto& c : direct_comparisons(chain)) {
    if (!joint.contains(c.reversed())) {
      out.insert(c);
    }
  }
  return out;
}

namespace {

std::vector<Relation> enumerate_completions(const Chain& chain, const Relation& sigma,
                                            const Limits& limits, bool decisive) {
  require_inputs(chain, sigma);
  const auto dir = direct_comparisons(chain);
  if (dir.size() > limits.max_enumerated_comparisons || dir.size() >= 64) {
    throw GuardExceeded("completion enumeration over " + std::to_string(dir.size()) +
                        " direct comparisons exceeds guard of " +
                        std::to_string(limits.max_enumerated_comparisons));
  }
  std::vector<Relation> out;
  const std::uint64_t subsets = std::uint64_t{1} << dir.size();
  for (std::uint64_t mask = decisive ? 1 : 0; mask < subsets; ++mask) {
    Relation candidate = sigma;
    for (std::size_t k = 0; k < dir.size(); ++k) {
      if ((mask >> k) & 1U) {
        candidate.insert(dir[k]);
      }
    }
    candidate = transitive_closure(candidate);
    if (!candidate.has_self_pair()) {
      out.push_back(candidate);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Relation> completions(const Chain& chain, const Relation& sigma, const Limits& limits) {
  return enumerate_completions(chain, sigma, limits, false);
}

std::vector<Relation> decisive_completions(const Chain& chain, const Relation& sigma,
                                           const Limits& limits) {
  return enumerate_completions(chain, sigma, limits, true);
}

}  // namespace prefrev
