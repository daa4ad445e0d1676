#include "prefrev/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

#include "prefrev/format.hpp"
#include "prefrev/postulates.hpp"

namespace prefrev {

// ---------------------------------------------------------------------------
// Enumerators

std::vector<Chain> enumerate_chains(std::size_t n, bool full_only) {
  validate_universe(n);
  if (n > 8) {
    throw GuardExceeded("chain enumeration supports n <= 8");
  }
  std::vector<Chain> out;
  const std::uint32_t first = full_only ? (1U << n) - 1 : 1U;
  for (std::uint32_t mask = first; mask < (1U << n); ++mask) {
    std::vector<Item> items;
    for (Item i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) {
        items.push_back(i);
      }
    }
    do {
      out.push_back(Chain::from_sequence(n, items));
    } while (std::next_permutation(items.begin(), items.end()));
  }
  return out;
}

std::vector<Relation> enumerate_spos(std::size_t n) {
  validate_universe(n);
  if (n > 5) {
    throw GuardExceeded("strict partial order enumeration supports n <= 5");
  }
  std::vector<Comparison> slots;
  for (Item a = 0; a < n; ++a) {
    for (Item b = 0; b < n; ++b) {
      if (a != b) {
        slots.push_back({a, b});
      }
    }
  }
  std::vector<Relation> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Relation r(n);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if ((mask >> s) & 1U) {
        r.insert(slots[s]);
      }
    }
    if (is_spo(r)) {
      out.push_back(r);
    }
  }
  return out;
}

namespace {

void ordered_partitions(std::vector<std::size_t> remaining,
                        std::vector<std::vector<std::size_t>>& prefix,
                        std::vector<std::vector<std::vector<std::size_t>>>& out) {
  if (remaining.empty()) {
    out.push_back(prefix);
    return;
  }
  const std::uint32_t count = 1U << remaining.size();
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    std::vector<std::size_t> block;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      ((mask >> i) & 1U ? block : rest).push_back(remaining[i]);
    }
    prefix.push_back(std::move(block));
    ordered_partitions(std::move(rest), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<PreferenceAssignment> enumerate_assignments(std::size_t comparison_count) {
  if (comparison_count > 5) {
    throw GuardExceeded("assignment enumeration supports at most 5 direct comparisons");
  }
  std::vector<std::size_t> all(comparison_count);
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> prefix;
  std::vector<std::vector<std::vector<std::size_t>>> partitions;
  ordered_partitions(all, prefix, partitions);
  std::vector<PreferenceAssignment> out;
  out.reserve(partitions.size());
  for (auto& levels : partitions) {
    out.emplace_back(comparison_count, std::move(levels));
  }
  return out;
}

std::vector<PreferenceAssignment> enumerate_assignments(const Chain& chain) {
  return enumerate_assignments(chain.comparison_count());
}

// ---------------------------------------------------------------------------
// Reference revision

namespace {

using BoolMatrix = std::vector<std::vector<char>>;

BoolMatrix to_matrix(const Relation& r) {
  const std::size_t n = r.universe();
  BoolMatrix m(n, std::vector<char>(n, 0));
  for (Item a = 0; a < n; ++a) {
    for (Item b = 0; b < n; ++b) {
      m[a][b] = r.contains(a, b) ? 1 : 0;
    }
  }
  return m;
}

void close_in_place(BoolMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i][k]) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (m[k][j]) {
          m[i][j] = 1;
        }
      }
    }
  }
}

bool irreflexive(const BoolMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i][i]) {
      return false;
    }
  }
  return true;
}

}  // namespace

Relation greedy_oracle_revision(const Chain& chain, const Relation& sigma,
                                const PreferenceAssignment& assignment) {
  const std::size_t n = chain.universe();
  if (sigma.universe() != n) {
    throw InvalidInput("chain and preference live on different universes");
  }
  if (assignment.comparison_count() != chain.comparison_count()) {
    throw InvalidInput("assignment does not match chain");
  }
  const BoolMatrix sigma_m = to_matrix(sigma);
  {
    BoolMatrix closed = sigma_m;
    close_in_place(closed);
    if (closed != sigma_m || !irreflexive(closed)) {
      throw InvalidInput("new preference is not a strict partial order");
    }
  }

  const auto& seq = chain.sequence();
  BoolMatrix joint = sigma_m;
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    joint[seq[k]][seq[k + 1]] = 1;
  }
  close_in_place(joint);

  BoolMatrix base = sigma_m;
  std::vector<std::size_t> contested;  // comparison indices
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    if (joint[seq[k + 1]][seq[k]]) {
      contested.push_back(k);
    } else {
      base[seq[k]][seq[k + 1]] = 1;
    }
  }
  if (contested.size() > 20) {
    throw GuardExceeded("oracle enumerates at most 20 contested comparisons");
  }

  auto with_subset = [&](std::uint32_t mask) {
    BoolMatrix m = base;
    for (std::size_t i = 0; i < contested.size(); ++i) {
      if ((mask >> i) & 1U) {
        m[seq[contested[i]]][seq[contested[i] + 1]] = 1;
      }
    }
    close_in_place(m);
    return m;
  };

  std::vector<char> feasible(std::size_t{1} << contested.size(), 0);
  for (std::uint32_t mask = 0; mask < feasible.size(); ++mask) {
    feasible[mask] = irreflexive(with_subset(mask)) ? 1 : 0;
  }

  std::uint32_t selected = 0;
  for (const auto& level : assignment.levels()) {
    std::uint32_t grown = selected;
    for (std::size_t k : level) {
      const auto it = std::find(contested.begin(), contested.end(), k);
      if (it != contested.end()) {
        grown |= 1U << (it - contested.begin());
      }
    }
    if (feasible[grown]) {
      selected = grown;
    }
  }

  const BoolMatrix result = with_subset(selected);
  Relation out(n);
  for (Item a = 0; a < n; ++a) {
    for (Item b = 0; b < n; ++b) {
      if (result[a][b]) {
        out.insert(a, b);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suites

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::CompletionAndCycleFree:
      return "p1-p2";
    case Suite::Coordination:
      return "coordination";
    case Suite::RevealedOrder:
      return "revealed-order";
    case Suite::Roundtrip:
      return "roundtrip";
    case Suite::Decisive:
      return "decisive";
    case Suite::TrivialAndLex:
      return "trivial-lex";
    case Suite::Oracle:
      return "oracle";
  }
  return "?";
}

std::vector<Suite> all_suites() {
  return {Suite::CompletionAndCycleFree, Suite::Coordination, Suite::RevealedOrder, Suite::Roundtrip, Suite::Decisive, Suite::TrivialAndLex, Suite::Oracle};
}

Suite parse_suite(std::string_view name) {
  for (Suite s : all_suites()) {
    if (to_string(s) == name) {
      return s;
    }
  }
  throw InvalidInput("unknown suite '" + std::string(name) + "'");
}

std::string SuiteFailure::describe() const {
  std::string out = "chain " + format_chain(chain) + " sigma " + format_relation(sigma);
  if (sigma2) {
    out += " sigma2 " + format_relation(*sigma2);
  }
  if (assignment) {
    out += " assignment " + format_assignment(chain, *assignment);
  }
  return out + ": " + detail;
}

namespace {

enum class UnitKind { ChainOnly, Single, Pair };

UnitKind unit_kind(Suite suite) {
  switch (suite) {
    case Suite::CompletionAndCycleFree:
    case Suite::Oracle:
      return UnitKind::Single;
    case Suite::Coordination:
    case Suite::TrivialAndLex:
      return UnitKind::Pair;
    case Suite::RevealedOrder:
    case Suite::Roundtrip:
    case Suite::Decisive:
      return UnitKind::ChainOnly;
  }
  return UnitKind::Single;
}

struct Unit {
  Chain chain;
  Relation sigma;
  std::optional<Relation> sigma2;
};

class SuiteRunner {
 public:
  explicit SuiteRunner(Suite suite) : suite_(suite) {}

  std::size_t checks() const { return checks_; }

  std::optional<SuiteFailure> check(const Unit& unit) {
    switch (suite_) {
      case Suite::CompletionAndCycleFree:
        return check_t2(unit);
      case Suite::Oracle:
        return check_oracle(unit);
      case Suite::Coordination:
        return check_t1(unit);
      case Suite::TrivialAndLex:
        return check_prop1(unit);
      case Suite::RevealedOrder:
        return check_l1(unit);
      case Suite::Roundtrip:
        return check_t3(unit);
      case Suite::Decisive:
        return check_t4(unit);
    }
    return std::nullopt;
  }

  const std::vector<Relation>& pool(std::size_t n) {
    auto it = pools_.find(n);
    if (it == pools_.end()) {
      it = pools_.emplace(n, enumerate_spos(n)).first;
    }
    return it->second;
  }

  const std::vector<PreferenceAssignment>& assignments(std::size_t m) {
    auto it = assignments_.find(m);
    if (it == assignments_.end()) {
      it = assignments_.emplace(m, enumerate_assignments(m)).first;
    }
    return it->second;
  }

 private:
  SuiteFailure fail(const Unit& unit, std::optional<PreferenceAssignment> a, std::string detail) {
    return {unit.chain, unit.sigma, unit.sigma2, std::move(a), std::move(detail)};
  }

  static std::string describe(const PostulateReport& r) {
    std::string out = std::string(to_string(r.postulate)) + " fails";
    if (r.witness) {
      out += " (" + r.witness->note + "; offending " + format_relation(r.witness->offending) + ")";
    }
    return out;
  }

  std::optional<SuiteFailure> check_t2(const Unit& u) {
    for (const auto& a : assignments(u.chain.comparison_count())) {
      ++checks_;
      const Relation result = revise(u.chain, u.sigma, a);
      for (const auto& report : {check_p1(u.chain, u.sigma, result), check_p2(u.chain, u.sigma, result)}) {
        if (!report.holds) {
          return fail(u, a, describe(report));
        }
      }
    }
    return std::nullopt;
  }

  std::optional<SuiteFailure> check_oracle(const Unit& u) {
    for (const auto& a : assignments(u.chain.comparison_count())) {
      ++checks_;
      const Relation engine = revise(u.chain, u.sigma, a);
      const Relation oracle = greedy_oracle_revision(u.chain, u.sigma, a);
      if (engine != oracle) {
        return fail(u, a, "engine " + format_relation(engine) + " vs oracle " + format_relation(oracle));
      }
    }
    return std::nullopt;
  }

  // Operator that answers from two precomputed results, enough for P3/P4.
  static RevisionOperator pair_operator(const Relation& sigma1, const Relation& first,
                                        const Relation& joint, const Relation& second) {
    return [=](const Chain&, const Relation& sigma) {
      if (sigma == sigma1) {
        return first;
      }
      if (sigma == joint) {
        return second;
      }
      throw InvalidInput("pair operator queried outside its table");
    };
  }

  std::optional<PostulateReport> p3_p4(const Unit& u, const RevisionOperator& op) {
    for (const auto& report : {check_p3(u.chain, u.sigma, *u.sigma2, op),
                               check_p4(u.chain, u.sigma, *u.sigma2, op)}) {
      if (!report.holds) {
        return report;
      }
    }
    return std::nullopt;
  }

  std::optional<SuiteFailure> check_t1(const Unit& u) {
    const CoordinationResult coordination = is_coordinated(u.chain, u.sigma, *u.sigma2);
    const Relation joint = union_plus(u.sigma, *u.sigma2);
    std::optional<std::pair<PreferenceAssignment, PostulateReport>> violation;
    for (const auto& a : assignments(u.chain.comparison_count())) {
      ++checks_;
      const auto op = pair_operator(u.sigma, revise(u.chain, u.sigma, a), joint,
                                    revise(u.chain, joint, a));
      if (auto report = p3_p4(u, op)) {
        violation.emplace(a, *report);
        break;
      }
    }
    if (coordination.coordinated && violation) {
      return fail(u, violation->first, "coordinated, yet " + describe(violation->second));
    }
    if (!coordination.coordinated && !violation) {
      return fail(u, std::nullopt,
                  "not coordinated (delta " + format_relation(coordination.witness->delta) +
                      "), yet every assignment satisfies P3 and P4");
    }
    return std::nullopt;
  }

  std::optional<SuiteFailure> check_prop1(const Unit& u) {
    const bool coordinated = is_coordinated(u.chain, u.sigma, *u.sigma2).coordinated;
    const Relation joint = union_plus(u.sigma, *u.sigma2);
    const bool decisive_exists = !decisive_completions(u.chain, u.sigma).empty();
    for (const auto& [name, a] : {std::pair{"trivial", trivial_assignment(u.chain)},
                                  std::pair{"lex", lex_assignment(u.chain)}}) {
      ++checks_;
      const bool is_lex = std::string_view(name) == "lex";
      const Relation first = revise(u.chain, u.sigma, a);
      std::vector<PostulateReport> reports;
      if (is_lex) {
        if (decisive_exists) {
          reports.push_back(check_pd(u.chain, u.sigma, first));
        }
      } else {
        reports.push_back(check_p1(u.chain, u.sigma, first));
      }
      reports.push_back(check_p2(u.chain, u.sigma, first));
      if (coordinated) {
        const auto op = pair_operator(u.sigma, first, joint, revise(u.chain, joint, a));
        if (auto report = p3_p4(u, op)) {
          reports.push_back(*report);
        }
      }
      for (const auto& report : reports) {
        if (!report.holds) {
          return fail(u, a, std::string(name) + " operator: " + describe(report));
        }
      }
    }
    return std::nullopt;
  }

  std::optional<SuiteFailure> check_l1(const Unit& u) {
    for (const auto& a : assignments(u.chain.comparison_count())) {
      ++checks_;
      const RevealedRelation revealed = revealed_relation(u.chain, induced_operator(a));
      if (!revealed.total()) {
        return fail(u, a, "revealed relation is not total");
      }
      if (auto triple = revealed.transitivity_violation()) {
        return fail(u, a,
                    "revealed relation not transitive on c" + std::to_string((*triple)[0] + 1) +
                        ", c" + std::to_string((*triple)[1] + 1) + ", c" +
                        std::to_string((*triple)[2] + 1));
      }
    }
    return std::nullopt;
  }

  std::optional<SuiteFailure> check_t3(const Unit& u) {
    const auto& sigmas = pool(u.chain.universe());
    for (const auto& a : assignments(u.chain.comparison_count())) {
      ++checks_;
      const RoundtripResult rt = roundtrip_representation(u.chain, a, sigmas);
      if (!rt.holds) {
        std::string detail = "roundtrip fails";
        if (rt.transitivity_violation) {
          detail += " (revealed relation not transitive)";
        } else if (!rt.revealed) {
          detail += " (revealed relation not total)";
        } else if (rt.disagreement) {
          detail += " on sigma " + format_relation(*rt.disagreement) + " with revealed " +
                    format_assignment(u.chain, *rt.revealed);
        }
        return fail(u, a, detail);
      }
    }
    return std::nullopt;
  }

  std::optional<SuiteFailure> check_t4(const Unit& u) {
    const Chain& chain = u.chain;
    const auto& sigmas = pool(chain.universe());
    const auto& as = assignments(chain.comparison_count());

    std::unordered_map<Relation, std::size_t, RelationHash> index;
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
      index.emplace(sigmas[i], i);
    }
    struct PairRef {
      std::size_t first, second, joint;
    };
    std::vector<PairRef> coordinated_pairs;
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
      for (std::size_t j = 0; j < sigmas.size(); ++j) {
        if (!is_valid_pair(sigmas[i], sigmas[j])) {
          continue;
        }
        if (is_coordinated(chain, sigmas[i], sigmas[j]).coordinated) {
          coordinated_pairs.push_back({i, j, index.at(union_plus(sigmas[i], sigmas[j]))});
        }
      }
    }
    std::vector<char> decisive_exists(sigmas.size());
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
      decisive_exists[i] = decisive_completions(chain, sigmas[i]).empty() ? 0 : 1;
    }

    std::vector<std::vector<Relation>> tables;
    tables.reserve(as.size());
    for (const auto& a : as) {
      std::vector<Relation> table;
      table.reserve(sigmas.size());
      for (const auto& sigma : sigmas) {
        table.push_back(revise(chain, sigma, a));
      }
      tables.push_back(std::move(table));
    }

    for (std::size_t ai = 0; ai < as.size(); ++ai) {
      ++checks_;
      const auto& table = tables[ai];
      std::optional<std::string> broken;
      for (std::size_t i = 0; i < sigmas.size() && !broken; ++i) {
        const auto p2 = check_p2(chain, sigmas[i], table[i]);
        if (!p2.holds) {
          broken = "on sigma " + format_relation(sigmas[i]) + " " + describe(p2);
          break;
        }
        if (decisive_exists[i]) {
          const auto pd = check_pd(chain, sigmas[i], table[i]);
          if (!pd.holds) {
            broken = "on sigma " + format_relation(sigmas[i]) + " " + describe(pd);
          }
        }
      }
      for (std::size_t p = 0; p < coordinated_pairs.size() && !broken; ++p) {
        const auto& pr = coordinated_pairs[p];
        const Unit pair_unit{chain, sigmas[pr.first], sigmas[pr.second]};
        const auto op = pair_operator(sigmas[pr.first], table[pr.first], sigmas[pr.joint],
                                      table[pr.joint]);
        if (auto report = p3_p4(pair_unit, op)) {
          broken = "on sigma1 " + format_relation(sigmas[pr.first]) + " sigma2 " +
                   format_relation(sigmas[pr.second]) + " " + describe(*report);
        }
      }
      bool induced_by_decisive = false;
      for (std::size_t di = 0; di < as.size() && !induced_by_decisive; ++di) {
        induced_by_decisive = as[di].decisive() && tables[di] == table;
      }
      const bool satisfies = !broken.has_value();
      if (satisfies != induced_by_decisive) {
        return fail(u, as[ai],
                    satisfies ? "satisfies PD and P2-P4 but no decisive assignment induces it"
                              : "induced by a decisive assignment but " + *broken);
      }
    }
    return std::nullopt;
  }

  Suite suite_;
  std::size_t checks_ = 0;
  std::map<std::size_t, std::vector<Relation>> pools_;
  std::map<std::size_t, std::vector<PreferenceAssignment>> assignments_;
};

// Restriction of a unit to the items in `keep`, renumbered densely.
Unit restrict(const Unit& unit, std::uint64_t keep) {
  const std::size_t n = unit.chain.universe();
  std::vector<Item> remap(n, n);
  std::size_t next = 0;
  for (Item i = 0; i < n; ++i) {
    if ((keep >> i) & 1U) {
      remap[i] = next++;
    }
  }
  std::vector<Item> seq;
  for (Item i : unit.chain.sequence()) {
    if (remap[i] != n) {
      seq.push_back(remap[i]);
    }
  }
  auto project = [&](const Relation& r) {
    Relation out(next);
    for (const auto& c : r.pairs()) {
      if (remap[c.better] != n && remap[c.worse] != n) {
        out.insert(remap[c.better], remap[c.worse]);
      }
    }
    return out;
  };
  Unit out{Chain::from_sequence(next, std::move(seq)), project(unit.sigma), std::nullopt};
  if (unit.sigma2) {
    out.sigma2 = project(*unit.sigma2);
  }
  return out;
}

// Smallest-universe restriction that still fails; the original failure if
// none does.
SuiteFailure shrink(SuiteRunner& runner, const Unit& unit, SuiteFailure failure) {
  const std::size_t n = unit.chain.universe();
  if (n <= 1 || n > 12) {
    return failure;
  }
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (int size = 1; size < static_cast<int>(n); ++size) {
    for (std::uint64_t keep = 1; keep < full; ++keep) {
      if (std::popcount(keep) != size) {
        continue;
      }
      const Unit smaller = restrict(unit, keep);
      if (auto f = runner.check(smaller)) {
        return *f;
      }
    }
  }
  return failure;
}

class Sampler {
 public:
  Sampler(std::uint64_t seed, std::size_t n, bool full_only, SuiteRunner& runner)
      : rng_(seed), n_(n), full_only_(full_only), runner_(runner) {}

  Chain chain() {
    std::vector<Item> items;
    while (items.empty()) {
      items.clear();
      for (Item i = 0; i < n_; ++i) {
        if (full_only_ || coin_(rng_)) {
          items.push_back(i);
        }
      }
    }
    std::shuffle(items.begin(), items.end(), rng_);
    return Chain::from_sequence(n_, std::move(items));
  }

  Relation spo() {
    if (n_ <= 5) {
      const auto& all = runner_.pool(n_);
      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
      return all[pick(rng_)];
    }
    // Random DAG along a random permutation, closed.
    std::vector<Item> order(n_);
    std::iota(order.begin(), order.end(), Item{0});
    std::shuffle(order.begin(), order.end(), rng_);
    std::bernoulli_distribution edge(0.3);
    Relation r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (edge(rng_)) {
          r.insert(order[i], order[j]);
        }
      }
    }
    return transitive_closure(r);
  }

  std::pair<Relation, Relation> valid_pair() {
    const Relation first = spo();
    for (int attempt = 0; attempt < 1000; ++attempt) {
      Relation second = spo();
      if (is_valid_pair(first, second)) {
        return {first, second};
      }
    }
    return {first, Relation(n_)};
  }

 private:
  std::mt19937_64 rng_;
  std::bernoulli_distribution coin_{0.5};
  std::size_t n_;
  bool full_only_;
  SuiteRunner& runner_;
};

}  // namespace

SuiteResult run_property_suite(const InstanceSpace& space, Suite suite, std::size_t max_witnesses) {
  validate_universe(space.n);
  const UnitKind kind = unit_kind(suite);
  if (space.samples == 0) {
    if (space.n > 5) {
      throw GuardExceeded("exhaustive suites support n <= 5; use sampling");
    }
    if ((kind == UnitKind::Pair || suite == Suite::Decisive) && space.n > 4) {
      throw GuardExceeded(std::string(to_string(suite)) + " is exhaustive only for n <= 4");
    }
  } else if (kind != UnitKind::Pair && suite != Suite::RevealedOrder && space.n > 5) {
    throw GuardExceeded(std::string(to_string(suite)) + " supports n <= 5");
  } else if (space.n > 6) {
    throw GuardExceeded(std::string(to_string(suite)) + " supports n <= 6");
  }

  SuiteRunner runner(suite);
  SuiteResult result;
  result.suite = suite;
  result.space = space;

  std::vector<std::pair<Unit, SuiteFailure>> failing;
  constexpr std::size_t kShrinkBudget = 64;
  auto visit = [&](const Unit& unit) {
    ++result.instances;
    if (auto f = runner.check(unit)) {
      ++result.failure_count;
      if (failing.size() < kShrinkBudget) {
        failing.emplace_back(unit, std::move(*f));
      }
    }
  };

  if (space.samples == 0) {
    const auto chains = enumerate_chains(space.n, space.full_chains_only);
    const auto& sigmas = runner.pool(space.n);
    for (const auto& chain : chains) {
      const Relation empty(space.n);
      switch (kind) {
        case UnitKind::ChainOnly:
          visit({chain, empty, std::nullopt});
          break;
        case UnitKind::Single:
          for (const auto& sigma : sigmas) {
            visit({chain, sigma, std::nullopt});
          }
          break;
        case UnitKind::Pair:
          for (const auto& s1 : sigmas) {
            for (const auto& s2 : sigmas) {
              if (is_valid_pair(s1, s2)) {
                visit({chain, s1, s2});
              }
            }
          }
          break;
      }
    }
  } else {
    Sampler sampler(space.seed, space.n, space.full_chains_only, runner);
    for (std::size_t s = 0; s < space.samples; ++s) {
      Chain chain = sampler.chain();
      switch (kind) {
        case UnitKind::ChainOnly:
          visit({chain, Relation(space.n), std::nullopt});
          break;
        case UnitKind::Single:
          visit({chain, sampler.spo(), std::nullopt});
          break;
        case UnitKind::Pair: {
          auto [s1, s2] = sampler.valid_pair();
          visit({chain, s1, s2});
          break;
        }
      }
    }
  }

  std::map<std::string, SuiteFailure> unique;
  for (auto& [unit, failure] : failing) {
    SuiteFailure shrunk = shrink(runner, unit, std::move(failure));
    std::string key = std::to_string(shrunk.chain.universe()) + " " + shrunk.describe();
    unique.emplace(std::move(key), std::move(shrunk));
  }
  for (auto& [key, failure] : unique) {
    if (result.failures.size() >= max_witnesses) {
      break;
    }
    result.failures.push_back(std::move(failure));
  }
  result.checks = runner.checks();
  return result;
}

}  // namespace prefrev
