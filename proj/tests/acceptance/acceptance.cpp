// Acceptance checks, one per criterion. Prints one PASS/FAIL line per
// criterion followed by indented details; exits non-zero if any selected
// criterion fails.
//
//   acceptance                 run all
//   acceptance --criterion 7   run one

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "prefrev/format.hpp"
#include "prefrev/oracle.hpp"
#include "prefrev/postulates.hpp"
#include "prefrev/revision.hpp"

using namespace prefrev;

namespace {

struct Verdict {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, std::string what) {
    pass = pass && ok;
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
};

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string ms(double value) {
  std::ostringstream s;
  s << std::fixed;
  s.precision(value < 1.0 ? 4 : 1);
  s << value << " ms";
  return s.str();
}

Relation rel(std::size_t n, std::string_view text) { return parse_relation(text, n); }

Chain identity_chain(std::size_t n) {
  std::vector<Item> seq(n);
  for (Item i = 0; i < n; ++i) seq[i] = i;
  return Chain::from_sequence(n, seq);
}

// Runs `body` repeatedly and returns the best single-run time.
double best_time(const std::function<void()>& body, int repeats = 50) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto start = Clock::now();
    body();
    best = std::min(best, millis_since(start));
  }
  return best;
}

void report_suite(Verdict& v, const SuiteResult& r, const std::string& label, double elapsed_ms,
                  double budget_ms) {
  v.require(r.passed(), label + ": " + std::to_string(r.instances) + " instances, " +
                            std::to_string(r.checks) + " checks, " +
                            std::to_string(r.failure_count) + " failing");
  if (budget_ms > 0) {
    v.require(elapsed_ms < budget_ms, label + " runtime " + ms(elapsed_ms) + " < " + ms(budget_ms));
  }
  for (std::size_t i = 0; i < r.failures.size() && i < 3; ++i) {
    v.details.push_back("     witness: " + r.failures[i].describe());
  }
}

SuiteResult timed_suite(Suite suite, std::size_t n, std::size_t samples, bool full,
                        double& elapsed_ms) {
  InstanceSpace space;
  space.n = n;
  space.samples = samples;
  space.full_chains_only = full;
  const auto start = Clock::now();
  SuiteResult r = run_property_suite(space, suite, 3);
  elapsed_ms = millis_since(start);
  return r;
}

Verdict completions_of_three_item_chain() {
  Verdict v;
  const Chain pi = identity_chain(3);
  const Relation sigma = rel(3, "(3,1)");
  std::vector<Relation> expected = {transitive_closure(rel(3, "(3,1),(1,2)")),
                                    transitive_closure(rel(3, "(2,3),(3,1)")), rel(3, "(3,1)")};
  std::sort(expected.begin(), expected.end());
  const auto got = completions(pi, sigma);
  std::string listing;
  for (const auto& r : got) listing += format_relation(r) + " ";
  v.require(got == expected, "completions = " + listing);
  const double t = best_time([&] { (void)completions(pi, sigma); });
  v.require(t < 1.0, "runtime " + ms(t) + " < 1 ms");
  return v;
}

Verdict cyclic_and_cycle_free_parts() {
  Verdict v;
  const Chain pi = identity_chain(3);
  const Relation sigma = rel(3, "(3,1)");
  const Relation cyc = cyclic_part(pi, sigma);
  const Relation cf = cycle_free_part(pi, sigma);
  v.require(cyc == rel(3, "(1,2),(2,3)"), "cyc = " + format_relation(cyc));
  v.require(cf.empty(), "cf = " + format_relation(cf));
  const double t = best_time([&] {
    (void)cyclic_part(pi, sigma);
    (void)cycle_free_part(pi, sigma);
  });
  v.require(t < 1.0, "runtime " + ms(t) + " < 1 ms");
  return v;
}

Verdict level_decisions_on_four_items() {
  Verdict v;
  const Chain pi = identity_chain(4);
  const Relation sigma = rel(4, "(3,1)");
  const PreferenceAssignment a(3, {{0}, {1, 2}});
  const RevisionTrace trace = add_fixpoint(pi, sigma, a);
  const Relation expected = rel(4, "(3,1),(1,2),(3,2),(1,4),(2,4),(3,4)");
  v.require(trace.result == expected, "result " + format_relation(trace.result) + " == expected " +
                                          format_relation(expected));
  v.require(trace.steps.size() == 2 && trace.steps[0].accepted, "level 1 accepted");
  v.require(trace.steps.size() == 2 && !trace.steps[1].accepted, "level 2 rejected");
  const double t = best_time([&] { (void)add_fixpoint(pi, sigma, a); });
  v.require(t < 1.0, "runtime " + ms(t) + " < 1 ms");
  return v;
}

Verdict uncoordinated_pair() {
  Verdict v;
  const auto start = Clock::now();
  const Chain pi = identity_chain(4);
  const Relation s1 = rel(4, "(4,1)");
  const Relation s2 = rel(4, "(3,1)");
  const auto coordination = is_coordinated(pi, s1, s2);
  v.require(!coordination.coordinated, "is_coordinated = false");
  v.require(coordination.witness && coordination.witness->delta == rel(4, "(1,2),(2,3)"),
            "witness delta = " +
                (coordination.witness ? format_relation(coordination.witness->delta) : "none"));

  const PreferenceAssignment a(3, {{0}, {1}, {2}});
  const auto op = induced_operator(a);
  const Relation joint = union_plus(s1, s2);
  const Relation lhs = op(pi, joint);
  const Relation rhs = transitive_closure(op(pi, s1) | s2);
  const auto p3 = check_p3(pi, s1, s2, op);
  v.require(!p3.holds && lhs.contains(2, 3) && !rhs.contains(2, 3),
            "P3 fails with (3,4) on the left only (left " + format_relation(lhs) + ")");
  const auto p4 = check_p4(pi, s1, s2, op);
  v.require(!p4.holds && rhs.contains(1, 2) && !lhs.contains(1, 2),
            "P4 fails with (2,3) on the right only (right " + format_relation(rhs) +
                (rhs.has_self_pair() ? ", not a strict partial order" : "") + ")");
  const double t = millis_since(start);
  v.require(t < 10.0, "runtime " + ms(t) + " < 10 ms");
  return v;
}

Verdict choice_inducing_preferences() {
  Verdict v;
  const Relation s13 = choice_inducing_sigma(identity_chain(4), 0, 2);
  const Relation s12 = choice_inducing_sigma(identity_chain(3), 0, 1);
  v.require(s13 == rel(4, "(2,3),(4,1)"), "sigma_{1,3} = " + format_relation(s13));
  v.require(s12 == rel(3, "(3,1)"), "sigma_{1,2} = " + format_relation(s12));
  return v;
}

Verdict trivial_and_lex_operators() {
  Verdict v;
  const Chain pi = identity_chain(3);
  const Relation sigma = rel(3, "(3,1)");
  const Relation t = trivial_operator()(pi, sigma);
  const Relation l = lex_operator()(pi, sigma);
  v.require(t == rel(3, "(3,1)"), "trivial = " + format_relation(t));
  v.require(l == transitive_closure(rel(3, "(3,1),(1,2)")), "lex = " + format_relation(l));
  return v;
}

Verdict completion_and_cycle_free_properties() {
  Verdict v;
  double elapsed = 0;
  const auto r = timed_suite(Suite::CompletionAndCycleFree, 3, 0, true, elapsed);
  v.require(r.instances == 6 * 19, "instances = 6 chains x 19 preferences");
  report_suite(v, r, "P1 and P2, n=3 full chains exhaustive", elapsed, 10'000);
  return v;
}

Verdict coordination_characterises_p3_p4() {
  Verdict v;
  double elapsed = 0;
  const auto exhaustive = timed_suite(Suite::Coordination, 3, 0, true, elapsed);
  report_suite(v, exhaustive, "n=3 full chains exhaustive", elapsed, 60'000);
  const auto sampled = timed_suite(Suite::Coordination, 4, 10'000, true, elapsed);
  report_suite(v, sampled, "n=4 full chains, 10000 seeded samples", elapsed, 0);
  return v;
}

Verdict revealed_relation_is_a_total_preorder() {
  Verdict v;
  for (std::size_t n = 1; n <= 4; ++n) {
    double elapsed = 0;
    const auto r = timed_suite(Suite::RevealedOrder, n, 0, true, elapsed);
    report_suite(v, r, "n=" + std::to_string(n) + " full chains exhaustive", elapsed, 0);
  }
  return v;
}

Verdict roundtrip_through_revealed_preorder() {
  Verdict v;
  for (std::size_t n = 1; n <= 4; ++n) {
    double elapsed = 0;
    const auto r = timed_suite(Suite::Roundtrip, n, 0, true, elapsed);
    report_suite(v, r, "n=" + std::to_string(n) + " full chains exhaustive", elapsed,
                 n == 4 ? 120'000 : 0);
  }
  return v;
}

Verdict trivial_and_lex_postulates() {
  Verdict v;
  for (std::size_t n = 1; n <= 4; ++n) {
    double elapsed = 0;
    const auto r = timed_suite(Suite::TrivialAndLex, n, 0, true, elapsed);
    report_suite(v, r, "n=" + std::to_string(n) + " full chains exhaustive", elapsed, 0);
  }
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  for (std::size_t n = 1; n <= 4; ++n) {
    double elapsed = 0;
    const auto r = timed_suite(Suite::Oracle, n, 0, false, elapsed);
    report_suite(v, r, "n=" + std::to_string(n) + " all chains exhaustive", elapsed, 0);
  }
  double elapsed = 0;
  const auto sampled = timed_suite(Suite::Oracle, 5, 10'000, false, elapsed);
  report_suite(v, sampled, "n=5 all chains, 10000 seeded samples", elapsed, 0);
  return v;
}

struct Criterion {
  int id;
  const char* title;
  Verdict (*run)();
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "completions of (1,2,3) by {(3,1)}", completions_of_three_item_chain},
      {2, "cyclic and cycle-free parts of (1,2,3) by {(3,1)}", cyclic_and_cycle_free_parts},
      {3, "level decisions revising (1,2,3,4) by {(3,1)}", level_decisions_on_four_items},
      {4, "uncoordinated pair {(4,1)}, {(3,1)} breaks P3 and P4", uncoordinated_pair},
      {5, "choice-inducing preferences", choice_inducing_preferences},
      {6, "trivial and lex operators", trivial_and_lex_operators},
      {7, "every induced operator satisfies P1 and P2", completion_and_cycle_free_properties},
      {8, "coordination iff all assignments satisfy P3 and P4", coordination_characterises_p3_p4},
      {9, "revealed relations are total and transitive", revealed_relation_is_a_total_preorder},
      {10, "revealed preorder induces the same operator", roundtrip_through_revealed_preorder},
      {11, "trivial and lex operators satisfy their postulates", trivial_and_lex_postulates},
      {12, "engine agrees with reference revision", oracle_equivalence},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int selected = 0;
  app.add_option("--criterion", selected, "Criterion number; 0 runs all")->check(CLI::Range(0, 12));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (const auto& c : criteria()) {
    if (selected != 0 && c.id != selected) {
      continue;
    }
    const auto start = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed = millis_since(start);
    all_pass = all_pass && v.pass;
    std::cout << "criterion " << c.id << ": " << (v.pass ? "PASS" : "FAIL") << "  " << c.title
              << " (" << ms(elapsed) << ")\n";
    for (const auto& d : v.details) {
      std::cout << "    " << d << "\n";
    }
  }
  return all_pass ? 0 : 1;
}
