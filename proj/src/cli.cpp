#include "prefrev/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "prefrev/oracle.hpp"
#include "prefrev/postulates.hpp"

namespace prefrev {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Instance documents

namespace {

class DocumentParser {
 public:
  explicit DocumentParser(const json& root) : root_(root) {}

  InstanceDocument parse() {
    if (!root_.is_object()) {
      throw InvalidInput("document: expected a JSON object");
    }
    for (const auto& [key, value] : root_.items()) {
      if (key != "items" && key != "chain" && key != "sigma" && key != "sigma2" &&
          key != "assignment") {
        throw InvalidInput(key + ": unknown field");
      }
    }
    parse_items();
    Chain chain = parse_chain();
    Relation sigma = parse_pairs("sigma", true);
    if (!is_spo(sigma)) {
      throw InvalidInput("sigma: not a strict partial order");
    }
    std::optional<Relation> sigma2;
    if (root_.contains("sigma2")) {
      sigma2 = parse_pairs("sigma2", true);
      if (!is_spo(*sigma2)) {
        throw InvalidInput("sigma2: not a strict partial order");
      }
    }
    std::optional<PreferenceAssignment> assignment;
    if (root_.contains("assignment")) {
      assignment = parse_assignment(chain);
    }
    return {labels_, std::move(chain), std::move(sigma), std::move(sigma2), std::move(assignment)};
  }

 private:
  static std::string label_text(const json& value, const std::string& path) {
    if (value.is_string()) {
      return value.get<std::string>();
    }
    if (value.is_number_integer()) {
      return std::to_string(value.get<long long>());
    }
    throw InvalidInput(path + ": expected a string or integer label");
  }

  void parse_items() {
    if (!root_.contains("items")) {
      throw InvalidInput("items: missing");
    }
    const json& items = root_.at("items");
    if (!items.is_array() || items.empty()) {
      throw InvalidInput("items: expected a non-empty array");
    }
    if (items.size() > kMaxItems) {
      throw InvalidInput("items: at most " + std::to_string(kMaxItems) + " items supported");
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
      const std::string path = "items[" + std::to_string(i) + "]";
      std::string label = label_text(items[i], path);
      if (label.empty() || label.find_first_of("(),{} \t\r\n") != std::string::npos) {
        throw InvalidInput(path + ": label '" + label +
                           "' must be non-empty without spaces, commas, parentheses or braces");
      }
      if (index_.count(label) > 0) {
        throw InvalidInput(path + ": duplicate label '" + label + "'");
      }
      index_.emplace(label, i);
      labels_.push_back(std::move(label));
    }
  }

  Item lookup(const json& value, const std::string& path) const {
    const std::string label = label_text(value, path);
    const auto it = index_.find(label);
    if (it == index_.end()) {
      throw InvalidInput(path + ": unknown label '" + label + "'");
    }
    return it->second;
  }

  Chain parse_chain() {
    if (!root_.contains("chain")) {
      throw InvalidInput("chain: missing");
    }
    const json& chain = root_.at("chain");
    if (!chain.is_array() || chain.empty()) {
      throw InvalidInput("chain: expected a non-empty array of labels");
    }
    std::vector<Item> seq;
    std::vector<bool> seen(labels_.size(), false);
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const std::string path = "chain[" + std::to_string(i) + "]";
      const Item item = lookup(chain[i], path);
      if (seen[item]) {
        throw InvalidInput(path + ": label '" + labels_[item] + "' repeated");
      }
      seen[item] = true;
      seq.push_back(item);
    }
    return Chain::from_sequence(labels_.size(), std::move(seq));
  }

  Comparison parse_pair(const json& value, const std::string& path) const {
    if (value.is_array()) {
      if (value.size() != 2) {
        throw InvalidInput(path + ": a pair needs exactly two labels");
      }
      return {lookup(value[0], path + "[0]"), lookup(value[1], path + "[1]")};
    }
    if (value.is_string()) {
      try {
        const Relation r = parse_relation(value.get<std::string>(), labels_.size(), labels_);
        const auto pairs = r.pairs();
        if (pairs.size() != 1) {
          throw InvalidInput("expected exactly one pair");
        }
        return pairs.front();
      } catch (const InvalidInput& e) {
        throw InvalidInput(path + ": " + e.what());
      }
    }
    throw InvalidInput(path + ": expected [better, worse] or \"(better,worse)\"");
  }

  Relation parse_pairs(const std::string& field, bool required) const {
    Relation out(labels_.size());
    if (!root_.contains(field)) {
      if (required) {
        throw InvalidInput(field + ": missing");
      }
      return out;
    }
    const json& pairs = root_.at(field);
    if (!pairs.is_array()) {
      throw InvalidInput(field + ": expected an array of pairs");
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      out.insert(parse_pair(pairs[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
  }

  PreferenceAssignment parse_assignment(const Chain& chain) const {
    const json& value = root_.at("assignment");
    if (value.is_string()) {
      const std::string keyword = value.get<std::string>();
      if (keyword == "trivial") {
        return trivial_assignment(chain);
      }
      if (keyword == "lex") {
        return lex_assignment(chain);
      }
      throw InvalidInput("assignment: unknown keyword '" + keyword + "' (use trivial or lex)");
    }
    if (!value.is_array()) {
      throw InvalidInput("assignment: expected \"trivial\", \"lex\" or a list of levels");
    }
    const std::size_t m = chain.comparison_count();
    std::vector<std::vector<std::size_t>> levels;
    std::vector<bool> placed(m, false);
    for (std::size_t i = 0; i < value.size(); ++i) {
      const std::string level_path = "assignment[" + std::to_string(i) + "]";
      if (!value[i].is_array() || value[i].empty()) {
        throw InvalidInput(level_path + ": expected a non-empty list of pairs");
      }
      std::vector<std::size_t> level;
      for (std::size_t j = 0; j < value[i].size(); ++j) {
        const std::string path = level_path + "[" + std::to_string(j) + "]";
        const Comparison c = parse_pair(value[i][j], path);
        std::size_t k = 0;
        while (k < m && chain.comparison(k) != c) {
          ++k;
        }
        if (k == m) {
          throw InvalidInput(path + ": " + format_comparison(c, labels_) +
                             " is not a direct comparison of the chain");
        }
        if (placed[k]) {
          throw InvalidInput(path + ": " + format_comparison(c, labels_) + " listed twice");
        }
        placed[k] = true;
        level.push_back(k);
      }
      levels.push_back(std::move(level));
    }
    for (std::size_t k = 0; k < m; ++k) {
      if (!placed[k]) {
        throw InvalidInput("assignment: direct comparison " +
                           format_comparison(chain.comparison(k), labels_) + " is not ranked");
      }
    }
    return PreferenceAssignment(m, std::move(levels));
  }

  const json& root_;
  Labels labels_;
  std::map<std::string, Item> index_;
};

}  // namespace

InstanceDocument parse_instance(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("document: ") + e.what());
  }
  return DocumentParser(root).parse();
}

std::string render_dot(const Relation& r, const Labels& labels, std::string_view name) {
  const std::size_t n = r.universe();
  std::ostringstream dot;
  dot << "digraph " << name << " {\n";
  for (Item i = 0; i < n; ++i) {
    dot << "  n" << i << " [label=\"" << label_of(i, labels) << "\"];\n";
  }
  for (const auto& c : r.pairs()) {
    bool implied = false;
    for (Item mid = 0; mid < n && !implied; ++mid) {
      implied = mid != c.better && mid != c.worse && r.contains(c.better, mid) &&
                r.contains(mid, c.worse);
    }
    dot << "  n" << c.better << " -> n" << c.worse;
    if (implied) {
      dot << " [style=dotted]";
    }
    dot << ";\n";
  }
  dot << "}\n";
  return dot.str();
}

// ---------------------------------------------------------------------------
// Commands

namespace {

enum class Format { Text, Json };

struct Options {
  std::string input = "-";
  Format format = Format::Text;
  // revise
  bool trace = false;
  std::string dot_path;
  // check / coordination
  std::string sigma2;
  bool p1 = false, p2 = false, p3 = false, p4 = false, pd = false;
  // enumerate
  bool decisive = false;
  // verify
  std::vector<std::string> suites;
  std::size_t n = 3;
  std::uint64_t seed = InstanceSpace{}.seed;
  std::size_t samples = 0;
  bool full_chains_only = false;
  std::size_t max_witnesses = 10;
};

class Runner {
 public:
  Runner(const Options& opts, std::ostream& out, std::istream& in)
      : opts_(opts), out_(out), in_(in) {}

  int revise_cmd() {
    const InstanceDocument doc = load();
    const PreferenceAssignment a = require_assignment(doc);
    const RevisionTrace trace = add_fixpoint(doc.chain, doc.sigma, a);
    const Labels& L = doc.labels;

    if (!opts_.dot_path.empty()) {
      std::ofstream dot(opts_.dot_path);
      if (!dot) {
        throw InvalidInput("--dot: cannot write '" + opts_.dot_path + "'");
      }
      dot << render_dot(trace.result, L);
    }

    if (json_) {
      json steps = json::array();
      for (const auto& step : trace.steps) {
        json s = {{"level", step.level + 1},
                  {"comparisons", level_json(doc, a.levels()[step.level])},
                  {"attempted", relation_json(step.attempted, L)},
                  {"accepted", step.accepted}};
        if (opts_.trace) {
          s["state"] = relation_json(step.state, L);
        }
        steps.push_back(std::move(s));
      }
      emit({{"command", "revise"},
            {"verdict", "ok"},
            {"result", relation_json(trace.result, L)},
            {"trace", {{"base", relation_json(trace.base, L)}, {"levels", std::move(steps)}}}});
      return 0;
    }
    out_ << "add^0: " << format_relation(trace.base, L) << "\n";
    for (const auto& step : trace.steps) {
      out_ << "level " << step.level + 1 << " " << level_text(doc, a.levels()[step.level])
           << ": " << (step.accepted ? "accepted" : "rejected");
      if (step.attempted.empty()) {
        out_ << " (nothing contested)";
      } else {
        out_ << " (contested " << format_relation(step.attempted, L) << ")";
      }
      out_ << "\n";
      if (opts_.trace) {
        out_ << "  state: " << format_relation(step.state, L) << "\n";
      }
    }
    out_ << "add^*: " << format_relation(trace.result, L) << "\n";
    return 0;
  }

  int check_cmd() {
    const InstanceDocument doc = load();
    const PreferenceAssignment a = require_assignment(doc);
    const std::optional<Relation> sigma2 = second_preference(doc);
    const Labels& L = doc.labels;

    std::vector<Postulate> wanted;
    if (opts_.p1) wanted.push_back(Postulate::P1);
    if (opts_.p2) wanted.push_back(Postulate::P2);
    if (opts_.p3) wanted.push_back(Postulate::P3);
    if (opts_.p4) wanted.push_back(Postulate::P4);
    if (opts_.pd) wanted.push_back(Postulate::PD);
    if (wanted.empty()) {
      wanted = {Postulate::P1, Postulate::P2};
      if (sigma2) {
        wanted.push_back(Postulate::P3);
        wanted.push_back(Postulate::P4);
      }
    }

    const RevisionOperator op = induced_operator(a);
    const Relation result = op(doc.chain, doc.sigma);
    std::vector<PostulateReport> reports;
    for (Postulate p : wanted) {
      switch (p) {
        case Postulate::P1:
          reports.push_back(check_p1(doc.chain, doc.sigma, result));
          break;
        case Postulate::P2:
          reports.push_back(check_p2(doc.chain, doc.sigma, result));
          break;
        case Postulate::PD:
          reports.push_back(check_pd(doc.chain, doc.sigma, result));
          break;
        case Postulate::P3:
        case Postulate::P4:
          if (!sigma2) {
            throw InvalidInput(std::string(to_string(p)) +
                               " needs a second preference (sigma2 field or --sigma2)");
          }
          reports.push_back(p == Postulate::P3 ? check_p3(doc.chain, doc.sigma, *sigma2, op)
                                               : check_p4(doc.chain, doc.sigma, *sigma2, op));
          break;
      }
    }

    bool all_hold = true;
    json verdicts = json::array();
    for (const auto& r : reports) {
      all_hold = all_hold && r.holds;
      if (json_) {
        json entry = {{"postulate", to_string(r.postulate)}, {"holds", r.holds}};
        if (r.witness) {
          entry["witness"] = {{"offending", relation_json(r.witness->offending, L)},
                              {"note", r.witness->note}};
        }
        verdicts.push_back(std::move(entry));
      } else {
        out_ << to_string(r.postulate) << ": " << (r.holds ? "holds" : "fails");
        if (r.witness) {
          out_ << " - " << r.witness->note << "; witness "
               << format_relation(r.witness->offending, L);
        }
        out_ << "\n";
      }
    }
    if (json_) {
      emit({{"command", "check"},
            {"verdict", all_hold ? "holds" : "fails"},
            {"result", relation_json(result, L)},
            {"witness", std::move(verdicts)}});
    }
    return all_hold ? 0 : 1;
  }

  int coordination_cmd() {
    const InstanceDocument doc = load();
    const std::optional<Relation> sigma2 = second_preference(doc);
    if (!sigma2) {
      throw InvalidInput("coordination needs a second preference (sigma2 field or --sigma2)");
    }
    const CoordinationResult r = is_coordinated(doc.chain, doc.sigma, *sigma2);
    const Labels& L = doc.labels;
    if (json_) {
      json out = {{"command", "coordination"},
                  {"verdict", r.coordinated ? "coordinated" : "not coordinated"}};
      if (r.witness) {
        out["witness"] = {{"delta", relation_json(r.witness->delta, L)},
                          {"reason", r.witness->reason}};
      }
      emit(out);
    } else {
      out_ << (r.coordinated ? "coordinated" : "not coordinated") << "\n";
      if (r.witness) {
        out_ << "witness delta: " << format_relation(r.witness->delta, L) << " ("
             << r.witness->reason << ")\n";
      }
    }
    return r.coordinated ? 0 : 1;
  }

  int reveal_cmd() {
    const InstanceDocument doc = load();
    const PreferenceAssignment a = require_assignment(doc);
    const RevealedRelation revealed = revealed_relation(doc.chain, induced_operator(a));
    const auto levels = revealed.as_assignment();
    const auto violation = revealed.transitivity_violation();
    const Labels& L = doc.labels;
    auto comparison_name = [&](std::size_t k) {
      return format_comparison(doc.chain.comparison(k), L);
    };

    std::string verdict = "total preorder";
    json witness = nullptr;
    if (!revealed.total()) {
      verdict = "not total";
    } else if (violation) {
      verdict = "not transitive";
      witness = json::array(
          {comparison_name((*violation)[0]), comparison_name((*violation)[1]),
           comparison_name((*violation)[2])});
    }
    if (json_) {
      json out = {{"command", "reveal"}, {"verdict", verdict}, {"witness", witness}};
      if (levels) {
        out["result"] = assignment_json(doc, *levels);
      }
      emit(out);
    } else if (levels) {
      out_ << "revealed levels: " << format_assignment(doc.chain, *levels, L) << "\n";
    } else {
      out_ << "revealed relation is " << verdict;
      if (violation) {
        out_ << ": " << comparison_name((*violation)[0]) << " <= "
             << comparison_name((*violation)[1]) << " <= " << comparison_name((*violation)[2])
             << " but not " << comparison_name((*violation)[0])
             << " <= " << comparison_name((*violation)[2]);
      }
      out_ << "\n";
    }
    return levels ? 0 : 1;
  }

  int enumerate_cmd() {
    const InstanceDocument doc = load();
    const auto found = opts_.decisive ? decisive_completions(doc.chain, doc.sigma)
                                      : completions(doc.chain, doc.sigma);
    if (json_) {
      json list = json::array();
      for (const auto& r : found) {
        list.push_back(relation_json(r, doc.labels));
      }
      emit({{"command", "enumerate"},
            {"verdict", "ok"},
            {"result", std::move(list)}});
    } else {
      out_ << found.size() << (opts_.decisive ? " decisive" : "") << " completion"
           << (found.size() == 1 ? "" : "s") << "\n";
      for (const auto& r : found) {
        out_ << format_relation(r, doc.labels) << "\n";
      }
    }
    return 0;
  }

  int verify_cmd() {
    std::vector<Suite> suites;
    if (opts_.suites.empty()) {
      suites = all_suites();
    } else {
      for (const auto& name : opts_.suites) {
        suites.push_back(parse_suite(name));
      }
    }
    std::vector<bool> chain_modes = {true};
    if (!opts_.full_chains_only) {
      chain_modes.push_back(false);
    }

    bool all_passed = true;
    json reports = json::array();
    for (Suite suite : suites) {
      for (bool full : chain_modes) {
        InstanceSpace space;
        space.n = opts_.n;
        space.full_chains_only = full;
        space.samples = opts_.samples;
        space.seed = opts_.seed;
        const SuiteResult r = run_property_suite(space, suite, opts_.max_witnesses);
        all_passed = all_passed && r.passed();
        if (json_) {
          json failures = json::array();
          for (const auto& f : r.failures) {
            failures.push_back(f.describe());
          }
          reports.push_back({{"suite", to_string(suite)},
                             {"n", space.n},
                             {"chains", full ? "full" : "subsets"},
                             {"samples", space.samples},
                             {"seed", space.seed},
                             {"instances", r.instances},
                             {"checks", r.checks},
                             {"failures", r.failure_count},
                             {"passed", r.passed()},
                             {"witness", std::move(failures)}});
        } else {
          out_ << to_string(suite) << " n=" << space.n << " chains=" << (full ? "full" : "subsets")
               << (space.samples == 0 ? " exhaustive"
                                      : " samples=" + std::to_string(space.samples) +
                                            " seed=" + std::to_string(space.seed))
               << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.instances
               << " instances, " << r.checks << " checks, " << r.failure_count
               << " failing)\n";
          for (const auto& f : r.failures) {
            out_ << "  " << f.describe() << "\n";
          }
        }
      }
    }
    if (json_) {
      emit({{"command", "verify"},
            {"verdict", all_passed ? "pass" : "fail"},
            {"result", std::move(reports)}});
    }
    return all_passed ? 0 : 1;
  }

  void set_json(bool j) { json_ = j; }

 private:
  InstanceDocument load() {
    std::string text;
    if (opts_.input == "-") {
      text.assign(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
    } else {
      std::ifstream file(opts_.input, std::ios::binary);
      if (!file) {
        throw InvalidInput("cannot read instance file '" + opts_.input + "'");
      }
      text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    return parse_instance(text);
  }

  static PreferenceAssignment require_assignment(const InstanceDocument& doc) {
    if (!doc.assignment) {
      throw InvalidInput("assignment: required for this command");
    }
    return *doc.assignment;
  }

  std::optional<Relation> second_preference(const InstanceDocument& doc) const {
    if (!opts_.sigma2.empty()) {
      try {
        Relation r = parse_relation(opts_.sigma2, doc.labels.size(), doc.labels);
        if (!is_spo(r)) {
          throw InvalidInput("not a strict partial order");
        }
        return r;
      } catch (const InvalidInput& e) {
        throw InvalidInput(std::string("--sigma2: ") + e.what());
      }
    }
    return doc.sigma2;
  }

  static json relation_json(const Relation& r, const Labels& labels) {
    json out = json::array();
    for (const auto& c : r.pairs()) {
      out.push_back({label_of(c.better, labels), label_of(c.worse, labels)});
    }
    return out;
  }

  static json level_json(const InstanceDocument& doc, const std::vector<std::size_t>& level) {
    json out = json::array();
    for (std::size_t k : level) {
      const Comparison c = doc.chain.comparison(k);
      out.push_back({label_of(c.better, doc.labels), label_of(c.worse, doc.labels)});
    }
    return out;
  }

  static json assignment_json(const InstanceDocument& doc, const PreferenceAssignment& a) {
    json out = json::array();
    for (const auto& level : a.levels()) {
      out.push_back(level_json(doc, level));
    }
    return out;
  }

  static std::string level_text(const InstanceDocument& doc, const std::vector<std::size_t>& level) {
    std::string out = "{";
    for (std::size_t i = 0; i < level.size(); ++i) {
      out += (i > 0 ? "," : "") + format_comparison(doc.chain.comparison(level[i]), doc.labels);
    }
    return out + "}";
  }

  void emit(const json& j) { out_ << j.dump(2) << "\n"; }

  const Options& opts_;
  std::ostream& out_;
  std::istream& in_;
  bool json_ = false;
};

}  // namespace

int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err,
                std::istream& in) {
  Options opts;
  std::string format = "text";

  CLI::App app{"Revise chain preferences by strict partial orders and test revision postulates",
               "prefrev"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", opts.input, "Instance file (JSON); '-' or omitted reads stdin");
  };

  auto* revise = app.add_subcommand("revise", "Revise the chain by sigma and print the level decisions");
  add_input(revise);
  revise->add_flag("--trace", opts.trace, "Print the running state after every level");
  revise->add_option("--dot", opts.dot_path, "Write the result as a Graphviz file");

  auto* check = app.add_subcommand("check", "Check postulates for the operator of the assignment");
  add_input(check);
  check->add_option("--sigma2", opts.sigma2, "Second preference, e.g. \"(3,1),(2,1)\"");
  check->add_flag("--p1", opts.p1, "Check P1");
  check->add_flag("--p2", opts.p2, "Check P2");
  check->add_flag("--p3", opts.p3, "Check P3 (needs a second preference)");
  check->add_flag("--p4", opts.p4, "Check P4 (needs a second preference)");
  check->add_flag("--pd", opts.pd, "Check PD");

  auto* coordination = app.add_subcommand("coordination", "Decide whether sigma and sigma2 are coordinated");
  add_input(coordination);
  coordination->add_option("--sigma2", opts.sigma2, "Second preference");

  auto* reveal = app.add_subcommand("reveal", "Reconstruct the preorder revealed by the operator");
  add_input(reveal);

  auto* enumerate = app.add_subcommand("enumerate", "List the completions of the chain by sigma");
  add_input(enumerate);
  enumerate->add_flag("--decisive", opts.decisive, "Only completions that keep a direct comparison");

  auto* verify = app.add_subcommand("verify", "Run property suites over enumerated or sampled instances");
  verify->add_option("--suite", opts.suites, "Suite name (repeatable); default all")
      ->check(CLI::IsMember({"p1-p2", "coordination", "revealed-order", "roundtrip", "decisive",
                             "trivial-lex", "oracle"}));
  verify->add_option("--n", opts.n, "Universe size")->check(CLI::Range(1, 64));
  verify->add_option("--seed", opts.seed, "Seed for sampled runs");
  verify->add_option("--samples", opts.samples, "Random instances per suite; 0 = exhaustive");
  verify->add_flag("--full-chains-only", opts.full_chains_only,
                   "Skip chains over proper subsets of the universe");
  verify->add_option("--max-witnesses", opts.max_witnesses, "Witnesses printed per suite");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("prefrev");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) {
    argv.push_back(a.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  opts.format = format == "json" ? Format::Json : Format::Text;

  Runner runner(opts, out, in);
  runner.set_json(opts.format == Format::Json);
  try {
    if (revise->parsed()) return runner.revise_cmd();
    if (check->parsed()) return runner.check_cmd();
    if (coordination->parsed()) return runner.coordination_cmd();
    if (reveal->parsed()) return runner.reveal_cmd();
    if (enumerate->parsed()) return runner.enumerate_cmd();
    if (verify->parsed()) return runner.verify_cmd();
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace prefrev
