#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "prefrev/format.hpp"
#include "prefrev/order.hpp"
#include "prefrev/relation.hpp"
#include "prefrev/revision.hpp"

namespace prefrev {

/// A validated instance: items are numbered in order of appearance in "items".
struct InstanceDocument {
  Labels labels;
  Chain chain;
  Relation sigma;
  std::optional<Relation> sigma2;
  std::optional<PreferenceAssignment> assignment;
};

/// Parses the JSON instance schema:
///
///   {"items": ["a", "b", 3], "chain": ["a", "b", 3],
///    "sigma": [["b", "a"], "(3,a)"], "sigma2": [...],
///    "assignment": "trivial" | "lex" | [[["a","b"]], [["b",3]]]}
///
/// Pairs are 2-element arrays or "(x,y)" strings. Throws InvalidInput whose
/// message names the offending field, e.g. "sigma[1][0]: unknown label 'q'".
InstanceDocument parse_instance(std::string_view text);

/// Graphviz rendering of an SPO: covering pairs solid, pairs implied by
/// transitivity dotted.
std::string render_dot(const Relation& r, const Labels& labels, std::string_view name = "result");

/// Entry point of the `prefrev` tool. `args` excludes the program name.
/// Returns 0 when the checked property holds, 1 when it fails, 2 on invalid
/// input.
int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err,
                std::istream& in);

}  // namespace prefrev
