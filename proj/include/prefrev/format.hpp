#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "prefrev/order.hpp"
#include "prefrev/relation.hpp"
#include "prefrev/revision.hpp"

namespace prefrev {

/// Display names for items. An empty table prints item i as i+1.
using Labels = std::vector<std::string>;

std::string label_of(Item item, const Labels& labels);

/// "(a,b)".
std::string format_comparison(Comparison c, const Labels& labels = {});

/// Canonical form: "{(a,b),(c,d)}" sorted by item-index pair.
std::string format_relation(const Relation& r, const Labels& labels = {});

/// "(a,b,c)".
std::string format_chain(const Chain& chain, const Labels& labels = {});

/// "[{(a,b)},{(b,c),(c,d)}]", best level first.
std::string format_assignment(const Chain& chain, const PreferenceAssignment& assignment,
                              const Labels& labels = {});

/// Inverse of format_relation for a given label table: accepts optional
/// braces, whitespace and commas between "(a,b)" groups. Throws InvalidInput.
Relation parse_relation(std::string_view text, std::size_t universe, const Labels& labels = {});

}  // namespace prefrev
