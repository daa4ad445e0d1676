#include "prefrev/format.hpp"

#include <cctype>

namespace prefrev {

std::string label_of(Item item, const Labels& labels) {
  if (labels.empty()) {
    return std::to_string(item + 1);
  }
  return labels.at(item);
}

std::string format_comparison(Comparison c, const Labels& labels) {
  return "(" + label_of(c.better, labels) + "," + label_of(c.worse, labels) + ")";
}

std::string format_relation(const Relation& r, const Labels& labels) {
  std::string out = "{";
  bool first = true;
  for (const auto& c : r.pairs()) {
    if (!first) {
      out += ",";
    }
    first = false;
    out += format_comparison(c, labels);
  }
  return out + "}";
}

std::string format_chain(const Chain& chain, const Labels& labels) {
  std::string out = "(";
  for (std::size_t i = 0; i < chain.sequence().size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += label_of(chain.sequence()[i], labels);
  }
  return out + ")";
}

std::string format_assignment(const Chain& chain, const PreferenceAssignment& assignment,
                              const Labels& labels) {
  std::string out = "[";
  for (std::size_t i = 0; i < assignment.levels().size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += "{";
    for (std::size_t j = 0; j < assignment.levels()[i].size(); ++j) {
      if (j > 0) {
        out += ",";
      }
      out += format_comparison(chain.comparison(assignment.levels()[i][j]), labels);
    }
    out += "}";
  }
  return out + "]";
}

namespace {

Item resolve(std::string_view token, std::size_t universe, const Labels& labels) {
  if (labels.empty()) {
    std::size_t value = 0;
    if (token.empty()) {
      throw InvalidInput("empty item in pair list");
    }
    for (char ch : token) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw InvalidInput("item '" + std::string(token) + "' is not a number");
      }
      value = value * 10 + static_cast<std::size_t>(ch - '0');
      if (value > universe) {
        break;
      }
    }
    if (value == 0 || value > universe) {
      throw InvalidInput("item '" + std::string(token) + "' outside 1.." + std::to_string(universe));
    }
    return value - 1;
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == token) {
      return i;
    }
  }
  throw InvalidInput("unknown item label '" + std::string(token) + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Relation parse_relation(std::string_view text, std::size_t universe, const Labels& labels) {
  Relation out(universe);
  std::size_t pos = 0;
  auto skip_separators = [&] {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',' ||
            text[pos] == '{' || text[pos] == '}')) {
      ++pos;
    }
  };
  skip_separators();
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw InvalidInput("expected '(' at offset " + std::to_string(pos) + " of pair list");
    }
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) {
      throw InvalidInput("unterminated pair at offset " + std::to_string(pos));
    }
    const std::string_view body = text.substr(pos + 1, close - pos - 1);
    const std::size_t comma = body.find(',');
    if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos) {
      throw InvalidInput("pair at offset " + std::to_string(pos) + " must have exactly two items");
    }
    out.insert(resolve(trim(body.substr(0, comma)), universe, labels),
               resolve(trim(body.substr(comma + 1)), universe, labels));
    pos = close + 1;
    skip_separators();
  }
  return out;
}

}  // namespace prefrev
