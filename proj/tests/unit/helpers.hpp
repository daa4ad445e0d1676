#pragma once

#include <doctest.h>

#include <initializer_list>
#include <string_view>
#include <vector>

#include "prefrev/format.hpp"
#include "prefrev/order.hpp"

// Tests write items 1-based, as they are printed.
namespace testing {

inline prefrev::Relation rel(std::size_t n, std::string_view pairs) {
  return prefrev::parse_relation(pairs, n);
}

inline prefrev::Chain chain(std::size_t n, std::initializer_list<std::size_t> items) {
  std::vector<prefrev::Item> seq;
  for (std::size_t i : items) {
    seq.push_back(i - 1);
  }
  return prefrev::Chain::from_sequence(n, seq);
}

inline prefrev::Chain chain(std::initializer_list<std::size_t> items) {
  return chain(items.size(), items);
}

}  // namespace testing

namespace doctest {
template <>
struct StringMaker<prefrev::Relation> {
  static String convert(const prefrev::Relation& r) {
    return prefrev::format_relation(r).c_str();
  }
};
}  // namespace doctest
