#pragma once

#include <compare>
#include <string>
#include <vector>

namespace dlp {

using Tuple = std::vector<std::string>;

/// A ground atom p(c1, ..., cn) over program predicates and constants.
struct GroundAtom {
  std::string predicate;
  Tuple args;

  std::string to_string() const;

  friend auto operator<=>(const GroundAtom&, const GroundAtom&) = default;
  friend bool operator==(const GroundAtom&, const GroundAtom&) = default;
};

/// Renders `name(a,b)`, or just `name` for an empty tuple.
std::string format_application(const std::string& name, const Tuple& args);

/// Every tuple of the given arity over `constants`, in lexicographic order.
std::vector<Tuple> all_tuples(const std::vector<std::string>& constants, std::size_t arity);

}  // namespace dlp
