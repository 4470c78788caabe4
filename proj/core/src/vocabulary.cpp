#include "dlp/vocabulary.hpp"

namespace dlp {

std::string format_application(const std::string& name, const Tuple& args) {
  if (args.empty()) return name;
  std::string out = name + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ",";
    out += args[i];
  }
  return out + ")";
}

std::string GroundAtom::to_string() const { return format_application(predicate, args); }

std::vector<Tuple> all_tuples(const std::vector<std::string>& constants, std::size_t arity) {
  std::vector<Tuple> out{Tuple{}};
  for (std::size_t i = 0; i < arity; ++i) {
    std::vector<Tuple> next;
    next.reserve(out.size() * constants.size());
    for (const auto& t : out)
      for (const auto& c : constants) {
        next.push_back(t);
        next.back().push_back(c);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace dlp
