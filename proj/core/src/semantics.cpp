#include "dlp/semantics.hpp"

#include <algorithm>

#include "dlp/error.hpp"
#include "dlp/solver.hpp"

namespace dlp {

const char* to_string(Semantics s) noexcept {
  switch (s) {
    case Semantics::Weak: return "weak";
    case Semantics::Strong: return "strong";
    case Semantics::Canonical: return "canonical";
  }
  return "?";
}

std::optional<Semantics> parse_semantics(std::string_view s) {
  if (s == "weak") return Semantics::Weak;
  if (s == "strong") return Semantics::Strong;
  if (s == "canonical") return Semantics::Canonical;
  return std::nullopt;
}

namespace {

PositiveProgram transform(const DlProgram& k, const Interpretation& i, bool strong) {
  PositiveProgram out{k, {}};
  auto keeps_dl = [&](const BodyAtom& b) { return strong && k.profile(b.id).monotonic; };
  for (const auto& r : k.rules()) {
    bool dropped = false;
    Rule t{r.head, {}, {}};
    for (const auto& b : r.pos) {
      if (b.kind == BodyAtom::Kind::Ordinary || keeps_dl(b)) {
        t.pos.push_back(b);
      } else if (!k.satisfies_dl(b.id, i)) {
        dropped = true;
        break;
      }
    }
    if (dropped) continue;
    for (const auto& b : r.neg)
      if (k.satisfies(b, i)) {
        dropped = true;
        break;
      }
    if (!dropped) out.rules.push_back(std::move(t));
  }
  return out;
}

}  // namespace

PositiveProgram strong_transform(const DlProgram& k, const Interpretation& i) { return transform(k, i, true); }
PositiveProgram weak_transform(const DlProgram& k, const Interpretation& i) { return transform(k, i, false); }

Interpretation least_model(const DlProgram& k, const std::vector<Rule>& positive_rules) {
  Interpretation current = k.empty_interpretation();
  for (;;) {
    Interpretation next = k.empty_interpretation();
    for (const auto& r : positive_rules)
      if (k.satisfies_body(r, current)) next.insert(r.head);
    if (next == current) return current;
    current = std::move(next);
  }
}

Interpretation least_model(const PositiveProgram& p) { return least_model(p.program, p.rules); }

bool is_weak_answer_set(const DlProgram& k, const Interpretation& i) {
  return least_model(weak_transform(k, i)) == i;
}

bool is_strong_answer_set(const DlProgram& k, const Interpretation& i) {
  return least_model(strong_transform(k, i)) == i;
}

bool is_answer_set(const DlProgram& k, const Interpretation& i, Semantics s) {
  switch (s) {
    case Semantics::Weak: return is_weak_answer_set(k, i);
    case Semantics::Strong: return is_strong_answer_set(k, i);
    case Semantics::Canonical: return is_canonical_answer_set(k, i);
  }
  return false;
}

std::vector<Interpretation> enumerate_answer_sets(const DlProgram& k, Semantics s) {
  const std::size_t n = k.hb_size();
  if (n > k.limits().max_herbrand)
    throw TooLarge("Herbrand base has " + std::to_string(n) + " atoms (bound " +
                   std::to_string(k.limits().max_herbrand) + ")");
  std::vector<AtomId> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<AtomId>(i);
  std::vector<Interpretation> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    Interpretation i = AtomSet::from_mask(n, all, m);
    if (is_answer_set(k, i, s)) out.push_back(std::move(i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_circular(const DlProgram& k, const Interpretation& i) {
  if (!is_supported_model(k, i)) throw NotSupportedModel(k.format(i) + " is not a supported model");
  const auto members = i.elements();
  if (members.size() > k.limits().max_herbrand)
    throw TooLarge("interpretation has " + std::to_string(members.size()) + " atoms");
  std::vector<const Rule*> applicable;
  for (const auto& r : k.rules())
    if (i.contains(r.head) && k.satisfies_body(r, i)) applicable.push_back(&r);
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << members.size()); ++m) {
    Interpretation part = AtomSet::from_mask(k.hb_size(), members, m);
    Interpretation rest = i - part;
    bool unsupported = true;
    for (const Rule* r : applicable)
      if (part.contains(r->head) && k.satisfies_body(*r, rest)) {
        unsupported = false;
        break;
      }
    if (unsupported) return true;
  }
  return false;
}

}  // namespace dlp
