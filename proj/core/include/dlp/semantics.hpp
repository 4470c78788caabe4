#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "dlp/program.hpp"

namespace dlp {

enum class Semantics { Weak, Strong, Canonical };

const char* to_string(Semantics s) noexcept;
std::optional<Semantics> parse_semantics(std::string_view s);

/// Rules of a transform: only positive bodies remain, and every remaining
/// dl-atom is monotonic.
struct PositiveProgram {
  DlProgram program;
  std::vector<Rule> rules;
};

/// sP^I_O: drops rules with an unsatisfied nonmonotonic positive dl-atom or a
/// satisfied negative literal, then strips nonmonotonic dl-atoms and negations.
/// Monotonicity is the semantic verdict of DlProgram::profile.
PositiveProgram strong_transform(const DlProgram& k, const Interpretation& i);

/// wP^I_O: like the strong transform, with every dl-atom treated as nonmonotonic.
PositiveProgram weak_transform(const DlProgram& k, const Interpretation& i);

/// Least fixpoint of γ, iterated simultaneously from the empty set.
Interpretation least_model(const PositiveProgram& p);
Interpretation least_model(const DlProgram& k, const std::vector<Rule>& positive_rules);

bool is_weak_answer_set(const DlProgram& k, const Interpretation& i);
bool is_strong_answer_set(const DlProgram& k, const Interpretation& i);
bool is_answer_set(const DlProgram& k, const Interpretation& i, Semantics s);

/// All answer sets by testing every subset of the Herbrand base, in ascending
/// order. Throws TooLarge when |HB| exceeds limits().max_herbrand.
std::vector<Interpretation> enumerate_answer_sets(const DlProgram& k, Semantics s);

/// Some nonempty M ⊆ I gets no support from I ∖ M. Throws NotSupportedModel
/// when I is not a supported model.
bool is_circular(const DlProgram& k, const Interpretation& i);

}  // namespace dlp
