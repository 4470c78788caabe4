#pragma once

#include <compare>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "dlp/program.hpp"

namespace dlp {

/// Leaf of a propositional formula over the program vocabulary.
///  - Ground:  an atom of the Herbrand base (`id`).
///  - Labeled: p_L(c) for the Herbrand atom p(c) = `id` and loop L = `label`.
///  - Dl:      dl-atom `id`, with the predicates in `renamed` read as p_L for L = `label`.
///  - Xi:      the propositional stand-in number `id` for an abstracted dl-atom.
struct PropAtom {
  enum class Kind { Ground, Labeled, Dl, Xi };

  Kind kind = Kind::Ground;
  std::uint32_t id = 0;
  std::vector<AtomId> label;
  std::vector<std::size_t> renamed;

  static PropAtom ground(AtomId a) { return {Kind::Ground, a, {}, {}}; }
  static PropAtom labeled(AtomId a, std::vector<AtomId> loop) { return {Kind::Labeled, a, std::move(loop), {}}; }
  static PropAtom dl(std::size_t dl, std::vector<std::size_t> renamed = {}, std::vector<AtomId> loop = {});
  static PropAtom xi(std::uint32_t index) { return {Kind::Xi, index, {}, {}}; }

  friend auto operator<=>(const PropAtom&, const PropAtom&) = default;
  friend bool operator==(const PropAtom&, const PropAtom&) = default;
};

class Formula {
public:
  enum class Op { True, False, Atom, Not, And, Or, Implies, Iff };

  static Formula truth();
  static Formula falsity();
  static Formula atom(PropAtom a);
  static Formula negation(Formula f);
  /// Empty conjunction is ⊤ and a singleton is its element; likewise for ⊥.
  static Formula conjunction(std::vector<Formula> fs);
  static Formula disjunction(std::vector<Formula> fs);
  static Formula implication(Formula a, Formula b);
  static Formula equivalence(Formula a, Formula b);

  Formula() : Formula(truth()) {}

  Op op() const noexcept;
  const PropAtom& leaf() const;
  const std::vector<Formula>& operands() const noexcept;

  void collect_atoms(std::set<PropAtom>& out) const;
  /// Rebuilds the formula with every leaf replaced by f(leaf).
  Formula map_atoms(const std::function<Formula(const PropAtom&)>& f) const;

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Constant folding plus x ∧ ¬x and x ∨ ¬x among siblings; used for display
/// and tests, never by the solver.
Formula simplify(const Formula& f);

Formula body_atom_formula(const BodyAtom& b);

/// h ↔ ⋁ bodies, for one Herbrand atom; atoms without rules give h ↔ ⊥.
Formula completion_of(const DlProgram& k, AtomId h);
/// One formula per Herbrand atom, in AtomId order.
std::vector<Formula> completion(const DlProgram& k);

/// IF(A, L): A with shared predicates read as p_L, conjoined with the
/// instantiated definition of each p_L (¬p_L(c) for p(c) ∈ L, p_L(c) ↔ p(c) otherwise).
Formula irrelevant_formula(const DlProgram& k, std::size_t dl, const AtomSet& loop);
/// As IF, renaming only predicates with a positive (resp. negative) dependency atom in L.
Formula pcf(const DlProgram& k, std::size_t dl, const AtomSet& loop);
Formula ncf(const DlProgram& k, std::size_t dl, const AtomSet& loop);

Formula weak_loop_formula(const DlProgram& k, const AtomSet& loop);
Formula strong_loop_formula(const DlProgram& k, const AtomSet& loop);
Formula canonical_loop_formula(const DlProgram& k, const AtomSet& loop, const Interpretation& m);

/// Extension of p_L in I′ as Herbrand atom ids: the atoms of `predicate` in I ∖ L.
AtomSet extend_interpretation(const DlProgram& k, const Interpretation& i, std::size_t predicate,
                              const AtomSet& loop);

/// I′ ⊨_O f with I′ the lazy extension of I. Throws std::logic_error on Xi leaves.
bool evaluate(const DlProgram& k, const Formula& f, const Interpretation& i);

/// ASCII rendering: `~ & | -> <->`, `true`, `false`, dl-atoms in source
/// syntax, labeled atoms as `p@{p(a),p(b)}(a)`, abstracted atoms as `xi0`.
std::string to_string(const DlProgram& k, const Formula& f);
std::string to_string(const DlProgram& k, const PropAtom& a);

}  // namespace dlp
