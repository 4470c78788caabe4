#pragma once

#include <compare>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "dlp/vocabulary.hpp"

namespace dlp {

/// An ALC concept expression. Immutable; copies share structure.
class Concept {
public:
  enum class Kind { Atomic, Top, Bottom, Not, And, Or, Forall, Exists };

  static Concept atomic(std::string name);
  static Concept top();
  static Concept bottom();
  static Concept negation(Concept c);
  static Concept conjunction(Concept a, Concept b);
  static Concept disjunction(Concept a, Concept b);
  static Concept forall(std::string role, Concept c);
  static Concept exists(std::string role, Concept c);

  Concept();  // top

  Kind kind() const noexcept;
  /// Concept name for Atomic, role name for Forall/Exists, empty otherwise.
  const std::string& name() const noexcept;
  /// Operand of Not/Forall/Exists, left operand of And/Or.
  const Concept& first() const;
  const Concept& second() const;

  int quantifier_depth() const;
  void collect_names(std::set<std::string>& concepts, std::set<std::string>& roles) const;
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b);
  friend bool operator==(const Concept& a, const Concept& b) { return (a <=> b) == 0; }

private:
  struct Node;
  explicit Concept(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Assertion {
  enum class Kind { Concept, Role, NegatedRole, Equal, NotEqual };

  Kind kind = Kind::Concept;
  Concept expr;
  std::string role;
  std::string first;
  std::string second;

  static Assertion concept_of(Concept c, std::string a);
  static Assertion role_of(std::string r, std::string a, std::string b);
  static Assertion negated_role_of(std::string r, std::string a, std::string b);
  static Assertion equal(std::string a, std::string b);
  static Assertion not_equal(std::string a, std::string b);

  std::string to_string() const;
  friend auto operator<=>(const Assertion&, const Assertion&) = default;
  friend bool operator==(const Assertion&, const Assertion&) = default;
};

struct InclusionAxiom {
  Concept lhs;
  Concept rhs;

  std::string to_string() const;
  friend auto operator<=>(const InclusionAxiom&, const InclusionAxiom&) = default;
  friend bool operator==(const InclusionAxiom&, const InclusionAxiom&) = default;
};

/// ALC knowledge base: TBox of inclusion axioms plus ABox of assertions.
/// `individuals()` always includes every constant mentioned by the ABox.
class Ontology {
public:
  void add_axiom(InclusionAxiom ax) { tbox_.push_back(std::move(ax)); }
  void add_assertion(Assertion a);
  void add_individual(const std::string& name) { individuals_.insert(name); }

  const std::vector<InclusionAxiom>& tbox() const noexcept { return tbox_; }
  const std::vector<Assertion>& abox() const noexcept { return abox_; }
  const std::set<std::string>& individuals() const noexcept { return individuals_; }
  bool empty() const noexcept { return tbox_.empty() && abox_.empty(); }

  friend bool operator==(const Ontology&, const Ontology&) = default;

private:
  std::vector<InclusionAxiom> tbox_;
  std::vector<Assertion> abox_;
  std::set<std::string> individuals_;
};

/// A dl-query Q(t), possibly negated. `args` holds t: one constant for
/// concept queries, none for subsumption, two for role and equality queries.
struct DlQuery {
  enum class Kind { Concept, Subsumption, Role, Equality };

  Kind kind = Kind::Concept;
  Concept expr;  // queried concept, or subsumption lhs
  Concept rhs;      // subsumption rhs
  std::string role;
  bool negated = false;
  Tuple args;

  static DlQuery concept_query(Concept c, std::string a, bool negated = false);
  static DlQuery subsumption(Concept c, Concept d, bool negated = false);
  static DlQuery role_query(std::string r, std::string a, std::string b, bool negated = false);
  static DlQuery equality(std::string a, std::string b, bool negated = false);

  std::size_t arity() const noexcept;
  /// Source syntax of the query part, without the argument tuple.
  std::string body_to_string() const;
  std::string to_string() const;

  friend auto operator<=>(const DlQuery&, const DlQuery&) = default;
  friend bool operator==(const DlQuery&, const DlQuery&) = default;
};

/// True iff the knowledge base has a model (under the unique name assumption).
bool is_consistent(const Ontology& o);

/// O |= Q. Decided by refutation with an ALC tableau using subset blocking.
/// A negated query is checked as its own entailment, not as the complement.
bool entails(const Ontology& o, const DlQuery& q);

/// The symbol S of a dl-atom input `S op p`.
struct InputSymbol {
  enum class Kind { Concept, Role, Equal, NotEqual };

  Kind kind = Kind::Concept;
  Concept expr;
  std::string role;

  static InputSymbol of_concept(Concept c) { return {Kind::Concept, std::move(c), {}}; }
  static InputSymbol of_role(std::string r) { return {Kind::Role, Concept{}, std::move(r)}; }
  static InputSymbol equal() { return {Kind::Equal, Concept{}, {}}; }
  static InputSymbol not_equal() { return {Kind::NotEqual, Concept{}, {}}; }

  /// Arity an input predicate must have when paired with this symbol.
  std::size_t arity() const noexcept { return kind == Kind::Concept ? 1 : 2; }
  std::string to_string() const;

  friend auto operator<=>(const InputSymbol&, const InputSymbol&) = default;
  friend bool operator==(const InputSymbol&, const InputSymbol&) = default;
};

/// ⊕ extends S, ⊙ extends ¬S, ⊖ constrains S to the predicate's extension.
enum class InputOp { Add, AddNegated, Restrict };

const char* op_symbol(InputOp op) noexcept;

struct DlInput {
  InputSymbol symbol;
  InputOp op = InputOp::Add;
  std::string predicate;

  std::string to_string() const;
  friend auto operator<=>(const DlInput&, const DlInput&) = default;
  friend bool operator==(const DlInput&, const DlInput&) = default;
};

/// O(I; λ): the ontology extended with the assertions each input contributes
/// under `interpretation`. ⊖ ranges over all tuples of `constants`.
/// Throws ArityMismatch when an atom of an input predicate has the wrong arity.
Ontology augment(const Ontology& o, const std::set<GroundAtom>& interpretation,
                 std::span<const DlInput> inputs, std::span<const std::string> constants);

}  // namespace dlp
