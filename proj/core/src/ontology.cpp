#include "dlp/ontology.hpp"

#include <algorithm>

#include "dlp/error.hpp"
#include "tableau.hpp"

namespace dlp {

struct Concept::Node {
  Kind kind;
  std::string name;
  Concept a;
  Concept b;
};

Concept::Concept() : node_(nullptr) {}

Concept Concept::atomic(std::string name) {
  return Concept(std::make_shared<const Node>(Node{Kind::Atomic, std::move(name), {}, {}}));
}
Concept Concept::top() { return Concept(); }
Concept Concept::bottom() { return Concept(std::make_shared<const Node>(Node{Kind::Bottom, {}, {}, {}})); }
Concept Concept::negation(Concept c) {
  return Concept(std::make_shared<const Node>(Node{Kind::Not, {}, std::move(c), {}}));
}
Concept Concept::conjunction(Concept a, Concept b) {
  return Concept(std::make_shared<const Node>(Node{Kind::And, {}, std::move(a), std::move(b)}));
}
Concept Concept::disjunction(Concept a, Concept b) {
  return Concept(std::make_shared<const Node>(Node{Kind::Or, {}, std::move(a), std::move(b)}));
}
Concept Concept::forall(std::string role, Concept c) {
  return Concept(std::make_shared<const Node>(Node{Kind::Forall, std::move(role), std::move(c), {}}));
}
Concept Concept::exists(std::string role, Concept c) {
  return Concept(std::make_shared<const Node>(Node{Kind::Exists, std::move(role), std::move(c), {}}));
}

// A null node is the top concept, so default construction never allocates.
Concept::Kind Concept::kind() const noexcept { return node_ ? node_->kind : Kind::Top; }

const std::string& Concept::name() const noexcept {
  static const std::string empty;
  return node_ ? node_->name : empty;
}

const Concept& Concept::first() const {
  if (!node_) throw std::logic_error("top has no operands");
  return node_->a;
}

const Concept& Concept::second() const {
  if (!node_) throw std::logic_error("top has no operands");
  return node_->b;
}

int Concept::quantifier_depth() const {
  switch (kind()) {
    case Kind::Not: return first().quantifier_depth();
    case Kind::And:
    case Kind::Or: return std::max(first().quantifier_depth(), second().quantifier_depth());
    case Kind::Forall:
    case Kind::Exists: return 1 + first().quantifier_depth();
    default: return 0;
  }
}

void Concept::collect_names(std::set<std::string>& concepts, std::set<std::string>& roles) const {
  switch (kind()) {
    case Kind::Atomic: concepts.insert(name()); break;
    case Kind::Not: first().collect_names(concepts, roles); break;
    case Kind::And:
    case Kind::Or:
      first().collect_names(concepts, roles);
      second().collect_names(concepts, roles);
      break;
    case Kind::Forall:
    case Kind::Exists:
      roles.insert(name());
      first().collect_names(concepts, roles);
      break;
    default: break;
  }
}

std::string Concept::to_string() const {
  switch (kind()) {
    case Kind::Atomic: return name();
    case Kind::Top: return "top";
    case Kind::Bottom: return "bot";
    case Kind::Not: return "~" + first().to_string();
    case Kind::And: return "(" + first().to_string() + " & " + second().to_string() + ")";
    case Kind::Or: return "(" + first().to_string() + " | " + second().to_string() + ")";
    case Kind::Forall: return "all " + name() + " . " + first().to_string();
    case Kind::Exists: return "some " + name() + " . " + first().to_string();
  }
  return {};
}

std::strong_ordering operator<=>(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  switch (a.kind()) {
    case Concept::Kind::Not:
    case Concept::Kind::Forall:
    case Concept::Kind::Exists: return a.first() <=> b.first();
    case Concept::Kind::And:
    case Concept::Kind::Or:
      if (auto c = a.first() <=> b.first(); c != 0) return c;
      return a.second() <=> b.second();
    default: return std::strong_ordering::equal;
  }
}

Assertion Assertion::concept_of(Concept c, std::string a) { return {Kind::Concept, std::move(c), {}, std::move(a), {}}; }
Assertion Assertion::role_of(std::string r, std::string a, std::string b) {
  return {Kind::Role, {}, std::move(r), std::move(a), std::move(b)};
}
Assertion Assertion::negated_role_of(std::string r, std::string a, std::string b) {
  return {Kind::NegatedRole, {}, std::move(r), std::move(a), std::move(b)};
}
Assertion Assertion::equal(std::string a, std::string b) { return {Kind::Equal, {}, {}, std::move(a), std::move(b)}; }
Assertion Assertion::not_equal(std::string a, std::string b) {
  return {Kind::NotEqual, {}, {}, std::move(a), std::move(b)};
}

std::string Assertion::to_string() const {
  switch (kind) {
    case Kind::Concept: return expr.to_string() + "(" + first + ")";
    case Kind::Role: return role + "(" + first + "," + second + ")";
    case Kind::NegatedRole: return "!" + role + "(" + first + "," + second + ")";
    case Kind::Equal: return first + " ~~ " + second;
    case Kind::NotEqual: return first + " !~ " + second;
  }
  return {};
}

std::string InclusionAxiom::to_string() const { return lhs.to_string() + " [= " + rhs.to_string(); }

void Ontology::add_assertion(Assertion a) {
  individuals_.insert(a.first);
  if (a.kind != Assertion::Kind::Concept) individuals_.insert(a.second);
  abox_.push_back(std::move(a));
}

DlQuery DlQuery::concept_query(Concept c, std::string a, bool negated) {
  DlQuery q;
  q.kind = Kind::Concept;
  q.expr = negated ? Concept::negation(std::move(c)) : std::move(c);
  q.args = {std::move(a)};
  return q;
}

DlQuery DlQuery::subsumption(Concept c, Concept d, bool negated) {
  DlQuery q;
  q.kind = Kind::Subsumption;
  q.expr = std::move(c);
  q.rhs = std::move(d);
  q.negated = negated;
  return q;
}

DlQuery DlQuery::role_query(std::string r, std::string a, std::string b, bool negated) {
  DlQuery q;
  q.kind = Kind::Role;
  q.role = std::move(r);
  q.negated = negated;
  q.args = {std::move(a), std::move(b)};
  return q;
}

DlQuery DlQuery::equality(std::string a, std::string b, bool negated) {
  DlQuery q;
  q.kind = Kind::Equality;
  q.negated = negated;
  q.args = {std::move(a), std::move(b)};
  return q;
}

std::size_t DlQuery::arity() const noexcept {
  switch (kind) {
    case Kind::Concept: return 1;
    case Kind::Subsumption: return 0;
    default: return 2;
  }
}

std::string DlQuery::body_to_string() const {
  switch (kind) {
    case Kind::Concept: return expr.to_string();
    case Kind::Subsumption: {
      std::string s = expr.to_string() + " [= " + rhs.to_string();
      return negated ? "~(" + s + ")" : s;
    }
    case Kind::Role: return (negated ? "~" : "") + role;
    case Kind::Equality: return negated ? "!~" : "~~";
  }
  return {};
}

std::string DlQuery::to_string() const { return format_application(body_to_string(), args); }

bool is_consistent(const Ontology& o) {
  for (const auto& a : o.abox()) {
    if (a.kind == Assertion::Kind::Equal && a.first != a.second) return false;
    if (a.kind == Assertion::Kind::NotEqual && a.first == a.second) return false;
  }
  return detail::tableau_satisfiable(o);
}

namespace {

// Fresh individual name; the parser never accepts '#' inside identifiers.
constexpr const char* kWitness = "#witness";

}  // namespace

bool entails(const Ontology& o, const DlQuery& q) {
  Ontology ext = o;
  switch (q.kind) {
    case DlQuery::Kind::Concept:
      ext.add_assertion(Assertion::concept_of(Concept::negation(q.expr), q.args.at(0)));
      return !is_consistent(ext);
    case DlQuery::Kind::Subsumption:
      if (q.negated)
        ext.add_axiom({q.expr, q.rhs});
      else
        ext.add_assertion(Assertion::concept_of(Concept::conjunction(q.expr, Concept::negation(q.rhs)), kWitness));
      return !is_consistent(ext);
    case DlQuery::Kind::Role:
      if (q.negated)
        ext.add_assertion(Assertion::role_of(q.role, q.args.at(0), q.args.at(1)));
      else
        ext.add_assertion(Assertion::negated_role_of(q.role, q.args.at(0), q.args.at(1)));
      return !is_consistent(ext);
    case DlQuery::Kind::Equality: {
      bool same = q.args.at(0) == q.args.at(1);
      if (same != q.negated) return true;
      return !is_consistent(o);
    }
  }
  return false;
}

std::string InputSymbol::to_string() const {
  switch (kind) {
    case Kind::Concept: return expr.to_string();
    case Kind::Role: return role;
    case Kind::Equal: return "~~";
    case Kind::NotEqual: return "!~";
  }
  return {};
}

const char* op_symbol(InputOp op) noexcept {
  switch (op) {
    case InputOp::Add: return "+";
    case InputOp::AddNegated: return "^";
    case InputOp::Restrict: return "-";
  }
  return "?";
}

std::string DlInput::to_string() const { return symbol.to_string() + " " + op_symbol(op) + " " + predicate; }

namespace {

Assertion contribution(const InputSymbol& s, bool positive, const Tuple& t) {
  using K = InputSymbol::Kind;
  switch (s.kind) {
    case K::Concept:
      return Assertion::concept_of(positive ? s.expr : Concept::negation(s.expr), t[0]);
    case K::Role:
      return positive ? Assertion::role_of(s.role, t[0], t[1]) : Assertion::negated_role_of(s.role, t[0], t[1]);
    case K::Equal: return positive ? Assertion::equal(t[0], t[1]) : Assertion::not_equal(t[0], t[1]);
    case K::NotEqual: return positive ? Assertion::not_equal(t[0], t[1]) : Assertion::equal(t[0], t[1]);
  }
  return {};
}

}  // namespace

Ontology augment(const Ontology& o, const std::set<GroundAtom>& interpretation, std::span<const DlInput> inputs,
                 std::span<const std::string> constants) {
  Ontology out = o;
  std::vector<std::string> consts(constants.begin(), constants.end());
  for (const auto& in : inputs) {
    const std::size_t arity = in.symbol.arity();
    auto it = interpretation.lower_bound(GroundAtom{in.predicate, {}});
    for (; it != interpretation.end() && it->predicate == in.predicate; ++it) {
      if (it->args.size() != arity)
        throw ArityMismatch("input predicate " + in.predicate + " used with " + in.symbol.to_string() +
                            " needs arity " + std::to_string(arity));
      if (in.op != InputOp::Restrict) out.add_assertion(contribution(in.symbol, in.op == InputOp::Add, it->args));
    }
    if (in.op == InputOp::Restrict)
      for (auto& t : all_tuples(consts, arity))
        if (!interpretation.contains(GroundAtom{in.predicate, t}))
          out.add_assertion(contribution(in.symbol, false, t));
  }
  return out;
}

}  // namespace dlp
