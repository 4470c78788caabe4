#include "dlp/formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace dlp {

struct Formula::Node {
  Op op;
  PropAtom leaf;
  std::vector<Formula> operands;
};

PropAtom PropAtom::dl(std::size_t dl, std::vector<std::size_t> renamed, std::vector<AtomId> loop) {
  if (renamed.empty()) loop.clear();
  return {Kind::Dl, static_cast<std::uint32_t>(dl), std::move(loop), std::move(renamed)};
}

Formula Formula::truth() {
  static const auto n = std::make_shared<const Node>(Node{Op::True, {}, {}});
  return Formula(n);
}

Formula Formula::falsity() {
  static const auto n = std::make_shared<const Node>(Node{Op::False, {}, {}});
  return Formula(n);
}

Formula Formula::atom(PropAtom a) { return Formula(std::make_shared<const Node>(Node{Op::Atom, std::move(a), {}})); }

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Op::Not, {}, {std::move(f)}}));
}

Formula Formula::conjunction(std::vector<Formula> fs) {
  if (fs.empty()) return truth();
  if (fs.size() == 1) return fs.front();
  return Formula(std::make_shared<const Node>(Node{Op::And, {}, std::move(fs)}));
}

Formula Formula::disjunction(std::vector<Formula> fs) {
  if (fs.empty()) return falsity();
  if (fs.size() == 1) return fs.front();
  return Formula(std::make_shared<const Node>(Node{Op::Or, {}, std::move(fs)}));
}

Formula Formula::implication(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Op::Implies, {}, {std::move(a), std::move(b)}}));
}

Formula Formula::equivalence(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Op::Iff, {}, {std::move(a), std::move(b)}}));
}

Formula::Op Formula::op() const noexcept { return node_->op; }

const PropAtom& Formula::leaf() const {
  if (node_->op != Op::Atom) throw std::logic_error("formula is not an atom");
  return node_->leaf;
}

const std::vector<Formula>& Formula::operands() const noexcept { return node_->operands; }

void Formula::collect_atoms(std::set<PropAtom>& out) const {
  if (op() == Op::Atom) out.insert(leaf());
  for (const auto& f : operands()) f.collect_atoms(out);
}

Formula Formula::map_atoms(const std::function<Formula(const PropAtom&)>& f) const {
  switch (op()) {
    case Op::True:
    case Op::False: return *this;
    case Op::Atom: return f(leaf());
    default: break;
  }
  std::vector<Formula> ops;
  ops.reserve(operands().size());
  for (const auto& g : operands()) ops.push_back(g.map_atoms(f));
  return Formula(std::make_shared<const Node>(Node{op(), {}, std::move(ops)}));
}

namespace {

bool same(const Formula& a, const Formula& b) {
  if (a.op() != b.op()) return false;
  if (a.op() == Formula::Op::Atom) return a.leaf() == b.leaf();
  if (a.operands().size() != b.operands().size()) return false;
  for (std::size_t i = 0; i < a.operands().size(); ++i)
    if (!same(a.operands()[i], b.operands()[i])) return false;
  return true;
}

bool complementary(const Formula& a, const Formula& b) {
  return (a.op() == Formula::Op::Not && same(a.operands()[0], b)) ||
         (b.op() == Formula::Op::Not && same(b.operands()[0], a));
}

Formula simplify_junction(const Formula& f, bool conj) {
  using Op = Formula::Op;
  const Op unit = conj ? Op::True : Op::False;
  const Op zero = conj ? Op::False : Op::True;
  std::vector<Formula> kept;
  for (const auto& g : f.operands()) {
    Formula s = simplify(g);
    if (s.op() == unit) continue;
    if (s.op() == zero) return s;
    std::vector<Formula> parts = s.op() == f.op() ? s.operands() : std::vector<Formula>{s};
    for (auto& p : parts) {
      for (const auto& k : kept)
        if (complementary(k, p)) return conj ? Formula::falsity() : Formula::truth();
      if (std::none_of(kept.begin(), kept.end(), [&](const Formula& k) { return same(k, p); }))
        kept.push_back(std::move(p));
    }
  }
  return conj ? Formula::conjunction(std::move(kept)) : Formula::disjunction(std::move(kept));
}

Formula negate(const Formula& f) {
  switch (f.op()) {
    case Formula::Op::True: return Formula::falsity();
    case Formula::Op::False: return Formula::truth();
    case Formula::Op::Not: return f.operands()[0];
    default: return Formula::negation(f);
  }
}

}  // namespace

Formula simplify(const Formula& f) {
  using Op = Formula::Op;
  switch (f.op()) {
    case Op::True:
    case Op::False:
    case Op::Atom: return f;
    case Op::Not: return negate(simplify(f.operands()[0]));
    case Op::And: return simplify_junction(f, true);
    case Op::Or: return simplify_junction(f, false);
    case Op::Implies: {
      Formula a = simplify(f.operands()[0]), b = simplify(f.operands()[1]);
      if (a.op() == Op::True) return b;
      if (a.op() == Op::False || b.op() == Op::True) return Formula::truth();
      if (b.op() == Op::False) return negate(a);
      if (same(a, b)) return Formula::truth();
      return Formula::implication(a, b);
    }
    case Op::Iff: {
      Formula a = simplify(f.operands()[0]), b = simplify(f.operands()[1]);
      if (a.op() == Op::True) return b;
      if (b.op() == Op::True) return a;
      if (a.op() == Op::False) return negate(b);
      if (b.op() == Op::False) return negate(a);
      if (same(a, b)) return Formula::truth();
      if (complementary(a, b)) return Formula::falsity();
      return Formula::equivalence(a, b);
    }
  }
  return f;
}

Formula body_atom_formula(const BodyAtom& b) {
  return Formula::atom(b.kind == BodyAtom::Kind::Ordinary ? PropAtom::ground(b.id) : PropAtom::dl(b.id));
}

namespace {

template <class Pos, class Neg>
Formula body_formula(const Rule& r, Pos&& pos, Neg&& neg) {
  std::vector<Formula> parts;
  for (const auto& b : r.pos) parts.push_back(pos(b));
  for (const auto& b : r.neg) parts.push_back(Formula::negation(neg(b)));
  return Formula::conjunction(std::move(parts));
}

Formula plain_body(const Rule& r) { return body_formula(r, body_atom_formula, body_atom_formula); }

}  // namespace

Formula completion_of(const DlProgram& k, AtomId h) {
  std::vector<Formula> bodies;
  for (auto r : k.rules_with_head(h)) bodies.push_back(plain_body(k.rules()[r]));
  return Formula::equivalence(Formula::atom(PropAtom::ground(h)), Formula::disjunction(std::move(bodies)));
}

std::vector<Formula> completion(const DlProgram& k) {
  std::vector<Formula> out;
  for (AtomId h = 0; h < k.hb_size(); ++h) out.push_back(completion_of(k, h));
  return out;
}

namespace {

// A with the chosen predicates read as p_L, plus the instantiated definition
// of each p_L over the constants.
Formula renamed_formula(const DlProgram& k, std::size_t dl, const AtomSet& loop, const std::vector<std::size_t>& preds) {
  if (preds.empty()) return Formula::atom(PropAtom::dl(dl));
  std::vector<AtomId> label = loop.elements();
  std::vector<Formula> parts{Formula::atom(PropAtom::dl(dl, preds, label))};
  for (auto p : preds)
    for (AtomId a : k.atoms_of(p)) {
      Formula labeled = Formula::atom(PropAtom::labeled(a, label));
      if (loop.contains(a))
        parts.push_back(Formula::negation(labeled));
      else
        parts.push_back(Formula::equivalence(labeled, Formula::atom(PropAtom::ground(a))));
    }
  return Formula::conjunction(std::move(parts));
}

std::vector<std::size_t> predicates_touching(const DlProgram& k, std::size_t dl, const AtomSet& atoms) {
  std::vector<std::size_t> out;
  for (auto p : k.input_predicates(dl)) {
    const auto& as = k.atoms_of(p);
    if (std::any_of(as.begin(), as.end(), [&](AtomId a) { return atoms.contains(a); })) out.push_back(p);
  }
  return out;
}

}  // namespace

Formula irrelevant_formula(const DlProgram& k, std::size_t dl, const AtomSet& loop) {
  return renamed_formula(k, dl, loop, predicates_touching(k, dl, loop));
}

Formula pcf(const DlProgram& k, std::size_t dl, const AtomSet& loop) {
  return renamed_formula(k, dl, loop, predicates_touching(k, dl, loop & k.profile(dl).positive_deps));
}

Formula ncf(const DlProgram& k, std::size_t dl, const AtomSet& loop) {
  return renamed_formula(k, dl, loop, predicates_touching(k, dl, loop & k.profile(dl).negative_deps));
}

namespace {

enum class LoopKind { Weak, Strong, Canonical };

Formula loop_formula(const DlProgram& k, const AtomSet& loop, LoopKind kind, const Interpretation* m) {
  std::vector<Formula> heads;
  loop.for_each([&](AtomId a) { heads.push_back(Formula::atom(PropAtom::ground(a))); });

  auto positive = [&](const BodyAtom& b) {
    if (b.kind == BodyAtom::Kind::Ordinary || kind == LoopKind::Weak) return body_atom_formula(b);
    bool monotonic = k.profile(b.id).monotonic;
    if (monotonic) return irrelevant_formula(k, b.id, loop);
    return kind == LoopKind::Canonical ? pcf(k, b.id, loop) : body_atom_formula(b);
  };
  auto negative = [&](const BodyAtom& b) {
    if (kind == LoopKind::Canonical && b.kind == BodyAtom::Kind::Dl && !k.profile(b.id).monotonic)
      return ncf(k, b.id, loop);
    return body_atom_formula(b);
  };

  std::vector<Formula> support;
  for (const auto& r : k.rules()) {
    if (!loop.contains(r.head)) continue;
    if (std::any_of(r.pos.begin(), r.pos.end(),
                    [&](const BodyAtom& b) { return b.kind == BodyAtom::Kind::Ordinary && loop.contains(b.id); }))
      continue;
    if (m && !k.satisfies_body(r, *m)) continue;
    support.push_back(body_formula(r, positive, negative));
  }
  return Formula::implication(Formula::disjunction(std::move(heads)), Formula::disjunction(std::move(support)));
}

}  // namespace

Formula weak_loop_formula(const DlProgram& k, const AtomSet& loop) {
  return loop_formula(k, loop, LoopKind::Weak, nullptr);
}

Formula strong_loop_formula(const DlProgram& k, const AtomSet& loop) {
  return loop_formula(k, loop, LoopKind::Strong, nullptr);
}

Formula canonical_loop_formula(const DlProgram& k, const AtomSet& loop, const Interpretation& m) {
  return loop_formula(k, loop, LoopKind::Canonical, &m);
}

AtomSet extend_interpretation(const DlProgram& k, const Interpretation& i, std::size_t predicate, const AtomSet& loop) {
  AtomSet out = k.empty_interpretation();
  for (AtomId a : k.atoms_of(predicate))
    if (i.contains(a) && !loop.contains(a)) out.insert(a);
  return out;
}

namespace {

// The interpretation a renamed dl-atom sees: p_L replaces p, and p_L holds
// exactly on the p-atoms of I outside L.
Interpretation view_for(const DlProgram& k, const PropAtom& a, const Interpretation& i) {
  Interpretation out = i;
  for (AtomId l : a.label)
    if (std::find(a.renamed.begin(), a.renamed.end(), k.predicate_of(l)) != a.renamed.end()) out.erase(l);
  return out;
}

}  // namespace

bool evaluate(const DlProgram& k, const Formula& f, const Interpretation& i) {
  using Op = Formula::Op;
  switch (f.op()) {
    case Op::True: return true;
    case Op::False: return false;
    case Op::Atom: {
      const PropAtom& a = f.leaf();
      switch (a.kind) {
        case PropAtom::Kind::Ground: return i.contains(a.id);
        case PropAtom::Kind::Labeled:
          return i.contains(a.id) && !std::binary_search(a.label.begin(), a.label.end(), a.id);
        case PropAtom::Kind::Dl:
          return a.renamed.empty() ? k.satisfies_dl(a.id, i) : k.satisfies_dl(a.id, view_for(k, a, i));
        case PropAtom::Kind::Xi: throw std::logic_error("cannot evaluate an abstracted dl-atom");
      }
      return false;
    }
    case Op::Not: return !evaluate(k, f.operands()[0], i);
    case Op::And:
      return std::all_of(f.operands().begin(), f.operands().end(),
                         [&](const Formula& g) { return evaluate(k, g, i); });
    case Op::Or:
      return std::any_of(f.operands().begin(), f.operands().end(),
                         [&](const Formula& g) { return evaluate(k, g, i); });
    case Op::Implies: return !evaluate(k, f.operands()[0], i) || evaluate(k, f.operands()[1], i);
    case Op::Iff: return evaluate(k, f.operands()[0], i) == evaluate(k, f.operands()[1], i);
  }
  return false;
}

namespace {

std::string label_text(const DlProgram& k, const std::vector<AtomId>& label) {
  std::string out = "{";
  for (std::size_t j = 0; j < label.size(); ++j) {
    if (j) out += ",";
    out += k.atom_name(label[j]);
  }
  return out + "}";
}

}  // namespace

std::string to_string(const DlProgram& k, const PropAtom& a) {
  switch (a.kind) {
    case PropAtom::Kind::Ground: return k.atom_name(a.id);
    case PropAtom::Kind::Labeled: {
      const GroundAtom& g = k.herbrand_base()[a.id];
      return format_application(g.predicate + "@" + label_text(k, a.label), g.args);
    }
    case PropAtom::Kind::Dl: {
      DlAtom d = k.dl_atoms()[a.id];
      for (auto& in : d.inputs) {
        auto p = k.predicate_index(in.predicate);
        if (p && std::find(a.renamed.begin(), a.renamed.end(), *p) != a.renamed.end())
          in.predicate += "@" + label_text(k, a.label);
      }
      return d.to_string();
    }
    case PropAtom::Kind::Xi: return "xi" + std::to_string(a.id);
  }
  return {};
}

std::string to_string(const DlProgram& k, const Formula& f) {
  using Op = Formula::Op;
  auto join = [&](const char* sep) {
    std::string out = "(";
    for (std::size_t j = 0; j < f.operands().size(); ++j) {
      if (j) out += sep;
      out += to_string(k, f.operands()[j]);
    }
    return out + ")";
  };
  switch (f.op()) {
    case Op::True: return "true";
    case Op::False: return "false";
    case Op::Atom: return to_string(k, f.leaf());
    case Op::Not: return "~" + to_string(k, f.operands()[0]);
    case Op::And: return join(" & ");
    case Op::Or: return join(" | ");
    case Op::Implies: return join(" -> ");
    case Op::Iff: return join(" <-> ");
  }
  return {};
}

}  // namespace dlp
