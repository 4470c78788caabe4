#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#ifndef DLP_TEST_DATA_DIR
#error "DLP_TEST_DATA_DIR must be defined"
#endif

namespace dlp::testing {

std::filesystem::path data_path(const std::string& name) { return std::filesystem::path(DLP_TEST_DATA_DIR) / name; }

DlProgram load_data(const std::string& name, Limits limits) { return load_program(data_path(name), limits); }

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

template <class T>
const T& choose(Rng& rng, const std::vector<T>& v) {
  return v[pick(rng, v.size())];
}

const std::vector<std::string> kConcepts{"s", "t", "u"};
const std::vector<std::string> kRoles{"r"};

}  // namespace

Concept random_concept(Rng& rng, const std::vector<std::string>& names, const std::vector<std::string>& roles,
                       int depth) {
  const std::size_t options = depth > 0 ? 7 : 2;
  switch (pick(rng, options + 2)) {
    case 0: return Concept::negation(Concept::atomic(choose(rng, names)));
    case 1: return coin(rng, 0.1) ? (coin(rng) ? Concept::top() : Concept::bottom()) : Concept::atomic(choose(rng, names));
    case 2: return Concept::negation(random_concept(rng, names, roles, depth - 1));
    case 3:
      return Concept::conjunction(random_concept(rng, names, roles, depth - 1),
                                  random_concept(rng, names, roles, depth - 1));
    case 4:
      return Concept::disjunction(random_concept(rng, names, roles, depth - 1),
                                  random_concept(rng, names, roles, depth - 1));
    case 5:
      if (roles.empty()) return Concept::atomic(choose(rng, names));
      return Concept::exists(choose(rng, roles), random_concept(rng, names, roles, depth - 1));
    case 6:
      if (roles.empty()) return Concept::atomic(choose(rng, names));
      return Concept::forall(choose(rng, roles), random_concept(rng, names, roles, depth - 1));
    default: return Concept::atomic(choose(rng, names));
  }
}

ProgramSource random_source(Rng& rng, const GenParams& params) {
  const std::vector<std::string> all_constants{"a", "b", "c"};
  const std::vector<std::string> all_predicates{"p", "q", "v", "w"};
  std::size_t nc = 1 + pick(rng, std::min(params.max_constants, all_constants.size()));
  std::size_t np = 1 + pick(rng, std::min(params.max_predicates, all_predicates.size()));
  while (nc * np > params.max_hb) --np;
  std::vector<std::string> constants(all_constants.begin(), all_constants.begin() + static_cast<std::ptrdiff_t>(nc));
  std::vector<std::string> predicates(all_predicates.begin(), all_predicates.begin() + static_cast<std::ptrdiff_t>(np));

  ProgramSource src;
  const std::size_t axioms = pick(rng, params.max_axioms + 1);
  auto simple = [&] {
    Concept a = Concept::atomic(choose(rng, kConcepts));
    switch (pick(rng, 6)) {
      case 0: return Concept::negation(a);
      case 1: return Concept::disjunction(a, Concept::atomic(choose(rng, kConcepts)));
      case 2: return Concept::exists("r", a);
      default: return a;
    }
  };
  for (std::size_t i = 0; i < axioms; ++i)
    src.ontology.add_axiom({coin(rng, 0.8) ? Concept::atomic(choose(rng, kConcepts)) : simple(), simple()});
  if (coin(rng, 0.3)) src.ontology.add_assertion(Assertion::concept_of(Concept::atomic(choose(rng, kConcepts)), choose(rng, constants)));
  if (coin(rng, 0.15)) src.ontology.add_assertion(Assertion::role_of("r", choose(rng, constants), choose(rng, constants)));

  auto atom = [&] { return GroundAtom{choose(rng, predicates), {choose(rng, constants)}}; };
  // dl-atoms lean towards the rule head: feeding its predicate and querying its
  // constant through an input concept produces positive loops through the ontology.
  auto dl_atom = [&](const GroundAtom& head) {
    DlAtom d;
    const std::size_t inputs = 1 + pick(rng, 2);
    for (std::size_t i = 0; i < inputs; ++i) {
      InputOp op = static_cast<InputOp>(pick(rng, params.allow_restrict ? 3 : 2));
      const std::string& pred = i == 0 && coin(rng, 0.5) ? head.predicate : choose(rng, predicates);
      d.inputs.push_back({InputSymbol::of_concept(Concept::atomic(choose(rng, kConcepts))), op, pred});
    }
    const std::string& arg = coin(rng, 0.5) ? head.args[0] : choose(rng, constants);
    const std::size_t kind = pick(rng, 10);
    if (kind == 0) {
      d.query = DlQuery::subsumption(Concept::atomic(choose(rng, kConcepts)), Concept::atomic(choose(rng, kConcepts)),
                                     coin(rng, 0.3));
    } else if (kind == 1) {
      d.query = DlQuery::role_query("r", choose(rng, constants), choose(rng, constants), coin(rng, 0.3));
    } else if (kind < 8) {
      const DlInput& in = d.inputs[pick(rng, d.inputs.size())];
      bool negative = (in.op != InputOp::Add) != coin(rng, 0.2);
      d.query = DlQuery::concept_query(negative ? Concept::negation(in.symbol.expr) : in.symbol.expr, arg);
    } else {
      d.query = DlQuery::concept_query(simple(), arg);
    }
    return d;
  };

  const std::size_t rules = 1 + pick(rng, params.max_rules);
  for (std::size_t r = 0; r < rules; ++r) {
    RuleSource rule{atom(), {}};
    const std::size_t body = coin(rng, 0.15) ? 0 : 1 + pick(rng, params.max_body);
    for (std::size_t b = 0; b < body; ++b) {
      Literal l;
      l.negated = coin(rng, 0.4);
      if (coin(rng, 0.5))
        l.atom = dl_atom(rule.head);
      else
        l.atom = atom();
      rule.body.push_back(std::move(l));
    }
    src.rules.push_back(std::move(rule));
  }
  // An even negative cycle between two atoms yields choice points.
  if (src.rules.size() >= 2 && coin(rng, 0.35)) {
    GroundAtom x = atom(), y = atom();
    if (!(x == y)) {
      auto& first = src.rules[src.rules.size() - 2];
      auto& second = src.rules.back();
      first = {x, {Literal{true, y}}};
      second = {y, {Literal{true, x}}};
      if (coin(rng, 0.5)) second.body.push_back(Literal{false, dl_atom(y)});
    }
  }
  return src;
}

std::vector<DlProgram> corpus(std::size_t count, std::uint64_t seed) {
  std::vector<DlProgram> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(seed * 1000003 + i);
    GenParams params;
    params.allow_restrict = i % 4 != 3;
    out.push_back(DlProgram::build(random_source(rng, params)));
  }
  return out;
}

namespace {

// A finite interpretation: concept extensions and role relations as bitmasks.
struct FiniteModel {
  int n = 0;
  std::map<std::string, std::uint32_t> concepts;
  std::map<std::string, std::vector<std::uint32_t>> roles;  // roles[r][x] = successors of x
  std::map<std::string, int> individuals;

  std::uint32_t all() const { return (1u << n) - 1; }

  std::uint32_t ext(const Concept& c) const {
    switch (c.kind()) {
      case Concept::Kind::Top: return all();
      case Concept::Kind::Bottom: return 0;
      case Concept::Kind::Atomic: {
        auto it = concepts.find(c.name());
        return it == concepts.end() ? 0 : it->second;
      }
      case Concept::Kind::Not: return all() & ~ext(c.first());
      case Concept::Kind::And: return ext(c.first()) & ext(c.second());
      case Concept::Kind::Or: return ext(c.first()) | ext(c.second());
      case Concept::Kind::Exists:
      case Concept::Kind::Forall: {
        std::uint32_t inner = ext(c.first());
        std::uint32_t out = 0;
        auto it = roles.find(c.name());
        for (int x = 0; x < n; ++x) {
          std::uint32_t succ = it == roles.end() ? 0 : it->second[static_cast<std::size_t>(x)];
          bool holds = c.kind() == Concept::Kind::Exists ? (succ & inner) != 0 : (succ & ~inner) == 0;
          if (holds) out |= 1u << x;
        }
        return out;
      }
    }
    return 0;
  }

  bool related(const std::string& r, const std::string& a, const std::string& b) const {
    auto it = roles.find(r);
    if (it == roles.end()) return false;
    return (it->second[static_cast<std::size_t>(individuals.at(a))] >> individuals.at(b)) & 1u;
  }

  bool satisfies(const Assertion& a) const {
    switch (a.kind) {
      case Assertion::Kind::Concept: return (ext(a.expr) >> individuals.at(a.first)) & 1u;
      case Assertion::Kind::Role: return related(a.role, a.first, a.second);
      case Assertion::Kind::NegatedRole: return !related(a.role, a.first, a.second);
      case Assertion::Kind::Equal: return individuals.at(a.first) == individuals.at(a.second);
      case Assertion::Kind::NotEqual: return individuals.at(a.first) != individuals.at(a.second);
    }
    return false;
  }

  bool satisfies(const Ontology& o) const {
    for (const auto& ax : o.tbox())
      if ((ext(ax.lhs) & ~ext(ax.rhs)) != 0) return false;
    for (const auto& a : o.abox())
      if (!satisfies(a)) return false;
    return true;
  }

  bool satisfies(const DlQuery& q) const {
    bool v = false;
    switch (q.kind) {
      case DlQuery::Kind::Concept: return (ext(q.expr) >> individuals.at(q.args[0])) & 1u;
      case DlQuery::Kind::Subsumption: v = (ext(q.expr) & ~ext(q.rhs)) == 0; break;
      case DlQuery::Kind::Role: v = related(q.role, q.args[0], q.args[1]); break;
      case DlQuery::Kind::Equality: v = individuals.at(q.args[0]) == individuals.at(q.args[1]); break;
    }
    return q.negated ? !v : v;
  }
};

void signature(const Ontology& o, const DlQuery* q, std::set<std::string>& concepts, std::set<std::string>& roles,
               std::set<std::string>& individuals) {
  for (const auto& ax : o.tbox()) {
    ax.lhs.collect_names(concepts, roles);
    ax.rhs.collect_names(concepts, roles);
  }
  for (const auto& a : o.abox()) {
    a.expr.collect_names(concepts, roles);
    if (!a.role.empty()) roles.insert(a.role);
  }
  individuals = o.individuals();
  if (q) {
    q->expr.collect_names(concepts, roles);
    q->rhs.collect_names(concepts, roles);
    if (!q->role.empty()) roles.insert(q->role);
    individuals.insert(q->args.begin(), q->args.end());
  }
}

// Visits every model of `o` over the signature; stops when `visit` returns false.
void for_each_model(const Ontology& o, const DlQuery* q, int max_domain,
                    const std::function<bool(const FiniteModel&)>& visit) {
  std::set<std::string> cs, rs, is;
  signature(o, q, cs, rs, is);
  const int first = std::max<int>(1, static_cast<int>(is.size()));
  for (int n = first; n <= max_domain; ++n) {
    FiniteModel m;
    m.n = n;
    int next = 0;
    for (const auto& i : is) m.individuals[i] = next++;
    const std::size_t cbits = cs.size() * static_cast<std::size_t>(n);
    const std::size_t rbits = rs.size() * static_cast<std::size_t>(n * n);
    if (cbits + rbits > 30) throw std::runtime_error("finite model enumeration too large");
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (cbits + rbits)); ++bits) {
      std::uint64_t rest = bits;
      for (const auto& c : cs) {
        m.concepts[c] = static_cast<std::uint32_t>(rest & m.all());
        rest >>= n;
      }
      for (const auto& r : rs) {
        auto& succ = m.roles[r];
        succ.assign(static_cast<std::size_t>(n), 0);
        for (int x = 0; x < n; ++x) {
          succ[static_cast<std::size_t>(x)] = static_cast<std::uint32_t>(rest & m.all());
          rest >>= n;
        }
      }
      if (m.satisfies(o) && !visit(m)) return;
    }
  }
}

}  // namespace

bool fm_consistent(const Ontology& o, int max_domain) {
  bool found = false;
  for_each_model(o, nullptr, max_domain, [&](const FiniteModel&) {
    found = true;
    return false;
  });
  return found;
}

bool fm_entails(const Ontology& o, const DlQuery& q, int max_domain) {
  bool entailed = true;
  for_each_model(o, &q, max_domain, [&](const FiniteModel& m) {
    if (!m.satisfies(q)) entailed = false;
    return entailed;
  });
  return entailed;
}

std::vector<AtomSet> brute_loops(const DepGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<AtomSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<AtomId> vs;
    for (std::size_t v = 0; v < n; ++v)
      if ((mask >> v) & 1u) vs.push_back(static_cast<AtomId>(v));
    // reach[i][j]: a nonempty path from vs[i] to vs[j] inside the subset.
    const std::size_t m = vs.size();
    std::vector<std::vector<char>> reach(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) reach[i][j] = g.has_edge(vs[i], vs[j]);
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          if (reach[i][k] && reach[k][j]) reach[i][j] = 1;
    bool loop = true;
    for (std::size_t i = 0; i < m && loop; ++i)
      for (std::size_t j = 0; j < m && loop; ++j)
        if (!reach[i][j] && (i != j || m == 1)) loop = false;
    if (!loop) continue;
    AtomSet s(n);
    for (AtomId v : vs) s.insert(v);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool tt_eval(const Formula& f, const AtomSet& assignment) {
  using Op = Formula::Op;
  const auto& xs = f.operands();
  switch (f.op()) {
    case Op::True: return true;
    case Op::False: return false;
    case Op::Atom: return assignment.contains(f.leaf().id);
    case Op::Not: return !tt_eval(xs[0], assignment);
    case Op::And:
      for (const auto& x : xs)
        if (!tt_eval(x, assignment)) return false;
      return true;
    case Op::Or:
      for (const auto& x : xs)
        if (tt_eval(x, assignment)) return true;
      return false;
    case Op::Implies: return !tt_eval(xs[0], assignment) || tt_eval(xs[1], assignment);
    case Op::Iff: return tt_eval(xs[0], assignment) == tt_eval(xs[1], assignment);
  }
  return false;
}

std::vector<AtomSet> tt_models(const std::vector<Formula>& fs, std::size_t n) {
  std::vector<AtomSet> out;
  std::vector<AtomId> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<AtomId>(i);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    AtomSet a = AtomSet::from_mask(n, all, m);
    if (std::all_of(fs.begin(), fs.end(), [&](const Formula& f) { return tt_eval(f, a); })) out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Formula random_formula(Rng& rng, std::size_t atoms, int depth) {
  if (depth <= 0 || coin(rng, 0.2)) {
    if (coin(rng, 0.05)) return coin(rng) ? Formula::truth() : Formula::falsity();
    Formula a = Formula::atom(PropAtom::ground(static_cast<AtomId>(pick(rng, atoms))));
    return coin(rng, 0.4) ? Formula::negation(a) : a;
  }
  auto sub = [&] { return random_formula(rng, atoms, depth - 1); };
  switch (pick(rng, 6)) {
    case 0: return Formula::negation(sub());
    case 1: return Formula::conjunction({sub(), sub()});
    case 2: return Formula::disjunction({sub(), sub(), sub()});
    case 3: return Formula::implication(sub(), sub());
    case 4: return Formula::equivalence(sub(), sub());
    default: return Formula::disjunction({sub(), sub()});
  }
}

namespace {

std::set<GroundAtom> as_atoms(const DlProgram& k, const Interpretation& i) {
  auto v = k.atoms(i);
  return {v.begin(), v.end()};
}

struct Reference {
  const DlProgram& k;
  std::vector<Interpretation> all;
  std::vector<std::vector<char>> truth;  // truth[dl][interpretation index]
  std::vector<char> monotonic;

  explicit Reference(const DlProgram& program) : k(program), all(all_interpretations(program)) {
    const auto& dls = k.dl_atoms();
    truth.assign(dls.size(), std::vector<char>(all.size(), 0));
    monotonic.assign(dls.size(), 1);
    for (std::size_t d = 0; d < dls.size(); ++d) {
      for (std::size_t i = 0; i < all.size(); ++i) {
        Ontology o = augment(k.ontology(), as_atoms(k, all[i]), dls[d].inputs, k.constants());
        truth[d][i] = entails(o, dls[d].query);
      }
      for (std::size_t i = 0; i < all.size() && monotonic[d]; ++i)
        for (std::size_t j = 0; j < all.size(); ++j)
          if (truth[d][i] && !truth[d][j] && all[i].subset_of(all[j])) {
            monotonic[d] = 0;
            break;
          }
    }
  }

  std::size_t index(const Interpretation& i) const {
    return static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), i) - all.begin());
  }

  bool holds(const BodyAtom& b, std::size_t i) const {
    return b.kind == BodyAtom::Kind::Ordinary ? all[i].contains(b.id) : truth[b.id][i] != 0;
  }

  bool answer_set(std::size_t ii, bool strong) const {
    // Reduct: keep rules whose removed parts are satisfied by I, then iterate.
    std::vector<std::vector<BodyAtom>> kept;
    std::vector<AtomId> heads;
    for (const auto& r : k.rules()) {
      bool keep = true;
      std::vector<BodyAtom> pos;
      for (const auto& b : r.pos) {
        bool stays = b.kind == BodyAtom::Kind::Ordinary || (strong && monotonic[b.id]);
        if (stays)
          pos.push_back(b);
        else if (!holds(b, ii))
          keep = false;
      }
      for (const auto& b : r.neg)
        if (holds(b, ii)) keep = false;
      if (keep) {
        kept.push_back(std::move(pos));
        heads.push_back(r.head);
      }
    }
    Interpretation m = k.empty_interpretation();
    for (bool changed = true; changed;) {
      changed = false;
      std::size_t mi = index(m);
      for (std::size_t r = 0; r < kept.size(); ++r) {
        if (m.contains(heads[r])) continue;
        if (std::all_of(kept[r].begin(), kept[r].end(), [&](const BodyAtom& b) { return holds(b, mi); })) {
          m.insert(heads[r]);
          changed = true;
        }
      }
    }
    return m == all[ii];
  }
};

}  // namespace

std::vector<Interpretation> all_interpretations(const DlProgram& k) {
  const std::size_t n = k.hb_size();
  std::vector<AtomId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<AtomId>(i);
  std::vector<Interpretation> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.push_back(AtomSet::from_mask(n, ids, m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Interpretation> reference_answer_sets(const DlProgram& k, Semantics s) {
  if (s == Semantics::Canonical) throw std::invalid_argument("no reference for canonical answer sets");
  Reference ref(k);
  std::vector<Interpretation> out;
  for (std::size_t i = 0; i < ref.all.size(); ++i)
    if (ref.answer_set(i, s == Semantics::Strong)) out.push_back(ref.all[i]);
  return out;
}

std::string show(const DlProgram& k, const std::vector<Interpretation>& is) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < is.size(); ++i) out << (i ? " " : "") << "{" << k.format(is[i]) << "}";
  out << "]";
  return out.str();
}

}  // namespace dlp::testing

namespace dlp::testing {

bool has_restrict(const DlProgram& k) {
  for (const auto& a : k.dl_atoms())
    for (const auto& in : a.inputs)
      if (in.op == InputOp::Restrict) return true;
  return false;
}

std::vector<std::string> proposition_violations(const DlProgram& k) {
  std::vector<std::string> out;
  auto fail = [&](const std::string& what) { out.push_back(what); };
  auto weak = enumerate_answer_sets(k, Semantics::Weak);
  auto strong = enumerate_answer_sets(k, Semantics::Strong);
  auto canonical = enumerate_answer_sets(k, Semantics::Canonical);
  auto within = [](const std::vector<Interpretation>& small, const std::vector<Interpretation>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  if (!within(strong, weak)) fail("strong not within weak: " + show(k, strong) + " vs " + show(k, weak));
  if (!within(canonical, strong)) fail("canonical not within strong: " + show(k, canonical) + " vs " + show(k, strong));
  for (const auto& i : canonical) {
    for (const auto& j : canonical)
      if (i.proper_subset_of(j)) fail("comparable canonical answer sets {" + k.format(i) + "} {" + k.format(j) + "}");
    if (is_circular(k, i)) fail("circular canonical answer set {" + k.format(i) + "}");
  }
  if (!has_restrict(k) && canonical != strong)
    fail("canonical differs from strong without restriction: " + show(k, canonical) + " vs " + show(k, strong));

  auto is = all_interpretations(k);
  for (const auto& l : loops(weak_graph(k))) {
    Formula f = Formula::implication(strong_loop_formula(k, l), weak_loop_formula(k, l));
    for (const auto& i : is)
      if (!evaluate(k, f, i)) fail("sLF does not imply wLF for loop {" + k.format(l) + "} under {" + k.format(i) + "}");
  }
  Formula comp = Formula::conjunction(completion(k));
  for (const auto& i : is)
    if (is_supported_model(k, i) != evaluate(k, comp, i)) fail("completion mismatch at {" + k.format(i) + "}");
  return out;
}

}  // namespace dlp::testing
