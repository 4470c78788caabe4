#include "dlp/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "dlp/analysis.hpp"
#include "dlp/error.hpp"

namespace dlp {

Formula Abstraction::apply(const Formula& f) {
  return f.map_atoms([&](const PropAtom& a) {
    if (a.kind != PropAtom::Kind::Dl) return Formula::atom(a);
    auto [it, inserted] = index_.emplace(a, static_cast<std::uint32_t>(atoms_.size()));
    if (inserted) atoms_.push_back(a);
    return Formula::atom(PropAtom::xi(it->second));
  });
}

AbstractedFormulas abstract_dl_atoms(const std::vector<Formula>& fs) {
  AbstractedFormulas out;
  for (const auto& f : fs) out.formulas.push_back(out.abstraction.apply(f));
  return out;
}

ModelGenerator::ModelGenerator(DlProgram k) : k_(std::move(k)) {
  for (AtomId a = 0; a < k_.hb_size(); ++a) atom_var(a);
}

int ModelGenerator::atom_var(AtomId a) { return builder_.var(PropAtom::ground(a)); }

void ModelGenerator::add(const Formula& f) {
  std::set<PropAtom> before;
  for (const auto& [a, v] : builder_.atoms()) before.insert(a);
  builder_.add(abstraction_.apply(f));
  // p_L(c) is false for p(c) ∈ L and agrees with p(c) elsewhere.
  std::vector<PropAtom> labeled;
  for (const auto& [a, v] : builder_.atoms())
    if (a.kind == PropAtom::Kind::Labeled && !before.contains(a)) labeled.push_back(a);
  for (const auto& a : labeled) {
    int v = *builder_.find(a);
    if (std::binary_search(a.label.begin(), a.label.end(), a.id)) {
      builder_.add_clause({-v});
    } else {
      int g = atom_var(a.id);
      builder_.add_clause({-v, g});
      builder_.add_clause({v, -g});
    }
  }
}

void ModelGenerator::sync() {
  const auto& clauses = builder_.cnf().clauses;
  solver_.reserve_vars(builder_.cnf().num_vars);
  for (; pushed_ < clauses.size(); ++pushed_) solver_.add_clause(clauses[pushed_]);
}

void ModelGenerator::block(const Interpretation& m) {
  sat::Clause c;
  for (AtomId a = 0; a < k_.hb_size(); ++a) {
    int v = atom_var(a);
    c.push_back(m.contains(a) ? -v : v);
  }
  builder_.add_clause(std::move(c));
}

namespace {

// Atoms a renamed dl-atom reads, and the interpretation it sees.
std::vector<AtomId> visible_inputs(const DlProgram& k, const PropAtom& a) {
  std::vector<AtomId> out;
  for (AtomId v : k.input_atoms(a.id)) {
    bool hidden = std::binary_search(a.label.begin(), a.label.end(), v) &&
                  std::find(a.renamed.begin(), a.renamed.end(), k.predicate_of(v)) != a.renamed.end();
    if (!hidden) out.push_back(v);
  }
  return out;
}

}  // namespace

std::optional<Interpretation> ModelGenerator::next() {
  for (;;) {
    sync();
    ++stats_.sat_calls;
    auto model = solver_.solve();
    if (!model) return std::nullopt;
    Interpretation m = k_.empty_interpretation();
    for (AtomId a = 0; a < k_.hb_size(); ++a)
      if ((*model)[static_cast<std::size_t>(atom_var(a))]) m.insert(a);

    bool consistent = true;
    for (std::uint32_t x = 0; x < abstraction_.size(); ++x) {
      auto xv = builder_.find(PropAtom::xi(x));
      if (!xv) continue;
      const PropAtom& dl = abstraction_.dl_atom(x);
      bool actual = evaluate(k_, Formula::atom(dl), m);
      if (actual == (*model)[static_cast<std::size_t>(*xv)]) continue;
      // ξ is fixed to the dl-atom's value whenever its visible inputs match m.
      sat::Clause c{actual ? *xv : -*xv};
      for (AtomId v : visible_inputs(k_, dl)) c.push_back(m.contains(v) ? -atom_var(v) : atom_var(v));
      builder_.add_clause(std::move(c));
      ++stats_.consistency_clauses;
      consistent = false;
    }
    if (consistent) return m;
  }
}

std::optional<Interpretation> generate_model(const DlProgram& k, const std::vector<Formula>& fs) {
  ModelGenerator g(k);
  for (const auto& f : fs) g.add(f);
  return g.next();
}

namespace {

// For a completion model M that is not an answer set: the loop formula of a
// terminating loop in the unfounded part M ∖ lfp, violated by M.
Formula violated_loop_formula(const DlProgram& k, const Interpretation& m, Semantics s) {
  const bool strong = s == Semantics::Strong;
  std::vector<std::size_t> supported;
  for (std::size_t r = 0; r < k.rules().size(); ++r)
    if (k.satisfies_body(k.rules()[r], m)) supported.push_back(r);
  Interpretation fixpoint = least_model(strong ? strong_transform(k, m) : weak_transform(k, m));
  Interpretation unfounded = m - fixpoint;
  DepGraph g = strong ? strong_graph(k, supported) : weak_graph(k, supported);
  auto loop = terminating_loop(g, unfounded);
  if (!loop) throw std::logic_error("no loop in the unfounded part of " + k.format(m));
  Formula f = strong ? strong_loop_formula(k, *loop) : weak_loop_formula(k, *loop);
  if (evaluate(k, f, m)) throw std::logic_error("loop formula of " + k.format(*loop) + " is not violated");
  return f;
}

std::optional<Formula> violated_completion(const DlProgram& k, const Interpretation& m) {
  for (AtomId h = 0; h < k.hb_size(); ++h) {
    Formula f = completion_of(k, h);
    if (!evaluate(k, f, m)) return f;
  }
  return std::nullopt;
}

std::vector<AtomSet> canonical_loops(const DlProgram& k) {
  return loops(canonical_graph(k), k.limits().max_loop_vertices);
}

std::optional<Formula> violated_canonical(const DlProgram& k, const std::vector<AtomSet>& ls,
                                          const Interpretation& i) {
  if (auto f = violated_completion(k, i)) return f;
  for (const auto& l : ls) {
    if (!l.intersects(i)) continue;
    Formula f = canonical_loop_formula(k, l, i);
    if (!evaluate(k, f, i)) return f;
  }
  return std::nullopt;
}

}  // namespace

SolveStats solve(const DlProgram& k, Semantics s, const std::function<bool(const Interpretation&)>& emit,
                 std::size_t limit) {
  if (s == Semantics::Canonical) return solve_canonical(k, emit, limit);
  ModelGenerator gen(k);
  for (const auto& f : completion(k)) gen.add(f);
  SolveStats& stats = gen.stats();
  while (auto m = gen.next()) {
    ++stats.candidates;
    gen.block(*m);
    if (is_answer_set(k, *m, s)) {
      ++stats.answer_sets;
      if (!emit(*m) || (limit && stats.answer_sets >= limit)) break;
      continue;
    }
    if (++stats.loop_formulas > k.limits().max_loop_formulas)
      throw LoopBudgetExceeded("more than " + std::to_string(k.limits().max_loop_formulas) + " loop formulas");
    gen.add(violated_loop_formula(k, *m, s));
  }
  return stats;
}

std::vector<Interpretation> answer_sets(const DlProgram& k, Semantics s, std::size_t limit, SolveStats* stats) {
  std::vector<Interpretation> out;
  SolveStats st = solve(
      k, s,
      [&](const Interpretation& i) {
        out.push_back(i);
        return true;
      },
      limit);
  if (stats) *stats = st;
  std::sort(out.begin(), out.end());
  return out;
}

bool is_canonical_answer_set(const DlProgram& k, const Interpretation& i) {
  return !violated_canonical(k, canonical_loops(k), i).has_value();
}

SolveStats solve_canonical(const DlProgram& k, const std::function<bool(const Interpretation&)>& emit,
                           std::size_t limit) {
  const auto ls = canonical_loops(k);
  ModelGenerator gen(k);
  for (const auto& f : completion(k)) gen.add(f);
  SolveStats& stats = gen.stats();
  while (auto m = gen.next()) {
    ++stats.candidates;
    gen.block(*m);
    if (violated_canonical(k, ls, *m)) continue;
    ++stats.answer_sets;
    if (!emit(*m) || (limit && stats.answer_sets >= limit)) break;
  }
  return stats;
}

std::optional<Formula> violated_formula(const DlProgram& k, const Interpretation& i, Semantics s) {
  if (s == Semantics::Canonical) return violated_canonical(k, canonical_loops(k), i);
  if (is_answer_set(k, i, s)) return std::nullopt;
  if (auto f = violated_completion(k, i)) return f;
  return violated_loop_formula(k, i, s);
}

}  // namespace dlp
