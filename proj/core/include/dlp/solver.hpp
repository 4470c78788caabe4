#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "dlp/formulas.hpp"
#include "dlp/program.hpp"
#include "dlp/sat.hpp"
#include "dlp/semantics.hpp"

namespace dlp {

/// Replaces dl-atom leaves by ξ atoms. One ξ per distinct dl-atom leaf
/// (including its renaming), shared across every formula passed in.
class Abstraction {
public:
  Formula apply(const Formula& f);
  /// The dl-atom leaf that ξ_index stands for.
  const PropAtom& dl_atom(std::uint32_t index) const { return atoms_.at(index); }
  std::size_t size() const noexcept { return atoms_.size(); }

private:
  std::map<PropAtom, std::uint32_t> index_;
  std::vector<PropAtom> atoms_;
};

struct AbstractedFormulas {
  std::vector<Formula> formulas;
  Abstraction abstraction;
};

AbstractedFormulas abstract_dl_atoms(const std::vector<Formula>& fs);

struct SolveStats {
  std::size_t sat_calls = 0;
  std::size_t candidates = 0;
  std::size_t consistency_clauses = 0;
  std::size_t loop_formulas = 0;
  std::size_t answer_sets = 0;
};

/// Incremental search for interpretations M such that M, with every ξ set to
/// the truth of its dl-atom under M, satisfies the added formulas.
class ModelGenerator {
public:
  explicit ModelGenerator(DlProgram k);

  void add(const Formula& f);
  /// Excludes the interpretation from later results.
  void block(const Interpretation& m);
  std::optional<Interpretation> next();

  const SolveStats& stats() const noexcept { return stats_; }
  SolveStats& stats() noexcept { return stats_; }

private:
  void sync();
  int atom_var(AtomId a);

  DlProgram k_;
  Abstraction abstraction_;
  sat::CnfBuilder builder_;
  sat::Solver solver_;
  std::size_t pushed_ = 0;
  SolveStats stats_;
};

/// First model of the formulas whose ξ atoms agree with the dl-atoms, if any.
std::optional<Interpretation> generate_model(const DlProgram& k, const std::vector<Formula>& fs);

/// Streams answer sets to `emit` until it returns false or `limit` (0 = all) are found.
/// Weak and strong use completion plus loop formulas; canonical filters completion models.
/// Throws LoopBudgetExceeded when more than limits().max_loop_formulas loop formulas are needed.
SolveStats solve(const DlProgram& k, Semantics s, const std::function<bool(const Interpretation&)>& emit,
                 std::size_t limit = 0);

/// All answer sets (up to `limit`), in ascending order.
std::vector<Interpretation> answer_sets(const DlProgram& k, Semantics s, std::size_t limit = 0,
                                        SolveStats* stats = nullptr);

/// I′ ⊨ COMP(K) and every canonical loop formula cLF(L, I, K).
/// Throws TooLarge when canonical loops cannot be enumerated within limits().
bool is_canonical_answer_set(const DlProgram& k, const Interpretation& i);

SolveStats solve_canonical(const DlProgram& k, const std::function<bool(const Interpretation&)>& emit,
                           std::size_t limit = 0);

/// Why `i` is not an answer set: a completion or loop formula it violates.
/// Empty when `i` is an answer set.
std::optional<Formula> violated_formula(const DlProgram& k, const Interpretation& i, Semantics s);

}  // namespace dlp
