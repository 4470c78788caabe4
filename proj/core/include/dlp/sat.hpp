#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dlp/formulas.hpp"

namespace dlp::sat {

/// DIMACS literal: +v or -v for variable v ≥ 1.
using Lit = int;
using Clause = std::vector<Lit>;
/// Assignment indexed by variable; entry 0 is unused.
using Model = std::vector<bool>;

struct Cnf {
  int num_vars = 0;
  std::vector<Clause> clauses;
  /// Optional variable names, written as `c` comment lines.
  std::map<int, std::string> names;
};

/// Definitional (Tseitin) encoding with full equivalences, so every model of
/// the input formulas extends to exactly one model of the CNF.
class CnfBuilder {
public:
  /// Variable of a propositional atom, allocated on first use.
  int var(const PropAtom& a);
  std::optional<int> find(const PropAtom& a) const;
  int fresh();

  /// A literal equivalent to f.
  Lit encode(const Formula& f);
  /// Asserts f.
  void add(const Formula& f);
  void add_clause(Clause c);

  const Cnf& cnf() const noexcept { return cnf_; }
  const std::map<PropAtom, int>& atoms() const noexcept { return atoms_; }

private:
  Lit constant_true();

  Cnf cnf_;
  std::map<PropAtom, int> atoms_;
  int true_var_ = 0;
};

Cnf to_cnf(const std::vector<Formula>& fs, std::map<PropAtom, int>* atoms = nullptr);

/// DPLL with two watched literals, chronological backtracking, and a fixed
/// branching order (lowest unassigned variable, false first). Clauses may be
/// added between calls to solve().
class Solver {
public:
  explicit Solver(int num_vars = 0);
  explicit Solver(const Cnf& cnf);

  int num_vars() const noexcept { return num_vars_; }
  void reserve_vars(int n);
  void add_clause(Clause c);
  std::optional<Model> solve();
  /// Depth-first enumeration over the projection variables; each projected
  /// assignment that extends to a model is reported once, with one extension.
  /// Leaves the solver's clause set unchanged.
  std::size_t enumerate(const std::vector<int>& projection, std::size_t limit,
                        const std::function<bool(const Model&)>& emit);

private:
  struct Decision {
    std::size_t trail_size;
    Lit lit;
    bool flipped;
    bool inner;
  };
  enum : std::int8_t { Unassigned = 0, True = 1, False = -1 };

  static std::size_t index(Lit l) { return 2 * static_cast<std::size_t>(l > 0 ? l : -l) + (l < 0 ? 1 : 0); }
  std::int8_t value(Lit l) const;
  void assign(Lit l);
  bool propagate();
  bool restart();
  void undo_to(std::size_t trail_size);
  bool backtrack(std::vector<Decision>& decisions);
  Model current_model() const;

  int num_vars_ = 0;
  bool empty_clause_ = false;
  std::vector<Clause> clauses_;
  std::vector<Lit> units_;
  std::vector<std::vector<std::size_t>> watches_;

  std::vector<std::int8_t> assignment_;
  std::vector<Lit> trail_;
  std::size_t head_ = 0;
};

/// Calls `emit` for up to `limit` models (0 = all), blocking each on the
/// `projection` variables (all variables when empty). `emit` returning false stops.
std::size_t enumerate_models(const Cnf& cnf, std::size_t limit, const std::vector<int>& projection,
                             const std::function<bool(const Model&)>& emit);

void write_dimacs(std::ostream& out, const Cnf& cnf);
/// Throws dlp::SyntaxError on malformed input.
Cnf read_dimacs(std::istream& in);

}  // namespace dlp::sat
