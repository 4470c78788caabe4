#include "dlp/sat.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "dlp/error.hpp"

namespace dlp::sat {

int CnfBuilder::var(const PropAtom& a) {
  auto it = atoms_.find(a);
  if (it != atoms_.end()) return it->second;
  int v = fresh();
  atoms_.emplace(a, v);
  return v;
}

std::optional<int> CnfBuilder::find(const PropAtom& a) const {
  auto it = atoms_.find(a);
  if (it == atoms_.end()) return std::nullopt;
  return it->second;
}

int CnfBuilder::fresh() { return ++cnf_.num_vars; }

void CnfBuilder::add_clause(Clause c) { cnf_.clauses.push_back(std::move(c)); }

Lit CnfBuilder::constant_true() {
  if (!true_var_) {
    true_var_ = fresh();
    add_clause({true_var_});
  }
  return true_var_;
}

Lit CnfBuilder::encode(const Formula& f) {
  using Op = Formula::Op;
  switch (f.op()) {
    case Op::True: return constant_true();
    case Op::False: return -constant_true();
    case Op::Atom: return var(f.leaf());
    case Op::Not: return -encode(f.operands()[0]);
    case Op::And:
    case Op::Or: {
      // y ↔ ⋀ l_i, or y ↔ ⋁ l_i by duality on signs.
      const int s = f.op() == Op::And ? 1 : -1;
      std::vector<Lit> ls;
      for (const auto& g : f.operands()) ls.push_back(s * encode(g));
      int y = fresh();
      Clause big{s * y};
      for (Lit l : ls) {
        add_clause({-s * y, l});
        big.push_back(-l);
      }
      add_clause(std::move(big));
      return y;
    }
    case Op::Implies: {
      Lit a = encode(f.operands()[0]), b = encode(f.operands()[1]);
      int y = fresh();
      add_clause({-y, -a, b});
      add_clause({y, a});
      add_clause({y, -b});
      return y;
    }
    case Op::Iff: {
      Lit a = encode(f.operands()[0]), b = encode(f.operands()[1]);
      int y = fresh();
      add_clause({-y, -a, b});
      add_clause({-y, a, -b});
      add_clause({y, a, b});
      add_clause({y, -a, -b});
      return y;
    }
  }
  return constant_true();
}

void CnfBuilder::add(const Formula& f) {
  if (f.op() == Formula::Op::And) {
    for (const auto& g : f.operands()) add(g);
    return;
  }
  add_clause({encode(f)});
}

Cnf to_cnf(const std::vector<Formula>& fs, std::map<PropAtom, int>* atoms) {
  CnfBuilder b;
  for (const auto& f : fs) b.add(f);
  if (atoms) *atoms = b.atoms();
  return b.cnf();
}

Solver::Solver(int num_vars) { reserve_vars(num_vars); }

Solver::Solver(const Cnf& cnf) : Solver(cnf.num_vars) {
  for (const auto& c : cnf.clauses) add_clause(c);
}

void Solver::reserve_vars(int n) {
  if (n <= num_vars_) return;
  num_vars_ = n;
  watches_.resize(2 * static_cast<std::size_t>(n) + 2);
  assignment_.resize(static_cast<std::size_t>(n) + 1, Unassigned);
}

void Solver::add_clause(Clause c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (std::binary_search(c.begin() + static_cast<std::ptrdiff_t>(i) + 1, c.end(), -c[i])) return;
  for (Lit l : c) reserve_vars(l > 0 ? l : -l);
  if (c.empty()) {
    empty_clause_ = true;
    return;
  }
  if (c.size() == 1) {
    units_.push_back(c[0]);
    return;
  }
  std::size_t id = clauses_.size();
  watches_[index(c[0])].push_back(id);
  watches_[index(c[1])].push_back(id);
  clauses_.push_back(std::move(c));
}

std::int8_t Solver::value(Lit l) const {
  std::int8_t v = assignment_[static_cast<std::size_t>(l > 0 ? l : -l)];
  return l > 0 ? v : static_cast<std::int8_t>(-v);
}

void Solver::assign(Lit l) {
  assignment_[static_cast<std::size_t>(l > 0 ? l : -l)] = l > 0 ? True : False;
  trail_.push_back(l);
}

// Visits the clauses watching the negation of each newly assigned literal.
bool Solver::propagate() {
  while (head_ < trail_.size()) {
    Lit falsified = -trail_[head_++];
    auto& ws = watches_[index(falsified)];
    for (std::size_t w = 0; w < ws.size();) {
      Clause& c = clauses_[ws[w]];
      if (c[0] == falsified) std::swap(c[0], c[1]);
      if (value(c[0]) == True) {
        ++w;
        continue;
      }
      bool moved = false;
      for (std::size_t j = 2; j < c.size(); ++j) {
        if (value(c[j]) != False) {
          std::swap(c[1], c[j]);
          watches_[index(c[1])].push_back(ws[w]);
          ws[w] = ws.back();
          ws.pop_back();
          moved = true;
          break;
        }
      }
      if (moved) continue;
      if (value(c[0]) == False) return false;
      assign(c[0]);
      ++w;
    }
  }
  return true;
}

bool Solver::restart() {
  if (empty_clause_) return false;
  std::fill(assignment_.begin(), assignment_.end(), Unassigned);
  trail_.clear();
  head_ = 0;
  for (Lit u : units_) {
    if (value(u) == False) return false;
    if (value(u) == Unassigned) assign(u);
  }
  return propagate();
}

void Solver::undo_to(std::size_t trail_size) {
  while (trail_.size() > trail_size) {
    Lit l = trail_.back();
    trail_.pop_back();
    assignment_[static_cast<std::size_t>(l > 0 ? l : -l)] = Unassigned;
  }
  head_ = trail_.size();
}

// Flips the deepest unflipped decision and propagates, repeating on conflict.
bool Solver::backtrack(std::vector<Decision>& decisions) {
  for (;;) {
    while (!decisions.empty() && decisions.back().flipped) decisions.pop_back();
    if (decisions.empty()) return false;
    Decision& d = decisions.back();
    undo_to(d.trail_size);
    d.flipped = true;
    d.lit = -d.lit;
    assign(d.lit);
    if (propagate()) return true;
  }
}

Model Solver::current_model() const {
  Model m(static_cast<std::size_t>(num_vars_) + 1, false);
  for (int v = 1; v <= num_vars_; ++v) m[static_cast<std::size_t>(v)] = assignment_[static_cast<std::size_t>(v)] == True;
  return m;
}

std::optional<Model> Solver::solve() {
  if (!restart()) return std::nullopt;
  std::vector<Decision> decisions;
  for (;;) {
    int v = 1;
    while (v <= num_vars_ && assignment_[static_cast<std::size_t>(v)] != Unassigned) ++v;
    if (v > num_vars_) return current_model();
    decisions.push_back({trail_.size(), -v, false, false});
    assign(-v);
    if (!propagate() && !backtrack(decisions)) return std::nullopt;
  }
}

std::size_t Solver::enumerate(const std::vector<int>& projection, std::size_t limit,
                              const std::function<bool(const Model&)>& emit) {
  for (int v : projection) reserve_vars(v);
  if (!restart()) return 0;
  std::vector<Decision> decisions;
  std::size_t count = 0;
  std::size_t next_projected = 0;
  for (;;) {
    while (next_projected < projection.size() &&
           assignment_[static_cast<std::size_t>(projection[next_projected])] != Unassigned)
      ++next_projected;
    int v = 0;
    bool inner = false;
    if (next_projected < projection.size()) {
      v = projection[next_projected];
    } else {
      inner = true;
      v = 1;
      while (v <= num_vars_ && assignment_[static_cast<std::size_t>(v)] != Unassigned) ++v;
    }
    if (v > num_vars_) {
      ++count;
      if (!emit(current_model()) || (limit != 0 && count >= limit)) return count;
      // The projected assignment is done: drop the inner decisions, then move on.
      while (!decisions.empty() && decisions.back().inner) decisions.pop_back();
      if (!backtrack(decisions)) return count;
      next_projected = 0;
      continue;
    }
    decisions.push_back({trail_.size(), -v, false, inner});
    assign(-v);
    if (!propagate()) {
      if (!backtrack(decisions)) return count;
      next_projected = 0;
    }
  }
}

std::size_t enumerate_models(const Cnf& cnf, std::size_t limit, const std::vector<int>& projection,
                             const std::function<bool(const Model&)>& emit) {
  Solver s(cnf);
  std::vector<int> vars = projection;
  if (vars.empty())
    for (int v = 1; v <= cnf.num_vars; ++v) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return s.enumerate(vars, limit, emit);
}

void write_dimacs(std::ostream& out, const Cnf& cnf) {
  for (const auto& [v, name] : cnf.names) out << "c " << v << ' ' << name << '\n';
  out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& c : cnf.clauses) {
    for (Lit l : c) out << l << ' ';
    out << "0\n";
  }
}

Cnf read_dimacs(std::istream& in) {
  Cnf cnf;
  std::string line;
  std::size_t line_no = 0, expected = 0;
  bool header = false;
  Clause current;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") {
      int v;
      std::string name;
      if (ls >> v && std::getline(ls >> std::ws, name) && !name.empty()) cnf.names[v] = name;
      continue;
    }
    if (first == "p") {
      std::string fmt;
      if (header || !(ls >> fmt >> cnf.num_vars >> expected) || fmt != "cnf" || cnf.num_vars < 0)
        throw SyntaxError(line_no, 1, "bad DIMACS header");
      header = true;
      continue;
    }
    if (!header) throw SyntaxError(line_no, 1, "clause before DIMACS header");
    std::istringstream body(line);
    long long lit;
    while (body >> lit) {
      if (lit == 0) {
        if (current.empty()) throw SyntaxError(line_no, 1, "empty clause");
        cnf.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (lit > cnf.num_vars || -lit > cnf.num_vars) throw SyntaxError(line_no, 1, "literal out of range");
      current.push_back(static_cast<Lit>(lit));
    }
    if (!body.eof()) throw SyntaxError(line_no, 1, "non-numeric token in clause");
  }
  if (!header) throw SyntaxError(line_no, 1, "missing DIMACS header");
  if (!current.empty()) throw SyntaxError(line_no, 1, "unterminated clause");
  if (cnf.clauses.size() != expected) throw SyntaxError(line_no, 1, "clause count differs from header");
  return cnf;
}

}  // namespace dlp::sat
