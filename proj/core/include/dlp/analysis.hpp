#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dlp/program.hpp"

namespace dlp {

enum class GraphKind { Weak, Strong, Canonical };

const char* to_string(GraphKind k) noexcept;
std::optional<GraphKind> parse_graph_kind(std::string_view s);

/// Directed graph over the Herbrand base.
class DepGraph {
public:
  DepGraph() = default;
  DepGraph(GraphKind kind, std::size_t vertices) : kind_(kind), succ_(vertices) {}

  GraphKind kind() const noexcept { return kind_; }
  std::size_t vertex_count() const noexcept { return succ_.size(); }

  void add_edge(AtomId u, AtomId v);
  bool has_edge(AtomId u, AtomId v) const;
  /// Successors of u, ascending.
  const std::vector<AtomId>& successors(AtomId u) const { return succ_.at(u); }
  /// All edges in lexicographic order.
  std::vector<std::pair<AtomId, AtomId>> edges() const;

private:
  GraphKind kind_ = GraphKind::Weak;
  std::vector<std::vector<AtomId>> succ_;
};

/// Semantic monotonicity of the dl-atom with table index `dl`, decided over
/// its input-atom lattice. Throws TooLarge past limits().max_input_atoms.
bool is_monotonic(const DlProgram& k, std::size_t dl);

/// The graphs are built from all rules, or from the listed rule indices.
DepGraph weak_graph(const DlProgram& k);
DepGraph weak_graph(const DlProgram& k, const std::vector<std::size_t>& rules);
DepGraph strong_graph(const DlProgram& k);
DepGraph strong_graph(const DlProgram& k, const std::vector<std::size_t>& rules);
DepGraph canonical_graph(const DlProgram& k);
DepGraph dependency_graph(const DlProgram& k, GraphKind kind);

/// Every vertex set whose induced subgraph is strongly connected and has at
/// least one edge, in ascending order. Throws TooLarge when a strongly
/// connected component has more than `max_component` vertices.
std::vector<AtomSet> loops(const DepGraph& g, std::size_t max_component = 16);

/// A maximal loop of the subgraph induced on `restrict` from which no other
/// loop is reachable; the smallest such set when several qualify.
std::optional<AtomSet> terminating_loop(const DepGraph& g, const AtomSet& restrict);

struct Witness {
  Interpretation interpretation;
  AtomId atom;
};

/// Descends from I2 towards I1 removing atoms while A stays true.
/// Requires I1 ⊂ I2, I1 ⊭ A, I2 ⊨ A; otherwise throws PreconditionViolated.
/// Result: I1 ⊂ I* ⊆ I2, I* ⊨ A, I* ∖ {h*} ⊭ A.
Witness psup(const DlProgram& k, std::size_t dl, const Interpretation& i1, const Interpretation& i2);

/// Ascends from I1 towards I2 adding atoms while A stays true.
/// Requires I1 ⊂ I2, I1 ⊨ A, I2 ⊭ A; otherwise throws PreconditionViolated.
/// Result: I1 ⊆ I* ⊂ I2, I* ⊨ A, I* ∪ {h*} ⊭ A.
Witness nsup(const DlProgram& k, std::size_t dl, const Interpretation& i1, const Interpretation& i2);

/// Graphviz rendering with vertices in Herbrand-base order.
std::string to_dot(const DlProgram& k, const DepGraph& g);

}  // namespace dlp
