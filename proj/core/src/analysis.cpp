#include "dlp/analysis.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "dlp/error.hpp"

namespace dlp {

const char* to_string(GraphKind k) noexcept {
  switch (k) {
    case GraphKind::Weak: return "weak";
    case GraphKind::Strong: return "strong";
    case GraphKind::Canonical: return "canonical";
  }
  return "?";
}

std::optional<GraphKind> parse_graph_kind(std::string_view s) {
  if (s == "weak") return GraphKind::Weak;
  if (s == "strong") return GraphKind::Strong;
  if (s == "canonical") return GraphKind::Canonical;
  return std::nullopt;
}

void DepGraph::add_edge(AtomId u, AtomId v) {
  auto& s = succ_.at(u);
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || *it != v) s.insert(it, v);
}

bool DepGraph::has_edge(AtomId u, AtomId v) const {
  const auto& s = succ_.at(u);
  return std::binary_search(s.begin(), s.end(), v);
}

std::vector<std::pair<AtomId, AtomId>> DepGraph::edges() const {
  std::vector<std::pair<AtomId, AtomId>> out;
  for (std::size_t u = 0; u < succ_.size(); ++u)
    for (AtomId v : succ_[u]) out.emplace_back(static_cast<AtomId>(u), v);
  return out;
}

bool is_monotonic(const DlProgram& k, std::size_t dl) { return k.profile(dl).monotonic; }

namespace {

std::vector<std::size_t> all_rules(const DlProgram& k) {
  std::vector<std::size_t> out(k.rules().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

void add_weak_edges(const Rule& r, DepGraph& g) {
  for (const auto& b : r.pos)
    if (b.kind == BodyAtom::Kind::Ordinary) g.add_edge(r.head, b.id);
}

// Input-predicate atoms whose arguments all occur among the query arguments.
std::vector<AtomId> query_instances(const DlProgram& k, std::size_t dl) {
  const auto& args = k.dl_atoms()[dl].query.args;
  std::set<std::string> allowed(args.begin(), args.end());
  std::vector<AtomId> out;
  for (AtomId v : k.input_atoms(dl)) {
    const auto& a = k.herbrand_base()[v];
    if (std::all_of(a.args.begin(), a.args.end(), [&](const auto& c) { return allowed.contains(c); }))
      out.push_back(v);
  }
  return out;
}

}  // namespace

DepGraph weak_graph(const DlProgram& k) { return weak_graph(k, all_rules(k)); }

DepGraph weak_graph(const DlProgram& k, const std::vector<std::size_t>& rules) {
  DepGraph g(GraphKind::Weak, k.hb_size());
  for (auto r : rules) add_weak_edges(k.rules()[r], g);
  return g;
}

DepGraph strong_graph(const DlProgram& k) { return strong_graph(k, all_rules(k)); }

// A monotonic positive dl-atom contributes edges to its input instances over
// the query constants and to every atom it positively depends on.
DepGraph strong_graph(const DlProgram& k, const std::vector<std::size_t>& rules) {
  DepGraph g(GraphKind::Strong, k.hb_size());
  for (auto ri : rules) {
    const Rule& r = k.rules()[ri];
    add_weak_edges(r, g);
    for (const auto& b : r.pos) {
      if (b.kind != BodyAtom::Kind::Dl) continue;
      const DlProfile& p = k.profile(b.id);
      if (!p.monotonic) continue;
      for (AtomId v : query_instances(k, b.id)) g.add_edge(r.head, v);
      p.positive_deps.for_each([&](AtomId v) { g.add_edge(r.head, v); });
    }
  }
  return g;
}

DepGraph canonical_graph(const DlProgram& k) {
  DepGraph g(GraphKind::Canonical, k.hb_size());
  for (const auto& r : k.rules()) {
    add_weak_edges(r, g);
    for (const auto& b : r.pos)
      if (b.kind == BodyAtom::Kind::Dl) k.profile(b.id).positive_deps.for_each([&](AtomId v) { g.add_edge(r.head, v); });
    for (const auto& b : r.neg)
      if (b.kind == BodyAtom::Kind::Dl) k.profile(b.id).negative_deps.for_each([&](AtomId v) { g.add_edge(r.head, v); });
  }
  return g;
}

DepGraph dependency_graph(const DlProgram& k, GraphKind kind) {
  switch (kind) {
    case GraphKind::Weak: return weak_graph(k);
    case GraphKind::Strong: return strong_graph(k);
    case GraphKind::Canonical: return canonical_graph(k);
  }
  return {};
}

namespace {

// Tarjan's algorithm on the subgraph induced by `within`.
std::vector<std::vector<AtomId>> components(const DepGraph& g, const AtomSet& within) {
  const std::size_t n = g.vertex_count();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<AtomId> stack;
  std::vector<std::vector<AtomId>> out;
  int counter = 0;
  std::function<void(AtomId)> visit = [&](AtomId v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (AtomId w : g.successors(v)) {
      if (!within.contains(w)) continue;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<AtomId> comp;
      AtomId w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
  };
  within.for_each([&](AtomId v) {
    if (index[v] < 0) visit(v);
  });
  return out;
}

bool nontrivial(const DepGraph& g, const std::vector<AtomId>& comp) {
  return comp.size() > 1 || g.has_edge(comp[0], comp[0]);
}

bool strongly_connected_loop(const DepGraph& g, const AtomSet& s) {
  auto comps = components(g, s);
  return comps.size() == 1 && nontrivial(g, comps[0]);
}

}  // namespace

std::vector<AtomSet> loops(const DepGraph& g, std::size_t max_component) {
  const std::size_t n = g.vertex_count();
  std::vector<AtomSet> out;
  for (const auto& comp : components(g, AtomSet::full(n))) {
    if (!nontrivial(g, comp)) continue;
    if (comp.size() > max_component)
      throw TooLarge("strongly connected component of " + std::to_string(comp.size()) + " atoms (bound " +
                     std::to_string(max_component) + ")");
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << comp.size()); ++m) {
      AtomSet s = AtomSet::from_mask(n, comp, m);
      if (strongly_connected_loop(g, s)) out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<AtomSet> terminating_loop(const DepGraph& g, const AtomSet& restrict) {
  const std::size_t n = g.vertex_count();
  auto comps = components(g, restrict);
  std::vector<std::size_t> comp_of(n, 0);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (AtomId v : comps[c]) comp_of[v] = c;

  std::optional<AtomSet> best;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (!nontrivial(g, comps[c])) continue;
    std::vector<char> seen(comps.size(), 0);
    std::vector<std::size_t> todo{c};
    seen[c] = 1;
    bool reaches_other = false;
    while (!todo.empty() && !reaches_other) {
      std::size_t x = todo.back();
      todo.pop_back();
      for (AtomId v : comps[x])
        for (AtomId w : g.successors(v)) {
          if (!restrict.contains(w)) continue;
          std::size_t y = comp_of[w];
          if (seen[y]) continue;
          seen[y] = 1;
          if (nontrivial(g, comps[y])) reaches_other = true;
          todo.push_back(y);
        }
    }
    if (reaches_other) continue;
    AtomSet s(n);
    for (AtomId v : comps[c]) s.insert(v);
    if (!best || s < *best) best = std::move(s);
  }
  return best;
}

Witness psup(const DlProgram& k, std::size_t dl, const Interpretation& i1, const Interpretation& i2) {
  if (!i1.proper_subset_of(i2) || k.satisfies_dl(dl, i1) || !k.satisfies_dl(dl, i2))
    throw PreconditionViolated("psup needs I1 ⊂ I2, I1 ⊭ A and I2 ⊨ A");
  Interpretation current = i2;
  AtomId h = 0;
  for (AtomId candidate : (i2 - i1).elements()) {
    h = candidate;
    Interpretation smaller = current;
    smaller.erase(h);
    if (!k.satisfies_dl(dl, smaller)) break;
    current = std::move(smaller);
  }
  Interpretation without = current;
  without.erase(h);
  if (!i1.proper_subset_of(current) || !current.subset_of(i2) || !current.contains(h) ||
      !k.satisfies_dl(dl, current) || k.satisfies_dl(dl, without))
    throw std::logic_error("psup postcondition failed");
  return {std::move(current), h};
}

// The witness is the last interpretation that still satisfies A; h* is the
// atom whose addition falsifies it.
Witness nsup(const DlProgram& k, std::size_t dl, const Interpretation& i1, const Interpretation& i2) {
  if (!i1.proper_subset_of(i2) || !k.satisfies_dl(dl, i1) || k.satisfies_dl(dl, i2))
    throw PreconditionViolated("nsup needs I1 ⊂ I2, I1 ⊨ A and I2 ⊭ A");
  Interpretation current = i1;
  AtomId h = 0;
  for (AtomId candidate : (i2 - i1).elements()) {
    h = candidate;
    Interpretation larger = current;
    larger.insert(h);
    if (!k.satisfies_dl(dl, larger)) break;
    current = std::move(larger);
  }
  Interpretation with = current;
  with.insert(h);
  if (!i1.subset_of(current) || !current.proper_subset_of(i2) || current.contains(h) || !i2.contains(h) ||
      !k.satisfies_dl(dl, current) || k.satisfies_dl(dl, with))
    throw std::logic_error("nsup postcondition failed");
  return {std::move(current), h};
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const DlProgram& k, const DepGraph& g) {
  std::optional<DepGraph> weak, strong;
  if (g.kind() != GraphKind::Weak) weak = weak_graph(k);
  if (g.kind() == GraphKind::Canonical) strong = strong_graph(k);
  std::string out = std::string("digraph ") + to_string(g.kind()) + " {\n  node [shape=box];\n";
  for (AtomId v = 0; v < k.hb_size(); ++v) out += "  " + quoted(k.atom_name(v)) + ";\n";
  for (auto [u, v] : g.edges()) {
    const char* color = "black";
    if (weak && !weak->has_edge(u, v)) color = (strong && !strong->has_edge(u, v)) ? "red" : "blue";
    out += "  " + quoted(k.atom_name(u)) + " -> " + quoted(k.atom_name(v)) + " [color=" + color + "];\n";
  }
  return out + "}\n";
}

}  // namespace dlp
