#include "tableau.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace dlp::detail {
namespace {

// Concepts in negation normal form, hash-consed into dense ids.
class ConceptPool {
public:
  enum class K : std::uint8_t { Top, Bottom, Atom, NegAtom, And, Or, Exists, Forall };
  struct Entry {
    K kind;
    int name;  // concept name id (Atom/NegAtom) or role id (Exists/Forall)
    int a;
    int b;
  };

  int role(const std::string& r) { return id_of(roles_, r); }

  int nnf(const Concept& c, bool negated) {
    using CK = Concept::Kind;
    switch (c.kind()) {
      case CK::Atomic: return intern(negated ? K::NegAtom : K::Atom, id_of(names_, c.name()), -1, -1);
      case CK::Top: return intern(negated ? K::Bottom : K::Top, -1, -1, -1);
      case CK::Bottom: return intern(negated ? K::Top : K::Bottom, -1, -1, -1);
      case CK::Not: return nnf(c.first(), !negated);
      case CK::And:
      case CK::Or: {
        bool is_and = (c.kind() == CK::And) != negated;
        int l = nnf(c.first(), negated);
        int r = nnf(c.second(), negated);
        return intern(is_and ? K::And : K::Or, -1, l, r);
      }
      case CK::Forall:
      case CK::Exists: {
        bool is_all = (c.kind() == CK::Forall) != negated;
        int inner = nnf(c.first(), negated);
        return intern(is_all ? K::Forall : K::Exists, role(c.name()), inner, -1);
      }
    }
    return -1;
  }

  int disjunction(int a, int b) { return intern(K::Or, -1, a, b); }

  const Entry& at(int id) const { return entries_[static_cast<std::size_t>(id)]; }
  std::size_t size() const noexcept { return entries_.size(); }

  /// For Atom/NegAtom ids, the id of the complementary literal if interned, else -1.
  std::vector<int> complements() const {
    std::vector<int> out(entries_.size(), -1);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const Entry& e = entries_[i];
      if (e.kind != K::Atom && e.kind != K::NegAtom) continue;
      K other = e.kind == K::Atom ? K::NegAtom : K::Atom;
      auto it = index_.find({static_cast<int>(other), e.name, -1, -1});
      if (it != index_.end()) out[i] = it->second;
    }
    return out;
  }

private:
  static int id_of(std::map<std::string, int>& m, const std::string& s) {
    auto [it, inserted] = m.emplace(s, static_cast<int>(m.size()));
    return it->second;
  }

  int intern(K kind, int name, int a, int b) {
    auto key = std::make_tuple(static_cast<int>(kind), name, a, b);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(entries_.size());
    entries_.push_back({kind, name, a, b});
    index_.emplace(key, id);
    return id;
  }

  std::vector<Entry> entries_;
  std::map<std::tuple<int, int, int, int>, int> index_;
  std::map<std::string, int> names_;
  std::map<std::string, int> roles_;
};

class Label {
public:
  explicit Label(std::size_t n) : words_((n + 63) / 64, 0) {}
  bool test(int i) const { return words_[static_cast<std::size_t>(i) / 64] >> (i % 64) & 1U; }
  void set(int i) { words_[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64); }
  bool subset_of(const Label& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        f(static_cast<int>(w * 64) + b);
        bits &= bits - 1;
      }
    }
  }

private:
  std::vector<std::uint64_t> words_;
};

struct Node {
  Label label;
  int parent = -1;
  bool named = false;
  std::vector<std::pair<int, int>> successors;  // (role, node)
};

struct State {
  std::vector<Node> nodes;
};

using Work = std::vector<std::pair<int, int>>;  // (node, concept)

class Tableau {
public:
  Tableau(const ConceptPool& pool, std::vector<int> tbox)
      : pool_(pool), complement_(pool.complements()), tbox_(std::move(tbox)) {}

  int add_node(State& s, int parent, bool named, Work& work) const {
    int id = static_cast<int>(s.nodes.size());
    s.nodes.push_back(Node{Label(pool_.size()), parent, named, {}});
    for (int t : tbox_) work.emplace_back(id, t);
    return id;
  }

  void add_edge(State& s, int from, int role, int to, Work& work) const {
    s.nodes[static_cast<std::size_t>(from)].successors.emplace_back(role, to);
    s.nodes[static_cast<std::size_t>(from)].label.for_each([&](int c) {
      const auto& e = pool_.at(c);
      if (e.kind == ConceptPool::K::Forall && e.name == role) work.emplace_back(to, e.a);
    });
  }

  bool run(State s, Work work) const {
    for (;;) {
      if (!saturate(s, work)) return false;
      if (auto choice = open_disjunction(s)) {
        auto [x, c] = *choice;
        const auto& e = pool_.at(c);
        if (run(s, Work{{x, e.a}})) return true;
        work.emplace_back(x, e.b);
        continue;
      }
      if (expand_exists(s, work)) continue;
      return true;
    }
  }

private:
  using K = ConceptPool::K;

  // Deterministic rules: conjunction, universal restriction, clash detection.
  bool saturate(State& s, Work& work) const {
    while (!work.empty()) {
      auto [x, c] = work.back();
      work.pop_back();
      Node& n = s.nodes[static_cast<std::size_t>(x)];
      if (n.label.test(c)) continue;
      n.label.set(c);
      const auto& e = pool_.at(c);
      switch (e.kind) {
        case K::Bottom: return false;
        case K::Atom:
        case K::NegAtom: {
          int comp = complement_[static_cast<std::size_t>(c)];
          if (comp >= 0 && n.label.test(comp)) return false;
          break;
        }
        case K::And:
          work.emplace_back(x, e.a);
          work.emplace_back(x, e.b);
          break;
        case K::Forall:
          for (auto [r, y] : n.successors)
            if (r == e.name) work.emplace_back(y, e.a);
          break;
        default: break;
      }
    }
    return true;
  }

  std::optional<std::pair<int, int>> open_disjunction(const State& s) const {
    for (std::size_t x = 0; x < s.nodes.size(); ++x) {
      std::optional<std::pair<int, int>> found;
      const Label& l = s.nodes[x].label;
      l.for_each([&](int c) {
        if (found) return;
        const auto& e = pool_.at(c);
        if (e.kind == K::Or && !l.test(e.a) && !l.test(e.b)) found = std::make_pair(static_cast<int>(x), c);
      });
      if (found) return found;
    }
    return std::nullopt;
  }

  // Anonymous node x is blocked if an anonymous ancestor's label contains its
  // own, or if its parent is blocked.
  std::vector<char> blocked(const State& s) const {
    std::vector<char> out(s.nodes.size(), 0);
    for (std::size_t x = 0; x < s.nodes.size(); ++x) {
      const Node& n = s.nodes[x];
      if (n.named || n.parent < 0) continue;
      const Node& parent = s.nodes[static_cast<std::size_t>(n.parent)];
      if (!parent.named && out[static_cast<std::size_t>(n.parent)]) {
        out[x] = 1;
        continue;
      }
      for (int y = n.parent; y >= 0 && !s.nodes[static_cast<std::size_t>(y)].named;
           y = s.nodes[static_cast<std::size_t>(y)].parent) {
        if (n.label.subset_of(s.nodes[static_cast<std::size_t>(y)].label)) {
          out[x] = 1;
          break;
        }
      }
    }
    return out;
  }

  bool expand_exists(State& s, Work& work) const {
    auto is_blocked = blocked(s);
    for (std::size_t x = 0; x < s.nodes.size(); ++x) {
      if (is_blocked[x]) continue;
      std::optional<int> pending;
      s.nodes[x].label.for_each([&](int c) {
        if (pending) return;
        const auto& e = pool_.at(c);
        if (e.kind != K::Exists) return;
        for (auto [r, y] : s.nodes[x].successors)
          if (r == e.name && s.nodes[static_cast<std::size_t>(y)].label.test(e.a)) return;
        pending = c;
      });
      if (!pending) continue;
      const auto& e = pool_.at(*pending);
      int y = add_node(s, static_cast<int>(x), false, work);
      work.emplace_back(y, e.a);
      add_edge(s, static_cast<int>(x), e.name, y, work);
      return true;
    }
    return false;
  }

  const ConceptPool& pool_;
  std::vector<int> complement_;
  std::vector<int> tbox_;
};

}  // namespace

bool tableau_satisfiable(const Ontology& o) {
  ConceptPool pool;
  std::vector<int> tbox;
  for (const auto& ax : o.tbox()) tbox.push_back(pool.disjunction(pool.nnf(ax.lhs, true), pool.nnf(ax.rhs, false)));

  struct Pending {
    std::string a;
    int expr;
  };
  std::vector<Pending> concept_assertions;
  std::vector<std::tuple<std::string, int, std::string>> edges, negated_edges;
  for (const auto& as : o.abox()) {
    switch (as.kind) {
      case Assertion::Kind::Concept: concept_assertions.push_back({as.first, pool.nnf(as.expr, false)}); break;
      case Assertion::Kind::Role: edges.emplace_back(as.first, pool.role(as.role), as.second); break;
      case Assertion::Kind::NegatedRole: negated_edges.emplace_back(as.first, pool.role(as.role), as.second); break;
      default: break;
    }
  }
  // Without nominals, a negated role assertion can only clash with an explicit one.
  for (const auto& ne : negated_edges)
    for (const auto& e : edges)
      if (ne == e) return false;

  Tableau tab(pool, std::move(tbox));
  State s;
  Work work;
  std::map<std::string, int> node_of;
  for (const auto& ind : o.individuals()) node_of[ind] = tab.add_node(s, -1, true, work);
  if (s.nodes.empty()) tab.add_node(s, -1, false, work);
  for (const auto& [a, r, b] : edges) tab.add_edge(s, node_of.at(a), r, node_of.at(b), work);
  for (const auto& p : concept_assertions) work.emplace_back(node_of.at(p.a), p.expr);
  return tab.run(std::move(s), std::move(work));
}

}  // namespace dlp::detail
