#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dlp/atom_set.hpp"
#include "dlp/ontology.hpp"
#include "dlp/vocabulary.hpp"

namespace dlp {

/// An interpretation is a subset of the Herbrand base, indexed by AtomId.
using Interpretation = AtomSet;

struct Predicate {
  std::string name;
  std::size_t arity = 0;

  friend auto operator<=>(const Predicate&, const Predicate&) = default;
  friend bool operator==(const Predicate&, const Predicate&) = default;
};

/// DL[S1 op1 p1, ..., Sm opm pm; Q](t). The query carries the argument tuple.
struct DlAtom {
  std::vector<DlInput> inputs;
  DlQuery query;

  std::string to_string() const;
  friend auto operator<=>(const DlAtom&, const DlAtom&) = default;
  friend bool operator==(const DlAtom&, const DlAtom&) = default;
};

/// Rule and program syntax as written, before vocabulary tables are built.
struct Literal {
  bool negated = false;
  std::variant<GroundAtom, DlAtom> atom;

  std::string to_string() const;
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct RuleSource {
  GroundAtom head;
  std::vector<Literal> body;

  std::string to_string() const;
  friend bool operator==(const RuleSource&, const RuleSource&) = default;
};

struct ProgramSource {
  Ontology ontology;
  std::vector<RuleSource> rules;

  /// Text in the input grammar; parsing it back yields an equal value.
  std::string to_string() const;
  friend bool operator==(const ProgramSource&, const ProgramSource&) = default;
};

struct Limits {
  std::size_t max_herbrand = 20;      // brute-force oracles
  std::size_t max_input_atoms = 14;   // per dl-atom truth tables
  std::size_t max_loop_vertices = 16; // subset enumeration in one SCC
  std::size_t max_loop_formulas = 100000;
};

/// A body member: an ordinary atom (id into the Herbrand base) or a dl-atom
/// (id into the program's deduplicated dl-atom table).
struct BodyAtom {
  enum class Kind { Ordinary, Dl };
  Kind kind = Kind::Ordinary;
  std::uint32_t id = 0;

  friend auto operator<=>(const BodyAtom&, const BodyAtom&) = default;
  friend bool operator==(const BodyAtom&, const BodyAtom&) = default;
};

struct Rule {
  AtomId head = 0;
  std::vector<BodyAtom> pos;
  std::vector<BodyAtom> neg;
};

/// Truth table summary of a dl-atom over its input atoms.
struct DlProfile {
  bool monotonic = true;
  /// v with I ⊭ A and I ∪ {v} ⊨ A for some I.
  AtomSet positive_deps;
  /// v with I ⊨ A and I ∪ {v} ⊭ A for some I.
  AtomSet negative_deps;
};

/// A ground dl-program K = (O, P) with its Herbrand base materialized.
/// Copies are cheap and share the immutable tables and the dl-atom caches.
class DlProgram {
public:
  /// Throws VocabularyClash, ArityMismatch.
  static DlProgram build(ProgramSource source, Limits limits = {});

  const ProgramSource& source() const noexcept;
  const Ontology& ontology() const noexcept;
  const Limits& limits() const noexcept { return limits_; }
  DlProgram with_limits(Limits limits) const;

  const std::vector<std::string>& constants() const noexcept;
  const std::vector<Predicate>& predicates() const noexcept;
  std::optional<std::size_t> predicate_index(const std::string& name) const;
  /// Herbrand base atoms of the predicate, in AtomId order.
  const std::vector<AtomId>& atoms_of(std::size_t predicate) const;

  /// Herbrand base in lexicographic order of the printed atoms; position = AtomId.
  const std::vector<GroundAtom>& herbrand_base() const noexcept;
  std::size_t hb_size() const noexcept;
  std::optional<AtomId> find(const GroundAtom& a) const;
  /// Throws PreconditionViolated when `a` is not in the Herbrand base.
  AtomId id_of(const GroundAtom& a) const;
  const std::string& atom_name(AtomId id) const;
  /// Predicate index of an atom.
  std::size_t predicate_of(AtomId id) const;

  const std::vector<Rule>& rules() const noexcept;
  const std::vector<std::size_t>& rules_with_head(AtomId h) const;

  const std::vector<DlAtom>& dl_atoms() const noexcept;
  std::optional<std::size_t> find_dl(const DlAtom& a) const;
  /// Herbrand base atoms over the input predicates of dl-atom `dl`, ascending.
  const std::vector<AtomId>& input_atoms(std::size_t dl) const;
  /// Union of input_atoms(dl) as a set.
  const AtomSet& input_mask(std::size_t dl) const;
  /// Predicate indices of the inputs of `dl`, ascending, without duplicates.
  const std::vector<std::size_t>& input_predicates(std::size_t dl) const;

  /// I ⊨_O A for the dl-atom `dl`. Memoized on I's input-atom pattern.
  bool satisfies_dl(std::size_t dl, const Interpretation& i) const;
  bool satisfies(const BodyAtom& b, const Interpretation& i) const;
  bool satisfies_body(const Rule& r, const Interpretation& i) const;
  /// Monotonicity and dependency atoms of `dl`. Throws TooLarge past max_input_atoms.
  const DlProfile& profile(std::size_t dl) const;

  Interpretation empty_interpretation() const { return Interpretation(hb_size()); }
  /// Throws PreconditionViolated for atoms outside the Herbrand base.
  Interpretation interpretation(const std::vector<GroundAtom>& atoms) const;
  std::vector<GroundAtom> atoms(const Interpretation& i) const;
  /// `p(a),q(b)` in lexicographic order, or `∅`.
  std::string format(const Interpretation& i) const;
  std::string format_body_atom(const BodyAtom& b) const;
  std::string format_rule(const Rule& r) const;

private:
  struct Data;
  DlProgram(std::shared_ptr<Data> d, Limits l) : data_(std::move(d)), limits_(l) {}
  std::shared_ptr<Data> data_;
  Limits limits_;
};

/// Herbrand base of the program as ground atoms.
std::vector<GroundAtom> herbrand_base(const DlProgram& k);

/// I ⊨_O a for an ordinary atom or dl-atom over the program's vocabulary.
bool satisfies_atom(const DlProgram& k, const Interpretation& i, const std::variant<GroundAtom, DlAtom>& a);

bool is_model(const DlProgram& k, const Interpretation& i);
bool is_supported_model(const DlProgram& k, const Interpretation& i);

}  // namespace dlp
