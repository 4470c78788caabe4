#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "dlp/dlp.hpp"

namespace dlp::testing {

using Rng = std::mt19937_64;

std::filesystem::path data_path(const std::string& name);
DlProgram load_data(const std::string& name, Limits limits = {});

/// Shape of generated programs. Predicates are unary; HB stays within max_hb.
struct GenParams {
  std::size_t max_predicates = 4;
  std::size_t max_constants = 3;
  std::size_t max_rules = 6;
  std::size_t max_axioms = 3;
  std::size_t max_body = 3;
  std::size_t max_hb = 12;
  bool allow_restrict = true;
};

Concept random_concept(Rng& rng, const std::vector<std::string>& names, const std::vector<std::string>& roles,
                       int depth);
ProgramSource random_source(Rng& rng, const GenParams& params = {});

/// A fixed corpus: seeds 0..count-1, every fourth program without ⊖.
std::vector<DlProgram> corpus(std::size_t count, std::uint64_t seed = 7);

/// ALC reasoning by enumerating every interpretation over domains of size
/// |individuals| .. max_domain (at least 1), individuals named injectively.
bool fm_consistent(const Ontology& o, int max_domain = 3);
bool fm_entails(const Ontology& o, const DlQuery& q, int max_domain = 3);

/// Every vertex subset inducing a strongly connected subgraph with an edge.
std::vector<AtomSet> brute_loops(const DepGraph& g);

/// Truth of a formula whose leaves are Ground atoms, under an assignment.
bool tt_eval(const Formula& f, const AtomSet& assignment);
/// All assignments over n atoms satisfying every formula, ascending.
std::vector<AtomSet> tt_models(const std::vector<Formula>& fs, std::size_t n);
Formula random_formula(Rng& rng, std::size_t atoms, int depth);

/// Weak/strong answer sets straight from the definitions: monotonicity by
/// scanning every pair I ⊆ J of interpretations, dl truth by augment + entails.
std::vector<Interpretation> reference_answer_sets(const DlProgram& k, Semantics s);

std::vector<Interpretation> all_interpretations(const DlProgram& k);

/// Some dl-atom input uses the complement operator.
bool has_restrict(const DlProgram& k);

/// Checks the answer set propositions on one program: canonical ⊆ strong ⊆ weak,
/// canonical answer sets incomparable and noncircular, canonical = strong without ⊖,
/// sLF → wLF for every weak loop, supported models = completion models.
/// Returns one message per violation.
std::vector<std::string> proposition_violations(const DlProgram& k);
std::string show(const DlProgram& k, const std::vector<Interpretation>& is);

}  // namespace dlp::testing
