#include "dlp/program.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>

#include "dlp/error.hpp"

namespace dlp {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string DlAtom::to_string() const {
  std::vector<std::string> in;
  for (const auto& i : inputs) in.push_back(i.to_string());
  return format_application("DL[" + join(in, ", ") + "; " + query.body_to_string() + "]", query.args);
}

std::string Literal::to_string() const {
  std::string body = std::visit([](const auto& a) { return a.to_string(); }, atom);
  return negated ? "not " + body : body;
}

std::string RuleSource::to_string() const {
  std::string out = head.to_string();
  if (!body.empty()) {
    std::vector<std::string> parts;
    for (const auto& l : body) parts.push_back(l.to_string());
    out += " :- " + join(parts, ", ");
  }
  return out + ".";
}

std::string ProgramSource::to_string() const {
  std::string out = "#ontology\n";
  for (const auto& ax : ontology.tbox()) out += ax.to_string() + ".\n";
  for (const auto& as : ontology.abox()) out += as.to_string() + ".\n";
  out += "#rules\n";
  for (const auto& r : rules) out += r.to_string() + "\n";
  return out;
}

struct DlProgram::Data {
  ProgramSource source;
  std::vector<std::string> constants;
  std::vector<Predicate> predicates;
  std::map<std::string, std::size_t> predicate_index;
  std::vector<std::vector<AtomId>> atoms_of_predicate;

  std::vector<GroundAtom> hb;
  std::vector<std::string> hb_names;
  std::vector<std::size_t> hb_predicate;
  std::map<GroundAtom, AtomId> hb_index;

  std::vector<Rule> rules;
  std::vector<std::vector<std::size_t>> rules_by_head;

  std::vector<DlAtom> dl;
  std::map<DlAtom, std::size_t> dl_index;
  std::vector<std::vector<AtomId>> dl_inputs;
  std::vector<AtomSet> dl_masks;
  std::vector<std::vector<std::size_t>> dl_input_predicates;

  mutable std::mutex mu;
  mutable std::vector<std::unordered_map<AtomSet, bool, AtomSetHash>> cache;
  mutable std::vector<std::unique_ptr<DlProfile>> profiles;
};

namespace {

void note_predicate(std::map<std::string, std::size_t>& arities, const std::string& name, std::size_t arity) {
  auto [it, inserted] = arities.emplace(name, arity);
  if (!inserted && it->second != arity)
    throw ArityMismatch("predicate " + name + " used with arities " + std::to_string(it->second) + " and " +
                        std::to_string(arity));
}

void collect_query_names(const DlQuery& q, std::set<std::string>& concepts, std::set<std::string>& roles) {
  q.expr.collect_names(concepts, roles);
  q.rhs.collect_names(concepts, roles);
  if (!q.role.empty()) roles.insert(q.role);
}

}  // namespace

DlProgram DlProgram::build(ProgramSource source, Limits limits) {
  auto d = std::make_shared<Data>();
  d->source = std::move(source);
  const auto& src = d->source;

  std::map<std::string, std::size_t> arities;
  std::set<std::string> constants;
  std::set<std::string> concepts, roles;
  for (const auto& ax : src.ontology.tbox()) {
    ax.lhs.collect_names(concepts, roles);
    ax.rhs.collect_names(concepts, roles);
  }
  for (const auto& as : src.ontology.abox()) {
    as.expr.collect_names(concepts, roles);
    if (!as.role.empty()) roles.insert(as.role);
  }

  auto note_atom = [&](const GroundAtom& a) {
    note_predicate(arities, a.predicate, a.args.size());
    constants.insert(a.args.begin(), a.args.end());
  };
  for (const auto& r : src.rules) {
    note_atom(r.head);
    for (const auto& l : r.body) {
      if (const auto* g = std::get_if<GroundAtom>(&l.atom)) {
        note_atom(*g);
        continue;
      }
      const auto& dl = std::get<DlAtom>(l.atom);
      for (const auto& in : dl.inputs) {
        note_predicate(arities, in.predicate, in.symbol.arity());
        in.symbol.expr.collect_names(concepts, roles);
        if (!in.symbol.role.empty()) roles.insert(in.symbol.role);
      }
      collect_query_names(dl.query, concepts, roles);
      constants.insert(dl.query.args.begin(), dl.query.args.end());
    }
  }
  for (const auto& [name, arity] : arities)
    if (concepts.contains(name) || roles.contains(name))
      throw VocabularyClash("predicate " + name + " is also an ontology " + (roles.contains(name) ? "role" : "concept"));

  d->constants.assign(constants.begin(), constants.end());
  for (const auto& [name, arity] : arities) {
    d->predicate_index.emplace(name, d->predicates.size());
    d->predicates.push_back({name, arity});
  }

  std::vector<std::pair<std::string, GroundAtom>> named;
  for (const auto& p : d->predicates)
    for (auto& t : all_tuples(d->constants, p.arity)) {
      GroundAtom a{p.name, std::move(t)};
      named.emplace_back(a.to_string(), std::move(a));
    }
  std::sort(named.begin(), named.end());
  d->atoms_of_predicate.resize(d->predicates.size());
  for (auto& [name, atom] : named) {
    auto id = static_cast<AtomId>(d->hb.size());
    std::size_t pred = d->predicate_index.at(atom.predicate);
    d->hb_index.emplace(atom, id);
    d->hb_names.push_back(std::move(name));
    d->hb_predicate.push_back(pred);
    d->atoms_of_predicate[pred].push_back(id);
    d->hb.push_back(std::move(atom));
  }
  const std::size_t n = d->hb.size();

  auto intern_dl = [&](const DlAtom& a) {
    auto [it, inserted] = d->dl_index.emplace(a, d->dl.size());
    if (inserted) {
      std::set<std::size_t> preds;
      for (const auto& in : a.inputs) preds.insert(d->predicate_index.at(in.predicate));
      std::vector<AtomId> atoms;
      for (auto p : preds) atoms.insert(atoms.end(), d->atoms_of_predicate[p].begin(), d->atoms_of_predicate[p].end());
      std::sort(atoms.begin(), atoms.end());
      AtomSet mask(n);
      for (auto id : atoms) mask.insert(id);
      d->dl.push_back(a);
      d->dl_inputs.push_back(std::move(atoms));
      d->dl_masks.push_back(std::move(mask));
      d->dl_input_predicates.emplace_back(preds.begin(), preds.end());
    }
    return static_cast<std::uint32_t>(it->second);
  };

  d->rules_by_head.resize(n);
  for (const auto& r : src.rules) {
    Rule rule;
    rule.head = d->hb_index.at(r.head);
    for (const auto& l : r.body) {
      BodyAtom b;
      if (const auto* g = std::get_if<GroundAtom>(&l.atom)) {
        b = {BodyAtom::Kind::Ordinary, d->hb_index.at(*g)};
      } else {
        b = {BodyAtom::Kind::Dl, intern_dl(std::get<DlAtom>(l.atom))};
      }
      (l.negated ? rule.neg : rule.pos).push_back(b);
    }
    d->rules_by_head[rule.head].push_back(d->rules.size());
    d->rules.push_back(std::move(rule));
  }
  d->cache.resize(d->dl.size());
  d->profiles.resize(d->dl.size());
  return DlProgram(std::move(d), limits);
}

const ProgramSource& DlProgram::source() const noexcept { return data_->source; }
const Ontology& DlProgram::ontology() const noexcept { return data_->source.ontology; }
DlProgram DlProgram::with_limits(Limits limits) const { return DlProgram(data_, limits); }

const std::vector<std::string>& DlProgram::constants() const noexcept { return data_->constants; }
const std::vector<Predicate>& DlProgram::predicates() const noexcept { return data_->predicates; }

std::optional<std::size_t> DlProgram::predicate_index(const std::string& name) const {
  auto it = data_->predicate_index.find(name);
  if (it == data_->predicate_index.end()) return std::nullopt;
  return it->second;
}

const std::vector<AtomId>& DlProgram::atoms_of(std::size_t predicate) const {
  return data_->atoms_of_predicate.at(predicate);
}

const std::vector<GroundAtom>& DlProgram::herbrand_base() const noexcept { return data_->hb; }
std::size_t DlProgram::hb_size() const noexcept { return data_->hb.size(); }

std::optional<AtomId> DlProgram::find(const GroundAtom& a) const {
  auto it = data_->hb_index.find(a);
  if (it == data_->hb_index.end()) return std::nullopt;
  return it->second;
}

AtomId DlProgram::id_of(const GroundAtom& a) const {
  if (auto id = find(a)) return *id;
  throw PreconditionViolated(a.to_string() + " is not in the Herbrand base");
}

const std::string& DlProgram::atom_name(AtomId id) const { return data_->hb_names.at(id); }
std::size_t DlProgram::predicate_of(AtomId id) const { return data_->hb_predicate.at(id); }

const std::vector<Rule>& DlProgram::rules() const noexcept { return data_->rules; }
const std::vector<std::size_t>& DlProgram::rules_with_head(AtomId h) const { return data_->rules_by_head.at(h); }

const std::vector<DlAtom>& DlProgram::dl_atoms() const noexcept { return data_->dl; }

std::optional<std::size_t> DlProgram::find_dl(const DlAtom& a) const {
  auto it = data_->dl_index.find(a);
  if (it == data_->dl_index.end()) return std::nullopt;
  return it->second;
}

const std::vector<AtomId>& DlProgram::input_atoms(std::size_t dl) const { return data_->dl_inputs.at(dl); }
const AtomSet& DlProgram::input_mask(std::size_t dl) const { return data_->dl_masks.at(dl); }
const std::vector<std::size_t>& DlProgram::input_predicates(std::size_t dl) const {
  return data_->dl_input_predicates.at(dl);
}

namespace {

bool evaluate_dl(const Ontology& o, const DlAtom& a, const std::set<GroundAtom>& atoms,
                 const std::vector<std::string>& constants) {
  return entails(augment(o, atoms, a.inputs, constants), a.query);
}

}  // namespace

bool DlProgram::satisfies_dl(std::size_t dl, const Interpretation& i) const {
  const Data& d = *data_;
  AtomSet key = d.dl_masks.at(dl);
  key &= i;
  {
    std::lock_guard lock(d.mu);
    auto& c = d.cache[dl];
    if (auto it = c.find(key); it != c.end()) return it->second;
  }
  std::set<GroundAtom> atoms;
  key.for_each([&](AtomId id) { atoms.insert(d.hb[id]); });
  bool value = evaluate_dl(d.source.ontology, d.dl[dl], atoms, d.constants);
  std::lock_guard lock(d.mu);
  d.cache[dl].emplace(std::move(key), value);
  return value;
}

bool DlProgram::satisfies(const BodyAtom& b, const Interpretation& i) const {
  return b.kind == BodyAtom::Kind::Ordinary ? i.contains(b.id) : satisfies_dl(b.id, i);
}

bool DlProgram::satisfies_body(const Rule& r, const Interpretation& i) const {
  for (const auto& b : r.pos)
    if (!satisfies(b, i)) return false;
  for (const auto& b : r.neg)
    if (satisfies(b, i)) return false;
  return true;
}

const DlProfile& DlProgram::profile(std::size_t dl) const {
  const Data& d = *data_;
  {
    std::lock_guard lock(d.mu);
    if (d.profiles.at(dl)) return *d.profiles[dl];
  }
  const auto& inputs = d.dl_inputs.at(dl);
  if (inputs.size() > limits_.max_input_atoms)
    throw TooLarge(d.dl[dl].to_string() + " has " + std::to_string(inputs.size()) + " input atoms (bound " +
                   std::to_string(limits_.max_input_atoms) + ")");
  const std::size_t n = inputs.size();
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<char> table(count);
  for (std::uint64_t m = 0; m < count; ++m)
    table[m] = satisfies_dl(dl, AtomSet::from_mask(hb_size(), inputs, m)) ? 1 : 0;

  auto p = std::make_unique<DlProfile>();
  p->positive_deps = AtomSet(hb_size());
  p->negative_deps = AtomSet(hb_size());
  for (std::uint64_t m = 0; m < count; ++m)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t bit = std::uint64_t{1} << j;
      if (m & bit) continue;
      if (!table[m] && table[m | bit]) p->positive_deps.insert(inputs[j]);
      if (table[m] && !table[m | bit]) {
        p->negative_deps.insert(inputs[j]);
        p->monotonic = false;
      }
    }
  std::lock_guard lock(d.mu);
  if (!d.profiles[dl]) d.profiles[dl] = std::move(p);
  return *d.profiles[dl];
}

Interpretation DlProgram::interpretation(const std::vector<GroundAtom>& atoms) const {
  Interpretation out = empty_interpretation();
  for (const auto& a : atoms) out.insert(id_of(a));
  return out;
}

std::vector<GroundAtom> DlProgram::atoms(const Interpretation& i) const {
  std::vector<GroundAtom> out;
  i.for_each([&](AtomId id) { out.push_back(data_->hb[id]); });
  return out;
}

std::string DlProgram::format(const Interpretation& i) const {
  if (i.empty()) return "∅";
  std::vector<std::string> names;
  i.for_each([&](AtomId id) { names.push_back(data_->hb_names[id]); });
  return join(names, ",");
}

std::string DlProgram::format_body_atom(const BodyAtom& b) const {
  return b.kind == BodyAtom::Kind::Ordinary ? atom_name(b.id) : data_->dl.at(b.id).to_string();
}

std::string DlProgram::format_rule(const Rule& r) const {
  std::vector<std::string> parts;
  for (const auto& b : r.pos) parts.push_back(format_body_atom(b));
  for (const auto& b : r.neg) parts.push_back("not " + format_body_atom(b));
  std::string out = atom_name(r.head);
  if (!parts.empty()) out += " :- " + join(parts, ", ");
  return out + ".";
}

std::vector<GroundAtom> herbrand_base(const DlProgram& k) { return k.herbrand_base(); }

bool satisfies_atom(const DlProgram& k, const Interpretation& i, const std::variant<GroundAtom, DlAtom>& a) {
  if (const auto* g = std::get_if<GroundAtom>(&a)) {
    auto id = k.find(*g);
    return id && i.contains(*id);
  }
  const auto& dl = std::get<DlAtom>(a);
  if (auto id = k.find_dl(dl)) return k.satisfies_dl(*id, i);
  std::set<GroundAtom> atoms;
  i.for_each([&](AtomId id) { atoms.insert(k.herbrand_base()[id]); });
  return evaluate_dl(k.ontology(), dl, atoms, k.constants());
}

bool is_model(const DlProgram& k, const Interpretation& i) {
  for (const auto& r : k.rules())
    if (!i.contains(r.head) && k.satisfies_body(r, i)) return false;
  return true;
}

bool is_supported_model(const DlProgram& k, const Interpretation& i) {
  if (!is_model(k, i)) return false;
  bool ok = true;
  i.for_each([&](AtomId h) {
    if (!ok) return;
    const auto& rs = k.rules_with_head(h);
    ok = std::any_of(rs.begin(), rs.end(), [&](std::size_t r) { return k.satisfies_body(k.rules()[r], i); });
  });
  return ok;
}

}  // namespace dlp
