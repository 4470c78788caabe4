#include "dlp/parser.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "dlp/error.hpp"

namespace dlp {

namespace {

enum class Tok {
  Ident,
  Section,  // #ontology / #rules
  Subsumes, // [=
  If,       // :-
  Same,     // ~~
  Differ,   // !~
  Tilde,
  Bang,
  Amp,
  Bar,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Semi,
  Dot,
  Plus,
  Caret,
  Minus,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    i += n;
    col += n;
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == '\n') {
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    const std::size_t l = line, k = col;
    auto two = [&](const char* t) { return s.substr(i, 2) == t; };
    if (ident_char(c) && c != '\'') {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), l, k});
      advance(j - i);
      continue;
    }
    if (c == '#') {
      std::size_t j = i + 1;
      while (j < s.size() && ident_char(s[j])) ++j;
      std::string word(s.substr(i, j - i));
      if (word != "#ontology" && word != "#rules") throw SyntaxError(l, k, "unknown section " + word);
      out.push_back({Tok::Section, word, l, k});
      advance(j - i);
      continue;
    }
    Tok kind;
    std::size_t len = 2;
    if (two("[="))
      kind = Tok::Subsumes;
    else if (two(":-"))
      kind = Tok::If;
    else if (two("~~"))
      kind = Tok::Same;
    else if (two("!~"))
      kind = Tok::Differ;
    else {
      len = 1;
      switch (c) {
        case '~': kind = Tok::Tilde; break;
        case '!': kind = Tok::Bang; break;
        case '&': kind = Tok::Amp; break;
        case '|': kind = Tok::Bar; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '[': kind = Tok::LBracket; break;
        case ']': kind = Tok::RBracket; break;
        case ',': kind = Tok::Comma; break;
        case ';': kind = Tok::Semi; break;
        case '.': kind = Tok::Dot; break;
        case '+': kind = Tok::Plus; break;
        case '^': kind = Tok::Caret; break;
        case '-': kind = Tok::Minus; break;
        default: throw SyntaxError(l, k, std::string("unexpected character '") + c + "'");
      }
    }
    out.push_back({kind, std::string(s.substr(i, len)), l, k});
    advance(len);
  }
  out.push_back({Tok::End, "end of input", line, col});
  return out;
}

const std::set<std::string>& keywords() {
  static const std::set<std::string> k{"top", "bot", "some", "all", "not", "DL"};
  return k;
}

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ProgramSource program() {
    ProgramSource out;
    bool in_rules = true;
    while (peek().kind != Tok::End) {
      if (peek().kind == Tok::Section) {
        in_rules = next().text == "#rules";
        continue;
      }
      if (in_rules)
        out.rules.push_back(rule());
      else
        ontology_statement(out.ontology);
    }
    return out;
  }

  std::vector<GroundAtom> atom_list() {
    std::vector<GroundAtom> out;
    if (peek().kind == Tok::End) return out;
    out.push_back(atom());
    while (accept(Tok::Comma)) out.push_back(atom());
    expect(Tok::End, "end of input");
    return out;
  }

private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(peek().line, peek().col, "expected " + what + ", found '" + peek().text + "'");
  }
  const Token& expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail(what);
    return next();
  }
  std::string name(const std::string& what) {
    if (peek().kind != Tok::Ident || keywords().contains(peek().text)) fail(what);
    return next().text;
  }
  std::string constant() {
    const Token& t = peek();
    if (t.kind == Tok::Ident && (std::isupper(static_cast<unsigned char>(t.text[0])) || t.text[0] == '_'))
      throw SyntaxError(t.line, t.col, "variable " + t.text + " in a ground program");
    return name("constant");
  }
  Tuple arguments() {
    Tuple args;
    if (!accept(Tok::LParen)) return args;
    if (accept(Tok::RParen)) return args;
    args.push_back(constant());
    while (accept(Tok::Comma)) args.push_back(constant());
    expect(Tok::RParen, "')'");
    return args;
  }

  Concept concept_expr() {
    Concept c = conjunct();
    while (accept(Tok::Bar)) c = Concept::disjunction(c, conjunct());
    return c;
  }
  Concept conjunct() {
    Concept c = unary();
    while (accept(Tok::Amp)) c = Concept::conjunction(c, unary());
    return c;
  }
  Concept unary() {
    if (accept(Tok::Tilde)) return Concept::negation(unary());
    if (accept(Tok::Same)) return Concept::negation(Concept::negation(unary()));
    if (accept(Tok::LParen)) {
      Concept c = concept_expr();
      expect(Tok::RParen, "')'");
      return c;
    }
    if (peek().kind != Tok::Ident) fail("concept");
    const std::string& w = peek().text;
    if (w == "top") {
      next();
      return Concept::top();
    }
    if (w == "bot") {
      next();
      return Concept::bottom();
    }
    if (w == "some" || w == "all") {
      bool some = next().text == "some";
      std::string r = name("role name");
      expect(Tok::Dot, "'.'");
      Concept c = unary();
      return some ? Concept::exists(std::move(r), std::move(c)) : Concept::forall(std::move(r), std::move(c));
    }
    return Concept::atomic(name("concept name"));
  }

  void ontology_statement(Ontology& o) {
    const Token& start = peek();
    if (accept(Tok::Bang)) {
      std::string sym = name("concept or role name");
      Tuple args = arguments();
      if (args.size() == 1)
        o.add_assertion(Assertion::concept_of(Concept::negation(Concept::atomic(sym)), args[0]));
      else if (args.size() == 2)
        o.add_assertion(Assertion::negated_role_of(sym, args[0], args[1]));
      else
        throw SyntaxError(start.line, start.col, "negated assertion needs one or two arguments");
      expect(Tok::Dot, "'.'");
      return;
    }
    if (peek().kind == Tok::Ident && (peek(1).kind == Tok::Same || peek(1).kind == Tok::Differ)) {
      std::string a = constant();
      bool same = next().kind == Tok::Same;
      std::string b = constant();
      o.add_assertion(same ? Assertion::equal(a, b) : Assertion::not_equal(a, b));
      expect(Tok::Dot, "'.'");
      return;
    }
    Concept c = concept_expr();
    if (accept(Tok::Subsumes)) {
      Concept d = concept_expr();
      o.add_axiom({std::move(c), std::move(d)});
      expect(Tok::Dot, "'.'");
      return;
    }
    if (peek().kind != Tok::LParen) fail("'[=' or '('");
    Tuple args = arguments();
    if (args.size() == 1) {
      o.add_assertion(Assertion::concept_of(std::move(c), args[0]));
    } else if (args.size() == 2 && c.kind() == Concept::Kind::Atomic) {
      o.add_assertion(Assertion::role_of(c.name(), args[0], args[1]));
    } else {
      throw SyntaxError(start.line, start.col, "assertion needs a concept with one argument or a role with two");
    }
    expect(Tok::Dot, "'.'");
  }

  GroundAtom atom() {
    std::string p = name("predicate");
    return {std::move(p), arguments()};
  }

  RuleSource rule() {
    RuleSource r;
    r.head = atom();
    if (accept(Tok::If)) {
      r.body.push_back(literal());
      while (accept(Tok::Comma)) r.body.push_back(literal());
    }
    expect(Tok::Dot, "'.'");
    return r;
  }

  Literal literal() {
    Literal l;
    if (peek().kind == Tok::Ident && peek().text == "not") {
      next();
      l.negated = true;
    }
    if (peek().kind == Tok::Ident && peek().text == "DL")
      l.atom = dl_atom();
    else
      l.atom = atom();
    return l;
  }

  std::optional<DlInput> try_input() {
    std::size_t saved = pos_;
    try {
      DlInput in;
      bool op_follows = peek(1).kind == Tok::Plus || peek(1).kind == Tok::Caret || peek(1).kind == Tok::Minus;
      if (op_follows && accept(Tok::Same))
        in.symbol = InputSymbol::equal();
      else if (accept(Tok::Differ))
        in.symbol = InputSymbol::not_equal();
      else
        in.symbol = InputSymbol::of_concept(concept_expr());
      if (accept(Tok::Plus))
        in.op = InputOp::Add;
      else if (accept(Tok::Caret))
        in.op = InputOp::AddNegated;
      else if (accept(Tok::Minus))
        in.op = InputOp::Restrict;
      else
        fail("'+', '^' or '-'");
      in.predicate = name("predicate");
      if (peek().kind != Tok::Comma && peek().kind != Tok::Semi) fail("',' or ';'");
      return in;
    } catch (const SyntaxError&) {
      pos_ = saved;
      return std::nullopt;
    }
  }

  DlAtom dl_atom() {
    const Token& start = next();  // DL
    expect(Tok::LBracket, "'['");
    DlAtom a;
    if (!accept(Tok::Semi)) {
      if (auto first = try_input()) {
        a.inputs.push_back(std::move(*first));
        while (accept(Tok::Comma)) {
          auto in = try_input();
          if (!in) fail("dl-atom input 'S op p'");
          a.inputs.push_back(std::move(*in));
        }
        expect(Tok::Semi, "';'");
      }
    }
    a.query = query(start);
    return a;
  }

  DlQuery query(const Token& start) {
    if (peek(1).kind == Tok::RBracket && accept(Tok::Same)) {
      expect(Tok::RBracket, "']'");
      return equality(start, false, arguments());
    }
    if (accept(Tok::Differ)) {
      expect(Tok::RBracket, "']'");
      return equality(start, true, arguments());
    }
    if (peek().kind == Tok::Ident && (peek(1).kind == Tok::Same || peek(1).kind == Tok::Differ)) {
      std::string a = constant();
      bool negated = next().kind == Tok::Differ;
      std::string b = constant();
      expect(Tok::RBracket, "']'");
      return DlQuery::equality(a, b, negated);
    }
    if (peek().kind == Tok::Tilde && peek(1).kind == Tok::LParen) {
      std::size_t saved = pos_;
      next();
      next();
      Concept c = concept_expr();
      if (accept(Tok::Subsumes)) {
        Concept d = concept_expr();
        expect(Tok::RParen, "')'");
        expect(Tok::RBracket, "']'");
        no_arguments(start);
        return DlQuery::subsumption(std::move(c), std::move(d), true);
      }
      pos_ = saved;
    }
    Concept c = concept_expr();
    if (accept(Tok::Subsumes)) {
      Concept d = concept_expr();
      expect(Tok::RBracket, "']'");
      no_arguments(start);
      return DlQuery::subsumption(std::move(c), std::move(d));
    }
    expect(Tok::RBracket, "']'");
    Tuple args = arguments();
    if (args.size() == 1) return DlQuery::concept_query(std::move(c), args[0]);
    if (args.size() == 2) {
      if (c.kind() == Concept::Kind::Atomic) return DlQuery::role_query(c.name(), args[0], args[1]);
      if (c.kind() == Concept::Kind::Not && c.first().kind() == Concept::Kind::Atomic)
        return DlQuery::role_query(c.first().name(), args[0], args[1], true);
    }
    throw SyntaxError(start.line, start.col,
                      "dl-query needs a concept with one argument, a role with two, or a subsumption");
  }

  DlQuery equality(const Token& start, bool negated, Tuple args) {
    if (args.size() != 2) throw SyntaxError(start.line, start.col, "equality query needs two arguments");
    return DlQuery::equality(args[0], args[1], negated);
  }

  void no_arguments(const Token& start) {
    if (!arguments().empty()) throw SyntaxError(start.line, start.col, "subsumption query takes no arguments");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Input symbols are parsed as concepts; a bare name is a role when the
// ontology or a query uses it as one, or when its predicate is binary.
void resolve_input_symbols(ProgramSource& p) {
  std::set<std::string> concepts, roles;
  for (const auto& as : p.ontology.abox())
    if (!as.role.empty()) roles.insert(as.role);
  for (const auto& ax : p.ontology.tbox()) {
    ax.lhs.collect_names(concepts, roles);
    ax.rhs.collect_names(concepts, roles);
  }
  std::map<std::string, std::size_t> arity;
  for (const auto& r : p.rules) {
    arity.emplace(r.head.predicate, r.head.args.size());
    for (const auto& l : r.body) {
      if (const auto* g = std::get_if<GroundAtom>(&l.atom)) {
        arity.emplace(g->predicate, g->args.size());
      } else {
        const auto& q = std::get<DlAtom>(l.atom).query;
        q.expr.collect_names(concepts, roles);
        q.rhs.collect_names(concepts, roles);
        if (!q.role.empty()) roles.insert(q.role);
      }
    }
  }
  for (auto& r : p.rules)
    for (auto& l : r.body) {
      auto* dl = std::get_if<DlAtom>(&l.atom);
      if (!dl) continue;
      for (auto& in : dl->inputs) {
        if (in.symbol.kind != InputSymbol::Kind::Concept || in.symbol.expr.kind() != Concept::Kind::Atomic) continue;
        const std::string& s = in.symbol.expr.name();
        auto it = arity.find(in.predicate);
        bool binary = it != arity.end() && it->second == 2;
        if (roles.contains(s) || (!concepts.contains(s) && binary)) in.symbol = InputSymbol::of_role(s);
      }
    }
}

}  // namespace

ProgramSource parse_source(std::string_view text) {
  ProgramSource p = Parser(tokenize(text)).program();
  resolve_input_symbols(p);
  return p;
}

DlProgram parse_program(std::string_view text, Limits limits) { return DlProgram::build(parse_source(text), limits); }

DlProgram load_program(const std::filesystem::path& path, Limits limits) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_program(buf.str(), limits);
}

std::vector<GroundAtom> parse_atom_list(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  if (t == "∅" || t == "{}") return {};
  if (t.size() >= 2 && t.front() == '{' && t.back() == '}') t = t.substr(1, t.size() - 2);
  return Parser(tokenize(t)).atom_list();
}

}  // namespace dlp
