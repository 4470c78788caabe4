#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

#include <thread>

using namespace dlp;
using namespace dlp::testing;

namespace {

Interpretation interp(const DlProgram& k, const std::string& atoms) { return k.interpretation(parse_atom_list(atoms)); }

std::vector<std::string> formatted(const DlProgram& k, const std::vector<Interpretation>& is) {
  std::vector<std::string> out;
  for (const auto& i : is) out.push_back(k.format(i));
  return out;
}

using Strings = std::vector<std::string>;

}  // namespace

TEST_CASE("dl-atom abstraction") {
  DlProgram k1 = load_data("k1.dlp");
  auto a = abstract_dl_atoms(completion(k1));
  CHECK(a.abstraction.size() == 1);
  CHECK(to_string(k1, a.formulas[0]) == "(p(a) <-> xi0)");

  DlProgram ex2 = load_data("ex2.dlp");
  auto b = abstract_dl_atoms(completion(ex2));
  CHECK(b.abstraction.size() == 1);
  CHECK(to_string(ex2, b.formulas[0]) == "(p(a) <-> (xi0 | ~xi0))");

  DlProgram plain = parse_program("p :- q.\nq.");
  auto c = abstract_dl_atoms(completion(plain));
  CHECK(c.abstraction.size() == 0);
  for (std::size_t i = 0; i < c.formulas.size(); ++i)
    CHECK(to_string(plain, c.formulas[i]) == to_string(plain, completion(plain)[i]));
}

TEST_CASE("model generation") {
  DlProgram k1 = load_data("k1.dlp");
  auto m = generate_model(k1, completion(k1));
  REQUIRE(m);
  CHECK(is_supported_model(k1, *m));
  CHECK_FALSE(generate_model(load_data("k4.dlp"), completion(load_data("k4.dlp"))).has_value());
  DlProgram odd = parse_program("p :- not p.");
  CHECK_FALSE(generate_model(odd, completion(odd)).has_value());
}

TEST_CASE("completion models enumerate the supported models") {
  for (const auto& k : corpus(120, 51)) {
    ModelGenerator gen(k);
    for (const auto& f : completion(k)) gen.add(f);
    std::vector<Interpretation> got;
    while (auto m = gen.next()) {
      got.push_back(*m);
      gen.block(*m);
    }
    std::sort(got.begin(), got.end());
    std::vector<Interpretation> expected;
    for (const auto& i : all_interpretations(k))
      if (is_supported_model(k, i)) expected.push_back(i);
    CHECK(show(k, got) == show(k, expected));
  }
}

TEST_CASE("answer sets of the sample programs") {
  struct Case {
    const char* file;
    Strings weak, strong, canonical;
  };
  const std::vector<Case> cases{
      {"k0.dlp", {"p(a),w(a)"}, {"p(a),w(a)"}, {"p(a),w(a)"}},
      {"k1.dlp", {"∅", "p(a)"}, {"∅"}, {"∅"}},
      {"k2.dlp", {"∅", "p(a)"}, {"∅", "p(a)"}, {"∅"}},
      {"k3.dlp", {"∅", "p(a)"}, {"∅", "p(a)"}, {"∅"}},
      {"k4.dlp", {}, {}, {}},
      {"ex2.dlp", {"p(a)"}, {}, {}},
      {"ex3.dlp", {"∅", "p(a)"}, {"∅", "p(a)"}, {"∅"}},
      {"tautology.dlp", {"p(a)"}, {"p(a)"}, {"p(a)"}},
      {"empty.dlp", {"∅"}, {"∅"}, {"∅"}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.file);
    DlProgram k = load_data(c.file);
    CHECK(formatted(k, answer_sets(k, Semantics::Weak)) == c.weak);
    CHECK(formatted(k, answer_sets(k, Semantics::Strong)) == c.strong);
    CHECK(formatted(k, answer_sets(k, Semantics::Canonical)) == c.canonical);
  }
}

TEST_CASE("canonical answer set checks") {
  DlProgram k2 = load_data("k2.dlp");
  CHECK_FALSE(is_canonical_answer_set(k2, interp(k2, "p(a)")));
  CHECK(is_canonical_answer_set(k2, k2.empty_interpretation()));
  DlProgram ex3 = load_data("ex3.dlp");
  CHECK_FALSE(is_canonical_answer_set(ex3, interp(ex3, "p(a)")));
  DlProgram k0 = load_data("k0.dlp");
  CHECK(is_canonical_answer_set(k0, interp(k0, "p(a),w(a)")));
}

TEST_CASE("limits and streaming") {
  DlProgram ex4 = load_data("ex4.dlp");
  CHECK(answer_sets(ex4, Semantics::Weak).size() == 8);
  CHECK(answer_sets(ex4, Semantics::Weak, 3).size() == 3);
  std::size_t seen = 0;
  solve(ex4, Semantics::Weak, [&](const Interpretation&) { return ++seen < 2; });
  CHECK(seen == 2);

  std::vector<Interpretation> first, second;
  solve(ex4, Semantics::Strong, [&](const Interpretation& i) { first.push_back(i); return true; });
  solve(ex4, Semantics::Strong, [&](const Interpretation& i) { second.push_back(i); return true; });
  CHECK(first == second);

  SolveStats stats;
  answer_sets(load_data("k1.dlp"), Semantics::Strong, 0, &stats);
  CHECK(stats.answer_sets == 1);
  CHECK(stats.loop_formulas == 1);
  CHECK(stats.candidates == 2);
}

TEST_CASE("loop formula budget") {
  Limits l;
  l.max_loop_formulas = 0;
  DlProgram k1 = load_data("k1.dlp", l);
  CHECK_THROWS_AS(answer_sets(k1, Semantics::Strong), LoopBudgetExceeded);
  CHECK_NOTHROW(answer_sets(k1, Semantics::Weak));
}

TEST_CASE("violated formulas") {
  DlProgram k1 = load_data("k1.dlp");
  auto f = violated_formula(k1, interp(k1, "p(a)"), Semantics::Strong);
  REQUIRE(f);
  CHECK(to_string(k1, *f) == "(p(a) -> (DL[c + p@{p(a)}; d](a) & ~p@{p(a)}(a)))");
  CHECK_FALSE(violated_formula(k1, interp(k1, "p(a)"), Semantics::Weak));

  DlProgram k0 = load_data("k0.dlp");
  auto g = violated_formula(k0, interp(k0, "p(a)"), Semantics::Weak);
  REQUIRE(g);
  CHECK(to_string(k0, *g) == "(w(a) <-> DL[c + p; d](a))");

  DlProgram k2 = load_data("k2.dlp");
  auto h = violated_formula(k2, interp(k2, "p(a)"), Semantics::Canonical);
  REQUIRE(h);
  CHECK_FALSE(evaluate(k2, *h, interp(k2, "p(a)")));
}

TEST_CASE("solver matches the oracle on the corpus") {
  for (const auto& k : corpus(120, 52)) {
    CAPTURE(k.source().to_string());
    for (auto s : {Semantics::Weak, Semantics::Strong, Semantics::Canonical})
      CHECK(show(k, answer_sets(k, s)) == show(k, enumerate_answer_sets(k, s)));
  }
}

TEST_CASE("independent sessions run concurrently") {
  auto programs = corpus(24, 53);
  std::vector<std::vector<Interpretation>> serial;
  for (const auto& k : programs) serial.push_back(answer_sets(k, Semantics::Strong));
  std::vector<std::vector<Interpretation>> parallel(programs.size());
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      for (std::size_t i = static_cast<std::size_t>(t); i < programs.size(); i += 4)
        parallel[i] = answer_sets(programs[i], Semantics::Strong);
    });
  for (auto& t : threads) t.join();
  CHECK(serial == parallel);
}
