#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

using namespace dlp;
using namespace dlp::testing;

TEST_CASE("corpus programs respect the generator bounds") {
  for (const auto& k : corpus(100)) {
    CHECK(k.predicates().size() <= 4);
    CHECK(k.constants().size() <= 3);
    CHECK(k.rules().size() <= 6);
    CHECK(k.ontology().tbox().size() <= 3);
  }
  auto ks = corpus(8);
  for (std::size_t i = 3; i < ks.size(); i += 4) CHECK_FALSE(has_restrict(ks[i]));
}

TEST_CASE("answer set propositions hold on the corpus") {
  for (const auto& k : corpus(120, 61)) {
    CAPTURE(k.source().to_string());
    auto violations = proposition_violations(k);
    for (const auto& v : violations) FAIL_CHECK(v);
  }
}

TEST_CASE("restriction-free corpus: canonical equals strong") {
  GenParams params;
  params.allow_restrict = false;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Rng rng(seed + 9000);
    DlProgram k = DlProgram::build(random_source(rng, params));
    CHECK_FALSE(has_restrict(k));
    CHECK(show(k, answer_sets(k, Semantics::Canonical)) == show(k, answer_sets(k, Semantics::Strong)));
  }
}

TEST_CASE("answer sets are supported models") {
  for (const auto& k : corpus(80, 62))
    for (auto s : {Semantics::Weak, Semantics::Strong, Semantics::Canonical})
      for (const auto& i : answer_sets(k, s)) {
        CHECK(is_supported_model(k, i));
        CHECK(is_answer_set(k, i, s));
      }
}

TEST_CASE("violated formulas explain every non-answer set") {
  for (const auto& k : corpus(60, 63)) {
    auto is = all_interpretations(k);
    for (auto s : {Semantics::Weak, Semantics::Strong}) {
      auto as = enumerate_answer_sets(k, s);
      for (const auto& i : is) {
        auto f = violated_formula(k, i, s);
        bool member = std::binary_search(as.begin(), as.end(), i);
        CHECK(f.has_value() != member);
        if (f) CHECK_FALSE(evaluate(k, *f, i));
      }
    }
  }
}
