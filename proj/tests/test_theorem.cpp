#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "support.hpp"

using namespace rauzy;

TEST_CASE("epsilon and component counts") {
  REQUIRE(epsilon(ComponentKind::HyperellipticPair, 2) == make_rational(1, 2));
  REQUIRE(epsilon(ComponentKind::HyperellipticPair, 3) == make_rational(1, 3));
  REQUIRE(epsilon(ComponentKind::NonHypWithOdd, 3) == make_rational(1, 2));
  REQUIRE(epsilon(ComponentKind::Other, 5) == Rational(1));
  for (int g = 2; g <= 5; ++g)
    for (ComponentKind k : {ComponentKind::HyperellipticPair,
                            ComponentKind::NonHypWithOdd, ComponentKind::Other})
      REQUIRE(epsilon(k, g) * component_count(k, g) == 1);
}

TEST_CASE("covering degrees of the small strata") {
  MarkedProfile t5 = profile(ReducedPermutation{Word{5, 4, 3, 2, 1}});
  REQUIRE(covering_degree(t5, ComponentKind::HyperellipticPair) == 4);
  MarkedProfile t4 = profile(ReducedPermutation{Word{4, 3, 2, 1}});
  REQUIRE(covering_degree(t4, ComponentKind::Other) == 3);
  LabeledPermutation d9 =
      parse_labeled("1 2 3 4 5 6 7 8 9 / 9 1 4 3 2 5 8 7 6");
  REQUIRE(covering_degree(profile(d9), ComponentKind::NonHypWithOdd) == 192);
}

TEST_CASE("predicted ratios of the named families") {
  auto ratio_of = [](const Word& w, ComponentKind k) {
    return predicted_ratio(profile(ReducedPermutation{w}), k);
  };
  REQUIRE(ratio_of(Word{4, 3, 2, 1}, ComponentKind::Other) == 1);
  REQUIRE(ratio_of(Word{5, 4, 3, 2, 1}, ComponentKind::HyperellipticPair) == 1);
  // marked family: ratio is one less than the parameter
  for (int n = 4; n <= 7; ++n) {
    MarkedProfile prof = profile(ReducedPermutation{marked_reversal_word(n)});
    ComponentKind kind = n % 2 == 0 ? ComponentKind::Other
                                    : ComponentKind::HyperellipticPair;
    REQUIRE(predicted_ratio(prof, kind) == n - 1);
  }
  // tori: the ratio is a factorial of the point count minus one
  for (int d = 2; d <= 5; ++d) {
    MarkedProfile prof;
    prof.entries = {{0, d}};
    prof.marked_degree = 0;
    prof.genus = 1;
    Rational expect = 1;
    for (int i = 2; i <= d - 1; ++i) expect *= i;
    REQUIRE(predicted_ratio(prof, ComponentKind::Other) == expect);
  }
}

TEST_CASE("predicted ratio is a positive integer on every small class") {
  for (int d = 2; d <= 5; ++d) {
    std::set<std::string> seen;
    testsupport::for_each_irreducible(d, [&](const Word& w) {
      ReducedPermutation seed{w};
      if (seen.count(seed.canonical_key())) return;
      RauzyDiagram dia = enumerate_class(seed, Mode::Reduced);
      for (const auto& k : dia.keys) seen.insert(k);
      MarkedProfile prof = profile(seed);
      ComponentId id = classify_component(prof, dia);
      Rational r = predicted_ratio(prof, id.kind);
      REQUIRE(is_integer(r));
      REQUIRE(r > 0);
    });
  }
}

TEST_CASE("verify on the named families") {
  RatioReport t4 = verify(ReducedPermutation{Word{4, 3, 2, 1}});
  REQUIRE(t4.reduced_size == 7);
  REQUIRE(t4.labeled_size == 7);
  REQUIRE(t4.enumerated_ratio == 1);
  REQUIRE(t4.predicted == 1);
  REQUIRE(t4.verdict == "match");

  RatioReport t5 = verify(ReducedPermutation{Word{5, 4, 3, 2, 1}});
  REQUIRE(t5.component.kind == ComponentKind::HyperellipticPair);
  REQUIRE(epsilon(t5.component.kind, t5.prof.genus) == make_rational(1, 2));
  REQUIRE(t5.reduced_size == 15);
  REQUIRE(t5.predicted == 1);
  REQUIRE(t5.verdict == "match");

  RatioReport p4 = verify(ReducedPermutation{marked_reversal_word(4)});
  REQUIRE(p4.reduced_size == 11);
  REQUIRE(p4.labeled_size == 33);
  REQUIRE(p4.predicted == 3);
  REQUIRE(p4.verdict == "match");

  RatioReport p5 = verify(ReducedPermutation{marked_reversal_word(5)});
  REQUIRE(p5.reduced_size == 20);
  REQUIRE(p5.labeled_size == 80);
  REQUIRE(p5.verdict == "match");
}

TEST_CASE("mismatch reporting stays honest") {
  RauzyDiagram dia =
      enumerate_class(ReducedPermutation{Word{4, 3, 2, 1}}, Mode::Reduced);
  RatioReport rep =
      make_report(embed(ReducedPermutation{Word{4, 3, 2, 1}}), dia, 14);
  REQUIRE(rep.enumerated_ratio == 2);
  REQUIRE(rep.verdict == "mismatch");
  REQUIRE_THROWS_AS(
      make_report(embed(ReducedPermutation{Word{4, 3, 2, 1}}), dia, 15),
      InternalError);
}

TEST_CASE("unclassifiable classes report both hypotheses") {
  Word found;
  testsupport::for_each_irreducible(7, [&](const Word& w) {
    if (!found.empty()) return;
    MarkedProfile prof = profile(ReducedPermutation{w});
    if (prof.entries == std::vector<std::pair<int, int>>{{1, 2}, {0, 2}})
      found = w;
  });
  REQUIRE_FALSE(found.empty());
  RatioReport rep = verify(ReducedPermutation{found});
  REQUIRE(rep.verdict == "unclassifiable");
  REQUIRE(rep.unclassifiable);
  REQUIRE(rep.candidates.size() == 2);
  REQUIRE(rep.candidates[0].first == "hyperelliptic-pair");
  REQUIRE(rep.candidates[1].first == "nonhyperelliptic-odd");

  nlohmann::ordered_json j = report_json(rep);
  REQUIRE(j["kind"] == "unclassifiable");
  REQUIRE(j["epsilon"].is_null());
  REQUIRE(j["predicted_ratio"].is_null());
  REQUIRE(j["candidates"].size() == 2);
}

TEST_CASE("report json carries fields in a fixed order") {
  RatioReport rep = verify(ReducedPermutation{Word{4, 3, 2, 1}});
  nlohmann::ordered_json j = report_json(rep);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  REQUIRE(keys == std::vector<std::string>{
                      "seed", "seed_text", "d", "stratum", "profile", "marked",
                      "genus", "kind", "epsilon", "reduced_size",
                      "labeled_size", "enumerated_ratio", "predicted_ratio",
                      "verdict"});
  REQUIRE(j["seed"] == "r:4,3,2,1");
  REQUIRE(j["seed_text"] == "1 2 3 4 / 4 3 2 1");
  REQUIRE(j["d"] == 4);
  REQUIRE(j["stratum"] == "H(2)");
  REQUIRE(j["profile"] == nlohmann::json::parse("[[2,1]]"));
  REQUIRE(j["marked"] == 2);
  REQUIRE(j["genus"] == 2);
  REQUIRE(j["kind"] == "other");
  REQUIRE(j["epsilon"] == "1");
  REQUIRE(j["enumerated_ratio"] == "1");
  REQUIRE(j["predicted_ratio"] == "1");
  REQUIRE(j["verdict"] == "match");
}
