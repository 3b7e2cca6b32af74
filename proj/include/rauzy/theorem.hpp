#pragma once

#include <string>
#include <utility>

#include "rauzy/invariants.hpp"

namespace rauzy {

// Fraction of the stratum covered by one component of the given kind.
inline Rational epsilon(ComponentKind kind, int genus) {
  switch (kind) {
    case ComponentKind::HyperellipticPair: return make_rational(1, genus);
    case ComponentKind::NonHypWithOdd: return make_rational(1, 2);
    case ComponentKind::Other: return Rational(1);
  }
  return Rational(1);
}

inline int component_count(ComponentKind kind, int genus) {
  switch (kind) {
    case ComponentKind::HyperellipticPair: return genus;
    case ComponentKind::NonHypWithOdd: return 2;
    case ComponentKind::Other: return 1;
  }
  return 1;
}

// Degree of the labeling cover over one component:
// (prod over degrees k with multiplicity n of n! (k+1)^n) / component count.
inline Rational covering_degree(const MarkedProfile& p, ComponentKind kind) {
  Integer num = 1;
  for (auto& [k, n] : p.entries) {
    Integer f, pw;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(k + 1),
                  static_cast<unsigned long>(n));
    num *= f * pw;
  }
  Rational deg = Rational(num) / component_count(kind, p.genus);
  if (!is_integer(deg) || deg <= 0)
    throw InternalError("covering degree must be a positive integer");
  return deg;
}

// Predicted labeled/reduced cardinality ratio for a class with this profile
// living in a component of this kind.  Two derivations must agree: the
// covering degree divided by the marked-corner stabilizer, and the raw
// product divided by c * (k+1) * n.
inline Rational predicted_ratio(const MarkedProfile& p, ComponentKind kind) {
  int k = p.marked_degree;
  int n = p.multiplicity_of(k);
  if (n <= 0) throw InternalError("marked degree missing from the profile");
  Rational raw = covering_degree(p, kind) * component_count(kind, p.genus);
  Rational via_cover = raw * epsilon(kind, p.genus) / (n * (k + 1));
  Rational via_product =
      raw / (component_count(kind, p.genus) * (k + 1) * n);
  if (via_cover != via_product)
    throw InternalError("ratio derivations disagree");
  if (!is_integer(via_cover) || via_cover <= 0)
    throw InternalError("predicted ratio must be a positive integer");
  return via_cover;
}

struct RatioReport {
  ReducedPermutation seed;
  std::string seed_text;
  MarkedProfile prof;
  ComponentId component;
  bool unclassifiable = false;
  uint64_t reduced_size = 0;
  uint64_t labeled_size = 0;
  Rational enumerated_ratio;
  Rational predicted;                    // meaningful when classifiable
  std::vector<std::pair<std::string, Rational>> candidates;  // otherwise
  std::string verdict;                   // match, mismatch, unclassifiable
};

// Build the report from an already enumerated reduced diagram plus the
// labeled cardinality; verify() below owns the enumeration, this split lets
// a cached diagram be replayed without recomputing it.
inline RatioReport make_report(const LabeledPermutation& seed,
                               const RauzyDiagram& reduced_diag,
                               uint64_t labeled_size) {
  RatioReport rep;
  rep.seed = reduce(seed);
  rep.seed_text = seed.to_text();
  rep.prof = profile(rep.seed);
  rep.reduced_size = reduced_diag.size();
  rep.labeled_size = labeled_size;
  if (rep.reduced_size == 0 || labeled_size % rep.reduced_size != 0)
    throw InternalError("labeled cardinality must divide evenly");
  rep.enumerated_ratio = make_rational(labeled_size, rep.reduced_size);

  try {
    rep.component = classify_component(rep.prof, reduced_diag);
  } catch (const UnclassifiedHyperelliptic&) {
    rep.unclassifiable = true;
    // report the prediction under both remaining hypotheses
    ComponentKind hyp = ComponentKind::HyperellipticPair;
    ComponentKind rest = ComponentKind::NonHypWithOdd;  // degrees g-1 odd here
    if ((rep.prof.genus - 1) % 2 == 0) rest = ComponentKind::Other;
    rep.candidates.push_back(
        {kind_name(hyp), predicted_ratio(rep.prof, hyp)});
    rep.candidates.push_back(
        {kind_name(rest), predicted_ratio(rep.prof, rest)});
    rep.verdict = "unclassifiable";
    return rep;
  }
  rep.predicted = predicted_ratio(rep.prof, rep.component.kind);
  rep.verdict = rep.enumerated_ratio == rep.predicted ? "match" : "mismatch";
  return rep;
}

inline RatioReport verify(const LabeledPermutation& seed,
                          uint64_t budget = 10000000) {
  RauzyDiagram reduced = enumerate_class(seed, Mode::Reduced, budget);
  RauzyDiagram labeled = enumerate_class(seed, Mode::Labeled, budget);
  return make_report(seed, reduced, labeled.size());
}

inline RatioReport verify(const ReducedPermutation& seed,
                          uint64_t budget = 10000000) {
  return verify(embed(seed), budget);
}

inline nlohmann::ordered_json report_json(const RatioReport& rep) {
  nlohmann::ordered_json j;
  j["seed"] = rep.seed.canonical_key();
  j["seed_text"] = rep.seed_text;
  j["d"] = rep.seed.size();
  j["stratum"] = stratum_text(rep.prof);
  auto prof = nlohmann::ordered_json::array();
  for (auto& [k, m] : rep.prof.entries)
    prof.push_back(nlohmann::ordered_json::array({k, m}));
  j["profile"] = std::move(prof);
  j["marked"] = rep.prof.marked_degree;
  j["genus"] = rep.prof.genus;
  if (rep.unclassifiable) {
    j["kind"] = "unclassifiable";
    j["epsilon"] = nullptr;
  } else {
    j["kind"] = kind_name(rep.component.kind);
    j["epsilon"] = to_string(epsilon(rep.component.kind, rep.prof.genus));
  }
  j["reduced_size"] = rep.reduced_size;
  j["labeled_size"] = rep.labeled_size;
  j["enumerated_ratio"] = to_string(rep.enumerated_ratio);
  j["predicted_ratio"] =
      rep.unclassifiable ? nlohmann::ordered_json(nullptr)
                         : nlohmann::ordered_json(to_string(rep.predicted));
  j["verdict"] = rep.verdict;
  if (rep.unclassifiable) {
    auto cands = nlohmann::ordered_json::array();
    for (auto& [name, ratio] : rep.candidates) {
      nlohmann::ordered_json c;
      c["kind"] = name;
      c["predicted_ratio"] = to_string(ratio);
      cands.push_back(std::move(c));
    }
    j["candidates"] = std::move(cands);
  }
  return j;
}

}
