#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rauzy/diagram.hpp"
#include "rauzy/geometry.hpp"
#include "rauzy/spin.hpp"

namespace rauzy {

// Singularity data of the suspended surface.  Entries are (degree,
// multiplicity) pairs sorted by descending degree; marked_degree is the
// degree of the cone holding the distinguished corner.
struct MarkedProfile {
  std::vector<std::pair<int, int>> entries;
  int marked_degree = 0;
  int genus = 0;

  int total_points() const {
    int n = 0;
    for (auto& [k, m] : entries) n += m;
    return n;
  }
  int multiplicity_of(int degree) const {
    for (auto& [k, m] : entries)
      if (k == degree) return m;
    return 0;
  }
  bool operator==(const MarkedProfile& o) const {
    return entries == o.entries && marked_degree == o.marked_degree &&
           genus == o.genus;
  }
};

inline MarkedProfile profile(const PolygonSurface& s) {
  MarkedProfile p;
  std::vector<int> degrees;
  for (const auto& c : s.cones) degrees.push_back(c.degree);
  std::sort(degrees.rbegin(), degrees.rend());
  for (int k : degrees) {
    if (!p.entries.empty() && p.entries.back().first == k)
      p.entries.back().second++;
    else
      p.entries.push_back({k, 1});
  }
  p.marked_degree = s.cones[s.marked_cone].degree;
  p.genus = s.genus;
  // dimension count for a single marked point: d = 2g + (#points) - 1
  if (s.size() != 2 * p.genus + p.total_points() - 1)
    throw InternalError("profile disagrees with the symbol count");
  return p;
}

inline MarkedProfile profile(const ReducedPermutation& r) {
  return profile(build_polygon(canonical_suspension(r)));
}

inline MarkedProfile profile(const LabeledPermutation& p) {
  return profile(reduce(p));
}

// Stratum name like "H(2,1^2,0)": degrees descending, exponents for
// multiplicity, marked degree not singled out.
inline std::string stratum_text(const MarkedProfile& p) {
  std::ostringstream os;
  os << "H(";
  bool first = true;
  for (auto& [k, m] : p.entries) {
    if (!first) os << ",";
    first = false;
    os << k;
    if (m > 1) os << "^" << m;
  }
  os << ")";
  return os.str();
}

enum class ComponentKind {
  HyperellipticPair,    // marked pair stratum H(g-1,g-1), hyperelliptic class
  NonHypWithOdd,        // odd-spin class away from the hyperelliptic one
  Other,
};

inline const char* kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::HyperellipticPair: return "hyperelliptic-pair";
    case ComponentKind::NonHypWithOdd: return "nonhyperelliptic-odd";
    case ComponentKind::Other: return "other";
  }
  return "other";
}

struct ComponentId {
  ComponentKind kind = ComponentKind::Other;
  bool hyperelliptic_single = false;  // H(2g-2) hyperelliptic class, kind Other
  int spin = -1;                      // -1 when the parity is undefined
};

// Word of the order-reversing permutation on d symbols; its class is the
// hyperelliptic one in H(2g-2) (d even) or H(g-1,g-1) (d odd), no marking.
inline Word reversal_word(int d) {
  Word w(d);
  for (int j = 0; j < d; ++j) w[j] = static_cast<uint8_t>(d - j);
  return w;
}

// Hyperelliptic class with one marked regular point: take the reversing
// permutation on n symbols and split its leftmost top corner with a fresh
// symbol.  Top (0 2 3 .. n-1 1 n), bottom (n .. 1 0) in 0-based ids.
inline LabeledPermutation marked_reversal_labeled(int n) {
  if (n < 3) throw InternalError("marked reversal needs at least 3 symbols");
  int d = n + 1;
  auto names = std::make_shared<std::vector<std::string>>();
  for (int i = 0; i < d; ++i) names->push_back(std::to_string(i));
  Row top, bottom;
  top.push_back(0);
  for (int i = 2; i < n; ++i) top.push_back(static_cast<uint8_t>(i));
  top.push_back(1);
  top.push_back(static_cast<uint8_t>(n));
  for (int i = n; i >= 0; --i) bottom.push_back(static_cast<uint8_t>(i));
  return LabeledPermutation{std::move(names), std::move(top),
                            std::move(bottom)};
}

inline Word marked_reversal_word(int n) {
  return reduce(marked_reversal_labeled(n)).word;
}

// Decide which connected component of the stratum the class lives in, given
// the already enumerated reduced diagram of the class.  Membership of the
// known hyperelliptic representative is checked through the diagram's key
// index, so this never re-enumerates.
inline ComponentId classify_component(const MarkedProfile& p,
                                      const RauzyDiagram& reduced_diag) {
  ComponentId id;
  if (reduced_diag.mode != Mode::Reduced)
    throw InternalError("classification needs the reduced diagram");
  int g = p.genus;
  int d = 2 * g + p.total_points() - 1;

  auto contains = [&](const Word& w) {
    return reduced_diag.index.count(ReducedPermutation{w}.canonical_key()) > 0;
  };
  auto spin_of = [&]() {
    for (auto& [k, m] : p.entries)
      if (k % 2 != 0) return -1;
    return spin_parity(ReducedPermutation{reduced_diag.bottoms[0]});
  };

  if (g <= 1) {
    // genus one: every stratum is connected, nothing to separate
    id.kind = ComponentKind::Other;
    id.spin = spin_of();
    return id;
  }

  std::vector<std::pair<int, int>> nonzero;
  for (auto& [k, m] : p.entries)
    if (k != 0) nonzero.push_back({k, m});
  int zeros = p.multiplicity_of(0);

  bool pair_shape = nonzero.size() == 1 && nonzero[0].first == g - 1 &&
                    nonzero[0].second == 2;
  bool single_shape = nonzero.size() == 1 && nonzero[0].first == 2 * g - 2 &&
                      nonzero[0].second == 1;

  if (pair_shape) {
    if (zeros >= 2) throw UnclassifiedHyperelliptic(stratum_text(p));
    Word rep = zeros == 0 ? reversal_word(d) : marked_reversal_word(d - 1);
    if (contains(rep)) {
      id.kind = ComponentKind::HyperellipticPair;
      id.spin = spin_of();
      return id;
    }
  } else if (single_shape && zeros <= 1) {
    Word rep = zeros == 0 ? reversal_word(d) : marked_reversal_word(d - 1);
    if (contains(rep)) {
      id.kind = ComponentKind::Other;
      id.hyperelliptic_single = true;
      id.spin = spin_of();
      return id;
    }
  }

  id.spin = spin_of();
  bool has_odd = false;
  for (auto& [k, m] : nonzero)
    if (k % 2 != 0) has_odd = true;
  id.kind = has_odd ? ComponentKind::NonHypWithOdd : ComponentKind::Other;
  return id;
}

}
