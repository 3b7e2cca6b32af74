#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "rauzy/errors.hpp"

namespace rauzy {

// Symbols are dense ids 0..d-1 into an alphabet of display names.
// A Row lists the symbol at each position (0-based); a Word is the bottom
// row of a reduced permutation as values 1..d over an implicit identity top.
using Row = std::vector<uint8_t>;
using Word = std::vector<uint8_t>;

inline constexpr int kMaxSymbols = 64;

using Alphabet = std::shared_ptr<const std::vector<std::string>>;

struct LabeledPermutation {
  // Names never change under moves; only the rows are rearranged, so symbol
  // ids stay meaningful along an induction orbit.
  Alphabet alphabet;
  Row top;
  Row bottom;

  int size() const { return static_cast<int>(top.size()); }

  // 1-based position of a symbol in a row; d is small, a scan is fine.
  static int position(const Row& row, int sym) {
    for (int i = 0; i < static_cast<int>(row.size()); ++i)
      if (row[i] == sym) return i + 1;
    throw InternalError("symbol missing from row");
  }
  int top_pos(int sym) const { return position(top, sym); }
  int bottom_pos(int sym) const { return position(bottom, sym); }

  const std::string& name(int sym) const { return (*alphabet)[sym]; }

  std::string row_text(const Row& row) const {
    std::string out;
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ' ';
      out += name(row[i]);
    }
    return out;
  }
  std::string top_text() const { return row_text(top); }
  std::string bottom_text() const { return row_text(bottom); }
  std::string to_text() const { return top_text() + " / " + bottom_text(); }

  std::string canonical_key() const {
    std::string out = "l:";
    for (size_t i = 0; i < top.size(); ++i) {
      if (i) out += ',';
      out += name(top[i]);
    }
    out += '|';
    for (size_t i = 0; i < bottom.size(); ++i) {
      if (i) out += ',';
      out += name(bottom[i]);
    }
    return out;
  }

  bool operator==(const LabeledPermutation& o) const {
    return top == o.top && bottom == o.bottom && *alphabet == *o.alphabet;
  }
};

struct ReducedPermutation {
  Word word;  // values 1..d; bottom row over the identity top

  int size() const { return static_cast<int>(word.size()); }

  std::string top_text() const {
    std::string out;
    for (int i = 1; i <= size(); ++i) {
      if (i > 1) out += ' ';
      out += std::to_string(i);
    }
    return out;
  }
  std::string bottom_text() const {
    std::string out;
    for (size_t i = 0; i < word.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(word[i]);
    }
    return out;
  }
  std::string to_text() const { return top_text() + " / " + bottom_text(); }

  std::string canonical_key() const {
    std::string out = "r:";
    for (size_t i = 0; i < word.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(word[i]);
    }
    return out;
  }

  bool operator==(const ReducedPermutation& o) const { return word == o.word; }
};

inline std::vector<std::string> split_tokens(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

// Text format: "s1 s2 ... sd / t1 t2 ... td". The alphabet is ordered by
// first appearance in the top row.
inline LabeledPermutation parse_labeled(const std::string& text) {
  auto toks = split_tokens(text);
  auto slash = std::find(toks.begin(), toks.end(), "/");
  if (slash == toks.end()) throw ParseError("missing '/' row separator");
  if (std::find(slash + 1, toks.end(), "/") != toks.end())
    throw ParseError("more than one '/' row separator");

  std::vector<std::string> top_names(toks.begin(), slash);
  std::vector<std::string> bottom_names(slash + 1, toks.end());
  if (top_names.size() != bottom_names.size())
    throw ParseError("row length mismatch: " +
                     std::to_string(top_names.size()) + " vs " +
                     std::to_string(bottom_names.size()));
  int d = static_cast<int>(top_names.size());
  if (d < 2) throw ParseError("need at least 2 symbols, got " +
                              std::to_string(d));
  if (d > kMaxSymbols)
    throw ParseError("more than " + std::to_string(kMaxSymbols) + " symbols");

  LabeledPermutation p;
  p.alphabet = std::make_shared<const std::vector<std::string>>(top_names);
  p.top.resize(d);
  p.bottom.resize(d);
  for (int i = 0; i < d; ++i) p.top[i] = static_cast<uint8_t>(i);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (top_names[i] == top_names[j])
        throw ParseError("duplicate symbol in top row: '" + top_names[i] +
                         "'");
  std::vector<bool> used(d, false);
  for (int j = 0; j < d; ++j) {
    int id = -1;
    for (int i = 0; i < d; ++i)
      if (top_names[i] == bottom_names[j]) {
        id = i;
        break;
      }
    if (id < 0)
      throw ParseError("bottom row symbol '" + bottom_names[j] +
                       "' not in top row");
    if (used[id])
      throw ParseError("duplicate symbol in bottom row: '" + bottom_names[j] +
                       "'");
    used[id] = true;
    p.bottom[j] = static_cast<uint8_t>(id);
  }
  return p;
}

// word_j = top position of the symbol at bottom position j; renumbering
// the labels leaves this invariant.
inline ReducedPermutation reduce(const LabeledPermutation& p) {
  int d = p.size();
  std::vector<uint8_t> top_pos(d);
  for (int i = 0; i < d; ++i) top_pos[p.top[i]] = static_cast<uint8_t>(i + 1);
  ReducedPermutation r;
  r.word.resize(d);
  for (int j = 0; j < d; ++j) r.word[j] = top_pos[p.bottom[j]];
  return r;
}

// Canonical labeled representative: alphabet "1".."d", top = identity.
inline LabeledPermutation embed(const ReducedPermutation& r) {
  int d = r.size();
  std::vector<std::string> names(d);
  for (int i = 0; i < d; ++i) names[i] = std::to_string(i + 1);
  LabeledPermutation p;
  p.alphabet = std::make_shared<const std::vector<std::string>>(std::move(names));
  p.top.resize(d);
  p.bottom.resize(d);
  for (int i = 0; i < d; ++i) p.top[i] = static_cast<uint8_t>(i);
  for (int j = 0; j < d; ++j) p.bottom[j] = static_cast<uint8_t>(r.word[j] - 1);
  return p;
}

// Reducible: some proper prefix of the word fills {1..k}; equivalently the
// running maximum equals the prefix length before the end.
inline bool is_irreducible(const Word& w) {
  int d = static_cast<int>(w.size());
  int run_max = 0;
  for (int j = 0; j < d - 1; ++j) {
    run_max = std::max(run_max, static_cast<int>(w[j]));
    if (run_max == j + 1) return false;
  }
  return true;
}

inline bool is_irreducible(const ReducedPermutation& r) {
  return is_irreducible(r.word);
}

inline bool is_irreducible(const LabeledPermutation& p) {
  return is_irreducible(reduce(p).word);
}

}
