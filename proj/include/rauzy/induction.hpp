#pragma once

#include <algorithm>
#include <vector>

#include "rauzy/errors.hpp"
#include "rauzy/permutation.hpp"
#include "rauzy/rational.hpp"

namespace rauzy {

enum class MoveKind : uint8_t { Top, Bottom };

inline char move_char(MoveKind m) { return m == MoveKind::Top ? 't' : 'b'; }

// Shared kernel: remove the last symbol of `moving` and reinsert it right
// after the position of `fixed`'s last symbol inside `moving`.  This is the
// top move when (fixed, moving) = (top, bottom) and the bottom move when the
// roles are swapped.
inline void rauzy_move_rows(const Row& fixed, Row& moving) {
  int d = static_cast<int>(fixed.size());
  if (fixed[d - 1] == moving[d - 1])
    throw MoveUndefined("move undefined: both rows end with the same symbol");
  int k1 = -1;  // 0-based position of fixed's last symbol inside moving
  for (int i = 0; i < d; ++i)
    if (moving[i] == fixed[d - 1]) {
      k1 = i;
      break;
    }
  if (k1 < 0) throw InternalError("rows are not over the same symbols");
  // moving[d-1] travels to position k1+1; everything between shifts right.
  std::rotate(moving.begin() + k1 + 1, moving.end() - 1, moving.end());
}

inline LabeledPermutation rauzy_top(const LabeledPermutation& p) {
  LabeledPermutation q = p;
  rauzy_move_rows(q.top, q.bottom);
  return q;
}

inline LabeledPermutation rauzy_bottom(const LabeledPermutation& p) {
  LabeledPermutation q = p;
  rauzy_move_rows(q.bottom, q.top);
  return q;
}

inline LabeledPermutation rauzy_move(const LabeledPermutation& p, MoveKind m) {
  return m == MoveKind::Top ? rauzy_top(p) : rauzy_bottom(p);
}

// Reduced moves act on the word directly.  Top: the last value moves to just
// after the position of d (same surgery as the labeled bottom row).  Bottom:
// the identity top row gets the surgery, which renumbers the word by the
// order-preserving map sending d to slot k+1.
inline void rauzy_reduced_word(Word& w, MoveKind m) {
  int d = static_cast<int>(w.size());
  if (w[d - 1] == d)
    throw MoveUndefined("move undefined: both rows end with the same symbol");
  if (m == MoveKind::Top) {
    int p = -1;
    for (int i = 0; i < d; ++i)
      if (w[i] == d) {
        p = i;
        break;
      }
    std::rotate(w.begin() + p + 1, w.end() - 1, w.end());
  } else {
    int k = w[d - 1];
    for (int j = 0; j < d; ++j) {
      int x = w[j];
      if (x == d)
        w[j] = static_cast<uint8_t>(k + 1);
      else if (x > k)
        w[j] = static_cast<uint8_t>(x + 1);
    }
  }
}

inline ReducedPermutation rauzy_reduced(const ReducedPermutation& r,
                                        MoveKind m) {
  ReducedPermutation q = r;
  rauzy_reduced_word(q.word, m);
  return q;
}

// Suspension data: per-symbol lengths (all positive) and heights whose top
// partial sums are positive and bottom partial sums negative.
struct Suspension {
  LabeledPermutation perm;
  std::vector<Rational> lengths;  // indexed by symbol id
  std::vector<Rational> heights;
};

inline bool is_suspension(const LabeledPermutation& p,
                          const std::vector<Rational>& heights) {
  int d = p.size();
  Rational top_sum = 0, bottom_sum = 0;
  for (int k = 0; k < d - 1; ++k) {
    top_sum += heights[p.top[k]];
    if (top_sum <= 0) return false;
    bottom_sum += heights[p.bottom[k]];
    if (bottom_sum >= 0) return false;
  }
  return true;
}

inline bool is_suspension(const Suspension& s) {
  for (const auto& l : s.lengths)
    if (l <= 0) return false;
  return is_suspension(s.perm, s.heights);
}

// Unit lengths, heights = bottom position minus top position.  The heights
// sum to zero and satisfy the strict sign conditions for irreducible inputs,
// so the polygon is always embedded.
inline Suspension canonical_suspension(const LabeledPermutation& p) {
  if (!is_irreducible(p))
    throw ReducibleInput("canonical suspension needs an irreducible permutation");
  int d = p.size();
  Suspension s;
  s.perm = p;
  s.lengths.assign(d, Rational(1));
  s.heights.resize(d);
  for (int sym = 0; sym < d; ++sym)
    s.heights[sym] = Rational(p.bottom_pos(sym) - p.top_pos(sym));
  return s;
}

inline Suspension canonical_suspension(const ReducedPermutation& r) {
  return canonical_suspension(embed(r));
}

struct StepType {
  MoveKind kind;
  uint8_t winner;
  uint8_t looser;
};

// Type t iff the top-last subinterval is strictly longer; the winner is the
// symbol of the longer side.
inline StepType step_type(const LabeledPermutation& p,
                          const std::vector<Rational>& lengths) {
  uint8_t a = p.top.back(), b = p.bottom.back();
  if (a == b)
    throw MoveUndefined("type undefined: both rows end with the same symbol");
  int c = cmp(lengths[a], lengths[b]);
  if (c == 0)
    throw MoveUndefined("type undefined: equal lengths on the last symbols");
  if (c > 0) return {MoveKind::Top, a, b};
  return {MoveKind::Bottom, b, a};
}

struct InductionStep {
  Suspension next;
  MoveKind kind;
  uint8_t winner;
  uint8_t looser;
};

// One step of Rauzy-Veech induction on suspension data: the winner's length
// and height both lose the looser's value; the permutation takes the move of
// the step type.
inline InductionStep induce_suspension(const Suspension& s) {
  StepType st = step_type(s.perm, s.lengths);
  InductionStep out;
  out.kind = st.kind;
  out.winner = st.winner;
  out.looser = st.looser;
  out.next.perm = rauzy_move(s.perm, st.kind);
  out.next.lengths = s.lengths;
  out.next.heights = s.heights;
  out.next.lengths[st.winner] -= s.lengths[st.looser];
  out.next.heights[st.winner] -= s.heights[st.looser];
  return out;
}

// Zippered-rectangle area: h_a = (sum of heights left of a on top) minus
// (sum of heights left of a on bottom); area = sum lengths * h.
inline Rational area(const LabeledPermutation& p,
                     const std::vector<Rational>& lengths,
                     const std::vector<Rational>& heights) {
  int d = p.size();
  std::vector<Rational> h(d, Rational(0));
  Rational acc = 0;
  for (int i = 0; i < d; ++i) {
    h[p.top[i]] += acc;
    acc += heights[p.top[i]];
  }
  acc = 0;
  for (int j = 0; j < d; ++j) {
    h[p.bottom[j]] -= acc;
    acc += heights[p.bottom[j]];
  }
  Rational total = 0;
  for (int sym = 0; sym < d; ++sym) total += lengths[sym] * h[sym];
  if (total <= 0)
    throw InternalError("non-positive area on suspension data");
  return total;
}

inline Rational area(const Suspension& s) {
  return area(s.perm, s.lengths, s.heights);
}

}
