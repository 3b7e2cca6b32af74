#pragma once

// Shared helpers for the test binaries: independent oracles written against
// the published definitions, plus deterministic random data generators.

#include <numeric>
#include <random>
#include <vector>

#include "rauzy/rauzy.hpp"

namespace testsupport {

// Oracle: the two moves transcribed case by case from their published
// definition, position formulas instead of row surgery.  k below is the
// 1-based position of the fixed row's last symbol inside the moving row.
inline rauzy::LabeledPermutation oracle_move(const rauzy::LabeledPermutation& p,
                                             rauzy::MoveKind kind) {
  int d = p.size();
  const rauzy::Row& fixed = kind == rauzy::MoveKind::Top ? p.top : p.bottom;
  const rauzy::Row& moving = kind == rauzy::MoveKind::Top ? p.bottom : p.top;
  if (fixed[d - 1] == moving[d - 1])
    throw rauzy::MoveUndefined("oracle: degenerate move");
  int k = 0;
  for (int i = 0; i < d; ++i)
    if (moving[i] == fixed[d - 1]) k = i + 1;
  rauzy::Row next(d);
  for (int j = 1; j <= d; ++j) {
    if (j <= k)
      next[j - 1] = moving[j - 1];
    else if (j == k + 1)
      next[j - 1] = moving[d - 1];
    else
      next[j - 1] = moving[j - 2];
  }
  rauzy::LabeledPermutation q = p;
  (kind == rauzy::MoveKind::Top ? q.bottom : q.top) = next;
  return q;
}

// Oracle: count of irreducible words per size from the standard recurrence
// f(d) = d! - sum f(k) (d-k)! over k < d.
inline std::vector<long long> irreducible_counts(int max_d) {
  std::vector<long long> fact(max_d + 1, 1);
  for (int i = 1; i <= max_d; ++i) fact[i] = fact[i - 1] * i;
  std::vector<long long> f(max_d + 1, 0);
  for (int n = 1; n <= max_d; ++n) {
    f[n] = fact[n];
    for (int k = 1; k < n; ++k) f[n] -= f[k] * fact[n - k];
  }
  return f;
}

// Every word of size d in lexicographic order.
template <typename Fn>
inline void for_each_word(int d, Fn&& fn) {
  std::vector<uint8_t> w(d);
  std::iota(w.begin(), w.end(), uint8_t{1});
  do {
    fn(rauzy::Word(w.begin(), w.end()));
  } while (std::next_permutation(w.begin(), w.end()));
}

template <typename Fn>
inline void for_each_irreducible(int d, Fn&& fn) {
  for_each_word(d, [&](const rauzy::Word& w) {
    if (rauzy::is_irreducible(w)) fn(w);
  });
}

inline rauzy::Word random_irreducible_word(std::mt19937_64& rng, int d) {
  std::vector<uint8_t> w(d);
  std::iota(w.begin(), w.end(), uint8_t{1});
  do {
    std::shuffle(w.begin(), w.end(), rng);
  } while (!rauzy::is_irreducible(rauzy::Word(w.begin(), w.end())));
  return rauzy::Word(w.begin(), w.end());
}

// Random exact suspension: lengths 1 + k/8 with k in 0..15 (regenerated while
// the two last subintervals tie), heights = canonical plus jitter of at most
// 1/(4d), small enough to keep every strict sign condition.
inline rauzy::Suspension random_suspension(std::mt19937_64& rng,
                                           const rauzy::Word& word) {
  rauzy::LabeledPermutation p = rauzy::embed(rauzy::ReducedPermutation{word});
  int d = p.size();
  rauzy::Suspension s = rauzy::canonical_suspension(p);
  std::uniform_int_distribution<int> len_k(0, 15);
  do {
    for (int sym = 0; sym < d; ++sym)
      s.lengths[sym] = rauzy::Rational(1) + rauzy::make_rational(len_k(rng), 8);
  } while (s.lengths[p.top.back()] == s.lengths[p.bottom.back()]);
  std::uniform_int_distribution<int> jit(-8, 8);
  for (int sym = 0; sym < d; ++sym)
    s.heights[sym] += rauzy::make_rational(jit(rng), 32L * d);
  if (!rauzy::is_suspension(s))
    throw rauzy::InternalError("generator produced a non-suspension");
  return s;
}

inline rauzy::Suspension random_suspension(std::mt19937_64& rng, int d) {
  return random_suspension(rng, random_irreducible_word(rng, d));
}

// Expected cardinality of the reversal family class: 2^(d-1) - 1 in both
// modes.
inline uint64_t reversal_class_size(int d) { return (uint64_t{1} << (d - 1)) - 1; }

// Expected reduced cardinality of the marked reversal family with parameter
// n (so n+1 symbols): the unmarked count plus one extra vertex per symbol.
inline uint64_t marked_reversal_class_size(int n) {
  return reversal_class_size(n) + static_cast<uint64_t>(n);
}

}  // namespace testsupport
