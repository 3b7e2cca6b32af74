#pragma once

#include <cstdlib>
#include <vector>

#include "rauzy/geometry.hpp"

namespace rauzy {

using IntMatrix = std::vector<std::vector<long long>>;

inline IntMatrix identity_matrix(int n) {
  IntMatrix m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  int n = static_cast<int>(a.size()), p = static_cast<int>(b[0].size());
  int m = static_cast<int>(b.size());
  IntMatrix c(n, std::vector<long long>(p, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < m; ++k)
      if (a[i][k])
        for (int j = 0; j < p; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline IntMatrix transpose(const IntMatrix& a) {
  int n = static_cast<int>(a.size()), m = static_cast<int>(a[0].size());
  IntMatrix t(m, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) t[j][i] = a[i][j];
  return t;
}

struct SkewNormalForm {
  IntMatrix normal;  // S^T A S: diagonal 2x2 blocks [[0,p],[-p,0]], then zeros
  IntMatrix basis;   // S; columns are the new basis vectors
  int rank;          // twice the number of blocks
};

// Integer congruence reduction of an antisymmetric matrix.  Pivot selection
// is the lexicographically smallest nonzero above-diagonal entry, so the
// output basis is deterministic.  All operations come in column+row pairs,
// keeping normal = S^T A S exactly.
inline SkewNormalForm skew_normal_form(IntMatrix a) {
  int n = static_cast<int>(a.size());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (a[r][c] != -a[c][r])
        throw InternalError("skew normal form needs an antisymmetric matrix");

  IntMatrix s = identity_matrix(n);
  auto pair_swap = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
    for (int c = 0; c < n; ++c) std::swap(a[i][c], a[j][c]);
    for (int r = 0; r < n; ++r) std::swap(s[r][i], s[r][j]);
  };
  auto pair_addmul = [&](int j, int i, long long q) {
    // column j += q * column i, then the mirrored row operation
    for (int r = 0; r < n; ++r) a[r][j] += q * a[r][i];
    for (int c = 0; c < n; ++c) a[j][c] += q * a[i][c];
    for (int r = 0; r < n; ++r) s[r][j] += q * s[r][i];
  };
  auto pair_negate = [&](int i) {
    for (int r = 0; r < n; ++r) a[r][i] = -a[r][i];
    for (int c = 0; c < n; ++c) a[i][c] = -a[i][c];
    for (int r = 0; r < n; ++r) s[r][i] = -s[r][i];
  };

  int i = 0;
  while (i + 1 < n) {
    int pr = -1, pc = -1;
    for (int r = i; r < n && pr < 0; ++r)
      for (int c = r + 1; c < n; ++c)
        if (a[r][c] != 0) {
          pr = r;
          pc = c;
          break;
        }
    if (pr < 0) break;
    pair_swap(i, pr);
    pair_swap(i + 1, pc);
    // Euclidean descent: |a[i][i+1]| strictly drops on every swap, so this
    // terminates; a swap-free pass leaves rows i and i+1 clean past i+1.
    while (true) {
      bool swapped = false;
      for (int j = i + 2; j < n; ++j) {
        if (a[i][j] != 0) {
          long long q = a[i][j] / a[i][i + 1];
          if (q != 0) pair_addmul(j, i + 1, -q);
          if (a[i][j] != 0) {
            pair_swap(j, i + 1);
            swapped = true;
            break;
          }
        }
        if (a[i + 1][j] != 0) {
          long long q = a[i + 1][j] / a[i + 1][i];
          if (q != 0) pair_addmul(j, i, -q);
          if (a[i + 1][j] != 0) {
            pair_swap(j, i);
            swapped = true;
            break;
          }
        }
      }
      if (!swapped) break;
    }
    if (a[i][i + 1] < 0) pair_negate(i + 1);
    i += 2;
  }
  return {std::move(a), std::move(s), i};
}

// Exact rational solve of m x = rhs (first solution with free variables 0).
// The systems fed here are always consistent; inconsistency is a bug.
inline std::vector<Rational> solve_rational(const IntMatrix& m,
                                            const std::vector<Rational>& rhs) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug[r][c] = Rational(static_cast<long>(m[r][c]));
    aug[r][n] = rhs[r];
  }
  std::vector<int> pivot_col(n, -1);
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int pr = -1;
    for (int r = row; r < n; ++r)
      if (aug[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(aug[row], aug[pr]);
    Rational inv = aug[row][col];
    for (int c = col; c <= n; ++c) aug[row][c] /= inv;
    for (int r = 0; r < n; ++r) {
      if (r == row || aug[r][col] == 0) continue;
      Rational f = aug[r][col];
      for (int c = col; c <= n; ++c) aug[r][c] -= f * aug[row][c];
    }
    pivot_col[row] = col;
    ++row;
  }
  for (int r = row; r < n; ++r)
    if (aug[r][n] != 0) throw InternalError("inconsistent linear system");
  std::vector<Rational> x(n, Rational(0));
  for (int r = 0; r < row; ++r) x[pivot_col[r]] = aug[r][n];
  return x;
}

struct CycleStep {
  uint8_t edge;
  int8_t dir;  // +1 traverses start germ -> end germ
};

struct CycleBasis {
  std::vector<std::vector<CycleStep>> cycles;  // chord edge first
  std::vector<std::vector<long long>> coeffs;  // signed edge counts, Z^d
  IntMatrix intersection;                      // 2g x 2g, unimodular
  IntMatrix symplectic;  // columns pair as (a_1, b_1, a_2, b_2, ...)
};

// Fundamental cycles of the edge graph (vertices = cones, one edge per
// symbol) over a BFS spanning tree rooted at the marked cone.  Intersection
// numbers come from the dual-loop pairing: the homology class of a cycle with
// edge coefficients c has dual coordinates m solving M m = -c, and
// <c_i, c_j> = c_i . m_j.
inline CycleBasis cycle_basis(const PolygonSurface& s) {
  int d = s.size();
  std::vector<int> from(d), to(d);
  for (int e = 0; e < d; ++e) {
    from[e] = s.cone_of_germ[germ_id(e, true)];
    to[e] = s.cone_of_germ[germ_id(e, false)];
  }
  int V = static_cast<int>(s.cones.size());

  std::vector<int> parent(V, -1), via_edge(V, -1), depth(V, 0);
  std::vector<int8_t> up_dir(V, 0);  // dir of via_edge when walking child->parent
  std::vector<bool> in_tree(d, false), visited(V, false);
  std::vector<int> queue{s.marked_cone};
  visited[s.marked_cone] = true;
  for (size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int e = 0; e < d; ++e) {
      int other = -1;
      int8_t up = 0;
      if (from[e] == v && !visited[to[e]]) {
        other = to[e];
        up = -1;  // child->parent runs end->start
      } else if (to[e] == v && !visited[from[e]]) {
        other = from[e];
        up = 1;
      }
      if (other < 0) continue;
      visited[other] = true;
      parent[other] = v;
      via_edge[other] = e;
      up_dir[other] = up;
      depth[other] = depth[v] + 1;
      queue.push_back(other);
    }
  }
  for (int v = 0; v < V; ++v)
    if (!visited[v]) throw InternalError("edge graph is disconnected");
  for (int v : queue)
    if (via_edge[v] >= 0) in_tree[via_edge[v]] = true;

  CycleBasis basis;
  for (int e = 0; e < d; ++e) {
    if (in_tree[e]) continue;
    std::vector<CycleStep> cycle{{static_cast<uint8_t>(e), 1}};
    // walk from the chord's head back to its tail through the tree
    int x = to[e], y = from[e];
    std::vector<CycleStep> down;  // collected tail-side steps, reversed later
    while (depth[x] > depth[y]) {
      cycle.push_back({static_cast<uint8_t>(via_edge[x]), up_dir[x]});
      x = parent[x];
    }
    while (depth[y] > depth[x]) {
      down.push_back({static_cast<uint8_t>(via_edge[y]),
                      static_cast<int8_t>(-up_dir[y])});
      y = parent[y];
    }
    while (x != y) {
      cycle.push_back({static_cast<uint8_t>(via_edge[x]), up_dir[x]});
      x = parent[x];
      down.push_back({static_cast<uint8_t>(via_edge[y]),
                      static_cast<int8_t>(-up_dir[y])});
      y = parent[y];
    }
    cycle.insert(cycle.end(), down.rbegin(), down.rend());
    std::vector<long long> c(d, 0);
    for (const auto& st : cycle) c[st.edge] += st.dir;
    basis.cycles.push_back(std::move(cycle));
    basis.coeffs.push_back(std::move(c));
  }

  int twog = static_cast<int>(basis.cycles.size());
  if (twog != 2 * s.genus)
    throw InternalError("chord count disagrees with genus");

  IntMatrix m = intersection_form(s.perm);
  std::vector<std::vector<Rational>> duals(twog);
  for (int j = 0; j < twog; ++j) {
    std::vector<Rational> rhs(d);
    for (int e = 0; e < d; ++e)
      rhs[e] = Rational(static_cast<long>(-basis.coeffs[j][e]));
    duals[j] = solve_rational(m, rhs);
  }
  basis.intersection.assign(twog, std::vector<long long>(twog, 0));
  for (int i = 0; i < twog; ++i)
    for (int j = 0; j < twog; ++j) {
      Rational v = 0;
      for (int e = 0; e < d; ++e)
        v += Rational(static_cast<long>(basis.coeffs[i][e])) * duals[j][e];
      if (!is_integer(v))
        throw InternalError("non-integer cycle intersection number");
      basis.intersection[i][j] = static_cast<long long>(v.get_num().get_si());
    }
  for (int i = 0; i < twog; ++i)
    for (int j = 0; j < twog; ++j)
      if (basis.intersection[i][j] != -basis.intersection[j][i])
        throw InternalError("cycle intersection matrix is not antisymmetric");

  SkewNormalForm snf = skew_normal_form(basis.intersection);
  if (snf.rank != twog)
    throw InternalError("cycle intersection matrix is singular");
  for (int t = 0; t + 1 < twog; t += 2)
    if (snf.normal[t][t + 1] != 1)
      throw InternalError("cycle intersection matrix is not unimodular");
  // S^T G S must be the standard symplectic form, exactly.
  IntMatrix check = matmul(transpose(snf.basis),
                           matmul(basis.intersection, snf.basis));
  if (check != snf.normal)
    throw InternalError("symplectic change of basis failed verification");
  basis.symplectic = std::move(snf.basis);
  return basis;
}

// Quadratic form on H_1(Z/2) attached to the translation structure,
// evaluated on the dual loop of each rectangle: the loop is simple, its
// turning index comes from the exterior angles along the boundary-hugging
// arc from the bottom side to the top side of the rectangle, and
// q = ind + 1 mod 2.
inline std::vector<int> dual_loop_parities(const PolygonSurface& s) {
  int d = s.size();
  std::vector<int> q(d);
  for (int sym = 0; sym < d; ++sym) {
    int i = s.perm.top_pos(sym), j = s.perm.bottom_pos(sym);
    double turning = -M_PI;  // the two junction turns at the side midpoints
    for (int k = j; k <= d - 1; ++k)
      turning += M_PI - s.sectors[d + k].angle;
    turning += M_PI - s.sectors[d].angle;
    for (int k = i; k <= d - 1; ++k) turning += M_PI - s.sectors[k].angle;
    double turns = turning / detail::kTwoPi;
    long ind = std::lround(turns);
    if (std::abs(turns - ind) > 1e-6)
      throw InternalError("dual loop turning is not an integer");
    q[sym] = static_cast<int>(((ind + 1) % 2 + 2) % 2);
  }
  return q;
}

// Arf invariant of the quadratic form: evaluate q on a symplectic basis in
// dual-loop coordinates and sum q(a_i) q(b_i).  Defined only when every cone
// degree is even.
inline int spin_parity(const PolygonSurface& s) {
  for (const auto& c : s.cones)
    if (c.degree % 2 != 0)
      throw SpinUndefined("spin parity needs all cone degrees even");
  int d = s.size();
  std::vector<int> q = dual_loop_parities(s);
  IntMatrix m = intersection_form(s.perm);

  auto q_of = [&](const std::vector<long long>& v) {
    int acc = 0;
    for (int a = 0; a < d; ++a) {
      if ((v[a] & 1) == 0) continue;
      acc ^= q[a];
      for (int b = a + 1; b < d; ++b)
        if ((v[b] & 1) && m[a][b] != 0) acc ^= 1;
    }
    return acc;
  };

  SkewNormalForm snf = skew_normal_form(m);
  if (snf.rank != 2 * s.genus)
    throw InternalError("intersection form rank disagrees with genus");
  for (int t = 0; t + 1 < snf.rank; t += 2)
    if (snf.normal[t][t + 1] != 1)
      throw InternalError("intersection form is not unimodular on homology");

  auto column = [&](int c) {
    std::vector<long long> v(d);
    for (int r = 0; r < d; ++r) v[r] = snf.basis[r][c];
    return v;
  };
  // q vanishes on the radical exactly when all degrees are even; anything
  // else means the form law or the loop indices are wrong.
  for (int c = snf.rank; c < d; ++c)
    if (q_of(column(c)) != 0)
      throw InternalError("quadratic form does not vanish on the radical");

  int parity = 0;
  for (int t = 0; t + 1 < snf.rank; t += 2)
    parity ^= (q_of(column(t)) & q_of(column(t + 1)));
  return parity;
}

inline int spin_parity(const ReducedPermutation& r) {
  return spin_parity(build_polygon(canonical_suspension(r)));
}

}
