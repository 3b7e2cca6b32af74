#pragma once

#include <cmath>
#include <vector>

#include "rauzy/errors.hpp"
#include "rauzy/induction.hpp"

namespace rauzy {

struct Vec2 {
  Rational x, y;
};

inline Vec2 operator+(const Vec2& a, const Vec2& b) {
  return {a.x + b.x, a.y + b.y};
}
inline Vec2 operator-(const Vec2& a, const Vec2& b) {
  return {a.x - b.x, a.y - b.y};
}
inline bool operator==(const Vec2& a, const Vec2& b) {
  return a.x == b.x && a.y == b.y;
}
inline Rational cross(const Vec2& a, const Vec2& b) {
  return a.x * b.y - a.y * b.x;
}
inline int sign_of(const Rational& q) { return sgn(q); }

// Closed-segment intersection test, exact.  Standard orientation cases plus
// collinear overlap via 1D boxes.
inline bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
  // assumes p collinear with a,b
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

inline bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c,
                               const Vec2& d) {
  int o1 = sign_of(cross(b - a, c - a));
  int o2 = sign_of(cross(b - a, d - a));
  int o3 = sign_of(cross(d - c, a - c));
  int o4 = sign_of(cross(d - c, b - c));
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

// A germ is one end of a glued edge: (symbol, at_start).  Each germ shows up
// exactly once as the clockwise boundary ray of some polygon corner and once
// as the counterclockwise ray of another; the surface gluing identifies the
// two occurrences.
inline int germ_id(int sym, bool at_start) { return sym * 2 + (at_start ? 0 : 1); }
inline int germ_symbol(int g) { return g / 2; }
inline bool germ_at_start(int g) { return (g % 2) == 0; }

// Polygon corner with its interior angle and its two boundary germs.
// Sector ids: 0 = left end (origin), 1..d-1 = top corners, d = right end,
// d+1..2d-1 = bottom corners.
struct Sector {
  double angle;
  int cw_germ;
  int ccw_germ;
};

struct Cone {
  std::vector<int> sectors;  // walk order, starting at the smallest id
  double total_angle;
  int degree;  // total_angle = 2*pi*(degree+1)
};

struct PolygonSurface {
  LabeledPermutation perm;
  std::vector<Rational> lengths;
  std::vector<Rational> heights;
  std::vector<Vec2> top_pts;     // P_0..P_d, P_0 = origin
  std::vector<Vec2> bottom_pts;  // Q_0..Q_d, Q_d = P_d = right end
  std::vector<Sector> sectors;   // 2d corners
  std::vector<Cone> cones;
  std::vector<int> cone_of_sector;
  std::vector<int> cone_of_germ;
  std::vector<double> germ_dev;  // development angle of each germ in its cone
  int marked_cone;               // cone containing the left end
  int genus;

  int size() const { return perm.size(); }
};

namespace detail {

inline double angle_of(const Vec2& v) {
  return std::atan2(to_double(v.y), to_double(v.x));
}

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Interior angle swept counterclockwise from the cw ray to the ccw ray;
// simple-polygon corners keep it in (0, 2*pi).
inline double interior_angle(const Vec2& cw_ray, const Vec2& ccw_ray) {
  double a = angle_of(ccw_ray) - angle_of(cw_ray);
  a = std::fmod(a, kTwoPi);
  if (a <= 0) a += kTwoPi;
  return a;
}

}  // namespace detail

// Build the suspension polygon and glue it: points, corner angles, cone
// classes with their degrees, the marked cone, and per-germ development
// angles.  Rejects non-suspension heights and crossing broken lines.
inline PolygonSurface build_polygon(const LabeledPermutation& p,
                                    const std::vector<Rational>& lengths,
                                    const std::vector<Rational>& heights) {
  int d = p.size();
  for (const auto& l : lengths)
    if (l <= 0) throw BadSuspension("lengths must be positive");
  if (!is_suspension(p, heights))
    throw BadSuspension("heights are not a suspension datum");

  PolygonSurface s;
  s.perm = p;
  s.lengths = lengths;
  s.heights = heights;
  s.top_pts.assign(d + 1, Vec2{Rational(0), Rational(0)});
  s.bottom_pts.assign(d + 1, Vec2{Rational(0), Rational(0)});
  for (int i = 0; i < d; ++i) {
    int sym = p.top[i];
    s.top_pts[i + 1] = s.top_pts[i] + Vec2{lengths[sym], heights[sym]};
  }
  for (int j = 0; j < d; ++j) {
    int sym = p.bottom[j];
    s.bottom_pts[j + 1] = s.bottom_pts[j] + Vec2{lengths[sym], heights[sym]};
  }
  if (!(s.top_pts[d] == s.bottom_pts[d]))
    throw InternalError("broken lines end at different points");

  // Embeddedness: no top side may meet a bottom side, except that sides 1
  // share the origin and sides d share the right end, where collinear overlap
  // is the only possible excess.
  const auto& P = s.top_pts;
  const auto& Q = s.bottom_pts;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      if (i == 1 && j == 1) {
        if (cross(P[1] - P[0], Q[1] - Q[0]) == 0)
          throw BadSuspension("broken lines overlap at the left end");
        continue;
      }
      if (i == d && j == d) {
        if (cross(P[d - 1] - P[d], Q[d - 1] - Q[d]) == 0)
          throw BadSuspension("broken lines overlap at the right end");
        continue;
      }
      if (segments_intersect(P[i - 1], P[i], Q[j - 1], Q[j]))
        throw BadSuspension("broken lines cross");
    }

  // Corner table.  Ray directions point along the boundary away from the
  // corner; the interior angle opens counterclockwise from cw ray to ccw ray.
  s.sectors.resize(2 * d);
  auto set_sector = [&](int id, const Vec2& cw_ray, int cw_germ,
                        const Vec2& ccw_ray, int ccw_germ) {
    s.sectors[id].angle = detail::interior_angle(cw_ray, ccw_ray);
    s.sectors[id].cw_germ = cw_germ;
    s.sectors[id].ccw_germ = ccw_germ;
  };
  set_sector(0, Q[1] - Q[0], germ_id(p.bottom[0], true), P[1] - P[0],
             germ_id(p.top[0], true));
  for (int k = 1; k <= d - 1; ++k)
    set_sector(k, P[k - 1] - P[k], germ_id(p.top[k - 1], false),
               P[k + 1] - P[k], germ_id(p.top[k], true));
  set_sector(d, P[d - 1] - P[d], germ_id(p.top[d - 1], false), Q[d - 1] - Q[d],
             germ_id(p.bottom[d - 1], false));
  for (int k = 1; k <= d - 1; ++k)
    set_sector(d + k, Q[k + 1] - Q[k], germ_id(p.bottom[k], true),
               Q[k - 1] - Q[k], germ_id(p.bottom[k - 1], false));

  // Polygon sanity: exterior angles of a simple ccw polygon sum to 2*pi.
  double ext = 0;
  for (const auto& sec : s.sectors) ext += M_PI - sec.angle;
  if (std::abs(ext - detail::kTwoPi) > 1e-9 * (d + 1))
    throw InternalError("exterior angle sum is off");

  // Each germ must appear exactly once per role.
  std::vector<int> sector_of_cw(2 * d, -1), seen_ccw(2 * d, 0);
  for (int id = 0; id < 2 * d; ++id) {
    int g = s.sectors[id].cw_germ;
    if (sector_of_cw[g] != -1) throw InternalError("duplicate cw germ");
    sector_of_cw[g] = id;
    if (++seen_ccw[s.sectors[id].ccw_germ] > 1)
      throw InternalError("duplicate ccw germ");
  }

  // Walk the gluing: the sector counterclockwise-next around a vertex is the
  // one whose cw germ is the current ccw germ.  Cycles are the vertex
  // classes; accumulated angles develop each germ inside its cone.
  s.cone_of_sector.assign(2 * d, -1);
  s.cone_of_germ.assign(2 * d, -1);
  s.germ_dev.assign(2 * d, 0.0);
  for (int start = 0; start < 2 * d; ++start) {
    if (s.cone_of_sector[start] != -1) continue;
    Cone cone;
    cone.total_angle = 0;
    int cur = start;
    do {
      int idx = static_cast<int>(s.cones.size());
      s.cone_of_sector[cur] = idx;
      int g = s.sectors[cur].cw_germ;
      s.cone_of_germ[g] = idx;
      s.germ_dev[g] = cone.total_angle;
      cone.sectors.push_back(cur);
      cone.total_angle += s.sectors[cur].angle;
      cur = sector_of_cw[s.sectors[cur].ccw_germ];
      if (cur < 0) throw InternalError("broken germ matching");
    } while (cur != start);
    double turns = cone.total_angle / detail::kTwoPi;
    int k = static_cast<int>(std::lround(turns)) - 1;
    if (k < 0 || std::abs(turns - (k + 1)) > 1e-6)
      throw InternalError("cone angle is not a positive multiple of 2*pi");
    if (std::abs(cone.total_angle - detail::kTwoPi * (k + 1)) >
        1e-9 * detail::kTwoPi * (k + 1))
      throw InternalError("cone angle drift beyond relative tolerance");
    cone.degree = k;
    s.cones.push_back(std::move(cone));
  }

  int V = static_cast<int>(s.cones.size());
  if ((d - V + 1) % 2 != 0)
    throw InternalError("Euler characteristic is odd");
  s.genus = (d - V + 1) / 2;
  int degree_sum = 0;
  for (const auto& c : s.cones) degree_sum += c.degree;
  if (degree_sum != 2 * s.genus - 2)
    throw InternalError("degree sum disagrees with genus");
  s.marked_cone = s.cone_of_sector[0];
  return s;
}

inline PolygonSurface build_polygon(const Suspension& susp) {
  return build_polygon(susp.perm, susp.lengths, susp.heights);
}

// Test-side oracle: polygon area by the shoelace formula over the ccw
// boundary (bottom chain left to right, then top chain right to left).
inline Rational shoelace_area(const PolygonSurface& s) {
  int d = s.size();
  std::vector<Vec2> loop;
  for (int j = 0; j <= d; ++j) loop.push_back(s.bottom_pts[j]);
  for (int i = d - 1; i >= 1; --i) loop.push_back(s.top_pts[i]);
  Rational twice = 0;
  for (size_t i = 0; i < loop.size(); ++i)
    twice += cross(loop[i], loop[(i + 1) % loop.size()]);
  return twice / 2;
}

// Algebraic intersection numbers of the dual loops: loop a crosses the
// rectangle of a once, so <a,b> counts how the chords (top slot, bottom
// slot) of a and b interleave on the boundary circle.
inline std::vector<std::vector<long long>> intersection_form(
    const LabeledPermutation& p) {
  int d = p.size();
  std::vector<int> tp(d), bp(d);
  for (int i = 0; i < d; ++i) tp[p.top[i]] = i + 1;
  for (int j = 0; j < d; ++j) bp[p.bottom[j]] = j + 1;
  std::vector<std::vector<long long>> m(d, std::vector<long long>(d, 0));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      if (a == b) continue;
      if (tp[b] < tp[a] && bp[b] > bp[a])
        m[a][b] = 1;
      else if (tp[b] > tp[a] && bp[b] < bp[a])
        m[a][b] = -1;
    }
  return m;
}

}
