#include "shrinkcy/toric.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "shrinkcy/error.hpp"

namespace shrinkcy {

namespace {

long long gcd_ll(long long a, long long b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

// extended gcd: returns g and coefficients with s*a + t*b == g >= 0
struct ExtGcd {
  long long g, s, t;
};
ExtGcd extgcd(long long a, long long b) {
  long long old_r = a, r = b;
  long long old_s = 1, s = 0;
  long long old_t = 0, t = 1;
  while (r != 0) {
    long long q = old_r / r;
    long long tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Vec2 primitive(const Vec2& v) {
  long long g = gcd_ll(v.x, v.y);
  if (g == 0) throw Error("internal: primitive direction of the zero vector");
  return {v.x / g, v.y / g};
}

long long floor_div_ll(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::pair<Vec2, Vec2> norm_edge(const Vec2& a, const Vec2& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

std::array<Vec2, 3> sorted_triple(Vec2 a, Vec2 b, Vec2 c) {
  std::array<Vec2, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

// rotate a ccw cell so its lex-smallest vertex comes first
std::array<Vec2, 3> canon_cell(const std::array<Vec2, 3>& c) {
  int best = 0;
  for (int i = 1; i < 3; ++i)
    if (c[i] < c[best]) best = i;
  return {c[best], c[(best + 1) % 3], c[(best + 2) % 3]};
}

long long twice_area(const std::vector<Vec2>& corners) {
  long long s = 0;
  for (size_t i = 0; i < corners.size(); ++i) {
    const Vec2& a = corners[i];
    const Vec2& b = corners[(i + 1) % corners.size()];
    s += a.x * b.y - b.x * a.y;
  }
  return s;  // signed: positive for ccw
}

// corner cycle made ccw and checked strictly convex
std::vector<Vec2> ccw_convex(std::vector<Vec2> corners) {
  if (corners.size() < 3) throw ValidationError("polygon needs at least 3 corners");
  long long a2 = twice_area(corners);
  if (a2 == 0) throw ValidationError("polygon is degenerate (zero area)");
  if (a2 < 0) std::reverse(corners.begin(), corners.end());
  size_t m = corners.size();
  for (size_t i = 0; i < m; ++i) {
    const Vec2& p = corners[i];
    const Vec2& q = corners[(i + 1) % m];
    const Vec2& r = corners[(i + 2) % m];
    if (det2(q - p, r - q) <= 0)
      throw ValidationError("polygon is not strictly convex at corner " +
                            render_vec(q));
  }
  return corners;
}

// classification of p against a ccw convex corner cycle
PointKind classify_against(const std::vector<Vec2>& corners, const Vec2& p,
                           bool* inside) {
  *inside = true;
  bool on_edge = false;
  size_t m = corners.size();
  for (size_t i = 0; i < m; ++i) {
    const Vec2& a = corners[i];
    const Vec2& b = corners[(i + 1) % m];
    long long d = det2(b - a, p - a);
    if (d < 0) {
      *inside = false;
      return PointKind::Interior;  // value unused
    }
    if (d == 0) on_edge = true;
  }
  for (const Vec2& c : corners)
    if (p == c) return PointKind::Vertex;
  return on_edge ? PointKind::Boundary : PointKind::Interior;
}

std::vector<ClassifiedPoint> scan_points(const std::vector<Vec2>& corners) {
  long long minx = corners[0].x, maxx = corners[0].x;
  long long miny = corners[0].y, maxy = corners[0].y;
  for (const Vec2& c : corners) {
    minx = std::min(minx, c.x);
    maxx = std::max(maxx, c.x);
    miny = std::min(miny, c.y);
    maxy = std::max(maxy, c.y);
  }
  std::vector<ClassifiedPoint> out;
  for (long long x = minx; x <= maxx; ++x)
    for (long long y = miny; y <= maxy; ++y) {
      bool inside = false;
      PointKind k = classify_against(corners, {x, y}, &inside);
      if (inside) out.push_back({{x, y}, k});
    }
  return out;  // lex sorted by construction
}

// boundary lattice points in ccw cyclic order, corners included once each
std::vector<Vec2> boundary_cycle(const std::vector<Vec2>& corners) {
  std::vector<Vec2> cycle;
  size_t m = corners.size();
  for (size_t i = 0; i < m; ++i) {
    const Vec2& a = corners[i];
    const Vec2& b = corners[(i + 1) % m];
    Vec2 diff = b - a;
    long long g = gcd_ll(diff.x, diff.y);
    Vec2 step{diff.x / g, diff.y / g};
    for (long long k = 0; k < g; ++k) cycle.push_back(a + k * step);
  }
  return cycle;
}

void finalize_section(FanSection& fs) {
  long long a2 = twice_area(fs.polygon);
  if (a2 <= 0) throw Error("internal: polygon not ccw at finalize");
  for (auto& c : fs.cells) {
    if (det2(c[1] - c[0], c[2] - c[0]) != 1)
      throw Error("internal: cell " + render_vec(c[0]) + " " + render_vec(c[1]) +
                  " " + render_vec(c[2]) + " is not a ccw unimodular triangle");
    c = canon_cell(c);
  }
  std::sort(fs.cells.begin(), fs.cells.end(),
            [](const std::array<Vec2, 3>& a, const std::array<Vec2, 3>& b) {
              return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                                  b.end());
            });
  if (static_cast<long long>(fs.cells.size()) != a2)
    throw ValidationError(
        "triangulation has " + std::to_string(fs.cells.size()) +
        " cells but the polygon has lattice area " + std::to_string(a2) +
        "/2; a full unimodular triangulation needs " + std::to_string(a2));
  long long interior = 0, boundary = 0;
  for (const auto& cp : fs.points)
    (cp.kind == PointKind::Interior ? interior : boundary) += 1;
  if (a2 != 2 * interior + boundary - 2)
    throw Error("internal: lattice point count violates the area formula");
  std::set<std::pair<Vec2, Vec2>> es;
  for (const auto& c : fs.cells)
    for (int i = 0; i < 3; ++i) es.insert(norm_edge(c[i], c[(i + 1) % 3]));
  fs.edges.assign(es.begin(), es.end());
}

// ccw angular order starting at the positive x-axis
bool ray_less(const Vec2& a, const Vec2& b) {
  auto half = [](const Vec2& v) {
    return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return det2(a, b) > 0;
}

std::vector<long long> selfints_impl(const std::vector<Vec2>& rays) {
  size_t k = rays.size();
  if (k < 3)
    throw ValidationError("a complete fan needs at least 3 rays, got " +
                          std::to_string(k));
  for (const Vec2& u : rays) {
    if (u.x == 0 && u.y == 0) throw ValidationError("zero ray in fan");
    if (gcd_ll(u.x, u.y) != 1)
      throw ValidationError("ray " + render_vec(u) + " is not primitive");
  }
  for (size_t i = 0; i < k; ++i) {
    const Vec2& u = rays[i];
    const Vec2& v = rays[(i + 1) % k];
    long long d = det2(u, v);
    if (d != 1)
      throw ValidationError("adjacent rays " + render_vec(u) + " and " +
                            render_vec(v) + " span determinant " +
                            std::to_string(d) +
                            "; not a smooth counterclockwise complete fan");
  }
  std::vector<long long> out(k);
  for (size_t i = 0; i < k; ++i) {
    const Vec2& prev = rays[(i + k - 1) % k];
    const Vec2& next = rays[(i + 1) % k];
    out[i] = -det2(prev, next);
    Vec2 sum = prev + next + out[i] * rays[i];
    if (sum.x != 0 || sum.y != 0)
      throw Error("internal: ray relation fails at " + render_vec(rays[i]));
  }
  long long total = std::accumulate(out.begin(), out.end(), 0LL);
  if (total != 12 - 3 * static_cast<long long>(k))
    throw Error("internal: self-intersection total " + std::to_string(total) +
                " for " + std::to_string(k) + " rays, expected " +
                std::to_string(12 - 3 * static_cast<long long>(k)));
  return out;
}

void check_reference_fans() {
  // pin the sign convention against the three unmistakable fans before
  // trusting it anywhere else
  std::vector<Vec2> p2{{1, 0}, {0, 1}, {-1, -1}};
  if (selfints_impl(p2) != std::vector<long long>{1, 1, 1})
    throw Error("internal: reference fan check failed for the projective plane");
  std::vector<Vec2> f0{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  if (selfints_impl(f0) != std::vector<long long>{0, 0, 0, 0})
    throw Error("internal: reference fan check failed for the quadric");
  std::vector<Vec2> f3{{1, 0}, {0, 1}, {-1, 3}, {0, -1}};
  if (selfints_impl(f3) != std::vector<long long>{0, -3, 0, 3})
    throw Error("internal: reference fan check failed for the third ruled surface");
}

}  // namespace

std::string render_vec(const Vec2& v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

std::string to_string(PointKind k) {
  switch (k) {
    case PointKind::Vertex: return "vertex";
    case PointKind::Boundary: return "boundary";
    case PointKind::Interior: return "interior";
  }
  return "?";
}

StackyTriangle weights_to_triangle(long long a, long long b, long long c) {
  if (a < 1 || b < 1 || c < 1)
    throw ValidationError("weights must be positive integers");
  if (std::gcd(std::gcd(a, b), c) != 1)
    throw ValidationError(
        "weights (" + std::to_string(a) + "," + std::to_string(b) + "," +
        std::to_string(c) +
        ") share a common factor; that datum is a gerbe, not a surface "
        "quotient, and has no lattice triangle");
  // build W in GL3(Z) with W * (a,b,c)^T = e1; the triangle vertices are the
  // columns of the lower 2x3 block, so the weighted vertex sum is zero
  ExtGcd g1 = extgcd(a, b);
  long long r0[3] = {g1.s, g1.t, 0};
  long long r1[3] = {-b / g1.g, a / g1.g, 0};
  ExtGcd g2 = extgcd(g1.g, c);
  long long w0[3], w2[3];
  for (int i = 0; i < 3; ++i) w0[i] = g2.s * r0[i];
  w0[2] += g2.t;
  for (int i = 0; i < 3; ++i) w2[i] = -(c / g2.g) * r0[i];
  w2[2] += g1.g / g2.g;
  long long check0 = w0[0] * a + w0[1] * b + w0[2] * c;
  long long check1 = r1[0] * a + r1[1] * b + r1[2] * c;
  long long check2 = w2[0] * a + w2[1] * b + w2[2] * c;
  if (check0 != 1 || check1 != 0 || check2 != 0)
    throw Error("internal: weight matrix construction failed");
  StackyTriangle t;
  t.weights = {a, b, c};
  t.vertices = {Vec2{r1[0], w2[0]}, Vec2{r1[1], w2[1]}, Vec2{r1[2], w2[2]}};
  Vec2 rel = a * t.vertices[0] + b * t.vertices[1] + c * t.vertices[2];
  if (rel.x != 0 || rel.y != 0)
    throw Error("internal: weighted vertex sum is not zero");
  return normal_form(t);
}

StackyTriangle quotient_to_triangle(long long n, long long a, long long b,
                                    long long c) {
  if (n < 1 || a < 1 || b < 1 || c < 1)
    throw ValidationError("quotient data must be positive integers");
  if (a + b + c != n)
    throw ValidationError("quotient weights (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) +
                          ") must sum to the order " + std::to_string(n));
  return weights_to_triangle(a, b, c);
}

StackyTriangle normal_form(const StackyTriangle& t) {
  // send the primitive direction of the highest-weight vertex (ties: the
  // later one) to (0,1), then use the remaining shear freedom to put the
  // first other vertex at x > 0 with y in [0, x)
  int pivot = 0;
  for (int i = 1; i < 3; ++i)
    if (t.weights[i] >= t.weights[pivot]) pivot = i;
  Vec2 u = primitive(t.vertices[pivot]);
  ExtGcd g = extgcd(u.x, u.y);  // g.s*x + g.t*y == 1
  Mat2 m;
  m.m[0][0] = u.y;
  m.m[0][1] = -u.x;
  m.m[1][0] = g.s;
  m.m[1][1] = g.t;
  if (m.det() != 1) throw Error("internal: normal form basis is not unimodular");
  std::array<Vec2, 3> v;
  for (int i = 0; i < 3; ++i) v[i] = m.apply(t.vertices[i]);
  int first = pivot == 0 ? 1 : 0;
  if (v[first].x == 0) throw Error("internal: degenerate triangle in normal form");
  if (v[first].x < 0)
    for (int i = 0; i < 3; ++i) v[i].x = -v[i].x;
  long long k = -floor_div_ll(v[first].y, v[first].x);
  for (int i = 0; i < 3; ++i) v[i].y += k * v[i].x;
  StackyTriangle out;
  out.vertices = v;
  out.weights = t.weights;
  Vec2 rel = out.weights[0] * v[0] + out.weights[1] * v[1] + out.weights[2] * v[2];
  if (rel.x != 0 || rel.y != 0)
    throw Error("internal: normal form broke the weighted vertex relation");
  return out;
}

StackyTriangle triangle_from_vertices(const Vec2& v0, const Vec2& v1,
                                      const Vec2& v2) {
  long long d0 = det2(v1, v2);
  long long d1 = det2(v2, v0);
  long long d2 = det2(v0, v1);
  if (d0 == 0 || d1 == 0 || d2 == 0 ||
      !((d0 > 0) == (d1 > 0) && (d1 > 0) == (d2 > 0)))
    throw ValidationError(
        "the origin is not strictly inside the triangle " + render_vec(v0) +
        " " + render_vec(v1) + " " + render_vec(v2));
  if (d0 < 0) {
    d0 = -d0;
    d1 = -d1;
    d2 = -d2;
  }
  long long g = std::gcd(std::gcd(d0, d1), d2);
  if (g > 1)
    throw ValidationError(
        "vertex triple has weight gcd " + std::to_string(g) +
        "; that datum is a gerbe, not a surface quotient");
  StackyTriangle t;
  t.vertices = {v0, v1, v2};
  t.weights = {d0, d1, d2};
  return t;
}

std::optional<TriangleMatch> triangle_equivalence(const StackyTriangle& lhs,
                                                  const StackyTriangle& rhs) {
  std::array<int, 3> perm{0, 1, 2};
  std::sort(perm.begin(), perm.end());
  do {
    bool weights_ok = true;
    for (int i = 0; i < 3; ++i)
      if (lhs.weights[i] != rhs.weights[perm[i]]) weights_ok = false;
    if (!weights_ok) continue;
    // solve M * lhs.v0 = rhs.v_{perm0}, M * lhs.v1 = rhs.v_{perm1} over Z
    const Vec2& a0 = lhs.vertices[0];
    const Vec2& a1 = lhs.vertices[1];
    const Vec2& b0 = rhs.vertices[perm[0]];
    const Vec2& b1 = rhs.vertices[perm[1]];
    long long da = det2(a0, a1);
    if (da == 0) throw Error("internal: degenerate triangle in equivalence");
    // M = [b0 b1] * adj([a0 a1]) / det
    long long n00 = b0.x * a1.y - b1.x * a0.y;
    long long n01 = -b0.x * a1.x + b1.x * a0.x;
    long long n10 = b0.y * a1.y - b1.y * a0.y;
    long long n11 = -b0.y * a1.x + b1.y * a0.x;
    if (n00 % da || n01 % da || n10 % da || n11 % da) continue;
    Mat2 m;
    m.m[0][0] = n00 / da;
    m.m[0][1] = n01 / da;
    m.m[1][0] = n10 / da;
    m.m[1][1] = n11 / da;
    long long d = m.det();
    if (d != 1 && d != -1) continue;
    if (m.apply(lhs.vertices[2]) != rhs.vertices[perm[2]]) continue;
    return TriangleMatch{m, perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::vector<ClassifiedPoint> lattice_points(const StackyTriangle& t) {
  std::vector<Vec2> corners(t.vertices.begin(), t.vertices.end());
  if (twice_area(corners) < 0) std::swap(corners[1], corners[2]);
  return scan_points(corners);
}

FanSection triangulate(const StackyTriangle& t) {
  std::vector<Vec2> corners(t.vertices.begin(), t.vertices.end());
  if (twice_area(corners) < 0) std::swap(corners[1], corners[2]);
  return triangulate_polygon(corners);
}

FanSection triangulate_polygon(const std::vector<Vec2>& raw_corners) {
  FanSection fs;
  fs.polygon = ccw_convex(raw_corners);
  fs.points = scan_points(fs.polygon);

  std::vector<Vec2> cycle = boundary_cycle(fs.polygon);
  size_t start = 0;
  for (size_t i = 1; i < cycle.size(); ++i)
    if (cycle[i] < cycle[start]) start = i;
  std::rotate(cycle.begin(), cycle.begin() + start, cycle.end());
  for (size_t i = 1; i + 1 < cycle.size(); ++i) {
    long long d = det2(cycle[i] - cycle[0], cycle[i + 1] - cycle[0]);
    if (d == 0) continue;  // collinear with the apex along its own edges
    if (d < 0) throw Error("internal: boundary fan is not ccw");
    fs.cells.push_back({cycle[0], cycle[i], cycle[i + 1]});
  }

  // points the boundary fan missed: interior ones, plus boundary points that
  // were collinear with the fan apex along its own edges
  std::set<Vec2> used;
  for (const auto& c : fs.cells) used.insert(c.begin(), c.end());
  for (const auto& cp : fs.points) {
    if (used.count(cp.p)) continue;
    const Vec2& p = cp.p;
    // locate the cell (or the edge between two cells) holding p
    size_t found = fs.cells.size();
    int zero_at = -1;
    for (size_t ci = 0; ci < fs.cells.size(); ++ci) {
      const auto& c = fs.cells[ci];
      long long d01 = det2(c[1] - c[0], p - c[0]);
      long long d12 = det2(c[2] - c[1], p - c[1]);
      long long d20 = det2(c[0] - c[2], p - c[2]);
      if (d01 < 0 || d12 < 0 || d20 < 0) continue;
      int zeros = (d01 == 0) + (d12 == 0) + (d20 == 0);
      if (zeros >= 2) throw Error("internal: duplicate point " + render_vec(p));
      found = ci;
      zero_at = d01 == 0 ? 0 : d12 == 0 ? 1 : d20 == 0 ? 2 : -1;
      break;
    }
    if (found == fs.cells.size())
      throw Error("internal: no cell contains " + render_vec(p));
    std::array<Vec2, 3> cell = fs.cells[found];
    if (zero_at < 0) {
      fs.cells.erase(fs.cells.begin() + found);
      fs.cells.push_back({cell[0], cell[1], p});
      fs.cells.push_back({cell[1], cell[2], p});
      fs.cells.push_back({cell[2], cell[0], p});
    } else {
      // p sits on the edge (a,b): split every cell along it (two for an
      // interior edge, one when (a,b) lies on the polygon boundary)
      Vec2 a = cell[zero_at], b = cell[(zero_at + 1) % 3];
      std::vector<std::array<Vec2, 3>> along;
      for (size_t ci = fs.cells.size(); ci-- > 0;) {
        const auto& c = fs.cells[ci];
        int hits = 0;
        for (const Vec2& v : c) hits += (v == a || v == b);
        if (hits == 2) {
          along.push_back(c);
          fs.cells.erase(fs.cells.begin() + ci);
        }
      }
      if (along.empty() || along.size() > 2)
        throw Error("internal: edge " + render_vec(a) + "-" + render_vec(b) +
                    " bounds " + std::to_string(along.size()) + " cells");
      for (const auto& c : along) {
        int e = -1;
        for (int i = 0; i < 3; ++i) {
          const Vec2& u = c[i];
          const Vec2& v = c[(i + 1) % 3];
          if ((u == a && v == b) || (u == b && v == a)) e = i;
        }
        if (e < 0) throw Error("internal: lost the split edge");
        fs.cells.push_back({c[e], p, c[(e + 2) % 3]});
        fs.cells.push_back({p, c[(e + 1) % 3], c[(e + 2) % 3]});
      }
    }
  }
  finalize_section(fs);
  return fs;
}

namespace {

Vec2 parse_point(const std::string& s, size_t& pos, const std::string& name,
                 int lineno) {
  auto fail = [&](const std::string& msg) {
    throw ParseError(name + ": " + msg, lineno, static_cast<int>(pos) + 1);
  };
  auto skip_ws = [&] {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos >= s.size() || s[pos] != '(') fail("expected '('");
  ++pos;
  auto read_ll = [&]() -> long long {
    skip_ws();
    size_t begin = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == begin || (pos == begin + 1 && !std::isdigit(static_cast<unsigned char>(s[begin]))))
      fail("expected an integer");
    return std::stoll(s.substr(begin, pos - begin));
  };
  long long x = read_ll();
  skip_ws();
  if (pos >= s.size() || s[pos] != ',') fail("expected ','");
  ++pos;
  long long y = read_ll();
  skip_ws();
  if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
  ++pos;
  return {x, y};
}

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3)
    throw ValidationError("need at least 3 distinct points for a hull");
  auto build = [&](bool upper) {
    std::vector<Vec2> h;
    for (size_t i = 0; i < pts.size(); ++i) {
      const Vec2& p = pts[upper ? pts.size() - 1 - i : i];
      while (h.size() >= 2 &&
             det2(h.back() - h[h.size() - 2], p - h[h.size() - 2]) <= 0)
        h.pop_back();
      h.push_back(p);
    }
    return h;
  };
  std::vector<Vec2> lower = build(false), upper = build(true);
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  if (lower.size() < 3) throw ValidationError("hull of the edge set is degenerate");
  return lower;  // ccw
}

}  // namespace

FanSection load_triangulation_text(const std::string& text,
                                   const std::string& name) {
  std::vector<Vec2> polygon;
  std::vector<std::pair<Vec2, Vec2>> raw_edges;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    size_t last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    if (line.rfind("polygon", 0) == 0) {
      if (!polygon.empty())
        throw ParseError(name + ": repeated polygon line", lineno, 1);
      size_t pos = 7;
      while (pos < line.size()) {
        size_t probe = pos;
        while (probe < line.size() && (line[probe] == ' ' || line[probe] == '\t'))
          ++probe;
        if (probe == line.size()) break;
        pos = probe;
        polygon.push_back(parse_point(line, pos, name, lineno));
      }
      if (polygon.size() < 3)
        throw ParseError(name + ": polygon needs at least 3 corners", lineno, 1);
    } else if (line.rfind("edge", 0) == 0) {
      size_t pos = 4;
      Vec2 a = parse_point(line, pos, name, lineno);
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
      if (pos >= line.size() || line[pos] != '-')
        throw ParseError(name + ": expected '-' between edge endpoints", lineno,
                         static_cast<int>(pos) + 1);
      ++pos;
      Vec2 b = parse_point(line, pos, name, lineno);
      if (a == b)
        throw ParseError(name + ": edge with equal endpoints", lineno, 1);
      raw_edges.emplace_back(a, b);
    } else {
      throw ParseError(name + ": expected 'polygon' or 'edge'", lineno, 1);
    }
  }
  if (raw_edges.empty() && polygon.empty())
    throw ParseError(name + ": no polygon or edges found", 1, 1);

  FanSection fs;
  if (polygon.empty()) {
    std::vector<Vec2> endpoints;
    for (const auto& e : raw_edges) {
      endpoints.push_back(e.first);
      endpoints.push_back(e.second);
    }
    fs.polygon = convex_hull(endpoints);
  } else {
    fs.polygon = ccw_convex(polygon);
  }
  fs.points = scan_points(fs.polygon);
  std::set<Vec2> lattice;
  for (const auto& cp : fs.points) lattice.insert(cp.p);

  std::set<std::pair<Vec2, Vec2>> es;
  auto add_split = [&](const Vec2& a, const Vec2& b) {
    if (!lattice.count(a))
      throw ValidationError(name + ": endpoint " + render_vec(a) +
                            " is outside the polygon");
    if (!lattice.count(b))
      throw ValidationError(name + ": endpoint " + render_vec(b) +
                            " is outside the polygon");
    Vec2 diff = b - a;
    long long g = gcd_ll(diff.x, diff.y);
    Vec2 step{diff.x / g, diff.y / g};
    for (long long k = 0; k < g; ++k) {
      Vec2 u = a + k * step;
      Vec2 v = a + (k + 1) * step;
      if (!lattice.count(u) || !lattice.count(v))
        throw ValidationError(name + ": edge " + render_vec(a) + "-" +
                              render_vec(b) + " leaves the polygon");
      es.insert(norm_edge(u, v));
    }
  };
  for (const auto& e : raw_edges) add_split(e.first, e.second);
  std::vector<Vec2> cycle = boundary_cycle(fs.polygon);
  for (size_t i = 0; i < cycle.size(); ++i)
    es.insert(norm_edge(cycle[i], cycle[(i + 1) % cycle.size()]));

  std::vector<std::pair<Vec2, Vec2>> edges(es.begin(), es.end());
  for (size_t i = 0; i < edges.size(); ++i)
    for (size_t j = i + 1; j < edges.size(); ++j) {
      const Vec2 &p1 = edges[i].first, &p2 = edges[i].second;
      const Vec2 &q1 = edges[j].first, &q2 = edges[j].second;
      long long d1 = det2(p2 - p1, q1 - p1);
      long long d2 = det2(p2 - p1, q2 - p1);
      long long d3 = det2(q2 - q1, p1 - q1);
      long long d4 = det2(q2 - q1, p2 - q1);
      bool neg1 = (d1 < 0) != (d2 < 0) && d1 != 0 && d2 != 0;
      bool neg2 = (d3 < 0) != (d4 < 0) && d3 != 0 && d4 != 0;
      if (neg1 && neg2)
        throw ValidationError(name + ": edges " + render_vec(p1) + "-" +
                              render_vec(p2) + " and " + render_vec(q1) + "-" +
                              render_vec(q2) + " cross");
    }

  std::map<Vec2, std::set<Vec2>> adj;
  for (const auto& e : edges) {
    adj[e.first].insert(e.second);
    adj[e.second].insert(e.first);
  }
  for (const Vec2& p : lattice)
    if (!adj.count(p))
      throw ValidationError(name + ": lattice point " + render_vec(p) +
                            " is not used by any edge");

  for (const auto& e : edges) {
    const Vec2& a = e.first;
    const Vec2& b = e.second;  // a < b
    for (const Vec2& c : adj[a]) {
      if (!(b < c)) continue;
      if (!adj[b].count(c)) continue;
      long long d = det2(b - a, c - a);
      if (d == 1)
        fs.cells.push_back({a, b, c});
      else if (d == -1)
        fs.cells.push_back({a, c, b});
    }
  }
  finalize_section(fs);

  // each edge must bound the right number of cells
  std::map<std::pair<Vec2, Vec2>, int> uses;
  for (const auto& c : fs.cells)
    for (int i = 0; i < 3; ++i) uses[norm_edge(c[i], c[(i + 1) % 3])] += 1;
  std::set<std::pair<Vec2, Vec2>> boundary_edges;
  for (size_t i = 0; i < cycle.size(); ++i)
    boundary_edges.insert(norm_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
  for (const auto& e : edges) {
    int expect = boundary_edges.count(e) ? 1 : 2;
    if (uses[e] != expect)
      throw ValidationError(name + ": edge " + render_vec(e.first) + "-" +
                            render_vec(e.second) + " bounds " +
                            std::to_string(uses[e]) + " cells, expected " +
                            std::to_string(expect));
  }
  return fs;
}

FanSection load_triangulation(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError("cannot open triangulation file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_triangulation_text(buf.str(), path);
}

std::vector<long long> self_intersections(const std::vector<Vec2>& rays) {
  static const bool checked = [] {
    check_reference_fans();
    return true;
  }();
  (void)checked;
  return selfints_impl(rays);
}

std::vector<Vec2> interior_points(const FanSection& fs) {
  std::vector<Vec2> out;
  for (const auto& cp : fs.points)
    if (cp.kind == PointKind::Interior) out.push_back(cp.p);
  return out;
}

Star star_of(const FanSection& fs, const Vec2& center) {
  bool seen = false;
  for (const auto& cp : fs.points)
    if (cp.p == center) {
      if (cp.kind != PointKind::Interior)
        throw ValidationError("star is only defined at interior points; " +
                              render_vec(center) + " is a " +
                              to_string(cp.kind) + " point");
      seen = true;
    }
  if (!seen)
    throw ValidationError(render_vec(center) + " is not a lattice point of the section");
  std::set<Vec2> dirs;
  for (const auto& c : fs.cells) {
    bool has = c[0] == center || c[1] == center || c[2] == center;
    if (!has) continue;
    for (const Vec2& v : c)
      if (v != center) dirs.insert(v - center);
  }
  Star st;
  st.center = center;
  st.rays.assign(dirs.begin(), dirs.end());
  for (const Vec2& u : st.rays)
    if (gcd_ll(u.x, u.y) != 1)
      throw Error("internal: non-primitive star ray at " + render_vec(center));
  std::sort(st.rays.begin(), st.rays.end(), ray_less);
  st.selfints = self_intersections(st.rays);
  return st;
}

SurfaceId identify_surface(const std::vector<long long>& selfints) {
  SurfaceId id;
  id.ray_count = static_cast<int>(selfints.size());
  id.selfints = selfints;
  std::vector<long long> d = selfints;
  int count = 0;
  while (d.size() > 4) {
    size_t hit = d.size();
    for (size_t i = 0; i < d.size(); ++i)
      if (d[i] == -1) {
        hit = i;
        break;
      }
    if (hit == d.size()) {
      id.kind = SurfaceId::Kind::Unknown;
      return id;
    }
    size_t n = d.size();
    d[(hit + n - 1) % n] += 1;
    d[(hit + 1) % n] += 1;
    d.erase(d.begin() + hit);
    ++count;
  }
  if (d.size() == 3) {
    if (d[0] == 1 && d[1] == 1 && d[2] == 1) {
      id.kind = SurfaceId::Kind::P2;
      return id;
    }
    id.kind = SurfaceId::Kind::Unknown;
    return id;
  }
  long long n = 0;
  for (long long v : d) n = std::max(n, v < 0 ? -v : v);
  bool ok = false;
  if (n == 0) {
    ok = d[0] == 0 && d[1] == 0 && d[2] == 0 && d[3] == 0;
  } else {
    for (int i = 0; i < 4 && !ok; ++i)
      ok = d[i] == -n && d[(i + 1) % 4] == 0 && d[(i + 2) % 4] == n &&
           d[(i + 3) % 4] == 0;
  }
  if (!ok) {
    id.kind = SurfaceId::Kind::Unknown;
    return id;
  }
  id.n = n;
  if (count == 0) {
    id.kind = SurfaceId::Kind::F;
  } else {
    id.kind = SurfaceId::Kind::Blowup;
    id.blowups = count;
  }
  return id;
}

std::string SurfaceId::display() const {
  switch (kind) {
    case Kind::P2:
      return "P2";
    case Kind::F:
      return "F" + std::to_string(n);
    case Kind::Blowup:
      if (n <= 1) return "dP" + std::to_string(blowups + 1);
      return "Bl" + std::to_string(blowups) + "F" + std::to_string(n);
    case Kind::Unknown:
      break;
  }
  return "unknown(" + std::to_string(ray_count) + " rays)";
}

void annotate_stars(FanSection& fs) {
  fs.interior_stars.clear();
  for (const Vec2& p : interior_points(fs)) {
    Star st = star_of(fs, p);
    fs.interior_stars[p] = identify_surface(st.selfints);
  }
}

std::vector<FlopSquare> detect_flops(const FanSection& fs) {
  std::map<std::pair<Vec2, Vec2>, std::vector<size_t>> by_edge;
  for (size_t ci = 0; ci < fs.cells.size(); ++ci)
    for (int i = 0; i < 3; ++i)
      by_edge[norm_edge(fs.cells[ci][i], fs.cells[ci][(i + 1) % 3])].push_back(ci);
  std::vector<FlopSquare> out;
  for (const auto& e : fs.edges) {
    auto it = by_edge.find(e);
    if (it == by_edge.end() || it->second.size() != 2) continue;
    const Vec2& p = e.first;
    const Vec2& q = e.second;
    Vec2 w[2];
    for (int s = 0; s < 2; ++s) {
      const auto& c = fs.cells[it->second[s]];
      for (const Vec2& v : c)
        if (v != p && v != q) w[s] = v;
    }
    std::array<Vec2, 4> quad{p, w[0], q, w[1]};
    long long area = 0;
    for (int i = 0; i < 4; ++i)
      area += quad[i].x * quad[(i + 1) % 4].y - quad[(i + 1) % 4].x * quad[i].y;
    if (area < 0) std::swap(quad[1], quad[3]);
    bool convex = true;
    for (int i = 0; i < 4; ++i) {
      Vec2 a = quad[(i + 1) % 4] - quad[i];
      Vec2 b = quad[(i + 2) % 4] - quad[(i + 1) % 4];
      if (det2(a, b) <= 0) convex = false;
    }
    if (!convex) continue;
    out.push_back(FlopSquare{quad, {p, q}});
  }
  return out;
}

FanSection apply_flop(const FanSection& fs, const FlopSquare& square) {
  const Vec2& p = square.diagonal.first;
  const Vec2& q = square.diagonal.second;
  Vec2 w1, w2;
  {
    std::set<Vec2> corners(square.quad.begin(), square.quad.end());
    corners.erase(p);
    corners.erase(q);
    if (corners.size() != 2)
      throw ValidationError("flop square does not match its diagonal");
    auto it = corners.begin();
    w1 = *it;
    ++it;
    w2 = *it;
  }
  FanSection out = fs;
  out.interior_stars.clear();
  std::vector<std::array<Vec2, 3>> kept;
  int removed = 0;
  for (const auto& c : out.cells) {
    int hitp = 0, hitq = 0;
    for (const Vec2& v : c) {
      hitp += v == p;
      hitq += v == q;
    }
    if (hitp && hitq) {
      ++removed;
      continue;
    }
    kept.push_back(c);
  }
  if (removed != 2)
    throw ValidationError("diagonal " + render_vec(p) + "-" + render_vec(q) +
                          " does not bound exactly two cells");
  auto push_ccw = [&kept](Vec2 a, Vec2 b, Vec2 c) {
    if (det2(b - a, c - a) < 0) std::swap(b, c);
    kept.push_back({a, b, c});
  };
  push_ccw(w1, w2, p);
  push_ccw(w1, w2, q);
  out.cells = kept;
  out.edges.clear();
  finalize_section(out);
  return out;
}

std::vector<long long> hj_resolve(long long r, long long q) {
  if (r < 2 || q < 1 || q >= r)
    throw ValidationError("quotient type needs 0 < q < r, got r=" +
                          std::to_string(r) + " q=" + std::to_string(q));
  if (std::gcd(r, q) != 1)
    throw ValidationError(
        "quotient type (" + std::to_string(r) + "," + std::to_string(q) +
        ") is not coprime; its singular locus is a curve, so resolve it "
        "through the lattice fan tools instead");
  std::vector<long long> out;
  while (q > 0) {
    long long b = (r + q - 1) / q;  // ceil(r/q)
    out.push_back(-b);
    long long nr = q;
    q = b * q - r;
    r = nr;
  }
  for (long long v : out)
    if (v > -2) throw Error("internal: resolution chain entry above -2");
  return out;
}

namespace {

struct TripleContext {
  std::set<std::array<Vec2, 3>> cellset;
  std::map<std::pair<Vec2, Vec2>, std::vector<std::array<Vec2, 3>>> edge_cells;
  std::map<Vec2, std::set<Vec2>> adj;
  std::set<Vec2> interior;
};

TripleContext make_context(const FanSection& fs) {
  TripleContext ctx;
  for (const auto& c : fs.cells) {
    ctx.cellset.insert(sorted_triple(c[0], c[1], c[2]));
    for (int i = 0; i < 3; ++i) {
      ctx.edge_cells[norm_edge(c[i], c[(i + 1) % 3])].push_back(c);
      ctx.adj[c[i]].insert(c[(i + 1) % 3]);
      ctx.adj[c[(i + 1) % 3]].insert(c[i]);
    }
  }
  for (const auto& cp : fs.points)
    if (cp.kind == PointKind::Interior) ctx.interior.insert(cp.p);
  return ctx;
}

// D_p^2 D_r for adjacent p != r through the wall (p,r): write the far vertex
// of one side as an affine lattice combination of p, r and the far vertex of
// the other side; the p-coefficient is -D_p^2 D_r
Int wall_number(const TripleContext& ctx, const Vec2& p, const Vec2& r) {
  auto it = ctx.edge_cells.find(norm_edge(p, r));
  if (it == ctx.edge_cells.end()) return Int(0);
  if (it->second.size() != 2)
    throw Error("internal: wall " + render_vec(p) + "-" + render_vec(r) +
                " does not separate two cells");
  Vec2 w[2];
  for (int s = 0; s < 2; ++s)
    for (const Vec2& v : it->second[s])
      if (v != p && v != r) w[s] = v;
  // w2 = a*p + b*r + c*w1 with a + b + c = 1
  long long D = det2(p - w[0], r - w[0]);
  if (D != 1 && D != -1)
    throw Error("internal: wall basis is not unimodular");
  long long na = det2(w[1] - w[0], r - w[0]);
  long long nb = det2(p - w[0], w[1] - w[0]);
  long long a = na / D;
  long long b = nb / D;
  long long c = 1 - a - b;
  if (na % D || nb % D || c != -1)
    throw Error("internal: wall relation failed at " + render_vec(p) + "-" +
                render_vec(r));
  return Int(-a);
}

Int triple_value(const TripleContext& ctx, const Vec2& a, const Vec2& b,
                 const Vec2& c) {
  for (const Vec2& v : {a, b, c})
    if (!ctx.interior.count(v))
      throw ValidationError("compact divisor triple needs interior points; " +
                            render_vec(v) + " is not one");
  bool ab = a == b, bc = b == c, ac = a == c;
  if (ab && bc) {
    Int total(0);
    auto it = ctx.adj.find(a);
    if (it == ctx.adj.end())
      throw Error("internal: interior point with no neighbors");
    for (const Vec2& n : it->second) total += wall_number(ctx, a, n);
    return -total;
  }
  if (!ab && !bc && !ac)
    return ctx.cellset.count(sorted_triple(a, b, c)) ? Int(1) : Int(0);
  // exactly two equal: reduce to the wall form
  Vec2 twice = ab ? a : (bc ? b : a);
  Vec2 once = ab ? c : (bc ? a : b);
  return wall_number(ctx, twice, once);
}

}  // namespace

Int toric_triple(const FanSection& fs, const Vec2& a, const Vec2& b,
                 const Vec2& c) {
  TripleContext ctx = make_context(fs);
  return triple_value(ctx, a, b, c);
}

std::map<std::array<Vec2, 3>, Int> toric_triples(const FanSection& fs) {
  TripleContext ctx = make_context(fs);
  std::vector<Vec2> pts(ctx.interior.begin(), ctx.interior.end());
  std::map<std::array<Vec2, 3>, Int> out;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i; j < pts.size(); ++j)
      for (size_t k = j; k < pts.size(); ++k)
        out[{pts[i], pts[j], pts[k]}] =
            triple_value(ctx, pts[i], pts[j], pts[k]);
  return out;
}

}  // namespace shrinkcy
