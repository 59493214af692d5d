#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shrinkcy/numeric.hpp"

namespace shrinkcy {

// Height-1 sections of toric CY3 fans: everything here is exact lattice
// geometry in Z^2. Coordinates stay in machine integers (inputs are tiny);
// only derived intersection numbers are returned as big ints.

struct Vec2 {
  long long x = 0;
  long long y = 0;
  friend bool operator==(const Vec2& a, const Vec2& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
  friend bool operator<(const Vec2& a, const Vec2& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
  friend Vec2 operator+(const Vec2& a, const Vec2& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(long long s, const Vec2& a) { return {s * a.x, s * a.y}; }
};

inline long long det2(const Vec2& a, const Vec2& b) {
  return a.x * b.y - a.y * b.x;
}

std::string render_vec(const Vec2& v);  // "(x,y)"

// Integer 2x2 lattice map, row-major.
struct Mat2 {
  long long m[2][2] = {{1, 0}, {0, 1}};
  Vec2 apply(const Vec2& v) const {
    return {m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y};
  }
  long long det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
};

// A lattice triangle with a positive integer weight at each vertex such that
// the weighted vertex sum is the origin (which therefore lies strictly
// inside). Vertices may be non-primitive; that extra divisibility is part of
// the data and is carried verbatim.
struct StackyTriangle {
  std::array<Vec2, 3> vertices;
  std::array<long long, 3> weights;
};

// Build the triangle for weights (a,b,c), in the normal form documented in
// the README: the highest-weight vertex points along (0,1), the first of the
// remaining vertices has x > 0 and y reduced into [0, x).
StackyTriangle weights_to_triangle(long long a, long long b, long long c);

// Same triangle, entered as the order-n cyclic quotient with weights
// (a,b,c), a+b+c = n.
StackyTriangle quotient_to_triangle(long long n, long long a, long long b,
                                    long long c);

// Recover the weights from three vertices (Cramer); rejects collinear
// triples, triangles without the origin strictly inside, and weight triples
// sharing a common factor (a gerbe, not a surface quotient).
StackyTriangle triangle_from_vertices(const Vec2& v0, const Vec2& v1,
                                      const Vec2& v2);

// Reduce to the documented normal form (weights fixed, vertices moved by a
// lattice automorphism).
StackyTriangle normal_form(const StackyTriangle& t);

// A lattice map sending lhs's vertices onto rhs's, respecting weights up to
// the vertex permutation it chooses; empty when the triangles are
// inequivalent.
struct TriangleMatch {
  Mat2 map;
  std::array<int, 3> permutation;  // image index of each lhs vertex
};
std::optional<TriangleMatch> triangle_equivalence(const StackyTriangle& lhs,
                                                  const StackyTriangle& rhs);

enum class PointKind { Vertex, Boundary, Interior };
std::string to_string(PointKind k);

struct ClassifiedPoint {
  Vec2 p;
  PointKind kind;
};

// All lattice points of the closed triangle, lex-sorted and classified.
std::vector<ClassifiedPoint> lattice_points(const StackyTriangle& t);

// Identification of the smooth complete surface attached to an interior
// star, by its self-intersection cycle.
struct SurfaceId {
  enum class Kind { P2, F, Blowup, Unknown };
  Kind kind = Kind::Unknown;
  long long n = 0;     // F(n) index (kind F), or the base F(n) of a Blowup
  int blowups = 0;     // number of blow-downs performed to reach the base
  int ray_count = 0;
  std::vector<long long> selfints;  // original cyclic sequence
  std::string display() const;      // "P2", "F3", "dP2", "Bl3F2"
};

// A full unimodular triangulation of a convex lattice polygon, using every
// lattice point.
struct FanSection {
  std::vector<Vec2> polygon;                // corner cycle, counterclockwise
  std::vector<ClassifiedPoint> points;      // all lattice points, lex order
  std::vector<std::array<Vec2, 3>> cells;   // unimodular triangles (ccw)
  std::vector<std::pair<Vec2, Vec2>> edges; // unique, lex-normalized, sorted
  std::map<Vec2, SurfaceId> interior_stars; // filled by annotate_stars
};

// Deterministic default triangulation: fan out the boundary cycle from its
// lex-smallest point, then insert interior points in lex order, splitting
// the cell (or the pair of cells along an edge) each one lands in.
FanSection triangulate(const StackyTriangle& t);
FanSection triangulate_polygon(const std::vector<Vec2>& corners);

// Explicit triangulations from "edge (x1,y1)-(x2,y2)" files; see README for
// the format. The polygon line is optional when the hull is implied.
FanSection load_triangulation_text(const std::string& text,
                                   const std::string& name);
FanSection load_triangulation(const std::string& path);

// Self-intersections d_i of the cyclically ordered rays of a smooth
// complete fan, from u_{i-1} + u_{i+1} = -d_i u_i. Rays must be given
// counterclockwise with every adjacent pair a lattice basis.
std::vector<long long> self_intersections(const std::vector<Vec2>& rays);

struct Star {
  Vec2 center;
  std::vector<Vec2> rays;             // primitive, counterclockwise
  std::vector<long long> selfints;
};
Star star_of(const FanSection& fs, const Vec2& center);
std::vector<Vec2> interior_points(const FanSection& fs);

SurfaceId identify_surface(const std::vector<long long>& selfints);

// Fill fs.interior_stars for every interior point.
void annotate_stars(FanSection& fs);

// Interior edges whose two cells merge into a strictly convex quadrilateral;
// exchanging the diagonal of such a square is the elementary move between
// triangulations.
struct FlopSquare {
  std::array<Vec2, 4> quad;          // cycle p, w1, q, w2
  std::pair<Vec2, Vec2> diagonal;    // the shared edge (p, q)
};
std::vector<FlopSquare> detect_flops(const FanSection& fs);
FanSection apply_flop(const FanSection& fs, const FlopSquare& square);

// Exceptional chain (-b_1, ..., -b_k) of the minimal resolution of the
// surface quotient singularity of type (1/r)(1,q), all entries <= -2.
std::vector<long long> hj_resolve(long long r, long long q);

// Triple intersection numbers of the compact toric divisors (one per
// interior point) of the CY3 fan over the section. Keys are sorted point
// triples.
std::map<std::array<Vec2, 3>, Int> toric_triples(const FanSection& fs);
Int toric_triple(const FanSection& fs, const Vec2& a, const Vec2& b,
                 const Vec2& c);

}  // namespace shrinkcy
