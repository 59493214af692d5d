#include "shrinkcy/qsector.hpp"

#include <algorithm>
#include <vector>

#include "shrinkcy/error.hpp"

namespace shrinkcy {

bool ext_le(const ExtRat& a, const ExtRat& b) {
  if (b.infinite) return true;
  if (a.infinite) return false;
  return a.value <= b.value;
}

std::string render(const ExtRat& v) {
  return v.infinite ? "inf" : render_rational(v.value);
}

Rational eval(const QuadPoly& q, const Rational& t) {
  return Rational(q.c0) + Rational(q.c1) * t + Rational(q.c2) * t * t;
}

namespace {

int sgn(const Rational& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

// d = square * square * free_part with free_part squarefree.
Int squarefree_part(Int d, Int& square) {
  square = 1;
  Int p = 2;
  while (p * p <= d) {
    while (d % (p * p) == 0) {
      d /= p * p;
      square *= p;
    }
    ++p;
  }
  return d;
}

// sign of A + B*sqrt(d) for rational A,B and squarefree d > 1.
int sign_radical(const Rational& A, const Rational& B, const Int& d) {
  if (B == 0) return sgn(A);
  if (B > 0) {
    if (A >= 0) return 1;
    Rational lhs = B * B * Rational(d);
    Rational rhs = A * A;
    return lhs > rhs ? 1 : (lhs == rhs ? 0 : -1);
  }
  if (A <= 0) return -1;
  Rational lhs = A * A;
  Rational rhs = B * B * Rational(d);
  return lhs > rhs ? 1 : (lhs == rhs ? 0 : -1);
}

// Exact real number of the form base + coef*sqrt(d0); coef == 0 means the
// rational number base (then d0 is 1). d0 is squarefree and > 1 otherwise,
// so the value is irrational exactly when coef != 0.
struct AlgValue {
  Rational base;
  Rational coef;
  Int d0;

  static AlgValue of(const Rational& r) { return AlgValue{r, Rational(0), Int(1)}; }
  bool is_rational() const { return coef == 0; }
};

// sign of (u - v), exact in all cases.
int compare(const AlgValue& u, const AlgValue& v) {
  Rational A = u.base - v.base;
  if (u.is_rational() && v.is_rational()) return sgn(A);
  if (v.is_rational()) return sign_radical(A, u.coef, u.d0);
  if (u.is_rational()) return -sign_radical(-A, v.coef, v.d0);
  if (u.d0 == v.d0) {
    Rational B = u.coef - v.coef;
    if (B == 0) return sgn(A);
    return sign_radical(A, B, u.d0);
  }
  // sign of A + B sqrt(d1) + C sqrt(d2), B,C != 0, d1 != d2 squarefree:
  // compare X = A + B sqrt(d1) against -Y with Y = C sqrt(d2).
  // value = A + B sqrt(d1) + C sqrt(d2) with C = -v.coef
  const Rational& B = u.coef;
  Rational C = -v.coef;
  int sx = sign_radical(A, B, u.d0);
  int sy = sgn(C);
  if (sx == 0) return sy;
  if (sy == 0) return sx;
  if (sx == sy) return sx;
  // opposite signs: |X| vs |C sqrt(d2)| via squares
  // X^2 - C^2 d2 = (A^2 + B^2 d1 - C^2 d2) + 2AB sqrt(d1)
  int s2 = sign_radical(A * A + B * B * Rational(u.d0) - C * C * Rational(v.d0),
                        2 * A * B, u.d0);
  if (s2 == 0) return 0;
  return s2 == 1 ? sx : sy;
}

// Strict rational bounds around sqrt(d) at dyadic precision k.
void sqrt_bounds(const Int& d, unsigned k, Rational& lo, Rational& hi) {
  Int scale = Int(1) << k;
  Int s = isqrt_floor(d * scale * scale);
  lo = rat(s, scale);        // <= sqrt(d), equality impossible (d nonsquare)
  hi = rat(Int(s + 1), scale);    // > sqrt(d)
}

Rational lower_bound(const AlgValue& v, unsigned k) {
  if (v.is_rational()) return v.base;
  Rational lo, hi;
  sqrt_bounds(v.d0, k, lo, hi);
  return v.coef > 0 ? v.base + v.coef * lo : v.base + v.coef * hi;
}

Rational upper_bound(const AlgValue& v, unsigned k) {
  if (v.is_rational()) return v.base;
  Rational lo, hi;
  sqrt_bounds(v.d0, k, lo, hi);
  return v.coef > 0 ? v.base + v.coef * hi : v.base + v.coef * lo;
}

// A rational strictly between u and v; requires u < v exactly.
Rational rational_between(const AlgValue& u, const AlgValue& v) {
  if (u.is_rational() && v.is_rational()) return (u.base + v.base) / 2;
  for (unsigned k = 8;; k += 8) {
    Rational a = upper_bound(u, k);
    Rational b = lower_bound(v, k);
    if (a < b) return (a + b) / 2;
    if (k > 512) throw Error("failed to separate algebraic numbers");
  }
}

struct RootSet {
  bool identically_zero = false;
  std::vector<AlgValue> roots;  // 0, 1, or 2 entries
};

RootSet roots_of(const QuadPoly& q) {
  RootSet r;
  if (q.c2 == 0) {
    if (q.c1 == 0) {
      r.identically_zero = (q.c0 == 0);
      return r;
    }
    r.roots.push_back(AlgValue::of(rat(Int(-q.c0), q.c1)));
    return r;
  }
  Int disc = q.c1 * q.c1 - 4 * q.c0 * q.c2;
  if (disc < 0) return r;
  Rational vertex = rat(Int(-q.c1), Int(2 * q.c2));
  if (disc == 0) {
    r.roots.push_back(AlgValue::of(vertex));
    return r;
  }
  Int s = isqrt_floor(disc);
  if (s * s == disc) {
    Rational r1 = rat(Int(-q.c1 - s), Int(2 * q.c2));
    Rational r2 = rat(Int(-q.c1 + s), Int(2 * q.c2));
    if (r2 < r1) std::swap(r1, r2);
    r.roots.push_back(AlgValue::of(r1));
    r.roots.push_back(AlgValue::of(r2));
    return r;
  }
  Int square;
  Int d0 = squarefree_part(disc, square);
  Rational radical_coef = rat(square, Int(2 * q.c2));
  AlgValue plus{vertex, radical_coef, d0};
  AlgValue minus{vertex, -radical_coef, d0};
  if (compare(minus, plus) < 0) {
    r.roots.push_back(minus);
    r.roots.push_back(plus);
  } else {
    r.roots.push_back(plus);
    r.roots.push_back(minus);
  }
  return r;
}

}  // namespace

SectorResult analyze_sector(const QuadPoly& q1, const QuadPoly& q2,
                            const Rational& lo, const ExtRat& hi) {
  if (!hi.infinite && hi.value < lo)
    throw ValidationError("sector range is empty");

  auto in_closed_range = [&](const Rational& t) {
    if (t < lo) return false;
    if (!hi.infinite && t > hi.value) return false;
    return true;
  };
  auto satisfies = [&](const Rational& t) {
    Rational v1 = eval(q1, t), v2 = eval(q2, t);
    return v1 >= 0 && v2 >= 0 && v1 + v2 > 0;
  };

  RootSet roots1 = roots_of(q1);
  RootSet roots2 = roots_of(q2);

  std::vector<Rational> candidates;
  candidates.push_back(lo);
  if (!hi.infinite) {
    candidates.push_back(hi.value);
    candidates.push_back((lo + hi.value) / 2);
  }
  auto add_rational_roots = [&](const RootSet& rs) {
    for (const auto& r : rs.roots)
      if (r.is_rational() && in_closed_range(r.base)) candidates.push_back(r.base);
  };
  add_rational_roots(roots1);
  add_rational_roots(roots2);
  for (const QuadPoly* q : {&q1, &q2}) {
    if (q->c2 != 0) {
      Rational v = rat(Int(-q->c1), Int(2 * q->c2));
      if (in_closed_range(v)) candidates.push_back(v);
    }
  }

  // Breakpoints: range ends plus every root strictly inside; one rational
  // sample inside each consecutive gap covers every sign cell of q1*q2.
  std::vector<AlgValue> breaks;
  breaks.push_back(AlgValue::of(lo));
  AlgValue hi_val = AlgValue::of(lo);  // placeholder
  if (!hi.infinite) hi_val = AlgValue::of(hi.value);
  auto add_break = [&](const AlgValue& r) {
    if (compare(r, breaks.front()) <= 0) return;  // breaks.front() == lo
    if (!hi.infinite && compare(r, hi_val) >= 0) return;
    breaks.push_back(r);
  };
  for (const auto& r : roots1.roots) add_break(r);
  for (const auto& r : roots2.roots) add_break(r);
  std::sort(breaks.begin(), breaks.end(),
            [](const AlgValue& a, const AlgValue& b) { return compare(a, b) < 0; });
  breaks.erase(std::unique(breaks.begin(), breaks.end(),
                           [](const AlgValue& a, const AlgValue& b) {
                             return compare(a, b) == 0;
                           }),
               breaks.end());
  if (!hi.infinite && compare(hi_val, breaks.back()) > 0)
    breaks.push_back(hi_val);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    candidates.push_back(rational_between(breaks[i], breaks[i + 1]));
  if (hi.infinite) {
    // one sample beyond every root
    Rational beyond = upper_bound(breaks.back(), 8) + 1;
    if (beyond < lo) beyond = lo + 1;
    candidates.push_back(beyond);
  }

  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  for (const Rational& t : candidates) {
    if (!in_closed_range(t)) continue;
    if (satisfies(t))
      return SectorResult{SectorOutcome::Witness, t,
                          "ray t=" + render_rational(t) + " meets all conditions"};
  }

  if (hi.infinite) {
    Int l1 = q1.c2, l2 = q2.c2;
    if (l1 >= 0 && l2 >= 0 && l1 + l2 > 0)
      return SectorResult{SectorOutcome::InfinityWitness, std::nullopt,
                          "only the vertical ray (0,1) meets all conditions"};
  }

  // No witness: any feasible rational ray must have q1 = q2 = 0 on it.
  bool degenerate = false;
  if (roots1.identically_zero && roots2.identically_zero) degenerate = true;
  if (!degenerate && roots1.identically_zero) {
    for (const auto& r : roots2.roots)
      if (r.is_rational() && in_closed_range(r.base)) degenerate = true;
  }
  if (!degenerate && roots2.identically_zero) {
    for (const auto& r : roots1.roots)
      if (r.is_rational() && in_closed_range(r.base)) degenerate = true;
  }
  if (!degenerate) {
    for (const auto& r : roots1.roots)
      if (r.is_rational() && in_closed_range(r.base) && eval(q2, r.base) == 0)
        degenerate = true;
  }
  if (!degenerate && hi.infinite && q1.c2 == 0 && q2.c2 == 0) {
    // the vertical ray itself is feasible but totally degenerate
    degenerate = true;
  }
  if (degenerate)
    return SectorResult{SectorOutcome::Degenerate, std::nullopt,
                        "rays exist but every one is numerically trivial "
                        "(both squares vanish)"};
  return SectorResult{SectorOutcome::Infeasible, std::nullopt,
                      "no admissible ray keeps both squares non-negative"};
}

}  // namespace shrinkcy
