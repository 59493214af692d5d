#pragma once

#include <optional>
#include <string>

#include "shrinkcy/numeric.hpp"

namespace shrinkcy {

// A rational number or +infinity. Infinity stands for the vertical ray
// (a1, a2) = (0, 1) when rays are parametrized by t = a2/a1.
struct ExtRat {
  bool infinite = false;
  Rational value;  // meaningful iff !infinite

  static ExtRat inf() { return ExtRat{true, Rational(0)}; }
  static ExtRat of(const Rational& v) { return ExtRat{false, v}; }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.value == b.value;
  }
};

// a <= b where infinity is the maximum.
bool ext_le(const ExtRat& a, const ExtRat& b);

std::string render(const ExtRat& v);  // "3/2" or "inf"

// q(t) = c0 + c1 t + c2 t^2, exact.
struct QuadPoly {
  Int c0, c1, c2;
};

Rational eval(const QuadPoly& q, const Rational& t);

enum class SectorOutcome {
  Witness,          // some rational t in range has q1,q2 >= 0 and q1+q2 > 0
  InfinityWitness,  // only the vertical ray works (t^2 coefficients pass)
  Degenerate,       // feasible rays exist, but every one has q1 = q2 = 0
  Infeasible        // no ray in range has q1 >= 0 and q2 >= 0
};

struct SectorResult {
  SectorOutcome outcome;
  std::optional<Rational> witness;  // set for Witness
  std::string note;
};

// Decides exactly whether some t in [lo, hi] satisfies q1(t) >= 0,
// q2(t) >= 0, q1(t) + q2(t) > 0, where hi may be +infinity. Only rational t
// matter (rays of integer vectors are rational); at the infinite end the
// t^2 coefficients are the exact values on the ray (0,1). The search is
// complete: candidates cover every sign cell cut out by the roots of q1*q2,
// so "no witness" is a proof, not a sampling failure.
SectorResult analyze_sector(const QuadPoly& q1, const QuadPoly& q2,
                            const Rational& lo, const ExtRat& hi);

}  // namespace shrinkcy
