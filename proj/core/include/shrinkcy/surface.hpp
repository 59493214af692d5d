#pragma once

#include <string>
#include <vector>

#include "shrinkcy/divisor.hpp"

namespace shrinkcy {

// How strongly a catalog entry is believed to be an actual irreducible curve.
//   MoriGenerator: a genuine extremal curve class of the surface.
//   NumericalCandidate: a class that merely satisfies the numerical tests
//     (square / canonical-degree); it may or may not be effective, so
//     conclusions drawn from it are advisory.
enum class CurveRole { MoriGenerator, NumericalCandidate };

struct NamedCurve {
  std::string label;  // canonical rendering of cls
  DivisorClass cls;
  CurveRole role = CurveRole::MoriGenerator;
};

// Provenance of a whole catalog; decision routines use this to know whether
// an infeasibility verdict is trustworthy.
enum class CatalogKind { Mori, Numerical, ToricStar, User };

std::string to_string(CatalogKind k);

// A rational surface presented by its divisor-class lattice: a named basis,
// the intersection form, the canonical class, and a catalog of test curves.
struct SurfaceModel {
  std::string name;      // display name: "P2", "F3", "dP2", "Bl6F4", ...
  std::string basis_id;  // lattice identity; equals name for builtins
  GramForm gram;
  DivisorClass canonical;
  std::vector<NamedCurve> catalog;
  CatalogKind catalog_kind = CatalogKind::Mori;

  std::size_t rank() const { return gram.labels.size(); }
};

// Builds one of the stock surfaces. Accepted names:
//   "P2"              the projective plane
//   "F0".."F12"       Hirzebruch surfaces (F0 = P1 x P1)
//   "dP1".."dP8"      del Pezzo: P2 blown up in 1..8 general points
//   "Bl{k}F{n}"       F_n blown up in k general points, 1<=k<=10, 0<=n<=8
// Throws ValidationError for anything else.
SurfaceModel builtin_surface(const std::string& name);

// Parses "2l-x1-x2", "e+3f", "f1+2f2", ... against the surface's basis.
// Terms are an optional unsigned multiplicity followed by a basis label,
// joined by '+'/'-'; an optional leading '-' and ASCII spaces are allowed.
// Errors carry the 1-based column of the offending character.
DivisorClass parse_curve(const SurfaceModel& s, const std::string& text);

// Canonical text form: basis order, zero terms skipped, unit multiplicities
// omitted; the zero class renders as "0". parse_curve inverts this exactly.
std::string render_curve(const SurfaceModel& s, const DivisorClass& c);

Int curve_square(const SurfaceModel& s, const DivisorClass& c);
Int k_dot(const SurfaceModel& s, const DivisorClass& c);
Int k_squared(const SurfaceModel& s);

// (C^2 + K.C)/2 + 1, exact.
Rational adjunction_genus(const SurfaceModel& s, const DivisorClass& c);

// All classes with coefficients in [-bound, bound] satisfying one of
//   C^2 = -1 and K.C = -1        ("(-1)-classes")
//   C^2 = -2 and K.C =  0        ("(-2)-classes")
//   C^2 =  0 and K.C = -2        ("fiber classes")
// in that group order, each group sorted lexicographically by coefficient
// vector; if the basis contains a label "e" whose basis vector is not
// already listed, it is appended last. For bases with point-blowup labels
// x1..xk the scan splits off the x-block (diagonal -1, canonical
// coefficient +1) and solves for it directly, so large k stays cheap.
std::vector<DivisorClass> candidate_negative_classes(const SurfaceModel& s,
                                                     const Int& bound);

}  // namespace shrinkcy
