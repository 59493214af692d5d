#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "shrinkcy/surface.hpp"

namespace shrinkcy {

// Input form of one double curve: component indices (0-based) plus the curve's
// class written on each side.
struct GluingSpec {
  std::size_t i, j;
  DivisorClass class_in_i, class_in_j;
};

// A validated double curve; genus comes out of the adjunction formula and is
// checked to agree on both sides.
struct Gluing {
  std::size_t i, j;
  DivisorClass class_in_i, class_in_j;
  Int genus;
};

// One anticanonical-matching check: along each double curve the two
// self-intersections must add up to 2g-2.
struct CyCheckEntry {
  std::size_t i, j;
  Int sq_i, sq_j;
  Int genus;
  bool ok;
};

struct CyResult {
  bool ok = true;
  std::vector<CyCheckEntry> checks;
  std::string detail;  // human summary of the first failure, if any
};

// A simple-normal-crossing surface assembled from smooth components glued
// pairwise along double curves. No triple points: three distinct components
// never meet.
class SncSurface {
 public:
  SncSurface(std::vector<SurfaceModel> components, std::vector<GluingSpec> glue);

  const std::vector<SurfaceModel>& components() const { return components_; }
  const std::vector<Gluing>& gluings() const { return gluings_; }
  const CyResult& cy() const { return cy_; }
  std::size_t size() const { return components_.size(); }

  // The double curve between components i and j, if any.
  const Gluing* gluing_between(std::size_t i, std::size_t j) const;

  // "component 2 (F3)" — 1-based, for messages.
  std::string describe_component(std::size_t i) const;

 private:
  std::vector<SurfaceModel> components_;
  std::vector<Gluing> gluings_;
  CyResult cy_;
};

// Re-runs the anticanonical matching along every double curve.
CyResult cy_check(const SncSurface& s);

// C.S_j for a curve C lying on component i:
//   j == i : K_{S_i}.C
//   glued  : (C . D_ij) computed on S_i
//   else   : 0
Int curve_dot_component(const SncSurface& s, std::size_t i,
                        const DivisorClass& c, std::size_t j);

// S_p . S_q . S_r in the ambient threefold. Requires the anticanonical
// matching to hold (throws otherwise); three distinct components give 0.
Int triple_intersection(const SncSurface& s, std::size_t p, std::size_t q,
                        std::size_t r);

// (sum a_p S_p)^2 . S_i ; coefficients must be >= 0 and sized to the surface.
Int j_squared_component(const SncSurface& s, const std::vector<Int>& a,
                        std::size_t i);

// Reads the textual description:
//   component 1 = F3        (indices 1-based, consecutive from 1)
//   glue 1:e ~ 2:l          ('=' also accepted; '#' starts a comment)
SncSurface parse_snc(const std::string& text);

}  // namespace shrinkcy
