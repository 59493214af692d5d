#pragma once

#include <string>

#include "shrinkcy/snc.hpp"
#include "shrinkcy/toric.hpp"

namespace shrinkcy {

// Turns the star of an interior lattice point into a surface model: one
// basis element per ray, the intersection numbers of the smooth complete
// toric surface the star spans, and the rays themselves as the curve
// catalog. The rays generate the class lattice (with two relations), which
// is fine for pairing-based computations; nothing here inverts the form.
SurfaceModel star_surface_model(const Star& st, const std::string& basis_id);

// Assembles the compact surfaces of a triangulated section into a glued
// surface: one component per interior lattice point, in coordinate order,
// glued along each edge that joins two interior points. Throws
// ValidationError when some cell has three interior corners — the three
// surfaces would then share a point, which pairwise gluing cannot express —
// or when the section has no interior points at all.
SncSurface snc_from_fan(const FanSection& fs, const std::string& name);

}  // namespace shrinkcy
