#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shrinkcy/qsector.hpp"
#include "shrinkcy/snc.hpp"

namespace shrinkcy {

// One linear consequence of a catalog curve C on component `host`:
// C.J = sum_k dot[k] * a_k must be <= 0 for an admissible J = sum a_k S_k.
struct LinForm {
  std::size_t host;
  std::string curve_label;
  std::string surface_name;
  CurveRole role;
  std::vector<Int> dot;  // dot[k] = C.S_k
};

// All constraints, in component order then catalog order.
std::vector<LinForm> condition_i_inequalities(const SncSurface& s);

enum class ShrinkStatus { PreShrinkable, NotPreShrinkable, Inconclusive };

std::string to_string(ShrinkStatus s);

// Feasible ray parameters t = a2/a1 after the linear constraints; lo may be
// infinite when only the vertical ray survives. Empty when lo > hi.
struct RayInterval {
  ExtRat lo;
  ExtRat hi;
};

struct ShrinkReport {
  ShrinkStatus status = ShrinkStatus::Inconclusive;
  std::optional<std::vector<Int>> certificate;  // minimal (a1.., an) if found
  std::optional<ExtRat> witness_ray;            // rank-2 ray that succeeded
  std::vector<std::string> narrative;           // human-readable reasoning
  std::vector<CatalogKind> catalogs;            // provenance per component
  std::optional<RayInterval> ray_interval;      // rank-2 only
  bool rank_iii_degenerate = false;  // rays exist, all squares vanish
  bool downgraded = false;  // negative verdict weakened: catalog is advisory
};

// Full exact decision for two components: intersect the linear constraints
// into a ray interval, then analyze both quadratic squares over it. Negative
// verdicts are downgraded to Inconclusive when any catalog holds mere
// numerical candidates, whose constraints could be spurious. Throws unless
// the surface has exactly two components and passes the anticanonical check.
ShrinkReport decide_rank2(const SncSurface& s);

// Enumerates coprime coefficient tuples with entries in [0, a_max] ordered by
// (sum, lexicographic), returning the first that verifies; exhausting the
// range yields Inconclusive (this search can never prove a negative).
ShrinkReport search_rank_n(const SncSurface& s, const Int& a_max);

struct CertificateCheck {
  bool cy_ok = false;
  bool cond_i = false;    // every catalog curve has C.J <= 0
  bool cond_ii = false;   // J^2 . S_i >= 0 for all i
  bool cond_iii = false;  // J^2 . S_i > 0 for some i
  bool ok = false;
  std::vector<std::string> violations;
};

// Total re-check of a proposed certificate against the definition; never
// throws on mathematical failure, only on malformed input sizes.
CertificateCheck certificate_verify(const SncSurface& s,
                                    const std::vector<Int>& a);

}  // namespace shrinkcy
