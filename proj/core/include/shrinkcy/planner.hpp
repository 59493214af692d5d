#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shrinkcy/snc.hpp"

namespace shrinkcy {

// One minimal ruled model that can sit opposite a rational double curve of a
// given self-intersection: the anticanonical matching forces the partner
// curve's square, and these are the Hirzebruch surfaces carrying a rational
// curve class of that square.
struct ExceptionalCandidate {
  std::string host;   // "F0".."F12"
  std::string curve;  // canonical rendering of cls on that host
  DivisorClass cls;
  bool strict = false;    // one of the shapes the constructions cover
                          // directly: (F_n, e), (F0, f1|f2), (F1, e+f)
  bool observed = false;  // shape recorded as the geometry that actually
                          // appears for this double-curve square
  bool realized = false;  // equals the partner side of the pair under study
};

// All minimal ruled partner models for a rational double curve whose square
// on the near side is c_square. Throws ValidationError when genus is
// nonzero: only rational curves admit these partners. Lists can be empty
// (square out of the stock range) or carry several models; a model is
// unique exactly when the forced partner square is at most 1.
std::vector<ExceptionalCandidate> exceptional_candidates(const Int& c_square,
                                                         const Int& genus);

enum class RecipeKind { RootStack, ContractSmooth, ToricModel, Unknown };

std::string to_string(RecipeKind k);

// One way to realize the glued pair inside a threefold neighborhood.
struct EmbeddingRecipe {
  RecipeKind kind = RecipeKind::Unknown;
  std::string summary;  // one-line human description

  // RootStack: square-root stack along `curve` on component `host`, then
  // the induced ruled threefold; `candidates` are the possible partner
  // models, `realized` indexes the one equal to the other component.
  std::size_t host = 0;
  std::string host_name;
  std::string curve;
  std::vector<ExceptionalCandidate> candidates;
  int realized = -1;
  bool ambiguous = false;

  // ContractSmooth: collapse `contract_curve` on the host to a quotient
  // point of type `surface_point`, then smooth the cone `threefold_point`.
  std::string contract_curve;
  std::string surface_point;
  std::string threefold_point;

  // ToricModel: weighted projective section or an explicit triangulation.
  std::vector<long long> weights;
  std::string section_file;

  std::vector<std::string> notes;  // "ambiguous", "observed", ...
};

// Pure planning for a two-component pair passing the anticanonical check
// (throws ValidationError otherwise, or when the components are not glued).
// Returns recipes ordered: root-stack ones (component 0 host first), then
// contract-and-smooth, then toric; a single Unknown entry when nothing
// applies. Emission of a root-stack recipe demands that the partner side
// match a candidate that is strict or observed; a bare numerical match is
// not enough to claim a construction.
std::vector<EmbeddingRecipe> plan_embeddings(const SncSurface& s);

enum class QuotientKind { TransverseA, IsolatedPoint };

// The threefold singularity sitting over a surface cyclic quotient point
// 1/r(1,q): the A_{r-1} chain sweeps a curve exactly when q+1 == r, and
// the point is isolated otherwise.
struct QuotientPoint {
  long long r = 0;
  long long q = 0;
  QuotientKind kind = QuotientKind::IsolatedPoint;
  long long chain_length = 0;  // r-1 in the transverse case
  std::string display() const;  // "1/r(1,q)"
};

QuotientPoint classify_quotient(long long r, long long q);

// Canonical class of the root construction: K plus sum (1 - 1/m_i) D_i,
// exact rational coefficients on the surface's basis. Every root order must
// be at least 2 and every divisor must live on the surface's basis.
std::vector<Rational> orbifold_canonical(
    const SurfaceModel& s,
    const std::vector<std::pair<DivisorClass, long long>>& ramification);

}  // namespace shrinkcy
