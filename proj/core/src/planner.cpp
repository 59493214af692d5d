#include "shrinkcy/planner.hpp"

#include <map>
#include <numeric>

#include "shrinkcy/error.hpp"

namespace shrinkcy {

namespace {

// Which Hirzebruch model is seen in the actual geometry when several share
// the forced partner square, keyed by the near-side curve square.
const std::map<long long, std::string>& observed_models() {
  static const std::map<long long, std::string> reg{{-5, "F3"}, {-4, "F2"}};
  return reg;
}

ExceptionalCandidate make_candidate(const std::string& host,
                                    const std::string& curve, bool strict) {
  ExceptionalCandidate c;
  c.host = host;
  SurfaceModel m = builtin_surface(host);
  c.cls = parse_curve(m, curve);
  c.curve = render_curve(m, c.cls);
  c.strict = strict;
  return c;
}

}  // namespace

std::vector<ExceptionalCandidate> exceptional_candidates(const Int& c_square,
                                                         const Int& genus) {
  if (genus != 0)
    throw ValidationError(
        "partner models exist only for rational double curves; genus " +
        render_int(genus) + " was given");
  std::vector<ExceptionalCandidate> out;
  const Int s = Int(-2) - c_square;
  if (s < Int(-12) || s > Int(1000)) return out;  // outside the stock range
  const long long sv = to_longlong(s);
  if (sv <= 0) {
    const long long n = -sv;
    if (n == 0)
      out.push_back(make_candidate("F0", "f1", true));
    else
      out.push_back(make_candidate("F" + std::to_string(n), "e", true));
  } else if (sv == 1) {
    out.push_back(make_candidate("F1", "e+f", true));
  } else {
    for (long long m = sv % 2; m <= sv && m <= 12; m += 2) {
      const long long k = (sv + m) / 2;
      if (m == 0)
        out.push_back(make_candidate(
            "F0", k == 1 ? "f1+f2" : "f1+" + std::to_string(k) + "f2", false));
      else
        out.push_back(make_candidate(
            "F" + std::to_string(m),
            k == 1 ? "e+f" : "e+" + std::to_string(k) + "f", false));
    }
  }
  if (c_square >= Int(-30) && c_square <= Int(30)) {
    auto it = observed_models().find(to_longlong(c_square));
    if (it != observed_models().end())
      for (auto& c : out)
        if (c.host == it->second) c.observed = true;
  }
  return out;
}

std::string to_string(RecipeKind k) {
  switch (k) {
    case RecipeKind::RootStack: return "root-stack";
    case RecipeKind::ContractSmooth: return "contract-smooth";
    case RecipeKind::ToricModel: return "toric";
    case RecipeKind::Unknown: return "unknown";
  }
  return "unknown";
}

std::vector<EmbeddingRecipe> plan_embeddings(const SncSurface& s) {
  if (s.size() != 2)
    throw ValidationError("embedding plans need exactly two components; got " +
                          std::to_string(s.size()));
  if (!s.cy().ok)
    throw ValidationError("anticanonical matching fails: " + s.cy().detail);
  const Gluing* g = s.gluing_between(0, 1);
  if (!g)
    throw ValidationError("the two components are not glued along a curve");

  auto class_on = [g](std::size_t side) -> const DivisorClass& {
    return g->i == side ? g->class_in_i : g->class_in_j;
  };

  std::vector<EmbeddingRecipe> out;

  for (std::size_t a = 0; a < 2; ++a) {
    const std::size_t b = 1 - a;
    if (g->genus != 0) continue;
    const SurfaceModel& host = s.components()[a];
    const SurfaceModel& partner = s.components()[b];
    const DivisorClass& c_a = class_on(a);
    const DivisorClass& c_b = class_on(b);
    std::vector<ExceptionalCandidate> cands =
        exceptional_candidates(curve_square(host, c_a), g->genus);
    int match = -1;
    for (std::size_t k = 0; k < cands.size(); ++k)
      if (cands[k].host == partner.name &&
          cands[k].cls.basis_id == partner.basis_id &&
          cands[k].cls.coeffs == c_b.coeffs) {
        cands[k].realized = true;
        match = static_cast<int>(k);
      }
    if (match < 0) continue;
    const ExceptionalCandidate& hit = cands[match];
    if (!hit.strict && !hit.observed) continue;
    EmbeddingRecipe r;
    r.kind = RecipeKind::RootStack;
    r.host = a;
    r.host_name = host.name;
    r.curve = render_curve(host, c_a);
    r.candidates = cands;
    r.realized = match;
    r.ambiguous = cands.size() > 1;
    if (r.ambiguous) r.notes.push_back("ambiguous");
    if (!hit.strict && hit.observed) r.notes.push_back("observed");
    r.summary = "square-root stack along " + r.curve + " on " + r.host_name +
                "; partner model " + hit.host + " (" + hit.curve + ")";
    out.push_back(std::move(r));
  }

  for (std::size_t a = 0; a < 2; ++a) {
    const std::size_t b = 1 - a;
    const SurfaceModel& plane = s.components()[a];
    const DivisorClass& c_a = class_on(a);
    if (plane.name != "P2" || c_a.coeffs != std::vector<Int>{Int(1)}) continue;
    const SurfaceModel& host = s.components()[b];
    const DivisorClass& c_b = class_on(b);
    if (curve_square(host, c_b) != Int(-3))
      throw Error("internal: the curve glued to a plane line must square to "
                  "-3, got " +
                  render_int(curve_square(host, c_b)));
    EmbeddingRecipe r;
    r.kind = RecipeKind::ContractSmooth;
    r.host = b;
    r.host_name = host.name;
    r.contract_curve = render_curve(host, c_b);
    r.surface_point = classify_quotient(3, 1).display();
    r.threefold_point = "1/3(1,1,1)";
    r.summary = "contract the double curve " + r.contract_curve + " on " +
                r.host_name + " to a " + r.surface_point +
                " point and smooth the " + r.threefold_point + " cone";
    out.push_back(std::move(r));
  }

  struct ToricRow {
    const char *name_a, *curve_a, *name_b, *curve_b;
    std::vector<long long> weights;
  };
  static const std::vector<ToricRow> toric_registry{
      {"P2", "l", "F3", "e", {1, 1, 3}}};
  for (const auto& row : toric_registry) {
    for (std::size_t a = 0; a < 2; ++a) {
      const std::size_t b = 1 - a;
      const SurfaceModel& sa = s.components()[a];
      const SurfaceModel& sb = s.components()[b];
      if (sa.name != row.name_a || sb.name != row.name_b ||
          render_curve(sa, class_on(a)) != row.curve_a ||
          render_curve(sb, class_on(b)) != row.curve_b)
        continue;
      EmbeddingRecipe r;
      r.kind = RecipeKind::ToricModel;
      r.weights = row.weights;
      r.summary = "weighted projective section P(" +
                  std::to_string(row.weights[0]) + "," +
                  std::to_string(row.weights[1]) + "," +
                  std::to_string(row.weights[2]) + ")";
      out.push_back(std::move(r));
      break;  // one recipe per registry row
    }
  }

  if (out.empty()) {
    EmbeddingRecipe r;
    r.kind = RecipeKind::Unknown;
    r.summary = "no known construction for this pair";
    out.push_back(std::move(r));
  }
  return out;
}

std::string QuotientPoint::display() const {
  return "1/" + std::to_string(r) + "(1," + std::to_string(q) + ")";
}

QuotientPoint classify_quotient(long long r, long long q) {
  if (r < 2 || q <= 0 || q >= r)
    throw ValidationError("quotient type 1/" + std::to_string(r) + "(1," +
                          std::to_string(q) + ") needs 0 < q < r and r >= 2");
  if (std::gcd(r, q) != 1)
    throw ValidationError("quotient type 1/" + std::to_string(r) + "(1," +
                          std::to_string(q) +
                          ") is not cyclic of order r: gcd(r,q) = " +
                          std::to_string(std::gcd(r, q)));
  QuotientPoint p;
  p.r = r;
  p.q = q;
  if (q + 1 == r) {
    p.kind = QuotientKind::TransverseA;
    p.chain_length = r - 1;
  }
  return p;
}

std::vector<Rational> orbifold_canonical(
    const SurfaceModel& s,
    const std::vector<std::pair<DivisorClass, long long>>& ramification) {
  std::vector<Rational> out;
  out.reserve(s.rank());
  for (const Int& c : s.canonical.coeffs) out.emplace_back(c);
  for (const auto& [d, m] : ramification) {
    if (m < 2)
      throw ValidationError("root order must be at least 2; got " +
                            std::to_string(m));
    if (d.basis_id != s.basis_id)
      throw BasisMismatchError(s.basis_id, d.basis_id);
    if (d.coeffs.size() != out.size())
      throw ValidationError("ramification divisor has " +
                            std::to_string(d.coeffs.size()) +
                            " coefficients; the surface has rank " +
                            std::to_string(out.size()));
    const Rational w = Rational(1) - rat(Int(1), Int(m));
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] += w * Rational(d.coeffs[i]);
  }
  return out;
}

}  // namespace shrinkcy
