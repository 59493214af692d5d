#include "shrinkcy/shrink.hpp"

#include <algorithm>
#include <sstream>

#include "shrinkcy/error.hpp"

namespace shrinkcy {

std::string to_string(ShrinkStatus s) {
  switch (s) {
    case ShrinkStatus::PreShrinkable: return "pre-shrinkable";
    case ShrinkStatus::NotPreShrinkable: return "not pre-shrinkable";
    case ShrinkStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<LinForm> condition_i_inequalities(const SncSurface& s) {
  std::vector<LinForm> forms;
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    const SurfaceModel& comp = s.components()[i];
    for (const auto& curve : comp.catalog) {
      LinForm f;
      f.host = i;
      f.curve_label = curve.label;
      f.surface_name = comp.name;
      f.role = curve.role;
      f.dot.reserve(n);
      for (std::size_t k = 0; k < n; ++k)
        f.dot.push_back(curve_dot_component(s, i, curve.cls, k));
      forms.push_back(std::move(f));
    }
  }
  return forms;
}

namespace {

std::string render_linear(const std::vector<Int>& dot) {
  std::string out;
  for (std::size_t k = 0; k < dot.size(); ++k) {
    const Int& v = dot[k];
    if (v == 0) continue;
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? "-" : "+";
    }
    Int a = v < 0 ? Int(-v) : v;
    if (a != 1) out += a.str() + "*";
    out += "a" + std::to_string(k + 1);
  }
  if (out.empty()) out = "0";
  return out;
}

std::string describe(const SncSurface& s, const LinForm& f) {
  return f.curve_label + " on " + s.describe_component(f.host);
}

void downgrade_if_advisory(const SncSurface& s, ShrinkReport& r) {
  if (r.status != ShrinkStatus::NotPreShrinkable) return;
  bool advisory = false;
  for (const auto& comp : s.components())
    if (comp.catalog_kind == CatalogKind::Numerical ||
        comp.catalog_kind == CatalogKind::User)
      advisory = true;
  if (!advisory) return;
  r.status = ShrinkStatus::Inconclusive;
  r.downgraded = true;
  r.narrative.push_back(
      "the negative verdict leans on numerical-candidate curves that may not "
      "all be effective, so it is reported as inconclusive");
}

// Smallest certificate by (a1+a2, then a1); the caller guarantees some
// certificate with coordinate sum <= bound exists.
std::vector<Int> minimize_rank2(const SncSurface& s, const Int& bound) {
  for (Int total = 1; total <= bound; ++total) {
    for (Int a1 = 0; a1 <= total; ++a1) {
      std::vector<Int> cand{a1, total - a1};
      if (certificate_verify(s, cand).ok) return cand;
    }
  }
  throw Error("internal: witness ray produced no verifiable certificate");
}

}  // namespace

ShrinkReport decide_rank2(const SncSurface& s) {
  if (s.size() != 2)
    throw ValidationError("the exact ray analysis needs exactly 2 components; "
                          "use the bounded search for more");
  if (!s.cy().ok)
    throw Error("decision requires the anticanonical matching: " +
                s.cy().detail);

  ShrinkReport rep;
  for (const auto& comp : s.components())
    rep.catalogs.push_back(comp.catalog_kind);
  for (std::size_t i = 0; i < 2; ++i) {
    if (s.components()[i].catalog.empty()) {
      rep.status = ShrinkStatus::Inconclusive;
      rep.narrative.push_back(s.describe_component(i) +
                              " has no curve catalog, so the linear "
                              "conditions cannot be tested");
      return rep;
    }
  }

  std::vector<LinForm> forms = condition_i_inequalities(s);

  // Rays (a1, a2) >= 0 are parametrized by t = a2/a1 in [0, inf], with
  // t = inf the vertical ray. Each constraint alpha*a1 + beta*a2 <= 0 cuts
  // the interval.
  Rational lo(0);
  bool lo_at_infinity = false;  // set when finite rays are all excluded
  ExtRat hi = ExtRat::inf();
  const LinForm* lo_src = nullptr;
  const LinForm* hi_src = nullptr;
  for (const auto& f : forms) {
    const Int& alpha = f.dot[0];
    const Int& beta = f.dot[1];
    if (beta > 0) {
      Rational bound = rat(Int(-alpha), beta);
      if (hi.infinite || bound < hi.value) {
        hi = ExtRat::of(bound);
        hi_src = &f;
      }
    } else if (beta < 0) {
      Rational bound = rat(Int(-alpha), beta);
      if (bound > lo) {
        lo = bound;
        lo_src = &f;
      }
    } else if (alpha > 0) {
      if (!lo_at_infinity) {
        lo_at_infinity = true;
        lo_src = &f;
      }
    }
  }
  rep.ray_interval =
      RayInterval{lo_at_infinity ? ExtRat::inf() : ExtRat::of(lo), hi};

  const bool empty_interval =
      lo_at_infinity ? !hi.infinite : (!hi.infinite && hi.value < lo);

  if (empty_interval) {
    // Reproduce the forcing chain when the constraints kill both
    // coordinates outright; otherwise quote the two binding constraints.
    const LinForm* kill_a2 = nullptr;
    const LinForm* kill_a1 = nullptr;
    for (const auto& f : forms) {
      if (f.dot[1] > 0 && f.dot[0] >= 0) {
        kill_a2 = &f;
        break;
      }
    }
    for (const auto& f : forms) {
      if (f.dot[0] > 0) {
        kill_a1 = &f;
        break;
      }
    }
    if (kill_a2 && kill_a1) {
      rep.narrative.push_back(describe(s, *kill_a2) + " gives " +
                              render_linear(kill_a2->dot) +
                              " <= 0, forcing a2 = 0");
      rep.narrative.push_back(describe(s, *kill_a1) + " gives " +
                              render_linear(kill_a1->dot) +
                              " <= 0, which with a2 = 0 forces a1 = 0");
      rep.narrative.push_back(
          "so J = 0, every J^2.S_i vanishes, and the positivity condition "
          "cannot hold");
    } else {
      std::ostringstream os;
      if (lo_src)
        os << describe(s, *lo_src) << " forces t >= "
           << (lo_at_infinity ? std::string("inf") : render_rational(lo));
      if (lo_src && hi_src) os << "; ";
      if (hi_src)
        os << describe(s, *hi_src) << " forces t <= " << render(hi);
      os << ": no admissible ray remains";
      rep.narrative.push_back(os.str());
    }
    rep.status = ShrinkStatus::NotPreShrinkable;
    downgrade_if_advisory(s, rep);
    return rep;
  }

  // J^2 . S_i along the ray (1, t): T11i + 2 T12i t + T22i t^2.
  Int t111 = triple_intersection(s, 0, 0, 0);
  Int t112 = triple_intersection(s, 0, 0, 1);
  Int t122 = triple_intersection(s, 0, 1, 1);
  Int t222 = triple_intersection(s, 1, 1, 1);
  QuadPoly q1{t111, 2 * t112, t122};
  QuadPoly q2{t112, 2 * t122, t222};

  SectorResult sector;
  if (lo_at_infinity) {
    // only the vertical ray (0,1) survives the linear constraints
    if (t122 >= 0 && t222 >= 0 && t122 + t222 > 0)
      sector = SectorResult{SectorOutcome::InfinityWitness, std::nullopt,
                            "the vertical ray meets all conditions"};
    else if (t122 == 0 && t222 == 0)
      sector = SectorResult{SectorOutcome::Degenerate, std::nullopt,
                            "the vertical ray is admissible but both squares "
                            "vanish on it"};
    else
      sector = SectorResult{SectorOutcome::Infeasible, std::nullopt,
                            "the vertical ray violates a square condition"};
  } else {
    sector = analyze_sector(q1, q2, lo, hi);
  }

  switch (sector.outcome) {
    case SectorOutcome::Witness: {
      const Rational& t = *sector.witness;
      rep.witness_ray = ExtRat::of(t);
      Int bound = num(t) + den(t);
      if (bound < 1) bound = 1;  // t = 0 -> the ray (1,0)
      rep.certificate = minimize_rank2(s, bound);
      rep.status = ShrinkStatus::PreShrinkable;
      rep.narrative.push_back("admissible rays form t in [" +
                              (lo_at_infinity ? "inf" : render_rational(lo)) +
                              ", " + render(hi) + "]; " + sector.note);
      return rep;
    }
    case SectorOutcome::InfinityWitness: {
      rep.witness_ray = ExtRat::inf();
      rep.certificate = minimize_rank2(s, Int(1));
      rep.status = ShrinkStatus::PreShrinkable;
      rep.narrative.push_back(sector.note);
      return rep;
    }
    case SectorOutcome::Degenerate:
      rep.status = ShrinkStatus::NotPreShrinkable;
      rep.rank_iii_degenerate = true;
      rep.narrative.push_back(sector.note);
      rep.narrative.push_back(
          "admissible rays exist but none gives a strictly positive square: "
          "only the trivial combination survives, so the configuration is "
          "not pre-shrinkable");
      downgrade_if_advisory(s, rep);
      return rep;
    case SectorOutcome::Infeasible:
      rep.status = ShrinkStatus::NotPreShrinkable;
      rep.narrative.push_back(sector.note);
      downgrade_if_advisory(s, rep);
      return rep;
  }
  throw Error("internal: unhandled sector outcome");
}

namespace {

// Writes into a[from..] the lexicographically smallest distribution of rest
// with every entry in [0, a_max]; false when rest does not fit.
bool fill_min_tail(std::vector<Int>& a, std::size_t from, Int rest,
                   const Int& a_max) {
  const std::size_t n = a.size();
  if (rest < 0 || rest > a_max * Int(static_cast<long>(n - from))) return false;
  for (std::size_t k = from; k < n; ++k) {
    Int later = a_max * Int(static_cast<long>(n - k - 1));
    Int v = rest - later;
    if (v < 0) v = 0;
    a[k] = v;
    rest -= v;
  }
  return true;
}

std::vector<Int> first_tuple_with_sum(std::size_t n, const Int& sum,
                                      const Int& a_max) {
  std::vector<Int> a(n, Int(0));
  if (!fill_min_tail(a, 0, sum, a_max)) return {};
  return a;
}

// Advances to the lexicographic successor among tuples with the same sum.
bool next_tuple_with_sum(std::vector<Int>& a, const Int& sum, const Int& a_max) {
  const std::size_t n = a.size();
  for (std::size_t p = n - 1; p-- > 0;) {
    Int prefix = 0;
    for (std::size_t k = 0; k < p; ++k) prefix += a[k];
    for (Int v = a[p] + 1; v <= a_max; ++v) {
      Int rest = sum - prefix - v;
      if (rest < 0) break;
      if (fill_min_tail(a, p + 1, rest, a_max)) {
        a[p] = v;
        return true;
      }
    }
  }
  return false;
}

Int tuple_gcd(const std::vector<Int>& a) {
  Int g = 0;
  for (const auto& v : a) g = boost::multiprecision::gcd(g, v);
  return g;
}

}  // namespace

ShrinkReport search_rank_n(const SncSurface& s, const Int& a_max) {
  if (a_max < 0) throw ValidationError("search bound must be >= 0");
  if (!s.cy().ok)
    throw Error("search requires the anticanonical matching: " + s.cy().detail);
  ShrinkReport rep;
  for (const auto& comp : s.components())
    rep.catalogs.push_back(comp.catalog_kind);
  const std::size_t n = s.size();
  Int max_sum = a_max * Int(static_cast<long>(n));
  for (Int sum = 1; sum <= max_sum; ++sum) {
    std::vector<Int> a = first_tuple_with_sum(n, sum, a_max);
    if (a.empty()) continue;
    while (true) {
      if (tuple_gcd(a) == 1 && certificate_verify(s, a).ok) {
        rep.status = ShrinkStatus::PreShrinkable;
        rep.certificate = a;
        std::string tuple;
        for (const auto& v : a) tuple += (tuple.empty() ? "" : ",") + v.str();
        rep.narrative.push_back("bounded search found J = (" + tuple + ")");
        return rep;
      }
      if (!next_tuple_with_sum(a, sum, a_max)) break;
    }
  }
  rep.status = ShrinkStatus::Inconclusive;
  rep.narrative.push_back(
      "bounded search up to coefficient " + a_max.str() +
      " found no certificate; this proves nothing about larger coefficients");
  return rep;
}

CertificateCheck certificate_verify(const SncSurface& s,
                                    const std::vector<Int>& a) {
  if (a.size() != s.size())
    throw ValidationError("certificate has " + std::to_string(a.size()) +
                          " entries for " + std::to_string(s.size()) +
                          " components");
  CertificateCheck out;
  out.cy_ok = s.cy().ok;
  if (!out.cy_ok) {
    out.violations.push_back("anticanonical matching fails: " + s.cy().detail);
    return out;
  }
  for (const auto& v : a) {
    if (v < 0) {
      out.violations.push_back("coefficient " + v.str() + " is negative");
      return out;
    }
  }

  out.cond_i = true;
  for (const auto& f : condition_i_inequalities(s)) {
    Int cj = 0;
    for (std::size_t k = 0; k < a.size(); ++k) cj += f.dot[k] * a[k];
    if (cj > 0) {
      out.cond_i = false;
      out.violations.push_back(describe(s, f) + " meets J positively: C.J = " +
                               cj.str());
    }
  }

  out.cond_ii = true;
  out.cond_iii = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Int sq = j_squared_component(s, a, i);
    if (sq < 0) {
      out.cond_ii = false;
      out.violations.push_back("J^2 . S_" + std::to_string(i + 1) + " = " +
                               sq.str() + " < 0");
    }
    if (sq > 0) out.cond_iii = true;
  }
  if (!out.cond_iii)
    out.violations.push_back("no component has J^2 . S_i > 0");
  out.ok = out.cond_i && out.cond_ii && out.cond_iii;
  return out;
}

}  // namespace shrinkcy
