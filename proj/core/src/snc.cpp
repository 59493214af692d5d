#include "shrinkcy/snc.hpp"

#include <sstream>

#include "shrinkcy/error.hpp"

namespace shrinkcy {

namespace {

std::string pair_name(const SncSurface& s, std::size_t i, std::size_t j) {
  return s.describe_component(i) + " / " + s.describe_component(j);
}

}  // namespace

SncSurface::SncSurface(std::vector<SurfaceModel> components,
                       std::vector<GluingSpec> glue)
    : components_(std::move(components)) {
  if (components_.empty())
    throw ValidationError("a surface needs at least one component");
  const std::size_t n = components_.size();
  for (const auto& g : glue) {
    if (g.i >= n || g.j >= n)
      throw ValidationError("gluing refers to component " +
                            std::to_string(std::max(g.i, g.j) + 1) + " of " +
                            std::to_string(n));
    if (g.i == g.j)
      throw ValidationError("gluing must join two distinct components");
    for (const auto& prev : gluings_) {
      if ((prev.i == g.i && prev.j == g.j) || (prev.i == g.j && prev.j == g.i))
        throw ValidationError("components " + std::to_string(g.i + 1) + " and " +
                              std::to_string(g.j + 1) +
                              " are glued more than once");
    }
    const SurfaceModel& si = components_[g.i];
    const SurfaceModel& sj = components_[g.j];
    Rational gi = adjunction_genus(si, g.class_in_i);
    Rational gj = adjunction_genus(sj, g.class_in_j);
    if (den(gi) != 1 || gi < 0)
      throw ValidationError("double curve " + render_curve(si, g.class_in_i) +
                            " on " + describe_component(g.i) +
                            " has genus " + render_rational(gi));
    if (den(gj) != 1 || gj < 0)
      throw ValidationError("double curve " + render_curve(sj, g.class_in_j) +
                            " on " + describe_component(g.j) +
                            " has genus " + render_rational(gj));
    if (gi != gj)
      throw ValidationError(
          "double curve genus disagrees between " + describe_component(g.i) +
          " (" + render_rational(gi) + ") and " + describe_component(g.j) +
          " (" + render_rational(gj) + ")");
    gluings_.push_back(Gluing{g.i, g.j, g.class_in_i, g.class_in_j, num(gi)});
  }
  cy_ = cy_check(*this);
}

const Gluing* SncSurface::gluing_between(std::size_t i, std::size_t j) const {
  for (const auto& g : gluings_) {
    if (g.i == i && g.j == j) return &g;
    if (g.i == j && g.j == i) return &g;
  }
  return nullptr;
}

std::string SncSurface::describe_component(std::size_t i) const {
  return "component " + std::to_string(i + 1) + " (" + components_[i].name + ")";
}

CyResult cy_check(const SncSurface& s) {
  CyResult r;
  for (const auto& g : s.gluings()) {
    const SurfaceModel& si = s.components()[g.i];
    const SurfaceModel& sj = s.components()[g.j];
    Int sq_i = curve_square(si, g.class_in_i);
    Int sq_j = curve_square(sj, g.class_in_j);
    bool ok = sq_i + sq_j == 2 * g.genus - 2;
    r.checks.push_back(CyCheckEntry{g.i, g.j, sq_i, sq_j, g.genus, ok});
    if (!ok && r.ok) {
      r.ok = false;
      std::ostringstream os;
      os << "anticanonical matching fails along " << pair_name(s, g.i, g.j)
         << ": " << sq_i << " + " << sq_j << " != " << 2 * g.genus - 2;
      r.detail = os.str();
    }
  }
  return r;
}

Int curve_dot_component(const SncSurface& s, std::size_t i,
                        const DivisorClass& c, std::size_t j) {
  if (i >= s.size() || j >= s.size())
    throw ValidationError("component index out of range");
  const SurfaceModel& si = s.components()[i];
  if (i == j) return k_dot(si, c);
  const Gluing* g = s.gluing_between(i, j);
  if (!g) return 0;
  const DivisorClass& dij = (g->i == i) ? g->class_in_i : g->class_in_j;
  return pairing(si.gram, c, dij);
}

Int triple_intersection(const SncSurface& s, std::size_t p, std::size_t q,
                        std::size_t r) {
  if (p >= s.size() || q >= s.size() || r >= s.size())
    throw ValidationError("component index out of range");
  if (!s.cy().ok)
    throw Error(
        "triple intersections are only defined once the anticanonical "
        "matching holds: " +
        s.cy().detail);
  // sort so that p <= q <= r patterns collapse to three shapes
  std::size_t a = p, b = q, c = r;
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  if (a == b && b == c) return k_squared(s.components()[a]);
  if (a != b && b != c) {
    // three distinct components never meet (no triple points)
    return 0;
  }
  // exactly two equal: the repeated one carries the double curve squared
  std::size_t twice = (a == b) ? a : b;
  std::size_t once = (a == b) ? c : a;
  const Gluing* g = s.gluing_between(twice, once);
  if (!g) return 0;
  const SurfaceModel& st = s.components()[twice];
  const SurfaceModel& so = s.components()[once];
  const DivisorClass& in_twice = (g->i == twice) ? g->class_in_i : g->class_in_j;
  const DivisorClass& in_once = (g->i == once) ? g->class_in_i : g->class_in_j;
  Int value = k_dot(st, in_twice);
  // with the matching in force this must equal the curve's square on the
  // other side; a disagreement means internal corruption
  Int cross = curve_square(so, in_once);
  if (value != cross)
    throw Error("triple product inconsistency along " + pair_name(s, twice, once) +
                ": " + value.str() + " vs " + cross.str());
  return value;
}

Int j_squared_component(const SncSurface& s, const std::vector<Int>& a,
                        std::size_t i) {
  const std::size_t n = s.size();
  if (i >= n) throw ValidationError("component index out of range");
  if (a.size() != n)
    throw ValidationError("coefficient vector has " + std::to_string(a.size()) +
                          " entries for " + std::to_string(n) + " components");
  for (const auto& v : a)
    if (v < 0)
      throw ValidationError("negative coefficient " + v.str() +
                            " in an effective combination");
  Int total = 0;
  for (std::size_t p = 0; p < n; ++p) {
    if (a[p] == 0) continue;
    for (std::size_t q = 0; q < n; ++q) {
      if (a[q] == 0) continue;
      total += a[p] * a[q] * triple_intersection(s, p, q, i);
    }
  }
  return total;
}

SncSurface parse_snc(const std::string& text) {
  std::vector<SurfaceModel> components;
  std::vector<GluingSpec> glue;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    // trim
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);

    std::istringstream ls(line);
    std::string keyword;
    ls >> keyword;
    if (keyword == "component") {
      std::string idx_s, eq, name;
      ls >> idx_s >> eq >> name;
      if (eq != "=" || name.empty())
        throw ParseError("expected 'component <k> = <surface>'", line_no);
      long idx = 0;
      try {
        idx = std::stol(idx_s);
      } catch (...) {
        throw ParseError("bad component index '" + idx_s + "'", line_no);
      }
      if (idx != static_cast<long>(components.size()) + 1)
        throw ParseError("components must be numbered consecutively from 1; got " +
                             idx_s,
                         line_no);
      try {
        components.push_back(builtin_surface(name));
      } catch (const ValidationError& err) {
        throw ParseError(err.what(), line_no);
      }
      std::string extra;
      if (ls >> extra) throw ParseError("trailing text '" + extra + "'", line_no);
    } else if (keyword == "glue") {
      std::string rest;
      std::getline(ls, rest);
      auto sep = rest.find('~');
      if (sep == std::string::npos) sep = rest.find('=');
      if (sep == std::string::npos)
        throw ParseError("expected 'glue i:<curve> ~ j:<curve>'", line_no);
      auto parse_side = [&](std::string side) -> std::pair<std::size_t, std::string> {
        auto colon = side.find(':');
        if (colon == std::string::npos)
          throw ParseError("gluing side needs '<index>:<curve>'", line_no);
        std::string idx_s = side.substr(0, colon);
        auto ib = idx_s.find_first_not_of(" \t");
        auto ie = idx_s.find_last_not_of(" \t");
        if (ib == std::string::npos)
          throw ParseError("missing component index in gluing", line_no);
        idx_s = idx_s.substr(ib, ie - ib + 1);
        long idx = 0;
        try {
          idx = std::stol(idx_s);
        } catch (...) {
          throw ParseError("bad component index '" + idx_s + "'", line_no);
        }
        if (idx < 1 || idx > static_cast<long>(components.size()))
          throw ParseError("gluing refers to undeclared component " + idx_s,
                           line_no);
        return {static_cast<std::size_t>(idx - 1), side.substr(colon + 1)};
      };
      auto [i, expr_i] = parse_side(rest.substr(0, sep));
      auto [j, expr_j] = parse_side(rest.substr(sep + 1));
      try {
        glue.push_back(GluingSpec{i, j, parse_curve(components[i], expr_i),
                                  parse_curve(components[j], expr_j)});
      } catch (const ParseError& err) {
        throw ParseError(std::string(err.what()), line_no);
      }
    } else {
      throw ParseError("unknown keyword '" + keyword + "'", line_no);
    }
  }
  try {
    return SncSurface(std::move(components), std::move(glue));
  } catch (const ValidationError& err) {
    throw ParseError(err.what(), line_no);
  }
}

}  // namespace shrinkcy
