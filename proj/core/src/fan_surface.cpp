#include "shrinkcy/fan_surface.hpp"

#include <algorithm>
#include <map>

#include "shrinkcy/error.hpp"

namespace shrinkcy {

SurfaceModel star_surface_model(const Star& st, const std::string& basis_id) {
  const std::size_t k = st.rays.size();
  SurfaceModel s;
  s.name = identify_surface(st.selfints).display();
  s.basis_id = basis_id;
  s.gram.basis_id = basis_id;
  for (const Vec2& r : st.rays) s.gram.labels.push_back(render_vec(r));
  s.gram.entries.assign(k, std::vector<Int>(k, Int(0)));
  for (std::size_t i = 0; i < k; ++i) {
    s.gram.entries[i][i] = Int(st.selfints[i]);
    std::size_t next = (i + 1) % k;
    s.gram.entries[i][next] = Int(1);
    s.gram.entries[next][i] = Int(1);
  }
  validate(s.gram);
  s.canonical.basis_id = basis_id;
  s.canonical.coeffs.assign(k, Int(-1));
  for (std::size_t i = 0; i < k; ++i) {
    NamedCurve c;
    c.label = s.gram.labels[i];
    c.cls.basis_id = basis_id;
    c.cls.coeffs.assign(k, Int(0));
    c.cls.coeffs[i] = Int(1);
    c.role = CurveRole::MoriGenerator;
    s.catalog.push_back(std::move(c));
  }
  s.catalog_kind = CatalogKind::ToricStar;
  if (k_squared(s) != Int(12) - Int(static_cast<long long>(k)))
    throw Error("internal: star surface " + basis_id +
                " fails the canonical square count");
  return s;
}

SncSurface snc_from_fan(const FanSection& fs, const std::string& name) {
  std::vector<Vec2> interior = interior_points(fs);
  if (interior.empty())
    throw ValidationError(name +
                          ": the section has no interior lattice points, so "
                          "there are no compact surfaces to glue");
  std::map<Vec2, std::size_t> index;
  for (std::size_t i = 0; i < interior.size(); ++i) index[interior[i]] = i;

  for (const auto& cell : fs.cells) {
    int inside = 0;
    for (const Vec2& v : cell) inside += index.count(v) ? 1 : 0;
    if (inside == 3)
      throw ValidationError(
          name + ": cell " + render_vec(cell[0]) + " " + render_vec(cell[1]) +
          " " + render_vec(cell[2]) +
          " has three compact corners; those surfaces meet at a point, which "
          "pairwise gluing cannot express");
  }

  std::vector<Star> stars;
  std::vector<SurfaceModel> comps;
  for (const Vec2& p : interior) {
    stars.push_back(star_of(fs, p));
    comps.push_back(
        star_surface_model(stars.back(), name + ":" + render_vec(p)));
  }

  auto ray_index = [](const Star& st, const Vec2& dir) {
    auto it = std::find(st.rays.begin(), st.rays.end(), dir);
    if (it == st.rays.end())
      throw Error("internal: direction " + render_vec(dir) +
                  " is not a ray of the star at " + render_vec(st.center));
    return static_cast<std::size_t>(it - st.rays.begin());
  };
  auto unit = [&comps](std::size_t comp, std::size_t at) {
    DivisorClass c;
    c.basis_id = comps[comp].basis_id;
    c.coeffs.assign(comps[comp].rank(), Int(0));
    c.coeffs[at] = Int(1);
    return c;
  };

  std::vector<GluingSpec> glue;
  for (const auto& e : fs.edges) {
    auto pi = index.find(e.first);
    auto qi = index.find(e.second);
    if (pi == index.end() || qi == index.end()) continue;
    std::size_t i = pi->second, j = qi->second;
    GluingSpec g;
    g.i = i;
    g.j = j;
    g.class_in_i = unit(i, ray_index(stars[i], e.second - e.first));
    g.class_in_j = unit(j, ray_index(stars[j], e.first - e.second));
    glue.push_back(std::move(g));
  }

  SncSurface out(std::move(comps), std::move(glue));
  if (!out.cy().ok)
    throw Error("internal: fan-built components fail anticanonical matching: " +
                out.cy().detail);
  return out;
}

}  // namespace shrinkcy
