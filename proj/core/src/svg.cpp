#include "shrinkcy/svg.hpp"

#include <algorithm>
#include <sstream>

namespace shrinkcy {

namespace {

constexpr long long kScale = 40;

struct Frame {
  long long minx, maxx, miny, maxy;
  long long px(long long x) const { return (x - minx + 1) * kScale; }
  long long py(long long y) const { return (maxy - y + 1) * kScale; }
};

}  // namespace

std::string render_svg(const FanSection& fs) {
  Frame f{fs.polygon[0].x, fs.polygon[0].x, fs.polygon[0].y, fs.polygon[0].y};
  for (const Vec2& v : fs.polygon) {
    f.minx = std::min(f.minx, v.x);
    f.maxx = std::max(f.maxx, v.x);
    f.miny = std::min(f.miny, v.y);
    f.maxy = std::max(f.maxy, v.y);
  }
  const long long w = (f.maxx - f.minx + 2) * kScale;
  const long long h = (f.maxy - f.miny + 2) * kScale;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h
      << "\">\n";
  out << "<rect width=\"" << w << "\" height=\"" << h
      << "\" fill=\"white\"/>\n";

  out << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (long long x = f.minx; x <= f.maxx; ++x)
    out << "<line x1=\"" << f.px(x) << "\" y1=\"" << f.py(f.maxy)
        << "\" x2=\"" << f.px(x) << "\" y2=\"" << f.py(f.miny) << "\"/>\n";
  for (long long y = f.miny; y <= f.maxy; ++y)
    out << "<line x1=\"" << f.px(f.minx) << "\" y1=\"" << f.py(y)
        << "\" x2=\"" << f.px(f.maxx) << "\" y2=\"" << f.py(y) << "\"/>\n";
  out << "</g>\n";

  out << "<g stroke=\"#222222\" stroke-width=\"2\">\n";
  for (const auto& e : fs.edges)
    out << "<line x1=\"" << f.px(e.first.x) << "\" y1=\"" << f.py(e.first.y)
        << "\" x2=\"" << f.px(e.second.x) << "\" y2=\"" << f.py(e.second.y)
        << "\"/>\n";
  out << "</g>\n";

  for (const auto& cp : fs.points) {
    const bool red = cp.kind == PointKind::Boundary;
    out << "<circle class=\"" << to_string(cp.kind) << "\" cx=\""
        << f.px(cp.p.x) << "\" cy=\"" << f.py(cp.p.y) << "\" r=\"5\" fill=\""
        << (red ? "#cc0000" : "#000000") << "\"/>\n";
    out << "<text x=\"" << f.px(cp.p.x) + 7 << "\" y=\"" << f.py(cp.p.y) - 7
        << "\" font-family=\"monospace\" font-size=\"12\" fill=\""
        << (red ? "#cc0000" : "#000000") << "\">" << render_vec(cp.p)
        << "</text>\n";
    if (cp.kind == PointKind::Interior) {
      auto it = fs.interior_stars.find(cp.p);
      if (it != fs.interior_stars.end())
        out << "<text x=\"" << f.px(cp.p.x) + 7 << "\" y=\""
            << f.py(cp.p.y) + 17
            << "\" font-family=\"monospace\" font-size=\"12\" "
               "fill=\"#555555\">"
            << it->second.display() << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace shrinkcy
