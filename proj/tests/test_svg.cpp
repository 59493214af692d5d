#include <string>

#include "doctest.h"
#include "shrinkcy/svg.hpp"

using namespace shrinkcy;

static std::string data_file(const char* name) {
  return std::string(SHRINKCY_TEST_DATA_DIR) + "/" + name;
}

static int count_of(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (size_t at = hay.find(needle); at != std::string::npos;
       at = hay.find(needle, at + needle.size()))
    ++n;
  return n;
}

TEST_CASE("svg output is byte-stable and classifies nodes") {
  FanSection fs = triangulate(weights_to_triangle(1, 2, 4));
  annotate_stars(fs);
  std::string a = render_svg(fs);
  std::string b = render_svg(fs);
  CHECK(a == b);
  CHECK(a.rfind("<svg ", 0) == 0);
  bool fractional = false;  // integers only: no digit.digit anywhere
  for (size_t i = 1; i + 1 < a.size(); ++i)
    if (a[i] == '.' && isdigit(a[i - 1]) && isdigit(a[i + 1]))
      fractional = true;
  CHECK_FALSE(fractional);
  CHECK(count_of(a, "class=\"interior\"") == 3);
  CHECK(count_of(a, "class=\"vertex\"") == 3);
  CHECK(count_of(a, "class=\"boundary\"") == 0);
  CHECK(count_of(a, ">F2</text>") == 3);
}

TEST_CASE("boundary nodes of the order-8 section render red") {
  FanSection fs = load_triangulation(data_file("p134.tri"));
  std::string svg = render_svg(fs);
  CHECK(count_of(svg, "class=\"boundary\"") == 3);
  CHECK(count_of(svg, "#cc0000") == 6);  // three nodes, three labels
  CHECK(svg.find(">(0,-1)</text>") != std::string::npos);
  CHECK(svg.find(">(-1,-2)</text>") != std::string::npos);
  CHECK(svg.find(">(-2,-3)</text>") != std::string::npos);
  // stars were not annotated, so no surface names appear
  CHECK(count_of(svg, "#555555") == 0);
}

TEST_CASE("sections without interior points still render") {
  FanSection fs = triangulate_polygon({{0, 0}, {1, 0}, {0, 1}});
  std::string svg = render_svg(fs);
  CHECK(count_of(svg, "class=\"vertex\"") == 3);
  CHECK(count_of(svg, "class=\"interior\"") == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
}
