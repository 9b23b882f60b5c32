#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "polyia/dual.hpp"
#include "polyia/svg.hpp"

using namespace polyia;

namespace {
std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}
}  // namespace

TEST_CASE("one polygon per cell; svg envelope") {
  const Polyiamond p = from_cells({Cell{0, 0}, Cell{0, 1}, Cell{1, 1}});
  const std::string svg = render_svg(p);
  CHECK(svg.rfind("<svg ", 0) == 0);
  CHECK(svg.find("</svg>\n") == svg.size() - 7);
  CHECK(count_of(svg, "<polygon") == 3);
  CHECK(count_of(svg, "<circle") == 0);
  CHECK(count_of(svg, "<line") == 0);
  CHECK(svg.find("-0.0000") == std::string::npos);
}

TEST_CASE("dual overlay adds points and labeled segments") {
  const Polyiamond p = from_cells({Cell{0, 0}, Cell{0, 1}, Cell{1, 1}, Cell{1, 2}});
  const std::string svg = render_svg(p, RenderOptions{true});
  CHECK(count_of(svg, "<polygon") == 4);
  CHECK(count_of(svg, "<circle") == 4);
  CHECK(count_of(svg, "<line") == to_dual(p).edges.size());
  CHECK(count_of(svg, "dual-edge upward") == 2);
  CHECK(count_of(svg, "dual-edge horizontal") == 1);
}

TEST_CASE("byte-identical re-render") {
  const Polyiamond p = from_cells({Cell{0, 1}, Cell{0, 2}, Cell{1, 1}});
  CHECK(render_svg(p, RenderOptions{true}) == render_svg(p, RenderOptions{true}));
  CHECK(render_svg(p) == render_svg(p));
}

TEST_CASE("single cell renders one triangle") {
  CHECK(count_of(render_svg(from_cells({Cell{0, 0}})), "<polygon") == 1);
}
