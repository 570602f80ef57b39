#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "rodnet/render.hpp"

using namespace rodnet;

namespace {

PhaseDiagram tiny_diagram(int nr, int na, CellState fill) {
  PhaseDiagram d;
  d.spec.rho_min = 0.5;
  d.spec.rho_max = 1.5;
  d.spec.aa_min = 1.0;
  d.spec.aa_max = 2.0;
  d.spec.rho_steps = nr;
  d.spec.aa_steps = na;
  d.cells.assign(static_cast<std::size_t>(nr) * na, Cell{fill, 0.5, 0.1});
  return d;
}

int count_occurrences(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + 1))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("single nematic cell renders one red rect") {
  const std::string svg = render_svg(tiny_diagram(1, 1, CellState::nematic));
  CHECK(count_occurrences(svg, "#d62728") == 1);
  CHECK(count_occurrences(svg, "#1f77b4") == 0);
  CHECK(svg.find("<svg") != std::string::npos);
}

TEST_CASE("2x2 all-isotropic diagram renders four blue cells") {
  const std::string svg = render_svg(tiny_diagram(2, 2, CellState::isotropic));
  CHECK(count_occurrences(svg, "#1f77b4") == 4);
  CHECK(count_occurrences(svg, "#d62728") == 0);
}

TEST_CASE("failed cells get their own color, never red or blue") {
  PhaseDiagram d = tiny_diagram(2, 1, CellState::isotropic);
  d.cells[1].state = CellState::failed;
  const std::string svg = render_svg(d);
  CHECK(count_occurrences(svg, "#555555") == 1);
  CHECK(count_occurrences(svg, "#1f77b4") == 1);
}

TEST_CASE("empty inputs are rejected") {
  PhaseDiagram d;
  CHECK_THROWS_AS(render_svg(d), DomainError);
  CHECK_THROWS_AS(render_svg({}, "x", "y"), DomainError);
  CurveSeries s;
  s.name = "empty";
  CHECK_THROWS_AS(render_svg({s}, "x", "y"), DomainError);
}

TEST_CASE("curve svg contains a polyline per series and the axis labels") {
  CurveSeries a{"A", {1, 2, 3}, {0.1, 0.5, 0.2}};
  CurveSeries b{"B", {1, 2, 3}, {0.3, 0.2, 0.6}};
  const std::string svg = render_svg({a, b}, "lambda", "s_star");
  CHECK(count_occurrences(svg, "<polyline") == 2);
  CHECK(svg.find("lambda") != std::string::npos);
  CHECK(svg.find("s_star") != std::string::npos);
}

TEST_CASE("golden file: fixed diagram renders byte-identically") {
  PhaseDiagram d = tiny_diagram(2, 2, CellState::isotropic);
  d.cells[3].state = CellState::nematic;
  SvgStyle style;
  style.metadata = {"golden: phase_2x2", "config: fixed"};
  const std::string svg = render_svg(d, style);

  const std::string path = std::string(RODNET_SOURCE_DIR) + "/tests/golden/phase_2x2.svg";
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), ("golden file missing: " + path));
  std::ostringstream ss;
  ss << in.rdbuf();
  CHECK(svg == ss.str());
}
