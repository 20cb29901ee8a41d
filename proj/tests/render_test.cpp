#include <cmath>
#include <numbers>
#include <regex>

#include "arrowgraph/algebra.hpp"
#include "arrowgraph/errors.hpp"
#include "arrowgraph/render.hpp"
#include "doctest.h"

using namespace arrowgraph;
using std::numbers::pi;

namespace {

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

double unit_max_residual(const Poly2& g, const PlanePoint& p) {
  double max_coeff = 0;
  for (const auto& t : g.terms()) max_coeff = std::max(max_coeff, std::abs(t.coeff.get_d()));
  return std::abs(evaluate_double(g, p.x(), p.y())) / max_coeff;
}

}  // namespace

TEST_CASE("scene for x^2") {
  const auto f = AnalyzedFunction::parse("x^2");
  RenderConfig cfg;
  const Scene s = build_scene(f, cfg);
  CHECK(s.axes == std::vector<double>{0, 1});
  CHECK(s.arrows.size() == 41);
  CHECK(s.cusps.empty());
  CHECK(s.focal_branches.size() == 2);
  CHECK(s.implicit == "(x-1)^2 + 4*x*y = 0 [hyperbola]");
  for (const auto& b : s.focal_branches) {
    const bool right = b.front().x() > 0;
    for (const auto& p : b) {
      CHECK(s.viewport.contains(p));
      CHECK(std::abs((p.x() - 1) * (p.x() - 1) + 4 * p.x() * p.y()) <= 1e-6);
      CHECK((p.x() > 0) == right);
    }
  }
  // Clipped ends sit on the viewport boundary.
  const auto& first = s.focal_branches[0];
  CHECK(std::abs(first.back().x() - s.viewport.xmax) <= 1e-9);

  const double step = (cfg.arrow_max - cfg.arrow_min) / (cfg.arrow_count - 1);
  for (std::size_t i = 0; i < s.arrows.size(); ++i) {
    CHECK(s.arrows[i].from.x() == 0);
    CHECK(s.arrows[i].to.x() == 1);
    CHECK(s.arrows[i].from.y() == doctest::Approx(cfg.arrow_min + step * i));
  }
}

TEST_CASE("sine scene splits at the cusp") {
  RenderConfig cfg;
  cfg.focal_min = 0;
  cfg.focal_max = 2 * pi;
  cfg.viewport = {-3, 4, -20, 20};
  const Scene s = build_scene(AnalyzedFunction::parse("sin x"), cfg);
  REQUIRE(s.cusps.size() == 1);
  CHECK((s.cusps[0] - PlanePoint(0.5, pi / 2)).norm() <= 1e-9);
  REQUIRE(s.focal_branches.size() == 2);
  CHECK((s.focal_branches[0].back() - s.cusps[0]).norm() <= 1e-9);
  CHECK((s.focal_branches[1].front() - s.cusps[0]).norm() <= 1e-9);
  CHECK(!s.implicit);
}

TEST_CASE("composition scene") {
  const auto f = AnalyzedFunction::parse("2x - 2"), g = AnalyzedFunction::parse("2x + 3");
  const Scene s = build_scene(f, RenderConfig{}, &g);
  CHECK(s.axes == std::vector<double>{0, 1, 2});
  REQUIRE(s.foci.size() == 3);
  CHECK((s.foci[0] - PlanePoint(-1, 2)).norm() <= 1e-12);
  CHECK((s.foci[1] - PlanePoint(0, -3)).norm() <= 1e-12);
  CHECK((s.foci[2] - PlanePoint(-2.0 / 3, 1.0 / 3)).norm() <= 1e-12);
  CHECK(s.focal_branches.empty());
  CHECK(s.arrows.size() == 82);
  const std::string svg = scene_to_svg(s);
  CHECK(count(svg, "class=\"focus\"") == 3);
  CHECK(count(svg, "class=\"guide\"") == 1);
  CHECK(count(svg, "class=\"axis\"") == 3);
}

TEST_CASE("probe readout") {
  RenderConfig cfg;
  cfg.probe_x0 = -1;
  const Scene s = build_scene(AnalyzedFunction::parse("x^2"), cfg);
  REQUIRE(s.probe);
  REQUIRE(s.probe->focus);
  CHECK((*s.probe->focus - PlanePoint(1.0 / 3, -1.0 / 3)).norm() <= 1e-12);
  CHECK(std::abs(s.probe->fprime + 2) <= 1e-12);
  const auto j = scene_to_json_value(s);
  CHECK(j["probe"]["x0"] == -1.0);
  CHECK(j["probe"]["focus"].is_array());
  CHECK(j["probe"]["fprime"].get<double>() == doctest::Approx(-2));

  cfg.probe_x0 = 0.5;
  const Scene inf = build_scene(AnalyzedFunction::parse("x^2"), cfg);
  CHECK(!inf.probe->focus);
  CHECK(inf.probe->fprime == 1);
  CHECK(scene_to_json_value(inf)["probe"]["focus"].is_null());
}

TEST_CASE("SVG output") {
  Scene empty;
  empty.axes = {0, 1};
  const std::string svg = scene_to_svg(empty);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count(svg, "class=\"axis\"") == 2);
  CHECK(count(svg, "<polyline") == 0);

  const Scene s = build_scene(AnalyzedFunction::parse("x^2"), RenderConfig{});
  const std::string a = scene_to_svg(s), b = scene_to_svg(build_scene(AnalyzedFunction::parse("x^2"), RenderConfig{}));
  CHECK(a == b);
  CHECK(count(a, "class=\"arrow\"") == 41);
  CHECK(count(a, "<polyline class=\"focal\"") == 2);

  // Every number carries at most 6 significant digits.
  const std::regex number(R"([0-9]+\.[0-9]+)");
  for (auto it = std::sregex_iterator(a.begin(), a.end(), number); it != std::sregex_iterator(); ++it) {
    std::string digits;
    for (char c : it->str())
      if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
    while (!digits.empty() && digits.front() == '0') digits.erase(digits.begin());
    CHECK(digits.size() <= 6);
  }
}

TEST_CASE("JSON round trip") {
  RenderConfig cfg;
  cfg.probe_x0 = 0.3;
  const Scene s = build_scene(AnalyzedFunction::parse("x^2"), cfg);
  const std::string text = scene_to_json(s);
  CHECK(scene_from_json(text) == s);
  CHECK(scene_to_json(scene_from_json(text)) == text);
  CHECK(scene_to_json_value(s)["focal_branches"].size() == 2);
  for (const char* key : {"delta", "axes", "arrows", "focal_branches", "cusps", "probe", "foci", "implicit", "viewport"})
    CHECK(scene_to_json_value(s).contains(key));
  CHECK_THROWS_AS(scene_from_json("{\"delta\": 1}"), std::invalid_argument);
  CHECK_THROWS_AS(scene_from_json("not json"), std::invalid_argument);
}

TEST_CASE("config validation and empty ranges") {
  RenderConfig bad;
  bad.arrow_count = 1;
  CHECK_THROWS_AS(build_scene(AnalyzedFunction::parse("x^2"), bad), DomainError);
  RenderConfig ln;
  ln.focal_min = -3;
  ln.focal_max = -1;
  CHECK_THROWS_AS(build_scene(AnalyzedFunction::parse("ln x"), ln), EmptyRange);
}

TEST_CASE("property: rendered branches stay on the exact focal curves") {
  const char* fs[] = {"x^2", "1/(4x)", "x + 1/x", "x^3 - x", "(x^2 + 1)/(x - 2)"};
  RenderConfig cfg;
  cfg.focal_min = -3;
  cfg.focal_max = 3;
  for (const char* text : fs) {
    const Poly2 g = implicit_equation(parse(text)).equation;
    const Scene s = build_scene(AnalyzedFunction::parse(text), cfg);
    CHECK(!s.focal_branches.empty());
    for (const auto& b : s.focal_branches)
      for (const auto& p : b) {
        CAPTURE(text);
        CHECK(s.viewport.contains(p));
        CHECK(unit_max_residual(g, p) <= 1e-6);
      }
  }
}

TEST_CASE("property: no branch crosses a focus at infinity") {
  // f'(t) = 1 at the grid points; both sides of each must land in different branches.
  RenderConfig cfg;
  cfg.viewport = {-50, 50, -50, 50};
  const auto f = AnalyzedFunction::parse("x^3/3");
  const Scene s = build_scene(f, cfg);
  // x = 1/(1 - t^2) changes sign at t = +-1.
  for (const auto& b : s.focal_branches) {
    const bool positive = b.front().x() > 0;
    for (const auto& p : b) CHECK((p.x() > 0) == positive);
  }
  CHECK(s.focal_branches.size() >= 3);
}
