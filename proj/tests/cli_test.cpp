#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include "arrowgraph/cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace arrowgraph;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "arrowgraph");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("implicit") {
  auto r = run({"implicit", "x^2"});
  CHECK(r.code == 0);
  CHECK(r.out == "(x-1)^2 + 4*x*y = 0 [hyperbola]\n");

  auto sine = run({"implicit", "sin(x)"});
  CHECK(sine.code == 2);
  CHECK(sine.out.empty());
  CHECK(sine.err.find("not_rational") != std::string::npos);

  auto j = nlohmann::json::parse(run({"implicit", "1/(4x)", "--json"}).out);
  CHECK(j["class"] == "circle");
}

TEST_CASE("probe reads off the derivative") {
  auto r = run({"probe", "x^2", "--x0", "-1"});
  CHECK(r.code == 0);
  CHECK(r.out == "focus  (0.333333, -0.333333)\nfprime -2\n");
  auto j = nlohmann::json::parse(run({"probe", "x^2", "--x0", "-1", "--json"}).out);
  CHECK(j["fprime"].get<double>() == doctest::Approx(-2).epsilon(1e-12));
}

TEST_CASE("slope one gives a focus at infinity, not an error") {
  auto r = run({"focal", "x + 2", "--at", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("focal point at infinity") != std::string::npos);
}

TEST_CASE("focal, classify, transform, compose") {
  auto focal = run({"focal", "1/(4x)", "--at", "1/2"});
  CHECK(focal.code == 0);
  CHECK(focal.out.find("focal point (0.5, 0.5)") != std::string::npos);

  CHECK(run({"classify", "--poly2", R"({"terms":[{"dx":2,"dy":0,"num":"1"},{"dx":0,"dy":2,"num":1},{"dx":1,"dy":0,"num":"-1","den":"1"}]})"}).out == "circle\n");
  CHECK(run({"classify", "--poly2", R"({"terms":[{"dx":3,"dy":0,"num":"1"},{"dx":0,"dy":1,"num":"1"}]})"}).code == 2);
  CHECK(run({"classify", "--poly2", "{not json"}).code == 1);

  auto t = run({"transform", "--g", "x^2", "--kind", "ShiftInput", "--c", "1"});
  CHECK(t.code == 0);
  CHECK(t.out == "f(x) = (x - 1)^2\n5*x^2 + 4*x*y - 6*x + 1 = 0 [hyperbola]\n");

  auto c = nlohmann::json::parse(run({"compose", "--f", "2x - 2", "--g", "2x + 3", "--json"}).out);
  CHECK(c["t"].get<double>() == doctest::Approx(1.0 / 3));
  CHECK(run({"compose", "--f", "x^2", "--g", "x"}).code == 2);
}

TEST_CASE("plot writes SVG or Scene JSON") {
  auto svg = run({"plot", "x^2", "--arrows", "5", "--samples", "51"});
  CHECK(svg.code == 0);
  CHECK(svg.out.find("<svg") != std::string::npos);

  auto json = run({"plot", "sin x", "--json", "-", "--range", "0:2pi"});
  CHECK(json.code == 0);
  auto scene = nlohmann::json::parse(json.out);
  CHECK(scene["cusps"].size() == 1);

  auto svg_of_default_plot = [] { return run({"plot", "x^2"}).out; };
  const std::string path = "cli_test_plot.svg";
  CHECK(run({"plot", "x^2", "--svg", path}).code == 0);
  std::ifstream f(path);
  const std::string written{std::istreambuf_iterator<char>(f), {}};
  CHECK(written == svg_of_default_plot());
  std::remove(path.c_str());
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"probe", "x^2"}).code == 1);
  CHECK(run({"probe", "x^^2", "--x0", "1"}).code == 1);
  CHECK(run({"plot", "x", "--svg", "a.svg", "--json", "b.json"}).code == 1);
  CHECK(run({"plot", "x", "--range", "3:1"}).code == 1);
  CHECK(run({"transform", "--g", "x", "--kind", "Twist", "--c", "1"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("math errors exit 2") {
  CHECK(run({"focal", "sqrt(x)", "--at", "-1"}).code == 2);
  CHECK(run({"probe", "ln(x)", "--x0", "-1"}).code == 2);
  CHECK(run({"plot", "x^2", "--delta", "-1"}).code == 2);
}

TEST_CASE("output is deterministic") {
  CHECK(run({"plot", "x + 1/x"}).out == run({"plot", "x + 1/x"}).out);
}
