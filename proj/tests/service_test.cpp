#include <cmath>
#include <future>
#include <thread>

#include "arrowgraph/service.hpp"
#include "doctest.h"
#include "httplib.h"

using namespace arrowgraph;
using nlohmann::json;

namespace {

json body(const HttpResponse& r) { return json::parse(r.body); }

}  // namespace

TEST_CASE("probe endpoint") {
  auto r = handle_api("/api/probe", {{"f", "x^2"}, {"x0", "-1"}});
  REQUIRE(r.status == 200);
  auto j = body(r);
  CHECK(j["focus"][0].get<double>() == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(j["focus"][1].get<double>() == doctest::Approx(-1.0 / 3).epsilon(1e-12));
  CHECK(std::abs(j["fprime"].get<double>() + 2) <= 1e-12);
  CHECK(j["projective"].size() == 3);

  auto line = body(handle_api("/api/probe", {{"f", "x + 3"}, {"x0", "0.5"}}));
  CHECK(line["focus"].is_null());
  CHECK(line["fprime"].get<double>() == 1);
}

TEST_CASE("implicit and transform endpoints share a shape") {
  auto j = body(handle_api("/api/implicit", {{"f", "x^2"}}));
  CHECK(j["equation"] == "(x-1)^2 + 4*x*y = 0");
  CHECK(j["degree"] == 2);
  CHECK(j["class"] == "hyperbola");
  CHECK(j.contains("poly2"));

  auto cubic = body(handle_api("/api/implicit", {{"f", "x^3"}}));
  CHECK(cubic["degree"] == 3);
  CHECK(cubic["class"].is_null());

  auto t = body(handle_api("/api/transform", {{"g", "1/(4x)"}, {"kind", "AddConstant"}, {"c", "1/2"}}));
  for (const char* key : {"equation", "degree", "class", "poly2", "function"}) CHECK(t.contains(key));
}

TEST_CASE("compose endpoint for f = 2x - 2 and g = 2x + 3") {
  auto j = body(handle_api("/api/compose", {{"a", "2"}, {"b", "-2"}, {"c", "2"}, {"d", "3"}}));
  CHECK(j["Ff"] == json::array({-1.0, 2.0}));
  CHECK(j["Fg"][1].get<double>() == doctest::Approx(-3));
  CHECK(j["Fgf"][0].get<double>() == doctest::Approx(-2.0 / 3));
  CHECK(j["t"].get<double>() == doctest::Approx(1.0 / 3));
  CHECK(j["collinear"] == true);

  auto parallel = body(handle_api("/api/compose", {{"a", "2"}, {"b", "1"}, {"c", "1/2"}, {"d", "0"}}));
  CHECK(parallel["Fgf"].is_null());
  CHECK(parallel["t"].is_null());
  CHECK(parallel["collinear"] == true);
}

TEST_CASE("scene endpoint returns a Scene that round-trips") {
  auto r = handle_api("/api/scene", {{"f", "x^2"}, {"delta", "1"}, {"range", "-2:2"}, {"arrows", "9"}, {"samples", "101"}});
  REQUIRE(r.status == 200);
  const Scene s = scene_from_json(r.body);
  CHECK(s.arrows.size() == 9);
  CHECK(scene_to_json(s) == r.body);

  auto composed = scene_from_json(handle_api("/api/scene", {{"f", "2x - 2"}, {"g", "2x + 3"}}).body);
  CHECK(composed.axes.size() == 3);
}

TEST_CASE("error statuses") {
  auto check = [](const HttpResponse& r, int status, const std::string& code) {
    CHECK(r.status == status);
    auto j = body(r);
    CHECK(j["error"] == code);
    CHECK(!j["message"].get<std::string>().empty());
  };
  check(handle_api("/api/implicit", {{"f", "x^^2"}}), 400, "syntax_error");
  check(handle_api("/api/implicit", {}), 400, "bad_request");
  check(handle_api("/api/scene", {{"f", "x"}, {"arrows", "many"}}), 400, "bad_request");
  check(handle_api("/api/scene", {{"f", "x"}, {"range", "2:1"}}), 400, "bad_request");
  check(handle_api("/api/transform", {{"g", "x^2"}, {"kind", "Rotate"}, {"c", "1"}}), 400, "bad_request");
  check(handle_api("/api/transform", {{"g", "x^2"}, {"kind", "ScaleInput"}, {"c", "pi"}}), 400, "bad_request");
  check(handle_api("/api/implicit", {{"f", "sin(x)"}}), 422, "not_rational");
  check(handle_api("/api/transform", {{"g", "x^2"}, {"kind", "ScaleOutput"}, {"c", "0"}}), 422, "domain_error");
  check(handle_api("/api/nothing", {}), 404, "not_found");
}

TEST_CASE("handlers are deterministic under concurrent requests") {
  const QueryParams params{{"f", "x + 1/x"}, {"samples", "201"}};
  const std::string expected = handle_api("/api/scene", params).body;
  std::vector<std::future<std::string>> runs;
  for (int i = 0; i < 8; ++i)
    runs.push_back(std::async(std::launch::async, [&] { return handle_api("/api/scene", params).body; }));
  for (auto& r : runs) CHECK(r.get() == expected);
}

TEST_CASE("HTTP round trip") {
  ApiServer server;
  const int port = server.bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::thread worker([&] { server.run(); });

  httplib::Client client("127.0.0.1", port);
  client.set_connection_timeout(5);
  auto ok = client.Get("/api/probe?f=x%5E2&x0=-1");
  REQUIRE(ok);
  CHECK(ok->status == 200);
  CHECK(ok->get_header_value("Access-Control-Allow-Origin") == "*");
  CHECK(json::parse(ok->body)["fprime"].get<double>() == doctest::Approx(-2));

  auto bad = client.Get("/api/implicit?f=sin(x)");
  REQUIRE(bad);
  CHECK(bad->status == 422);

  server.stop();
  worker.join();
}
