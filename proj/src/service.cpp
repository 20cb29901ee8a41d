#include "arrowgraph/service.hpp"

#include <cmath>
#include <sstream>

#include "arrowgraph/algebra.hpp"
#include "arrowgraph/errors.hpp"
#include "httplib.h"

namespace arrowgraph {

double parse_real(const std::string& text) {
  const Expr e = parse(text);
  if (depends_on_variable(e)) throw std::invalid_argument("'" + text + "' must not contain x");
  return evaluate(e, 0.0);
}

Rational parse_exact(const std::string& text) {
  const Expr e = parse(text);
  auto v = exact_value(e);
  if (!v) throw std::invalid_argument("'" + text + "' is not an exact rational constant");
  return *v;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

// Adding +0.0 turns -0.0 into 0.0.
nlohmann::json point_or_null(const std::optional<PlanePoint>& p) {
  if (!p) return nullptr;
  return nlohmann::json::array({p->x() + 0.0, p->y() + 0.0});
}

nlohmann::json triple(const ProjectivePointd& p) {
  return nlohmann::json::array({p.x() + 0.0, p.y() + 0.0, p.z() + 0.0});
}

}  // namespace

std::pair<double, double> parse_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw std::invalid_argument("range must look like A:B");
  const double a = parse_real(parts[0]), b = parse_real(parts[1]);
  if (!(a < b)) throw std::invalid_argument("range needs A < B");
  return {a, b};
}

Viewport parse_viewport(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 4) throw std::invalid_argument("viewport must look like xmin:xmax:ymin:ymax");
  Viewport v{parse_real(parts[0]), parse_real(parts[1]), parse_real(parts[2]), parse_real(parts[3])};
  if (!(v.xmin < v.xmax && v.ymin < v.ymax)) throw std::invalid_argument("empty viewport");
  return v;
}

namespace api {

nlohmann::json probe(const AnalyzedFunction& f, double x0, const AxesConfig& axes) {
  const ProjectivePointd p = focal_point(f, x0, axes);
  const auto focus = affine(p);
  const double fprime = focus ? derivative_from_focus(focus->x(), axes) : 1.0;
  return {{"x0", x0}, {"focus", point_or_null(focus)}, {"projective", triple(p)}, {"fprime", fprime}};
}

nlohmann::json focal(const AnalyzedFunction& f, double t, const AxesConfig& axes) {
  const ProjectivePointd p = focal_point(f, t, axes);
  const auto focus = affine(p);
  nlohmann::json tangent = nullptr;
  if (focus)
    if (auto d = focal_tangent(f, t, axes)) tangent = nlohmann::json::array({d->x(), d->y()});
  return {{"t", t},
          {"affine", point_or_null(focus)},
          {"projective", triple(p)},
          {"tangent", tangent},
          {"at_infinity", !focus}};
}

namespace {

nlohmann::json equation_json(const Poly2& g) {
  std::optional<ConicClass> cls;
  if (g.total_degree() == 2) cls = classify_conic(g);
  return {{"equation", format_poly2(g) + " = 0"},
          {"degree", g.total_degree()},
          {"class", cls ? nlohmann::json(conic_class_name(*cls)) : nlohmann::json(nullptr)},
          {"poly2", poly2_to_json(g)}};
}

}  // namespace

nlohmann::json implicit(const Expr& f) { return equation_json(implicit_equation(f).equation); }

nlohmann::json transform(const Expr& g, const Transform<Rational>& t) {
  const Poly2 base = implicit_equation(g).equation;
  auto out = equation_json(transform_implicit(base, t));
  out["function"] = print(transformed_function(g, t));
  return out;
}

nlohmann::json compose(double a, double b, double c, double d, const AxesConfig& axes) {
  const Composition comp = compose_linear_foci(a, b, c, d, axes);
  return {{"Ff", point_or_null(affine(comp.f_focus))},
          {"Fg", point_or_null(affine(comp.g_focus))},
          {"Fgf", point_or_null(affine(comp.composite_focus))},
          {"projective", {{"Ff", triple(comp.f_focus)}, {"Fg", triple(comp.g_focus)}, {"Fgf", triple(comp.composite_focus)}}},
          {"t", comp.t ? nlohmann::json(*comp.t) : nlohmann::json(nullptr)},
          {"determinant", comp.collinearity},
          {"collinear", std::abs(comp.collinearity) <= 1e-9}};
}

LinearParams linear_params(const Expr& f) {
  auto rf = to_rational_function(f);
  if (!rf || rf->denominator.degree() != 0 || rf->numerator.degree() > 1)
    throw DomainError("'" + print(f) + "' is not of the form a x + b");
  const Rational q = rf->denominator[0];
  return {to_double(Rational(rf->numerator.coefficient(1) / q)), to_double(Rational(rf->numerator.coefficient(0) / q))};
}

}  // namespace api

namespace {

struct NotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadRequest : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::string& require(const QueryParams& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end() || it->second.empty()) throw BadRequest("missing parameter '" + key + "'");
  return it->second;
}

std::optional<std::string> optional_param(const QueryParams& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end() || it->second.empty()) return std::nullopt;
  return it->second;
}

int parse_count(const std::string& text) {
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw BadRequest("'" + text + "' is not an integer");
  }
  if (used != text.size()) throw BadRequest("'" + text + "' is not an integer");
  return n;
}

HttpResponse error_response(int status, const std::string& code, const std::string& message) {
  return {status, nlohmann::json{{"error", code}, {"message", message}}.dump()};
}

nlohmann::json route(const std::string& path, const QueryParams& params) {
  AxesConfig axes;
  if (auto d = optional_param(params, "delta")) axes.delta = parse_real(*d);

  if (path == "/api/scene") {
    RenderConfig cfg;
    cfg.delta = axes.delta;
    if (auto r = optional_param(params, "range")) {
      auto [a, b] = parse_range(*r);
      cfg.arrow_min = cfg.focal_min = a;
      cfg.arrow_max = cfg.focal_max = b;
    }
    if (auto n = optional_param(params, "arrows")) cfg.arrow_count = parse_count(*n);
    if (auto m = optional_param(params, "samples")) cfg.focal_sample_count = parse_count(*m);
    if (auto v = optional_param(params, "viewport")) cfg.viewport = parse_viewport(*v);
    if (auto x0 = optional_param(params, "x0")) cfg.probe_x0 = parse_real(*x0);
    const AnalyzedFunction f = AnalyzedFunction::parse(require(params, "f"));
    std::optional<AnalyzedFunction> g;
    if (auto gt = optional_param(params, "g")) g = AnalyzedFunction::parse(*gt);
    return scene_to_json_value(build_scene(f, cfg, g ? &*g : nullptr));
  }
  if (path == "/api/probe")
    return api::probe(AnalyzedFunction::parse(require(params, "f")), parse_real(require(params, "x0")), axes);
  if (path == "/api/implicit") return api::implicit(parse(require(params, "f")));
  if (path == "/api/transform") {
    auto kind = parse_transform_kind(require(params, "kind"));
    if (!kind) throw BadRequest("unknown transform kind '" + params.at("kind") + "'");
    return api::transform(parse(require(params, "g")), {*kind, parse_exact(require(params, "c"))});
  }
  if (path == "/api/compose")
    return api::compose(parse_real(require(params, "a")), parse_real(require(params, "b")),
                        parse_real(require(params, "c")), parse_real(require(params, "d")), axes);
  throw NotFound(path);
}

}  // namespace

HttpResponse handle_api(const std::string& path, const QueryParams& params) {
  try {
    return {200, route(path, params).dump()};
  } catch (const NotFound&) {
    return error_response(404, "not_found", "no endpoint " + path);
  } catch (const SyntaxError& e) {
    return error_response(400, e.code(), e.what());
  } catch (const BadRequest& e) {
    return error_response(400, "bad_request", e.what());
  } catch (const std::invalid_argument& e) {
    return error_response(400, "bad_request", e.what());
  } catch (const Error& e) {
    return error_response(422, e.code(), e.what());
  } catch (const std::exception& e) {
    return error_response(500, "internal", e.what());
  }
}

struct ApiServer::Impl {
  httplib::Server server;
};

ApiServer::ApiServer() : impl_(std::make_unique<Impl>()) {
  // httplib's default SO_REUSEPORT lets two servers share a port silently.
  impl_->server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
  });
  impl_->server.Get(R"(/api/.*)", [](const httplib::Request& req, httplib::Response& res) {
    QueryParams params;
    for (const auto& [k, v] : req.params) params.emplace(k, v);
    const HttpResponse r = handle_api(req.path, params);
    res.status = r.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(r.body, "application/json");
  });
}

ApiServer::~ApiServer() = default;

int ApiServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

void ApiServer::run() { impl_->server.listen_after_bind(); }
void ApiServer::stop() { impl_->server.stop(); }
bool ApiServer::running() const { return impl_->server.is_running(); }

bool serve(const std::string& host, int port) {
  ApiServer server;
  if (server.bind(host, port) < 0) return false;
  server.run();
  return true;
}

}  // namespace arrowgraph
