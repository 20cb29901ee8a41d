#pragma once

// JSON builders shared by the CLI and the HTTP API, plus the HTTP server.

#include <map>
#include <memory>
#include <string>

#include "arrowgraph/render.hpp"
#include "arrowgraph/transforms.hpp"
#include "json.hpp"

namespace arrowgraph {

/// Real value of a constant expression such as "-1", "2pi" or "1/3".
/// Throws SyntaxError, or std::invalid_argument if it mentions x.
double parse_real(const std::string& text);
/// Exact rational value of a constant expression. Throws SyntaxError or std::invalid_argument.
Rational parse_exact(const std::string& text);
/// "A:B" with A < B.
std::pair<double, double> parse_range(const std::string& text);
/// "xmin:xmax:ymin:ymax".
Viewport parse_viewport(const std::string& text);

namespace api {

nlohmann::json probe(const AnalyzedFunction& f, double x0, const AxesConfig& axes = {});
nlohmann::json focal(const AnalyzedFunction& f, double t, const AxesConfig& axes = {});
/// {"equation", "degree", "class", "poly2"}. Throws NotRational.
nlohmann::json implicit(const Expr& f);
nlohmann::json transform(const Expr& g, const Transform<Rational>& t);
nlohmann::json compose(double a, double b, double c, double d, const AxesConfig& axes = {});

/// a, b of a function of the form a x + b. Throws DomainError otherwise.
LinearParams linear_params(const Expr& f);

}  // namespace api

struct HttpResponse {
  int status = 200;
  std::string body;
};

using QueryParams = std::map<std::string, std::string>;

/// Routes /api/{scene,probe,implicit,transform,compose}. 400 for malformed
/// requests, 422 for mathematically inapplicable ones, 404 otherwise.
HttpResponse handle_api(const std::string& path, const QueryParams& params);

class ApiServer {
 public:
  ApiServer();
  ~ApiServer();
  /// Port 0 picks a free one. Returns the bound port, or -1.
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  void run();
  void stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Blocks serving the API. Returns false if the socket cannot be bound.
bool serve(const std::string& host, int port);

}  // namespace arrowgraph
