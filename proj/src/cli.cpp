#include "arrowgraph/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "arrowgraph/acceptance.hpp"
#include "arrowgraph/algebra.hpp"
#include "arrowgraph/errors.hpp"
#include "arrowgraph/service.hpp"

namespace arrowgraph {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  if (v == 0) v = 0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string pair_text(const nlohmann::json& p) {
  if (p.is_null()) return "at infinity";
  return "(" + num(p[0].get<double>()) + ", " + num(p[1].get<double>()) + ")";
}

std::string projective_text(const nlohmann::json& p) {
  return "[" + num(p[0].get<double>()) + " : " + num(p[1].get<double>()) + " : " + num(p[2].get<double>()) + "]";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

std::string read_poly2_argument(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream f(arg.substr(1));
  if (!f) throw UsageError("cannot read " + arg.substr(1));
  return {std::istreambuf_iterator<char>(f), {}};
}

struct Options {
  bool json = false;
  std::string f, g, kind, c, poly2, host = "127.0.0.1";
  std::string svg_path, json_path, range, viewport;
  std::string delta = "1", at, x0;
  int arrows = 41, samples = 801, port = 8080;
};

AxesConfig axes_from(const Options& o) { return {parse_real(o.delta)}; }

int plot(const Options& o, std::ostream& out) {
  RenderConfig cfg;
  cfg.delta = parse_real(o.delta);
  cfg.arrow_count = o.arrows;
  cfg.focal_sample_count = o.samples;
  if (!o.range.empty()) {
    auto [a, b] = parse_range(o.range);
    cfg.arrow_min = cfg.focal_min = a;
    cfg.arrow_max = cfg.focal_max = b;
  }
  if (!o.viewport.empty()) cfg.viewport = parse_viewport(o.viewport);
  if (!o.x0.empty()) cfg.probe_x0 = parse_real(o.x0);
  const AnalyzedFunction f = AnalyzedFunction::parse(o.f);
  std::optional<AnalyzedFunction> g;
  if (!o.g.empty()) g = AnalyzedFunction::parse(o.g);
  const Scene scene = build_scene(f, cfg, g ? &*g : nullptr);

  if (!o.json_path.empty()) {
    const std::string text = scene_to_json(scene);
    if (o.json_path == "-")
      out << text << "\n";
    else
      write_file(o.json_path, text);
  } else if (!o.svg_path.empty() && o.svg_path != "-") {
    write_file(o.svg_path, scene_to_svg(scene));
  } else {
    out << scene_to_svg(scene);
  }
  return 0;
}

int focal(const Options& o, std::ostream& out) {
  const auto j = api::focal(AnalyzedFunction::parse(o.f), parse_real(o.at), axes_from(o));
  if (o.json) {
    out << j.dump() << "\n";
    return 0;
  }
  out << "focal point " << pair_text(j["affine"]) << "\n";
  out << "projective  " << projective_text(j["projective"]) << "\n";
  out << "tangent     " << (j["tangent"].is_null() ? std::string("none") : pair_text(j["tangent"])) << "\n";
  return 0;
}

int implicit(const Options& o, std::ostream& out) {
  if (o.json) {
    out << api::implicit(parse(o.f)).dump() << "\n";
    return 0;
  }
  out << describe(implicit_equation(parse(o.f))) << "\n";
  return 0;
}

int classify(const Options& o, std::ostream& out) {
  nlohmann::json input;
  try {
    input = nlohmann::json::parse(read_poly2_argument(o.poly2));
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("--poly2 is not valid JSON: ") + e.what());
  }
  const Poly2 g = poly2_from_json(input);
  const char* name = conic_class_name(classify_conic(g));
  if (o.json)
    out << nlohmann::json{{"equation", format_poly2(g) + " = 0"}, {"class", name}}.dump() << "\n";
  else
    out << name << "\n";
  return 0;
}

int transform(const Options& o, std::ostream& out) {
  auto kind = parse_transform_kind(o.kind);
  if (!kind) throw UsageError("unknown transform kind '" + o.kind + "'");
  const auto j = api::transform(parse(o.g), {*kind, parse_exact(o.c)});
  if (o.json) {
    out << j.dump() << "\n";
    return 0;
  }
  out << "f(x) = " << j["function"].get<std::string>() << "\n";
  out << j["equation"].get<std::string>();
  if (!j["class"].is_null()) out << " [" << j["class"].get<std::string>() << "]";
  out << "\n";
  return 0;
}

int compose(const Options& o, std::ostream& out) {
  const LinearParams f = api::linear_params(parse(o.f));
  const LinearParams g = api::linear_params(parse(o.g));
  const auto j = api::compose(f.a, f.b, g.a, g.b, axes_from(o));
  if (o.json) {
    out << j.dump() << "\n";
    return 0;
  }
  out << "F_f   " << pair_text(j["Ff"]) << "\n";
  out << "F_g   " << pair_text(j["Fg"]) << "\n";
  out << "F_gf  " << pair_text(j["Fgf"]) << "\n";
  out << "t     " << (j["t"].is_null() ? std::string("none") : num(j["t"].get<double>())) << "\n";
  out << "collinear " << (j["collinear"].get<bool>() ? "yes" : "no") << " (det " << num(j["determinant"].get<double>())
      << ")\n";
  return 0;
}

int probe(const Options& o, std::ostream& out) {
  const auto j = api::probe(AnalyzedFunction::parse(o.f), parse_real(o.x0), axes_from(o));
  if (o.json) {
    out << j.dump() << "\n";
    return 0;
  }
  out << "focus  " << pair_text(j["focus"]) << "\n";
  out << "fprime " << num(j["fprime"].get<double>()) << "\n";
  return 0;
}

int selftest(const Options& o, std::ostream& out) {
  const auto results = run_acceptance_suite();
  bool all = true;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    if (o.json)
      rows.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
    else
      out << format_result(r) << "\n";
  }
  if (o.json) out << nlohmann::json{{"passed", all}, {"criteria", rows}}.dump() << "\n";
  return all ? 0 : 2;
}

int serve_command(const Options& o, std::ostream& out, std::ostream& err) {
  ApiServer server;
  const int port = server.bind(o.host, o.port);
  if (port < 0) {
    err << "error: cannot listen on " << o.host << ":" << o.port << "\n";
    return 1;
  }
  if (o.json)
    out << nlohmann::json{{"host", o.host}, {"port", port}}.dump() << "\n";
  else
    out << "serving on http://" << o.host << ":" << port << "/api/\n";
  out.flush();
  server.run();
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arrow graphs, focal curves and their implicit equations"};
  app.require_subcommand(1);
  Options o;
  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Machine-readable output"); };
  auto delta_option = [&](CLI::App* sub) { sub->add_option("--delta", o.delta, "Distance between the axes"); };

  auto* plot_cmd = app.add_subcommand("plot", "Render the arrow graph and focal curve");
  plot_cmd->add_option("f", o.f, "Function of x")->required();
  auto* svg_opt = plot_cmd->add_option("--svg", o.svg_path, "Write SVG to PATH (default: stdout)");
  auto* json_opt = plot_cmd->add_option("--json", o.json_path, "Write Scene JSON to PATH ('-' for stdout)");
  svg_opt->excludes(json_opt);
  delta_option(plot_cmd);
  plot_cmd->add_option("--range", o.range, "Input range A:B");
  plot_cmd->add_option("--arrows", o.arrows, "Number of arrows")->check(CLI::PositiveNumber);
  plot_cmd->add_option("--samples", o.samples, "Focal curve samples")->check(CLI::Range(2, 1000000));
  plot_cmd->add_option("--g", o.g, "Second function; draws the composition g(f(x)) on three axes");
  plot_cmd->add_option("--viewport", o.viewport, "xmin:xmax:ymin:ymax");
  plot_cmd->add_option("--x0", o.x0, "Probe position");

  auto* focal_cmd = app.add_subcommand("focal", "Focal point and tangent at one parameter");
  focal_cmd->add_option("f", o.f)->required();
  focal_cmd->add_option("--at", o.at, "Parameter t")->required();
  delta_option(focal_cmd);
  json_flag(focal_cmd);

  auto* implicit_cmd = app.add_subcommand("implicit", "Exact implicit equation of the focal curve");
  implicit_cmd->add_option("f", o.f)->required();
  json_flag(implicit_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "Classify a conic given as Poly2 JSON");
  classify_cmd->add_option("--poly2", o.poly2, "Poly2 JSON, or @FILE")->required();
  json_flag(classify_cmd);

  auto* transform_cmd = app.add_subcommand("transform", "Implicit equation after a transformation");
  transform_cmd->add_option("--g", o.g, "Base function")->required();
  transform_cmd->add_option("--kind", o.kind, "AddConstant, ScaleOutput, ShiftInput or ScaleInput")->required();
  transform_cmd->add_option("--c", o.c, "Exact constant")->required();
  json_flag(transform_cmd);

  auto* compose_cmd = app.add_subcommand("compose", "Foci of two linear functions and their composition");
  compose_cmd->add_option("--f", o.f, "a x + b")->required();
  compose_cmd->add_option("--g", o.g, "c x + d")->required();
  delta_option(compose_cmd);
  json_flag(compose_cmd);

  auto* probe_cmd = app.add_subcommand("probe", "Local focus and derivative readout");
  probe_cmd->add_option("f", o.f)->required();
  probe_cmd->add_option("--x0", o.x0, "Probe position")->required();
  delta_option(probe_cmd);
  json_flag(probe_cmd);

  auto* serve_cmd = app.add_subcommand("serve", "HTTP JSON API");
  serve_cmd->add_option("--port", o.port)->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--host", o.host);
  json_flag(serve_cmd);

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance criteria");
  json_flag(selftest_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*plot_cmd) return plot(o, out);
    if (*focal_cmd) return focal(o, out);
    if (*implicit_cmd) return implicit(o, out);
    if (*classify_cmd) return classify(o, out);
    if (*transform_cmd) return transform(o, out);
    if (*compose_cmd) return compose(o, out);
    if (*probe_cmd) return probe(o, out);
    if (*serve_cmd) return serve_command(o, out, err);
    if (*selftest_cmd) return selftest(o, out);
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error (" << e.code() << "): " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace arrowgraph
