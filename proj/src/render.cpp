#include "arrowgraph/render.hpp"

#include <cmath>
#include <cstdio>

#include "arrowgraph/algebra.hpp"
#include "arrowgraph/errors.hpp"

namespace arrowgraph {

void validate(const RenderConfig& cfg) {
  if (cfg.arrow_count < 2 || cfg.focal_sample_count < 2) throw DomainError("counts must be at least 2");
  if (!(cfg.arrow_min < cfg.arrow_max) || !(cfg.focal_min < cfg.focal_max)) throw DomainError("empty range");
  const Viewport& v = cfg.viewport;
  if (!(v.xmin < v.xmax && v.ymin < v.ymax)) throw DomainError("empty viewport");
  validate(AxesConfig{cfg.delta});
  if (cfg.probe_x0 && !std::isfinite(*cfg.probe_x0)) throw DomainError("probe must be finite");
}

namespace {

struct CurvePoint {
  double t;
  PlanePoint p;
};

// Cohen-Sutherland region code.
int outcode(const PlanePoint& p, const Viewport& v) {
  int code = 0;
  if (p.x() < v.xmin) code |= 1;
  if (p.x() > v.xmax) code |= 2;
  if (p.y() < v.ymin) code |= 4;
  if (p.y() > v.ymax) code |= 8;
  return code;
}

class BranchClipper {
 public:
  BranchClipper(const AnalyzedFunction& f, const AxesConfig& axes, const Viewport& view, double x_offset)
      : f_(f), axes_(axes), view_(view), offset_(x_offset) {}

  std::optional<PlanePoint> at(double t) const {
    try {
      auto p = affine(focal_point(f_, t, axes_));
      if (p) p->x() += offset_;
      return p;
    } catch (const DomainError&) {
      return std::nullopt;
    }
  }

  void run(const std::vector<CurvePoint>& pts) {
    if (pts.empty()) return;
    if (view_.contains(pts.front().p)) current_.push_back(pts.front().p);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) step(pts[i], pts[i + 1], 0);
    flush();
  }

  std::vector<Polyline> take() { return std::move(out_); }

 private:
  void flush() {
    if (current_.size() >= 2) out_.push_back(std::move(current_));
    current_.clear();
  }

  // Last point on the curve between an inside and an outside parameter.
  PlanePoint boundary(CurvePoint inside, double outside_t) const {
    double lo = inside.t, hi = outside_t;
    PlanePoint best = inside.p;
    for (int i = 0; i < 60; ++i) {
      const double mid = 0.5 * (lo + hi);
      auto p = at(mid);
      if (p && view_.contains(*p)) {
        lo = mid;
        best = *p;
      } else {
        hi = mid;
      }
    }
    return best;
  }

  void step(const CurvePoint& a, const CurvePoint& b, int depth) {
    const bool a_in = view_.contains(a.p), b_in = view_.contains(b.p);
    if (a_in && b_in) {
      current_.push_back(b.p);
    } else if (a_in) {
      current_.push_back(boundary(a, b.t));
      flush();
    } else if (b_in) {
      flush();
      current_.push_back(boundary(b, a.t));
      current_.push_back(b.p);
    } else if ((outcode(a.p, view_) & outcode(b.p, view_)) == 0 && depth < 3) {
      // Both outside but the chord crosses the viewport: look between them.
      constexpr int kPieces = 8;
      std::vector<CurvePoint> finer{a};
      for (int k = 1; k < kPieces; ++k) {
        const double t = a.t + (b.t - a.t) * k / kPieces;
        if (auto p = at(t)) finer.push_back({t, *p});
      }
      finer.push_back(b);
      for (std::size_t i = 0; i + 1 < finer.size(); ++i) step(finer[i], finer[i + 1], depth + 1);
    }
  }

  const AnalyzedFunction& f_;
  AxesConfig axes_;
  Viewport view_;
  double offset_;
  Polyline current_;
  std::vector<Polyline> out_;
};

bool is_linear(const AnalyzedFunction& f) { return f.second_derivative().is_number(0); }

std::optional<double> second_or_none(const AnalyzedFunction& f, double t) {
  try {
    return f.second(t);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

double bisect_inflection(const AnalyzedFunction& f, double lo, double hi) {
  const auto s_lo = second_or_none(f, lo);
  for (int i = 0; i < 80 && hi - lo > 1e-12; ++i) {
    const double mid = 0.5 * (lo + hi);
    const auto s = second_or_none(f, mid);
    if (!s || !s_lo) break;
    if (*s == 0) return mid;
    ((*s < 0) == (*s_lo < 0) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<Polyline> focal_branches(const AnalyzedFunction& f, const std::vector<FocalSample>& samples,
                                     const AxesConfig& axes, const Viewport& view, double x_offset) {
  BranchClipper clipper(f, axes, view, x_offset);
  std::vector<CurvePoint> run;
  auto end_run = [&] {
    clipper.run(run);
    run.clear();
  };
  const FocalSample* prev = nullptr;
  for (const auto& s : samples) {
    if (s.gap_before) end_run();
    if (s.at_infinity || !s.affine) {
      end_run();
      prev = nullptr;
      continue;
    }
    if (prev && !s.gap_before) {
      if ((prev->point.z() < 0) != (s.point.z() < 0)) {
        end_run();
      } else if (prev->near_cusp && s.near_cusp) {
        const auto s0 = second_or_none(f, prev->t), s1 = second_or_none(f, s.t);
        if (s0 && s1 && *s0 * *s1 < 0) {
          const double tc = bisect_inflection(f, prev->t, s.t);
          if (auto p = clipper.at(tc)) {
            run.push_back({tc, *p});
            end_run();
            run.push_back({tc, *p});
          }
        }
      }
    }
    run.push_back({s.t, *s.affine + PlanePoint(x_offset, 0)});
    prev = &s;
  }
  end_run();
  return clipper.take();
}

Scene build_scene(const AnalyzedFunction& f, const RenderConfig& cfg, const AnalyzedFunction* g) {
  validate(cfg);
  const double w = cfg.delta;
  const AxesConfig axes{w};
  Scene s;
  s.delta = w;
  s.viewport = cfg.viewport;
  s.extend_lines = cfg.extend_lines;
  s.axes = g ? std::vector<double>{0, w, 2 * w} : std::vector<double>{0, w};

  auto eval = [](const AnalyzedFunction& h, double x) -> std::optional<double> {
    try {
      return h.value(x);
    } catch (const DomainError&) {
      return std::nullopt;
    }
  };

  if (cfg.show_arrows) {
    for (int i = 0; i < cfg.arrow_count; ++i) {
      const double x = cfg.arrow_min + (cfg.arrow_max - cfg.arrow_min) * i / (cfg.arrow_count - 1);
      auto fx = eval(f, x);
      if (!fx) continue;
      s.arrows.push_back({{0, x}, {w, *fx}});
      if (g)
        if (auto gfx = eval(*g, *fx)) s.arrows.push_back({{w, *fx}, {2 * w, *gfx}});
    }
  }

  struct Chart {
    const AnalyzedFunction* fn;
    AxesConfig axes;
    double offset;
  };
  std::optional<AnalyzedFunction> composite;
  std::vector<Chart> charts{{&f, axes, 0}};
  if (g) {
    composite.emplace(substitute(g->expr(), f.expr()));
    charts.push_back({g, axes, w});
    charts.push_back({&*composite, AxesConfig{2 * w}, 0});
  }

  bool any_defined = false;
  for (const auto& chart : charts) {
    if (is_linear(*chart.fn)) {
      try {
        if (auto p = affine(focal_point(*chart.fn, 0, chart.axes))) s.foci.push_back(*p + PlanePoint(chart.offset, 0));
        any_defined = true;
      } catch (const DomainError&) {
      }
      continue;
    }
    if (!cfg.show_focal && !cfg.show_cusps) {
      any_defined = true;
      continue;
    }
    std::vector<FocalSample> samples;
    try {
      samples = sample_focal_curve(*chart.fn, cfg.focal_min, cfg.focal_max, cfg.focal_sample_count, chart.axes);
      any_defined = true;
    } catch (const EmptyRange&) {
      continue;
    }
    if (cfg.show_focal) {
      auto branches = focal_branches(*chart.fn, samples, chart.axes, cfg.viewport, chart.offset);
      for (auto& b : branches) s.focal_branches.push_back(std::move(b));
    }
    if (cfg.show_cusps) {
      for (const auto& c : detect_cusps(*chart.fn, cfg.focal_min, cfg.focal_max, chart.axes)) {
        if (!c.point) continue;
        const PlanePoint p = *c.point + PlanePoint(chart.offset, 0);
        if (cfg.viewport.contains(p)) s.cusps.push_back(p);
      }
    }
  }
  if (!any_defined) throw EmptyRange("no focal point is defined on the range");

  if (cfg.probe_x0) {
    const ProjectivePointd p = focal_point(f, *cfg.probe_x0, axes);
    ProbeReadout probe{*cfg.probe_x0, affine(p), 1.0};
    if (probe.focus) probe.fprime = derivative_from_focus(probe.focus->x(), axes);
    s.probe = probe;
  }

  if (cfg.show_implicit && !g) {
    if (auto rf = to_rational_function(f.expr()); rf && !is_linear(f)) {
      try {
        s.implicit = describe(implicit_equation(f.expr()));
      } catch (const Error&) {
      }
    }
  }

  const double top = cfg.viewport.ymax;
  s.labels.push_back({{0, top}, "x"});
  s.labels.push_back({{w, top}, "f(x)"});
  if (g) s.labels.push_back({{2 * w, top}, "g(f(x))"});
  return s;
}

// ---------------------------------------------------------------------------
// SVG

namespace {

std::string num6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  std::string s(buf);
  return s == "-0" ? "0" : s;
}

std::string escape_xml(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class SvgWriter {
 public:
  explicit SvgWriter(const Viewport& v) : v_(v) {
    width_ = 800;
    height_ = width_ * (v.ymax - v.ymin) / (v.xmax - v.xmin);
  }

  double sy(double y) const { return (v_.ymax - y) / (v_.ymax - v_.ymin) * height_; }
  std::string px(const PlanePoint& p) const { return num6(sx(p.x())) + "," + num6(sy(p.y())); }
  std::string sx_str(double x) const { return num6(sx(x)); }
  std::string sy_str(double y) const { return num6(sy(y)); }
  double width() const { return width_; }
  double height() const { return height_; }

  std::string line(const PlanePoint& a, const PlanePoint& b, const char* cls, const char* extra = "") const {
    return "<line class=\"" + std::string(cls) + "\" x1=\"" + sx_str(a.x()) + "\" y1=\"" + sy_str(a.y()) +
           "\" x2=\"" + sx_str(b.x()) + "\" y2=\"" + sy_str(b.y()) + "\"" + extra + "/>\n";
  }

  std::string circle(const PlanePoint& p, double r, const char* cls) const {
    return "<circle class=\"" + std::string(cls) + "\" cx=\"" + sx_str(p.x()) + "\" cy=\"" + sy_str(p.y()) +
           "\" r=\"" + num6(r) + "\"/>\n";
  }

 private:
  double sx(double x) const { return (x - v_.xmin) / (v_.xmax - v_.xmin) * width_; }

  Viewport v_;
  double width_, height_;
};

// Portion of the infinite line through a and b inside the viewport.
std::optional<Segment> clip_line(const PlanePoint& a, const PlanePoint& b, const Viewport& v) {
  const PlanePoint d = b - a;
  double lo = -INFINITY, hi = INFINITY;
  const double p[] = {-d.x(), d.x(), -d.y(), d.y()};
  const double q[] = {a.x() - v.xmin, v.xmax - a.x(), a.y() - v.ymin, v.ymax - a.y()};
  for (int i = 0; i < 4; ++i) {
    if (p[i] == 0) {
      if (q[i] < 0) return std::nullopt;
      continue;
    }
    const double r = q[i] / p[i];
    if (p[i] < 0)
      lo = std::max(lo, r);
    else
      hi = std::min(hi, r);
  }
  if (!(lo < hi)) return std::nullopt;
  return Segment{a + lo * d, a + hi * d};
}

}  // namespace

std::string scene_to_svg(const Scene& s) {
  const SvgWriter w(s.viewport);
  const Viewport& v = s.viewport;
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num6(w.width()) + "\" height=\"" +
         num6(w.height()) + "\" viewBox=\"0 0 " + num6(w.width()) + " " + num6(w.height()) + "\">\n";
  out +=
      "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" orient=\"auto\">"
      "<path d=\"M0,0 L8,4 L0,8 z\" fill=\"#1f4e9c\"/></marker></defs>\n";
  out +=
      "<style>.axis{stroke:#000;stroke-width:1.5}.extension{stroke:#bbb;stroke-width:0.5}"
      ".arrow{stroke:#1f4e9c;stroke-width:1}.focal{fill:none;stroke:#c0392b;stroke-width:2}"
      ".cusp{fill:#27ae60}.focus{fill:#8e44ad}.guide{stroke:#8e44ad;stroke-dasharray:4 3}"
      ".probe{fill:#e67e22;stroke:#e67e22}.label,.caption{font:14px sans-serif}</style>\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";

  for (double x : s.axes) out += w.line({x, v.ymin}, {x, v.ymax}, "axis");
  if (s.extend_lines)
    for (const auto& a : s.arrows)
      if (auto seg = clip_line(a.from, a.to, v)) out += w.line(seg->from, seg->to, "extension");
  for (const auto& a : s.arrows) out += w.line(a.from, a.to, "arrow", " marker-end=\"url(#head)\"");
  for (const auto& branch : s.focal_branches) {
    out += "<polyline class=\"focal\" points=\"";
    for (std::size_t i = 0; i < branch.size(); ++i) out += (i ? " " : "") + w.px(branch[i]);
    out += "\"/>\n";
  }
  if (s.foci.size() == 3)
    if (auto seg = clip_line(s.foci[0], s.foci[2], v)) out += w.line(seg->from, seg->to, "guide");
  for (const auto& p : s.foci) out += w.circle(p, 5, "focus");
  for (const auto& p : s.cusps) out += w.circle(p, 4, "cusp");
  if (s.probe) {
    if (s.probe->focus) out += w.circle(*s.probe->focus, 5, "probe");
    out += "<text class=\"probe\" x=\"10\" y=\"" + num6(w.height() - 30) + "\">x0 = " + num6(s.probe->x0) +
           ", f'(x0) = " + num6(s.probe->fprime) + "</text>\n";
  }
  for (const auto& l : s.labels)
    out += "<text class=\"label\" x=\"" + w.sx_str(l.at.x()) + "\" y=\"" + num6(w.sy(l.at.y()) + 14) +
           "\" text-anchor=\"middle\">" + escape_xml(l.text) + "</text>\n";
  if (s.implicit)
    out += "<text class=\"caption\" x=\"10\" y=\"" + num6(w.height() - 10) + "\">" + escape_xml(*s.implicit) +
           "</text>\n";
  out += "</svg>\n";
  return out;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::json point_json(const PlanePoint& p) { return nlohmann::json::array({p.x(), p.y()}); }

PlanePoint point_from(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("point must be [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

nlohmann::json scene_to_json_value(const Scene& s) {
  using nlohmann::json;
  json arrows = json::array();
  for (const auto& a : s.arrows) arrows.push_back({{"from", point_json(a.from)}, {"to", point_json(a.to)}});
  json branches = json::array();
  for (const auto& b : s.focal_branches) {
    json poly = json::array();
    for (const auto& p : b) poly.push_back(point_json(p));
    branches.push_back(std::move(poly));
  }
  json cusps = json::array(), foci = json::array(), labels = json::array();
  for (const auto& p : s.cusps) cusps.push_back(point_json(p));
  for (const auto& p : s.foci) foci.push_back(point_json(p));
  for (const auto& l : s.labels) labels.push_back({{"at", point_json(l.at)}, {"text", l.text}});
  json probe = nullptr;
  if (s.probe)
    probe = {{"x0", s.probe->x0},
             {"focus", s.probe->focus ? point_json(*s.probe->focus) : json(nullptr)},
             {"fprime", s.probe->fprime}};
  return {{"delta", s.delta},
          {"axes", s.axes},
          {"arrows", std::move(arrows)},
          {"focal_branches", std::move(branches)},
          {"cusps", std::move(cusps)},
          {"probe", std::move(probe)},
          {"foci", std::move(foci)},
          {"implicit", s.implicit ? json(*s.implicit) : json(nullptr)},
          {"viewport", {{"xmin", s.viewport.xmin}, {"xmax", s.viewport.xmax}, {"ymin", s.viewport.ymin},
                        {"ymax", s.viewport.ymax}}},
          {"labels", std::move(labels)},
          {"extend_lines", s.extend_lines}};
}

std::string scene_to_json(const Scene& s) { return scene_to_json_value(s).dump(); }

Scene scene_from_json(const std::string& text) try {
  const auto j = nlohmann::json::parse(text);
  Scene s;
  s.delta = j.at("delta").get<double>();
  s.axes = j.at("axes").get<std::vector<double>>();
  for (const auto& a : j.at("arrows")) s.arrows.push_back({point_from(a.at("from")), point_from(a.at("to"))});
  for (const auto& b : j.at("focal_branches")) {
    Polyline poly;
    for (const auto& p : b) poly.push_back(point_from(p));
    s.focal_branches.push_back(std::move(poly));
  }
  for (const auto& p : j.at("cusps")) s.cusps.push_back(point_from(p));
  for (const auto& p : j.at("foci")) s.foci.push_back(point_from(p));
  if (const auto& p = j.at("probe"); !p.is_null()) {
    ProbeReadout probe{p.at("x0").get<double>(), std::nullopt, p.at("fprime").get<double>()};
    if (!p.at("focus").is_null()) probe.focus = point_from(p.at("focus"));
    s.probe = probe;
  }
  if (!j.at("implicit").is_null()) s.implicit = j.at("implicit").get<std::string>();
  const auto& v = j.at("viewport");
  s.viewport = {v.at("xmin").get<double>(), v.at("xmax").get<double>(), v.at("ymin").get<double>(),
                v.at("ymax").get<double>()};
  if (j.contains("labels"))
    for (const auto& l : j.at("labels")) s.labels.push_back({point_from(l.at("at")), l.at("text").get<std::string>()});
  if (j.contains("extend_lines")) s.extend_lines = j.at("extend_lines").get<bool>();
  return s;
} catch (const nlohmann::json::exception& e) {
  throw std::invalid_argument(std::string("malformed scene: ") + e.what());
}

}  // namespace arrowgraph
