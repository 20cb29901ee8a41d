#pragma once

// Scenes: arrow graph, focal branches, cusps and foci, with SVG and JSON output.

#include <optional>
#include <string>
#include <vector>

#include "arrowgraph/focal.hpp"
#include "json.hpp"

namespace arrowgraph {

struct Viewport {
  double xmin = -2, xmax = 3, ymin = -4, ymax = 4;
  bool contains(const PlanePoint& p) const {
    return p.x() >= xmin && p.x() <= xmax && p.y() >= ymin && p.y() <= ymax;
  }
  friend bool operator==(const Viewport&, const Viewport&) = default;
};

struct RenderConfig {
  int arrow_count = 41;
  double arrow_min = -2, arrow_max = 2;
  int focal_sample_count = 801;
  double focal_min = -2, focal_max = 2;
  double delta = 1;
  Viewport viewport;
  bool show_arrows = true;
  bool show_focal = true;
  bool show_cusps = true;
  bool show_implicit = true;
  /// Draw each arrow's full line across the viewport.
  bool extend_lines = true;
  std::optional<double> probe_x0;
};

/// Throws DomainError.
void validate(const RenderConfig& cfg);

struct Segment {
  PlanePoint from, to;
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct ProbeReadout {
  double x0 = 0;
  std::optional<PlanePoint> focus;
  double fprime = 0;
  friend bool operator==(const ProbeReadout&, const ProbeReadout&) = default;
};

struct Label {
  PlanePoint at;
  std::string text;
  friend bool operator==(const Label&, const Label&) = default;
};

using Polyline = std::vector<PlanePoint>;

struct Scene {
  double delta = 1;
  std::vector<double> axes;
  std::vector<Segment> arrows;
  std::vector<Polyline> focal_branches;
  std::vector<PlanePoint> cusps;
  std::optional<ProbeReadout> probe;
  std::vector<PlanePoint> foci;
  std::optional<std::string> implicit;
  std::vector<Label> labels;
  Viewport viewport;
  bool extend_lines = true;
  friend bool operator==(const Scene&, const Scene&) = default;
};

/// Arrow graph of f, or of g after f on three axes when g is given.
/// Throws EmptyRange when no focal sample is defined, DomainError on a bad config.
Scene build_scene(const AnalyzedFunction& f, const RenderConfig& cfg, const AnalyzedFunction* g = nullptr);

/// Splits sampled focal points into branches (at infinity, domain gaps,
/// cusps) and clips them to the viewport. Boundary points are found by
/// bisection on t so they stay on the curve.
std::vector<Polyline> focal_branches(const AnalyzedFunction& f, const std::vector<FocalSample>& samples,
                                     const AxesConfig& axes, const Viewport& view, double x_offset = 0);

std::string scene_to_svg(const Scene& s);
nlohmann::json scene_to_json_value(const Scene& s);
std::string scene_to_json(const Scene& s);
/// Throws std::invalid_argument.
Scene scene_from_json(const std::string& text);

}  // namespace arrowgraph
