#include "arrowgraph/focal.hpp"

#include <cmath>

#include "arrowgraph/errors.hpp"

namespace arrowgraph {

void validate(const AxesConfig& cfg) {
  if (!(std::isfinite(cfg.delta) && cfg.delta > 0)) throw DomainError("delta must be positive");
}

AnalyzedFunction::AnalyzedFunction(Expr f)
    : f_(std::move(f)), df_(differentiate(f_)), d2f_(differentiate(df_)) {}

ProjectivePointd linear_focus(const LinearParams& p, const AxesConfig& cfg) {
  validate(cfg);
  return {cfg.delta, p.b, 1 - p.a};
}

ProjectivePointd focal_point(const AnalyzedFunction& f, double t, const AxesConfig& cfg) {
  validate(cfg);
  const double v = f.value(t), s = f.slope(t);
  return {cfg.delta, v - t * s, 1 - s};
}

std::optional<Direction> focal_tangent(const AnalyzedFunction& f, double t, const AxesConfig& cfg) {
  validate(cfg);
  const auto j = f.jet(t);
  const double w = 1 - j.slope;
  if (std::abs(w) <= kInfinityTolerance) throw SingularParameter("f'(t) = 1: focus at infinity");
  if (j.second == 0) return std::nullopt;
  return Direction(cfg.delta, j.value - t) * (j.second / (w * w));
}

double derivative_from_focus(double x_coord, const AxesConfig& cfg) {
  validate(cfg);
  if (x_coord == 0) throw InvalidFocus("focus on the input axis has no derivative reading");
  return 1 - cfg.delta / x_coord;
}

ProjectivePointd dual_point(const AnalyzedFunction& f, double t) {
  const double v = f.value(t), s = f.slope(t);
  return {s, -1, v - t * s};
}

std::vector<FocalSample> sample_focal_curve(const AnalyzedFunction& f, double t_min, double t_max, int n,
                                            const AxesConfig& cfg) {
  validate(cfg);
  if (n < 2 || !(t_min < t_max)) throw EmptyRange("need n >= 2 and t_min < t_max");

  std::vector<FocalSample> out;
  std::vector<double> second;
  out.reserve(n);
  bool gap = false;
  for (int i = 0; i < n; ++i) {
    const double t = i == n - 1 ? t_max : t_min + (t_max - t_min) * i / (n - 1);
    AnalyzedFunction::Jet j;
    try {
      j = f.jet(t);
    } catch (const DomainError&) {
      gap = true;
      continue;
    }
    FocalSample s;
    s.t = t;
    s.point = {cfg.delta, j.value - t * j.slope, 1 - j.slope};
    s.gap_before = gap && !out.empty();
    gap = false;
    const double w = 1 - j.slope;
    if (std::abs(w) <= kInfinityTolerance) {
      s.at_infinity = true;
    } else {
      s.affine = PlanePoint(cfg.delta / w, (j.value - t * j.slope) / w);
      if (j.second != 0) s.tangent = Direction(cfg.delta, j.value - t) * (j.second / (w * w));
    }
    s.near_cusp = j.second == 0;
    second.push_back(j.second);
    out.push_back(std::move(s));
  }
  if (out.empty()) throw EmptyRange("function undefined on the whole sample range");

  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    if (out[i + 1].gap_before) continue;
    if (second[i] * second[i + 1] < 0) out[i].near_cusp = out[i + 1].near_cusp = true;
  }
  return out;
}

std::vector<Cusp> detect_cusps(const AnalyzedFunction& f, double t_min, double t_max, const AxesConfig& cfg,
                               int grid) {
  validate(cfg);
  std::vector<Cusp> out;
  if (!(t_min < t_max) || grid < 1) return out;

  auto second = [&](double t) -> std::optional<double> {
    try {
      return f.second(t);
    } catch (const DomainError&) {
      return std::nullopt;
    }
  };
  auto record = [&](double t) {
    try {
      ProjectivePointd p = focal_point(f, t, cfg);
      out.push_back({t, p, affine(p)});
    } catch (const DomainError&) {
    }
  };

  // Last grid point with a nonzero f''; reset across domain gaps.
  std::optional<std::pair<double, double>> last;
  for (int i = 0; i <= grid; ++i) {
    const double t = i == grid ? t_max : t_min + (t_max - t_min) * i / grid;
    auto v = second(t);
    if (!v) {
      last.reset();
      continue;
    }
    if (*v == 0) continue;
    if (last && (last->second < 0) != (*v < 0)) {
      double lo = last->first, hi = t;
      const bool lo_negative = last->second < 0;
      bool exact = false;
      while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        auto m = second(mid);
        if (!m) break;
        if (*m == 0) {
          lo = hi = mid;
          exact = true;
          break;
        }
        ((*m < 0) == lo_negative ? lo : hi) = mid;
      }
      record(exact ? lo : 0.5 * (lo + hi));
    }
    last = {t, *v};
  }
  return out;
}

}  // namespace arrowgraph
