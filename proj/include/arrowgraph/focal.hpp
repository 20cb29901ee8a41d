#pragma once

// Foci, focal curves and dual points of a function drawn as an arrow graph
// between the input axis x = 0 and the output axis x = delta.

#include <optional>
#include <vector>

#include "arrowgraph/expr.hpp"
#include "arrowgraph/projective.hpp"

namespace arrowgraph {

struct AxesConfig {
  double delta = 1.0;
};

/// Throws DomainError unless delta is finite and positive.
void validate(const AxesConfig& cfg);

struct LinearParams {
  double a = 0;
  double b = 0;
};

/// f together with its first two symbolic derivatives.
class AnalyzedFunction {
 public:
  explicit AnalyzedFunction(Expr f);
  static AnalyzedFunction parse(std::string_view text) { return AnalyzedFunction(arrowgraph::parse(text)); }

  struct Jet {
    double value, slope, second;
  };

  const Expr& expr() const { return f_; }
  const Expr& derivative() const { return df_; }
  const Expr& second_derivative() const { return d2f_; }

  double value(double t) const { return evaluate(f_, t); }
  double slope(double t) const { return evaluate(df_, t); }
  double second(double t) const { return evaluate(d2f_, t); }
  /// Throws DomainError if any of f, f', f'' is undefined at t.
  Jet jet(double t) const { return {value(t), slope(t), second(t)}; }

 private:
  Expr f_, df_, d2f_;
};

/// |1 - f'| at or below this is a focus at infinity.
inline constexpr double kInfinityTolerance = 1e-9;

ProjectivePointd linear_focus(const LinearParams& p, const AxesConfig& cfg = {});

/// (delta : f - t f' : 1 - f'). Throws DomainError.
ProjectivePointd focal_point(const AnalyzedFunction& f, double t, const AxesConfig& cfg = {});

/// f''/(1 - f')^2 (delta, f - t); nullopt when f'' = 0.
/// Throws SingularParameter when f' = 1, DomainError off the domain.
std::optional<Direction> focal_tangent(const AnalyzedFunction& f, double t, const AxesConfig& cfg = {});

/// f' = 1 - delta/x. Throws InvalidFocus for x = 0.
double derivative_from_focus(double x_coord, const AxesConfig& cfg = {});

/// (f' : -1 : f - t f'), the tangent line y = f' x + (f - t f') as a point.
ProjectivePointd dual_point(const AnalyzedFunction& f, double t);

struct FocalSample {
  double t = 0;
  ProjectivePointd point = ProjectivePointd::Zero();
  std::optional<PlanePoint> affine;
  std::optional<Direction> tangent;
  bool at_infinity = false;
  /// f'' vanishes here or changes sign before the next sample.
  bool near_cusp = false;
  /// At least one parameter before this one failed to evaluate.
  bool gap_before = false;
};

/// n uniform parameters on [t_min, t_max]; undefined parameters are dropped
/// and mark the next kept sample with gap_before. Throws EmptyRange.
std::vector<FocalSample> sample_focal_curve(const AnalyzedFunction& f, double t_min, double t_max, int n,
                                            const AxesConfig& cfg = {});

struct Cusp {
  double t;
  ProjectivePointd projective;
  /// Absent when the inflection has slope 1.
  std::optional<PlanePoint> point;
};

/// Sign changes of f'' on a grid, refined by bisection to 1e-10.
std::vector<Cusp> detect_cusps(const AnalyzedFunction& f, double t_min, double t_max, const AxesConfig& cfg = {},
                               int grid = 2048);

}  // namespace arrowgraph
