#pragma once

// Projective triples (X : Y : Z) on top of Eigen column vectors.

#include <Eigen/Dense>
#include <optional>

namespace arrowgraph {

template <typename Scalar>
using ProjectivePoint = Eigen::Matrix<Scalar, 3, 1>;
using ProjectivePointd = ProjectivePoint<double>;
using PlanePoint = Eigen::Vector2d;
using Direction = Eigen::Vector2d;

inline constexpr double kProjectiveTolerance = 1e-9;

template <typename Derived>
auto homogenize(const Eigen::MatrixBase<Derived>& p) {
  using Scalar = typename Derived::Scalar;
  return ProjectivePoint<Scalar>(p(0), p(1), Scalar(1));
}

template <typename A, typename B>
bool projectively_equal(const Eigen::MatrixBase<A>& u, const Eigen::MatrixBase<B>& v,
                        double tol = kProjectiveTolerance) {
  const double nu = u.norm(), nv = v.norm();
  if (nu == 0 || nv == 0) return false;
  return u.cross(v).norm() <= tol * nu * nv;
}

template <typename Derived>
bool is_at_infinity(const Eigen::MatrixBase<Derived>& p, double tol = kProjectiveTolerance) {
  return std::abs(p(2)) <= tol * p.norm();
}

/// (X/Z, Y/Z), or nullopt for a point at infinity.
template <typename Derived>
std::optional<PlanePoint> affine(const Eigen::MatrixBase<Derived>& p, double tol = kProjectiveTolerance) {
  if (is_at_infinity(p, tol)) return std::nullopt;
  return PlanePoint(p(0) / p(2), p(1) / p(2));
}

/// (X : Y : Z) -> (Y : -Z : X + Y); sends dual points of a graph to its foci.
template <typename Scalar = double>
Eigen::Matrix<Scalar, 3, 3> duality_matrix() {
  Eigen::Matrix<Scalar, 3, 3> m;
  m << 0, 1, 0,
       0, 0, -1,
       1, 1, 0;
  return m;
}

template <typename Scalar = double>
Eigen::Matrix<Scalar, 3, 3> inverse_duality_matrix() {
  Eigen::Matrix<Scalar, 3, 3> m;
  m << -1, 0, 1,
        1, 0, 0,
        0, -1, 0;
  return m;
}

template <typename Derived>
auto duality_map(const Eigen::MatrixBase<Derived>& p) {
  using Scalar = typename Derived::Scalar;
  return ProjectivePoint<Scalar>(duality_matrix<Scalar>() * p);
}

template <typename Derived>
auto inverse_duality_map(const Eigen::MatrixBase<Derived>& p) {
  using Scalar = typename Derived::Scalar;
  return ProjectivePoint<Scalar>(inverse_duality_matrix<Scalar>() * p);
}

/// det of the three triples after scaling each row to unit length.
inline double collinearity_determinant(const ProjectivePointd& p, const ProjectivePointd& q,
                                       const ProjectivePointd& r) {
  Eigen::Matrix3d m;
  m.row(0) = p.normalized().transpose();
  m.row(1) = q.normalized().transpose();
  m.row(2) = r.normalized().transpose();
  return m.determinant();
}

}  // namespace arrowgraph
