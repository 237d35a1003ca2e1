#pragma once

// Continuous piecewise-affine maps with one switching plane x1 = 0, their
// one-sided Jacobians and the direction-dependent tangent cocycle.
//
// Everything here is templated on the scalar type so the same code runs in
// double for experiments and in exact rational arithmetic for checks that
// must hold without rounding.

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace bcb {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vec = Vector<double>;
using Mat = Matrix<double>;

enum class Side { Left, Right, Switching };

/// f(x) = A_L x + b mu for x1 <= 0, A_R x + b mu for x1 >= 0.
///
/// Continuity on x1 = 0 requires A_L and A_R to share columns 2..d; the
/// constructor enforces this exactly.
template <typename Scalar = double>
class PwaMap {
 public:
  using MatrixType = Matrix<Scalar>;
  using VectorType = Vector<Scalar>;

  PwaMap(MatrixType left, MatrixType right, VectorType offset, Scalar mu)
      : left_(std::move(left)), right_(std::move(right)), offset_(std::move(offset)), mu_(std::move(mu)) {
    const Eigen::Index d = left_.rows();
    if (d < 1) throw std::invalid_argument("PwaMap: dimension must be at least 1");
    if (left_.cols() != d || right_.rows() != d || right_.cols() != d)
      throw std::invalid_argument("PwaMap: A_L and A_R must both be d x d");
    if (offset_.size() != d) throw std::invalid_argument("PwaMap: b must have length d");
    for (Eigen::Index j = 1; j < d; ++j)
      for (Eigen::Index i = 0; i < d; ++i)
        if (!(left_(i, j) == right_(i, j)))
          throw std::invalid_argument("PwaMap: A_L and A_R may differ only in their first column");
  }

  /// Scalar map a_L x (x <= 0), a_R x (x >= 0), plus mu.
  static PwaMap scalar(Scalar a_left, Scalar a_right, Scalar mu = Scalar(0)) {
    MatrixType l(1, 1), r(1, 1);
    l(0, 0) = a_left;
    r(0, 0) = a_right;
    VectorType b(1);
    b(0) = Scalar(1);
    return PwaMap(std::move(l), std::move(r), std::move(b), std::move(mu));
  }

  Eigen::Index dim() const { return left_.rows(); }
  const MatrixType& left() const { return left_; }
  const MatrixType& right() const { return right_; }
  const VectorType& offset() const { return offset_; }
  const Scalar& mu() const { return mu_; }

  PwaMap with_mu(Scalar mu) const { return PwaMap(left_, right_, offset_, std::move(mu)); }

  template <typename Other>
  PwaMap<Other> cast() const {
    return PwaMap<Other>(left_.template cast<Other>(), right_.template cast<Other>(),
                         offset_.template cast<Other>(), Other(mu_));
  }

 private:
  MatrixType left_;
  MatrixType right_;
  VectorType offset_;
  Scalar mu_;
};

/// Border-collision normal form parameters.
struct BcnfParams {
  double tau_L = 0.0;
  double delta_L = 0.0;
  double tau_R = 0.0;
  double delta_R = 0.0;
  double mu = 0.0;
};

/// A_{L,R} = [[tau, 1], [-delta, 0]], b = (1, 0).
template <typename Scalar = double>
PwaMap<Scalar> bcnf_map(const BcnfParams& p) {
  Matrix<Scalar> l(2, 2), r(2, 2);
  l << Scalar(p.tau_L), Scalar(1), Scalar(-p.delta_L), Scalar(0);
  r << Scalar(p.tau_R), Scalar(1), Scalar(-p.delta_R), Scalar(0);
  Vector<Scalar> b(2);
  b << Scalar(1), Scalar(0);
  return PwaMap<Scalar>(std::move(l), std::move(r), std::move(b), Scalar(p.mu));
}

/// Point and tangent vector: the state of the skew map h(x, v) = (f(x), C(x, v) v).
template <typename Scalar = double>
struct TangentState {
  Vector<Scalar> x;
  Vector<Scalar> v;
};

namespace detail {
template <typename Scalar, typename Derived>
void check_dim(const PwaMap<Scalar>& map, const Eigen::MatrixBase<Derived>& x, const char* what) {
  if (x.size() != map.dim())
    throw std::invalid_argument(std::string(what) + ": expected length " + std::to_string(map.dim()) +
                                ", got " + std::to_string(x.size()));
}
}  // namespace detail

/// Strict trichotomy on x1; no epsilon band.
template <typename Derived>
Side side_of(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  if (x(0) < Scalar(0)) return Side::Left;
  if (x(0) > Scalar(0)) return Side::Right;
  return Side::Switching;
}

template <typename Scalar, typename Derived>
Vector<Scalar> eval_map(const PwaMap<Scalar>& map, const Eigen::MatrixBase<Derived>& x) {
  detail::check_dim(map, x, "eval_map");
  const auto& a = x(0) <= Scalar(0) ? map.left() : map.right();
  return a * x + map.offset() * map.mu();
}

/// C(x, v): A_L when x1 < 0, or x1 = 0 and v1 < 0; A_R otherwise.
template <typename Scalar, typename DerivedX, typename DerivedV>
const Matrix<Scalar>& tangent_matrix(const PwaMap<Scalar>& map, const Eigen::MatrixBase<DerivedX>& x,
                                     const Eigen::MatrixBase<DerivedV>& v) {
  detail::check_dim(map, x, "tangent_matrix(x)");
  detail::check_dim(map, v, "tangent_matrix(v)");
  if (x(0) < Scalar(0)) return map.left();
  if (x(0) > Scalar(0)) return map.right();
  return v(0) < Scalar(0) ? map.left() : map.right();
}

/// One step of the skew map. No renormalization of v.
template <typename Scalar>
TangentState<Scalar> advance_tangent(const PwaMap<Scalar>& map, const TangentState<Scalar>& s) {
  const auto& c = tangent_matrix(map, s.x, s.v);
  return {eval_map(map, s.x), c * s.v};
}

template <typename Scalar>
TangentState<Scalar> advance_tangent(const PwaMap<Scalar>& map, const TangentState<Scalar>& s, long n) {
  TangentState<Scalar> out = s;
  for (long i = 0; i < n; ++i) out = advance_tangent(map, out);
  return out;
}

/// C_n(x, v) = C(h^{n-1}(x, v)) ... C(x, v); the identity for n = 0.
/// Factors are left-multiplied in increasing step order.
template <typename Scalar, typename DerivedX, typename DerivedV>
Matrix<Scalar> cocycle(const PwaMap<Scalar>& map, const Eigen::MatrixBase<DerivedX>& x,
                       const Eigen::MatrixBase<DerivedV>& v, long n) {
  if (n < 0) throw std::invalid_argument("cocycle: n must be non-negative");
  Matrix<Scalar> product = Matrix<Scalar>::Identity(map.dim(), map.dim());
  TangentState<Scalar> s{x, v};
  for (long i = 0; i < n; ++i) {
    const auto& c = tangent_matrix(map, s.x, s.v);
    product = (c * product).eval();
    s = {eval_map(map, s.x), c * s.v};
  }
  return product;
}

template <typename Scalar, typename Derived>
Vector<Scalar> iterate_map(const PwaMap<Scalar>& map, const Eigen::MatrixBase<Derived>& x, long n) {
  Vector<Scalar> y = x;
  for (long i = 0; i < n; ++i) y = eval_map(map, y);
  return y;
}

/// f^n(x + delta v) - f^n(x) - delta C_n(x, v) v.
template <typename Scalar, typename DerivedX, typename DerivedV>
Vector<Scalar> finite_difference_residual(const PwaMap<Scalar>& map, const Eigen::MatrixBase<DerivedX>& x,
                                          const Eigen::MatrixBase<DerivedV>& v, long n, const Scalar& delta) {
  if (!(delta > Scalar(0))) throw std::invalid_argument("finite_difference_check: delta must be positive");
  if (n < 1) throw std::invalid_argument("finite_difference_check: n must be at least 1");
  const Vector<Scalar> base = x;
  const Vector<Scalar> perturbed = base + v * delta;
  const Vector<Scalar> cv = cocycle(map, x, v, n) * v;
  return (iterate_map(map, perturbed, n) - iterate_map(map, base, n)) - cv * delta;
}

/// ||f^n(x + delta v) - f^n(x) - delta C_n(x, v) v|| / delta.
///
/// Zero whenever the perturbed orbit follows the same itinerary as the
/// cocycle; in floating point, zero up to rounding. For non-floating scalars
/// the max-norm is used (no square root), which vanishes exactly when the
/// Euclidean norm does.
template <typename Scalar, typename DerivedX, typename DerivedV>
Scalar finite_difference_check(const PwaMap<Scalar>& map, const Eigen::MatrixBase<DerivedX>& x,
                               const Eigen::MatrixBase<DerivedV>& v, long n, const Scalar& delta) {
  const Vector<Scalar> r = finite_difference_residual(map, x, v, n, delta);
  if constexpr (std::is_floating_point_v<Scalar>) {
    return r.norm() / delta;
  } else {
    return r.template lpNorm<Eigen::Infinity>() / delta;
  }
}

}  // namespace bcb
