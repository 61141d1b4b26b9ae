#pragma once

#include "liemat/core.hpp"

namespace liemat {

/// Sign variant for the first term of the Koszul formula. `standard` solves
/// 2 g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y); `alternate`
/// flips the sign of g([X,Y],Z) and is kept only so the audit catalog can
/// evaluate identities under both conventions.
enum class KoszulSign { standard, alternate };

/// Connection coefficients of a left-invariant metric connection:
/// gamma[i].col(j) holds nabla_{e_i} e_j.
struct ConnectionCoefficients {
  std::vector<Matrix> gamma;

  Eigen::Index dim() const { return static_cast<Eigen::Index>(gamma.size()); }

  /// nabla_x y for constant coordinate vectors.
  Vector nabla(const Vector& x, const Vector& y) const {
    Vector out = Vector::Zero(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i)
      if (x(i) != 0.0) out += x(i) * (gamma[i] * y);
    return out;
  }

  /// Matrix of y -> nabla_x y.
  Matrix derivative_operator(const Vector& x) const {
    Matrix out = Matrix::Zero(x.size(), x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i)
      if (x(i) != 0.0) out += x(i) * gamma[i];
    return out;
  }
};

/// Levi-Civita connection of the left-invariant metric g, solved from the
/// Koszul formula one basis pair at a time.
inline ConnectionCoefficients levi_civita(const LieAlgebra& alg, const InnerProduct& g,
                                          KoszulSign sign = KoszulSign::standard) {
  if (g.dim() != alg.dim()) throw DimensionError("connection: metric dimension mismatch");
  const Eigen::Index n = alg.dim();
  const double first = sign == KoszulSign::standard ? 1.0 : -1.0;
  ConnectionCoefficients conn;
  conn.gamma.assign(n, Matrix::Zero(n, n));
  for (Eigen::Index i = 0; i < n; ++i) {
    Matrix rhs(n, n);  // column j: k -> 2 g(nabla_{e_i} e_j, e_k)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Vector cij = alg.bracket_basis(i, j);
      for (Eigen::Index k = 0; k < n; ++k) {
        rhs(k, j) = 0.5 * (first * g.pair(cij, Vector::Unit(n, k)) -
                           g.pair(alg.bracket_basis(j, k), Vector::Unit(n, i)) +
                           g.pair(alg.bracket_basis(k, i), Vector::Unit(n, j)));
      }
    }
    conn.gamma[i] = g.solve(rhs);
  }
  return conn;
}

/// Max residual of nabla_x y - nabla_y x - [x, y] over basis pairs.
inline double torsion_residual(const ConnectionCoefficients& conn, const LieAlgebra& alg) {
  const Eigen::Index n = alg.dim();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Vector r = conn.gamma[i].col(j) - conn.gamma[j].col(i) - alg.bracket_basis(i, j);
      worst = std::max(worst, r.lpNorm<Eigen::Infinity>());
    }
  return worst;
}

/// Max residual of g(nabla_i e_j, e_k) + g(e_j, nabla_i e_k) over basis triples.
inline double compatibility_residual(const ConnectionCoefficients& conn, const InnerProduct& g) {
  const Eigen::Index n = conn.dim();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Matrix m = g.gram() * conn.gamma[i];
    worst = std::max(worst, (m + m.transpose()).cwiseAbs().maxCoeff());
  }
  return worst;
}

/// R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_{[x,y]} z.
inline Vector curvature(const ConnectionCoefficients& conn, const LieAlgebra& alg,
                        const Vector& x, const Vector& y, const Vector& z) {
  return conn.nabla(x, conn.nabla(y, z)) - conn.nabla(y, conn.nabla(x, z)) -
         conn.nabla(alg.bracket(x, y), z);
}

/// g(R(x,y)z, w).
inline double curvature_4(const ConnectionCoefficients& conn, const LieAlgebra& alg,
                          const InnerProduct& g, const Vector& x, const Vector& y,
                          const Vector& z, const Vector& w) {
  return g.pair(curvature(conn, alg, x, y, z), w);
}

/// Sectional curvature of span{x, y}; errors on a degenerate plane.
inline double sectional(const ConnectionCoefficients& conn, const LieAlgebra& alg,
                        const InnerProduct& g, const Vector& x, const Vector& y) {
  const double den = g.norm2(x) * g.norm2(y) - g.pair(x, y) * g.pair(x, y);
  const double scale = std::max(1.0, g.norm2(x) * g.norm2(y));
  if (den <= kRankTol * scale) throw ValidationError("sectional: degenerate plane");
  return curvature_4(conn, alg, g, x, y, y, x) / den;
}

/// Tangent/normal splitting g = m + m_perp with g-orthonormal frames.
class SubmanifoldSplit {
public:
  SubmanifoldSplit(const InnerProduct& g, const SubspaceBasis& m)
      : m_(m), m_perp_(orthogonal_complement(g, m)), gram_(g.gram()) {
    tan_frame_ = gram_schmidt(m_.matrix(), g);
    norm_frame_ = gram_schmidt(m_perp_.matrix(), g);
    if (tan_frame_.cols() != m_.dim() || norm_frame_.cols() != m_perp_.dim())
      throw ValidationError("submanifold split: frame orthonormalization broke down");
  }

  const SubspaceBasis& tangent_space() const { return m_; }
  const SubspaceBasis& normal_space() const { return m_perp_; }
  /// g-orthonormal frames spanning m and m_perp.
  const Matrix& tangent_frame() const { return tan_frame_; }
  const Matrix& normal_frame() const { return norm_frame_; }

  Vector tangential(const Vector& v) const {
    return tan_frame_ * (tan_frame_.transpose() * (gram_ * v));
  }
  Vector normal(const Vector& v) const {
    return norm_frame_ * (norm_frame_.transpose() * (gram_ * v));
  }

  bool is_tangent(const Vector& v, double tol = kRankTol) const {
    return m_.containment_residual(v) <= tol;
  }
  bool is_normal(const Vector& v, double tol = kRankTol) const {
    return m_perp_.containment_residual(v) <= tol;
  }

private:
  SubspaceBasis m_;
  SubspaceBasis m_perp_;
  Matrix gram_;
  Matrix tan_frame_;
  Matrix norm_frame_;
};

/// Second fundamental form h(x, y) = normal part of nabla_x y; x, y tangent.
inline Vector second_fundamental_form(const ConnectionCoefficients& conn,
                                      const SubmanifoldSplit& split, const Vector& x,
                                      const Vector& y) {
  if (!split.is_tangent(x) || !split.is_tangent(y))
    throw ValidationError("second fundamental form: arguments must be tangent");
  return split.normal(conn.nabla(x, y));
}

struct WeingartenResult {
  Vector value;
  /// Max over tangent frame of |<A_xi x, f> - <h(x, f), xi>|.
  double duality_residual = 0.0;
};

/// Weingarten map A_xi x = -tangential(nabla_x xi), with the duality check
/// <A_xi x, y> = <h(x, y), xi> evaluated over the tangent frame.
inline WeingartenResult weingarten(const ConnectionCoefficients& conn, const InnerProduct& g,
                                   const SubmanifoldSplit& split, const Vector& xi,
                                   const Vector& x) {
  if (!split.is_normal(xi)) throw ValidationError("weingarten: xi must be normal");
  if (!split.is_tangent(x)) throw ValidationError("weingarten: x must be tangent");
  WeingartenResult out;
  out.value = -split.tangential(conn.nabla(x, xi));
  const Matrix& f = split.tangent_frame();
  for (Eigen::Index i = 0; i < f.cols(); ++i) {
    const Vector fi = f.col(i);
    const double lhs = g.pair(out.value, fi);
    const double rhs = g.pair(second_fundamental_form(conn, split, x, fi), xi);
    out.duality_residual = std::max(out.duality_residual, std::abs(lhs - rhs));
  }
  return out;
}

/// Normal connection D_x eta = normal part of nabla_x eta.
inline Vector normal_connection(const ConnectionCoefficients& conn,
                                const SubmanifoldSplit& split, const Vector& x,
                                const Vector& eta) {
  return split.normal(conn.nabla(x, eta));
}

/// (nabla_x h)(y, z) = D_x(h(y,z)) - h(tan nabla_x y, z) - h(y, tan nabla_x z).
inline Vector covariant_derivative_h(const ConnectionCoefficients& conn,
                                     const SubmanifoldSplit& split, const Vector& x,
                                     const Vector& y, const Vector& z) {
  const Vector hyz = second_fundamental_form(conn, split, y, z);
  return normal_connection(conn, split, x, hyz) -
         second_fundamental_form(conn, split, split.tangential(conn.nabla(x, y)), z) -
         second_fundamental_form(conn, split, y, split.tangential(conn.nabla(x, z)));
}

/// Mean curvature (1/dim m) sum_i h(f_i, f_i) over a g-orthonormal tangent
/// frame. `literal_ambient_dim` divides by dim g instead.
inline Vector mean_curvature(const ConnectionCoefficients& conn, const SubmanifoldSplit& split,
                             bool literal_ambient_dim = false) {
  const Matrix& f = split.tangent_frame();
  Vector sum = Vector::Zero(conn.dim());
  for (Eigen::Index i = 0; i < f.cols(); ++i)
    sum += second_fundamental_form(conn, split, f.col(i), f.col(i));
  const double div = literal_ambient_dim ? static_cast<double>(conn.dim())
                                         : static_cast<double>(f.cols());
  if (div == 0.0) throw ValidationError("mean curvature: empty tangent space");
  return sum / div;
}

/// Intrinsic curvature of the tangential connection on a bracket-closed m.
inline Vector intrinsic_curvature(const ConnectionCoefficients& conn, const LieAlgebra& alg,
                                  const SubmanifoldSplit& split, const Vector& x,
                                  const Vector& y, const Vector& z) {
  auto tan_nabla = [&](const Vector& a, const Vector& b) {
    return split.tangential(conn.nabla(a, b));
  };
  const Vector xy = alg.bracket(x, y);
  if (!split.is_tangent(xy, 1e-7))
    throw ValidationError("intrinsic curvature: m is not bracket-closed at the arguments");
  return tan_nabla(x, tan_nabla(y, z)) - tan_nabla(y, tan_nabla(x, z)) - tan_nabla(xy, z);
}

/// Residual of the Gauss equation for tangent x, y, z, w on a subalgebra m:
///   R~(x,y;z,w) = R(x,y;z,w) + <h(x,w),h(y,z)> - <h(x,z),h(y,w)>
/// with R~ intrinsic and R ambient. `swap_labels` evaluates the other
/// arrangement of the h-terms.
inline double gauss_residual(const ConnectionCoefficients& conn, const LieAlgebra& alg,
                             const InnerProduct& g, const SubmanifoldSplit& split,
                             const Vector& x, const Vector& y, const Vector& z,
                             const Vector& w, bool swap_labels = false) {
  const double intrinsic = g.pair(intrinsic_curvature(conn, alg, split, x, y, z), w);
  const double ambient = curvature_4(conn, alg, g, x, y, z, w);
  const double hxw_hyz = g.pair(second_fundamental_form(conn, split, x, w),
                                second_fundamental_form(conn, split, y, z));
  const double hxz_hyw = g.pair(second_fundamental_form(conn, split, x, z),
                                second_fundamental_form(conn, split, y, w));
  const double correction = swap_labels ? hxz_hyw - hxw_hyz : hxw_hyz - hxz_hyw;
  return std::abs(intrinsic - (ambient + correction));
}

/// Residual of nabla_x y + nabla_y x = 2 h(x, y) against the given split
/// (the identity is generally false for x != y; the caller records it).
inline double symmetric_part_residual(const ConnectionCoefficients& conn,
                                      const InnerProduct& g, const SubmanifoldSplit& split,
                                      const Vector& x, const Vector& y) {
  const Vector lhs = conn.nabla(x, y) + conn.nabla(y, x);
  const Vector rhs = 2.0 * second_fundamental_form(conn, split, x, y);
  return g.norm(lhs - rhs);
}

}  // namespace liemat
