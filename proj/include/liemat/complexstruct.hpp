#pragma once

#include "liemat/nilpotent.hpp"

namespace liemat {

/// Orthogonal almost complex structure: J^2 = -Id and g(JX, JY) = g(X, Y).
struct AlmostComplexStructure {
  Matrix j;

  Vector apply(const Vector& v) const { return j * v; }
};

/// Residuals of the two defining conditions; ok iff both hold.
inline Verdict hermitian_check(const InnerProduct& g, const AlmostComplexStructure& ac,
                               double tol = 1e-9) {
  Verdict v;
  const Eigen::Index n = g.dim();
  if (ac.j.rows() != n || ac.j.cols() != n)
    throw DimensionError("complex structure has wrong shape");
  const double square_defect =
      (ac.j * ac.j + Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  const double metric_defect =
      (ac.j.transpose() * g.gram() * ac.j - g.gram()).cwiseAbs().maxCoeff() /
      g.gram().cwiseAbs().maxCoeff();
  v.residual = std::max(square_defect, metric_defect);
  v.ok = v.residual <= tol;
  if (!v.ok)
    v.detail = square_defect > metric_defect ? "square defect" : "compatibility defect";
  return v;
}

/// Orthogonal J pairing consecutive vectors of a g-orthonormal frame.
/// Even dimension required.
inline AlmostComplexStructure canonical_complex_structure(const InnerProduct& g) {
  const Eigen::Index n = g.dim();
  if (n % 2 != 0) throw ValidationError("complex structure needs even dimension");
  const Matrix frame = gram_schmidt(Matrix::Identity(n, n), g);
  if (frame.cols() != n) throw ValidationError("metric frame construction failed");
  Matrix k = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i + 1 < n; i += 2) {
    k(i + 1, i) = 1.0;
    k(i, i + 1) = -1.0;
  }
  // coordinates in the frame are recovered by F^T G, and F (F^T G) = Id
  return AlmostComplexStructure{frame * k * (frame.transpose() * g.gram())};
}

/// Slot-wise lifted structure: (Jbar A)_s = J a_s.
inline MatrixElement lifted_ac(const AlmostComplexStructure& ac, const MatrixElement& a) {
  MatrixElement out = MatrixElement::zero(a.base_dim());
  for (int s = 0; s < 4; ++s) out.slot(s) = ac.apply(a.slot(s));
  return out;
}

/// J applied to the first column only (slots 11 and 21).
inline MatrixElement column_twist(const AlmostComplexStructure& ac, const MatrixElement& a) {
  MatrixElement out = a;
  out.x11 = ac.apply(a.x11);
  out.x21 = ac.apply(a.x21);
  return out;
}

/// J applied to the first row only (slots 11 and 12).
inline MatrixElement row_twist(const AlmostComplexStructure& ac, const MatrixElement& a) {
  MatrixElement out = a;
  out.x11 = ac.apply(a.x11);
  out.x12 = ac.apply(a.x12);
  return out;
}

/// Tangential / normal parts of JX for tangent X.
struct PFParts {
  Vector p;
  Vector f;
};

inline PFParts pf_parts(const SubmanifoldSplit& split, const AlmostComplexStructure& ac,
                        const Vector& x) {
  const Vector jx = ac.apply(x);
  return PFParts{split.tangential(jx), split.normal(jx)};
}

/// Angle between JX and the tangent space, in [0, pi/2].
inline double slant_angle(const InnerProduct& g, const SubmanifoldSplit& split,
                          const AlmostComplexStructure& ac, const Vector& x) {
  if (!split.is_tangent(x)) throw ValidationError("slant angle: vector is not tangent");
  const Vector jx = ac.apply(x);
  const double denom = g.norm(jx);
  if (denom <= kGramSchmidtTol) throw ValidationError("slant angle: zero vector");
  const double c = std::clamp(g.norm(split.tangential(jx)) / denom, 0.0, 1.0);
  return std::acos(c);
}

/// Almost contact structure (phi, xi, eta) with eta stored as a coordinate
/// covector, so eta(X) = eta . X.
struct AlmostContactStructure {
  Matrix phi;
  Vector xi;
  Vector eta;

  double eval_eta(const Vector& x) const { return eta.dot(x); }
};

/// Residuals of the almost contact axioms and metric compatibility:
///   phi^2 = -Id + xi eta,  eta(xi) = 1,  eta = g(., xi),
///   g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y).
inline Verdict contact_check(const InnerProduct& g, const AlmostContactStructure& s,
                             double tol = 1e-9) {
  Verdict v;
  const Eigen::Index n = g.dim();
  if (s.phi.rows() != n || s.phi.cols() != n || s.xi.size() != n || s.eta.size() != n)
    throw DimensionError("contact structure has wrong shape");
  const double square_defect =
      (s.phi * s.phi + Matrix::Identity(n, n) - s.xi * s.eta.transpose()).cwiseAbs().maxCoeff();
  const double kernel_defect = (s.phi * s.xi).cwiseAbs().maxCoeff();
  const double unit_defect = std::abs(s.eta.dot(s.xi) - 1.0);
  const double dual_defect = (s.eta - g.gram() * s.xi).cwiseAbs().maxCoeff();
  const Matrix lhs = s.phi.transpose() * g.gram() * s.phi;
  const Matrix rhs = g.gram() - s.eta * s.eta.transpose();
  const double metric_defect =
      (lhs - rhs).cwiseAbs().maxCoeff() / g.gram().cwiseAbs().maxCoeff();
  const std::pair<double, const char*> defects[] = {{square_defect, "phi squared"},
                                                    {kernel_defect, "phi xi"},
                                                    {unit_defect, "eta(xi)"},
                                                    {dual_defect, "eta duality"},
                                                    {metric_defect, "metric compatibility"}};
  for (const auto& [r, name] : defects)
    if (r >= v.residual) {
      v.residual = r;
      v.detail = name;
    }
  v.ok = v.residual <= tol;
  if (v.ok) v.detail.clear();
  return v;
}

/// Exterior derivative of the left-invariant 1-form eta:
///   d eta(X, Y) = -eta([X, Y]), times 1/2 when half_convention is set.
inline double eta_derivative(const LieAlgebra& alg, const AlmostContactStructure& s,
                             const Vector& x, const Vector& y, bool half_convention = false) {
  const double v = -s.eval_eta(alg.bracket(x, y));
  return half_convention ? 0.5 * v : v;
}

/// Fundamental 2-form Phi(X, Y) = g(X, phi Y).
inline double fundamental_form(const InnerProduct& g, const AlmostContactStructure& s,
                               const Vector& x, const Vector& y) {
  return g.pair(x, s.phi * y);
}

/// Contact metric condition Phi = d eta on the basis pairs.
inline Verdict contact_metric_check(const LieAlgebra& alg, const InnerProduct& g,
                                    const AlmostContactStructure& s, double tol = 1e-9,
                                    bool half_convention = false) {
  Verdict v;
  const Eigen::Index n = alg.dim();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Vector ei = Vector::Unit(n, i), ej = Vector::Unit(n, j);
      const double d = std::abs(fundamental_form(g, s, ei, ej) -
                                eta_derivative(alg, s, ei, ej, half_convention));
      if (d > v.residual) {
        v.residual = d;
        v.witness = {static_cast<int>(i), static_cast<int>(j)};
      }
    }
  v.ok = v.residual <= tol;
  return v;
}

/// Killing residual of xi: max over basis pairs of
///   g(nabla_X xi, Y) + g(X, nabla_Y xi).
inline Verdict killing_field_check(const ConnectionCoefficients& conn, const InnerProduct& g,
                                   const Vector& xi, double tol = 1e-9) {
  Verdict v;
  const Eigen::Index n = g.dim();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) {
      const Vector ei = Vector::Unit(n, i), ej = Vector::Unit(n, j);
      const double d = std::abs(g.pair(conn.nabla(ei, xi), ej) + g.pair(ei, conn.nabla(ej, xi)));
      if (d > v.residual) {
        v.residual = d;
        v.witness = {static_cast<int>(i), static_cast<int>(j)};
      }
    }
  v.ok = v.residual <= tol;
  return v;
}

/// Canonical almost contact structure of a 2-step algebra with 1-dim center:
/// xi is a g-unit central vector, eta its metric dual, phi = j(xi) on the
/// complement and 0 on the center.
inline AlmostContactStructure canonical_contact_structure(const LieAlgebra& alg,
                                                          const InnerProduct& g) {
  const CenterSplit sp = center_split(alg, g);
  if (sp.z.dim() != 1)
    throw ValidationError("contact structure needs a 1-dimensional center");
  const CentralJMap jm(alg, g, sp);
  const Vector xi = sp.z_frame.col(0);
  const Eigen::Index n = alg.dim();
  Matrix phi = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    phi.col(i) = jm.apply(xi, sp.complement_part(Vector::Unit(n, i)));
  return AlmostContactStructure{phi, xi, g.gram() * xi};
}

}  // namespace liemat
