#pragma once

#include <array>

#include "liemat/geometry.hpp"

namespace liemat {

/// 2x2 array of coordinate vectors over a base algebra:
///   A = [[x11, x12], [x21, x22]].
/// Slot indices run 0..3 in the order 11, 12, 21, 22.
struct MatrixElement {
  Vector x11, x12, x21, x22;

  MatrixElement() = default;
  MatrixElement(Vector a, Vector b, Vector c, Vector d)
      : x11(std::move(a)), x12(std::move(b)), x21(std::move(c)), x22(std::move(d)) {
    if (x12.size() != x11.size() || x21.size() != x11.size() || x22.size() != x11.size())
      throw DimensionError("matrix element: slot dimension mismatch");
  }

  static MatrixElement zero(Eigen::Index n) {
    return MatrixElement(Vector::Zero(n), Vector::Zero(n), Vector::Zero(n), Vector::Zero(n));
  }

  Eigen::Index base_dim() const { return x11.size(); }

  const Vector& slot(int s) const {
    switch (s) {
      case 0: return x11;
      case 1: return x12;
      case 2: return x21;
      default: return x22;
    }
  }
  Vector& slot(int s) {
    switch (s) {
      case 0: return x11;
      case 1: return x12;
      case 2: return x21;
      default: return x22;
    }
  }

  MatrixElement operator+(const MatrixElement& o) const {
    return {x11 + o.x11, x12 + o.x12, x21 + o.x21, x22 + o.x22};
  }
  MatrixElement operator-(const MatrixElement& o) const {
    return {x11 - o.x11, x12 - o.x12, x21 - o.x21, x22 - o.x22};
  }
  MatrixElement operator*(double t) const { return {t * x11, t * x12, t * x21, t * x22}; }

  double max_abs() const {
    double m = 0.0;
    for (int s = 0; s < 4; ++s)
      if (slot(s).size()) m = std::max(m, slot(s).template lpNorm<Eigen::Infinity>());
    return m;
  }
};

inline MatrixElement operator*(double t, const MatrixElement& a) { return a * t; }

/// Transpose swaps the off-diagonal slots.
inline MatrixElement transpose(const MatrixElement& a) {
  return {a.x11, a.x21, a.x12, a.x22};
}

/// Adjugate-style star: A* = [[x22, -x12], [-x21, x11]].
inline MatrixElement star(const MatrixElement& a) {
  return {a.x22, -a.x12, -a.x21, a.x11};
}

/// Slot-wise inner product: sum over slots of g(a_s, b_s).
inline double lift_inner(const InnerProduct& g, const MatrixElement& a, const MatrixElement& b) {
  double sum = 0.0;
  for (int s = 0; s < 4; ++s) sum += g.pair(a.slot(s), b.slot(s));
  return sum;
}

inline double lift_norm(const InnerProduct& g, const MatrixElement& a) {
  return std::sqrt(std::max(0.0, lift_inner(g, a, a)));
}

/// Slot-wise bracket.
inline MatrixElement lift_bracket(const LieAlgebra& alg, const MatrixElement& a,
                                  const MatrixElement& b) {
  MatrixElement out = MatrixElement::zero(alg.dim());
  for (int s = 0; s < 4; ++s) out.slot(s) = alg.bracket(a.slot(s), b.slot(s));
  return out;
}

/// Slot-wise covariant derivative.
inline MatrixElement lift_connection(const ConnectionCoefficients& conn, const MatrixElement& a,
                                     const MatrixElement& b) {
  MatrixElement out = MatrixElement::zero(conn.dim());
  for (int s = 0; s < 4; ++s) out.slot(s) = conn.nabla(a.slot(s), b.slot(s));
  return out;
}

/// Diagonal-vs-antidiagonal pairing gap O(A) = g(x11, x22) - g(x21, x12).
inline double o_functional(const InnerProduct& g, const MatrixElement& a) {
  return g.pair(a.x11, a.x22) - g.pair(a.x21, a.x12);
}

/// Determinant-style pairing (A,B) = g(x11,b11) g(x22,b22) - g(x12,b12) g(x21,b21).
inline double det_form(const InnerProduct& g, const MatrixElement& a, const MatrixElement& b) {
  return g.pair(a.x11, b.x11) * g.pair(a.x22, b.x22) -
         g.pair(a.x12, b.x12) * g.pair(a.x21, b.x21);
}

/// Cross element: both diagonal pairings vanish.
inline bool is_cross(const InnerProduct& g, const MatrixElement& a, double tol = 1e-9) {
  const double scale = 1.0 + a.max_abs() * a.max_abs();
  return std::abs(g.pair(a.x11, a.x22)) <= tol * scale &&
         std::abs(g.pair(a.x21, a.x12)) <= tol * scale;
}

/// Flattened coordinates in the lifted algebra, slot-major.
inline Vector flatten(const MatrixElement& a) {
  const Eigen::Index n = a.base_dim();
  Vector v(4 * n);
  for (int s = 0; s < 4; ++s) v.segment(s * n, n) = a.slot(s);
  return v;
}

inline MatrixElement unflatten(const Vector& v) {
  if (v.size() % 4 != 0) throw DimensionError("unflatten: length must be divisible by 4");
  const Eigen::Index n = v.size() / 4;
  MatrixElement a = MatrixElement::zero(n);
  for (int s = 0; s < 4; ++s) a.slot(s) = v.segment(s * n, n);
  return a;
}

/// Lifted algebra on 4n coordinates: four independent copies of the base,
/// one per slot, so the bracket acts slot-wise.
inline LieAlgebra lift_algebra(const LieAlgebra& alg) {
  const Eigen::Index n = alg.dim();
  static const char* suffix[4] = {"_11", "_12", "_21", "_22"};
  std::vector<std::string> names;
  for (int s = 0; s < 4; ++s)
    for (Eigen::Index i = 0; i < n; ++i) names.push_back(alg.basis_names()[i] + suffix[s]);
  LieAlgebra big(4 * n, std::move(names));
  for (int s = 0; s < 4; ++s)
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) {
        Vector coeffs = Vector::Zero(4 * n);
        coeffs.segment(s * n, n) = alg.bracket_basis(i, j);
        big.set_bracket(s * n + i, s * n + j, coeffs);
      }
  return big;
}

/// Block-diagonal metric matching lift_algebra's coordinate layout.
inline InnerProduct lift_metric(const InnerProduct& g) {
  const Eigen::Index n = g.dim();
  Matrix big = Matrix::Zero(4 * n, 4 * n);
  for (int s = 0; s < 4; ++s) big.block(s * n, s * n, n, n) = g.gram();
  return InnerProduct(big);
}

/// Slot-wise curvature R(a, b) c.
inline MatrixElement lift_curvature(const ConnectionCoefficients& conn, const LieAlgebra& alg,
                                    const MatrixElement& a, const MatrixElement& b,
                                    const MatrixElement& c) {
  MatrixElement out = MatrixElement::zero(alg.dim());
  for (int s = 0; s < 4; ++s) out.slot(s) = curvature(conn, alg, a.slot(s), b.slot(s), c.slot(s));
  return out;
}

/// Slot-wise sectional curvature, row-major 2x2. Errors when any slot pair
/// spans a degenerate plane.
inline std::array<double, 4> lift_sectional(const ConnectionCoefficients& conn,
                                            const LieAlgebra& alg, const InnerProduct& g,
                                            const MatrixElement& a, const MatrixElement& b) {
  std::array<double, 4> out{};
  for (int s = 0; s < 4; ++s) out[s] = sectional(conn, alg, g, a.slot(s), b.slot(s));
  return out;
}

/// Slot-wise second fundamental form; all slots must be tangent.
inline MatrixElement lifted_h(const ConnectionCoefficients& conn, const SubmanifoldSplit& split,
                              const MatrixElement& a, const MatrixElement& b) {
  MatrixElement out = MatrixElement::zero(conn.dim());
  for (int s = 0; s < 4; ++s)
    out.slot(s) = second_fundamental_form(conn, split, a.slot(s), b.slot(s));
  return out;
}

/// Subalgebra h together with its g-orthogonal complement n.
struct TypeDecomposition {
  SubspaceBasis h;
  SubspaceBasis n;
};

/// Builds the decomposition, validating that h is closed under the bracket.
inline TypeDecomposition type_decomposition(const LieAlgebra& alg, const InnerProduct& g,
                                            const SubspaceBasis& h, double tol = kRankTol) {
  for (Eigen::Index i = 0; i < h.dim(); ++i)
    for (Eigen::Index j = i + 1; j < h.dim(); ++j)
      if (h.containment_residual(alg.bracket(h.vec(i), h.vec(j))) > tol)
        throw ValidationError("type decomposition: h is not closed under the bracket");
  return TypeDecomposition{h, orthogonal_complement(g, h)};
}

/// Slot patterns relative to a decomposition (h, n).
enum class ElementType { C1, C1Swapped, C2, C3, C3Swapped, None };

inline const char* to_string(ElementType t) {
  switch (t) {
    case ElementType::C1: return "C1";
    case ElementType::C1Swapped: return "C1-swapped";
    case ElementType::C2: return "C2";
    case ElementType::C3: return "C3";
    case ElementType::C3Swapped: return "C3-swapped";
    default: return "none";
  }
}

/// First matching pattern in the order C1, C1-swapped, C2, C3, C3-swapped:
///   C1: row 1 in h, row 2 in n;  C2: diagonal in h, antidiagonal in n;
///   C3: column 1 in h, column 2 in n;  swapped variants exchange h and n.
/// Zero slots belong to every subspace, so mixed-zero elements match the
/// earliest pattern.
inline ElementType classify_type(const MatrixElement& a, const TypeDecomposition& dec,
                                 double tol = kRankTol) {
  auto in = [&](const Vector& v, const SubspaceBasis& s) {
    return s.containment_residual(v) <= tol;
  };
  const auto& h = dec.h;
  const auto& n = dec.n;
  if (in(a.x11, h) && in(a.x12, h) && in(a.x21, n) && in(a.x22, n)) return ElementType::C1;
  if (in(a.x11, n) && in(a.x12, n) && in(a.x21, h) && in(a.x22, h)) return ElementType::C1Swapped;
  if (in(a.x11, h) && in(a.x22, h) && in(a.x12, n) && in(a.x21, n)) return ElementType::C2;
  if (in(a.x11, h) && in(a.x21, h) && in(a.x12, n) && in(a.x22, n)) return ElementType::C3;
  if (in(a.x11, n) && in(a.x21, n) && in(a.x12, h) && in(a.x22, h)) return ElementType::C3Swapped;
  return ElementType::None;
}

struct LiftDecomposition {
  MatrixElement h_part, n_part, c_part;
};

/// Splits A into a part lying entirely over h, a part lying entirely over n,
/// and a mixed remainder. An element concentrated on one side is returned
/// whole; a genuinely mixed element contributes its slot-wise h-content to
/// the h-part and the rest to the cross part. The three parts sum to A and
/// are mutually orthogonal under lift_inner.
inline LiftDecomposition decompose_lift(const InnerProduct& g, const MatrixElement& a,
                                        const TypeDecomposition& dec, double tol = kRankTol) {
  const Eigen::Index n = a.base_dim();
  const Matrix fh = gram_schmidt(dec.h.matrix(), g);
  const Matrix fn = gram_schmidt(dec.n.matrix(), g);
  auto project = [&](const Matrix& frame, const Vector& v) -> Vector {
    if (frame.cols() == 0) return Vector::Zero(v.size());
    return frame * (frame.transpose() * (g.gram() * v));
  };
  MatrixElement ah = MatrixElement::zero(n), an = MatrixElement::zero(n);
  for (int s = 0; s < 4; ++s) {
    ah.slot(s) = project(fh, a.slot(s));
    an.slot(s) = a.slot(s) - ah.slot(s);
    // guard against rounding drift out of n
    an.slot(s) = project(fn, an.slot(s));
  }
  const double scale = 1.0 + a.max_abs();
  LiftDecomposition out{MatrixElement::zero(n), MatrixElement::zero(n), MatrixElement::zero(n)};
  if (an.max_abs() <= tol * scale) {
    out.h_part = a;
  } else if (ah.max_abs() <= tol * scale) {
    out.n_part = a;
  } else {
    out.h_part = ah;
    out.c_part = an;
  }
  return out;
}

}  // namespace liemat
