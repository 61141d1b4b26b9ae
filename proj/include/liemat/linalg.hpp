#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace liemat {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Mismatched dimensions between operands.
class DimensionError : public Error {
public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// Input data violates a structural requirement (symmetry, definiteness,
/// independence, closure, ...).
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Relative singular-value cutoff shared by all rank/kernel decisions.
inline constexpr double kRankTol = 1e-9;

/// Breakdown threshold for Gram-Schmidt orthonormalization.
inline constexpr double kGramSchmidtTol = 1e-12;

/// Orthonormal basis (Euclidean) of the column span of `cols`.
/// Singular values below kRankTol times the largest are treated as zero.
inline Matrix orthonormal_span(const Matrix& cols) {
  if (cols.cols() == 0) return Matrix(cols.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(cols, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return Matrix(cols.rows(), 0);
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > kRankTol * sv(0)) ++r;
  return svd.matrixU().leftCols(r);
}

/// Orthonormal basis (Euclidean) of the null space of `a`.
inline Matrix kernel(const Matrix& a) {
  if (a.rows() == 0) return Matrix::Identity(a.cols(), a.cols());
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double largest = sv.size() ? sv(0) : 0.0;
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > kRankTol * (largest > 0 ? largest : 1.0)) ++r;
  return svd.matrixV().rightCols(a.cols() - r);
}

inline Eigen::Index numeric_rank(const Matrix& a) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > kRankTol * sv(0)) ++r;
  return r;
}

/// Symmetric positive definite inner product on coordinates.
/// The stored Gram matrix is exactly symmetric: the lower triangle is
/// mirrored on construction after an asymmetry check.
class InnerProduct {
public:
  explicit InnerProduct(Matrix gram, double validation_tol = 1e-9) {
    if (gram.rows() != gram.cols())
      throw DimensionError("inner product: gram matrix must be square");
    const double scale = std::max(1.0, gram.cwiseAbs().maxCoeff());
    if ((gram - gram.transpose()).cwiseAbs().maxCoeff() > validation_tol * scale)
      throw ValidationError("inner product: gram matrix is not symmetric");
    for (Eigen::Index i = 0; i < gram.rows(); ++i)
      for (Eigen::Index j = 0; j < i; ++j) gram(j, i) = gram(i, j);
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
    const double top = es.eigenvalues().size() ? es.eigenvalues().maxCoeff() : 1.0;
    if (gram.rows() > 0 &&
        es.eigenvalues().minCoeff() <= validation_tol * std::max(1.0, top))
      throw ValidationError("inner product: gram matrix is not positive definite");
    g_ = std::move(gram);
    llt_.compute(g_);
  }

  static InnerProduct identity(Eigen::Index n) { return InnerProduct(Matrix::Identity(n, n)); }

  Eigen::Index dim() const { return g_.rows(); }
  const Matrix& gram() const { return g_; }

  double pair(const Vector& x, const Vector& y) const { return x.dot(g_ * y); }
  double norm2(const Vector& x) const { return pair(x, x); }
  double norm(const Vector& x) const { return std::sqrt(std::max(0.0, norm2(x))); }

  /// Solves G x = rhs.
  Vector solve(const Vector& rhs) const { return llt_.solve(rhs); }
  Matrix solve(const Matrix& rhs) const { return llt_.solve(rhs); }

private:
  Matrix g_;
  Eigen::LLT<Matrix> llt_;
};

/// Modified Gram-Schmidt with one re-orthogonalization pass, relative to the
/// inner product `g`. Vectors whose remainder drops below the breakdown
/// threshold (relative to their input norm) are dropped.
inline Matrix gram_schmidt(const Matrix& vectors, const InnerProduct& g,
                           double breakdown_tol = kGramSchmidtTol) {
  Matrix q(vectors.rows(), vectors.cols());
  Eigen::Index k = 0;
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    Vector v = vectors.col(c);
    const double input_norm = g.norm(v);
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index i = 0; i < k; ++i) v -= g.pair(q.col(i), v) * q.col(i);
    const double rem = g.norm(v);
    if (rem <= breakdown_tol * std::max(1.0, input_norm)) continue;
    q.col(k++) = v / rem;
  }
  return q.leftCols(k);
}

/// A list of linearly independent vectors spanning a subspace of R^n.
class SubspaceBasis {
public:
  /// Trivial subspace of an n-dimensional ambient space.
  explicit SubspaceBasis(Eigen::Index ambient_dim) : cols_(ambient_dim, 0) { refresh(); }

  /// Wraps the given columns; they must be linearly independent.
  explicit SubspaceBasis(Matrix cols) : cols_(std::move(cols)) {
    if (numeric_rank(cols_) != cols_.cols())
      throw ValidationError("subspace basis: vectors are not linearly independent");
    refresh();
  }

  /// Rank-reduces arbitrary spanning vectors to an orthonormal basis.
  static SubspaceBasis span_of(const Matrix& vectors) {
    SubspaceBasis b(vectors.rows());
    b.cols_ = orthonormal_span(vectors);
    b.refresh();
    return b;
  }

  static SubspaceBasis full(Eigen::Index n) { return SubspaceBasis(Matrix::Identity(n, n)); }

  Eigen::Index ambient_dim() const { return cols_.rows(); }
  Eigen::Index dim() const { return cols_.cols(); }
  const Matrix& matrix() const { return cols_; }
  Vector vec(Eigen::Index i) const { return cols_.col(i); }

  /// Euclidean distance of v from the span, relative to max(1, |v|).
  double containment_residual(const Vector& v) const {
    if (v.size() != cols_.rows()) throw DimensionError("subspace: vector dimension mismatch");
    const Vector r = v - ortho_ * (ortho_.transpose() * v);
    return r.norm() / std::max(1.0, v.norm());
  }

  bool contains(const Vector& v, double tol = kRankTol) const {
    return containment_residual(v) <= tol;
  }

  bool contains_subspace(const SubspaceBasis& other, double tol = kRankTol) const {
    for (Eigen::Index i = 0; i < other.dim(); ++i)
      if (!contains(other.vec(i), tol)) return false;
    return true;
  }

  bool same_span(const SubspaceBasis& other, double tol = kRankTol) const {
    return dim() == other.dim() && contains_subspace(other, tol);
  }

  /// Euclidean-orthonormal basis of the same span.
  const Matrix& orthonormal() const { return ortho_; }

private:
  void refresh() { ortho_ = orthonormal_span(cols_); }
  Matrix cols_;
  Matrix ortho_;
};

/// Basis of {x : g(x, h_i) = 0 for all i}.
inline SubspaceBasis orthogonal_complement(const InnerProduct& g, const SubspaceBasis& h) {
  if (g.dim() != h.ambient_dim())
    throw DimensionError("orthogonal complement: metric/subspace dimension mismatch");
  return SubspaceBasis(kernel(h.matrix().transpose() * g.gram()));
}

}  // namespace liemat
