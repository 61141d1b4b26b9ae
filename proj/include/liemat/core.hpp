#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "liemat/linalg.hpp"

namespace liemat {

/// Outcome of a yes/no check together with its witnessing residual and, on
/// failure, the basis indices that witness it.
struct Verdict {
  bool ok = false;
  double residual = 0.0;
  std::vector<int> witness;
  std::string detail;
  explicit operator bool() const { return ok; }
};

/// Finite-dimensional real Lie algebra presented by structure constants on a
/// fixed basis. Constants are stored for i < j only and antisymmetrized on
/// access, so [x, y] = -[y, x] holds exactly in floating point.
class LieAlgebra {
public:
  explicit LieAlgebra(Eigen::Index n, std::vector<std::string> names = {}) : n_(n) {
    if (n < 0) throw DimensionError("lie algebra: negative dimension");
    c_.assign(static_cast<size_t>(n * (n - 1) / 2) * n, 0.0);
    if (names.empty()) {
      for (Eigen::Index i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
    }
    if (static_cast<Eigen::Index>(names.size()) != n)
      throw DimensionError("lie algebra: basis name count mismatch");
    names_ = std::move(names);
  }

  Eigen::Index dim() const { return n_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  /// Sets [e_i, e_j] = coeffs (0-based, i != j). Passing i > j stores the
  /// negated coefficients for (j, i).
  void set_bracket(Eigen::Index i, Eigen::Index j, const Vector& coeffs) {
    check_index(i);
    check_index(j);
    if (i == j) throw ValidationError("lie algebra: bracket of a basis vector with itself");
    if (coeffs.size() != n_) throw DimensionError("lie algebra: coefficient dimension mismatch");
    const double sign = i < j ? 1.0 : -1.0;
    if (i > j) std::swap(i, j);
    for (Eigen::Index k = 0; k < n_; ++k) c_[slot(i, j, k)] = sign * coeffs(k);
  }

  /// Structure constant c_{ij}^k with exact antisymmetry in (i, j).
  double c(Eigen::Index i, Eigen::Index j, Eigen::Index k) const {
    check_index(i);
    check_index(j);
    check_index(k);
    if (i == j) return 0.0;
    if (i < j) return c_[slot(i, j, k)];
    return -c_[slot(j, i, k)];
  }

  /// Coordinates of [e_i, e_j].
  Vector bracket_basis(Eigen::Index i, Eigen::Index j) const {
    Vector out = Vector::Zero(n_);
    if (i == j) return out;
    const double sign = i < j ? 1.0 : -1.0;
    const Eigen::Index a = std::min(i, j), b = std::max(i, j);
    for (Eigen::Index k = 0; k < n_; ++k) out(k) = sign * c_[slot(a, b, k)];
    return out;
  }

  /// [x, y] by bilinear expansion over stored pairs.
  Vector bracket(const Vector& x, const Vector& y) const {
    if (x.size() != n_ || y.size() != n_)
      throw DimensionError("lie algebra: bracket operand dimension mismatch");
    Vector out = Vector::Zero(n_);
    for (Eigen::Index i = 0; i < n_; ++i)
      for (Eigen::Index j = i + 1; j < n_; ++j) {
        const double w = x(i) * y(j) - x(j) * y(i);
        if (w == 0.0) continue;
        for (Eigen::Index k = 0; k < n_; ++k) out(k) += w * c_[slot(i, j, k)];
      }
    return out;
  }

  /// Matrix of ad(x) = [x, .] acting on coordinates.
  Matrix ad(const Vector& x) const {
    Matrix m(n_, n_);
    for (Eigen::Index j = 0; j < n_; ++j) m.col(j) = bracket(x, Vector::Unit(n_, j));
    return m;
  }

  Matrix ad_basis(Eigen::Index i) const { return ad(Vector::Unit(n_, i)); }

  double max_abs_c() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
  }

private:
  void check_index(Eigen::Index i) const {
    if (i < 0 || i >= n_) throw DimensionError("lie algebra: basis index out of range");
  }
  size_t slot(Eigen::Index i, Eigen::Index j, Eigen::Index k) const {
    // pair (i, j) with i < j enumerated in lexicographic order
    const Eigen::Index p = i * n_ - i * (i + 1) / 2 + (j - i - 1);
    return static_cast<size_t>(p) * n_ + static_cast<size_t>(k);
  }
  Eigen::Index n_;
  std::vector<std::string> names_;
  std::vector<double> c_;
};

/// Max over basis triples of |[e_i,[e_j,e_k]] + [e_k,[e_i,e_j]] + [e_j,[e_k,e_i]]|.
inline double jacobi_defect(const LieAlgebra& alg) {
  const Eigen::Index n = alg.dim();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      for (Eigen::Index k = j + 1; k < n; ++k) {
        const Vector s = alg.bracket(Vector::Unit(n, i), alg.bracket_basis(j, k)) +
                         alg.bracket(Vector::Unit(n, k), alg.bracket_basis(i, j)) +
                         alg.bracket(Vector::Unit(n, j), alg.bracket_basis(k, i));
        worst = std::max(worst, s.norm());
      }
  return worst;
}

/// Load-time gate: defect <= 1e-9 * (1 + max |c|)^2.
inline double jacobi_tolerance(const LieAlgebra& alg) {
  const double m = 1.0 + alg.max_abs_c();
  return 1e-9 * m * m;
}

/// Center = joint kernel of all ad(e_i), computed from the stacked matrices.
inline SubspaceBasis center(const LieAlgebra& alg) {
  const Eigen::Index n = alg.dim();
  Matrix stacked(n * n, n);
  for (Eigen::Index i = 0; i < n; ++i) stacked.middleRows(i * n, n) = alg.ad_basis(i);
  return SubspaceBasis(kernel(stacked));
}

struct LowerCentralSeries {
  /// g^0 = g, g^{i+1} = [g, g^i]; the list ends at the first zero term or at
  /// stabilization.
  std::vector<SubspaceBasis> terms;
  /// Smallest c with g^c = 0, absent when the series stabilizes above zero.
  std::optional<int> nilpotency_class;
  bool nilpotent() const { return nilpotency_class.has_value(); }
};

inline LowerCentralSeries lower_central_series(const LieAlgebra& alg) {
  const Eigen::Index n = alg.dim();
  LowerCentralSeries out;
  out.terms.push_back(SubspaceBasis::full(n));
  while (true) {
    const SubspaceBasis& prev = out.terms.back();
    if (prev.dim() == 0) {
      out.nilpotency_class = static_cast<int>(out.terms.size()) - 1;
      return out;
    }
    Matrix cand(n, n * prev.dim());
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index v = 0; v < prev.dim(); ++v)
        cand.col(i * prev.dim() + v) = alg.bracket(Vector::Unit(n, i), prev.vec(v));
    SubspaceBasis next = SubspaceBasis::span_of(cand);
    if (next.dim() == prev.dim()) return out;  // stabilized above zero: not nilpotent
    out.terms.push_back(std::move(next));
  }
}

/// Normalizer N(h) = {x : [x, h] in span h}, as the kernel of the stacked
/// maps x -> proj_{h-perp}([x, h_j]).
inline SubspaceBasis normalizer(const LieAlgebra& alg, const SubspaceBasis& h) {
  const Eigen::Index n = alg.dim();
  if (h.ambient_dim() != n) throw DimensionError("normalizer: subspace dimension mismatch");
  const Matrix u = h.orthonormal();
  const Matrix proj_perp = Matrix::Identity(n, n) - u * u.transpose();
  Matrix stacked(n * h.dim(), n);
  for (Eigen::Index j = 0; j < h.dim(); ++j) {
    Matrix bj(n, n);
    for (Eigen::Index i = 0; i < n; ++i) bj.col(i) = alg.bracket(Vector::Unit(n, i), h.vec(j));
    stacked.middleRows(j * n, n) = proj_perp * bj;
  }
  if (h.dim() == 0) return SubspaceBasis::full(n);
  return SubspaceBasis(kernel(stacked));
}

/// Structure constants of a bracket-closed subspace in its own basis.
/// Throws when some [h_i, h_j] leaves the span.
inline LieAlgebra restrict_to_subalgebra(const LieAlgebra& alg, const SubspaceBasis& h,
                                         double tol = kRankTol) {
  const Eigen::Index k = h.dim();
  LieAlgebra sub(k);
  const Matrix& m = h.matrix();
  const auto solver = m.colPivHouseholderQr();
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = i + 1; j < k; ++j) {
      const Vector b = alg.bracket(h.vec(i), h.vec(j));
      if (h.containment_residual(b) > tol)
        throw ValidationError("restriction: subspace is not closed under the bracket");
      sub.set_bracket(i, j, solver.solve(b));
    }
  return sub;
}

/// Cartan test: h must be a subalgebra (error otherwise); verdict holds when
/// the restriction is nilpotent and h is self-normalizing.
inline Verdict is_cartan(const LieAlgebra& alg, const SubspaceBasis& h, double tol = kRankTol) {
  const LieAlgebra sub = restrict_to_subalgebra(alg, h, tol);
  const bool nil = lower_central_series(sub).nilpotent();
  const SubspaceBasis norm = normalizer(alg, h);
  const bool self_norm = norm.same_span(h, tol);
  Verdict v;
  v.ok = nil && self_norm;
  v.residual = static_cast<double>(norm.dim() - h.dim());
  if (!nil) v.detail = "restriction is not nilpotent";
  if (!self_norm) v.detail += std::string(v.detail.empty() ? "" : "; ") + "normalizer exceeds h";
  return v;
}

/// Killing form B(e_i, e_j) = tr(ad e_i ad e_j).
inline Matrix killing_form(const LieAlgebra& alg) {
  const Eigen::Index n = alg.dim();
  std::vector<Matrix> ads(n);
  for (Eigen::Index i = 0; i < n; ++i) ads[i] = alg.ad_basis(i);
  Matrix b(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) b(i, j) = b(j, i) = (ads[i] * ads[j]).trace();
  return b;
}

/// Semisimple iff the Killing form is nondegenerate; the determinant of the
/// max-entry-normalized form is compared against the cutoff.
inline Verdict is_semisimple(const LieAlgebra& alg, double tol = 1e-9) {
  const Matrix b = killing_form(alg);
  Verdict v;
  const double scale = b.size() ? b.cwiseAbs().maxCoeff() : 0.0;
  if (scale == 0.0) {
    v.ok = false;
    v.residual = 0.0;
    v.detail = "killing form vanishes";
    return v;
  }
  v.residual = std::abs((b / scale).determinant());
  v.ok = v.residual > tol;
  return v;
}

/// Ideal test: [g, h] contained in span h.
inline Verdict is_ideal(const LieAlgebra& alg, const SubspaceBasis& h, double tol = kRankTol) {
  Verdict v;
  v.ok = true;
  const Eigen::Index n = alg.dim();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < h.dim(); ++j) {
      const double r = h.containment_residual(alg.bracket(Vector::Unit(n, i), h.vec(j)));
      if (r > v.residual) {
        v.residual = r;
        v.witness = {static_cast<int>(i), static_cast<int>(j)};
      }
    }
  v.ok = v.residual <= tol;
  if (v.ok) v.witness.clear();
  return v;
}

/// Bi-invariance of g: ad skew-adjointness g([x,y],z) + g(y,[x,z]) = 0 over
/// basis triples, normalized by the data magnitude.
inline Verdict biinvariance_check(const LieAlgebra& alg, const InnerProduct& g,
                                  double tol = 1e-9) {
  if (g.dim() != alg.dim()) throw DimensionError("bi-invariance: metric dimension mismatch");
  const Eigen::Index n = alg.dim();
  const double scale =
      (1.0 + alg.max_abs_c()) * (1.0 + (n ? g.gram().cwiseAbs().maxCoeff() : 0.0));
  Verdict v;
  v.ok = true;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k) {
        const double r = std::abs(g.pair(alg.bracket_basis(i, j), Vector::Unit(n, k)) +
                                  g.pair(Vector::Unit(n, j), alg.bracket_basis(i, k))) /
                         scale;
        if (r > v.residual) {
          v.residual = r;
          v.witness = {static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)};
        }
      }
  v.ok = v.residual <= tol;
  if (v.ok) v.witness.clear();
  return v;
}

}  // namespace liemat
