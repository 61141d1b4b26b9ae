#pragma once

#include <random>
#include <string_view>

#include "liemat/linalg.hpp"

namespace liemat {

inline uint64_t fnv1a(std::string_view s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

/// Deterministic sample stream. Seeding with (seed, label) decouples the
/// stream from execution order: the same label always replays identically.
class Sampler {
public:
  Sampler(uint64_t seed, std::string_view label)
      : eng_((seed * 0x9e3779b97f4a7c15ULL) ^ fnv1a(label)) {}
  explicit Sampler(uint64_t seed) : eng_(seed) {}

  double uniform(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(eng_);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(eng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }

  Vector vector(Eigen::Index n) {
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = normal();
    return v;
  }

  Vector nonzero_vector(Eigen::Index n) {
    for (;;) {
      Vector v = vector(n);
      if (v.norm() > 1e-6) return v;
    }
  }

  Vector unit_vector(Eigen::Index n, const InnerProduct& g) {
    const Vector v = nonzero_vector(n);
    return v / g.norm(v);
  }

  /// Random element of span(basis); zero for the trivial space.
  Vector in_subspace(const SubspaceBasis& b) {
    if (b.dim() == 0) return Vector::Zero(b.ambient_dim());
    return b.matrix() * vector(b.dim());
  }

  Matrix matrix(Eigen::Index r, Eigen::Index c) {
    Matrix m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < c; ++j) m(i, j) = normal();
    return m;
  }

  Matrix skew(Eigen::Index n) {
    const Matrix a = matrix(n, n);
    return 0.5 * (a - a.transpose());
  }

  /// SPD matrix with eigenvalues drawn from [1, cond].
  Matrix spd(Eigen::Index n, double cond = 4.0) {
    const Matrix q = orthogonal(n);
    Vector evals(n);
    for (Eigen::Index i = 0; i < n; ++i) evals(i) = uniform(1.0, cond);
    Matrix m = q * evals.asDiagonal() * q.transpose();
    return 0.5 * (m + m.transpose());
  }

  Matrix orthogonal(Eigen::Index n) {
    const Matrix a = matrix(n, n);
    const Eigen::HouseholderQR<Matrix> qr(a);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < n; ++i)
      if (r(i, i) < 0) q.col(i) = -q.col(i);
    return q;
  }

  uint64_t raw() { return eng_(); }

private:
  std::mt19937_64 eng_;
};

}  // namespace liemat
