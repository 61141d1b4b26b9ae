#pragma once

#include "liemat/core.hpp"
#include "liemat/rng.hpp"

namespace liemat {

struct MetricAlgebra {
  LieAlgebra alg;
  InnerProduct metric;
};

/// Heisenberg algebra of dimension 2m + 1 with the flat metric:
/// [e_{2i-1}, e_{2i}] = e_{2m+1}.
inline MetricAlgebra gen_heisenberg(int m) {
  if (m < 1) throw ValidationError("heisenberg generator needs m >= 1");
  const int n = 2 * m + 1;
  LieAlgebra alg(n);
  for (int i = 0; i < m; ++i) {
    Vector coeffs = Vector::Zero(n);
    coeffs(n - 1) = 1.0;
    alg.set_bracket(2 * i, 2 * i + 1, coeffs);
  }
  return MetricAlgebra{std::move(alg), InnerProduct::identity(n)};
}

inline MetricAlgebra gen_abelian(int n) {
  if (n < 1) throw ValidationError("abelian generator needs n >= 1");
  return MetricAlgebra{LieAlgebra(n), InnerProduct::identity(n)};
}

/// Left multiplication by i, j, k on the quaternions with basis 1, i, j, k.
/// Anticommuting orthogonal skew maps, so they generate an algebra whose
/// squared endomorphisms are -|Z|^2 Id.
inline std::vector<Matrix> quaternion_maps() {
  Matrix li(4, 4), lj(4, 4), lk(4, 4);
  li << 0, -1, 0, 0,
        1, 0, 0, 0,
        0, 0, 0, -1,
        0, 0, 1, 0;
  lj << 0, 0, -1, 0,
        0, 0, 0, 1,
        1, 0, 0, 0,
        0, -1, 0, 0;
  lk << 0, 0, 0, -1,
        0, 0, -1, 0,
        0, 1, 0, 0,
        1, 0, 0, 0;
  return {li, lj, lk};
}

/// 2-step algebra on R^d + R^q from skew maps J_a via
/// g([x, y], z_a) = g(J_a x, y). Requires each J_a orthogonal skew with
/// J_a^2 = -Id and distinct maps anticommuting; the violating pair is named.
inline MetricAlgebra gen_h_type(const std::vector<Matrix>& maps) {
  if (maps.empty()) throw ValidationError("h-type generator needs at least one map");
  const Eigen::Index d = maps.front().rows();
  const double tol = 1e-12;
  for (size_t a = 0; a < maps.size(); ++a) {
    const Matrix& j = maps[a];
    if (j.rows() != d || j.cols() != d)
      throw DimensionError("h-type generator: map " + std::to_string(a + 1) +
                           " has inconsistent shape");
    if ((j + j.transpose()).cwiseAbs().maxCoeff() > tol)
      throw ValidationError("h-type generator: map " + std::to_string(a + 1) +
                            " is not skew-symmetric");
    if ((j * j + Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > tol)
      throw ValidationError("h-type generator: map " + std::to_string(a + 1) +
                            " does not square to -Id");
  }
  for (size_t a = 0; a < maps.size(); ++a)
    for (size_t b = a + 1; b < maps.size(); ++b)
      if ((maps[a] * maps[b] + maps[b] * maps[a]).cwiseAbs().maxCoeff() > tol)
        throw ValidationError("h-type generator: maps " + std::to_string(a + 1) + " and " +
                              std::to_string(b + 1) + " do not anticommute");
  const int q = static_cast<int>(maps.size());
  const int n = static_cast<int>(d) + q;
  LieAlgebra alg(n);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i + 1; j < d; ++j) {
      Vector coeffs = Vector::Zero(n);
      for (int a = 0; a < q; ++a) coeffs(d + a) = maps[a](j, i);
      alg.set_bracket(static_cast<int>(i), static_cast<int>(j), coeffs);
    }
  return MetricAlgebra{std::move(alg), InnerProduct::identity(n)};
}

inline MetricAlgebra gen_quaternion_heisenberg() { return gen_h_type(quaternion_maps()); }

/// Random 2-step algebra: p generators, q central directions, brackets from
/// random skew maps, metric a mildly conditioned random SPD form. Jacobi
/// holds by construction since all brackets land in the center.
inline MetricAlgebra gen_random_two_step(int p, int q, uint64_t seed) {
  if (p < 2 || q < 1) throw ValidationError("random 2-step generator needs p >= 2, q >= 1");
  if (q > p * (p - 1) / 2)
    throw ValidationError("random 2-step generator needs q <= p(p-1)/2");
  Sampler rng(seed, "gen.random2step");
  const int n = p + q;
  LieAlgebra alg(n);
  std::vector<Matrix> maps;
  for (int a = 0; a < q; ++a) maps.push_back(rng.skew(p));
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      Vector coeffs = Vector::Zero(n);
      for (int a = 0; a < q; ++a) coeffs(p + a) = maps[a](j, i);
      alg.set_bracket(i, j, coeffs);
    }
  return MetricAlgebra{std::move(alg), InnerProduct(rng.spd(n))};
}

}  // namespace liemat
