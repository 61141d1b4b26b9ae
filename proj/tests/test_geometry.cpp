#include "catch_amalgamated.hpp"
#include "liemat/generators.hpp"
#include "liemat/geometry.hpp"
#include "liemat/rng.hpp"

using namespace liemat;

namespace {

// Independent Koszul oracle: solve G gamma = rhs basis pair by basis pair,
//   2 g(nabla_i j, e_l) = g([e_i,e_j], e_l) - g([e_j,e_l], e_i) + g([e_l,e_i], e_j).
Vector koszul_oracle(const LieAlgebra& alg, const InnerProduct& g, Eigen::Index i,
                     Eigen::Index j) {
  const Eigen::Index n = alg.dim();
  Vector rhs(n);
  const Vector ei = Vector::Unit(n, i), ej = Vector::Unit(n, j);
  for (Eigen::Index l = 0; l < n; ++l) {
    const Vector el = Vector::Unit(n, l);
    rhs(l) = 0.5 * (g.pair(alg.bracket(ei, ej), el) - g.pair(alg.bracket(ej, el), ei) +
                    g.pair(alg.bracket(el, ei), ej));
  }
  return g.gram().ldlt().solve(rhs);
}

MetricAlgebra random_metric_algebra(Sampler& rng) {
  const int n = rng.integer(2, 6);
  // Brackets into the last coordinate only: Jacobi holds automatically.
  LieAlgebra alg(n);
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 1; j < n - 1; ++j) {
      Vector c = Vector::Zero(n);
      c(n - 1) = rng.uniform();
      alg.set_bracket(i, j, c);
    }
  return {std::move(alg), InnerProduct(rng.spd(n))};
}

}  // namespace

TEST_CASE("golden connection and curvature values on the Heisenberg algebra") {
  const MetricAlgebra h3 = gen_heisenberg(1);
  const ConnectionCoefficients conn = levi_civita(h3.alg, h3.metric);
  const Vector e1 = Vector::Unit(3, 0), e2 = Vector::Unit(3, 1), e3 = Vector::Unit(3, 2);

  REQUIRE((conn.nabla(e1, e2) - 0.5 * e3).norm() < 1e-9);
  REQUIRE((conn.nabla(e2, e1) + 0.5 * e3).norm() < 1e-9);
  REQUIRE((conn.nabla(e1, e3) + 0.5 * e2).norm() < 1e-9);
  REQUIRE((conn.nabla(e2, e3) - 0.5 * e1).norm() < 1e-9);
  REQUIRE(conn.nabla(e3, e3).norm() < 1e-9);

  REQUIRE(sectional(conn, h3.alg, h3.metric, e1, e2) == Catch::Approx(-0.75).epsilon(1e-9));
  REQUIRE(sectional(conn, h3.alg, h3.metric, e1, e3) == Catch::Approx(0.25).epsilon(1e-9));
  REQUIRE(sectional(conn, h3.alg, h3.metric, e2, e3) == Catch::Approx(0.25).epsilon(1e-9));

  REQUIRE((curvature(conn, h3.alg, e1, e2, e2) + 0.75 * e1).norm() < 1e-9);
}

TEST_CASE("connection matches the per-pair Koszul solve on random data") {
  Sampler rng(11, "geometry-koszul");
  for (int rep = 0; rep < 25; ++rep) {
    const MetricAlgebra ma = random_metric_algebra(rng);
    const ConnectionCoefficients conn = levi_civita(ma.alg, ma.metric);
    for (Eigen::Index i = 0; i < ma.alg.dim(); ++i)
      for (Eigen::Index j = 0; j < ma.alg.dim(); ++j) {
        const Vector oracle = koszul_oracle(ma.alg, ma.metric, i, j);
        const Vector got = conn.nabla(Vector::Unit(ma.alg.dim(), i), Vector::Unit(ma.alg.dim(), j));
        REQUIRE((got - oracle).norm() < 1e-9 * (1.0 + oracle.norm()));
      }
  }
}

TEST_CASE("torsion and compatibility vanish; the sign variant has torsion") {
  Sampler rng(11, "geometry-axioms");
  for (int rep = 0; rep < 25; ++rep) {
    const MetricAlgebra ma = random_metric_algebra(rng);
    const ConnectionCoefficients conn = levi_civita(ma.alg, ma.metric);
    REQUIRE(torsion_residual(conn, ma.alg) < 1e-9);
    REQUIRE(compatibility_residual(conn, ma.metric) < 1e-9);
  }

  const MetricAlgebra h3 = gen_heisenberg(1);
  const ConnectionCoefficients alt = levi_civita(h3.alg, h3.metric, KoszulSign::alternate);
  REQUIRE(torsion_residual(alt, h3.alg) > 0.5);
  REQUIRE(compatibility_residual(alt, h3.metric) > 0.5);
}

TEST_CASE("curvature symmetries on random algebras") {
  Sampler rng(11, "geometry-symmetries");
  for (int rep = 0; rep < 15; ++rep) {
    const MetricAlgebra ma = random_metric_algebra(rng);
    const Eigen::Index n = ma.alg.dim();
    const ConnectionCoefficients conn = levi_civita(ma.alg, ma.metric);
    for (int trial = 0; trial < 20; ++trial) {
      const Vector x = rng.vector(n), y = rng.vector(n), z = rng.vector(n), w = rng.vector(n);
      const double scale = 1.0 + std::abs(curvature_4(conn, ma.alg, ma.metric, x, y, z, w));
      REQUIRE((curvature(conn, ma.alg, x, y, z) + curvature(conn, ma.alg, y, x, z)).norm() <
              1e-9 * scale);
      REQUIRE(std::abs(curvature_4(conn, ma.alg, ma.metric, x, y, z, w) +
                       curvature_4(conn, ma.alg, ma.metric, x, y, w, z)) < 1e-9 * scale);
      REQUIRE(std::abs(curvature_4(conn, ma.alg, ma.metric, x, y, z, w) -
                       curvature_4(conn, ma.alg, ma.metric, z, w, x, y)) < 1e-9 * scale);
      REQUIRE((curvature(conn, ma.alg, x, y, z) + curvature(conn, ma.alg, y, z, x) +
               curvature(conn, ma.alg, z, x, y))
                  .norm() < 1e-9 * scale);
    }
  }
}

TEST_CASE("sectional curvature rejects degenerate planes") {
  const MetricAlgebra h3 = gen_heisenberg(1);
  const ConnectionCoefficients conn = levi_civita(h3.alg, h3.metric);
  const Vector e1 = Vector::Unit(3, 0);
  REQUIRE_THROWS_AS(sectional(conn, h3.alg, h3.metric, e1, 2.0 * e1), ValidationError);
  REQUIRE_THROWS_AS(sectional(conn, h3.alg, h3.metric, e1, Vector::Zero(3)), ValidationError);
}

TEST_CASE("submanifold split separates tangent and normal parts") {
  Sampler rng(11, "geometry-split");
  for (int rep = 0; rep < 10; ++rep) {
    const int n = rng.integer(2, 6);
    const InnerProduct g(rng.spd(n));
    const int k = rng.integer(1, n - 1);
    const SubmanifoldSplit split(g, SubspaceBasis::span_of(rng.matrix(n, k)));
    REQUIRE(split.tangent_frame().cols() == k);
    REQUIRE(split.normal_frame().cols() == n - k);
    const Vector v = rng.vector(n);
    REQUIRE((split.tangential(v) + split.normal(v) - v).norm() < 1e-10);
    REQUIRE(split.is_tangent(split.tangential(v), 1e-9));
    REQUIRE(split.is_normal(split.normal(v), 1e-9));
    REQUIRE(std::abs(g.pair(split.tangential(v), split.normal(v))) < 1e-10);
  }
}

TEST_CASE("weingarten map golden value and duality") {
  const MetricAlgebra h3 = gen_heisenberg(1);
  const ConnectionCoefficients conn = levi_civita(h3.alg, h3.metric);
  Matrix cols(3, 2);
  cols.col(0) = Vector::Unit(3, 0);
  cols.col(1) = Vector::Unit(3, 2);
  const SubmanifoldSplit split(h3.metric, SubspaceBasis(cols));

  const Vector e1 = Vector::Unit(3, 0), e2 = Vector::Unit(3, 1), e3 = Vector::Unit(3, 2);
  const WeingartenResult w = weingarten(conn, h3.metric, split, e2, e1);
  REQUIRE((w.value + 0.5 * e3).norm() < 1e-10);
  REQUIRE(w.duality_residual < 1e-12);

  REQUIRE_THROWS_AS(weingarten(conn, h3.metric, split, e1, e1), ValidationError);
  REQUIRE_THROWS_AS(weingarten(conn, h3.metric, split, e2, e2), ValidationError);

  const Vector h13 = second_fundamental_form(conn, split, e1, e3);
  REQUIRE((h13 + 0.5 * e2).norm() < 1e-10);
  REQUIRE_THROWS_AS(second_fundamental_form(conn, split, e2, e1), ValidationError);
}

TEST_CASE("mean curvature of the abelian plane in the Heisenberg algebra vanishes") {
  const MetricAlgebra h3 = gen_heisenberg(1);
  const ConnectionCoefficients conn = levi_civita(h3.alg, h3.metric);
  Matrix cols(3, 2);
  cols.col(0) = Vector::Unit(3, 0);
  cols.col(1) = Vector::Unit(3, 2);
  const SubmanifoldSplit split(h3.metric, SubspaceBasis(cols));
  REQUIRE(mean_curvature(conn, split).norm() < 1e-10);
  REQUIRE(mean_curvature(conn, split, true).norm() < 1e-10);
}

TEST_CASE("gauss equation holds on abelian subalgebras of 2-step algebras") {
  Sampler rng(11, "geometry-gauss");
  int checked = 0;
  for (int rep = 0; rep < 12; ++rep) {
    const MetricAlgebra ma = gen_random_two_step(rng.integer(2, 4), 1, rng.raw());
    const Eigen::Index n = ma.alg.dim();
    const ConnectionCoefficients conn = levi_civita(ma.alg, ma.metric);
    // Span of one generator and the center brackets to zero: abelian subalgebra.
    Matrix cols(n, 2);
    cols.col(0) = Vector::Unit(n, 0);
    cols.col(1) = Vector::Unit(n, n - 1);
    const SubmanifoldSplit split(ma.metric, SubspaceBasis(cols));
    for (int trial = 0; trial < 40; ++trial) {
      const Vector x = split.tangential(rng.vector(n)), y = split.tangential(rng.vector(n)),
                   z = split.tangential(rng.vector(n)), w = split.tangential(rng.vector(n));
      REQUIRE(gauss_residual(conn, ma.alg, ma.metric, split, x, y, z, w) <
              1e-9 * (1.0 + x.norm() * y.norm() * z.norm() * w.norm()));
      ++checked;
    }
  }
  REQUIRE(checked > 0);
}

TEST_CASE("covariant derivative of h is tensorial in the derivative slot") {
  const MetricAlgebra h3 = gen_heisenberg(1);
  const ConnectionCoefficients conn = levi_civita(h3.alg, h3.metric);
  Matrix cols(3, 2);
  cols.col(0) = Vector::Unit(3, 0);
  cols.col(1) = Vector::Unit(3, 2);
  const SubmanifoldSplit split(h3.metric, SubspaceBasis(cols));
  Sampler rng(11, "geometry-covh");
  const Vector x = split.tangential(rng.vector(3)), y = split.tangential(rng.vector(3)),
               z = split.tangential(rng.vector(3));
  const Vector lhs = covariant_derivative_h(conn, split, 2.0 * x, y, z);
  const Vector rhs = 2.0 * covariant_derivative_h(conn, split, x, y, z);
  REQUIRE((lhs - rhs).norm() < 1e-10);
}
