#include "catch_amalgamated.hpp"
#include "liemat/generators.hpp"
#include "liemat/lift.hpp"
#include "liemat/rng.hpp"

using namespace liemat;

namespace {

MatrixElement random_element(Sampler& rng, Eigen::Index n) {
  return {rng.vector(n), rng.vector(n), rng.vector(n), rng.vector(n)};
}

MetricAlgebra random_fixture(Sampler& rng) {
  switch (rng.integer(0, 3)) {
    case 0: return gen_heisenberg(rng.integer(1, 2));
    case 1: return gen_abelian(rng.integer(2, 4));
    case 2: return gen_quaternion_heisenberg();
    default: return gen_random_two_step(rng.integer(2, 4), rng.integer(1, 2), rng.raw());
  }
}

}  // namespace

TEST_CASE("matrix element slot algebra") {
  Sampler rng(5, "lift-slots");
  const MatrixElement a = random_element(rng, 3), b = random_element(rng, 3);

  const MatrixElement at = transpose(a);
  REQUIRE((at.x12 - a.x21).norm() == 0.0);
  REQUIRE((at.x21 - a.x12).norm() == 0.0);
  REQUIRE((at.x11 - a.x11).norm() == 0.0);
  REQUIRE((transpose(at) - a).max_abs() == 0.0);

  const MatrixElement as = star(a);
  REQUIRE((as.x11 - a.x22).norm() == 0.0);
  REQUIRE((as.x12 + a.x12).norm() == 0.0);
  REQUIRE((as.x21 + a.x21).norm() == 0.0);
  REQUIRE((star(as) - a).max_abs() == 0.0);

  REQUIRE((unflatten(flatten(a)) - a).max_abs() == 0.0);
  REQUIRE(flatten(a).size() == 12);
  REQUIRE_THROWS_AS(unflatten(Vector::Zero(10)), DimensionError);
  REQUIRE_THROWS_AS(MatrixElement(Vector::Zero(2), Vector::Zero(3), Vector::Zero(3),
                                  Vector::Zero(3)),
                    DimensionError);

  const MatrixElement sum = a + b * 2.0 - a;
  REQUIRE((sum - 2.0 * b).max_abs() < 1e-14);
}

TEST_CASE("slot-wise metric, bracket, and functionals") {
  Sampler rng(5, "lift-metric");
  const MetricAlgebra h3 = gen_heisenberg(1);
  const MatrixElement a = random_element(rng, 3), b = random_element(rng, 3);

  double expect = 0.0;
  for (int s = 0; s < 4; ++s) expect += h3.metric.pair(a.slot(s), b.slot(s));
  REQUIRE(lift_inner(h3.metric, a, b) == Catch::Approx(expect));
  REQUIRE(lift_norm(h3.metric, a) == Catch::Approx(std::sqrt(lift_inner(h3.metric, a, a))));

  const MatrixElement br = lift_bracket(h3.alg, a, b);
  for (int s = 0; s < 4; ++s)
    REQUIRE((br.slot(s) - h3.alg.bracket(a.slot(s), b.slot(s))).norm() == 0.0);

  REQUIRE(o_functional(h3.metric, a) ==
          Catch::Approx(h3.metric.pair(a.x11, a.x22) - h3.metric.pair(a.x21, a.x12)));

  // O is blind to transposition and the star.
  REQUIRE(o_functional(h3.metric, transpose(a)) == Catch::Approx(o_functional(h3.metric, a)));
  REQUIRE(o_functional(h3.metric, star(a)) == Catch::Approx(o_functional(h3.metric, a)));

  REQUIRE(det_form(h3.metric, transpose(a), transpose(b)) ==
          Catch::Approx(det_form(h3.metric, a, b)).margin(1e-12));
  REQUIRE(det_form(h3.metric, star(a), star(b)) ==
          Catch::Approx(det_form(h3.metric, a, b)).margin(1e-12));
  REQUIRE(det_form(h3.metric, a, b) == Catch::Approx(det_form(h3.metric, b, a)).margin(1e-12));

  const Vector e1 = Vector::Unit(3, 0), e2 = Vector::Unit(3, 1);
  REQUIRE(is_cross(h3.metric, MatrixElement{e1, e1, e2, e2}));
  REQUIRE(!is_cross(h3.metric, MatrixElement{e1, e1, e2, e1}));
}

TEST_CASE("lifted algebra is four independent copies of the base") {
  Sampler rng(5, "lift-algebra");
  for (int rep = 0; rep < 8; ++rep) {
    const MetricAlgebra ma = random_fixture(rng);
    const Eigen::Index n = ma.alg.dim();
    const LieAlgebra big = lift_algebra(ma.alg);
    REQUIRE(big.dim() == 4 * n);
    REQUIRE(jacobi_defect(big) <= 1e-12);

    // Block-assembly oracle: slot s of [A, B] is the base bracket of slot s,
    // and brackets across different slots vanish.
    for (int s = 0; s < 4; ++s)
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
          const Vector got = big.bracket(Vector::Unit(4 * n, s * n + i),
                                         Vector::Unit(4 * n, s * n + j));
          Vector want = Vector::Zero(4 * n);
          want.segment(s * n, n) = ma.alg.bracket_basis(i, j);
          REQUIRE((got - want).norm() < 1e-14);
          const int other = (s + 1) % 4;
          REQUIRE(big.bracket(Vector::Unit(4 * n, s * n + i),
                              Vector::Unit(4 * n, other * n + j))
                      .norm() == 0.0);
        }

    const InnerProduct bigg = lift_metric(ma.metric);
    const MatrixElement a = random_element(rng, n), b = random_element(rng, n);
    REQUIRE(bigg.pair(flatten(a), flatten(b)) == Catch::Approx(lift_inner(ma.metric, a, b)));
    REQUIRE((big.bracket(flatten(a), flatten(b)) - flatten(lift_bracket(ma.alg, a, b))).norm() <
            1e-12);
  }
}

TEST_CASE("levi-civita of the lift equals the slot-wise lifted connection") {
  Sampler rng(5, "lift-connection");
  for (int rep = 0; rep < 6; ++rep) {
    const MetricAlgebra ma = random_fixture(rng);
    const Eigen::Index n = ma.alg.dim();
    const ConnectionCoefficients conn = levi_civita(ma.alg, ma.metric);
    const LieAlgebra big = lift_algebra(ma.alg);
    const InnerProduct bigg = lift_metric(ma.metric);
    const ConnectionCoefficients bigconn = levi_civita(big, bigg);

    for (int trial = 0; trial < 25; ++trial) {
      const MatrixElement a = random_element(rng, n), b = random_element(rng, n);
      const Vector direct = bigconn.nabla(flatten(a), flatten(b));
      const Vector slotwise = flatten(lift_connection(conn, a, b));
      REQUIRE((direct - slotwise).norm() < 1e-10 * (1.0 + slotwise.norm()));
    }
  }
}

TEST_CASE("slot-wise curvature of the heisenberg lift reproduces base values") {
  const MetricAlgebra h3 = gen_heisenberg(1);
  const ConnectionCoefficients conn = levi_civita(h3.alg, h3.metric);
  const Vector e1 = Vector::Unit(3, 0), e2 = Vector::Unit(3, 1);
  const MatrixElement a{e1, e1, e1, e1}, b{e2, e2, e2, e2};
  const auto ks = lift_sectional(conn, h3.alg, h3.metric, a, b);
  for (double k : ks) REQUIRE(k == Catch::Approx(-0.75).epsilon(1e-9));

  const MatrixElement r = lift_curvature(conn, h3.alg, a, b, b);
  for (int s = 0; s < 4; ++s) REQUIRE((r.slot(s) + 0.75 * e1).norm() < 1e-10);
}

TEST_CASE("type classification against a split of the base") {
  const MetricAlgebra h3 = gen_heisenberg(1);
  Matrix cols(3, 2);
  cols.col(0) = Vector::Unit(3, 0);
  cols.col(1) = Vector::Unit(3, 2);
  const TypeDecomposition dec = type_decomposition(h3.alg, h3.metric, SubspaceBasis(cols));
  REQUIRE(dec.n.dim() == 1);
  REQUIRE(dec.n.contains(Vector::Unit(3, 1)));

  const Vector h1 = Vector::Unit(3, 0), h2 = Vector::Unit(3, 2), nv = Vector::Unit(3, 1);
  REQUIRE(classify_type(MatrixElement{h1, h2, nv, nv}, dec) == ElementType::C1);
  REQUIRE(classify_type(MatrixElement{nv, nv, h1, h2}, dec) == ElementType::C1Swapped);
  REQUIRE(classify_type(MatrixElement{h1, nv, nv, h2}, dec) == ElementType::C2);
  REQUIRE(classify_type(MatrixElement{h1, nv, h2, nv}, dec) == ElementType::C3);
  REQUIRE(classify_type(MatrixElement{nv, h1, nv, h2}, dec) == ElementType::C3Swapped);
  REQUIRE(classify_type(MatrixElement{h1, h1, h1, nv}, dec) == ElementType::None);
  REQUIRE(classify_type(MatrixElement::zero(3), dec) == ElementType::C1);

  REQUIRE(std::string(to_string(ElementType::C1)) == "C1");
  REQUIRE(std::string(to_string(ElementType::C1Swapped)) == "C1-swapped");
  REQUIRE(std::string(to_string(ElementType::None)) == "none");

  Matrix open(3, 2);
  open.col(0) = Vector::Unit(3, 0);
  open.col(1) = Vector::Unit(3, 1);
  REQUIRE_THROWS_AS(type_decomposition(h3.alg, h3.metric, SubspaceBasis(open)), ValidationError);
}

TEST_CASE("lift decomposition splits elements orthogonally") {
  Sampler rng(5, "lift-decompose");
  const MetricAlgebra h3 = gen_heisenberg(1);
  Matrix cols(3, 2);
  cols.col(0) = Vector::Unit(3, 0);
  cols.col(1) = Vector::Unit(3, 2);
  const TypeDecomposition dec = type_decomposition(h3.alg, h3.metric, SubspaceBasis(cols));

  for (int rep = 0; rep < 20; ++rep) {
    const MatrixElement a = random_element(rng, 3);
    const LiftDecomposition d = decompose_lift(h3.metric, a, dec);
    REQUIRE((d.h_part + d.n_part + d.c_part - a).max_abs() < 1e-10);
    REQUIRE(std::abs(lift_inner(h3.metric, d.h_part, d.n_part)) < 1e-10);
    REQUIRE(std::abs(lift_inner(h3.metric, d.h_part, d.c_part)) < 1e-10);
    REQUIRE(std::abs(lift_inner(h3.metric, d.n_part, d.c_part)) < 1e-10);
  }

  const Vector h1 = Vector::Unit(3, 0), h2 = Vector::Unit(3, 2);
  const MatrixElement pure{h1, h2, h1 + h2, h1};
  const LiftDecomposition d = decompose_lift(h3.metric, pure, dec);
  REQUIRE((d.h_part - pure).max_abs() < 1e-12);
  REQUIRE(d.n_part.max_abs() < 1e-12);
  REQUIRE(d.c_part.max_abs() < 1e-12);
}
