#include <cmath>

#include "catch_amalgamated.hpp"
#include "liemat/generators.hpp"
#include "liemat/nilpotent.hpp"
#include "liemat/rng.hpp"

using namespace liemat;

TEST_CASE("center split separates central and complement parts") {
  const MetricAlgebra h3 = gen_heisenberg(1);
  const CenterSplit sp = center_split(h3.alg, h3.metric);
  REQUIRE(sp.z.dim() == 1);
  REQUIRE(sp.z_perp.dim() == 2);
  REQUIRE(sp.z.contains(Vector::Unit(3, 2)));

  Sampler rng(17, "nilpotent-split");
  const Vector v = rng.vector(3);
  REQUIRE((sp.center_part(v) + sp.complement_part(v) - v).norm() < 1e-12);
  REQUIRE(std::abs(h3.metric.pair(sp.center_part(v), sp.complement_part(v))) < 1e-12);

  const CenterSplit q = center_split(gen_quaternion_heisenberg().alg,
                                     gen_quaternion_heisenberg().metric);
  REQUIRE(q.z.dim() == 3);
  REQUIRE(q.zperp_frame.cols() == 4);
}

TEST_CASE("two-step detection") {
  REQUIRE(is_two_step(gen_heisenberg(1).alg));
  REQUIRE(is_two_step(gen_heisenberg(3).alg));
  REQUIRE(is_two_step(gen_quaternion_heisenberg().alg));
  REQUIRE(is_two_step(gen_abelian(3).alg));  // degenerately: class 1

  // filiform of class 3
  LieAlgebra fil(4);
  fil.set_bracket(0, 1, Vector::Unit(4, 2));
  fil.set_bracket(0, 2, Vector::Unit(4, 3));
  REQUIRE(!is_two_step(fil));

  // so(3) is not nilpotent at all
  LieAlgebra so3(3);
  so3.set_bracket(0, 1, Vector::Unit(3, 2));
  so3.set_bracket(1, 2, Vector::Unit(3, 0));
  so3.set_bracket(0, 2, Vector(-Vector::Unit(3, 1)));
  REQUIRE(!is_two_step(so3));
}

TEST_CASE("central j map satisfies its defining identity") {
  const MetricAlgebra h3 = gen_heisenberg(1);
  const CentralJMap jm(h3.alg, h3.metric, center_split(h3.alg, h3.metric));
  const Vector e1 = Vector::Unit(3, 0), e2 = Vector::Unit(3, 1), e3 = Vector::Unit(3, 2);

  REQUIRE((jm.apply(e3, e1) - e2).norm() < 1e-12);
  REQUIRE((jm.apply(e3, e2) + e1).norm() < 1e-12);

  Sampler rng(17, "nilpotent-jdef");
  const CenterSplit& sp = jm.split();
  for (int trial = 0; trial < 100; ++trial) {
    const Vector x = sp.zperp_frame * rng.vector(2), y = sp.zperp_frame * rng.vector(2);
    const Vector z = sp.z_frame * rng.vector(1);
    REQUIRE(h3.metric.pair(jm.apply(z, x), y) ==
            Catch::Approx(h3.metric.pair(h3.alg.bracket(x, y), z)).margin(1e-12));
    // skew in x, y and linear in z
    REQUIRE(h3.metric.pair(jm.apply(z, x), x) == Catch::Approx(0.0).margin(1e-12));
    REQUIRE((jm.apply(2.0 * z, x) - 2.0 * jm.apply(z, x)).norm() < 1e-12);
  }

  LieAlgebra fil(4);
  fil.set_bracket(0, 1, Vector::Unit(4, 2));
  fil.set_bracket(0, 2, Vector::Unit(4, 3));
  const InnerProduct id4 = InnerProduct::identity(4);
  REQUIRE_THROWS_AS(CentralJMap(fil, id4, center_split(fil, id4)), ValidationError);
}

TEST_CASE("heisenberg-type verdicts across the fixtures") {
  for (int m = 1; m <= 3; ++m) {
    const MetricAlgebra h = gen_heisenberg(m);
    const Verdict v = is_h_type(h.alg, h.metric);
    REQUIRE(v.ok);
    REQUIRE(v.residual < 1e-10);
  }
  const MetricAlgebra q7 = gen_quaternion_heisenberg();
  REQUIRE(is_h_type(q7.alg, q7.metric).ok);

  // Stretching the center to norm 2 makes j(unit z) a rotation by 2:
  // j^2 = -4 Id against -|z|^2 Id = -Id leaves a defect of exactly 3.
  Matrix gram = Matrix::Identity(3, 3);
  gram(2, 2) = 4.0;
  const Verdict scaled = is_h_type(gen_heisenberg(1).alg, InnerProduct(gram));
  REQUIRE(!scaled.ok);
  REQUIRE(scaled.residual == Catch::Approx(3.0));

  // the whole algebra is central, so there is nothing to check
  const Verdict ab = is_h_type(gen_abelian(4).alg, InnerProduct::identity(4));
  REQUIRE(ab.ok);
  REQUIRE(ab.detail == "trivial: no complement directions");

  LieAlgebra fil(4);
  fil.set_bracket(0, 1, Vector::Unit(4, 2));
  fil.set_bracket(0, 2, Vector::Unit(4, 3));
  const Verdict three_step = is_h_type(fil, InnerProduct::identity(4));
  REQUIRE(!three_step.ok);
  REQUIRE(three_step.detail == "algebra is not 2-step nilpotent");
  REQUIRE(std::isnan(three_step.residual));
}

TEST_CASE("closed-form two-step connection equals the koszul solve") {
  Sampler rng(17, "nilpotent-conn");
  std::vector<MetricAlgebra> fixtures;
  fixtures.push_back(gen_heisenberg(1));
  fixtures.push_back(gen_heisenberg(2));
  fixtures.push_back(gen_quaternion_heisenberg());
  for (int rep = 0; rep < 4; ++rep)
    fixtures.push_back(gen_random_two_step(rng.integer(2, 4), rng.integer(1, 2), rng.raw()));

  for (const MetricAlgebra& ma : fixtures) {
    const ConnectionCoefficients direct = levi_civita(ma.alg, ma.metric);
    const ConnectionCoefficients closed = two_step_connection(ma.alg, ma.metric);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < ma.alg.dim(); ++i)
      worst = std::max(worst, (direct.gamma[i] - closed.gamma[i]).cwiseAbs().maxCoeff());
    REQUIRE(worst < 1e-10);
  }
}

TEST_CASE("center recovery identity on heisenberg-type algebras") {
  for (int m = 1; m <= 3; ++m) {
    const MetricAlgebra h = gen_heisenberg(m);
    REQUIRE(htype_center_recovery_check(h.alg, h.metric).ok);
  }
  const MetricAlgebra q7 = gen_quaternion_heisenberg();
  REQUIRE(htype_center_recovery_check(q7.alg, q7.metric).ok);

  Matrix gram = Matrix::Identity(3, 3);
  gram(2, 2) = 4.0;
  REQUIRE(!htype_center_recovery_check(gen_heisenberg(1).alg, InnerProduct(gram)).ok);
}

TEST_CASE("lifted j acts slot-wise and its anticommutator is scalar on h-type") {
  const MetricAlgebra q7 = gen_quaternion_heisenberg();
  const CentralJMap jm(q7.alg, q7.metric, center_split(q7.alg, q7.metric));
  const CenterSplit& sp = jm.split();
  Sampler rng(17, "nilpotent-lifted");

  auto central = [&]() {
    return MatrixElement{sp.z_frame * rng.vector(3), sp.z_frame * rng.vector(3),
                         sp.z_frame * rng.vector(3), sp.z_frame * rng.vector(3)};
  };
  auto complement = [&]() {
    return MatrixElement{sp.zperp_frame * rng.vector(4), sp.zperp_frame * rng.vector(4),
                         sp.zperp_frame * rng.vector(4), sp.zperp_frame * rng.vector(4)};
  };

  for (int trial = 0; trial < 50; ++trial) {
    const MatrixElement b = central(), c = central(), a = complement();

    const MatrixElement ja = lifted_j(jm, b, a);
    for (int s = 0; s < 4; ++s)
      REQUIRE((ja.slot(s) - jm.apply(b.slot(s), a.slot(s))).norm() < 1e-12);

    const Matrix acc = lifted_j_anticommutator(jm, b, c);
    const double inner = lift_inner(q7.metric, b, c);
    REQUIRE((acc + 2.0 * inner * Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() <
            1e-9 * (1.0 + std::abs(inner)));

    // slot-wise center recovery: [a_s, (jbar(B) A)_s] = |a_s|^2 b_s
    for (int s = 0; s < 4; ++s) {
      const Vector lhs = q7.alg.bracket(a.slot(s), ja.slot(s));
      const Vector rhs = q7.metric.norm2(a.slot(s)) * b.slot(s);
      REQUIRE((lhs - rhs).norm() < 1e-9 * (1.0 + rhs.norm()));
    }
  }

  // four unit central slots give exactly -8 times the identity
  const Vector z = sp.z_frame.col(0);
  const MatrixElement b{z, z, z, z};
  const Matrix acc = lifted_j_anticommutator(jm, b, b);
  REQUIRE((acc + 8.0 * Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
}
