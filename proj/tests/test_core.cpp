#include "catch_amalgamated.hpp"
#include "liemat/core.hpp"
#include "liemat/generators.hpp"
#include "liemat/rng.hpp"

using namespace liemat;

namespace {

LieAlgebra so3() {
  LieAlgebra a(3);
  a.set_bracket(0, 1, Vector::Unit(3, 2));
  a.set_bracket(1, 2, Vector::Unit(3, 0));
  a.set_bracket(2, 0, Vector::Unit(3, 1));
  return a;
}

}  // namespace

TEST_CASE("bracket storage is antisymmetric and bilinear") {
  const LieAlgebra h3 = gen_heisenberg(1).alg;
  REQUIRE(h3.dim() == 3);
  REQUIRE((h3.bracket_basis(0, 1) - Vector::Unit(3, 2)).norm() == 0.0);
  REQUIRE((h3.bracket_basis(1, 0) + Vector::Unit(3, 2)).norm() == 0.0);
  REQUIRE(h3.bracket_basis(0, 2).norm() == 0.0);

  Sampler rng(3, "core-bilinear");
  const Vector x = rng.vector(3), y = rng.vector(3), z = rng.vector(3);
  const double a = rng.uniform(), b = rng.uniform();
  REQUIRE((h3.bracket(a * x + b * y, z) - a * h3.bracket(x, z) - b * h3.bracket(y, z)).norm() <
          1e-12);
  REQUIRE((h3.bracket(x, y) + h3.bracket(y, x)).norm() < 1e-12);
  REQUIRE((h3.ad(x) * y - h3.bracket(x, y)).norm() < 1e-12);

  LieAlgebra swapped(3);
  swapped.set_bracket(1, 0, -Vector::Unit(3, 2));  // same as [e1, e2] = e3
  REQUIRE((swapped.bracket_basis(0, 1) - Vector::Unit(3, 2)).norm() == 0.0);

  REQUIRE_THROWS_AS(h3.bracket(Vector::Zero(2), Vector::Zero(3)), DimensionError);
  LieAlgebra bad(3);
  REQUIRE_THROWS_AS(bad.set_bracket(1, 1, Vector::Zero(3)), ValidationError);
}

TEST_CASE("jacobi defect is zero on real algebras, positive on fakes") {
  REQUIRE(jacobi_defect(gen_heisenberg(2).alg) == 0.0);
  REQUIRE(jacobi_defect(so3()) == 0.0);
  REQUIRE(jacobi_defect(gen_quaternion_heisenberg().alg) == 0.0);

  // [e1,[e2,e3]] + cyclic = e3 here, so the defect is exactly 1.
  LieAlgebra broken(3);
  broken.set_bracket(0, 1, Vector::Unit(3, 2));
  broken.set_bracket(0, 2, Vector::Unit(3, 1));
  broken.set_bracket(1, 2, Vector::Unit(3, 1));
  REQUIRE(jacobi_defect(broken) == Catch::Approx(1.0));
}

TEST_CASE("center computation") {
  const SubspaceBasis zh = center(gen_heisenberg(1).alg);
  REQUIRE(zh.dim() == 1);
  REQUIRE(zh.contains(Vector::Unit(3, 2)));

  REQUIRE(center(gen_abelian(4).alg).dim() == 4);
  REQUIRE(center(so3()).dim() == 0);
  REQUIRE(center(gen_quaternion_heisenberg().alg).dim() == 3);
}

TEST_CASE("lower central series and nilpotency class") {
  const LowerCentralSeries h = lower_central_series(gen_heisenberg(3).alg);
  REQUIRE(h.nilpotent());
  REQUIRE(*h.nilpotency_class == 2);
  REQUIRE(h.terms.size() == 3);
  REQUIRE(h.terms[1].dim() == 1);

  const LowerCentralSeries ab = lower_central_series(gen_abelian(2).alg);
  REQUIRE(ab.nilpotent());
  REQUIRE(*ab.nilpotency_class == 1);

  const LowerCentralSeries s = lower_central_series(so3());
  REQUIRE(!s.nilpotent());

  // Standard filiform algebra: [e1, e_i] = e_{i+1} climbs one step per term.
  LieAlgebra fil(4);
  fil.set_bracket(0, 1, Vector::Unit(4, 2));
  fil.set_bracket(0, 2, Vector::Unit(4, 3));
  const LowerCentralSeries f = lower_central_series(fil);
  REQUIRE(f.nilpotent());
  REQUIRE(*f.nilpotency_class == 3);
}

TEST_CASE("killing form and semisimplicity") {
  const Matrix b = killing_form(so3());
  REQUIRE((b + 2.0 * Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
  REQUIRE(is_semisimple(so3()).ok);

  const Verdict nil = is_semisimple(gen_heisenberg(1).alg);
  REQUIRE(!nil.ok);
  // ad e_i ad e_j kills everything on a 2-step algebra with central image.
  REQUIRE(killing_form(gen_heisenberg(1).alg).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("normalizer in the three-dimensional Heisenberg algebra") {
  const LieAlgebra h3 = gen_heisenberg(1).alg;

  Matrix e1(3, 1);
  e1 = Vector::Unit(3, 0);
  const SubspaceBasis n1 = normalizer(h3, SubspaceBasis(e1));
  REQUIRE(n1.dim() == 2);
  REQUIRE(n1.contains(Vector::Unit(3, 0)));
  REQUIRE(n1.contains(Vector::Unit(3, 2)));

  // The center is an ideal, so its normalizer is everything.
  REQUIRE(normalizer(h3, center(h3)).dim() == 3);
}

TEST_CASE("subalgebra restriction and the Cartan test") {
  const LieAlgebra h3 = gen_heisenberg(1).alg;
  Matrix cols(3, 2);
  cols.col(0) = Vector::Unit(3, 0);
  cols.col(1) = Vector::Unit(3, 2);
  const LieAlgebra sub = restrict_to_subalgebra(h3, SubspaceBasis(cols));
  REQUIRE(sub.dim() == 2);
  REQUIRE(sub.max_abs_c() == 0.0);

  Matrix open(3, 2);
  open.col(0) = Vector::Unit(3, 0);
  open.col(1) = Vector::Unit(3, 1);
  REQUIRE_THROWS_AS(restrict_to_subalgebra(h3, SubspaceBasis(open)), ValidationError);

  Matrix e3(3, 1);
  e3 = Vector::Unit(3, 2);
  const Verdict cartan = is_cartan(so3(), SubspaceBasis(e3));
  REQUIRE(cartan.ok);

  // The center of a nilpotent algebra never self-normalizes.
  const Verdict not_cartan = is_cartan(h3, center(h3));
  REQUIRE(!not_cartan.ok);
}

TEST_CASE("ideal test") {
  const LieAlgebra h3 = gen_heisenberg(1).alg;
  REQUIRE(is_ideal(h3, center(h3)).ok);

  Matrix e1(3, 1);
  e1 = Vector::Unit(3, 0);
  const Verdict v = is_ideal(h3, SubspaceBasis(e1));
  REQUIRE(!v.ok);
  REQUIRE(v.residual > 0.5);
  REQUIRE(v.witness.size() == 2);
}

TEST_CASE("bi-invariance of the metric") {
  REQUIRE(biinvariance_check(so3(), InnerProduct::identity(3)).ok);

  const MetricAlgebra h3 = gen_heisenberg(1);
  const Verdict v = biinvariance_check(h3.alg, h3.metric);
  REQUIRE(!v.ok);
  REQUIRE(v.witness.size() == 3);

  REQUIRE(biinvariance_check(gen_abelian(3).alg, InnerProduct(Matrix::Identity(3, 3) * 2.0)).ok);
}
