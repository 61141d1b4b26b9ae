#include "catch_amalgamated.hpp"
#include "liemat/linalg.hpp"
#include "liemat/rng.hpp"

using namespace liemat;

TEST_CASE("orthonormal_span detects rank and returns orthonormal columns") {
  Sampler rng(7, "linalg-span");
  for (int rep = 0; rep < 20; ++rep) {
    const int n = rng.integer(2, 8);
    const int r = rng.integer(1, n);
    const Matrix a = rng.matrix(n, r);
    Matrix padded(n, r + 2);
    padded.leftCols(r) = a;
    padded.col(r) = a.col(0) * 2.0 - a.col(r - 1);
    padded.col(r + 1) = Vector::Zero(n);
    const Matrix q = orthonormal_span(padded);
    REQUIRE(q.cols() == r);
    REQUIRE((q.transpose() * q - Matrix::Identity(r, r)).cwiseAbs().maxCoeff() < 1e-12);
    for (int c = 0; c < r; ++c)
      REQUIRE((a.col(c) - q * (q.transpose() * a.col(c))).norm() < 1e-9 * a.col(c).norm());
  }
}

TEST_CASE("kernel spans exactly the null space") {
  Sampler rng(7, "linalg-kernel");
  for (int rep = 0; rep < 20; ++rep) {
    const int n = rng.integer(2, 7);
    const int r = rng.integer(1, n - 1);
    const Matrix a = rng.matrix(r, n);
    const Matrix k = kernel(a);
    REQUIRE(k.cols() == n - numeric_rank(a));
    if (k.cols() > 0) REQUIRE((a * k).cwiseAbs().maxCoeff() < 1e-10);
  }
  REQUIRE(kernel(Matrix::Identity(4, 4)).cols() == 0);
  REQUIRE(kernel(Matrix::Zero(3, 5)).cols() == 5);
}

TEST_CASE("numeric_rank ignores tiny singular values") {
  Matrix a(3, 3);
  a << 1, 0, 0, 0, 1e-15, 0, 0, 0, 0;
  REQUIRE(numeric_rank(a) == 1);
  REQUIRE(numeric_rank(Matrix::Identity(5, 5)) == 5);
  REQUIRE(numeric_rank(Matrix(0, 0)) == 0);
}

TEST_CASE("inner product validates its gram matrix") {
  Matrix asym(2, 2);
  asym << 1, 0.5, -0.5, 1;
  REQUIRE_THROWS_AS(InnerProduct(asym), ValidationError);

  Matrix indef(2, 2);
  indef << 1, 0, 0, -1;
  REQUIRE_THROWS_AS(InnerProduct(indef), ValidationError);

  REQUIRE_THROWS_AS(InnerProduct(Matrix::Zero(2, 3)), DimensionError);

  Matrix nearly(2, 2);
  nearly << 2, 1 + 1e-13, 1, 2;
  const InnerProduct g(nearly);
  REQUIRE(g.gram()(0, 1) == g.gram()(1, 0));
}

TEST_CASE("inner product pairing, norms, and solve") {
  Sampler rng(7, "linalg-ip");
  for (int rep = 0; rep < 10; ++rep) {
    const int n = rng.integer(1, 6);
    const InnerProduct g(rng.spd(n));
    const Vector x = rng.vector(n), y = rng.vector(n);
    REQUIRE(g.pair(x, y) == Catch::Approx(g.pair(y, x)));
    REQUIRE(g.norm2(x) >= 0.0);
    REQUIRE(g.norm(x) == Catch::Approx(std::sqrt(g.norm2(x))));
    const Vector rhs = rng.vector(n);
    REQUIRE((g.gram() * g.solve(rhs) - rhs).norm() < 1e-10 * (1.0 + rhs.norm()));
  }
  const InnerProduct id = InnerProduct::identity(3);
  REQUIRE(id.pair(Vector::Unit(3, 0), Vector::Unit(3, 1)) == 0.0);
  REQUIRE(id.norm2(Vector::Unit(3, 2)) == 1.0);
}

TEST_CASE("gram_schmidt produces a g-orthonormal frame and drops dependents") {
  Sampler rng(7, "linalg-gs");
  for (int rep = 0; rep < 10; ++rep) {
    const int n = rng.integer(2, 7);
    const InnerProduct g(rng.spd(n));
    const int r = rng.integer(1, n);
    Matrix v(n, r + 1);
    v.leftCols(r) = rng.matrix(n, r);
    v.col(r) = v.col(0);
    const Matrix q = gram_schmidt(v, g);
    REQUIRE(q.cols() == r);
    for (int i = 0; i < q.cols(); ++i)
      for (int j = 0; j < q.cols(); ++j)
        REQUIRE(g.pair(q.col(i), q.col(j)) == Catch::Approx(i == j ? 1.0 : 0.0).margin(1e-10));
  }
}

TEST_CASE("subspace basis bookkeeping") {
  Matrix cols(4, 2);
  cols.setZero();
  cols(0, 0) = 1.0;
  cols(1, 1) = 2.0;
  const SubspaceBasis b(cols);
  REQUIRE(b.ambient_dim() == 4);
  REQUIRE(b.dim() == 2);
  REQUIRE(b.contains(Vector::Unit(4, 0)));
  REQUIRE(b.contains(Vector::Unit(4, 1)));
  REQUIRE(!b.contains(Vector::Unit(4, 2)));
  REQUIRE(b.containment_residual(Vector::Unit(4, 3)) == Catch::Approx(1.0));

  Matrix dup(4, 3);
  dup.col(0) = Vector::Unit(4, 0);
  dup.col(1) = Vector::Unit(4, 0) * 3.0;
  dup.col(2) = Vector::Unit(4, 2);
  const SubspaceBasis spanned = SubspaceBasis::span_of(dup);
  REQUIRE(spanned.dim() == 2);
  REQUIRE(spanned.contains(Vector::Unit(4, 2)));

  const SubspaceBasis full = SubspaceBasis::full(4);
  REQUIRE(full.contains_subspace(b));
  REQUIRE(!b.contains_subspace(full));
  REQUIRE(b.same_span(SubspaceBasis(cols * 2.0)));

  REQUIRE_THROWS_AS(SubspaceBasis(dup), ValidationError);
}

TEST_CASE("orthogonal complement splits the space g-orthogonally") {
  Sampler rng(7, "linalg-oc");
  for (int rep = 0; rep < 10; ++rep) {
    const int n = rng.integer(2, 7);
    const InnerProduct g(rng.spd(n));
    const int r = rng.integer(1, n - 1);
    const SubspaceBasis h = SubspaceBasis::span_of(rng.matrix(n, r));
    const SubspaceBasis c = orthogonal_complement(g, h);
    REQUIRE(h.dim() + c.dim() == n);
    for (int i = 0; i < h.dim(); ++i)
      for (int j = 0; j < c.dim(); ++j)
        REQUIRE(std::abs(g.pair(h.vec(i), c.vec(j))) < 1e-10);
  }
  REQUIRE_THROWS_AS(orthogonal_complement(InnerProduct::identity(3), SubspaceBasis(4)),
                    DimensionError);
}
