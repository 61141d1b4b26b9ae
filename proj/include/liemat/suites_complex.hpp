#pragma once

#include "liemat/harness.hpp"

namespace liemat {

/// Hermitian structure lifted slot-wise, the two column/row twists and their
/// O-values, type membership under invariant and anti-invariant splittings,
/// and the contact-metric block. Entries gate on the structures the algebra
/// actually carries and report VACUOUS otherwise.
inline void register_complex(std::vector<EntryDef>& out, const SuiteContext& ctx) {
  using harness::in_frame;
  using harness::orthogonal_to;
  using harness::slots_json;
  using harness::vj;
  using harness::with_pairing;
  const Eigen::Index n = ctx.n;

  auto vacuous = [&out](std::string id, std::string anchor, std::string why) {
    out.push_back({std::move(id), std::move(anchor), std::move(why), nullptr, 0});
  };
  // Pushes the entry when the algebra carries a Hermitian structure.
  auto with_ac = [&](std::string id, std::string anchor, std::string note,
                     std::function<std::optional<Trial>(Sampler&)> run, int override_trials = 0) {
    if (!ctx.ac) {
      vacuous(std::move(id), std::move(anchor), ctx.ac_absent);
      return;
    }
    out.push_back({std::move(id), std::move(anchor), std::move(note), std::move(run),
                   override_trials});
  };

  auto J = [&ctx](const Vector& v) { return ctx.ac->apply(v); };
  // g(J a, b)
  auto jp = [&ctx](const Vector& a, const Vector& b) {
    return ctx.g.pair(ctx.ac->apply(a), b);
  };
  auto relem = [n](Sampler& rng) {
    return MatrixElement{rng.vector(n), rng.vector(n), rng.vector(n), rng.vector(n)};
  };
  auto sc2 = [](const MatrixElement& a, const MatrixElement& b) {
    return 1.0 + a.max_abs() * b.max_abs();
  };
  auto sc4 = [](const MatrixElement& a, const MatrixElement& b) {
    const double p = a.max_abs() * b.max_abs();
    return 1.0 + p * p;
  };

  with_ac("complex.hermitian_axioms", "J^2 = -Id and g(JX, JY) = g(X, Y)", "",
          [&ctx, J](Sampler& rng) -> std::optional<Trial> {
            const Vector x = rng.vector(ctx.n), y = rng.vector(ctx.n);
            const double square = (J(J(x)) + x).norm() / (1.0 + x.norm());
            const double isometry = std::abs(ctx.g.pair(J(x), J(y)) - ctx.g.pair(x, y)) /
                                    (1.0 + ctx.g.norm(x) * ctx.g.norm(y));
            return Trial{std::max(square, isometry), {{"X", vj(x)}, {"Y", vj(y)}}};
          });

  with_ac("complex.lifted_hermitian", "Jbar Jbar A = -A", "",
          [&ctx, relem](Sampler& rng) -> std::optional<Trial> {
            const MatrixElement a = relem(rng);
            const MatrixElement r = lifted_ac(*ctx.ac, lifted_ac(*ctx.ac, a)) + a;
            return Trial{lift_norm(ctx.g, r) / (1.0 + lift_norm(ctx.g, a)),
                         {{"A", slots_json(a)}}};
          });

  with_ac("complex.lifted_isometry", "<Jbar A, Jbar B> = <A, B>", "",
          [&ctx, relem, sc2](Sampler& rng) -> std::optional<Trial> {
            const MatrixElement a = relem(rng), b = relem(rng);
            const double r = std::abs(lift_inner(ctx.g, lifted_ac(*ctx.ac, a),
                                                 lifted_ac(*ctx.ac, b)) -
                                      lift_inner(ctx.g, a, b));
            return Trial{r / sc2(a, b), {{"A", slots_json(a)}, {"B", slots_json(b)}}};
          });

  with_ac("complex.lifted_skew_pairing", "<Jbar A, A> = 0", "",
          [&ctx, relem, sc2](Sampler& rng) -> std::optional<Trial> {
            const MatrixElement a = relem(rng);
            return Trial{std::abs(lift_inner(ctx.g, lifted_ac(*ctx.ac, a), a)) / sc2(a, a),
                         {{"A", slots_json(a)}}};
          });

  with_ac("complex.o_invariance", "O(Jbar A) = O(A)", "",
          [&ctx, relem, sc2](Sampler& rng) -> std::optional<Trial> {
            const MatrixElement a = relem(rng);
            const double r =
                std::abs(o_functional(ctx.g, lifted_ac(*ctx.ac, a)) - o_functional(ctx.g, a));
            return Trial{r / sc2(a, a), {{"A", slots_json(a)}}};
          });

  with_ac("complex.o_twist_first", "O([[JX,W],[Z,Y]]) = O([[X,W],[Z,-JY]])", "",
          [&ctx, J, sc2](Sampler& rng) -> std::optional<Trial> {
            const Vector x = rng.vector(ctx.n), w = rng.vector(ctx.n);
            const Vector z = rng.vector(ctx.n), y = rng.vector(ctx.n);
            const MatrixElement a1{J(x), w, z, y};
            const MatrixElement a2{x, w, z, Vector(-J(y))};
            const double r = std::abs(o_functional(ctx.g, a1) - o_functional(ctx.g, a2));
            return Trial{r / sc2(a1, a2),
                         {{"X", vj(x)}, {"W", vj(w)}, {"Z", vj(z)}, {"Y", vj(y)}}};
          });

  with_ac("complex.o_twist_swapped", "O([[JX,W],[Z,Y]]) = O([[Z,JY],[X,W]])",
          "swapping the rows negates O up to the diagonal terms; the two sides differ by "
          "2 g(Z,W)",
          [&ctx, J, sc2, t = 0](Sampler& rng) mutable -> std::optional<Trial> {
            Vector x, w, z, y;
            if (t++ == 0) {
              x = Vector::Unit(ctx.n, 0);
              y = Vector::Unit(ctx.n, 0);
              z = Vector::Unit(ctx.n, 0);
              w = z;
            } else {
              x = rng.vector(ctx.n);
              w = rng.vector(ctx.n);
              z = rng.vector(ctx.n);
              y = rng.vector(ctx.n);
            }
            const MatrixElement a1{J(x), w, z, y};
            const MatrixElement a3{z, J(y), x, w};
            const double r = std::abs(o_functional(ctx.g, a1) - o_functional(ctx.g, a3));
            return Trial{r / sc2(a1, a3),
                         {{"X", vj(x)}, {"W", vj(w)}, {"Z", vj(z)}, {"Y", vj(y)}}};
          });

  with_ac("complex.o_double_twist",
          "O([[JX,JW],[Z,Y]]) = O([[X,W],[-JZ,-JY]]) = O([[JZ,JY],[X,W]])", "",
          [&ctx, J, sc2](Sampler& rng) -> std::optional<Trial> {
            const Vector x = rng.vector(ctx.n), w = rng.vector(ctx.n);
            const Vector z = rng.vector(ctx.n), y = rng.vector(ctx.n);
            const MatrixElement a1{J(x), J(w), z, y};
            const MatrixElement a2{x, w, Vector(-J(z)), Vector(-J(y))};
            const MatrixElement a3{J(z), J(y), x, w};
            const double o1 = o_functional(ctx.g, a1);
            const double r = std::max(std::abs(o1 - o_functional(ctx.g, a2)),
                                      std::abs(o1 - o_functional(ctx.g, a3)));
            return Trial{r / sc2(a1, a3),
                         {{"X", vj(x)}, {"W", vj(w)}, {"Z", vj(z)}, {"Y", vj(y)}}};
          });

  with_ac("complex.jbar_orthogonality_triple",
          "<Jbar A, At> = <Jbar A, A*> = <Jbar At, A*> = 0", "",
          [&ctx, relem, sc2](Sampler& rng) -> std::optional<Trial> {
            const MatrixElement a = relem(rng);
            const MatrixElement ja = lifted_ac(*ctx.ac, a);
            const MatrixElement at = transpose(a), as = star(a);
            const double r = std::max({std::abs(lift_inner(ctx.g, ja, at)),
                                       std::abs(lift_inner(ctx.g, ja, as)),
                                       std::abs(lift_inner(ctx.g, lifted_ac(*ctx.ac, at), as))});
            return Trial{r / sc2(a, a), {{"A", slots_json(a)}}};
          });

  with_ac("complex.jbar_transpose", "Jbar(At) = (Jbar A)t", "",
          [&ctx, relem](Sampler& rng) -> std::optional<Trial> {
            const MatrixElement a = relem(rng);
            const MatrixElement r =
                lifted_ac(*ctx.ac, transpose(a)) - transpose(lifted_ac(*ctx.ac, a));
            return Trial{lift_norm(ctx.g, r) / (1.0 + lift_norm(ctx.g, a)),
                         {{"A", slots_json(a)}}};
          });

  with_ac("complex.jbar_star", "Jbar(A*) = (Jbar A)*", "",
          [&ctx, relem](Sampler& rng) -> std::optional<Trial> {
            const MatrixElement a = relem(rng);
            const MatrixElement r = lifted_ac(*ctx.ac, star(a)) - star(lifted_ac(*ctx.ac, a));
            return Trial{lift_norm(ctx.g, r) / (1.0 + lift_norm(ctx.g, a)),
                         {{"A", slots_json(a)}}};
          });

  with_ac("complex.jbar_antisymmetric_transpose",
          "A = -At forces Jbar(At) = -(Jbar A)t",
          "transposition only moves slots and never touches J, so Jbar(At) equals +(Jbar A)t "
          "for every A; the sign flip would force Jbar A = 0",
          [&ctx, relem](Sampler& rng) -> std::optional<Trial> {
            const Vector w = rng.nonzero_vector(ctx.n);
            const MatrixElement a{Vector::Zero(ctx.n), w, Vector(-w), Vector::Zero(ctx.n)};
            const MatrixElement r =
                lifted_ac(*ctx.ac, transpose(a)) + transpose(lifted_ac(*ctx.ac, a));
            return Trial{lift_norm(ctx.g, r) / (1.0 + lift_norm(ctx.g, a)),
                         {{"A", slots_json(a)}}};
          });

  with_ac("complex.jbar_antistar", "A = -A* forces Jbar(A*) = -(Jbar A)*",
          "the star also only moves slots and flips recorded signs, so Jbar(A*) equals "
          "+(Jbar A)* for every A",
          [&ctx, relem](Sampler& rng) -> std::optional<Trial> {
            const Vector x = rng.nonzero_vector(ctx.n);
            const MatrixElement a{x, rng.vector(ctx.n), rng.vector(ctx.n), Vector(-x)};
            const MatrixElement r = lifted_ac(*ctx.ac, star(a)) + star(lifted_ac(*ctx.ac, a));
            return Trial{lift_norm(ctx.g, r) / (1.0 + lift_norm(ctx.g, a)),
                         {{"A", slots_json(a)}}};
          });

  with_ac("complex.row_twist_transpose", "(A_R)t = (At)_C", "",
          [&ctx, relem](Sampler& rng) -> std::optional<Trial> {
            const MatrixElement a = relem(rng);
            const MatrixElement r =
                transpose(row_twist(*ctx.ac, a)) - column_twist(*ctx.ac, transpose(a));
            return Trial{lift_norm(ctx.g, r) / (1.0 + lift_norm(ctx.g, a)),
                         {{"A", slots_json(a)}}};
          });

  with_ac("complex.twist_isometry", "<A_C, A_C> = <A_R, A_R> = <A, A>", "",
          [&ctx, relem, sc2](Sampler& rng) -> std::optional<Trial> {
            const MatrixElement a = relem(rng);
            const double base = lift_inner(ctx.g, a, a);
            const MatrixElement ac = column_twist(*ctx.ac, a), ar = row_twist(*ctx.ac, a);
            const double r = std::max(std::abs(lift_inner(ctx.g, ac, ac) - base),
                                      std::abs(lift_inner(ctx.g, ar, ar) - base));
            return Trial{r / sc2(a, a), {{"A", slots_json(a)}}};
          });

  with_ac("complex.column_twist_pairing", "<A_C, A> = |W|^2 + |Y|^2", "",
          [&ctx, relem, sc2](Sampler& rng) -> std::optional<Trial> {
            const MatrixElement a = relem(rng);
            const double expected = ctx.g.norm2(a.x12) + ctx.g.norm2(a.x22);
            const double r =
                std::abs(lift_inner(ctx.g, column_twist(*ctx.ac, a), a) - expected);
            return Trial{r / sc2(a, a), {{"A", slots_json(a)}}};
          });

  with_ac("complex.row_twist_pairing", "<A_R, A> = |Z|^2 + |Y|^2", "",
          [&ctx, relem, sc2](Sampler& rng) -> std::optional<Trial> {
            const MatrixElement a = relem(rng);
            const double expected = ctx.g.norm2(a.x21) + ctx.g.norm2(a.x22);
            const double r = std::abs(lift_inner(ctx.g, row_twist(*ctx.ac, a), a) - expected);
            return Trial{r / sc2(a, a), {{"A", slots_json(a)}}};
          });

  with_ac("complex.twist_cross_pairing", "<A_C, A_R> = |X|^2 + |Y|^2", "",
          [&ctx, relem, sc2](Sampler& rng) -> std::optional<Trial> {
            const MatrixElement a = relem(rng);
            const double expected = ctx.g.norm2(a.x11) + ctx.g.norm2(a.x22);
            const double r = std::abs(
                lift_inner(ctx.g, column_twist(*ctx.ac, a), row_twist(*ctx.ac, a)) - expected);
            return Trial{r / sc2(a, a), {{"A", slots_json(a)}}};
          });

  with_ac("complex.twist_o_sum", "O(A_C) + O(A_R) = 2 g(JX, Y)", "",
          [&ctx, relem, jp, sc2](Sampler& rng) -> std::optional<Trial> {
            const MatrixElement a = relem(rng);
            const double lhs = o_functional(ctx.g, column_twist(*ctx.ac, a)) +
                               o_functional(ctx.g, row_twist(*ctx.ac, a));
            return Trial{std::abs(lhs - 2.0 * jp(a.x11, a.x22)) / sc2(a, a),
                         {{"A", slots_json(a)}}};
          });

  with_ac("complex.twist_o_equal",
          "O(A_C) - O(A_R) = -2 g(JZ, W); equal twists force g(JZ, W) = 0", "",
          [&ctx, relem, jp, sc2](Sampler& rng) -> std::optional<Trial> {
            const MatrixElement a = relem(rng);
            const double diff = o_functional(ctx.g, column_twist(*ctx.ac, a)) -
                                o_functional(ctx.g, row_twist(*ctx.ac, a));
            return Trial{std::abs(diff + 2.0 * jp(a.x21, a.x12)) / sc2(a, a),
                         {{"A", slots_json(a)}}};
          });

  with_ac("complex.twisted_det_expansion", "(Jbar At, A*) = -g(JX,Y)^2 + g(JZ,W)^2", "",
          [&ctx, relem, jp, sc4](Sampler& rng) -> std::optional<Trial> {
            const MatrixElement a = relem(rng);
            const double lhs = det_form(ctx.g, lifted_ac(*ctx.ac, transpose(a)), star(a));
            const double c1 = jp(a.x11, a.x22), c2 = jp(a.x21, a.x12);
            return Trial{std::abs(lhs - (-c1 * c1 + c2 * c2)) / sc4(a, a),
                         {{"A", slots_json(a)}}};
          });

  with_ac("complex.twisted_det_vanishing_literal", "(Jbar At, A*) = 0 forces O(A_C) = 0",
          "the vanishing only pins g(JZ,W) = +-g(JX,Y); on the minus branch O(A_C) = "
          "2 g(JX,Y) survives",
          [&ctx, J, jp, sc2, t = 0](Sampler& rng) mutable -> std::optional<Trial> {
            const double s = (t++ % 2 == 0) ? -1.0 : 1.0;
            const Vector x = rng.nonzero_vector(ctx.n), y = rng.vector(ctx.n);
            const Vector z = rng.nonzero_vector(ctx.n);
            const Vector jz = J(z);
            if (ctx.g.norm2(jz) < 1e-12) return std::nullopt;
            const double c = jp(x, y);
            const Vector w = with_pairing(ctx.g, rng.vector(ctx.n), jz, s * c);
            const MatrixElement a{x, w, z, y};
            const double hyp =
                std::abs(det_form(ctx.g, lifted_ac(*ctx.ac, transpose(a)), star(a)));
            const double r = std::abs(o_functional(ctx.g, column_twist(*ctx.ac, a)));
            return Trial{std::max(r, hyp) / sc2(a, a),
                         {{"A", slots_json(a)}, {"branch", s}}};
          });

  with_ac("complex.twisted_det_vanishing_matched",
          "(Jbar At, A*) = 0 with g(JZ,W) = g(JX,Y) forces O(A_C) = 0", "",
          [&ctx, J, jp, sc2](Sampler& rng) -> std::optional<Trial> {
            const Vector x = rng.nonzero_vector(ctx.n), y = rng.vector(ctx.n);
            const Vector z = rng.nonzero_vector(ctx.n);
            const Vector jz = J(z);
            if (ctx.g.norm2(jz) < 1e-12) return std::nullopt;
            const Vector w = with_pairing(ctx.g, rng.vector(ctx.n), jz, jp(x, y));
            const MatrixElement a{x, w, z, y};
            const double hyp =
                std::abs(det_form(ctx.g, lifted_ac(*ctx.ac, transpose(a)), star(a)));
            const double r = std::abs(o_functional(ctx.g, column_twist(*ctx.ac, a)));
            return Trial{std::max(r, hyp) / sc2(a, a), {{"A", slots_json(a)}}};
          });

  with_ac("complex.row_twist_zero_implies", "O(A_R) = 0 forces O(A_C) = 2 g(JW, Z)", "",
          [&ctx, J, jp, sc2](Sampler& rng) -> std::optional<Trial> {
            const Vector x = rng.nonzero_vector(ctx.n);
            const Vector jx = J(x);
            if (ctx.g.norm2(jx) < 1e-12) return std::nullopt;
            const Vector w = rng.vector(ctx.n), z = rng.vector(ctx.n);
            const Vector y = with_pairing(ctx.g, rng.vector(ctx.n), jx, ctx.g.pair(z, J(w)));
            const MatrixElement a{x, w, z, y};
            const double hyp = std::abs(o_functional(ctx.g, row_twist(*ctx.ac, a)));
            const double r = std::abs(o_functional(ctx.g, column_twist(*ctx.ac, a)) -
                                      2.0 * jp(w, z));
            return Trial{std::max(r, hyp) / sc2(a, a), {{"A", slots_json(a)}}};
          });

  with_ac("complex.column_twist_zero_implies", "O(A_C) = 0 forces O(A_R) = 2 g(JZ, W)", "",
          [&ctx, J, jp, sc2](Sampler& rng) -> std::optional<Trial> {
            const Vector x = rng.nonzero_vector(ctx.n);
            const Vector jx = J(x);
            if (ctx.g.norm2(jx) < 1e-12) return std::nullopt;
            const Vector w = rng.vector(ctx.n), z = rng.vector(ctx.n);
            const Vector y = with_pairing(ctx.g, rng.vector(ctx.n), jx, jp(z, w));
            const MatrixElement a{x, w, z, y};
            const double hyp = std::abs(o_functional(ctx.g, column_twist(*ctx.ac, a)));
            const double r =
                std::abs(o_functional(ctx.g, row_twist(*ctx.ac, a)) - 2.0 * jp(z, w));
            return Trial{std::max(r, hyp) / sc2(a, a), {{"A", slots_json(a)}}};
          });

  with_ac("complex.equal_twists_literal", "O(A_C) = O(A_R) forces g(JX, Y) = 0",
          "equal twists only constrain g(JZ, W); the common value stays 2 g(JX, Y) away "
          "from zero unless both twists vanish",
          [&ctx, J, jp, sc2, t = 0](Sampler& rng) mutable -> std::optional<Trial> {
            Vector x, y, z, w0;
            if (t++ == 0) {
              x = Vector::Unit(ctx.n, 0);
              y = J(x);
              z = Vector::Unit(ctx.n, 0);
              w0 = Vector::Unit(ctx.n, ctx.n > 1 ? 1 : 0);
            } else {
              x = rng.vector(ctx.n);
              y = rng.vector(ctx.n);
              z = rng.nonzero_vector(ctx.n);
              w0 = rng.vector(ctx.n);
            }
            const Vector jz = J(z);
            if (ctx.g.norm2(jz) < 1e-12) return std::nullopt;
            const Vector w = orthogonal_to(ctx.g, w0, jz);
            const MatrixElement a{x, w, z, y};
            const double hyp = std::abs(o_functional(ctx.g, column_twist(*ctx.ac, a)) -
                                        o_functional(ctx.g, row_twist(*ctx.ac, a)));
            return Trial{std::max(std::abs(jp(x, y)), hyp) / sc2(a, a),
                         {{"A", slots_json(a)}}};
          });

  with_ac("complex.equal_twists_zero",
          "O(A_C) = O(A_R) = 0 forces g(JX, Y) = 0 and g(JZ, W) = 0", "",
          [&ctx, J, jp, sc2](Sampler& rng) -> std::optional<Trial> {
            const Vector x = rng.nonzero_vector(ctx.n), z = rng.nonzero_vector(ctx.n);
            const Vector jx = J(x), jz = J(z);
            if (ctx.g.norm2(jx) < 1e-12 || ctx.g.norm2(jz) < 1e-12) return std::nullopt;
            const Vector y = orthogonal_to(ctx.g, rng.vector(ctx.n), jx);
            const Vector w = orthogonal_to(ctx.g, rng.vector(ctx.n), jz);
            const MatrixElement a{x, w, z, y};
            const double r = std::max({std::abs(o_functional(ctx.g, column_twist(*ctx.ac, a))),
                                       std::abs(o_functional(ctx.g, row_twist(*ctx.ac, a))),
                                       std::abs(jp(x, y)), std::abs(jp(z, w))});
            return Trial{r / sc2(a, a), {{"A", slots_json(a)}}};
          });

  with_ac("complex.cross_twist_vanishing",
          "A_C cross forces O(A_R) = 0, and A_R cross forces O(A_C) = 0", "",
          [&ctx, J, sc2](Sampler& rng) -> std::optional<Trial> {
            const Vector x = rng.nonzero_vector(ctx.n), z = rng.nonzero_vector(ctx.n);
            const Vector jx = J(x), jz = J(z);
            if (ctx.g.norm2(jx) < 1e-12 || ctx.g.norm2(jz) < 1e-12) return std::nullopt;
            const Vector y = orthogonal_to(ctx.g, rng.vector(ctx.n), jx);
            const Vector w = orthogonal_to(ctx.g, rng.vector(ctx.n), jz);
            const MatrixElement a{x, w, z, y};
            const MatrixElement ac = column_twist(*ctx.ac, a), ar = row_twist(*ctx.ac, a);
            if (!is_cross(ctx.g, ac, 1e-7 * sc2(a, a)) ||
                !is_cross(ctx.g, ar, 1e-7 * sc2(a, a)))
              return std::nullopt;
            const double r = std::max(std::abs(o_functional(ctx.g, ar)),
                                      std::abs(o_functional(ctx.g, ac)));
            return Trial{r / sc2(a, a), {{"A", slots_json(a)}}};
          });

  // Invariant (J h = h) and anti-invariant (J h in the complement) splittings,
  // built from a J-stable plane and a plane g-orthogonal to its J-image. Both
  // need h to close under the bracket, so they may fail to exist.
  std::shared_ptr<TypeDecomposition> dec_inv, dec_anti;
  std::string inv_absent = ctx.ac_absent, anti_absent = ctx.ac_absent;
  if (ctx.ac) {
    const Vector v0 = Vector::Unit(n, 0);
    try {
      Matrix plane(n, 2);
      plane.col(0) = v0;
      plane.col(1) = ctx.ac->apply(v0);
      dec_inv = std::make_shared<TypeDecomposition>(
          type_decomposition(ctx.alg, ctx.g, SubspaceBasis(plane)));
    } catch (const Error& e) {
      inv_absent = e.what();
    }
    try {
      Matrix plane(n, 2);
      plane.col(0) = v0;
      plane.col(1) = ctx.ac->apply(v0);
      const SubspaceBasis rest = orthogonal_complement(ctx.g, SubspaceBasis(plane));
      if (rest.dim() == 0) throw ValidationError("anti-invariant plane needs dimension four");
      Matrix anti(n, 2);
      anti.col(0) = v0;
      anti.col(1) = rest.vec(0);
      dec_anti = std::make_shared<TypeDecomposition>(
          type_decomposition(ctx.alg, ctx.g, SubspaceBasis(anti)));
      for (Eigen::Index i = 0; i < 2; ++i)
        if (dec_anti->n.containment_residual(ctx.ac->apply(dec_anti->h.vec(i))) > 1e-9)
          throw ValidationError("constructed plane is not anti-invariant");
    } catch (const Error& e) {
      anti_absent = e.what();
      dec_anti.reset();
    }
  }

  // A with rows in (h, n) or columns in (h, n) relative to a decomposition.
  auto row_elem = [](Sampler& rng, const TypeDecomposition& dec) {
    return MatrixElement{rng.in_subspace(dec.h), rng.in_subspace(dec.h),
                         rng.in_subspace(dec.n), rng.in_subspace(dec.n)};
  };
  auto col_elem = [](Sampler& rng, const TypeDecomposition& dec) {
    return MatrixElement{rng.in_subspace(dec.h), rng.in_subspace(dec.n),
                         rng.in_subspace(dec.h), rng.in_subspace(dec.n)};
  };

  if (dec_inv) {
    out.push_back(
        {"complex.c1_invariant_membership",
         "J h = h: A in C1 gives Jbar A in C1", "",
         [&ctx, dec_inv, row_elem](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement a = row_elem(rng, *dec_inv);
           const ElementType cls = classify_type(lifted_ac(*ctx.ac, a), *dec_inv, 1e-7);
           return Trial{cls == ElementType::C1 ? 0.0 : 1.0,
                        {{"A", slots_json(a)}, {"class", to_string(cls)}}};
         },
         0});

    out.push_back(
        {"complex.twist_c1_membership", "J h = h: A in C1 gives A_C and A_R in C1", "",
         [&ctx, dec_inv, row_elem](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement a = row_elem(rng, *dec_inv);
           const ElementType cc = classify_type(column_twist(*ctx.ac, a), *dec_inv, 1e-7);
           const ElementType cr = classify_type(row_twist(*ctx.ac, a), *dec_inv, 1e-7);
           const double r =
               (cc == ElementType::C1 ? 0.0 : 1.0) + (cr == ElementType::C1 ? 0.0 : 1.0);
           return Trial{r, {{"A", slots_json(a)},
                            {"column twist class", to_string(cc)},
                            {"row twist class", to_string(cr)}}};
         },
         0});

    out.push_back(
        {"complex.c3_invariant_membership", "J h = h: A in C3 gives Jbar A in C3", "",
         [&ctx, dec_inv, col_elem](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement a = col_elem(rng, *dec_inv);
           const ElementType cls = classify_type(lifted_ac(*ctx.ac, a), *dec_inv, 1e-7);
           return Trial{cls == ElementType::C3 ? 0.0 : 1.0,
                        {{"A", slots_json(a)}, {"class", to_string(cls)}}};
         },
         0});
  } else {
    vacuous("complex.c1_invariant_membership", "J h = h: A in C1 gives Jbar A in C1",
            inv_absent);
    vacuous("complex.twist_c1_membership", "J h = h: A in C1 gives A_C and A_R in C1",
            inv_absent);
    vacuous("complex.c3_invariant_membership", "J h = h: A in C3 gives Jbar A in C3",
            inv_absent);
  }

  if (dec_inv && dec_anti) {
    out.push_back(
        {"complex.c1_family_invariance",
         "invariant or anti-invariant h: A in C1 keeps the rows of Jbar A aligned with the "
         "splitting",
         "",
         [&ctx, dec_inv, dec_anti, row_elem, t = 0](Sampler& rng) mutable
         -> std::optional<Trial> {
           const TypeDecomposition& dec = (t++ % 2 == 0) ? *dec_inv : *dec_anti;
           const MatrixElement a = row_elem(rng, dec);
           const ElementType cls = classify_type(lifted_ac(*ctx.ac, a), dec, 1e-7);
           const bool ok = cls == ElementType::C1 || cls == ElementType::C1Swapped;
           return Trial{ok ? 0.0 : 1.0, {{"A", slots_json(a)}, {"class", to_string(cls)}}};
         },
         0});
  } else {
    vacuous("complex.c1_family_invariance",
            "invariant or anti-invariant h: A in C1 keeps the rows of Jbar A aligned with "
            "the splitting",
            dec_inv ? anti_absent : inv_absent);
  }

  if (dec_anti) {
    out.push_back(
        {"complex.c1_anti_literal", "J h in n: A in C1 gives Jbar A in C1",
         "the twisted rows land in the opposite blocks; the image sits in the mirrored row "
         "type, not in C1",
         [&ctx, dec_anti, row_elem](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement a = row_elem(rng, *dec_anti);
           const ElementType cls = classify_type(lifted_ac(*ctx.ac, a), *dec_anti, 1e-7);
           return Trial{cls == ElementType::C1 ? 0.0 : 1.0,
                        {{"A", slots_json(a)}, {"class", to_string(cls)}}};
         },
         0});

    out.push_back(
        {"complex.anti_twist_o_nonzero",
         "J h in n: A in C1 generically leaves O(A_C) and O(A_R) nonzero", "",
         [&ctx, dec_anti, jp](Sampler& rng) -> std::optional<Trial> {
           const Vector x = rng.in_subspace(dec_anti->h), z = rng.in_subspace(dec_anti->n);
           const Vector jx = ctx.ac->apply(x), jz = ctx.ac->apply(z);
           if (ctx.g.norm2(jx) < 1e-10 || ctx.g.norm2(jz) < 1e-10) return std::nullopt;
           const double c = 0.5 * (1.0 + ctx.g.norm(x));
           const Vector y = with_pairing(ctx.g, rng.in_subspace(dec_anti->n), jx, c);
           const Vector w = with_pairing(ctx.g, rng.in_subspace(dec_anti->h), jz, -0.5 * c);
           const MatrixElement a{x, w, z, y};
           const double oc = o_functional(ctx.g, column_twist(*ctx.ac, a));
           const double orr = o_functional(ctx.g, row_twist(*ctx.ac, a));
           const double floor = 1e-9 * (1.0 + a.max_abs() * a.max_abs());
           const bool ok = std::abs(oc) > floor && std::abs(orr) > floor;
           return Trial{ok ? 0.0 : 1.0,
                        {{"A", slots_json(a)}, {"O(A_C)", oc}, {"O(A_R)", orr}}};
         },
         0});

    out.push_back(
        {"complex.anti_twist_c2_cross", "J h in n: A in C1 makes A_C a cross element of C2",
         "the diagonal of A_C lands in the complement and the antidiagonal in the "
         "subalgebra, the mirror of C2; its diagonal pairing g(JX, Y) also stays nonzero, "
         "so A_C is not cross",
         [&ctx, dec_anti, row_elem](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement a = row_elem(rng, *dec_anti);
           const MatrixElement ac = column_twist(*ctx.ac, a);
           const ElementType cls = classify_type(ac, *dec_anti, 1e-7);
           const bool ok = cls == ElementType::C2 && is_cross(ctx.g, ac, 1e-7);
           return Trial{ok ? 0.0 : 1.0,
                        {{"A", slots_json(a)},
                         {"class", to_string(cls)},
                         {"diagonal pairing", ctx.g.pair(ac.x11, ac.x22)}}};
         },
         0});

    out.push_back(
        {"complex.anti_twist_c3_literal", "J h in n: A in C1 puts A_C in C3",
         "both columns of A_C mix the subalgebra with its complement; the element sits in "
         "the mirrored diagonal type instead",
         [&ctx, dec_anti, row_elem](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement a = row_elem(rng, *dec_anti);
           const ElementType cls = classify_type(column_twist(*ctx.ac, a), *dec_anti, 1e-7);
           return Trial{cls == ElementType::C3 ? 0.0 : 1.0,
                        {{"A", slots_json(a)}, {"class", to_string(cls)}}};
         },
         0});

    out.push_back(
        {"complex.anti_twist_ar_not_c2", "J h in n: A in C1 keeps A_R out of C2", "",
         [&ctx, dec_anti, row_elem](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement a = row_elem(rng, *dec_anti);
           const ElementType cls = classify_type(row_twist(*ctx.ac, a), *dec_anti, 1e-7);
           return Trial{cls == ElementType::C2 ? 1.0 : 0.0,
                        {{"A", slots_json(a)}, {"class", to_string(cls)}}};
         },
         0});

    out.push_back(
        {"complex.anti_c3_row_twist_c2", "J h in n: A in C3 puts A_R in C2",
         "the diagonal of A_R lands in the complement and the antidiagonal in the "
         "subalgebra, the mirror of the stated type",
         [&ctx, dec_anti, col_elem](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement a = col_elem(rng, *dec_anti);
           const ElementType cls = classify_type(row_twist(*ctx.ac, a), *dec_anti, 1e-7);
           return Trial{cls == ElementType::C2 ? 0.0 : 1.0,
                        {{"A", slots_json(a)}, {"class", to_string(cls)}}};
         },
         0});
  } else {
    const std::string why = anti_absent;
    vacuous("complex.c1_anti_literal", "J h in n: A in C1 gives Jbar A in C1", why);
    vacuous("complex.anti_twist_o_nonzero",
            "J h in n: A in C1 generically leaves O(A_C) and O(A_R) nonzero", why);
    vacuous("complex.anti_twist_c2_cross",
            "J h in n: A in C1 makes A_C a cross element of C2", why);
    vacuous("complex.anti_twist_c3_literal", "J h in n: A in C1 puts A_C in C3", why);
    vacuous("complex.anti_twist_ar_not_c2", "J h in n: A in C1 keeps A_R out of C2", why);
    vacuous("complex.anti_c3_row_twist_c2", "J h in n: A in C3 puts A_R in C2", why);
  }

  // Slant and the tangential/normal split of J against a metric splitting.
  if (ctx.ac && ctx.msplit) {
    out.push_back(
        {"complex.slant_matched_lift",
         "the tangential fraction of J is the same for x in m and for its all-slot lift",
         "",
         [&ctx](Sampler& rng) -> std::optional<Trial> {
           const Vector x = in_frame(rng, ctx.m_basis->matrix());
           if (ctx.g.norm(x) < 1e-8) return std::nullopt;
           const Vector jx = ctx.ac->apply(x);
           const double base = ctx.g.norm(ctx.msplit->tangential(jx)) / ctx.g.norm(jx);
           const MatrixElement a{x, x, x, x};
           double tan2 = 0.0, tot2 = 0.0;
           for (int s = 0; s < 4; ++s) {
             const PFParts pf = pf_parts(*ctx.msplit, *ctx.ac, a.slot(s));
             tan2 += ctx.g.norm2(pf.p);
             tot2 += ctx.g.norm2(ctx.ac->apply(a.slot(s)));
           }
           const double lifted = std::sqrt(tan2 / tot2);
           return Trial{std::abs(base - lifted), {{"x", vj(x)}}};
         },
         0});

    out.push_back(
        {"complex.pf_decomposition",
         "J x = P x + F x slot-wise, with P x tangent and F x normal", "",
         [&ctx](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement a{in_frame(rng, ctx.m_basis->matrix()),
                                 in_frame(rng, ctx.m_basis->matrix()),
                                 in_frame(rng, ctx.m_basis->matrix()),
                                 in_frame(rng, ctx.m_basis->matrix())};
           double r = 0.0;
           for (int s = 0; s < 4; ++s) {
             const PFParts pf = pf_parts(*ctx.msplit, *ctx.ac, a.slot(s));
             const Vector jx = ctx.ac->apply(a.slot(s));
             r = std::max({r, (jx - pf.p - pf.f).norm(),
                           ctx.g.norm(ctx.msplit->normal(pf.p)),
                           ctx.g.norm(ctx.msplit->tangential(pf.f))});
           }
           return Trial{r / (1.0 + lift_norm(ctx.g, a)), {{"A", slots_json(a)}}};
         },
         0});
  } else {
    const std::string why = !ctx.ac ? ctx.ac_absent : ctx.m_absent;
    vacuous("complex.slant_matched_lift",
            "the tangential fraction of J is the same for x in m and for its all-slot lift",
            why);
    vacuous("complex.pf_decomposition",
            "J x = P x + F x slot-wise, with P x tangent and F x normal", why);
  }

  // Contact metric structure around the center direction.
  auto with_contact = [&](std::string id, std::string anchor, std::string note,
                          std::function<std::optional<Trial>(Sampler&)> run,
                          int override_trials = 0) {
    if (!ctx.contact) {
      vacuous(std::move(id), std::move(anchor), ctx.contact_absent);
      return;
    }
    out.push_back({std::move(id), std::move(anchor), std::move(note), std::move(run),
                   override_trials});
  };
  // t-th pair (i, j) with i < j below k, or nothing once exhausted
  auto pair_at = [](int t, Eigen::Index k) -> std::optional<std::pair<int, int>> {
    int idx = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (idx++ == t) return std::make_pair(i, j);
    return std::nullopt;
  };

  with_contact("complex.contact_axioms",
               "phi xi = 0, phi^2 = -Id + eta (x) xi, eta(xi) = 1, and the compatibility "
               "g(phi X, phi Y) = g(X,Y) - eta(X) eta(Y)",
               "",
               [&ctx](Sampler&) -> std::optional<Trial> {
                 const Verdict v = contact_check(ctx.g, *ctx.contact);
                 return Trial{v.residual, {{"detail", v.detail}}};
               },
               1);

  with_contact("complex.contact_metric", "g(X, phi Y) = -eta([X, Y])", "",
               [&ctx, pair_at, t = 0](Sampler& rng) mutable -> std::optional<Trial> {
                 Vector x, y;
                 if (const auto p = pair_at(t, ctx.n)) {
                   x = Vector::Unit(ctx.n, p->first);
                   y = Vector::Unit(ctx.n, p->second);
                 } else {
                   x = rng.vector(ctx.n);
                   y = rng.vector(ctx.n);
                 }
                 ++t;
                 const double r = std::abs(fundamental_form(ctx.g, *ctx.contact, x, y) -
                                           eta_derivative(ctx.alg, *ctx.contact, x, y));
                 return Trial{r / (1.0 + ctx.g.norm(x) * ctx.g.norm(y)),
                              {{"X", vj(x)}, {"Y", vj(y)}}};
               });

  with_contact("complex.contact_metric_half", "g(X, phi Y) = -eta([X, Y]) / 2",
               "the left-invariant exterior derivative carries no one-half here; the "
               "halved convention leaves half of the fundamental form behind",
               [&ctx, pair_at, t = 0](Sampler& rng) mutable -> std::optional<Trial> {
                 Vector x, y;
                 if (const auto p = pair_at(t, ctx.n)) {
                   x = Vector::Unit(ctx.n, p->first);
                   y = Vector::Unit(ctx.n, p->second);
                 } else {
                   x = rng.vector(ctx.n);
                   y = rng.vector(ctx.n);
                 }
                 ++t;
                 const double scale = ctx.g.norm(x) * ctx.g.norm(y);
                 if (scale < 1e-8) return std::nullopt;
                 const double r =
                     std::abs(fundamental_form(ctx.g, *ctx.contact, x, y) -
                              eta_derivative(ctx.alg, *ctx.contact, x, y, true));
                 return Trial{r / scale, {{"X", vj(x)}, {"Y", vj(y)}}};
               });

  with_contact("complex.k_contact_derivative", "nabla_X xi = -phi X",
               "the connection moves xi at half the speed of phi on the bracket "
               "directions; the display needs an extra factor",
               [&ctx, t = 0](Sampler& rng) mutable -> std::optional<Trial> {
                 const Vector x =
                     (t < ctx.n) ? Vector(Vector::Unit(ctx.n, t)) : Vector(rng.vector(ctx.n));
                 ++t;
                 const double scale = ctx.g.norm(x);
                 if (scale < 1e-8) return std::nullopt;
                 const Vector r =
                     ctx.conn.nabla(x, ctx.contact->xi) + ctx.contact->phi * x;
                 return Trial{ctx.g.norm(r) / scale, {{"X", vj(x)}}};
               });

  with_contact("complex.killing_reeb", "g(nabla_X xi, Y) + g(nabla_Y xi, X) = 0", "",
               [&ctx](Sampler& rng) -> std::optional<Trial> {
                 const Vector x = rng.vector(ctx.n), y = rng.vector(ctx.n);
                 const double r = ctx.g.pair(ctx.conn.nabla(x, ctx.contact->xi), y) +
                                  ctx.g.pair(ctx.conn.nabla(y, ctx.contact->xi), x);
                 return Trial{std::abs(r) / (1.0 + ctx.g.norm(x) * ctx.g.norm(y)),
                              {{"X", vj(x)}, {"Y", vj(y)}}};
               });

  with_contact("complex.phi_metric_kernel", "g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y)", "",
               [&ctx](Sampler& rng) -> std::optional<Trial> {
                 const Vector x = rng.vector(ctx.n), y = rng.vector(ctx.n);
                 const double lhs =
                     ctx.g.pair(ctx.contact->phi * x, ctx.contact->phi * y);
                 const double rhs = ctx.g.pair(x, y) - ctx.contact->eval_eta(x) *
                                                           ctx.contact->eval_eta(y);
                 return Trial{std::abs(lhs - rhs) / (1.0 + ctx.g.norm(x) * ctx.g.norm(y)),
                              {{"X", vj(x)}, {"Y", vj(y)}}};
               });
}

}  // namespace liemat
