#pragma once

#include "liemat/harness.hpp"

namespace liemat {

/// The skew map j of a 2-step algebra, the Heisenberg-type condition, the
/// slot-wise lifted center, and the derivative formulas for elements whose
/// slots sort into center and complement.
inline void register_nilpotent(std::vector<EntryDef>& out, const SuiteContext& ctx) {
  using harness::slots_json;
  using harness::vj;
  const Eigen::Index n = ctx.n;

  auto vacuous = [&out](std::string id, std::string anchor, std::string why) {
    out.push_back({std::move(id), std::move(anchor), std::move(why), nullptr, 0});
  };
  const std::string noj = !ctx.two_step ? "the algebra is not 2-step nilpotent"
                                        : "the center or its complement is trivial";
  const std::string noh = ctx.jmap ? "the algebra is not of Heisenberg type" : noj;
  // Pushes the entry when the j map exists (2-step, proper nontrivial center).
  auto with_j = [&](std::string id, std::string anchor, std::string note,
                    std::function<std::optional<Trial>(Sampler&)> run, int override_trials = 0) {
    if (!ctx.jmap) {
      vacuous(std::move(id), std::move(anchor), noj);
      return;
    }
    out.push_back({std::move(id), std::move(anchor), std::move(note), std::move(run),
                   override_trials});
  };
  // Pushes the entry only on Heisenberg-type algebras.
  auto with_h = [&](std::string id, std::string anchor, std::string note,
                    std::function<std::optional<Trial>(Sampler&)> run, int override_trials = 0) {
    if (!ctx.h_type) {
      vacuous(std::move(id), std::move(anchor), noh);
      return;
    }
    out.push_back({std::move(id), std::move(anchor), std::move(note), std::move(run),
                   override_trials});
  };

  // Draws with at least some mass, or nothing when the subspace is trivial.
  auto in_z = [&ctx](Sampler& rng) -> std::optional<Vector> {
    const Vector v = rng.in_subspace(ctx.split.z);
    if (ctx.g.norm(v) < 1e-8) return std::nullopt;
    return v;
  };
  auto in_zperp = [&ctx](Sampler& rng) -> std::optional<Vector> {
    const Vector v = rng.in_subspace(ctx.split.z_perp);
    if (ctx.g.norm(v) < 1e-8) return std::nullopt;
    return v;
  };
  auto sc2 = [](const MatrixElement& a, const MatrixElement& b) {
    return 1.0 + a.max_abs() * b.max_abs();
  };

  with_j("nilpotent.j_defining", "g(j(Z) X, Y) = g([X, Y], Z)", "",
         [&ctx, in_z, in_zperp](Sampler& rng) -> std::optional<Trial> {
           const auto x = in_zperp(rng), y = in_zperp(rng);
           const auto z = in_z(rng);
           if (!x || !y || !z) return std::nullopt;
           const double r = std::abs(ctx.g.pair(ctx.jmap->apply(*z, *x), *y) -
                                     ctx.g.pair(ctx.alg.bracket(*x, *y), *z));
           const double scale = 1.0 + ctx.g.norm(*x) * ctx.g.norm(*y) * ctx.g.norm(*z);
           return Trial{r / scale, {{"X", vj(*x)}, {"Y", vj(*y)}, {"Z", vj(*z)}}};
         });

  with_j("nilpotent.j_linear", "j(a Z + b Z') = a j(Z) + b j(Z')", "",
         [&ctx, in_z](Sampler& rng) -> std::optional<Trial> {
           const auto z1 = in_z(rng), z2 = in_z(rng);
           if (!z1 || !z2) return std::nullopt;
           const double a = rng.uniform(-2.0, 2.0), b = rng.uniform(-2.0, 2.0);
           const Matrix lhs = ctx.jmap->coeff(a * *z1 + b * *z2);
           const Matrix rhs = a * ctx.jmap->coeff(*z1) + b * ctx.jmap->coeff(*z2);
           const double scale = 1.0 + ctx.g.norm(*z1) + ctx.g.norm(*z2);
           return Trial{(lhs - rhs).cwiseAbs().maxCoeff() / scale,
                        {{"Z", vj(*z1)}, {"Z'", vj(*z2)}, {"a", a}, {"b", b}}};
         });

  with_j("nilpotent.j_skew", "g(j(Z) X, Y) = -g(X, j(Z) Y)", "",
         [&ctx, in_z, in_zperp](Sampler& rng) -> std::optional<Trial> {
           const auto x = in_zperp(rng), y = in_zperp(rng);
           const auto z = in_z(rng);
           if (!x || !y || !z) return std::nullopt;
           const double r = std::abs(ctx.g.pair(ctx.jmap->apply(*z, *x), *y) +
                                     ctx.g.pair(*x, ctx.jmap->apply(*z, *y)));
           const double scale = 1.0 + ctx.g.norm(*x) * ctx.g.norm(*y) * ctx.g.norm(*z);
           return Trial{r / scale, {{"X", vj(*x)}, {"Y", vj(*y)}, {"Z", vj(*z)}}};
         });

  with_j("nilpotent.closed_form_connection",
         "nabla is half the bracket on the complement and -1/2 j across the split", "",
         [&ctx](Sampler&) -> std::optional<Trial> {
           const ConnectionCoefficients closed = two_step_connection(ctx.alg, ctx.g);
           double r = 0.0;
           for (Eigen::Index i = 0; i < ctx.n; ++i)
             r = std::max(r, (ctx.conn.gamma[i] - closed.gamma[i]).cwiseAbs().maxCoeff());
           return Trial{r, {}};
         },
         1);

  with_j("nilpotent.htype_condition", "j(Z)^2 = -|Z|^2 Id",
         ctx.h_type ? ""
                    : "the square of j is not scalar here; the defect measures the "
                      "distance from Heisenberg type",
         [&ctx, in_z](Sampler& rng) -> std::optional<Trial> {
           const auto z = in_z(rng);
           if (!z) return std::nullopt;
           const Matrix m = ctx.jmap->coeff(*z);
           const Matrix defect =
               m * m + ctx.g.norm2(*z) * Matrix::Identity(m.rows(), m.cols());
           return Trial{defect.cwiseAbs().maxCoeff() / (1.0 + ctx.g.norm2(*z)),
                        {{"Z", vj(*z)}}};
         });

  with_j("nilpotent.htype_norm", "|j(Z) X| = |Z| |X|",
         ctx.h_type ? "" : "j stretches directions unevenly off the Heisenberg-type locus",
         [&ctx, in_z, in_zperp](Sampler& rng) -> std::optional<Trial> {
           const auto x = in_zperp(rng);
           const auto z = in_z(rng);
           if (!x || !z) return std::nullopt;
           const double r = std::abs(ctx.g.norm(ctx.jmap->apply(*z, *x)) -
                                     ctx.g.norm(*z) * ctx.g.norm(*x));
           return Trial{r / (1.0 + ctx.g.norm(*z) * ctx.g.norm(*x)),
                        {{"X", vj(*x)}, {"Z", vj(*z)}}};
         });

  with_h("nilpotent.center_recovery", "[X, j(Z) X] = |X|^2 Z", "",
         [&ctx, in_z, in_zperp](Sampler& rng) -> std::optional<Trial> {
           const auto x = in_zperp(rng);
           const auto z = in_z(rng);
           if (!x || !z) return std::nullopt;
           const Vector lhs = ctx.alg.bracket(*x, ctx.jmap->apply(*z, *x));
           const Vector rhs = ctx.g.norm2(*x) * *z;
           return Trial{ctx.g.norm(lhs - rhs) / (1.0 + ctx.g.norm2(*x) * ctx.g.norm(*z)),
                        {{"X", vj(*x)}, {"Z", vj(*z)}}};
         });

  if (ctx.two_step) {
    out.push_back({"nilpotent.two_step_lift", "the lift of a 2-step algebra is 2-step", "",
                   [&ctx](Sampler&) -> std::optional<Trial> {
                     return Trial{is_two_step(ctx.lifted) ? 0.0 : 1.0, {}};
                   },
                   1});
  } else {
    vacuous("nilpotent.two_step_lift", "the lift of a 2-step algebra is 2-step", noj);
  }

  // Slot-wise structure of the lifted center; independent of nilpotency.
  auto lifted_csplit =
      std::make_shared<CenterSplit>(center_split(ctx.lifted, ctx.lifted_g));

  out.push_back(
      {"nilpotent.center_lift_rank",
       "the lifted center has four central slots: dim Z(lift) = 4 dim Z", "",
       [&ctx, lifted_csplit](Sampler&) -> std::optional<Trial> {
         const double diff =
             std::abs(double(lifted_csplit->z.dim()) - 4.0 * double(ctx.split.z.dim()));
         return Trial{diff, {{"lifted center dim", lifted_csplit->z.dim()}}};
       },
       1});

  out.push_back(
      {"nilpotent.central_slots_membership",
       "every element with all four slots central is central in the lift", "",
       [&ctx, lifted_csplit](Sampler& rng) -> std::optional<Trial> {
         const MatrixElement b{rng.in_subspace(ctx.split.z), rng.in_subspace(ctx.split.z),
                               rng.in_subspace(ctx.split.z), rng.in_subspace(ctx.split.z)};
         if (b.max_abs() < 1e-8) return std::nullopt;
         return Trial{lifted_csplit->z.containment_residual(flatten(b)),
                      {{"B", slots_json(b)}}};
       },
       0});

  out.push_back(
      {"nilpotent.complement_slots_literal",
       "an element with one slot off the center is orthogonal to the lifted center",
       "slots inside the center keep a central component; only elements with every slot "
       "off the center land in the orthogonal complement",
       [&ctx, lifted_csplit, t = 0](Sampler& rng) mutable -> std::optional<Trial> {
         if (ctx.split.z.dim() == 0 || ctx.split.z_perp.dim() == 0) return std::nullopt;
         Vector xp, zc;
         if (t++ == 0) {
           xp = ctx.split.zperp_frame.col(0);
           zc = ctx.split.z_frame.col(0);
         } else {
           xp = rng.in_subspace(ctx.split.z_perp);
           zc = rng.in_subspace(ctx.split.z);
         }
         if (ctx.g.norm(xp) < 1e-8 || ctx.g.norm(zc) < 1e-8) return std::nullopt;
         const MatrixElement a{xp, zc, Vector::Zero(ctx.n), Vector::Zero(ctx.n)};
         return Trial{lifted_csplit->z_perp.containment_residual(flatten(a)),
                      {{"A", slots_json(a)}}};
       },
       0});

  out.push_back(
      {"nilpotent.complement_slots_allslots",
       "an element with all four slots off the center is orthogonal to the lifted center",
       "",
       [&ctx, lifted_csplit](Sampler& rng) -> std::optional<Trial> {
         if (ctx.split.z_perp.dim() == 0) return std::nullopt;
         const MatrixElement a{
             rng.in_subspace(ctx.split.z_perp), rng.in_subspace(ctx.split.z_perp),
             rng.in_subspace(ctx.split.z_perp), rng.in_subspace(ctx.split.z_perp)};
         if (a.max_abs() < 1e-8) return std::nullopt;
         return Trial{lifted_csplit->z_perp.containment_residual(flatten(a)),
                      {{"A", slots_json(a)}}};
       },
       0});

  // A = [[X,Z*],[Z,Y]] carries the center on the antidiagonal, B = [[Z,X],[Y,Z*]]
  // on the diagonal; X, Y run over the complement.
  auto antidiag_elem = [](const Vector& x, const Vector& y, const Vector& z,
                          const Vector& zs) {
    return MatrixElement{x, zs, z, y};
  };
  auto diag_elem = [](const Vector& x, const Vector& y, const Vector& z, const Vector& zs) {
    return MatrixElement{z, x, y, zs};
  };
  auto shape_draw = [in_z, in_zperp](Sampler& rng)
      -> std::optional<std::array<Vector, 4>> {
    const auto x = in_zperp(rng), y = in_zperp(rng);
    const auto z = in_z(rng), zs = in_z(rng);
    if (!x || !y || !z || !zs) return std::nullopt;
    return std::array<Vector, 4>{*x, *y, *z, *zs};
  };

  with_j("nilpotent.center_antidiag_transpose_derivative",
         "nabla_{At} A = nabla_A At = 0 for A = [[X,Z*],[Z,Y]]", "",
         [&ctx, antidiag_elem, shape_draw, sc2](Sampler& rng) -> std::optional<Trial> {
           const auto d = shape_draw(rng);
           if (!d) return std::nullopt;
           const MatrixElement a = antidiag_elem((*d)[0], (*d)[1], (*d)[2], (*d)[3]);
           const MatrixElement at = transpose(a);
           const double r = std::max(lift_norm(ctx.g, lift_connection(ctx.conn, at, a)),
                                     lift_norm(ctx.g, lift_connection(ctx.conn, a, at)));
           return Trial{r / sc2(a, a), {{"A", slots_json(a)}}};
         });

  with_j("nilpotent.center_diag_transpose_derivative",
         "nabla_{Bt} B = 1/2 [[0,[Y,X]],[[X,Y],0]] for B = [[Z,X],[Y,Z*]]", "",
         [&ctx, diag_elem, shape_draw, sc2](Sampler& rng) -> std::optional<Trial> {
           const auto d = shape_draw(rng);
           if (!d) return std::nullopt;
           const Vector &x = (*d)[0], &y = (*d)[1];
           const MatrixElement b = diag_elem(x, y, (*d)[2], (*d)[3]);
           const MatrixElement expected{Vector::Zero(ctx.n),
                                        Vector(0.5 * ctx.alg.bracket(y, x)),
                                        Vector(0.5 * ctx.alg.bracket(x, y)),
                                        Vector::Zero(ctx.n)};
           const MatrixElement got = lift_connection(ctx.conn, transpose(b), b);
           return Trial{lift_norm(ctx.g, got - expected) / sc2(b, b),
                        {{"B", slots_json(b)}}};
         });

  with_j("nilpotent.center_diag_star_derivative",
         "nabla_{B*} B = 0 for B = [[Z,X],[Y,Z*]]", "",
         [&ctx, diag_elem, shape_draw, sc2](Sampler& rng) -> std::optional<Trial> {
           const auto d = shape_draw(rng);
           if (!d) return std::nullopt;
           const MatrixElement b = diag_elem((*d)[0], (*d)[1], (*d)[2], (*d)[3]);
           const double r = lift_norm(ctx.g, lift_connection(ctx.conn, star(b), b));
           return Trial{r / sc2(b, b), {{"B", slots_json(b)}}};
         });

  with_j("nilpotent.center_antidiag_star_derivative",
         "nabla_{A*} A = 1/2 [[[Y,X],0],[0,[X,Y]]] for A = [[X,Z*],[Z,Y]]", "",
         [&ctx, antidiag_elem, shape_draw, sc2](Sampler& rng) -> std::optional<Trial> {
           const auto d = shape_draw(rng);
           if (!d) return std::nullopt;
           const Vector &x = (*d)[0], &y = (*d)[1];
           const MatrixElement a = antidiag_elem(x, y, (*d)[2], (*d)[3]);
           const MatrixElement expected{Vector(0.5 * ctx.alg.bracket(y, x)),
                                        Vector::Zero(ctx.n), Vector::Zero(ctx.n),
                                        Vector(0.5 * ctx.alg.bracket(x, y))};
           const MatrixElement got = lift_connection(ctx.conn, star(a), a);
           return Trial{lift_norm(ctx.g, got - expected) / sc2(a, a),
                        {{"A", slots_json(a)}}};
         });

  with_j("nilpotent.center_shapes_orthogonal",
         "<nabla_{A*} A, nabla_{Bt} B> = 0 for the two center-sorted shapes", "",
         [&ctx, antidiag_elem, diag_elem, shape_draw, sc2](Sampler& rng)
             -> std::optional<Trial> {
           const auto d = shape_draw(rng);
           if (!d) return std::nullopt;
           const MatrixElement a = antidiag_elem((*d)[0], (*d)[1], (*d)[2], (*d)[3]);
           const MatrixElement b = diag_elem((*d)[0], (*d)[1], (*d)[2], (*d)[3]);
           const double r = std::abs(lift_inner(ctx.g, lift_connection(ctx.conn, star(a), a),
                                                lift_connection(ctx.conn, transpose(b), b)));
           return Trial{r / sc2(a, b), {{"A", slots_json(a)}, {"B", slots_json(b)}}};
         });

  with_j("nilpotent.center_shapes_bracket_central",
         "[A, B] = 0 for the two center-sorted shapes, so the bracket is central", "",
         [&ctx, antidiag_elem, diag_elem, shape_draw, sc2](Sampler& rng)
             -> std::optional<Trial> {
           const auto d = shape_draw(rng);
           if (!d) return std::nullopt;
           const MatrixElement a = antidiag_elem((*d)[0], (*d)[1], (*d)[2], (*d)[3]);
           const MatrixElement b = diag_elem((*d)[0], (*d)[1], (*d)[2], (*d)[3]);
           return Trial{lift_norm(ctx.g, lift_bracket(ctx.alg, a, b)) / sc2(a, b),
                        {{"A", slots_json(a)}, {"B", slots_json(b)}}};
         });

  with_j("nilpotent.center_shapes_complement_claim",
         "the two center-sorted shapes are orthogonal to the lifted center",
         "both shapes carry central slots, so neither is orthogonal to the lifted "
         "center; only their bracket lands there",
         [&ctx, lifted_csplit, antidiag_elem, diag_elem, t = 0](Sampler& rng) mutable
             -> std::optional<Trial> {
           if (ctx.split.z.dim() == 0 || ctx.split.z_perp.dim() == 0) return std::nullopt;
           Vector x, y, z, zs;
           if (t++ == 0) {
             x = ctx.split.zperp_frame.col(0);
             y = ctx.split.zperp_frame.col(ctx.split.zperp_frame.cols() > 1 ? 1 : 0);
             z = ctx.split.z_frame.col(0);
             zs = z;
           } else {
             x = rng.in_subspace(ctx.split.z_perp);
             y = rng.in_subspace(ctx.split.z_perp);
             z = rng.in_subspace(ctx.split.z);
             zs = rng.in_subspace(ctx.split.z);
           }
           if (ctx.g.norm(x) < 1e-8 || ctx.g.norm(z) < 1e-8) return std::nullopt;
           const MatrixElement a = antidiag_elem(x, y, z, zs);
           const MatrixElement b = diag_elem(x, y, z, zs);
           const double r =
               std::max(lifted_csplit->z_perp.containment_residual(flatten(a)),
                        lifted_csplit->z_perp.containment_residual(flatten(b)));
           return Trial{r, {{"A", slots_json(a)}, {"B", slots_json(b)}}};
         });

  // All-central B acting on all-complement A through the lifted connection.
  auto central_elem = [&ctx](Sampler& rng) {
    return MatrixElement{rng.in_subspace(ctx.split.z), rng.in_subspace(ctx.split.z),
                         rng.in_subspace(ctx.split.z), rng.in_subspace(ctx.split.z)};
  };
  auto complement_elem = [&ctx](Sampler& rng) {
    return MatrixElement{
        rng.in_subspace(ctx.split.z_perp), rng.in_subspace(ctx.split.z_perp),
        rng.in_subspace(ctx.split.z_perp), rng.in_subspace(ctx.split.z_perp)};
  };

  with_j("nilpotent.central_derivative_j",
         "nabla_B A = -1/2 jbar(B) A for central B and complement A", "",
         [&ctx, central_elem, complement_elem, sc2](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement b = central_elem(rng), a = complement_elem(rng);
           if (b.max_abs() < 1e-8 || a.max_abs() < 1e-8) return std::nullopt;
           const MatrixElement r =
               lift_connection(ctx.conn, b, a) + 0.5 * lifted_j(*ctx.jmap, b, a);
           return Trial{lift_norm(ctx.g, r) / sc2(a, b),
                        {{"A", slots_json(a)}, {"B", slots_json(b)}}};
         });

  with_j("nilpotent.double_derivative_j_squared",
         "nabla_B nabla_B A = 1/4 j(b_s)^2 a_s slot-wise", "",
         [&ctx, central_elem, complement_elem, sc2](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement b = central_elem(rng), a = complement_elem(rng);
           if (b.max_abs() < 1e-8 || a.max_abs() < 1e-8) return std::nullopt;
           const MatrixElement got =
               lift_connection(ctx.conn, b, lift_connection(ctx.conn, b, a));
           const MatrixElement expected =
               0.25 * lifted_j(*ctx.jmap, b, lifted_j(*ctx.jmap, b, a));
           return Trial{lift_norm(ctx.g, got - expected) / sc2(a, b),
                        {{"A", slots_json(a)}, {"B", slots_json(b)}}};
         });

  with_h("nilpotent.double_derivative_htype",
         "nabla_B nabla_B A = -1/4 |b_s|^2 a_s slot-wise on Heisenberg type", "",
         [&ctx, central_elem, complement_elem, sc2](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement b = central_elem(rng), a = complement_elem(rng);
           if (b.max_abs() < 1e-8 || a.max_abs() < 1e-8) return std::nullopt;
           MatrixElement expected = MatrixElement::zero(ctx.n);
           for (int s = 0; s < 4; ++s)
             expected.slot(s) = -0.25 * ctx.g.norm2(b.slot(s)) * a.slot(s);
           const MatrixElement got =
               lift_connection(ctx.conn, b, lift_connection(ctx.conn, b, a));
           return Trial{lift_norm(ctx.g, got - expected) / sc2(a, b),
                        {{"A", slots_json(a)}, {"B", slots_json(b)}}};
         });

  with_h("nilpotent.lift_htype_scaling", "nabla_B nabla_B A = -1/4 <B, B> A",
         "the double derivative scales each slot by its own |b_s|^2, not by the full "
         "lifted norm of B",
         [&ctx, central_elem, complement_elem, sc2, t = 0](Sampler& rng) mutable
             -> std::optional<Trial> {
           MatrixElement a = MatrixElement::zero(ctx.n), b = MatrixElement::zero(ctx.n);
           if (t++ == 0 && ctx.split.z.dim() > 0 && ctx.split.z_perp.dim() > 0) {
             const Vector zc = ctx.split.z_frame.col(0);
             const Vector xp = ctx.split.zperp_frame.col(0);
             b = MatrixElement{zc, Vector(2.0 * zc), zc, zc};
             a = MatrixElement{xp, xp, xp, xp};
           } else {
             b = central_elem(rng);
             a = complement_elem(rng);
           }
           if (b.max_abs() < 1e-8 || a.max_abs() < 1e-8) return std::nullopt;
           const MatrixElement got =
               lift_connection(ctx.conn, b, lift_connection(ctx.conn, b, a));
           const MatrixElement expected = -0.25 * lift_inner(ctx.g, b, b) * a;
           return Trial{lift_norm(ctx.g, got - expected) / sc2(a, b),
                        {{"A", slots_json(a)}, {"B", slots_json(b)}}};
         });

  with_h("nilpotent.lift_not_htype", "the lifted algebra is not Heisenberg type",
         "the lifted center pairs each slot independently, so the square of the lifted "
         "j is block diagonal rather than scalar",
         [&ctx](Sampler&) -> std::optional<Trial> {
           const Verdict v = is_h_type(ctx.lifted, ctx.lifted_g);
           return Trial{v.ok ? 1.0 : 0.0, {{"defect", v.residual}}};
         },
         1);

  with_h("nilpotent.jbar_polarized",
         "<jbar(B) A, jbar(C) A> = sum_s g(b_s, c_s) |a_s|^2 for central B, C", "",
         [&ctx, central_elem, complement_elem, sc2](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement b = central_elem(rng), c = central_elem(rng);
           const MatrixElement a = complement_elem(rng);
           if (a.max_abs() < 1e-8) return std::nullopt;
           const double lhs = lift_inner(ctx.g, lifted_j(*ctx.jmap, b, a),
                                         lifted_j(*ctx.jmap, c, a));
           double rhs = 0.0;
           for (int s = 0; s < 4; ++s)
             rhs += ctx.g.pair(b.slot(s), c.slot(s)) * ctx.g.norm2(a.slot(s));
           return Trial{std::abs(lhs - rhs) / (sc2(a, b) * sc2(a, c)),
                        {{"A", slots_json(a)}, {"B", slots_json(b)}, {"C", slots_json(c)}}};
         });

  with_h("nilpotent.jbar_same_center_literal",
         "<jbar(B) A, jbar(B) C> = |Z|^2 g + |W|^2 g + |V|^2 g + |W|^2 g over the slots "
         "of B = [[Z,W],[V,S]]",
         "the last coefficient repeats the second slot's |W|^2 where the fourth slot's "
         "|S|^2 belongs",
         [&ctx, central_elem, complement_elem, sc2, t = 0](Sampler& rng) mutable
             -> std::optional<Trial> {
           MatrixElement b = MatrixElement::zero(ctx.n);
           MatrixElement a = MatrixElement::zero(ctx.n), c = MatrixElement::zero(ctx.n);
           if (t++ == 0 && ctx.split.z.dim() > 0 && ctx.split.z_perp.dim() > 0) {
             const Vector zc = ctx.split.z_frame.col(0);
             const Vector xp = ctx.split.zperp_frame.col(0);
             b = MatrixElement{zc, Vector(2.0 * zc), zc, zc};
             a = MatrixElement{xp, xp, xp, xp};
             c = a;
           } else {
             b = central_elem(rng);
             a = complement_elem(rng);
             c = complement_elem(rng);
           }
           if (a.max_abs() < 1e-8 || b.max_abs() < 1e-8) return std::nullopt;
           const double lhs = lift_inner(ctx.g, lifted_j(*ctx.jmap, b, a),
                                         lifted_j(*ctx.jmap, b, c));
           const double displayed = ctx.g.norm2(b.x11) * ctx.g.pair(a.x11, c.x11) +
                                    ctx.g.norm2(b.x12) * ctx.g.pair(a.x12, c.x12) +
                                    ctx.g.norm2(b.x21) * ctx.g.pair(a.x21, c.x21) +
                                    ctx.g.norm2(b.x12) * ctx.g.pair(a.x22, c.x22);
           return Trial{std::abs(lhs - displayed) / (sc2(a, b) * sc2(c, b)),
                        {{"A", slots_json(a)}, {"B", slots_json(b)}, {"C", slots_json(c)}}};
         });

  with_h("nilpotent.jbar_same_center",
         "<jbar(B) A, jbar(B) C> = sum_s |b_s|^2 g(a_s, c_s) for central B", "",
         [&ctx, central_elem, complement_elem, sc2](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement b = central_elem(rng);
           const MatrixElement a = complement_elem(rng), c = complement_elem(rng);
           if (a.max_abs() < 1e-8 || b.max_abs() < 1e-8) return std::nullopt;
           const double lhs = lift_inner(ctx.g, lifted_j(*ctx.jmap, b, a),
                                         lifted_j(*ctx.jmap, b, c));
           double rhs = 0.0;
           for (int s = 0; s < 4; ++s)
             rhs += ctx.g.norm2(b.slot(s)) * ctx.g.pair(a.slot(s), c.slot(s));
           return Trial{std::abs(lhs - rhs) / (sc2(a, b) * sc2(c, b)),
                        {{"A", slots_json(a)}, {"B", slots_json(b)}, {"C", slots_json(c)}}};
         });

  with_h("nilpotent.jbar_norm_literal", "|jbar(B) A| = sum_s |a_s| |b_s|",
         "the display adds the slot norms linearly; the lifted norm adds their squares",
         [&ctx, central_elem, complement_elem, sc2, t = 0](Sampler& rng) mutable
             -> std::optional<Trial> {
           MatrixElement b = MatrixElement::zero(ctx.n), a = MatrixElement::zero(ctx.n);
           if (t++ == 0 && ctx.split.z.dim() > 0 && ctx.split.z_perp.dim() > 0) {
             const Vector zc = ctx.split.z_frame.col(0);
             const Vector xp = ctx.split.zperp_frame.col(0);
             b = MatrixElement{zc, zc, Vector::Zero(ctx.n), Vector::Zero(ctx.n)};
             a = MatrixElement{xp, xp, Vector::Zero(ctx.n), Vector::Zero(ctx.n)};
           } else {
             b = central_elem(rng);
             a = complement_elem(rng);
           }
           if (a.max_abs() < 1e-8 || b.max_abs() < 1e-8) return std::nullopt;
           const double lhs = lift_norm(ctx.g, lifted_j(*ctx.jmap, b, a));
           double rhs = 0.0;
           for (int s = 0; s < 4; ++s) rhs += ctx.g.norm(a.slot(s)) * ctx.g.norm(b.slot(s));
           return Trial{std::abs(lhs - rhs) / sc2(a, b),
                        {{"A", slots_json(a)}, {"B", slots_json(b)}}};
         });

  with_h("nilpotent.jbar_norm_squared", "|jbar(B) A|^2 = sum_s |a_s|^2 |b_s|^2", "",
         [&ctx, central_elem, complement_elem, sc2](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement b = central_elem(rng), a = complement_elem(rng);
           if (a.max_abs() < 1e-8 || b.max_abs() < 1e-8) return std::nullopt;
           const double lhs = lift_inner(ctx.g, lifted_j(*ctx.jmap, b, a),
                                         lifted_j(*ctx.jmap, b, a));
           double rhs = 0.0;
           for (int s = 0; s < 4; ++s) rhs += ctx.g.norm2(a.slot(s)) * ctx.g.norm2(b.slot(s));
           return Trial{std::abs(lhs - rhs) / (sc2(a, b) * sc2(a, b)),
                        {{"A", slots_json(a)}, {"B", slots_json(b)}}};
         });

  with_h("nilpotent.jbar_anticommutator",
         "sum_s j(b_s) j(c_s) + j(c_s) j(b_s) = -2 <B, C> Id for central B, C", "",
         [&ctx, central_elem, sc2](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement b = central_elem(rng), c = central_elem(rng);
           if (b.max_abs() < 1e-8 || c.max_abs() < 1e-8) return std::nullopt;
           const Matrix lhs = lifted_j_anticommutator(*ctx.jmap, b, c);
           const Matrix rhs = -2.0 * lift_inner(ctx.g, b, c) *
                              Matrix::Identity(lhs.rows(), lhs.cols());
           return Trial{(lhs - rhs).cwiseAbs().maxCoeff() / sc2(b, c),
                        {{"B", slots_json(b)}, {"C", slots_json(c)}}};
         });

  with_h("nilpotent.lifted_center_recovery",
         "[A, jbar(B) A] = |a_s|^2 b_s slot-wise for complement A and central B", "",
         [&ctx, central_elem, complement_elem, sc2](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement b = central_elem(rng), a = complement_elem(rng);
           if (a.max_abs() < 1e-8 || b.max_abs() < 1e-8) return std::nullopt;
           const MatrixElement got = lift_bracket(ctx.alg, a, lifted_j(*ctx.jmap, b, a));
           MatrixElement expected = MatrixElement::zero(ctx.n);
           for (int s = 0; s < 4; ++s)
             expected.slot(s) = ctx.g.norm2(a.slot(s)) * b.slot(s);
           return Trial{lift_norm(ctx.g, got - expected) / (sc2(a, a) * sc2(b, b)),
                        {{"A", slots_json(a)}, {"B", slots_json(b)}}};
         });

  with_h("nilpotent.lifted_center_recovery_unit",
         "[A, jbar(B) A] = B when every slot of A is a unit vector", "",
         [&ctx, central_elem, sc2](Sampler& rng) -> std::optional<Trial> {
           if (ctx.split.z_perp.dim() == 0) return std::nullopt;
           MatrixElement a = MatrixElement::zero(ctx.n);
           for (int s = 0; s < 4; ++s) {
             const Vector v = rng.in_subspace(ctx.split.z_perp);
             const double nv = ctx.g.norm(v);
             if (nv < 1e-8) return std::nullopt;
             a.slot(s) = v / nv;
           }
           const MatrixElement b = central_elem(rng);
           if (b.max_abs() < 1e-8) return std::nullopt;
           const MatrixElement got = lift_bracket(ctx.alg, a, lifted_j(*ctx.jmap, b, a));
           return Trial{lift_norm(ctx.g, got - b) / sc2(b, b),
                        {{"A", slots_json(a)}, {"B", slots_json(b)}}};
         });

  with_j("nilpotent.block_pair_bracket",
         "[A, B] = 0 for complement-slot A and central-slot B", "",
         [&ctx, central_elem, complement_elem, sc2](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement a = complement_elem(rng), b = central_elem(rng);
           if (a.max_abs() < 1e-8 || b.max_abs() < 1e-8) return std::nullopt;
           return Trial{lift_norm(ctx.g, lift_bracket(ctx.alg, a, b)) / sc2(a, b),
                        {{"A", slots_json(a)}, {"B", slots_json(b)}}};
         });

  with_j("nilpotent.block_pair_orthogonal",
         "<A, B> = <A, Bt> = (A, B) = 0 for complement-slot A and central-slot B", "",
         [&ctx, central_elem, complement_elem, sc2](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement a = complement_elem(rng), b = central_elem(rng);
           if (a.max_abs() < 1e-8 || b.max_abs() < 1e-8) return std::nullopt;
           const double r = std::max({std::abs(lift_inner(ctx.g, a, b)),
                                      std::abs(lift_inner(ctx.g, a, transpose(b))),
                                      std::abs(det_form(ctx.g, a, b))});
           return Trial{r / sc2(a, b), {{"A", slots_json(a)}, {"B", slots_json(b)}}};
         });

  with_j("nilpotent.block_pair_transpose_derivative",
         "nabla_{Bt} A = -1/2 [[j(Z)X, j(V)M],[j(W)N, j(S)Y]] and nabla_{At} B is its "
         "transpose",
         "",
         [&ctx, central_elem, complement_elem, sc2](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement a = complement_elem(rng), b = central_elem(rng);
           if (a.max_abs() < 1e-8 || b.max_abs() < 1e-8) return std::nullopt;
           MatrixElement expected = MatrixElement::zero(ctx.n);
           expected.x11 = -0.5 * ctx.jmap->apply(b.x11, a.x11);
           expected.x12 = -0.5 * ctx.jmap->apply(b.x21, a.x12);
           expected.x21 = -0.5 * ctx.jmap->apply(b.x12, a.x21);
           expected.x22 = -0.5 * ctx.jmap->apply(b.x22, a.x22);
           const MatrixElement got1 = lift_connection(ctx.conn, transpose(b), a);
           const MatrixElement got2 = lift_connection(ctx.conn, transpose(a), b);
           const double r = std::max(lift_norm(ctx.g, got1 - expected),
                                     lift_norm(ctx.g, got2 - transpose(expected)));
           return Trial{r / sc2(a, b), {{"A", slots_json(a)}, {"B", slots_json(b)}}};
         });

  with_j("nilpotent.star_bracket_literal", "[A*, A] = 1/2 nabla_{A*} A for complement A",
         "the derivative is half the bracket, not twice it; the displayed factor leaves "
         "three quarters of the bracket behind",
         [&ctx, complement_elem, sc2](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement a = complement_elem(rng);
           if (a.max_abs() < 1e-8) return std::nullopt;
           const MatrixElement lhs = lift_bracket(ctx.alg, star(a), a);
           const MatrixElement rhs = 0.5 * lift_connection(ctx.conn, star(a), a);
           return Trial{lift_norm(ctx.g, lhs - rhs) / sc2(a, a), {{"A", slots_json(a)}}};
         });

  with_j("nilpotent.star_bracket_corrected",
         "nabla_{A*} A = 1/2 [A*, A] for complement A", "",
         [&ctx, complement_elem, sc2](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement a = complement_elem(rng);
           if (a.max_abs() < 1e-8) return std::nullopt;
           const MatrixElement lhs = lift_connection(ctx.conn, star(a), a);
           const MatrixElement rhs = 0.5 * lift_bracket(ctx.alg, star(a), a);
           return Trial{lift_norm(ctx.g, lhs - rhs) / sc2(a, a), {{"A", slots_json(a)}}};
         });
}

}  // namespace liemat
