#pragma once

#include "liemat/harness.hpp"

namespace liemat {

/// Pairing, transpose/star, O-functional, determinant form, diagonal rigidity
/// and the C-type subalgebra catalog on the lifted algebra.
inline void register_matrix(std::vector<EntryDef>& out, const SuiteContext& ctx) {
  using harness::orthogonal_to;
  using harness::slots_json;
  using harness::vj;
  using harness::with_pairing;
  const Eigen::Index n = ctx.n;

  auto vacuous = [&out](std::string id, std::string anchor, std::string why) {
    out.push_back({std::move(id), std::move(anchor), std::move(why), nullptr, 0});
  };
  auto relem = [n](Sampler& rng) {
    return MatrixElement{rng.vector(n), rng.vector(n), rng.vector(n), rng.vector(n)};
  };
  // g-unit vector orthogonal to w, or nothing when the attempt degenerates
  auto unit_perp = [n](Sampler& rng, const InnerProduct& g,
                       const Vector& w) -> std::optional<Vector> {
    const Vector u = orthogonal_to(g, rng.vector(n), w);
    const double nu = g.norm(u);
    if (nu < 1e-8) return std::nullopt;
    return Vector(u / nu);
  };
  auto sc2 = [](const MatrixElement& a, const MatrixElement& b) {
    return 1.0 + a.max_abs() * b.max_abs();
  };
  auto sc4 = [](const MatrixElement& a, const MatrixElement& b) {
    const double p = a.max_abs() * b.max_abs();
    return 1.0 + p * p;
  };

  out.push_back(
      {"matrix.inner_slotwise", "<A,B> = sum of slot pairings; <A,A> = sum of slot norms", "",
       [&ctx, relem, sc2](Sampler& rng) -> std::optional<Trial> {
         const MatrixElement a = relem(rng), b = relem(rng);
         const double byhand = ctx.g.pair(a.x11, b.x11) + ctx.g.pair(a.x12, b.x12) +
                               ctx.g.pair(a.x21, b.x21) + ctx.g.pair(a.x22, b.x22);
         const double self = ctx.g.norm2(a.x11) + ctx.g.norm2(a.x12) + ctx.g.norm2(a.x21) +
                             ctx.g.norm2(a.x22);
         const double r = std::max(std::abs(lift_inner(ctx.g, a, b) - byhand),
                                   std::abs(lift_inner(ctx.g, a, a) - self));
         return Trial{r / sc2(a, b), {{"A", slots_json(a)}, {"B", slots_json(b)}}};
       },
       0});

  out.push_back(
      {"matrix.transpose_self_pairing", "<A,At> = |X|^2 + |Y|^2 + 2 g(W,Z)", "",
       [&ctx, relem, sc2](Sampler& rng) -> std::optional<Trial> {
         const MatrixElement a = relem(rng);
         const double expected = ctx.g.norm2(a.x11) + ctx.g.norm2(a.x22) +
                                 2.0 * ctx.g.pair(a.x12, a.x21);
         const double r = std::abs(lift_inner(ctx.g, a, transpose(a)) - expected);
         return Trial{r / sc2(a, a), {{"A", slots_json(a)}}};
       },
       0});

  out.push_back(
      {"matrix.transpose_equality_iff", "<A,A> = <A,At> if and only if W = Z", "",
       [&ctx, relem, sc2](Sampler& rng) -> std::optional<Trial> {
         MatrixElement a = relem(rng);
         const Vector d = Vector(a.x12 - a.x21);
         const double gap = lift_inner(ctx.g, a, a) - lift_inner(ctx.g, a, transpose(a));
         const double r2 = std::abs(gap - ctx.g.norm2(d));
         a.x21 = a.x12;
         const double r1 =
             std::abs(lift_inner(ctx.g, a, a) - lift_inner(ctx.g, a, transpose(a)));
         return Trial{std::max(r1, r2) / sc2(a, a), {{"A", slots_json(a)}}};
       },
       0});

  out.push_back(
      {"matrix.orthogonal_transpose_pair", "<A,B> = 0 implies <At,Bt> = 0", "",
       [&ctx, relem, sc2](Sampler& rng) -> std::optional<Trial> {
         const MatrixElement a = relem(rng);
         MatrixElement b = relem(rng);
         const double na = lift_inner(ctx.g, a, a);
         if (na < 1e-8) return std::nullopt;
         b = b + (-lift_inner(ctx.g, a, b) / na) * a;
         const double r = std::abs(lift_inner(ctx.g, transpose(a), transpose(b)));
         return Trial{r / sc2(a, b), {{"A", slots_json(a)}, {"B", slots_json(b)}}};
       },
       0});

  out.push_back(
      {"matrix.transpose_exchange", "<A,Bt> = <At,B>", "",
       [&ctx, relem, sc2](Sampler& rng) -> std::optional<Trial> {
         const MatrixElement a = relem(rng), b = relem(rng);
         const double r = std::abs(lift_inner(ctx.g, a, transpose(b)) -
                                   lift_inner(ctx.g, transpose(a), b));
         return Trial{r / sc2(a, b), {{"A", slots_json(a)}, {"B", slots_json(b)}}};
       },
       0});

  out.push_back(
      {"matrix.zero_diagonal_transpose",
       "<A,At> = 0 when the main diagonal is zero and the other diagonal is orthogonal", "",
       [&ctx, n, sc2](Sampler& rng) -> std::optional<Trial> {
         const Vector w = rng.vector(n);
         const Vector z = orthogonal_to(ctx.g, rng.vector(n), w);
         const MatrixElement a{Vector::Zero(n), w, z, Vector::Zero(n)};
         return Trial{std::abs(lift_inner(ctx.g, a, transpose(a))) / sc2(a, a),
                      {{"A", slots_json(a)}}};
       },
       0});

  out.push_back(
      {"matrix.slotwise_orthogonality_converse",
       "<A,B> = 0 only if every pair of same-slot entries is orthogonal",
       "vanishing of the four-term sum does not force the individual slot pairings to vanish",
       [&ctx, relem, n, sc2](Sampler& rng) -> std::optional<Trial> {
         const MatrixElement a = relem(rng);
         MatrixElement b = relem(rng);
         if (ctx.g.norm2(a.x22) < 1e-8) return std::nullopt;
         const double partial = ctx.g.pair(a.x11, b.x11) + ctx.g.pair(a.x12, b.x12) +
                                ctx.g.pair(a.x21, b.x21);
         b.x22 = with_pairing(ctx.g, rng.vector(n), a.x22, -partial);
         const double r =
             std::max({std::abs(ctx.g.pair(a.x11, b.x11)), std::abs(ctx.g.pair(a.x12, b.x12)),
                       std::abs(ctx.g.pair(a.x21, b.x21)), std::abs(ctx.g.pair(a.x22, b.x22))});
         return Trial{r / sc2(a, b), {{"A", slots_json(a)}, {"B", slots_json(b)}}};
       },
       0});

  out.push_back(
      {"matrix.diagonal_reduction_pointwise",
       "<diag(X,Y),B> = <A,B> for a fixed B forces g(W,K) = 0 and g(Z,N) = 0",
       "a single B only pins the sum g(W,K) + g(Z,N)",
       [&ctx, n, sc2, t = 0](Sampler& rng) mutable -> std::optional<Trial> {
         Vector w, k, z, nn;
         if (t++ == 0) {
           w = Vector::Unit(n, 0);
           k = Vector::Unit(n, 0);
           z = Vector::Unit(n, 0);
           nn = Vector(-Vector::Unit(n, 0) * (ctx.g.pair(w, k) / ctx.g.norm2(z)));
         } else {
           w = rng.vector(n);
           k = rng.vector(n);
           z = rng.vector(n);
           if (ctx.g.norm2(z) < 1e-8) return std::nullopt;
           nn = with_pairing(ctx.g, rng.vector(n), z, -ctx.g.pair(w, k));
         }
         const MatrixElement a{rng.vector(n), w, z, rng.vector(n)};
         const MatrixElement b{rng.vector(n), k, nn, rng.vector(n)};
         const double r =
             std::max(std::abs(ctx.g.pair(w, k)), std::abs(ctx.g.pair(z, nn)));
         return Trial{r / sc2(a, b), {{"A", slots_json(a)}, {"B", slots_json(b)}}};
       },
       0});

  out.push_back(
      {"matrix.diagonal_reduction_universal",
       "<diag(X,Y),B> = <A,B> for every B forces W = Z = 0", "",
       [&ctx, n, relem](Sampler& rng) -> std::optional<Trial> {
         MatrixElement a = relem(rng);
         const double w2 = ctx.g.norm2(a.x12), z2 = ctx.g.norm2(a.x21);
         if (w2 < 1e-8 && z2 < 1e-8) return std::nullopt;
         // pairing against the elementary element carrying the offending slot
         MatrixElement probe = MatrixElement::zero(n);
         double detected = 0.0;
         if (w2 >= z2) {
           probe.x12 = a.x12;
           detected = w2;
         } else {
           probe.x21 = a.x21;
           detected = z2;
         }
         const MatrixElement diag{a.x11, Vector::Zero(n), Vector::Zero(n), a.x22};
         const double gap = lift_inner(ctx.g, a, probe) - lift_inner(ctx.g, diag, probe);
         return Trial{std::abs(gap - detected) / (1.0 + detected), {{"A", slots_json(a)}}};
       },
       0});

  out.push_back(
      {"matrix.o_transpose_star", "O(A) = O(At) = O(A*)", "",
       [&ctx, relem, sc2](Sampler& rng) -> std::optional<Trial> {
         const MatrixElement a = relem(rng);
         const double o = o_functional(ctx.g, a);
         const double r = std::max(std::abs(o - o_functional(ctx.g, transpose(a))),
                                   std::abs(o - o_functional(ctx.g, star(a))));
         return Trial{r / sc2(a, a), {{"A", slots_json(a)}}};
       },
       0});

  // O applied to a connection in the upper-left slot splits into two bracket terms.
  auto o_lhs = [&ctx](const ConnectionCoefficients& conn, const Vector& x, const Vector& y,
                      const Vector& v, const Vector& w, const Vector& z) {
    const MatrixElement a{conn.nabla(x, y), w, v, z};
    return o_functional(ctx.g, a);
  };
  auto o_term1 = [&ctx](const Vector& x, const Vector& y, const Vector& v, const Vector& w,
                        const Vector& z) {
    const MatrixElement a{Vector(0.5 * ctx.alg.bracket(x, y)), w, v, z};
    return o_functional(ctx.g, a);
  };
  auto o_term2 = [&ctx](const Vector& x, const Vector& y, const Vector& z) {
    const MatrixElement a{Vector(0.5 * ctx.alg.bracket(z, x)), x,
                          Vector(0.5 * ctx.alg.bracket(y, z)), y};
    return o_functional(ctx.g, a);
  };
  auto rec_scale = [&ctx](const Vector& x, const Vector& y, const Vector& v, const Vector& w,
                          const Vector& z) {
    return 1.0 + ctx.g.norm(x) * ctx.g.norm(y) * (1.0 + ctx.g.norm(z)) +
           ctx.g.norm(v) * ctx.g.norm(w);
  };

  out.push_back(
      {"matrix.o_recursion",
       "O([[nabla_X Y, W],[V, Z]]) = O([[[X,Y]/2, W],[V, Z]]) + O([[[Z,X]/2, X],[[Y,Z]/2, Y]])",
       "",
       [&ctx, o_lhs, o_term1, o_term2, rec_scale](Sampler& rng) -> std::optional<Trial> {
         const Vector x = rng.vector(ctx.n), y = rng.vector(ctx.n), v = rng.vector(ctx.n),
                      w = rng.vector(ctx.n), z = rng.vector(ctx.n);
         const double r =
             o_lhs(ctx.conn, x, y, v, w, z) - o_term1(x, y, v, w, z) - o_term2(x, y, z);
         return Trial{std::abs(r) / rec_scale(x, y, v, w, z),
                      {{"X", vj(x)}, {"Y", vj(y)}, {"V", vj(v)}, {"W", vj(w)}, {"Z", vj(z)}}};
       },
       0});

  out.push_back(
      {"matrix.o_recursion_alternate",
       "the same split under the flipped-sign derivative convention",
       "the flipped first sign leaves an uncancelled g([X,Y],Z) term",
       [&ctx, o_lhs, o_term1, o_term2, rec_scale, t = 0](Sampler& rng) mutable
       -> std::optional<Trial> {
         Vector x, y, v, w, z;
         if (t++ == 0 && ctx.n >= 3) {
           x = Vector::Unit(ctx.n, 0);
           y = Vector::Unit(ctx.n, 1);
           z = Vector::Unit(ctx.n, 2);
           v = Vector::Zero(ctx.n);
           w = Vector::Zero(ctx.n);
         } else {
           x = rng.vector(ctx.n);
           y = rng.vector(ctx.n);
           v = rng.vector(ctx.n);
           w = rng.vector(ctx.n);
           z = rng.vector(ctx.n);
         }
         const double r =
             o_lhs(ctx.conn_alt, x, y, v, w, z) - o_term1(x, y, v, w, z) - o_term2(x, y, z);
         return Trial{std::abs(r) / rec_scale(x, y, v, w, z),
                      {{"X", vj(x)}, {"Y", vj(y)}, {"V", vj(v)}, {"W", vj(w)}, {"Z", vj(z)}}};
       },
       0});

  if (ctx.split.z.dim() > 0) {
    out.push_back(
        {"matrix.o_recursion_central",
         "O([[nabla_X Y, W],[V, Z]]) = O([[[X,Y]/2, W],[V, Z]]) for central Z", "",
         [&ctx, o_lhs, o_term1, rec_scale](Sampler& rng) -> std::optional<Trial> {
           const Vector x = rng.vector(ctx.n), y = rng.vector(ctx.n), v = rng.vector(ctx.n),
                        w = rng.vector(ctx.n);
           const Vector z = harness::in_frame(rng, ctx.split.z_frame);
           const double r = o_lhs(ctx.conn, x, y, v, w, z) - o_term1(x, y, v, w, z);
           return Trial{std::abs(r) / rec_scale(x, y, v, w, z),
                        {{"X", vj(x)}, {"Y", vj(y)}, {"V", vj(v)}, {"W", vj(w)}, {"Z", vj(z)}}};
         },
         0});
  } else {
    vacuous("matrix.o_recursion_central",
            "O([[nabla_X Y, W],[V, Z]]) = O([[[X,Y]/2, W],[V, Z]]) for central Z",
            "the center is trivial");
  }

  out.push_back(
      {"matrix.o_recursion_commuting",
       "O([[nabla_X Y, W],[V, Z]]) = O([[[Z,X]/2, X],[[Y,Z]/2, Y]]) for [X,Y] = 0 and V "
       "orthogonal to W",
       "",
       [&ctx, o_lhs, o_term2, rec_scale](Sampler& rng) -> std::optional<Trial> {
         const Vector x = rng.vector(ctx.n);
         Vector y = Vector(rng.uniform() * x);
         if (ctx.split.z.dim() > 0) y += harness::in_frame(rng, ctx.split.z_frame);
         if (ctx.g.norm(ctx.alg.bracket(x, y)) > 1e-12) return std::nullopt;
         const Vector v = rng.vector(ctx.n);
         const Vector w = orthogonal_to(ctx.g, rng.vector(ctx.n), v);
         const Vector z = rng.vector(ctx.n);
         const double r = o_lhs(ctx.conn, x, y, v, w, z) - o_term2(x, y, z);
         return Trial{std::abs(r) / rec_scale(x, y, v, w, z),
                      {{"X", vj(x)}, {"Y", vj(y)}, {"V", vj(v)}, {"W", vj(w)}, {"Z", vj(z)}}};
       },
       0});

  out.push_back(
      {"matrix.diagonal_subalgebra", "diagonal elements close under the lifted bracket", "",
       [&ctx, n](Sampler& rng) -> std::optional<Trial> {
         const MatrixElement a{rng.vector(n), Vector::Zero(n), Vector::Zero(n), rng.vector(n)};
         const MatrixElement b{rng.vector(n), Vector::Zero(n), Vector::Zero(n), rng.vector(n)};
         const MatrixElement br = lift_bracket(ctx.alg, a, b);
         const double r = std::max(ctx.g.norm(br.x12), ctx.g.norm(br.x21));
         return Trial{r / (1.0 + br.max_abs()), {{"A", slots_json(a)}, {"B", slots_json(b)}}};
       },
       0});

  out.push_back(
      {"matrix.diagonal_transpose_nonzero",
       "<A,At> = |X|^2 + |Y|^2 > 0 for nonzero diagonal A", "",
       [&ctx, n](Sampler& rng) -> std::optional<Trial> {
         const Vector x = rng.vector(n), y = rng.vector(n);
         if (ctx.g.norm2(x) + ctx.g.norm2(y) < 1e-4) return std::nullopt;
         const MatrixElement a{x, Vector::Zero(n), Vector::Zero(n), y};
         const double p = lift_inner(ctx.g, a, transpose(a));
         const double expected = ctx.g.norm2(x) + ctx.g.norm2(y);
         double r = std::abs(p - expected) / (1.0 + expected);
         if (p <= 0.0) r = std::max(r, 1.0);
         return Trial{r, {{"A", slots_json(a)}}};
       },
       0});

  out.push_back(
      {"matrix.diagonal_star_o", "<A,A*> = 2 O(A) for diagonal A", "",
       [&ctx, n, sc2](Sampler& rng) -> std::optional<Trial> {
         const MatrixElement a{rng.vector(n), Vector::Zero(n), Vector::Zero(n), rng.vector(n)};
         const double r =
             std::abs(lift_inner(ctx.g, a, star(a)) - 2.0 * o_functional(ctx.g, a));
         return Trial{r / sc2(a, a), {{"A", slots_json(a)}}};
       },
       0});

  out.push_back(
      {"matrix.main_diagonal_dependence",
       "<A,At> = |X|^2 + 2 g(X,Y) + |Y|^2 when O(A) = 0", "",
       [&ctx, n, sc2](Sampler& rng) -> std::optional<Trial> {
         const Vector x = rng.vector(n), w = rng.vector(n), z = rng.vector(n);
         if (ctx.g.norm2(x) < 1e-8) return std::nullopt;
         const Vector y = with_pairing(ctx.g, rng.vector(n), x, ctx.g.pair(z, w));
         const MatrixElement a{x, w, z, y};
         const double expected = ctx.g.norm2(x) + 2.0 * ctx.g.pair(x, y) + ctx.g.norm2(y);
         const double r = std::abs(lift_inner(ctx.g, a, transpose(a)) - expected);
         return Trial{r / sc2(a, a), {{"A", slots_json(a)}}};
       },
       0});

  out.push_back(
      {"matrix.main_diagonal_displayed",
       "<A,A> = |X|^2 + 2 g(X,Y) + |Y|^2 when O(A) = 0",
       "the displayed pairing of A with itself still carries the off-diagonal norms; the "
       "formula computes <A,At>",
       [&ctx, n, sc2](Sampler& rng) -> std::optional<Trial> {
         const Vector x = rng.vector(n), w = rng.vector(n), z = rng.vector(n);
         if (ctx.g.norm2(x) < 1e-8) return std::nullopt;
         const Vector y = with_pairing(ctx.g, rng.vector(n), x, ctx.g.pair(z, w));
         const MatrixElement a{x, w, z, y};
         const double expected = ctx.g.norm2(x) + 2.0 * ctx.g.pair(x, y) + ctx.g.norm2(y);
         const double r = std::abs(lift_inner(ctx.g, a, a) - expected);
         return Trial{r / sc2(a, a), {{"A", slots_json(a)}}};
       },
       0});

  out.push_back(
      {"matrix.equal_row_entry_forces",
       "O(A) = 0 with repeated lower-row entry Y forces X = V when g(X,Y) is nonzero",
       "only the Y-component of X - V is pinned; components orthogonal to Y stay free",
       [&ctx, n](Sampler& rng) -> std::optional<Trial> {
         const Vector x = rng.vector(n), y = rng.vector(n);
         const double nx = ctx.g.norm(x), ny = ctx.g.norm(y);
         if (nx < 1e-4 || ny < 1e-4) return std::nullopt;
         if (std::abs(ctx.g.pair(x, y)) < 0.3 * nx * ny) return std::nullopt;
         const Vector d = orthogonal_to(ctx.g, rng.vector(n), y);
         if (ctx.g.norm(d) < 1e-4) return std::nullopt;
         const Vector v = Vector(x + d);
         const MatrixElement a{x, v, y, y};
         const double r = ctx.g.norm(Vector(x - v)) / (ctx.g.norm(x) + ctx.g.norm(v));
         return Trial{r, {{"A", slots_json(a)}, {"O", o_functional(ctx.g, a)}}};
       },
       0});

  out.push_back(
      {"matrix.equal_row_entry_degenerate",
       "O(A) = 0 with repeated lower-row entry Y and g(X,Y) = 0 gives g(Y,V) = 0", "",
       [&ctx, n](Sampler& rng) -> std::optional<Trial> {
         const Vector y = rng.vector(n);
         if (ctx.g.norm2(y) < 1e-8) return std::nullopt;
         const Vector x = orthogonal_to(ctx.g, rng.vector(n), y);
         const Vector v = orthogonal_to(ctx.g, rng.vector(n), y);
         const MatrixElement a{x, v, y, y};
         return Trial{std::abs(ctx.g.pair(y, v)) / (1.0 + a.max_abs()),
                      {{"A", slots_json(a)}}};
       },
       0});

  out.push_back(
      {"matrix.star_pairing_expansion",
       "<A,A*> = 2 g(X,Y) - |W|^2 - |Z|^2 = 2 g(Z,W) - |W|^2 - |Z|^2 when O(A) = 0", "",
       [&ctx, n, sc2](Sampler& rng) -> std::optional<Trial> {
         const Vector x = rng.vector(n), w = rng.vector(n), z = rng.vector(n);
         if (ctx.g.norm2(x) < 1e-8) return std::nullopt;
         const Vector y = with_pairing(ctx.g, rng.vector(n), x, ctx.g.pair(z, w));
         const MatrixElement a{x, w, z, y};
         const double p = lift_inner(ctx.g, a, star(a));
         const double offs = ctx.g.norm2(w) + ctx.g.norm2(z);
         const double r = std::max(std::abs(p - (2.0 * ctx.g.pair(x, y) - offs)),
                                   std::abs(p - (2.0 * ctx.g.pair(z, w) - offs)));
         return Trial{r / sc2(a, a), {{"A", slots_json(a)}}};
       },
       0});

  const char* kParallelLit =
      "O(A) = 0 and (A,A) = 0 force the main diagonal entries to be parallel";
  if (n >= 2) {
    out.push_back(
        {"matrix.parallel_diagonal_literal", kParallelLit,
         "(A,A) involves |W|^2 |Z|^2 rather than g(W,Z)^2, so the diagonal angle stays free",
         [&ctx, n, unit_perp](Sampler& rng) -> std::optional<Trial> {
           const Vector x = rng.vector(n), y = rng.vector(n);
           const double nx = ctx.g.norm(x), ny = ctx.g.norm(y);
           if (nx < 1e-3 || ny < 1e-3) return std::nullopt;
           const double cosxy = ctx.g.pair(x, y) / (nx * ny);
           if (std::abs(cosxy) > 0.9) return std::nullopt;
           const Vector w = rng.vector(n);
           const double nw = ctx.g.norm(w);
           if (nw < 1e-3) return std::nullopt;
           const double a1 = ctx.g.pair(x, y) / nw;
           const double rad = nx * ny / nw;
           const double b2 = rad * rad - a1 * a1;
           if (b2 <= 1e-10) return std::nullopt;
           const auto u = unit_perp(rng, ctx.g, w);
           if (!u) return std::nullopt;
           const Vector z = Vector((a1 / nw) * w + std::sqrt(b2) * (*u));
           const MatrixElement a{x, w, z, y};
           return Trial{1.0 - std::abs(cosxy), {{"A", slots_json(a)}, {"cos", cosxy}}};
         },
         0});
  } else {
    vacuous("matrix.parallel_diagonal_literal", kParallelLit, "needs dimension at least 2");
  }

  out.push_back(
      {"matrix.parallel_diagonal_transpose",
       "O(A) = 0 and (A,At) = 0 force the main diagonal entries to be parallel",
       "(A,At) subtracts g(W,Z)^2, matching the expansion that saturates Cauchy-Schwarz",
       [&ctx, n](Sampler& rng) -> std::optional<Trial> {
         const Vector x = rng.vector(n);
         const double x2 = ctx.g.norm2(x);
         if (x2 < 1e-6) return std::nullopt;
         const Vector w = rng.vector(n), z = rng.vector(n);
         const double c = ctx.g.pair(w, z);
         if (std::abs(c) < 1e-6) return std::nullopt;
         const Vector y = Vector((c / x2) * x);
         const MatrixElement a{x, w, z, y};
         const double r = 1.0 - std::abs(ctx.g.pair(x, y)) / (ctx.g.norm(x) * ctx.g.norm(y));
         return Trial{std::abs(r), {{"A", slots_json(a)}}};
       },
       0});

  // Consequences on the positive-parallel branch: Y = lambda X, g(Z,W) = g(X,Y).
  auto parallel_sample = [&ctx, n](Sampler& rng)
      -> std::optional<std::tuple<MatrixElement, double>> {
    const Vector x = rng.vector(n);
    const double x2 = ctx.g.norm2(x);
    if (x2 < 1e-6) return std::nullopt;
    const double lambda = rng.uniform(0.2, 2.0);
    const Vector y = Vector(lambda * x);
    const Vector w = rng.vector(n);
    if (ctx.g.norm2(w) < 1e-8) return std::nullopt;
    const Vector z = with_pairing(ctx.g, rng.vector(n), w, lambda * x2);
    return std::make_tuple(MatrixElement{x, w, z, y}, lambda);
  };

  out.push_back(
      {"matrix.parallel_diagonal_pairings",
       "on the parallel-diagonal variety g(X,Y) and g(Z,W) are nonzero", "",
       [&ctx, parallel_sample](Sampler& rng) -> std::optional<Trial> {
         auto s = parallel_sample(rng);
         if (!s) return std::nullopt;
         const MatrixElement& a = std::get<0>(*s);
         const double scale = 1.0 + a.max_abs() * a.max_abs();
         const bool ok = std::abs(ctx.g.pair(a.x11, a.x22)) > 1e-9 * scale &&
                         std::abs(ctx.g.pair(a.x21, a.x12)) > 1e-9 * scale;
         return Trial{ok ? 0.0 : 1.0, {{"A", slots_json(a)}}};
       },
       0});

  out.push_back(
      {"matrix.parallel_diagonal_transpose_square",
       "on the parallel-diagonal variety <A,At> = (|X| + |Y|)^2",
       "the same-direction branch of parallelism",
       [&ctx, parallel_sample, sc2](Sampler& rng) -> std::optional<Trial> {
         auto s = parallel_sample(rng);
         if (!s) return std::nullopt;
         const MatrixElement& a = std::get<0>(*s);
         const double sum = ctx.g.norm(a.x11) + ctx.g.norm(a.x22);
         const double r = std::abs(lift_inner(ctx.g, a, transpose(a)) - sum * sum);
         return Trial{r / sc2(a, a), {{"A", slots_json(a)}}};
       },
       0});

  out.push_back(
      {"matrix.parallel_diagonal_star_expansion",
       "on the parallel-diagonal variety <A,A*> = 2 |X| |Y| - |W|^2 - |Z|^2", "",
       [&ctx, parallel_sample, sc2](Sampler& rng) -> std::optional<Trial> {
         auto s = parallel_sample(rng);
         if (!s) return std::nullopt;
         const MatrixElement& a = std::get<0>(*s);
         const double expected = 2.0 * ctx.g.norm(a.x11) * ctx.g.norm(a.x22) -
                                 ctx.g.norm2(a.x12) - ctx.g.norm2(a.x21);
         const double r = std::abs(lift_inner(ctx.g, a, star(a)) - expected);
         return Trial{r / sc2(a, a), {{"A", slots_json(a)}}};
       },
       0});

  out.push_back(
      {"matrix.parallel_diagonal_det_transpose",
       "on the parallel-diagonal variety (A,At) = 0", "",
       [&ctx, parallel_sample, sc4](Sampler& rng) -> std::optional<Trial> {
         auto s = parallel_sample(rng);
         if (!s) return std::nullopt;
         const MatrixElement& a = std::get<0>(*s);
         const double r = std::abs(det_form(ctx.g, a, transpose(a)));
         return Trial{r / sc4(a, a), {{"A", slots_json(a)}}};
       },
       0});

  out.push_back(
      {"matrix.parallel_diagonal_det_star",
       "on the parallel-diagonal variety (A,A*) = |X|^2 |Y|^2 - |Z|^2 |W|^2", "",
       [&ctx, parallel_sample, sc4](Sampler& rng) -> std::optional<Trial> {
         auto s = parallel_sample(rng);
         if (!s) return std::nullopt;
         const MatrixElement& a = std::get<0>(*s);
         const double expected = ctx.g.norm2(a.x11) * ctx.g.norm2(a.x22) -
                                 ctx.g.norm2(a.x21) * ctx.g.norm2(a.x12);
         const double r = std::abs(det_form(ctx.g, a, star(a)) - expected);
         return Trial{r / sc4(a, a), {{"A", slots_json(a)}}};
       },
       0});

  out.push_back(
      {"matrix.offdiagonal_rigidity",
       "<A,A*> = 0, (A,A*) = 0 and O(A) = 0 force W = Z",
       "the hypotheses saturate Cauchy-Schwarz between W and Z, so solving them constructs "
       "Z equal to W; the residual confirms the forced equality",
       [&ctx, n](Sampler& rng) -> std::optional<Trial> {
         const Vector w = rng.vector(n);
         const double nw = ctx.g.norm(w);
         if (nw < 1e-3) return std::nullopt;
         // |Z| = |W| and g(Z,W) = |W|^2 leave a single solution along W
         const Vector z = Vector((ctx.g.norm2(w) / (nw * nw)) * w);
         const Vector x = rng.vector(n);
         if (ctx.g.norm2(x) < 1e-6) return std::nullopt;
         const Vector y = with_pairing(ctx.g, rng.vector(n), x, ctx.g.norm2(w));
         const MatrixElement a{x, w, z, y};
         const double hyp = std::max(
             {std::abs(lift_inner(ctx.g, a, star(a))), std::abs(det_form(ctx.g, a, star(a))),
              std::abs(o_functional(ctx.g, a))});
         const double r = ctx.g.norm(Vector(w - z)) / (ctx.g.norm(w) + ctx.g.norm(z));
         return Trial{std::max(r, hyp / (1.0 + a.max_abs() * a.max_abs())),
                      {{"A", slots_json(a)}}};
       },
       0});

  out.push_back(
      {"matrix.det_symmetry", "(A,B) = (B,A)", "",
       [&ctx, relem, sc4](Sampler& rng) -> std::optional<Trial> {
         const MatrixElement a = relem(rng), b = relem(rng);
         const double r = std::abs(det_form(ctx.g, a, b) - det_form(ctx.g, b, a));
         return Trial{r / sc4(a, b), {{"A", slots_json(a)}, {"B", slots_json(b)}}};
       },
       0});

  out.push_back(
      {"matrix.det_transpose_exchange", "(At,B) = (A,Bt)", "",
       [&ctx, relem, sc4](Sampler& rng) -> std::optional<Trial> {
         const MatrixElement a = relem(rng), b = relem(rng);
         const double r =
             std::abs(det_form(ctx.g, transpose(a), b) - det_form(ctx.g, a, transpose(b)));
         return Trial{r / sc4(a, b), {{"A", slots_json(a)}, {"B", slots_json(b)}}};
       },
       0});

  out.push_back(
      {"matrix.det_star_exchange", "(A*,B) = (A,B*)", "",
       [&ctx, relem, sc4](Sampler& rng) -> std::optional<Trial> {
         const MatrixElement a = relem(rng), b = relem(rng);
         const double r = std::abs(det_form(ctx.g, star(a), b) - det_form(ctx.g, a, star(b)));
         return Trial{r / sc4(a, b), {{"A", slots_json(a)}, {"B", slots_json(b)}}};
       },
       0});

  out.push_back(
      {"matrix.det_zero_row", "(A,B) = 0 when a full row or column of A is zero", "",
       [&ctx, relem, n, sc4, t = 0](Sampler& rng) mutable -> std::optional<Trial> {
         MatrixElement a = relem(rng);
         const MatrixElement b = relem(rng);
         switch (t++ % 4) {
           case 0: a.x11.setZero(); a.x12.setZero(); break;
           case 1: a.x21.setZero(); a.x22.setZero(); break;
           case 2: a.x11.setZero(); a.x21.setZero(); break;
           default: a.x12.setZero(); a.x22.setZero(); break;
         }
         const double r = std::abs(det_form(ctx.g, a, b));
         return Trial{r / sc4(a, b), {{"A", slots_json(a)}, {"B", slots_json(b)}}};
       },
       0});

  out.push_back(
      {"matrix.orthogonal_det_converse", "<A,B> = 0 implies (A,B) = 0",
       "pairing orthogonality constrains a sum, not the determinant of slot pairings",
       [&ctx, relem, n, sc4, t = 0](Sampler& rng) mutable -> std::optional<Trial> {
         MatrixElement a, b;
         if (t++ == 0) {
           const Vector e = Vector::Unit(n, 0);
           a = MatrixElement{e, e, e, e};
           b = MatrixElement{e, e, e, Vector(-3.0 * e)};
         } else {
           a = relem(rng);
           b = relem(rng);
           const double na = lift_inner(ctx.g, a, a);
           if (na < 1e-8) return std::nullopt;
           b = b + (-lift_inner(ctx.g, a, b) / na) * a;
         }
         if (std::abs(lift_inner(ctx.g, a, b)) > 1e-9 * sc4(a, b)) return std::nullopt;
         const double r = std::abs(det_form(ctx.g, a, b));
         return Trial{r / sc4(a, b), {{"A", slots_json(a)}, {"B", slots_json(b)}}};
       },
       0});

  out.push_back(
      {"matrix.diagonal_det_self", "(A,A) = (A,At) = |X|^2 |Y|^2 for diagonal A", "",
       [&ctx, n, sc4](Sampler& rng) -> std::optional<Trial> {
         const MatrixElement a{rng.vector(n), Vector::Zero(n), Vector::Zero(n), rng.vector(n)};
         const double expected = ctx.g.norm2(a.x11) * ctx.g.norm2(a.x22);
         const double r = std::max(std::abs(det_form(ctx.g, a, a) - expected),
                                   std::abs(det_form(ctx.g, a, transpose(a)) - expected));
         return Trial{r / sc4(a, a), {{"A", slots_json(a)}}};
       },
       0});

  out.push_back(
      {"matrix.diagonal_det_star",
       "(A,A*) = g(X,Y)^2 for diagonal A; zero when X and Y are orthogonal", "",
       [&ctx, n, sc4](Sampler& rng) -> std::optional<Trial> {
         const Vector x = rng.vector(n), y = rng.vector(n);
         const MatrixElement a{x, Vector::Zero(n), Vector::Zero(n), y};
         const double c = ctx.g.pair(x, y);
         const double r1 = std::abs(det_form(ctx.g, a, star(a)) - c * c);
         const Vector yo = orthogonal_to(ctx.g, y, x);
         const MatrixElement ao{x, Vector::Zero(n), Vector::Zero(n), yo};
         const double r2 = std::abs(det_form(ctx.g, ao, star(ao)));
         return Trial{std::max(r1, r2) / sc4(a, a), {{"A", slots_json(a)}}};
       },
       0});

  out.push_back(
      {"matrix.selfadjoint_star_transpose", "<At,(A*)t> = 2 O(A) when A = At", "",
       [&ctx, n, sc2](Sampler& rng) -> std::optional<Trial> {
         const Vector w = rng.vector(n);
         const MatrixElement a{rng.vector(n), w, w, rng.vector(n)};
         const double r = std::abs(lift_inner(ctx.g, transpose(a), transpose(star(a))) -
                                   2.0 * o_functional(ctx.g, a));
         return Trial{r / sc2(a, a), {{"A", slots_json(a)}}};
       },
       0});

  out.push_back(
      {"matrix.selfadjoint_star_pairing", "<At,(At)*> = <A,A*> when A = At", "",
       [&ctx, n, sc2](Sampler& rng) -> std::optional<Trial> {
         const Vector w = rng.vector(n);
         const MatrixElement a{rng.vector(n), w, w, rng.vector(n)};
         const MatrixElement at = transpose(a);
         const double r =
             std::abs(lift_inner(ctx.g, at, star(at)) - lift_inner(ctx.g, a, star(a)));
         return Trial{r / sc2(a, a), {{"A", slots_json(a)}}};
       },
       0});

  out.push_back(
      {"matrix.norm_isometries", "<A,A> = <A*,A*> = <At,At> when A = At", "",
       [&ctx, n, sc2](Sampler& rng) -> std::optional<Trial> {
         const Vector w = rng.vector(n);
         const MatrixElement a{rng.vector(n), w, w, rng.vector(n)};
         const double na = lift_inner(ctx.g, a, a);
         const double r = std::max(std::abs(na - lift_inner(ctx.g, star(a), star(a))),
                                   std::abs(na - lift_inner(ctx.g, transpose(a), transpose(a))));
         return Trial{r / sc2(a, a), {{"A", slots_json(a)}}};
       },
       0});

  // Two elements with equal self-determinants and vanishing O, plus the
  // rearranged difference identity and its misread as an O-equation.
  auto det_pair_sample = [&ctx, n, unit_perp](Sampler& rng)
      -> std::optional<std::pair<MatrixElement, MatrixElement>> {
    const Vector x = rng.vector(n), w = rng.vector(n), z = rng.vector(n);
    if (ctx.g.norm2(x) < 1e-6) return std::nullopt;
    const Vector y = with_pairing(ctx.g, rng.vector(n), x, ctx.g.pair(z, w));
    const MatrixElement a{x, w, z, y};
    const double c = det_form(ctx.g, a, a);
    const Vector v = rng.vector(n), nn = rng.vector(n), m = rng.vector(n);
    const double v2 = ctx.g.norm2(v);
    if (v2 < 1e-6) return std::nullopt;
    const double target_s2 = (c + ctx.g.norm2(nn) * ctx.g.norm2(m)) / v2;
    if (target_s2 <= 1e-10) return std::nullopt;
    const double a1 = ctx.g.pair(m, nn) / std::sqrt(v2);
    const double b2 = target_s2 - a1 * a1;
    if (b2 < 0.0) return std::nullopt;
    const auto u = unit_perp(rng, ctx.g, v);
    if (!u) return std::nullopt;
    const Vector s = Vector((a1 / std::sqrt(v2)) * v + std::sqrt(b2) * (*u));
    const MatrixElement b{v, nn, m, s};
    return std::make_pair(a, b);
  };

  out.push_back(
      {"matrix.det_difference_rearranged",
       "(A,A) = (B,B) with O(A) = O(B) = 0 gives |X|^2 |Y|^2 - |V|^2 |S|^2 = |Z|^2 |W|^2 - "
       "|N|^2 |M|^2",
       "",
       [&ctx, det_pair_sample, sc4](Sampler& rng) -> std::optional<Trial> {
         auto s = det_pair_sample(rng);
         if (!s) return std::nullopt;
         const MatrixElement& a = s->first;
         const MatrixElement& b = s->second;
         const double lhs = ctx.g.norm2(a.x11) * ctx.g.norm2(a.x22) -
                            ctx.g.norm2(b.x11) * ctx.g.norm2(b.x22);
         const double rhs = ctx.g.norm2(a.x21) * ctx.g.norm2(a.x12) -
                            ctx.g.norm2(b.x12) * ctx.g.norm2(b.x21);
         return Trial{std::abs(lhs - rhs) / sc4(a, b),
                      {{"A", slots_json(a)}, {"B", slots_json(b)}}};
       },
       0});

  out.push_back(
      {"matrix.det_difference_o_identification",
       "|X|^2 |Y|^2 - |V|^2 |S|^2 equals O([[X,S],[V,Y]])",
       "the difference of norm products is not the pairing difference the O-functional "
       "computes",
       [&ctx, det_pair_sample, sc4](Sampler& rng) -> std::optional<Trial> {
         auto s = det_pair_sample(rng);
         if (!s) return std::nullopt;
         const MatrixElement& a = s->first;
         const MatrixElement& b = s->second;
         const double lhs = ctx.g.norm2(a.x11) * ctx.g.norm2(a.x22) -
                            ctx.g.norm2(b.x11) * ctx.g.norm2(b.x22);
         const MatrixElement ap{a.x11, b.x22, b.x11, a.x22};
         const double r = std::abs(lhs - o_functional(ctx.g, ap));
         return Trial{r / sc4(a, b), {{"A", slots_json(a)}, {"B", slots_json(b)}}};
       },
       0});

  out.push_back(
      {"matrix.det_difference_o_equality",
       "O([[X,S],[V,Y]]) = O([[Z,M],[N,W]]) when O(A) = O(B) = 0", "",
       [&ctx, det_pair_sample, sc2](Sampler& rng) -> std::optional<Trial> {
         auto s = det_pair_sample(rng);
         if (!s) return std::nullopt;
         const MatrixElement& a = s->first;
         const MatrixElement& b = s->second;
         const MatrixElement ap{a.x11, b.x22, b.x11, a.x22};
         const MatrixElement bp{a.x21, b.x21, b.x12, a.x12};
         const double r =
             std::abs(o_functional(ctx.g, ap) - o_functional(ctx.g, bp));
         return Trial{r / sc2(a, b), {{"A", slots_json(a)}, {"B", slots_json(b)}}};
       },
       0});

  out.push_back(
      {"matrix.cross_transpose_star", "A cross implies At and A* cross", "",
       [&ctx, n](Sampler& rng) -> std::optional<Trial> {
         const Vector x = rng.vector(n);
         const Vector y = orthogonal_to(ctx.g, rng.vector(n), x);
         const Vector w = rng.vector(n);
         const Vector z = orthogonal_to(ctx.g, rng.vector(n), w);
         const MatrixElement a{x, w, z, y};
         const MatrixElement at = transpose(a), as = star(a);
         const double r = std::max({std::abs(ctx.g.pair(at.x11, at.x22)),
                                    std::abs(ctx.g.pair(at.x21, at.x12)),
                                    std::abs(ctx.g.pair(as.x11, as.x22)),
                                    std::abs(ctx.g.pair(as.x21, as.x12))});
         return Trial{r / (1.0 + a.max_abs() * a.max_abs()), {{"A", slots_json(a)}}};
       },
       0});

  // C-type entries need an orthogonal decomposition h + n with h bracket-closed.
  const char* kC1Cross = "type-one elements are cross and satisfy O(A) = 0";
  const char* kC1Closure = "the bracket of two type-one elements is again type-one";
  const char* kC2Closure = "the bracket of two type-two elements is again type-two";
  const char* kC3Closure = "the bracket of two type-three elements is again type-three";
  const char* kC1SwappedOrth =
      "a type-one element is orthogonal to every row-swapped type-one element";
  const char* kC1Mixed =
      "the bracket of a type-one element with a row-swapped one has all slots in [h,n]";
  const char* kC1Dual = "A in C1 maps to C3 under transpose and under star";
  const char* kC2Dual = "A in C2 maps to C2 under transpose and under star";
  const char* kC3Dual = "A in C3 maps to C1 under transpose and under star";
  const char* kLayoutO = "the type-one and type-three layouts A1, A3 satisfy O = 0";
  const char* kLayout1 = "<A2,A3> = <A2,A3t> on the layout variety";
  const char* kLayout2 = "<A1,A1*> = <A3,A3*> on the layout variety";
  const char* kLayout3 = "<A1,A1t> = <A3,A3t> on the layout variety";

  if (ctx.dec) {
    const TypeDecomposition& dec = *ctx.dec;
    const Matrix hmat = dec.h.matrix();
    const Matrix nmat = dec.n.matrix();
    auto in_h = [&ctx, hmat](Sampler& rng) { return harness::in_frame(rng, hmat); };
    auto in_n = [&ctx, nmat](Sampler& rng) { return harness::in_frame(rng, nmat); };
    auto c1 = [in_h, in_n](Sampler& rng) {
      return MatrixElement{in_h(rng), in_h(rng), in_n(rng), in_n(rng)};
    };
    auto c1s = [in_h, in_n](Sampler& rng) {
      return MatrixElement{in_n(rng), in_n(rng), in_h(rng), in_h(rng)};
    };
    auto c2 = [in_h, in_n](Sampler& rng) {
      return MatrixElement{in_h(rng), in_n(rng), in_n(rng), in_h(rng)};
    };
    auto c3 = [in_h, in_n](Sampler& rng) {
      return MatrixElement{in_h(rng), in_n(rng), in_h(rng), in_n(rng)};
    };
    const std::string closure_note =
        ctx.dec_n_closed ? ""
                         : "the orthogonal complement is not bracket-closed here, so "
                           "type closure is not expected";

    out.push_back(
        {"matrix.c1_cross", kC1Cross, "",
         [&ctx, c1](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement a = c1(rng);
           const double r = std::max({std::abs(ctx.g.pair(a.x11, a.x22)),
                                      std::abs(ctx.g.pair(a.x21, a.x12)),
                                      std::abs(o_functional(ctx.g, a))});
           return Trial{r / (1.0 + a.max_abs() * a.max_abs()), {{"A", slots_json(a)}}};
         },
         0});

    auto rows_residual = [](const MatrixElement& br, const SubspaceBasis& top,
                            const SubspaceBasis& bottom) {
      const double r = std::max({top.containment_residual(br.x11),
                                 top.containment_residual(br.x12),
                                 bottom.containment_residual(br.x21),
                                 bottom.containment_residual(br.x22)});
      return r / (1.0 + br.max_abs());
    };

    out.push_back(
        {"matrix.c1_closure", kC1Closure, closure_note,
         [&ctx, c1, rows_residual](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement a = c1(rng), b = c1(rng);
           const MatrixElement br = lift_bracket(ctx.alg, a, b);
           return Trial{rows_residual(br, ctx.dec->h, ctx.dec->n),
                        {{"A", slots_json(a)}, {"B", slots_json(b)}}};
         },
         0});

    out.push_back(
        {"matrix.c2_closure", kC2Closure, closure_note,
         [&ctx, c2](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement a = c2(rng), b = c2(rng);
           const MatrixElement br = lift_bracket(ctx.alg, a, b);
           const double r = std::max({ctx.dec->h.containment_residual(br.x11),
                                      ctx.dec->h.containment_residual(br.x22),
                                      ctx.dec->n.containment_residual(br.x12),
                                      ctx.dec->n.containment_residual(br.x21)});
           return Trial{r / (1.0 + br.max_abs()),
                        {{"A", slots_json(a)}, {"B", slots_json(b)}}};
         },
         0});

    out.push_back(
        {"matrix.c3_closure", kC3Closure, closure_note,
         [&ctx, c3](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement a = c3(rng), b = c3(rng);
           const MatrixElement br = lift_bracket(ctx.alg, a, b);
           const double r = std::max({ctx.dec->h.containment_residual(br.x11),
                                      ctx.dec->h.containment_residual(br.x21),
                                      ctx.dec->n.containment_residual(br.x12),
                                      ctx.dec->n.containment_residual(br.x22)});
           return Trial{r / (1.0 + br.max_abs()),
                        {{"A", slots_json(a)}, {"B", slots_json(b)}}};
         },
         0});

    out.push_back(
        {"matrix.c1_swapped_orthogonal", kC1SwappedOrth, "",
         [&ctx, c1, c1s, sc2](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement a = c1(rng), b = c1s(rng);
           return Trial{std::abs(lift_inner(ctx.g, a, b)) / sc2(a, b),
                        {{"A", slots_json(a)}, {"B", slots_json(b)}}};
         },
         0});

    // span of all [h_i, n_j]; bracket slots of a mixed pair must lie in it
    Matrix mixed(n, hmat.cols() * nmat.cols());
    for (Eigen::Index i = 0; i < hmat.cols(); ++i)
      for (Eigen::Index j = 0; j < nmat.cols(); ++j)
        mixed.col(i * nmat.cols() + j) = ctx.alg.bracket(hmat.col(i), nmat.col(j));
    const SubspaceBasis mixed_span = SubspaceBasis::span_of(mixed);

    out.push_back(
        {"matrix.c1_mixed_bracket", kC1Mixed, "",
         [&ctx, c1, c1s, mixed_span](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement a = c1(rng), b = c1s(rng);
           const MatrixElement br = lift_bracket(ctx.alg, a, b);
           const double r = std::max({mixed_span.containment_residual(br.x11),
                                      mixed_span.containment_residual(br.x12),
                                      mixed_span.containment_residual(br.x21),
                                      mixed_span.containment_residual(br.x22)});
           return Trial{r / (1.0 + br.max_abs()),
                        {{"A", slots_json(a)}, {"B", slots_json(b)}}};
         },
         0});

    const std::string mirror_note =
        "the star image lands in the mirrored orientation of the target type, counted "
        "as its own class";
    out.push_back(
        {"matrix.c1_duality_maps", kC1Dual, mirror_note,
         [&ctx, c1](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement a = c1(rng);
           const bool ok = classify_type(transpose(a), *ctx.dec) == ElementType::C3 &&
                           classify_type(star(a), *ctx.dec) == ElementType::C3Swapped;
           return Trial{ok ? 0.0 : 1.0, {{"A", slots_json(a)}}};
         },
         0});
    out.push_back(
        {"matrix.c2_duality_maps", kC2Dual, "",
         [&ctx, c2](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement a = c2(rng);
           const bool ok = classify_type(transpose(a), *ctx.dec) == ElementType::C2 &&
                           classify_type(star(a), *ctx.dec) == ElementType::C2;
           return Trial{ok ? 0.0 : 1.0, {{"A", slots_json(a)}}};
         },
         0});
    out.push_back(
        {"matrix.c3_duality_maps", kC3Dual, mirror_note,
         [&ctx, c3](Sampler& rng) -> std::optional<Trial> {
           const MatrixElement a = c3(rng);
           const bool ok = classify_type(transpose(a), *ctx.dec) == ElementType::C1 &&
                           classify_type(star(a), *ctx.dec) == ElementType::C1Swapped;
           return Trial{ok ? 0.0 : 1.0, {{"A", slots_json(a)}}};
         },
         0});

    // Shared layout variety: X,Y in h, Z,W in n, g(X,Y) = g(Z,W) = |W|^2.
    auto layout_sample = [&ctx, in_h, in_n, unit_perp, nmat](Sampler& rng)
        -> std::optional<std::array<MatrixElement, 3>> {
      const Vector w = in_n(rng);
      const double w2 = ctx.g.norm2(w);
      if (w2 < 1e-6) return std::nullopt;
      Vector z = w;
      if (nmat.cols() >= 2) {
        const Vector u = orthogonal_to(ctx.g, harness::in_frame(rng, nmat), w);
        if (ctx.g.norm(u) > 1e-8) z = Vector(w + rng.uniform() * u);
      }
      const Vector x = in_h(rng);
      if (ctx.g.norm2(x) < 1e-6) return std::nullopt;
      const Vector y = with_pairing(ctx.g, in_h(rng), x, w2);
      return std::array<MatrixElement, 3>{MatrixElement{x, y, z, w},
                                          MatrixElement{x, w, z, y},
                                          MatrixElement{x, w, y, z}};
    };

    out.push_back(
        {"matrix.sorted_layouts_o", kLayoutO, "",
         [&ctx, layout_sample, sc2](Sampler& rng) -> std::optional<Trial> {
           auto s = layout_sample(rng);
           if (!s) return std::nullopt;
           const double r = std::max(std::abs(o_functional(ctx.g, (*s)[0])),
                                     std::abs(o_functional(ctx.g, (*s)[2])));
           return Trial{r / sc2((*s)[0], (*s)[0]), {{"A1", slots_json((*s)[0])}}};
         },
         0});
    out.push_back(
        {"matrix.layout_pairing_transpose_equality", kLayout1, "",
         [&ctx, layout_sample, sc2](Sampler& rng) -> std::optional<Trial> {
           auto s = layout_sample(rng);
           if (!s) return std::nullopt;
           const MatrixElement& a2 = (*s)[1];
           const MatrixElement& a3 = (*s)[2];
           const double r = std::abs(lift_inner(ctx.g, a2, a3) -
                                     lift_inner(ctx.g, a2, transpose(a3)));
           return Trial{r / sc2(a2, a3), {{"A2", slots_json(a2)}, {"A3", slots_json(a3)}}};
         },
         0});
    const std::string layout_note =
        "holds when the complement pins Z = W (one-dimensional n); Z may differ from W in "
        "norm otherwise";
    out.push_back(
        {"matrix.layout_star_norm_equality", kLayout2, layout_note,
         [&ctx, layout_sample, sc2](Sampler& rng) -> std::optional<Trial> {
           auto s = layout_sample(rng);
           if (!s) return std::nullopt;
           const MatrixElement& a1 = (*s)[0];
           const MatrixElement& a3 = (*s)[2];
           const double r = std::abs(lift_inner(ctx.g, a1, star(a1)) -
                                     lift_inner(ctx.g, a3, star(a3)));
           return Trial{r / sc2(a1, a3), {{"A1", slots_json(a1)}, {"A3", slots_json(a3)}}};
         },
         0});
    out.push_back(
        {"matrix.layout_transpose_norm_equality", kLayout3, layout_note,
         [&ctx, layout_sample, sc2](Sampler& rng) -> std::optional<Trial> {
           auto s = layout_sample(rng);
           if (!s) return std::nullopt;
           const MatrixElement& a1 = (*s)[0];
           const MatrixElement& a3 = (*s)[2];
           const double r = std::abs(lift_inner(ctx.g, a1, transpose(a1)) -
                                     lift_inner(ctx.g, a3, transpose(a3)));
           return Trial{r / sc2(a1, a3), {{"A1", slots_json(a1)}, {"A3", slots_json(a3)}}};
         },
         0});
  } else {
    vacuous("matrix.c1_cross", kC1Cross, ctx.dec_absent);
    vacuous("matrix.c1_closure", kC1Closure, ctx.dec_absent);
    vacuous("matrix.c2_closure", kC2Closure, ctx.dec_absent);
    vacuous("matrix.c3_closure", kC3Closure, ctx.dec_absent);
    vacuous("matrix.c1_swapped_orthogonal", kC1SwappedOrth, ctx.dec_absent);
    vacuous("matrix.c1_mixed_bracket", kC1Mixed, ctx.dec_absent);
    vacuous("matrix.c1_duality_maps", kC1Dual, ctx.dec_absent);
    vacuous("matrix.c2_duality_maps", kC2Dual, ctx.dec_absent);
    vacuous("matrix.c3_duality_maps", kC3Dual, ctx.dec_absent);
    vacuous("matrix.sorted_layouts_o", kLayoutO, ctx.dec_absent);
    vacuous("matrix.layout_pairing_transpose_equality", kLayout1, ctx.dec_absent);
    vacuous("matrix.layout_star_norm_equality", kLayout2, ctx.dec_absent);
    vacuous("matrix.layout_transpose_norm_equality", kLayout3, ctx.dec_absent);
  }

  // Structural consistency of the lifted algebra against the slot-wise operators.
  auto conn_bar =
      std::make_shared<ConnectionCoefficients>(levi_civita(ctx.lifted, ctx.lifted_g));

  out.push_back(
      {"matrix.lift_jacobi", "the lifted bracket satisfies the Jacobi identity", "",
       [&ctx](Sampler&) -> std::optional<Trial> {
         return Trial{jacobi_defect(ctx.lifted), json::object()};
       },
       1});

  out.push_back(
      {"matrix.lift_bracket_slotwise",
       "the lifted structure constants reproduce the slot-wise bracket", "",
       [&ctx, relem, sc2](Sampler& rng) -> std::optional<Trial> {
         const MatrixElement a = relem(rng), b = relem(rng);
         const Vector d =
             flatten(lift_bracket(ctx.alg, a, b)) - ctx.lifted.bracket(flatten(a), flatten(b));
         return Trial{d.cwiseAbs().maxCoeff() / sc2(a, b),
                      {{"A", slots_json(a)}, {"B", slots_json(b)}}};
       },
       0});

  out.push_back(
      {"matrix.lift_connection_slotwise",
       "the slot-wise derivative equals the derivative of the lifted metric algebra", "",
       [&ctx, relem, sc2, conn_bar](Sampler& rng) -> std::optional<Trial> {
         const MatrixElement a = relem(rng), b = relem(rng);
         const Vector d = flatten(lift_connection(ctx.conn, a, b)) -
                          conn_bar->nabla(flatten(a), flatten(b));
         return Trial{d.cwiseAbs().maxCoeff() / sc2(a, b),
                      {{"A", slots_json(a)}, {"B", slots_json(b)}}};
       },
       0});

  out.push_back(
      {"matrix.lift_metric_block",
       "the lifted metric is the four-fold block copy of the base metric", "",
       [&ctx, relem, sc2](Sampler& rng) -> std::optional<Trial> {
         const MatrixElement a = relem(rng), b = relem(rng);
         const double r =
             std::abs(lift_inner(ctx.g, a, b) - ctx.lifted_g.pair(flatten(a), flatten(b)));
         return Trial{r / sc2(a, b), {{"A", slots_json(a)}, {"B", slots_json(b)}}};
       },
       0});
}

}  // namespace liemat
