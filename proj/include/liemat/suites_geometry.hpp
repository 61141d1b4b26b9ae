#pragma once

#include "liemat/harness.hpp"

namespace liemat {

/// Connection and curvature identities, the tangent/normal machinery of a
/// metric splitting, and the two displays whose literal form fails.
inline void register_geometry(std::vector<EntryDef>& out, const SuiteContext& ctx) {
  using harness::in_frame;
  using harness::vj;
  const Eigen::Index n = ctx.n;

  auto vacuous = [&out](std::string id, std::string anchor, std::string why) {
    out.push_back({std::move(id), std::move(anchor), std::move(why), nullptr, 0});
  };
  // t-th pair (i, j) with i < j below k, or nothing once exhausted
  auto pair_at = [](int t, Eigen::Index k) -> std::optional<std::pair<int, int>> {
    int idx = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (idx++ == t) return std::make_pair(i, j);
    return std::nullopt;
  };

  out.push_back(
      {"geometry.torsion_free", "nabla_X Y - nabla_Y X = [X,Y]", "",
       [&ctx](Sampler& rng) -> std::optional<Trial> {
         const Vector x = rng.vector(ctx.n), y = rng.vector(ctx.n);
         const Vector r = ctx.conn.nabla(x, y) - ctx.conn.nabla(y, x) - ctx.alg.bracket(x, y);
         const double scale = 1.0 + ctx.g.norm(x) * ctx.g.norm(y);
         return Trial{ctx.g.norm(r) / scale, {{"X", vj(x)}, {"Y", vj(y)}}};
       },
       0});

  out.push_back(
      {"geometry.metric_compatibility", "g(nabla_X Y, Z) + g(Y, nabla_X Z) = 0", "",
       [&ctx](Sampler& rng) -> std::optional<Trial> {
         const Vector x = rng.vector(ctx.n), y = rng.vector(ctx.n), z = rng.vector(ctx.n);
         const double r =
             ctx.g.pair(ctx.conn.nabla(x, y), z) + ctx.g.pair(y, ctx.conn.nabla(x, z));
         const double scale = 1.0 + ctx.g.norm(x) * ctx.g.norm(y) * ctx.g.norm(z);
         return Trial{std::abs(r) / scale, {{"X", vj(x)}, {"Y", vj(y)}, {"Z", vj(z)}}};
       },
       0});

  out.push_back(
      {"geometry.alternate_sign_torsion",
       "2 g(nabla_X Y, Z) = -g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y): torsion-freeness",
       "flipped first sign; the residual is the raw torsion norm, which equals 2 |[X,Y]| "
       "under this variant",
       [&ctx, pair_at, t = 0](Sampler& rng) mutable -> std::optional<Trial> {
         Vector x, y;
         if (auto p = pair_at(t++, ctx.n)) {
           x = Vector::Unit(ctx.n, p->first);
           y = Vector::Unit(ctx.n, p->second);
         } else {
           x = rng.vector(ctx.n);
           y = rng.vector(ctx.n);
         }
         const Vector r =
             ctx.conn_alt.nabla(x, y) - ctx.conn_alt.nabla(y, x) - ctx.alg.bracket(x, y);
         return Trial{ctx.g.norm(r), {{"X", vj(x)}, {"Y", vj(y)}}};
       },
       0});

  out.push_back(
      {"geometry.curvature_antisymmetry", "R(X,Y)Z = -R(Y,X)Z", "",
       [&ctx](Sampler& rng) -> std::optional<Trial> {
         const Vector x = rng.vector(ctx.n), y = rng.vector(ctx.n), z = rng.vector(ctx.n);
         const Vector r = curvature(ctx.conn, ctx.alg, x, y, z) +
                          curvature(ctx.conn, ctx.alg, y, x, z);
         const double scale = 1.0 + ctx.g.norm(x) * ctx.g.norm(y) * ctx.g.norm(z);
         return Trial{ctx.g.norm(r) / scale, {{"X", vj(x)}, {"Y", vj(y)}, {"Z", vj(z)}}};
       },
       0});

  out.push_back(
      {"geometry.curvature_pairing_skew", "R(X,Y;Z,W) = -R(X,Y;W,Z)", "",
       [&ctx](Sampler& rng) -> std::optional<Trial> {
         const Vector x = rng.vector(ctx.n), y = rng.vector(ctx.n), z = rng.vector(ctx.n),
                      w = rng.vector(ctx.n);
         const double r = curvature_4(ctx.conn, ctx.alg, ctx.g, x, y, z, w) +
                          curvature_4(ctx.conn, ctx.alg, ctx.g, x, y, w, z);
         const double scale =
             1.0 + ctx.g.norm(x) * ctx.g.norm(y) * ctx.g.norm(z) * ctx.g.norm(w);
         return Trial{std::abs(r) / scale,
                      {{"X", vj(x)}, {"Y", vj(y)}, {"Z", vj(z)}, {"W", vj(w)}}};
       },
       0});

  out.push_back(
      {"geometry.first_bianchi", "R(X,Y)Z + R(Y,Z)X + R(Z,X)Y = 0", "",
       [&ctx](Sampler& rng) -> std::optional<Trial> {
         const Vector x = rng.vector(ctx.n), y = rng.vector(ctx.n), z = rng.vector(ctx.n);
         const Vector r = curvature(ctx.conn, ctx.alg, x, y, z) +
                          curvature(ctx.conn, ctx.alg, y, z, x) +
                          curvature(ctx.conn, ctx.alg, z, x, y);
         const double scale = 1.0 + ctx.g.norm(x) * ctx.g.norm(y) * ctx.g.norm(z);
         return Trial{ctx.g.norm(r) / scale, {{"X", vj(x)}, {"Y", vj(y)}, {"Z", vj(z)}}};
       },
       0});

  out.push_back(
      {"geometry.curvature_pair_symmetry", "R(X,Y;Z,W) = R(Z,W;X,Y)", "",
       [&ctx](Sampler& rng) -> std::optional<Trial> {
         const Vector x = rng.vector(ctx.n), y = rng.vector(ctx.n), z = rng.vector(ctx.n),
                      w = rng.vector(ctx.n);
         const double r = curvature_4(ctx.conn, ctx.alg, ctx.g, x, y, z, w) -
                          curvature_4(ctx.conn, ctx.alg, ctx.g, z, w, x, y);
         const double scale =
             1.0 + ctx.g.norm(x) * ctx.g.norm(y) * ctx.g.norm(z) * ctx.g.norm(w);
         return Trial{std::abs(r) / scale,
                      {{"X", vj(x)}, {"Y", vj(y)}, {"Z", vj(z)}, {"W", vj(w)}}};
       },
       0});

  if (n >= 2) {
    out.push_back(
        {"geometry.sectional_invariance",
         "K(span{X,Y}) is unchanged under a change of plane basis", "",
         [&ctx](Sampler& rng) -> std::optional<Trial> {
           const Vector x = rng.vector(ctx.n), y = rng.vector(ctx.n);
           const double a = rng.uniform(), b = rng.uniform(), c = rng.uniform(),
                        d = rng.uniform();
           if (std::abs(a * d - b * c) < 0.1) return std::nullopt;
           double k1 = 0.0, k2 = 0.0;
           try {
             k1 = sectional(ctx.conn, ctx.alg, ctx.g, x, y);
             k2 = sectional(ctx.conn, ctx.alg, ctx.g, a * x + b * y, c * x + d * y);
           } catch (const ValidationError&) {
             return std::nullopt;
           }
           return Trial{std::abs(k1 - k2) / (1.0 + std::abs(k1)),
                        {{"X", vj(x)}, {"Y", vj(y)}, {"basis_change", {a, b, c, d}}}};
         },
         0});
  } else {
    vacuous("geometry.sectional_invariance",
            "K(span{X,Y}) is unchanged under a change of plane basis",
            "needs dimension at least 2");
  }

  // Entries below need a proper tangent subalgebra m.
  const char* kSplitAnchor = "nabla_X Y = tan(nabla_X Y) + h(X,Y);  nabla_X xi = -A_xi X + D_X xi";
  const char* kDualityAnchor = "g(A_xi X, Y) = g(h(X,Y), xi)";
  const char* kSymAnchor = "h(X,Y) = h(Y,X) on a bracket-closed tangent space";
  const char* kCovAnchor = "(nabla_X h)(Y,Z) = (nabla_X h)(Z,Y)";
  const char* kFrameAnchor = "mean curvature is independent of the orthonormal tangent frame";
  const char* kDivisorAnchor =
      "trace of h divided by dim m versus divided by dim g";
  const char* kGaussAnchor =
      "R~(X,Y;Z,W) = R(X,Y;Z,W) + g(h(X,W),h(Y,Z)) - g(h(X,Z),h(Y,W))";
  const char* kGaussSwapAnchor =
      "R~(X,Y;Z,W) = R(X,Y;Z,W) + g(h(X,Z),h(Y,W)) - g(h(X,W),h(Y,Z))";

  if (ctx.msplit) {
    const SubmanifoldSplit& sp = *ctx.msplit;
    const bool closed = ctx.m_closed;

    out.push_back(
        {"geometry.tangential_normal_split", kSplitAnchor, "",
         [&ctx, &sp](Sampler& rng) -> std::optional<Trial> {
           const Vector x = in_frame(rng, sp.tangent_frame());
           const Vector y = in_frame(rng, sp.tangent_frame());
           const Vector xi = in_frame(rng, sp.normal_frame());
           const Vector nxy = ctx.conn.nabla(x, y);
           const Vector r1 = nxy - (sp.tangential(nxy) + second_fundamental_form(ctx.conn, sp, x, y));
           const Vector nxxi = ctx.conn.nabla(x, xi);
           const Vector r2 =
               nxxi - (-weingarten(ctx.conn, ctx.g, sp, xi, x).value +
                       normal_connection(ctx.conn, sp, x, xi));
           const double scale = 1.0 + ctx.g.norm(x) * (ctx.g.norm(y) + ctx.g.norm(xi));
           return Trial{std::max(ctx.g.norm(r1), ctx.g.norm(r2)) / scale,
                        {{"X", vj(x)}, {"Y", vj(y)}, {"xi", vj(xi)}}};
         },
         0});

    out.push_back(
        {"geometry.shape_operator_duality", kDualityAnchor, "",
         [&ctx, &sp](Sampler& rng) -> std::optional<Trial> {
           if (sp.normal_frame().cols() == 0) return std::nullopt;
           const Vector x = in_frame(rng, sp.tangent_frame());
           const Vector xi = in_frame(rng, sp.normal_frame());
           const double r = weingarten(ctx.conn, ctx.g, sp, xi, x).duality_residual;
           const double scale = 1.0 + ctx.g.norm(x) * ctx.g.norm(xi);
           return Trial{r / scale, {{"X", vj(x)}, {"xi", vj(xi)}}};
         },
         0});

    out.push_back(
        {"geometry.second_form_symmetric", kSymAnchor,
         closed ? "" : "the tangent space fails to close under the bracket, so symmetry "
                       "is not expected",
         [&ctx, &sp](Sampler& rng) -> std::optional<Trial> {
           const Vector x = in_frame(rng, sp.tangent_frame());
           const Vector y = in_frame(rng, sp.tangent_frame());
           const Vector r = second_fundamental_form(ctx.conn, sp, x, y) -
                            second_fundamental_form(ctx.conn, sp, y, x);
           const double scale = 1.0 + ctx.g.norm(x) * ctx.g.norm(y);
           return Trial{ctx.g.norm(r) / scale, {{"X", vj(x)}, {"Y", vj(y)}}};
         },
         0});

    out.push_back(
        {"geometry.covariant_form_symmetry", kCovAnchor,
         closed ? "" : "inherits the asymmetry of h on a non-closed tangent space",
         [&ctx, &sp](Sampler& rng) -> std::optional<Trial> {
           const Vector x = in_frame(rng, sp.tangent_frame());
           const Vector y = in_frame(rng, sp.tangent_frame());
           const Vector z = in_frame(rng, sp.tangent_frame());
           const Vector r = covariant_derivative_h(ctx.conn, sp, x, y, z) -
                            covariant_derivative_h(ctx.conn, sp, x, z, y);
           const double scale = 1.0 + ctx.g.norm(x) * ctx.g.norm(y) * ctx.g.norm(z);
           return Trial{ctx.g.norm(r) / scale, {{"X", vj(x)}, {"Y", vj(y)}, {"Z", vj(z)}}};
         },
         0});

    out.push_back(
        {"geometry.mean_curvature_frame_invariance", kFrameAnchor, "",
         [&ctx](Sampler& rng) -> std::optional<Trial> {
           const Matrix& basis = ctx.m_basis->matrix();
           const Eigen::Index k = basis.cols();
           const Matrix q = rng.orthogonal(k);
           SubmanifoldSplit rotated(ctx.g, SubspaceBasis(Matrix(basis * q)));
           const Vector h1 = mean_curvature(ctx.conn, *ctx.msplit);
           const Vector h2 = mean_curvature(ctx.conn, rotated);
           return Trial{ctx.g.norm(h1 - h2) / (1.0 + ctx.g.norm(h1)),
                        {{"rotation", harness::vj(Eigen::Map<const Vector>(q.data(), q.size()))}}};
         },
         0});

    out.push_back(
        {"geometry.mean_curvature_divisor", kDivisorAnchor,
         "the conventions agree exactly when the split is minimal; the status records this "
         "algebra's split",
         [&ctx](Sampler&) -> std::optional<Trial> {
           const Vector hm = mean_curvature(ctx.conn, *ctx.msplit, false);
           const Vector hg = mean_curvature(ctx.conn, *ctx.msplit, true);
           return Trial{ctx.g.norm(hm - hg), {{"per_tangent_dim", vj(hm)}, {"per_ambient_dim", vj(hg)}}};
         },
         1});

    if (ctx.m_basis->dim() >= 2 && closed) {
      out.push_back(
          {"geometry.gauss_equation", kGaussAnchor, "",
           [&ctx, &sp](Sampler& rng) -> std::optional<Trial> {
             const Vector x = in_frame(rng, sp.tangent_frame());
             const Vector y = in_frame(rng, sp.tangent_frame());
             const Vector z = in_frame(rng, sp.tangent_frame());
             const Vector w = in_frame(rng, sp.tangent_frame());
             double r = 0.0;
             try {
               r = gauss_residual(ctx.conn, ctx.alg, ctx.g, sp, x, y, z, w);
             } catch (const ValidationError&) {
               return std::nullopt;
             }
             const double scale =
                 1.0 + ctx.g.norm(x) * ctx.g.norm(y) * ctx.g.norm(z) * ctx.g.norm(w);
             return Trial{r / scale,
                          {{"X", vj(x)}, {"Y", vj(y)}, {"Z", vj(z)}, {"W", vj(w)}}};
           },
           0});

      out.push_back(
          {"geometry.gauss_swapped_terms", kGaussSwapAnchor,
           "the h-terms with exchanged roles; fails whenever h(X,Z) and h(X,W) pair "
           "differently",
           [&ctx, &sp, t = 0](Sampler& rng) mutable -> std::optional<Trial> {
             Vector x, y, z, w;
             if (t++ == 0 && sp.tangent_frame().cols() >= 2) {
               x = sp.tangent_frame().col(0);
               y = sp.tangent_frame().col(1);
               z = y;
               w = x;
             } else {
               x = in_frame(rng, sp.tangent_frame());
               y = in_frame(rng, sp.tangent_frame());
               z = in_frame(rng, sp.tangent_frame());
               w = in_frame(rng, sp.tangent_frame());
             }
             double r = 0.0;
             try {
               r = gauss_residual(ctx.conn, ctx.alg, ctx.g, sp, x, y, z, w, true);
             } catch (const ValidationError&) {
               return std::nullopt;
             }
             const double scale =
                 1.0 + ctx.g.norm(x) * ctx.g.norm(y) * ctx.g.norm(z) * ctx.g.norm(w);
             return Trial{r / scale,
                          {{"X", vj(x)}, {"Y", vj(y)}, {"Z", vj(z)}, {"W", vj(w)}}};
           },
           0});
    } else {
      const char* why = closed ? "needs a tangent subalgebra of dimension at least 2"
                               : "needs a bracket-closed tangent subalgebra";
      vacuous("geometry.gauss_equation", kGaussAnchor, why);
      vacuous("geometry.gauss_swapped_terms", kGaussSwapAnchor, why);
    }
  } else {
    vacuous("geometry.tangential_normal_split", kSplitAnchor, ctx.m_absent);
    vacuous("geometry.shape_operator_duality", kDualityAnchor, ctx.m_absent);
    vacuous("geometry.second_form_symmetric", kSymAnchor, ctx.m_absent);
    vacuous("geometry.covariant_form_symmetry", kCovAnchor, ctx.m_absent);
    vacuous("geometry.mean_curvature_frame_invariance", kFrameAnchor, ctx.m_absent);
    vacuous("geometry.mean_curvature_divisor", kDivisorAnchor, ctx.m_absent);
    vacuous("geometry.gauss_equation", kGaussAnchor, ctx.m_absent);
    vacuous("geometry.gauss_swapped_terms", kGaussSwapAnchor, ctx.m_absent);
  }

  const char* kSymLitAnchor = "nabla_X Y + nabla_Y X = 2 h(X,Y) for X, Y orthogonal to the center";
  const char* kSymDiagAnchor = "nabla_X X = h(X,X) for X orthogonal to the center";
  if (ctx.zperp_split) {
    const SubmanifoldSplit& zp = *ctx.zperp_split;
    out.push_back(
        {"geometry.symmetric_part_literal", kSymLitAnchor,
         "the display forces h to absorb the antisymmetric part of the derivative; it holds "
         "only on the diagonal X = Y",
         [&ctx, &zp, pair_at, t = 0](Sampler& rng) mutable -> std::optional<Trial> {
           Vector x, y;
           bool structured = false;
           if (auto p = pair_at(t++, ctx.n)) {
             x = Vector::Unit(ctx.n, p->first);
             y = Vector::Unit(ctx.n, p->second);
             structured = zp.is_tangent(x) && zp.is_tangent(y);
           }
           if (!structured) {
             x = in_frame(rng, zp.tangent_frame());
             y = in_frame(rng, zp.tangent_frame());
           }
           const double scale = ctx.g.norm(x) * ctx.g.norm(y);
           if (scale < 1e-8) return std::nullopt;
           return Trial{symmetric_part_residual(ctx.conn, ctx.g, zp, x, y) / scale,
                        {{"X", vj(x)}, {"Y", vj(y)}}};
         },
         0});
    out.push_back(
        {"geometry.symmetric_part_diagonal", kSymDiagAnchor, "",
         [&ctx, &zp](Sampler& rng) -> std::optional<Trial> {
           const Vector x = in_frame(rng, zp.tangent_frame());
           const double r = 0.5 * symmetric_part_residual(ctx.conn, ctx.g, zp, x, x);
           return Trial{r / (1.0 + ctx.g.norm2(x)), {{"X", vj(x)}}};
         },
         0});
  } else {
    const char* why = "needs a nontrivial proper center";
    vacuous("geometry.symmetric_part_literal", kSymLitAnchor, why);
    vacuous("geometry.symmetric_part_diagonal", kSymDiagAnchor, why);
  }
}

}  // namespace liemat
