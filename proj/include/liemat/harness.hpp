#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liemat/complexstruct.hpp"
#include "liemat/geometry.hpp"
#include "liemat/io.hpp"
#include "liemat/lift.hpp"
#include "liemat/nilpotent.hpp"
#include "liemat/report.hpp"
#include "liemat/rng.hpp"

namespace liemat {

struct VerifyOptions {
  std::uint64_t seed = 42;
  int trials = 1000;
  double tol = 1e-9;
  std::vector<std::string> suites{"geometry", "matrix", "complex", "nilpotent"};
};

/// One instantiated check: a nonnegative defect plus the data that produced
/// it, in replayable coordinates.
struct Trial {
  double residual = 0.0;
  json witness;
};

/// A catalog identity. `run` draws one sample and measures the defect, or
/// returns nothing when the hypothesis cannot be instantiated from the draw.
/// A null `run` marks an entry whose prerequisites are absent from the
/// algebra altogether; it reports VACUOUS with `note` as the reason.
struct EntryDef {
  std::string id;
  std::string anchor;
  std::string note;
  std::function<std::optional<Trial>(Sampler&)> run;
  int trials_override = 0;
};

/// Failed instantiation budget before an entry is declared VACUOUS.
constexpr int kVacuousAttempts = 10000;

/// Runs one entry deterministically: the sampler is seeded from the global
/// seed and the entry id, so entries are independent of catalog order.
inline EntryResult run_entry(const EntryDef& def, const VerifyOptions& opt) {
  EntryResult r;
  r.id = def.id;
  r.anchor = def.anchor;
  r.note = def.note;
  if (!def.run) {
    r.status = Status::Vacuous;
    return r;
  }
  Sampler rng(opt.seed, def.id);
  const int want = def.trials_override > 0 ? def.trials_override : opt.trials;
  int done = 0;
  double worst = -1.0;
  json worst_witness;
  for (int attempt = 0; done < want && attempt < kVacuousAttempts + want; ++attempt) {
    std::optional<Trial> t = def.run(rng);
    if (!t) continue;
    ++done;
    if (t->residual > worst) {
      worst = t->residual;
      worst_witness = std::move(t->witness);
    }
  }
  r.trials = done;
  if (done == 0) {
    r.status = Status::Vacuous;
    if (r.note.empty()) r.note = "hypothesis could not be instantiated";
    return r;
  }
  r.max_residual = worst;
  if (worst <= opt.tol) {
    r.status = Status::Pass;
  } else {
    r.status = Status::Fail;
    r.counterexample = std::move(worst_witness);
  }
  return r;
}

namespace harness {

inline json vj(const Vector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

inline json slots_json(const MatrixElement& a) {
  json j;
  j["x11"] = vj(a.x11);
  j["x12"] = vj(a.x12);
  j["x21"] = vj(a.x21);
  j["x22"] = vj(a.x22);
  return j;
}

/// Random coordinates over the columns of a (frame) matrix.
inline Vector in_frame(Sampler& rng, const Matrix& frame) {
  if (frame.cols() == 0) return Vector::Zero(frame.rows());
  return frame * rng.vector(frame.cols());
}

/// Moves v along w until g(v, w) hits `target`; w must have positive norm.
/// Both v and the result stay inside any subspace containing v and w.
inline Vector with_pairing(const InnerProduct& g, const Vector& v, const Vector& w,
                           double target) {
  const double ww = g.norm2(w);
  return v + ((target - g.pair(v, w)) / ww) * w;
}

/// v minus its g-projection onto w (one-dimensional orthogonalization).
inline Vector orthogonal_to(const InnerProduct& g, const Vector& v, const Vector& w) {
  return with_pairing(g, v, w, 0.0);
}

}  // namespace harness

/// Everything the suites share for one algebra: base structures plus the
/// optional derived ones, with notes explaining absences.
struct SuiteContext {
  explicit SuiteContext(const AlgebraBundle& b)
      : bundle(b),
        alg(b.alg),
        g(b.metric),
        n(b.alg.dim()),
        conn(levi_civita(alg, g)),
        conn_alt(levi_civita(alg, g, KoszulSign::alternate)),
        split(center_split(alg, g)),
        lifted(lift_algebra(alg)),
        lifted_g(lift_metric(g)) {}

  const AlgebraBundle& bundle;
  const LieAlgebra& alg;
  const InnerProduct& g;
  Eigen::Index n;

  ConnectionCoefficients conn;
  ConnectionCoefficients conn_alt;

  bool two_step = false;
  bool h_type = false;
  CenterSplit split;
  std::optional<CentralJMap> jmap;

  std::optional<AlmostComplexStructure> ac;
  bool ac_derived = false;
  std::string ac_absent;

  std::optional<AlmostContactStructure> contact;
  bool contact_derived = false;
  std::string contact_absent;

  std::optional<SubspaceBasis> m_basis;
  std::optional<SubmanifoldSplit> msplit;
  bool m_closed = false;
  std::string m_absent;

  std::optional<SubmanifoldSplit> zperp_split;

  std::optional<TypeDecomposition> dec;
  bool dec_n_closed = false;
  std::string dec_absent;

  LieAlgebra lifted;
  InnerProduct lifted_g;
};

inline bool bracket_closed(const LieAlgebra& alg, const SubspaceBasis& s,
                           double tol = 1e-9) {
  for (Eigen::Index i = 0; i < s.dim(); ++i)
    for (Eigen::Index j = i + 1; j < s.dim(); ++j)
      if (s.containment_residual(alg.bracket(s.vec(i), s.vec(j))) > tol) return false;
  return true;
}

inline SuiteContext build_context(const AlgebraBundle& bundle) {
  SuiteContext ctx(bundle);
  const Eigen::Index n = ctx.n;
  ctx.two_step = is_two_step(ctx.alg);
  const Eigen::Index zdim = ctx.split.z.dim();

  if (ctx.two_step && zdim > 0 && zdim < n) {
    ctx.jmap.emplace(ctx.alg, ctx.g, ctx.split);
    ctx.h_type = is_h_type(ctx.alg, ctx.g).ok;
  }

  if (bundle.complex_structure) {
    ctx.ac = AlmostComplexStructure{*bundle.complex_structure};
  } else if (n % 2 == 0 && n > 0) {
    ctx.ac = canonical_complex_structure(ctx.g);
    ctx.ac_derived = true;
  } else {
    ctx.ac_absent = "odd dimension admits no complex structure";
  }

  if (bundle.contact) {
    ctx.contact = *bundle.contact;
  } else if (ctx.two_step && zdim == 1 && n >= 3) {
    ctx.contact = canonical_contact_structure(ctx.alg, ctx.g);
    ctx.contact_derived = true;
  } else {
    ctx.contact_absent = "no contact structure given and none derivable";
  }

  auto sub_it = bundle.subalgebras.find("m");
  if (sub_it != bundle.subalgebras.end()) {
    ctx.m_basis = SubspaceBasis::span_of(sub_it->second);
  } else if (ctx.two_step && zdim > 0 && zdim < n) {
    Matrix m(n, zdim + 1);
    m.col(0) = ctx.split.zperp_frame.col(0);
    m.rightCols(zdim) = ctx.split.z_frame;
    ctx.m_basis = SubspaceBasis::span_of(m);
  } else if (zdim == n && n >= 2) {
    // fully abelian: any coordinate subspace is a subalgebra
    ctx.m_basis = SubspaceBasis(Matrix(Matrix::Identity(n, n).leftCols(n / 2 + n % 2)));
  } else if (zdim >= 2 && zdim < n) {
    ctx.m_basis = ctx.split.z;
  } else {
    ctx.m_absent = "no tangent subalgebra given and none derivable";
  }
  if (ctx.m_basis && ctx.m_basis->dim() > 0 && ctx.m_basis->dim() < n) {
    ctx.m_closed = bracket_closed(ctx.alg, *ctx.m_basis);
    ctx.msplit.emplace(ctx.g, *ctx.m_basis);
  } else if (ctx.m_absent.empty()) {
    ctx.m_basis.reset();
    ctx.m_absent = "tangent subalgebra must be proper and nontrivial";
  }

  if (zdim > 0 && zdim < n) ctx.zperp_split.emplace(ctx.g, ctx.split.z_perp);

  auto h_it = bundle.subalgebras.find("h");
  try {
    if (h_it != bundle.subalgebras.end()) {
      ctx.dec = type_decomposition(ctx.alg, ctx.g, SubspaceBasis::span_of(h_it->second));
    } else if (zdim > 0 && zdim < n) {
      ctx.dec = type_decomposition(ctx.alg, ctx.g, ctx.split.z);
    } else if (zdim == n && n >= 2) {
      ctx.dec = type_decomposition(ctx.alg, ctx.g,
                                   SubspaceBasis(Matrix(Matrix::Identity(n, n).leftCols(n / 2))));
    } else {
      ctx.dec_absent = "no splitting subalgebra given and none derivable";
    }
  } catch (const Error& e) {
    ctx.dec_absent = e.what();
  }
  if (ctx.dec) ctx.dec_n_closed = bracket_closed(ctx.alg, ctx.dec->n);

  return ctx;
}

}  // namespace liemat
