#pragma once

#include <cstdio>

#include "liemat/harness.hpp"
#include "liemat/suites_complex.hpp"
#include "liemat/suites_geometry.hpp"
#include "liemat/suites_matrix.hpp"
#include "liemat/suites_nilpotent.hpp"

namespace liemat {

inline bool suite_requested(const VerifyOptions& opt, const std::string& name) {
  for (const auto& s : opt.suites)
    if (s == name || s == "all") return true;
  return false;
}

/// Runs the identity catalog on one algebra. Deterministic in (algebra,
/// seed, trials, tol); entries appear in catalog order regardless of which
/// suites were requested.
inline IdentityReport run_fidelity(const AlgebraBundle& bundle, const VerifyOptions& opt) {
  const SuiteContext ctx = build_context(bundle);

  IdentityReport rep;
  rep.algebra = bundle.name;
  rep.seed = opt.seed;
  rep.trials = opt.trials;
  rep.tolerance = opt.tol;

  std::vector<EntryDef> defs;
  if (suite_requested(opt, "geometry")) {
    rep.suites.push_back("geometry");
    register_geometry(defs, ctx);
  }
  if (suite_requested(opt, "matrix")) {
    rep.suites.push_back("matrix");
    register_matrix(defs, ctx);
  }
  if (suite_requested(opt, "complex")) {
    rep.suites.push_back("complex");
    register_complex(defs, ctx);
  }
  if (suite_requested(opt, "nilpotent")) {
    rep.suites.push_back("nilpotent");
    register_nilpotent(defs, ctx);
  }

  rep.entries.reserve(defs.size());
  for (const auto& d : defs) rep.entries.push_back(run_entry(d, opt));

  if (ctx.ac_derived && suite_requested(opt, "complex"))
    rep.remarks.push_back(
        "complex structure: none supplied; a canonical one was derived from a "
        "g-orthonormal frame");
  if (ctx.contact_derived && suite_requested(opt, "complex"))
    rep.remarks.push_back(
        "contact structure: none supplied; one was derived from the one-dimensional center");

  // Slant angles are reported as a sampled distribution: constancy over the
  // tangent space is not assumed, only matched-sample equality is asserted
  // (see complex.slant_matched_lift).
  if (ctx.ac && ctx.msplit && suite_requested(opt, "complex")) {
    Sampler rng(opt.seed, "slant-statistics");
    double lo = 1.0, hi = 0.0, sum = 0.0;
    int kept = 0;
    for (int t = 0; t < 200; ++t) {
      const Vector x = harness::in_frame(rng, ctx.m_basis->matrix());
      if (ctx.g.norm(x) < 1e-8) continue;
      const Vector jx = ctx.ac->apply(x);
      const double c = ctx.g.norm(ctx.msplit->tangential(jx)) / ctx.g.norm(jx);
      lo = std::min(lo, c);
      hi = std::max(hi, c);
      sum += c;
      ++kept;
    }
    if (kept > 0) {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "slant cosine over %d tangent samples: min %.6g, max %.6g, mean %.6g",
                    kept, lo, hi, sum / kept);
      rep.remarks.emplace_back(buf);
    }
  }

  if (suite_requested(opt, "geometry"))
    rep.remarks.push_back(
        "omitted: the stated normalizer condition is hypothesis-free (its premise holds "
        "for every element), so it admits no check and has no catalog entry");

  return rep;
}

}  // namespace liemat
