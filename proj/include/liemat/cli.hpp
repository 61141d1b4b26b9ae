#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "liemat/fidelity.hpp"
#include "liemat/generators.hpp"
#include "liemat/io.hpp"

namespace liemat {

namespace detail {

inline void write_bundle(const AlgebraBundle& b, const std::string& out_path) {
  const std::string text = serialize(b);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw ValidationError("cannot open output file: " + out_path);
  f << text;
}

inline AlgebraBundle bundle_of(std::string name, MetricAlgebra ma) {
  return AlgebraBundle{std::move(name), std::move(ma.alg), std::move(ma.metric), {}, {}, {}};
}

}  // namespace detail

/// Command-line entry point. Exit 0 on success, 1 on data errors (bad files,
/// degenerate inputs, failing verification), 2 on usage errors.
inline int run_cli(int argc, const char* const* argv) {
  CLI::App app{"left-invariant metrics on Lie algebras: curvature, the 4n matrix lift, "
               "and the identity catalog"};
  app.require_subcommand(1);

  std::string check_path;
  CLI::App* check = app.add_subcommand("check", "validate a spec file and print basic facts");
  check->add_option("file", check_path, "algebra spec file")->required();

  std::string curv_path, curv_plane = "1,2";
  CLI::App* curv = app.add_subcommand("curvature", "sectional curvature of a basis plane");
  curv->add_option("file", curv_path, "algebra spec file")->required();
  curv->add_option("--plane", curv_plane, "basis plane i,j (1-based)");

  std::string lift_path, lift_out;
  CLI::App* lift = app.add_subcommand("lift", "emit the 4n matrix-lift algebra as a spec file");
  lift->add_option("file", lift_path, "algebra spec file")->required();
  lift->add_option("--out", lift_out, "output file (default stdout)");

  CLI::App* gen = app.add_subcommand("gen", "generate a built-in or random algebra");
  gen->require_subcommand(1);
  int gen_m = 1;
  std::string gen_out;
  CLI::App* gen_h = gen->add_subcommand("heisenberg", "Heisenberg algebra of dimension 2m+1");
  gen_h->add_option("--m", gen_m, "number of generator pairs")->check(CLI::PositiveNumber);
  gen_h->add_option("--out", gen_out, "output file (default stdout)");
  std::string gen_preset = "quaternion";
  CLI::App* gen_ht = gen->add_subcommand("h-type", "Heisenberg-type algebra from a preset");
  gen_ht->add_option("--preset", gen_preset, "preset name (quaternion)");
  gen_ht->add_option("--out", gen_out, "output file (default stdout)");
  int gen_p = 2, gen_q = 1;
  std::uint64_t gen_seed = 1;
  CLI::App* gen_r = gen->add_subcommand("random-2step", "random 2-step nilpotent algebra");
  gen_r->add_option("--p", gen_p, "generator count")->check(CLI::PositiveNumber);
  gen_r->add_option("--q", gen_q, "center dimension")->check(CLI::PositiveNumber);
  gen_r->add_option("--seed", gen_seed, "random seed");
  gen_r->add_option("--out", gen_out, "output file (default stdout)");

  std::string verify_path, verify_format = "text";
  std::vector<std::string> verify_suites;
  VerifyOptions vopt;
  bool strict = false;
  CLI::App* verify = app.add_subcommand("verify", "run the identity catalog");
  verify->add_option("file", verify_path, "algebra spec file")->required();
  verify->add_option("--suite", verify_suites,
                     "all, geometry, matrix, complex, nilpotent (repeatable)")
      ->check(CLI::IsMember({"all", "geometry", "matrix", "complex", "nilpotent"}));
  verify->add_option("--trials", vopt.trials, "trials per entry")->check(CLI::PositiveNumber);
  verify->add_option("--seed", vopt.seed, "sampler seed");
  verify->add_option("--tol", vopt.tol, "pass/fail tolerance");
  verify->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--strict", strict, "count VACUOUS entries as failures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  }

  try {
    if (check->parsed()) {
      const AlgebraBundle b = load_algebra(check_path);
      const LowerCentralSeries series = lower_central_series(b.alg);
      const std::string cls =
          series.nilpotent() ? std::to_string(*series.nilpotency_class) : "not nilpotent";
      std::printf("%s: dim %d, class %s, center rank %d, semisimple %s\n", b.name.c_str(),
                  static_cast<int>(b.alg.dim()), cls.c_str(),
                  static_cast<int>(center(b.alg).dim()),
                  is_semisimple(b.alg).ok ? "yes" : "no");
      return 0;
    }

    if (curv->parsed()) {
      const AlgebraBundle b = load_algebra(curv_path);
      int i = 0, j = 0;
      char extra = 0;
      if (std::sscanf(curv_plane.c_str(), "%d,%d%c", &i, &j, &extra) != 2 || i < 1 ||
          j < 1 || i > b.alg.dim() || j > b.alg.dim() || i == j) {
        std::cerr << "curvature: --plane wants two distinct 1-based indices i,j within "
                     "dimension "
                  << b.alg.dim() << "\n";
        return 2;
      }
      const ConnectionCoefficients conn = levi_civita(b.alg, b.metric);
      const double k = sectional(conn, b.alg, b.metric, Vector::Unit(b.alg.dim(), i - 1),
                                 Vector::Unit(b.alg.dim(), j - 1));
      std::printf("%.10g\n", k);
      return 0;
    }

    if (lift->parsed()) {
      const AlgebraBundle b = load_algebra(lift_path);
      const AlgebraBundle out{b.name + "-lift", lift_algebra(b.alg), lift_metric(b.metric),
                              {}, {}, {}};
      detail::write_bundle(out, lift_out);
      return 0;
    }

    if (gen->parsed()) {
      if (gen_h->parsed()) {
        detail::write_bundle(detail::bundle_of("heisenberg" + std::to_string(2 * gen_m + 1),
                                               gen_heisenberg(gen_m)),
                             gen_out);
      } else if (gen_ht->parsed()) {
        if (gen_preset != "quaternion") {
          std::cerr << "gen h-type: unknown preset '" << gen_preset << "'\n";
          return 2;
        }
        detail::write_bundle(detail::bundle_of("quaternion7", gen_quaternion_heisenberg()),
                             gen_out);
      } else {
        detail::write_bundle(
            detail::bundle_of("random-2step-p" + std::to_string(gen_p) + "-q" +
                                  std::to_string(gen_q) + "-s" + std::to_string(gen_seed),
                              gen_random_two_step(gen_p, gen_q, gen_seed)),
            gen_out);
      }
      return 0;
    }

    if (verify->parsed()) {
      const AlgebraBundle b = load_algebra(verify_path);
      if (!verify_suites.empty()) vopt.suites = verify_suites;
      const IdentityReport rep = run_fidelity(b, vopt);
      if (verify_format == "json")
        std::cout << rep.to_json_string();
      else
        std::cout << rep.to_text();
      const bool bad = rep.has_fail() || (strict && rep.has_vacuous());
      return bad ? 1 : 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace liemat
