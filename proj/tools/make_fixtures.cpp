// Regenerates the bundled algebra files under data/.  Output is canonical
// (serialize() drops zero coefficients), so reruns are byte-stable.
#include "liemat/generators.hpp"
#include "liemat/io.hpp"

#include <cstdio>
#include <fstream>
#include <string>

namespace {

void write_bundle(const std::string& dir, const std::string& file, const liemat::AlgebraBundle& b) {
  const std::string path = dir + "/" + file;
  std::ofstream out(path);
  if (!out) {
    std::fprintf(stderr, "cannot open %s for writing\n", path.c_str());
    std::exit(1);
  }
  out << liemat::serialize(b);
  std::printf("wrote %s\n", path.c_str());
}

liemat::AlgebraBundle bundle_of(std::string name, liemat::MetricAlgebra ma) {
  return liemat::AlgebraBundle{std::move(name), std::move(ma.alg), std::move(ma.metric),
                               {}, {}, {}};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <output-dir>\n", argv[0]);
    return 2;
  }
  const std::string dir = argv[1];

  {
    liemat::AlgebraBundle b = bundle_of("heisenberg3", liemat::gen_heisenberg(1));
    liemat::Matrix plane(3, 2);
    plane.setZero();
    plane(0, 0) = 1.0;
    plane(2, 1) = 1.0;
    b.subalgebras["h"] = plane;
    b.subalgebras["m"] = plane;
    write_bundle(dir, "heisenberg3.json", b);
  }

  {
    liemat::AlgebraBundle b = bundle_of("abelian4", liemat::gen_abelian(4));
    liemat::Matrix J(4, 4);
    J.setZero();
    J(1, 0) = 1.0;
    J(0, 1) = -1.0;
    J(3, 2) = 1.0;
    J(2, 3) = -1.0;
    b.complex_structure = J;
    write_bundle(dir, "abelian4.json", b);
  }

  {
    const liemat::MetricAlgebra h3 = liemat::gen_heisenberg(1);
    liemat::Matrix gram = liemat::Matrix::Identity(3, 3);
    gram(2, 2) = 4.0;
    const liemat::AlgebraBundle b{"h3-scaled", h3.alg, liemat::InnerProduct(gram), {}, {}, {}};
    write_bundle(dir, "h3_scaled.json", b);
  }

  write_bundle(dir, "quaternion7.json",
               bundle_of("quaternion7", liemat::gen_quaternion_heisenberg()));
  return 0;
}
