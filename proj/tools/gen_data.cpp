// Writes the golden tables and the sample input documents under a data directory.
#include <filesystem>
#include <iostream>

#include "lieyb/catalog.hpp"
#include "lieyb/io.hpp"
#include "lieyb/verify.hpp"

using namespace lieyb;
namespace fs = std::filesystem;

namespace {

void put(const fs::path& p, const json& j) {
  write_text_file(p.string(), canonical_dump(j));
  std::cout << p.string() << "\n";
}

SpecDocument oscillator_doc(const std::vector<Scalar>& lambda) {
  const OscillatorAlgebra g = build_oscillator(lambda);
  SpecDocument d;
  d.algebra = AlgebraInput{g.algebra, g};
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: lieyb-gen-data <data-dir>\n";
    return 2;
  }
  const fs::path root(argv[1]);
  fs::create_directories(root / "golden");
  fs::create_directories(root / "specs");

  for (const GoldenCase& c : golden_cases()) {
    put(root / "golden" / c.file, golden_to_json(c));
    put(root / "specs" / c.file, document_to_json(c.input));
  }

  using O = OscillatorAlgebra;
  {
    SpecDocument d = oscillator_doc({1, 2});
    put(root / "specs" / "oscillator_1_2.json", document_to_json(d));
  }
  {
    SpecDocument d = oscillator_doc({1});
    d.bivector = t_bivector(*d.algebra.oscillator, 1);
    put(root / "specs" / "g1_t1.json", document_to_json(d));
    d.bivector = Bivector::basis(4, O::em1, O::e(1));
    put(root / "specs" / "g1_em1_e1.json", document_to_json(d));
    d.bivector = Bivector(4);
    d.form = FormInput{true, {}};
    put(root / "specs" / "g1_zero.json", document_to_json(d));
  }
  {
    // bialgebra on G_(1,2): r = t1 - t2 with a = (1, -1)
    SpecDocument d = oscillator_doc({1, 2});
    const OscillatorAlgebra& g = *d.algebra.oscillator;
    Vector u0(g.dim());
    u0[O::e(2)] = Scalar(1, 2);
    d.params = BialgebraParams{t_bivector(g, 1) - t_bivector(g, 2), u0, {Scalar(1), Scalar(-1)}};
    put(root / "specs" / "g12_bialgebra.json", document_to_json(d));
  }
  {
    SpecDocument d;
    d.algebra = AlgebraInput{sl2_algebra(), std::nullopt};
    d.bivector = Bivector(3);
    d.form = FormInput{false, sl2_trace_form()};
    put(root / "specs" / "sl2_zero.json", document_to_json(d));
  }
  return 0;
}
