#ifndef LIEYB_IO_HPP
#define LIEYB_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lieyb/bialgebra.hpp"
#include "lieyb/lie_algebra.hpp"
#include "lieyb/oscillator.hpp"

namespace lieyb {

using json = nlohmann::json;

/// Scalars are written as "p/q" (or "p" when q = 1). Integers are accepted on input.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j, std::size_t dim);

/// {dim, labels, brackets: [{i, j, coeffs}]} with i < j and nonzero brackets only.
json algebra_to_json(const LieAlgebra& g);
json constants_to_json(const StructureConstants& c, const std::vector<std::string>& labels);
/// Throws ParseError, or JacobiViolation for a bracket that is not a Lie bracket.
LieAlgebra algebra_from_json(const json& j);

/// {entries: [{i, j, value}]} with i < j and nonzero values only.
json bivector_to_json(const Bivector& r);
Bivector bivector_from_json(const json& j, std::size_t dim);

json cocycle_to_json(const Cocycle& xi);
Cocycle cocycle_from_json(const json& j, std::size_t dim);

/// {entries: [{i, j, value}]} with i <= j.
json form_to_json(const Matrix& k);
Matrix form_from_json(const json& j, std::size_t dim);

/// An algebra given either in full or by the oscillator shorthand
/// {"oscillator": {"lambda": [...]}}; the shorthand is kept for output.
struct AlgebraInput {
  LieAlgebra algebra;
  std::optional<OscillatorAlgebra> oscillator;
};
json algebra_input_to_json(const AlgebraInput& a);
AlgebraInput algebra_input_from_json(const json& j);

/// "form" is either an entries object or the string "k_lambda".
struct FormInput {
  bool k_lambda = false;
  Matrix matrix;
};

/// Top-level input document:
/// {algebra, bivector?, cocycle?, form?, params?: {r, u0, a}}
struct SpecDocument {
  AlgebraInput algebra;
  std::optional<Bivector> bivector;
  std::optional<Cocycle> cocycle;
  std::optional<FormInput> form;
  std::optional<BialgebraParams> params;
};
json document_to_json(const SpecDocument& d);
SpecDocument document_from_json(const json& j);

/// Indented dump with a trailing newline; the byte form used for files and goldens.
std::string canonical_dump(const json& j);
/// Throws ParseError.
json read_json_file(const std::string& path);
json parse_json_text(const std::string& text);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace lieyb

#endif  // LIEYB_IO_HPP
