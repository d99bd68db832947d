#include "lieyb/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace lieyb {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t index_from_json(const json& j, std::size_t dim, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer index");
  const auto v = j.get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= dim)
    throw ParseError(std::string(what) + " index " + std::to_string(v) + " out of range");
  return static_cast<std::size_t>(v);
}

void require_keys(const json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : j.items())
    if (!ok.count(k)) throw ParseError(std::string("unknown field '") + k + "' in " + what);
}

json entry(std::size_t i, std::size_t j, const Scalar& v) {
  return json{{"i", i}, {"j", j}, {"value", scalar_to_json(v)}};
}

}  // namespace

json scalar_to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw ParseError("scalar must be a string \"p/q\" or an integer");
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v.components()) out.push_back(scalar_to_json(x));
  return out;
}

Vector vector_from_json(const json& j, std::size_t dim) {
  if (!j.is_array()) throw ParseError("vector must be an array of scalars");
  if (j.size() != dim) throw DimensionMismatch("vector has " + std::to_string(j.size()) + " components, expected " + std::to_string(dim));
  Vector v(dim);
  for (std::size_t k = 0; k < dim; ++k) v[k] = scalar_from_json(j[k]);
  return v;
}

json constants_to_json(const StructureConstants& c, const std::vector<std::string>& labels) {
  const std::size_t d = c.size();
  json brackets = json::array();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      bool zero = true;
      json coeffs = json::array();
      for (std::size_t k = 0; k < d; ++k) {
        zero = zero && c[i][j][k].is_zero();
        coeffs.push_back(scalar_to_json(c[i][j][k]));
      }
      if (!zero) brackets.push_back(json{{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  return json{{"dim", d}, {"labels", labels}, {"brackets", brackets}};
}

json algebra_to_json(const LieAlgebra& g) { return constants_to_json(g.constants(), g.labels()); }

LieAlgebra algebra_from_json(const json& j) {
  require_keys(j, {"dim", "labels", "brackets"}, "algebra");
  const json& dj = field(j, "dim");
  if (!dj.is_number_integer() || dj.get<long long>() <= 0) throw ParseError("dim must be a positive integer");
  const auto d = dj.get<std::size_t>();
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || j["labels"].size() != d) throw ParseError("labels must list one name per basis vector");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw ParseError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  StructureConstants c = zero_constants(d);
  const json& br = field(j, "brackets");
  if (!br.is_array()) throw ParseError("brackets must be an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& b : br) {
    require_keys(b, {"i", "j", "coeffs"}, "bracket");
    const std::size_t i = index_from_json(field(b, "i"), d, "i");
    const std::size_t k = index_from_json(field(b, "j"), d, "j");
    if (i >= k) throw ParseError("brackets must list i < j only");
    if (!seen.insert({i, k}).second) throw ParseError("bracket (" + std::to_string(i) + "," + std::to_string(k) + ") listed twice");
    const Vector v = vector_from_json(field(b, "coeffs"), d);
    for (std::size_t m = 0; m < d; ++m) {
      c[i][k][m] = v[m];
      c[k][i][m] = -v[m];
    }
  }
  return LieAlgebra::validate(std::move(c), std::move(labels));
}

json bivector_to_json(const Bivector& r) {
  json entries = json::array();
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = i + 1; j < r.dim(); ++j)
      if (!r(i, j).is_zero()) entries.push_back(entry(i, j, r(i, j)));
  return json{{"entries", entries}};
}

Bivector bivector_from_json(const json& j, std::size_t dim) {
  require_keys(j, {"entries"}, "bivector");
  const json& es = field(j, "entries");
  if (!es.is_array()) throw ParseError("entries must be an array");
  Bivector r(dim);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : es) {
    require_keys(e, {"i", "j", "value"}, "bivector entry");
    const std::size_t a = index_from_json(field(e, "i"), dim, "i");
    const std::size_t b = index_from_json(field(e, "j"), dim, "j");
    if (a >= b) throw ParseError("bivector entries must have i < j");
    if (!seen.insert({a, b}).second) throw ParseError("bivector entry listed twice");
    r.set(a, b, scalar_from_json(field(e, "value")));
  }
  return r;
}

json cocycle_to_json(const Cocycle& xi) {
  json out = json::array();
  for (const auto& b : xi.images) out.push_back(bivector_to_json(b));
  return out;
}

Cocycle cocycle_from_json(const json& j, std::size_t dim) {
  if (!j.is_array()) throw ParseError("cocycle must be a list of bivectors");
  if (j.size() != dim) throw DimensionMismatch("cocycle must list one bivector per basis vector");
  Cocycle xi;
  for (const auto& b : j) xi.images.push_back(bivector_from_json(b, dim));
  return xi;
}

json form_to_json(const Matrix& k) {
  json entries = json::array();
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = i; j < k.cols(); ++j)
      if (!k(i, j).is_zero()) entries.push_back(entry(i, j, k(i, j)));
  return json{{"entries", entries}};
}

Matrix form_from_json(const json& j, std::size_t dim) {
  require_keys(j, {"entries"}, "form");
  const json& es = field(j, "entries");
  if (!es.is_array()) throw ParseError("entries must be an array");
  Matrix k(dim, dim);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : es) {
    require_keys(e, {"i", "j", "value"}, "form entry");
    const std::size_t a = index_from_json(field(e, "i"), dim, "i");
    const std::size_t b = index_from_json(field(e, "j"), dim, "j");
    if (a > b) throw ParseError("form entries must have i <= j");
    if (!seen.insert({a, b}).second) throw ParseError("form entry listed twice");
    k(a, b) = k(b, a) = scalar_from_json(field(e, "value"));
  }
  return k;
}

json algebra_input_to_json(const AlgebraInput& a) {
  if (a.oscillator) {
    json lam = json::array();
    for (const auto& l : a.oscillator->lambda) lam.push_back(scalar_to_json(l));
    return json{{"oscillator", {{"lambda", lam}}}};
  }
  return algebra_to_json(a.algebra);
}

AlgebraInput algebra_input_from_json(const json& j) {
  if (j.is_object() && j.contains("oscillator")) {
    require_keys(j, {"oscillator"}, "algebra");
    const json& o = j["oscillator"];
    require_keys(o, {"lambda"}, "oscillator");
    const json& lj = field(o, "lambda");
    if (!lj.is_array() || lj.empty()) throw ParseError("lambda must be a non-empty array");
    std::vector<Scalar> lambda;
    for (const auto& x : lj) lambda.push_back(scalar_from_json(x));
    OscillatorAlgebra g = build_oscillator(std::move(lambda));
    LieAlgebra alg = g.algebra;
    return AlgebraInput{std::move(alg), std::move(g)};
  }
  return AlgebraInput{algebra_from_json(j), std::nullopt};
}

json document_to_json(const SpecDocument& d) {
  json out{{"algebra", algebra_input_to_json(d.algebra)}};
  if (d.bivector) out["bivector"] = bivector_to_json(*d.bivector);
  if (d.cocycle) out["cocycle"] = cocycle_to_json(*d.cocycle);
  if (d.form) out["form"] = d.form->k_lambda ? json("k_lambda") : form_to_json(d.form->matrix);
  if (d.params) {
    json a = json::array();
    for (const auto& x : d.params->a) a.push_back(scalar_to_json(x));
    out["params"] = json{{"r", bivector_to_json(d.params->r)}, {"u0", vector_to_json(d.params->u0)}, {"a", a}};
  }
  return out;
}

SpecDocument document_from_json(const json& j) {
  require_keys(j, {"algebra", "bivector", "cocycle", "form", "params"}, "document");
  SpecDocument d;
  d.algebra = algebra_input_from_json(field(j, "algebra"));
  const std::size_t dim = d.algebra.algebra.dim();
  if (j.contains("bivector")) d.bivector = bivector_from_json(j["bivector"], dim);
  if (j.contains("cocycle")) d.cocycle = cocycle_from_json(j["cocycle"], dim);
  if (j.contains("form")) {
    const json& f = j["form"];
    FormInput fi;
    if (f.is_string()) {
      if (f.get<std::string>() != "k_lambda") throw ParseError("form must be an entries object or \"k_lambda\"");
      if (!d.algebra.oscillator) throw ParseError("\"k_lambda\" needs an oscillator algebra");
      fi.k_lambda = true;
    } else {
      fi.matrix = form_from_json(f, dim);
    }
    d.form = std::move(fi);
  }
  if (j.contains("params")) {
    const json& p = j["params"];
    require_keys(p, {"r", "u0", "a"}, "params");
    BialgebraParams bp;
    bp.r = bivector_from_json(field(p, "r"), dim);
    bp.u0 = vector_from_json(field(p, "u0"), dim);
    const json& a = field(p, "a");
    if (!a.is_array()) throw ParseError("a must be an array");
    for (const auto& x : a) bp.a.push_back(scalar_from_json(x));
    d.params = std::move(bp);
  }
  return d;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

}  // namespace lieyb
