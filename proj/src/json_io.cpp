#include "leibext/json_io.hpp"

#include "leibext/errors.hpp"

namespace leibext {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) throw FormatError(std::string("missing field \"") + name + "\"");
  return *it;
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw FormatError(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

std::vector<Complex> complex_list(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_array()) throw FormatError(std::string("field \"") + name + "\" must be an array");
  std::vector<Complex> out;
  for (const Json& z : v) out.push_back(complex_from_json(z));
  return out;
}

Json optional_complex(const std::optional<Complex>& z) {
  return z ? to_json(*z) : Json(nullptr);
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw FormatError("complex numbers must be [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const StructureTensor& t) {
  const int d = t.dim();
  Json gamma = Json::array();
  for (int i = 0; i < d; ++i) {
    Json row = Json::array();
    for (int j = 0; j < d; ++j) {
      Json cell = Json::array();
      for (int k = 0; k < d; ++k) cell.push_back(to_json(t(i, j, k)));
      row.push_back(cell);
    }
    gamma.push_back(row);
  }
  return {{"dim", d}, {"gamma", gamma}};
}

StructureTensor tensor_from_json(const Json& j) {
  const int d = int_field(j, "dim");
  if (d < 1) throw FormatError("dim must be positive");
  const Json& g = field(j, "gamma");
  const auto sized = [d](const Json& a) { return a.is_array() && static_cast<int>(a.size()) == d; };
  if (!sized(g)) throw FormatError("gamma must be a dim x dim x dim array");
  StructureTensor t(d);
  for (int i = 0; i < d; ++i) {
    if (!sized(g[i])) throw FormatError("gamma must be a dim x dim x dim array");
    for (int k2 = 0; k2 < d; ++k2) {
      if (!sized(g[i][k2])) throw FormatError("gamma must be a dim x dim x dim array");
      for (int k = 0; k < d; ++k) t.set(i, k2, k, complex_from_json(g[i][k2][k]));
    }
  }
  return t;
}

Json to_json(const ExtensionParams& p) {
  Json even = Json::array();
  for (const Complex& z : p.b_even) even.push_back(to_json(z));
  return {{"n", p.n},       {"b00", to_json(p.b00)}, {"b01", to_json(p.b01)},
          {"b11", to_json(p.b11)}, {"b_even", even},       {"b", to_json(p.b)}};
}

ExtensionParams params_from_json(const Json& j) {
  ExtensionParams p;
  p.n = int_field(j, "n");
  p.b00 = complex_from_json(field(j, "b00"));
  p.b01 = complex_from_json(field(j, "b01"));
  p.b11 = complex_from_json(field(j, "b11"));
  p.b_even = complex_list(j, "b_even");
  if (j.contains("b")) p.b = complex_from_json(j["b"]);
  validate(p);
  return p;
}

Json to_json(const AdaptedTransform& t) {
  Json B = Json::array();
  for (const Complex& z : t.B) B.push_back(to_json(z));
  return {{"n", t.n}, {"A0", to_json(t.A0)}, {"A1", to_json(t.A1)}, {"B", B}};
}

AdaptedTransform transform_from_json(const Json& j) {
  AdaptedTransform t;
  t.n = int_field(j, "n");
  t.A0 = complex_from_json(field(j, "A0"));
  t.A1 = complex_from_json(field(j, "A1"));
  t.B = complex_list(j, "B");
  if (t.n < kMinN || t.n > kMaxN) throw ArgumentError("transform: n out of range");
  if (static_cast<int>(t.B.size()) != t.n - 2) throw ArgumentError("transform: B must have length n-2");
  return t;
}

Json to_json(const OrbitLabel& label) {
  Json flags = Json::object();
  for (const auto& [name, zero] : label.invariants.is_zero) flags[name] = zero;
  return {{"n", label.n},
          {"subset", label.subset.label()},
          {"representative", to_json(label.representative)},
          {"lambda", optional_complex(label.lambda)},
          {"witness", to_json(label.witness)},
          {"orbit_value", optional_complex(label.invariants.orbit_value)},
          {"delta", to_json(label.invariants.delta)},
          {"flag_margin", label.invariants.flag_margin},
          {"exceptional", label.exceptional},
          {"is_zero", flags}};
}

Json to_json(const ConstraintReport& r) {
  Json relations = Json::array();
  for (const auto& rel : r.implied_relations) {
    Json terms = Json::array();
    for (const auto& t : rel.terms) terms.push_back({{"source", t.source}, {"coefficient", t.coefficient}});
    relations.push_back({{"unknown", rel.unknown}, {"i", rel.i}, {"j", rel.j}, {"terms", terms}});
  }
  Json signs = Json::object();
  Json undetermined = Json::array();
  for (int i = 1; i < static_cast<int>(r.signs.sign.size()); ++i) {
    signs[std::to_string(i)] = r.signs.sign[i];
    if (i < static_cast<int>(r.signs.determined.size()) && !r.signs.determined[i]) undetermined.push_back(i);
  }
  return {{"n", r.n},
          {"total_unknowns", r.total_unknowns},
          {"rank", r.rank},
          {"free_count", r.free_count},
          {"unknowns", r.unknowns},
          {"free_unknowns", r.free_unknowns},
          {"free_basis", r.free_basis},
          {"implied_relations", relations},
          {"signs", signs},
          {"signs_consistent", r.signs_consistent},
          {"undetermined_signs", undetermined},
          {"arity_matches", r.arity_matches}};
}

Json to_json(const SeriesProfile& s) { return Json(s.dims); }

Json to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"id", c.id},
                      {"n", c.n},
                      {"trials", c.trials},
                      {"max_residual", c.max_residual},
                      {"pass", c.pass},
                      {"notes", c.notes}});
  }
  return {{"seed", report.seed},
          {"trials", report.trials},
          {"summary", {{"passed", report.passed()}, {"total", report.total()}}},
          {"checks", checks}};
}

}  // namespace leibext
