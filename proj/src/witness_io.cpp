#include "avgpart/witness_io.hpp"

#include <algorithm>

#include "avgpart/error.hpp"
#include "json.hpp"

namespace avgpart {

using nlohmann::json;

namespace {

json vertex_array(const VertexSet& xs) {
  VertexSet sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  return json(sorted);
}

json optional_rational(const std::optional<Rational>& q) { return q ? json(format_rational(*q)) : json(nullptr); }

[[noreturn]] void schema_error(const std::string& why) { throw Error(ErrorKind::ParseError, "witness document: " + why); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) schema_error(std::string("missing key '") + key + "'");
  return obj.at(key);
}

Rational rational_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_string()) schema_error(std::string("'") + key + "' must be a \"num/den\" string");
  return parse_rational(v.get<std::string>());
}

std::optional<Rational> optional_rational_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (v.is_null()) return std::nullopt;
  return rational_field(obj, key);
}

VertexSet vertex_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_array()) schema_error(std::string("'") + key + "' must be an array");
  VertexSet out;
  for (const json& item : v) {
    if (!item.is_number_integer()) schema_error(std::string("'") + key + "' holds a non-integer");
    out.push_back(item.get<Vertex>());
  }
  return out;
}

std::string string_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_string()) schema_error(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

SolvePath path_from(const std::string& text) {
  for (SolvePath p : {SolvePath::SmallST, SolvePath::CliqueFallback, SolvePath::Rounding})
    if (to_string(p) == text) return p;
  schema_error("unknown path '" + text + "'");
}

MergeSide side_from(const std::string& text) {
  for (MergeSide m : {MergeSide::A, MergeSide::B, MergeSide::None})
    if (to_string(m) == text) return m;
  schema_error("unknown mergedInto '" + text + "'");
}

Choice choice_from(const std::string& text) {
  for (Choice c : {Choice::Plus, Choice::Minus, Choice::None})
    if (to_string(c) == text) return c;
  schema_error("unknown chosen '" + text + "'");
}

}  // namespace

std::string render_witness(const PartitionWitness& w, const Rational& s, const Rational& t) {
  json doc;
  doc["s"] = format_rational(s);
  doc["t"] = format_rational(t);
  doc["A"] = vertex_array(w.A);
  doc["B"] = vertex_array(w.B);
  doc["path"] = std::string(to_string(w.path));
  doc["peeled"] = vertex_array(w.peeled);
  doc["mergedInto"] = std::string(to_string(w.merged_into));
  doc["margins"] = {{"sSide", format_rational(w.s_side)}, {"tSide", format_rational(w.t_side)}};
  if (w.cert) {
    const RoundingCertificate& c = *w.cert;
    doc["certificate"] = {
        {"T", format_rational(c.T)},
        {"xBound", format_rational(c.x_bound)},
        {"yBound", format_rational(c.y_bound)},
        {"aMargin", format_rational(c.a_margin)},
        {"bMargin", format_rational(c.b_margin)},
        {"aLocal", optional_rational(c.a_local)},
        {"bLocal", optional_rational(c.b_local)},
        {"pivot", c.pivot ? json(*c.pivot) : json(nullptr)},
        {"chosen", std::string(to_string(c.chosen))},
        {"f0", format_rational(c.f0)},
        {"g0", format_rational(c.g0)},
        {"swapped", w.cert_swapped},
    };
  } else {
    doc["certificate"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

std::string render_witness(const WitnessDocument& doc) { return render_witness(doc.witness, doc.s, doc.t); }

WitnessDocument parse_witness_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("witness document: ") + e.what());
  }
  if (!doc.is_object()) schema_error("top level must be an object");

  WitnessDocument out;
  out.s = rational_field(doc, "s");
  out.t = rational_field(doc, "t");
  PartitionWitness& w = out.witness;
  w.A = vertex_field(doc, "A");
  w.B = vertex_field(doc, "B");
  w.path = path_from(string_field(doc, "path"));
  w.peeled = vertex_field(doc, "peeled");
  w.merged_into = side_from(string_field(doc, "mergedInto"));
  const json& margins = field(doc, "margins");
  w.s_side = rational_field(margins, "sSide");
  w.t_side = rational_field(margins, "tSide");
  const json& cert = field(doc, "certificate");
  if (!cert.is_null()) {
    RoundingCertificate c;
    c.T = rational_field(cert, "T");
    c.x_bound = rational_field(cert, "xBound");
    c.y_bound = rational_field(cert, "yBound");
    c.a_margin = rational_field(cert, "aMargin");
    c.b_margin = rational_field(cert, "bMargin");
    c.a_local = optional_rational_field(cert, "aLocal");
    c.b_local = optional_rational_field(cert, "bLocal");
    const json& pivot = field(cert, "pivot");
    if (!pivot.is_null()) {
      if (!pivot.is_number_integer()) schema_error("'pivot' must be an integer or null");
      c.pivot = pivot.get<Vertex>();
    }
    c.chosen = choice_from(string_field(cert, "chosen"));
    c.f0 = rational_field(cert, "f0");
    c.g0 = rational_field(cert, "g0");
    const json& swapped = field(cert, "swapped");
    if (!swapped.is_boolean()) schema_error("'swapped' must be a boolean");
    w.cert_swapped = swapped.get<bool>();
    w.cert = c;
  }
  return out;
}

ValidationReport verify_document(const Graph& g, const WitnessDocument& doc) {
  ValidationReport report = validate(g, doc.s, doc.t, doc.witness);
  const auto fail = [&](std::string name, std::string detail) {
    report.ok = false;
    report.failures.push_back({std::move(name), std::move(detail)});
  };
  if (doc.s <= 0 || doc.t <= 0) fail("parameters", "s and t must be positive");
  const PartitionWitness& w = doc.witness;
  for (Vertex v : w.peeled)
    if (!g.contains(v)) {
      fail("peeled out of range", "vertex " + std::to_string(v));
      return report;
    }
  if (w.cert) {
    const Rational T = surplus(g, w.peeled, doc.s + doc.t + 1).T;
    if (T != w.cert->T) fail("certificate T mismatch", format_rational(w.cert->T) + " recorded, " + format_rational(T) + " actual");
    if (w.cert->pivot && !g.contains(*w.cert->pivot)) fail("pivot out of range", std::to_string(*w.cert->pivot));
  }
  return report;
}

}  // namespace avgpart
