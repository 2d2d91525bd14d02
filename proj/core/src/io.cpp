#include "dyer/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dyer {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw ValidationError({what}); }

long long integer_field(const json& j, const std::string& context) {
  if (!j.is_number_integer()) schema_error(context + " must be an integer");
  return j.get<long long>();
}

}  // namespace

RawGraph parse_raw_graph(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    schema_error(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("graph file must contain a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "vertices" && key != "edges") schema_error("unexpected key '" + key + "'");
  }

  RawGraph raw;
  const json vertices = doc.value("vertices", json::array());
  if (!vertices.is_array()) schema_error("\"vertices\" must be an array");
  for (const auto& v : vertices) {
    if (!v.is_object() || !v.contains("name") || !v.contains("order")) {
      schema_error("each vertex must be an object with \"name\" and \"order\"");
    }
    if (!v["name"].is_string()) schema_error("vertex name must be a string");
    RawVertex rv{v["name"].get<std::string>(), std::nullopt};
    const json& order = v["order"];
    if (order.is_string()) {
      if (order.get<std::string>() != "inf") schema_error("vertex '" + rv.name + "' order must be an integer or \"inf\"");
    } else {
      rv.order = integer_field(order, "vertex '" + rv.name + "' order");
    }
    raw.vertices.push_back(std::move(rv));
  }

  const json edges = doc.value("edges", json::array());
  if (!edges.is_array()) schema_error("\"edges\" must be an array");
  for (const auto& e : edges) {
    if (!e.is_object() || !e.contains("ends") || !e.contains("label")) {
      schema_error("each edge must be an object with \"ends\" and \"label\"");
    }
    const json& ends = e["ends"];
    if (!ends.is_array() || ends.size() != 2 || !ends[0].is_string() || !ends[1].is_string()) {
      schema_error("edge \"ends\" must be an array of two vertex names");
    }
    raw.edges.push_back({ends[0].get<std::string>(), ends[1].get<std::string>(), integer_field(e["label"], "edge label")});
  }
  return raw;
}

DyerGraph parse_graph(std::string_view json_text) { return validate(parse_raw_graph(json_text)); }

DyerGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) schema_error("cannot read graph file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string graph_to_json(const DyerGraph& graph) {
  json doc;
  doc["vertices"] = json::array();
  doc["edges"] = json::array();
  for (std::size_t v = 0; v < graph.size(); ++v) {
    const Order o = graph.order(v);
    json order = o.is_infinite() ? json("inf") : json(o.value());
    doc["vertices"].push_back({{"name", graph.name(v)}, {"order", order}});
  }
  for (const auto& e : graph.edges()) {
    doc["edges"].push_back({{"ends", {graph.name(e.first), graph.name(e.second)}}, {"label", e.label}});
  }
  return doc.dump(2);
}

namespace {

json coefficient_array(const Polynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.get_str());
  return out;
}

Polynomial polynomial_from(const json& j, const std::string& key) {
  if (!j.is_array()) throw std::invalid_argument("\"" + key + "\" must be an array of decimal strings");
  std::vector<Integer> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) throw std::invalid_argument("\"" + key + "\" coefficients must be decimal strings");
    Integer value;
    if (value.set_str(c.get<std::string>(), 10) != 0) {
      throw std::invalid_argument("\"" + key + "\" has a non-decimal coefficient");
    }
    coeffs.push_back(std::move(value));
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace

std::string rational_function_to_json(const RationalFunction& f, const std::string& method) {
  json doc;
  doc["numerator"] = coefficient_array(f.numerator());
  doc["denominator"] = coefficient_array(f.denominator());
  if (!method.empty()) doc["method"] = method;
  return doc.dump();
}

RationalFunction rational_function_from_json(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("numerator") || !doc.contains("denominator")) {
    throw std::invalid_argument("rational function JSON needs \"numerator\" and \"denominator\"");
  }
  Polynomial num = polynomial_from(doc["numerator"], "numerator");
  Polynomial den = polynomial_from(doc["denominator"], "denominator");
  if (den.is_zero()) throw std::invalid_argument("zero denominator");
  return {std::move(num), std::move(den)};
}

}  // namespace dyer
