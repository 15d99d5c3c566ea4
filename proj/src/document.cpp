#include "sgprod/document.hpp"

#include <json.hpp>
#include <sstream>

namespace sgprod {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("malformed document: ") + e.what());
  }
}

template <typename T>
T field(const json& obj, const char* key) {
  if (!obj.contains(key)) throw DocumentError(std::string("missing field '") + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw DocumentError(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

std::string serialize_graph(const GraphDocument& doc) {
  std::ostringstream out;
  out << "{\n  \"n\": " << doc.graph.order() << ",\n";
  if (doc.name) out << "  \"name\": " << json(*doc.name).dump() << ",\n";
  out << "  \"edges\": [";
  const auto& edges = doc.graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out << (i ? ",\n" : "\n") << "    [" << edges[i].u << ", " << edges[i].v << ", "
        << edges[i].sign.value() << "]";
  }
  out << (edges.empty() ? "]" : "\n  ]");
  if (doc.vertex_labels) {
    out << ",\n  \"vertex_labels\": [";
    for (std::size_t v = 0; v < doc.vertex_labels->size(); ++v) {
      out << (v ? ", " : "") << json((*doc.vertex_labels)[v]).dump();
    }
    out << "]";
  }
  out << "\n}\n";
  return out.str();
}

GraphDocument parse_graph(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw DocumentError("graph document must be a JSON object");
  const auto n = field<long long>(j, "n");
  if (n < 0) throw DocumentError("vertex count must be non-negative");
  if (!j.contains("edges") || !j.at("edges").is_array()) {
    throw DocumentError("missing or non-array field 'edges'");
  }
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || !e[2].is_number_integer()) {
      throw DocumentError("edge must be [u, v, s] with integer entries");
    }
    const auto u = e[0].get<long long>();
    const auto v = e[1].get<long long>();
    if (u < 0 || v < 0) throw DocumentError("negative vertex id");
    try {
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v),
                       Sign::from_int(e[2].get<int>())});
    } catch (const std::invalid_argument& err) {
      throw DocumentError(err.what());
    }
  }
  GraphDocument doc;
  try {
    doc.graph = build_graph(static_cast<std::size_t>(n), edges);
  } catch (const GraphError& err) {
    throw DocumentError(err.what());
  }
  if (j.contains("name")) doc.name = field<std::string>(j, "name");
  if (j.contains("vertex_labels")) {
    doc.vertex_labels = field<std::vector<std::string>>(j, "vertex_labels");
    if (doc.vertex_labels->size() != doc.graph.order()) {
      throw DocumentError("vertex_labels must have one entry per vertex");
    }
  }
  return doc;
}

std::string serialize_witness(const WitnessDocument& doc) {
  std::ostringstream out;
  out << "{\n  \"k\": " << doc.zeta.dim() << ",\n  \"zeta\": [";
  const auto& values = doc.zeta.values();
  for (std::size_t v = 0; v < values.size(); ++v) {
    out << (v ? ",\n" : "\n") << "    [";
    for (std::size_t i = 0; i < values[v].dim(); ++i) out << (i ? ", " : "") << values[v][i];
    out << "]";
  }
  out << (values.empty() ? "]" : "\n  ]") << "\n}\n";
  return out.str();
}

WitnessDocument parse_witness(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw DocumentError("witness document must be a JSON object");
  const auto k = field<long long>(j, "k");
  if (k < 1) throw DocumentError("witness dimension must be >= 1");
  const auto rows = field<std::vector<std::vector<int>>>(j, "zeta");
  std::vector<SwitchVector> values;
  values.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != static_cast<std::size_t>(k)) {
      throw DocumentError("witness vector length differs from k");
    }
    std::vector<std::int8_t> entries;
    for (int x : row) {
      if (x < -1 || x > 1) throw DocumentError("witness entries must be in {-1, 0, 1}");
      entries.push_back(static_cast<std::int8_t>(x));
    }
    values.emplace_back(std::move(entries));
  }
  return {KSwitching(static_cast<std::size_t>(k), std::move(values))};
}

std::string export_dot(const GraphDocument& doc) {
  std::ostringstream out;
  out << "graph " << json(doc.name.value_or("G")).dump() << " {\n";
  for (Vertex v = 0; v < doc.graph.order(); ++v) {
    const std::string label =
        doc.vertex_labels ? (*doc.vertex_labels)[v] : std::to_string(v);
    out << "  " << v << " [label=" << json(label).dump() << "];\n";
  }
  for (const Edge& e : doc.graph.edges()) {
    out << "  " << e.u << " -- " << e.v << " [style="
        << (e.sign.is_positive() ? "solid" : "dashed") << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<std::string> pair_labels(std::size_t n1, std::size_t n2) {
  std::vector<std::string> labels;
  labels.reserve(n1 * n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j)
      labels.push_back(std::to_string(i) + "," + std::to_string(j));
  return labels;
}

}  // namespace sgprod
