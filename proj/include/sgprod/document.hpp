#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sgprod/bdim.hpp"
#include "sgprod/core.hpp"

namespace sgprod {

/// Raised for malformed graph or witness documents.
class DocumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A signed graph plus optional presentation data.
///
/// Serialized form (one edge per line, signs as -1/1):
///
///   {
///     "n": 4,
///     "name": "C4^-",
///     "edges": [
///       [0, 1, -1],
///       [0, 3, 1]
///     ],
///     "vertex_labels": ["0,0", "0,1"]
///   }
struct GraphDocument {
  SignedGraph graph;
  std::optional<std::string> name;
  std::optional<std::vector<std::string>> vertex_labels;

  bool operator==(const GraphDocument&) const = default;
};

/// Vector switching document: {"k": 2, "zeta": [[1, 0], [0, -1]]}.
struct WitnessDocument {
  KSwitching zeta;

  bool operator==(const WitnessDocument&) const = default;
};

std::string serialize_graph(const GraphDocument& doc);
/// Throws DocumentError on malformed JSON or invalid graphs.
GraphDocument parse_graph(std::string_view text);

std::string serialize_witness(const WitnessDocument& doc);
WitnessDocument parse_witness(std::string_view text);

/// Graphviz rendering: positive edges solid, negative edges dashed.
std::string export_dot(const GraphDocument& doc);

/// "i,j" labels for a product with a second factor of order n2.
std::vector<std::string> pair_labels(std::size_t n1, std::size_t n2);

}  // namespace sgprod
