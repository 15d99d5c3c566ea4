#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "sgprod/bdim.hpp"
#include "sgprod/core.hpp"
#include "sgprod/document.hpp"
#include "sgprod/products.hpp"
#include "sgprod/verify.hpp"

namespace py = pybind11;
using namespace sgprod;

namespace {

using Triple = std::tuple<std::size_t, std::size_t, int>;
using Vectors = std::vector<std::vector<int>>;

SignedGraph make_graph(std::size_t n, const std::vector<Triple>& triples) {
  std::vector<Edge> edges;
  for (auto [u, v, s] : triples) edges.push_back({u, v, Sign::from_int(s)});
  return build_graph(n, edges);
}

std::vector<Triple> edge_triples(const SignedGraph& g) {
  std::vector<Triple> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v, e.sign.value());
  return out;
}

ScalarSwitching to_scalar(const std::vector<int>& z) {
  std::vector<Sign> v;
  for (int x : z) v.push_back(Sign::from_int(x));
  return ScalarSwitching(std::move(v));
}

std::vector<int> from_scalar(const ScalarSwitching& z) {
  std::vector<int> out;
  for (Sign s : z.values()) out.push_back(s.value());
  return out;
}

KSwitching to_vectors(const Vectors& z) {
  if (z.empty()) return KSwitching(0, {});
  std::vector<SwitchVector> v;
  for (const auto& row : z) {
    std::vector<std::int8_t> entries(row.begin(), row.end());
    v.emplace_back(std::move(entries));
  }
  return KSwitching(z.front().size(), std::move(v));
}

Vectors from_vectors(const KSwitching& z) {
  Vectors out;
  for (const auto& v : z.values()) out.emplace_back(v.entries().begin(), v.entries().end());
  return out;
}

Family family_named(const std::string& name) {
  static const std::pair<const char*, Family> names[] = {
      {"all_positive_complete", Family::all_positive_complete},
      {"all_negative_complete", Family::all_negative_complete},
      {"antibalanced_complete", Family::antibalanced_complete},
      {"unbalanced_cycle", Family::unbalanced_cycle},
      {"path", Family::path},
      {"null_graph", Family::null_graph},
  };
  std::string key = name;
  for (char& c : key) c = c == '-' ? '_' : c;
  for (auto [n, f] : names) {
    if (key == n) return f;
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Signed graph products, switching and balancing dimension";

  static py::exception<CapExceeded> cap_exceeded(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const CapExceeded& e) {
      cap_exceeded(e.what());
    }
  });

  py::class_<SignedGraph>(m, "SignedGraph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<Triple>{})
      .def_property_readonly("order", &SignedGraph::order)
      .def_property_readonly("size", &SignedGraph::size)
      .def_property_readonly("edges", &edge_triples)
      .def("sign_between",
           [](const SignedGraph& g, Vertex u, Vertex v) -> std::optional<int> {
             auto s = g.sign_between(u, v);
             return s ? std::optional<int>(s->value()) : std::nullopt;
           })
      .def("__eq__", [](const SignedGraph& a, const SignedGraph& b) { return a == b; })
      .def("__repr__", [](const SignedGraph& g) {
        return "SignedGraph(n=" + std::to_string(g.order()) + ", edges=" +
               std::to_string(g.size()) + ")";
      });

  m.def("generate", [](const std::string& family, std::size_t order) {
    return generate({family_named(family), order, {}});
  }, py::arg("family"), py::arg("order"));
  m.def("negate", &negate);
  m.def("cycle_sign", [](const SignedGraph& g, const std::vector<Vertex>& c) {
    return cycle_sign(g, c).value();
  });
  m.def("apply_switching", [](const SignedGraph& g, const std::vector<int>& z) {
    return apply_switching(g, to_scalar(z));
  });
  m.def("is_balanced", [](const SignedGraph& g) {
    auto r = is_balanced(g);
    std::optional<std::vector<int>> w;
    if (r.witness) w = from_scalar(*r.witness);
    return py::make_tuple(r.balanced, w);
  }, "(balanced, witness or None)");
  m.def("is_antibalanced", &is_antibalanced);
  m.def("is_switching_equivalent", &is_switching_equivalent);
  m.def("components", &bfs_components);

  m.def("product", [](const std::string& kind, const SignedGraph& a, const SignedGraph& b) {
    return product(parse_product_kind(kind), a, b);
  }, py::arg("kind"), py::arg("g1"), py::arg("g2"));
  m.def("cartesian", &cartesian);
  m.def("hg_lex", &hg_lex);
  m.def("bcd_lex", &bcd_lex);
  m.def("tensor", &tensor);
  m.def("strong", &strong);

  m.def("inner_sign", [](const std::vector<int>& a, const std::vector<int>& b) {
    return inner_sign(to_vectors({a})[0], to_vectors({b})[0]);
  });
  m.def("apply_k_switching", [](const SignedGraph& g, const Vectors& z) {
    return apply_k_switching(g, to_vectors(z));
  });
  m.def("is_k_positive", [](const SignedGraph& g, const Vectors& z) {
    return is_k_positive(g, to_vectors(z));
  });
  m.def("bdim", [](const SignedGraph& g, std::size_t max_k) {
    BdimResult r;
    {
      py::gil_scoped_release release;
      r = bdim_search(g, {max_k});
    }
    py::dict d;
    d["dimension"] = r.dimension;
    d["witness"] = from_vectors(r.witness);
    d["explored"] = r.explored;
    return d;
  }, py::arg("g"), py::arg("max_k") = 0,
        "Exact balancing dimension; max_k = 0 caps at the vertex count.");
  m.def("bdim_oracle", &bdim_oracle, py::arg("g"), py::arg("max_k"));
  m.def("table_witness", [](int id, std::size_t m_, std::size_t n,
                            const std::optional<Vectors>& base) {
    std::optional<KSwitching> b;
    if (base) b = to_vectors(*base);
    return from_vectors(table_witness(id, m_, n, b));
  }, py::arg("table_id"), py::arg("m"), py::arg("n"), py::arg("base") = py::none());
  m.def("table_product", &table_product);

  m.def("serialize_graph", [](const SignedGraph& g, std::optional<std::string> name,
                              std::optional<std::vector<std::string>> labels) {
    return serialize_graph({g, std::move(name), std::move(labels)});
  }, py::arg("g"), py::arg("name") = py::none(), py::arg("vertex_labels") = py::none());
  m.def("parse_graph", [](const std::string& text) { return parse_graph(text).graph; });
  m.def("export_dot", [](const SignedGraph& g, std::optional<std::string> name) {
    return export_dot({g, std::move(name), std::nullopt});
  }, py::arg("g"), py::arg("name") = py::none());

  m.def("claim_ids", [] {
    std::vector<std::string> ids;
    for (const auto& c : claim_registry()) ids.push_back(c.id);
    return ids;
  });
  m.def("run_claims", [](const std::vector<std::string>& claims, std::uint64_t seed,
                         unsigned jobs) {
    std::vector<ClaimReport> reports;
    {
      py::gil_scoped_release release;
      reports = run_claims(claims, seed, {}, jobs);
    }
    auto loads = py::module_::import("json").attr("loads");
    py::list out;
    for (const auto& r : reports) out.append(loads(report_json(r)));
    return out;
  }, py::arg("claims") = std::vector<std::string>{"all"}, py::arg("seed") = 0,
        py::arg("jobs") = 1);
}
