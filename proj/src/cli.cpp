#include "sgprod/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sgprod/bdim.hpp"
#include "sgprod/document.hpp"
#include "sgprod/products.hpp"
#include "sgprod/verify.hpp"

namespace sgprod {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw InputError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

struct FamilyName {
  const char* name;
  Family family;
  const char* suffix;
};

constexpr FamilyName kFamilies[] = {
    {"all-positive-complete", Family::all_positive_complete, "+K"},
    {"all-negative-complete", Family::all_negative_complete, "-K"},
    {"antibalanced-complete", Family::antibalanced_complete, "K^-"},
    {"unbalanced-cycle", Family::unbalanced_cycle, "C^-"},
    {"path", Family::path, "P"},
    {"path-all-positive", Family::path, "P"},
    {"null-graph", Family::null_graph, "N"},
    {"signed-custom", Family::signed_custom, "G"},
};

std::string family_label(const FamilyName& f, std::size_t n) {
  std::string s = f.suffix;
  const auto caret = s.find('^');
  const std::string num = std::to_string(n);
  return caret == std::string::npos ? s + num : s.substr(0, caret) + num + s.substr(caret);
}

Edge parse_edge_token(const std::string& tok) {
  std::vector<long long> parts;
  std::stringstream ss(tok);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoll(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw InputError("bad edge '" + tok + "', expected u,v,s");
    }
  }
  if (parts.size() != 3 || parts[0] < 0 || parts[1] < 0) {
    throw InputError("bad edge '" + tok + "', expected u,v,s");
  }
  try {
    return {static_cast<Vertex>(parts[0]), static_cast<Vertex>(parts[1]),
            Sign::from_int(static_cast<int>(parts[2]))};
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

std::string join_signs(const ScalarSwitching& z) {
  std::string s = "[";
  for (std::size_t v = 0; v < z.size(); ++v) s += (v ? ", " : "") + std::to_string(z[v].value());
  return s + "]";
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    if (!piece.empty()) out.push_back(piece);
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Signed graph products, switching and balancing dimension", "sgprod"};
  app.require_subcommand(1);

  // gen
  std::string family;
  std::vector<std::string> gen_params;
  std::optional<std::string> gen_name;
  auto* gen = app.add_subcommand("gen", "Emit a graph document for a named family");
  gen->add_option("family", family, "Family name")->required();
  gen->add_option("params", gen_params, "Order, then u,v,s edges for signed-custom");
  gen->add_option("--name", gen_name, "Override the document name");

  // balance
  std::string balance_file;
  auto* balance = app.add_subcommand("balance", "Report balance, antibalance and a witness");
  balance->add_option("file", balance_file, "Graph document ('-' for stdin)")->required();

  // bdim
  std::string bdim_file;
  std::size_t bdim_max_k = 0;
  std::optional<std::string> bdim_witness_out;
  bool bdim_oracle_flag = false;
  auto* bdim = app.add_subcommand("bdim", "Compute the balancing dimension");
  bdim->add_option("file", bdim_file, "Graph document ('-' for stdin)")->required();
  bdim->add_option("--max-k", bdim_max_k, "Search cap (default: vertex count)");
  bdim->add_option("--witness", bdim_witness_out, "Write the positive function here");
  bdim->add_flag("--oracle", bdim_oracle_flag, "Cross-check with plain enumeration");

  // product
  std::string product_kind;
  std::string product_a;
  std::string product_b;
  auto* prod = app.add_subcommand("product", "Emit the product of two graph documents");
  prod->add_option("kind", product_kind, "cartesian | hg-lex | bcd-lex | tensor | strong")
      ->required();
  prod->add_option("file1", product_a, "First factor")->required();
  prod->add_option("file2", product_b, "Second factor")->required();

  // switch
  std::string switch_file;
  std::string switch_witness;
  auto* sw = app.add_subcommand("switch", "Apply a scalar or vector switching");
  sw->add_option("file", switch_file, "Graph document")->required();
  sw->add_option("witness", switch_witness, "Witness document")->required();

  // witness-table
  int table_id = 0;
  std::size_t table_m = 0;
  std::size_t table_n = 0;
  auto* wt = app.add_subcommand("witness-table", "Emit a tabulated positive function");
  wt->add_option("id", table_id, "Table 1..5")->required();
  wt->add_option("m", table_m, "Order of the first factor")->required();
  wt->add_option("n", table_n, "Order of the second factor")->required();

  // verify
  std::string claims = "all";
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::string format = "text";
  BudgetOverrides overrides;
  auto* ver = app.add_subcommand("verify", "Check the product theorems on finite families");
  ver->add_option("--claims", claims, "Comma-separated claim ids or 'all'");
  ver->add_option("--seed", seed, "Seed for sampled families");
  ver->add_option("--jobs", jobs, "Claims run in parallel (0 = all cores)");
  ver->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  ver->add_option("--trials", overrides.trials, "Randomized trials per claim");
  ver->add_option("--max-vertices", overrides.max_vertices, "Largest graph for bdim");
  ver->add_option("--max-k", overrides.max_k, "Search cap");
  ver->add_option("--oracle-max-vertices", overrides.oracle_max_vertices,
                  "Largest graph confirmed by the oracle");
  ver->add_option("--oracle-max-k", overrides.oracle_max_k,
                  "Largest dimension confirmed by the oracle");

  // export-dot
  std::string dot_file;
  auto* dot = app.add_subcommand("export-dot", "Render a graph document as Graphviz DOT");
  dot->add_option("file", dot_file, "Graph document")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*gen) {
      const FamilyName* f = nullptr;
      for (const auto& cand : kFamilies) {
        if (family == cand.name) f = &cand;
      }
      if (!f) throw InputError("unknown family '" + family + "'");
      if (gen_params.empty()) throw InputError("missing order parameter");
      long long order = 0;
      try {
        order = std::stoll(gen_params[0]);
      } catch (const std::exception&) {
        throw InputError("order must be an integer");
      }
      if (order < 1) throw InputError("order must be >= 1");
      GeneratorSpec spec{f->family, static_cast<std::size_t>(order), {}};
      if (f->family == Family::signed_custom) {
        for (std::size_t i = 1; i < gen_params.size(); ++i) {
          spec.edges.push_back(parse_edge_token(gen_params[i]));
        }
      } else if (gen_params.size() > 1) {
        throw InputError("family '" + family + "' takes a single order parameter");
      }
      GraphDocument doc;
      try {
        doc.graph = generate(spec);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      doc.name = gen_name ? *gen_name : family_label(*f, spec.order);
      out << serialize_graph(doc);
      return kExitOk;
    }

    if (*balance) {
      const auto doc = parse_graph(read_source(balance_file, in));
      const auto b = is_balanced(doc.graph);
      out << "balanced: " << (b.balanced ? "true" : "false") << "\n";
      out << "antibalanced: " << (is_antibalanced(doc.graph) ? "true" : "false") << "\n";
      if (b.balanced) out << "witness: " << join_signs(*b.witness) << "\n";
      return kExitOk;
    }

    if (*bdim) {
      const auto doc = parse_graph(read_source(bdim_file, in));
      BdimResult r;
      try {
        r = bdim_search(doc.graph, {bdim_max_k});
      } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitComputation;
      }
      out << "bdim = " << r.dimension << "\n";
      out << "explored = " << r.explored << "\n";
      if (bdim_witness_out) {
        std::ofstream w(*bdim_witness_out);
        if (!w) throw InputError("cannot write '" + *bdim_witness_out + "'");
        w << serialize_witness({r.witness});
      }
      if (bdim_oracle_flag) {
        const std::size_t n = doc.graph.order();
        if (!oracle_within_guard(n, r.dimension)) {
          out << "oracle: skipped (3^(n*k) exceeds guard)\n";
        } else {
          std::size_t o = 0;
          try {
            o = bdim_oracle(doc.graph, r.dimension);
          } catch (const CapExceeded&) {
          }
          if (o != r.dimension) {
            out << "oracle: DISAGREES\n";
            return kExitComputation;
          }
          out << "oracle: agrees\n";
        }
      }
      return kExitOk;
    }

    if (*prod) {
      const auto kind = [&] {
        try {
          return parse_product_kind(product_kind);
        } catch (const std::invalid_argument& e) {
          throw InputError(e.what());
        }
      }();
      // Both factors may not come from stdin.
      if (product_a == "-" && product_b == "-") throw InputError("only one factor may be '-'");
      const auto a = parse_graph(read_source(product_a, in));
      const auto b = parse_graph(read_source(product_b, in));
      GraphDocument doc;
      doc.graph = product(kind, a.graph, b.graph);
      doc.vertex_labels = pair_labels(a.graph.order(), b.graph.order());
      if (a.name && b.name) {
        doc.name = *a.name + " " + std::string(product_kind_name(kind)) + " " + *b.name;
      }
      out << serialize_graph(doc);
      return kExitOk;
    }

    if (*sw) {
      auto doc = parse_graph(read_source(switch_file, in));
      const auto w = parse_witness(read_source(switch_witness, in));
      try {
        doc.graph = apply_k_switching(doc.graph, w.zeta);
      } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
      }
      out << serialize_graph(doc);
      return kExitOk;
    }

    if (*wt) {
      KSwitching w;
      try {
        std::optional<KSwitching> base;
        if (table_id == 5) {
          if (table_m < 1) throw std::invalid_argument("table 5 needs m >= 1");
          base = bdim_search(generate({Family::all_negative_complete, table_m, {}}), {3 * table_m})
                     .witness;
        }
        w = table_witness(table_id, table_m, table_n, base);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      const bool ok = is_k_positive(table_product(table_id, table_m, table_n), w);
      out << serialize_witness({w});
      err << "table " << table_id << " (m=" << table_m << ", n=" << table_n
          << "): " << w.dim() << "-positive: " << (ok ? "true" : "false") << "\n";
      return ok ? kExitOk : kExitComputation;
    }

    if (*ver) {
      std::vector<ClaimReport> reports;
      try {
        reports = run_claims(split_list(claims), seed, overrides, jobs);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      bool all_pass = true;
      for (const auto& r : reports) {
        out << (format == "json" ? report_json(r) : report_text(r)) << "\n";
        all_pass = all_pass && r.status == ClaimStatus::pass;
      }
      return all_pass ? kExitOk : kExitComputation;
    }

    if (*dot) {
      out << export_dot(parse_graph(read_source(dot_file, in)));
      return kExitOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitInput;
}

}  // namespace sgprod
