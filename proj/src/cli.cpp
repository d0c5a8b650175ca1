#include "sgcolor/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <sstream>

#include "sgcolor/bounds.hpp"
#include "sgcolor/errors.hpp"
#include "sgcolor/graph_io.hpp"
#include "sgcolor/layers.hpp"
#include "sgcolor/oracle.hpp"
#include "sgcolor/serialize.hpp"
#include "sgcolor/signature.hpp"

namespace sgcolor {

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw ParseError("cannot write " + path);
}

std::string circuit_text(const SignedGraph& g, const Circuit& c) {
  std::string out;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    out += g.vertex_name(c.vertices[i]) + " -[e" + std::to_string(c.edges[i]) + "]- ";
  }
  return out + g.vertex_name(c.vertices.front());
}

struct Options {
  std::string graph;
  std::string second;
  std::string method = "auto";
  std::string dot_path;
  std::string output;
  std::vector<std::string> at;
  std::uint64_t seed = 0;
  std::size_t max_edges = OracleLimits{}.max_edges;
  std::size_t max_vertices = OracleLimits{}.max_vertices;
  bool json = false;
};

int cmd_color(const Options& o, std::ostream& out) {
  const SignedGraph g = read_graph_file(o.graph);
  const Signature sigma = g.signature();
  std::string method = o.method;
  if (method == "auto") method = is_balanced(g, sigma).balanced ? "koenig" : "shannon";
  const ColoringResult result = method == "koenig" ? koenig_color(g, sigma) : shannon_color(g, sigma);
  const VerificationReport report = verify_coloring(g, result.signature, result.coloring);
  if (!report.valid) throw std::logic_error("internal error: constructed colouring failed verification");
  out << coloring_to_json(g, result);
  if (!o.dot_path.empty()) write_text(o.dot_path, coloring_to_dot(g, result.signature, result.coloring));
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const SignedGraph g = read_graph_file(o.graph);
  const ColoringDocument doc = parse_coloring_json(g, read_text(o.second));
  for (const auto& [id, s] : doc.recorded_signs) {
    if (!g.has_edge(id)) throw DomainError("coloring names unknown edge " + std::to_string(id));
  }
  const Signature sigma = resign(g, g.signature(), doc.resigned_at);
  bool valid = true;
  for (const auto& [id, s] : doc.recorded_signs) {
    if (sigma[id] != s) {
      out << "edge " << id << ": recorded sign " << sign_token(s)
          << " does not match the resigned graph\n";
      valid = false;
    }
  }
  const VerificationReport report = verify_coloring(g, sigma, doc.coloring);
  for (const Violation& v : report.violations) out << v.message << "\n";
  valid = valid && report.valid;
  out << (valid ? "valid" : "invalid") << " (" << doc.coloring.palette.size() << " colours)\n";
  return valid ? kExitOk : kExitDomain;
}

int cmd_chi(const Options& o, std::ostream& out) {
  const SignedGraph g = read_graph_file(o.graph);
  const ChromaticReport report = chromatic_index(g, g.signature(), {o.max_edges, o.max_vertices});
  out << report_to_json(g, report);
  return kExitOk;
}

int cmd_layers(const Options& o, std::ostream& out) {
  const SignedGraph g = read_graph_file(o.graph);
  const LayerDecomposition dec = decompose_layers(g);
  if (o.json) {
    out << layers_to_json(dec);
    return kExitOk;
  }
  for (const Layer& layer : dec.layers) {
    for (std::size_t i = 0; i < layer.size(); ++i) out << (i ? " " : "") << layer[i];
    out << "\n";
  }
  return kExitOk;
}

int cmd_balance(const Options& o, std::ostream& out) {
  const SignedGraph g = read_graph_file(o.graph);
  const BalanceResult r = is_balanced(g);
  if (r.balanced) {
    out << "balanced\npotential:";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      out << " " << g.vertex_name(v) << ":" << sign_token(r.potential[v]);
    }
    out << "\n";
  } else {
    out << "unbalanced\nwitness: " << circuit_text(g, *r.negative_circuit) << "\n";
  }
  return kExitOk;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  const SignedGraph a = read_graph_file(o.graph);
  const SignedGraph b = read_graph_file(o.second);
  bool same = a.edge_count() == b.edge_count() && a.vertex_count() == b.vertex_count();
  for (VertexId v = 0; same && v < a.vertex_count(); ++v) same = b.find_vertex(a.vertex_name(v)).has_value();
  Signature sb = Signature::all(a, Sign::kPositive);
  for (const Edge& e : a.edges()) {
    if (!same) break;
    if (!b.has_edge(e.id)) {
      same = false;
      break;
    }
    const Edge& f = b.edge(e.id);
    auto key = [](const std::string& x, const std::string& y) { return std::minmax(x, y); };
    same = key(a.vertex_name(e.u), a.vertex_name(e.v)) == key(b.vertex_name(f.u), b.vertex_name(f.v));
    sb.set(e.id, f.sign);
  }
  if (!same) throw DomainError("the two files do not share an underlying graph");
  out << (signatures_equivalent(a, a.signature(), sb) ? "equivalent" : "not equivalent") << "\n";
  return kExitOk;
}

int cmd_resign(const Options& o, std::ostream& out) {
  const SignedGraph g = read_graph_file(o.graph);
  std::vector<VertexId> at;
  for (const std::string& name : o.at) at.push_back(g.vertex(name));
  const std::string text = format_graph(g.with_signature(resign(g, g.signature(), at)));
  if (o.output.empty()) {
    out << text;
  } else {
    write_text(o.output, text);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge colourings of signed multigraphs"};
  app.name("sgcolor");
  app.require_subcommand(1);
  Options o;

  auto* color = app.add_subcommand("color", "Colour the edges and print the colouring as JSON");
  color->add_option("graph", o.graph, "Graph file (.sg)")->required();
  color->add_option("--method", o.method, "shannon, koenig or auto")
      ->check(CLI::IsMember({"shannon", "koenig", "auto"}));
  color->add_option("--dot", o.dot_path, "Also write a Graphviz rendering here");
  color->add_option("--seed", o.seed, "Accepted for reproducible scripts; the pipelines are deterministic");

  auto* verify = app.add_subcommand("verify", "Check a colouring document against a graph");
  verify->add_option("graph", o.graph, "Graph file (.sg)")->required();
  verify->add_option("coloring", o.second, "Colouring JSON")->required();

  auto* chi = app.add_subcommand("chi", "Exact chromatic index by exhaustive search");
  chi->add_option("graph", o.graph, "Graph file (.sg)")->required();
  chi->add_option("--max-edges", o.max_edges, "Edge guard");
  chi->add_option("--max-vertices", o.max_vertices, "Vertex guard (non-isolated vertices)");

  auto* layers = app.add_subcommand("layers", "Split the edges into ceil(Delta/2) layers");
  layers->add_option("graph", o.graph, "Graph file (.sg)")->required();
  layers->add_flag("--json", o.json, "Print JSON instead of one line per layer");

  auto* balance = app.add_subcommand("balance", "Decide balance; print a potential or a negative circuit");
  balance->add_option("graph", o.graph, "Graph file (.sg)")->required();

  auto* equiv = app.add_subcommand("equiv", "Compare the signatures of two files on one graph");
  equiv->add_option("graph1", o.graph, "Graph file (.sg)")->required();
  equiv->add_option("graph2", o.second, "Graph file (.sg)")->required();

  auto* resign_cmd = app.add_subcommand("resign", "Resign at a vertex set and write the graph");
  resign_cmd->add_option("graph", o.graph, "Graph file (.sg)")->required();
  resign_cmd->add_option("--at", o.at, "Vertices, comma separated")->delimiter(',')->required();
  resign_cmd->add_option("-o,--output", o.output, "Output path (stdout if omitted)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (color->parsed()) return cmd_color(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (chi->parsed()) return cmd_chi(o, out);
    if (layers->parsed()) return cmd_layers(o, out);
    if (balance->parsed()) return cmd_balance(o, out);
    if (equiv->parsed()) return cmd_equiv(o, out);
    if (resign_cmd->parsed()) return cmd_resign(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace sgcolor
