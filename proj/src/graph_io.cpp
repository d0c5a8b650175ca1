#include "sgcolor/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "sgcolor/errors.hpp"

namespace sgcolor {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  return tokens;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

SignedGraph parse_graph(std::string_view text) {
  SignedGraph g;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    const std::string& kind = tokens.front();
    if (kind == "v") {
      if (tokens.size() != 2) fail(line_no, "expected 'v <id>'");
      g.add_vertex(tokens[1]);
    } else if (kind == "e") {
      if (tokens.size() < 3) fail(line_no, "edge record is missing an endpoint");
      if (tokens.size() < 4) fail(line_no, "edge record is missing its sign");
      if (tokens.size() > 4) fail(line_no, "trailing tokens after edge record");
      Sign sign;
      if (tokens[3] == "+") {
        sign = Sign::kPositive;
      } else if (tokens[3] == "-") {
        sign = Sign::kNegative;
      } else {
        fail(line_no, "unknown sign token '" + tokens[3] + "' (expected + or -)");
      }
      g.add_edge(tokens[1], tokens[2], sign);
    } else {
      fail(line_no, "unknown record '" + kind + "'");
    }
  }
  return g;
}

SignedGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open graph file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_graph(const SignedGraph& g) {
  std::ostringstream out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out << "v " << g.vertex_name(v) << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << g.vertex_name(e.u) << ' ' << g.vertex_name(e.v) << ' ' << sign_token(e.sign)
        << '\n';
  }
  return out.str();
}

}  // namespace sgcolor
