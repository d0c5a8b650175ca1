#include "sgcolor/serialize.hpp"

#include <json.hpp>
#include <sstream>

#include "sgcolor/errors.hpp"

namespace sgcolor {

namespace {

using Json = nlohmann::ordered_json;

std::string sign_string(Sign s) { return std::string(1, sign_token(s)); }

Json edges_json(const SignedGraph& g, const Signature& sigma, const HalfEdgeColoring& col) {
  Json edges = Json::array();
  for (const auto& [id, halves] : col.colors) {
    const Edge& e = g.edge(id);
    edges.push_back({{"id", id},
                     {"u", g.vertex_name(e.u)},
                     {"v", g.vertex_name(e.v)},
                     {"sign", sign_string(sigma[id])},
                     {"colors", {halves[0].token(), halves[1].token()}}});
  }
  return edges;
}

Json palette_json(const Palette& p) {
  return {{"t", p.self_inverse}, {"k", p.pairs}, {"size", p.size()}};
}

Json names(const SignedGraph& g, std::span<const VertexId> vs) {
  Json out = Json::array();
  for (VertexId v : vs) out.push_back(g.vertex_name(v));
  return out;
}

}  // namespace

std::string coloring_to_json(const SignedGraph& g, const ColoringResult& result) {
  Json doc;
  doc["method"] = result.method;
  doc["palette"] = palette_json(result.coloring.palette);
  doc["resigned_at"] = names(g, result.resigned_at);
  doc["edges"] = edges_json(g, result.signature, result.coloring);
  doc["trace"] = result.trace;
  return doc.dump(2) + "\n";
}

std::string coloring_to_json(const SignedGraph& g, const Signature& sigma,
                             const HalfEdgeColoring& col) {
  Json doc;
  doc["palette"] = palette_json(col.palette);
  doc["resigned_at"] = Json::array();
  doc["edges"] = edges_json(g, sigma, col);
  return doc.dump(2) + "\n";
}

ColoringDocument parse_coloring_json(const SignedGraph& g, std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("coloring document: ") + e.what());
  }
  ColoringDocument out;
  try {
    const Json& palette = doc.at("palette");
    out.coloring.palette = {palette.at("t").get<std::uint32_t>(),
                            palette.at("k").get<std::uint32_t>()};
    if (doc.contains("resigned_at")) {
      for (const Json& name : doc.at("resigned_at")) {
        const auto v = g.find_vertex(name.get<std::string>());
        if (!v) throw ParseError("coloring document: unknown vertex " + name.dump());
        out.resigned_at.push_back(*v);
      }
    }
    for (const Json& rec : doc.at("edges")) {
      const auto id = rec.at("id").get<EdgeId>();
      const Json& colors = rec.at("colors");
      if (colors.size() != 2) throw ParseError("coloring document: edge needs two half colours");
      const HalfColors halves = {SymmetricColor::parse(colors[0].get<std::string>()),
                                 SymmetricColor::parse(colors[1].get<std::string>())};
      if (!out.coloring.colors.emplace(id, halves).second) {
        throw ParseError("coloring document: edge " + std::to_string(id) + " listed twice");
      }
      if (rec.contains("sign")) {
        const auto s = rec.at("sign").get<std::string>();
        if (s != "+" && s != "-") throw ParseError("coloring document: bad sign " + s);
        out.recorded_signs.push_back({id, s == "+" ? Sign::kPositive : Sign::kNegative});
      }
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("coloring document: ") + e.what());
  }
  return out;
}

std::string report_to_json(const SignedGraph& g, const ChromaticReport& report) {
  Json doc;
  doc["chi"] = report.chi;
  doc["chi0"] = report.chi0;
  doc["chi1"] = report.chi1;
  doc["max_degree"] = report.max_degree;
  doc["witness"] = {{"palette", palette_json(report.witness.palette)},
                    {"edges", edges_json(g, g.signature(), report.witness)}};
  return doc.dump(2) + "\n";
}

std::string layers_to_json(const LayerDecomposition& dec) {
  Json doc;
  doc["layers"] = dec.layers;
  return doc.dump(2) + "\n";
}

std::string coloring_to_dot(const SignedGraph& g, const Signature& sigma,
                            const HalfEdgeColoring& col) {
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  \"" << g.vertex_name(v) << "\";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  \"" << g.vertex_name(e.u) << "\" -- \"" << g.vertex_name(e.v) << "\" [";
    if (auto it = col.colors.find(e.id); it != col.colors.end()) {
      out << "taillabel=\"" << it->second[0].token() << "\", headlabel=\""
          << it->second[1].token() << "\", ";
    }
    out << "label=\"e" << e.id << "\"";
    if (sigma[e.id] == Sign::kNegative) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sgcolor
