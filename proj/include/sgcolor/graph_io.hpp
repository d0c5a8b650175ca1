#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sgcolor/graph.hpp"

namespace sgcolor {

/// Parses the line-oriented `.sg` format:
///
///     # comment
///     v <id>
///     e <u> <v> <+|->
///
/// Vertices are declared on first use; edge ids follow record order.
/// Throws ParseError with the offending line number.
SignedGraph parse_graph(std::string_view text);

SignedGraph read_graph_file(const std::filesystem::path& path);

/// Writes `g` back in `.sg` form: all vertices declared first, then edges in
/// id order.
std::string format_graph(const SignedGraph& g);

}  // namespace sgcolor
