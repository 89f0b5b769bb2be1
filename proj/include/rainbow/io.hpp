#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>

#include "rainbow/graph.hpp"
#include "rainbow/oriented.hpp"

namespace rainbow::io {

// Colored edge list:
//   n m
//   u v color      (m lines, u < v)
// Lines starting with '#' and blank lines are skipped. Wrong m, u >= n,
// u >= v and duplicate pairs are hard errors (ParseError carries the line).
EdgeColoredGraph parse_edgelist(std::string_view text);
std::string to_edgelist(const EdgeColoredGraph& g);

// {"n": int, "edges": [[u, v, color], ...]} with the same validation.
EdgeColoredGraph parse_json(std::string_view text);
std::string to_json(const EdgeColoredGraph& g);

/// Dispatches on the first non-blank character: '{' means JSON.
EdgeColoredGraph parse_graph(std::string_view text);

// Digraph text: "n a" then a lines "u v" for arc u -> v. Digons are rejected.
OrientedGraph parse_digraph(std::string_view text);
std::string to_digraph_text(const OrientedGraph& d);

/// Fixed export palette; color with palette rank r is drawn as kDotPalette[r % size].
inline constexpr std::array<std::string_view, 12> kDotPalette = {
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
    "#f781bf", "#999999", "#1b9e77", "#d95f02", "#7570b3", "#e7298a"};

std::string to_dot(const EdgeColoredGraph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace rainbow::io
