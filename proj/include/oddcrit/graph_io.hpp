#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "oddcrit/graph.hpp"

namespace oddcrit {

// graph6: N(n) header followed by the upper triangle, column by column, 6 bits per byte + 63.
// An optional ">>graph6<<" prefix and trailing newline are accepted. Throws ParseError.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// One "u v" pair per line, 0-indexed; '#' starts a comment. Order is the largest index + 1.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// Picks graph6 or edge list from the first significant byte.
Graph parse_graph(std::string_view text);

Graph read_graph_file(const std::string& path);

struct NamedGraph {
    std::string id;
    Graph graph;
};

// A corpus file holds one graph6 string per line ('#' comments and blank lines skipped), or a
// single edge list. Ids are "line:<number>".
std::vector<NamedGraph> parse_corpus(std::string_view text);
std::vector<NamedGraph> read_corpus_file(const std::string& path);

}  // namespace oddcrit
