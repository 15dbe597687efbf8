#pragma once

#include <rf/graph.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace rf {

// Edge list: "n m" then m lines "u v". Blank lines and '#' comments are skipped.
Graph read_edge_list(std::istream & in);
void write_edge_list(std::ostream & out, const Graph & g);

// graph6, one graph per line; sizes up to 258047.
Graph parse_graph6(std::string_view text, int line = 1);
std::string to_graph6(const Graph & g);
std::vector<Graph> read_graph6(std::istream & in);

// Edge list with a third column R or B; the host is the set of listed edges.
EdgeColoring read_coloring(std::istream & in);
void write_coloring(std::ostream & out, const EdgeColoring & c);

// {"source_n": s, "target_n": t, "image": [...]}
VertexMap read_json_map(std::istream & in);
void write_json_map(std::ostream & out, const VertexMap & f);

std::string read_file(const std::string & path);

// A readable file (graph6 if it ends in .g6, else edge list) or a named spec such as "cycle:5".
Graph load_graph(const std::string & path_or_spec);

} // namespace rf
