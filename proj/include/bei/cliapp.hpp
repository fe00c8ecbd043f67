#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

// Graph file format: first line "n", then one "u v" edge per line. Blank
// lines and lines starting with '#' are ignored. parse(print(g)) == g.
Graph parse_graph_file(std::istream& in);
Graph read_graph_file(const std::string& path);
std::string print_graph_file(const Graph& g);

// Command-line front end. args excludes the program name. Writes the report
// to out, diagnostics to err. Exit code: 0 success or agreement, 1 usage,
// parse, or unsupported input, 2 verified disagreement.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bei
