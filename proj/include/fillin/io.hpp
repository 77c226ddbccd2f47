#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fillin/graph.hpp"

namespace fillin {

// A parsed input file: the graph plus the optional "---" section, which
// carries either extra edge pairs (sandwich) or "c vertex color" lines.
struct ParsedInput {
    Graph graph;
    bool dimacs = false;
    bool has_section = false;
    std::vector<EdgePair> section_pairs;                // internal ids
    std::vector<std::pair<int, long long>> section_colors; // (vertex, color)
};

// Edge-list format ("n m" header, "u v" lines, 0-based, '#' comments) or
// DIMACS ("p edge n m", "e u v" lines, 1-based), auto-detected.
Graph parse_graph(const std::string& text);
ParsedInput parse_input(const std::string& text);

std::string serialize_graph(const Graph& g);

struct RunReport {
    std::string answer; // YES or NO
    int k = 0;
    std::vector<std::pair<long long, long long>> fill; // original labels
    std::map<std::string, long long> stats;
};

std::string report_to_json(const RunReport& r);
std::string report_to_text(const RunReport& r);

// Command-line entry point; returns the process exit code
// (0 YES/success, 1 NO, 2 usage or parse error, 3 internal failure).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fillin
