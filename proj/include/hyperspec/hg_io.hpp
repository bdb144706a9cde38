#pragma once

#include "hyperspec/hypergraph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperspec {

// Parse error for the hypergraph text format; line is 1-based.
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
          line(line_) {}
};

// Text format: first data line "n k", then one edge per line as k
// space-separated ascending vertex indices (0-based), lexicographically
// sorted.  Lines whose first non-blank character is '#' are comments.
Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path); // "-" reads stdin

// Named vertex ranges of a constructed hypergraph, [begin, end).
struct VertexRange {
    std::string name;
    int begin = 0;
    int end = 0;
};
using VertexLayout = std::vector<VertexRange>;

// Writes canonical text form; layout ranges (if any) become leading
// "# <name> <begin>..<end>" comments.  Output always ends with a newline.
void write_hypergraph(std::ostream& out, const Hypergraph& h,
                      const VertexLayout& layout = {});
void write_hypergraph_file(const std::string& path, const Hypergraph& h,
                           const VertexLayout& layout = {}); // "-" writes stdout

std::string to_string(const Hypergraph& h, const VertexLayout& layout = {});

} // namespace hyperspec
