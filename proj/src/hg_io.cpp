#include "hyperspec/hg_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace hyperspec {

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r')
            continue;
        return c == '#';
    }
    return true;
}

std::vector<long long> parse_ints(const std::string& line, int lineno) {
    std::vector<long long> vals;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument(tok);
            vals.push_back(v);
        } catch (const std::exception&) {
            throw parse_error(lineno, "expected an integer, got '" + tok + "'");
        }
    }
    return vals;
}

} // namespace

Hypergraph read_hypergraph(std::istream& in) {
    std::string line;
    int lineno = 0;
    Hypergraph h;
    bool have_header = false;
    std::vector<std::vector<int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line))
            continue;
        auto vals = parse_ints(line, lineno);
        if (!have_header) {
            if (vals.size() != 2)
                throw parse_error(lineno, "header must be 'n k'");
            if (vals[0] < 0 || vals[0] > 1000000)
                throw parse_error(lineno, "vertex count out of range");
            if (vals[1] < 2 || vals[1] > 1000000)
                throw parse_error(lineno, "edge size k must be at least 2");
            h.n = (int)vals[0];
            h.k = (int)vals[1];
            have_header = true;
            continue;
        }
        if ((int)vals.size() != h.k)
            throw parse_error(lineno, "edge has " + std::to_string(vals.size()) +
                                          " vertices, expected " + std::to_string(h.k));
        std::vector<int> e;
        e.reserve(h.k);
        for (long long v : vals) {
            if (v < 0 || v >= h.n)
                throw parse_error(lineno, "vertex " + std::to_string(v) +
                                              " outside 0.." + std::to_string(h.n - 1));
            if (!e.empty() && v <= e.back())
                throw parse_error(lineno, "edge vertices must be strictly increasing");
            e.push_back((int)v);
        }
        if (!edges.empty() && !(edges.back() < e))
            throw parse_error(lineno, "edges must be lexicographically sorted and distinct");
        edges.push_back(std::move(e));
    }
    if (!have_header)
        throw parse_error(lineno == 0 ? 1 : lineno, "missing 'n k' header");
    h.edges = std::move(edges);
    if (auto err = validate(h))
        throw parse_error(lineno, *err); // unreachable given the checks above
    return h;
}

Hypergraph read_hypergraph_file(const std::string& path) {
    if (path == "-")
        return read_hypergraph(std::cin);
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h,
                      const VertexLayout& layout) {
    for (const auto& r : layout)
        out << "# " << r.name << " " << r.begin << ".." << r.end << "\n";
    out << h.n << " " << h.k << "\n";
    for (const auto& e : h.edges) {
        for (std::size_t i = 0; i < e.size(); ++i)
            out << (i ? " " : "") << e[i];
        out << "\n";
    }
}

void write_hypergraph_file(const std::string& path, const Hypergraph& h,
                           const VertexLayout& layout) {
    if (path == "-") {
        write_hypergraph(std::cout, h, layout);
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    write_hypergraph(out, h, layout);
}

std::string to_string(const Hypergraph& h, const VertexLayout& layout) {
    std::ostringstream ss;
    write_hypergraph(ss, h, layout);
    return ss.str();
}

} // namespace hyperspec
