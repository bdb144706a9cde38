#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hyperspec {

// A k-uniform hypergraph on vertices 0..n-1.  Edges are strictly increasing
// k-tuples and the edge list is kept sorted lexicographically with no
// duplicates (canonical form).  Use validate() to check an instance that was
// assembled by hand.
struct Hypergraph {
    int n = 0;
    int k = 2;
    std::vector<std::vector<int>> edges;

    bool operator==(const Hypergraph&) const = default;
};

// Returns std::nullopt if h is well-formed, otherwise a human-readable
// description of the first violation.
std::optional<std::string> validate(const Hypergraph& h);

// Sorts each edge and the edge list, drops duplicate edges.  Throws
// std::invalid_argument if the result still fails validate() (bad ranges,
// repeated vertex inside an edge, ...).
Hypergraph canonicalize(int n, int k, std::vector<std::vector<int>> edges);

struct DegreeProfile {
    std::vector<int> degrees;          // indexed by vertex
    std::optional<int> regular_degree; // set iff all degrees are equal
};

DegreeProfile degree_profile(const Hypergraph& h);

// Neighbourhood test: v N D holds iff {v} ∪ D is an edge and v ∉ D.
// D must be a (k-1)-subset of the vertex set; throws otherwise.
bool is_neighbor(const Hypergraph& h, int v, const std::vector<int>& d);

// K_n^k: all k-subsets of an n-set.  Requires 2 <= k <= n.
Hypergraph complete_hypergraph(int n, int k);

// Named 3-uniform test instances (2-regular on 6 vertices, and the
// 4-vertex graph with two overlapping edges).
Hypergraph fig3();
Hypergraph fig2a();

// All (k,r)-regular k-uniform hypergraphs on n labelled vertices, in
// lexicographic edge-list order.  cap == 0 means unlimited; otherwise the
// search stops after cap results.  Throws if n*r is not divisible by k.
std::vector<Hypergraph> enumerate_regular(int n, int k, int r, std::size_t cap = 0);

struct IsomorphismResult {
    bool isomorphic = false;
    std::vector<int> mapping; // image of each vertex of the first graph
};

IsomorphismResult are_isomorphic(const Hypergraph& a, const Hypergraph& b);

// Applies a vertex relabelling and re-canonicalizes.  perm must be a
// permutation of 0..n-1; vertex v becomes perm[v].
Hypergraph relabel(const Hypergraph& h, const std::vector<int>& perm);

} // namespace hyperspec
