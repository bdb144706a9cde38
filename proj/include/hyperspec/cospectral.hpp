#pragma once

#include "hyperspec/exact.hpp"
#include "hyperspec/hypergraph.hpp"

#include <string>
#include <vector>

namespace hyperspec {

struct CospectralClass {
    CharPoly poly;
    std::vector<std::size_t> members; // indices into catalog.members
};

struct CospectralPair {
    std::size_t first = 0;
    std::size_t second = 0;
    bool isomorphic = false;
    std::vector<int> witness;      // vertex map when isomorphic
    bool products_verified = false; // join products exactly cospectral
};

struct CospectralCatalog {
    int n = 0, k = 0, r = 0;
    std::vector<Hypergraph> members; // lexicographic enumeration order
    std::vector<CospectralClass> classes;
    std::vector<CospectralPair> pairs;
};

struct SearchOptions {
    bool require_nonisomorphic = false;
    std::size_t cap = 0;                // enumeration cap; 0 = unlimited
    std::size_t max_pairs_per_class = 8; // emitted pairs per class (lex-first)
    bool verify_products = true;         // certify join products per pair
};

// Enumerates (k,r)-regular hypergraphs on n vertices, buckets them by exact
// characteristic polynomial, and emits cospectral pairs.  For every emitted
// pair the V- and S-join products against complete(k,k) (both orders) are
// certified exactly cospectral when verify_products is set.  Deterministic
// for fixed parameters.
CospectralCatalog search_cospectral(int n, int k, int r,
                                    const SearchOptions& opt = {});

struct SingularEntry {
    std::string description;
    Hypergraph graph;
    int order = 0;
    int nullity = 0;    // exact
    int guaranteed = 0; // certified lower bound from the closed forms
};

// Certified singular constructions from a base hypergraph: NS_m for
// m in [2, m_max] always; NS(base) and the joins with complete(k,k) when the
// base itself is singular (joins additionally need a regular base).
// Requires m_max >= 2.
std::vector<SingularEntry> singular_family(const Hypergraph& base, int m_max);

} // namespace hyperspec
