#include "hyperspec/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hyperspec {

long long binom(long long a, long long b) {
    if (b < 0 || b > a || a < 0)
        return 0;
    b = std::min(b, a - b);
    long long r = 1;
    for (long long i = 1; i <= b; ++i)
        r = r * (a - b + i) / i; // exact: r always holds C(a-b+i, i)
    return r;
}

VertexLayout nsm_layout(int n, int m) {
    VertexLayout l;
    l.push_back({"originals", 0, n});
    for (int i = 1; i <= m; ++i)
        l.push_back({"copy" + std::to_string(i), i * n, (i + 1) * n});
    return l;
}

VertexLayout join_layout(int n1, int n2) {
    return {{"g1-originals", 0, n1},
            {"g1-split", n1, 2 * n1},
            {"g2", 2 * n1, 2 * n1 + n2}};
}

namespace {

void check_valid(const Hypergraph& h, const char* op) {
    if (auto err = validate(h))
        throw std::invalid_argument(std::string(op) + ": invalid input: " + *err);
}

std::vector<int> sorted_edge(std::vector<int> e) {
    std::sort(e.begin(), e.end());
    return e;
}

// All (k-1)-subsets of the given vertex pool, ascending.
std::vector<std::vector<int>> subsets_of(const std::vector<int>& pool, int size) {
    std::vector<std::vector<int>> out;
    if (size < 0 || size > (int)pool.size())
        return out;
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i)
        idx[i] = i;
    while (true) {
        std::vector<int> cur(size);
        for (int i = 0; i < size; ++i)
            cur[i] = pool[idx[i]];
        out.push_back(std::move(cur));
        int i = size - 1;
        while (i >= 0 && idx[i] == (int)pool.size() - size + i)
            --i;
        if (i < 0)
            break;
        ++idx[i];
        for (int j = i + 1; j < size; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return out;
}

} // namespace

Hypergraph ns_m(const Hypergraph& h, int m) {
    check_valid(h, "ns_m");
    if (m < 1)
        throw std::invalid_argument("ns_m: m must be at least 1");
    std::vector<std::vector<int>> edges = h.edges;
    for (const auto& e : h.edges)
        for (int vj : e) {
            std::vector<int> rest;
            for (int w : e)
                if (w != vj)
                    rest.push_back(w);
            for (int i = 1; i <= m; ++i) {
                std::vector<int> ne = rest;
                ne.push_back(i * h.n + vj);
                edges.push_back(sorted_edge(std::move(ne)));
            }
        }
    Hypergraph out = canonicalize(h.n * (m + 1), h.k, std::move(edges));
    if (out.edges.size() != (1 + (std::size_t)m * h.k) * h.edges.size())
        throw std::logic_error("ns_m: edge count does not match (1+mk)|E|");
    return out;
}

IntMatrix splitting_matrix(int m, int k) {
    IntMatrix mm(m + 1);
    mm.at(0, 0) = (std::int64_t)m * k - 2 * m + 1;
    for (int i = 1; i <= m; ++i)
        mm.at(0, i) = mm.at(i, 0) = 1;
    return mm;
}

IntMatrix ns_m_matrix(const IntMatrix& a, int m, int k) {
    if (m < 1)
        throw std::invalid_argument("ns_m_matrix: m must be at least 1");
    int n = a.order();
    IntMatrix b((m + 1) * n);
    std::int64_t head = (std::int64_t)m * k - 2 * m + 1;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            std::int64_t v = a.at(p, q);
            if (v == 0)
                continue;
            b.at(p, q) = head * v;
            for (int i = 1; i <= m; ++i) {
                b.at(p, i * n + q) = v;
                b.at(i * n + p, q) = v;
            }
        }
    return b;
}

Hypergraph nns(const Hypergraph& h) {
    check_valid(h, "nns");
    std::vector<std::vector<int>> edges = h.edges;
    std::set<std::vector<int>> edge_set(h.edges.begin(), h.edges.end());
    for (int i = 0; i < h.n; ++i) {
        std::vector<int> pool;
        for (int w = 0; w < h.n; ++w)
            if (w != i)
                pool.push_back(w);
        for (const auto& d : subsets_of(pool, h.k - 1)) {
            std::vector<int> cand = d;
            cand.push_back(i);
            std::sort(cand.begin(), cand.end());
            if (edge_set.count(cand))
                continue; // v_i neighbours D: not a non-neighbourhood edge
            std::vector<int> ne = d;
            ne.push_back(h.n + i);
            edges.push_back(std::move(ne)); // already sorted: u_i is largest
        }
    }
    return canonicalize(2 * h.n, h.k, std::move(edges));
}

IntMatrix nns_matrix(const IntMatrix& a, int n, int k) {
    if (k < 3)
        throw std::invalid_argument("nns_matrix: block formula requires k >= 3");
    if (a.order() != n)
        throw std::invalid_argument("nns_matrix: order mismatch");
    std::int64_t c_off = binom(n - 2, k - 2);
    std::int64_t c_diag = (std::int64_t)(n - 2) * binom(n - 3, k - 3);
    IntMatrix b(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i != j) {
                b.at(i, j) = c_diag - (k - 3) * a.at(i, j);
                b.at(i, n + j) = b.at(n + j, i) = c_off - a.at(i, j);
            }
        }
    return b;
}

namespace {

Hypergraph join(const Hypergraph& h1, const Hypergraph& h2, bool from_split) {
    check_valid(h1, "join");
    check_valid(h2, "join");
    if (h1.k != h2.k)
        throw std::invalid_argument("join: uniformities differ (" +
                                    std::to_string(h1.k) + " vs " +
                                    std::to_string(h2.k) + ")");
    int k = h1.k;
    int n1 = h1.n, n2 = h2.n;
    Hypergraph split = ns_m(h1, 1); // occupies [0, 2n1) with the join layout
    std::vector<std::vector<int>> edges = split.edges;
    for (const auto& e : h2.edges) {
        std::vector<int> ne = e;
        for (int& v : ne)
            v += 2 * n1;
        edges.push_back(std::move(ne));
    }
    std::vector<int> pool;
    for (int v = 0; v < n2; ++v)
        pool.push_back(2 * n1 + v);
    const auto dsets = subsets_of(pool, k - 1);
    int base = from_split ? n1 : 0;
    for (int v = 0; v < n1; ++v)
        for (const auto& d : dsets) {
            std::vector<int> ne = d;
            ne.push_back(base + v);
            std::sort(ne.begin(), ne.end());
            edges.push_back(std::move(ne));
        }
    std::size_t expected = edges.size();
    Hypergraph out = canonicalize(2 * n1 + n2, k, std::move(edges));
    if (out.edges.size() != expected)
        throw std::logic_error("join: coupling edge collided with an existing edge");
    return out;
}

} // namespace

Hypergraph v_join(const Hypergraph& h1, const Hypergraph& h2) {
    return join(h1, h2, false);
}

Hypergraph s_join(const Hypergraph& h1, const Hypergraph& h2) {
    return join(h1, h2, true);
}

namespace {

IntMatrix join_matrix(const IntMatrix& a1, const IntMatrix& a2, int n1, int n2,
                      int k, bool from_split) {
    if (a1.order() != n1 || a2.order() != n2)
        throw std::invalid_argument("join_matrix: order mismatch");
    std::int64_t cpl = binom(n2 - 1, k - 2);
    std::int64_t corr = binom(n2 - 2, k - 3) * n1;
    IntMatrix b(2 * n1 + n2);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) {
            std::int64_t v = a1.at(i, j);
            if (v == 0)
                continue;
            b.at(i, j) = (k - 1) * v;
            b.at(i, n1 + j) = b.at(n1 + i, j) = v;
        }
    int coupled = from_split ? n1 : 0; // which block row carries the J coupling
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j)
            b.at(coupled + i, 2 * n1 + j) = b.at(2 * n1 + j, coupled + i) = cpl;
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j)
            if (i != j)
                b.at(2 * n1 + i, 2 * n1 + j) = a2.at(i, j) + corr;
    return b;
}

} // namespace

IntMatrix vjoin_matrix(const IntMatrix& a1, const IntMatrix& a2, int n1, int n2, int k) {
    return join_matrix(a1, a2, n1, n2, k, false);
}

IntMatrix sjoin_matrix(const IntMatrix& a1, const IntMatrix& a2, int n1, int n2, int k) {
    return join_matrix(a1, a2, n1, n2, k, true);
}

} // namespace hyperspec
