#include "hyperspec/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hyperspec {

std::optional<std::string> validate(const Hypergraph& h) {
    if (h.k < 2)
        return "k must be at least 2, got " + std::to_string(h.k);
    if (h.n < 0)
        return "vertex count must be non-negative, got " + std::to_string(h.n);
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        const auto& e = h.edges[i];
        if ((int)e.size() != h.k)
            return "edge " + std::to_string(i) + " has " + std::to_string(e.size()) +
                   " vertices, expected " + std::to_string(h.k);
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] < 0 || e[j] >= h.n)
                return "edge " + std::to_string(i) + " contains vertex " +
                       std::to_string(e[j]) + " outside 0.." + std::to_string(h.n - 1);
            if (j > 0 && e[j] <= e[j - 1])
                return "edge " + std::to_string(i) + " is not strictly increasing";
        }
        if (i > 0 && !(h.edges[i - 1] < e))
            return "edge list is not sorted (or has a duplicate) at position " +
                   std::to_string(i);
    }
    return std::nullopt;
}

Hypergraph canonicalize(int n, int k, std::vector<std::vector<int>> edges) {
    for (auto& e : edges)
        std::sort(e.begin(), e.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Hypergraph h{n, k, std::move(edges)};
    if (auto err = validate(h))
        throw std::invalid_argument("canonicalize: " + *err);
    return h;
}

DegreeProfile degree_profile(const Hypergraph& h) {
    DegreeProfile p;
    p.degrees.assign(h.n, 0);
    for (const auto& e : h.edges)
        for (int v : e)
            ++p.degrees[v];
    if (h.n > 0 &&
        std::all_of(p.degrees.begin(), p.degrees.end(),
                    [&](int d) { return d == p.degrees[0]; }))
        p.regular_degree = p.degrees[0];
    return p;
}

bool is_neighbor(const Hypergraph& h, int v, const std::vector<int>& d) {
    if ((int)d.size() != h.k - 1)
        throw std::invalid_argument("is_neighbor: D must have exactly k-1 vertices");
    if (v < 0 || v >= h.n)
        throw std::invalid_argument("is_neighbor: vertex out of range");
    std::vector<int> e(d);
    for (int u : e)
        if (u < 0 || u >= h.n)
            throw std::invalid_argument("is_neighbor: D contains a vertex out of range");
    if (std::find(e.begin(), e.end(), v) != e.end())
        return false; // v N D requires v ∉ D
    e.push_back(v);
    std::sort(e.begin(), e.end());
    return std::binary_search(h.edges.begin(), h.edges.end(), e);
}

namespace {

// All k-subsets of 0..n-1 in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i)
        cur[i] = i;
    if (k > n)
        return out;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

} // namespace

Hypergraph complete_hypergraph(int n, int k) {
    if (k < 2 || k > n)
        throw std::invalid_argument("complete_hypergraph: need 2 <= k <= n");
    return Hypergraph{n, k, k_subsets(n, k)};
}

Hypergraph fig3() {
    return Hypergraph{6, 3, {{0, 1, 2}, {0, 1, 3}, {2, 4, 5}, {3, 4, 5}}};
}

Hypergraph fig2a() {
    return Hypergraph{4, 3, {{0, 1, 2}, {1, 2, 3}}};
}

namespace {

struct RegularSearch {
    int n, k, r;
    std::size_t target_edges;
    std::size_t cap;
    std::vector<std::vector<int>> subsets;
    std::vector<int> last_with; // last subset index containing vertex v
    std::vector<int> degree;
    std::vector<std::vector<int>> chosen;
    std::vector<Hypergraph>* out;

    bool full() const { return cap != 0 && out->size() >= cap; }

    // Extends the current partial edge list with subsets of index >= start.
    void dfs(std::size_t start) {
        if (full())
            return;
        if (chosen.size() == target_edges) {
            // Degrees sum to k*target = n*r and none exceeds r, so all equal r.
            out->push_back(Hypergraph{n, k, chosen});
            return;
        }
        int vmin = -1;
        for (int v = 0; v < n; ++v)
            if (degree[v] < r) {
                vmin = v;
                break;
            }
        if (vmin == -1)
            return; // saturated but short of edges: dead end
        // Every remaining edge has index >= start; vmin must still be coverable.
        std::size_t stop = (std::size_t)last_with[vmin] + 1;
        for (std::size_t i = start; i < stop && !full(); ++i) {
            const auto& e = subsets[i];
            bool ok = true;
            for (int v : e)
                if (degree[v] == r) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            for (int v : e)
                ++degree[v];
            chosen.push_back(e);
            dfs(i + 1);
            chosen.pop_back();
            for (int v : e)
                --degree[v];
        }
    }
};

} // namespace

std::vector<Hypergraph> enumerate_regular(int n, int k, int r, std::size_t cap) {
    if (k < 2 || k > n)
        throw std::invalid_argument("enumerate_regular: need 2 <= k <= n");
    if (r < 1)
        throw std::invalid_argument("enumerate_regular: need r >= 1");
    if ((long long)n * r % k != 0)
        throw std::invalid_argument(
            "enumerate_regular: no (" + std::to_string(k) + "," + std::to_string(r) +
            ")-regular hypergraph on " + std::to_string(n) + " vertices (k does not divide n*r)");
    std::vector<Hypergraph> out;
    RegularSearch s;
    s.n = n;
    s.k = k;
    s.r = r;
    s.target_edges = (std::size_t)((long long)n * r / k);
    s.cap = cap;
    s.subsets = k_subsets(n, k);
    s.last_with.assign(n, -1);
    for (std::size_t i = 0; i < s.subsets.size(); ++i)
        for (int v : s.subsets[i])
            s.last_with[v] = (int)i;
    s.degree.assign(n, 0);
    s.out = &out;
    s.dfs(0);
    return out;
}

Hypergraph relabel(const Hypergraph& h, const std::vector<int>& perm) {
    if ((int)perm.size() != h.n)
        throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<bool> seen(h.n, false);
    for (int p : perm) {
        if (p < 0 || p >= h.n || seen[p])
            throw std::invalid_argument("relabel: not a permutation");
        seen[p] = true;
    }
    std::vector<std::vector<int>> edges = h.edges;
    for (auto& e : edges)
        for (int& v : e)
            v = perm[v];
    return canonicalize(h.n, h.k, std::move(edges));
}

namespace {

struct IsoSearch {
    const Hypergraph *a, *b;
    std::vector<std::vector<int>> coA, coB; // pairwise codegrees
    std::vector<int> degA, degB;
    std::vector<int> order;   // vertices of a, most-constrained first
    std::vector<int> mapping; // partial map a -> b, -1 unset
    std::vector<bool> used;
    std::set<std::vector<int>> edgesB;

    bool extend(std::size_t pos) {
        if (pos == order.size())
            return check_edges();
        int v = order[pos];
        for (int w = 0; w < b->n; ++w) {
            if (used[w] || degA[v] != degB[w])
                continue;
            bool ok = true;
            for (std::size_t q = 0; q < pos && ok; ++q) {
                int u = order[q];
                ok = coA[v][u] == coB[w][mapping[u]];
            }
            if (!ok)
                continue;
            mapping[v] = w;
            used[w] = true;
            if (extend(pos + 1))
                return true;
            used[w] = false;
            mapping[v] = -1;
        }
        return false;
    }

    // Codegree agreement does not pin down a hypergraph for k >= 3, so the
    // full edge sets are compared under the candidate bijection.
    bool check_edges() const {
        for (const auto& e : a->edges) {
            std::vector<int> img(e);
            for (int& v : img)
                v = mapping[v];
            std::sort(img.begin(), img.end());
            if (!edgesB.count(img))
                return false;
        }
        return true;
    }
};

std::vector<std::vector<int>> codegrees(const Hypergraph& h) {
    std::vector<std::vector<int>> co(h.n, std::vector<int>(h.n, 0));
    for (const auto& e : h.edges)
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                ++co[e[i]][e[j]];
                ++co[e[j]][e[i]];
            }
    return co;
}

} // namespace

IsomorphismResult are_isomorphic(const Hypergraph& a, const Hypergraph& b) {
    IsomorphismResult res;
    if (a.n != b.n || a.k != b.k || a.edges.size() != b.edges.size())
        return res;
    if (a.n == 0) {
        res.isomorphic = true;
        return res;
    }
    IsoSearch s;
    s.a = &a;
    s.b = &b;
    s.degA = degree_profile(a).degrees;
    s.degB = degree_profile(b).degrees;
    {
        auto da = s.degA, db = s.degB;
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        if (da != db)
            return res;
    }
    s.coA = codegrees(a);
    s.coB = codegrees(b);
    {
        std::vector<int> ca, cb;
        for (int i = 0; i < a.n; ++i)
            for (int j = i + 1; j < a.n; ++j) {
                ca.push_back(s.coA[i][j]);
                cb.push_back(s.coB[i][j]);
            }
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        if (ca != cb)
            return res;
    }
    s.order.resize(a.n);
    for (int i = 0; i < a.n; ++i)
        s.order[i] = i;
    // Rare degrees first makes the backtracking cut early.
    std::vector<int> freq(*std::max_element(s.degA.begin(), s.degA.end()) + 1, 0);
    for (int d : s.degA)
        ++freq[d];
    std::stable_sort(s.order.begin(), s.order.end(), [&](int x, int y) {
        if (freq[s.degA[x]] != freq[s.degA[y]])
            return freq[s.degA[x]] < freq[s.degA[y]];
        return s.degA[x] > s.degA[y];
    });
    s.mapping.assign(a.n, -1);
    s.used.assign(b.n, false);
    s.edgesB = std::set<std::vector<int>>(b.edges.begin(), b.edges.end());
    if (s.extend(0)) {
        res.isomorphic = true;
        res.mapping = s.mapping;
    }
    return res;
}

} // namespace hyperspec
