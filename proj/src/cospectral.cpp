#include "hyperspec/cospectral.hpp"

#include "hyperspec/constructions.hpp"
#include "hyperspec/spectral.hpp"

#include <map>
#include <stdexcept>

namespace hyperspec {

namespace {

bool products_cospectral(const Hypergraph& h1, const Hypergraph& h2) {
    Hypergraph f = complete_hypergraph(h1.k, h1.k);
    const std::pair<Hypergraph, Hypergraph> products[] = {
        {v_join(h1, f), v_join(h2, f)},
        {s_join(h1, f), s_join(h2, f)},
        {v_join(f, h1), v_join(f, h2)},
        {s_join(f, h1), s_join(f, h2)},
    };
    for (const auto& [p, q] : products)
        if (!are_cospectral(adjacency_matrix(p), adjacency_matrix(q)))
            return false;
    return true;
}

} // namespace

CospectralCatalog search_cospectral(int n, int k, int r, const SearchOptions& opt) {
    CospectralCatalog cat;
    cat.n = n;
    cat.k = k;
    cat.r = r;
    cat.members = enumerate_regular(n, k, r, opt.cap);

    // Bucket by exact char poly, classes ordered by first member.
    std::map<std::vector<BigInt>, std::size_t> index;
    for (std::size_t i = 0; i < cat.members.size(); ++i) {
        CharPoly p = char_poly(adjacency_matrix(cat.members[i]));
        auto [it, fresh] = index.try_emplace(p.coeffs, cat.classes.size());
        if (fresh)
            cat.classes.push_back({std::move(p), {}});
        cat.classes[it->second].members.push_back(i);
    }
    std::sort(cat.classes.begin(), cat.classes.end(),
              [](const CospectralClass& a, const CospectralClass& b) {
                  return a.members.front() < b.members.front();
              });

    for (const auto& cls : cat.classes) {
        std::size_t emitted = 0;
        for (std::size_t x = 0; x < cls.members.size(); ++x) {
            for (std::size_t y = x + 1; y < cls.members.size(); ++y) {
                if (emitted >= opt.max_pairs_per_class)
                    break;
                std::size_t i = cls.members[x], j = cls.members[y];
                IsomorphismResult iso = are_isomorphic(cat.members[i], cat.members[j]);
                if (opt.require_nonisomorphic && iso.isomorphic)
                    continue;
                CospectralPair pair;
                pair.first = i;
                pair.second = j;
                pair.isomorphic = iso.isomorphic;
                pair.witness = iso.mapping;
                pair.products_verified =
                    opt.verify_products &&
                    products_cospectral(cat.members[i], cat.members[j]);
                cat.pairs.push_back(std::move(pair));
                ++emitted;
            }
            if (emitted >= opt.max_pairs_per_class)
                break;
        }
    }
    return cat;
}

std::vector<SingularEntry> singular_family(const Hypergraph& base, int m_max) {
    if (m_max < 2)
        throw std::invalid_argument("singular_family: m_max must be at least 2");
    if (auto err = validate(base))
        throw std::invalid_argument("singular_family: invalid base: " + *err);
    std::vector<SingularEntry> out;
    int eta = exact_nullity(adjacency_matrix(base));
    auto emit = [&out](std::string desc, Hypergraph g, int guaranteed) {
        SingularEntry e;
        e.description = std::move(desc);
        e.order = g.n;
        e.nullity = exact_nullity(adjacency_matrix(g));
        e.guaranteed = guaranteed;
        e.graph = std::move(g);
        out.push_back(std::move(e));
    };

    if (eta > 0)
        emit("ns(base)", ns_m(base, 1), 2 * eta);
    for (int m = 2; m <= m_max; ++m)
        emit("ns_" + std::to_string(m) + "(base)", ns_m(base, m),
             base.n * (m - 1) + 2 * eta);
    if (eta > 0 && degree_profile(base).regular_degree) {
        Hypergraph f = complete_hypergraph(base.k, base.k);
        emit("vjoin(base, complete(k,k))", v_join(base, f), 1);
        emit("sjoin(base, complete(k,k))", s_join(base, f), 1);
    }
    return out;
}

} // namespace hyperspec
