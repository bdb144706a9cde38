#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperspec/hg_io.hpp"
#include "hyperspec/hypergraph.hpp"

#include <algorithm>
#include <sstream>

using namespace hyperspec;

TEST_CASE("validate accepts canonical hypergraphs") {
    CHECK(!validate(fig3()));
    CHECK(!validate(fig2a()));
    CHECK(!validate(complete_hypergraph(7, 4)));
    CHECK(!validate(Hypergraph{0, 2, {}}));
}

TEST_CASE("validate rejects malformed hypergraphs") {
    CHECK(validate(Hypergraph{3, 1, {}}));                         // k too small
    CHECK(validate(Hypergraph{3, 3, {{0, 1, 3}}}));                // vertex range
    CHECK(validate(Hypergraph{4, 3, {{0, 2, 1}}}));                // unsorted edge
    CHECK(validate(Hypergraph{4, 3, {{0, 1, 1}}}));                // repeated vertex
    CHECK(validate(Hypergraph{4, 3, {{0, 1, 2}, {0, 1, 2}}}));     // duplicate edge
    CHECK(validate(Hypergraph{4, 3, {{1, 2, 3}, {0, 1, 2}}}));     // unsorted list
    CHECK(validate(Hypergraph{4, 3, {{0, 1}}}));                   // wrong edge size
}

TEST_CASE("canonicalize sorts and deduplicates") {
    Hypergraph h = canonicalize(4, 3, {{2, 1, 0}, {3, 2, 1}, {0, 1, 2}});
    CHECK(h == fig2a());
    CHECK_THROWS_AS(canonicalize(3, 3, {{0, 1, 5}}), std::invalid_argument);
}

TEST_CASE("degree profile and regularity") {
    auto p3 = degree_profile(fig3());
    CHECK(p3.degrees == std::vector<int>{2, 2, 2, 2, 2, 2});
    REQUIRE(p3.regular_degree);
    CHECK(*p3.regular_degree == 2);

    auto p2a = degree_profile(fig2a());
    CHECK(p2a.degrees == std::vector<int>{1, 2, 2, 1});
    CHECK(!p2a.regular_degree);

    // complete(n,k) is (k, C(n-1,k-1))-regular
    auto pk = degree_profile(complete_hypergraph(5, 3));
    REQUIRE(pk.regular_degree);
    CHECK(*pk.regular_degree == 6);
}

TEST_CASE("neighbour relation") {
    Hypergraph h = fig3();
    CHECK(is_neighbor(h, 0, {1, 2}));
    CHECK(is_neighbor(h, 2, {0, 1}));
    CHECK(!is_neighbor(h, 0, {4, 5}));
    CHECK(!is_neighbor(h, 0, {0, 1}));      // v ∈ D is never a neighbour
    CHECK(!is_neighbor(h, 2, {1, 2}));
    CHECK_THROWS_AS(is_neighbor(h, 0, {1}), std::invalid_argument);
    CHECK_THROWS_AS(is_neighbor(h, 0, {1, 9}), std::invalid_argument);
    CHECK_THROWS_AS(is_neighbor(h, -1, {1, 2}), std::invalid_argument);
}

TEST_CASE("complete hypergraphs") {
    CHECK(complete_hypergraph(3, 3).edges == std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(complete_hypergraph(4, 3).edges.size() == 4);
    CHECK(complete_hypergraph(7, 4).edges.size() == 35);
    CHECK_THROWS_AS(complete_hypergraph(2, 3), std::invalid_argument);
}

TEST_CASE("regular enumeration counts and order") {
    CHECK(enumerate_regular(3, 3, 1).size() == 1);
    CHECK(enumerate_regular(3, 3, 1)[0] == complete_hypergraph(3, 3));
    CHECK(enumerate_regular(4, 3, 3).size() == 1);
    CHECK(enumerate_regular(4, 3, 3)[0] == complete_hypergraph(4, 3));

    auto all = enumerate_regular(6, 3, 2);
    CHECK(all.size() == 75);
    for (const auto& h : all) {
        CHECK(!validate(h));
        CHECK(h.edges.size() == 4);
        auto prof = degree_profile(h);
        REQUIRE(prof.regular_degree);
        CHECK(*prof.regular_degree == 2);
    }
    CHECK(std::is_sorted(all.begin(), all.end(),
                         [](const Hypergraph& a, const Hypergraph& b) {
                             return a.edges < b.edges;
                         }));
    CHECK(std::find(all.begin(), all.end(), fig3()) != all.end());

    CHECK(enumerate_regular(6, 3, 2, 10).size() == 10);
    CHECK_THROWS_AS(enumerate_regular(5, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_regular(6, 3, 0), std::invalid_argument);
}

TEST_CASE("isomorphism with witness") {
    Hypergraph h = fig3();
    std::vector<int> perm{5, 4, 3, 2, 1, 0};
    Hypergraph g = relabel(h, perm);
    auto res = are_isomorphic(h, g);
    REQUIRE(res.isomorphic);
    // the witness really maps edges of h onto edges of g
    CHECK(relabel(h, res.mapping) == g);

    CHECK(are_isomorphic(fig2a(), canonicalize(4, 3, {{0, 1, 2}, {0, 1, 3}}))
              .isomorphic);
    CHECK(!are_isomorphic(fig3(), complete_hypergraph(6, 3)).isomorphic);
    CHECK(!are_isomorphic(canonicalize(6, 3, {{0, 1, 2}, {3, 4, 5}}),
                          canonicalize(6, 3, {{0, 1, 2}, {0, 3, 4}}))
               .isomorphic);
}

TEST_CASE("relabel validates its permutation") {
    CHECK_THROWS_AS(relabel(fig3(), {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(relabel(fig3(), {0, 0, 1, 2, 3, 4}), std::invalid_argument);
    CHECK(relabel(fig3(), {0, 1, 2, 3, 4, 5}) == fig3());
}

TEST_CASE("text format writing") {
    CHECK(to_string(fig3()) == "6 3\n0 1 2\n0 1 3\n2 4 5\n3 4 5\n");
    VertexLayout layout{{"originals", 0, 4}, {"split", 4, 8}};
    std::string s = to_string(fig2a(), layout);
    CHECK(s == "# originals 0..4\n# split 4..8\n4 3\n0 1 2\n1 2 3\n");
}

TEST_CASE("text format parsing and round trip") {
    std::istringstream in("# a comment\n\n6 3\n0 1 2\n0 1 3\n2 4 5\n3 4 5\n");
    CHECK(read_hypergraph(in) == fig3());

    for (const Hypergraph& h :
         {fig3(), fig2a(), complete_hypergraph(6, 4), Hypergraph{3, 3, {}}}) {
        std::istringstream back(to_string(h));
        CHECK(read_hypergraph(back) == h);
    }
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            read_hypergraph(in);
        } catch (const parse_error& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("") == 1);                                 // missing header
    CHECK(line_of("6\n") == 1);                              // bad header
    CHECK(line_of("x 3\n") == 1);                            // non-integer
    CHECK(line_of("6 3\n0 1\n") == 2);                       // wrong edge size
    CHECK(line_of("6 3\n0 1 2\n0 1 9\n") == 3);              // vertex range
    CHECK(line_of("# c\n6 3\n2 1 0\n") == 3);                // not increasing
    CHECK(line_of("6 3\n0 1 3\n0 1 2\n") == 3);              // unsorted list
    CHECK(line_of("6 3\n0 1 2\n0 1 2\n") == 3);              // duplicate
    CHECK(line_of("6 1\n") == 1);                            // k < 2
}
