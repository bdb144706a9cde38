#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperspec/closed_forms.hpp"
#include "hyperspec/constructions.hpp"
#include "hyperspec/exact.hpp"

#include <cmath>

using namespace hyperspec;
using doctest::Approx;

namespace {

const double SQRT2 = std::sqrt(2.0);

Spectrum spec_of(const Hypergraph& h) { return eigenvalues(adjacency_matrix(h)); }

} // namespace

TEST_CASE("split factors satisfy their defining quadratic") {
    for (int m = 1; m <= 6; ++m)
        for (int k = 2; k <= 6; ++k) {
            SplitFactors f = SplitFactors::of(m, k);
            double b = m * k - 2 * m + 1;
            CHECK(f.nu1 + f.nu2 == Approx(b).epsilon(1e-12));
            CHECK(f.nu1 * f.nu2 == Approx(-m).epsilon(1e-12));
            CHECK(f.nu1 > 0.0);
            CHECK(f.nu2 < 0.0);
        }
    // m=1, k=3: x^2 - 2x - 1, roots 1 +- sqrt(2)
    SplitFactors f = SplitFactors::of(1, 3);
    CHECK(f.nu1 == Approx(1.0 + SQRT2).epsilon(1e-14));
    CHECK(f.nu2 == Approx(1.0 - SQRT2).epsilon(1e-14));
    CHECK_THROWS_AS(SplitFactors::of(0, 3), std::invalid_argument);
}

TEST_CASE("quadratic root solver") {
    auto r = real_quadratic_roots(-5.0, 6.0); // (x-2)(x-3)
    CHECK(r[0] == Approx(3.0).epsilon(1e-14));
    CHECK(r[1] == Approx(2.0).epsilon(1e-14));

    r = real_quadratic_roots(2.0, 1.0); // (x+1)^2
    CHECK(r[0] == Approx(-1.0).epsilon(1e-12));
    CHECK(r[1] == Approx(-1.0).epsilon(1e-12));

    // large-coefficient cancellation: x^2 - 1e8 x + 1, roots ~1e8 and ~1e-8
    r = real_quadratic_roots(-1e8, 1.0);
    CHECK(r[0] == Approx(1e8).epsilon(1e-12));
    CHECK(r[1] == Approx(1e-8).epsilon(1e-9));

    CHECK_THROWS_AS(real_quadratic_roots(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("cubic root solver") {
    // (x-1)(x-2)(x-3)
    auto r = real_cubic_roots(-6.0, 11.0, -6.0);
    CHECK(r[0] == Approx(3.0).epsilon(1e-12));
    CHECK(r[1] == Approx(2.0).epsilon(1e-12));
    CHECK(r[2] == Approx(1.0).epsilon(1e-12));

    // triple root (x-2)^3
    r = real_cubic_roots(-6.0, 12.0, -8.0);
    for (double x : r)
        CHECK(x == Approx(2.0).epsilon(1e-7));

    // x^3 - 12x^2 - 8x + 32: Vieta identities to 1e-9
    r = real_cubic_roots(-12.0, -8.0, 32.0);
    CHECK(r[0] + r[1] + r[2] == Approx(12.0).epsilon(1e-9));
    CHECK(r[0] * r[1] + r[0] * r[2] + r[1] * r[2] == Approx(-8.0).epsilon(1e-9));
    CHECK(r[0] * r[1] * r[2] == Approx(-32.0).epsilon(1e-9));
}

TEST_CASE("ns_m spectrum formula") {
    Spectrum k33 = spec_of(complete_hypergraph(3, 3));
    Spectrum f1 = ns_m_spectrum_formula(k33, 1, 3, 3);
    REQUIRE(f1.values.size() == 6);
    std::vector<double> expected = {2 + 2 * SQRT2, SQRT2 - 1, SQRT2 - 1,
                                    2 - 2 * SQRT2, -1 - SQRT2, -1 - SQRT2};
    std::sort(expected.rbegin(), expected.rend());
    CHECK(multiset_deviation(f1, make_spectrum(expected)) < 1e-12);
    CHECK(f1.nullity == 0);
    REQUIRE(f1.det.has_value());
    CHECK(*f1.det == BigInt(-4)); // (-1)^3 * det(K33)^2 = -(2^2)

    Spectrum f2 = ns_m_spectrum_formula(k33, 2, 3, 3);
    REQUIRE(f2.values.size() == 9);
    CHECK(std::count_if(f2.values.begin(), f2.values.end(),
                        [](double x) { return x == 0.0; }) == 3);
    CHECK(f2.nullity == 3);
    REQUIRE(f2.det.has_value());
    CHECK(*f2.det == BigInt(0));

    // agrees with the eigensolver on the constructed hypergraph
    Spectrum direct = spec_of(ns_m(complete_hypergraph(3, 3), 2));
    CHECK(multiset_deviation(f2, direct) < 1e-9);

    Spectrum fig = spec_of(fig3());
    Spectrum f3 = ns_m_spectrum_formula(fig, 3, 3, 6);
    CHECK(f3.values.size() == 24);
    CHECK(f3.nullity == 6 * 2 + 2 * 1); // n(m-1) + 2 eta
    CHECK(multiset_deviation(f3, spec_of(ns_m(fig3(), 3))) < 1e-9);

    CHECK_THROWS_AS(ns_m_spectrum_formula(k33, 1, 3, 4), std::invalid_argument);
}

TEST_CASE("ns_m energy formula") {
    CHECK(ns_m_energy_formula(12.0, 1, 3) == Approx(24 * SQRT2).epsilon(1e-14));
    CHECK(ns_m_energy_formula(4.0, 1, 3) == Approx(8 * SQRT2).epsilon(1e-14));
    // scaling factor sqrt((mk-2m+1)^2 + 4m), m=2, k=3: sqrt(9+8) = sqrt(17)
    CHECK(ns_m_energy_formula(1.0, 2, 3) == Approx(std::sqrt(17.0)).epsilon(1e-14));
    // matches the eigensolver energy of the actual construction
    CHECK(ns_m_energy_formula(spec_of(fig3()).energy, 1, 3) ==
          Approx(spec_of(ns_m(fig3(), 1)).energy).epsilon(1e-12));
}

TEST_CASE("pairing property of the split spectrum") {
    Spectrum k33 = spec_of(complete_hypergraph(3, 3));
    Spectrum ns1 = spec_of(ns_m(complete_hypergraph(3, 3), 1));
    CHECK(ns_pairing_check(ns1, k33, 1, 3));

    Spectrum fig = spec_of(fig3());
    Spectrum ns2 = spec_of(ns_m(fig3(), 2));
    CHECK(ns_pairing_check(ns2, fig, 2, 3));

    // wrong base spectrum: sizes and values cannot line up
    Spectrum k43 = spec_of(complete_hypergraph(4, 3));
    CHECK(!ns_pairing_check(ns1, k43, 1, 3));
    // right sizes, wrong multiset
    CHECK(!ns_pairing_check(spec_of(nns(complete_hypergraph(3, 3))), k33, 1, 3));
}

TEST_CASE("determinant and radius relations") {
    Spectrum fig = spec_of(fig3());
    DetRadiusRelations r1 = nsm_det_radius_relations(fig, 1, 3);
    REQUIRE(r1.det.has_value());
    CHECK(*r1.det == BigInt(0));
    CHECK(r1.radius == Approx((1 + SQRT2) * 4).epsilon(1e-12));

    DetRadiusRelations r2 = nsm_det_radius_relations(fig, 2, 3);
    CHECK(*r2.det == BigInt(0));
    CHECK(r2.radius == Approx(14.246211251235321).epsilon(1e-12));

    Spectrum k33 = spec_of(complete_hypergraph(3, 3));
    DetRadiusRelations r3 = nsm_det_radius_relations(k33, 1, 3);
    CHECK(*r3.det == BigInt(-4));
    DetRadiusRelations r4 = nsm_det_radius_relations(k33, 3, 3);
    CHECK(*r4.det == BigInt(0));
    CHECK(r4.radius == Approx((2 + std::sqrt(7.0)) * 2).epsilon(1e-12));
}

TEST_CASE("nns alpha quadratic") {
    NNSQuadratic q = NNSQuadratic::of(6, 3, 2);
    CHECK(q.X == Approx(-20.0).epsilon(1e-14));
    CHECK(q.alpha1 + q.alpha2 == Approx(20.0).epsilon(1e-10));
    CHECK(q.alpha1 * q.alpha2 == Approx(-256.0).epsilon(1e-10));
    CHECK(q.alpha1 - q.alpha2 == Approx(std::sqrt(1424.0)).epsilon(1e-12));
    CHECK_THROWS_AS(NNSQuadratic::of(6, 2, 2), std::invalid_argument);
}

TEST_CASE("nns spectrum formula") {
    Spectrum k33 = spec_of(complete_hypergraph(3, 3));
    Spectrum f = nns_spectrum_formula(k33, 3, 3, 1);
    std::vector<double> expected = {2, 0, 0, 0, -1, -1};
    CHECK(multiset_deviation(f, make_spectrum(expected)) < 1e-10);

    Spectrum fig = spec_of(fig3());
    Spectrum nf = nns_spectrum_formula(fig, 6, 3, 2);
    REQUIRE(nf.values.size() == 12);
    CHECK(nf.energy == Approx(76.2998).epsilon(1e-3));
    CHECK(nf.energy == Approx(76.29986982737624).epsilon(1e-12));
    CHECK(multiset_deviation(nf, spec_of(nns(fig3()))) < 1e-9);

    CHECK_THROWS_AS(nns_spectrum_formula(k33, 3, 2, 1), std::invalid_argument);
    // non-regular input: leading eigenvalue fails the r(k-1) gate
    Spectrum bad = spec_of(fig2a());
    CHECK_THROWS_AS(nns_spectrum_formula(bad, 4, 3, 2), std::invalid_argument);
}

TEST_CASE("nns energy formula") {
    // complete hypergraphs: the split adds isolated vertices, energy unchanged
    struct Row {
        int n, k, r;
    };
    for (Row row : {Row{3, 3, 1}, Row{4, 3, 3}, Row{5, 3, 6}, Row{4, 4, 1},
                    Row{5, 4, 4}}) {
        Hypergraph h = complete_hypergraph(row.n, row.k);
        Spectrum s = spec_of(h);
        double e = nns_energy_formula(s, row.n, row.k, row.r);
        CHECK(e == Approx(2.0 * row.r * (row.k - 1)).epsilon(1e-10));
        CHECK(e == Approx(s.energy).epsilon(1e-10));
    }
    Spectrum fig = spec_of(fig3());
    CHECK(nns_energy_formula(fig, 6, 3, 2) ==
          Approx(76.29986982737624).epsilon(1e-12));
}

TEST_CASE("join cubic coefficients") {
    JoinCubic v = JoinCubic::v_join(3, 3, 3, 1, 1);
    CHECK(v.a == Approx(8.0).epsilon(1e-14));
    CHECK(v.c2 == Approx(-12.0).epsilon(1e-14));
    CHECK(v.c1 == Approx(-8.0).epsilon(1e-14));
    CHECK(v.c0 == Approx(32.0).epsilon(1e-14));

    JoinCubic s = JoinCubic::s_join(3, 3, 3, 1, 1);
    CHECK(s.c2 == Approx(-12.0).epsilon(1e-14));
    CHECK(s.c1 == Approx(-8.0).epsilon(1e-14));
    CHECK(s.c0 == Approx(176.0).epsilon(1e-14));

    // roots satisfy Vieta for both
    for (const JoinCubic& c : {v, s}) {
        CHECK(c.roots[0] + c.roots[1] + c.roots[2] ==
              Approx(-c.c2).epsilon(1e-9));
        CHECK(c.roots[0] * c.roots[1] * c.roots[2] ==
              Approx(-c.c0).epsilon(1e-9));
    }
}

TEST_CASE("join spectrum formulas against frozen references") {
    Spectrum k33 = spec_of(complete_hypergraph(3, 3));

    Spectrum v = vjoin_spectrum_formula(k33, k33, 3, 3, 3, 1, 1);
    std::vector<double> vref = {12.436373, 1.400672,  0.414214,
                                0.414214,  -1.837045, -2.414214,
                                -2.414214, -4.0,      -4.0};
    REQUIRE(v.values.size() == 9);
    CHECK(multiset_deviation(v, make_spectrum(vref)) < 1e-5);

    Spectrum s = sjoin_spectrum_formula(k33, k33, 3, 3, 3, 1, 1);
    std::vector<double> sref = {11.336145, 4.286133,  0.414214,
                                0.414214,  -2.414214, -2.414214,
                                -3.622277, -4.0,      -4.0};
    REQUIRE(s.values.size() == 9);
    CHECK(multiset_deviation(s, make_spectrum(sref)) < 1e-5);

    // against the eigensolver on the constructed joins
    CHECK(multiset_deviation(v, spec_of(v_join(complete_hypergraph(3, 3),
                                               complete_hypergraph(3, 3)))) <
          1e-9);
    CHECK(multiset_deviation(s, spec_of(s_join(complete_hypergraph(3, 3),
                                               complete_hypergraph(3, 3)))) <
          1e-9);

    // mixed orders, both regular
    Spectrum fig = spec_of(fig3());
    Spectrum vf = vjoin_spectrum_formula(fig, k33, 6, 3, 3, 2, 1);
    REQUIRE(vf.values.size() == 15);
    CHECK(multiset_deviation(
              vf, spec_of(v_join(fig3(), complete_hypergraph(3, 3)))) < 1e-9);
}

TEST_CASE("join spectrum formula with an edgeless first factor") {
    Hypergraph edgeless{3, 3, {}};
    Spectrum e = spec_of(edgeless);
    Spectrum k33 = spec_of(complete_hypergraph(3, 3));

    Spectrum v = vjoin_spectrum_formula(e, k33, 3, 3, 3, 0, 1);
    CHECK(multiset_deviation(
              v, spec_of(v_join(edgeless, complete_hypergraph(3, 3)))) < 1e-9);

    Spectrum s = sjoin_spectrum_formula(e, k33, 3, 3, 3, 0, 1);
    // with r1 = 0 the two joins are isomorphic, so the formulas agree too
    CHECK(multiset_deviation(v, s) < 1e-9);
}
