#pragma once

#include "hyperspec/spectral.hpp"

#include <array>

namespace hyperspec {

// Scaling factors of the m-splitting spectrum: the eigenvalues of the
// (m+1)x(m+1) splitting matrix restricted to its rank-2 part.
// nu1/nu2 are the roots of x^2 - (mk-2m+1)x - m.
struct SplitFactors {
    int m = 1;
    int k = 2;
    double nu1 = 0.0;
    double nu2 = 0.0;

    static SplitFactors of(int m, int k);
};

// All three real roots of the monic cubic x^3 + c2 x^2 + c1 x + c0,
// descending.  Intended for cubics known to be real-rooted (they arise as
// factors of symmetric characteristic polynomials); complex noise from
// round-off is clamped.
std::array<double, 3> real_cubic_roots(double c2, double c1, double c0);

// Both real roots of x^2 + b x + c (requires b^2 - 4c >= -eps), descending.
std::array<double, 2> real_quadratic_roots(double b, double c);

// --- neighbourhood m-splitting -------------------------------------------

// Spectrum of NS_m from the base spectrum: {nu1*l_i} ∪ {nu2*l_i} ∪
// {0 x n(m-1)}.  Carries exact nullity n(m-1)+2*eta and the determinant
// rule when the base spectrum has them.
Spectrum ns_m_spectrum_formula(const Spectrum& g, int m, int k, int n);

// sqrt((mk-2m+1)^2 + 4m) * energy.
double ns_m_energy_formula(double energy, int m, int k);

// Pairing property of the NS_m spectrum: every nonzero eigenvalue mu has a
// partner -m*l_i^2/mu in the spectrum, the nonzero part equals
// {nu1*l_i} ∪ {nu2*l_i} as multisets, and the map mu -> -(nu2^2/m)*mu sends
// the nu1 branch into the spectrum (inverse map on the nu2 branch).
// tol < 0 picks 1e-8 * (1 + spectral radius).
bool ns_pairing_check(const Spectrum& nsm, const Spectrum& g, int m, int k,
                      double tol = -1.0);

struct DetRadiusRelations {
    std::optional<BigInt> det; // (-1)^n det(g)^2 for m=1, 0 for m>1
    double radius = 0.0;       // nu1 * rho(g)
};

DetRadiusRelations nsm_det_radius_relations(const Spectrum& g, int m, int k);

// --- non-neighbourhood splitting ------------------------------------------

// The alpha-quadratic of the NNS spectrum for a (k,r)-regular base.
struct NNSQuadratic {
    double X = 0.0;
    double alpha1 = 0.0; // >= 0
    double alpha2 = 0.0; // <= 0

    static NNSQuadratic of(int n, int k, int r);
};

// Spectrum of NNS from a (k,r)-regular base spectrum (k >= 3): the roots of
// l^2 + ((k-3)l_i + (n-2)C(n-3,k-3)) l - (l_i + C(n-2,k-2))^2 for each
// non-Perron eigenvalue, plus alpha1/alpha2.
Spectrum nns_spectrum_formula(const Spectrum& g, int n, int k, int r);

double nns_energy_formula(const Spectrum& g, int n, int k, int r);

// --- joins ------------------------------------------------------------------

// The common cubic factor of the join spectra.  coeffs are the monic
// c2, c1, c0; roots are descending.
struct JoinCubic {
    double a = 0.0;
    double c2 = 0.0;
    double c1 = 0.0;
    double c0 = 0.0;
    std::array<double, 3> roots{};

    static JoinCubic v_join(int n1, int n2, int k, int r1, int r2);
    static JoinCubic s_join(int n1, int n2, int k, int r1, int r2);
};

// Spectra of the joins of regular hypergraphs from the factor spectra.
Spectrum vjoin_spectrum_formula(const Spectrum& g1, const Spectrum& g2,
                                int n1, int n2, int k, int r1, int r2);
Spectrum sjoin_spectrum_formula(const Spectrum& g1, const Spectrum& g2,
                                int n1, int n2, int k, int r1, int r2);

} // namespace hyperspec
