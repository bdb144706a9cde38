#pragma once

#include "hyperspec/exact.hpp"
#include "hyperspec/matrix.hpp"

#include <optional>
#include <vector>

namespace hyperspec {

struct EigenvalueCluster {
    double value = 0.0; // mean of the cluster
    int multiplicity = 0;
};

// A real symmetric spectrum, eigenvalues sorted descending.
struct Spectrum {
    std::vector<double> values;
    double energy = 0.0;          // sum of |eigenvalue|
    double spectral_radius = 0.0; // max |eigenvalue|
    int nullity = -1;             // exact multiplicity of 0 when known, else -1
    std::optional<BigInt> det;    // exact determinant when known
    double max_residual = 0.0;    // eigensolver certificate; 0 for formula spectra

    int order() const { return (int)values.size(); }
};

// Sorts descending and fills energy / spectral_radius.
Spectrum make_spectrum(std::vector<double> values);

// Full eigenvalue decomposition of a symmetric integer matrix via cyclic
// Jacobi rotations.  The result carries the worst eigenpair residual
// ||A v - lambda v|| (so callers can gate on it) plus exact nullity and
// determinant computed independently with integer elimination.
// Throws std::invalid_argument if a is not symmetric.
Spectrum eigenvalues(const IntMatrix& a);

// Eigenvalues clustered into (value, multiplicity) groups; consecutive
// values closer than eps land in one cluster.  eps < 0 picks the default
// 1e-7 * max(1, spectral_radius).
std::vector<EigenvalueCluster> cluster_spectrum(const Spectrum& s, double eps = -1.0);

// Max absolute difference after pairing both sorted spectra; +inf on order
// mismatch.
double multiset_deviation(const Spectrum& a, const Spectrum& b);

double energy(const IntMatrix& a);
double spectral_radius(const IntMatrix& a);

} // namespace hyperspec
