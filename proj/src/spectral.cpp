#include "hyperspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hyperspec {

Spectrum make_spectrum(std::vector<double> values) {
    Spectrum s;
    std::sort(values.begin(), values.end(), std::greater<>());
    s.values = std::move(values);
    for (double v : s.values) {
        s.energy += std::fabs(v);
        s.spectral_radius = std::max(s.spectral_radius, std::fabs(v));
    }
    return s;
}

namespace {

using Dense = std::vector<std::vector<double>>;

double off_diagonal_norm(const Dense& a) {
    double s = 0;
    int n = (int)a.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                s += a[i][j] * a[i][j];
    return std::sqrt(s);
}

// Cyclic Jacobi with Rutishauser's stable rotation updates.  V accumulates
// eigenvectors as columns.
void jacobi(Dense& a, Dense& v) {
    int n = (int)a.size();
    double scale = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            scale += a[i][j] * a[i][j];
    scale = std::sqrt(scale);
    if (scale == 0)
        return;
    const double stop = 1e-15 * scale;
    for (int sweep = 0; sweep < 60; ++sweep) {
        if (off_diagonal_norm(a) <= stop)
            return;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = a[p][q];
                if (std::fabs(apq) <= 1e-300)
                    continue;
                double theta = (a[q][q] - a[p][p]) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                double tau = s / (1 + c);
                double app = a[p][p], aqq = a[q][q];
                a[p][p] = app - t * apq;
                a[q][q] = aqq + t * apq;
                a[p][q] = a[q][p] = 0;
                for (int i = 0; i < n; ++i) {
                    if (i != p && i != q) {
                        double aip = a[i][p], aiq = a[i][q];
                        a[i][p] = a[p][i] = aip - s * (aiq + tau * aip);
                        a[i][q] = a[q][i] = aiq + s * (aip - tau * aiq);
                    }
                    double vip = v[i][p], viq = v[i][q];
                    v[i][p] = vip - s * (viq + tau * vip);
                    v[i][q] = viq + s * (vip - tau * viq);
                }
            }
    }
    if (off_diagonal_norm(a) > 1e-8 * scale)
        throw std::runtime_error("jacobi: did not converge");
}

} // namespace

Spectrum eigenvalues(const IntMatrix& m) {
    if (!m.is_symmetric())
        throw std::invalid_argument("eigenvalues: matrix is not symmetric");
    int n = m.order();
    Dense a(n, std::vector<double>(n));
    Dense v(n, std::vector<double>(n, 0));
    for (int i = 0; i < n; ++i) {
        v[i][i] = 1;
        for (int j = 0; j < n; ++j)
            a[i][j] = (double)m.at(i, j);
    }
    jacobi(a, v);

    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i)
        vals[i] = a[i][i];

    // Residual certificate ||A x - lambda x||_2 per eigenpair, on the
    // original integer matrix.
    double max_res = 0;
    for (int col = 0; col < n; ++col) {
        double res = 0;
        for (int i = 0; i < n; ++i) {
            double ax = 0;
            for (int j = 0; j < n; ++j)
                ax += (double)m.at(i, j) * v[j][col];
            double d = ax - vals[col] * v[i][col];
            res += d * d;
        }
        max_res = std::max(max_res, std::sqrt(res));
    }

    Spectrum s = make_spectrum(std::move(vals));
    s.max_residual = max_res;
    s.nullity = exact_nullity(m);
    s.det = exact_det(m);
    return s;
}

std::vector<EigenvalueCluster> cluster_spectrum(const Spectrum& s, double eps) {
    if (eps < 0)
        eps = 1e-7 * std::max(1.0, s.spectral_radius);
    std::vector<EigenvalueCluster> out;
    std::size_t i = 0;
    while (i < s.values.size()) {
        std::size_t j = i + 1;
        double sum = s.values[i];
        while (j < s.values.size() && s.values[j - 1] - s.values[j] <= eps) {
            sum += s.values[j];
            ++j;
        }
        out.push_back({sum / (double)(j - i), (int)(j - i)});
        i = j;
    }
    return out;
}

double multiset_deviation(const Spectrum& a, const Spectrum& b) {
    if (a.values.size() != b.values.size())
        return std::numeric_limits<double>::infinity();
    double d = 0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        d = std::max(d, std::fabs(a.values[i] - b.values[i]));
    return d;
}

double energy(const IntMatrix& a) {
    return eigenvalues(a).energy;
}

double spectral_radius(const IntMatrix& a) {
    return eigenvalues(a).spectral_radius;
}

} // namespace hyperspec
