#include "hyperspec/closed_forms.hpp"

#include "hyperspec/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hyperspec {

SplitFactors SplitFactors::of(int m, int k) {
    if (m < 1)
        throw std::invalid_argument("SplitFactors: m must be at least 1");
    SplitFactors f;
    f.m = m;
    f.k = k;
    double s = (double)m * k - 2.0 * m + 1.0;
    double root = std::sqrt(s * s + 4.0 * m);
    f.nu1 = (s + root) / 2;
    f.nu2 = (s - root) / 2;
    return f;
}

std::array<double, 2> real_quadratic_roots(double b, double c) {
    double disc = b * b - 4 * c;
    if (disc < 0) {
        if (disc < -1e-9 * std::max(1.0, b * b + std::fabs(c)))
            throw std::invalid_argument("real_quadratic_roots: complex roots");
        disc = 0;
    }
    double sq = std::sqrt(disc);
    double r1, r2;
    if (b == 0) {
        r1 = sq / 2;
        r2 = -sq / 2;
    } else {
        double q = -(b + std::copysign(sq, b)) / 2;
        r1 = q;
        r2 = (q != 0) ? c / q : 0.0;
    }
    if (r1 < r2)
        std::swap(r1, r2);
    return {r1, r2};
}

namespace {

double polish_root(double x, double c2, double c1, double c0) {
    for (int it = 0; it < 8; ++it) {
        double f = ((x + c2) * x + c1) * x + c0;
        double df = (3 * x + 2 * c2) * x + c1;
        if (df == 0)
            break;
        double step = f / df;
        x -= step;
        if (std::fabs(step) <= 1e-16 * (1 + std::fabs(x)))
            break;
    }
    return x;
}

} // namespace

std::array<double, 3> real_cubic_roots(double c2, double c1, double c0) {
    // Depressed form t^3 + p t + q with x = t - c2/3; three real roots means
    // p <= 0, so the trigonometric solution applies without cancellation.
    double shift = -c2 / 3;
    double p = c1 - c2 * c2 / 3;
    double q = c2 * (2 * c2 * c2 / 27 - c1 / 3) + c0;
    std::array<double, 3> r;
    if (p >= 0) {
        // Only possible (for real-rooted cubics) as a numerically fuzzy
        // triple root; Newton below sharpens whatever spread exists.
        r = {shift, shift, shift};
    } else {
        double mfac = 2 * std::sqrt(-p / 3);
        double arg = 3 * q / (p * mfac);
        arg = std::clamp(arg, -1.0, 1.0);
        double theta = std::acos(arg) / 3;
        constexpr double tau = 2 * std::numbers::pi / 3;
        for (int i = 0; i < 3; ++i)
            r[i] = shift + mfac * std::cos(theta - tau * i);
    }
    for (double& x : r)
        x = polish_root(x, c2, c1, c0);
    std::sort(r.begin(), r.end(), std::greater<>());
    return r;
}

Spectrum ns_m_spectrum_formula(const Spectrum& g, int m, int k, int n) {
    if ((int)g.values.size() != n)
        throw std::invalid_argument("ns_m_spectrum_formula: spectrum order != n");
    SplitFactors f = SplitFactors::of(m, k);
    std::vector<double> vals;
    vals.reserve((std::size_t)n * (m + 1));
    for (double l : g.values) {
        vals.push_back(f.nu1 * l);
        vals.push_back(f.nu2 * l);
    }
    vals.insert(vals.end(), (std::size_t)n * (m - 1), 0.0);
    Spectrum s = make_spectrum(std::move(vals));
    if (g.nullity >= 0)
        s.nullity = n * (m - 1) + 2 * g.nullity;
    if (g.det) {
        if (m == 1)
            s.det = (n % 2 ? BigInt(-1) : BigInt(1)) * (*g.det) * (*g.det);
        else
            s.det = BigInt(0);
    }
    return s;
}

double ns_m_energy_formula(double energy, int m, int k) {
    double s = (double)m * k - 2.0 * m + 1.0;
    return std::sqrt(s * s + 4.0 * m) * energy;
}

namespace {

bool contains_approx(const std::vector<double>& sorted_desc, double x, double tol) {
    auto it = std::lower_bound(sorted_desc.begin(), sorted_desc.end(), x,
                               std::greater<>());
    if (it != sorted_desc.end() && std::fabs(*it - x) <= tol)
        return true;
    if (it != sorted_desc.begin() && std::fabs(*std::prev(it) - x) <= tol)
        return true;
    return false;
}

} // namespace

bool ns_pairing_check(const Spectrum& nsm, const Spectrum& g, int m, int k,
                      double tol) {
    if (nsm.values.size() != g.values.size() * (std::size_t)(m + 1))
        return false;
    if (tol < 0)
        tol = 1e-8 * (1 + nsm.spectral_radius);
    SplitFactors f = SplitFactors::of(m, k);
    double zero_eps = 1e-7 * std::max(1.0, nsm.spectral_radius);

    // (ii) {nu1 l_i} ∪ {nu2 l_i} ∪ {0 x n(m-1)} equals the NS_m spectrum as a
    // multiset (this subsumes equality of the nonzero parts).
    {
        std::vector<double> predicted;
        predicted.reserve(nsm.values.size());
        for (double l : g.values) {
            predicted.push_back(f.nu1 * l);
            predicted.push_back(f.nu2 * l);
        }
        predicted.insert(predicted.end(), g.values.size() * (std::size_t)(m - 1), 0.0);
        std::sort(predicted.begin(), predicted.end(), std::greater<>());
        for (std::size_t i = 0; i < predicted.size(); ++i)
            if (std::fabs(predicted[i] - nsm.values[i]) > tol)
                return false;
    }
    std::vector<double> nonzero;
    for (double mu : nsm.values)
        if (std::fabs(mu) > zero_eps)
            nonzero.push_back(mu);

    // (i) partner property: some -m l_i^2 / mu is again an eigenvalue.
    for (double mu : nonzero) {
        bool found = false;
        for (double l : g.values)
            if (contains_approx(nsm.values, -m * l * l / mu, tol)) {
                found = true;
                break;
            }
        if (!found)
            return false;
    }

    // (iii) branch maps: mu = nu1 l_i pairs with -(nu2^2/m) mu = nu2 l_i; on
    // the nu2 branch the inverse map applies.
    double scale = -f.nu2 * f.nu2 / m;
    for (double mu : nonzero) {
        bool on_nu1 = false, on_nu2 = false;
        for (double l : g.values) {
            on_nu1 = on_nu1 || std::fabs(mu - f.nu1 * l) <= tol;
            on_nu2 = on_nu2 || std::fabs(mu - f.nu2 * l) <= tol;
        }
        if (on_nu1 && !contains_approx(nsm.values, scale * mu, tol))
            return false;
        if (on_nu2 && !contains_approx(nsm.values, mu / scale, tol))
            return false;
        if (!on_nu1 && !on_nu2)
            return false;
    }
    return true;
}

DetRadiusRelations nsm_det_radius_relations(const Spectrum& g, int m, int k) {
    DetRadiusRelations r;
    SplitFactors f = SplitFactors::of(m, k);
    r.radius = f.nu1 * g.spectral_radius;
    if (m > 1)
        r.det = BigInt(0);
    else if (g.det) {
        int n = g.order();
        r.det = (n % 2 ? BigInt(-1) : BigInt(1)) * (*g.det) * (*g.det);
    }
    return r;
}

NNSQuadratic NNSQuadratic::of(int n, int k, int r) {
    if (k < 3)
        throw std::invalid_argument("NNSQuadratic: requires k >= 3");
    NNSQuadratic q;
    double rk = (double)r * (k - 1);
    q.X = rk * (k - 3) - (double)(n - 1) * (n - 2) * binom(n - 3, k - 3);
    double y = rk - (double)(n - 1) * binom(n - 2, k - 2);
    auto roots = real_quadratic_roots(q.X, -y * y);
    q.alpha1 = roots[0];
    q.alpha2 = roots[1];
    return q;
}

namespace {

void require_regular_spectrum(const Spectrum& g, int n, int k, int r,
                              const char* who) {
    if ((int)g.values.size() != n)
        throw std::invalid_argument(std::string(who) + ": spectrum order != n");
    double expect = (double)r * (k - 1);
    if (n > 0 && std::fabs(g.values.front() - expect) > 1e-6 * (1 + std::fabs(expect)))
        throw std::invalid_argument(std::string(who) +
                                    ": leading eigenvalue != r(k-1); "
                                    "input is not the spectrum of a (k,r)-regular hypergraph");
}

} // namespace

Spectrum nns_spectrum_formula(const Spectrum& g, int n, int k, int r) {
    if (k < 3)
        throw std::invalid_argument("nns_spectrum_formula: requires k >= 3");
    require_regular_spectrum(g, n, k, r, "nns_spectrum_formula");
    double cd = (double)(n - 2) * binom(n - 3, k - 3);
    double co = binom(n - 2, k - 2);
    std::vector<double> vals;
    vals.reserve(2 * (std::size_t)n);
    for (std::size_t i = 1; i < g.values.size(); ++i) {
        double l = g.values[i];
        double b = (k - 3) * l + cd;
        double c = -(l + co) * (l + co);
        auto roots = real_quadratic_roots(b, c);
        vals.push_back(roots[0]);
        vals.push_back(roots[1]);
    }
    NNSQuadratic q = NNSQuadratic::of(n, k, r);
    vals.push_back(q.alpha1);
    vals.push_back(q.alpha2);
    return make_spectrum(std::move(vals));
}

double nns_energy_formula(const Spectrum& g, int n, int k, int r) {
    if (k < 3)
        throw std::invalid_argument("nns_energy_formula: requires k >= 3");
    require_regular_spectrum(g, n, k, r, "nns_energy_formula");
    NNSQuadratic q = NNSQuadratic::of(n, k, r);
    double rk = (double)r * (k - 1);
    double y = rk - (double)(n - 1) * binom(n - 2, k - 2);
    double total = std::sqrt(q.X * q.X + 4 * y * y);
    double cd = (double)(n - 2) * binom(n - 3, k - 3);
    double co = binom(n - 2, k - 2);
    for (std::size_t i = 1; i < g.values.size(); ++i) {
        double l = g.values[i];
        double b = (k - 3) * l + cd;
        double c = l + co;
        total += std::sqrt(b * b + 4 * c * c);
    }
    return total;
}

namespace {

JoinCubic make_join_cubic(int n1, int n2, int k, int r1, int r2, bool s_variant) {
    JoinCubic jc;
    double rk2 = (double)r1 * (k - 1) * (k - 1); // r1(k-1)^2
    double cpl = binom(n2 - 1, k - 2);
    double d = (double)n1 * n2 * cpl * cpl;
    jc.a = (double)r2 * (k - 1) + (double)binom(n2 - 2, k - 3) * n1 * (n2 - 1);
    jc.c2 = -(jc.a + rk2);
    jc.c1 = rk2 * (jc.a - r1) - d;
    jc.c0 = s_variant ? jc.a * r1 * rk2 + d * rk2 : jc.a * r1 * rk2;
    jc.roots = real_cubic_roots(jc.c2, jc.c1, jc.c0);
    return jc;
}

// The branches common to both joins: shifted g2 spectrum and the m=1
// splitting of g1, each with the Perron eigenvalue removed.
std::vector<double> join_common_branches(const Spectrum& g1, const Spectrum& g2,
                                         int n1, int n2, int k) {
    std::vector<double> vals;
    vals.reserve(2 * (std::size_t)n1 + n2 + 1);
    double shift = (double)n1 * binom(n2 - 2, k - 3);
    for (std::size_t i = 1; i < g2.values.size(); ++i)
        vals.push_back(g2.values[i] - shift);
    SplitFactors f = SplitFactors::of(1, k);
    for (std::size_t i = 1; i < g1.values.size(); ++i) {
        vals.push_back(f.nu1 * g1.values[i]);
        vals.push_back(f.nu2 * g1.values[i]);
    }
    return vals;
}

Spectrum join_spectrum(const Spectrum& g1, const Spectrum& g2, int n1, int n2,
                       int k, int r1, int r2, bool s_variant, const char* who) {
    require_regular_spectrum(g1, n1, k, r1, who);
    require_regular_spectrum(g2, n2, k, r2, who);
    std::vector<double> vals = join_common_branches(g1, g2, n1, n2, k);
    JoinCubic jc = make_join_cubic(n1, n2, k, r1, r2, s_variant);
    vals.insert(vals.end(), jc.roots.begin(), jc.roots.end());
    return make_spectrum(std::move(vals));
}

} // namespace

JoinCubic JoinCubic::v_join(int n1, int n2, int k, int r1, int r2) {
    return make_join_cubic(n1, n2, k, r1, r2, false);
}

JoinCubic JoinCubic::s_join(int n1, int n2, int k, int r1, int r2) {
    return make_join_cubic(n1, n2, k, r1, r2, true);
}

Spectrum vjoin_spectrum_formula(const Spectrum& g1, const Spectrum& g2,
                                int n1, int n2, int k, int r1, int r2) {
    return join_spectrum(g1, g2, n1, n2, k, r1, r2, false, "vjoin_spectrum_formula");
}

Spectrum sjoin_spectrum_formula(const Spectrum& g1, const Spectrum& g2,
                                int n1, int n2, int k, int r1, int r2) {
    return join_spectrum(g1, g2, n1, n2, k, r1, r2, true, "sjoin_spectrum_formula");
}

} // namespace hyperspec
