#include "hyperspec/exact.hpp"

#include <stdexcept>

namespace hyperspec {

namespace {

using BigMatrix = std::vector<std::vector<BigInt>>;

BigMatrix to_big(const IntMatrix& a) {
    int n = a.order();
    BigMatrix m(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = a.at(i, j);
    return m;
}

BigMatrix big_multiply(const BigMatrix& a, const BigMatrix& b) {
    std::size_t n = a.size();
    BigMatrix r(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            const BigInt& ail = a[i][l];
            if (ail == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                r[i][j] += ail * b[l][j];
        }
    return r;
}

BigInt exact_div(const BigInt& num, const BigInt& den, const char* where) {
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0)
        throw std::logic_error(std::string("exact division failed in ") + where);
    return q;
}

// Row-echelon reduction without fractions.  Returns rank; fills det with the
// determinant (0 when rank < n).
int bareiss(BigMatrix m, BigInt& det) {
    int n = (int)m.size();
    if (n == 0) {
        det = 1; // empty product
        return 0;
    }
    BigInt prev = 1;
    int sign = 1;
    int row = 0;
    bool singular = false;
    for (int col = 0; col < n && row < n; ++col) {
        int pivot = -1;
        for (int i = row; i < n; ++i)
            if (m[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot == -1) {
            singular = true;
            continue;
        }
        if (pivot != row) {
            std::swap(m[pivot], m[row]);
            sign = -sign;
        }
        for (int i = row + 1; i < n; ++i) {
            for (int j = col + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[row][col] - m[i][col] * m[row][j],
                                    prev, "bareiss");
            m[i][col] = 0;
        }
        prev = m[row][col];
        ++row;
    }
    if (singular || row < n)
        det = 0;
    else
        det = sign * m[n - 1][n - 1];
    return row;
}

} // namespace

CharPoly char_poly(const IntMatrix& a) {
    int n = a.order();
    CharPoly p;
    p.coeffs.assign(n + 1, 0);
    p.coeffs[n] = 1;
    if (n == 0)
        return p;
    BigMatrix A = to_big(a);
    BigMatrix M(n, std::vector<BigInt>(n, 0)); // starts as M_1 = I
    for (int i = 0; i < n; ++i)
        M[i][i] = 1;
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    for (int step = 1; step <= n; ++step) {
        BigMatrix AM = big_multiply(A, M);
        BigInt tr = 0;
        for (int i = 0; i < n; ++i)
            tr += AM[i][i];
        BigInt q, r;
        boost::multiprecision::divide_qr(tr, BigInt(step), q, r);
        if (r != 0)
            throw std::logic_error("char_poly: trace not divisible in Faddeev-LeVerrier");
        c[n - step] = -q;
        if (step < n) { // M_{step+1} = A*M_step + c_{n-step} I
            for (int i = 0; i < n; ++i)
                AM[i][i] += c[n - step];
            M = std::move(AM);
        }
    }
    p.coeffs = std::move(c);
    return p;
}

BigInt char_poly_eval(const CharPoly& p, const BigInt& x) {
    BigInt v = 0;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
        v = v * x + *it;
    return v;
}

BigInt exact_det(const IntMatrix& a) {
    BigInt det;
    bareiss(to_big(a), det);
    return det;
}

int exact_rank(const IntMatrix& a) {
    BigInt det;
    return bareiss(to_big(a), det);
}

int exact_nullity(const IntMatrix& a) {
    return a.order() - exact_rank(a);
}

bool are_cospectral(const IntMatrix& a, const IntMatrix& b) {
    if (a.order() != b.order())
        return false;
    return char_poly(a) == char_poly(b);
}

std::string to_string(const BigInt& v) {
    return v.str();
}

} // namespace hyperspec
