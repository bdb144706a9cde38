#include "hyperspec/matrix.hpp"

#include <stdexcept>

namespace hyperspec {

IntMatrix IntMatrix::identity(int order) {
    IntMatrix m(order);
    for (int i = 0; i < order; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::ones(int order) {
    IntMatrix m(order);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            m.at(i, j) = 1;
    return m;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& o) {
    if (n_ != o.n_)
        throw std::invalid_argument("matrix order mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i)
        a_[i] += o.a_[i];
    return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& o) {
    if (n_ != o.n_)
        throw std::invalid_argument("matrix order mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i)
        a_[i] -= o.a_[i];
    return *this;
}

IntMatrix& IntMatrix::operator*=(std::int64_t s) {
    for (auto& v : a_)
        v *= s;
    return *this;
}

IntMatrix IntMatrix::multiply(const IntMatrix& o) const {
    if (n_ != o.n_)
        throw std::invalid_argument("matrix order mismatch");
    IntMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int l = 0; l < n_; ++l) {
            std::int64_t aij = at(i, l);
            if (aij == 0)
                continue;
            for (int j = 0; j < n_; ++j)
                r.at(i, j) += aij * o.at(l, j);
        }
    return r;
}

std::int64_t IntMatrix::trace() const {
    std::int64_t t = 0;
    for (int i = 0; i < n_; ++i)
        t += at(i, i);
    return t;
}

bool IntMatrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i))
                return false;
    return true;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    int na = a.order(), nb = b.order();
    IntMatrix r(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            std::int64_t aij = a.at(i, j);
            if (aij == 0)
                continue;
            for (int p = 0; p < nb; ++p)
                for (int q = 0; q < nb; ++q)
                    r.at(i * nb + p, j * nb + q) = aij * b.at(p, q);
        }
    return r;
}

IntMatrix adjacency_matrix(const Hypergraph& h) {
    IntMatrix a(h.n);
    for (const auto& e : h.edges)
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                ++a.at(e[i], e[j]);
                ++a.at(e[j], e[i]);
            }
    return a;
}

} // namespace hyperspec
