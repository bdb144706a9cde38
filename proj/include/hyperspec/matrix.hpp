#pragma once

#include "hyperspec/hypergraph.hpp"

#include <cstdint>
#include <vector>

namespace hyperspec {

// Dense square integer matrix (row-major).  Adjacency matrices of
// hypergraphs and their block constructions are all small-integer valued,
// so int64 entries are exact throughout.
class IntMatrix {
  public:
    IntMatrix() = default;
    explicit IntMatrix(int order) : n_(order), a_((std::size_t)order * order, 0) {}

    static IntMatrix identity(int order);
    static IntMatrix ones(int order); // all-ones J

    int order() const { return n_; }
    std::int64_t& at(int i, int j) { return a_[(std::size_t)i * n_ + j]; }
    std::int64_t at(int i, int j) const { return a_[(std::size_t)i * n_ + j]; }

    IntMatrix& operator+=(const IntMatrix& o);
    IntMatrix& operator-=(const IntMatrix& o);
    IntMatrix& operator*=(std::int64_t s);
    friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
    friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
    friend IntMatrix operator*(IntMatrix a, std::int64_t s) { return a *= s; }
    friend IntMatrix operator*(std::int64_t s, IntMatrix a) { return a *= s; }

    IntMatrix multiply(const IntMatrix& o) const;
    std::int64_t trace() const;
    bool is_symmetric() const;

    bool operator==(const IntMatrix&) const = default;

  private:
    int n_ = 0;
    std::vector<std::int64_t> a_;
};

// Kronecker product, (a ⊗ b)[i*nb+p][j*nb+q] = a[i][j] * b[p][q].
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

// Adjacency matrix: a_ij = number of edges containing both v_i and v_j
// (i != j), zero diagonal.
IntMatrix adjacency_matrix(const Hypergraph& h);

} // namespace hyperspec
