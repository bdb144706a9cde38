#pragma once

#include "hyperspec/hg_io.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/matrix.hpp"

namespace hyperspec {

// Vertex layouts of the constructions (ranges partition the vertex set).
// ns_m: "originals" [0,n), "copy<i>" [i*n,(i+1)*n) with u_{i,j} = i*n + j.
// joins: "g1-originals" [0,n1), "g1-split" [n1,2n1), "g2" [2n1,2n1+n2).
VertexLayout nsm_layout(int n, int m);
VertexLayout join_layout(int n1, int n2);

// Neighbourhood m-splitting: m fresh copies of the vertex set; copy vertex
// u_{i,j} joins every (k-1)-set that v_j neighbours.  Requires m >= 1.
Hypergraph ns_m(const Hypergraph& h, int m);

// A(NS_m) assembled block-wise: [[ (mk-2m+1)a, a, ..., a ], [a, 0, ...], ...].
// Equals kronecker(M, a) for the (m+1)x(m+1) splitting matrix M; kept as an
// independent code path so the two can be cross-checked.
IntMatrix ns_m_matrix(const IntMatrix& a, int m, int k);

// The splitting matrix M itself: M[0][0] = mk-2m+1, first row/col 1, else 0.
IntMatrix splitting_matrix(int m, int k);

// Non-neighbourhood splitting: fresh vertex u_i joins every (k-1)-subset D
// of V minus v_i such that {v_i} union D is not an edge.
Hypergraph nns(const Hypergraph& h);

// 2n x 2n block matrix
//   [[ (n-2)C(n-3,k-3)(J-I) - (k-3)a,  C(n-2,k-2)(J-I) - a ],
//    [ C(n-2,k-2)(J-I) - a,            0                   ]].
// Only stated for k >= 3; throws otherwise.
IntMatrix nns_matrix(const IntMatrix& a, int n, int k);

// V-vertex join: NS(h1) plus h2 plus every edge {v} ∪ D with v an original
// vertex of h1 and D a (k-1)-subset of V(h2).  S-vertex join couples from
// the split vertices instead.  Uniformities must match.
Hypergraph v_join(const Hypergraph& h1, const Hypergraph& h2);
Hypergraph s_join(const Hypergraph& h1, const Hypergraph& h2);

IntMatrix vjoin_matrix(const IntMatrix& a1, const IntMatrix& a2, int n1, int n2, int k);
IntMatrix sjoin_matrix(const IntMatrix& a1, const IntMatrix& a2, int n1, int n2, int k);

// C(a,b) with C = 0 whenever b < 0 or b > a.
long long binom(long long a, long long b);

} // namespace hyperspec
