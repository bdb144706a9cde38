#pragma once

#include "hyperspec/matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace hyperspec {

using BigInt = boost::multiprecision::cpp_int;

// Characteristic polynomial det(xI - A) with exact integer coefficients,
// stored in ascending degree order: coeffs[i] multiplies x^i, coeffs.back()
// is 1 (monic).  Size is order+1.
struct CharPoly {
    std::vector<BigInt> coeffs;

    int degree() const { return (int)coeffs.size() - 1; }
    bool operator==(const CharPoly&) const = default;
};

// Faddeev-LeVerrier over exact integers.
CharPoly char_poly(const IntMatrix& a);

BigInt char_poly_eval(const CharPoly& p, const BigInt& x);

// Fraction-free (Bareiss) elimination; both are exact.
BigInt exact_det(const IntMatrix& a);
int exact_rank(const IntMatrix& a);
int exact_nullity(const IntMatrix& a); // order - rank

// Exact cospectrality: equal orders and identical characteristic polynomials.
bool are_cospectral(const IntMatrix& a, const IntMatrix& b);

std::string to_string(const BigInt& v);

} // namespace hyperspec
