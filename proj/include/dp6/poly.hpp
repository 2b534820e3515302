#pragma once

// Dense univariate polynomials over the rationals and homogeneous binary
// forms, with gcd and squarefree decomposition (characteristic 0, Yun).
// Used by the family classifiers for discriminant cubics, minor pencils and
// the hyperdeterminant oracle.

#include <vector>

#include "dp6/rational.hpp"

namespace dp6::poly {

// Coefficients low to high; normalized so the leading coefficient is nonzero
// (the zero polynomial has an empty coefficient list).
struct Poly {
    std::vector<Rat> c;

    static Poly zero() { return {}; }
    static Poly constant(const Rat& a);

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    Rat lead() const { return c.back(); }
    void normalize();

    Rat eval(const Rat& x) const;
    bool operator==(const Poly& o) const = default;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rat& s, const Poly& a);

Poly derivative(const Poly& a);
// Quotient and remainder of exact division.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Monic gcd.
Poly gcd(const Poly& a, const Poly& b);
Poly make_monic(const Poly& a);

// Yun's algorithm: f = prod out[i]^(i+1) with out[i] squarefree and pairwise
// coprime (monic parts; the content is dropped).
std::vector<Poly> squarefree_decomposition(const Poly& f);

// Root multiplicities of f over the algebraic closure, as a descending
// partition of deg f.
std::vector<int> root_multiplicities(const Poly& f);

// Homogeneous binary form of degree d in (s,t): coefficient k goes with
// s^k t^(d-k).  The zero form of any degree has all coefficients zero.
struct BinaryForm {
    int deg = 0;
    std::vector<Rat> c;  // size deg+1

    static BinaryForm zero(int deg);
    static BinaryForm linear(const Rat& s_coeff, const Rat& t_coeff);  // s_coeff*s + t_coeff*t

    bool is_zero() const;
    Rat eval(const Rat& s, const Rat& t) const;
    bool operator==(const BinaryForm& o) const = default;
};

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
BinaryForm operator*(const Rat& s, const BinaryForm& a);

// Multiplicity of the root (1:0), i.e. the power of t dividing the form.
int mult_at_infinity(const BinaryForm& f);
// f(x, 1) as a univariate polynomial.
Poly dehomogenize(const BinaryForm& f);

// Root multiplicity partition over the closure of a nonzero form, including
// the root at infinity; descending, sums to deg.
std::vector<int> binary_root_multiplicities(const BinaryForm& f);

// Do the nonzero members of the set share a projective root over the
// closure?  (gcd is non-constant).  A set whose members are all zero shares
// every root and returns true.
bool have_common_root(const std::vector<BinaryForm>& forms);

}  // namespace dp6::poly
