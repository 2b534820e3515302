#pragma once

// Exact intersection theory on the Picard lattice Z<h,e1,e2,e3> of the
// minimal resolution of a sextic du Val del Pezzo surface, together with
// Riemann-Roch, Euler pairings of K-theory classes and Hilbert polynomials.

#include <array>
#include <string>
#include <vector>

#include "dp6/rational.hpp"

namespace dp6::lattice {

// Divisor class a*h + b1*e1 + b2*e2 + b3*e3.  The intersection form is
// diagonal (+1,-1,-1,-1) in this basis.
struct DivisorClass {
    Int a{0}, b1{0}, b2{0}, b3{0};

    DivisorClass() = default;
    DivisorClass(Int a_, Int b1_, Int b2_, Int b3_)
        : a(std::move(a_)), b1(std::move(b1_)), b2(std::move(b2_)), b3(std::move(b3_)) {}

    friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
        return {x.a + y.a, x.b1 + y.b1, x.b2 + y.b2, x.b3 + y.b3};
    }
    friend DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
        return {x.a - y.a, x.b1 - y.b1, x.b2 - y.b2, x.b3 - y.b3};
    }
    DivisorClass operator-() const { return {-a, -b1, -b2, -b3}; }
    friend DivisorClass operator*(const Int& n, const DivisorClass& d) {
        return {n * d.a, n * d.b1, n * d.b2, n * d.b3};
    }
    bool operator==(const DivisorClass& o) const = default;

    bool is_zero() const { return a == 0 && b1 == 0 && b2 == 0 && b3 == 0; }
    std::string str() const;
};

inline const DivisorClass H{1, 0, 0, 0};
inline const DivisorClass E1{0, 1, 0, 0};
inline const DivisorClass E2{0, 0, 1, 0};
inline const DivisorClass E3{0, 0, 0, 1};

Int intersect(const DivisorClass& d1, const DivisorClass& d2);

// K = -3h + e1 + e2 + e3, with K.K = 6.
DivisorClass canonical_class();

// chi(O(D)) = 1 + D.(D - K)/2 on a rational surface; always an integer.
Int riemann_roch_chi(const DivisorClass& d);

// K-theory-level class of a sheaf: (rank, c1, chi).  Additive under direct
// sums and extensions.  ch2 is carried implicitly through chi.
struct NumericalClass {
    Int rank{0};
    DivisorClass c1{};
    Int chi{0};

    bool operator==(const NumericalClass& o) const = default;

    friend NumericalClass operator+(const NumericalClass& x, const NumericalClass& y) {
        return {x.rank + y.rank, x.c1 + y.c1, x.chi + y.chi};
    }
    friend NumericalClass operator-(const NumericalClass& x, const NumericalClass& y) {
        return {x.rank - y.rank, x.c1 - y.c1, x.chi - y.chi};
    }
    friend NumericalClass operator*(const Int& n, const NumericalClass& x) {
        return {n * x.rank, n * x.c1, n * x.chi};
    }
    bool is_zero() const { return rank == 0 && c1.is_zero() && chi == 0; }
};

// Class of the line bundle O(D).
NumericalClass line_bundle_class(const DivisorClass& d);
NumericalClass structure_sheaf_class();
// Class of O_C(-1) for a (-2)-curve C, and more generally the rank-0 class
// (0, c1, chi).
NumericalClass torsion_class(const DivisorClass& c1, Int chi);

// Euler pairing chi(F,G) = sum (-1)^i dim Ext^i(F,G), extended bilinearly
// from line bundles:
//   chi(x,y) = r_x chi_y + r_y chi_x - r_x r_y - c1_x . c1_y + r_y (K . c1_x).
// On classes of negative rank there is no canonical convention; this bilinear
// extension is the one used throughout (restricted to line bundles it equals
// riemann_roch_chi(D2 - D1), and it satisfies the Serre relation
// chi(x,y) = chi(y, twist(x,K))).
Int euler_pairing(const NumericalClass& x, const NumericalClass& y);

// Class of F(D): rank unchanged, c1 += rank*D, chi recomputed through the
// pairing with O(-D).
NumericalClass twist(const NumericalClass& x, const DivisorClass& d);

// K-theoretic left mutation through an exceptional class:
//   L_E(x) = x - chi(E, x) * E.
// Throws NotExceptional when chi(E,E) != 1.
NumericalClass mutate_left(const NumericalClass& through, const NumericalClass& x);

// chi(E_{Z2}, -) and chi(E_{Z3}, -) by the Chern character decompositions
//   ch(E_{Z2}) = 2 ch(O) + ch(w^-1) - 3 ch(O_pt),
//   ch(E_{Z3}) =   ch(O) + ch(w^-1) - 2 ch(O_pt).
Int chi_E2(const NumericalClass& x);
Int chi_E3(const NumericalClass& x);

// Quadratic polynomial c2 t^2 + c1 t + c0 with exact rational coefficients.
// Values at integers are asserted integral by callers that require it.
struct HilbertPolynomial {
    Rat c2{0}, c1{0}, c0{0};

    bool operator==(const HilbertPolynomial& o) const = default;
    Rat eval(const Rat& t) const { return (c2 * t + c1) * t + c0; }
    // p(u t + v), exact substitution.
    HilbertPolynomial substitute(const Rat& u, const Rat& v) const;
    std::string str() const;
};

// h_F(t) = chi(F(-t K)) = chi + t (c1 . -K) + 3 r t(t+1).
HilbertPolynomial hilbert_poly_of_class(const NumericalClass& x);

// h_d(t) = (3t + d)(t + 1).
HilbertPolynomial hd(const Int& d);
// h'_d(t) = d t + 1, the Hilbert polynomial of a degree-d rational curve.
HilbertPolynomial hprime(const Int& d);

}  // namespace dp6::lattice
