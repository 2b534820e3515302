#include "dp6/lattice.hpp"

#include "dp6/errors.hpp"

namespace dp6::lattice {

std::string DivisorClass::str() const {
    std::string s = "(" + a.str() + ";";
    s += b1.str() + "," + b2.str() + "," + b3.str() + ")";
    return s;
}

Int intersect(const DivisorClass& d1, const DivisorClass& d2) {
    return d1.a * d2.a - d1.b1 * d2.b1 - d1.b2 * d2.b2 - d1.b3 * d2.b3;
}

DivisorClass canonical_class() { return {-3, 1, 1, 1}; }

Int riemann_roch_chi(const DivisorClass& d) {
    Int pairing = intersect(d, d - canonical_class());
    // D.(D-K) is even for every class in this lattice.
    return 1 + exact_div(pairing, 2);
}

NumericalClass line_bundle_class(const DivisorClass& d) {
    return {1, d, riemann_roch_chi(d)};
}

NumericalClass structure_sheaf_class() { return line_bundle_class({0, 0, 0, 0}); }

NumericalClass torsion_class(const DivisorClass& c1, Int chi) {
    return {0, c1, std::move(chi)};
}

Int euler_pairing(const NumericalClass& x, const NumericalClass& y) {
    const DivisorClass k = canonical_class();
    return x.rank * y.chi + y.rank * x.chi - x.rank * y.rank - intersect(x.c1, y.c1) +
           y.rank * intersect(k, x.c1);
}

NumericalClass twist(const NumericalClass& x, const DivisorClass& d) {
    NumericalClass dual_probe = line_bundle_class(-d);
    return {x.rank, x.c1 + x.rank * d, euler_pairing(dual_probe, x)};
}

NumericalClass mutate_left(const NumericalClass& through, const NumericalClass& x) {
    if (euler_pairing(through, through) != 1)
        throw domain_error("NotExceptional", "",
                           "mutate_left: class with chi(E,E) != 1 is not exceptional");
    return x - euler_pairing(through, x) * through;
}

Int chi_E2(const NumericalClass& x) {
    const NumericalClass o = structure_sheaf_class();
    return 2 * euler_pairing(o, x) + euler_pairing(o, twist(x, canonical_class())) - 3 * x.rank;
}

Int chi_E3(const NumericalClass& x) {
    const NumericalClass o = structure_sheaf_class();
    return euler_pairing(o, x) + euler_pairing(o, twist(x, canonical_class())) - 2 * x.rank;
}

HilbertPolynomial HilbertPolynomial::substitute(const Rat& u, const Rat& v) const {
    // c2 (ut+v)^2 + c1 (ut+v) + c0
    return {c2 * u * u, 2 * c2 * u * v + c1 * u, c2 * v * v + c1 * v + c0};
}

std::string HilbertPolynomial::str() const {
    return rat_to_string(c2) + "*t^2 + " + rat_to_string(c1) + "*t + " + rat_to_string(c0);
}

HilbertPolynomial hilbert_poly_of_class(const NumericalClass& x) {
    Int deg = intersect(x.c1, -canonical_class());
    // chi + t (c1 . -K) + 3r t(t+1)
    return {Rat(3 * x.rank), Rat(deg + 3 * x.rank), Rat(x.chi)};
}

HilbertPolynomial hd(const Int& d) {
    // (3t + d)(t + 1) = 3t^2 + (3+d)t + d
    return {Rat(3), Rat(3 + d), Rat(d)};
}

HilbertPolynomial hprime(const Int& d) { return {Rat(0), Rat(d), Rat(1)}; }

}  // namespace dp6::lattice
