#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dp6/errors.hpp"
#include "dp6/lattice.hpp"

using namespace dp6;
using namespace dp6::lattice;

TEST_CASE("intersection form") {
    CHECK(intersect(H, H) == 1);
    CHECK(intersect(E1, E2) == 0);
    CHECK(intersect(H, E1) == 0);
    CHECK(intersect(E1, E1) == -1);
    DivisorClass d123 = H - E1 - E2 - E3;
    CHECK(intersect(d123, d123) == -2);
}

TEST_CASE("canonical class") {
    DivisorClass k = canonical_class();
    CHECK(k == DivisorClass{-3, 1, 1, 1});
    CHECK(intersect(k, k) == 6);
    CHECK(intersect(k, E1 - E2) == 0);
}

TEST_CASE("Riemann-Roch") {
    CHECK(riemann_roch_chi({0, 0, 0, 0}) == 1);
    CHECK(riemann_roch_chi(-canonical_class()) == 7);
    CHECK(riemann_roch_chi(H - E1) == 2);
}

TEST_CASE("Euler pairing on line bundles and torsion classes") {
    NumericalClass o = structure_sheaf_class();
    CHECK(euler_pairing(o, o) == 1);
    CHECK(euler_pairing(line_bundle_class(H - E1), line_bundle_class(H - E2)) == 0);
    // chi(O(D), O_Delta(-1)) = -D.Delta
    CHECK(euler_pairing(line_bundle_class(H - E1), torsion_class(E1 - E2, 0)) == -1);
}

TEST_CASE("twist") {
    NumericalClass o = structure_sheaf_class();
    CHECK(twist(o, canonical_class()).chi == 1);
    NumericalClass x{2, H - E2, 5};
    CHECK(twist(x, {0, 0, 0, 0}) == x);
    // O(h) (x) omega = O(-2h+e1+e2+e3)
    CHECK(twist(line_bundle_class(H), canonical_class()) ==
          line_bundle_class({-2, 1, 1, 1}));
}

TEST_CASE("left mutation") {
    NumericalClass o = structure_sheaf_class();
    CHECK(mutate_left(o, o).is_zero());
    NumericalClass x = line_bundle_class(H - E1);
    CHECK(euler_pairing(o, mutate_left(o, x)) == 0);
    NumericalClass not_exceptional{2, {0, 0, 0, 0}, 2};
    CHECK_THROWS_AS(mutate_left(not_exceptional, o), DomainError);
}

TEST_CASE("chi_E2 and chi_E3") {
    NumericalClass o = structure_sheaf_class();
    CHECK(chi_E2(o) == 0);
    CHECK(chi_E3(o) == 0);
    // the E_{Z3} class: rank 2, c1 = 3h-e1-e2-e3, chi = 6
    NumericalClass ez3{2, Int(3) * H - E1 - E2 - E3, 6};
    CHECK(chi_E2(ez3) == 6);
}

TEST_CASE("Hilbert polynomials") {
    CHECK(hilbert_poly_of_class(structure_sheaf_class()) == HilbertPolynomial{3, 3, 1});
    CHECK(hilbert_poly_of_class(line_bundle_class(H - E1)) == hd(2));
    CHECK(hilbert_poly_of_class(line_bundle_class(H)) == hd(3));
    CHECK(hd(2) == HilbertPolynomial{3, 5, 2});
    CHECK(hprime(1) == HilbertPolynomial{0, 1, 1});
    for (long long d = -4; d <= 4; ++d) CHECK(hd(Int(d)).eval(-1) == 0);
}

TEST_CASE("random properties: parity, Serre relation, line-bundle consistency") {
    std::mt19937_64 rng(7);
    auto ri = [&](long long lo, long long hi) {
        return Int(std::uniform_int_distribution<long long>(lo, hi)(rng));
    };
    auto rd = [&]() { return DivisorClass{ri(-8, 8), ri(-8, 8), ri(-8, 8), ri(-8, 8)}; };
    const DivisorClass k = canonical_class();
    for (int s = 0; s < 500; ++s) {
        DivisorClass d = rd();
        CHECK(intersect(d, d - k) % 2 == 0);
        NumericalClass x{ri(-3, 3), rd(), ri(-9, 9)};
        NumericalClass y{ri(-3, 3), rd(), ri(-9, 9)};
        CHECK(euler_pairing(x, y) == euler_pairing(y, twist(x, k)));
        DivisorClass d1 = rd(), d2 = rd();
        CHECK(euler_pairing(line_bundle_class(d1), line_bundle_class(d2)) ==
              riemann_roch_chi(d2 - d1));
    }
}
