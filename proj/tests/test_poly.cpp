#include <doctest.h>

#include <random>

#include "dp6/poly.hpp"

using namespace dp6;
using namespace dp6::poly;

namespace {
Poly from(std::initializer_list<long long> coeffs_low_to_high) {
    Poly p;
    for (long long c : coeffs_low_to_high) p.c.emplace_back(c);
    p.normalize();
    return p;
}
}  // namespace

TEST_CASE("divmod and gcd") {
    Poly a = from({-1, 0, 1});  // x^2 - 1
    Poly b = from({1, 1});      // x + 1
    auto [q, r] = divmod(a, b);
    CHECK(q == from({-1, 1}));
    CHECK(r.is_zero());
    CHECK(gcd(a, b) == from({1, 1}));
    CHECK(gcd(from({1, 2, 1}), from({1, 1})) == from({1, 1}));
}

TEST_CASE("squarefree decomposition") {
    // x^2 (x+1): multiplicities [2,1]
    Poly f = from({0, 0, 1}) * from({1, 1});
    CHECK(root_multiplicities(f) == std::vector<int>{2, 1});
    // (x-1)^3
    CHECK(root_multiplicities(from({-1, 1}) * from({-1, 1}) * from({-1, 1})) ==
          std::vector<int>{3});
    // x^2+1: irreducible over Q, two distinct roots over the closure
    CHECK(root_multiplicities(from({1, 0, 1})) == std::vector<int>{1, 1});
    // (x^2+1)^2
    CHECK(root_multiplicities(from({1, 0, 1}) * from({1, 0, 1})) == std::vector<int>{2, 2});
}

TEST_CASE("binary forms") {
    // s * t * (s + t)
    BinaryForm f = BinaryForm::linear(1, 0) * BinaryForm::linear(0, 1) * BinaryForm::linear(1, 1);
    CHECK(f.deg == 3);
    CHECK(binary_root_multiplicities(f) == std::vector<int>{1, 1, 1});
    // s^3: triple root at (0:1)
    BinaryForm s3 = BinaryForm::linear(1, 0) * BinaryForm::linear(1, 0) * BinaryForm::linear(1, 0);
    CHECK(binary_root_multiplicities(s3) == std::vector<int>{3});
    // t^2 (s + t): double root at infinity
    BinaryForm t2 = BinaryForm::linear(0, 1) * BinaryForm::linear(0, 1) * BinaryForm::linear(1, 1);
    CHECK(mult_at_infinity(t2) == 2);
    CHECK(binary_root_multiplicities(t2) == std::vector<int>{2, 1});
}

TEST_CASE("common roots of form sets") {
    BinaryForm s = BinaryForm::linear(1, 0), t = BinaryForm::linear(0, 1);
    BinaryForm splust = BinaryForm::linear(1, 1);
    CHECK(have_common_root({s * t, s * splust}));       // share s = 0
    CHECK(!have_common_root({s * s, t * splust}));      // no shared root
    CHECK(have_common_root({t * s, t * splust}));       // share (1:0)
    CHECK(have_common_root({s * t, BinaryForm::zero(2)}));
    // s^2 + t^2 has conjugate roots over the closure; shares them with itself
    BinaryForm circ = s * s + t * t;
    CHECK(have_common_root({circ, circ}));
    CHECK(!have_common_root({circ, s}));
    CHECK(!have_common_root({circ, t * t}));
}

TEST_CASE("random: multiplicities sum to the degree") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
        BinaryForm f = BinaryForm::linear(coeff(rng), coeff(rng));
        for (int i = 0; i < 2; ++i) f = f * BinaryForm::linear(coeff(rng), coeff(rng));
        if (f.is_zero()) continue;
        std::vector<int> parts = binary_root_multiplicities(f);
        int total = 0;
        for (int p : parts) total += p;
        CHECK(total == 3);
    }
}
