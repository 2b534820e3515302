#include <doctest.h>

#include <random>

#include "dp6/checks.hpp"
#include "dp6/errors.hpp"
#include "dp6/sod.hpp"

using namespace dp6;
using namespace dp6::lattice;
using namespace dp6::sod;
using surface::all_types;
using surface::type_info;

TEST_CASE("gram matrices") {
    for (const auto& type : all_types()) {
        GramMatrix g = gram(type);
        for (size_t i = 0; i < 6; ++i) {
            CHECK(g.at(i, i) == GradedDims{1});
            for (size_t j = 0; j < i; ++j) CHECK(g.at(i, j).empty());
        }
    }
    // type 0: orthogonal inside blocks
    GramMatrix g0 = gram(type_info(0));
    for (size_t i = 1; i <= 3; ++i)
        for (size_t j = 1; j <= 3; ++j)
            if (i != j) CHECK(g0.at(i, j).empty());
    // type 5: block-3 entry k + k[-1]
    CHECK(gram(type_info(5)).at(4, 5) == GradedDims{1, 1});
    // type 2: only the (h-e1, h-e2) entry inside block 2
    GramMatrix g2 = gram(type_info(2));
    CHECK(g2.at(1, 2) == GradedDims{1, 1});
    CHECK(g2.at(1, 3).empty());
    CHECK(g2.at(2, 3).empty());
}

TEST_CASE("block identification matches the table") {
    const std::vector<std::vector<std::string>> expected = {
        {"Pt", "Pt x Pt x Pt", "Pt x Pt"}, {"Pt", "Pt x Pt x Pt", "R2"},
        {"Pt", "R2 x Pt", "Pt x Pt"},      {"Pt", "R2 x Pt", "R2"},
        {"Pt", "R3", "Pt x Pt"},           {"Pt", "R3", "R2"},
    };
    for (const auto& type : all_types()) {
        auto blocks = identify_blocks(type);
        REQUIRE(blocks.size() == 3);
        for (int b = 0; b < 3; ++b)
            CHECK(blocks[static_cast<size_t>(b)].str() ==
                  expected[static_cast<size_t>(type.id)][static_cast<size_t>(b)]);
    }
}

TEST_CASE("z_from_blocks reproduces the z tables") {
    for (const auto& type : all_types()) {
        auto z = z_from_blocks(identify_blocks(type));
        for (int d = 1; d <= 3; ++d)
            CHECK(z[static_cast<size_t>(d - 1)] == surface::z_scheme(type, d));
    }
}

TEST_CASE("corrupted inventory raises UnrecognizedPattern") {
    bool threw = false;
    try {
        identify_blocks_from_gram(gram_with_inventory(checks::corrupted_inventory()));
    } catch (const DomainError& e) {
        threw = (e.code == "UnrecognizedPattern");
    }
    CHECK(threw);
}

TEST_CASE("simple matching") {
    auto t5 = simple_matching(type_info(5));
    REQUIRE(t5.size() == 3);
    CHECK((t5[0].delta == surface::Delta::D12 && t5[0].block == 2 && t5[0].simple_index == 1));
    CHECK((t5[1].delta == surface::Delta::D23 && t5[1].block == 2 && t5[1].simple_index == 2));
    CHECK((t5[2].delta == surface::Delta::D123 && t5[2].block == 3 && t5[2].simple_index == 1));
    auto t2 = simple_matching(type_info(2));
    REQUIRE(t2.size() == 1);
    CHECK((t2[0].block == 2 && t2[0].factor == 0 && t2[0].simple_index == 1));
    CHECK(simple_matching(type_info(0)).empty());
    for (const auto& type : all_types()) CHECK_NOTHROW(simple_matching(type));
}

TEST_CASE("e-bundle classes") {
    // type 0, d = 2: three reduced components, each O(h-e_i)
    for (int comp = 0; comp < 3; ++comp) {
        NumericalClass c = e_bundle_class(type_info(0), 2, comp);
        CHECK(c.rank == 1);
        CHECK(c.chi == 2);
    }
    // type 4, d = 2: one component of rank 3, chi 6
    NumericalClass t4 = e_bundle_class(type_info(4), 2, 0);
    CHECK(t4.rank == 3);
    CHECK(t4.chi == 6);
    // type 1, d = 3: one component of rank 2, chi 6
    NumericalClass t1 = e_bundle_class(type_info(1), 3, 0);
    CHECK(t1.rank == 2);
    CHECK(t1.chi == 6);
    CHECK_THROWS_AS(e_bundle_class(type_info(0), 2, 3), DomainError);
}

TEST_CASE("chi identities") {
    std::mt19937_64 rng(23);
    auto ri = [&](long long lo, long long hi) {
        return Int(std::uniform_int_distribution<long long>(lo, hi)(rng));
    };
    for (const auto& type : all_types()) {
        std::vector<NumericalClass> samples;
        for (int s = 0; s < 50; ++s)
            samples.push_back({ri(-3, 3),
                               DivisorClass{ri(-4, 4), ri(-4, 4), ri(-4, 4), ri(-4, 4)},
                               ri(-9, 9)});
        CHECK(verify_chi_identities(type, samples));
    }
}

TEST_CASE("duality") {
    for (const auto& type : all_types()) CHECK(verify_duality(type));
}
