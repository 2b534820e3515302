#include <doctest.h>

#include "dp6/errors.hpp"
#include "dp6/surface.hpp"

using namespace dp6;
using namespace dp6::lattice;
using namespace dp6::surface;

TEST_CASE("type table") {
    CHECK(all_types().size() == 6);
    CHECK(type_info(0).delta_set.empty());
    CHECK(type_info(5).delta_set ==
          std::vector<Delta>{Delta::D12, Delta::D23, Delta::D123});
    CHECK(type_info(3).singularities ==
          std::vector<Singularity>{Singularity::A1, Singularity::A1});
    CHECK(type_info(4).singularities == std::vector<Singularity>{Singularity::A2});
    for (int id : {0, 2, 3, 5}) CHECK(type_info(id).toric);
    for (int id : {1, 4}) CHECK(!type_info(id).toric);
    CHECK_THROWS_AS(type_info(6), DomainError);
}

TEST_CASE("negative curve inventories") {
    CHECK(negative_curves(type_info(0)).minus_one.size() == 6);
    CHECK(negative_curves(type_info(0)).minus_two.empty());
    CHECK(negative_curves(type_info(5)).minus_one == std::vector<DivisorClass>{E3});
    CHECK(negative_curves(type_info(5)).minus_two.size() == 3);
    CHECK(negative_curves(type_info(3)).minus_one == std::vector<DivisorClass>{E2, E3});
    const DivisorClass k = canonical_class();
    for (const DP6Type& t : all_types()) {
        for (const DivisorClass& c : negative_curves(t).minus_one) {
            CHECK(intersect(c, c) == -1);
            CHECK(intersect(c, -k) == 1);
        }
        for (const DivisorClass& c : negative_curves(t).minus_two) {
            CHECK(intersect(c, c) == -2);
            CHECK(intersect(c, -k) == 0);
        }
    }
}

TEST_CASE("z schemes") {
    CHECK(z_scheme(type_info(5), 2).partition == std::vector<int>{3});
    CHECK(z_scheme(type_info(0), 3).partition == std::vector<int>{1, 1});
    for (const DP6Type& t : all_types()) {
        CHECK(z_scheme(t, 1).partition == std::vector<int>{1});
        // lengths 1, 3, 2
        for (int d = 2; d <= 3; ++d) CHECK(z_scheme(t, d).length() == 6 / d);
    }
    CHECK(z_scheme(type_info(2), 2).partition == std::vector<int>{2, 1});
    CHECK(z_scheme(type_info(1), 3).partition == std::vector<int>{2});
}

TEST_CASE("cohomology engine: pinned values") {
    for (const DP6Type& t : all_types())
        CHECK(cohomology(t, {0, 0, 0, 0}) == Cohomology{1, 0, 0});
    CHECK(cohomology(type_info(2), E1 - E2) == Cohomology{1, 1, 0});
    CHECK(cohomology(type_info(0), E1 - E2) == Cohomology{0, 0, 0});
    CHECK(cohomology(type_info(1), H - E1 - E2 - E3) == Cohomology{1, 1, 0});
    CHECK(cohomology(type_info(0), H - E1 - E2 - E3) == Cohomology{0, 0, 0});
    // anticanonical system of a sextic del Pezzo
    for (const DP6Type& t : all_types())
        CHECK(cohomology(t, -canonical_class()) == Cohomology{7, 0, 0});
    // O(h): the pencil-plus of lines through the plane
    for (const DP6Type& t : all_types())
        CHECK(cohomology(t, H) == Cohomology{3, 0, 0});
}

TEST_CASE("cohomology engine: Serre duality and Euler characteristic on a box") {
    const DivisorClass k = canonical_class();
    for (const DP6Type& t : all_types())
        for (long long a = -2; a <= 2; ++a)
            for (long long b1 = -2; b1 <= 2; ++b1)
                for (long long b2 = -2; b2 <= 2; ++b2)
                    for (long long b3 = -2; b3 <= 2; ++b3) {
                        DivisorClass d{a, b1, b2, b3};
                        Cohomology c = cohomology(t, d);
                        Cohomology cd = cohomology(t, k - d);
                        CHECK(c.h0 == cd.h2);
                        CHECK(c.h1 == cd.h1);
                        CHECK(c.h0 - c.h1 + c.h2 == riemann_roch_chi(d));
                    }
}

TEST_CASE("f1 invariants") {
    CHECK(f1_invariants(type_info(0)).total_length == 6);
    CHECK(f1_invariants(type_info(0)).support_points == 6);
    CHECK(f1_invariants(type_info(5)).support_points == 1);
    CHECK(f1_invariants(type_info(3)).support_points == 2);
}
