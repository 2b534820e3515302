#include <doctest.h>

#include "dp6/auslander.hpp"
#include "dp6/errors.hpp"

using namespace dp6;
using namespace dp6::auslander;

TEST_CASE("algebra basis and relations") {
    for (int m = 1; m <= 5; ++m) {
        AuslanderAlgebra alg = AuslanderAlgebra::create(m);
        int expected = 0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) expected += m - std::max(i, j);
        CHECK(alg.total_dim() == expected);
    }
    AuslanderAlgebra a3 = AuslanderAlgebra::create(3);
    // beta_1 alpha_1 = alpha_2 beta_2 as elements
    int ba = a3.mult[static_cast<size_t>(a3.arrow_beta(1))][static_cast<size_t>(a3.arrow_alpha(1))];
    int ab = a3.mult[static_cast<size_t>(a3.arrow_alpha(2))][static_cast<size_t>(a3.arrow_beta(2))];
    CHECK(ba == ab);
    CHECK(ba >= 0);
    // beta_2 alpha_2 = 0
    CHECK(a3.mult[static_cast<size_t>(a3.arrow_beta(2))][static_cast<size_t>(a3.arrow_alpha(2))] ==
          -1);
}

TEST_CASE("module constructors") {
    CHECK(standard_module(3, 0).dim == std::vector<int>{1, 0, 0});
    CHECK(projective_module(2, 0).dim == std::vector<int>{2, 1});
    CHECK(projective_module(3, 1).dim == std::vector<int>{2, 2, 1});
    for (int m = 1; m <= 5; ++m)
        for (int i = 0; i < m; ++i) {
            CHECK(projective_module(m, i).satisfies_relations());
            CHECK(simple_module(m, i).satisfies_relations());
            CHECK(standard_module(m, i).satisfies_relations());
        }
    CHECK_THROWS_AS(simple_module(3, 3), DomainError);
}

TEST_CASE("projective resolutions") {
    for (int m = 2; m <= 5; ++m) {
        for (int i = 0; i <= m - 2; ++i) {
            Resolution r = projective_resolution(standard_module(m, i));
            REQUIRE(r.levels.size() == 2);
            CHECK(r.levels[0].sorted_vertices() == std::vector<int>{i});
            CHECK(r.levels[1].sorted_vertices() == std::vector<int>{i + 1});
        }
        Resolution top = projective_resolution(standard_module(m, m - 1));
        CHECK(top.levels.size() == 1);
        for (int l = 1; l <= m - 2; ++l) {
            Resolution r = projective_resolution(simple_module(m, l));
            REQUIRE(r.levels.size() == 3);
            CHECK(r.levels[0].sorted_vertices() == std::vector<int>{l});
            CHECK(r.levels[1].sorted_vertices() == std::vector<int>{l - 1, l + 1});
            CHECK(r.levels[2].sorted_vertices() == std::vector<int>{l});
        }
        for (int i = 0; i < m; ++i)
            CHECK(projective_resolution(projective_module(m, i)).length() == 0);
    }
}

TEST_CASE("ext between standard modules") {
    for (int m = 2; m <= 5; ++m)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                GradedDims e = ext(standard_module(m, i), standard_module(m, j));
                if (i == j) CHECK(e == GradedDims{1});
                else if (i < j) CHECK(e == GradedDims{1, 1});
                else CHECK(e.empty());
            }
    // ext(S_l, E_k) = 0 for 1 <= l < k
    for (int m = 3; m <= 5; ++m)
        for (int l = 1; l <= m - 2; ++l)
            for (int k = l + 1; k <= m - 1; ++k)
                CHECK(ext(simple_module(m, l), standard_module(m, k)).empty());
    // ext(P_i, N) concentrated in degree 0
    CHECK(ext(projective_module(3, 1), standard_module(3, 2)) == GradedDims{1});
    CHECK(ext(projective_module(3, 1), simple_module(3, 0)).empty());
}

TEST_CASE("short exact sequence E_{i-1} -> E_i -> S_i") {
    for (int m = 2; m <= 5; ++m)
        for (int i = 1; i <= m - 1; ++i) {
            QuiverModule a = standard_module(m, i - 1);
            QuiverModule b = standard_module(m, i);
            auto homs = hom_basis(a, b);
            REQUIRE(homs.size() == 1);
            for (int j = 0; j < m; ++j)
                CHECK(linalg::rank(homs[0].comp[static_cast<size_t>(j)]) ==
                      static_cast<size_t>(a.dim[static_cast<size_t>(j)]));
            QuiverModule q = cokernel(a, b, homs[0]);
            CHECK(q.dim == simple_module(m, i).dim);
        }
}

TEST_CASE("composition maps") {
    CHECK(compose_check(3, 0, 1, 2));
    CHECK(compose_check(4, 0, 1, 3));
    CHECK(compose_check(4, 0, 2, 3));
    CHECK(compose_check(4, 1, 2, 3));
    CHECK(compose_check(4, 0, 1, 2));
    CHECK_THROWS_AS(compose_check(5, 0, 1, 2), DomainError);
    CHECK_THROWS_AS(compose_check(3, 1, 1, 2), DomainError);
}

TEST_CASE("pi_star") {
    for (int m = 1; m <= 5; ++m) {
        CHECK(pi_star(simple_module(m, 0)) == std::vector<int>{1});
        CHECK(pi_star(projective_module(m, 0)) == std::vector<int>{m});
        for (int l = 1; l < m; ++l) CHECK(pi_star(simple_module(m, l)).empty());
    }
    // direct sums add Jordan blocks
    QuiverModule s = direct_sum(projective_module(3, 0), simple_module(3, 0));
    CHECK(pi_star(s) == std::vector<int>{3, 1});
}

TEST_CASE("euler matrix is the identity") {
    for (int m = 1; m <= 4; ++m) {
        auto mat = euler_matrix(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) CHECK(mat[i][j] == Int(i == j ? 1 : 0));
    }
}

TEST_CASE("relation violations are rejected") {
    QuiverModule broken = standard_module(3, 1);
    broken.beta[0] = broken.alpha[0].transposed();  // beta_1 alpha_1 != alpha_2 beta_2 now
    CHECK(!broken.satisfies_relations());
    CHECK_THROWS_AS(projective_resolution(broken), DomainError);
    CHECK_THROWS_AS(ext(broken, standard_module(3, 0)), DomainError);
}
