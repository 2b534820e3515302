#include <doctest.h>

#include <random>

#include "dp6/linalg.hpp"

using namespace dp6;
using namespace dp6::linalg;

namespace {
Mat make(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<Rat>> r;
    for (const auto& row : rows) {
        std::vector<Rat> v;
        for (long long x : row) v.emplace_back(x);
        r.push_back(v);
    }
    return from_rows(r);
}
}  // namespace

TEST_CASE("rank, nullspace, solve") {
    Mat a = make({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(a) == 2);
    Mat ns = nullspace(a);
    CHECK(ns.cols() == 1);
    CHECK((a * ns).is_zero());

    Mat b = make({{6}, {12}, {2}});
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);

    Mat inconsistent = make({{6}, {11}, {2}});
    CHECK(!solve(a, inconsistent).has_value());
}

TEST_CASE("inverse and det") {
    Mat a = make({{2, 1, 0}, {1, 1, 0}, {0, 3, 1}});
    CHECK(det(a) == 1);
    auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(a * *inv == Mat::identity(3));
    Mat singular = make({{1, 2}, {2, 4}});
    CHECK(det(singular) == 0);
    CHECK(!inverse(singular).has_value());
}

TEST_CASE("random: A * nullspace(A) = 0 and solve solves") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dist(-4, 4), sz(1, 5);
    for (int trial = 0; trial < 100; ++trial) {
        size_t r = static_cast<size_t>(sz(rng)), c = static_cast<size_t>(sz(rng));
        Mat a(r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) a.at(i, j) = Rat(dist(rng));
        CHECK((a * nullspace(a)).is_zero());
        CHECK(rank(a) + nullspace(a).cols() == c);
        Mat x(c, 1);
        for (size_t j = 0; j < c; ++j) x.at(j, 0) = Rat(dist(rng));
        auto sol = solve(a, a * x);
        REQUIRE(sol.has_value());
        CHECK(a * *sol == a * x);
    }
}
