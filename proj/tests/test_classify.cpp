#include <doctest.h>

#include <random>

#include "dp6/checks.hpp"
#include "dp6/classify.hpp"
#include "dp6/errors.hpp"

using namespace dp6;
using namespace dp6::classify;
using linalg::Mat;

namespace {
Mat mat3(std::initializer_list<std::initializer_list<long long>> rows) {
    Mat m(3, 3);
    size_t i = 0;
    for (const auto& row : rows) {
        size_t j = 0;
        for (long long v : row) m.at(i, j++) = Rat(v);
        ++i;
    }
    return m;
}
}  // namespace

TEST_CASE("pencil fixtures") {
    BilinearPencil generic{Mat::identity(3), mat3({{0, 0, 0}, {0, 1, 0}, {0, 0, 2}})};
    auto r0 = pencil_classify(generic);
    CHECK(r0.type == 0);
    CHECK(r0.z2.partition == std::vector<int>{1, 1, 1});
    CHECK(r0.z3.partition == std::vector<int>{1, 1});

    BilinearPencil jordan3{Mat::identity(3), mat3({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})};
    auto r4 = pencil_classify(jordan3);
    CHECK(r4.type == 4);
    CHECK(r4.z2.partition == std::vector<int>{3});

    BilinearPencil jordan21{Mat::identity(3), mat3({{0, 1, 0}, {0, 0, 0}, {0, 0, 1}})};
    auto r2 = pencil_classify(jordan21);
    CHECK(r2.type == 2);
    CHECK(r2.z2.partition == std::vector<int>{2, 1});
}

TEST_CASE("pencil rejections") {
    auto code_of = [](const BilinearPencil& p) -> std::string {
        try {
            pencil_validate(p);
            return "ok";
        } catch (const DomainError& e) {
            return e.code;
        }
    };
    // antisymmetric: det vanishes identically, no rank-one member
    CHECK(code_of({mat3({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}),
                   mat3({{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}})}) == "PencilInDiscriminant");
    // (I, E11): det != 0 identically but the member at s=0 has rank 1
    CHECK(code_of({Mat::identity(3), mat3({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}})}) ==
          "RankOneMember");
    // strictly-upper pencil: rejected as PencilInDiscriminant (det check first)
    CHECK(code_of({mat3({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}),
                   mat3({{0, 0, 0}, {0, 0, 1}, {0, 0, 0}})}) == "PencilInDiscriminant");
    // dependent basis
    CHECK(code_of({Mat::identity(3), Rat(3) * Mat::identity(3)}) == "InvalidConfig");
    // (E11, E22): both members of the basis have rank 1, but det == 0 is seen first
    CHECK(code_of({mat3({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}),
                   mat3({{0, 0, 0}, {0, 1, 0}, {0, 0, 0}})}) == "PencilInDiscriminant");
}

TEST_CASE("hyperdet fixtures and slice oracle") {
    Tensor222 unit;
    unit.t[0][0][0] = 1;
    unit.t[1][1][1] = 1;
    CHECK(hyperdet(unit) == 1);
    Tensor222 w;
    w.t[0][0][1] = 1;
    w.t[0][1][0] = 1;
    w.t[1][0][0] = 1;
    CHECK(hyperdet(w) == 0);
    Tensor222 single;
    single.t[0][0][0] = 1;
    CHECK(hyperdet(single) == 0);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> dist(-5, 5);
    for (int trial = 0; trial < 300; ++trial) {
        Tensor222 a;
        for (auto& plane : a.t)
            for (auto& row : plane)
                for (Rat& x : row) x = Rat(dist(rng));
        Rat d = hyperdet(a);
        for (int axis = 0; axis < 3; ++axis) CHECK(d == checks::slice_discriminant(a, axis));
    }
}

TEST_CASE("tensor classification") {
    Tensor222 unit;
    unit.t[0][0][0] = 1;
    unit.t[1][1][1] = 1;
    auto r0 = tensor_classify(unit);
    CHECK(r0.type == 0);
    CHECK(r0.z3.partition == std::vector<int>{1, 1});
    CHECK(r0.z2.partition == std::vector<int>{1, 1, 1});

    Tensor222 w;
    w.t[0][0][1] = 1;
    w.t[0][1][0] = 1;
    w.t[1][0][0] = 1;
    auto r1 = tensor_classify(w);
    CHECK(r1.type == 1);
    CHECK(r1.z3.partition == std::vector<int>{2});

    Tensor222 o4;
    o4.t[0][0][0] = 1;
    o4.t[0][1][1] = 1;
    try {
        tensor_classify(o4);
        CHECK(false);
    } catch (const DomainError& e) {
        CHECK(e.code == "NotDelPezzo");
        CHECK(e.condition == "O4");
    }
    Tensor222 o3;
    o3.t[1][1][1] = 1;
    try {
        tensor_classify(o3);
        CHECK(false);
    } catch (const DomainError& e) {
        CHECK(e.condition == "O3");
    }
}

TEST_CASE("blowup of P2") {
    PointConfigP2 generic;
    generic.kind = PointConfigP2::Kind::Points;
    generic.points = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(blowup_p2_classify(generic).type == 0);

    PointConfigP2 collinear = generic;
    collinear.points = {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
    auto r1 = blowup_p2_classify(collinear);
    CHECK(r1.type == 1);
    CHECK(r1.z3.partition == std::vector<int>{2});

    PointConfigP2 jet2;
    jet2.kind = PointConfigP2::Kind::Jet2;
    jet2.point = {1, 0, 0};
    jet2.tangent = {0, 1, 0};
    jet2.third = {0, 0, 1};
    CHECK(blowup_p2_classify(jet2).type == 2);
    jet2.third = {1, 2, 0};
    CHECK(blowup_p2_classify(jet2).type == 3);

    PointConfigP2 jet3;
    jet3.kind = PointConfigP2::Kind::Jet3;
    jet3.point = {1, 0, 0};
    jet3.tangent = {0, 1, 0};
    jet3.c = Rat(1, 2);
    CHECK(blowup_p2_classify(jet3).type == 4);
    jet3.c = 0;
    auto r5 = blowup_p2_classify(jet3);
    CHECK(r5.type == 5);
    CHECK(r5.z2.partition == std::vector<int>{3});
    CHECK(r5.z3.partition == std::vector<int>{2});

    // fat point: tangent proportional to the support point
    jet3.tangent = {3, 0, 0};
    try {
        blowup_p2_classify(jet3);
        CHECK(false);
    } catch (const DomainError& e) {
        CHECK(e.code == "FatPoint");
    }
    // coincident reduced points
    generic.points = {{1, 0, 0}, {2, 0, 0}, {0, 0, 1}};
    CHECK_THROWS_AS(blowup_p2_classify(generic), DomainError);
}

TEST_CASE("blowup of P1 x P1") {
    ConfigP1P1 two;
    two.kind = ConfigP1P1::Kind::Points;
    two.points = {{{1, 0}, {1, 0}}, {{0, 1}, {0, 1}}};
    auto r0 = blowup_p1p1_classify(two);
    CHECK(r0.type == 0);
    CHECK(r0.z3.partition == std::vector<int>{1, 1});

    two.points = {{{1, 0}, {1, 0}}, {{1, 0}, {0, 1}}};  // shared first coordinate
    auto r2 = blowup_p1p1_classify(two);
    CHECK(r2.type == 2);
    CHECK(r2.z2.partition == std::vector<int>{2, 1});

    ConfigP1P1 jet;
    jet.kind = ConfigP1P1::Kind::Jet;
    jet.point = {{1, 2}, {1, 0}};
    jet.du = 1;
    jet.dv = Rat(2, 3);
    auto r1 = blowup_p1p1_classify(jet);
    CHECK(r1.type == 1);
    CHECK(r1.z3.partition == std::vector<int>{2});

    jet.du = 0;
    auto r3 = blowup_p1p1_classify(jet);
    CHECK(r3.type == 3);
    CHECK(r3.z2.partition == std::vector<int>{2, 1});

    jet.dv = 0;
    CHECK_THROWS_AS(blowup_p1p1_classify(jet), DomainError);
}
