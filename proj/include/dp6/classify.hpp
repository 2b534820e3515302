#pragma once

// Classification of concrete members of the three standard families into
// surface types with their Z2/Z3 schemes:
//   - codimension-2 linear sections of P2 x P2 (bilinear pencils),
//   - hyperplane sections of P1 x P1 x P1 (2x2x2 tensors),
//   - anticanonical models of blowups of P2 / P1 x P1 (point configurations).
// Every classifier cross-validates its (z2, z3) against the stored tables.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "dp6/linalg.hpp"
#include "dp6/poly.hpp"
#include "dp6/surface.hpp"

namespace dp6::classify {

using linalg::Mat;
using surface::ZeroDimScheme;

struct ClassificationReport {
    std::string family;
    int type;  // 0..5
    ZeroDimScheme z1, z2, z3;
    std::map<std::string, std::string> diagnostics;
};

// --- P2 x P2 pencils -------------------------------------------------------

// A basis (b0, b1) of a pencil of 3x3 bilinear forms.
struct BilinearPencil {
    Mat b0, b1;  // 3x3, linearly independent
};

// det(s b0 + t b1) as a binary cubic.
poly::BinaryForm pencil_det_cubic(const BilinearPencil& p);

// Throws InvalidConfig (dependent basis), PencilInDiscriminant (det == 0
// identically) or RankOneMember (some member of rank <= 1, decided by a
// common projective root of the nine 2x2-minor quadratics).
void pencil_validate(const BilinearPencil& p);

// Root-multiplicity partition of the determinant cubic decides the type:
// [1,1,1] -> 0, [2,1] -> 2, [3] -> 4; the partition is Z2 itself.
ClassificationReport pencil_classify(const BilinearPencil& p);

// --- P1 x P1 x P1 tensors --------------------------------------------------

struct Tensor222 {
    // t[i][j][k]
    std::array<std::array<std::array<Rat, 2>, 2>, 2> t{};

    bool is_zero() const;
};

// Cayley's degree-4 hyperdeterminant.
Rat hyperdet(const Tensor222& t);

// Rank of the 2x4 flattening along the given axis (0, 1 or 2).
int flattening_rank(const Tensor222& t, int axis);

// Orbit O3 (all flattening ranks 1) and the O4 closure (some flattening rank
// 1) are rejected with NotDelPezzo; otherwise hyperdet != 0 gives type 0 and
// hyperdet = 0 gives type 1.
ClassificationReport tensor_classify(const Tensor222& t);

// --- blowups of P2 ---------------------------------------------------------

struct Point2 {
    Rat x, y, z;
};

struct PointConfigP2 {
    enum class Kind { Points, Jet2, Jet3 };
    Kind kind;
    std::vector<Point2> points;  // Points: three distinct points
    Point2 point{}, tangent{};   // Jet2/Jet3: base point and tangent direction
    Point2 third{};              // Jet2: the residual reduced point
    Rat c{};                     // Jet3: second-order coefficient of the branch
};

// z2 is the chain partition of the configuration, z3 = [2] exactly when the
// configuration lies on a line.  Throws FatPoint for a jet3 with no
// well-defined tangent direction, InvalidConfig for malformed data.
ClassificationReport blowup_p2_classify(const PointConfigP2& y);

// --- blowups of P1 x P1 ----------------------------------------------------

struct PointP1 {
    Rat u, v;
};
struct PointP1P1 {
    PointP1 first, second;
};

struct ConfigP1P1 {
    enum class Kind { Points, Jet };
    Kind kind;
    std::vector<PointP1P1> points;  // Points: two distinct points
    PointP1P1 point{};              // Jet: base point
    Rat du{}, dv{};                 // Jet: tangent components along the two factors
};

// z3 is the configuration partition, z2 = [2,1] when the configuration lies
// in a single ruling; reachable types are 0..3.
ClassificationReport blowup_p1p1_classify(const ConfigP1P1& y);

}  // namespace dp6::classify
