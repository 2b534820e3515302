#include "dp6/classify.hpp"

#include <algorithm>

#include "dp6/errors.hpp"

namespace dp6::classify {

using poly::BinaryForm;
using surface::DP6Type;

namespace {

std::string partition_str(const std::vector<int>& parts) {
    std::string s = "[";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + "]";
}

// The unique type with the given (z2, z3) pair.
const DP6Type& type_from_z(const ZeroDimScheme& z2, const ZeroDimScheme& z3) {
    for (const DP6Type& t : surface::all_types())
        if (surface::z_scheme(t, 2) == z2 && surface::z_scheme(t, 3) == z3) return t;
    throw InternalError("InternalInvariantViolation",
                        "no surface type matches z2 = " + z2.str() + ", z3 = " + z3.str());
}

void cross_validate(const ClassificationReport& r) {
    const DP6Type& t = surface::type_info(r.type);
    if (!(surface::z_scheme(t, 2) == r.z2) || !(surface::z_scheme(t, 3) == r.z3))
        throw InternalError("InternalInvariantViolation",
                            "classified (z2, z3) disagrees with the type tables");
}

}  // namespace

// --- pencils ---------------------------------------------------------------

BinaryForm pencil_det_cubic(const BilinearPencil& p) {
    // det of the 3x3 matrix of linear forms s*b0[ij] + t*b1[ij], expanded
    // symbolically by cofactors along the first row.
    auto entry = [&](size_t i, size_t j) {
        return BinaryForm::linear(p.b0.at(i, j), p.b1.at(i, j));
    };
    auto minor2 = [&](size_t r1, size_t r2, size_t c1, size_t c2) {
        return entry(r1, c1) * entry(r2, c2) - entry(r1, c2) * entry(r2, c1);
    };
    BinaryForm det = entry(0, 0) * minor2(1, 2, 1, 2) - entry(0, 1) * minor2(1, 2, 0, 2) +
                     entry(0, 2) * minor2(1, 2, 0, 1);
    return det;
}

void pencil_validate(const BilinearPencil& p) {
    if (p.b0.rows() != 3 || p.b0.cols() != 3 || p.b1.rows() != 3 || p.b1.cols() != 3)
        throw domain_error("InvalidConfig", "", "pencil matrices must be 3x3");
    // independence of the basis
    Mat stacked(2, 9);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            stacked.at(0, 3 * i + j) = p.b0.at(i, j);
            stacked.at(1, 3 * i + j) = p.b1.at(i, j);
        }
    if (linalg::rank(stacked) != 2)
        throw domain_error("InvalidConfig", "", "pencil basis is linearly dependent");

    if (pencil_det_cubic(p).is_zero())
        throw domain_error("PencilInDiscriminant", "det",
                           "the pencil lies inside the discriminant cubic (det = 0 identically)");

    std::vector<BinaryForm> minors;
    auto entry = [&](size_t i, size_t j) {
        return BinaryForm::linear(p.b0.at(i, j), p.b1.at(i, j));
    };
    for (size_t r1 = 0; r1 < 3; ++r1)
        for (size_t r2 = r1 + 1; r2 < 3; ++r2)
            for (size_t c1 = 0; c1 < 3; ++c1)
                for (size_t c2 = c1 + 1; c2 < 3; ++c2)
                    minors.push_back(entry(r1, c1) * entry(r2, c2) -
                                     entry(r1, c2) * entry(r2, c1));
    if (poly::have_common_root(minors))
        throw domain_error("RankOneMember", "segre",
                           "some member of the pencil has rank <= 1");
}

ClassificationReport pencil_classify(const BilinearPencil& p) {
    pencil_validate(p);
    BinaryForm cubic = pencil_det_cubic(p);
    std::vector<int> partition = poly::binary_root_multiplicities(cubic);

    ClassificationReport r;
    r.family = "pencil";
    r.z1 = {{1}};
    r.z2 = ZeroDimScheme{partition};
    r.z3 = {{1, 1}};
    if (partition == std::vector<int>{1, 1, 1}) r.type = 0;
    else if (partition == std::vector<int>{2, 1}) r.type = 2;
    else if (partition == std::vector<int>{3}) r.type = 4;
    else
        throw InternalError("InternalInvariantViolation",
                            "cubic root partition is not a partition of 3");

    // a rank-3 member exists among t/s in {0,1,2,3}: the cubic has at most 3 roots
    std::string member = "none";
    for (int t = 0; t <= 3; ++t)
        if (cubic.eval(1, t) != 0) {
            member = "s=1,t=" + std::to_string(t);
            break;
        }
    std::string coeffs = "[";
    for (int k = 3; k >= 0; --k) {
        coeffs += rat_to_string(cubic.c[static_cast<size_t>(k)]);
        if (k) coeffs += ",";
    }
    coeffs += "]";
    r.diagnostics["det_cubic_s3_to_t3"] = coeffs;
    r.diagnostics["root_partition"] = partition_str(partition);
    r.diagnostics["jordan_blocks"] = partition_str(partition);
    r.diagnostics["rank3_member"] = member;
    cross_validate(r);
    return r;
}

// --- tensors ---------------------------------------------------------------

bool Tensor222::is_zero() const {
    for (const auto& plane : t)
        for (const auto& row : plane)
            for (const Rat& x : row)
                if (x != 0) return false;
    return true;
}

Rat hyperdet(const Tensor222& a) {
    const auto& t = a.t;
    Rat p1 = t[0][0][0] * t[1][1][1];
    Rat p2 = t[0][0][1] * t[1][1][0];
    Rat p3 = t[0][1][0] * t[1][0][1];
    Rat p4 = t[0][1][1] * t[1][0][0];
    Rat m1 = t[0][0][0] * t[0][1][1] * t[1][0][1] * t[1][1][0];
    Rat m2 = t[0][0][1] * t[0][1][0] * t[1][0][0] * t[1][1][1];
    return p1 * p1 + p2 * p2 + p3 * p3 + p4 * p4 -
           2 * (p1 * p2 + p1 * p3 + p1 * p4 + p2 * p3 + p2 * p4 + p3 * p4) + 4 * (m1 + m2);
}

int flattening_rank(const Tensor222& a, int axis) {
    Mat flat(2, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                int row = (axis == 0) ? i : (axis == 1) ? j : k;
                int c1 = (axis == 0) ? j : (axis == 1) ? i : i;
                int c2 = (axis == 0) ? k : (axis == 1) ? k : j;
                flat.at(static_cast<size_t>(row), static_cast<size_t>(2 * c1 + c2)) =
                    a.t[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
            }
    return static_cast<int>(linalg::rank(flat));
}

ClassificationReport tensor_classify(const Tensor222& a) {
    if (a.is_zero()) throw domain_error("InvalidConfig", "", "zero tensor");
    int r0 = flattening_rank(a, 0), r1 = flattening_rank(a, 1), r2 = flattening_rank(a, 2);
    if (r0 == 1 && r1 == 1 && r2 == 1)
        throw domain_error("NotDelPezzo", "O3",
                           "rank-one tensor: the section is a union of three quadrics");
    if (r0 == 1 || r1 == 1 || r2 == 1)
        throw domain_error("NotDelPezzo", "O4",
                           "tensor in the O4 closure: the section is a union of a quadric "
                           "and a scroll");

    Rat det = hyperdet(a);
    ClassificationReport r;
    r.family = "tensor";
    r.z1 = {{1}};
    r.z2 = {{1, 1, 1}};
    if (det != 0) {
        r.type = 0;
        r.z3 = {{1, 1}};
        r.diagnostics["orbit"] = "O7";
    } else {
        r.type = 1;
        r.z3 = {{2}};
        r.diagnostics["orbit"] = "O6";
    }
    r.diagnostics["hyperdet"] = rat_to_string(det);
    r.diagnostics["flattening_ranks"] =
        "[" + std::to_string(r0) + "," + std::to_string(r1) + "," + std::to_string(r2) + "]";
    cross_validate(r);
    return r;
}

// --- blowups of P2 ---------------------------------------------------------

namespace {

bool p2_is_zero(const Point2& p) { return p.x == 0 && p.y == 0 && p.z == 0; }

bool p2_proportional(const Point2& a, const Point2& b) {
    return a.x * b.y - a.y * b.x == 0 && a.x * b.z - a.z * b.x == 0 &&
           a.y * b.z - a.z * b.y == 0;
}

Rat det3(const Point2& a, const Point2& b, const Point2& c) {
    return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
           a.z * (b.x * c.y - b.y * c.x);
}

void require_point(const Point2& p, const std::string& what) {
    if (p2_is_zero(p))
        throw domain_error("InvalidConfig", "", what + ": (0,0,0) is not a projective point");
}

}  // namespace

ClassificationReport blowup_p2_classify(const PointConfigP2& y) {
    ClassificationReport r;
    r.family = "blowup-p2";
    r.z1 = {{1}};

    bool on_line = false;
    switch (y.kind) {
        case PointConfigP2::Kind::Points: {
            if (y.points.size() != 3)
                throw domain_error("InvalidConfig", "", "exactly three points required");
            for (const Point2& p : y.points) require_point(p, "point");
            for (size_t i = 0; i < 3; ++i)
                for (size_t j = i + 1; j < 3; ++j)
                    if (p2_proportional(y.points[i], y.points[j]))
                        throw domain_error("InvalidConfig", "",
                                           "coincident points; encode tangencies as jets");
            on_line = det3(y.points[0], y.points[1], y.points[2]) == 0;
            r.z2 = {{1, 1, 1}};
            break;
        }
        case PointConfigP2::Kind::Jet2: {
            require_point(y.point, "point");
            require_point(y.third, "third point");
            if (p2_is_zero(y.tangent) || p2_proportional(y.point, y.tangent))
                throw domain_error("InvalidConfig", "",
                                   "jet2 tangent does not determine a direction");
            if (p2_proportional(y.point, y.third))
                throw domain_error("InvalidConfig", "",
                                   "the residual point coincides with the jet support");
            on_line = det3(y.point, y.tangent, y.third) == 0;
            r.z2 = {{2, 1}};
            break;
        }
        case PointConfigP2::Kind::Jet3: {
            require_point(y.point, "point");
            if (p2_is_zero(y.tangent) || p2_proportional(y.point, y.tangent))
                throw domain_error("FatPoint", "",
                                   "no tangent direction: the scheme is the infinitesimal "
                                   "neighborhood of a point");
            on_line = (y.c == 0);
            r.z2 = {{3}};
            break;
        }
    }
    r.z3 = on_line ? ZeroDimScheme{{2}} : ZeroDimScheme{{1, 1}};
    r.type = type_from_z(r.z2, r.z3).id;
    r.diagnostics["chain_partition"] = r.z2.str();
    r.diagnostics["on_line"] = on_line ? "true" : "false";
    cross_validate(r);
    return r;
}

// --- blowups of P1 x P1 ----------------------------------------------------

namespace {

bool p1_is_zero(const PointP1& p) { return p.u == 0 && p.v == 0; }
bool p1_equal(const PointP1& a, const PointP1& b) { return a.u * b.v - a.v * b.u == 0; }

void require_p1p1(const PointP1P1& p) {
    if (p1_is_zero(p.first) || p1_is_zero(p.second))
        throw domain_error("InvalidConfig", "", "(0,0) is not a point of P1");
}

}  // namespace

ClassificationReport blowup_p1p1_classify(const ConfigP1P1& y) {
    ClassificationReport r;
    r.family = "blowup-p1p1";
    r.z1 = {{1}};

    std::string ruling = "none";
    switch (y.kind) {
        case ConfigP1P1::Kind::Points: {
            if (y.points.size() != 2)
                throw domain_error("InvalidConfig", "", "exactly two points required");
            require_p1p1(y.points[0]);
            require_p1p1(y.points[1]);
            bool same_first = p1_equal(y.points[0].first, y.points[1].first);
            bool same_second = p1_equal(y.points[0].second, y.points[1].second);
            if (same_first && same_second)
                throw domain_error("InvalidConfig", "",
                                   "coincident points; encode tangencies as a jet");
            if (same_first) ruling = "vertical";
            if (same_second) ruling = "horizontal";
            r.z3 = {{1, 1}};
            break;
        }
        case ConfigP1P1::Kind::Jet: {
            require_p1p1(y.point);
            if (y.du == 0 && y.dv == 0)
                throw domain_error("InvalidConfig", "", "zero tangent vector");
            if (y.dv == 0) ruling = "horizontal";
            if (y.du == 0) ruling = "vertical";
            r.z3 = {{2}};
            break;
        }
    }
    r.z2 = (ruling == "none") ? ZeroDimScheme{{1, 1, 1}} : ZeroDimScheme{{2, 1}};
    r.type = type_from_z(r.z2, r.z3).id;
    r.diagnostics["y_partition"] = r.z3.str();
    r.diagnostics["shared_ruling"] = ruling;
    cross_validate(r);
    return r;
}

}  // namespace dp6::classify
