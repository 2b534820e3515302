#include "dp6/surface.hpp"

#include <numeric>

#include "dp6/errors.hpp"

namespace dp6::surface {

using lattice::canonical_class;
using lattice::intersect;
using lattice::riemann_roch_chi;
using lattice::E1;
using lattice::E2;
using lattice::E3;
using lattice::H;

DivisorClass delta_class(Delta d) {
    switch (d) {
        case Delta::D12: return E1 - E2;
        case Delta::D23: return E2 - E3;
        case Delta::D123: return H - E1 - E2 - E3;
    }
    throw InternalError("InternalInvariantViolation", "unknown delta");
}

std::string delta_name(Delta d) {
    switch (d) {
        case Delta::D12: return "D12";
        case Delta::D23: return "D23";
        case Delta::D123: return "D123";
    }
    return "?";
}

const std::vector<DP6Type>& all_types() {
    static const std::vector<DP6Type> types = {
        {0, {}, {}, true},
        {1, {Delta::D123}, {Singularity::A1}, false},
        {2, {Delta::D12}, {Singularity::A1}, true},
        {3, {Delta::D12, Delta::D123}, {Singularity::A1, Singularity::A1}, true},
        {4, {Delta::D12, Delta::D23}, {Singularity::A2}, false},
        {5, {Delta::D12, Delta::D23, Delta::D123}, {Singularity::A2, Singularity::A1}, true},
    };
    return types;
}

const DP6Type& type_info(int id) {
    if (id < 0 || id > 5)
        throw domain_error("IndexOutOfRange", "", "surface type must be in 0..5");
    return all_types()[static_cast<size_t>(id)];
}

std::vector<DivisorClass> CurveInventory::all() const {
    std::vector<DivisorClass> out = minus_one;
    out.insert(out.end(), minus_two.begin(), minus_two.end());
    return out;
}

CurveInventory negative_curves(const DP6Type& type) {
    // The (-1)-curve lists are fixed per-type data, validated by
    // self-intersections, K-degrees, pairwise adjacency and the downstream
    // Ext tables.
    CurveInventory inv;
    switch (type.id) {
        case 0: inv.minus_one = {E1, E2, E3, H - E1 - E2, H - E1 - E3, H - E2 - E3}; break;
        case 1: inv.minus_one = {E1, E2, E3}; break;
        case 2: inv.minus_one = {E2, E3, H - E1 - E2, H - E1 - E3}; break;
        case 3: inv.minus_one = {E2, E3}; break;
        case 4: inv.minus_one = {E3, H - E1 - E2}; break;
        case 5: inv.minus_one = {E3}; break;
        default: throw domain_error("IndexOutOfRange", "", "surface type must be in 0..5");
    }
    for (Delta d : type.delta_set) inv.minus_two.push_back(delta_class(d));
    return inv;
}

int ZeroDimScheme::length() const {
    return std::accumulate(partition.begin(), partition.end(), 0);
}

std::string ZeroDimScheme::str() const {
    std::string s = "[";
    for (size_t i = 0; i < partition.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(partition[i]);
    }
    return s + "]";
}

ZeroDimScheme z_scheme(const DP6Type& type, int d) {
    switch (d) {
        case 1: return {{1}};
        case 2:
            if (type.id <= 1) return {{1, 1, 1}};
            if (type.id <= 3) return {{2, 1}};
            return {{3}};
        case 3:
            return (type.id % 2 == 0) ? ZeroDimScheme{{1, 1}} : ZeroDimScheme{{2}};
        default:
            throw domain_error("IndexOutOfRange", "", "z_scheme: d must be 1, 2 or 3");
    }
}

DivisorClass reference_ample() { return {7, -3, -2, -1}; }

namespace {

Int h0_by_reduction(const CurveInventory& inv, DivisorClass d) {
    const DivisorClass ample = reference_ample();
    const std::vector<DivisorClass> curves = inv.all();
    // For the stored inventories A.C >= 1, so d.A drops every step; the
    // guard only matters for injected inventories that break that bound.
    for (int step = 0; step < 10000; ++step) {
        if (intersect(d, ample) < 0) return 0;
        bool reduced = false;
        for (const DivisorClass& c : curves) {
            if (intersect(d, c) < 0) {
                d = d - c;  // C is in the base locus of |D|
                reduced = true;
                break;
            }
        }
        if (!reduced) return riemann_roch_chi(d);  // d is nef
    }
    throw InternalError("InternalInvariantViolation",
                        "cohomology reduction did not terminate (bad inventory)");
}

}  // namespace

Cohomology cohomology_with_inventory(const CurveInventory& inv, const DivisorClass& d) {
    Int h0 = h0_by_reduction(inv, d);
    Int h2 = h0_by_reduction(inv, canonical_class() - d);
    Int h1 = h0 + h2 - riemann_roch_chi(d);
    if (h1 < 0)
        throw InternalError("InternalInvariantViolation",
                            "cohomology: h1 < 0 for D = " + d.str() +
                                " (inventory does not generate the effective cone)");
    return {h0, h1, h2};
}

Cohomology cohomology(const DP6Type& type, const DivisorClass& d) {
    return cohomology_with_inventory(negative_curves(type), d);
}

F1Invariants f1_invariants(const DP6Type& type) {
    ZeroDimScheme z2 = z_scheme(type, 2);
    ZeroDimScheme z3 = z_scheme(type, 3);
    F1Invariants f1{z2.length() * z3.length(), z2.support_points() * z3.support_points()};
    auto lines = negative_curves(type).minus_one.size();
    if (f1.support_points != static_cast<int>(lines))
        throw InternalError("InternalInvariantViolation",
                            "f1_invariants: support count disagrees with the (-1)-curve count");
    return f1;
}

}  // namespace dp6::surface
