#pragma once

// Per-type data of the six sextic du Val del Pezzo surfaces: (-2)-curve sets,
// irreducible negative-curve inventories, the Z1/Z2/Z3 scheme tables, and a
// line-bundle cohomology engine on the minimal resolution.

#include <string>
#include <vector>

#include "dp6/lattice.hpp"

namespace dp6::surface {

using lattice::DivisorClass;

enum class Delta { D12, D23, D123 };

DivisorClass delta_class(Delta d);       // D12=(0;1,-1,0), D23=(0;0,1,-1), D123=(1;-1,-1,-1)
std::string delta_name(Delta d);         // "D12", "D23", "D123"

enum class Singularity { A1, A2 };

// One of the six surface types.
struct DP6Type {
    int id;                                // 0..5
    std::vector<Delta> delta_set;          // the (-2)-curves, Table-1 order
    std::vector<Singularity> singularities;
    bool toric;
};

const DP6Type& type_info(int id);          // throws IndexOutOfRange unless 0 <= id <= 5
const std::vector<DP6Type>& all_types();

// Irreducible negative curves on the resolution of the given type.
struct CurveInventory {
    std::vector<DivisorClass> minus_one;   // C^2 = -1, C.(-K) = 1
    std::vector<DivisorClass> minus_two;   // C^2 = -2, C.(-K) = 0 (= delta_set classes)

    std::vector<DivisorClass> all() const;
};

CurveInventory negative_curves(const DP6Type& type);

// Local lengths of the connected components of a finite scheme, recorded as a
// partition (sorted descending).
struct ZeroDimScheme {
    std::vector<int> partition;

    bool operator==(const ZeroDimScheme& o) const = default;
    int length() const;
    int support_points() const { return static_cast<int>(partition.size()); }
    std::string str() const;
};

// The Z_d tables: Z1 = [1]; Z2 = [1,1,1]/[2,1]/[3]; Z3 = [1,1]/[2].
ZeroDimScheme z_scheme(const DP6Type& type, int d);

struct Cohomology {
    Int h0, h1, h2;
    bool operator==(const Cohomology& o) const = default;
};

// h^i(X~, O(D)) for the given type, by reduction against the negative-curve
// inventory: while some inventory curve C has D.C < 0, replace D by D - C
// (C lies in the base locus, so h0 is unchanged); a class with D.A < 0 for
// the fixed ample A = (7;-3,-2,-1) has h0 = 0; a class meeting every
// inventory curve non-negatively is nef, where h0 = chi(D) and h1 = h2 = 0.
// Then h2(D) = h0(K - D) and h1 = h0 + h2 - chi(D).
// Throws InternalInvariantViolation if h1 < 0 (a wrong inventory).
Cohomology cohomology(const DP6Type& type, const DivisorClass& d);

// Same engine over an explicit inventory; used by tests to cross-check the
// stored tables and to inject corrupted inventories.
Cohomology cohomology_with_inventory(const CurveInventory& inv, const DivisorClass& d);

// The fixed reference ample class, with A.C >= 1 for every inventory curve
// of every type.
DivisorClass reference_ample();

// Numerical invariants of the Hilbert scheme of lines F1 = Z2 x Z3:
// total length 6 and one support point per (-1)-curve.
struct F1Invariants {
    int total_length;
    int support_points;
};
F1Invariants f1_invariants(const DP6Type& type);

}  // namespace dp6::surface
