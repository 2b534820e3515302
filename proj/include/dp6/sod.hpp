#pragma once

// Assembles the per-type exceptional collection
//   O, O(h-e1), O(h-e2), O(h-e3), O(h), O(2h-e1-e2-e3)
// with blocks [1 | 3 | 2], computes its graded Ext Gram matrix through the
// cohomology engine, identifies each block with a product of points and
// Auslander algebras, and cross-checks the numerical tables.

#include <map>
#include <string>
#include <vector>

#include "dp6/lattice.hpp"
#include "dp6/surface.hpp"

namespace dp6::sod {

using lattice::DivisorClass;
using lattice::NumericalClass;
using surface::DP6Type;
using surface::ZeroDimScheme;

// Graded dims of Ext^*(O(D_i), O(D_j)) = H^*(D_j - D_i); degrees 0..2,
// trailing zeros trimmed.
using GradedDims = std::vector<Int>;

struct ExceptionalCollection {
    std::vector<DivisorClass> objects;  // size 6, fixed order
    std::vector<int> block_of;          // {0,1,1,1,2,2}

    static const ExceptionalCollection& standard();
    std::vector<int> block_members(int block) const;  // object indices of a block
};

struct GramMatrix {
    std::vector<std::vector<GradedDims>> entry;  // 6x6

    const GradedDims& at(size_t i, size_t j) const { return entry[i][j]; }
};

GramMatrix gram(const DP6Type& type);
// Same Gram computation over an explicit inventory (used for fault injection).
GramMatrix gram_with_inventory(const surface::CurveInventory& inv);

// One factor of a block: a point or the derived category of R~_m.
struct BlockFactor {
    int m;  // 1 = point, m >= 2 = Auslander(m)
    std::vector<int> members;  // object indices of the collection, chain order

    bool is_point() const { return m == 1; }
    bool operator==(const BlockFactor& o) const { return m == o.m && members == o.members; }
};

struct BlockDescription {
    std::vector<BlockFactor> factors;

    std::vector<int> factor_sizes() const;
    std::string str() const;  // e.g. "R3", "R2 x Pt", "Pt x Pt"
};

// Reads the block structure off the Gram matrix: within a block, a maximal
// set of objects pairwise connected by the pattern [1,1] (in collection
// order) is an Auslander chain, an isolated object is a point.  Throws
// UnrecognizedPattern when the Ext pattern is not a product of R~_m's.
std::vector<BlockDescription> identify_blocks(const DP6Type& type);
std::vector<BlockDescription> identify_blocks_from_gram(const GramMatrix& g);

// Auslander(m) contributes a local length m, a point contributes 1.
ZeroDimScheme z_from_blocks(const BlockDescription& block);
std::vector<ZeroDimScheme> z_from_blocks(const std::vector<BlockDescription>& blocks);

// Where each (-2)-curve class lands among the simple modules of the blocks.
struct SimpleMatch {
    surface::Delta delta;
    int block;         // 1-based block number (2 or 3)
    int factor;        // index of the Auslander factor inside the block
    int simple_index;  // l of S_l
};
std::vector<SimpleMatch> simple_matching(const DP6Type& type);

// Constituent line bundles of the E_Z bundle over one connected component of
// Z_d, and its numerical class (rank = local length, chi = d * length).
std::vector<DivisorClass> e_bundle_pieces(const DP6Type& type, int d, int component);
NumericalClass e_bundle_class(const DP6Type& type, int d, int component);
// Total class of E_{Z_d} (sum over components).
NumericalClass e_bundle_total(const DP6Type& type, int d);

// chi(E_{Z2},-) / chi(E_{Z3},-) against the closed formulas, on the
// collection bundles, the rank-0 delta classes and the given samples; also
// the cross-pairings chi(E2,E3)=6, chi(E2,E2)=3, chi(E3,E3)=2.
bool verify_chi_identities(const DP6Type& type, const std::vector<NumericalClass>& samples);

// Lattice shadows of the mutation-duality: omega-twist identities for the
// third block, and orthogonality of mutated classes.
bool verify_duality(const DP6Type& type);

}  // namespace dp6::sod
