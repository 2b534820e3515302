#pragma once

// The Auslander algebras R~_m: path algebra of the linear m-vertex quiver
// with arrows beta_l: v_{l-1} -> v_l, alpha_l: v_l -> v_{l-1} and relations
// beta_l alpha_l = alpha_{l+1} beta_{l+1} (1 <= l <= m-2), beta_{m-1} alpha_{m-1} = 0.
// Modules are quiver representations over the rationals; Ext is computed from
// minimal projective resolutions.

#include <optional>
#include <string>
#include <vector>

#include "dp6/linalg.hpp"
#include "dp6/rational.hpp"

namespace dp6::auslander {

using linalg::Mat;

// R~_m in its matrix presentation: slot (i,j) is t^{j-i} k[t]/t^{m-i} for
// i <= j and k[t]/t^{m-i} for i >= j, so basis elements are triples (i,j,k)
// standing for t^k in slot (i,j).
struct AuslanderAlgebra {
    struct BasisElement {
        int i, j, k;
        bool operator==(const BasisElement& o) const = default;
    };

    int m;
    std::vector<BasisElement> basis;
    // mult[a][b]: index of basis[a]*basis[b], or -1 when the product is zero.
    std::vector<std::vector<int>> mult;

    static AuslanderAlgebra create(int m);

    int slot_dim(int i, int j) const;
    int total_dim() const { return static_cast<int>(basis.size()); }
    int index_of(int i, int j, int k) const;  // -1 if absent
    int idempotent(int i) const { return index_of(i, i, 0); }
    int arrow_alpha(int l) const { return index_of(l - 1, l, 1); }  // v_l -> v_{l-1}
    int arrow_beta(int l) const { return index_of(l, l - 1, 0); }   // v_{l-1} -> v_l
};

// Representation of R~_m: component dimensions plus the arrow actions
//   alpha[l]: M_{l+1} -> M_l   (matrix dim[l] x dim[l+1]),
//   beta[l]:  M_l -> M_{l+1}   (matrix dim[l+1] x dim[l]),  0 <= l <= m-2.
struct QuiverModule {
    int m = 1;
    std::vector<int> dim;
    std::vector<Mat> alpha;
    std::vector<Mat> beta;

    int total_dim() const;
    bool satisfies_relations() const;
    void check() const;  // throws RelationViolation
};

QuiverModule zero_module(int m);
QuiverModule simple_module(int m, int i);       // S_i
QuiverModule projective_module(int m, int i);   // P_i = R~_m e_i
QuiverModule standard_module(int m, int i);     // E_i: dims (1,..,1,0,..,0), alpha = id, beta = 0
QuiverModule direct_sum(const QuiverModule& a, const QuiverModule& b);

// Action of the basis element (j,i,k) (a map M_i -> M_j) on v in M_i.
// Out-of-range exponents act by zero.
std::vector<Rat> act(const QuiverModule& mod, int j, int i, int k, const std::vector<Rat>& v);

// Module homomorphisms f: M -> N as per-vertex matrices f[j]: M_j -> N_j
// commuting with the arrows.
struct ModuleMap {
    std::vector<Mat> comp;
};
std::vector<ModuleMap> hom_basis(const QuiverModule& src, const QuiverModule& dst);
bool is_module_map(const QuiverModule& src, const QuiverModule& dst, const ModuleMap& f);

// Cokernel of a module map, with dimensions and induced arrows.
QuiverModule cokernel(const QuiverModule& src, const QuiverModule& dst, const ModuleMap& f);

// Finite direct sum of projectives with labelled generators.
struct ProjSum {
    int m = 1;
    std::vector<int> vertices;  // summand g is P_{vertices[g]}
    QuiverModule mod;
    // labels[j][pos] = (summand, exponent) of the basis vector pos of comp j
    std::vector<std::vector<std::pair<int, int>>> labels;
    // position in component vertices[g] of the generator of summand g
    std::vector<size_t> gen_pos;

    // The module map determined by generator images w[g] in N_{vertices[g]}.
    std::vector<Mat> map_to(const QuiverModule& target,
                            const std::vector<std::vector<Rat>>& images) const;
    std::vector<int> sorted_vertices() const;
};

ProjSum projective_sum(int m, const std::vector<int>& vertices);

// Minimal projective resolution ... -> P^1 -> P^0 -> M -> 0 by iterated
// projective covers of tops.  Terminates within 2m-2 steps for valid modules.
struct Resolution {
    std::vector<ProjSum> levels;
    // diff[k]: per-vertex matrices of P^{k+1} -> P^k  (so diff.size() == levels.size()-1)
    std::vector<std::vector<Mat>> diff;
    // augmentation P^0 -> M
    std::vector<Mat> aug;

    size_t length() const { return levels.empty() ? 0 : levels.size() - 1; }
};
Resolution projective_resolution(const QuiverModule& mod);

// Graded dimensions of Ext^*(M, N); trailing zeros trimmed.
using GradedDims = std::vector<int>;
GradedDims ext(const QuiverModule& m1, const QuiverModule& m2);

// Euler form in the standard-module basis: entries sum (-1)^k dim Ext^k(E_i, E_j).
std::vector<std::vector<Int>> euler_matrix(int m);

// Checks that the Yoneda compositions
//   Hom(E_i,E_j) x Ext^1(E_j,E_k) -> Ext^1(E_i,E_k)  and
//   Ext^1(E_i,E_j) x Hom(E_j,E_k) -> Ext^1(E_i,E_k)
// are isomorphisms, via explicit chain maps on the two-term resolutions.
// Only implemented for m <= 4 (throws UnsupportedSize beyond).
bool compose_check(int m, int i, int j, int k);

// pi_{m*}: the 0-th component with t acting through the (0,0) slot, reported
// as the Jordan-type partition of the nilpotent action of t.
std::vector<int> pi_star(const QuiverModule& mod);

}  // namespace dp6::auslander
