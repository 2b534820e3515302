#include "dp6/sod.hpp"

#include <algorithm>
#include <functional>

#include "dp6/errors.hpp"

namespace dp6::sod {

using lattice::canonical_class;
using lattice::euler_pairing;
using lattice::intersect;
using lattice::line_bundle_class;
using lattice::mutate_left;
using lattice::torsion_class;
using lattice::twist;
using lattice::E1;
using lattice::E2;
using lattice::E3;
using lattice::H;
using surface::delta_class;
using surface::Delta;

const ExceptionalCollection& ExceptionalCollection::standard() {
    static const ExceptionalCollection coll = {
        {{0, 0, 0, 0}, H - E1, H - E2, H - E3, H, 2 * Int(1) * H - E1 - E2 - E3},
        {0, 1, 1, 1, 2, 2}};
    return coll;
}

std::vector<int> ExceptionalCollection::block_members(int block) const {
    std::vector<int> out;
    for (size_t i = 0; i < objects.size(); ++i)
        if (block_of[i] == block) out.push_back(static_cast<int>(i));
    return out;
}

namespace {

GradedDims trim(const surface::Cohomology& c) {
    GradedDims g{c.h0, c.h1, c.h2};
    while (!g.empty() && g.back() == 0) g.pop_back();
    return g;
}

GramMatrix gram_from(const std::function<surface::Cohomology(const DivisorClass&)>& coh) {
    const auto& coll = ExceptionalCollection::standard();
    GramMatrix g;
    g.entry.assign(6, std::vector<GradedDims>(6));
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j)
            g.entry[i][j] = trim(coh(coll.objects[j] - coll.objects[i]));
    return g;
}

bool is_hom_ext1(const GradedDims& g) { return g == GradedDims{1, 1}; }

}  // namespace

GramMatrix gram(const DP6Type& type) {
    return gram_from([&](const DivisorClass& d) { return surface::cohomology(type, d); });
}

GramMatrix gram_with_inventory(const surface::CurveInventory& inv) {
    return gram_from(
        [&](const DivisorClass& d) { return surface::cohomology_with_inventory(inv, d); });
}

std::vector<int> BlockDescription::factor_sizes() const {
    std::vector<int> out;
    for (const auto& f : factors) out.push_back(f.m);
    return out;
}

std::string BlockDescription::str() const {
    std::string s;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += " x ";
        s += factors[i].is_point() ? "Pt" : ("R" + std::to_string(factors[i].m));
    }
    return s;
}

std::vector<BlockDescription> identify_blocks_from_gram(const GramMatrix& g) {
    const auto& coll = ExceptionalCollection::standard();
    for (size_t i = 0; i < 6; ++i)
        if (g.at(i, i) != GradedDims{1})
            throw domain_error("UnrecognizedPattern", "",
                               "Gram diagonal entry is not k at position " + std::to_string(i));
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < i; ++j)
            if (!g.at(i, j).empty())
                throw domain_error("UnrecognizedPattern", "",
                                   "nonzero backward Ext: the collection is not exceptional");

    std::vector<BlockDescription> out;
    for (int b = 0; b <= 2; ++b) {
        std::vector<int> members = coll.block_members(b);
        const size_t n = members.size();
        // adjacency by the k + k[-1] pattern; anything else is foreign to R~_m
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        for (size_t a = 0; a < n; ++a)
            for (size_t c = a + 1; c < n; ++c) {
                const GradedDims& e = g.at(static_cast<size_t>(members[a]),
                                           static_cast<size_t>(members[c]));
                if (e.empty()) continue;
                if (!is_hom_ext1(e))
                    throw domain_error("UnrecognizedPattern", "",
                                       "within-block Ext is neither 0 nor k + k[-1]");
                adj[a][c] = adj[c][a] = true;
            }
        // connected components in collection order
        std::vector<int> comp(n, -1);
        int ncomp = 0;
        for (size_t a = 0; a < n; ++a) {
            if (comp[a] != -1) continue;
            std::vector<size_t> stack{a};
            comp[a] = ncomp;
            while (!stack.empty()) {
                size_t x = stack.back();
                stack.pop_back();
                for (size_t y = 0; y < n; ++y)
                    if (adj[x][y] && comp[y] == -1) {
                        comp[y] = ncomp;
                        stack.push_back(y);
                    }
            }
            ++ncomp;
        }
        BlockDescription desc;
        for (int c = 0; c < ncomp; ++c) {
            BlockFactor f;
            for (size_t a = 0; a < n; ++a)
                if (comp[a] == c) f.members.push_back(members[a]);
            f.m = static_cast<int>(f.members.size());
            // a chain must carry the full pattern between all ordered pairs
            for (size_t x = 0; x < f.members.size(); ++x)
                for (size_t y = x + 1; y < f.members.size(); ++y) {
                    const GradedDims& e = g.at(static_cast<size_t>(f.members[x]),
                                               static_cast<size_t>(f.members[y]));
                    if (!is_hom_ext1(e))
                        throw domain_error(
                            "UnrecognizedPattern", "",
                            "connected block component is not a full Auslander chain");
                }
            desc.factors.push_back(std::move(f));
        }
        std::sort(desc.factors.begin(), desc.factors.end(),
                  [](const BlockFactor& x, const BlockFactor& y) {
                      return x.members.front() < y.members.front();
                  });
        out.push_back(std::move(desc));
    }
    return out;
}

std::vector<BlockDescription> identify_blocks(const DP6Type& type) {
    return identify_blocks_from_gram(gram(type));
}

ZeroDimScheme z_from_blocks(const BlockDescription& block) {
    ZeroDimScheme z;
    for (const auto& f : block.factors) z.partition.push_back(f.m);
    std::sort(z.partition.rbegin(), z.partition.rend());
    return z;
}

std::vector<ZeroDimScheme> z_from_blocks(const std::vector<BlockDescription>& blocks) {
    std::vector<ZeroDimScheme> out;
    for (const auto& b : blocks) out.push_back(z_from_blocks(b));
    return out;
}

std::vector<SimpleMatch> simple_matching(const DP6Type& type) {
    const auto& coll = ExceptionalCollection::standard();
    std::vector<BlockDescription> blocks = identify_blocks(type);
    const NumericalClass o_class = line_bundle_class({0, 0, 0, 0});

    std::vector<SimpleMatch> out;
    for (Delta delta : type.delta_set) {
        int block = (delta == Delta::D123) ? 2 : 1;
        int other = (block == 1) ? 2 : 1;
        NumericalClass dclass = torsion_class(delta_class(delta), 0);

        if (euler_pairing(o_class, dclass) != 0)
            throw InternalError("InternalInvariantViolation",
                                "delta class pairs nontrivially with O");
        for (int idx : coll.block_members(other))
            if (euler_pairing(line_bundle_class(coll.objects[static_cast<size_t>(idx)]), dclass) != 0)
                throw InternalError("InternalInvariantViolation",
                                    "delta class pairs nontrivially with the other block");

        // locate the Auslander factor and the simple index from the pairing
        // pattern chi(E_i, S_l) = [i=l] - [i+1=l]; every other factor of the
        // block must pair to zero
        bool matched = false;
        SimpleMatch match{delta, block + 1, -1, -1};
        const BlockDescription& desc = blocks[static_cast<size_t>(block)];
        for (size_t fi = 0; fi < desc.factors.size(); ++fi) {
            const BlockFactor& f = desc.factors[fi];
            std::vector<Int> v;
            for (int idx : f.members)
                v.push_back(euler_pairing(
                    line_bundle_class(coll.objects[static_cast<size_t>(idx)]), dclass));
            bool zero = std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
            if (zero) continue;
            if (matched)
                throw domain_error("UnrecognizedPattern", "",
                                   "delta class pairs nontrivially with two factors");
            for (int l = 1; l < f.m && !matched; ++l) {
                bool ok = true;
                for (int i = 0; i < f.m; ++i) {
                    Int expect = Int(i == l ? 1 : 0) - Int(i + 1 == l ? 1 : 0);
                    if (v[static_cast<size_t>(i)] != expect) ok = false;
                }
                if (ok) {
                    match.factor = static_cast<int>(fi);
                    match.simple_index = l;
                    matched = true;
                }
            }
            if (!matched)
                throw domain_error("UnrecognizedPattern", "",
                                   "delta class does not pair like an Auslander simple");
        }
        if (!matched)
            throw domain_error("UnrecognizedPattern", "",
                               "delta class is orthogonal to every factor of its block");
        out.push_back(match);
    }
    return out;
}

std::vector<DivisorClass> e_bundle_pieces(const DP6Type& type, int d, int component) {
    ZeroDimScheme z = surface::z_scheme(type, d);
    if (component < 0 || component >= z.support_points())
        throw domain_error("IndexOutOfRange", "", "e_bundle_pieces: bad component index");
    const std::vector<DivisorClass> he = {H - E1, H - E2, H - E3};
    const std::vector<DivisorClass> thirds = {H, 2 * Int(1) * H - E1 - E2 - E3};
    switch (d) {
        case 1:
            return {DivisorClass{0, 0, 0, 0}};
        case 2: {
            int len = z.partition[static_cast<size_t>(component)];
            // parts listed descending: the length-l component collects the
            // first l bundles h-e_1 .. h-e_l, the next one continues from there
            int start = 0;
            for (int c = 0; c < component; ++c) start += z.partition[static_cast<size_t>(c)];
            std::vector<DivisorClass> out;
            for (int s = start; s < start + len; ++s) out.push_back(he[static_cast<size_t>(s)]);
            return out;
        }
        case 3: {
            int len = z.partition[static_cast<size_t>(component)];
            int start = 0;
            for (int c = 0; c < component; ++c) start += z.partition[static_cast<size_t>(c)];
            std::vector<DivisorClass> out;
            for (int s = start; s < start + len; ++s)
                out.push_back(thirds[static_cast<size_t>(s)]);
            return out;
        }
        default:
            throw domain_error("IndexOutOfRange", "", "e_bundle_pieces: d must be 1, 2 or 3");
    }
}

NumericalClass e_bundle_class(const DP6Type& type, int d, int component) {
    NumericalClass total{0, {0, 0, 0, 0}, 0};
    for (const DivisorClass& piece : e_bundle_pieces(type, d, component))
        total = total + line_bundle_class(piece);
    return total;
}

NumericalClass e_bundle_total(const DP6Type& type, int d) {
    NumericalClass total{0, {0, 0, 0, 0}, 0};
    ZeroDimScheme z = surface::z_scheme(type, d);
    for (int c = 0; c < z.support_points(); ++c) total = total + e_bundle_class(type, d, c);
    return total;
}

bool verify_chi_identities(const DP6Type& type, const std::vector<NumericalClass>& samples) {
    const auto& coll = ExceptionalCollection::standard();
    NumericalClass e2 = e_bundle_total(type, 2);
    NumericalClass e3 = e_bundle_total(type, 3);

    std::vector<NumericalClass> all = samples;
    for (const DivisorClass& d : coll.objects) all.push_back(line_bundle_class(d));
    for (Delta delta : type.delta_set) all.push_back(torsion_class(delta_class(delta), 0));

    for (const NumericalClass& x : all) {
        if (euler_pairing(e2, x) != lattice::chi_E2(x)) return false;
        if (euler_pairing(e3, x) != lattice::chi_E3(x)) return false;
    }
    return euler_pairing(e2, e3) == 6 && euler_pairing(e2, e2) == 3 &&
           euler_pairing(e3, e3) == 2;
}

bool verify_duality(const DP6Type& type) {
    (void)type;  // the lattice identities are type-independent
    const auto& coll = ExceptionalCollection::standard();
    const DivisorClass k = canonical_class();
    const DivisorClass h = H;
    const DivisorClass c3 = 2 * Int(1) * H - E1 - E2 - E3;

    // (h) + K = -(2h - e1 - e2 - e3) and symmetrically
    if (!(h + k == -c3) || !(c3 + k == -h)) return false;
    if (!(twist(line_bundle_class(h), k) == line_bundle_class(-c3))) return false;
    if (!(twist(line_bundle_class(c3), k) == line_bundle_class(-h))) return false;

    const NumericalClass o_class = line_bundle_class({0, 0, 0, 0});
    for (int idx : coll.block_members(1)) {
        NumericalClass mutated = mutate_left(
            o_class, line_bundle_class(coll.objects[static_cast<size_t>(idx)]));
        if (euler_pairing(o_class, mutated) != 0) return false;
    }

    // double mutation of block 3 through block 2 then block 1 gives the
    // omega-twisted classes
    auto mutate_chain = [&](NumericalClass x) {
        std::vector<int> b2 = coll.block_members(1);
        for (auto it = b2.rbegin(); it != b2.rend(); ++it)
            x = mutate_left(line_bundle_class(coll.objects[static_cast<size_t>(*it)]), x);
        return mutate_left(o_class, x);
    };
    std::vector<NumericalClass> mutated;
    std::vector<NumericalClass> twisted;
    for (int idx : coll.block_members(2)) {
        NumericalClass x = line_bundle_class(coll.objects[static_cast<size_t>(idx)]);
        mutated.push_back(mutate_chain(x));
        twisted.push_back(twist(x, k));
    }
    // compare as sets
    for (const NumericalClass& t : twisted) {
        bool found = false;
        for (const NumericalClass& x : mutated)
            if (x == t) found = true;
        if (!found) return false;
    }
    return true;
}

}  // namespace dp6::sod
