#include "dp6/checks.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "dp6/auslander.hpp"
#include "dp6/errors.hpp"
#include "dp6/json_io.hpp"
#include "dp6/poly.hpp"
#include "dp6/sod.hpp"

namespace dp6::checks {

using classify::BilinearPencil;
using classify::Tensor222;
using lattice::canonical_class;
using lattice::DivisorClass;
using lattice::euler_pairing;
using lattice::HilbertPolynomial;
using lattice::intersect;
using lattice::line_bundle_class;
using lattice::NumericalClass;
using lattice::riemann_roch_chi;
using lattice::E1;
using lattice::E2;
using lattice::E3;
using lattice::H;
using linalg::Mat;
using surface::DP6Type;
using surface::ZeroDimScheme;

namespace {

struct Ctx {
    std::mt19937_64 rng;
    bool quick = false;

    int scale(int n) const { return quick ? std::max(1, n / 10) : n; }

    Int rand_int(long long lo, long long hi) {
        std::uniform_int_distribution<long long> dist(lo, hi);
        return Int(dist(rng));
    }
    DivisorClass rand_divisor(long long bound) {
        return {rand_int(-bound, bound), rand_int(-bound, bound), rand_int(-bound, bound),
                rand_int(-bound, bound)};
    }
    NumericalClass rand_class() {
        return {rand_int(-3, 3), rand_divisor(4), rand_int(-10, 10)};
    }
    Rat rand_rat(long long bound) { return Rat(rand_int(-bound, bound)); }
    Mat rand_mat(size_t r, size_t c, long long bound) {
        Mat m(r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) m.at(i, j) = rand_rat(bound);
        return m;
    }
    Mat rand_invertible(size_t n, long long bound) {
        while (true) {
            Mat m = rand_mat(n, n, bound);
            if (linalg::det(m) != 0) return m;
        }
    }
};

struct Tally {
    int failures = 0;
    std::string first;

    void expect(bool ok, const std::string& msg) {
        if (ok) return;
        if (failures == 0) first = msg;
        ++failures;
    }
    std::string result() const {
        if (failures == 0) return "";
        return first + (failures > 1 ? " (+" + std::to_string(failures - 1) + " more)" : "");
    }
};

// --- lattice ---------------------------------------------------------------

std::string check_lattice_signature(Ctx& ctx) {
    Tally t;
    const DivisorClass basis[4] = {H, E1, E2, E3};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Int expect = (i != j) ? 0 : (i == 0 ? 1 : -1);
            t.expect(intersect(basis[i], basis[j]) == expect, "Gram matrix is not diag(1,-1,-1,-1)");
        }
    t.expect(canonical_class() == DivisorClass(-3, 1, 1, 1), "K != (-3;1,1,1)");
    t.expect(intersect(canonical_class(), canonical_class()) == 6, "K^2 != 6");
    t.expect(intersect(canonical_class(), E1 - E2) == 0, "K.(e1-e2) != 0");
    for (int s = 0; s < ctx.scale(200); ++s) {
        DivisorClass a = ctx.rand_divisor(20), b = ctx.rand_divisor(20), c = ctx.rand_divisor(20);
        Int l1 = ctx.rand_int(-9, 9), l2 = ctx.rand_int(-9, 9);
        t.expect(intersect(a, b) == intersect(b, a), "intersect not symmetric");
        t.expect(intersect(l1 * a + l2 * b, c) == l1 * intersect(a, c) + l2 * intersect(b, c),
                 "intersect not bilinear");
    }
    return t.result();
}

std::string check_lattice_parity(Ctx& ctx) {
    Tally t;
    const DivisorClass k = canonical_class();
    for (int s = 0; s < ctx.scale(10000); ++s) {
        DivisorClass d = ctx.rand_divisor(50);
        t.expect(intersect(d, d - k) % 2 == 0, "D.(D-K) odd for D = " + d.str());
    }
    t.expect(riemann_roch_chi({0, 0, 0, 0}) == 1, "chi(O) != 1");
    t.expect(riemann_roch_chi(-canonical_class()) == 7, "chi(-K) != 7");
    t.expect(riemann_roch_chi(H - E1) == 2, "chi(h-e1) != 2");
    return t.result();
}

std::string check_lattice_serre(Ctx& ctx) {
    Tally t;
    const DivisorClass k = canonical_class();
    for (int s = 0; s < ctx.scale(10000); ++s) {
        NumericalClass x = ctx.rand_class(), y = ctx.rand_class();
        t.expect(euler_pairing(x, y) == euler_pairing(y, lattice::twist(x, k)),
                 "Serre relation fails");
    }
    return t.result();
}

std::string check_lattice_line_bundle_chi(Ctx& ctx) {
    Tally t;
    for (long long a = -4; a <= 4; ++a)
        for (long long b1 = -4; b1 <= 4; ++b1)
            for (long long b2 = -4; b2 <= 4; ++b2)
                for (long long b3 = -4; b3 <= 4; ++b3) {
                    DivisorClass d{a, b1, b2, b3};
                    for (int s = 0; s < 3; ++s) {
                        DivisorClass base = ctx.rand_divisor(4);
                        t.expect(euler_pairing(line_bundle_class(base),
                                               line_bundle_class(base + d)) ==
                                     riemann_roch_chi(d),
                                 "chi(O(D1),O(D2)) != rr(D2-D1) at D = " + d.str());
                    }
                }
    // chi(O(D), O_Delta(-1)) = -D.Delta
    DivisorClass delta = E1 - E2;
    t.expect(euler_pairing(line_bundle_class(H - E1), lattice::torsion_class(delta, 0)) == -1,
             "chi(O(h-e1), O_D12(-1)) != -1");
    return t.result();
}

std::string check_lattice_hilbert(Ctx& ctx) {
    Tally t;
    using lattice::hd;
    using lattice::hprime;
    t.expect(hd(2) == HilbertPolynomial{3, 5, 2}, "hd(2) != 3t^2+5t+2");
    t.expect(hprime(1) == HilbertPolynomial{0, 1, 1}, "hprime(1) != t+1");
    for (long long d = -5; d <= 5; ++d)
        t.expect(hd(Int(d)).eval(-1) == 0, "hd(d)(-1) != 0");
    // h_d(-t-1) = h_{6-d}(t-1)
    for (long long d = 2; d <= 4; ++d)
        t.expect(hd(Int(d)).substitute(-1, -1) == hd(Int(6 - d)).substitute(1, -1),
                 "hd duality fails for d = " + std::to_string(d));
    // h_O(t+1) - h'_d(t+1) = h_{6-d}(t)
    HilbertPolynomial ho = lattice::hilbert_poly_of_class(lattice::structure_sheaf_class());
    t.expect(ho == HilbertPolynomial{3, 3, 1}, "h_O != 3t(t+1)+1");
    for (long long d = 1; d <= 3; ++d) {
        HilbertPolynomial lhs = ho.substitute(1, 1);
        HilbertPolynomial rhs = hprime(Int(d)).substitute(1, 1);
        t.expect(HilbertPolynomial{lhs.c2 - rhs.c2, lhs.c1 - rhs.c1, lhs.c0 - rhs.c0} ==
                     hd(Int(6 - d)),
                 "ideal-sheaf identity fails for d = " + std::to_string(d));
    }
    // ordering chain for t in [1,100]
    HilbertPolynomial h2 = hd(2), h3 = hd(3), h4 = hd(4);
    for (long long tt = 1; tt <= 100; ++tt) {
        Rat v4 = h4.eval(tt), v3 = h3.eval(tt), v2 = h2.eval(tt), vo = ho.eval(tt);
        Rat w4 = h4.eval(tt - 1), w3 = h3.eval(tt - 1), w2 = h2.eval(tt - 1);
        t.expect(v4 > v3 && v3 > v2 && v2 > vo && vo > w4 && w4 > w3 && w3 > w2,
                 "hd inequality chain fails at t = " + std::to_string(tt));
    }
    // integrality of values at t in [-3,3], leading coefficient 3r, and the
    // polynomial route against the twist route chi(F(-tK))
    for (int s = 0; s < ctx.scale(200); ++s) {
        NumericalClass x = ctx.rand_class();
        HilbertPolynomial h = lattice::hilbert_poly_of_class(x);
        t.expect(h.c2 == Rat(3 * x.rank), "leading coefficient != 3 rank");
        for (long long tt = -3; tt <= 3; ++tt) {
            t.expect(is_integer(h.eval(tt)), "Hilbert value not integral");
            Int direct = lattice::twist(x, Int(-tt) * canonical_class()).chi;
            t.expect(h.eval(tt) == Rat(direct),
                     "Hilbert polynomial disagrees with chi of the twisted class");
        }
    }
    t.expect(lattice::hilbert_poly_of_class(line_bundle_class(H - E1)) == hd(2),
             "h_{O(h-e1)} != h_2");
    t.expect(lattice::hilbert_poly_of_class(line_bundle_class(H)) == hd(3), "h_{O(h)} != h_3");
    return t.result();
}

std::string check_lattice_mutation(Ctx& ctx) {
    Tally t;
    for (int s = 0; s < ctx.scale(2000); ++s) {
        NumericalClass e = line_bundle_class(ctx.rand_divisor(5));
        NumericalClass x = ctx.rand_class();
        t.expect(euler_pairing(e, lattice::mutate_left(e, x)) == 0,
                 "mutation does not orthogonalize");
        t.expect(lattice::mutate_left(e, e).is_zero(), "L_E(E) != 0");
    }
    bool threw = false;
    try {
        NumericalClass bad{2, {0, 0, 0, 0}, 2};
        lattice::mutate_left(bad, bad);
    } catch (const DomainError& e) {
        threw = (e.code == "NotExceptional");
    }
    t.expect(threw, "mutate_left accepted a non-exceptional class");
    return t.result();
}

// --- surface ---------------------------------------------------------------

std::string check_surface_inventory(Ctx&) {
    Tally t;
    const DivisorClass k = canonical_class();
    const size_t expected_lines[6] = {6, 3, 4, 2, 2, 1};
    for (const DP6Type& type : surface::all_types()) {
        surface::CurveInventory inv = surface::negative_curves(type);
        t.expect(inv.minus_one.size() == expected_lines[static_cast<size_t>(type.id)],
                 "wrong number of (-1)-curves in type " + std::to_string(type.id));
        t.expect(inv.minus_two.size() == type.delta_set.size(), "minus_two != delta_set");
        for (const DivisorClass& c : inv.minus_one) {
            t.expect(intersect(c, c) == -1, "minus_one class with C^2 != -1");
            t.expect(intersect(c, -k) == 1, "minus_one class with -K.C != 1");
        }
        for (const DivisorClass& c : inv.minus_two) {
            t.expect(intersect(c, c) == -2, "minus_two class with C^2 != -2");
            t.expect(intersect(c, -k) == 0, "minus_two class with -K.C != 0");
        }
        std::vector<DivisorClass> all = inv.all();
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = i + 1; j < all.size(); ++j)
                t.expect(intersect(all[i], all[j]) >= 0,
                         "negative pairwise intersection in type " + std::to_string(type.id));
        for (const DivisorClass& c : all)
            t.expect(intersect(surface::reference_ample(), c) >= 1,
                     "reference ample does not dominate the inventory");
    }
    return t.result();
}

std::string check_surface_serre_euler(Ctx&) {
    Tally t;
    const DivisorClass k = canonical_class();
    for (const DP6Type& type : surface::all_types()) {
        for (long long a = -4; a <= 4; ++a)
            for (long long b1 = -4; b1 <= 4; ++b1)
                for (long long b2 = -4; b2 <= 4; ++b2)
                    for (long long b3 = -4; b3 <= 4; ++b3) {
                        DivisorClass d{a, b1, b2, b3};
                        surface::Cohomology c = surface::cohomology(type, d);
                        surface::Cohomology cd = surface::cohomology(type, k - d);
                        t.expect(c.h0 == cd.h2 && c.h1 == cd.h1 && c.h2 == cd.h0,
                                 "Serre duality fails for type " + std::to_string(type.id) +
                                     " D = " + d.str());
                        t.expect(c.h0 - c.h1 + c.h2 == riemann_roch_chi(d),
                                 "Euler consistency fails for type " + std::to_string(type.id) +
                                     " D = " + d.str());
                        if (t.failures > 0) return t.result();
                    }
    }
    return t.result();
}

std::string check_surface_monotonicity(Ctx&) {
    Tally t;
    for (const DP6Type& type : surface::all_types()) {
        surface::CurveInventory inv = surface::negative_curves(type);
        for (long long a = -3; a <= 3; ++a)
            for (long long b1 = -3; b1 <= 3; ++b1)
                for (long long b2 = -3; b2 <= 3; ++b2)
                    for (long long b3 = -3; b3 <= 3; ++b3) {
                        DivisorClass d{a, b1, b2, b3};
                        Int h0 = surface::cohomology(type, d).h0;
                        if (h0 <= 0) continue;
                        for (const DivisorClass& c : inv.all())
                            t.expect(surface::cohomology(type, d + c).h0 >= h0,
                                     "effectivity monotonicity fails for type " +
                                         std::to_string(type.id) + " D = " + d.str());
                        if (t.failures > 0) return t.result();
                    }
    }
    return t.result();
}

// Independent h0 oracle for type 0: the resolution is the smooth toric
// surface of the hexagon fan with rays
//   (1,0), (1,1), (0,1), (-1,0), (-1,-1), (0,-1)
// whose toric divisors are the six (-1)-curves; with the lift
//   D = a (h-e1-e2) + (a+b1) e1 + (a+b2) e2 + b3 e3,
// rays (0,1), (1,1), (-1,0), (0,-1) carry coefficients a, a+b1, a+b2, b3 and
// h0(O(D)) is the number of lattice points u with <u, v_rho> >= -a_rho.
Int hexagon_lattice_count(const DivisorClass& d) {
    const Int& a = d.a;
    Int x_hi = a + d.b2;   // ray (-1,0)
    Int y_hi = d.b3;       // ray (0,-1)
    Int y_lo = -a;         // ray (0,1)
    Int count = 0;
    for (Int x = 0; x <= x_hi; ++x)
        for (Int y = y_lo; y <= y_hi; ++y) {
            if (x + y > 0) continue;             // ray (-1,-1)
            if (x + y < -(a + d.b1)) continue;   // ray (1,1)
            ++count;
        }
    return count;
}

std::string check_surface_toric_oracle(Ctx&) {
    Tally t;
    const DP6Type& type0 = surface::type_info(0);
    for (long long a = -3; a <= 3; ++a)
        for (long long b1 = -3; b1 <= 3; ++b1)
            for (long long b2 = -3; b2 <= 3; ++b2)
                for (long long b3 = -3; b3 <= 3; ++b3) {
                    DivisorClass d{a, b1, b2, b3};
                    t.expect(surface::cohomology(type0, d).h0 == hexagon_lattice_count(d),
                             "toric lattice count disagrees with the reduction engine at D = " +
                                 d.str());
                    if (t.failures > 0) return t.result();
                }
    return t.result();
}

std::string check_surface_examples(Ctx&) {
    Tally t;
    using surface::Cohomology;
    for (const DP6Type& type : surface::all_types())
        t.expect(surface::cohomology(type, {0, 0, 0, 0}) == Cohomology{1, 0, 0},
                 "h(O) != (1,0,0)");
    t.expect(surface::cohomology(surface::type_info(2), E1 - E2) == Cohomology{1, 1, 0},
             "type 2: h(e1-e2) != (1,1,0)");
    t.expect(surface::cohomology(surface::type_info(0), E1 - E2) == Cohomology{0, 0, 0},
             "type 0: h(e1-e2) != (0,0,0)");
    t.expect(surface::cohomology(surface::type_info(1), H - E1 - E2 - E3) == Cohomology{1, 1, 0},
             "type 1: h(h-e1-e2-e3) != (1,1,0)");
    t.expect(surface::cohomology(surface::type_info(0), H - E1 - E2 - E3) == Cohomology{0, 0, 0},
             "type 0: h(h-e1-e2-e3) != (0,0,0)");
    t.expect(surface::cohomology(surface::type_info(5), E2 - E3) == Cohomology{1, 1, 0},
             "type 5: h(e2-e3) != (1,1,0)");
    return t.result();
}

std::string check_surface_z_tables(Ctx&) {
    Tally t;
    const std::vector<std::vector<int>> z2 = {{1, 1, 1}, {1, 1, 1}, {2, 1}, {2, 1}, {3}, {3}};
    const std::vector<std::vector<int>> z3 = {{1, 1}, {2}, {1, 1}, {2}, {1, 1}, {2}};
    for (const DP6Type& type : surface::all_types()) {
        size_t id = static_cast<size_t>(type.id);
        t.expect(surface::z_scheme(type, 1).partition == std::vector<int>{1}, "Z1 != [1]");
        t.expect(surface::z_scheme(type, 2).partition == z2[id],
                 "Z2 table wrong for type " + std::to_string(type.id));
        t.expect(surface::z_scheme(type, 3).partition == z3[id],
                 "Z3 table wrong for type " + std::to_string(type.id));
        // lengths 1, 3, 2; for d in {2,3} this is 6/d
        t.expect(surface::z_scheme(type, 1).length() == 1, "len(Z_1) != 1");
        for (int d = 2; d <= 3; ++d)
            t.expect(surface::z_scheme(type, d).length() == 6 / d,
                     "len(Z_d) != 6/d for d = " + std::to_string(d));
    }
    return t.result();
}

std::string check_surface_f1(Ctx&) {
    Tally t;
    const int expected_support[6] = {6, 3, 4, 2, 2, 1};
    for (const DP6Type& type : surface::all_types()) {
        surface::F1Invariants f1 = surface::f1_invariants(type);
        t.expect(f1.total_length == 6, "len(Z2 x Z3) != 6");
        t.expect(f1.support_points == expected_support[static_cast<size_t>(type.id)],
                 "F1 support count wrong for type " + std::to_string(type.id));
    }
    return t.result();
}

// --- auslander -------------------------------------------------------------

namespace aus = dp6::auslander;

aus::QuiverModule conjugate(Ctx& ctx, const aus::QuiverModule& m) {
    std::vector<Mat> q, qinv;
    for (int j = 0; j < m.m; ++j) {
        Mat g = ctx.rand_invertible(static_cast<size_t>(m.dim[j]), 3);
        q.push_back(g);
        qinv.push_back(*linalg::inverse(g));
    }
    aus::QuiverModule out = m;
    for (int l = 0; l < m.m - 1; ++l) {
        out.alpha[l] = q[static_cast<size_t>(l)] * m.alpha[l] * qinv[static_cast<size_t>(l + 1)];
        out.beta[l] = q[static_cast<size_t>(l + 1)] * m.beta[l] * qinv[static_cast<size_t>(l)];
    }
    return out;
}

aus::QuiverModule fuzz_module(Ctx& ctx, int m) {
    aus::QuiverModule sum = aus::zero_module(m);
    int pieces = 1 + static_cast<int>(ctx.rand_int(0, 2));
    for (int p = 0; p < pieces; ++p) {
        int which = static_cast<int>(ctx.rand_int(0, 2));
        int i = static_cast<int>(ctx.rand_int(0, m - 1));
        aus::QuiverModule piece = (which == 0)   ? aus::projective_module(m, i)
                                  : (which == 1) ? aus::simple_module(m, i)
                                                 : aus::standard_module(m, i);
        sum = aus::direct_sum(sum, piece);
    }
    return conjugate(ctx, sum);
}

std::string check_auslander_algebra(Ctx& ctx) {
    Tally t;
    for (int m = 1; m <= 6; ++m) {
        aus::AuslanderAlgebra alg = aus::AuslanderAlgebra::create(m);
        int total = 0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                int d = 0;
                for (const auto& b : alg.basis)
                    if (b.i == i && b.j == j) ++d;
                t.expect(d == alg.slot_dim(i, j), "slot dimension != m - max(i,j)");
                total += d;
            }
        t.expect(total == alg.total_dim(), "total dimension mismatch");
        // relations as elements of the algebra
        for (int l = 1; l <= m - 1; ++l) {
            int ba = alg.mult[static_cast<size_t>(alg.arrow_beta(l))]
                             [static_cast<size_t>(alg.arrow_alpha(l))];
            if (l <= m - 2) {
                int ab = alg.mult[static_cast<size_t>(alg.arrow_alpha(l + 1))]
                                 [static_cast<size_t>(alg.arrow_beta(l + 1))];
                t.expect(ba == ab && ba >= 0, "relation beta_l alpha_l = alpha_{l+1} beta_{l+1}");
            } else {
                t.expect(ba == -1, "relation beta_{m-1} alpha_{m-1} = 0");
            }
        }
        // associativity on random triples
        size_t n = alg.basis.size();
        for (int s = 0; s < ctx.scale(200); ++s) {
            size_t a = static_cast<size_t>(ctx.rand_int(0, static_cast<long long>(n) - 1));
            size_t b = static_cast<size_t>(ctx.rand_int(0, static_cast<long long>(n) - 1));
            size_t c = static_cast<size_t>(ctx.rand_int(0, static_cast<long long>(n) - 1));
            int ab = alg.mult[a][b];
            int bc = alg.mult[b][c];
            int left = (ab >= 0) ? alg.mult[static_cast<size_t>(ab)][c] : -1;
            int right = (bc >= 0) ? alg.mult[a][static_cast<size_t>(bc)] : -1;
            t.expect(left == right, "multiplication table not associative");
        }
    }
    return t.result();
}

std::string check_auslander_modules(Ctx& ctx) {
    Tally t;
    for (int m = 1; m <= 6; ++m)
        for (int i = 0; i < m; ++i) {
            t.expect(aus::projective_module(m, i).satisfies_relations(), "P_i violates relations");
            t.expect(aus::simple_module(m, i).satisfies_relations(), "S_i violates relations");
            t.expect(aus::standard_module(m, i).satisfies_relations(), "E_i violates relations");
        }
    t.expect(aus::standard_module(3, 0).dim == std::vector<int>{1, 0, 0}, "E_0 != S_0 shape");
    t.expect(aus::projective_module(2, 0).dim == std::vector<int>{2, 1}, "P_0 of R~_2 shape");
    for (int m = 2; m <= 6; ++m)
        for (int s = 0; s < ctx.scale(10); ++s)
            t.expect(fuzz_module(ctx, m).satisfies_relations(), "fuzz module violates relations");
    return t.result();
}

std::string check_auslander_resolutions(Ctx& ctx) {
    Tally t;
    for (int m = 2; m <= 6; ++m) {
        for (int i = 0; i <= m - 2; ++i) {
            aus::Resolution r = aus::projective_resolution(aus::standard_module(m, i));
            t.expect(r.levels.size() == 2 && r.levels[0].sorted_vertices() == std::vector<int>{i} &&
                         r.levels[1].sorted_vertices() == std::vector<int>{i + 1},
                     "resolution of E_i is not (P_i; P_{i+1})");
        }
        {
            aus::Resolution r = aus::projective_resolution(aus::standard_module(m, m - 1));
            t.expect(r.levels.size() == 1 &&
                         r.levels[0].sorted_vertices() == std::vector<int>{m - 1},
                     "E_{m-1} is not P_{m-1}");
        }
        for (int l = 1; l <= m - 2; ++l) {
            aus::Resolution r = aus::projective_resolution(aus::simple_module(m, l));
            std::vector<int> mid{l - 1, l + 1};
            t.expect(r.levels.size() == 3 && r.levels[0].sorted_vertices() == std::vector<int>{l} &&
                         r.levels[1].sorted_vertices() == mid &&
                         r.levels[2].sorted_vertices() == std::vector<int>{l},
                     "resolution of S_l is not (P_l; P_{l+1}+P_{l-1}; P_l)");
        }
        for (int i = 0; i < m; ++i) {
            aus::Resolution r = aus::projective_resolution(aus::projective_module(m, i));
            t.expect(r.length() == 0, "projective has a nontrivial resolution");
        }
        for (int s = 0; s < ctx.scale(10); ++s) {
            aus::Resolution r = aus::projective_resolution(fuzz_module(ctx, m));
            t.expect(r.length() <= static_cast<size_t>(2 * m - 2),
                     "resolution longer than the global dimension bound");
        }
    }
    return t.result();
}

std::string check_auslander_ext(Ctx& ctx) {
    Tally t;
    for (int m = 2; m <= 6; ++m) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                aus::GradedDims e = aus::ext(aus::standard_module(m, i), aus::standard_module(m, j));
                aus::GradedDims expect;
                if (i == j) expect = {1};
                else if (i < j) expect = {1, 1};
                t.expect(e == expect, "ext(E_i,E_j) wrong at m=" + std::to_string(m) + " (" +
                                          std::to_string(i) + "," + std::to_string(j) + ")");
            }
        for (int l = 1; l <= m - 1; ++l)
            for (int k = l + 1; k <= m - 1; ++k)
                t.expect(aus::ext(aus::simple_module(m, l), aus::standard_module(m, k)).empty(),
                         "ext(S_l, E_k) != 0 for 1 <= l < k");
        for (int i = 0; i < m; ++i) {
            aus::QuiverModule n = fuzz_module(ctx, m);
            aus::GradedDims e = aus::ext(aus::projective_module(m, i), n);
            aus::GradedDims expect;
            if (n.dim[static_cast<size_t>(i)] > 0) expect = {n.dim[static_cast<size_t>(i)]};
            t.expect(e == expect, "ext(P_i, N) != [dim N_i]");
        }
    }
    // basis-change invariance
    for (int s = 0; s < ctx.scale(10); ++s) {
        int m = 2 + static_cast<int>(ctx.rand_int(0, 2));
        aus::QuiverModule a = fuzz_module(ctx, m);
        aus::QuiverModule b = fuzz_module(ctx, m);
        t.expect(aus::ext(conjugate(ctx, a), b) == aus::ext(a, b),
                 "ext changed under basis change");
    }
    return t.result();
}

std::string check_auslander_ses(Ctx&) {
    Tally t;
    for (int m = 2; m <= 6; ++m)
        for (int i = 1; i <= m - 1; ++i) {
            aus::QuiverModule e_prev = aus::standard_module(m, i - 1);
            aus::QuiverModule e_cur = aus::standard_module(m, i);
            std::vector<aus::ModuleMap> homs = aus::hom_basis(e_prev, e_cur);
            t.expect(homs.size() == 1, "Hom(E_{i-1}, E_i) is not 1-dimensional");
            if (homs.size() != 1) continue;
            const aus::ModuleMap& f = homs[0];
            bool injective = true;
            for (int j = 0; j < m; ++j)
                if (linalg::rank(f.comp[static_cast<size_t>(j)]) !=
                    static_cast<size_t>(e_prev.dim[static_cast<size_t>(j)]))
                    injective = false;
            t.expect(injective, "E_{i-1} -> E_i not injective");
            aus::QuiverModule q = aus::cokernel(e_prev, e_cur, f);
            t.expect(q.dim == aus::simple_module(m, i).dim, "cokernel of E_{i-1} -> E_i is not S_i");
            t.expect(q.satisfies_relations(), "cokernel violates relations");
            bool zero_arrows = true;
            for (int l = 0; l < m - 1; ++l)
                if (!q.alpha[static_cast<size_t>(l)].is_zero() ||
                    !q.beta[static_cast<size_t>(l)].is_zero())
                    zero_arrows = false;
            t.expect(zero_arrows, "cokernel arrows do not vanish");
        }
    return t.result();
}

std::string check_auslander_compose(Ctx&) {
    Tally t;
    for (int m = 2; m <= 4; ++m)
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                for (int k = j + 1; k < m; ++k)
                    t.expect(aus::compose_check(m, i, j, k),
                             "compose_check failed at m=" + std::to_string(m) + " (" +
                                 std::to_string(i) + "," + std::to_string(j) + "," +
                                 std::to_string(k) + ")");
    bool threw = false;
    try {
        aus::compose_check(5, 0, 1, 2);
    } catch (const DomainError& e) {
        threw = (e.code == "UnsupportedSize");
    }
    t.expect(threw, "compose_check(m=5) did not raise UnsupportedSize");
    return t.result();
}

std::string check_auslander_pi_star(Ctx&) {
    Tally t;
    for (int m = 1; m <= 6; ++m) {
        t.expect(aus::pi_star(aus::simple_module(m, 0)) == std::vector<int>{1},
                 "pi_*(S_0) != [1]");
        t.expect(aus::pi_star(aus::projective_module(m, 0)) == std::vector<int>{m},
                 "pi_*(P_0) != [m]");
        for (int l = 1; l < m; ++l)
            t.expect(aus::pi_star(aus::simple_module(m, l)).empty(), "pi_*(S_l) != [] for l >= 1");
        for (int i = 0; i < m; ++i)
            t.expect(aus::pi_star(aus::standard_module(m, i)) == std::vector<int>{1},
                     "pi_*(E_i) != [1]");
    }
    return t.result();
}

std::string check_auslander_euler(Ctx&) {
    Tally t;
    for (int m = 1; m <= 6; ++m) {
        auto mat = aus::euler_matrix(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                t.expect(mat[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
                             Int(i == j ? 1 : 0),
                         "euler_matrix(" + std::to_string(m) + ") is not the identity");
    }
    return t.result();
}

// --- sod -------------------------------------------------------------------

std::vector<std::vector<std::string>> expected_blocks_table() {
    return {
        {"Pt", "Pt x Pt x Pt", "Pt x Pt"}, {"Pt", "Pt x Pt x Pt", "R2"},
        {"Pt", "R2 x Pt", "Pt x Pt"},      {"Pt", "R2 x Pt", "R2"},
        {"Pt", "R3", "Pt x Pt"},           {"Pt", "R3", "R2"},
    };
}

std::string check_sod_gram(Ctx&) {
    Tally t;
    auto expected = expected_blocks_table();
    for (const DP6Type& type : surface::all_types()) {
        sod::GramMatrix g = sod::gram(type);
        for (size_t i = 0; i < 6; ++i) {
            t.expect(g.at(i, i) == sod::GradedDims{1}, "diagonal Gram entry != [1]");
            for (size_t j = 0; j < i; ++j)
                t.expect(g.at(i, j).empty(), "backward Ext nonzero");
        }
        if (type.id == 0)
            for (size_t i = 1; i <= 3; ++i)
                for (size_t j = 1; j <= 3; ++j)
                    if (i != j)
                        t.expect(g.at(i, j).empty(), "type 0 block 2 is not orthogonal");
        if (type.id == 5)
            t.expect(g.at(4, 5) == sod::GradedDims{1, 1}, "type 5 block-3 entry != [1,1]");
        std::vector<sod::BlockDescription> blocks = sod::identify_blocks_from_gram(g);
        for (int b = 0; b < 3; ++b)
            t.expect(blocks[static_cast<size_t>(b)].str() ==
                         expected[static_cast<size_t>(type.id)][static_cast<size_t>(b)],
                     "block table wrong for type " + std::to_string(type.id) + ": got " +
                         blocks[static_cast<size_t>(b)].str());
    }
    return t.result();
}

std::string check_sod_z_cross(Ctx&) {
    Tally t;
    for (const DP6Type& type : surface::all_types()) {
        std::vector<ZeroDimScheme> z = sod::z_from_blocks(sod::identify_blocks(type));
        for (int d = 1; d <= 3; ++d)
            t.expect(z[static_cast<size_t>(d - 1)] == surface::z_scheme(type, d),
                     "z_from_blocks != z_scheme for type " + std::to_string(type.id) +
                         " d = " + std::to_string(d));
    }
    return t.result();
}

std::string check_sod_simples(Ctx&) {
    Tally t;
    // expected (delta -> block, simple index); factor resolved by matching
    for (const DP6Type& type : surface::all_types()) {
        std::vector<sod::SimpleMatch> matches = sod::simple_matching(type);
        t.expect(matches.size() == type.delta_set.size(), "missing simple matches");
        for (const auto& match : matches) {
            if (match.delta == surface::Delta::D12)
                t.expect(match.block == 2 && match.simple_index == 1, "D12 !-> (block2, S_1)");
            if (match.delta == surface::Delta::D23)
                t.expect(match.block == 2 && match.simple_index == 2, "D23 !-> (block2, S_2)");
            if (match.delta == surface::Delta::D123)
                t.expect(match.block == 3 && match.simple_index == 1, "D123 !-> (block3, S_1)");
        }
    }
    // chi(O(h-e_k), O_{D123}(-1)) = 0
    NumericalClass d123 = lattice::torsion_class(H - E1 - E2 - E3, 0);
    for (const DivisorClass& d : {H - E1, H - E2, H - E3})
        t.expect(euler_pairing(line_bundle_class(d), d123) == 0,
                 "O(h-e_k) pairs nontrivially with Delta123");
    t.expect(euler_pairing(line_bundle_class(H - E1), lattice::torsion_class(E1 - E2, 0)) == -1,
             "chi(O(h-e1), O_D12(-1)) != -1");
    return t.result();
}

std::string check_sod_e_bundles(Ctx&) {
    Tally t;
    for (const DP6Type& type : surface::all_types()) {
        for (int d : {2, 3}) {
            ZeroDimScheme z = surface::z_scheme(type, d);
            for (int comp = 0; comp < z.support_points(); ++comp) {
                int len = z.partition[static_cast<size_t>(comp)];
                NumericalClass cls = sod::e_bundle_class(type, d, comp);
                t.expect(cls.rank == len, "e-bundle rank != local length");
                t.expect(cls.chi == Int(d) * len, "e-bundle chi != d * length");
                Int h0_sum = 0;
                for (const DivisorClass& piece : sod::e_bundle_pieces(type, d, comp)) {
                    surface::Cohomology c = surface::cohomology(type, piece);
                    t.expect(c.h1 == 0 && c.h2 == 0, "e-bundle piece has higher cohomology");
                    h0_sum += c.h0;
                    // per-unit Hilbert polynomial is h_d
                    t.expect(lattice::hilbert_poly_of_class(line_bundle_class(piece)) ==
                                 lattice::hd(d),
                             "unit piece Hilbert polynomial != h_d");
                    // dual piece: h(t) = h_d(-t-1) = h_{6-d}(t-1)
                    NumericalClass dual = line_bundle_class(-piece);
                    t.expect(lattice::hilbert_poly_of_class(dual) ==
                                 lattice::hd(d).substitute(-1, -1),
                             "dual piece Hilbert polynomial != h_d(-t-1)");
                    // F4 route: O(-D-K) has chi 4 and Hilbert polynomial h_4 when d = 2
                    if (d == 2) {
                        NumericalClass f4 =
                            line_bundle_class(DivisorClass{0, 0, 0, 0} - piece - canonical_class());
                        t.expect(f4.chi == 4, "E_{Z2}-dual twist chi != 4");
                        t.expect(lattice::hilbert_poly_of_class(f4) == lattice::hd(4),
                                 "E_{Z2}-dual twist Hilbert polynomial != h_4");
                    }
                }
                t.expect(h0_sum == Int(d) * len, "h0(E_Z) != d * length");
            }
        }
        // type-level totals
        t.expect(sod::e_bundle_total(type, 2) ==
                     NumericalClass{3, Int(3) * H - E1 - E2 - E3, 6},
                 "E_{Z2} total class wrong");
        t.expect(sod::e_bundle_total(type, 3) ==
                     NumericalClass{2, Int(3) * H - E1 - E2 - E3, 6},
                 "E_{Z3} total class wrong");
    }
    return t.result();
}

std::string check_sod_chi(Ctx& ctx) {
    Tally t;
    for (const DP6Type& type : surface::all_types()) {
        std::vector<NumericalClass> samples;
        for (int s = 0; s < ctx.scale(100); ++s) samples.push_back(ctx.rand_class());
        t.expect(sod::verify_chi_identities(type, samples),
                 "chi identities fail for type " + std::to_string(type.id));
    }
    t.expect(lattice::chi_E2(lattice::structure_sheaf_class()) == 0, "chi_E2(O) != 0");
    t.expect(lattice::chi_E3(lattice::structure_sheaf_class()) == 0, "chi_E3(O) != 0");
    return t.result();
}

std::string check_sod_duality(Ctx&) {
    Tally t;
    for (const DP6Type& type : surface::all_types())
        t.expect(sod::verify_duality(type), "duality fails for type " + std::to_string(type.id));
    return t.result();
}

std::string check_sod_fault(Ctx&) {
    // fault injection: the corrupt inventory must surface as UnrecognizedPattern
    try {
        sod::identify_blocks_from_gram(sod::gram_with_inventory(corrupted_inventory()));
        return "corrupted inventory was not detected";
    } catch (const Error& e) {
        return e.code + ": " + e.what();
    }
}

// --- classifiers -----------------------------------------------------------

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

std::string check_pencil_fixtures(Ctx&) {
    Tally t;
    {
        BilinearPencil p{Mat::identity(3), mat3({{0, 0, 0}, {0, 1, 0}, {0, 0, 2}})};
        auto r = classify::pencil_classify(p);
        t.expect(r.type == 0 && r.z2.partition == std::vector<int>{1, 1, 1},
                 "(I, diag(0,1,2)) != type 0");
    }
    {
        BilinearPencil p{Mat::identity(3), mat3({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})};
        auto r = classify::pencil_classify(p);
        t.expect(r.type == 4 && r.z2.partition == std::vector<int>{3}, "(I, J3(0)) != type 4");
    }
    {
        BilinearPencil p{Mat::identity(3), mat3({{0, 1, 0}, {0, 0, 0}, {0, 0, 1}})};
        auto r = classify::pencil_classify(p);
        t.expect(r.type == 2 && r.z2.partition == std::vector<int>{2, 1},
                 "(I, J2(0)+J1(1)) != type 2");
    }
    return t.result();
}

BilinearPencil random_valid_pencil(Ctx& ctx) {
    while (true) {
        BilinearPencil p{ctx.rand_mat(3, 3, 4), ctx.rand_mat(3, 3, 4)};
        try {
            classify::pencil_validate(p);
            return p;
        } catch (const DomainError&) {
        }
    }
}

std::string check_pencil_random(Ctx& ctx) {
    Tally t;
    for (int s = 0; s < ctx.scale(1000); ++s) {
        BilinearPencil p = random_valid_pencil(ctx);
        classify::ClassificationReport r = classify::pencil_classify(p);
        // the classifier cross-validates (z2, z3) internally; check invariance
        if (s % 5 == 0) {
            // pencil basis change
            while (true) {
                Rat a = ctx.rand_rat(3), b = ctx.rand_rat(3), c = ctx.rand_rat(3),
                    d = ctx.rand_rat(3);
                if (a * d - b * c == 0) continue;
                BilinearPencil q{a * p.b0 + b * p.b1, c * p.b0 + d * p.b1};
                classify::ClassificationReport r2 = classify::pencil_classify(q);
                t.expect(r2.type == r.type && r2.z2 == r.z2,
                         "pencil classification not invariant under basis change");
                break;
            }
            // left/right multiplication
            Mat l = ctx.rand_invertible(3, 3), rm = ctx.rand_invertible(3, 3);
            BilinearPencil q{l * p.b0 * rm, l * p.b1 * rm};
            classify::ClassificationReport r3 = classify::pencil_classify(q);
            t.expect(r3.type == r.type && r3.z2 == r.z2,
                     "pencil classification not invariant under GL3 x GL3");
        }
        if (t.failures > 0) break;
    }
    return t.result();
}

std::string check_pencil_rejections(Ctx&) {
    Tally t;
    auto expect_error = [&](const BilinearPencil& p, const std::string& code,
                            const std::string& what) {
        try {
            classify::pencil_validate(p);
            t.expect(false, what + ": no error raised");
        } catch (const DomainError& e) {
            t.expect(e.code == code, what + ": got " + e.code + ", want " + code);
        }
    };
    // antisymmetric pencil: det == 0 identically but every member has rank 2
    expect_error({mat3({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}),
                  mat3({{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}})},
                 "PencilInDiscriminant", "antisymmetric pencil");
    // (I, E11): det = s^2(s+t) not identically zero, but t*E11 at s=0 has rank 1
    expect_error({Mat::identity(3), mat3({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}})}, "RankOneMember",
                 "(I, E11)");
    // strictly-upper pencil: det vanishes identically (checked first)
    expect_error({mat3({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}),
                  mat3({{0, 0, 0}, {0, 0, 1}, {0, 0, 0}})},
                 "PencilInDiscriminant", "(E12, E23)");
    // dependent basis
    expect_error({Mat::identity(3), Rat(2) * Mat::identity(3)}, "InvalidConfig",
                 "dependent basis");
    return t.result();
}

Tensor222 rand_tensor(Ctx& ctx, long long bound) {
    Tensor222 t;
    for (auto& plane : t.t)
        for (auto& row : plane)
            for (Rat& x : row) x = ctx.rand_rat(bound);
    return t;
}

std::string check_hyperdet_oracle(Ctx& ctx) {
    Tally t;
    Tensor222 unit;
    unit.t[0][0][0] = 1;
    unit.t[1][1][1] = 1;
    t.expect(classify::hyperdet(unit) == 1, "hyperdet(e000+e111) != 1");
    Tensor222 w;
    w.t[0][0][1] = 1;
    w.t[0][1][0] = 1;
    w.t[1][0][0] = 1;
    t.expect(classify::hyperdet(w) == 0, "hyperdet(W) != 0");
    Tensor222 degenerate;
    degenerate.t[0][0][0] = 1;
    t.expect(classify::hyperdet(degenerate) == 0, "hyperdet(e000) != 0");
    for (int s = 0; s < ctx.scale(1000); ++s) {
        Tensor222 a = rand_tensor(ctx, 6);
        Rat det = classify::hyperdet(a);
        for (int axis = 0; axis < 3; ++axis)
            t.expect(det == slice_discriminant(a, axis),
                     "hyperdet disagrees with the slice oracle on axis " + std::to_string(axis));
        if (t.failures > 0) break;
    }
    return t.result();
}

std::string check_tensor_fixtures(Ctx&) {
    Tally t;
    Tensor222 unit;
    unit.t[0][0][0] = 1;
    unit.t[1][1][1] = 1;
    auto r = classify::tensor_classify(unit);
    t.expect(r.type == 0 && r.z3.partition == std::vector<int>{1, 1}, "e000+e111 != type 0");
    Tensor222 w;
    w.t[0][0][1] = 1;
    w.t[0][1][0] = 1;
    w.t[1][0][0] = 1;
    auto rw = classify::tensor_classify(w);
    t.expect(rw.type == 1 && rw.z3.partition == std::vector<int>{2}, "W tensor != type 1");
    auto expect_orbit = [&](const Tensor222& a, const std::string& orbit) {
        try {
            classify::tensor_classify(a);
            t.expect(false, "degenerate tensor accepted");
        } catch (const DomainError& e) {
            t.expect(e.code == "NotDelPezzo" && e.condition == orbit,
                     "wrong rejection: " + e.code + "/" + e.condition + ", want " + orbit);
        }
    };
    Tensor222 o3;
    o3.t[0][0][0] = 1;  // pure tensor
    expect_orbit(o3, "O3");
    Tensor222 o4;
    o4.t[0][0][0] = 1;
    o4.t[0][1][1] = 1;  // e0 (x) (e00 + e11)
    expect_orbit(o4, "O4");
    return t.result();
}

std::string check_tensor_random(Ctx& ctx) {
    Tally t;
    for (int s = 0; s < ctx.scale(1000); ++s) {
        Tensor222 a = rand_tensor(ctx, 4);
        classify::ClassificationReport r;
        try {
            r = classify::tensor_classify(a);
        } catch (const DomainError&) {
            continue;  // degenerate draw
        }
        if (s % 5 != 0) continue;
        // GL2 x GL2 x GL2 action on one random factor plus a random swap of factors
        Mat g = ctx.rand_invertible(2, 3);
        int axis = static_cast<int>(ctx.rand_int(0, 2));
        Tensor222 b;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) {
                    Rat sum = 0;
                    for (int l = 0; l < 2; ++l) {
                        int ii = axis == 0 ? l : i, jj = axis == 1 ? l : j, kk = axis == 2 ? l : k;
                        int idx = axis == 0 ? i : axis == 1 ? j : k;
                        sum += g.at(static_cast<size_t>(idx), static_cast<size_t>(l)) *
                               a.t[static_cast<size_t>(ii)][static_cast<size_t>(jj)]
                                  [static_cast<size_t>(kk)];
                    }
                    b.t[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] =
                        sum;
                }
        classify::ClassificationReport rb = classify::tensor_classify(b);
        t.expect(rb.type == r.type && rb.diagnostics.at("orbit") == r.diagnostics.at("orbit"),
                 "tensor classification not GL-invariant");
        // a random permutation of the three factors
        const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        const int* perm = perms[ctx.rand_int(0, 5).convert_to<int>()];
        Tensor222 c;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) {
                    int idx[3] = {i, j, k};
                    c.t[static_cast<size_t>(idx[perm[0]])][static_cast<size_t>(idx[perm[1]])]
                       [static_cast<size_t>(idx[perm[2]])] =
                        a.t[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
                }
        classify::ClassificationReport rc = classify::tensor_classify(c);
        t.expect(rc.type == r.type && rc.diagnostics.at("orbit") == r.diagnostics.at("orbit"),
                 "tensor classification not permutation-invariant");
        if (t.failures > 0) break;
    }
    return t.result();
}

std::string check_blowup_p2(Ctx& ctx) {
    Tally t;
    using classify::PointConfigP2;
    auto points = [](std::initializer_list<std::initializer_list<long long>> pts) {
        PointConfigP2 cfg;
        cfg.kind = PointConfigP2::Kind::Points;
        for (const auto& p : pts) {
            auto it = p.begin();
            Rat x(*it++), y(*it++), z(*it);
            cfg.points.push_back({x, y, z});
        }
        return cfg;
    };
    auto expect_type = [&](const PointConfigP2& cfg, int type, const std::string& what) {
        classify::ClassificationReport r = classify::blowup_p2_classify(cfg);
        t.expect(r.type == type, what + ": got type " + std::to_string(r.type));
        return r;
    };
    auto r0 = expect_type(points({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 0, "generic three points");
    t.expect(r0.z2.partition == std::vector<int>{1, 1, 1} &&
                 r0.z3.partition == std::vector<int>{1, 1},
             "generic points (z2, z3) wrong");
    auto r1 = expect_type(points({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), 1, "collinear points");
    t.expect(r1.z2.partition == std::vector<int>{1, 1, 1} &&
                 r1.z3.partition == std::vector<int>{2},
             "collinear points (z2, z3) wrong");
    PointConfigP2 jet2;
    jet2.kind = PointConfigP2::Kind::Jet2;
    jet2.point = {1, 0, 0};
    jet2.tangent = {0, 1, 0};
    jet2.third = {0, 0, 1};
    auto r2 = expect_type(jet2, 2, "tangent + off-line point");
    t.expect(r2.z2.partition == std::vector<int>{2, 1} &&
                 r2.z3.partition == std::vector<int>{1, 1},
             "jet2 off-line (z2, z3) wrong");
    jet2.third = {1, 1, 0};  // on the tangent line
    auto r3 = expect_type(jet2, 3, "tangent + on-line point");
    t.expect(r3.z2.partition == std::vector<int>{2, 1} && r3.z3.partition == std::vector<int>{2},
             "jet2 on-line (z2, z3) wrong");
    PointConfigP2 jet3;
    jet3.kind = PointConfigP2::Kind::Jet3;
    jet3.point = {1, 0, 0};
    jet3.tangent = {0, 1, 0};
    jet3.c = 1;
    auto r4 = expect_type(jet3, 4, "curved 2-jet");
    t.expect(r4.z2.partition == std::vector<int>{3} &&
                 r4.z3.partition == std::vector<int>{1, 1},
             "curved 2-jet (z2, z3) wrong");
    jet3.c = 0;
    auto r5 = expect_type(jet3, 5, "flat 2-jet");
    t.expect(r5.z2.partition == std::vector<int>{3} && r5.z3.partition == std::vector<int>{2},
             "flat 2-jet (z2, z3) wrong");
    // fat point rejection
    jet3.tangent = {2, 0, 0};  // proportional to the support
    try {
        classify::blowup_p2_classify(jet3);
        t.expect(false, "fat point accepted");
    } catch (const DomainError& e) {
        t.expect(e.code == "FatPoint", "fat point raised " + e.code);
    }
    // random consistency; the classifier cross-validates (z2, z3) internally
    for (int s = 0; s < ctx.scale(1000); ++s) {
        PointConfigP2 cfg;
        int kind = static_cast<int>(ctx.rand_int(0, 2));
        try {
            if (kind == 0) {
                cfg.kind = PointConfigP2::Kind::Points;
                for (int p = 0; p < 3; ++p)
                    cfg.points.push_back({ctx.rand_rat(5), ctx.rand_rat(5), ctx.rand_rat(5)});
            } else if (kind == 1) {
                cfg.kind = PointConfigP2::Kind::Jet2;
                cfg.point = {ctx.rand_rat(5), ctx.rand_rat(5), ctx.rand_rat(5)};
                cfg.tangent = {ctx.rand_rat(5), ctx.rand_rat(5), ctx.rand_rat(5)};
                cfg.third = {ctx.rand_rat(5), ctx.rand_rat(5), ctx.rand_rat(5)};
            } else {
                cfg.kind = PointConfigP2::Kind::Jet3;
                cfg.point = {ctx.rand_rat(5), ctx.rand_rat(5), ctx.rand_rat(5)};
                cfg.tangent = {ctx.rand_rat(5), ctx.rand_rat(5), ctx.rand_rat(5)};
                cfg.c = ctx.rand_rat(2);
            }
            classify::blowup_p2_classify(cfg);
        } catch (const DomainError&) {
            continue;  // invalid draw
        }
    }
    return t.result();
}

std::string check_blowup_p1p1(Ctx& ctx) {
    Tally t;
    using classify::ConfigP1P1;
    auto expect_type = [&](const ConfigP1P1& cfg, int type, const std::string& what) {
        classify::ClassificationReport r = classify::blowup_p1p1_classify(cfg);
        t.expect(r.type == type, what + ": got type " + std::to_string(r.type));
        return r;
    };
    ConfigP1P1 two;
    two.kind = ConfigP1P1::Kind::Points;
    two.points = {{{1, 0}, {1, 0}}, {{0, 1}, {0, 1}}};
    expect_type(two, 0, "generic two points");
    two.points = {{{1, 0}, {1, 0}}, {{1, 0}, {0, 1}}};
    auto r2 = expect_type(two, 2, "shared ruling");
    t.expect(r2.z2.partition == std::vector<int>{2, 1} &&
                 r2.z3.partition == std::vector<int>{1, 1},
             "shared-ruling (z2, z3) wrong");
    ConfigP1P1 jet;
    jet.kind = ConfigP1P1::Kind::Jet;
    jet.point = {{1, 0}, {1, 0}};
    jet.du = 1;
    jet.dv = 1;
    expect_type(jet, 1, "generic tangent");
    jet.dv = 0;
    auto r3 = expect_type(jet, 3, "tangent along a ruling");
    t.expect(r3.z2.partition == std::vector<int>{2, 1} && r3.z3.partition == std::vector<int>{2},
             "ruling-tangent (z2, z3) wrong");
    ConfigP1P1 bad;
    bad.kind = ConfigP1P1::Kind::Points;
    bad.points = {{{1, 0}, {1, 0}}, {{2, 0}, {1, 0}}};
    try {
        classify::blowup_p1p1_classify(bad);
        t.expect(false, "coincident points accepted");
    } catch (const DomainError& e) {
        t.expect(e.code == "InvalidConfig", "coincident points raised " + e.code);
    }
    for (int s = 0; s < ctx.scale(1000); ++s) {
        ConfigP1P1 cfg;
        try {
            if (ctx.rand_int(0, 1) == 0) {
                cfg.kind = ConfigP1P1::Kind::Points;
                cfg.points = {{{ctx.rand_rat(4), ctx.rand_rat(4)},
                               {ctx.rand_rat(4), ctx.rand_rat(4)}},
                              {{ctx.rand_rat(4), ctx.rand_rat(4)},
                               {ctx.rand_rat(4), ctx.rand_rat(4)}}};
            } else {
                cfg.kind = ConfigP1P1::Kind::Jet;
                cfg.point = {{ctx.rand_rat(4), ctx.rand_rat(4)},
                             {ctx.rand_rat(4), ctx.rand_rat(4)}};
                cfg.du = ctx.rand_rat(3);
                cfg.dv = ctx.rand_rat(3);
            }
            classify::ClassificationReport r = classify::blowup_p1p1_classify(cfg);
            t.expect(r.type >= 0 && r.type <= 3, "blowup-p1p1 reached type > 3");
        } catch (const DomainError&) {
            continue;
        }
    }
    return t.result();
}

std::string check_report_determinism(Ctx&) {
    Tally t;
    BilinearPencil p{Mat::identity(3), mat3({{0, 0, 0}, {0, 1, 0}, {0, 0, 2}})};
    std::string a = io::report_to_json(classify::pencil_classify(p)).dump(2);
    std::string b = io::report_to_json(classify::pencil_classify(p)).dump(2);
    t.expect(a == b, "report JSON is not deterministic");
    return t.result();
}

}  // namespace

Rat slice_discriminant(const Tensor222& t, int axis) {
    // det(x A0 + y A1) where A0, A1 are the two slices along `axis`:
    // axis 0 reads t[slice][r][c], axis 1 t[r][slice][c], axis 2 t[r][c][slice]
    auto entry = [&](int slice, int r, int c) -> const Rat& {
        int ii = axis == 0 ? slice : r;
        int jj = axis == 1 ? slice : (axis == 0 ? r : c);
        int kk = axis == 2 ? slice : c;
        return t.t[static_cast<size_t>(ii)][static_cast<size_t>(jj)][static_cast<size_t>(kk)];
    };
    using poly::BinaryForm;
    auto lin = [&](int r, int c) { return BinaryForm::linear(entry(0, r, c), entry(1, r, c)); };
    BinaryForm q = lin(0, 0) * lin(1, 1) - lin(0, 1) * lin(1, 0);
    // q = a x^2 + b xy + c y^2; discriminant b^2 - 4ac
    const Rat& a = q.c[2];
    const Rat& b = q.c[1];
    const Rat& c = q.c[0];
    return b * b - 4 * a * c;
}

surface::CurveInventory corrupted_inventory() {
    surface::CurveInventory inv = surface::negative_curves(surface::type_info(4));
    // bogus class breaking the Ext pattern; placed first so the reduction hits it
    inv.minus_one.insert(inv.minus_one.begin(), {-1, 2, -1, 0});
    return inv;
}

std::vector<CheckResult> run_all(const Options& opts) {
    Ctx ctx;
    ctx.rng.seed(opts.seed);
    ctx.quick = opts.quick;

    using CheckFn = std::function<std::string(Ctx&)>;
    std::vector<std::pair<std::string, CheckFn>> checks = {
        {"lattice.signature", check_lattice_signature},
        {"lattice.parity", check_lattice_parity},
        {"lattice.serre_relation", check_lattice_serre},
        {"lattice.line_bundle_chi", check_lattice_line_bundle_chi},
        {"lattice.hilbert", check_lattice_hilbert},
        {"lattice.mutation", check_lattice_mutation},
        {"surface.inventory", check_surface_inventory},
        {"surface.serre_euler", check_surface_serre_euler},
        {"surface.monotonicity", check_surface_monotonicity},
        {"surface.toric_oracle", check_surface_toric_oracle},
        {"surface.examples", check_surface_examples},
        {"surface.z_tables", check_surface_z_tables},
        {"surface.f1", check_surface_f1},
        {"auslander.algebra", check_auslander_algebra},
        {"auslander.modules", check_auslander_modules},
        {"auslander.resolutions", check_auslander_resolutions},
        {"auslander.ext", check_auslander_ext},
        {"auslander.ses_simple", check_auslander_ses},
        {"auslander.compose", check_auslander_compose},
        {"auslander.pi_star", check_auslander_pi_star},
        {"auslander.euler_matrix", check_auslander_euler},
        {"sod.gram_blocks", check_sod_gram},
        {"sod.z_cross_validation", check_sod_z_cross},
        {"sod.simple_matching", check_sod_simples},
        {"sod.e_bundles", check_sod_e_bundles},
        {"sod.chi_identities", check_sod_chi},
        {"sod.duality", check_sod_duality},
        {"classify.pencil_fixtures", check_pencil_fixtures},
        {"classify.pencil_random", check_pencil_random},
        {"classify.pencil_rejections", check_pencil_rejections},
        {"classify.hyperdet_oracle", check_hyperdet_oracle},
        {"classify.tensor_fixtures", check_tensor_fixtures},
        {"classify.tensor_random", check_tensor_random},
        {"classify.blowup_p2", check_blowup_p2},
        {"classify.blowup_p1p1", check_blowup_p1p1},
        {"report.determinism", check_report_determinism},
    };
    if (opts.corrupt_inventory)
        checks.push_back({"sod.inventory_integrity", check_sod_fault});

    std::vector<CheckResult> results;
    for (auto& [name, fn] : checks) {
        CheckResult r{name, false, ""};
        try {
            r.detail = fn(ctx);
            r.pass = r.detail.empty();
        } catch (const Error& e) {
            r.detail = e.code + ": " + e.what();
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace dp6::checks
