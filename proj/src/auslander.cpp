#include "dp6/auslander.hpp"

#include <algorithm>
#include <map>

#include "dp6/errors.hpp"

namespace dp6::auslander {

using linalg::coordinates_in_basis;
using linalg::column_basis;
using linalg::nullspace;
using linalg::rank;
using linalg::solve;

// ---------------------------------------------------------------------------
// The algebra

AuslanderAlgebra AuslanderAlgebra::create(int m) {
    if (m < 1) throw domain_error("IndexOutOfRange", "", "Auslander algebra needs m >= 1");
    AuslanderAlgebra alg;
    alg.m = m;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = std::max(0, j - i); k <= m - i - 1; ++k)
                alg.basis.push_back({i, j, k});
    size_t n = alg.basis.size();
    alg.mult.assign(n, std::vector<int>(n, -1));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            const BasisElement& x = alg.basis[a];
            const BasisElement& y = alg.basis[b];
            if (x.j != y.i) continue;
            alg.mult[a][b] = alg.index_of(x.i, y.j, x.k + y.k);
        }
    return alg;
}

int AuslanderAlgebra::slot_dim(int i, int j) const { return m - std::max(i, j); }

int AuslanderAlgebra::index_of(int i, int j, int k) const {
    if (i < 0 || j < 0 || i >= m || j >= m) return -1;
    if (k < std::max(0, j - i) || k > m - i - 1) return -1;
    for (size_t a = 0; a < basis.size(); ++a)
        if (basis[a].i == i && basis[a].j == j && basis[a].k == k) return static_cast<int>(a);
    return -1;
}

// ---------------------------------------------------------------------------
// Modules

int QuiverModule::total_dim() const {
    int t = 0;
    for (int d : dim) t += d;
    return t;
}

bool QuiverModule::satisfies_relations() const {
    if (static_cast<int>(dim.size()) != m) return false;
    if (m == 1) return true;
    for (int l = 0; l + 1 <= m - 2; ++l)
        if (!(beta[l] * alpha[l] - alpha[l + 1] * beta[l + 1]).is_zero()) return false;
    if (!(beta[m - 2] * alpha[m - 2]).is_zero()) return false;
    return true;
}

void QuiverModule::check() const {
    if (!satisfies_relations())
        throw domain_error("RelationViolation", "", "quiver module violates the R~_m relations");
}

QuiverModule zero_module(int m) {
    QuiverModule mod;
    mod.m = m;
    mod.dim.assign(m, 0);
    for (int l = 0; l < m - 1; ++l) {
        mod.alpha.emplace_back(0, 0);
        mod.beta.emplace_back(0, 0);
    }
    return mod;
}

QuiverModule simple_module(int m, int i) {
    if (i < 0 || i >= m) throw domain_error("IndexOutOfRange", "", "simple_module: bad vertex");
    QuiverModule mod = zero_module(m);
    mod.dim[i] = 1;
    for (int l = 0; l < m - 1; ++l) {
        mod.alpha[l] = Mat(mod.dim[l], mod.dim[l + 1]);
        mod.beta[l] = Mat(mod.dim[l + 1], mod.dim[l]);
    }
    return mod;
}

QuiverModule standard_module(int m, int i) {
    if (i < 0 || i >= m) throw domain_error("IndexOutOfRange", "", "standard_module: bad vertex");
    QuiverModule mod = zero_module(m);
    for (int l = 0; l <= i; ++l) mod.dim[l] = 1;
    for (int l = 0; l < m - 1; ++l) {
        mod.alpha[l] = Mat(mod.dim[l], mod.dim[l + 1]);
        if (l + 1 <= i) mod.alpha[l].at(0, 0) = 1;  // alpha acts by the identity
        mod.beta[l] = Mat(mod.dim[l + 1], mod.dim[l]);
    }
    return mod;
}

QuiverModule projective_module(int m, int i) {
    if (i < 0 || i >= m) throw domain_error("IndexOutOfRange", "", "projective_module: bad vertex");
    // (P_i)_j has basis t^k, max(0, i-j) <= k <= m-j-1; alpha shifts the
    // exponent up by one, beta is the truncation keeping k <= m-j-2.
    QuiverModule mod = zero_module(m);
    auto lo = [&](int j) { return std::max(0, i - j); };
    auto hi = [&](int j) { return m - j - 1; };
    for (int j = 0; j < m; ++j) mod.dim[j] = hi(j) - lo(j) + 1;
    for (int l = 0; l < m - 1; ++l) {
        Mat a(mod.dim[l], mod.dim[l + 1]);
        for (int k = lo(l + 1); k <= hi(l + 1); ++k)
            if (k + 1 >= lo(l) && k + 1 <= hi(l)) a.at(k + 1 - lo(l), k - lo(l + 1)) = 1;
        Mat b(mod.dim[l + 1], mod.dim[l]);
        for (int k = lo(l); k <= hi(l); ++k)
            if (k >= lo(l + 1) && k <= hi(l + 1)) b.at(k - lo(l + 1), k - lo(l)) = 1;
        mod.alpha[l] = a;
        mod.beta[l] = b;
    }
    return mod;
}

QuiverModule direct_sum(const QuiverModule& a, const QuiverModule& b) {
    if (a.m != b.m) throw domain_error("RelationViolation", "", "direct_sum: different m");
    QuiverModule s = zero_module(a.m);
    for (int j = 0; j < a.m; ++j) s.dim[j] = a.dim[j] + b.dim[j];
    auto block = [](const Mat& x, const Mat& y) {
        Mat z(x.rows() + y.rows(), x.cols() + y.cols());
        for (size_t i = 0; i < x.rows(); ++i)
            for (size_t j = 0; j < x.cols(); ++j) z.at(i, j) = x.at(i, j);
        for (size_t i = 0; i < y.rows(); ++i)
            for (size_t j = 0; j < y.cols(); ++j) z.at(x.rows() + i, x.cols() + j) = y.at(i, j);
        return z;
    };
    for (int l = 0; l < a.m - 1; ++l) {
        s.alpha[l] = block(a.alpha[l], b.alpha[l]);
        s.beta[l] = block(a.beta[l], b.beta[l]);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Algebra action on a module

namespace {

std::vector<Rat> mat_apply(const Mat& m, const std::vector<Rat>& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("apply: shape");
    std::vector<Rat> out(m.rows(), Rat(0));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) out[i] += m.at(i, j) * v[j];
    return out;
}

// Loop t at vertex l: alpha[l] beta[l] for l <= m-2, zero at the last vertex.
std::vector<Rat> apply_loop(const QuiverModule& mod, int l, std::vector<Rat> v) {
    if (l >= mod.m - 1) return std::vector<Rat>(v.size(), Rat(0));
    return mat_apply(mod.alpha[l], mat_apply(mod.beta[l], std::move(v)));
}

}  // namespace

std::vector<Rat> act(const QuiverModule& mod, int j, int i, int k,
                     const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != mod.dim[i]) throw std::invalid_argument("act: shape");
    int lo = std::max(0, i - j);
    if (k < lo || k > mod.m - j - 1) return std::vector<Rat>(mod.dim[j], Rat(0));
    std::vector<Rat> w = v;
    for (int s = 0; s < k - std::max(0, i - j); ++s) w = apply_loop(mod, i, std::move(w));
    if (j <= i) {
        for (int l = i - 1; l >= j; --l) w = mat_apply(mod.alpha[l], std::move(w));
    } else {
        for (int l = i; l < j; ++l) w = mat_apply(mod.beta[l], std::move(w));
    }
    return w;
}

// ---------------------------------------------------------------------------
// Hom spaces

std::vector<ModuleMap> hom_basis(const QuiverModule& src, const QuiverModule& dst) {
    if (src.m != dst.m) throw domain_error("RelationViolation", "", "hom_basis: different m");
    const int m = src.m;
    // Unknowns: entries of f[j] (dst.dim[j] x src.dim[j]), flattened.
    std::vector<size_t> offset(m + 1, 0);
    for (int j = 0; j < m; ++j)
        offset[j + 1] = offset[j] + static_cast<size_t>(dst.dim[j]) * src.dim[j];
    size_t nvars = offset[m];

    std::vector<std::vector<Rat>> eqs;
    auto var = [&](int j, size_t r, size_t c) {
        return offset[j] + r * static_cast<size_t>(src.dim[j]) + c;
    };
    // f[l] srcAlpha[l] = dstAlpha[l] f[l+1]  and  f[l+1] srcBeta[l] = dstBeta[l] f[l]
    for (int l = 0; l < m - 1; ++l) {
        for (int r = 0; r < dst.dim[l]; ++r)
            for (int c = 0; c < src.dim[l + 1]; ++c) {
                std::vector<Rat> eq(nvars, Rat(0));
                for (int s = 0; s < src.dim[l]; ++s)
                    eq[var(l, r, s)] += src.alpha[l].at(s, c);
                for (int s = 0; s < dst.dim[l + 1]; ++s)
                    eq[var(l + 1, s, c)] -= dst.alpha[l].at(r, s);
                eqs.push_back(std::move(eq));
            }
        for (int r = 0; r < dst.dim[l + 1]; ++r)
            for (int c = 0; c < src.dim[l]; ++c) {
                std::vector<Rat> eq(nvars, Rat(0));
                for (int s = 0; s < src.dim[l + 1]; ++s)
                    eq[var(l + 1, r, s)] += src.beta[l].at(s, c);
                for (int s = 0; s < dst.dim[l]; ++s)
                    eq[var(l, s, c)] -= dst.beta[l].at(r, s);
                eqs.push_back(std::move(eq));
            }
    }
    Mat system = eqs.empty() ? Mat(0, nvars) : linalg::from_rows(eqs);
    Mat basis = nullspace(system);

    std::vector<ModuleMap> out;
    for (size_t b = 0; b < basis.cols(); ++b) {
        ModuleMap f;
        for (int j = 0; j < m; ++j) {
            Mat mj(dst.dim[j], src.dim[j]);
            for (size_t r = 0; r < mj.rows(); ++r)
                for (size_t c = 0; c < mj.cols(); ++c) mj.at(r, c) = basis.at(var(j, r, c), b);
            f.comp.push_back(std::move(mj));
        }
        out.push_back(std::move(f));
    }
    return out;
}

bool is_module_map(const QuiverModule& src, const QuiverModule& dst, const ModuleMap& f) {
    for (int l = 0; l < src.m - 1; ++l) {
        if (!(f.comp[l] * src.alpha[l] - dst.alpha[l] * f.comp[l + 1]).is_zero()) return false;
        if (!(f.comp[l + 1] * src.beta[l] - dst.beta[l] * f.comp[l]).is_zero()) return false;
    }
    return true;
}

QuiverModule cokernel(const QuiverModule& src, const QuiverModule& dst, const ModuleMap& f) {
    if (!is_module_map(src, dst, f))
        throw domain_error("RelationViolation", "", "cokernel: not a module map");
    const int m = dst.m;
    // Per-vertex: complete a column basis of im f[j] to a basis of dst_j by
    // standard vectors; the chosen complement represents the quotient.
    std::vector<Mat> full(m);       // [im basis | complement]
    std::vector<size_t> imdim(m);
    for (int j = 0; j < m; ++j) {
        Mat img = f.comp[j];
        Mat aug = img.augmented(Mat::identity(dst.dim[j]));
        std::vector<size_t> piv = column_basis(aug);
        Mat basis(dst.dim[j], piv.size());
        size_t col = 0, im_count = 0;
        for (size_t p : piv) {
            for (int r = 0; r < dst.dim[j]; ++r) basis.at(r, col) = aug.at(r, p);
            if (p < img.cols()) ++im_count;
            ++col;
        }
        full[j] = basis;
        imdim[j] = im_count;
    }
    QuiverModule q = zero_module(m);
    for (int j = 0; j < m; ++j) q.dim[j] = dst.dim[j] - static_cast<int>(imdim[j]);
    auto induced = [&](const Mat& arrow, int from, int to) {
        // coordinates of arrow * (complement basis of `from`) in full[to],
        // then drop the image rows
        Mat comp_from(dst.dim[from], q.dim[from]);
        for (int c = 0; c < q.dim[from]; ++c)
            for (int r = 0; r < dst.dim[from]; ++r)
                comp_from.at(r, c) = full[from].at(r, imdim[from] + c);
        Mat coords = coordinates_in_basis(full[to], arrow * comp_from);
        Mat out(q.dim[to], q.dim[from]);
        for (int r = 0; r < q.dim[to]; ++r)
            for (int c = 0; c < q.dim[from]; ++c) out.at(r, c) = coords.at(imdim[to] + r, c);
        return out;
    };
    for (int l = 0; l < m - 1; ++l) {
        q.alpha[l] = induced(dst.alpha[l], l + 1, l);
        q.beta[l] = induced(dst.beta[l], l, l + 1);
    }
    return q;
}

// ---------------------------------------------------------------------------
// Projective sums and resolutions

ProjSum projective_sum(int m, const std::vector<int>& vertices) {
    ProjSum ps;
    ps.m = m;
    ps.vertices = vertices;
    ps.mod = zero_module(m);
    ps.labels.assign(m, {});
    ps.gen_pos.assign(vertices.size(), 0);
    for (size_t g = 0; g < vertices.size(); ++g) {
        int i = vertices[g];
        QuiverModule p = projective_module(m, i);
        for (int j = 0; j < m; ++j) {
            int lo = std::max(0, i - j);
            for (int k = lo; k <= m - j - 1; ++k) {
                if (j == i && k == 0) ps.gen_pos[g] = ps.labels[j].size();
                ps.labels[j].emplace_back(static_cast<int>(g), k);
            }
        }
        ps.mod = direct_sum(ps.mod, p);
    }
    return ps;
}

std::vector<Mat> ProjSum::map_to(const QuiverModule& target,
                                 const std::vector<std::vector<Rat>>& images) const {
    std::vector<Mat> f(m);
    for (int j = 0; j < m; ++j) {
        Mat fj(target.dim[j], mod.dim[j]);
        for (size_t pos = 0; pos < labels[j].size(); ++pos) {
            auto [g, k] = labels[j][pos];
            std::vector<Rat> w = act(target, j, vertices[static_cast<size_t>(g)], k,
                                     images[static_cast<size_t>(g)]);
            for (size_t r = 0; r < w.size(); ++r) fj.at(r, pos) = w[r];
        }
        f[j] = std::move(fj);
    }
    return f;
}

std::vector<int> ProjSum::sorted_vertices() const {
    std::vector<int> v = vertices;
    std::sort(v.begin(), v.end());
    return v;
}

namespace {

struct Cover {
    ProjSum proj;
    std::vector<Mat> map;  // proj -> M
};

// Projective cover P(top M) -> M.
Cover projective_cover(const QuiverModule& mod) {
    const int m = mod.m;
    std::vector<int> gens_vertex;
    std::vector<std::vector<Rat>> gens_vec;
    for (int j = 0; j < m; ++j) {
        // radical component: im alpha[j] + im beta[j-1]
        size_t rad_cols = 0;
        if (j <= m - 2) rad_cols += mod.dim[j + 1];
        if (j >= 1) rad_cols += mod.dim[j - 1];
        Mat rad(mod.dim[j], rad_cols);
        size_t col = 0;
        if (j <= m - 2)
            for (int c = 0; c < mod.dim[j + 1]; ++c, ++col)
                for (int r = 0; r < mod.dim[j]; ++r) rad.at(r, col) = mod.alpha[j].at(r, c);
        if (j >= 1)
            for (int c = 0; c < mod.dim[j - 1]; ++c, ++col)
                for (int r = 0; r < mod.dim[j]; ++r) rad.at(r, col) = mod.beta[j - 1].at(r, c);
        // standard vectors completing the radical to all of M_j lift a basis
        // of the top at vertex j
        Mat aug = rad.augmented(Mat::identity(mod.dim[j]));
        for (size_t p : column_basis(aug)) {
            if (p < rad.cols()) continue;
            std::vector<Rat> e(mod.dim[j], Rat(0));
            e[p - rad.cols()] = 1;
            gens_vertex.push_back(j);
            gens_vec.push_back(std::move(e));
        }
    }
    Cover cover;
    cover.proj = projective_sum(m, gens_vertex);
    cover.map = cover.proj.map_to(mod, gens_vec);
    return cover;
}

// Kernel of a per-vertex map f: P -> M as a module with inclusion matrices.
struct Submodule {
    QuiverModule mod;
    std::vector<Mat> incl;  // incl[j]: K_j -> P_j
};

Submodule kernel_module(const QuiverModule& big, const std::vector<Mat>& f) {
    const int m = big.m;
    Submodule k;
    k.mod = zero_module(m);
    k.incl.resize(m);
    for (int j = 0; j < m; ++j) {
        k.incl[j] = nullspace(f[j]);
        k.mod.dim[j] = static_cast<int>(k.incl[j].cols());
    }
    for (int l = 0; l < m - 1; ++l) {
        k.mod.alpha[l] = coordinates_in_basis(k.incl[l], big.alpha[l] * k.incl[l + 1]);
        k.mod.beta[l] = coordinates_in_basis(k.incl[l + 1], big.beta[l] * k.incl[l]);
    }
    return k;
}

}  // namespace

Resolution projective_resolution(const QuiverModule& mod) {
    mod.check();
    const int max_steps = std::max(2 * mod.m - 2, 1);
    Resolution res;

    QuiverModule current = mod;              // module resolved at this level
    std::vector<Mat> incl_prev;              // current -> P^{k-1} (empty at level 0)
    for (int step = 0; ; ++step) {
        if (current.total_dim() == 0) break;
        if (step > max_steps)
            throw InternalError("InternalInvariantViolation",
                                "projective resolution exceeded the global dimension bound");
        Cover cover = projective_cover(current);
        if (step == 0) {
            res.aug = cover.map;
        } else {
            std::vector<Mat> d(static_cast<size_t>(mod.m));
            for (int j = 0; j < mod.m; ++j) d[j] = incl_prev[j] * cover.map[j];
            res.diff.push_back(std::move(d));
        }
        Submodule ker = kernel_module(cover.proj.mod, cover.map);
        res.levels.push_back(std::move(cover.proj));
        current = ker.mod;
        incl_prev = ker.incl;
    }
    if (res.levels.empty()) res.levels.push_back(projective_sum(mod.m, {}));
    return res;
}

GradedDims ext(const QuiverModule& m1, const QuiverModule& m2) {
    if (m1.m != m2.m) throw domain_error("RelationViolation", "", "ext: different m");
    m2.check();
    Resolution res = projective_resolution(m1);
    const size_t nlevels = res.levels.size();

    // C^k = Hom(P^k, N) identified with sum of N_{i_g} over generators.
    std::vector<size_t> cdim(nlevels, 0);
    std::vector<std::vector<size_t>> block_offset(nlevels);
    for (size_t k = 0; k < nlevels; ++k) {
        for (int v : res.levels[k].vertices) {
            block_offset[k].push_back(cdim[k]);
            cdim[k] += static_cast<size_t>(m2.dim[v]);
        }
    }

    // delta^k: C^k -> C^{k+1}, f -> f . d^{k+1}
    std::vector<Mat> delta;
    for (size_t k = 0; k + 1 < nlevels; ++k) {
        const ProjSum& pk = res.levels[k];
        const ProjSum& pk1 = res.levels[k + 1];
        const std::vector<Mat>& d = res.diff[k];
        Mat dl(cdim[k + 1], cdim[k]);
        for (size_t g = 0; g < pk.vertices.size(); ++g) {
            int vg = pk.vertices[g];
            for (int b = 0; b < m2.dim[vg]; ++b) {
                size_t col = block_offset[k][g] + static_cast<size_t>(b);
                std::vector<std::vector<Rat>> images(pk.vertices.size());
                for (size_t g2 = 0; g2 < pk.vertices.size(); ++g2)
                    images[g2].assign(static_cast<size_t>(m2.dim[pk.vertices[g2]]), Rat(0));
                images[g][static_cast<size_t>(b)] = 1;
                std::vector<Mat> f = pk.map_to(m2, images);
                for (size_t h = 0; h < pk1.vertices.size(); ++h) {
                    int vh = pk1.vertices[h];
                    size_t gp = pk1.gen_pos[h];
                    std::vector<Rat> x(static_cast<size_t>(pk.mod.dim[vh]), Rat(0));
                    for (size_t r = 0; r < x.size(); ++r) x[r] = d[vh].at(r, gp);
                    std::vector<Rat> y = mat_apply(f[vh], x);
                    for (size_t r = 0; r < y.size(); ++r)
                        dl.at(block_offset[k + 1][h] + r, col) = y[r];
                }
            }
        }
        delta.push_back(std::move(dl));
    }

    GradedDims dims;
    for (size_t k = 0; k < nlevels; ++k) {
        size_t rk_out = (k < delta.size()) ? rank(delta[k]) : 0;
        size_t rk_in = (k > 0) ? rank(delta[k - 1]) : 0;
        dims.push_back(static_cast<int>(cdim[k] - rk_out - rk_in));
    }
    while (!dims.empty() && dims.back() == 0) dims.pop_back();
    return dims;
}

std::vector<std::vector<Int>> euler_matrix(int m) {
    std::vector<std::vector<Int>> mat(static_cast<size_t>(m), std::vector<Int>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            GradedDims e = ext(standard_module(m, i), standard_module(m, j));
            Int total = 0;
            int sign = 1;
            for (int d : e) {
                total += sign * d;
                sign = -sign;
            }
            mat[static_cast<size_t>(i)][static_cast<size_t>(j)] = total;
        }
    return mat;
}

// ---------------------------------------------------------------------------
// Yoneda compositions on standard modules

namespace {

Mat flatten_map(const std::vector<Mat>& comps) {
    size_t total = 0;
    for (const Mat& c : comps) total += c.rows() * c.cols();
    Mat flat(total, 1);
    size_t pos = 0;
    for (const Mat& c : comps)
        for (size_t i = 0; i < c.rows(); ++i)
            for (size_t j = 0; j < c.cols(); ++j) flat.at(pos++, 0) = c.at(i, j);
    return flat;
}

std::vector<Mat> compose(const std::vector<Mat>& g, const std::vector<Mat>& f) {
    std::vector<Mat> out(g.size());
    for (size_t j = 0; j < g.size(); ++j) out[j] = g[j] * f[j];
    return out;
}

// Solve sum c_s basis[s] == target, where basis and target are per-vertex map
// collections of identical shapes.
std::optional<std::vector<Rat>> express(const std::vector<std::vector<Mat>>& basis,
                                        const std::vector<Mat>& target) {
    if (basis.empty()) {
        for (const Mat& t : target)
            if (!t.is_zero()) return std::nullopt;
        return std::vector<Rat>{};
    }
    Mat sys(flatten_map(basis[0]).rows(), basis.size());
    for (size_t s = 0; s < basis.size(); ++s) {
        Mat col = flatten_map(basis[s]);
        for (size_t r = 0; r < col.rows(); ++r) sys.at(r, s) = col.at(r, 0);
    }
    auto sol = solve(sys, flatten_map(target));
    if (!sol) return std::nullopt;
    std::vector<Rat> coeff;
    for (size_t s = 0; s < basis.size(); ++s) coeff.push_back(sol->at(s, 0));
    return coeff;
}

std::vector<std::vector<Mat>> hom_maps(const QuiverModule& a, const QuiverModule& b) {
    std::vector<std::vector<Mat>> out;
    for (const ModuleMap& f : hom_basis(a, b)) out.push_back(f.comp);
    return out;
}

// Is `target` in the span of coboundaries {g . d : g in Hom(P0, N)}?
bool is_coboundary(const std::vector<std::vector<Mat>>& hom_p0_n,
                   const std::vector<Mat>& d, const std::vector<Mat>& target) {
    std::vector<std::vector<Mat>> boundaries;
    for (const auto& g : hom_p0_n) boundaries.push_back(compose(g, d));
    return express(boundaries, target).has_value();
}

}  // namespace

bool compose_check(int m, int i, int j, int k) {
    if (m > 4)
        throw domain_error("UnsupportedSize", "",
                           "compose_check: chain-level composition implemented for m <= 4");
    if (!(0 <= i && i < j && j < k && k < m))
        throw domain_error("IndexOutOfRange", "", "compose_check needs 0 <= i < j < k < m");

    QuiverModule ei = standard_module(m, i);
    QuiverModule ej = standard_module(m, j);
    QuiverModule ek = standard_module(m, k);

    Resolution ri = projective_resolution(ei);
    Resolution rj = projective_resolution(ej);
    // i < j < k <= m-1 forces i, j <= m-2, so both resolutions are two-term.
    if (ri.levels.size() != 2 || rj.levels.size() != 2)
        throw InternalError("InternalInvariantViolation",
                            "standard module resolution is not two-term");

    auto hom_ps = [&](const ProjSum& a, const QuiverModule& b) { return hom_maps(a.mod, b); };

    // Chain lift of the canonical map phi: E_i -> E_j.
    std::vector<std::vector<Mat>> hom_eij = hom_maps(ei, ej);
    if (hom_eij.size() != 1)
        throw InternalError("InternalInvariantViolation", "Hom(E_i,E_j) is not 1-dimensional");
    const std::vector<Mat>& phi = hom_eij[0];

    // phi0: P0_i -> P0_j with aug_j . phi0 = phi . aug_i
    std::vector<std::vector<Mat>> hom_p0 = hom_ps(ri.levels[0], rj.levels[0].mod);
    std::vector<Mat> rhs0 = compose(phi, ri.aug);
    std::optional<std::vector<Rat>> c0;
    std::vector<Mat> phi0;
    {
        std::vector<std::vector<Mat>> images;
        for (const auto& f : hom_p0) images.push_back(compose(rj.aug, f));
        c0 = express(images, rhs0);
        if (!c0) throw InternalError("InternalInvariantViolation", "chain lift phi0 failed");
        phi0.assign(static_cast<size_t>(m), Mat());
        for (int v = 0; v < m; ++v) {
            Mat acc(rj.levels[0].mod.dim[v], ri.levels[0].mod.dim[v]);
            for (size_t s = 0; s < hom_p0.size(); ++s) acc = acc + (*c0)[s] * hom_p0[s][v];
            phi0[v] = acc;
        }
    }

    // phi1: P1_i -> P1_j with d_j . phi1 = phi0 . d_i
    std::vector<std::vector<Mat>> hom_p1 = hom_ps(ri.levels[1], rj.levels[1].mod);
    std::vector<Mat> rhs1 = compose(phi0, ri.diff[0]);
    std::vector<Mat> phi1(static_cast<size_t>(m));
    {
        std::vector<std::vector<Mat>> images;
        for (const auto& f : hom_p1) images.push_back(compose(rj.diff[0], f));
        auto c1 = express(images, rhs1);
        if (!c1) throw InternalError("InternalInvariantViolation", "chain lift phi1 failed");
        for (int v = 0; v < m; ++v) {
            Mat acc(rj.levels[1].mod.dim[v], ri.levels[1].mod.dim[v]);
            for (size_t s = 0; s < hom_p1.size(); ++s) acc = acc + (*c1)[s] * hom_p1[s][v];
            phi1[v] = acc;
        }
    }

    // A representative of Ext^1(E_j, E_k): a cocycle in Hom(P1_j, E_k)
    // outside the coboundaries Hom(P0_j, E_k) . d_j.
    std::vector<std::vector<Mat>> z_jk = hom_ps(rj.levels[1], ek);
    std::vector<std::vector<Mat>> hom_p0j_ek = hom_ps(rj.levels[0], ek);
    std::vector<Mat> eta_jk;
    bool found = false;
    for (const auto& z : z_jk)
        if (!is_coboundary(hom_p0j_ek, rj.diff[0], z)) {
            eta_jk = z;
            found = true;
            break;
        }
    if (!found)
        throw InternalError("InternalInvariantViolation", "Ext^1(E_j,E_k) has no representative");

    std::vector<std::vector<Mat>> hom_p0i_ek = hom_ps(ri.levels[0], ek);

    // Direction 1: Hom(E_i,E_j) x Ext^1(E_j,E_k) -> Ext^1(E_i,E_k).
    std::vector<Mat> comp1 = compose(eta_jk, phi1);
    bool dir1 = !is_coboundary(hom_p0i_ek, ri.diff[0], comp1);

    // Direction 2: Ext^1(E_i,E_j) x Hom(E_j,E_k) -> Ext^1(E_i,E_k).
    std::vector<std::vector<Mat>> z_ij = hom_ps(ri.levels[1], ej);
    std::vector<std::vector<Mat>> hom_p0i_ej = hom_ps(ri.levels[0], ej);
    std::vector<Mat> eta_ij;
    found = false;
    for (const auto& z : z_ij)
        if (!is_coboundary(hom_p0i_ej, ri.diff[0], z)) {
            eta_ij = z;
            found = true;
            break;
        }
    if (!found)
        throw InternalError("InternalInvariantViolation", "Ext^1(E_i,E_j) has no representative");
    std::vector<std::vector<Mat>> hom_ejk = hom_maps(ej, ek);
    if (hom_ejk.size() != 1)
        throw InternalError("InternalInvariantViolation", "Hom(E_j,E_k) is not 1-dimensional");
    std::vector<Mat> comp2 = compose(hom_ejk[0], eta_ij);
    bool dir2 = !is_coboundary(hom_p0i_ek, ri.diff[0], comp2);

    return dir1 && dir2;
}

// ---------------------------------------------------------------------------
// pi_*

std::vector<int> pi_star(const QuiverModule& mod) {
    mod.check();
    int n = mod.dim[0];
    Mat t(static_cast<size_t>(n), static_cast<size_t>(n));
    if (mod.m >= 2) t = mod.alpha[0] * mod.beta[0];

    // Jordan type of the nilpotent operator t from the rank sequence.
    std::vector<size_t> ranks{static_cast<size_t>(n)};  // rank of t^0
    Mat power = Mat::identity(static_cast<size_t>(n));
    for (int s = 1; s <= mod.m; ++s) {
        power = power * t;
        ranks.push_back(rank(power));
    }
    if (ranks.back() != 0)
        throw InternalError("InternalInvariantViolation", "pi_star: t is not nilpotent of order m");
    std::vector<int> partition;
    for (int s = 1; s <= mod.m; ++s) {
        size_t r_prev = ranks[static_cast<size_t>(s - 1)];
        size_t r_cur = ranks[static_cast<size_t>(s)];
        size_t r_next = (s + 1 <= mod.m) ? ranks[static_cast<size_t>(s + 1)] : 0;
        size_t count = r_prev + r_next - 2 * r_cur;  // blocks of size exactly s
        for (size_t c = 0; c < count; ++c) partition.push_back(s);
    }
    std::sort(partition.rbegin(), partition.rend());
    return partition;
}

}  // namespace dp6::auslander
