#include "dp6/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace dp6::poly {

Poly Poly::constant(const Rat& a) {
    Poly p;
    if (a != 0) p.c = {a};
    return p;
}

void Poly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Rat Poly::eval(const Rat& x) const {
    Rat v(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.normalize();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.normalize();
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.normalize();
    return r;
}

Poly operator*(const Rat& s, const Poly& a) {
    if (s == 0) return Poly::zero();
    Poly r = a;
    for (Rat& x : r.c) x *= s;
    return r;
}

Poly derivative(const Poly& a) {
    Poly r;
    for (size_t i = 1; i < a.c.size(); ++i) r.c.push_back(Rat(Int(i)) * a.c[i]);
    r.normalize();
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    Poly rem = a, quot;
    if (a.degree() >= b.degree()) quot.c.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Rat(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        size_t shift = static_cast<size_t>(rem.degree() - b.degree());
        Rat f = rem.lead() / b.lead();
        quot.c[shift] += f;
        for (size_t i = 0; i < b.c.size(); ++i) rem.c[shift + i] -= f * b.c[i];
        rem.normalize();
    }
    quot.normalize();
    return {quot, rem};
}

Poly make_monic(const Poly& a) {
    if (a.is_zero()) return a;
    return (Rat(1) / a.lead()) * a;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = y;
        y = r;
    }
    return make_monic(x);
}

std::vector<Poly> squarefree_decomposition(const Poly& f) {
    std::vector<Poly> out;
    if (f.is_zero() || f.degree() == 0) return out;
    Poly a = make_monic(f);
    Poly d = derivative(a);
    Poly g = gcd(a, d);
    Poly w = divmod(a, g).first;        // product of squarefree parts
    Poly y = divmod(d, g).first;
    Poly z = y - derivative(w);
    while (!w.is_zero() && w.degree() > 0) {
        Poly p = gcd(w, z);
        out.push_back(p);
        w = divmod(w, p).first;
        y = divmod(z, p).first;
        z = y - derivative(w);
    }
    return out;
}

std::vector<int> root_multiplicities(const Poly& f) {
    std::vector<int> parts;
    std::vector<Poly> sf = squarefree_decomposition(f);
    for (size_t i = 0; i < sf.size(); ++i)
        for (int r = 0; r < sf[i].degree(); ++r) parts.push_back(static_cast<int>(i) + 1);
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

BinaryForm BinaryForm::zero(int deg) {
    BinaryForm f;
    f.deg = deg;
    f.c.assign(static_cast<size_t>(deg) + 1, Rat(0));
    return f;
}

BinaryForm BinaryForm::linear(const Rat& s_coeff, const Rat& t_coeff) {
    BinaryForm f = zero(1);
    f.c[1] = s_coeff;
    f.c[0] = t_coeff;
    return f;
}

bool BinaryForm::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; });
}

Rat BinaryForm::eval(const Rat& s, const Rat& t) const {
    Rat v(0), spow(1);
    std::vector<Rat> tpow(c.size(), Rat(1));
    for (size_t i = 1; i < c.size(); ++i) tpow[i] = tpow[i - 1] * t;
    for (size_t k = 0; k < c.size(); ++k) {
        v += c[k] * spow * tpow[c.size() - 1 - k];
        spow *= s;
    }
    return v;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.deg != b.deg) throw std::invalid_argument("BinaryForm+: degree mismatch");
    BinaryForm r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
    if (a.deg != b.deg) throw std::invalid_argument("BinaryForm-: degree mismatch");
    BinaryForm r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    BinaryForm r = BinaryForm::zero(a.deg + b.deg);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

BinaryForm operator*(const Rat& s, const BinaryForm& a) {
    BinaryForm r = a;
    for (Rat& x : r.c) x *= s;
    return r;
}

int mult_at_infinity(const BinaryForm& f) {
    // power of t dividing f: number of vanishing top s-coefficients
    int m = 0;
    for (int k = f.deg; k >= 0; --k) {
        if (f.c[static_cast<size_t>(k)] != 0) break;
        ++m;
    }
    return m;
}

Poly dehomogenize(const BinaryForm& f) {
    Poly p;
    p.c = f.c;
    p.normalize();
    return p;
}

std::vector<int> binary_root_multiplicities(const BinaryForm& f) {
    if (f.is_zero()) throw std::invalid_argument("binary_root_multiplicities: zero form");
    int at_inf = mult_at_infinity(f);
    std::vector<int> parts = root_multiplicities(dehomogenize(f));
    if (at_inf > 0) parts.push_back(at_inf);
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

bool have_common_root(const std::vector<BinaryForm>& forms) {
    bool any_nonzero = false;
    bool all_divisible_by_t = true;
    Poly g = Poly::zero();
    for (const BinaryForm& f : forms) {
        if (f.is_zero()) continue;
        any_nonzero = true;
        if (mult_at_infinity(f) == 0) all_divisible_by_t = false;
        g = gcd(g, dehomogenize(f));
    }
    if (!any_nonzero) return true;       // the zero set constrains nothing
    if (all_divisible_by_t) return true; // common root at (1:0)
    return g.degree() > 0;
}

}  // namespace dp6::poly
