#include "sympclif/clifford.hpp"

#include <bit>
#include <numeric>

namespace sympclif {

void CliffordElement::add_blade(uint32_t bits, const GaussianRational& c) {
    if (bits >> m_) throw std::out_of_range("CliffordElement: blade outside algebra");
    if (c.is_zero()) return;
    auto it = blades_.find(bits);
    if (it == blades_.end()) {
        blades_.emplace(bits, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) blades_.erase(it);
    }
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
    check_dim(o);
    for (const auto& [b, c] : o.blades_) add_blade(b, c);
    return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
    check_dim(o);
    for (const auto& [b, c] : o.blades_) add_blade(b, -c);
    return *this;
}

namespace {

// Sign of e_A e_B: reorder the concatenation (swap count = pairs i in A,
// j in B with j < i), then contract the common indices with e_j e_j = -1.
int blade_sign(uint32_t a, uint32_t b) {
    int swaps = 0;
    for (uint32_t rest = a; rest; rest &= rest - 1) {
        uint32_t i = std::countr_zero(rest);
        swaps += std::popcount(b & ((1u << i) - 1));
    }
    int contractions = std::popcount(a & b);
    return ((swaps + contractions) % 2) ? -1 : 1;
}

}  // namespace

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
    a.check_dim(b);
    CliffordElement r(a.m_);
    for (const auto& [ba, ca] : a.blades_)
        for (const auto& [bb, cb] : b.blades_) {
            GaussianRational c = ca * cb;
            if (blade_sign(ba, bb) < 0) c = -c;
            r.add_blade(ba ^ bb, c);
        }
    return r;
}

CliffordElement operator*(const GaussianRational& c, const CliffordElement& a) {
    CliffordElement r(a.m_);
    if (c.is_zero()) return r;
    for (const auto& [b, bc] : a.blades_) r.blades_.emplace(b, c * bc);
    return r;
}

CliffordElement CliffordElement::conj() const {
    CliffordElement r(m_);
    for (const auto& [b, c] : blades_) {
        int g = std::popcount(b);
        bool flip = ((g * (g + 1)) / 2) % 2;
        r.blades_.emplace(b, flip ? -c : c);
    }
    return r;
}

bool GradedLexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

void CliffordPolynomial::add_term(const std::vector<int>& e, const CliffordElement& c) {
    if (e.size() != static_cast<size_t>(m_) || c.m() != m_)
        throw std::invalid_argument("CliffordPolynomial: dimension mismatch");
    for (int v : e)
        if (v < 0) throw std::invalid_argument("CliffordPolynomial: negative exponent");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CliffordPolynomial& CliffordPolynomial::operator+=(const CliffordPolynomial& o) {
    check_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

CliffordPolynomial& CliffordPolynomial::operator-=(const CliffordPolynomial& o) {
    check_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, GaussianRational(-1) * c);
    return *this;
}

CliffordPolynomial operator*(const CliffordPolynomial& a, const CliffordPolynomial& b) {
    a.check_dim(b);
    CliffordPolynomial r(a.m_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(ea);
            for (size_t v = 0; v < e.size(); ++v) e[v] += eb[v];
            r.add_term(e, ca * cb);
        }
    return r;
}

CliffordPolynomial operator*(const GaussianRational& c, const CliffordPolynomial& p) {
    CliffordPolynomial r(p.m_);
    if (c.is_zero()) return r;
    for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
    return r;
}

CliffordPolynomial CliffordPolynomial::left_mul(const CliffordElement& c) const {
    if (c.m() != m_) throw std::invalid_argument("CliffordPolynomial: dimension mismatch");
    CliffordPolynomial r(m_);
    for (const auto& [e, pc] : terms_) r.add_term(e, c * pc);
    return r;
}

CliffordPolynomial CliffordPolynomial::diff(int j) const {
    if (j < 1 || j > m_) throw std::out_of_range("CliffordPolynomial: index out of range");
    CliffordPolynomial r(m_);
    for (const auto& [e, c] : terms_) {
        if (e[j - 1] == 0) continue;
        std::vector<int> d(e);
        --d[j - 1];
        r.add_term(d, GaussianRational(e[j - 1]) * c);
    }
    return r;
}

CliffordElement CliffordPolynomial::eval(const std::vector<GaussianRational>& pt) const {
    if (pt.size() != static_cast<size_t>(m_))
        throw std::invalid_argument("CliffordPolynomial: evaluation point has wrong length");
    CliffordElement acc(m_);
    for (const auto& [e, c] : terms_) {
        GaussianRational w(1);
        for (size_t v = 0; v < e.size(); ++v)
            if (e[v]) w *= pt[v].pow(e[v]);
        acc += w * c;
    }
    return acc;
}

int CliffordPolynomial::max_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

CliffordPolynomial vector_variable(int m) {
    CliffordPolynomial r(m);
    for (int j = 1; j <= m; ++j) {
        std::vector<int> e(m, 0);
        e[j - 1] = 1;
        r.add_term(e, CliffordElement::generator(j, m));
    }
    return r;
}

CliffordPolynomial dirac_apply(const CliffordPolynomial& p) {
    CliffordPolynomial r(p.m());
    for (int j = 1; j <= p.m(); ++j)
        r += p.diff(j).left_mul(CliffordElement::generator(j, p.m()));
    return r;
}

CliffordPolynomial laplacian_apply(const CliffordPolynomial& p, int times) {
    if (times < 0) throw std::invalid_argument("laplacian_apply: negative power");
    CliffordPolynomial cur = p;
    for (int t = 0; t < times; ++t) {
        CliffordPolynomial next(p.m());
        for (int j = 1; j <= p.m(); ++j) next += cur.diff(j).diff(j);
        cur = std::move(next);
    }
    return cur;
}

CliffordPolynomial holomorphic_power(int k, int m) {
    if (k < 0) throw std::invalid_argument("holomorphic_power: negative power");
    CliffordPolynomial base =
        vector_variable(m).left_mul(CliffordElement::generator(1, m).conj());
    CliffordPolynomial acc = CliffordPolynomial::one(m);
    for (int t = 0; t < k; ++t) acc = base * acc;
    return acc;
}

namespace {

CliffordPolynomial radius_squared(int m) {
    CliffordPolynomial r(m);
    for (int j = 1; j <= m; ++j) {
        std::vector<int> e(m, 0);
        e[j - 1] = 2;
        r.add_term(e, CliffordElement::scalar(m, GaussianRational(1)));
    }
    return r;
}

}  // namespace

CliffordPolynomial raising_apply(const CliffordPolynomial& p, const Rational& alpha) {
    int m = p.m();
    CliffordPolynomial euler(m);
    for (int j = 1; j <= m; ++j)
        euler += CliffordPolynomial::variable(j, m) * p.diff(j);
    CliffordPolynomial shifted =
        GaussianRational(2) * euler + GaussianRational(Rational(m - 1) + alpha) * p;

    CliffordPolynomial xe1(m);
    for (int j = 2; j <= m; ++j) {
        std::vector<int> e(m, 0);
        e[j - 1] = 1;
        xe1.add_term(e, CliffordElement::generator(j, m) * CliffordElement::generator(1, m));
    }

    return GaussianRational(-1) * (radius_squared(m) * p.diff(1)) +
           CliffordPolynomial::variable(1, m) * shifted + xe1 * p;
}

CliffordPolynomial classical_fueter(int k, int m) {
    if (m < 2 || m % 2 != 0)
        throw std::domain_error("classical_fueter: dimension must be even and at least 2");
    return laplacian_apply(holomorphic_power(k, m), m / 2 - 1);
}

std::vector<Rational> gegenbauer_coefficients(int k, const Rational& mu) {
    if (k < 0) throw std::invalid_argument("gegenbauer_coefficients: negative degree");
    std::vector<std::vector<Rational>> c;
    c.push_back({Rational(1)});
    if (k >= 1) c.push_back({Rational(0), 2 * mu});
    for (int d = 2; d <= k; ++d) {
        std::vector<Rational> cur(d + 1, Rational(0));
        Rational a = 2 * (Rational(d) + mu - 1) / Rational(d);
        Rational b = (Rational(d) + 2 * mu - 2) / Rational(d);
        for (int j = 0; j < d; ++j) cur[j + 1] += a * c[d - 1][j];
        for (int j = 0; j <= d - 2; ++j) cur[j] -= b * c[d - 2][j];
        c.push_back(std::move(cur));
    }
    return c[k];
}

CliffordPolynomial gegenbauer_monogenic(int k, int m) {
    if (m < 4 || m % 2 != 0)
        throw std::domain_error("gegenbauer_monogenic: dimension must be even and at least 4");
    if (k < 0) throw std::invalid_argument("gegenbauer_monogenic: negative degree");
    std::vector<Rational> c = gegenbauer_coefficients(k + 1, Rational(m, 2) - 1);
    CliffordPolynomial r2 = radius_squared(m);
    CliffordPolynomial g(m);
    for (int j = k + 1; j >= 0; j -= 2) {
        if (j < 0) break;
        if (c[j] == 0) continue;
        std::vector<int> e(m, 0);
        e[0] = j;
        CliffordPolynomial part(m);
        part.add_term(e, CliffordElement::scalar(m, GaussianRational(c[j])));
        CliffordPolynomial rpow = CliffordPolynomial::one(m);
        for (int s = 0; s < (k + 1 - j) / 2; ++s) rpow = rpow * r2;
        g += part * rpow;
    }
    return dirac_apply(g);
}

std::optional<GaussianRational> gegenbauer_fueter_constant(int k, int m) {
    CliffordPolynomial bridged =
        gegenbauer_monogenic(k, m) *
        CliffordPolynomial::constant(CliffordElement::generator(1, m).conj());
    return proportionality_constant(classical_fueter(k + m - 2, m), bridged);
}

std::optional<GaussianRational> proportionality_constant(const CliffordPolynomial& a,
                                                         const CliffordPolynomial& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return GaussianRational(0);
    const auto& [key, belem] = *b.terms().begin();
    auto it = a.terms().find(key);
    if (it == a.terms().end()) return std::nullopt;
    const auto& [bbits, bc] = *belem.blades().begin();
    auto bit = it->second.blades().find(bbits);
    if (bit == it->second.blades().end()) return std::nullopt;
    GaussianRational c = bit->second / bc;
    if (a == c * b) return c;
    return std::nullopt;
}

}  // namespace sympclif
