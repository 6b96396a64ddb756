#include "sympclif/weyl.hpp"

namespace sympclif {

WeylOp& WeylOp::operator+=(const WeylOp& o) {
    check_dim(o);
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
    check_dim(o);
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

WeylOp operator*(const GaussianRational& c, const WeylOp& op) {
    WeylOp r(op.n_);
    if (c.is_zero()) return r;
    for (const auto& [k, tc] : op.terms_) r.terms_.emplace(k, c * tc);
    return r;
}

namespace {

// One normally ordered product of monomials.  Contractions arise where a
// derivative of the left factor meets a multiplication of the right factor;
// each affected variable contributes independently.
void compose_monomials(const std::vector<int>& mulA, const std::vector<int>& derA,
                       const std::vector<int>& mulB, const std::vector<int>& derB,
                       const GaussianRational& c, WeylOp& out) {
    struct Slot {
        size_t v;
        int jmax;
        std::vector<Integer> weight;  // weight[j] = j! C(derA_v, j) C(mulB_v, j)
    };
    std::vector<Slot> slots;
    for (size_t v = 0; v < mulA.size(); ++v) {
        int jmax = std::min(derA[v], mulB[v]);
        if (jmax == 0) continue;
        Slot s{v, jmax, {}};
        s.weight.reserve(jmax + 1);
        for (int j = 0; j <= jmax; ++j)
            s.weight.push_back(factorial(j) * binomial(derA[v], j) * binomial(mulB[v], j));
        slots.push_back(std::move(s));
    }

    std::vector<int> mul(mulA.size()), der(mulA.size());
    for (size_t v = 0; v < mulA.size(); ++v) {
        mul[v] = mulA[v] + mulB[v];
        der[v] = derA[v] + derB[v];
    }

    if (slots.empty()) {
        out.add_term(Exponents::from_raw(mul), Exponents::from_raw(der), c);
        return;
    }

    std::vector<int> j(slots.size(), 0);
    for (;;) {
        Integer w = 1;
        for (size_t s = 0; s < slots.size(); ++s) w *= slots[s].weight[j[s]];
        std::vector<int> m = mul, d = der;
        for (size_t s = 0; s < slots.size(); ++s) {
            m[slots[s].v] -= j[s];
            d[slots[s].v] -= j[s];
        }
        out.add_term(Exponents::from_raw(std::move(m)), Exponents::from_raw(std::move(d)),
                     GaussianRational(Rational(w)) * c);

        size_t s = 0;
        while (s < slots.size() && j[s] == slots[s].jmax) j[s++] = 0;
        if (s == slots.size()) break;
        ++j[s];
    }
}

}  // namespace

WeylOp operator*(const WeylOp& a, const WeylOp& b) {
    a.check_dim(b);
    WeylOp r(a.n_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            compose_monomials(ka.first.raw(), ka.second.raw(), kb.first.raw(),
                              kb.second.raw(), ca * cb, r);
    return r;
}

WeylOp WeylOp::pow(int k) const {
    if (k < 0) throw std::invalid_argument("WeylOp::pow: negative power");
    WeylOp acc = identity(n_);
    for (int i = 0; i < k; ++i) acc = acc * (*this);
    return acc;
}

Spinor WeylOp::apply(const Spinor& f) const {
    if (f.n() != n_) throw std::invalid_argument("WeylOp: dimension mismatch");
    Spinor out(n_);
    for (const auto& [k, c] : terms_) {
        Spinor g = f;
        const auto& der = k.second.raw();
        for (size_t v = 0; v < der.size(); ++v) {
            Var b = static_cast<Var>(v / n_);
            int j = static_cast<int>(v % n_) + 1;
            for (int t = 0; t < der[v]; ++t) g = g.diff(b, j);
        }
        out += Spinor(Polynomial::monomial(k.first, c) * g.poly());
    }
    return out;
}

Spinor WeylOp::apply_power(int k, const Spinor& f) const {
    if (k < 0) throw std::invalid_argument("WeylOp::apply_power: negative power");
    Spinor g = f;
    for (int i = 0; i < k; ++i) g = apply(g);
    return g;
}

}  // namespace sympclif
