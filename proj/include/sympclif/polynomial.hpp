#pragma once

#include "sympclif/exponents.hpp"
#include "sympclif/gaussian.hpp"

#include <map>
#include <span>
#include <string>

namespace sympclif {

// Polynomial in (x_1..x_n, y_1..y_n, q_1..q_n) over Q(i).  Terms live in a
// map keyed by exponent vectors in graded-lex order and zero coefficients
// are never stored, so equal polynomials compare equal structurally.
class Polynomial {
public:
    using TermMap = std::map<Exponents, GaussianRational>;

    explicit Polynomial(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("Polynomial: dimension must be positive");
    }

    static Polynomial zero(int n) { return Polynomial(n); }

    static Polynomial constant(int n, const GaussianRational& c) {
        Polynomial p(n);
        p.add_term(Exponents(n), c);
        return p;
    }

    static Polynomial one(int n) { return constant(n, GaussianRational(1)); }

    static Polynomial variable(Var b, int j, int n) {
        Exponents e(n);
        e.set(b, j, 1);
        Polynomial p(n);
        p.add_term(e, GaussianRational(1));
        return p;
    }

    static Polynomial monomial(const Exponents& e, const GaussianRational& c) {
        Polynomial p(e.n());
        p.add_term(e, c);
        return p;
    }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Exponents& e, const GaussianRational& c) {
        if (e.n() != n_) throw std::invalid_argument("Polynomial: dimension mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_dim(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_dim(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_dim(b);
        Polynomial r(a.n_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea.plus(eb), ca * cb);
        return r;
    }

    friend Polynomial operator*(const GaussianRational& c, const Polynomial& p) {
        Polynomial r(p.n_);
        if (c.is_zero()) return r;
        for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
        return r;
    }

    friend Polynomial operator-(const Polynomial& p) { return GaussianRational(-1) * p; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    // Plain partial derivative; the Gaussian-weight twist for q-variables
    // lives in Spinor, not here.
    Polynomial diff(Var b, int j) const {
        Polynomial r(n_);
        for (const auto& [e, c] : terms_) {
            int k = e.get(b, j);
            if (k == 0) continue;
            Exponents d = e;
            d.bump(b, j, -1);
            r.add_term(d, GaussianRational(Rational(k)) * c);
        }
        return r;
    }

    // Evaluation at a point given as 3n coordinates in [x|y|q] layout.
    GaussianRational eval(std::span<const GaussianRational> pt) const {
        if (pt.size() != static_cast<size_t>(3 * n_))
            throw std::invalid_argument("Polynomial: evaluation point has wrong length");
        GaussianRational acc(0);
        for (const auto& [e, c] : terms_) {
            GaussianRational t = c;
            const auto& raw = e.raw();
            for (size_t v = 0; v < raw.size(); ++v)
                if (raw[v]) t *= pt[v].pow(raw[v]);
            acc += t;
        }
        return acc;
    }

    // Part of total (x,y)-degree exactly ell.
    Polynomial xy_homogeneous_component(int ell) const {
        Polynomial r(n_);
        for (const auto& [e, c] : terms_)
            if (e.xy_degree() == ell) r.terms_.emplace(e, c);
        return r;
    }

    int max_xy_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.xy_degree());
        return d;  // -1 for the zero polynomial
    }

    int max_q_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.q_degree());
        return d;
    }

    void check_dim(const Polynomial& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Polynomial: dimension mismatch");
    }

private:
    int n_;
    TermMap terms_;
};

}  // namespace sympclif
