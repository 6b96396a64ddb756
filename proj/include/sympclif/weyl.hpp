#pragma once

#include "sympclif/spinor.hpp"

#include <map>
#include <utility>
#include <vector>

namespace sympclif {

// Element of the Weyl algebra on 3n variables, kept in normal order: every
// term is (multiplication monomial) * (derivative monomial) with all
// multiplications to the left.  Composition re-normalizes via the per-variable
// contraction rule
//
//   d^k v^m = sum_{j=0}^{min(k,m)} j! C(k,j) C(m,j) v^(m-j) d^(k-j),
//
// applied independently in each variable, so structural equality of term maps
// is operator equality.
class WeylOp {
public:
    // (mul, der) exponent pair; both in [ex|ey|eq] layout.
    using Key = std::pair<Exponents, Exponents>;
    using TermMap = std::map<Key, GaussianRational>;

    explicit WeylOp(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("WeylOp: dimension must be positive");
    }

    static WeylOp zero(int n) { return WeylOp(n); }

    static WeylOp scalar(int n, const GaussianRational& c) {
        WeylOp r(n);
        r.add_term(Exponents(n), Exponents(n), c);
        return r;
    }

    static WeylOp identity(int n) { return scalar(n, GaussianRational(1)); }

    // Multiplication operator by the variable (b, j).
    static WeylOp mul_var(Var b, int j, int n) {
        Exponents m(n);
        m.set(b, j, 1);
        WeylOp r(n);
        r.add_term(m, Exponents(n), GaussianRational(1));
        return r;
    }

    // Partial derivative operator in the variable (b, j).
    static WeylOp deriv(Var b, int j, int n) {
        Exponents d(n);
        d.set(b, j, 1);
        WeylOp r(n);
        r.add_term(Exponents(n), d, GaussianRational(1));
        return r;
    }

    static WeylOp monomial(const Exponents& mul, const Exponents& der,
                           const GaussianRational& c) {
        mul.check_dim(der);
        WeylOp r(mul.n());
        r.add_term(mul, der, c);
        return r;
    }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Exponents& mul, const Exponents& der, const GaussianRational& c) {
        if (mul.n() != n_ || der.n() != n_)
            throw std::invalid_argument("WeylOp: dimension mismatch");
        if (c.is_zero()) return;
        Key k{mul, der};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(std::move(k), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    WeylOp& operator+=(const WeylOp& o);
    WeylOp& operator-=(const WeylOp& o);
    friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
    friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
    friend WeylOp operator-(const WeylOp& a) { return GaussianRational(-1) * a; }
    friend WeylOp operator*(const GaussianRational& c, const WeylOp& op);

    // Composition a then-apply-after b: (a*b) f = a (b f).
    friend WeylOp operator*(const WeylOp& a, const WeylOp& b);

    friend bool operator==(const WeylOp& a, const WeylOp& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    WeylOp commutator(const WeylOp& o) const { return (*this) * o - o * (*this); }

    // Composed k-th power; meant for small k in identity checks.
    WeylOp pow(int k) const;

    // Action on the spinor model: per term, all derivatives act first (the
    // q-derivatives through the Gaussian twist), then the multiplications.
    Spinor apply(const Spinor& f) const;

    // Iterated action; never materializes the composed power.
    Spinor apply_power(int k, const Spinor& f) const;

    void check_dim(const WeylOp& o) const {
        if (n_ != o.n_) throw std::invalid_argument("WeylOp: dimension mismatch");
    }

private:
    int n_;
    TermMap terms_;
};

inline WeylOp commutator(const WeylOp& a, const WeylOp& b) { return a.commutator(b); }

}  // namespace sympclif
