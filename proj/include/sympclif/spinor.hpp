#pragma once

#include "sympclif/polynomial.hpp"

#include <map>

namespace sympclif {

// Polynomial section of the symmetric spinor model: an element p * psi where
// psi = exp(-(q_1^2+...+q_n^2)/2) is the implicit Gaussian ground state and p
// is an arbitrary polynomial coefficient.  The weight never materializes;
// only the twisted derivative rule below knows about it.
class Spinor {
public:
    explicit Spinor(int n) : poly_(n) {}
    explicit Spinor(Polynomial p) : poly_(std::move(p)) {}

    // The ground state itself: 1 * psi.
    static Spinor gaussian(int n) { return Spinor(Polynomial::one(n)); }

    int n() const { return poly_.n(); }
    const Polynomial& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }
    size_t term_count() const { return poly_.term_count(); }

    // d/dx and d/dy act on the coefficient only; d/dq picks up the weight
    // derivative:  d/dq_j (p psi) = (dp/dq_j - q_j p) psi.
    Spinor diff(Var b, int j) const {
        if (b != Var::Q) return Spinor(poly_.diff(b, j));
        Polynomial qj = Polynomial::variable(Var::Q, j, n());
        return Spinor(poly_.diff(Var::Q, j) - qj * poly_);
    }

    Spinor& operator+=(const Spinor& o) {
        poly_ += o.poly_;
        return *this;
    }
    Spinor& operator-=(const Spinor& o) {
        poly_ -= o.poly_;
        return *this;
    }
    friend Spinor operator+(Spinor a, const Spinor& b) { return a += b; }
    friend Spinor operator-(Spinor a, const Spinor& b) { return a -= b; }
    friend Spinor operator*(const GaussianRational& c, const Spinor& s) {
        return Spinor(c * s.poly_);
    }
    friend Spinor operator*(const Polynomial& p, const Spinor& s) {
        return Spinor(p * s.poly_);
    }
    friend bool operator==(const Spinor& a, const Spinor& b) { return a.poly_ == b.poly_; }

    // Homogeneity is measured in the (x,y)-variables only; q-degrees are
    // internal to the spinor part and do not enter the grading.
    Spinor xy_homogeneous_component(int ell) const {
        return Spinor(poly_.xy_homogeneous_component(ell));
    }

    // Splits into the (finitely many) nonzero homogeneous layers.
    std::map<int, Spinor> xy_homogeneous_components() const {
        std::map<int, Spinor> out;
        for (const auto& [e, c] : poly_.terms()) {
            int d = e.xy_degree();
            auto it = out.find(d);
            if (it == out.end()) it = out.emplace(d, Spinor(n())).first;
            it->second.poly_.add_term(e, c);
        }
        return out;
    }

    bool is_xy_homogeneous(int ell) const {
        for (const auto& [e, c] : poly_.terms())
            if (e.xy_degree() != ell) return false;
        return true;
    }

    int max_xy_degree() const { return poly_.max_xy_degree(); }

private:
    Polynomial poly_;
};

}  // namespace sympclif
