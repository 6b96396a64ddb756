#pragma once

#include "sympclif/gaussian.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace sympclif {

// Element of the complex Clifford algebra with e_p e_q + e_q e_p = -2 delta_pq,
// stored on the blade basis; a blade is the bitmask of its ascending index
// set (bit j-1 <-> e_j).  Zero coefficients are never stored.
class CliffordElement {
public:
    using BladeMap = std::map<uint32_t, GaussianRational>;

    explicit CliffordElement(int m) : m_(m) {
        if (m < 1 || m > 30)
            throw std::invalid_argument("CliffordElement: unsupported dimension");
    }

    static CliffordElement scalar(int m, const GaussianRational& c) {
        CliffordElement r(m);
        r.add_blade(0, c);
        return r;
    }

    static CliffordElement generator(int j, int m) {
        CliffordElement r(m);
        if (j < 1 || j > m) throw std::out_of_range("CliffordElement: index out of range");
        r.add_blade(1u << (j - 1), GaussianRational(1));
        return r;
    }

    static CliffordElement blade_unit(int m, uint32_t bits, const GaussianRational& c) {
        CliffordElement r(m);
        if (bits >> m) throw std::out_of_range("CliffordElement: blade outside algebra");
        r.add_blade(bits, c);
        return r;
    }

    int m() const { return m_; }
    bool is_zero() const { return blades_.empty(); }
    size_t blade_count() const { return blades_.size(); }
    const BladeMap& blades() const { return blades_; }

    void add_blade(uint32_t bits, const GaussianRational& c);

    CliffordElement& operator+=(const CliffordElement& o);
    CliffordElement& operator-=(const CliffordElement& o);
    friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
    friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
    friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);
    friend CliffordElement operator*(const GaussianRational& c, const CliffordElement& a);
    friend CliffordElement operator-(const CliffordElement& a) { return GaussianRational(-1) * a; }
    friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
        return a.m_ == b.m_ && a.blades_ == b.blades_;
    }

    // Main anti-automorphism with e_j -> -e_j: a grade-g blade picks up
    // (-1)^(g(g+1)/2); scalar coefficients are untouched.
    CliffordElement conj() const;

    void check_dim(const CliffordElement& o) const {
        if (m_ != o.m_) throw std::invalid_argument("CliffordElement: dimension mismatch");
    }

private:
    int m_;
    BladeMap blades_;
};

// Graded-lex order on plain exponent arrays (total degree, then lex).
struct GradedLexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Polynomial in x_1..x_m with Clifford-element coefficients.  Products keep
// the coefficient order of the factors, so left multiplications stay left.
class CliffordPolynomial {
public:
    using TermMap = std::map<std::vector<int>, CliffordElement, GradedLexLess>;

    explicit CliffordPolynomial(int m) : m_(m) {
        if (m < 1 || m > 30)
            throw std::invalid_argument("CliffordPolynomial: unsupported dimension");
    }

    static CliffordPolynomial zero(int m) { return CliffordPolynomial(m); }

    static CliffordPolynomial constant(const CliffordElement& c) {
        CliffordPolynomial r(c.m());
        r.add_term(std::vector<int>(c.m(), 0), c);
        return r;
    }

    static CliffordPolynomial one(int m) {
        return constant(CliffordElement::scalar(m, GaussianRational(1)));
    }

    static CliffordPolynomial variable(int j, int m) {
        if (j < 1 || j > m) throw std::out_of_range("CliffordPolynomial: index out of range");
        CliffordPolynomial r(m);
        std::vector<int> e(m, 0);
        e[j - 1] = 1;
        r.add_term(e, CliffordElement::scalar(m, GaussianRational(1)));
        return r;
    }

    int m() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const std::vector<int>& e, const CliffordElement& c);

    CliffordPolynomial& operator+=(const CliffordPolynomial& o);
    CliffordPolynomial& operator-=(const CliffordPolynomial& o);
    friend CliffordPolynomial operator+(CliffordPolynomial a, const CliffordPolynomial& b) {
        return a += b;
    }
    friend CliffordPolynomial operator-(CliffordPolynomial a, const CliffordPolynomial& b) {
        return a -= b;
    }
    friend CliffordPolynomial operator*(const CliffordPolynomial& a, const CliffordPolynomial& b);
    friend CliffordPolynomial operator*(const GaussianRational& c, const CliffordPolynomial& p);
    friend bool operator==(const CliffordPolynomial& a, const CliffordPolynomial& b) {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }

    // Left Clifford multiplication by a constant element.
    CliffordPolynomial left_mul(const CliffordElement& c) const;

    CliffordPolynomial diff(int j) const;

    CliffordElement eval(const std::vector<GaussianRational>& pt) const;

    int max_degree() const;

    void check_dim(const CliffordPolynomial& o) const {
        if (m_ != o.m_) throw std::invalid_argument("CliffordPolynomial: dimension mismatch");
    }

private:
    int m_;
    TermMap terms_;
};

// The vector variable x = sum_j e_j x_j.
CliffordPolynomial vector_variable(int m);

// Dirac operator: sum_j e_j d/dx_j (left multiplication).
CliffordPolynomial dirac_apply(const CliffordPolynomial& p);

// Iterated Laplacian; satisfies -dirac^2 = laplacian.
CliffordPolynomial laplacian_apply(const CliffordPolynomial& p, int times);

// (conj(e_1) x)^k, the Clifford substitute for the complex power z^k.
CliffordPolynomial holomorphic_power(int k, int m);

// Deformed raising operator in closed polynomial form:
//   R^[m,alpha] f = -|x|^2 d/dx_1 f + x_1 (2E + m - 1 + alpha) f + (x' e_1) f,
// with E the Euler operator and x' e_1 = sum_{j>=2} x_j e_j e_1 acting by
// left multiplication.
CliffordPolynomial raising_apply(const CliffordPolynomial& p, const Rational& alpha);

// Laplacian^(m/2 - 1) of the k-th holomorphic power; m must be even.
CliffordPolynomial classical_fueter(int k, int m);

// Coefficient list of the Gegenbauer polynomial C_k^mu (exact three-term
// recurrence); entry j is the coefficient of t^j.
std::vector<Rational> gegenbauer_coefficients(int k, const Rational& mu);

// dirac( |x|^(k+1) C_(k+1)^(m/2-1)(x_1/|x|) ), expanded exactly as a
// polynomial; m must be even and at least 4.
CliffordPolynomial gegenbauer_monogenic(int k, int m);

// Exact ratio c with a == c * b, if it exists and b != 0.
std::optional<GaussianRational> proportionality_constant(const CliffordPolynomial& a,
                                                         const CliffordPolynomial& b);

// Scalar c with classical_fueter(k + m - 2, m) == c * gegenbauer_monogenic(k, m) * conj(e_1).
// The degree offset m - 2 matches the Laplacian power in the Fueter image and
// the right conj(e_1) factor is the monogenicity-preserving identification
// between the vector-valued Gegenbauer family and the Fueter images, which
// take values in span{1, e_j e_1}.
std::optional<GaussianRational> gegenbauer_fueter_constant(int k, int m);

}  // namespace sympclif
