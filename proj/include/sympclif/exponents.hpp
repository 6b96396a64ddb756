#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace sympclif {

// The three variable families of the symplectic model: positions x_j,
// positions y_j of the dual copy, and the auxiliary spinor variables q_j.
enum class Var { X = 0, Y = 1, Q = 2 };

// Exponent vector over (x_1..x_n, y_1..y_n, q_1..q_n), stored flat as
// [ex | ey | eq].  Indices j are 1-based throughout the public API.
class Exponents {
public:
    explicit Exponents(int n) : n_(n), e_(3 * static_cast<size_t>(n), 0) {
        if (n < 1) throw std::invalid_argument("Exponents: dimension must be positive");
    }

    // Rebuilds from a flat [ex|ey|eq] array of length 3n.
    static Exponents from_raw(std::vector<int> e) {
        if (e.size() % 3 != 0 || e.empty())
            throw std::invalid_argument("Exponents: raw array length must be 3n");
        for (int v : e)
            if (v < 0) throw std::invalid_argument("Exponents: negative exponent");
        Exponents r(static_cast<int>(e.size() / 3));
        r.e_ = std::move(e);
        return r;
    }

    int n() const { return n_; }

    int get(Var b, int j) const { return e_[index(b, j)]; }
    void set(Var b, int j, int v) {
        if (v < 0) throw std::invalid_argument("Exponents: negative exponent");
        e_[index(b, j)] = v;
    }
    void bump(Var b, int j, int dv) {
        int& slot = e_[index(b, j)];
        slot += dv;
        if (slot < 0) throw std::invalid_argument("Exponents: negative exponent");
    }

    int total_degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

    // Degree in the x and y families only; the grading every homogeneity
    // statement in the toolkit refers to.
    int xy_degree() const {
        return std::accumulate(e_.begin(), e_.begin() + 2 * n_, 0);
    }

    int q_degree() const {
        return std::accumulate(e_.begin() + 2 * n_, e_.end(), 0);
    }

    bool is_zero() const {
        for (int v : e_)
            if (v) return false;
        return true;
    }

    const std::vector<int>& raw() const { return e_; }

    Exponents plus(const Exponents& o) const {
        check_dim(o);
        Exponents r(*this);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
        return r;
    }

    friend bool operator==(const Exponents& a, const Exponents& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

    // Graded lexicographic: total degree first, ties broken by the flat
    // [ex|ey|eq] array.  This is the canonical term order everywhere.
    friend std::strong_ordering operator<=>(const Exponents& a, const Exponents& b) {
        if (a.n_ != b.n_) return a.n_ <=> b.n_;
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da <=> db;
        return a.e_ <=> b.e_;
    }

    void check_dim(const Exponents& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Exponents: dimension mismatch");
    }

private:
    size_t index(Var b, int j) const {
        if (j < 1 || j > n_) throw std::out_of_range("Exponents: index out of range");
        return static_cast<size_t>(static_cast<int>(b) * n_ + (j - 1));
    }

    int n_;
    std::vector<int> e_;
};

}  // namespace sympclif
