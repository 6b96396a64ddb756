#pragma once

#include "sympclif/rational.hpp"

#include <string>

namespace sympclif {

// Element of Q(i): re + im*i with exact rational parts.  This is the
// coefficient field for every algebra in the library; normalization is
// inherited from the rational parts, so equality is plain member equality.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(int v) : re_(v), im_(0) {}
    GaussianRational(const Rational& re) : re_(re), im_(0) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    // |z|^2 as a rational; zero iff z == 0.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const {
        if (is_zero()) throw std::domain_error("GaussianRational: division by zero");
        Rational n = norm();
        return GaussianRational(re_ / n, -im_ / n);
    }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i2 = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i2);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) {
        return GaussianRational(-a.re_, -a.im_);
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Exact power by repeated squaring; negative exponents invert first.
    GaussianRational pow(int k) const {
        if (k < 0) return inverse().pow(-k);
        GaussianRational acc(1), sq(*this);
        while (k > 0) {
            if (k & 1) acc *= sq;
            sq *= sq;
            k >>= 1;
        }
        return acc;
    }

    // Human-readable form used in diagnostics, e.g. "1/2-3/1i".
    std::string str() const {
        std::string s = rational_to_string(re_);
        if (im_ != 0) {
            s += (im_ > 0 ? "+" : "-");
            s += rational_to_string(im_ > 0 ? im_ : Rational(-im_));
            s += "i";
        }
        return s;
    }

private:
    Rational re_, im_;
};

inline GaussianRational operator*(const Rational& a, const GaussianRational& b) {
    return GaussianRational(a) * b;
}

}  // namespace sympclif
