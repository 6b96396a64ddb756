#pragma once

#include "sympclif/catalog.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sympclif {

// gamma_j^(p) = (-i)^p p! (2j-1)!! C(p+j, 2j)  for 0 <= j <= p.
GaussianRational gamma_coefficient(int p, int j);

// Bessel-style integer coefficient B(p, j) = (p+j)! / ((p-j)! j! 2^j).
Rational bessel_coefficient(int p, int j);

struct BesselPolynomial {
    int degree = 0;
    std::vector<Rational> coeffs;  // coeffs[j] = B(degree, j)
};

BesselPolynomial bessel_polynomial(int p);

// The degree-ell word sum_j coeffs[j] * y_1^j Xs^(ell-j) q_1^(ell-j), kept
// abstract: slot 1 is preferred and the dimension is chosen at
// materialization time.
struct MonogenicWord {
    int degree = 0;
    std::vector<GaussianRational> coeffs;  // coeffs[j] = gamma_j^(degree)
};

MonogenicWord monogenic_word(int ell);

// Oracle for the word construction at n = 1: the ell-fold application of the
// undeformed raising operator Z_1 to the Gaussian ground state.
Spinor iterated_raising(int ell);

// Applies the abstract word to the n-dimensional ground state: for each j,
// multiply by q_1^(ell-j), apply Xs (ell-j) times, multiply by y_1^j, scale.
Spinor materialize(const MonogenicWord& w, int n);

// Ds^(2n-2) of the materialized degree-ell word: a polynomial solution of
// Ds f = 0 (possibly zero) for every ell, n >= 1.
Spinor fueter_map(int ell, int n);

bool is_monogenic(const Spinor& f);

// Residual Ds f, useful as a witness when certification fails.
Spinor monogenic_defect(const Spinor& f);

// (Z_1^[2n,0])^ell applied to the ground state; the canonical nonzero
// homogeneous monogenic of degree ell used as a scalar-extraction witness.
Spinor canonical_monogenic(int n, int ell);

// Seeded random homogeneous monogenic of degree ell, built from random words
// in the 2n undeformed raising operators and certified before returning.
Spinor random_monogenic(int n, int ell, uint64_t seed);

// Exact ratio c with a == c * b, if it exists and b != 0.
std::optional<GaussianRational> proportionality_ratio(const Spinor& a, const Spinor& b);

// f = sum_j Xs^j g_j with every g_j monogenic; returned sorted by j with zero
// parts dropped.  The peeling scalars are extracted at run time from witness
// monogenics, verified by exact proportionality, and cached.
std::vector<std::pair<int, Spinor>> fischer_decompose(const Spinor& f);

struct KernelTrialResult {
    int a = 0;        // number of Xs factors in front of the random monogenic
    int ell = 0;      // degree of the random monogenic
    uint64_t trial_seed = 0;
    bool pass = false;
    size_t residual_terms = 0;
};

// Kernel-preservation check: Z_j^[2n,k] preserves ker Ds^(2k+1).  Each trial feeds a
// random element Xs^a * (random monogenic), a <= 2k, through Z_j^[2n,k] and
// tests annihilation by Ds^(2k+1).
std::vector<KernelTrialResult> check_deformed_kernel(int j, int n, int k, int trials,
                                                     uint64_t seed);

}  // namespace sympclif
