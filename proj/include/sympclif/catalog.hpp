#pragma once

#include "sympclif/weyl.hpp"

namespace sympclif {

// Symplectic Dirac operator  Ds = sum_j (i q_j d/dy_j - d/dx_j d/dq_j).
WeylOp symplectic_dirac(int n);

// Its raising partner  Xs = sum_j (y_j d/dq_j + i x_j q_j); together with Ds
// and the Euler operator below it spans an sl(2) in the Weyl algebra.
WeylOp creation_operator(int n);

// Euler degree operator in the (x,y)-variables only:
// E = sum_j (x_j d/dx_j + y_j d/dy_j).  The q-variables do not contribute.
WeylOp euler_operator(int n);

// Generator families of the symplectic Lie algebra sp(2n) realized as
// polynomial Weyl operators.  The diagonal entries of the Y and Z families
// are distinct kinds with their own normalization, not the j == k case of
// the off-diagonal formulas.
enum class SpKind { Xjk, Yjk, Zjk, Yjj, Zjj };

WeylOp sp_generator(SpKind kind, int j, int k, int n);

// Deformed raising operator in slot j (m = 2n):
//   Z_j = Xs^2 d/dx_j - i y_j (E+n-a)(2E+2n-1-2a) - i Xs q_j (2E+2n-1-2a).
// The scalar products are composed in this order and expanded once.
WeylOp deformed_raising(int j, int n, const Rational& alpha);

// Dual slot j+n, defined as the bracket [Y_jj, Z_j]; expanding the bracket
// gives the closed form implemented here:
//   Z_{j+n} = Xs^2 d/dy_j + i x_j (E+n-a)(2E+2n-1-2a) - Xs d/dq_j (2E+2n-1-2a).
WeylOp deformed_raising_dual(int j, int n, const Rational& alpha);

// gamma(n, k, a) = k - 2ak + 2k^2 + 2an - 4kn + a(a-1)/2.
Rational rest_constant(int n, int k, int a);

// Correction operator picked up when Z_j^[m,k] is pushed through Xs^a:
//   Psi_j = -i y_j (2(a-2k) E + gamma(n,k,a)) - i Xs q_j (a-2k).
// Vanishes identically at a = 2k.
WeylOp rest_operator(int j, int n, int k, int a);

// Commutator defect [Ds, g]; empty iff g is a proper symmetry of Ds.
WeylOp proper_symmetry_defect(const WeylOp& g);

// Exact operator identity  Z_j^[m,k] Xs^a == Xs^a (Z_j^[m,0] + Psi_j).
bool intertwining_holds(int j, int n, int k, int a);

}  // namespace sympclif
