#include <doctest.h>

#include "sympclif/catalog.hpp"
#include "sympclif/rng.hpp"

using namespace sympclif;

namespace {

WeylOp random_op(int n, Rng& rng) {
    WeylOp op(n);
    int nterms = rng.uniform(1, 3);
    for (int t = 0; t < nterms; ++t) {
        Exponents mul(n), der(n);
        int md = rng.uniform(0, 2), dd = rng.uniform(0, 2);
        for (int d = 0; d < md; ++d)
            mul.bump(static_cast<Var>(rng.uniform(0, 2)), rng.uniform(1, n), 1);
        for (int d = 0; d < dd; ++d)
            der.bump(static_cast<Var>(rng.uniform(0, 2)), rng.uniform(1, n), 1);
        op.add_term(mul, der, rng.small_gaussian());
    }
    return op;
}

Spinor random_spinor(int n, int max_deg, Rng& rng) {
    Polynomial p = Polynomial::zero(n);
    int nterms = rng.uniform(2, 5);
    for (int t = 0; t < nterms; ++t) {
        Exponents e(n);
        int deg = rng.uniform(0, max_deg);
        for (int d = 0; d < deg; ++d)
            e.bump(static_cast<Var>(rng.uniform(0, 2)), rng.uniform(1, n), 1);
        p.add_term(e, rng.small_gaussian());
    }
    return Spinor(std::move(p));
}

Spinor random_xy_homogeneous(int n, int ell, Rng& rng) {
    Polynomial p = Polynomial::zero(n);
    for (int t = 0; t < 4; ++t) {
        Exponents e(n);
        for (int d = 0; d < ell; ++d)
            e.bump(rng.uniform(0, 1) == 0 ? Var::X : Var::Y, rng.uniform(1, n), 1);
        e.bump(Var::Q, rng.uniform(1, n), rng.uniform(0, 2));
        p.add_term(e, rng.small_gaussian());
    }
    return Spinor(std::move(p));
}

}  // namespace

TEST_SUITE("operalg") {

TEST_CASE("normal ordering of a single contraction") {
    int n = 1;
    WeylOp dx = WeylOp::deriv(Var::X, 1, n);
    WeylOp x = WeylOp::mul_var(Var::X, 1, n);

    // dx . x = x dx + 1
    WeylOp expect = x * dx + WeylOp::identity(n);
    CHECK(dx * x == expect);

    // x . dx is already normal-ordered
    Exponents ex(1), edx(1);
    ex.set(Var::X, 1, 1);
    edx.set(Var::X, 1, 1);
    CHECK(x * dx == WeylOp::monomial(ex, edx, GaussianRational(1)));
}

TEST_CASE("normal ordering with multiplicities") {
    int n = 1;
    WeylOp dq = WeylOp::deriv(Var::Q, 1, n);
    WeylOp q = WeylOp::mul_var(Var::Q, 1, n);

    // dq^2 . q^2 = q^2 dq^2 + 4 q dq + 2
    WeylOp lhs = (dq * dq) * (q * q);
    WeylOp rhs = (q * q) * (dq * dq) + GaussianRational(4) * (q * dq) +
                 WeylOp::scalar(n, GaussianRational(2));
    CHECK(lhs == rhs);

    // distinct variables commute
    WeylOp dy = WeylOp::deriv(Var::Y, 1, n);
    WeylOp x = WeylOp::mul_var(Var::X, 1, n);
    CHECK(dy * x == x * dy);
    CHECK(commutator(x, WeylOp::mul_var(Var::Y, 1, n)).is_zero());
}

TEST_CASE("composed powers match repeated products") {
    WeylOp xs = creation_operator(2);
    CHECK(xs.pow(0) == WeylOp::identity(2));
    CHECK(xs.pow(1) == xs);
    CHECK(xs.pow(3) == xs * xs * xs);
}

TEST_CASE("sl(2) relations as canonical operator identities") {
    for (int n = 1; n <= 4; ++n) {
        WeylOp ds = symplectic_dirac(n);
        WeylOp xs = creation_operator(n);
        WeylOp en = euler_operator(n) + WeylOp::scalar(n, GaussianRational(n));
        CHECK(commutator(en, xs) == xs);
        CHECK(commutator(en, ds) == -ds);
        CHECK(commutator(ds, xs) == -GaussianRational::i() * en);
    }
}

TEST_CASE("commutators of creation powers with the generators") {
    // [q_j, Xs^a] = -a y_j Xs^(a-1)
    // [dx_j, Xs^a] = a Xs^(a-1) iq_j - (a(a-1)/2) Xs^(a-2) iy_j
    // [dy_j, Xs^a] = a Xs^(a-1) dq_j + (a(a-1)/2) Xs^(a-2) ix_j
    const GaussianRational i = GaussianRational::i();
    for (int n = 1; n <= 3; ++n) {
        WeylOp xs = creation_operator(n);
        for (int j = 1; j <= n; ++j) {
            for (int a = 1; a <= 6; ++a) {
                WeylOp xa = xs.pow(a);
                WeylOp xa1 = xs.pow(a - 1);
                GaussianRational ca{Rational(a)};
                GaussianRational ca2{Rational(a * (a - 1), 2)};

                CHECK(commutator(WeylOp::mul_var(Var::Q, j, n), xa) ==
                      -ca * (WeylOp::mul_var(Var::Y, j, n) * xa1));

                WeylOp rhs_x = ca * (xa1 * (i * WeylOp::mul_var(Var::Q, j, n)));
                if (a >= 2)
                    rhs_x -= ca2 * (xs.pow(a - 2) * (i * WeylOp::mul_var(Var::Y, j, n)));
                CHECK(commutator(WeylOp::deriv(Var::X, j, n), xa) == rhs_x);

                WeylOp rhs_y = ca * (xa1 * WeylOp::deriv(Var::Q, j, n));
                if (a >= 2)
                    rhs_y += ca2 * (xs.pow(a - 2) * (i * WeylOp::mul_var(Var::X, j, n)));
                CHECK(commutator(WeylOp::deriv(Var::Y, j, n), xa) == rhs_y);
            }
        }
    }
}

TEST_CASE("application oracles on the weighted model") {
    int n = 1;
    Spinor psi = Spinor::gaussian(n);
    Polynomial x = Polynomial::variable(Var::X, 1, n);
    Polynomial y = Polynomial::variable(Var::Y, 1, n);
    Polynomial q = Polynomial::variable(Var::Q, 1, n);
    const GaussianRational i = GaussianRational::i();

    CHECK(symplectic_dirac(n).apply(psi) == Spinor(n));
    CHECK(creation_operator(n).apply(psi) == Spinor(i * (x * q) - y * q));
    CHECK(symplectic_dirac(n).apply(Spinor(x)) == Spinor(q));

    Spinor xy(x * y);
    CHECK(euler_operator(n).apply(xy) == GaussianRational(2) * xy);
    CHECK(euler_operator(2).apply(Spinor::gaussian(2)) == Spinor(2));
}

TEST_CASE("application is linear") {
    Rng rng(31);
    WeylOp op = random_op(2, rng);
    Spinor f = random_spinor(2, 3, rng);
    Spinor g = random_spinor(2, 3, rng);
    GaussianRational c = rng.small_gaussian();
    CHECK(op.apply(f + g) == op.apply(f) + op.apply(g));
    CHECK(op.apply(c * f) == c * op.apply(f));
}

TEST_CASE("iterated powers of the action") {
    int n = 1;
    Spinor psi = Spinor::gaussian(n);
    WeylOp xs = creation_operator(n);
    CHECK(xs.apply_power(0, psi) == psi);
    CHECK(xs.apply_power(2, psi) == xs.apply(xs.apply(psi)));

    // degree-ell inputs die after ell+1 lowering steps
    Rng rng(41);
    for (int n2 : {1, 2}) {
        WeylOp ds = symplectic_dirac(n2);
        for (int t = 0; t < 5; ++t) {
            Spinor f = random_xy_homogeneous(n2, 3, rng);
            CHECK(ds.apply_power(4, f) == Spinor(n2));
        }
    }
}

TEST_CASE("composition agrees with sequential application") {
    Rng rng(59);
    for (int n : {1, 2}) {
        for (int t = 0; t < 10; ++t) {
            WeylOp a = random_op(n, rng);
            WeylOp b = random_op(n, rng);
            Spinor f = random_spinor(n, 3, rng);
            CHECK((a * b).apply(f) == a.apply(b.apply(f)));
        }
    }
}

TEST_CASE("jacobi identity") {
    Rng rng(61);
    for (int t = 0; t < 6; ++t) {
        WeylOp a = random_op(2, rng);
        WeylOp b = random_op(2, rng);
        WeylOp c = random_op(2, rng);
        WeylOp sum = commutator(commutator(a, b), c) + commutator(commutator(b, c), a) +
                     commutator(commutator(c, a), b);
        CHECK(sum.is_zero());
    }
}

TEST_CASE("dimension checks") {
    WeylOp a(1), b(2);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a.apply(Spinor::gaussian(2)), std::invalid_argument);
    CHECK_THROWS_AS(WeylOp(0), std::invalid_argument);
}

}  // TEST_SUITE
