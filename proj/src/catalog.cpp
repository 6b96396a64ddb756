#include "sympclif/catalog.hpp"

namespace sympclif {

namespace {

const GaussianRational kI = GaussianRational::i();

void check_index(int j, int n, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": dimension must be positive");
    if (j < 1 || j > n) throw std::invalid_argument(std::string(who) + ": index out of range");
}

}  // namespace

WeylOp symplectic_dirac(int n) {
    if (n < 1) throw std::invalid_argument("symplectic_dirac: dimension must be positive");
    WeylOp op(n);
    for (int j = 1; j <= n; ++j) {
        Exponents mq(n), dy(n), dxq(n);
        mq.set(Var::Q, j, 1);
        dy.set(Var::Y, j, 1);
        dxq.set(Var::X, j, 1);
        dxq.set(Var::Q, j, 1);
        op.add_term(mq, dy, kI);
        op.add_term(Exponents(n), dxq, GaussianRational(-1));
    }
    return op;
}

WeylOp creation_operator(int n) {
    if (n < 1) throw std::invalid_argument("creation_operator: dimension must be positive");
    WeylOp op(n);
    for (int j = 1; j <= n; ++j) {
        Exponents my(n), dq(n), mxq(n);
        my.set(Var::Y, j, 1);
        dq.set(Var::Q, j, 1);
        mxq.set(Var::X, j, 1);
        mxq.set(Var::Q, j, 1);
        op.add_term(my, dq, GaussianRational(1));
        op.add_term(mxq, Exponents(n), kI);
    }
    return op;
}

WeylOp euler_operator(int n) {
    if (n < 1) throw std::invalid_argument("euler_operator: dimension must be positive");
    WeylOp op(n);
    for (int j = 1; j <= n; ++j) {
        Exponents mx(n), dx(n), my(n), dy(n);
        mx.set(Var::X, j, 1);
        dx.set(Var::X, j, 1);
        my.set(Var::Y, j, 1);
        dy.set(Var::Y, j, 1);
        op.add_term(mx, dx, GaussianRational(1));
        op.add_term(my, dy, GaussianRational(1));
    }
    return op;
}

WeylOp sp_generator(SpKind kind, int j, int k, int n) {
    check_index(j, n, "sp_generator");
    check_index(k, n, "sp_generator");
    WeylOp op(n);
    switch (kind) {
        case SpKind::Xjk: {
            // -x_j d/dx_k + y_k d/dy_j + q_k d/dq_j + (1/2) delta_jk
            Exponents mx(n), dx(n), my(n), dy(n), mq(n), dq(n);
            mx.set(Var::X, j, 1);
            dx.set(Var::X, k, 1);
            my.set(Var::Y, k, 1);
            dy.set(Var::Y, j, 1);
            mq.set(Var::Q, k, 1);
            dq.set(Var::Q, j, 1);
            op.add_term(mx, dx, GaussianRational(-1));
            op.add_term(my, dy, GaussianRational(1));
            op.add_term(mq, dq, GaussianRational(1));
            if (j == k) op.add_term(Exponents(n), Exponents(n), GaussianRational(Rational(1, 2)));
            return op;
        }
        case SpKind::Yjk: {
            if (j == k)
                throw std::invalid_argument("sp_generator: kind/index mismatch (Yjk needs j != k)");
            // x_k d/dy_j + x_j d/dy_k + i d/dq_j d/dq_k
            Exponents m1(n), d1(n), m2(n), d2(n), dqq(n);
            m1.set(Var::X, k, 1);
            d1.set(Var::Y, j, 1);
            m2.set(Var::X, j, 1);
            d2.set(Var::Y, k, 1);
            dqq.set(Var::Q, j, 1);
            dqq.set(Var::Q, k, 1);
            op.add_term(m1, d1, GaussianRational(1));
            op.add_term(m2, d2, GaussianRational(1));
            op.add_term(Exponents(n), dqq, kI);
            return op;
        }
        case SpKind::Zjk: {
            if (j == k)
                throw std::invalid_argument("sp_generator: kind/index mismatch (Zjk needs j != k)");
            // y_k d/dx_j + y_j d/dx_k + i q_j q_k
            Exponents m1(n), d1(n), m2(n), d2(n), mqq(n);
            m1.set(Var::Y, k, 1);
            d1.set(Var::X, j, 1);
            m2.set(Var::Y, j, 1);
            d2.set(Var::X, k, 1);
            mqq.set(Var::Q, j, 1);
            mqq.set(Var::Q, k, 1);
            op.add_term(m1, d1, GaussianRational(1));
            op.add_term(m2, d2, GaussianRational(1));
            op.add_term(mqq, Exponents(n), kI);
            return op;
        }
        case SpKind::Yjj: {
            if (j != k)
                throw std::invalid_argument("sp_generator: kind/index mismatch (Yjj needs j == k)");
            // -x_j d/dy_j - (i/2) d^2/dq_j^2
            Exponents mx(n), dy(n), dqq(n);
            mx.set(Var::X, j, 1);
            dy.set(Var::Y, j, 1);
            dqq.set(Var::Q, j, 2);
            op.add_term(mx, dy, GaussianRational(-1));
            op.add_term(Exponents(n), dqq, GaussianRational(Rational(0), Rational(-1, 2)));
            return op;
        }
        case SpKind::Zjj: {
            if (j != k)
                throw std::invalid_argument("sp_generator: kind/index mismatch (Zjj needs j == k)");
            // -y_j d/dx_j - (i/2) q_j^2
            Exponents my(n), dx(n), mqq(n);
            my.set(Var::Y, j, 1);
            dx.set(Var::X, j, 1);
            mqq.set(Var::Q, j, 2);
            op.add_term(my, dx, GaussianRational(-1));
            op.add_term(mqq, Exponents(n), GaussianRational(Rational(0), Rational(-1, 2)));
            return op;
        }
    }
    throw std::invalid_argument("sp_generator: unknown kind");
}

namespace {

// (E + n - a) and (2E + 2n - 1 - 2a), the scalar-shifted Euler factors that
// appear in every deformed raising operator.
WeylOp euler_shift(int n, const Rational& shift) {
    return euler_operator(n) + WeylOp::scalar(n, GaussianRational(shift));
}

WeylOp euler_shift2(int n, const Rational& alpha) {
    return GaussianRational(2) * euler_operator(n) +
           WeylOp::scalar(n, GaussianRational(Rational(2 * n - 1) - 2 * alpha));
}

}  // namespace

WeylOp deformed_raising(int j, int n, const Rational& alpha) {
    check_index(j, n, "deformed_raising");
    WeylOp Xs = creation_operator(n);
    WeylOp A = euler_shift(n, Rational(n) - alpha) * euler_shift2(n, alpha);
    return Xs * Xs * WeylOp::deriv(Var::X, j, n) - kI * (WeylOp::mul_var(Var::Y, j, n) * A) -
           kI * (Xs * WeylOp::mul_var(Var::Q, j, n) * euler_shift2(n, alpha));
}

WeylOp deformed_raising_dual(int j, int n, const Rational& alpha) {
    check_index(j, n, "deformed_raising_dual");
    WeylOp Xs = creation_operator(n);
    WeylOp A = euler_shift(n, Rational(n) - alpha) * euler_shift2(n, alpha);
    return Xs * Xs * WeylOp::deriv(Var::Y, j, n) + kI * (WeylOp::mul_var(Var::X, j, n) * A) -
           Xs * WeylOp::deriv(Var::Q, j, n) * euler_shift2(n, alpha);
}

Rational rest_constant(int n, int k, int a) {
    return Rational(k) - Rational(2 * a * k) + Rational(2 * k * k) + Rational(2 * a * n) -
           Rational(4 * k * n) + Rational(a * (a - 1), 2);
}

WeylOp rest_operator(int j, int n, int k, int a) {
    check_index(j, n, "rest_operator");
    if (k < 0 || a < 0) throw std::invalid_argument("rest_operator: negative parameter");
    WeylOp inner = GaussianRational(2 * (a - 2 * k)) * euler_operator(n) +
                   WeylOp::scalar(n, GaussianRational(rest_constant(n, k, a)));
    return (-kI) * (WeylOp::mul_var(Var::Y, j, n) * inner) -
           GaussianRational(a - 2 * k) *
               (kI * (creation_operator(n) * WeylOp::mul_var(Var::Q, j, n)));
}

WeylOp proper_symmetry_defect(const WeylOp& g) {
    return commutator(symplectic_dirac(g.n()), g);
}

bool intertwining_holds(int j, int n, int k, int a) {
    check_index(j, n, "intertwining_holds");
    if (k < 0 || a < 0) throw std::invalid_argument("intertwining_holds: negative parameter");
    WeylOp Xsa = creation_operator(n).pow(a);
    WeylOp lhs = deformed_raising(j, n, Rational(k)) * Xsa;
    WeylOp rhs = Xsa * (deformed_raising(j, n, Rational(0)) + rest_operator(j, n, k, a));
    return lhs == rhs;
}

}  // namespace sympclif
