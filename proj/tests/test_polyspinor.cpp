#include <doctest.h>

#include "sympclif/rng.hpp"
#include "sympclif/spinor.hpp"

#include <vector>

using namespace sympclif;

namespace {

Polynomial random_poly(int n, int max_deg, Rng& rng) {
    Polynomial p = Polynomial::zero(n);
    int nterms = rng.uniform(3, 6);
    for (int t = 0; t < nterms; ++t) {
        Exponents e(n);
        int deg = rng.uniform(0, max_deg);
        for (int d = 0; d < deg; ++d)
            e.bump(static_cast<Var>(rng.uniform(0, 2)), rng.uniform(1, n), 1);
        p.add_term(e, rng.small_gaussian());
    }
    return p;
}

std::vector<GaussianRational> random_point(int n, Rng& rng) {
    std::vector<GaussianRational> pt;
    for (int v = 0; v < 3 * n; ++v) pt.push_back(rng.small_gaussian());
    return pt;
}

}  // namespace

TEST_SUITE("polyspinor") {

TEST_CASE("exponent vectors") {
    Exponents e(2);
    CHECK(e.is_zero());
    e.set(Var::X, 1, 2);
    e.bump(Var::Q, 2, 3);
    CHECK(e.get(Var::X, 1) == 2);
    CHECK(e.get(Var::Q, 2) == 3);
    CHECK(e.get(Var::Y, 1) == 0);
    CHECK(e.total_degree() == 5);
    CHECK(e.xy_degree() == 2);
    CHECK(e.q_degree() == 3);

    CHECK_THROWS_AS(e.get(Var::X, 0), std::out_of_range);
    CHECK_THROWS_AS(e.get(Var::X, 3), std::out_of_range);
    CHECK_THROWS_AS(e.set(Var::Y, 1, -1), std::invalid_argument);

    Exponents r = Exponents::from_raw({1, 0, 0, 2, 0, 1});
    CHECK(r.n() == 2);
    CHECK(r.get(Var::X, 1) == 1);
    CHECK(r.get(Var::Y, 2) == 2);  // raw layout is [ex | ey | eq]
    CHECK(r.get(Var::Q, 2) == 1);
    CHECK_THROWS_AS(Exponents::from_raw({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Exponents::from_raw({1, 0, -1}), std::invalid_argument);
}

TEST_CASE("graded lexicographic order") {
    // degree dominates, then the flat [ex|ey|eq] array lexicographically
    Exponents x1(1), q1(1), x2deg(1);
    x1.set(Var::X, 1, 1);
    q1.set(Var::Q, 1, 1);
    x2deg.set(Var::X, 1, 2);
    CHECK(q1 < x1);       // same degree: [0,0,1] < [1,0,0]
    CHECK(x1 < x2deg);    // lower total degree first
    CHECK(q1 < x2deg);
    CHECK(!(x1 < x1));
    CHECK(x1 == x1);
}

TEST_CASE("product oracles") {
    int n = 1;
    Polynomial x = Polynomial::variable(Var::X, 1, n);
    Polynomial y = Polynomial::variable(Var::Y, 1, n);
    Polynomial q = Polynomial::variable(Var::Q, 1, n);
    const GaussianRational i = GaussianRational::i();

    Exponents exy(1);
    exy.set(Var::X, 1, 1);
    exy.set(Var::Y, 1, 1);
    CHECK(x * y == Polynomial::monomial(exy, GaussianRational(1)));

    // (x + i q)(x - i q) = x^2 + q^2
    Polynomial lhs = (x + i * q) * (x - i * q);
    Exponents ex2(1), eq2(1);
    ex2.set(Var::X, 1, 2);
    eq2.set(Var::Q, 1, 2);
    Polynomial rhs = Polynomial::monomial(ex2, GaussianRational(1)) +
                     Polynomial::monomial(eq2, GaussianRational(1));
    CHECK(lhs == rhs);

    Polynomial p = x * y + q;
    CHECK(p + GaussianRational(-1) * p == Polynomial::zero(n));

    Polynomial other(2);
    CHECK_THROWS_AS(p * other, std::invalid_argument);
}

TEST_CASE("evaluation is a ring homomorphism") {
    Rng rng(101);
    for (int n : {1, 2}) {
        for (int t = 0; t < 20; ++t) {
            Polynomial a = random_poly(n, 3, rng);
            Polynomial b = random_poly(n, 3, rng);
            auto pt = random_point(n, rng);
            CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
            CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
        }
    }
}

TEST_CASE("plain derivatives") {
    Polynomial x = Polynomial::variable(Var::X, 1, 1);
    Polynomial x2 = x * x;
    CHECK(x2.diff(Var::X, 1) == GaussianRational(2) * x);
    CHECK(x2.diff(Var::Y, 1) == Polynomial::zero(1));

    Rng rng(55);
    for (int t = 0; t < 10; ++t) {
        Polynomial p = random_poly(2, 4, rng);
        CHECK(p.diff(Var::X, 1).diff(Var::Q, 2) == p.diff(Var::Q, 2).diff(Var::X, 1));
        CHECK(p.diff(Var::Y, 2).diff(Var::X, 2) == p.diff(Var::X, 2).diff(Var::Y, 2));
    }
}

TEST_CASE("spinor derivative twists q through the weight") {
    int n = 1;
    Spinor psi = Spinor::gaussian(n);
    Polynomial q = Polynomial::variable(Var::Q, 1, n);
    Polynomial x = Polynomial::variable(Var::X, 1, n);

    // d/dq of the bare weight pulls down -q
    CHECK(psi.diff(Var::Q, 1) == Spinor(GaussianRational(-1) * q));

    // x-derivative ignores the weight
    CHECK(Spinor(x).diff(Var::X, 1) == psi);

    // d/dq (q^2 weight) = (2q - q^3) weight
    Spinor f(q * q);
    CHECK(f.diff(Var::Q, 1) == Spinor(GaussianRational(2) * q - q * q * q));

    CHECK_THROWS_AS(psi.diff(Var::Q, 2), std::out_of_range);
}

TEST_CASE("spinor derivatives in distinct variables commute") {
    Rng rng(77);
    for (int t = 0; t < 10; ++t) {
        Spinor f(random_poly(2, 4, rng));
        CHECK(f.diff(Var::Q, 1).diff(Var::X, 1) == f.diff(Var::X, 1).diff(Var::Q, 1));
        CHECK(f.diff(Var::Q, 1).diff(Var::Q, 2) == f.diff(Var::Q, 2).diff(Var::Q, 1));
        CHECK(f.diff(Var::Y, 2).diff(Var::Q, 2) == f.diff(Var::Q, 2).diff(Var::Y, 2));
    }
}

TEST_CASE("homogeneous components in the (x,y)-degree") {
    int n = 1;
    Polynomial x = Polynomial::variable(Var::X, 1, n);
    Polynomial y = Polynomial::variable(Var::Y, 1, n);
    Polynomial q = Polynomial::variable(Var::Q, 1, n);

    Spinor f(x + q);
    CHECK(f.xy_homogeneous_component(0) == Spinor(q));
    CHECK(f.xy_homogeneous_component(1) == Spinor(x));
    CHECK(f.xy_homogeneous_component(2) == Spinor(n));

    Spinor g(x * y);
    CHECK(g.xy_homogeneous_component(2) == g);
    CHECK(g.is_xy_homogeneous(2));
    CHECK(!Spinor(x + q).is_xy_homogeneous(1));

    Rng rng(909);
    for (int t = 0; t < 10; ++t) {
        Spinor h(random_poly(2, 5, rng));
        Spinor sum(2);
        for (const auto& [ell, part] : h.xy_homogeneous_components()) {
            CHECK(part.is_xy_homogeneous(ell));
            sum += part;
        }
        CHECK(sum == h);
    }
}

}  // TEST_SUITE
