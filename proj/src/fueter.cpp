#include "sympclif/fueter.hpp"

#include "sympclif/rng.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace sympclif {

namespace {

const GaussianRational kI = GaussianRational::i();

void check_pj(int p, int j, const char* who) {
    if (p < 0 || j < 0 || j > p)
        throw std::invalid_argument(std::string(who) + ": need 0 <= j <= p");
}

}  // namespace

GaussianRational gamma_coefficient(int p, int j) {
    check_pj(p, j, "gamma_coefficient");
    Integer mag = factorial(p) * odd_double_factorial(j) * binomial(p + j, 2 * j);
    return (-kI).pow(p) * GaussianRational(Rational(mag));
}

Rational bessel_coefficient(int p, int j) {
    check_pj(p, j, "bessel_coefficient");
    Integer num = factorial(p + j);
    Integer den = factorial(p - j) * factorial(j);
    Rational r(num, den);
    return r / rational_pow(Rational(2), j);
}

BesselPolynomial bessel_polynomial(int p) {
    if (p < 0) throw std::invalid_argument("bessel_polynomial: negative degree");
    BesselPolynomial b;
    b.degree = p;
    b.coeffs.reserve(p + 1);
    for (int j = 0; j <= p; ++j) b.coeffs.push_back(bessel_coefficient(p, j));
    return b;
}

MonogenicWord monogenic_word(int ell) {
    if (ell < 0) throw std::invalid_argument("monogenic_word: negative degree");
    MonogenicWord w;
    w.degree = ell;
    w.coeffs.reserve(ell + 1);
    for (int j = 0; j <= ell; ++j) w.coeffs.push_back(gamma_coefficient(ell, j));
    return w;
}

Spinor iterated_raising(int ell) {
    if (ell < 0) throw std::invalid_argument("iterated_raising: negative degree");
    WeylOp Z = deformed_raising(1, 1, Rational(0));
    return Z.apply_power(ell, Spinor::gaussian(1));
}

Spinor materialize(const MonogenicWord& w, int n) {
    if (n < 1) throw std::invalid_argument("materialize: dimension must be positive");
    if (w.degree < 0 || w.coeffs.size() != static_cast<size_t>(w.degree) + 1)
        throw std::invalid_argument("materialize: malformed word");
    WeylOp Xs = creation_operator(n);
    Spinor acc(n);
    for (int j = 0; j <= w.degree; ++j) {
        if (w.coeffs[j].is_zero()) continue;
        int p = w.degree - j;
        Exponents qe(n), ye(n);
        qe.set(Var::Q, 1, p);
        ye.set(Var::Y, 1, j);
        Spinor s(Polynomial::monomial(qe, GaussianRational(1)));
        s = Xs.apply_power(p, s);
        acc += Spinor(Polynomial::monomial(ye, w.coeffs[j]) * s.poly());
    }
    return acc;
}

Spinor fueter_map(int ell, int n) {
    if (n < 1) throw std::invalid_argument("fueter_map: dimension must be positive");
    Spinor m = materialize(monogenic_word(ell), n);
    return symplectic_dirac(n).apply_power(2 * n - 2, m);
}

bool is_monogenic(const Spinor& f) { return monogenic_defect(f).is_zero(); }

Spinor monogenic_defect(const Spinor& f) { return symplectic_dirac(f.n()).apply(f); }

Spinor canonical_monogenic(int n, int ell) {
    if (n < 1) throw std::invalid_argument("canonical_monogenic: dimension must be positive");
    if (ell < 0) throw std::invalid_argument("canonical_monogenic: negative degree");
    Spinor w = deformed_raising(1, n, Rational(0)).apply_power(ell, Spinor::gaussian(n));
    if (w.is_zero() || !is_monogenic(w))
        throw std::logic_error("canonical_monogenic: witness construction failed");
    return w;
}

Spinor random_monogenic(int n, int ell, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_monogenic: dimension must be positive");
    if (ell < 0) throw std::invalid_argument("random_monogenic: negative degree");
    std::vector<WeylOp> ops;
    ops.reserve(2 * n);
    for (int j = 1; j <= n; ++j) ops.push_back(deformed_raising(j, n, Rational(0)));
    for (int j = 1; j <= n; ++j) ops.push_back(deformed_raising_dual(j, n, Rational(0)));

    Rng rng(seed);
    for (int attempt = 0; attempt < 8; ++attempt) {
        int words = rng.uniform(1, 2);
        Spinor f(n);
        for (int w = 0; w < words; ++w) {
            Spinor s = Spinor::gaussian(n);
            for (int t = 0; t < ell; ++t) s = ops[rng.uniform(0, 2 * n - 1)].apply(s);
            f += rng.small_gaussian() * s;
        }
        if (!f.is_zero() && f.is_xy_homogeneous(ell) && is_monogenic(f)) return f;
    }
    return canonical_monogenic(n, ell);
}

std::optional<GaussianRational> proportionality_ratio(const Spinor& a, const Spinor& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return GaussianRational(0);
    const auto& [key, bc] = *b.poly().terms().begin();
    auto it = a.poly().terms().find(key);
    if (it == a.poly().terms().end()) return std::nullopt;
    GaussianRational c = it->second / bc;
    if (a == c * b) return c;
    return std::nullopt;
}

namespace {

// Cumulative peeling scalar: Ds^j (Xs^j w) == lambda * w for every monogenic
// w of degree ell.  Extracted once per (n, j, ell) from a canonical witness
// and verified by exact proportionality.
GaussianRational fischer_scalar(int n, int j, int ell) {
    static std::map<std::tuple<int, int, int>, GaussianRational> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(n, j, ell);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    Spinor w = canonical_monogenic(n, ell);
    Spinor v = symplectic_dirac(n).apply_power(j, creation_operator(n).apply_power(j, w));
    auto ratio = proportionality_ratio(v, w);
    if (!ratio || ratio->is_zero())
        throw std::logic_error("fischer_scalar: proportionality extraction failed");
    cache.emplace(key, *ratio);
    return *ratio;
}

}  // namespace

std::vector<std::pair<int, Spinor>> fischer_decompose(const Spinor& f) {
    int n = f.n();
    WeylOp Ds = symplectic_dirac(n), Xs = creation_operator(n);
    std::map<int, Spinor> parts;

    for (auto& [d, comp] : f.xy_homogeneous_components()) {
        Spinor F = comp;
        while (!F.is_zero()) {
            int jmax = 0;
            Spinor top = F, cur = F;
            for (int j = 1; j <= d; ++j) {
                cur = Ds.apply(cur);
                if (cur.is_zero()) break;
                top = cur;
                jmax = j;
            }
            Spinor g = fischer_scalar(n, jmax, d - jmax).inverse() * top;
            if (!is_monogenic(g))
                throw std::logic_error("fischer_decompose: component failed certification");
            auto it = parts.find(jmax);
            if (it == parts.end()) it = parts.emplace(jmax, Spinor(n)).first;
            it->second += g;
            F -= Xs.apply_power(jmax, g);
        }
    }

    std::vector<std::pair<int, Spinor>> out;
    for (auto& [j, g] : parts)
        if (!g.is_zero()) out.emplace_back(j, std::move(g));
    return out;
}

std::vector<KernelTrialResult> check_deformed_kernel(int j, int n, int k, int trials,
                                                     uint64_t seed) {
    if (n < 1) throw std::invalid_argument("check_deformed_kernel: dimension must be positive");
    if (j < 1 || j > n) throw std::invalid_argument("check_deformed_kernel: index out of range");
    if (k < 0 || trials < 1)
        throw std::invalid_argument("check_deformed_kernel: bad parameters");

    WeylOp Z = deformed_raising(j, n, Rational(k));
    WeylOp Ds = symplectic_dirac(n), Xs = creation_operator(n);
    Rng master(seed);
    std::vector<KernelTrialResult> out;
    out.reserve(trials);
    for (int t = 0; t < trials; ++t) {
        KernelTrialResult r;
        r.trial_seed = master.raw();
        Rng local(r.trial_seed);
        r.ell = local.uniform(0, 3);
        r.a = k == 0 ? 0 : local.uniform(0, 2 * k);
        Spinor F = random_monogenic(n, r.ell, local.raw());
        F = Xs.apply_power(r.a, F);
        Spinor residual = Ds.apply_power(2 * k + 1, Z.apply(F));
        r.pass = residual.is_zero();
        r.residual_terms = residual.term_count();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace sympclif
