#include "sympclif/suites.hpp"

#include "sympclif/clifford.hpp"
#include "sympclif/fueter.hpp"
#include "sympclif/rng.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>
#include <utility>

namespace sympclif {

json SuiteReport::to_json() const {
    json cs = json::array();
    for (const auto& c : cases) {
        json e;
        e["inputs"] = c.inputs;
        e["pass"] = c.pass;
        if (!c.witness.is_null()) e["witness"] = c.witness;
        cs.push_back(std::move(e));
    }
    return json{{"suite", suite},
                {"params", params},
                {"cases", std::move(cs)},
                {"all_pass", all_pass}};
}

namespace {

struct CaseSpec {
    json inputs;
    std::function<std::pair<bool, json>()> body;
};

// Runs every case exactly once and stores results at the case's own index, so
// the report is identical whether or not the work was fanned across threads.
std::vector<CaseResult> execute(const std::vector<CaseSpec>& specs, bool parallel) {
    std::vector<CaseResult> out(specs.size());
    auto run_one = [&](size_t i) {
        out[i].inputs = specs[i].inputs;
        try {
            auto [pass, witness] = specs[i].body();
            out[i].pass = pass;
            out[i].witness = std::move(witness);
        } catch (const std::exception& e) {
            out[i].pass = false;
            out[i].witness = json{{"error", e.what()}};
        }
    };
    if (!parallel || specs.size() < 2) {
        for (size_t i = 0; i < specs.size(); ++i) run_one(i);
        return out;
    }
    std::atomic<size_t> next{0};
    size_t workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 4;
    workers = std::min(workers, specs.size());
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t i; (i = next.fetch_add(1)) < specs.size();) run_one(i);
        });
    for (auto& t : pool) t.join();
    return out;
}

SuiteReport finish(std::string name, json params, const std::vector<CaseSpec>& specs,
                   bool parallel) {
    SuiteReport rep;
    rep.suite = std::move(name);
    rep.params = std::move(params);
    rep.cases = execute(specs, parallel);
    rep.all_pass = std::all_of(rep.cases.begin(), rep.cases.end(),
                               [](const CaseResult& c) { return c.pass; });
    return rep;
}

// splitmix64 step: distinct, reproducible per-case seeds from the master seed.
uint64_t mix_seed(uint64_t seed, uint64_t salt) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

json weyl_defect(const WeylOp& d) { return json{{"residual_terms", d.term_count()}}; }

void require_n(const RunConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("suite: n must be positive");
    if (cfg.n > cfg.max_n)
        throw std::invalid_argument("suite: n exceeds cap (raise --max-n to override)");
}

void require_m(const RunConfig& cfg, int min_m) {
    if (cfg.m < min_m || cfg.m % 2 != 0)
        throw std::invalid_argument("suite: m must be even and >= " + std::to_string(min_m));
    if (cfg.m > cfg.max_m)
        throw std::invalid_argument("suite: m exceeds cap (raise --max-m to override)");
}

Spinor random_spinor(int n, int xy_max, int q_max, Rng& rng) {
    Polynomial p = Polynomial::zero(n);
    int nterms = rng.uniform(4, 8);
    for (int t = 0; t < nterms; ++t) {
        Exponents e(n);
        int xy = rng.uniform(0, xy_max);
        for (int d = 0; d < xy; ++d)
            e.bump(rng.uniform(0, 1) == 0 ? Var::X : Var::Y, rng.uniform(1, n), 1);
        int qd = rng.uniform(0, q_max);
        for (int d = 0; d < qd; ++d) e.bump(Var::Q, rng.uniform(1, n), 1);
        p.add_term(e, rng.small_gaussian());
    }
    return Spinor(std::move(p));
}

SuiteReport suite_sl2(const RunConfig& cfg) {
    require_n(cfg);
    const int n = cfg.n;
    std::vector<CaseSpec> specs;
    const char* names[3] = {"[E+n, Xs] = Xs", "[E+n, Ds] = -Ds", "[Ds, Xs] = -i(E+n)"};
    for (int r = 0; r < 3; ++r)
        specs.push_back(
            {json{{"relation", names[r]}, {"n", n}}, [n, r]() -> std::pair<bool, json> {
                 WeylOp Ds = symplectic_dirac(n);
                 WeylOp Xs = creation_operator(n);
                 WeylOp En = euler_operator(n) + WeylOp::scalar(n, GaussianRational(n));
                 WeylOp defect(n);
                 if (r == 0) defect = commutator(En, Xs) - Xs;
                 if (r == 1) defect = commutator(En, Ds) + Ds;
                 if (r == 2) defect = commutator(Ds, Xs) + GaussianRational::i() * En;
                 if (defect.is_zero()) return {true, json()};
                 return {false, weyl_defect(defect)};
             }});
    return finish("sl2", json{{"n", n}}, specs, cfg.parallel);
}

SuiteReport suite_sp2n_symmetry(const RunConfig& cfg) {
    require_n(cfg);
    const int n = cfg.n;
    std::vector<CaseSpec> specs;
    auto add = [&](SpKind kind, const char* label, int j, int k) {
        specs.push_back(
            {json{{"generator", label}, {"j", j}, {"k", k}},
             [kind, j, k, n]() -> std::pair<bool, json> {
                 WeylOp defect = proper_symmetry_defect(sp_generator(kind, j, k, n));
                 if (defect.is_zero()) return {true, json()};
                 return {false, weyl_defect(defect)};
             }});
    };
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) add(SpKind::Xjk, "Xjk", j, k);
    for (int j = 1; j <= n; ++j) {
        add(SpKind::Yjj, "Yjj", j, j);
        add(SpKind::Zjj, "Zjj", j, j);
    }
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
            add(SpKind::Yjk, "Yjk", j, k);
            add(SpKind::Zjk, "Zjk", j, k);
        }
    return finish("sp2n-symmetry", json{{"n", n}}, specs, cfg.parallel);
}

SuiteReport suite_comm_lemma(const RunConfig& cfg) {
    require_n(cfg);
    if (cfg.a_max < 1) throw std::invalid_argument("suite: a_max must be >= 1");
    const int n = cfg.n;
    const char* names[3] = {"[q_j, Xs^a]", "[dx_j, Xs^a]", "[dy_j, Xs^a]"};
    std::vector<CaseSpec> specs;
    for (int j = 1; j <= n; ++j)
        for (int a = 1; a <= cfg.a_max; ++a)
            for (int id = 0; id < 3; ++id)
                specs.push_back(
                    {json{{"identity", names[id]}, {"j", j}, {"a", a}},
                     [n, j, a, id]() -> std::pair<bool, json> {
                         WeylOp Xs = creation_operator(n);
                         WeylOp Xa = Xs.pow(a);
                         WeylOp Xa1 = Xs.pow(a - 1);
                         GaussianRational I = GaussianRational::i();
                         GaussianRational ca{Rational(a)};
                         GaussianRational ca2{Rational(a * (a - 1), 2)};
                         WeylOp defect(n);
                         if (id == 0) {
                             // [q_j, Xs^a] = -a y_j Xs^(a-1)
                             defect = commutator(WeylOp::mul_var(Var::Q, j, n), Xa) +
                                      ca * (WeylOp::mul_var(Var::Y, j, n) * Xa1);
                         } else if (id == 1) {
                             // [dx_j, Xs^a] = a Xs^(a-1) iq_j - (a(a-1)/2) Xs^(a-2) iy_j
                             WeylOp rhs = ca * (Xa1 * (I * WeylOp::mul_var(Var::Q, j, n)));
                             if (a >= 2)
                                 rhs -= ca2 *
                                        (Xs.pow(a - 2) * (I * WeylOp::mul_var(Var::Y, j, n)));
                             defect = commutator(WeylOp::deriv(Var::X, j, n), Xa) - rhs;
                         } else {
                             // [dy_j, Xs^a] = a Xs^(a-1) dq_j + (a(a-1)/2) Xs^(a-2) ix_j
                             WeylOp rhs = ca * (Xa1 * WeylOp::deriv(Var::Q, j, n));
                             if (a >= 2)
                                 rhs += ca2 *
                                        (Xs.pow(a - 2) * (I * WeylOp::mul_var(Var::X, j, n)));
                             defect = commutator(WeylOp::deriv(Var::Y, j, n), Xa) - rhs;
                         }
                         if (defect.is_zero()) return {true, json()};
                         return {false, weyl_defect(defect)};
                     }});
    return finish("comm-lemma", json{{"n", n}, {"a_max", cfg.a_max}}, specs, cfg.parallel);
}

SuiteReport suite_dual_raising(const RunConfig& cfg) {
    require_n(cfg);
    const int n = cfg.n;
    std::vector<Rational> alphas = {Rational(0), Rational(1), Rational(3) / Rational(2),
                                    Rational(-2)};
    json alpha_names = json::array();
    for (const auto& a : alphas) alpha_names.push_back(rational_to_string(a));
    std::vector<CaseSpec> specs;
    for (int j = 1; j <= n; ++j)
        for (const auto& alpha : alphas)
            specs.push_back({json{{"j", j}, {"alpha", rational_to_string(alpha)}},
                             [n, j, alpha]() -> std::pair<bool, json> {
                                 WeylOp lhs = commutator(sp_generator(SpKind::Yjj, j, j, n),
                                                         deformed_raising(j, n, alpha));
                                 WeylOp rhs = deformed_raising_dual(j, n, alpha);
                                 if (lhs == rhs) return {true, json()};
                                 return {false, weyl_defect(lhs - rhs)};
                             }});
    return finish("dual-raising", json{{"n", n}, {"alphas", alpha_names}}, specs,
                  cfg.parallel);
}

SuiteReport suite_intertwining(const RunConfig& cfg) {
    require_n(cfg);
    if (cfg.k_max < 0) throw std::invalid_argument("suite: k_max must be >= 0");
    const int n = cfg.n;
    std::vector<CaseSpec> specs;
    for (int j = 1; j <= n; ++j)
        for (int k = 0; k <= cfg.k_max; ++k)
            for (int a = 0; a <= 2 * k; ++a)
                specs.push_back({json{{"j", j}, {"k", k}, {"a", a}},
                                 [n, j, k, a]() -> std::pair<bool, json> {
                                     return {intertwining_holds(j, n, k, a), json()};
                                 }});
    return finish("intertwining", json{{"n", n}, {"k_max", cfg.k_max}}, specs, cfg.parallel);
}

SuiteReport suite_deformed_kernel(const RunConfig& cfg) {
    require_n(cfg);
    if (cfg.k_max < 0) throw std::invalid_argument("suite: k_max must be >= 0");
    if (cfg.trials < 1) throw std::invalid_argument("suite: trials must be >= 1");
    const int n = cfg.n;
    std::vector<CaseSpec> specs;
    uint64_t salt = 0;
    for (int k = 0; k <= cfg.k_max; ++k)
        for (int t = 0; t < cfg.trials; ++t) {
            int j = 1 + t % n;
            uint64_t case_seed = mix_seed(cfg.seed, salt++);
            specs.push_back(
                {json{{"k", k}, {"j", j}, {"trial", t}, {"seed", case_seed}},
                 [n, j, k, case_seed]() -> std::pair<bool, json> {
                     auto res = check_deformed_kernel(j, n, k, 1, case_seed);
                     const KernelTrialResult& r = res.at(0);
                     json w{{"a", r.a}, {"ell", r.ell}};
                     if (!r.pass) w["residual_terms"] = r.residual_terms;
                     return {r.pass, std::move(w)};
                 }});
        }
    return finish("deformed-kernel",
                  json{{"n", n}, {"k_max", cfg.k_max}, {"trials", cfg.trials},
                       {"seed", cfg.seed}},
                  specs, cfg.parallel);
}

SuiteReport suite_fischer(const RunConfig& cfg) {
    require_n(cfg);
    if (cfg.trials < 1) throw std::invalid_argument("suite: trials must be >= 1");
    const int n = cfg.n;
    const int xy_max = 5;
    std::vector<CaseSpec> specs;
    for (int t = 0; t < cfg.trials; ++t) {
        uint64_t case_seed = mix_seed(cfg.seed, static_cast<uint64_t>(t));
        specs.push_back(
            {json{{"trial", t}, {"seed", case_seed}},
             [n, xy_max, case_seed]() -> std::pair<bool, json> {
                 Rng rng(case_seed);
                 Spinor f = random_spinor(n, xy_max, 2, rng);
                 auto parts = fischer_decompose(f);
                 WeylOp Xs = creation_operator(n);
                 Spinor rec(n);
                 bool monogenic = true;
                 for (const auto& [jj, g] : parts) {
                     if (!is_monogenic(g)) monogenic = false;
                     rec += Xs.apply_power(jj, g);
                 }
                 bool exact = (rec == f);
                 json w{{"components", parts.size()}};
                 if (!monogenic) w["all_monogenic"] = false;
                 if (!exact) w["reconstruction_exact"] = false;
                 return {monogenic && exact, std::move(w)};
             }});
    }
    return finish("fischer",
                  json{{"n", n}, {"trials", cfg.trials}, {"seed", cfg.seed},
                       {"xy_degree_max", xy_max}},
                  specs, cfg.parallel);
}

SuiteReport suite_classical_raising(const RunConfig& cfg) {
    require_m(cfg, 2);
    if (cfg.k_max < 0) throw std::invalid_argument("suite: k_max must be >= 0");
    if (cfg.trials < 1) throw std::invalid_argument("suite: trials must be >= 1");
    const int m = cfg.m;
    std::vector<CaseSpec> specs;
    uint64_t salt = 0;
    for (int k = 0; k <= cfg.k_max; ++k)
        for (int t = 0; t < cfg.trials; ++t) {
            uint64_t case_seed = mix_seed(cfg.seed, 0x10000u + salt++);
            specs.push_back(
                {json{{"k", k}, {"trial", t}, {"seed", case_seed}},
                 [m, k, case_seed]() -> std::pair<bool, json> {
                     Rng rng(case_seed);
                     // Supply of certified monogenics: repeated degree raising
                     // applied to the two constant seeds 1 and e_1.
                     std::vector<CliffordPolynomial> supply;
                     CliffordPolynomial p = CliffordPolynomial::one(m);
                     CliffordPolynomial pe =
                         CliffordPolynomial::constant(CliffordElement::generator(1, m));
                     for (int d = 0; d <= 2 * k + 1; ++d) {
                         supply.push_back(p);
                         supply.push_back(pe);
                         p = raising_apply(p, Rational(0));
                         pe = raising_apply(pe, Rational(0));
                     }
                     CliffordPolynomial xv = vector_variable(m);
                     CliffordPolynomial f = CliffordPolynomial::zero(m);
                     CliffordPolynomial xa = CliffordPolynomial::one(m);
                     for (int a = 0; a <= 2 * k; ++a) {
                         const CliffordPolynomial& mono =
                             supply[static_cast<size_t>(rng.uniform(
                                 0, static_cast<int>(supply.size()) - 1))];
                         f = f + rng.small_gaussian() * (xa * mono);
                         xa = xa * xv;
                     }
                     auto kernel_power = [k](CliffordPolynomial g) {
                         for (int s = 0; s < 2 * k + 1; ++s) g = dirac_apply(g);
                         return g;
                     };
                     bool source_ok = kernel_power(f).is_zero();
                     CliffordPolynomial image = raising_apply(f, Rational(-2 * k));
                     CliffordPolynomial residual = kernel_power(image);
                     bool image_ok = residual.is_zero();
                     if (source_ok && image_ok) return {true, json()};
                     json w;
                     w["source_in_kernel"] = source_ok;
                     w["image_in_kernel"] = image_ok;
                     if (!image_ok) w["residual_terms"] = residual.terms().size();
                     return {false, std::move(w)};
                 }});
        }
    return finish("classical-raising",
                  json{{"m", m}, {"k_max", cfg.k_max}, {"trials", cfg.trials},
                       {"seed", cfg.seed}},
                  specs, cfg.parallel);
}

SuiteReport suite_classical_fueter(const RunConfig& cfg) {
    require_m(cfg, 2);
    if (cfg.k_max < 0) throw std::invalid_argument("suite: k_max must be >= 0");
    const int m = cfg.m;
    std::vector<CaseSpec> specs;
    for (int k = 0; k <= cfg.k_max; ++k)
        specs.push_back({json{{"k", k}}, [m, k]() -> std::pair<bool, json> {
                             CliffordPolynomial r = classical_fueter(k, m);
                             CliffordPolynomial defect = dirac_apply(r);
                             json w{{"nonzero", !r.is_zero()}};
                             if (!defect.is_zero()) w["residual_terms"] = defect.terms().size();
                             return {defect.is_zero(), std::move(w)};
                         }});
    return finish("classical-fueter", json{{"m", m}, {"k_max", cfg.k_max}}, specs,
                  cfg.parallel);
}

SuiteReport suite_gegenbauer(const RunConfig& cfg) {
    require_m(cfg, 4);
    if (cfg.k_max < 0) throw std::invalid_argument("suite: k_max must be >= 0");
    const int m = cfg.m;
    std::vector<CaseSpec> specs;
    for (int k = 0; k <= cfg.k_max; ++k)
        specs.push_back(
            {json{{"k", k}}, [m, k]() -> std::pair<bool, json> {
                 CliffordPolynomial g = gegenbauer_monogenic(k, m);
                 bool closed = dirac_apply(g).is_zero();
                 auto c = gegenbauer_fueter_constant(k, m);
                 json w;
                 w["dirac_closed"] = closed;
                 w["constant"] = c ? to_json(*c) : json();
                 return {closed && c.has_value(), std::move(w)};
             }});
    return finish("gegenbauer", json{{"m", m}, {"k_max", cfg.k_max}}, specs, cfg.parallel);
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "sl2",          "sp2n-symmetry",     "comm-lemma",      "dual-raising",
        "intertwining", "deformed-kernel",   "fischer",         "classical-raising",
        "classical-fueter", "gegenbauer"};
    return names;
}

SuiteReport run_suite(const std::string& name, const RunConfig& cfg) {
    if (name == "sl2") return suite_sl2(cfg);
    if (name == "sp2n-symmetry") return suite_sp2n_symmetry(cfg);
    if (name == "comm-lemma") return suite_comm_lemma(cfg);
    if (name == "dual-raising") return suite_dual_raising(cfg);
    if (name == "intertwining") return suite_intertwining(cfg);
    if (name == "deformed-kernel") return suite_deformed_kernel(cfg);
    if (name == "fischer") return suite_fischer(cfg);
    if (name == "classical-raising") return suite_classical_raising(cfg);
    if (name == "classical-fueter") return suite_classical_fueter(cfg);
    if (name == "gegenbauer") return suite_gegenbauer(cfg);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace sympclif
