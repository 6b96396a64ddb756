// Acceptance battery: every core guarantee of the toolkit, checked exactly
// (no tolerances anywhere) and reported one line per criterion.
#include "sympclif/clifford.hpp"
#include "sympclif/fueter.hpp"
#include "sympclif/rng.hpp"
#include "sympclif/suites.hpp"

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace sympclif;

namespace {

struct Criterion {
    std::string label;
    std::function<bool(std::string&)> run;
};

bool suites_pass(const char* name, const std::vector<RunConfig>& configs, std::string& detail) {
    int cases = 0;
    for (const auto& cfg : configs) {
        SuiteReport rep = run_suite(name, cfg);
        cases += static_cast<int>(rep.cases.size());
        if (!rep.all_pass) {
            for (const auto& c : rep.cases)
                if (!c.pass) {
                    detail = "first failing case: " + c.inputs.dump();
                    return false;
                }
        }
    }
    detail = std::to_string(cases) + " cases";
    return true;
}

std::vector<RunConfig> sweep_n(int n_lo, int n_hi, const std::function<void(RunConfig&)>& tune) {
    std::vector<RunConfig> out;
    for (int n = n_lo; n <= n_hi; ++n) {
        RunConfig cfg;
        cfg.n = n;
        tune(cfg);
        out.push_back(cfg);
    }
    return out;
}

CliffordPolynomial random_clifford_poly(int m, int deg_max, Rng& rng) {
    CliffordPolynomial p(m);
    int terms = rng.uniform(3, 6);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(m, 0);
        int deg = rng.uniform(0, deg_max);
        for (int d = 0; d < deg; ++d) e[rng.uniform(0, m - 1)] += 1;
        uint32_t bits = static_cast<uint32_t>(rng.uniform(0, (1 << m) - 1));
        p.add_term(e, CliffordElement::blade_unit(m, bits, rng.small_gaussian()));
    }
    return p;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back(
        {"sl(2) relations for the symplectic Dirac, creation, and Euler operators, n = 1..4",
         [](std::string& detail) {
             return suites_pass("sl2", sweep_n(1, 4, [](RunConfig&) {}), detail);
         }});

    criteria.push_back(
        {"commutation lemma for powers of the creation operator, a = 1..6, all slots, n = 1..3",
         [](std::string& detail) {
             return suites_pass(
                 "comm-lemma", sweep_n(1, 3, [](RunConfig& cfg) { cfg.a_max = 6; }), detail);
         }});

    criteria.push_back(
        {"dual deformed raising operators arise as symmetry brackets, four deformation "
         "parameters, n = 1..3",
         [](std::string& detail) {
             return suites_pass("dual-raising", sweep_n(1, 3, [](RunConfig&) {}), detail);
         }});

    criteria.push_back(
        {"intertwining identity between deformed raising and Dirac powers, k = 0..2, "
         "a = 0..2k, n = 1..3",
         [](std::string& detail) {
             return suites_pass(
                 "intertwining", sweep_n(1, 3, [](RunConfig& cfg) { cfg.k_max = 2; }), detail);
         }});

    criteria.push_back(
        {"deformed raising operators preserve the kernel of odd Dirac powers, k = 0..2, "
         "five random trials per cell, n = 1..3",
         [](std::string& detail) {
             return suites_pass("deformed-kernel", sweep_n(1, 3,
                                                           [](RunConfig& cfg) {
                                                               cfg.k_max = 2;
                                                               cfg.trials = 5;
                                                               cfg.seed = 20260814;
                                                           }),
                                detail);
         }});

    criteria.push_back(
        {"closed-form words match iterated raising (degree <= 6) and factor through the "
         "Bessel coefficients (p <= 10)",
         [](std::string& detail) {
             for (int ell = 0; ell <= 6; ++ell)
                 if (!(materialize(monogenic_word(ell), 1) == iterated_raising(ell))) {
                     detail = "word/iteration mismatch at degree " + std::to_string(ell);
                     return false;
                 }
             const GaussianRational mi = -GaussianRational::i();
             for (int p = 0; p <= 10; ++p)
                 for (int j = 0; j <= p; ++j)
                     if (gamma_coefficient(p, j) !=
                         mi.pow(p) * GaussianRational(Rational(factorial(p))) *
                             GaussianRational(bessel_coefficient(p, j))) {
                         detail = "factorization fails at (p, j) = (" + std::to_string(p) +
                                  ", " + std::to_string(j) + ")";
                         return false;
                     }
             if (gamma_coefficient(1, 0) != mi || gamma_coefficient(1, 1) != mi) {
                 detail = "degree-1 coefficients are not (-i, -i)";
                 return false;
             }
             detail = "7 degrees, 66 coefficient cells";
             return true;
         }});

    criteria.push_back(
        {"pipeline outputs in higher dimensions are symplectic monogenics, n = 2, 3, "
         "degrees 0..6, vanishing cells reported",
         [](std::string& detail) {
             std::ostringstream report;
             for (int n : {2, 3}) {
                 int nonzero = 0;
                 report << (n == 2 ? "" : "; ") << "n=" << n << " vanished at ell={";
                 bool first = true;
                 for (int ell = 0; ell <= 6; ++ell) {
                     Spinor f = fueter_map(ell, n);
                     if (!is_monogenic(f)) {
                         detail = "not annihilated at (n, ell) = (" + std::to_string(n) +
                                  ", " + std::to_string(ell) + ")";
                         return false;
                     }
                     if (f.is_zero()) {
                         report << (first ? "" : ",") << ell;
                         first = false;
                     } else {
                         ++nonzero;
                     }
                 }
                 report << "}, nonzero cells: " << nonzero;
                 if (nonzero == 0) {
                     detail = "no nonzero output at n = " + std::to_string(n);
                     return false;
                 }
             }
             detail = report.str();
             return true;
         }});

    criteria.push_back(
        {"Fischer-type decomposition round trip on random spinors of (x, y)-degree <= 5, "
         "ten trials, n = 1..2",
         [](std::string& detail) {
             return suites_pass("fischer", sweep_n(1, 2,
                                                   [](RunConfig& cfg) {
                                                       cfg.trials = 10;
                                                       cfg.seed = 1729;
                                                   }),
                                detail);
         }});

    criteria.push_back(
        {"recursion of the shifted classical raising operator on holomorphic powers, "
         "k = 0..6, m = 2, 4, 6",
         [](std::string& detail) {
             int cells = 0;
             for (int m : {2, 4, 6})
                 for (int k = 0; k <= 6; ++k, ++cells)
                     if (!(raising_apply(holomorphic_power(k, m), Rational(2 - m)) ==
                           GaussianRational(k + 1) * holomorphic_power(k + 1, m))) {
                         detail = "recursion fails at (k, m) = (" + std::to_string(k) + ", " +
                                  std::to_string(m) + ")";
                         return false;
                     }
             detail = std::to_string(cells) + " cells";
             return true;
         }});

    criteria.push_back(
        {"iterated Laplacian images of holomorphic powers are classical monogenics, "
         "k = 0..8, m = 4, 6",
         [](std::string& detail) {
             std::ostringstream report;
             bool first = true;
             for (int m : {4, 6}) {
                 RunConfig cfg;
                 cfg.m = m;
                 cfg.k_max = 8;
                 SuiteReport rep = run_suite("classical-fueter", cfg);
                 int nonzero = 0;
                 for (const auto& cs : rep.cases) {
                     if (!cs.pass) {
                         detail = "first failing case: " + cs.inputs.dump();
                         return false;
                     }
                     if (cs.witness.value("nonzero", false)) ++nonzero;
                 }
                 // vanishing below degree m - 2 is expected; count the rest
                 report << (first ? "" : "; ") << "m=" << m << " nonzero cells: " << nonzero;
                 first = false;
             }
             detail = report.str();
             return true;
         }});

    criteria.push_back(
        {"Gegenbauer-type monogenics are Dirac-closed and tied to the Laplacian images by "
         "one exact constant, k = 0..4, m = 4",
         [](std::string& detail) {
             std::optional<GaussianRational> pinned;
             for (int k = 0; k <= 4; ++k) {
                 CliffordPolynomial g = gegenbauer_monogenic(k, 4);
                 if (!dirac_apply(g).is_zero()) {
                     detail = "not Dirac-closed at k = " + std::to_string(k);
                     return false;
                 }
                 auto c = gegenbauer_fueter_constant(k, 4);
                 if (!c) {
                     detail = "no exact constant at k = " + std::to_string(k);
                     return false;
                 }
                 if (!pinned) pinned = *c;
                 if (*c != *pinned) {
                     detail = "constant drifts at k = " + std::to_string(k) + " (" +
                              c->str() + " vs " + pinned->str() + ")";
                     return false;
                 }
             }
             detail = "constant = " + pinned->str() + " at every k";
             // regression pin: the computed constant must stay at this exact value
             return *pinned == GaussianRational(-2);
         }});

    criteria.push_back(
        {"Clifford substrate: generator relations up to m = 8 and the Dirac operator "
         "squaring to minus the Laplacian on random polynomials, m <= 6",
         [](std::string& detail) {
             for (int m = 1; m <= 8; ++m)
                 for (int j = 1; j <= m; ++j)
                     for (int k = 1; k <= m; ++k) {
                         CliffordElement ej = CliffordElement::generator(j, m);
                         CliffordElement ek = CliffordElement::generator(k, m);
                         CliffordElement anti = ej * ek + ek * ej;
                         CliffordElement want =
                             j == k ? CliffordElement::scalar(m, GaussianRational(-2))
                                    : CliffordElement(m);
                         if (!(anti == want)) {
                             detail = "relation fails at (j, k, m) = (" + std::to_string(j) +
                                      ", " + std::to_string(k) + ", " + std::to_string(m) + ")";
                             return false;
                         }
                     }
             int trials_total = 0;
             for (int m = 1; m <= 6; ++m) {
                 Rng rng(5000 + static_cast<uint64_t>(m));
                 for (int t = 0; t < 10; ++t, ++trials_total) {
                     CliffordPolynomial p = random_clifford_poly(m, 4, rng);
                     if (!(dirac_apply(dirac_apply(p)) + laplacian_apply(p, 1) ==
                           CliffordPolynomial::zero(m))) {
                         detail = "square identity fails at m = " + std::to_string(m) +
                                  ", trial " + std::to_string(t);
                         return false;
                     }
                 }
             }
             detail = "204 relation cells, " + std::to_string(trials_total) +
                      " random polynomials";
             return true;
         }});

    int failures = 0;
    for (auto& crit : criteria) {
        bool ok = false;
        std::string detail;
        try {
            ok = crit.run(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << ": " << crit.label;
        if (!detail.empty()) std::cout << "  [" << detail << "]";
        std::cout << "\n" << std::flush;
        if (!ok) ++failures;
    }
    if (failures == 0)
        std::cout << "ALL " << criteria.size() << " CRITERIA PASSED\n";
    else
        std::cout << failures << " OF " << criteria.size() << " CRITERIA FAILED\n";
    return failures == 0 ? 0 : 1;
}
