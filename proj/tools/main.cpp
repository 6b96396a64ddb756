#include <CLI11.hpp>

#include "sympclif/clifford.hpp"
#include "sympclif/fueter.hpp"
#include "sympclif/io.hpp"
#include "sympclif/suites.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

std::string dump(const sympclif::json& j) { return j.dump(2) + "\n"; }

void check_range(const char* what, int value, int lo, int hi) {
    if (value < lo || value > hi)
        throw std::invalid_argument(std::string(what) + " = " + std::to_string(value) +
                                    " outside [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "] (caps are overridable)");
}

}  // namespace

int main(int argc, char** argv) {
    using namespace sympclif;

    CLI::App app{"exact operator calculus for symplectic and orthogonal Clifford analysis"};
    app.set_version_flag("--version", "sympclif 1.0.0");
    app.require_subcommand(1);

    RunConfig cfg;
    std::string out_path;
    std::string in_path;
    std::string suite;
    std::string table = "gamma";
    std::string op = "fueter";
    std::string alpha_str = "0";
    int p_max = 8;

    auto add_caps = [&cfg](CLI::App* cmd) {
        cmd->add_option("--max-ell", cfg.max_ell, "degree cap")
            ->envname("SYMPCLIF_MAX_ELL")
            ->capture_default_str();
        cmd->add_option("--max-n", cfg.max_n, "dimension cap (symplectic side)")
            ->envname("SYMPCLIF_MAX_N")
            ->capture_default_str();
        cmd->add_option("--max-m", cfg.max_m, "dimension cap (Clifford side)")
            ->envname("SYMPCLIF_MAX_M")
            ->capture_default_str();
    };

    CLI::App* gen = app.add_subcommand(
        "gen-monogenic", "run the Fueter pipeline and certify the resulting spinor");
    gen->add_option("--n", cfg.n, "dimension")->capture_default_str();
    gen->add_option("--ell", cfg.ell, "homogeneity degree of the seed word")
        ->capture_default_str();
    gen->add_option("--out", out_path, "output file (default: stdout)");
    add_caps(gen);

    CLI::App* tab =
        app.add_subcommand("tables", "export the raising-coefficient tables as CSV");
    tab->add_option("--p-max", p_max, "largest degree row")->capture_default_str();
    tab->add_option("--table", table, "gamma, bessel, or both")
        ->check(CLI::IsMember({"gamma", "bessel", "both"}))
        ->capture_default_str();
    tab->add_option("--out", out_path,
                    "output file; with --table both, a prefix for <prefix>.gamma.csv and "
                    "<prefix>.bessel.csv");
    add_caps(tab);

    CLI::App* chk = app.add_subcommand("check", "run an identity suite and report JSON");
    chk->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    chk->add_option("--n", cfg.n, "dimension (symplectic suites)")->capture_default_str();
    chk->add_option("--m", cfg.m, "dimension (classical suites)")->capture_default_str();
    chk->add_option("--a-max", cfg.a_max, "power-sweep bound")->capture_default_str();
    chk->add_option("--k-max", cfg.k_max, "deformation-sweep bound")->capture_default_str();
    chk->add_option("--trials", cfg.trials, "randomized cases per cell")
        ->capture_default_str();
    chk->add_option("--seed", cfg.seed, "master seed")->capture_default_str();
    chk->add_flag("--parallel", cfg.parallel, "fan independent cases across threads");
    chk->add_option("--out", out_path, "report file (default: stdout)");
    add_caps(chk);

    CLI::App* dec =
        app.add_subcommand("decompose", "Fischer-decompose a JSON spinor and verify");
    dec->add_option("--in", in_path, "input spinor (JSON)")->required();
    dec->add_option("--out", out_path, "output file (default: stdout)");
    add_caps(dec);

    CLI::App* cls = app.add_subcommand("classical", "orthogonal Clifford constructions");
    cls->add_option("--op", op, "power, fueter, gegenbauer, or raising")
        ->check(CLI::IsMember({"power", "fueter", "gegenbauer", "raising"}))
        ->capture_default_str();
    cls->add_option("--m", cfg.m, "dimension (even)")->capture_default_str();
    cls->add_option("--k", cfg.k, "degree parameter")->capture_default_str();
    cls->add_option("--alpha", alpha_str, "deformation parameter as p/q (raising only)")
        ->capture_default_str();
    cls->add_option("--out", out_path, "output file (default: stdout)");
    add_caps(cls);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (gen->parsed()) {
            check_range("n", cfg.n, 1, cfg.max_n);
            check_range("ell", cfg.ell, 0, cfg.max_ell);
            Spinor f = fueter_map(cfg.ell, cfg.n);
            Spinor defect = monogenic_defect(f);
            bool mono = defect.poly().terms().empty();
            bool vanished = f.poly().terms().empty();
            json out{{"n", cfg.n},
                     {"ell", cfg.ell},
                     {"certification",
                      json{{"monogenic", mono},
                           {"vanished", vanished},
                           {"residual_terms", defect.poly().terms().size()}}},
                     {"spinor", to_json(f)}};
            write_output(out_path, dump(out));
            return mono ? 0 : 1;
        }

        if (tab->parsed()) {
            check_range("p-max", p_max, 0, cfg.max_ell);
            if (table == "gamma") {
                write_output(out_path, gamma_table_csv(p_max));
            } else if (table == "bessel") {
                write_output(out_path, bessel_table_csv(p_max));
            } else {
                if (out_path.empty())
                    throw std::invalid_argument("--table both requires --out <prefix>");
                write_output(out_path + ".gamma.csv", gamma_table_csv(p_max));
                write_output(out_path + ".bessel.csv", bessel_table_csv(p_max));
            }
            return 0;
        }

        if (chk->parsed()) {
            SuiteReport rep = run_suite(suite, cfg);
            write_output(out_path, dump(rep.to_json()));
            return rep.all_pass ? 0 : 1;
        }

        if (dec->parsed()) {
            Spinor f = [&] {
                try {
                    return spinor_from_json(json::parse(read_file(in_path)));
                } catch (const json::exception& e) {
                    throw std::invalid_argument(std::string("bad input spinor: ") + e.what());
                }
            }();
            check_range("n", f.n(), 1, cfg.max_n);
            if (f.max_xy_degree() > cfg.max_ell)
                throw std::invalid_argument("input degree exceeds cap");
            auto parts = fischer_decompose(f);
            WeylOp xs = creation_operator(f.n());
            Spinor rec(f.n());
            bool mono = true;
            json comps = json::array();
            for (const auto& [jj, g] : parts) {
                if (!is_monogenic(g)) mono = false;
                rec += xs.apply_power(jj, g);
                comps.push_back(json{{"j", jj}, {"spinor", to_json(g)}});
            }
            bool exact = (rec == f);
            json out{{"n", f.n()},
                     {"components", std::move(comps)},
                     {"all_monogenic", mono},
                     {"reconstruction_exact", exact}};
            write_output(out_path, dump(out));
            return (mono && exact) ? 0 : 1;
        }

        if (cls->parsed()) {
            check_range("m", cfg.m, 2, cfg.max_m);
            if (cfg.m % 2 != 0) throw std::invalid_argument("m must be even");
            check_range("k", cfg.k, 0, cfg.max_ell);
            json out{{"m", cfg.m}, {"op", op}, {"k", cfg.k}};
            CliffordPolynomial result = CliffordPolynomial::zero(cfg.m);
            bool certified = true;
            if (op == "power") {
                result = holomorphic_power(cfg.k, cfg.m);
            } else if (op == "fueter") {
                result = classical_fueter(cfg.k, cfg.m);
                CliffordPolynomial d = dirac_apply(result);
                certified = d.is_zero();
                out["certification"] = json{{"monogenic", certified},
                                            {"vanished", result.is_zero()},
                                            {"residual_terms", d.terms().size()}};
            } else if (op == "gegenbauer") {
                if (cfg.m < 4) throw std::invalid_argument("gegenbauer requires m >= 4");
                result = gegenbauer_monogenic(cfg.k, cfg.m);
                CliffordPolynomial d = dirac_apply(result);
                certified = d.is_zero();
                out["certification"] = json{{"monogenic", certified},
                                            {"vanished", result.is_zero()},
                                            {"residual_terms", d.terms().size()}};
            } else {  // raising
                Rational alpha = rational_from_string(alpha_str);
                out["alpha"] = rational_to_string(alpha);
                result = raising_apply(holomorphic_power(cfg.k, cfg.m), alpha);
            }
            out["polynomial"] = to_json(result);
            write_output(out_path, dump(out));
            return certified ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
