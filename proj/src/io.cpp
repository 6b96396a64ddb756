#include "sympclif/io.hpp"

#include "sympclif/fueter.hpp"

#include <sstream>

namespace sympclif {

json to_json(const GaussianRational& g) {
    return json{{"re", rational_to_string(g.re())}, {"im", rational_to_string(g.im())}};
}

GaussianRational gaussian_from_json(const json& j) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw std::invalid_argument("gaussian_from_json: expected {re, im}");
    return GaussianRational(rational_from_string(j.at("re").get<std::string>()),
                            rational_from_string(j.at("im").get<std::string>()));
}

namespace {

json exponent_block(const Exponents& e, Var b) {
    json a = json::array();
    for (int j = 1; j <= e.n(); ++j) a.push_back(e.get(b, j));
    return a;
}

Exponents exponents_from_blocks(const json& ex, const json& ey, const json& eq) {
    if (!ex.is_array() || !ey.is_array() || !eq.is_array() || ex.size() != ey.size() ||
        ex.size() != eq.size() || ex.empty())
        throw std::invalid_argument("exponents: malformed blocks");
    std::vector<int> raw;
    raw.reserve(3 * ex.size());
    for (const auto& v : ex) raw.push_back(v.get<int>());
    for (const auto& v : ey) raw.push_back(v.get<int>());
    for (const auto& v : eq) raw.push_back(v.get<int>());
    return Exponents::from_raw(std::move(raw));
}

}  // namespace

json to_json(const Spinor& s) {
    json terms = json::array();
    for (const auto& [e, c] : s.poly().terms()) {
        json t;
        t["ex"] = exponent_block(e, Var::X);
        t["ey"] = exponent_block(e, Var::Y);
        t["eq"] = exponent_block(e, Var::Q);
        t["re"] = rational_to_string(c.re());
        t["im"] = rational_to_string(c.im());
        terms.push_back(std::move(t));
    }
    return json{{"n", s.n()}, {"gaussian", true}, {"terms", std::move(terms)}};
}

Spinor spinor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
        throw std::invalid_argument("spinor_from_json: expected {n, gaussian, terms}");
    int n = j.at("n").get<int>();
    Polynomial p(n);
    for (const auto& t : j.at("terms")) {
        Exponents e = exponents_from_blocks(t.at("ex"), t.at("ey"), t.at("eq"));
        if (e.n() != n) throw std::invalid_argument("spinor_from_json: dimension mismatch");
        p.add_term(e, GaussianRational(rational_from_string(t.at("re").get<std::string>()),
                                       rational_from_string(t.at("im").get<std::string>())));
    }
    return Spinor(std::move(p));
}

json to_json(const WeylOp& op) {
    json terms = json::array();
    for (const auto& [key, c] : op.terms()) {
        json t;
        t["mul"] = json{{"ex", exponent_block(key.first, Var::X)},
                        {"ey", exponent_block(key.first, Var::Y)},
                        {"eq", exponent_block(key.first, Var::Q)}};
        t["der"] = json{{"ex", exponent_block(key.second, Var::X)},
                        {"ey", exponent_block(key.second, Var::Y)},
                        {"eq", exponent_block(key.second, Var::Q)}};
        t["re"] = rational_to_string(c.re());
        t["im"] = rational_to_string(c.im());
        terms.push_back(std::move(t));
    }
    return json{{"n", op.n()}, {"terms", std::move(terms)}};
}

WeylOp weyl_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
        throw std::invalid_argument("weyl_from_json: expected {n, terms}");
    int n = j.at("n").get<int>();
    WeylOp op(n);
    for (const auto& t : j.at("terms")) {
        const json& mul = t.at("mul");
        const json& der = t.at("der");
        Exponents me = exponents_from_blocks(mul.at("ex"), mul.at("ey"), mul.at("eq"));
        Exponents de = exponents_from_blocks(der.at("ex"), der.at("ey"), der.at("eq"));
        if (me.n() != n || de.n() != n)
            throw std::invalid_argument("weyl_from_json: dimension mismatch");
        op.add_term(me, de,
                    GaussianRational(rational_from_string(t.at("re").get<std::string>()),
                                     rational_from_string(t.at("im").get<std::string>())));
    }
    return op;
}

json to_json(const CliffordPolynomial& p) {
    json terms = json::array();
    for (const auto& [e, elem] : p.terms()) {
        json coeff = json::array();
        for (const auto& [bits, c] : elem.blades()) {
            json blade = json::array();
            for (int b = 0; b < p.m(); ++b)
                if (bits & (1u << b)) blade.push_back(b + 1);
            coeff.push_back(json{{"blade", std::move(blade)},
                                 {"re", rational_to_string(c.re())},
                                 {"im", rational_to_string(c.im())}});
        }
        terms.push_back(json{{"e", e}, {"coeff", std::move(coeff)}});
    }
    return json{{"m", p.m()}, {"terms", std::move(terms)}};
}

CliffordPolynomial clifford_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("terms"))
        throw std::invalid_argument("clifford_from_json: expected {m, terms}");
    int m = j.at("m").get<int>();
    CliffordPolynomial p(m);
    for (const auto& t : j.at("terms")) {
        std::vector<int> e = t.at("e").get<std::vector<int>>();
        CliffordElement elem(m);
        for (const auto& bc : t.at("coeff")) {
            uint32_t bits = 0;
            for (const auto& idx : bc.at("blade")) {
                int b = idx.get<int>();
                if (b < 1 || b > m)
                    throw std::invalid_argument("clifford_from_json: blade index out of range");
                bits |= 1u << (b - 1);
            }
            elem.add_blade(bits,
                           GaussianRational(rational_from_string(bc.at("re").get<std::string>()),
                                            rational_from_string(bc.at("im").get<std::string>())));
        }
        p.add_term(e, elem);
    }
    return p;
}

namespace {

void check_gamma_bessel_identity(int p_max) {
    const GaussianRational mi = -GaussianRational::i();
    for (int p = 0; p <= p_max; ++p)
        for (int j = 0; j <= p; ++j) {
            GaussianRational via = mi.pow(p) * GaussianRational(Rational(factorial(p))) *
                                   GaussianRational(bessel_coefficient(p, j));
            if (gamma_coefficient(p, j) != via)
                throw std::logic_error("coefficient tables: gamma/Bessel cross-check failed");
        }
}

}  // namespace

std::string gamma_table_csv(int p_max) {
    if (p_max < 0) throw std::invalid_argument("gamma_table_csv: negative bound");
    check_gamma_bessel_identity(p_max);
    std::ostringstream out;
    out << "p,j,re,im\n";
    for (int p = 0; p <= p_max; ++p)
        for (int j = 0; j <= p; ++j) {
            GaussianRational g = gamma_coefficient(p, j);
            out << p << ',' << j << ',' << rational_to_string(g.re()) << ','
                << rational_to_string(g.im()) << '\n';
        }
    return out.str();
}

std::string bessel_table_csv(int p_max) {
    if (p_max < 0) throw std::invalid_argument("bessel_table_csv: negative bound");
    check_gamma_bessel_identity(p_max);
    std::ostringstream out;
    out << "p,j,re,im\n";
    for (int p = 0; p <= p_max; ++p)
        for (int j = 0; j <= p; ++j)
            out << p << ',' << j << ',' << rational_to_string(bessel_coefficient(p, j))
                << ",0/1\n";
    return out.str();
}

}  // namespace sympclif
