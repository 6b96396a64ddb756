#pragma once

#include "sympclif/clifford.hpp"
#include "sympclif/weyl.hpp"

#include <json.hpp>

#include <string>

namespace sympclif {

// All serialization uses ordered JSON and canonical term order, so equal
// values always produce byte-identical output.  Rationals cross the boundary
// as "p/q" strings; nothing is ever emitted in floating point.
using json = nlohmann::ordered_json;

json to_json(const GaussianRational& g);
GaussianRational gaussian_from_json(const json& j);

json to_json(const Spinor& s);
Spinor spinor_from_json(const json& j);

json to_json(const WeylOp& op);
WeylOp weyl_from_json(const json& j);

json to_json(const CliffordPolynomial& p);
CliffordPolynomial clifford_from_json(const json& j);

// CSV tables of the closed-form word coefficients gamma_j^(p) and the Bessel
// coefficients B(p, j), p = 0..p_max, j = 0..p; columns p, j, re, im.  The
// identity gamma_j^(p) = (-i)^p p! B(p,j) is re-checked before a table is
// produced.
std::string gamma_table_csv(int p_max);
std::string bessel_table_csv(int p_max);

}  // namespace sympclif
