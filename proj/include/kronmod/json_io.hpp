#pragma once

#include <nlohmann/json.hpp>

#include "kronmod/blowdown.hpp"
#include "kronmod/moduli.hpp"
#include "kronmod/normal_form.hpp"
#include "kronmod/stability.hpp"

namespace kronmod {

using json = nlohmann::ordered_json;

// Scalars are strings: "n" or "n/d" over Q, the decimal residue over F_p.
// Parsers also accept JSON integers. All parsers throw std::invalid_argument
// on malformed input.

json to_json(const Scalar& s);
json to_json(const LinForm& l);
json to_json(const QuadForm& q);
json to_json(const TernaryQuadForm& q);
json to_json(const Matrix& m);
json to_json(const KModule& phi);
json to_json(const GroupElem& gh);
json to_json(const NormalForm& nf);
json to_json(const WPoint& p);
json to_json(const Fiber& f);
json to_json(const Destabilizer& d);
json to_json(const StabilityVerdict& v);
json to_json(const Binary& b);
json to_json(const BigPsi& psi);
json to_json(const BiForm& f);
json to_json(const BiMatrix& m);
json to_json(const BigGroupElem& gh);
json to_json(const SnakeReport& r);

Scalar parse_scalar(const json& j, const Field& f);
LinForm parse_lin_form(const json& j, const Field& f);
QuadForm parse_quad_form(const json& j, const Field& f);
Matrix parse_matrix(const json& j, const Field& f);
KModule parse_module(const json& j, const Field& f);
GroupElem parse_group_elem(const json& j, const Field& f);
WPoint parse_wpoint(const json& j, const Field& f);
Binary parse_binary(const json& j, const Field& f);
BigPsi parse_psi(const json& j, const Field& f);

}  // namespace kronmod
