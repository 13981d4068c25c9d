#include "kronmod/json_io.hpp"

namespace kronmod {

namespace {

constexpr std::array<const char*, 6> kTernaryNames = {"x2", "xy", "xz", "y2", "yz", "z2"};

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

void require_array(const json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) {
    fail(std::string(what) + ": expected an array of length " + std::to_string(n));
  }
}

}  // namespace

json to_json(const Scalar& s) { return s.to_string(); }

json to_json(const LinForm& l) {
  json j = json::object();
  for (std::size_t i = 0; i < 4; ++i) j[kVariableNames[i]] = to_json(l[i]);
  return j;
}

json to_json(const QuadForm& q) {
  json j = json::object();
  for (std::size_t k = 0; k < QuadForm::kMonomials; ++k) j[QuadForm::monomial_name(k)] = to_json(q.monomial(k));
  return j;
}

json to_json(const TernaryQuadForm& q) {
  json j = json::object();
  for (std::size_t k = 0; k < TernaryQuadForm::kMonomials; ++k) j[kTernaryNames[k]] = to_json(q.monomial(k));
  return j;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const KModule& phi) {
  return json::array({json::array({to_json(phi(0, 0)), to_json(phi(0, 1))}),
                      json::array({to_json(phi(1, 0)), to_json(phi(1, 1))})});
}

json to_json(const GroupElem& gh) { return {{"g", to_json(gh.g())}, {"h", to_json(gh.h())}}; }

json to_json(const NormalForm& nf) {
  return {{"lambda", to_json(nf.lambda)}, {"a", to_json(nf.a)},     {"b", to_json(nf.b)},
          {"c", to_json(nf.c)},           {"d", to_json(nf.d)},     {"upsilon", to_json(nf.upsilon.matrix())},
          {"g", to_json(nf.gh.g())},      {"h", to_json(nf.gh.h())}};
}

json to_json(const WPoint& p) { return {{"q", to_json(p.q())}, {"p", to_json(p.p())}, {"canonical", true}}; }

json to_json(const Fiber& f) {
  json points = json::array();
  for (const auto& p : f.points) points.push_back(to_json(p));
  return {{"points", std::move(points)}, {"needs_extension", f.needs_extension}};
}

namespace {

json vectors(const std::vector<std::vector<Scalar>>& vs) {
  json out = json::array();
  for (const auto& v : vs) {
    json row = json::array();
    for (const auto& s : v) row.push_back(to_json(s));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

json to_json(const Destabilizer& d) {
  json j = {{"dim_k", d.dim_k}, {"dim_l", d.dim_l}, {"k", vectors(d.k_basis)}, {"l", vectors(d.l_basis)}};
  if (d.over_extension) {
    json poly = json::array();
    for (const auto& c : d.k_polynomial) poly.push_back(to_json(c));
    j["over_extension"] = true;
    j["k_polynomial"] = std::move(poly);
  }
  return j;
}

json to_json(const StabilityVerdict& v) {
  return {{"semistable", v.semistable},
          {"stable", v.stable},
          {"witness", v.witness ? to_json(*v.witness) : json(nullptr)}};
}

json to_json(const Binary& b) { return json::array({to_json(b[0]), to_json(b[1])}); }

json to_json(const BigPsi& psi) {
  return {{"a1", to_json(psi.a1)},   {"a2", to_json(psi.a2)},   {"u11", to_json(psi.u11)},
          {"v11", to_json(psi.v11)}, {"u12", to_json(psi.u12)}, {"v12", to_json(psi.v12)},
          {"u21", to_json(psi.u21)}, {"v21", to_json(psi.v21)}, {"u22", to_json(psi.u22)},
          {"v22", to_json(psi.v22)}, {"f11", to_json(psi.f11)}, {"f12", to_json(psi.f12)},
          {"f21", to_json(psi.f21)}, {"f22", to_json(psi.f22)}};
}

json to_json(const BiForm& f) {
  json coeffs = json::array();
  Bidegree d = f.degree();
  if (d.nonnegative())
    for (int b = 0; b <= d.s; ++b)
      for (int a = 0; a <= d.r; ++a) coeffs.push_back(to_json(f.coeff(a, b)));
  return {{"bidegree", json::array({d.r, d.s})}, {"coeffs", std::move(coeffs)}, {"text", f.to_string()}};
}

json to_json(const BiMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const BigGroupElem& gh) { return {{"g", to_json(gh.g())}, {"h", to_json(gh.h())}}; }

json to_json(const SnakeReport& r) {
  json residues = json::array();
  for (const auto& res : r.residues) {
    residues.push_back({{"identity", res.identity}, {"row", res.row}, {"col", res.col},
                        {"value", res.value.to_string()}});
  }
  return {{"ok", r.ok()}, {"xi", to_json(r.xi)}, {"residues", std::move(residues)},
          {"connecting", to_json(r.connecting)}};
}

Scalar parse_scalar(const json& j, const Field& f) {
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (j.is_string()) return f.parse_scalar(j.get<std::string>());
  fail("scalar: expected a string or an integer, got " + j.dump());
}

LinForm parse_lin_form(const json& j, const Field& f) {
  if (!j.is_object()) fail("linear form: expected an object with keys x, y, z, w");
  LinForm l(f);
  for (const auto& [key, value] : j.items()) {
    std::size_t i = 0;
    while (i < 4 && key != kVariableNames[i]) ++i;
    if (i == 4) fail("linear form: unknown variable \"" + key + "\"");
    l[i] = parse_scalar(value, f);
  }
  return l;
}

QuadForm parse_quad_form(const json& j, const Field& f) {
  if (!j.is_object()) fail("quadratic form: expected an object keyed by monomials");
  QuadForm q(f);
  for (const auto& [key, value] : j.items()) {
    std::size_t k = 0;
    while (k < QuadForm::kMonomials && key != QuadForm::monomial_name(k)) ++k;
    if (k == QuadForm::kMonomials) fail("quadratic form: unknown monomial \"" + key + "\"");
    q.monomial(k) = parse_scalar(value, f);
  }
  return q;
}

Matrix parse_matrix(const json& j, const Field& f) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) fail("matrix: expected an array of rows");
  Matrix m(f, j.size(), j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    require_array(j[r], m.cols(), "matrix row");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = parse_scalar(j[r][c], f);
  }
  return m;
}

KModule parse_module(const json& j, const Field& f) {
  require_array(j, 2, "module");
  KModule phi(f);
  for (std::size_t r = 0; r < 2; ++r) {
    require_array(j[r], 2, "module row");
    for (std::size_t c = 0; c < 2; ++c) phi(r, c) = parse_lin_form(j[r][c], f);
  }
  return phi;
}

GroupElem parse_group_elem(const json& j, const Field& f) {
  return GroupElem(parse_matrix(member(j, "g"), f), parse_matrix(member(j, "h"), f));
}

WPoint parse_wpoint(const json& j, const Field& f) {
  return WPoint(parse_quad_form(member(j, "q"), f), parse_scalar(member(j, "p"), f));
}

Binary parse_binary(const json& j, const Field& f) {
  require_array(j, 2, "binary form");
  return {parse_scalar(j[0], f), parse_scalar(j[1], f)};
}

BigPsi parse_psi(const json& j, const Field& f) {
  if (!j.is_object()) fail("psi: expected an object");
  BigPsi psi(f);
  for (const auto& [key, value] : j.items()) {
    if (key == "a1") psi.a1 = parse_scalar(value, f);
    else if (key == "a2") psi.a2 = parse_scalar(value, f);
    else if (key == "u11") psi.u11 = parse_binary(value, f);
    else if (key == "v11") psi.v11 = parse_binary(value, f);
    else if (key == "u12") psi.u12 = parse_binary(value, f);
    else if (key == "v12") psi.v12 = parse_binary(value, f);
    else if (key == "u21") psi.u21 = parse_binary(value, f);
    else if (key == "v21") psi.v21 = parse_binary(value, f);
    else if (key == "u22") psi.u22 = parse_binary(value, f);
    else if (key == "v22") psi.v22 = parse_binary(value, f);
    else if (key == "f11") psi.f11 = parse_lin_form(value, f);
    else if (key == "f12") psi.f12 = parse_lin_form(value, f);
    else if (key == "f21") psi.f21 = parse_lin_form(value, f);
    else if (key == "f22") psi.f22 = parse_lin_form(value, f);
    else fail("psi: unknown field \"" + key + "\"");
  }
  return psi;
}

}  // namespace kronmod
