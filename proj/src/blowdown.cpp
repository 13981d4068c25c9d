#include "kronmod/blowdown.hpp"

#include <stdexcept>

namespace kronmod {

// ---- BiForm ---------------------------------------------------------------

BiForm::BiForm(const Field& field, Bidegree degree) : field_(field), degree_(degree) {
  if (degree.nonnegative()) {
    coeffs_.assign(static_cast<std::size_t>((degree.r + 1) * (degree.s + 1)), field.zero());
  }
}

BiForm BiForm::first(const Scalar& cu, const Scalar& cv) {
  BiForm f(cu.field(), {1, 0});
  f.set_coeff(0, 0, cu);
  f.set_coeff(1, 0, cv);
  return f;
}

BiForm BiForm::second(const Scalar& cu, const Scalar& cv) {
  BiForm f(cu.field(), {0, 1});
  f.set_coeff(0, 0, cu);
  f.set_coeff(0, 1, cv);
  return f;
}

BiForm BiForm::constant(const Scalar& c) {
  BiForm f(c.field(), {0, 0});
  f.set_coeff(0, 0, c);
  return f;
}

std::size_t BiForm::index(int a, int b) const {
  if (!degree_.nonnegative() || a < 0 || b < 0 || a > degree_.r || b > degree_.s) {
    throw std::out_of_range("BiForm: monomial outside the bidegree");
  }
  return static_cast<std::size_t>(b * (degree_.r + 1) + a);
}

bool BiForm::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

void BiForm::require_same_degree(const BiForm& o) const {
  if (!(degree_ == o.degree_)) throw std::invalid_argument("BiForm: bidegree mismatch");
}

BiForm& BiForm::operator+=(const BiForm& o) {
  require_same_degree(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

BiForm& BiForm::operator-=(const BiForm& o) {
  require_same_degree(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

BiForm& BiForm::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

BiForm BiForm::operator-() const {
  BiForm out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

BiForm operator*(const BiForm& a, const BiForm& b) {
  BiForm out(a.field_, a.degree_ + b.degree_);
  if (!a.degree_.nonnegative() || !b.degree_.nonnegative()) return out;
  for (int a1 = 0; a1 <= a.degree_.r; ++a1)
    for (int b1 = 0; b1 <= a.degree_.s; ++b1) {
      const Scalar& ca = a.coeff(a1, b1);
      if (ca.is_zero()) continue;
      for (int a2 = 0; a2 <= b.degree_.r; ++a2)
        for (int b2 = 0; b2 <= b.degree_.s; ++b2)
          out.coeffs_[out.index(a1 + a2, b1 + b2)] += ca * b.coeff(a2, b2);
    }
  return out;
}

bool operator==(const BiForm& a, const BiForm& b) {
  return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
}

namespace {

std::string power(const char* name, int e) {
  if (e == 0) return "";
  std::string s = std::string("*") + name;
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

std::string BiForm::to_string() const {
  std::string out;
  if (!degree_.nonnegative()) return "0";
  for (int b = 0; b <= degree_.s; ++b)
    for (int a = 0; a <= degree_.r; ++a) {
      const Scalar& c = coeff(a, b);
      if (c.is_zero()) continue;
      std::string mono = power("u1", degree_.r - a) + power("v1", a) + power("u2", degree_.s - b) +
                         power("v2", b);
      std::string term = c.to_string();
      if (!mono.empty()) {
        if (c == field_.one()) term = mono.substr(1);
        else if (c == -field_.one()) term = "-" + mono.substr(1);
        else term += mono;
      }
      if (!out.empty() && term[0] != '-') out += " + ";
      else if (!out.empty()) { out += " - "; term = term.substr(1); }
      out += term;
    }
  return out.empty() ? "0" : out;
}

BiForm segre(const LinForm& l) {
  BiForm f(l.field(), {1, 1});
  f.set_coeff(0, 0, l[0]);
  f.set_coeff(1, 0, l[1]);
  f.set_coeff(0, 1, l[2]);
  f.set_coeff(1, 1, l[3]);
  return f;
}

LinForm segre_inverse(const BiForm& f) {
  if (!(f.degree() == Bidegree{1, 1})) throw std::invalid_argument("segre_inverse: bidegree must be (1, 1)");
  LinForm l(f.field());
  l[0] = f.coeff(0, 0);
  l[1] = f.coeff(1, 0);
  l[2] = f.coeff(0, 1);
  l[3] = f.coeff(1, 1);
  return l;
}

// ---- BiMatrix -------------------------------------------------------------

BiMatrix::BiMatrix(const Field& field, std::vector<Bidegree> row_twists,
                   std::vector<Bidegree> col_twists)
    : field_(field), row_twists_(std::move(row_twists)), col_twists_(std::move(col_twists)) {
  entries_.reserve(rows() * cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) entries_.emplace_back(field_, degree(i, j));
}

BiMatrix BiMatrix::from_constant(const Matrix& m, std::vector<Bidegree> row_twists,
                                 std::vector<Bidegree> col_twists) {
  BiMatrix out(m.field(), std::move(row_twists), std::move(col_twists));
  if (m.rows() != out.rows() || m.cols() != out.cols()) throw std::invalid_argument("BiMatrix: shape");
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) {
      if (out.degree(i, j) == Bidegree{0, 0}) {
        out.entries_[i * out.cols() + j] = BiForm::constant(m(i, j));
      } else if (!m(i, j).is_zero()) {
        throw std::invalid_argument("BiMatrix: constant entry in a position of nonzero bidegree");
      }
    }
  return out;
}

BiMatrix BiMatrix::from_blocks(const BiMatrix& a, const BiMatrix& b, const BiMatrix& c,
                               const BiMatrix& d) {
  if (a.row_twists_ != b.row_twists_ || c.row_twists_ != d.row_twists_ ||
      a.col_twists_ != c.col_twists_ || b.col_twists_ != d.col_twists_) {
    throw std::invalid_argument("BiMatrix: incompatible blocks");
  }
  std::vector<Bidegree> rows = a.row_twists_, cols = a.col_twists_;
  rows.insert(rows.end(), c.row_twists_.begin(), c.row_twists_.end());
  cols.insert(cols.end(), b.col_twists_.begin(), b.col_twists_.end());
  BiMatrix out(a.field_, rows, cols);
  auto copy = [&](const BiMatrix& m, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out.set(r0 + i, c0 + j, m(i, j));
  };
  copy(a, 0, 0);
  copy(b, 0, a.cols());
  copy(c, a.rows(), 0);
  copy(d, a.rows(), a.cols());
  return out;
}

void BiMatrix::set(std::size_t i, std::size_t j, const BiForm& f) {
  if (!(f.degree() == degree(i, j))) {
    throw std::invalid_argument("BiMatrix: entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") has the wrong bidegree");
  }
  entries_[i * cols() + j] = f;
}

BiMatrix BiMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  BiMatrix out(field_, {row_twists_.begin() + r0, row_twists_.begin() + r0 + nr},
               {col_twists_.begin() + c0, col_twists_.begin() + c0 + nc});
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out.entries_[i * nc + j] = (*this)(r0 + i, c0 + j);
  return out;
}

Matrix BiMatrix::constant() const {
  Matrix m(field_, rows(), cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) {
      if (degree(i, j) == Bidegree{0, 0}) m(i, j) = (*this)(i, j).coeff(0, 0);
      else if (!(*this)(i, j).is_zero()) throw std::invalid_argument("BiMatrix: not constant");
    }
  return m;
}

BiMatrix BiMatrix::constant_inverse() const {
  return from_constant(constant().inverse(), col_twists_, row_twists_);
}

bool BiMatrix::degrees_legal() const {
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) {
      const BiForm& f = (*this)(i, j);
      if (!(f.degree() == degree(i, j))) return false;
      if (!f.degree().nonnegative() && !f.is_zero()) return false;
    }
  return true;
}

bool BiMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

BiMatrix operator*(const BiMatrix& a, const BiMatrix& b) {
  if (a.col_twists_ != b.row_twists_) throw std::invalid_argument("BiMatrix: twist mismatch in product");
  BiMatrix out(a.field_, a.row_twists_, b.col_twists_);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < b.cols(); ++k) {
      BiForm acc(a.field_, out.degree(i, k));
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a(i, j).is_zero() || b(j, k).is_zero()) continue;
        acc += a(i, j) * b(j, k);
      }
      out.entries_[i * out.cols() + k] = std::move(acc);
    }
  return out;
}

namespace {

void require_same_shape(const BiMatrix& a, const BiMatrix& b) {
  if (a.row_twists() != b.row_twists() || a.col_twists() != b.col_twists()) {
    throw std::invalid_argument("BiMatrix: twist mismatch");
  }
}

}  // namespace

BiMatrix operator+(const BiMatrix& a, const BiMatrix& b) {
  require_same_shape(a, b);
  BiMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

BiMatrix operator-(const BiMatrix& a, const BiMatrix& b) {
  require_same_shape(a, b);
  BiMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

BiMatrix BiMatrix::operator-() const {
  BiMatrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

bool operator==(const BiMatrix& a, const BiMatrix& b) {
  return a.row_twists_ == b.row_twists_ && a.col_twists_ == b.col_twists_ &&
         a.entries_ == b.entries_;
}

std::string BiMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols(); ++j) out += (j ? ", " : "") + (*this)(i, j).to_string();
    out += "]";
  }
  return out + "]";
}

BiMatrix segre(const KModule& phi) {
  BiMatrix out(phi.field(), {{0, 0}, {0, 0}}, {{-1, -1}, {-1, -1}});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) out.set(i, j, segre(phi(i, j)));
  return out;
}

KModule segre_inverse(const BiMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("segre_inverse: expected 2x2");
  KModule out(m.field());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) out(i, j) = segre_inverse(m(i, j));
  return out;
}

// ---- psi matrices ---------------------------------------------------------

std::vector<Bidegree> psi_source_twists() { return {{-1, -1}, {-1, -1}, {-1, 0}, {0, -1}}; }
std::vector<Bidegree> psi_target_twists() { return {{-1, 0}, {0, -1}, {0, 0}, {0, 0}}; }

namespace {

Binary zero_binary(const Field& f) { return {f.zero(), f.zero()}; }

BiForm on_first(const Binary& b) { return BiForm::first(b[0], b[1]); }
BiForm on_second(const Binary& b) { return BiForm::second(b[0], b[1]); }

Binary read_first(const BiForm& f) { return {f.coeff(0, 0), f.coeff(1, 0)}; }
Binary read_second(const BiForm& f) { return {f.coeff(0, 0), f.coeff(0, 1)}; }

bool independent(const Binary& p, const Binary& q) { return !(p[0] * q[1] - p[1] * q[0]).is_zero(); }

// (p (x) 1)(1 (x) q) as an element of V.
LinForm pure(const Binary& p, const Binary& q) {
  LinForm l(p[0].field());
  l[0] = p[0] * q[0];
  l[1] = p[1] * q[0];
  l[2] = p[0] * q[1];
  l[3] = p[1] * q[1];
  return l;
}

// [c0; c1][r0, r1] with the c on the first factor and the r on the second.
KModule outer(const Binary& c0, const Binary& c1, const Binary& r0, const Binary& r1) {
  return KModule(pure(c0, r0), pure(c0, r1), pure(c1, r0), pure(c1, r1));
}

// Same with the column on the second factor and the row on the first.
KModule outer_swapped(const Binary& c0, const Binary& c1, const Binary& r0, const Binary& r1) {
  return KModule(pure(r0, c0), pure(r1, c0), pure(r0, c1), pure(r1, c1));
}

KModule plus(const KModule& a, const KModule& b) {
  return KModule(a(0, 0) + b(0, 0), a(0, 1) + b(0, 1), a(1, 0) + b(1, 0), a(1, 1) + b(1, 1));
}

}  // namespace

BigPsi::BigPsi(const Field& field)
    : a1(field.zero()), a2(field.zero()), u11(zero_binary(field)), v11(zero_binary(field)),
      u12(zero_binary(field)), v12(zero_binary(field)), u21(zero_binary(field)),
      v21(zero_binary(field)), u22(zero_binary(field)), v22(zero_binary(field)), f11(field),
      f12(field), f21(field), f22(field) {}

BiMatrix BigPsi::matrix() const {
  BiMatrix m(field(), psi_target_twists(), psi_source_twists());
  m.set(0, 0, on_second(u12));
  m.set(0, 1, on_second(v12));
  m.set(0, 2, BiForm::constant(a1));
  m.set(1, 0, on_first(u11));
  m.set(1, 1, on_first(v11));
  m.set(1, 3, BiForm::constant(a2));
  m.set(2, 0, segre(f11));
  m.set(2, 1, segre(f12));
  m.set(2, 2, on_first(u21));
  m.set(2, 3, on_second(u22));
  m.set(3, 0, segre(f21));
  m.set(3, 1, segre(f22));
  m.set(3, 2, on_first(v21));
  m.set(3, 3, on_second(v22));
  return m;
}

BigPsi BigPsi::from_matrix(const BiMatrix& m) {
  if (m.row_twists() != psi_target_twists() || m.col_twists() != psi_source_twists() ||
      !m.degrees_legal()) {
    throw std::invalid_argument("BigPsi: matrix does not have the psi twists");
  }
  BigPsi psi(m.field());
  psi.u12 = read_second(m(0, 0));
  psi.v12 = read_second(m(0, 1));
  psi.a1 = m(0, 2).coeff(0, 0);
  psi.u11 = read_first(m(1, 0));
  psi.v11 = read_first(m(1, 1));
  psi.a2 = m(1, 3).coeff(0, 0);
  psi.f11 = segre_inverse(m(2, 0));
  psi.f12 = segre_inverse(m(2, 1));
  psi.u21 = read_first(m(2, 2));
  psi.u22 = read_second(m(2, 3));
  psi.f21 = segre_inverse(m(3, 0));
  psi.f22 = segre_inverse(m(3, 1));
  psi.v21 = read_first(m(3, 2));
  psi.v22 = read_second(m(3, 3));
  return psi;
}

bool operator==(const BigPsi& a, const BigPsi& b) { return a.matrix() == b.matrix(); }

// ---- group ----------------------------------------------------------------

BigGroupElem::BigGroupElem(BiMatrix g, BiMatrix h) : g_(std::move(g)), h_(std::move(h)) {
  const auto s = psi_source_twists();
  const auto t = psi_target_twists();
  if (g_.row_twists() != s || g_.col_twists() != s || h_.row_twists() != t || h_.col_twists() != t ||
      !g_.degrees_legal() || !h_.degrees_legal()) {
    throw std::invalid_argument("BigGroupElem: wrong twists");
  }
  for (const BiMatrix* m : {&g_, &h_}) {
    if (!m->block(0, 2, 2, 2).is_zero()) throw std::invalid_argument("BigGroupElem: not block lower triangular");
    if (!m->block(0, 0, 2, 2).constant().is_invertible() ||
        !m->block(2, 2, 2, 2).constant().is_invertible()) {
      throw std::invalid_argument("BigGroupElem: singular diagonal block");
    }
  }
  BiMatrix a_inv = g_.block(0, 0, 2, 2).constant_inverse();
  BiMatrix d_inv = g_.block(2, 2, 2, 2).constant_inverse();
  g_inv_ = BiMatrix::from_blocks(a_inv, g_.block(0, 2, 2, 2), -(d_inv * g_.block(2, 0, 2, 2) * a_inv),
                                 d_inv);
}

BigGroupElem BigGroupElem::identity(const Field& field) {
  return BigGroupElem(
      BiMatrix::from_constant(Matrix::identity(field, 4), psi_source_twists(), psi_source_twists()),
      BiMatrix::from_constant(Matrix::identity(field, 4), psi_target_twists(), psi_target_twists()));
}

BigGroupElem operator*(const BigGroupElem& a, const BigGroupElem& b) {
  return BigGroupElem(a.g_ * b.g_, a.h_ * b.h_);
}

BigPsi act(const BigGroupElem& gh, const BigPsi& psi) {
  return BigPsi::from_matrix(gh.h() * psi.matrix() * gh.g_inverse());
}

// ---- regions and maps -----------------------------------------------------

std::string region_name(Region r) {
  switch (r) {
    case Region::W0: return "W0";
    case Region::W1: return "W1";
    case Region::W2: return "W2";
    case Region::Invalid: return "Invalid";
  }
  return "Invalid";
}

KModule alpha(const BigPsi& psi) {
  if (psi.a1.is_zero() || psi.a2.is_zero()) throw std::invalid_argument("alpha: psi12 is not invertible");
  BiMatrix m = psi.matrix();
  BiMatrix a = m.block(2, 0, 2, 2) - m.block(2, 2, 2, 2) * m.block(0, 2, 2, 2).constant_inverse() *
                                         m.block(0, 0, 2, 2);
  return segre_inverse(a);
}

Region classify(const BigPsi& psi) {
  bool z1 = psi.a1.is_zero(), z2 = psi.a2.is_zero();
  if (!z1 && !z2) return is_injective_on_quadric(alpha(psi)) ? Region::W0 : Region::Invalid;
  if (!z1 && independent(psi.u11, psi.v11) && independent(psi.u22, psi.v22)) return Region::W1;
  if (!z2 && independent(psi.u12, psi.v12) && independent(psi.u21, psi.v21)) return Region::W2;
  return Region::Invalid;
}

PsiReduction reduce_psi(const BigPsi& psi) {
  if (psi.a1.is_zero() || psi.a2.is_zero()) throw std::invalid_argument("reduce_psi: psi12 is not invertible");
  const Field& f = psi.field();
  const auto s = psi_source_twists();
  const auto t = psi_target_twists();
  std::vector<Bidegree> s01(s.begin(), s.begin() + 2), t01(t.begin(), t.begin() + 2),
      t23(t.begin() + 2, t.end());
  BiMatrix m = psi.matrix();
  BiMatrix psi11 = m.block(0, 0, 2, 2), psi12 = m.block(0, 2, 2, 2), psi22 = m.block(2, 2, 2, 2);
  Matrix id2 = Matrix::identity(f, 2);

  // g = [[I, 0], [psi11, psi12]] (its inverse is the column elimination) and
  // h = [[I, 0], [-psi22 psi12^{-1}, I]].
  BiMatrix g = BiMatrix::from_blocks(BiMatrix::from_constant(id2, s01, s01), BiMatrix(f, s01, {s[2], s[3]}),
                                     psi11, psi12);
  BiMatrix h = BiMatrix::from_blocks(BiMatrix::from_constant(id2, t01, t01), BiMatrix(f, t01, t23),
                                     -(psi22 * psi12.constant_inverse()),
                                     BiMatrix::from_constant(id2, t23, t23));
  PsiReduction out{BigGroupElem(std::move(g), std::move(h)), BiMatrix()};
  out.reduced = out.gh.h() * m * out.gh.g_inverse();

  BiMatrix expected = BiMatrix::from_blocks(BiMatrix(f, t01, s01), BiMatrix::from_constant(id2, t01, {s[2], s[3]}),
                                            segre(alpha(psi)), BiMatrix(f, t23, {s[2], s[3]}));
  if (!(out.reduced == expected)) throw std::logic_error("reduce_psi: replay does not give [[0, I], [alpha, 0]]");
  return out;
}

KModule beta_matrix(const BigPsi& psi) {
  Region region = classify(psi);
  if (region == Region::Invalid) throw std::invalid_argument("beta: psi lies in no region");
  KModule psi21(psi.f11, psi.f12, psi.f21, psi.f22);
  KModule out(psi.field());
  if (region == Region::W2) {
    out = plus(psi21 * psi.a1, outer(psi.u21, psi.v21, psi.u12, psi.v12) * -psi.field().one());
    out = plus(out, outer_swapped(psi.u22, psi.v22, psi.u11, psi.v11) * -(psi.a1 / psi.a2));
  } else {
    out = plus(psi21 * psi.a2, outer(psi.u21, psi.v21, psi.u12, psi.v12) * -(psi.a2 / psi.a1));
    out = plus(out, outer_swapped(psi.u22, psi.v22, psi.u11, psi.v11) * -psi.field().one());
  }
  return out;
}

WPoint beta(const BigPsi& psi) { return eta(beta_matrix(psi)); }

BiMatrix build_xi(const BigPsi& psi) {
  if (classify(psi) != Region::W1) throw std::invalid_argument("build_xi: psi is not in W1");
  const Field& f = psi.field();
  Scalar inv = psi.a1.inverse();
  BiMatrix xi(f, {{0, -1}, {0, 0}, {0, 0}}, {{-1, -1}, {-1, -1}, {0, -1}});
  xi.set(0, 0, on_first(psi.u11));
  xi.set(0, 1, on_first(psi.v11));
  xi.set(1, 0, segre(psi.f11) - on_first(psi.u21) * on_second(psi.u12) * inv);
  xi.set(1, 1, segre(psi.f12) - on_first(psi.u21) * on_second(psi.v12) * inv);
  xi.set(1, 2, on_second(psi.u22));
  xi.set(2, 0, segre(psi.f21) - on_first(psi.v21) * on_second(psi.u12) * inv);
  xi.set(2, 1, segre(psi.f22) - on_first(psi.v21) * on_second(psi.v12) * inv);
  xi.set(2, 2, on_second(psi.v22));
  return xi;
}

SnakeReport verify_snake(const BigPsi& psi) {
  const Field& f = psi.field();
  BiMatrix xi = build_xi(psi);
  const auto src = xi.col_twists();
  const auto tgt = xi.row_twists();
  const std::vector<Bidegree> o0{{0, 0}, {0, 0}}, o11{{-1, -1}, {-1, -1}};

  // Top row O(0,-1) -> 2O -> O(0,1), bottom row O(-2,-1) -> 2O(-1,-1) -> O(0,-1).
  BiMatrix top_in(f, o0, {{0, -1}});
  top_in.set(0, 0, on_second(psi.u22));
  top_in.set(1, 0, on_second(psi.v22));
  BiMatrix top_out(f, {{0, 1}}, o0);
  top_out.set(0, 0, -on_second(psi.v22));
  top_out.set(0, 1, on_second(psi.u22));
  BiMatrix bottom_in(f, o11, {{-2, -1}});
  bottom_in.set(0, 0, -on_first(psi.v11));
  bottom_in.set(1, 0, on_first(psi.u11));
  BiMatrix bottom_out(f, {{0, -1}}, o11);
  bottom_out.set(0, 0, on_first(psi.u11));
  bottom_out.set(0, 1, on_first(psi.v11));

  // Vertical maps: inclusion of the last summand and projection onto the first.
  BiMatrix incl_src = BiMatrix::from_constant(Matrix::from_ints(f, {{0}, {0}, {1}}), src, {{0, -1}});
  BiMatrix incl_tgt = BiMatrix::from_constant(Matrix::from_ints(f, {{0, 0}, {1, 0}, {0, 1}}), tgt, o0);
  BiMatrix proj_src = BiMatrix::from_constant(Matrix::from_ints(f, {{1, 0, 0}, {0, 1, 0}}), o11, src);
  BiMatrix proj_tgt = BiMatrix::from_constant(Matrix::from_ints(f, {{1, 0, 0}}), {{0, -1}}, tgt);

  SnakeReport report{xi, {}, BiForm(f)};
  auto collect = [&](const std::string& name, const BiMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero()) report.residues.push_back({name, i, j, m(i, j)});
  };
  collect("top-row", top_out * top_in);
  collect("bottom-row", bottom_out * bottom_in);
  collect("left-column", proj_src * incl_src);
  collect("right-column", proj_tgt * incl_tgt);
  collect("top-square", xi * incl_src - incl_tgt * top_in);
  collect("bottom-square", proj_tgt * xi - bottom_out * proj_src);

  // Lift of the kernel of the bottom row through xi lands in 2O.
  BiMatrix kernel_in(f, src, {{-2, -1}});
  kernel_in.set(0, 0, bottom_in(0, 0));
  kernel_in.set(1, 0, bottom_in(1, 0));
  BiMatrix image = xi * kernel_in;
  collect("snake-lift", image.block(0, 0, 1, 1));
  report.connecting = (top_out * image.block(1, 0, 2, 1))(0, 0);
  return report;
}

BigPsi canonical_w1(const Field& field) {
  BigPsi psi(field);
  Scalar o = field.one(), z = field.zero();
  psi.a1 = o;
  psi.u11 = {o, z};
  psi.v11 = {z, o};
  psi.u22 = {o, z};
  psi.v22 = {z, o};
  return psi;
}

BigPsi canonical_w2(const Field& field) {
  BigPsi psi(field);
  Scalar o = field.one(), z = field.zero();
  psi.a2 = o;
  psi.u12 = {o, z};
  psi.v12 = {z, o};
  psi.u21 = {o, z};
  psi.v21 = {z, o};
  return psi;
}

}  // namespace kronmod
