#include "kronmod/forms.hpp"

#include <optional>

namespace kronmod {

namespace {

// "+ 3*x*w" style term; empty for a zero coefficient.
std::string term(const Scalar& c, const std::string& monomial, bool first) {
  if (c.is_zero()) return {};
  bool negative = c.field().is_rational() && sgn(c.rational()) < 0;
  Scalar magnitude = negative ? -c : c;
  std::string out;
  if (first) {
    out = negative ? "-" : "";
  } else {
    out = negative ? " - " : " + ";
  }
  bool unit = magnitude == c.field().one();
  if (monomial.empty()) return out + magnitude.to_string();
  if (!unit) out += magnitude.to_string() + "*";
  return out + monomial;
}

template <std::size_t N>
std::size_t leading_index(const LinearForm<N>& l) {
  for (std::size_t i = 0; i < N; ++i)
    if (!l[i].is_zero()) return i;
  return N;
}

template <std::size_t N>
LinearForm<N> gram_row(const Matrix& g, std::size_t i) {
  LinearForm<N> l(g.field());
  for (std::size_t j = 0; j < N; ++j) l[j] = g(i, j);
  return l;
}

}  // namespace

template <std::size_t N>
std::string LinearForm<N>::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < N; ++i) out += term(coeffs_[i], kVariableNames[i], out.empty());
  return out.empty() ? "0" : out;
}

template <std::size_t N>
std::string QuadraticForm<N>::monomial_name(std::size_t k) {
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j)
      if (index(i, j) == k) {
        return i == j ? std::string(kVariableNames[i]) + "2"
                      : std::string(kVariableNames[i]) + kVariableNames[j];
      }
  throw std::out_of_range("monomial index");
}

template <std::size_t N>
std::string QuadraticForm<N>::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j) {
      std::string mono = i == j ? std::string(kVariableNames[i]) + "^2"
                                : std::string(kVariableNames[i]) + "*" + kVariableNames[j];
      out += term(coeff(i, j), mono, out.empty());
    }
  return out.empty() ? "0" : out;
}

Scalar wedge4(const LinForm& l1, const LinForm& l2, const LinForm& l3, const LinForm& l4) {
  Matrix m(l1.field(), 4, 4);
  const std::array<const LinForm*, 4> rows = {&l1, &l2, &l3, &l4};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = (*rows[r])[c];
  return m.determinant();
}

template <std::size_t N>
std::pair<LinearForm<N>, LinearForm<N>> factor_quadric(const QuadraticForm<N>& q) {
  const Field& f = q.field();
  if (q.is_zero()) throw std::invalid_argument("factor_quadric: zero form");
  const Matrix g = q.gram();
  const std::size_t rank = g.rank();
  if (rank > 2) throw std::invalid_argument("factor_quadric: Gram rank " + std::to_string(rank) +
                                            " form is irreducible");

  LinearForm<N> u(f), v(f);
  if (rank == 1) {
    std::size_t i = 0;
    while (g(i, i).is_zero()) ++i;  // a rank-one symmetric matrix has a nonzero diagonal entry
    v = gram_row<N>(g, i);
    u = v * g(i, i).inverse();
  } else {
    // A symmetric rank-two matrix has an invertible principal 2x2 block M;
    // then q = [L_i L_j] M^{-1} [L_i L_j]^T with L_k the k-th row of G.
    std::optional<std::pair<std::size_t, std::size_t>> block;
    for (std::size_t i = 0; i < N && !block; ++i)
      for (std::size_t j = i + 1; j < N && !block; ++j)
        if (!(g(i, i) * g(j, j) - g(i, j) * g(i, j)).is_zero()) block = {i, j};
    if (!block) throw std::logic_error("factor_quadric: no invertible principal block");
    auto [i, j] = *block;
    Matrix m(f, 2, 2);
    m(0, 0) = g(i, i);
    m(0, 1) = m(1, 0) = g(i, j);
    m(1, 1) = g(j, j);
    Matrix minv = m.inverse();
    Scalar a = minv(0, 0), b = minv(0, 1), c = minv(1, 1);
    LinearForm<N> li = gram_row<N>(g, i), lj = gram_row<N>(g, j);
    if (a.is_zero() && c.is_zero()) {
      u = li * (b + b);
      v = lj;
    } else {
      if (a.is_zero()) {
        std::swap(a, c);
        std::swap(li, lj);
      }
      // a s^2 + 2b s t + c t^2 = a (s - r1 t)(s - r2 t)
      auto root = sqrt_if_square(b * b - a * c);
      if (!root) {
        throw NeedsExtension("factor_quadric: binary discriminant " + (b * b - a * c).to_string() +
                             " is not a square in " + f.name());
      }
      Scalar r1 = (-b + *root) / a;
      Scalar r2 = (-b - *root) / a;
      u = (li - lj * r1) * a;
      v = li - lj * r2;
    }
  }

  // Normalize: both factors monic, the scalar on the first, ordered by
  // leading variable.
  Scalar lu = u[leading_index(u)], lv = v[leading_index(v)];
  u *= lu.inverse();
  v *= lv.inverse();
  if (leading_index(v) < leading_index(u)) std::swap(u, v);
  u *= lu * lv;
  if (QuadraticForm<N>::product(u, v) != q) throw std::logic_error("factor_quadric: bad product");
  return {u, v};
}

CoordChange<4> extend_by_last_variable(const CoordChange<3>& c) {
  const Matrix& m3 = c.matrix();
  Matrix m(m3.field(), 4, 4);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t k = 0; k < 3; ++k) m(r, k) = m3(r, k);
  m(3, 3) = m3.field().one();
  return CoordChange<4>(std::move(m));
}

template class LinearForm<3>;
template class LinearForm<4>;
template class QuadraticForm<3>;
template class QuadraticForm<4>;
template std::pair<LinearForm<3>, LinearForm<3>> factor_quadric(const QuadraticForm<3>&);
template std::pair<LinearForm<4>, LinearForm<4>> factor_quadric(const QuadraticForm<4>&);

}  // namespace kronmod
