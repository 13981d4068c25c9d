#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "kronmod/blowdown.hpp"
#include "kronmod/moduli.hpp"
#include "kronmod/normal_form.hpp"
#include "kronmod/random.hpp"
#include "kronmod/samplers.hpp"
#include "kronmod/stability.hpp"

namespace kronmod::testing {

inline LinForm var(const Field& f, std::size_t i) { return LinForm::variable(f, i); }
inline LinForm lin(const Field& f, long long x, long long y, long long z, long long w) {
  return LinForm(f, {x, y, z, w});
}

/// Quadric from (monomial name, coefficient) pairs such as {"xw", 1}.
inline QuadForm quad(const Field& f, std::initializer_list<std::pair<const char*, long long>> terms) {
  QuadForm q(f);
  for (const auto& [name, c] : terms) {
    std::size_t k = 0;
    while (QuadForm::monomial_name(k) != name) ++k;
    q.monomial(k) = f.from_int(c);
  }
  return q;
}

inline KModule module(const LinForm& a, const LinForm& b, const LinForm& c, const LinForm& d) {
  return KModule(a, b, c, d);
}

inline Sampler sampler(const Field& f, std::uint64_t stream, std::uint64_t index = 0) {
  return Sampler(f, make_engine(0x7e57, stream, index));
}

// Leibniz expansion over all permutations; independent of Matrix::determinant.
inline Scalar leibniz(const std::vector<std::vector<Scalar>>& m) {
  const std::size_t n = m.size();
  const Field& f = m[0][0].field();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = f.zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Scalar term = f.one();
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Scalar leibniz(const Matrix& m) {
  std::vector<std::vector<Scalar>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i].push_back(m(i, j));
  return leibniz(rows);
}

// q evaluated straight from its monomial coefficients.
inline Scalar eval_monomials(const QuadForm& q, const std::array<Scalar, 4>& v) {
  Scalar s = q.field().zero();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) s += q.coeff(i, j) * v[i] * v[j];
  return s;
}

inline std::array<Scalar, 4> random_point(Sampler& s) { return {s.scalar(), s.scalar(), s.scalar(), s.scalar()}; }

inline Scalar eval(const LinForm& l, const std::array<Scalar, 4>& v) {
  Scalar s = l.field().zero();
  for (std::size_t i = 0; i < 4; ++i) s += l[i] * v[i];
  return s;
}

}  // namespace kronmod::testing
