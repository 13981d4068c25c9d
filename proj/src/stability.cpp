#include "kronmod/stability.hpp"

#include <array>

namespace kronmod {

namespace {

// Univariate polynomial, coefficients by increasing degree, no trailing zeros.
using Poly = std::vector<Scalar>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& b) {
  while (a.size() >= b.size()) {
    Scalar factor = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly monic(Poly p) {
  Scalar lead = p.back().inverse();
  for (auto& c : p) c *= lead;
  return p;
}

// Monic gcd; the empty polynomial when both are zero.
Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : monic(a);
}

Poly poly_mul(const Poly& a, const Poly& b, const Field& f) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

Poly poly_sub(Poly a, const Poly& b, const Field& f) {
  if (a.size() < b.size()) a.resize(b.size(), f.zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::vector<Scalar> unit2(const Field& f, std::size_t i) {
  std::vector<Scalar> v(2, f.zero());
  v[i] = f.one();
  return v;
}

// Column span of a 2 x n matrix as a list of independent columns.
std::vector<std::vector<Scalar>> column_basis(const Matrix& m) {
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t c = 0; c < m.cols() && basis.size() < 2; ++c) {
    std::vector<Scalar> col{m(0, c), m(1, c)};
    Matrix trial(m.field(), 2, basis.size() + 1);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      trial(0, j) = basis[j][0];
      trial(1, j) = basis[j][1];
    }
    trial(0, basis.size()) = col[0];
    trial(1, basis.size()) = col[1];
    if (trial.rank() == basis.size() + 1) basis.push_back(col);
  }
  return basis;
}

// The 2 x 4 matrix [M_x k | M_y k | M_z k | M_w k].
Matrix images(const std::array<Matrix, 4>& slices, const std::vector<Scalar>& k) {
  Matrix m(k[0].field(), 2, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Scalar> v = slices[i].apply(k);
    m(0, i) = v[0];
    m(1, i) = v[1];
  }
  return m;
}

Destabilizer from_vector(const std::array<Matrix, 4>& slices, const std::vector<Scalar>& k) {
  Matrix img = images(slices, k);
  Destabilizer d;
  d.dim_k = 1;
  d.k_basis = {k};
  d.l_basis = column_basis(img);
  d.dim_l = d.l_basis.size();
  return d;
}

// One-dimensional K with dim span(M_i k) <= 1, searched over the projective
// line of k.
std::optional<Destabilizer> rank_one_image(const std::array<Matrix, 4>& slices) {
  const Field& f = slices[0].field();
  std::vector<Scalar> infinity = unit2(f, 1);
  if (images(slices, infinity).rank() <= 1) return from_vector(slices, infinity);

  // M_i (1, t) = c_i + t d_i with c_i, d_i the columns of M_i.
  std::array<std::array<Poly, 2>, 4> entries;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t r = 0; r < 2; ++r) {
      entries[i][r] = {slices[i](r, 0), slices[i](r, 1)};
      trim(entries[i][r]);
    }
  Poly g;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      Poly minor = poly_sub(poly_mul(entries[i][0], entries[j][1], f),
                            poly_mul(entries[j][0], entries[i][1], f), f);
      g = poly_gcd(g, minor);
    }
  if (!g.empty() && g.size() == 1) return std::nullopt;

  // All minors vanish identically (any t works) or g has degree 1 or 2.
  std::optional<Scalar> root;
  if (g.empty()) {
    root = f.zero();
  } else if (g.size() == 2) {
    root = -g[0];
  } else {
    Scalar disc = g[1] * g[1] - f.from_int(4) * g[0];
    if (auto s = sqrt_if_square(disc)) root = (-g[1] + *s) / f.from_int(2);
  }
  if (root) return from_vector(slices, {f.one(), *root});

  Destabilizer d;
  d.dim_k = 1;
  d.dim_l = 1;
  d.k_polynomial = g;
  d.over_extension = true;
  return d;
}

}  // namespace

bool is_semistable(const KModule& phi) { return !det_semiinvariant(phi).is_zero(); }

bool is_stable(const KModule& phi) { return gram_rank(det_semiinvariant(phi)) >= 3; }

StabilityVerdict king_oracle(const KModule& phi) {
  const Field& f = phi.field();
  std::array<Matrix, 4> slices{phi.slice(0), phi.slice(1), phi.slice(2), phi.slice(3)};

  // (1, 0): common kernel of the slices.
  Matrix stacked(f, 8, 2);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) stacked(2 * i + r, c) = slices[i](r, c);
  auto kernel = stacked.kernel();
  if (!kernel.empty()) {
    Destabilizer d;
    d.dim_k = 1;
    d.k_basis = {kernel[0]};
    return {false, false, d};
  }

  // (2, 0) and (2, 1): all images in a line.
  Matrix joined(f, 2, 8);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) joined(r, 2 * i + c) = slices[i](r, c);
  if (joined.rank() <= 1) {
    Destabilizer d;
    d.dim_k = 2;
    d.k_basis = {unit2(f, 0), unit2(f, 1)};
    d.l_basis = column_basis(joined);
    d.dim_l = d.l_basis.size();
    return {false, false, d};
  }

  // (1, 1).
  if (auto d = rank_one_image(slices)) return {true, false, *d};
  return {true, true, std::nullopt};
}

}  // namespace kronmod
