#pragma once

#include <array>
#include <string>
#include <vector>

#include "kronmod/kronecker.hpp"
#include "kronmod/moduli.hpp"

namespace kronmod {

struct Bidegree {
  int r = 0;
  int s = 0;
  bool nonnegative() const noexcept { return r >= 0 && s >= 0; }
  friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.r + b.r, a.s + b.s}; }
  friend Bidegree operator-(Bidegree a, Bidegree b) { return {a.r - b.r, a.s - b.s}; }
  friend bool operator==(Bidegree, Bidegree) = default;
};

/// Bihomogeneous form in (u1, v1; u2, v2) of bidegree (r, s). Coefficient
/// (a, b) belongs to u1^(r-a) v1^a u2^(s-b) v2^b and is stored at index
/// b (r + 1) + a, so bidegree (1, 1) lists x, y, z, w under
/// x = u1 u2, y = v1 u2, z = u1 v2, w = v1 v2.
/// A negative bidegree is allowed and then the form is zero.
class BiForm {
 public:
  explicit BiForm(const Field& field = Field(), Bidegree degree = {});

  /// cu u1 + cv v1.
  static BiForm first(const Scalar& cu, const Scalar& cv);
  /// cu u2 + cv v2.
  static BiForm second(const Scalar& cu, const Scalar& cv);
  static BiForm constant(const Scalar& c);

  const Field& field() const noexcept { return field_; }
  Bidegree degree() const noexcept { return degree_; }
  const Scalar& coeff(int a, int b) const { return coeffs_.at(index(a, b)); }
  void set_coeff(int a, int b, const Scalar& c) { coeffs_.at(index(a, b)) = c; }
  bool is_zero() const;

  BiForm& operator+=(const BiForm& o);
  BiForm& operator-=(const BiForm& o);
  BiForm& operator*=(const Scalar& s);
  BiForm operator-() const;
  friend BiForm operator+(BiForm a, const BiForm& b) { return a += b; }
  friend BiForm operator-(BiForm a, const BiForm& b) { return a -= b; }
  friend BiForm operator*(BiForm a, const Scalar& s) { return a *= s; }
  friend BiForm operator*(const BiForm& a, const BiForm& b);
  friend bool operator==(const BiForm& a, const BiForm& b);

  std::string to_string() const;

 private:
  std::size_t index(int a, int b) const;
  void require_same_degree(const BiForm& o) const;

  Field field_;
  Bidegree degree_;
  std::vector<Scalar> coeffs_;
};

/// x, y, z, w -> u1 u2, v1 u2, u1 v2, v1 v2.
BiForm segre(const LinForm& l);
/// Inverse on bidegree (1, 1); std::invalid_argument otherwise.
LinForm segre_inverse(const BiForm& f);

/// Matrix of biforms for a map between sums of line bundles: entry (i, j)
/// maps O(col_twist[j]) to O(row_twist[i]) and has bidegree
/// row_twist[i] - col_twist[j].
class BiMatrix {
 public:
  BiMatrix() = default;
  BiMatrix(const Field& field, std::vector<Bidegree> row_twists, std::vector<Bidegree> col_twists);
  /// Constant entries; positions whose bidegree is not (0, 0) must hold 0.
  static BiMatrix from_constant(const Matrix& m, std::vector<Bidegree> row_twists,
                                std::vector<Bidegree> col_twists);
  /// Assembles [[a, b], [c, d]].
  static BiMatrix from_blocks(const BiMatrix& a, const BiMatrix& b, const BiMatrix& c,
                              const BiMatrix& d);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return row_twists_.size(); }
  std::size_t cols() const noexcept { return col_twists_.size(); }
  const std::vector<Bidegree>& row_twists() const noexcept { return row_twists_; }
  const std::vector<Bidegree>& col_twists() const noexcept { return col_twists_; }
  Bidegree degree(std::size_t i, std::size_t j) const { return row_twists_[i] - col_twists_[j]; }

  const BiForm& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  /// Throws std::invalid_argument unless f has the entry's bidegree.
  void set(std::size_t i, std::size_t j, const BiForm& f);

  BiMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// The constant part as a plain matrix. Throws unless every entry of
  /// nonzero bidegree vanishes.
  Matrix constant() const;
  /// Inverse of a constant matrix, with row and column twists exchanged.
  BiMatrix constant_inverse() const;
  /// Every entry has its position's bidegree.
  bool degrees_legal() const;
  bool is_zero() const;

  friend BiMatrix operator*(const BiMatrix& a, const BiMatrix& b);
  friend BiMatrix operator+(const BiMatrix& a, const BiMatrix& b);
  friend BiMatrix operator-(const BiMatrix& a, const BiMatrix& b);
  friend bool operator==(const BiMatrix& a, const BiMatrix& b);
  BiMatrix operator-() const;

  std::string to_string() const;

 private:
  Field field_;
  std::vector<Bidegree> row_twists_, col_twists_;
  std::vector<BiForm> entries_;
};

/// Entrywise Segre map: a 2x2 matrix O(-1,-1)^2 -> O^2.
BiMatrix segre(const KModule& phi);
/// Inverse of the entrywise Segre map on 2x2 matrices of bidegree (1, 1).
KModule segre_inverse(const BiMatrix& m);

/// Source 2O(-1,-1) + O(-1,0) + O(0,-1) and target O(-1,0) + O(0,-1) + 2O.
std::vector<Bidegree> psi_source_twists();
std::vector<Bidegree> psi_target_twists();

/// Linear form c0 u_j + c1 v_j on one factor.
using Binary = std::array<Scalar, 2>;

/// The 4x4 matrix
///   [[1 (x) u12, 1 (x) v12, a1,        0        ],
///    [u11 (x) 1, v11 (x) 1, 0,         a2       ],
///    [f11,       f12,       u21 (x) 1, 1 (x) u22],
///    [f21,       f22,       v21 (x) 1, 1 (x) v22]]
/// with u_i1, v_i1 forms on the first factor and u_i2, v_i2 on the second.
struct BigPsi {
  Scalar a1, a2;
  Binary u11, v11, u12, v12, u21, v21, u22, v22;
  LinForm f11, f12, f21, f22;

  explicit BigPsi(const Field& field = Field());

  const Field& field() const noexcept { return a1.field(); }
  BiMatrix matrix() const;
  /// Throws std::invalid_argument unless m has the twists of a psi matrix.
  static BigPsi from_matrix(const BiMatrix& m);
  friend bool operator==(const BigPsi& a, const BigPsi& b);
};

/// (g, h) with g an automorphism of the source and h of the target. Both
/// are block lower triangular; their constant diagonal blocks must be
/// invertible.
class BigGroupElem {
 public:
  /// Throws std::invalid_argument on wrong twists or singular diagonal blocks.
  BigGroupElem(BiMatrix g, BiMatrix h);
  static BigGroupElem identity(const Field& field);

  const BiMatrix& g() const noexcept { return g_; }
  const BiMatrix& h() const noexcept { return h_; }
  const BiMatrix& g_inverse() const noexcept { return g_inv_; }
  Matrix g11() const { return g_.block(0, 0, 2, 2).constant(); }
  Matrix h22() const { return h_.block(2, 2, 2, 2).constant(); }

  friend BigGroupElem operator*(const BigGroupElem& a, const BigGroupElem& b);

 private:
  BiMatrix g_, h_, g_inv_;
};

/// h psi g^{-1}.
BigPsi act(const BigGroupElem& gh, const BigPsi& psi);

enum class Region { W0, W1, W2, Invalid };
std::string region_name(Region r);

/// W0: a1 a2 != 0 and alpha(psi) is injective on the quadric.
/// W1: a1 != 0, a2 = 0, {u11, v11} and {u22, v22} independent.
/// W2: a1 = 0, a2 != 0, {u12, v12} and {u21, v21} independent.
Region classify(const BigPsi& psi);

/// psi21 - psi22 psi12^{-1} psi11. Requires a1 a2 != 0.
KModule alpha(const BigPsi& psi);

struct PsiReduction {
  BigGroupElem gh;
  /// [[0, I], [alpha(psi), 0]].
  BiMatrix reduced;
};
/// Requires a1 a2 != 0. The certificate satisfies act(gh, psi) == reduced.
PsiReduction reduce_psi(const BigPsi& psi);

/// The matrix whose class is beta(psi): on W0 and W1
///   a2 psi21 - a1^{-1} a2 [u21; v21][u12, v12] - [u22; v22][u11, v11],
/// on W2 the same with the indices 1 and 2 exchanged.
/// Throws std::invalid_argument on Invalid.
KModule beta_matrix(const BigPsi& psi);
WPoint beta(const BigPsi& psi);

/// The 3x3 matrix 2O(-1,-1) + O(0,-1) -> O(0,-1) + 2O
///   [[u11 (x) 1,                 v11 (x) 1,                 0        ],
///    [f11 - a1^{-1} u21 (x) u12, f12 - a1^{-1} u21 (x) v12, 1 (x) u22],
///    [f21 - a1^{-1} v21 (x) u12, f22 - a1^{-1} v21 (x) v12, 1 (x) v22]].
/// Requires region W1.
BiMatrix build_xi(const BigPsi& psi);

struct SnakeResidue {
  std::string identity;
  std::size_t row = 0, col = 0;
  BiForm value;
};

struct SnakeReport {
  BiMatrix xi;
  /// Nonzero entries of the checked compositions; empty when all vanish.
  std::vector<SnakeResidue> residues;
  /// Image of O(-2,-1) -> O(0,1) under the connecting map.
  BiForm connecting;
  bool ok() const noexcept { return residues.empty(); }
};

/// Checks the rows of the snake diagram compose to zero and both squares
/// around xi commute. Requires region W1.
SnakeReport verify_snake(const BigPsi& psi);

/// a1 = 1, a2 = 0, u11 = u1, v11 = v1, u22 = u2, v22 = v2, all else zero.
BigPsi canonical_w1(const Field& field);
/// a1 = 0, a2 = 1, u12 = u2, v12 = v2, u21 = u1, v21 = v1, all else zero.
BigPsi canonical_w2(const Field& field);

}  // namespace kronmod
