#include "kronmod/normal_form.hpp"

#include <array>
#include <algorithm>
#include <cstdlib>

#include "kronmod/random.hpp"
#include "kronmod/stability.hpp"

namespace kronmod {

namespace {

constexpr std::uint64_t kSplittingStream = 0x5350'4c49'54ULL;
constexpr std::uint64_t kIsotropicStream = 0x4953'4f54ULL;
constexpr std::uint64_t kThroughStream = 0x5448'524fULL;

using Vec3 = std::array<Scalar, 3>;
using Vec4 = std::array<Scalar, 4>;

Scalar bilinear(const Matrix& g, const Vec3& u, const Vec3& v) {
  Scalar s = g.field().zero();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) s += u[i] * g(i, j) * v[j];
  return s;
}

bool is_zero(const Vec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

Vec3 axpy(const Vec3& x, const Scalar& a, const Vec3& y) {
  return {x[0] + a * y[0], x[1] + a * y[1], x[2] + a * y[2]};
}

Vec3 unit(const Field& f, std::size_t i) {
  Vec3 v{f.zero(), f.zero(), f.zero()};
  v[i] = f.one();
  return v;
}

// Candidate isotropic vectors, tried in order: coordinate vectors, then
// small integer vectors by increasing max-norm (Q) or points on random lines
// through the conic (F_p).
class IsotropicSearch {
 public:
  IsotropicSearch(const TernaryQuadForm& t, const SearchOptions& opts)
      : t_(t), g_(t.gram()), field_(t.field()), sampler_(field_, make_engine(opts.seed, kIsotropicStream, 0), 3),
        budget_(opts.budget) {}

  std::optional<Vec3> run() {
    for (std::size_t i = 0; i < 3; ++i)
      if (auto v = check(unit(field_, i))) return v;
    if (field_.is_rational()) return enumerate_integers();
    return random_lines();
  }

 private:
  std::optional<Vec3> check(const Vec3& v) {
    ++used_;
    if (!is_zero(v) && t_.evaluate(v).is_zero()) return v;
    return std::nullopt;
  }

  std::optional<Vec3> enumerate_integers() {
    for (long long k = 1; used_ < budget_; ++k)
      for (long long a = -k; a <= k; ++a)
        for (long long b = -k; b <= k; ++b)
          for (long long c = -k; c <= k; ++c) {
            if (std::max({std::llabs(a), std::llabs(b), std::llabs(c)}) != k) continue;
            long long lead = a != 0 ? a : (b != 0 ? b : c);
            if (lead < 0) continue;
            if (used_ >= budget_) return std::nullopt;
            if (auto v = check({field_.from_int(a), field_.from_int(b), field_.from_int(c)})) {
              return v;
            }
          }
    return std::nullopt;
  }

  // t(v1 + s v2) = t(v1) + 2 s B(v1, v2) + s^2 t(v2).
  std::optional<Vec3> random_lines() {
    while (used_ < budget_) {
      ++used_;
      Vec3 v1{sampler_.scalar(), sampler_.scalar(), sampler_.scalar()};
      Vec3 v2{sampler_.scalar(), sampler_.scalar(), sampler_.scalar()};
      if (is_zero(v2)) continue;
      Scalar t1 = t_.evaluate(v1), t2 = t_.evaluate(v2), b = bilinear(g_, v1, v2);
      if (t2.is_zero()) return v2;
      auto root = sqrt_if_square(b * b - t1 * t2);
      if (!root) continue;
      Vec3 v = axpy(v1, (-b + *root) / t2, v2);
      if (!is_zero(v)) return v;
    }
    return std::nullopt;
  }

  const TernaryQuadForm& t_;
  Matrix g_;
  Field field_;
  Sampler sampler_;
  std::size_t budget_;
  std::size_t used_ = 0;
};

bool in_radical(const QuadForm& q, const Vec4& v) {
  for (const auto& c : q.gram().apply({v[0], v[1], v[2], v[3]}))
    if (!c.is_zero()) return false;
  return true;
}

// Rational isotropic vector outside the radical, by increasing max-norm.
// Evaluates an integer multiple of q, which is much cheaper than mpq.
std::optional<Vec4> rational_isotropic(const QuadForm& q, std::size_t budget) {
  const Field& f = q.field();
  mpz_class denom = 1;
  for (std::size_t k = 0; k < QuadForm::kMonomials; ++k) {
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), q.monomial(k).rational().get_den_mpz_t());
  }
  std::array<mpz_class, 10> c;
  for (std::size_t k = 0; k < QuadForm::kMonomials; ++k) {
    const mpq_class& r = q.monomial(k).rational();
    c[k] = r.get_num() * (denom / r.get_den());
  }
  std::size_t used = 0;
  std::array<long long, 4> v{};
  mpz_class acc, term;
  for (long long n = 1; used < budget; ++n)
    for (v[0] = -n; v[0] <= n; ++v[0])
      for (v[1] = -n; v[1] <= n; ++v[1])
        for (v[2] = -n; v[2] <= n; ++v[2])
          for (v[3] = -n; v[3] <= n; ++v[3]) {
            long long norm = std::max({std::llabs(v[0]), std::llabs(v[1]), std::llabs(v[2]), std::llabs(v[3])});
            if (norm != n) continue;
            long long lead = v[0] != 0 ? v[0] : (v[1] != 0 ? v[1] : (v[2] != 0 ? v[2] : v[3]));
            if (lead < 0) continue;
            if (used++ >= budget) return std::nullopt;
            acc = 0;
            for (std::size_t i = 0, k = 0; i < 4; ++i)
              for (std::size_t j = i; j < 4; ++j, ++k) {
                if (c[k] == 0) continue;
                term = c[k] * static_cast<long>(v[i] * v[j]);
                acc += term;
              }
            if (acc != 0) continue;
            Vec4 out{f.from_int(v[0]), f.from_int(v[1]), f.from_int(v[2]), f.from_int(v[3])};
            if (!in_radical(q, out)) return out;
          }
  return std::nullopt;
}

Matrix diag2(const Scalar& a, const Scalar& b) {
  Matrix m(a.field(), 2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

KModule normal_form_module(const Scalar& lambda, const Scalar& a, const Scalar& b,
                           const Scalar& c, const Scalar& d) {
  const Field& f = lambda.field();
  auto var = [&](std::size_t i) { return LinForm::variable(f, i); };
  LinForm w = var(3);
  return KModule(var(0) + w * a, var(1) + w * b, var(2) * lambda + w * c, var(0) + w * d);
}

KModule NormalForm::module() const { return normal_form_module(lambda, a, b, c, d); }

KModule NormalForm::replay(const KModule& input) const {
  return act(gh, apply_coord_change(upsilon, input));
}

std::optional<CoordChange<4>> splitting_candidate(const QuadForm& q, std::size_t index,
                                                  std::uint64_t seed) {
  const Field& f = q.field();
  Matrix m(f, 4, 4);
  if (index < 4) {
    std::size_t dropped = 3 - index;
    for (std::size_t col = 0, k = 0; k < 4; ++k)
      if (k != dropped) m(k, col++) = f.one();
    m(dropped, 3) = f.one();
  } else {
    m = Matrix::identity(f, 4);
    Sampler sampler(f, make_engine(seed, kSplittingStream, index), 3);
    for (std::size_t j = 0; j < 3; ++j) m(3, j) = sampler.scalar();
  }
  CoordChange<4> change(std::move(m));
  if (gram_rank(apply_coord_change(change, q).drop_variable(3)) != 3) return std::nullopt;
  return change;
}

CoordChange<4> choose_splitting(const QuadForm& q, const SearchOptions& opts) {
  if (gram_rank(q) < 3) throw std::invalid_argument("choose_splitting: quadric is reducible");
  for (std::size_t index = 0; index < opts.budget; ++index)
    if (auto c = splitting_candidate(q, index, opts.seed)) return *c;
  throw std::runtime_error("choose_splitting: no splitting found within " +
                           std::to_string(opts.budget) + " trials");
}

CoordChange<4> choose_splitting(const KModule& phi, const SearchOptions& opts) {
  if (!is_stable(phi)) throw std::invalid_argument("choose_splitting: module is not stable");
  return choose_splitting(det_semiinvariant(phi), opts);
}

ConicNormalization conic_normalize(const TernaryQuadForm& t, const SearchOptions& opts) {
  const Field& f = t.field();
  if (gram_rank(t) != 3) throw std::invalid_argument("conic_normalize: conic is degenerate");
  const Matrix g = t.gram();

  auto isotropic = IsotropicSearch(t, opts).run();
  if (!isotropic) {
    throw NeedsExtension("conic_normalize: no isotropic vector of " + t.to_string() + " found in " +
                         f.name() + " within " + std::to_string(opts.budget) + " trials");
  }
  const Vec3 v = *isotropic;

  // Hyperbolic partner: u with B(v, u) != 0, corrected to be isotropic.
  Vec3 u = unit(f, 0);
  for (std::size_t i = 0; i < 3; ++i) {
    u = unit(f, i);
    if (!bilinear(g, v, u).is_zero()) break;
  }
  Scalar bvu = bilinear(g, v, u);
  u = axpy(u, -(t.evaluate(u) / (bvu + bvu)), v);
  const Scalar beta = bilinear(g, v, u);

  // Orthogonal complement of span(v, u): cross product of G v and G u.
  std::vector<Scalar> gv = g.apply({v[0], v[1], v[2]});
  std::vector<Scalar> gu = g.apply({u[0], u[1], u[2]});
  Vec3 c{gv[1] * gu[2] - gv[2] * gu[1], gv[2] * gu[0] - gv[0] * gu[2], gv[0] * gu[1] - gv[1] * gu[0]};
  for (const auto& ci : c)
    if (!ci.is_zero()) {
      Scalar inv = ci.inverse();
      for (auto& cj : c) cj *= inv;
      break;
    }
  const Scalar gamma = t.evaluate(c);
  const Scalar lambda = f.square_class(gamma);
  const Scalar scale = *sqrt_if_square(gamma / lambda);

  // Columns: c / scale, v, -lambda / (2 beta) u.
  Matrix m(f, 3, 3);
  Scalar zcoef = -lambda / (beta + beta);
  for (std::size_t i = 0; i < 3; ++i) {
    m(i, 0) = c[i] / scale;
    m(i, 1) = v[i];
    m(i, 2) = u[i] * zcoef;
  }
  ConicNormalization out{CoordChange<3>(std::move(m)), lambda};

  TernaryQuadForm target(f);
  target.coeff(0, 0) = lambda;
  target.coeff(1, 2) = -lambda;
  if (apply_coord_change(out.change, t) != target) {
    throw std::logic_error("conic_normalize: reduction failed for " + t.to_string());
  }
  return out;
}

GroupElem conify(const TernaryModule& psi, const Scalar& lambda) {
  const Field& f = psi.field();
  TernaryQuadForm expected(f);
  expected.coeff(0, 0) = f.one();
  expected.coeff(1, 2) = -lambda;
  if (lambda.is_zero() || det_semiinvariant(psi) != expected) {
    throw std::invalid_argument("conify: determinant is not x^2 - lambda yz");
  }

  // x-slice to the identity.
  GroupElem gh = GroupElem(Matrix::identity(f, 2), psi.slice(0).inverse());
  TernaryModule cur = act(gh, psi);

  // The y-slice is nilpotent and nonzero; conjugate it to E12 in the basis (A v, v).
  const Matrix a = cur.slice(1);
  Matrix basis(f, 2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    std::vector<Scalar> v(2, f.zero());
    v[i] = f.one();
    std::vector<Scalar> av = a.apply(v);
    if (!av[0].is_zero() || !av[1].is_zero()) {
      basis(0, 0) = av[0];
      basis(1, 0) = av[1];
      basis(0, 1) = v[0];
      basis(1, 1) = v[1];
      break;
    }
  }
  Matrix pinv = basis.inverse();
  GroupElem conj(pinv, pinv);
  cur = act(conj, cur);
  gh = conj * gh;

  // Within the centralizer [[1, s], [0, 1]] of E12, clear the diagonal of the z-slice.
  Scalar s = cur.slice(2)(0, 0) / lambda;
  Matrix shear = Matrix::identity(f, 2);
  shear(0, 1) = -s;
  GroupElem adjust(shear, shear);
  cur = act(adjust, cur);
  gh = adjust * gh;

  TernaryModule target(f);
  target(0, 0) = TernaryLinForm::variable(f, 0);
  target(0, 1) = TernaryLinForm::variable(f, 1);
  target(1, 0) = TernaryLinForm::variable(f, 2) * lambda;
  target(1, 1) = TernaryLinForm::variable(f, 0);
  if (cur != target) throw std::logic_error("conify: reduction failed for " + psi.to_string());
  return gh;
}

NormalForm normal_form_in_coordinates(const KModule& phi, const CoordChange<4>& upsilon) {
  const Field& f = phi.field();
  KModule moved = apply_coord_change(upsilon, phi);
  TernaryModule projected = project_module(moved);
  TernaryQuadForm t = det_semiinvariant(projected);
  Scalar m = t.coeff(0, 0);
  TernaryQuadForm conic(f);
  conic.coeff(0, 0) = m;
  conic.coeff(1, 2) = -m;
  if (m.is_zero() || t != conic) {
    throw std::invalid_argument("normal_form_in_coordinates: projected determinant " +
                                t.to_string() + " is not proportional to x^2 - yz");
  }
  GroupElem rescale(diag2(m, f.one()), Matrix::identity(f, 2));
  GroupElem gh = conify(act(rescale, projected), f.one()) * rescale;

  KModule reduced = act(gh, moved);
  NormalForm nf{f.one(),  reduced(0, 0)[3], reduced(0, 1)[3], reduced(1, 0)[3],
                reduced(1, 1)[3], upsilon, gh};
  if (nf.module() != reduced) throw std::logic_error("normal_form: reduced module has wrong shape");
  return nf;
}

QuadricSplitting split_quadric(const QuadForm& q, const SearchOptions& opts) {
  if (gram_rank(q) < 3) throw std::invalid_argument("split_quadric: quadric is reducible");
  if (q.field().is_rational()) {
    auto v = rational_isotropic(q, opts.budget);
    if (!v) {
      throw NeedsExtension("split_quadric: no rational point on " + q.to_string() + " within " +
                           std::to_string(opts.budget) + " trials");
    }
    return split_quadric(q, *v, opts);
  }
  for (std::size_t index = 0; index < opts.budget; ++index) {
    auto splitting = splitting_candidate(q, index, opts.seed);
    if (!splitting) continue;
    ConicNormalization conic = conic_normalize(apply_coord_change(*splitting, q).drop_variable(3), opts);
    return {*splitting * extend_by_last_variable(conic.change), conic.lambda};
  }
  throw std::runtime_error("split_quadric: no splitting found within " +
                           std::to_string(opts.budget) + " trials");
}

QuadricSplitting split_quadric(const QuadForm& q, const std::array<Scalar, 4>& isotropic,
                               const SearchOptions& opts) {
  const Field& f = q.field();
  if (gram_rank(q) < 3) throw std::invalid_argument("split_quadric: quadric is reducible");
  if (!q.evaluate(isotropic).is_zero() || in_radical(q, isotropic)) {
    throw std::invalid_argument("split_quadric: vector is not a smooth point of the quadric");
  }
  std::size_t pivot = 0;
  while (isotropic[pivot].is_zero()) ++pivot;
  std::vector<std::size_t> others;
  for (std::size_t k = 0; k < 4; ++k)
    if (k != pivot) others.push_back(k);

  // Column 0 is the isotropic vector, so the projected conic vanishes at (1, 0, 0).
  for (std::size_t index = 0; index < opts.budget; ++index) {
    Matrix m(f, 4, 4);
    for (std::size_t i = 0; i < 4; ++i) m(i, 0) = isotropic[i];
    if (index < 3) {
      for (std::size_t col = 1, k = 0; k < 3; ++k)
        if (k != index) m(others[k], col++) = f.one();
      m(others[index], 3) = f.one();
    } else {
      Sampler sampler(f, make_engine(opts.seed, kThroughStream, index), 3);
      for (std::size_t col = 1; col < 3; ++col)
        for (std::size_t i = 0; i < 4; ++i) m(i, col) = sampler.scalar();
      m(index % 4, 3) = f.one();
    }
    if (!m.is_invertible()) continue;
    CoordChange<4> change(std::move(m));
    TernaryQuadForm t = apply_coord_change(change, q).drop_variable(3);
    if (gram_rank(t) != 3) continue;
    ConicNormalization conic = conic_normalize(t, opts);
    return {change * extend_by_last_variable(conic.change), conic.lambda};
  }
  throw std::runtime_error("split_quadric: no splitting through the given point within " +
                           std::to_string(opts.budget) + " trials");
}

NormalForm normal_form(const KModule& phi, const SearchOptions& opts) {
  if (!is_stable(phi)) throw std::invalid_argument("normal_form: module is not stable");
  QuadForm q = det_semiinvariant(phi);
  // Coordinates that already split q are kept.
  TernaryQuadForm t = q.drop_variable(3), conic(q.field());
  conic.coeff(0, 0) = q.field().one();
  conic.coeff(1, 2) = -q.field().one();
  if (!t.coeff(0, 0).is_zero() && t == conic * t.coeff(0, 0)) {
    return normal_form_in_coordinates(phi, CoordChange<4>::identity(q.field()));
  }
  // The common zeros of a row or column of phi lie on det(phi); one of them is a smooth point.
  const std::array<std::array<std::size_t, 4>, 4> lines = {{{0, 0, 0, 1}, {1, 0, 1, 1}, {0, 0, 1, 0}, {0, 1, 1, 1}}};
  for (const auto& [r1, c1, r2, c2] : lines) {
    Matrix rows(q.field(), 2, 4);
    for (std::size_t k = 0; k < 4; ++k) {
      rows(0, k) = phi(r1, c1)[k];
      rows(1, k) = phi(r2, c2)[k];
    }
    auto kernel = rows.kernel();
    if (kernel.size() >= 2) {
      std::vector<Scalar> sum(4, q.field().zero());
      for (std::size_t k = 0; k < 4; ++k) sum[k] = kernel[0][k] + kernel[1][k];
      kernel.push_back(sum);
    }
    for (const auto& v : kernel) {
      Vec4 point{v[0], v[1], v[2], v[3]};
      if (!in_radical(q, point)) return normal_form_in_coordinates(phi, split_quadric(q, point, opts).upsilon);
    }
  }
  throw std::logic_error("normal_form: no smooth point found on " + q.to_string());
}

std::optional<GroupElem> orbit_witness(const KModule& phi1, const KModule& phi2,
                                       const SearchOptions& opts) {
  if (!is_stable(phi1) || !is_stable(phi2)) {
    throw std::invalid_argument("orbit_witness: both modules must be stable");
  }
  NormalForm nf1 = normal_form(phi1, opts);
  std::optional<NormalForm> nf2;
  try {
    nf2 = normal_form_in_coordinates(phi2, nf1.upsilon);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  if (nf2->module() != nf1.module()) return std::nullopt;
  GroupElem witness = nf2->gh.inverse() * nf1.gh;
  if (act(witness, phi1) != phi2) throw std::logic_error("orbit_witness: replay failed");
  return witness;
}

}  // namespace kronmod
