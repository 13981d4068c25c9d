#include "kronmod/campaign.hpp"

#include <atomic>
#include <functional>
#include <thread>

#include "kronmod/samplers.hpp"

namespace kronmod {

namespace {

class Trial {
 public:
  Trial(std::string suite, std::size_t index, bool fixed)
      : suite_(std::move(suite)), index_(index), fixed_(fixed) {}

  template <typename Detail>
  void expect(bool ok, const char* property, Detail&& detail) {
    ++checks;
    if (ok) return;
    json record = {{"suite", suite_}, {"trial", index_}, {"fixed", fixed_}, {"property", property}};
    record["detail"] = detail();
    violations.push_back(std::move(record));
  }
  void expect(bool ok, const char* property) {
    expect(ok, property, [] { return json(nullptr); });
  }

  std::size_t checks = 0;
  std::size_t rejected = 0;
  std::size_t needs_extension = 0;
  std::vector<json> violations;

 private:
  std::string suite_;
  std::size_t index_;
  bool fixed_;
};

using TrialFn = std::function<void(Trial&, Sampler&, std::size_t index, bool fixed)>;

struct Suite {
  const char* name;
  std::uint64_t stream;
  std::size_t fixed;
  TrialFn run;
};

LinForm var(const Field& f, std::size_t i) { return LinForm::variable(f, i); }

Scalar det2(const Matrix& m) { return m.determinant(); }

// ---- epsilon-rho ------------------------------------------------------------

void epsilon_rho_trial(Trial& t, Sampler& s, std::size_t index, bool fixed) {
  const Field& f = s.field();
  if (fixed) {
    if (index == 0) {
      KModule nu = KModule(var(f, 0), var(f, 1), var(f, 2), var(f, 3));
      t.expect(epsilon(nu) == f.one() && rho(nu) == f.one(), "nu1: epsilon = rho = 1");
    } else {
      KModule nf = normal_form_module(f.one(), f.one(), f.zero(), f.zero(), f.from_int(3));
      t.expect(epsilon(nf) == f.from_int(2) && rho(nf) == f.from_int(4), "normal form (1,0,0,3): epsilon 2, rho 4");
    }
    return;
  }
  KModule phi = random_module(s);
  Scalar e = epsilon(phi), r = rho(phi);
  auto detail = [&] { return json{{"phi", to_json(phi)}, {"epsilon", to_json(e)}, {"rho", to_json(r)}}; };
  t.expect(e * e == r, "epsilon^2 = rho", detail);
  t.expect(resultant(det_semiinvariant(phi)) == r, "res(det) = rho", detail);
}

// ---- transform ----------------------------------------------------------------

void transform_trial(Trial& t, Sampler& s, std::size_t, bool) {
  KModule phi = random_module(s);
  GroupElem gh = random_group_elem(s), gh2 = random_group_elem(s);
  CoordChange<4> up = random_coord_change(s), up2 = random_coord_change(s);
  auto detail = [&] {
    return json{{"phi", to_json(phi)}, {"gh", to_json(gh)}, {"upsilon", to_json(up.matrix())}};
  };

  KModule moved = act(gh, phi);
  Scalar dg = det2(gh.g()), dh = det2(gh.h());
  Scalar character = dh / dg;
  t.expect(det_semiinvariant(moved) == det_semiinvariant(phi) * character, "det law", detail);
  t.expect(e_semiinvariant(moved) == e_semiinvariant(phi) * character * character, "e law", detail);
  t.expect(act(gh2, moved) == act(gh2 * gh, phi), "action composes", detail);
  t.expect(act(gh.inverse(), moved) == phi, "action inverse", detail);

  KModule changed = apply_coord_change(up, phi);
  Scalar du = up.determinant();
  t.expect(epsilon(changed) == du * epsilon(phi), "epsilon' = det(upsilon) epsilon", detail);
  t.expect(rho(changed) == du * du * rho(phi), "rho' = det(upsilon)^2 rho", detail);
  QuadForm q = det_semiinvariant(phi);
  t.expect(det_semiinvariant(changed) == apply_coord_change(up, q), "det commutes with coordinate change", detail);
  t.expect(resultant(apply_coord_change(up, q)) == du * du * resultant(q), "res transforms by det^2", detail);
  t.expect(gram_rank(apply_coord_change(up, q)) == gram_rank(q), "Gram rank invariant", detail);
  t.expect(apply_coord_change(up2, changed) == apply_coord_change(up * up2, phi), "coordinate change composes",
           detail);
}

// ---- king-vs-det ------------------------------------------------------------

Scalar small(Sampler& s) { return s.field().from_int(s.integer(-1, 1)); }

LinForm small_form(Sampler& s) {
  LinForm l(s.field());
  for (std::size_t i = 0; i < 4; ++i) l[i] = small(s);
  return l;
}

// Slices c_k v_k w_k^T with w_k^T v_k = 0; a shared v gives a common image line.
KModule nilpotent_module(Sampler& s, bool shared) {
  const Field& f = s.field();
  std::array<Matrix, 4> slices;
  Scalar v0 = s.scalar(), v1 = s.scalar();
  for (auto& m : slices) {
    if (!shared) {
      v0 = s.scalar();
      v1 = s.scalar();
    }
    Scalar c = s.scalar();
    m = Matrix(f, 2, 2);
    m(0, 0) = -c * v0 * v1;
    m(0, 1) = c * v0 * v0;
    m(1, 0) = -c * v1 * v1;
    m(1, 1) = c * v1 * v0;
  }
  return KModule::from_slices(slices);
}

KModule crafted_module(Sampler& s, std::size_t kind) {
  const Field& f = s.field();
  LinForm zero(f);
  switch (kind) {
    case 0:  // zero column
      return KModule(s.lin_form(), zero, s.lin_form(), zero);
    case 1:  // zero row
      return KModule(zero, zero, s.lin_form(), s.lin_form());
    case 2: {  // det = c u^2
      LinForm u = s.lin_form();
      return act(random_group_elem(s), KModule(u, s.lin_form(), zero, u));
    }
    case 3:  // det = u u'
      return act(random_group_elem(s), KModule(s.lin_form(), s.lin_form(), zero, s.lin_form()));
    case 4:
      return nilpotent_module(s, s.coin());
    case 5:  // all slices proportional to one matrix
    {
      Matrix m = s.matrix(2, 2);
      std::array<Matrix, 4> slices{m * s.scalar(), m * s.scalar(), m * s.scalar(), m * s.scalar()};
      return KModule::from_slices(slices);
    }
    case 6:  // entries from a 2-dimensional subspace
    {
      LinForm a = s.lin_form(), b = s.lin_form();
      auto mix = [&] { return a * s.scalar() + b * s.scalar(); };
      return KModule(mix(), mix(), mix(), mix());
    }
    default:
      return KModule(small_form(s), small_form(s), small_form(s), small_form(s));
  }
}

// Independent check that a reported witness is a subrepresentation of the
// claimed dimensions.
bool witness_valid(const KModule& phi, const Destabilizer& d) {
  const Field& f = phi.field();
  if (d.over_extension) return d.dim_k == 1 && d.k_polynomial.size() >= 3;
  if (d.k_basis.size() != d.dim_k || d.l_basis.size() != d.dim_l) return false;
  for (std::size_t i = 0; i < 4; ++i)
    for (const auto& k : d.k_basis) {
      std::vector<Scalar> img = phi.slice(i).apply(k);
      Matrix cols(f, 2, d.dim_l + 1);
      for (std::size_t j = 0; j < d.dim_l; ++j) {
        cols(0, j) = d.l_basis[j][0];
        cols(1, j) = d.l_basis[j][1];
      }
      cols(0, d.dim_l) = img[0];
      cols(1, d.dim_l) = img[1];
      if (cols.rank() != d.dim_l) return false;
    }
  return true;
}

void king_trial(Trial& t, Sampler& s, std::size_t index, bool fixed) {
  KModule phi = fixed ? crafted_module(s, index % 8)
                      : (index % 3 == 0 ? random_module(s) : crafted_module(s, index % 8));
  StabilityVerdict v = king_oracle(phi);
  bool ss = is_semistable(phi), st = is_stable(phi);
  auto detail = [&] {
    return json{{"phi", to_json(phi)}, {"oracle", to_json(v)}, {"semistable", ss}, {"stable", st}};
  };
  t.expect(v.semistable == ss, "oracle semistable = det != 0", detail);
  t.expect(v.stable == st, "oracle stable = det irreducible", detail);
  t.expect(!v.stable || v.semistable, "stable implies semistable", detail);
  t.expect(v.stable == !v.witness.has_value(), "witness present iff not stable", detail);
  if (v.witness) {
    const Destabilizer& d = *v.witness;
    bool slope = v.semistable ? d.dim_l <= d.dim_k : d.dim_l < d.dim_k;
    t.expect(slope && witness_valid(phi, d), "witness is a destabilizing subrepresentation", detail);
  }
  KModule moved = apply_coord_change(random_coord_change(s), act(random_group_elem(s), phi));
  StabilityVerdict w = king_oracle(moved);
  t.expect(w.semistable == v.semistable && w.stable == v.stable, "verdict invariant under G and GL(V)", detail);
}

// ---- normal-form ------------------------------------------------------------

QuadForm display(const Scalar& lambda, const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  const Field& f = lambda.field();
  QuadForm q(f);
  q.coeff(0, 0) = f.one();
  q.coeff(1, 2) = -lambda;
  q.coeff(0, 3) = a + d;
  q.coeff(1, 3) = -c;
  q.coeff(2, 3) = -lambda * b;
  q.coeff(3, 3) = a * d - b * c;
  return q;
}

void check_certificate(Trial& t, const KModule& phi, const NormalForm& nf) {
  auto detail = [&] { return json{{"phi", to_json(phi)}, {"normal_form", to_json(nf)}}; };
  KModule out = nf.module();
  t.expect(nf.replay(phi) == out, "certificate replay", detail);
  t.expect(det_semiinvariant(out) == display(nf.lambda, nf.a, nf.b, nf.c, nf.d), "det display", detail);
  t.expect(epsilon(out) == nf.lambda * (nf.d - nf.a), "epsilon = lambda (d - a)", detail);
  t.expect(rho(out) == epsilon(out) * epsilon(out), "rho = epsilon^2", detail);
  Scalar du = nf.upsilon.determinant();
  Scalar character = det2(nf.gh.h()) / det2(nf.gh.g());
  t.expect(det_semiinvariant(out) == apply_coord_change(nf.upsilon, det_semiinvariant(phi)) * character,
           "det transported by the certificate", detail);
  t.expect(epsilon(out) == epsilon(phi) * du * character * character, "epsilon transported by the certificate",
           detail);
}

void normal_form_trial(Trial& t, Sampler& s, std::size_t index, bool fixed) {
  const Field& f = s.field();
  SearchOptions opts{s.engine()(), 10'000};
  if (fixed) {
    if (index == 0) {
      KModule phi = normal_form_module(f.one(), f.one(), f.zero(), f.zero(), f.from_int(3));
      NormalForm nf = normal_form(phi, opts);
      check_certificate(t, phi, nf);
      t.expect(nf.lambda == f.one() && nf.a == f.one() && nf.b.is_zero() && nf.c.is_zero() &&
                   nf.d == f.from_int(3),
               "[[x+w, y], [z, x+3w]] is its own normal form", [&] { return to_json(nf); });
    } else {
      KModule nu = KModule(var(f, 0), var(f, 1), var(f, 2), var(f, 3));
      check_certificate(t, nu, normal_form(nu, opts));
    }
    return;
  }
  ScrambledNormalForm sample = random_scrambled_normal_form(s, &t.rejected);
  auto detail = [&] {
    return json{{"lambda", to_json(sample.lambda)}, {"a", to_json(sample.a)}, {"b", to_json(sample.b)},
                {"c", to_json(sample.c)},           {"d", to_json(sample.d)}, {"scrambled", to_json(sample.scrambled)}};
  };
  t.expect(det_semiinvariant(sample.original) == display(sample.lambda, sample.a, sample.b, sample.c, sample.d),
           "lambda-aware det display", detail);
  t.expect(epsilon(sample.original) == sample.lambda * (sample.d - sample.a), "lambda-aware epsilon", detail);

  NormalForm nf = normal_form(sample.scrambled, opts);
  check_certificate(t, sample.scrambled, nf);

  // Another representative of the same class, reduced in the first one's coordinates.
  KModule other = act(random_group_elem(s), sample.scrambled);
  NormalForm nf2 = normal_form_in_coordinates(other, nf.upsilon);
  check_certificate(t, other, nf2);
  t.expect(eta(nf.module()) == eta(nf2.module()), "same class gives equal (det, epsilon)", detail);
  t.expect(nf.a == nf2.a && nf.b == nf2.b && nf.c == nf2.c && nf.d == nf2.d,
           "equal (det, epsilon) gives equal parameters", detail);
  auto witness = orbit_witness(sample.scrambled, other, opts);
  t.expect(witness && act(*witness, sample.scrambled) == other, "orbit witness", detail);
}

// ---- hypersurface -----------------------------------------------------------

void hypersurface_trial(Trial& t, Sampler& s, std::size_t index, bool fixed) {
  const Field& f = s.field();
  SearchOptions opts{s.engine()(), 10'000};
  if (fixed) {
    if (index == 0) {
      QuadForm segre_q = det_semiinvariant(KModule(var(f, 0), var(f, 1), var(f, 2), var(f, 3)));
      Fiber fiber = det_fiber(segre_q);
      t.expect(fiber.points.size() == 2 && fiber.points[0] == nu1(f) && fiber.points[1] == nu2(f),
               "fiber over xw - yz is {nu1, nu2}", [&] { return to_json(fiber); });
      t.expect(nu1(f).p() == f.one() && nu2(f).p() == -f.one(), "epsilon(nu1) = 1, epsilon(nu2) = -1");
      t.expect(nu1(f) != nu2(f), "nu1 != nu2");
    } else {
      QuadForm x2(f);
      x2.coeff(0, 0) = f.one();
      Fiber fiber = det_fiber(x2);
      t.expect(fiber.points.size() == 1 && fiber.points[0] == WPoint(x2, f.zero()), "fiber over x^2 is one point",
               [&] { return to_json(fiber); });
      t.expect(eta_inverse(WPoint(x2, f.zero()), opts) == KModule(var(f, 0), LinForm(f), LinForm(f), var(f, 0)),
               "eta_inverse <x^2, 0> = diag(x, x)");
    }
    return;
  }

  KModule phi = random_semistable_module(s, &t.rejected);
  WPoint point = eta(phi);
  auto detail = [&] { return json{{"phi", to_json(phi)}, {"eta", to_json(point)}}; };
  t.expect(on_hypersurface(point), "res(q) = p^2 on the image of eta", detail);
  t.expect(eta(act(random_group_elem(s), phi)) == point, "eta constant on orbits", detail);
  if (is_stable(phi)) {
    try {
      KModule back = eta_inverse(point, opts);
      t.expect(eta(back) == point, "eta(eta_inverse(P)) = P", detail);
    } catch (const NeedsExtension&) {
      ++t.needs_extension;
    }
  }

  // Reducible determinant: the class of diag(u, u').
  KModule reducible = act(random_group_elem(s), KModule(s.lin_form(), s.lin_form(), LinForm(f), s.lin_form()));
  if (is_semistable(reducible)) {
    WPoint rp = eta(reducible);
    KModule back = eta_inverse(rp, opts);
    t.expect(eta(back) == rp && back(0, 1).is_zero() && back(1, 0).is_zero(), "reducible class is diag(u, u')",
             [&] { return json{{"phi", to_json(reducible)}, {"back", to_json(back)}}; });
  }

  // Branch locus: a sum of three squares has res = 0.
  QuadForm q(f);
  for (int i = 0; i < 3; ++i) {
    LinForm l = s.lin_form();
    q += QuadForm::product(l, l) * s.scalar();
  }
  if (!q.is_zero()) {
    Fiber fiber = det_fiber(q);
    t.expect(fiber.points.size() == 1 && fiber.points[0].p().is_zero(), "branch point has one preimage",
             [&] { return json{{"q", to_json(q)}, {"fiber", to_json(fiber)}}; });
    try {
      WPoint branch(q, f.zero());
      t.expect(eta(eta_inverse(branch, opts)) == branch, "eta_inverse on the branch locus",
               [&] { return to_json(branch); });
    } catch (const NeedsExtension&) {
      ++t.needs_extension;
    }
  }

  // Fiber cardinality against the square test.
  QuadForm g = det_semiinvariant(random_module(s));
  if (!g.is_zero()) {
    Scalar r = resultant(g);
    Fiber fiber = det_fiber(g);
    std::size_t expected = r.is_zero() ? 1 : (is_square(r) ? 2 : 0);
    t.expect(fiber.points.size() == expected && fiber.needs_extension == (expected == 0), "fiber cardinality",
             [&] { return json{{"q", to_json(g)}, {"fiber", to_json(fiber)}}; });
    for (const auto& p : fiber.points) t.expect(on_hypersurface(p), "fiber points lie on H");
  }
}

// ---- blowdown ---------------------------------------------------------------

void blowdown_trial(Trial& t, Sampler& s, std::size_t index, bool fixed) {
  const Field& f = s.field();
  if (fixed) {
    BigPsi psi = index == 0 ? canonical_w1(f) : canonical_w2(f);
    KModule expected = index == 0 ? KModule(var(f, 0), var(f, 1), var(f, 2), var(f, 3))
                                  : KModule(var(f, 0), var(f, 2), var(f, 1), var(f, 3));
    t.expect(beta_matrix(psi) == expected * -f.one(), "canonical instance maps to -nu matrix",
             [&] { return to_json(beta_matrix(psi)); });
    t.expect(beta(psi) == (index == 0 ? nu1(f) : nu2(f)), "canonical instance maps to nu");
    return;
  }

  BigPsi w0 = random_psi(s, Region::W0, &t.rejected);
  BigGroupElem gh = random_big_group_elem(s);
  auto detail = [&] { return json{{"psi", to_json(w0)}, {"gh", to_json(gh)}}; };
  KModule a = alpha(w0);
  t.expect(is_semistable(a) && is_injective_on_quadric(a), "alpha semistable and injective", detail);
  t.expect(beta(w0) == eta(a), "beta = eta o alpha on W0", detail);
  PsiReduction red = reduce_psi(w0);
  t.expect(red.gh.h() * w0.matrix() * red.gh.g_inverse() == red.reduced, "reduce_psi replay", detail);
  t.expect(red.gh.g().degrees_legal() && red.gh.h().degrees_legal() && red.reduced.degrees_legal(),
           "reduce_psi bidegrees", detail);
  BigPsi moved = act(gh, w0);
  t.expect(alpha(moved) == act(GroupElem(gh.g11(), gh.h22()), a), "alpha(h psi g^-1) = h22 alpha g11^-1", detail);
  t.expect(classify(moved) == Region::W0 && beta(moved) == beta(w0), "beta constant on W0 orbits", detail);

  BigPsi w1 = random_psi(s, Region::W1, &t.rejected);
  BigPsi w1_moved = act(gh, w1);
  t.expect(beta(w1) == nu1(f), "beta(W1) = nu1", [&] { return to_json(w1); });
  t.expect(classify(w1_moved) == Region::W1 && beta(w1_moved) == nu1(f), "beta constant on W1 orbits",
           [&] { return to_json(w1); });

  BigPsi w2 = random_psi(s, Region::W2, &t.rejected);
  BigPsi w2_moved = act(gh, w2);
  t.expect(beta(w2) == nu2(f), "beta(W2) = nu2", [&] { return to_json(w2); });
  t.expect(classify(w2_moved) == Region::W2 && beta(w2_moved) == nu2(f), "beta constant on W2 orbits",
           [&] { return to_json(w2); });
}

// ---- snake ------------------------------------------------------------------

void snake_trial(Trial& t, Sampler& s, std::size_t, bool fixed) {
  BigPsi psi = fixed ? canonical_w1(s.field()) : random_psi(s, Region::W1, &t.rejected);
  SnakeReport report = verify_snake(psi);
  t.expect(report.ok(), "snake identities", [&] { return json{{"psi", to_json(psi)}, {"report", to_json(report)}}; });
  t.expect(report.xi.degrees_legal(), "xi bidegrees");
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"epsilon-rho", 1, 2, epsilon_rho_trial},
      {"transform", 2, 0, transform_trial},
      {"king-vs-det", 3, 50, king_trial},
      {"normal-form", 4, 2, normal_form_trial},
      {"hypersurface", 5, 2, hypersurface_trial},
      {"blowdown", 6, 2, blowdown_trial},
      {"snake", 7, 1, snake_trial},
  };
  return all;
}

SuiteReport run_suite(const Suite& suite, const CampaignConfig& config) {
  const std::size_t total = suite.fixed + config.trials;
  std::vector<Trial> results;
  results.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    bool fixed = i < suite.fixed;
    results.emplace_back(suite.name, fixed ? i : i - suite.fixed, fixed);
  }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      bool fixed = i < suite.fixed;
      std::size_t index = fixed ? i : i - suite.fixed;
      // Fixed instances use their own stream so they never shift the random trials.
      Sampler sampler(config.field, make_engine(config.seed, 2 * suite.stream + (fixed ? 1 : 0), index));
      Trial& t = results[i];
      try {
        suite.run(t, sampler, index, fixed);
      } catch (const NeedsExtension&) {
        ++t.needs_extension;
      } catch (const std::exception& e) {
        t.expect(false, "no exception", [&] { return json(e.what()); });
      }
    }
  };
  unsigned workers = config.workers ? config.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  SuiteReport report;
  report.suite = suite.name;
  report.trials = config.trials;
  report.fixed = suite.fixed;
  for (auto& t : results) {
    report.checks += t.checks;
    report.rejected += t.rejected;
    report.needs_extension += t.needs_extension;
    report.violations += t.violations.size();
    for (auto& v : t.violations) report.details.push_back(std::move(v));
  }
  return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.name);
    return out;
  }();
  return names;
}

std::size_t CampaignReport::violations() const {
  std::size_t n = 0;
  for (const auto& s : suites) n += s.violations;
  return n;
}

json CampaignReport::summary() const {
  json out = {{"field", field}, {"seed", seed}, {"trials", trials}, {"violations", violations()}};
  json list = json::array();
  for (const auto& s : suites) {
    list.push_back({{"suite", s.suite},
                    {"trials", s.trials},
                    {"fixed", s.fixed},
                    {"checks", s.checks},
                    {"violations", s.violations},
                    {"needs_extension", s.needs_extension},
                    {"rejected", s.rejected}});
  }
  out["suites"] = std::move(list);
  return out;
}

CampaignReport run_campaign(const CampaignConfig& config) {
  if (config.trials == 0) throw std::invalid_argument("trials must be at least 1");
  std::vector<const Suite*> selected;
  for (const auto& s : suites())
    if (config.suite == "all" || config.suite == s.name) selected.push_back(&s);
  if (selected.empty()) throw std::invalid_argument("unknown suite \"" + config.suite + "\"");

  CampaignReport report;
  report.field = config.field.name();
  report.seed = config.seed;
  report.trials = config.trials;
  for (const Suite* s : selected) report.suites.push_back(run_suite(*s, config));
  return report;
}

}  // namespace kronmod
