// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "kronmod/campaign.hpp"
#include "kronmod/moduli.hpp"
#include "kronmod/samplers.hpp"

using namespace kronmod;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Tally {
  std::size_t passed = 0, total = 0;
  std::string first_failure;
  void check(bool ok, const std::string& what) {
    ++total;
    if (ok) ++passed;
    else if (first_failure.empty()) first_failure = what;
  }
  bool ok() const { return passed == total && total > 0; }
};

Sampler sampler(const Field& f, std::uint64_t criterion, std::uint64_t index) {
  return Sampler(f, make_engine(kSeed, criterion, index));
}

Scalar det2(const Matrix& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

QuadForm display(const Scalar& lambda, const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  QuadForm q(lambda.field());
  q.coeff(0, 0) = lambda.field().one();
  q.coeff(1, 2) = -lambda;
  q.coeff(0, 3) = a + d;
  q.coeff(1, 3) = -c;
  q.coeff(2, 3) = -lambda * b;
  q.coeff(3, 3) = a * d - b * c;
  return q;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Exceptions inside a criterion count as a failed check.
void guarded(Tally& t, const std::string& what, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    t.check(false, what + ": " + e.what());
  }
}

Tally criterion1(double& elapsed) {
  Tally t;
  auto start = std::chrono::steady_clock::now();
  const std::pair<Field, std::size_t> runs[] = {{Field::prime(10007), 10'000}, {Field::rational(), 1'000}};
  for (const auto& [f, n] : runs) {
    Sampler s = sampler(f, 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      KModule phi = random_module(s);
      Scalar e = epsilon(phi);
      t.check(e * e == rho(phi), f.name() + " trial " + std::to_string(i));
    }
  }
  elapsed = seconds_since(start);
  t.check(elapsed < 5.0, "runtime " + std::to_string(elapsed) + " s");
  return t;
}

Tally criterion2() {
  Tally t;
  for (const Field& f : {Field::rational(), Field::prime(10007)}) {
    for (std::size_t i = 0; i < 1000; ++i) {
      Sampler s = sampler(f, 2, i);
      KModule phi = random_module(s);
      GroupElem gh = random_group_elem(s);
      Scalar chi = det2(gh.h()) / det2(gh.g());
      KModule moved = act(gh, phi);
      t.check(det_semiinvariant(moved) == det_semiinvariant(phi) * chi, "det law");
      t.check(e_semiinvariant(moved) == e_semiinvariant(phi) * chi * chi, "e law");

      CoordChange<4> u = random_coord_change(s);
      KModule changed = apply_coord_change(u, phi);
      Scalar du = u.determinant();
      t.check(epsilon(changed) == du * epsilon(phi), "epsilon law");
      t.check(rho(changed) == du * du * rho(phi), "rho law");
    }
  }
  return t;
}

Tally criterion3() {
  Tally t;
  CampaignReport r = run_campaign({Field::rational(), kSeed, 1000, "king-vs-det", 0});
  const SuiteReport& s = r.suites.at(0);
  t.total = s.checks;
  t.passed = s.checks - s.violations;
  if (s.violations) t.first_failure = s.details.front().dump();
  t.check(s.trials == 1000 && s.fixed == 50, "1000 random and 50 crafted instances");
  t.check(s.needs_extension == 0, "no extension needed");
  return t;
}

Tally criterion4() {
  Tally t;
  const Field f = Field::prime(1009);
  for (std::size_t i = 0; i < 500; ++i) {
    guarded(t, "instance " + std::to_string(i), [&] {
      Sampler s = sampler(f, 4, i);
      ScrambledNormalForm sample = random_scrambled_normal_form(s);
      t.check(det_semiinvariant(sample.original) == display(sample.lambda, sample.a, sample.b, sample.c, sample.d),
              "lambda-aware det display");
      t.check(epsilon(sample.original) == sample.lambda * (sample.d - sample.a), "epsilon = lambda (d - a)");

      NormalForm nf = normal_form(sample.scrambled, {i, 10'000});
      t.check(nf.replay(sample.scrambled) == nf.module(), "certificate replay");
      t.check(det_semiinvariant(nf.module()) == display(nf.lambda, nf.a, nf.b, nf.c, nf.d), "output det display");
      t.check(epsilon(nf.module()) == nf.lambda * (nf.d - nf.a), "output epsilon");

      // A second representative with equal (det, epsilon) in the same coordinates.
      KModule other = act(random_group_elem(s), sample.scrambled);
      NormalForm nf2 = normal_form_in_coordinates(other, nf.upsilon);
      t.check(nf2.replay(other) == nf2.module(), "second replay");
      t.check(eta(nf.module()) == eta(nf2.module()), "equal (det, epsilon)");
      t.check(nf.a == nf2.a && nf.b == nf2.b && nf.c == nf2.c && nf.d == nf2.d, "parameters coincide");
    });
  }
  return t;
}

Tally criterion5() {
  Tally t;
  for (const Field& f : {Field::rational(), Field::prime(1009)}) {
    for (std::size_t i = 0; i < 1000; ++i) {
      Sampler s = sampler(f, 5, i);
      WPoint p = eta(random_semistable_module(s));
      t.check(resultant(p.q()) == p.p() * p.p(), "res(q) = p^2");
    }
  }
  for (const Field& f : {Field::rational(), Field::prime(1009)}) {
    QuadForm segre_q(f);
    segre_q.coeff(0, 3) = f.one();
    segre_q.coeff(1, 2) = -f.one();
    Fiber fiber = det_fiber(segre_q);
    t.check(fiber.points.size() == 2 && fiber.points[0] == nu1(f) && fiber.points[1] == nu2(f), "fiber {nu1, nu2}");
    t.check(epsilon(nu1_module(f)) == f.one() && epsilon(nu2_module(f)) == -f.one(), "epsilon(nu1), epsilon(nu2)");
  }
  const Field f = Field::prime(1009);
  for (std::size_t i = 0; i < 500; ++i) {
    guarded(t, "eta_inverse " + std::to_string(i), [&] {
      Sampler s = sampler(f, 50, i);
      WPoint p = eta(random_stable_module(s));
      t.check(eta(eta_inverse(p, {i, 10'000})) == p, "eta_inverse then eta");
    });
  }
  for (std::size_t i = 0; i < 200; ++i) {
    Sampler s = sampler(f, 51, i);
    QuadForm q(f);
    std::size_t squares = static_cast<std::size_t>(s.integer(1, 3));
    for (std::size_t k = 0; k < squares; ++k) {
      LinForm l = s.lin_form();
      q += QuadForm::product(l, l) * s.nonzero_scalar();
    }
    if (q.is_zero()) continue;
    t.check(resultant(q).is_zero(), "branch locus res = 0");
    Fiber fiber = det_fiber(q);
    t.check(fiber.points.size() == 1 && fiber.points[0].p().is_zero(), "one branch point");
  }
  return t;
}

Tally criterion6() {
  Tally t;
  for (const Field& f : {Field::rational(), Field::prime(10007)}) {
    for (std::size_t i = 0; i < 200; ++i) {
      Sampler s = sampler(f, 6, i);
      BigPsi w0 = random_psi(s, Region::W0);
      t.check(beta(w0) == eta(alpha(w0)), "beta = eta alpha on W0");
      PsiReduction r = reduce_psi(w0);
      t.check(act(r.gh, w0).matrix() == r.reduced, "reduce_psi replay");
      t.check(beta(random_psi(s, Region::W1)) == nu1(f), "W1 collapses to nu1");
      t.check(beta(random_psi(s, Region::W2)) == nu2(f), "W2 collapses to nu2");
      BigGroupElem gh = random_big_group_elem(s);
      t.check(alpha(act(gh, w0)) == act(GroupElem(gh.g11(), gh.h22()), alpha(w0)), "alpha equivariance");
    }
  }
  return t;
}

Tally criterion7() {
  Tally t;
  for (const Field& f : {Field::rational(), Field::prime(10007)}) {
    for (std::size_t i = 0; i < 200; ++i) {
      Sampler s = sampler(f, 7, i);
      SnakeReport r = verify_snake(random_psi(s, Region::W1));
      t.check(r.ok(), r.ok() ? "" : r.residues.front().identity);
    }
  }
  return t;
}

std::string campaign_output(const Field& f, unsigned workers) {
  CampaignReport r = run_campaign({f, kSeed, 200, "all", workers});
  std::string out;
  for (const auto& s : r.suites)
    for (const auto& d : s.details) out += d.dump() + "\n";
  return out + r.summary().dump() + "\n";
}

Tally criterion8(std::chrono::steady_clock::time_point start, double& elapsed) {
  Tally t;
  for (const Field& f : {Field::rational(), Field::prime(1009)}) {
    std::string first = campaign_output(f, 1);
    t.check(first == campaign_output(f, 1), f.name() + " repeat");
    t.check(first == campaign_output(f, 3), f.name() + " with three workers");
  }
  elapsed = seconds_since(start);
  t.check(elapsed < 60.0, "wall clock " + std::to_string(elapsed) + " s");
  return t;
}

bool report(int number, const char* name, const Tally& t, const std::string& extra = "") {
  std::printf("%s criterion %d  %-34s %zu/%zu checks%s%s%s\n", t.ok() ? "PASS" : "FAIL", number, name, t.passed,
              t.total, extra.c_str(), t.first_failure.empty() ? "" : "  first failure: ",
              t.first_failure.c_str());
  std::fflush(stdout);
  return t.ok();
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, ", %.2f s", s);
  return buf;
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  double t1 = 0, t8 = 0;
  Tally c1 = criterion1(t1);
  ok &= report(1, "epsilon^2 = rho", c1, secs(t1));
  ok &= report(2, "transformation laws", criterion2());
  ok &= report(3, "criterion vs King oracle", criterion3());
  ok &= report(4, "normal-form round trip (F_1009)", criterion4());
  ok &= report(5, "hypersurface and fibers", criterion5());
  ok &= report(6, "blow-down consistency", criterion6());
  ok &= report(7, "snake identities", criterion7());
  Tally c8 = criterion8(start, t8);
  ok &= report(8, "determinism and wall clock", c8, secs(t8));
  return ok ? 0 : 1;
}
