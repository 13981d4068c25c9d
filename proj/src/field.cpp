#include "kronmod/field.hpp"

#include <charconv>
#include <stdexcept>

namespace kronmod {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, unsigned long long e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1ULL) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

bool residue_is_square(std::uint64_t a, std::uint64_t p) {
  return a == 0 || pow_mod(a, (p - 1) / 2, p) == 1;
}

// Tonelli-Shanks; a must be a nonzero quadratic residue.
std::uint64_t tonelli_shanks(std::uint64_t a, std::uint64_t p) {
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1ULL) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (residue_is_square(z, p)) ++z;

  std::uint64_t m = s;
  std::uint64_t c = pow_mod(z, q, p);
  std::uint64_t t = pow_mod(a, q, p);
  std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return r;
}

// Squarefree kernel of a positive integer. Prime factors up to the trial
// bound are removed exactly; the remaining cofactor is dropped only when it
// is itself a perfect square.
mpz_class squarefree_kernel(mpz_class m) {
  constexpr unsigned long kTrialBound = 1'000'000;
  mpz_class kernel = 1;
  for (unsigned long f = 2; f <= kTrialBound; f += (f == 2 ? 1 : 2)) {
    mpz_class ff = mpz_class(f) * f;
    if (ff * f > m) break;
    unsigned parity = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), f)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), f);
      parity ^= 1U;
    }
    if (parity) kernel *= f;
  }
  if (!mpz_perfect_square_p(m.get_mpz_t())) kernel *= m;
  return kernel;
}

}  // namespace

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || p >= (1ULL << 62)) {
    throw std::invalid_argument("field modulus must be an odd prime below 2^62, got " +
                                std::to_string(p));
  }
  mpz_class z(static_cast<unsigned long>(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0) {
    throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
  }
  return Field(p);
}

Field Field::parse(std::string_view spec) {
  if (spec == "rational" || spec == "Q") return rational();
  if (spec.starts_with("fp:")) {
    std::string_view digits = spec.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw std::invalid_argument("bad field modulus in '" + std::string(spec) + "'");
    }
    return prime(p);
  }
  throw std::invalid_argument("unknown field '" + std::string(spec) +
                              "' (expected rational or fp:<P>)");
}

std::string Field::name() const {
  return is_rational() ? "rational" : "fp:" + std::to_string(p_);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  Scalar s;
  s.field_ = *this;
  if (is_rational()) {
    s.q_ = mpq_class(static_cast<long>(v));
  } else {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Field::from_rational(const mpq_class& q) const {
  Scalar s;
  s.field_ = *this;
  if (is_rational()) {
    s.q_ = q;
    s.q_.canonicalize();
    return s;
  }
  std::uint64_t den = reduce(q.get_den(), p_);
  if (den == 0) {
    throw std::domain_error("denominator " + q.get_den().get_str() + " vanishes modulo " +
                            std::to_string(p_));
  }
  s.r_ = mul_mod(reduce(q.get_num(), p_), pow_mod(den, p_ - 2, p_), p_);
  return s;
}

Scalar Field::parse_scalar(std::string_view text) const {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty scalar");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed scalar '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  try {
    return from_rational(q);
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(e.what());
  }
}

Scalar Field::non_residue() const {
  if (is_rational()) throw std::logic_error("non_residue is only defined over F_p");
  std::uint64_t n = 2;
  while (residue_is_square(n, p_)) ++n;
  return from_int(static_cast<long long>(n));
}

Scalar Field::square_class(const Scalar& s) const {
  if (s.field() != *this) throw std::invalid_argument("square_class: field mismatch");
  if (s.is_zero()) throw std::invalid_argument("square_class of zero");
  if (!is_rational()) return residue_is_square(s.r_, p_) ? one() : non_residue();
  mpz_class n = s.q_.get_num() * s.q_.get_den();
  int sign = sgn(n);
  mpz_class kernel = squarefree_kernel(abs(n));
  return from_rational(mpq_class(sign < 0 ? mpz_class(-kernel) : kernel));
}

// --------------------------------------------------------------- Scalar

bool Scalar::is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw std::logic_error("scalar is not rational");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw std::logic_error("scalar is not a residue");
  return r_;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_) {
    throw std::invalid_argument("field mismatch: " + field_.name() + " vs " + o.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational()) {
    s.q_ = -q_;
  } else if (r_ != 0) {
    s.r_ = field_.modulus() - r_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    q_ += o.q_;
  } else {
    std::uint64_t p = field_.modulus();
    r_ += o.r_;
    if (r_ >= p) r_ -= p;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    q_ -= o.q_;
  } else {
    std::uint64_t p = field_.modulus();
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p - o.r_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    q_ *= o.q_;
  } else {
    r_ = mul_mod(r_, o.r_, field_.modulus());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar s = *this;
  if (field_.is_rational()) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = pow_mod(r_, field_.modulus() - 2, field_.modulus());
  }
  return s;
}

Scalar Scalar::pow(unsigned long long e) const {
  Scalar result = field_.one();
  Scalar base = *this;
  while (e > 0) {
    if (e & 1ULL) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

// ------------------------------------------------------------ roots

bool is_square(const Scalar& s) { return sqrt_if_square(s).has_value(); }

std::optional<Scalar> sqrt_if_square(const Scalar& s) {
  const Field& f = s.field();
  if (s.is_zero()) return f.zero();
  if (f.is_rational()) {
    const mpq_class& q = s.rational();
    if (sgn(q) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
      return std::nullopt;
    }
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
    return f.from_rational(mpq_class(num, den));
  }
  std::uint64_t p = f.modulus();
  std::uint64_t a = s.residue();
  if (!residue_is_square(a, p)) return std::nullopt;
  std::uint64_t r = tonelli_shanks(a, p);
  if (r > (p - 1) / 2) r = p - r;
  return f.from_int(static_cast<long long>(r));
}

}  // namespace kronmod
