#include "kronmod/random.hpp"

namespace kronmod {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

long long Sampler::integer(long long lo, long long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(engine_() % span);
}

Scalar Sampler::scalar() {
  if (field_.is_rational()) return field_.from_int(integer(-bound_, bound_));
  auto p = static_cast<long long>(field_.modulus());
  return field_.from_int(integer(0, p - 1));
}

Scalar Sampler::nonzero_scalar() {
  for (;;) {
    Scalar s = scalar();
    if (!s.is_zero()) return s;
  }
}

LinForm Sampler::lin_form() {
  LinForm l(field_);
  for (std::size_t i = 0; i < 4; ++i) l[i] = scalar();
  return l;
}

Matrix Sampler::matrix(std::size_t rows, std::size_t cols) {
  Matrix m(field_, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar();
  return m;
}

Matrix Sampler::invertible(std::size_t n) {
  for (;;) {
    Matrix m = matrix(n, n);
    if (m.is_invertible()) return m;
  }
}

}  // namespace kronmod
