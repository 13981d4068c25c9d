#pragma once

#include <cstdint>
#include <random>

#include "kronmod/field.hpp"
#include "kronmod/forms.hpp"
#include "kronmod/matrix.hpp"

namespace kronmod {

/// Every random stream is a std::mt19937_64 seeded through std::seed_seq
/// from (seed, stream, index). Both are fully specified by the standard, so
/// a stream depends only on these three numbers and never on how trials are
/// distributed over workers.
std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Draws field elements and small linear-algebra objects.
///
/// Over Q scalars are integers in [-bound, bound]; over F_p they are uniform
/// residues. Integers are reduced with a plain modulo of the engine output,
/// which keeps the stream portable across standard libraries.
class Sampler {
 public:
  Sampler(const Field& field, std::mt19937_64 engine, long long rational_bound = 9)
      : field_(field), engine_(std::move(engine)), bound_(rational_bound) {}

  const Field& field() const noexcept { return field_; }
  std::mt19937_64& engine() noexcept { return engine_; }

  /// Uniform integer in [lo, hi].
  long long integer(long long lo, long long hi);
  bool coin() { return integer(0, 1) == 1; }

  Scalar scalar();
  Scalar nonzero_scalar();
  LinForm lin_form();
  Matrix matrix(std::size_t rows, std::size_t cols);
  Matrix invertible(std::size_t n);

 private:
  Field field_;
  std::mt19937_64 engine_;
  long long bound_;
};

}  // namespace kronmod
