#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace radsupp {

/// Field elements travel as exact rationals; over F_p they are integers in [0, p).
using Scalar = mpq_class;

/// Q or F_p. All arithmetic on Scalar goes through a Field so that
/// prime-field values stay reduced.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  bool is_rationals() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }
  /// 0 for Q.
  std::uint32_t characteristic() const { return p_; }

  /// Maps an arbitrary rational into the field (a/b -> a * b^{-1} mod p).
  Scalar normalize(const Scalar& x) const;
  Scalar from_int(long value) const { return normalize(Scalar(value)); }

  Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
  Scalar neg(const Scalar& a) const { return normalize(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// "QQ" or "Fp(p)".
  std::string tag() const;
  /// Accepts "QQ", "F2", "Fp(p)", "Fp:p".
  static Field parse(std::string_view tag);

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint64_t p);

constexpr std::uint32_t kDefaultPrime = 32003;

/// Deterministic 64-bit stream. Bounded draws use rejection sampling so the
/// sequence is identical on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }
  /// Seed for an independent child stream (splitmix64 of seed and index).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index);

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

/// Nonzero coefficient: uniform over F_p^*, or uniform in [-10, 10] \ {0} over Q.
Scalar random_nonzero(const Field& field, Rng& rng);
/// Any coefficient: uniform over F_p, or uniform in [-10, 10] over Q.
Scalar random_element(const Field& field, Rng& rng);

}  // namespace radsupp
