#include "radsupp/field.hpp"

#include <charconv>
#include <limits>

#include "radsupp/error.hpp"

namespace radsupp {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!radsupp::is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

Scalar Field::normalize(const Scalar& x) const {
  if (p_ == 0) {
    Scalar r = x;
    r.canonicalize();
    return r;
  }
  mpz_class mod(p_);
  mpz_class num = x.get_num() % mod;
  if (num < 0) num += mod;
  mpz_class den = x.get_den() % mod;
  if (den == 0) throw Error("denominator vanishes in " + tag());
  if (den != 1) {
    mpz_class den_inv;
    mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    num = (num * den_inv) % mod;
  }
  return Scalar(num);
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw Error("division by zero");
  if (p_ == 0) return Scalar(1) / a;
  mpz_class mod(p_), r;
  mpz_class v = a.get_num();
  mpz_invert(r.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
  return Scalar(r);
}

std::string Field::tag() const { return p_ == 0 ? "QQ" : "Fp(" + std::to_string(p_) + ")"; }

Field Field::parse(std::string_view tag) {
  if (tag == "QQ") return rationals();
  std::string_view digits;
  if (tag.size() >= 2 && tag[0] == 'F' && tag[1] != 'p') {
    digits = tag.substr(1);
  } else if (tag.starts_with("Fp(") && tag.ends_with(")")) {
    digits = tag.substr(3, tag.size() - 4);
  } else if (tag.starts_with("Fp:")) {
    digits = tag.substr(3);
  } else {
    throw Error("unknown field '" + std::string(tag) + "' (expected QQ, F2, Fp:<p> or Fp(<p>))");
  }
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || p > std::numeric_limits<std::uint32_t>::max() / 2)
    throw Error("bad field characteristic in '" + std::string(tag) + "'");
  return prime(static_cast<std::uint32_t>(p));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error("Rng::below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Scalar random_nonzero(const Field& field, Rng& rng) {
  if (field.is_prime()) return Scalar(static_cast<unsigned long>(1 + rng.below(field.characteristic() - 1)));
  long v = rng.between(-10, 9);
  return Scalar(v >= 0 ? v + 1 : v);
}

Scalar random_element(const Field& field, Rng& rng) {
  if (field.is_prime()) return Scalar(static_cast<unsigned long>(rng.below(field.characteristic())));
  return Scalar(rng.between(-10, 10));
}

}  // namespace radsupp
