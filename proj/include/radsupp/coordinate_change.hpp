#pragma once

// Multigraded linear changes of coordinates (elements of prod_j GL_{m_j})
// and the randomized Brad(S) test built on them.

#include <cstdint>
#include <vector>

#include "radsupp/groebner.hpp"

namespace radsupp {

using Matrix = std::vector<std::vector<Scalar>>;

class CoordinateChange {
 public:
  /// One invertible m_j x m_j block per grading index; throws on a singular block.
  CoordinateChange(RingSpec ring, std::vector<Matrix> blocks);

  static CoordinateChange identity(const RingSpec& ring);
  /// Entries drawn with random_element until each block is invertible.
  static CoordinateChange random(const RingSpec& ring, Rng& rng);

  const RingSpec& ring() const { return ring_; }
  const std::vector<Matrix>& blocks() const { return blocks_; }

  /// x_{ij} -> sum_k block_j[k][i] x_{kj}
  Polynomial apply(const Polynomial& f) const;
  /// (this o other)(f) == this->apply(other.apply(f))
  CoordinateChange compose(const CoordinateChange& other) const;

 private:
  RingSpec ring_;
  std::vector<Matrix> blocks_;
};

/// Rank test by Gaussian elimination over the field.
bool is_invertible(const Field& field, const Matrix& block);

enum class BradStatus { InBrad, Indeterminate };

struct BradAttempt {
  std::uint64_t seed;
  CoordinateChange change;
  MonomialIdeal initial;
  bool in_brad;
};

struct BradTrial {
  BradStatus status;
  MonomialIdeal initial;  // from the last attempt
  std::vector<BradAttempt> attempts;
  bool in_brad() const { return status == BradStatus::InBrad; }
};

constexpr int kDefaultRetries = 3;

/// Draws random coordinate changes (seeds derived from `rng`), computes the
/// reduced degrevlex Groebner basis of g(I) in the default variable ranking
/// and tests the initial ideal for Brad(S) membership. A positive answer
/// certifies that (gens) is radical; `retries` negative answers give
/// Indeterminate.
BradTrial probabilistic_brad_initial(const RingSpec& ring, const std::vector<Polynomial>& gens, Rng& rng,
                                     int retries = kDefaultRetries);

}  // namespace radsupp
