#include "radsupp/coordinate_change.hpp"

namespace radsupp {

bool is_invertible(const Field& field, const Matrix& block) {
  Matrix a = block;
  const std::size_t size = a.size();
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && a[pivot][col] == 0) ++pivot;
    if (pivot == size) return false;
    std::swap(a[pivot], a[col]);
    const Scalar inv = field.inv(a[col][col]);
    for (std::size_t r = col + 1; r < size; ++r) {
      if (a[r][col] == 0) continue;
      const Scalar factor = field.mul(a[r][col], inv);
      for (std::size_t c = col; c < size; ++c) a[r][c] = field.sub(a[r][c], field.mul(factor, a[col][c]));
    }
  }
  return true;
}

CoordinateChange::CoordinateChange(RingSpec ring, std::vector<Matrix> blocks)
    : ring_(std::move(ring)), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != ring_.n()) throw Error("coordinate change needs one block per grading index");
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    const auto mj = static_cast<std::size_t>(ring_.m()[j]);
    if (blocks_[j].size() != mj) throw Error("coordinate change block has the wrong size");
    for (auto& row : blocks_[j]) {
      if (row.size() != mj) throw Error("coordinate change block is not square");
      for (auto& x : row) x = ring_.field().normalize(x);
    }
    if (!is_invertible(ring_.field(), blocks_[j]))
      throw Error("coordinate change block " + std::to_string(j + 1) + " is singular");
  }
}

CoordinateChange CoordinateChange::identity(const RingSpec& ring) {
  std::vector<Matrix> blocks;
  for (int mj : ring.m()) {
    Matrix b(static_cast<std::size_t>(mj), std::vector<Scalar>(static_cast<std::size_t>(mj), Scalar(0)));
    for (int k = 0; k < mj; ++k) b[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = 1;
    blocks.push_back(std::move(b));
  }
  return CoordinateChange(ring, std::move(blocks));
}

CoordinateChange CoordinateChange::random(const RingSpec& ring, Rng& rng) {
  std::vector<Matrix> blocks;
  for (int mj : ring.m()) {
    const auto size = static_cast<std::size_t>(mj);
    Matrix b;
    do {
      b.assign(size, std::vector<Scalar>(size));
      for (auto& row : b)
        for (auto& x : row) x = random_element(ring.field(), rng);
    } while (!is_invertible(ring.field(), b));
    blocks.push_back(std::move(b));
  }
  return CoordinateChange(ring, std::move(blocks));
}

Polynomial CoordinateChange::apply(const Polynomial& f) const {
  if (!(f.ring() == ring_)) throw Error("coordinate change applied to a polynomial of another ring");
  // image of every variable
  std::vector<Polynomial> images;
  for (int v = 0; v < ring_.num_vars(); ++v) {
    const auto [i, j] = ring_.var(v);
    const Matrix& b = blocks_[static_cast<std::size_t>(j - 1)];
    std::vector<Term> terms;
    for (int k = 1; k <= ring_.m()[static_cast<std::size_t>(j - 1)]; ++k)
      terms.push_back({Monomial::variable(ring_.num_vars(), ring_.index(k, j)),
                       b[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)]});
    images.emplace_back(ring_, std::move(terms));
  }
  Polynomial out(ring_);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(ring_, t.coeff);
    for (int v = 0; v < ring_.num_vars(); ++v)
      for (int e = 0; e < t.mono[v]; ++e) term = term * images[static_cast<std::size_t>(v)];
    out = out + term;
  }
  return out;
}

CoordinateChange CoordinateChange::compose(const CoordinateChange& other) const {
  if (!(other.ring_ == ring_)) throw Error("composing coordinate changes of different rings");
  const Field& field = ring_.field();
  std::vector<Matrix> blocks;
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    const Matrix& g = blocks_[j];
    const Matrix& h = other.blocks_[j];
    const std::size_t size = g.size();
    Matrix prod(size, std::vector<Scalar>(size, Scalar(0)));
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < size; ++c)
        for (std::size_t k = 0; k < size; ++k) prod[r][c] = field.add(prod[r][c], field.mul(g[r][k], h[k][c]));
    blocks.push_back(std::move(prod));
  }
  return CoordinateChange(ring_, std::move(blocks));
}

BradTrial probabilistic_brad_initial(const RingSpec& ring, const std::vector<Polynomial>& gens, Rng& rng, int retries) {
  if (retries < 1) throw Error("retries must be positive");
  for (const auto& g : gens) {
    if (!(g.ring() == ring)) throw Error("generator lives in a different ring");
    if (!g.is_zero() && !multidegree_of(g)) throw Error("generators must be multigraded-homogeneous");
  }
  const TermOrder order = TermOrder::degrevlex(ring);
  std::vector<BradAttempt> attempts;
  for (int attempt = 0; attempt < retries; ++attempt) {
    const std::uint64_t seed = rng.next();
    Rng local(seed);
    CoordinateChange change = CoordinateChange::random(ring, local);
    std::vector<Polynomial> moved;
    for (const auto& g : gens) moved.push_back(change.apply(g));
    MonomialIdeal initial = initial_ideal(buchberger(ring, moved, order));
    const bool ok = in_brad(initial);
    attempts.push_back({seed, std::move(change), initial, ok});
    if (ok) return {BradStatus::InBrad, std::move(initial), std::move(attempts)};
  }
  MonomialIdeal last = attempts.back().initial;
  return {BradStatus::Indeterminate, std::move(last), std::move(attempts)};
}

}  // namespace radsupp
