#pragma once

#include <vector>

#include "radsupp/monomial_ideal.hpp"
#include "radsupp/polynomial.hpp"

namespace radsupp {

/// Reduced, monic Groebner basis, generators sorted by ascending leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(RingSpec ring, TermOrder order, std::vector<Polynomial> generators)
      : ring_(std::move(ring)), order_(std::move(order)), generators_(std::move(generators)) {}

  const RingSpec& ring() const { return ring_; }
  const TermOrder& order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  std::vector<Monomial> leading_monomials() const;

 private:
  RingSpec ring_;
  TermOrder order_;
  std::vector<Polynomial> generators_;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_coprime = 0;
  std::size_t pairs_chain = 0;
  std::size_t reductions_to_zero = 0;
};

/// Buchberger's algorithm with the normal selection strategy. Pairs with
/// coprime leading monomials are skipped, as are pairs covered by an
/// already-treated chain (i,k),(k,j) with lm_k | lcm(lm_i, lm_j).
GroebnerBasis buchberger(const RingSpec& ring, const std::vector<Polynomial>& gens, const TermOrder& order,
                         BuchbergerStats* stats = nullptr);

/// Convenience overload; `gens` must be non-empty.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrder& order);

/// Fully reduced remainder of f modulo the basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

inline bool is_member(const Polynomial& f, const GroebnerBasis& gb) { return normal_form(f, gb).is_zero(); }

MonomialIdeal initial_ideal(const GroebnerBasis& gb);

/// True when every leading monomial is squarefree, which certifies the ideal radical.
bool squarefree_initial_certificate(const GroebnerBasis& gb);

}  // namespace radsupp
