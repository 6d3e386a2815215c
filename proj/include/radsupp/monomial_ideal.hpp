#pragma once

// Monomial ideals, integer K-polynomials, polarization, Alexander duality
// and the Brad(S) exchange condition.

#include <map>
#include <string>
#include <vector>

#include "radsupp/polynomial.hpp"
#include "radsupp/support.hpp"

namespace radsupp {

/// Minimal monomial generators, sorted ascending in default degrevlex.
/// The unit ideal is generated by the monomial 1, the zero ideal by nothing.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(RingSpec ring) : ring_(std::move(ring)) {}
  MonomialIdeal(RingSpec ring, std::vector<Monomial> gens);

  static MonomialIdeal unit(const RingSpec& ring) { return MonomialIdeal(ring, {Monomial::one(ring.num_vars())}); }

  const RingSpec& ring() const { return ring_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool contains(const Monomial& mono) const;
  bool is_squarefree() const;

  std::vector<std::string> gen_strings() const;
  /// "(x[1,1], x[2,1]*x[1,2])"
  std::string to_string() const;

  bool operator==(const MonomialIdeal& other) const { return ring_ == other.ring_ && gens_ == other.gens_; }

 private:
  RingSpec ring_;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(const RingSpec& ring, std::vector<Monomial> monomials);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);

/// (y_j : j in A) in T = K[y_1..y_n].
MonomialIdeal linear_ideal(const RingSpec& fine_ring, const Multidegree& a);

/// y_j^a -> x_{1j} x_{2j} ... x_{aj}. E must live in a fine ring with the same n as m.
MonomialIdeal polarize(const MonomialIdeal& e, const std::vector<int>& m);

/// Minimal transversals of the generator supports. The dual of the zero
/// ideal is the unit ideal and vice versa.
MonomialIdeal alexander_dual(const MonomialIdeal& j);

/// alexander_dual(polarize(E)).
MonomialIdeal psi(const MonomialIdeal& e, const std::vector<int>& m);

/// Radical (squarefree generators) and, for each generator g and each
/// x_{ij} | g with i > 1, x_{kj} g / x_{ij} lies in J for all k < i.
bool in_brad(const MonomialIdeal& j);

/// Integer Laurent-free polynomial in z_1..z_n.
class IntPoly {
 public:
  using Exponents = std::vector<int>;

  explicit IntPoly(int n) : n_(n) {}
  static IntPoly constant(int n, long long c);
  static IntPoly monomial(int n, Exponents exps, long long c = 1);
  /// z^{deg}
  static IntPoly power_product(const ZnDegree& deg, long long c = 1) { return monomial(static_cast<int>(deg.size()), deg, c); }

  int n() const { return n_; }
  const std::map<Exponents, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, long long c);

  IntPoly operator+(const IntPoly& other) const;
  IntPoly operator-(const IntPoly& other) const;
  IntPoly operator*(const IntPoly& other) const;
  IntPoly scaled(long long c) const;

  /// "1 - z1*z2 + z1^2"
  std::string to_string() const;

  bool operator==(const IntPoly&) const = default;

 private:
  int n_;
  std::map<Exponents, long long> terms_;
};

/// z_i -> 1 - z_i.
IntPoly dualize(const IntPoly& k);

/// K-polynomial of ring/I by pivot splitting on the most frequent variable.
IntPoly kpoly_quotient(const MonomialIdeal& i);

/// Independent route: inclusion-exclusion over subsets of generators,
///   sum over sigma of (-1)^{|sigma|} z^{deg lcm(sigma)},
/// accumulated one generator at a time and keyed by lcm so equal lcms merge.
IntPoly kpoly_quotient_taylor(const MonomialIdeal& i);

/// K-polynomial of I as a module: 1 - kpoly_quotient(I).
IntPoly kpoly_ideal(const MonomialIdeal& i);

/// Table of values indexed by Z^n degree.
using HilbertTable = std::map<ZnDegree, long long>;

/// Counts monomials outside I in every degree a <= bound (componentwise).
HilbertTable hilbert_count_oracle(const MonomialIdeal& i, const ZnDegree& bound);

/// Coefficients of k(z) / prod_j (1 - z_j)^{m_j} for every degree a <= bound.
HilbertTable series_coefficients(const IntPoly& k, const std::vector<int>& m, const ZnDegree& bound);

}  // namespace radsupp
