#pragma once

// The Z^n-graded ring S(m) = K[x_{ij} : 1 <= j <= n, 1 <= i <= m_j] with
// deg x_{ij} = e_j, its monomials, polynomials and term orders.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radsupp/error.hpp"
#include "radsupp/field.hpp"
#include "radsupp/support.hpp"

namespace radsupp {

/// x_{ij}: row i, grading block j (both 1-based).
struct VarIndex {
  int i;
  int j;
  auto operator<=>(const VarIndex&) const = default;
};

using ZnDegree = std::vector<int>;

/// Variables are stored at flat positions in row-major order
/// x[1,1], x[1,2], ..., x[1,n], x[2,j] (for m_j >= 2), ...
/// which is also the default variable ranking (largest first).
class RingSpec {
 public:
  RingSpec(std::vector<int> m, Field field);
  /// T = K[y_1..y_n], the case m = (1,...,1), with y_j = x[1,j].
  static RingSpec fine(int n, Field field) { return RingSpec(std::vector<int>(static_cast<std::size_t>(n), 1), field); }

  int n() const { return static_cast<int>(m_.size()); }
  const std::vector<int>& m() const { return m_; }
  const Field& field() const { return field_; }
  int num_vars() const { return static_cast<int>(vars_.size()); }

  /// Flat position of x_{ij}; throws for an invalid pair.
  int index(int i, int j) const;
  VarIndex var(int flat) const { return vars_.at(static_cast<std::size_t>(flat)); }
  int block(int flat) const { return vars_.at(static_cast<std::size_t>(flat)).j; }
  std::string var_name(int flat) const;

  bool operator==(const RingSpec& other) const { return m_ == other.m_ && field_ == other.field_; }

 private:
  std::vector<int> m_;
  Field field_;
  std::vector<VarIndex> vars_;
  std::vector<std::vector<int>> index_;  // index_[j-1][i-1]
};

/// Dense exponent vector over the flat variables of a ring.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}
  static Monomial one(int num_vars) { return Monomial(std::vector<int>(static_cast<std::size_t>(num_vars), 0)); }
  static Monomial variable(int num_vars, int flat, int power = 1);

  const std::vector<int>& exps() const { return exps_; }
  int operator[](int flat) const { return exps_[static_cast<std::size_t>(flat)]; }
  int size() const { return static_cast<int>(exps_.size()); }
  int degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  bool divides(const Monomial& other) const;
  /// Variables with positive exponent.
  std::vector<int> support() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<int> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);
ZnDegree multidegree(const RingSpec& ring, const Monomial& mono);
std::string to_string(const RingSpec& ring, const Monomial& mono);

class TermOrder {
 public:
  enum class Kind { Lex, DegRevLex };

  /// Default ranking: the flat order, so x_{ij} > x_{kj} whenever i < k.
  static TermOrder degrevlex(const RingSpec& ring);
  static TermOrder lex(const RingSpec& ring);
  /// `ranking` lists every flat variable once, largest first.
  static TermOrder with_ranking(Kind kind, std::vector<int> ranking);

  Kind kind() const { return kind_; }
  const std::vector<int>& ranking() const { return ranking_; }
  /// <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const;
  /// "degrevlex x[1,1] > x[1,2] > ..."
  std::string describe(const RingSpec& ring) const;

  bool operator==(const TermOrder&) const = default;

 private:
  TermOrder(Kind kind, std::vector<int> ranking) : kind_(kind), ranking_(std::move(ranking)) {}
  Kind kind_;
  std::vector<int> ranking_;
};

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Sparse polynomial with nonzero coefficients, stored in descending default
/// degrevlex order (this makes equality and printing canonical).
class Polynomial {
 public:
  explicit Polynomial(RingSpec ring) : ring_(std::move(ring)) {}
  Polynomial(RingSpec ring, std::vector<Term> terms);

  static Polynomial constant(const RingSpec& ring, const Scalar& c);
  static Polynomial from_monomial(const RingSpec& ring, const Monomial& mono, const Scalar& c = 1);
  static Polynomial variable(const RingSpec& ring, int i, int j);

  const RingSpec& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial pow(int e) const;

  const Term& leading_term(const TermOrder& order) const;
  Polynomial monic(const TermOrder& order) const;

  /// "3*x[1,1]*x[2,2] - x[1,2]^2"
  std::string to_string() const;

  bool operator==(const Polynomial& other) const;

 private:
  void check_same_ring(const Polynomial& other) const;
  RingSpec ring_;
  std::vector<Term> terms_;
};

/// Common Z^n degree of all terms, or nothing for zero / inhomogeneous f.
std::optional<ZnDegree> multidegree_of(const Polynomial& f);

/// Inverse of Polynomial::to_string. Also accepts parentheses-free products
/// with '^' powers, rational coefficients "3/2*x[1,1]" and a leading sign.
Polynomial parse_polynomial(const RingSpec& ring, std::string_view text);

/// The 0/1 degree vector of A.
ZnDegree degree_of(const RingSpec& ring, const Multidegree& a);

/// All monomials of S_A, in descending default order.
std::vector<Monomial> basis_of_component(const RingSpec& ring, const Multidegree& a);

/// Every basis monomial of S_A with an independent nonzero coefficient.
Polynomial random_form(const RingSpec& ring, const Multidegree& a, Rng& rng);

}  // namespace radsupp
