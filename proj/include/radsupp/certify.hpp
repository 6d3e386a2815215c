#pragma once

// Certificates backing support verdicts: explicit non-radical witnesses for
// failing supports, Cartwright-Sturmfels data for passing ones, monomial
// regular sequences and the regularization gadget.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radsupp/coordinate_change.hpp"
#include "radsupp/groebner.hpp"
#include "radsupp/monomial_ideal.hpp"
#include "radsupp/support.hpp"

namespace radsupp {

/// The two ideal-membership checks that make a witness.
struct WitnessVerification {
  std::string field;
  std::string order;
  std::vector<std::string> groebner_basis;
  std::string witness_normal_form;  // must be nonzero
  bool witness_outside = false;     // w not in I
  bool square_inside = false;       // w^2 in I
  bool passed() const { return witness_outside && square_inside; }
};

struct NonRadicalWitness {
  /// Set for padded witnesses; absent for the bare cycle ideal.
  std::optional<Support> support;
  RingSpec ring;
  TermOrder order;
  /// Cycle of the original support actually used (after tightening).
  LabeledCycle cycle;
  /// cycle_labels[q-1] is the original label playing the role of index q.
  std::vector<int> cycle_labels;
  /// Labels padded in with one new variable x[1,u] each.
  std::vector<int> padding_labels;
  /// generator t has multidegree degrees[t] = A_{cycle.vertices[t]}
  std::vector<Polynomial> generators;
  std::vector<Multidegree> degrees;
  Monomial witness;
  WitnessVerification verification;
};

/// Runs Buchberger and both normal-form checks for (generators, witness).
WitnessVerification verify_witness(const RingSpec& ring, const TermOrder& order,
                                   const std::vector<Polynomial>& generators, const Monomial& witness);

/// I = (x_{i+1} y_i - x_i y_{i+1} : i < p) + (y_1 y_p) in K[x_1..x_p, y_1..y_p]
/// with x_q = x[1,q], y_q = x[2,q], witness x_1...x_{p-1} y_p, verified under
/// degrevlex x_1 > ... > x_p > y_1 > ... > y_p.
NonRadicalWitness cycle_witness_ideal(int p, const Field& field);

/// Witness for a failing support along a distinct-label cycle, padded so the
/// generators have exactly the degrees A_{v_t}. Throws if verification fails.
NonRadicalWitness padded_witness(const Support& support, const LabeledCycle& cycle, const Field& field);

/// prod_v (1 - prod_{j in A_v} z_j)
IntPoly k_poly_of_support(const Support& support);

/// prod_v G_v with G_v = 1 - prod_{j in A_v} (1 - z_j)
IntPoly dual_k_poly_of_support(const Support& support);

struct RegularSequenceCert {
  Support support;
  RingSpec ring;
  std::vector<Monomial> monomials;
  std::vector<Multidegree> degrees;
  bool squarefree = false;
  bool pairwise_coprime = false;
  bool degrees_match = false;
  bool valid() const { return squarefree && pairwise_coprime && degrees_match; }
};

/// Thrown when some label j occurs in more than m_j of the sets.
class CountingConditionError : public Error {
 public:
  CountingConditionError(int label, int occurrences, int mj);
  int label() const { return label_; }

 private:
  int label_;
};

/// f_v = prod_{j in A_v} x[k_{j,v}, j], k_{j,v} = #{w <= v : j in A_w}.
RegularSequenceCert regular_sequence(const Support& support, const std::vector<int>& m);

struct CSCertificate {
  Support support;
  MonomialIdeal e;                  // prod_v (y_j : j in A_v) in K[y_1..y_n]
  std::size_t generator_count = 0;  // minimal generators of E
  std::size_t expected_count = 0;   // prod_v |A_v|
  IntPoly k_support;                // prod_v (1 - z^{A_v})
  IntPoly k_dual_support;           // prod_v G_v
  IntPoly k_ideal;                  // K-polynomial of E as a module
  bool dual_matches = false;        // dualize(k_support) == k_dual_support
  bool identity_holds = false;      // k_ideal == k_dual_support
  bool taylor_agrees = false;       // pivot and inclusion-exclusion agree on E
  bool exponent_bound_holds = false;
  bool valid() const {
    return generator_count == expected_count && dual_matches && identity_holds && taylor_agrees &&
           exponent_bound_holds;
  }
};

/// Re-checks the support itself; throws for a support that is not radical.
CSCertificate cs_certificate(const Support& support);

struct GadgetResult {
  RingSpec extended;
  TermOrder order;  // lex, every t above every original variable
  std::vector<Polynomial> gadget_gens;
  std::vector<Monomial> leading;
  bool leading_coprime_squarefree = false;
};

/// Embeds f_i into S[t_{ij} : j in A_i] (t_{ij} = x[m_j + #{w <= i : j in A_w}, j])
/// and returns g_i = f_i + prod_{j in A_i} t_{ij}. Zero f_i are allowed.
GadgetResult regularization_gadget(const RingSpec& ring, const Support& support, const std::vector<Polynomial>& gens);

/// Random forms of the prescribed degrees followed by the randomized Brad test.
struct SupportTrial {
  Support support;
  std::vector<int> m;
  std::string field;
  std::uint64_t seed = 0;
  int retries = kDefaultRetries;
  std::vector<Polynomial> generators;
  BradTrial brad;
};

SupportTrial random_support_trial(const Support& support, const Field& field, std::uint64_t seed,
                                  std::optional<std::vector<int>> m = std::nullopt, int retries = kDefaultRetries);

}  // namespace radsupp
