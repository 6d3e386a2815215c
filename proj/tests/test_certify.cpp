#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "radsupp/certify.hpp"
#include "radsupp/sweep.hpp"

using namespace radsupp;

namespace {

Support sup(const char* text, std::optional<int> n = std::nullopt) { return parse_support_text(text, n); }

IntPoly Z(int n, std::initializer_list<std::pair<std::vector<int>, long long>> terms) {
  IntPoly out(n);
  for (const auto& [e, c] : terms) out.add_term(e, c);
  return out;
}

// 1 - z^A as an IntPoly
IntPoly one_minus(int n, std::vector<int> a) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (int j : a) e[static_cast<std::size_t>(j - 1)] = 1;
  return IntPoly::constant(n, 1) - IntPoly::monomial(n, e);
}

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

// both witness conditions re-derived by linear algebra, independently of Buchberger
void check_by_linear_algebra(const NonRadicalWitness& w) {
  const Polynomial m = Polynomial::from_monomial(w.ring, w.witness);
  CHECK_FALSE(oracle::in_ideal_linear_algebra(m, w.generators));
  CHECK(oracle::in_ideal_linear_algebra(m * m, w.generators));
}

}  // namespace

TEST_SUITE("certify") {
  TEST_CASE("k_poly_of_support examples") {
    CHECK(k_poly_of_support(sup("1 2")) == Z(2, {{{0, 0}, 1}, {{1, 1}, -1}}));
    CHECK(k_poly_of_support(sup("1; 1")) == Z(1, {{{0}, 1}, {{1}, -2}, {{2}, 1}}));
    CHECK(k_poly_of_support(sup("1 2; 2 3")) == one_minus(3, {1, 2}) * one_minus(3, {2, 3}));
  }

  TEST_CASE("dual_k_poly_of_support examples") {
    const IntPoly g12 = Z(3, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{1, 1, 0}, -1}});
    const IntPoly g23 = Z(3, {{{0, 1, 0}, 1}, {{0, 0, 1}, 1}, {{0, 1, 1}, -1}});
    CHECK(dual_k_poly_of_support(sup("1 2")) == Z(2, {{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, -1}}));
    CHECK(dual_k_poly_of_support(sup("1")) == Z(1, {{{1}, 1}}));
    CHECK(dual_k_poly_of_support(sup("1 2; 2 3")) == g12 * g23);
  }

  TEST_CASE("dual K-polynomial is the substituted K-polynomial") {
    for (const auto& s : exhaustive_corpus(3, 3)) CHECK(dual_k_poly_of_support(s) == dualize(k_poly_of_support(s)));
  }

  TEST_CASE("regular_sequence examples") {
    const auto cert = regular_sequence(sup("1 2; 1 3"), {2, 1, 1});
    std::vector<std::string> monos;
    for (const auto& m : cert.monomials) monos.push_back(to_string(cert.ring, m));
    CHECK(monos == std::vector<std::string>{"x[1,1]*x[1,2]", "x[1,3]*x[2,1]"});
    CHECK(cert.valid());

    const auto single = regular_sequence(sup("1"), {1});
    REQUIRE(single.monomials.size() == 1);
    CHECK(to_string(single.ring, single.monomials[0]) == "x[1,1]");

    try {
      regular_sequence(sup("1; 1"), {1});
      FAIL("expected a counting error");
    } catch (const CountingConditionError& e) {
      CHECK(e.label() == 1);
    }
    CHECK_THROWS_AS(regular_sequence(sup("1 2"), {1}), Error);
  }

  TEST_CASE("regular sequences reproduce the support K-polynomial") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
      const Support s = random_support(rng, 5, 4);
      CAPTURE(s.to_text());
      const auto cert = regular_sequence(s, min_ring_dims(s));
      CHECK(cert.valid());
      const MonomialIdeal i(cert.ring, cert.monomials);
      CHECK(kpoly_quotient(i) == k_poly_of_support(s));
    }
  }

  TEST_CASE("cycle_witness_ideal p = 3") {
    const auto w = cycle_witness_ideal(3, Field::rationals());
    CHECK(strings(w.generators) == std::vector<std::string>{"x[1,2]*x[2,1] - x[1,1]*x[2,2]",
                                                            "x[1,3]*x[2,2] - x[1,2]*x[2,3]", "x[2,1]*x[2,3]"});
    CHECK(to_string(w.ring, w.witness) == "x[1,1]*x[1,2]*x[2,3]");
    CHECK(w.verification.passed());
    CHECK(w.verification.witness_normal_form != "0");
    CHECK_FALSE(w.support.has_value());
    check_by_linear_algebra(w);
  }

  TEST_CASE("cycle_witness_ideal p = 2") {
    const auto w = cycle_witness_ideal(2, Field::rationals());
    CHECK(strings(w.generators) == std::vector<std::string>{"x[1,2]*x[2,1] - x[1,1]*x[2,2]", "x[2,1]*x[2,2]"});
    CHECK(to_string(w.ring, w.witness) == "x[1,1]*x[2,2]");
    CHECK(w.verification.passed());
    check_by_linear_algebra(w);
    CHECK_THROWS_AS(cycle_witness_ideal(1, Field::rationals()), Error);
  }

  TEST_CASE("cycle_witness_ideal p = 4 over F2") {
    const auto w = cycle_witness_ideal(4, Field::prime(2));
    CHECK(w.verification.passed());
    CHECK(w.verification.field == "Fp(2)");
    // the degree-8 Macaulay matrix is too large here; check w alone and compare with QQ
    CHECK_FALSE(oracle::in_ideal_linear_algebra(Polynomial::from_monomial(w.ring, w.witness), w.generators));
    const auto q = cycle_witness_ideal(4, Field::rationals());
    CHECK(q.verification.passed());
    CHECK(to_string(q.ring, q.witness) == to_string(w.ring, w.witness));
  }

  TEST_CASE("verify_witness rejects a radical ideal") {
    const RingSpec ring(std::vector<int>{2, 2}, Field::rationals());
    const std::vector<Polynomial> gens{parse_polynomial(ring, "x[1,1]*x[1,2]")};
    const auto v = verify_witness(ring, TermOrder::degrevlex(ring), gens, parse_polynomial(ring, "x[1,1]").terms()[0].mono);
    CHECK(v.witness_outside);
    CHECK_FALSE(v.square_inside);
    CHECK_FALSE(v.passed());
  }

  TEST_CASE("padded_witness: triangle needs no padding") {
    const Support s = sup("1 2; 2 3; 1 3");
    const auto verdict = is_radical_support(s);
    REQUIRE(verdict.cycle);
    const auto w = padded_witness(s, *verdict.cycle, Field::rationals());
    CHECK(w.padding_labels.empty());
    CHECK(w.generators.size() == 3);
    CHECK(w.verification.passed());
    for (std::size_t t = 0; t < w.generators.size(); ++t)
      CHECK(multidegree_of(w.generators[t]) == degree_of(w.ring, s[static_cast<std::size_t>(w.cycle.vertices[t])]));
    check_by_linear_algebra(w);
  }

  TEST_CASE("padded_witness: one padding label") {
    const Support s = sup("1 2 4; 2 3; 1 3");
    const auto verdict = is_radical_support(s);
    REQUIRE(verdict.cycle);
    const auto w = padded_witness(s, *verdict.cycle, Field::rationals());
    CHECK(w.padding_labels == std::vector<int>{4});
    CHECK(w.ring.m()[3] == 1);
    CHECK(w.witness[w.ring.index(1, 4)] == 1);
    CHECK(w.verification.passed());
    for (std::size_t t = 0; t < w.generators.size(); ++t)
      CHECK(multidegree_of(w.generators[t]) == degree_of(w.ring, s[static_cast<std::size_t>(w.cycle.vertices[t])]));
    check_by_linear_algebra(w);
  }

  TEST_CASE("padded_witness: repeated pair") {
    const Support s = sup("1 2; 1 2");
    const auto verdict = is_radical_support(s);
    REQUIRE(verdict.cycle);
    const auto w = padded_witness(s, *verdict.cycle, Field::prime(32003));
    CHECK(w.cycle.length() == 2);
    CHECK(w.verification.passed());
    check_by_linear_algebra(w);
  }

  TEST_CASE("padded_witness rejects cycles with repeated labels") {
    const Support s = sup("1 2; 1 2; 1 2");
    CHECK_THROWS_AS(padded_witness(s, LabeledCycle{{0, 1, 2}, {1, 1, 1}}, Field::rationals()), Error);
    CHECK_THROWS_AS(padded_witness(s, LabeledCycle{{0, 1}, {1, 3}}, Field::rationals()), Error);
  }

  TEST_CASE("padded witnesses on a corpus slice agree with linear algebra") {
    int checked = 0;
    for (const auto& s : exhaustive_corpus(3, 3)) {
      const auto verdict = is_radical_support(s);
      if (verdict.is_radical_support) continue;
      CAPTURE(s.to_text());
      const auto w = padded_witness(s, *verdict.cycle, Field::rationals());
      CHECK(w.verification.passed());
      if (++checked % 7 == 0) check_by_linear_algebra(w);
    }
    CHECK(checked > 0);
  }

  TEST_CASE("cs_certificate examples") {
    const auto c = cs_certificate(sup("1 2; 2 3"));
    const auto gens = c.e.gen_strings();
    CHECK(std::set<std::string>(gens.begin(), gens.end()) ==
          std::set<std::string>{"x[1,1]*x[1,2]", "x[1,1]*x[1,3]", "x[1,2]^2", "x[1,2]*x[1,3]"});
    CHECK(c.generator_count == 4);
    CHECK(c.expected_count == 4);
    CHECK(c.identity_holds);
    CHECK(c.valid());
    const IntPoly g12 = Z(3, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{1, 1, 0}, -1}});
    const IntPoly g23 = Z(3, {{{0, 1, 0}, 1}, {{0, 0, 1}, 1}, {{0, 1, 1}, -1}});
    CHECK(IntPoly::constant(3, 1) - oracle::taylor_naive(c.e) == g12 * g23);

    const auto one = cs_certificate(sup("1"));
    CHECK(one.e.to_string() == "(x[1,1])");
    CHECK(one.generator_count == 1);
    CHECK(one.k_ideal == Z(1, {{{1}, 1}}));

    CHECK_THROWS_AS(cs_certificate(sup("1 2; 2 3; 1 3")), Error);
  }

  TEST_CASE("generator count separates the triangle") {
    const RingSpec t = RingSpec::fine(3, Field::rationals());
    MonomialIdeal e = MonomialIdeal::unit(t);
    const Support tri = sup("1 2; 2 3; 1 3");
    for (const auto& a : tri.sets()) e = product(e, linear_ideal(t, a));
    CHECK(e.size() == 7);
  }

  TEST_CASE("regularization gadget on the p = 3 cycle") {
    const auto w = cycle_witness_ideal(3, Field::rationals());
    const Support s = sup("1 2; 2 3; 1 3");
    const auto g = regularization_gadget(w.ring, s, w.generators);
    CHECK(g.leading_coprime_squarefree);
    REQUIRE(g.gadget_gens.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(multidegree_of(g.gadget_gens[i]) == degree_of(g.extended, s[i]));
      // the leading term uses only new variables
      for (int v = 0; v < g.extended.num_vars(); ++v)
        if (g.leading[i][v] > 0) CHECK(g.extended.var(v).i > w.ring.m()[static_cast<std::size_t>(g.extended.var(v).j - 1)]);
    }
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b) CHECK(coprime(g.leading[a], g.leading[b]));
  }

  TEST_CASE("regularization gadget edge cases") {
    const Support s = sup("1 2; 2");
    const RingSpec ring(std::vector<int>{1, 1}, Field::rationals());
    const auto zero = regularization_gadget(ring, s, {Polynomial(ring), Polynomial(ring)});
    CHECK(zero.leading_coprime_squarefree);
    for (const auto& p : zero.gadget_gens) CHECK(p.size() == 1);

    const auto single = regularization_gadget(ring, sup("1 2"), {parse_polynomial(ring, "x[1,1]*x[1,2]")});
    REQUIRE(single.gadget_gens.size() == 1);
    CHECK(single.gadget_gens[0].to_string() == "x[1,1]*x[1,2] + x[2,1]*x[2,2]");

    CHECK_THROWS_AS(regularization_gadget(ring, sup("1 2"), {parse_polynomial(ring, "x[1,1]")}), Error);
    CHECK_THROWS_AS(regularization_gadget(ring, s, {Polynomial(ring)}), Error);
  }

  TEST_CASE("gadget leading terms on random inputs") {
    Rng rng(12);
    for (int trial = 0; trial < 30; ++trial) {
      const Support s = random_support(rng, 4, 3);
      const RingSpec ring(min_ring_dims(s), Field::prime(101));
      std::vector<Polynomial> gens;
      for (const auto& a : s.sets()) gens.push_back(random_form(ring, a, rng));
      CHECK(regularization_gadget(ring, s, gens).leading_coprime_squarefree);
    }
  }

  TEST_CASE("random trials on disjoint and single-set supports") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto t = random_support_trial(sup("1 2; 3; 4 5"), Field::prime(kDefaultPrime), seed);
      CHECK(t.brad.in_brad());
      CHECK(t.seed == seed);
      CHECK(t.m == std::vector<int>{1, 1, 1, 1, 1});
    }
    for (std::uint64_t seed = 0; seed < 10; ++seed)
      CHECK(random_support_trial(sup("1 2 3"), Field::prime(kDefaultPrime), seed, std::vector<int>{2, 2, 1}).brad.in_brad());
  }

  TEST_CASE("trials are reproducible from the seed") {
    const auto a = random_support_trial(sup("1 2; 2 3"), Field::prime(kDefaultPrime), 77);
    const auto b = random_support_trial(sup("1 2; 2 3"), Field::prime(kDefaultPrime), 77);
    CHECK(strings(a.generators) == strings(b.generators));
    CHECK(a.brad.initial == b.brad.initial);
    CHECK_THROWS_AS(random_support_trial(sup("1; 1"), Field::prime(kDefaultPrime), 1, std::vector<int>{1, 1}), Error);
  }

  TEST_CASE("the non-radical cycle generators never test into Brad") {
    const auto w = cycle_witness_ideal(3, Field::prime(kDefaultPrime));
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      Rng rng(seed);
      CHECK_FALSE(probabilistic_brad_initial(w.ring, w.generators, rng).in_brad());
    }
  }
}
