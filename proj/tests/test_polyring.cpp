#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "radsupp/coordinate_change.hpp"
#include "radsupp/groebner.hpp"

using namespace radsupp;

namespace {

const RingSpec kTriangle(std::vector<int>{2, 2, 2}, Field::rationals());

Polynomial P(const RingSpec& ring, const std::string& text) { return parse_polynomial(ring, text); }

std::vector<Polynomial> cycle3(const RingSpec& ring) {
  // x_q = x[1,q], y_q = x[2,q]
  return {P(ring, "x[1,2]*x[2,1] - x[1,1]*x[2,2]"), P(ring, "x[1,3]*x[2,2] - x[1,2]*x[2,3]"), P(ring, "x[2,1]*x[2,3]")};
}

std::set<std::string> as_strings(const GroebnerBasis& gb) {
  std::set<std::string> out;
  for (const auto& g : gb.generators()) out.insert(g.to_string());
  return out;
}

}  // namespace

TEST_SUITE("polyring") {
  TEST_CASE("prime field arithmetic") {
    const Field f = Field::prime(7);
    CHECK(f.normalize(Scalar(-1)) == 6);
    CHECK(f.normalize(Scalar(1, 2)) == 4);
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.inv(3) == 5);
    CHECK(f.div(1, 2) == 4);
    CHECK(f.tag() == "Fp(7)");
    CHECK_THROWS_AS(Field::prime(8), Error);
    CHECK_THROWS_AS(f.inv(0), Error);
    CHECK(Field::rationals().normalize(Scalar(2, 4)) == Scalar(1, 2));
  }

  TEST_CASE("field tags") {
    CHECK(Field::parse("QQ") == Field::rationals());
    CHECK(Field::parse("F2") == Field::prime(2));
    CHECK(Field::parse("Fp:32003") == Field::prime(32003));
    CHECK(Field::parse("Fp(5)") == Field::prime(5));
    CHECK_THROWS_AS(Field::parse("Fp:9"), Error);
    CHECK_THROWS_AS(Field::parse("RR"), Error);
  }

  TEST_CASE("rng is reproducible and bounded") {
    Rng a(42), b(42);
    for (int k = 0; k < 100; ++k) CHECK(a.next() == b.next());
    Rng c(3);
    for (int k = 0; k < 1000; ++k) {
      const auto x = c.below(7);
      CHECK(x < 7);
    }
    CHECK(Rng::derive(1, 2) != Rng::derive(1, 3));
    CHECK(Rng::derive(1, 2) == Rng::derive(1, 2));
    Rng d(9);
    for (int k = 0; k < 200; ++k) {
      const Scalar q = random_nonzero(Field::rationals(), d);
      CHECK(q != 0);
      CHECK(abs(q) <= 10);
      const Scalar p = random_nonzero(Field::prime(3), d);
      CHECK((p == 1 || p == 2));
    }
  }

  TEST_CASE("ring layout") {
    const RingSpec ring(std::vector<int>{2, 1, 3}, Field::rationals());
    CHECK(ring.num_vars() == 6);
    CHECK(ring.index(1, 1) == 0);
    CHECK(ring.index(1, 3) == 2);
    CHECK(ring.index(2, 1) == 3);
    CHECK(ring.index(3, 3) == 5);
    CHECK(ring.var(4) == VarIndex{2, 3});
    CHECK(ring.var_name(4) == "x[2,3]");
    CHECK_THROWS_AS(ring.index(2, 2), Error);
    CHECK_THROWS_AS(RingSpec(std::vector<int>{1, 0}, Field::rationals()), Error);
  }

  TEST_CASE("default order puts lower rows first") {
    const RingSpec ring(std::vector<int>{3}, Field::rationals());
    const auto order = TermOrder::degrevlex(ring);
    const Monomial x1 = Monomial::variable(3, ring.index(1, 1));
    const Monomial x2 = Monomial::variable(3, ring.index(2, 1));
    const Monomial x3 = Monomial::variable(3, ring.index(3, 1));
    CHECK(order.compare(x1, x2) > 0);
    CHECK(order.compare(x2, x3) > 0);
    CHECK(TermOrder::lex(ring).compare(x1 * x3, x2 * x2) > 0);
    CHECK(order.compare(x1 * x3, x2 * x2) < 0);
  }

  TEST_CASE("term orders are multiplicative") {
    const RingSpec ring(std::vector<int>{2, 2}, Field::rationals());
    Rng rng(5);
    for (const auto& order : {TermOrder::degrevlex(ring), TermOrder::lex(ring)}) {
      for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> a(4), b(4), c(4);
        for (int k = 0; k < 4; ++k) {
          a[static_cast<std::size_t>(k)] = static_cast<int>(rng.below(3));
          b[static_cast<std::size_t>(k)] = static_cast<int>(rng.below(3));
          c[static_cast<std::size_t>(k)] = static_cast<int>(rng.below(3));
        }
        const Monomial ma(a), mb(b), mc(c);
        CHECK(order.compare(ma, mb) == order.compare(ma * mc, mb * mc));
        CHECK(order.compare(ma * mc, ma) >= 0);
      }
    }
  }

  TEST_CASE("polynomial text round trip") {
    const Polynomial f = P(kTriangle, "3*x[1,1]*x[2,2] - x[1,2]^2");
    // terms print in descending default order
    CHECK(f.to_string() == "-x[1,2]^2 + 3*x[1,1]*x[2,2]");
    CHECK(P(kTriangle, f.to_string()) == f);
    CHECK(P(kTriangle, "-1/2*x[1,1] + 1/2*x[1,1]").is_zero());
    CHECK(P(kTriangle, "0").to_string() == "0");
    CHECK(P(kTriangle, "x[1,1]*x[1,1]") == P(kTriangle, "x[1,1]^2"));
    CHECK_THROWS_AS(P(kTriangle, "x[3,1]"), Error);
    CHECK_THROWS_AS(P(kTriangle, "x[1,1] +"), ParseError);
    CHECK_THROWS_AS(P(kTriangle, "y"), ParseError);
  }

  TEST_CASE("arithmetic") {
    const Polynomial a = P(kTriangle, "x[1,1] + x[2,1]");
    const Polynomial b = P(kTriangle, "x[1,1] - x[2,1]");
    CHECK(a * b == P(kTriangle, "x[1,1]^2 - x[2,1]^2"));
    CHECK(a.pow(2) == P(kTriangle, "x[1,1]^2 + 2*x[1,1]*x[2,1] + x[2,1]^2"));
    CHECK((a - a).is_zero());
    const RingSpec f2(std::vector<int>{2}, Field::prime(2));
    const Polynomial c = P(f2, "x[1,1] + x[2,1]");
    CHECK(c.pow(2) == P(f2, "x[1,1]^2 + x[2,1]^2"));
    CHECK(P(f2, "3*x[1,1]") == P(f2, "x[1,1]"));
  }

  TEST_CASE("multidegree_of examples") {
    const RingSpec ring(std::vector<int>{2, 1, 1}, Field::rationals());
    CHECK(multidegree_of(P(ring, "x[1,1]*x[1,2]")) == ZnDegree{1, 1, 0});
    CHECK(multidegree_of(P(ring, "x[1,1] + x[2,1]")) == ZnDegree{1, 0, 0});
    CHECK_FALSE(multidegree_of(P(ring, "x[1,1] + x[1,2]")));
    CHECK_FALSE(multidegree_of(Polynomial(ring)));
  }

  TEST_CASE("basis_of_component examples") {
    const RingSpec r21(std::vector<int>{2, 1}, Field::rationals());
    const auto b = basis_of_component(r21, Multidegree({1, 2}));
    REQUIRE(b.size() == 2);
    CHECK(to_string(r21, b[0]) == "x[1,1]*x[1,2]");
    CHECK(to_string(r21, b[1]) == "x[1,2]*x[2,1]");
    const RingSpec r111(std::vector<int>{1, 1, 1}, Field::rationals());
    const auto one = basis_of_component(r111, Multidegree({2}));
    REQUIRE(one.size() == 1);
    CHECK(to_string(r111, one[0]) == "x[1,2]");
    CHECK(basis_of_component(RingSpec(std::vector<int>{2, 2}, Field::rationals()), Multidegree({1, 2})).size() == 4);
  }

  TEST_CASE("random_form") {
    const RingSpec fine = RingSpec::fine(3, Field::rationals());
    Rng rng(1);
    const Polynomial f = random_form(fine, Multidegree({1, 3}), rng);
    CHECK(f.size() == 1);
    const RingSpec ring(std::vector<int>{2, 3, 1}, Field::prime(kDefaultPrime));
    for (int k = 0; k < 20; ++k) {
      const Polynomial g = random_form(ring, Multidegree({1, 2}), rng);
      CHECK(multidegree_of(g) == ZnDegree{1, 1, 0});
      CHECK(g.size() == 6);
    }
    Rng r1(77), r2(77);
    CHECK(random_form(ring, Multidegree({1, 2, 3}), r1).to_string() ==
          random_form(ring, Multidegree({1, 2, 3}), r2).to_string());
  }

  TEST_CASE("buchberger: coprime squarefree monomials are already a basis") {
    const RingSpec ring(std::vector<int>{2, 1, 1}, Field::rationals());
    const std::vector<Polynomial> gens{P(ring, "x[1,1]*x[1,2]"), P(ring, "x[2,1]*x[1,3]")};
    const GroebnerBasis gb = buchberger(ring, gens, TermOrder::degrevlex(ring));
    CHECK(as_strings(gb) == std::set<std::string>{"x[1,1]*x[1,2]", "x[1,3]*x[2,1]"});
    CHECK(squarefree_initial_certificate(gb));
    CHECK(initial_ideal(gb) == MonomialIdeal(ring, {gens[0].terms()[0].mono, gens[1].terms()[0].mono}));
  }

  TEST_CASE("buchberger: cycle ideal for p = 3") {
    BuchbergerStats stats;
    const GroebnerBasis gb = buchberger(kTriangle, cycle3(kTriangle), TermOrder::degrevlex(kTriangle), &stats);
    CHECK(as_strings(gb) == std::set<std::string>{"x[1,2]*x[2,1] - x[1,1]*x[2,2]", "x[1,3]*x[2,2] - x[1,2]*x[2,3]",
                                                  "x[2,1]*x[2,3]", "x[1,1]*x[2,2]*x[2,3]", "x[1,1]*x[1,2]*x[2,3]^2"});
    CHECK(stats.pairs_considered > 0);
    CHECK_FALSE(squarefree_initial_certificate(gb));
    CHECK(initial_ideal(gb).to_string() ==
          "(x[2,1]*x[2,3], x[1,3]*x[2,2], x[1,2]*x[2,1], x[1,1]*x[2,2]*x[2,3], x[1,1]*x[1,2]*x[2,3]^2)");
    // every basis element lies in the ideal (Macaulay-matrix oracle)
    for (const auto& g : gb.generators()) CHECK(oracle::in_ideal_linear_algebra(g, cycle3(kTriangle)));
  }

  TEST_CASE("buchberger: single polynomial and empty input") {
    const Polynomial f = P(kTriangle, "2*x[1,1]*x[2,2] + 4*x[1,2]*x[2,1]");
    const GroebnerBasis gb = buchberger({f}, TermOrder::degrevlex(kTriangle));
    REQUIRE(gb.generators().size() == 1);
    CHECK(gb.generators()[0] == f.monic(TermOrder::degrevlex(kTriangle)));
    CHECK(gb.generators()[0].leading_term(gb.order()).coeff == 1);
    CHECK(buchberger(kTriangle, {}, TermOrder::degrevlex(kTriangle)).generators().empty());
    CHECK_THROWS_AS(buchberger(std::vector<Polynomial>{}, TermOrder::degrevlex(kTriangle)), Error);
  }

  TEST_CASE("normal forms for the p = 3 cycle ideal") {
    const GroebnerBasis gb = buchberger(kTriangle, cycle3(kTriangle), TermOrder::degrevlex(kTriangle));
    const Polynomial w = P(kTriangle, "x[1,1]*x[1,2]*x[2,3]");
    CHECK_FALSE(normal_form(w, gb).is_zero());
    CHECK(normal_form(w * w, gb).is_zero());
    CHECK(normal_form(Polynomial(kTriangle), gb).is_zero());
    // the same verdicts from linear algebra
    CHECK_FALSE(oracle::in_ideal_linear_algebra(w, cycle3(kTriangle)));
    CHECK(oracle::in_ideal_linear_algebra(w * w, cycle3(kTriangle)));
  }

  TEST_CASE("reduced basis does not depend on input order") {
    const RingSpec ring(std::vector<int>{2, 2, 2}, Field::rationals());
    Rng rng(8);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Polynomial> gens;
      for (const auto& a : {Multidegree({1, 2}), Multidegree({2, 3}), Multidegree({1, 3})})
        gens.push_back(random_form(ring, a, rng));
      const auto order = TermOrder::degrevlex(ring);
      const auto base = as_strings(buchberger(ring, gens, order));
      std::vector<Polynomial> shuffled{gens[2], gens[0], gens[1]};
      CHECK(as_strings(buchberger(ring, shuffled, order)) == base);
      gens.push_back(gens[0] + gens[0]);
      CHECK(as_strings(buchberger(ring, gens, order)) == base);
    }
  }

  TEST_CASE("membership agrees with linear algebra") {
    const RingSpec ring(std::vector<int>{2, 2}, Field::rationals());
    Rng rng(21);
    for (int trial = 0; trial < 5; ++trial) {
      const std::vector<Polynomial> gens{random_form(ring, Multidegree({1, 2}), rng),
                                         random_form(ring, Multidegree({1, 2}), rng)};
      const GroebnerBasis gb = buchberger(ring, gens, TermOrder::degrevlex(ring));
      for (const auto& m : oracle::monomials_of_degree(ring.num_vars(), 3)) {
        const Polynomial f = Polynomial::from_monomial(ring, m);
        CHECK(is_member(f, gb) == oracle::in_ideal_linear_algebra(f, gens));
      }
      const Polynomial combo = gens[0] * P(ring, "x[1,1] - 3*x[2,2]") + gens[1] * P(ring, "x[2,1]");
      CHECK(is_member(combo, gb));
    }
  }

  TEST_CASE("basis elements of multigraded ideals are multigraded") {
    const RingSpec ring(std::vector<int>{2, 2, 1}, Field::prime(101));
    Rng rng(4);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Polynomial> gens;
      for (const auto& a : {Multidegree({1, 2}), Multidegree({2, 3}), Multidegree({1})})
        gens.push_back(random_form(ring, a, rng));
      const GroebnerBasis gb = buchberger(ring, gens, TermOrder::degrevlex(ring));
      for (const auto& g : gb.generators()) CHECK(multidegree_of(g).has_value());
    }
  }

  TEST_CASE("disjoint supports give the monic inputs as basis") {
    const RingSpec ring(std::vector<int>{3, 2, 2, 1}, Field::rationals());
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Polynomial> gens{random_form(ring, Multidegree({1, 3}), rng),
                                   random_form(ring, Multidegree({2}), rng),
                                   random_form(ring, Multidegree({4}), rng)};
      const auto order = TermOrder::degrevlex(ring);
      const GroebnerBasis gb = buchberger(ring, gens, order);
      std::set<std::string> monic;
      for (const auto& g : gens) monic.insert(g.monic(order).to_string());
      CHECK(as_strings(gb) == monic);
      CHECK(squarefree_initial_certificate(gb));
    }
  }

  TEST_CASE("squarefree certificate on small bases") {
    const RingSpec ring(std::vector<int>{2, 1, 1}, Field::rationals());
    CHECK_FALSE(squarefree_initial_certificate(buchberger({P(ring, "x[1,1]^2")}, TermOrder::degrevlex(ring))));
    const auto gb = buchberger({P(ring, "x[1,1] + x[2,1]")}, TermOrder::degrevlex(ring));
    CHECK(initial_ideal(gb).to_string() == "(x[1,1])");
  }

  TEST_CASE("cycle ideal basis has the same monomial support over several fields") {
    auto shape = [](const GroebnerBasis& gb) {
      std::set<std::string> out;
      for (const auto& g : gb.generators()) {
        std::string s;
        for (const auto& t : g.terms()) s += to_string(gb.ring(), t.mono) + " ";
        out.insert(s);
      }
      return out;
    };
    for (int p = 3; p <= 5; ++p) {
      std::set<std::string> reference;
      for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(kDefaultPrime)}) {
        const RingSpec ring(std::vector<int>(static_cast<std::size_t>(p), 2), f);
        std::vector<Polynomial> gens;
        for (int t = 1; t < p; ++t)
          gens.push_back(Polynomial::variable(ring, 1, t + 1) * Polynomial::variable(ring, 2, t) -
                         Polynomial::variable(ring, 1, t) * Polynomial::variable(ring, 2, t + 1));
        gens.push_back(Polynomial::variable(ring, 2, 1) * Polynomial::variable(ring, 2, p));
        const auto s = shape(buchberger(ring, gens, TermOrder::degrevlex(ring)));
        if (reference.empty()) reference = s;
        CHECK(s == reference);
      }
    }
  }

  TEST_CASE("coordinate changes") {
    const RingSpec ring(std::vector<int>{2, 1}, Field::rationals());
    const Polynomial f = P(ring, "x[1,1]*x[1,2] - 2*x[2,1]*x[1,2]");
    CHECK(CoordinateChange::identity(ring).apply(f) == f);

    const CoordinateChange g(ring, {{{1, 2}, {0, 1}}, {{3}}});
    // x[1,1] -> x[1,1], x[2,1] -> 2 x[1,1] + x[2,1], x[1,2] -> 3 x[1,2]
    CHECK(g.apply(P(ring, "x[2,1]")) == P(ring, "2*x[1,1] + x[2,1]"));
    CHECK(multidegree_of(g.apply(f)) == multidegree_of(f));

    Rng rng(3);
    const CoordinateChange a = CoordinateChange::random(ring, rng);
    const CoordinateChange b = CoordinateChange::random(ring, rng);
    CHECK(a.apply(b.apply(f)) == a.compose(b).apply(f));

    CHECK_THROWS_AS(CoordinateChange(ring, {{{1, 2}, {2, 4}}, {{1}}}), Error);
    CHECK_THROWS_AS(CoordinateChange(ring, {{{1}}, {{1}}}), Error);
    CHECK_THROWS_AS(CoordinateChange(ring, {{{1, 0}, {0, 1}}, {{0}}}), Error);
  }

  TEST_CASE("random changes preserve multidegree over a prime field") {
    const RingSpec ring(std::vector<int>{3, 2}, Field::prime(kDefaultPrime));
    Rng rng(10);
    for (int trial = 0; trial < 10; ++trial) {
      const Polynomial f = random_form(ring, Multidegree({1, 2}), rng);
      const CoordinateChange g = CoordinateChange::random(ring, rng);
      CHECK(multidegree_of(g.apply(f)) == multidegree_of(f));
    }
  }

  TEST_CASE("probabilistic Brad test") {
    const RingSpec ring(std::vector<int>{2, 2}, Field::prime(kDefaultPrime));
    Rng rng(99);
    for (int trial = 0; trial < 5; ++trial) {
      const Polynomial f = random_form(ring, Multidegree({1, 2}), rng);
      const BradTrial t = probabilistic_brad_initial(ring, {f}, rng);
      CHECK(t.in_brad());
      CHECK(t.attempts.size() >= 1);
    }

    // a monomial ideal in Brad stays there under the identity
    const RingSpec r2(std::vector<int>{2, 1}, Field::prime(kDefaultPrime));
    const MonomialIdeal j(r2, {Monomial::variable(3, r2.index(1, 1)) * Monomial::variable(3, r2.index(1, 2))});
    CHECK(in_brad(initial_ideal(buchberger({P(r2, "x[1,1]*x[1,2]")}, TermOrder::degrevlex(r2)))));
    CHECK(in_brad(j));

    const RingSpec tri(std::vector<int>{2, 2, 2}, Field::prime(kDefaultPrime));
    for (int seed = 0; seed < 5; ++seed) {
      Rng r(static_cast<std::uint64_t>(seed));
      const BradTrial t = probabilistic_brad_initial(tri, cycle3(tri), r);
      CHECK(t.status == BradStatus::Indeterminate);
      CHECK(t.attempts.size() == static_cast<std::size_t>(kDefaultRetries));
    }

    CHECK_THROWS_AS(probabilistic_brad_initial(ring, {P(ring, "x[1,1] + x[1,2]")}, rng), Error);
    CHECK_THROWS_AS(probabilistic_brad_initial(ring, {}, rng, 0), Error);
  }
}
