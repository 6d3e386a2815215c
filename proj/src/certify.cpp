#include "radsupp/certify.hpp"

#include <algorithm>
#include <set>

namespace radsupp {

WitnessVerification verify_witness(const RingSpec& ring, const TermOrder& order,
                                   const std::vector<Polynomial>& generators, const Monomial& witness) {
  const GroebnerBasis gb = buchberger(ring, generators, order);
  const Polynomial w = Polynomial::from_monomial(ring, witness);
  const Polynomial nf = normal_form(w, gb);
  WitnessVerification out;
  out.field = ring.field().tag();
  out.order = order.describe(ring);
  for (const auto& g : gb.generators()) out.groebner_basis.push_back(g.to_string());
  out.witness_normal_form = nf.to_string();
  out.witness_outside = !nf.is_zero();
  out.square_inside = normal_form(w * w, gb).is_zero();
  return out;
}

namespace {

/// Builds the (possibly padded) cycle ideal. `label_of[q-1]` is the grading
/// index used for x_q, y_q; `pad[t]` lists padding labels for generator t.
NonRadicalWitness build_cycle_witness(const RingSpec& ring, const std::vector<int>& label_of,
                                      const std::vector<std::vector<int>>& pad, const std::vector<int>& padding) {
  const int p = static_cast<int>(label_of.size());
  const int nv = ring.num_vars();
  auto x = [&](int q) { return ring.index(1, label_of[static_cast<std::size_t>(q - 1)]); };
  auto y = [&](int q) { return ring.index(2, label_of[static_cast<std::size_t>(q - 1)]); };
  auto var = [&](int flat) { return Monomial::variable(nv, flat); };

  std::vector<Polynomial> gens;
  for (int t = 1; t <= p; ++t) {
    std::vector<Term> terms;
    if (t < p) {
      terms.push_back({var(x(t + 1)) * var(y(t)), Scalar(1)});
      terms.push_back({var(x(t)) * var(y(t + 1)), Scalar(-1)});
    } else {
      terms.push_back({var(y(1)) * var(y(p)), Scalar(1)});
    }
    Monomial padding_factor = Monomial::one(nv);
    for (int u : pad[static_cast<std::size_t>(t - 1)]) padding_factor = padding_factor * var(ring.index(1, u));
    for (auto& term : terms) term.mono = term.mono * padding_factor;
    gens.emplace_back(ring, std::move(terms));
  }

  Monomial w = var(y(p));
  for (int q = 1; q < p; ++q) w = w * var(x(q));
  for (int u : padding) w = w * var(ring.index(1, u));

  // x_1 > ... > x_p > y_1 > ... > y_p > padding > everything else
  std::vector<int> ranking;
  for (int q = 1; q <= p; ++q) ranking.push_back(x(q));
  for (int q = 1; q <= p; ++q) ranking.push_back(y(q));
  for (int u : padding) ranking.push_back(ring.index(1, u));
  for (int v = 0; v < nv; ++v)
    if (std::find(ranking.begin(), ranking.end(), v) == ranking.end()) ranking.push_back(v);
  TermOrder order = TermOrder::with_ranking(TermOrder::Kind::DegRevLex, std::move(ranking));

  NonRadicalWitness out{std::nullopt, ring, order, {}, label_of, padding, gens, {}, w, {}};
  for (const auto& g : gens) {
    const auto d = multidegree_of(g);
    std::vector<int> members;
    for (std::size_t j = 0; j < d->size(); ++j)
      if ((*d)[j]) members.push_back(static_cast<int>(j + 1));
    out.degrees.emplace_back(std::move(members));
  }
  out.verification = verify_witness(ring, order, gens, w);
  return out;
}

}  // namespace

NonRadicalWitness cycle_witness_ideal(int p, const Field& field) {
  if (p < 2) throw Error("cycle witness needs p >= 2");
  RingSpec ring(std::vector<int>(static_cast<std::size_t>(p), 2), field);
  std::vector<int> labels(static_cast<std::size_t>(p));
  for (int q = 1; q <= p; ++q) labels[static_cast<std::size_t>(q - 1)] = q;
  NonRadicalWitness w =
      build_cycle_witness(ring, labels, std::vector<std::vector<int>>(static_cast<std::size_t>(p)), {});
  // the bare cycle: vertex t carries {t, t+1}, vertex p carries {1, p}
  for (int t = 0; t < p; ++t) {
    w.cycle.vertices.push_back(t);
    w.cycle.labels.push_back(t + 2 <= p ? t + 2 : 1);
  }
  if (!w.verification.passed()) throw Error("cycle witness failed verification (implementation bug)");
  return w;
}

NonRadicalWitness padded_witness(const Support& support, const LabeledCycle& cycle, const Field& field) {
  const LabeledMultigraph graph = build_graph(support);
  if (!cycle.is_cycle_of(graph)) throw Error("padded_witness: not a cycle of the support graph");
  if (!cycle.has_distinct_labels()) throw Error("padded_witness: cycle labels must be distinct");

  // Shortcut chords first so no vertex carries a foreign cycle label;
  // otherwise generator degrees could not match A_{v_t}.
  const LabeledCycle tight = tighten_cycle(support, cycle);
  const std::size_t p = tight.length();

  // index q (1-based) sits between vertices v_{q-1} and v_q: q = 1 <-> j_p, q >= 2 <-> j_{q-1}
  std::vector<int> label_of(p);
  label_of[0] = tight.labels[p - 1];
  for (std::size_t q = 2; q <= p; ++q) label_of[q - 1] = tight.labels[q - 2];

  std::set<int> cycle_labels(label_of.begin(), label_of.end());
  std::set<int> padding_set;
  for (int v : tight.vertices)
    for (int j : support[static_cast<std::size_t>(v)].members())
      if (!cycle_labels.count(j)) padding_set.insert(j);
  const std::vector<int> padding(padding_set.begin(), padding_set.end());

  std::vector<std::vector<int>> pad(p);
  for (std::size_t t = 0; t < p; ++t)
    for (int u : padding)
      if (support[static_cast<std::size_t>(tight.vertices[t])].contains(u)) pad[t].push_back(u);

  std::vector<int> m(static_cast<std::size_t>(support.n()), 1);
  for (int j : cycle_labels) m[static_cast<std::size_t>(j - 1)] = 2;
  RingSpec ring(m, field);

  NonRadicalWitness w = build_cycle_witness(ring, label_of, pad, padding);
  w.support = support;
  w.cycle = tight;
  for (std::size_t t = 0; t < p; ++t)
    if (w.degrees[t] != support[static_cast<std::size_t>(tight.vertices[t])])
      throw Error("padded_witness: generator degree does not match its multidegree (implementation bug)");
  if (!w.verification.passed()) throw Error("padded_witness: verification failed (implementation bug)");
  return w;
}

// ---------------------------------------------------------------------------

IntPoly k_poly_of_support(const Support& support) {
  const int n = support.n();
  IntPoly k = IntPoly::constant(n, 1);
  for (const auto& a : support.sets()) {
    IntPoly factor = IntPoly::constant(n, 1);
    IntPoly::Exponents e(static_cast<std::size_t>(n), 0);
    for (int j : a.members()) e[static_cast<std::size_t>(j - 1)] = 1;
    factor.add_term(e, -1);
    k = k * factor;
  }
  return k;
}

IntPoly dual_k_poly_of_support(const Support& support) {
  const int n = support.n();
  IntPoly k = IntPoly::constant(n, 1);
  for (const auto& a : support.sets()) {
    // G_v = sum over nonempty B subset of A_v of (-1)^{|B|+1} z^B
    IntPoly g(n);
    const auto& mem = a.members();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << mem.size()); ++mask) {
      IntPoly::Exponents e(static_cast<std::size_t>(n), 0);
      int bits = 0;
      for (std::size_t t = 0; t < mem.size(); ++t)
        if (mask >> t & 1) {
          e[static_cast<std::size_t>(mem[t] - 1)] = 1;
          ++bits;
        }
      g.add_term(e, bits % 2 ? 1 : -1);
    }
    k = k * g;
  }
  return k;
}

CountingConditionError::CountingConditionError(int label, int occurrences, int mj)
    : Error("label " + std::to_string(label) + " occurs in " + std::to_string(occurrences) +
            " multidegrees but m_" + std::to_string(label) + " = " + std::to_string(mj)),
      label_(label) {}

RegularSequenceCert regular_sequence(const Support& support, const std::vector<int>& m) {
  if (static_cast<int>(m.size()) != support.n()) throw Error("m must have length n");
  std::vector<int> count(m.size(), 0);
  for (const auto& a : support.sets())
    for (int j : a.members()) ++count[static_cast<std::size_t>(j - 1)];
  for (std::size_t j = 0; j < m.size(); ++j)
    if (count[j] > m[j]) throw CountingConditionError(static_cast<int>(j + 1), count[j], m[j]);

  RingSpec ring(m, Field::rationals());
  RegularSequenceCert cert{support, ring, {}, support.sets()};
  std::vector<int> seen(m.size(), 0);
  for (const auto& a : support.sets()) {
    Monomial f = Monomial::one(ring.num_vars());
    for (int j : a.members()) {
      const int k = ++seen[static_cast<std::size_t>(j - 1)];
      f = f * Monomial::variable(ring.num_vars(), ring.index(k, j));
    }
    cert.monomials.push_back(std::move(f));
  }

  cert.squarefree = std::all_of(cert.monomials.begin(), cert.monomials.end(),
                                [](const Monomial& f) { return f.is_squarefree(); });
  cert.pairwise_coprime = true;
  for (std::size_t a = 0; a < cert.monomials.size(); ++a)
    for (std::size_t b = a + 1; b < cert.monomials.size(); ++b)
      cert.pairwise_coprime = cert.pairwise_coprime && coprime(cert.monomials[a], cert.monomials[b]);
  cert.degrees_match = true;
  for (std::size_t v = 0; v < cert.monomials.size(); ++v)
    cert.degrees_match = cert.degrees_match && multidegree(ring, cert.monomials[v]) == degree_of(ring, support[v]);
  return cert;
}

CSCertificate cs_certificate(const Support& support) {
  const SupportVerdict verdict = is_radical_support(support);
  if (!verdict.is_radical_support) throw Error("support is not a radical support; no Cartwright-Sturmfels certificate");

  const int n = support.n();
  const RingSpec t = RingSpec::fine(n, Field::rationals());
  MonomialIdeal e = MonomialIdeal::unit(t);
  std::size_t expected = 1;
  for (const auto& a : support.sets()) {
    e = product(e, linear_ideal(t, a));
    expected *= a.size();
  }

  const std::vector<int> bound = min_ring_dims(support);
  bool bounded = true;
  for (const auto& g : e.gens())
    for (int j = 1; j <= n; ++j) bounded = bounded && g[t.index(1, j)] <= bound[static_cast<std::size_t>(j - 1)];

  IntPoly k_support = k_poly_of_support(support);
  IntPoly k_dual = dual_k_poly_of_support(support);
  IntPoly k_ideal = kpoly_ideal(e);
  const bool taylor = kpoly_quotient(e) == kpoly_quotient_taylor(e);

  CSCertificate cert{support, e, e.size(), expected, k_support, k_dual, k_ideal};
  cert.dual_matches = dualize(cert.k_support) == cert.k_dual_support;
  cert.identity_holds = cert.k_ideal == cert.k_dual_support;
  cert.taylor_agrees = taylor;
  cert.exponent_bound_holds = bounded;
  return cert;
}

// ---------------------------------------------------------------------------

GadgetResult regularization_gadget(const RingSpec& ring, const Support& support, const std::vector<Polynomial>& gens) {
  if (gens.size() != support.size()) throw Error("gadget needs one generator per multidegree");
  if (ring.n() != support.n()) throw Error("gadget: ring and support disagree on n");
  for (std::size_t v = 0; v < gens.size(); ++v) {
    if (!(gens[v].ring() == ring)) throw Error("gadget: generator lives in a different ring");
    if (gens[v].is_zero()) continue;
    const auto d = multidegree_of(gens[v]);
    if (!d || *d != degree_of(ring, support[v]))
      throw Error("gadget: generator " + std::to_string(v + 1) + " does not have multidegree {" +
                  Support(support.n(), {support[v]}).to_text() + "}");
  }

  std::vector<int> extra(static_cast<std::size_t>(ring.n()), 0);
  for (const auto& a : support.sets())
    for (int j : a.members()) ++extra[static_cast<std::size_t>(j - 1)];
  std::vector<int> m2 = ring.m();
  for (std::size_t j = 0; j < m2.size(); ++j) m2[j] += extra[j];
  RingSpec big(m2, ring.field());

  auto embed = [&](const Polynomial& f) {
    std::vector<Term> terms;
    for (const auto& term : f.terms()) {
      Monomial mono = Monomial::one(big.num_vars());
      for (int v = 0; v < ring.num_vars(); ++v)
        if (term.mono[v]) {
          const auto [i, j] = ring.var(v);
          mono = mono * Monomial::variable(big.num_vars(), big.index(i, j), term.mono[v]);
        }
      terms.push_back({std::move(mono), term.coeff});
    }
    return Polynomial(big, std::move(terms));
  };

  std::vector<int> ranking;
  std::vector<int> used(static_cast<std::size_t>(ring.n()), 0);
  GadgetResult out{big, TermOrder::lex(big), {}, {}};
  for (std::size_t v = 0; v < gens.size(); ++v) {
    Monomial t_product = Monomial::one(big.num_vars());
    for (int j : support[v].members()) {
      const int row = ring.m()[static_cast<std::size_t>(j - 1)] + ++used[static_cast<std::size_t>(j - 1)];
      const int flat = big.index(row, j);
      ranking.push_back(flat);
      t_product = t_product * Monomial::variable(big.num_vars(), flat);
    }
    out.gadget_gens.push_back(embed(gens[v]) + Polynomial::from_monomial(big, t_product));
  }
  for (int v = 0; v < big.num_vars(); ++v)
    if (std::find(ranking.begin(), ranking.end(), v) == ranking.end()) ranking.push_back(v);
  out.order = TermOrder::with_ranking(TermOrder::Kind::Lex, std::move(ranking));

  for (const auto& g : out.gadget_gens) out.leading.push_back(g.leading_term(out.order).mono);
  bool ok = std::all_of(out.leading.begin(), out.leading.end(), [](const Monomial& l) { return l.is_squarefree(); });
  for (std::size_t a = 0; a < out.leading.size(); ++a)
    for (std::size_t b = a + 1; b < out.leading.size(); ++b) ok = ok && coprime(out.leading[a], out.leading[b]);
  out.leading_coprime_squarefree = ok;
  return out;
}

SupportTrial random_support_trial(const Support& support, const Field& field, std::uint64_t seed,
                                  std::optional<std::vector<int>> m, int retries) {
  std::vector<int> dims = m.value_or(min_ring_dims(support));
  if (dims.size() != static_cast<std::size_t>(support.n()))
    throw Error("m has " + std::to_string(dims.size()) + " entries but the support has n = " + std::to_string(support.n()));
  RingSpec ring(dims, field);
  Rng rng(seed);
  std::vector<Polynomial> gens;
  for (const auto& a : support.sets()) gens.push_back(random_form(ring, a, rng));
  BradTrial brad = probabilistic_brad_initial(ring, gens, rng, retries);
  return SupportTrial{support, dims, field.tag(), seed, retries, std::move(gens), std::move(brad)};
}

}  // namespace radsupp
