#include "radsupp/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <set>

#include "radsupp/certify.hpp"
#include "radsupp/groebner.hpp"
#include "radsupp/monomial_ideal.hpp"

namespace radsupp {

std::vector<Support> exhaustive_corpus(int max_s, int n) {
  if (max_s < 1 || n < 1 || n > 16) throw Error("corpus bounds out of range");
  std::vector<Multidegree> subsets;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> members;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1) members.push_back(j + 1);
    subsets.emplace_back(std::move(members));
  }
  std::vector<Support> out;
  const int count = static_cast<int>(subsets.size());
  for (int s = 1; s <= max_s; ++s) {
    std::vector<int> idx(static_cast<std::size_t>(s), 0);
    while (true) {
      std::vector<Multidegree> sets;
      for (int i : idx) sets.push_back(subsets[static_cast<std::size_t>(i)]);
      out.emplace_back(n, std::move(sets));
      int pos = s - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == count - 1) --pos;
      if (pos < 0) break;
      const int next = idx[static_cast<std::size_t>(pos)] + 1;
      for (int k = pos; k < s; ++k) idx[static_cast<std::size_t>(k)] = next;
    }
  }
  return out;
}

namespace {

Multidegree random_subset(Rng& rng, int n) {
  const auto mask = rng.below((std::uint64_t{1} << n) - 1) + 1;
  std::vector<int> members;
  for (int j = 0; j < n; ++j)
    if (mask >> j & 1) members.push_back(j + 1);
  return Multidegree(std::move(members));
}

}  // namespace

Support random_support(Rng& rng, int max_s, int n) {
  const auto s = static_cast<int>(rng.between(1, max_s));
  std::vector<Multidegree> sets;
  for (int v = 0; v < s; ++v) sets.push_back(random_subset(rng, n));
  return Support(n, std::move(sets));
}

Support random_radical_support(Rng& rng, int max_s, int n) {
  const auto s = static_cast<int>(rng.between(1, max_s));
  std::vector<Multidegree> sets;
  for (int v = 0; v < s; ++v) {
    bool placed = false;
    for (int attempt = 0; attempt < 20 && !placed; ++attempt) {
      sets.push_back(random_subset(rng, n));
      placed = is_radical_support(Support(n, sets)).is_radical_support;
      if (!placed) sets.pop_back();
    }
    // a singleton never closes a cycle
    if (!placed) sets.push_back(Multidegree({static_cast<int>(rng.between(1, n))}));
  }
  return Support(n, std::move(sets));
}

void for_each_case(std::size_t count, const std::function<void(std::size_t)>& kernel, Exec exec) {
  std::vector<std::exception_ptr> errors(count);
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < count; ++i) {
      try {
        kernel(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) {
      try {
        kernel(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<std::optional<std::string>> check_cases(std::size_t count,
                                                    const std::function<std::optional<std::string>(std::size_t)>& kernel,
                                                    Exec exec) {
  std::vector<std::optional<std::string>> out(count);
  for_each_case(
      count,
      [&](std::size_t i) {
        try {
          out[i] = kernel(i);
        } catch (const std::exception& e) {
          out[i] = std::string("exception: ") + e.what();
        }
      },
      exec);
  return out;
}

// ---------------------------------------------------------------------------
// Suites

namespace {

using Fail = std::optional<std::string>;

std::string show(const Support& s) { return "{" + s.to_text() + "} n=" + std::to_string(s.n()); }

bool has_distinct_cycle(const std::vector<LabeledCycle>& cycles) {
  return std::any_of(cycles.begin(), cycles.end(), [](const LabeledCycle& c) { return c.has_distinct_labels(); });
}

Fail oracle_case(const Support& s) {
  const SupportVerdict v = is_radical_support(s);
  const auto cycles = enumerate_cycles(build_graph(s), std::max<int>(2, static_cast<int>(s.size())));
  if (v.is_radical_support == has_distinct_cycle(cycles)) return "forest test disagrees with enumeration on " + show(s);
  if (v.cycle && (!v.cycle->has_distinct_labels() || !v.cycle->is_cycle_of(build_graph(s))))
    return "returned cycle is invalid on " + show(s);
  return std::nullopt;
}

Fail distinct_case(const Support& s) {
  const auto cycles = enumerate_cycles(build_graph(s), std::max<int>(2, static_cast<int>(s.size())));
  const bool nonconstant =
      std::any_of(cycles.begin(), cycles.end(), [](const LabeledCycle& c) { return !c.has_constant_labels(); });
  if (nonconstant != has_distinct_cycle(cycles)) return "distinct/non-constant mismatch on " + show(s);
  const LabeledMultigraph g = build_graph(s);
  for (const auto& c : cycles) {
    if (c.has_constant_labels()) continue;
    const LabeledCycle r = reduce_to_distinct_labels(g, c);
    if (!r.has_distinct_labels() || !r.is_cycle_of(g) || r.length() > c.length())
      return "shortcut produced an invalid cycle on " + show(s);
  }
  return std::nullopt;
}

Fail monotone_case(const Support& s) {
  if (!is_radical_support(s).is_radical_support || s.size() < 2) return std::nullopt;
  for (std::size_t drop = 0; drop < s.size(); ++drop) {
    std::vector<std::size_t> keep;
    for (std::size_t v = 0; v < s.size(); ++v)
      if (v != drop) keep.push_back(v);
    if (!is_radical_support(s.select(keep)).is_radical_support) return "sub-collection fails for " + show(s);
  }
  return std::nullopt;
}

MonomialIdeal product_ideal(const Support& s) {
  const RingSpec t = RingSpec::fine(s.n(), Field::rationals());
  MonomialIdeal e = MonomialIdeal::unit(t);
  for (const auto& a : s.sets()) e = product(e, linear_ideal(t, a));
  return e;
}

Fail count_case(const Support& s) {
  std::size_t expected = 1;
  for (const auto& a : s.sets()) expected *= a.size();
  const bool equal = product_ideal(s).size() == expected;
  if (equal != is_radical_support(s).is_radical_support) return "generator count disagrees with verdict on " + show(s);
  return std::nullopt;
}

Fail kidentity_case(const Support& s) {
  if (!is_radical_support(s).is_radical_support) return std::nullopt;
  const CSCertificate cert = cs_certificate(s);
  if (!cert.valid()) return "certificate check failed on " + show(s);
  return std::nullopt;
}

Fail witness_case(const Support& s) {
  const SupportVerdict v = is_radical_support(s);
  if (v.is_radical_support) return std::nullopt;
  for (const Field& f : {Field::rationals(), Field::prime(2)}) {
    const NonRadicalWitness w = padded_witness(s, *v.cycle, f);
    if (!w.verification.passed()) return "witness fails over " + f.tag() + " on " + show(s);
    for (std::size_t t = 0; t < w.degrees.size(); ++t)
      if (w.degrees[t] != s[static_cast<std::size_t>(w.cycle.vertices[t])])
        return "witness degree mismatch on " + show(s);
  }
  return std::nullopt;
}

Fail regseq_case(const Support& s) {
  const RegularSequenceCert cert = regular_sequence(s, min_ring_dims(s));
  if (!cert.valid()) return "regular sequence check failed on " + show(s);
  if (kpoly_quotient(MonomialIdeal(cert.ring, cert.monomials)) != k_poly_of_support(s))
    return "K-polynomial of the regular sequence differs on " + show(s);
  return std::nullopt;
}

Fail brad_case(const Support& s, std::uint64_t seed) {
  const SupportTrial t = random_support_trial(s, Field::prime(kDefaultPrime), seed);
  if (!t.brad.in_brad()) return "indeterminate trial, seed " + std::to_string(seed) + " on " + show(s);
  return std::nullopt;
}

Fail gadget_case(const Support& s, std::uint64_t seed) {
  Rng rng(seed);
  const RingSpec ring(min_ring_dims(s), Field::rationals());
  std::vector<Polynomial> gens;
  for (const auto& a : s.sets())
    gens.push_back(rng.below(4) == 0 ? Polynomial(ring) : random_form(ring, a, rng));
  if (!regularization_gadget(ring, s, gens).leading_coprime_squarefree)
    return "gadget leading terms not coprime squarefree, seed " + std::to_string(seed) + " on " + show(s);
  return std::nullopt;
}

Fail facile_case(int n, std::uint64_t seed) {
  Rng rng(seed);
  // random partition of a random subset of [n]
  std::vector<std::vector<int>> blocks;
  for (int j = 1; j <= n; ++j) {
    const auto slot = rng.below(blocks.size() + 2);
    if (slot == 0) continue;
    if (slot == blocks.size() + 1)
      blocks.push_back({j});
    else
      blocks[slot - 1].push_back(j);
  }
  if (blocks.empty()) blocks.push_back({1});
  std::vector<Multidegree> sets;
  for (auto& b : blocks) sets.emplace_back(b);
  const Support s(n, std::move(sets));
  const RingSpec ring(std::vector<int>(static_cast<std::size_t>(n), 3), Field::rationals());
  std::vector<Polynomial> gens;
  for (const auto& a : s.sets()) gens.push_back(random_form(ring, a, rng));
  const GroebnerBasis gb = buchberger(ring, gens, TermOrder::degrevlex(ring));
  const auto lms = gb.leading_monomials();
  bool coprime_all = true;
  for (std::size_t a = 0; a < lms.size(); ++a)
    for (std::size_t b = a + 1; b < lms.size(); ++b) coprime_all = coprime_all && coprime(lms[a], lms[b]);
  if (gb.generators().size() != s.size() || !squarefree_initial_certificate(gb) || !coprime_all)
    return "disjoint support basis is not the monic input, seed " + std::to_string(seed);
  return std::nullopt;
}

/// Expected reduced basis of the cycle ideal: its generators plus
/// (x_1 y_p) x_2...x_{k-1} y_k for k = 2..p.
std::set<std::string> expected_cycle_basis(const NonRadicalWitness& w, int p) {
  std::set<std::string> out;
  for (const auto& g : w.generators) out.insert(g.monic(w.order).to_string());
  const RingSpec& ring = w.ring;
  auto var = [&](int i, int j) { return Monomial::variable(ring.num_vars(), ring.index(i, j)); };
  for (int k = 2; k <= p; ++k) {
    Monomial m = var(1, 1) * var(2, p) * var(2, k);
    for (int q = 2; q < k; ++q) m = m * var(1, q);
    out.insert(Polynomial::from_monomial(ring, m).to_string());
  }
  return out;
}

Fail cycle_gb_case(int p, const Field& f) {
  const NonRadicalWitness w = cycle_witness_ideal(p, f);
  const std::set<std::string> expected = expected_cycle_basis(w, p);
  const std::set<std::string> got(w.verification.groebner_basis.begin(), w.verification.groebner_basis.end());
  if (got != expected) return "cycle ideal basis differs for p=" + std::to_string(p) + " over " + f.tag();
  if (!w.verification.passed()) return "cycle witness fails for p=" + std::to_string(p);
  return std::nullopt;
}

/// Every monomial ideal of K[y_1, y_2] with generator exponents <= 2.
std::vector<MonomialIdeal> small_plane_ideals() {
  const RingSpec t = RingSpec::fine(2, Field::rationals());
  std::vector<Monomial> pool;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) pool.push_back(Monomial({a, b}));
  std::set<std::vector<std::string>> seen;
  std::vector<MonomialIdeal> out;
  for (int mask = 0; mask < (1 << pool.size()); ++mask) {
    std::vector<Monomial> gens;
    for (std::size_t k = 0; k < pool.size(); ++k)
      if (mask >> k & 1) gens.push_back(pool[k]);
    MonomialIdeal e(t, gens);
    if (seen.insert(e.gen_strings()).second) out.push_back(std::move(e));
  }
  return out;
}

Fail jande_case(const MonomialIdeal& e) {
  const std::vector<int> m{2, 2};
  const MonomialIdeal j = psi(e, m);
  if (dualize(kpoly_quotient(j)) != kpoly_ideal(e)) return "K-polynomial correspondence fails for E=" + e.to_string();
  if (!in_brad(j)) return "psi(E) not in Brad for E=" + e.to_string();
  return std::nullopt;
}

// FNV-1a, so suite seeds do not depend on the standard library.
std::uint64_t name_hash(const std::string& name) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : name) h = (h ^ c) * 1099511628211ull;
  return h;
}

SuiteResult collect(std::string name, const std::vector<Fail>& fails, double seconds) {
  SuiteResult r;
  r.name = std::move(name);
  r.cases = fails.size();
  r.seconds = seconds;
  for (const auto& f : fails)
    if (f) {
      ++r.failures;
      if (r.counterexamples.size() < 5) r.counterexamples.push_back(*f);
    }
  return r;
}

}  // namespace

std::vector<std::string> selftest_suite_names() {
  return {"oracle-equivalence", "distinct-iff-nonconstant", "subcollection-monotonicity", "generator-count",
          "k-identity",         "witness-validity",         "cycle-basis",                "jande-plane",
          "regular-sequence",   "brad-trials",              "gadget",                     "disjoint-supports"};
}

SuiteResult run_suite(const std::string& name, const SelftestConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Fail> fails;
  const int rand_s = config.max_s + 1;
  const int rand_n = config.max_n + 2;
  auto seed_of = [&](std::size_t i) { return Rng::derive(Rng::derive(config.seed, name_hash(name)), i); };

  auto over_corpus = [&](Fail (*kernel)(const Support&)) {
    const auto corpus = exhaustive_corpus(config.max_s, config.max_n);
    return check_cases(corpus.size(), [&](std::size_t i) { return kernel(corpus[i]); }, config.exec);
  };

  if (name == "oracle-equivalence") {
    fails = over_corpus(oracle_case);
  } else if (name == "distinct-iff-nonconstant") {
    fails = over_corpus(distinct_case);
  } else if (name == "subcollection-monotonicity") {
    fails = over_corpus(monotone_case);
  } else if (name == "generator-count") {
    fails = over_corpus(count_case);
  } else if (name == "k-identity") {
    fails = over_corpus(kidentity_case);
  } else if (name == "witness-validity") {
    fails = over_corpus(witness_case);
  } else if (name == "cycle-basis") {
    const std::vector<Field> fields{Field::rationals(), Field::prime(2), Field::prime(kDefaultPrime)};
    fails = check_cases(
        4 * fields.size(), [&](std::size_t i) { return cycle_gb_case(static_cast<int>(i / fields.size()) + 2, fields[i % fields.size()]); },
        config.exec);
  } else if (name == "jande-plane") {
    const auto ideals = small_plane_ideals();
    fails = check_cases(ideals.size(), [&](std::size_t i) { return jande_case(ideals[i]); }, config.exec);
  } else if (name == "regular-sequence") {
    fails = check_cases(
        static_cast<std::size_t>(config.trials),
        [&](std::size_t i) {
          Rng rng(seed_of(i));
          return regseq_case(random_support(rng, rand_s, rand_n));
        },
        config.exec);
  } else if (name == "brad-trials") {
    fails = check_cases(
        static_cast<std::size_t>(config.trials),
        [&](std::size_t i) {
          Rng rng(seed_of(i));
          const Support s = random_radical_support(rng, rand_s, rand_n);
          return brad_case(s, rng.next());
        },
        config.exec);
  } else if (name == "gadget") {
    fails = check_cases(
        static_cast<std::size_t>(config.trials),
        [&](std::size_t i) {
          Rng rng(seed_of(i));
          const Support s = random_support(rng, config.max_s, config.max_n);
          return gadget_case(s, rng.next());
        },
        config.exec);
  } else if (name == "disjoint-supports") {
    fails = check_cases(
        static_cast<std::size_t>(config.trials), [&](std::size_t i) { return facile_case(config.max_n, seed_of(i)); },
        config.exec);
  } else {
    throw Error("unknown suite: " + name);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return collect(name, fails, seconds);
}

std::vector<SuiteResult> run_selftest(const SelftestConfig& config) {
  if (config.max_s < 1 || config.max_n < 1) throw Error("--max-s and --max-n must be positive");
  if (config.max_n > 6 || config.max_s > 6) throw Error("corpus bounds above 6 are not supported");
  if (config.trials < 0) throw Error("--trials must be non-negative");
  std::vector<SuiteResult> out;
  for (const auto& name : selftest_suite_names()) out.push_back(run_suite(name, config));
  return out;
}

}  // namespace radsupp
