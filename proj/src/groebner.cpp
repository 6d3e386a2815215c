#include "radsupp/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace radsupp {

namespace {

// Coefficient kernels. The engine is instantiated once per field kind so
// that F_p arithmetic runs on machine words.

struct RationalArith {
  using C = mpq_class;
  C from(const Scalar& s) const { return s; }
  Scalar to(const C& c) const { return c; }
  C mul(const C& a, const C& b) const { return a * b; }
  C sub(const C& a, const C& b) const { return a - b; }
  C inv(const C& a) const { return C(1) / a; }
  bool is_zero(const C& a) const { return sgn(a) == 0; }
};

struct ModArith {
  using C = std::uint64_t;
  std::uint64_t p;
  C from(const Scalar& s) const { return s.get_num().get_ui() % p; }
  Scalar to(const C& c) const { return Scalar(static_cast<unsigned long>(c)); }
  C mul(C a, C b) const { return a * b % p; }
  C sub(C a, C b) const { return (a + p - b) % p; }
  C inv(C a) const {
    C result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  }
  bool is_zero(C a) const { return a == 0; }
};

// Engine monomial: [total degree, exponent of rank 0, rank 1, ...].
using EMono = std::vector<int>;

struct MonoCmp {
  bool degrevlex;
  int operator()(const EMono& a, const EMono& b) const {
    const std::size_t len = a.size();
    if (degrevlex) {
      if (a[0] != b[0]) return a[0] < b[0] ? -1 : 1;
      for (std::size_t k = len - 1; k >= 1; --k)
        if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
      return 0;
    }
    for (std::size_t k = 1; k < len; ++k)
      if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
    return 0;
  }
};

bool divides(const EMono& a, const EMono& b) {
  for (std::size_t k = 1; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

EMono mono_mul(const EMono& a, const EMono& b) {
  EMono r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

EMono mono_div(const EMono& a, const EMono& b) {
  EMono r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
  return r;
}

EMono mono_lcm(const EMono& a, const EMono& b) {
  EMono r(a.size());
  r[0] = 0;
  for (std::size_t k = 1; k < a.size(); ++k) {
    r[k] = std::max(a[k], b[k]);
    r[0] += r[k];
  }
  return r;
}

bool mono_coprime(const EMono& a, const EMono& b) {
  for (std::size_t k = 1; k < a.size(); ++k)
    if (a[k] && b[k]) return false;
  return true;
}

template <class A>
struct EPoly {
  std::vector<EMono> mons;  // strictly descending
  std::vector<typename A::C> coefs;
  bool empty() const { return mons.empty(); }
  std::size_t size() const { return mons.size(); }
};

template <class A>
class Engine {
 public:
  using C = typename A::C;
  using Poly = EPoly<A>;

  Engine(A arith, const RingSpec& ring, const TermOrder& order)
      : arith_(arith), ring_(ring), ranking_(order.ranking()), cmp_{order.kind() == TermOrder::Kind::DegRevLex} {}

  Poly import(const Polynomial& f) const {
    std::vector<std::pair<EMono, C>> terms;
    for (const auto& t : f.terms()) {
      EMono m(ranking_.size() + 1);
      m[0] = 0;
      for (std::size_t r = 0; r < ranking_.size(); ++r) {
        m[r + 1] = t.mono[ranking_[r]];
        m[0] += m[r + 1];
      }
      terms.emplace_back(std::move(m), arith_.from(t.coeff));
    }
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return cmp_(a.first, b.first) > 0; });
    Poly p;
    for (auto& [m, c] : terms) {
      p.mons.push_back(std::move(m));
      p.coefs.push_back(std::move(c));
    }
    return p;
  }

  Polynomial export_poly(const Poly& p) const {
    std::vector<Term> terms;
    for (std::size_t t = 0; t < p.size(); ++t) {
      std::vector<int> e(ranking_.size());
      for (std::size_t r = 0; r < ranking_.size(); ++r) e[static_cast<std::size_t>(ranking_[r])] = p.mons[t][r + 1];
      terms.push_back({Monomial(std::move(e)), arith_.to(p.coefs[t])});
    }
    return Polynomial(ring_, std::move(terms));
  }

  Poly monic(Poly p) const {
    if (p.empty()) return p;
    const C scale = arith_.inv(p.coefs[0]);
    for (auto& c : p.coefs) c = arith_.mul(c, scale);
    return p;
  }

  /// f[from..] - c * shift * g
  Poly sub_mul(const Poly& f, std::size_t from, const C& c, const EMono& shift, const Poly& g) const {
    Poly out;
    out.mons.reserve(f.size() - from + g.size());
    out.coefs.reserve(f.size() - from + g.size());
    std::size_t a = from, b = 0;
    while (a < f.size() || b < g.size()) {
      if (b == g.size()) {
        out.mons.push_back(f.mons[a]);
        out.coefs.push_back(f.coefs[a++]);
        continue;
      }
      EMono gm = mono_mul(shift, g.mons[b]);
      int order = a == f.size() ? -1 : cmp_(f.mons[a], gm);
      if (order > 0) {
        out.mons.push_back(f.mons[a]);
        out.coefs.push_back(f.coefs[a++]);
      } else if (order < 0) {
        out.mons.push_back(std::move(gm));
        out.coefs.push_back(arith_.sub(C(0), arith_.mul(c, g.coefs[b++])));
      } else {
        C v = arith_.sub(f.coefs[a++], arith_.mul(c, g.coefs[b++]));
        if (!arith_.is_zero(v)) {
          out.mons.push_back(std::move(gm));
          out.coefs.push_back(std::move(v));
        }
      }
    }
    return out;
  }

  /// Full reduction by monic divisors.
  Poly reduce(Poly h, const std::vector<const Poly*>& divisors) const {
    Poly rem;
    std::size_t head = 0;
    while (head < h.size()) {
      const EMono& lead = h.mons[head];
      const Poly* divisor = nullptr;
      for (const Poly* g : divisors)
        if (divides(g->mons[0], lead)) {
          divisor = g;
          break;
        }
      if (!divisor) {
        rem.mons.push_back(h.mons[head]);
        rem.coefs.push_back(h.coefs[head]);
        ++head;
        continue;
      }
      h = sub_mul(h, head, h.coefs[head], mono_div(lead, divisor->mons[0]), *divisor);
      head = 0;
    }
    return rem;
  }

  Poly spoly(const Poly& f, const Poly& g) const {
    const EMono l = mono_lcm(f.mons[0], g.mons[0]);
    Poly left = sub_mul(Poly{}, 0, arith_.sub(C(0), C(1)), mono_div(l, f.mons[0]), f);
    return sub_mul(left, 0, C(1), mono_div(l, g.mons[0]), g);
  }

  std::vector<Poly> groebner(const std::vector<Poly>& input, BuchbergerStats& stats) const {
    std::vector<Poly> basis;
    std::vector<std::vector<char>> pending;

    struct Pair {
      EMono lcm;
      std::size_t i, j;
    };
    auto pair_less = [this](const Pair& a, const Pair& b) {
      if (a.lcm[0] != b.lcm[0]) return a.lcm[0] < b.lcm[0];
      int c = cmp_(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    };
    std::set<Pair, decltype(pair_less)> queue(pair_less);

    auto add = [&](Poly h) {
      const std::size_t n = basis.size();
      for (auto& row : pending) row.push_back(0);
      pending.emplace_back(n + 1, 0);
      for (std::size_t i = 0; i < n; ++i) {
        queue.insert(Pair{mono_lcm(basis[i].mons[0], h.mons[0]), i, n});
        pending[i][n] = pending[n][i] = 1;
      }
      basis.push_back(std::move(h));
    };

    for (const auto& f : input)
      if (!f.empty()) add(monic(f));

    while (!queue.empty()) {
      Pair p = *queue.begin();
      queue.erase(queue.begin());
      pending[p.i][p.j] = pending[p.j][p.i] = 0;
      ++stats.pairs_considered;
      if (mono_coprime(basis[p.i].mons[0], basis[p.j].mons[0])) {
        ++stats.pairs_coprime;
        continue;
      }
      bool chain = false;
      for (std::size_t k = 0; k < basis.size() && !chain; ++k)
        chain = k != p.i && k != p.j && !pending[p.i][k] && !pending[p.j][k] && divides(basis[k].mons[0], p.lcm);
      if (chain) {
        ++stats.pairs_chain;
        continue;
      }
      std::vector<const Poly*> divisors;
      for (const auto& g : basis) divisors.push_back(&g);
      Poly r = reduce(spoly(basis[p.i], basis[p.j]), divisors);
      if (r.empty()) {
        ++stats.reductions_to_zero;
        continue;
      }
      add(monic(std::move(r)));
    }
    return reduced(std::move(basis));
  }

  std::vector<Poly> reduced(std::vector<Poly> basis) const {
    std::sort(basis.begin(), basis.end(), [&](const Poly& a, const Poly& b) { return cmp_(a.mons[0], b.mons[0]) < 0; });
    std::vector<Poly> minimal;
    for (auto& g : basis)
      if (std::none_of(minimal.begin(), minimal.end(), [&](const Poly& h) { return divides(h.mons[0], g.mons[0]); }))
        minimal.push_back(std::move(g));
    std::vector<const Poly*> divisors;
    for (const auto& g : minimal) divisors.push_back(&g);
    std::vector<Poly> out;
    for (const auto& g : minimal) {
      Poly tail;
      tail.mons.assign(g.mons.begin() + 1, g.mons.end());
      tail.coefs.assign(g.coefs.begin() + 1, g.coefs.end());
      Poly r = reduce(std::move(tail), divisors);
      Poly full;
      full.mons.push_back(g.mons[0]);
      full.coefs.push_back(g.coefs[0]);
      full.mons.insert(full.mons.end(), r.mons.begin(), r.mons.end());
      full.coefs.insert(full.coefs.end(), r.coefs.begin(), r.coefs.end());
      out.push_back(std::move(full));
    }
    return out;
  }

 private:
  A arith_;
  const RingSpec& ring_;
  std::vector<int> ranking_;
  MonoCmp cmp_;
};

void check_inputs(const RingSpec& ring, const std::vector<Polynomial>& gens, const TermOrder& order) {
  if (static_cast<int>(order.ranking().size()) != ring.num_vars()) throw Error("term order does not match ring");
  for (const auto& g : gens)
    if (!(g.ring() == ring)) throw Error("generator lives in a different ring");
}

template <class A>
GroebnerBasis run_buchberger(A arith, const RingSpec& ring, const std::vector<Polynomial>& gens,
                             const TermOrder& order, BuchbergerStats& stats) {
  Engine<A> engine(arith, ring, order);
  std::vector<EPoly<A>> input;
  for (const auto& g : gens) input.push_back(engine.import(g));
  std::vector<Polynomial> out;
  for (const auto& g : engine.groebner(input, stats)) out.push_back(engine.export_poly(g));
  return GroebnerBasis(ring, order, std::move(out));
}

template <class A>
Polynomial run_normal_form(A arith, const Polynomial& f, const GroebnerBasis& gb) {
  Engine<A> engine(arith, gb.ring(), gb.order());
  std::vector<EPoly<A>> basis;
  for (const auto& g : gb.generators()) basis.push_back(engine.import(g));
  std::vector<const EPoly<A>*> divisors;
  for (const auto& g : basis) divisors.push_back(&g);
  return engine.export_poly(engine.reduce(engine.import(f), divisors));
}

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : generators_) out.push_back(g.leading_term(order_).mono);
  return out;
}

GroebnerBasis buchberger(const RingSpec& ring, const std::vector<Polynomial>& gens, const TermOrder& order,
                         BuchbergerStats* stats) {
  check_inputs(ring, gens, order);
  BuchbergerStats local;
  BuchbergerStats& s = stats ? *stats : local;
  if (ring.field().is_prime()) return run_buchberger(ModArith{ring.field().characteristic()}, ring, gens, order, s);
  return run_buchberger(RationalArith{}, ring, gens, order, s);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrder& order) {
  if (gens.empty()) throw Error("buchberger: cannot infer the ring of an empty generator list");
  return buchberger(gens.front().ring(), gens, order);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (!(f.ring() == gb.ring())) throw Error("normal_form: ring mismatch");
  if (gb.ring().field().is_prime()) return run_normal_form(ModArith{gb.ring().field().characteristic()}, f, gb);
  return run_normal_form(RationalArith{}, f, gb);
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb) { return MonomialIdeal(gb.ring(), gb.leading_monomials()); }

bool squarefree_initial_certificate(const GroebnerBasis& gb) {
  const auto lms = gb.leading_monomials();
  return std::all_of(lms.begin(), lms.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

}  // namespace radsupp
