#include "radsupp/monomial_ideal.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace radsupp {

namespace {

void sort_canonical(const RingSpec& ring, std::vector<Monomial>& gens) {
  const TermOrder order = TermOrder::degrevlex(ring);
  std::sort(gens.begin(), gens.end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("K-polynomial coefficient overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("K-polynomial coefficient overflow");
  return r;
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingSpec ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
  for (const auto& g : gens)
    if (g.size() != ring_.num_vars()) throw Error("monomial does not match ring");
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (auto& g : gens)
    if (std::none_of(gens_.begin(), gens_.end(), [&](const Monomial& h) { return h.divides(g); }))
      gens_.push_back(std::move(g));
  sort_canonical(ring_, gens_);
}

bool MonomialIdeal::contains(const Monomial& mono) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(mono); });
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

std::vector<std::string> MonomialIdeal::gen_strings() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(radsupp::to_string(ring_, g));
  return out;
}

std::string MonomialIdeal::to_string() const {
  std::string out = "(";
  auto strs = gen_strings();
  for (std::size_t k = 0; k < strs.size(); ++k) out += (k ? ", " : "") + strs[k];
  return out + ")";
}

MonomialIdeal minimalize(const RingSpec& ring, std::vector<Monomial> monomials) {
  return MonomialIdeal(ring, std::move(monomials));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.ring() == b.ring())) throw Error("product of ideals in different rings");
  std::vector<Monomial> all;
  all.reserve(a.size() * b.size());
  for (const auto& g : a.gens())
    for (const auto& h : b.gens()) all.push_back(g * h);
  return MonomialIdeal(a.ring(), std::move(all));
}

MonomialIdeal linear_ideal(const RingSpec& fine_ring, const Multidegree& a) {
  std::vector<Monomial> gens;
  for (int j : a.members()) gens.push_back(Monomial::variable(fine_ring.num_vars(), fine_ring.index(1, j)));
  return MonomialIdeal(fine_ring, std::move(gens));
}

MonomialIdeal polarize(const MonomialIdeal& e, const std::vector<int>& m) {
  const RingSpec& t = e.ring();
  if (static_cast<int>(m.size()) != t.n()) throw Error("polarize: m has the wrong length");
  if (t.num_vars() != t.n()) throw Error("polarize: input must live in K[y_1..y_n]");
  RingSpec s(m, t.field());
  std::vector<Monomial> gens;
  for (const auto& g : e.gens()) {
    Monomial p = Monomial::one(s.num_vars());
    for (int j = 1; j <= t.n(); ++j) {
      const int a = g[t.index(1, j)];
      if (a > m[static_cast<std::size_t>(j - 1)])
        throw Error("polarize: exponent " + std::to_string(a) + " of y_" + std::to_string(j) + " exceeds m_" +
                    std::to_string(j) + " = " + std::to_string(m[static_cast<std::size_t>(j - 1)]));
      for (int i = 1; i <= a; ++i) p = p * Monomial::variable(s.num_vars(), s.index(i, j));
    }
    gens.push_back(std::move(p));
  }
  return MonomialIdeal(s, std::move(gens));
}

MonomialIdeal alexander_dual(const MonomialIdeal& j) {
  if (!j.is_squarefree()) throw Error("alexander_dual needs a squarefree ideal");
  const RingSpec& ring = j.ring();
  // Berge: extend each partial transversal that misses the next support.
  std::vector<Monomial> covers{Monomial::one(ring.num_vars())};
  for (const auto& g : j.gens()) {
    const auto vars = g.support();
    std::vector<Monomial> next;
    for (const auto& c : covers) {
      if (!coprime(c, g)) {
        next.push_back(c);
        continue;
      }
      for (int v : vars) next.push_back(c * Monomial::variable(ring.num_vars(), v));
    }
    covers = MonomialIdeal(ring, std::move(next)).gens();
  }
  return MonomialIdeal(ring, std::move(covers));
}

MonomialIdeal psi(const MonomialIdeal& e, const std::vector<int>& m) { return alexander_dual(polarize(e, m)); }

bool in_brad(const MonomialIdeal& j) {
  if (!j.is_squarefree()) return false;
  const RingSpec& ring = j.ring();
  for (const auto& g : j.gens())
    for (int v : g.support()) {
      const auto [i, block] = ring.var(v);
      if (i == 1) continue;
      const Monomial f = g / Monomial::variable(ring.num_vars(), v);
      for (int k = 1; k < i; ++k)
        if (!j.contains(f * Monomial::variable(ring.num_vars(), ring.index(k, block)))) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------

IntPoly IntPoly::constant(int n, long long c) { return monomial(n, Exponents(static_cast<std::size_t>(n), 0), c); }

IntPoly IntPoly::monomial(int n, Exponents exps, long long c) {
  if (static_cast<int>(exps.size()) != n) throw Error("IntPoly exponent length mismatch");
  IntPoly p(n);
  p.add_term(exps, c);
  return p;
}

long long IntPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void IntPoly::add_term(const Exponents& e, long long c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

IntPoly IntPoly::operator+(const IntPoly& other) const {
  IntPoly r = *this;
  for (const auto& [e, c] : other.terms_) r.add_term(e, c);
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& other) const { return *this + other.scaled(-1); }

IntPoly IntPoly::operator*(const IntPoly& other) const {
  if (n_ != other.n_) throw Error("IntPoly variable count mismatch");
  IntPoly r(n_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) {
      Exponents e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      r.add_term(e, checked_mul(ca, cb));
    }
  return r;
}

IntPoly IntPoly::scaled(long long c) const {
  IntPoly r(n_);
  for (const auto& [e, x] : terms_) r.add_term(e, checked_mul(x, c));
  return r;
}

std::string IntPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, long long>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int x : a.first) da += x;
    for (int x : b.first) db += x;
    return da < db;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c0] : sorted) {
    long long c = c0;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (c < 0) c = -c;
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "z" + std::to_string(k + 1);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty())
      out << c;
    else if (c == 1)
      out << mono;
    else
      out << c << "*" << mono;
  }
  return out.str();
}

IntPoly dualize(const IntPoly& k) {
  const int n = k.n();
  IntPoly out(n);
  std::vector<IntPoly> one_minus;
  for (int i = 0; i < n; ++i) {
    IntPoly f = IntPoly::constant(n, 1);
    IntPoly::Exponents e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    f.add_term(e, -1);
    one_minus.push_back(std::move(f));
  }
  for (const auto& [e, c] : k.terms()) {
    IntPoly term = IntPoly::constant(n, c);
    for (int i = 0; i < n; ++i)
      for (int r = 0; r < e[static_cast<std::size_t>(i)]; ++r) term = term * one_minus[static_cast<std::size_t>(i)];
    out = out + term;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

IntPoly one_minus_z(const RingSpec& ring, const Monomial& g) {
  IntPoly f = IntPoly::constant(ring.n(), 1);
  f.add_term(multidegree(ring, g), -1);
  return f;
}

IntPoly kpoly_pivot(const RingSpec& ring, std::vector<Monomial> gens) {
  const int n = ring.n();
  gens = MonomialIdeal(ring, std::move(gens)).gens();
  if (gens.empty()) return IntPoly::constant(n, 1);
  if (gens.front().is_one()) return IntPoly(n);

  IntPoly factor = IntPoly::constant(n, 1);
  std::vector<Monomial> rest;
  for (auto& g : gens) {
    if (g.degree() == 1)
      factor = factor * one_minus_z(ring, g);
    else
      rest.push_back(std::move(g));
  }
  if (rest.empty()) return factor;

  std::vector<int> freq(static_cast<std::size_t>(ring.num_vars()), 0);
  for (const auto& g : rest)
    for (int v : g.support()) ++freq[static_cast<std::size_t>(v)];
  const auto pivot_it = std::max_element(freq.begin(), freq.end());
  if (*pivot_it <= 1) {
    for (const auto& g : rest) factor = factor * one_minus_z(ring, g);
    return factor;
  }
  const int pivot = static_cast<int>(pivot_it - freq.begin());
  const Monomial x = Monomial::variable(ring.num_vars(), pivot);

  // 0 -> R/(I:x)(-deg x) -> R/I -> R/(I,x) -> 0
  std::vector<Monomial> with_pivot{x};
  std::vector<Monomial> colon;
  for (const auto& g : rest) {
    if (g[pivot] == 0) with_pivot.push_back(g);
    colon.push_back(g[pivot] > 0 ? g / x : g);
  }
  IntPoly shift = IntPoly::power_product(multidegree(ring, x));
  return factor * (kpoly_pivot(ring, std::move(with_pivot)) + shift * kpoly_pivot(ring, std::move(colon)));
}

}  // namespace

IntPoly kpoly_quotient(const MonomialIdeal& i) { return kpoly_pivot(i.ring(), i.gens()); }

IntPoly kpoly_quotient_taylor(const MonomialIdeal& i) {
  const RingSpec& ring = i.ring();
  std::map<Monomial, long long> signed_lcms{{Monomial::one(ring.num_vars()), 1}};
  for (const auto& g : i.gens()) {
    std::vector<std::pair<Monomial, long long>> snapshot(signed_lcms.begin(), signed_lcms.end());
    for (const auto& [m, c] : snapshot) {
      auto& slot = signed_lcms[lcm(m, g)];
      slot = checked_add(slot, -c);
    }
  }
  IntPoly out(ring.n());
  for (const auto& [m, c] : signed_lcms) out.add_term(multidegree(ring, m), c);
  return out;
}

IntPoly kpoly_ideal(const MonomialIdeal& i) { return IntPoly::constant(i.ring().n(), 1) - kpoly_quotient(i); }

// ---------------------------------------------------------------------------

namespace {

void for_each_degree_below(const ZnDegree& bound, const std::function<void(const ZnDegree&)>& visit) {
  ZnDegree a(bound.size(), 0);
  while (true) {
    visit(a);
    std::size_t k = 0;
    while (k < a.size() && ++a[k] > bound[k]) a[k++] = 0;
    if (k == a.size()) return;
  }
}

long long binomial(long long top, long long bottom) {
  if (bottom < 0 || top < bottom) return 0;
  long long r = 1;
  for (long long k = 1; k <= bottom; ++k) r = r * (top - bottom + k) / k;
  return r;
}

}  // namespace

HilbertTable hilbert_count_oracle(const MonomialIdeal& i, const ZnDegree& bound) {
  const RingSpec& ring = i.ring();
  if (static_cast<int>(bound.size()) != ring.n()) throw Error("bound has the wrong length");
  HilbertTable table;
  for_each_degree_below(bound, [&](const ZnDegree& a) { table[a] = 0; });

  Monomial mono = Monomial::one(ring.num_vars());
  ZnDegree used(bound.size(), 0);
  auto walk = [&](auto&& self, int var) -> void {
    if (var == ring.num_vars()) {
      if (!i.contains(mono)) ++table[used];
      return;
    }
    const std::size_t j = static_cast<std::size_t>(ring.block(var) - 1);
    const int saved_used = used[j];
    std::vector<int> e = mono.exps();
    for (int p = 0; saved_used + p <= bound[j]; ++p) {
      e[static_cast<std::size_t>(var)] = p;
      mono = Monomial(e);
      used[j] = saved_used + p;
      self(self, var + 1);
    }
    used[j] = saved_used;
    e[static_cast<std::size_t>(var)] = 0;
    mono = Monomial(e);
  };
  walk(walk, 0);
  return table;
}

HilbertTable series_coefficients(const IntPoly& k, const std::vector<int>& m, const ZnDegree& bound) {
  if (m.size() != bound.size() || static_cast<int>(m.size()) != k.n()) throw Error("series_coefficients: size mismatch");
  HilbertTable table;
  for_each_degree_below(bound, [&](const ZnDegree& a) {
    long long total = 0;
    for (const auto& [b, c] : k.terms()) {
      long long ways = c;
      for (std::size_t j = 0; j < a.size() && ways != 0; ++j) {
        const int d = a[j] - b[j];
        ways = d < 0 ? 0 : checked_mul(ways, binomial(d + m[j] - 1, m[j] - 1));
      }
      total = checked_add(total, ways);
    }
    table[a] = total;
  });
  return table;
}

}  // namespace radsupp
