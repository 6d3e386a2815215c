#include "radsupp/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace radsupp {

RingSpec::RingSpec(std::vector<int> m, Field field) : m_(std::move(m)), field_(field) {
  if (m_.empty()) throw Error("ring needs n >= 1");
  int rows = 0;
  for (int mj : m_) {
    if (mj < 1) throw Error("ring dimensions m_j must be positive");
    rows = std::max(rows, mj);
  }
  index_.resize(m_.size());
  for (std::size_t j = 0; j < m_.size(); ++j) index_[j].assign(static_cast<std::size_t>(m_[j]), -1);
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= n(); ++j)
      if (i <= m_[static_cast<std::size_t>(j - 1)]) {
        index_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = static_cast<int>(vars_.size());
        vars_.push_back({i, j});
      }
}

int RingSpec::index(int i, int j) const {
  if (j < 1 || j > n() || i < 1 || i > m_[static_cast<std::size_t>(j - 1)])
    throw Error("variable x[" + std::to_string(i) + "," + std::to_string(j) + "] not in ring");
  return index_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)];
}

std::string RingSpec::var_name(int flat) const {
  auto v = var(flat);
  return "x[" + std::to_string(v.i) + "," + std::to_string(v.j) + "]";
}

// ---------------------------------------------------------------------------

Monomial Monomial::variable(int num_vars, int flat, int power) {
  Monomial m = one(num_vars);
  m.exps_.at(static_cast<std::size_t>(flat)) = power;
  return m;
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (exps_[k] > other.exps_[k]) return false;
  return true;
}

std::vector<int> Monomial::support() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (exps_[k] > 0) out.push_back(static_cast<int>(k));
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t k = 0; k < r.exps_.size(); ++k) r.exps_[k] += b.exps_[k];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t k = 0; k < r.exps_.size(); ++k) {
    r.exps_[k] -= b.exps_[k];
    if (r.exps_[k] < 0) throw Error("monomial division is not exact");
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.exps().size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = std::max(a.exps()[k], b.exps()[k]);
  return Monomial(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.exps().size(); ++k)
    if (a.exps()[k] && b.exps()[k]) return false;
  return true;
}

ZnDegree multidegree(const RingSpec& ring, const Monomial& mono) {
  ZnDegree d(static_cast<std::size_t>(ring.n()), 0);
  for (int k = 0; k < mono.size(); ++k) d[static_cast<std::size_t>(ring.block(k) - 1)] += mono[k];
  return d;
}

std::string to_string(const RingSpec& ring, const Monomial& mono) {
  std::string out;
  for (int k = 0; k < mono.size(); ++k) {
    if (mono[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.var_name(k);
    if (mono[k] > 1) out += '^' + std::to_string(mono[k]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------

TermOrder TermOrder::degrevlex(const RingSpec& ring) {
  std::vector<int> r(static_cast<std::size_t>(ring.num_vars()));
  std::iota(r.begin(), r.end(), 0);
  return TermOrder(Kind::DegRevLex, std::move(r));
}

TermOrder TermOrder::lex(const RingSpec& ring) {
  std::vector<int> r(static_cast<std::size_t>(ring.num_vars()));
  std::iota(r.begin(), r.end(), 0);
  return TermOrder(Kind::Lex, std::move(r));
}

TermOrder TermOrder::with_ranking(Kind kind, std::vector<int> ranking) {
  std::vector<int> check = ranking;
  std::sort(check.begin(), check.end());
  for (std::size_t k = 0; k < check.size(); ++k)
    if (check[k] != static_cast<int>(k)) throw Error("term order ranking must be a permutation");
  return TermOrder(kind, std::move(ranking));
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::DegRevLex) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (auto it = ranking_.rbegin(); it != ranking_.rend(); ++it) {
      int ea = a[*it], eb = b[*it];
      if (ea != eb) return ea < eb ? 1 : -1;
    }
    return 0;
  }
  for (int v : ranking_) {
    int ea = a[v], eb = b[v];
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return 0;
}

std::string TermOrder::describe(const RingSpec& ring) const {
  std::string out = kind_ == Kind::Lex ? "lex" : "degrevlex";
  for (std::size_t k = 0; k < ranking_.size(); ++k) out += (k ? " > " : " ") + ring.var_name(ranking_[k]);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool canonical_greater(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (int k = a.size() - 1; k >= 0; --k)
    if (a[k] != b[k]) return a[k] < b[k];
  return false;
}

}  // namespace

Polynomial::Polynomial(RingSpec ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  std::map<Monomial, Scalar> acc;
  const Field& f = ring_.field();
  for (auto& t : terms) {
    if (t.mono.size() != ring_.num_vars()) throw Error("monomial does not match ring");
    auto [it, fresh] = acc.try_emplace(t.mono, f.normalize(t.coeff));
    if (!fresh) it->second = f.add(it->second, t.coeff);
  }
  for (auto& [mono, c] : acc)
    if (c != 0) terms_.push_back({mono, c});
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return canonical_greater(a.mono, b.mono); });
}

Polynomial Polynomial::constant(const RingSpec& ring, const Scalar& c) {
  return Polynomial(ring, {{Monomial::one(ring.num_vars()), c}});
}

Polynomial Polynomial::from_monomial(const RingSpec& ring, const Monomial& mono, const Scalar& c) {
  return Polynomial(ring, {{mono, c}});
}

Polynomial Polynomial::variable(const RingSpec& ring, int i, int j) {
  return from_monomial(ring, Monomial::variable(ring.num_vars(), ring.index(i, j)));
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (!(ring_ == other.ring_)) throw Error("polynomials live in different rings");
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_same_ring(other);
  std::vector<Term> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return Polynomial(ring_, std::move(all));
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + other.scaled(Scalar(-1)); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_ring(other);
  std::vector<Term> all;
  all.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) all.push_back({a.mono * b.mono, a.coeff * b.coeff});
  return Polynomial(ring_, std::move(all));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  std::vector<Term> all;
  for (const auto& t : terms_) all.push_back({t.mono, t.coeff * c});
  return Polynomial(ring_, std::move(all));
}

Polynomial Polynomial::pow(int e) const {
  Polynomial r = constant(ring_, 1);
  for (int k = 0; k < e; ++k) r = r * *this;
  return r;
}

const Term& Polynomial::leading_term(const TermOrder& order) const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (order.compare(t.mono, best->mono) > 0) best = &t;
  return *best;
}

Polynomial Polynomial::monic(const TermOrder& order) const {
  if (is_zero()) return *this;
  return scaled(ring_.field().inv(leading_term(order).coeff));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coeff;
    if (!first) {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    } else if (c < 0) {
      out << "-";
      c = -c;
    }
    first = false;
    if (t.mono.is_one()) {
      out << c.get_str();
    } else {
      if (c != 1) out << c.get_str() << "*";
      out << radsupp::to_string(ring_, t.mono);
    }
  }
  return out.str();
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!(ring_ == other.ring_) || terms_.size() != other.terms_.size()) return false;
  for (std::size_t k = 0; k < terms_.size(); ++k)
    if (terms_[k].mono != other.terms_[k].mono || terms_[k].coeff != other.terms_[k].coeff) return false;
  return true;
}

std::optional<ZnDegree> multidegree_of(const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  ZnDegree d = multidegree(f.ring(), f.terms().front().mono);
  for (const auto& t : f.terms())
    if (multidegree(f.ring(), t.mono) != d) return std::nullopt;
  return d;
}

// ---------------------------------------------------------------------------

namespace {

class PolyParser {
 public:
  PolyParser(const RingSpec& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      Term t = term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip();
      if (pos_ == text_.size()) break;
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("expected '+' or '-', got '") + c + "'", pos_);
      negative = c == '-';
      ++pos_;
    }
    return Polynomial(ring_, std::move(terms));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  long integer() {
    skip();
    std::size_t start = pos_;
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1'000'000'000L) throw ParseError("integer too large", start);
    }
    if (start == pos_) throw ParseError("expected an integer", start);
    return v;
  }

  Term term() {
    Term t{Monomial::one(ring_.num_vars()), Scalar(1)};
    while (true) {
      skip();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        mpz_class num(digits());
        mpz_class den(1);
        skip();
        if (peek() == '/') {
          ++pos_;
          skip();
          std::string d = digits();
          if (d.empty()) throw ParseError("expected a denominator", pos_);
          den = mpz_class(d);
          if (den == 0) throw ParseError("zero denominator", start);
        }
        t.coeff *= Scalar(num, den);
      } else if (c == 'x') {
        std::size_t start = pos_;
        ++pos_;
        expect('[');
        long i = integer();
        expect(',');
        long j = integer();
        expect(']');
        int flat;
        try {
          flat = ring_.index(static_cast<int>(i), static_cast<int>(j));
        } catch (const Error& e) {
          throw ParseError(e.what(), start);
        }
        long power = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          power = integer();
        }
        t.mono = t.mono * Monomial::variable(ring_.num_vars(), flat, static_cast<int>(power));
      } else {
        throw ParseError(c ? std::string("unexpected '") + c + "'" : "unexpected end of input", pos_);
      }
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    return t;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  const RingSpec& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingSpec& ring, std::string_view text) { return PolyParser(ring, text).parse(); }

// ---------------------------------------------------------------------------

ZnDegree degree_of(const RingSpec& ring, const Multidegree& a) {
  ZnDegree d(static_cast<std::size_t>(ring.n()), 0);
  for (int j : a.members()) {
    if (j > ring.n()) throw Error("multidegree label exceeds ring n");
    d[static_cast<std::size_t>(j - 1)] = 1;
  }
  return d;
}

std::vector<Monomial> basis_of_component(const RingSpec& ring, const Multidegree& a) {
  degree_of(ring, a);
  std::vector<Monomial> out{Monomial::one(ring.num_vars())};
  for (int j : a.members()) {
    std::vector<Monomial> next;
    for (const auto& mono : out)
      for (int i = 1; i <= ring.m()[static_cast<std::size_t>(j - 1)]; ++i)
        next.push_back(mono * Monomial::variable(ring.num_vars(), ring.index(i, j)));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), canonical_greater);
  return out;
}

Polynomial random_form(const RingSpec& ring, const Multidegree& a, Rng& rng) {
  std::vector<Term> terms;
  for (auto& mono : basis_of_component(ring, a)) terms.push_back({std::move(mono), random_nonzero(ring.field(), rng)});
  return Polynomial(ring, std::move(terms));
}

}  // namespace radsupp
