#include "pfaffcy/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace pfaffcy {

std::int64_t monomial_count(int nvars, int d) {
  if (d < 0 || nvars < 0) return 0;
  if (nvars == 0) return d == 0 ? 1 : 0;
  // C(d + n - 1, n - 1)
  std::int64_t r = 1;
  for (int i = 1; i < nvars; ++i) r = r * (d + i) / i;
  return r;
}

namespace {

void enumerate(int var, int nvars, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur.set(var, remaining);
    out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.set(var, e);
    enumerate(var + 1, nvars, remaining - e, cur, out);
  }
  cur.set(var, 0);
}

// out = a + c*m*b, both canonical.
std::vector<Term> merge(const Ring& ring, const std::vector<Term>& a, const std::vector<Term>& b,
                        const Monomial& m, Coeff c) {
  const PrimeField& f = ring.field;
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    Monomial bm = b[j].m * m;
    int cmp = ring.order.compare(a[i].m, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({bm, f.mul(b[j++].c, c)});
    } else {
      Coeff s = f.add(a[i].c, f.mul(b[j].c, c));
      if (s) out.push_back({bm, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].m * m, f.mul(b[j].c, c)});
  return out;
}

}  // namespace

MonomialIndex index_of(const std::vector<Monomial>& monos) {
  MonomialIndex idx;
  idx.reserve(monos.size());
  for (std::size_t k = 0; k < monos.size(); ++k) idx.emplace(monos[k], static_cast<int>(k));
  return idx;
}

std::vector<Monomial> monomials_of_degree(const Ring& ring, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (ring.nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  if (ring.order.weighted()) throw Error(Errc::unsupported, "monomial enumeration needs standard grading");
  Monomial cur;
  enumerate(0, ring.nvars, d, cur, out);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ring.order.greater(a, b); });
  return out;
}

Poly Poly::constant(const Ring& ring, Coeff c) {
  Poly p(ring);
  c %= ring.prime();
  if (c) p.terms_.push_back({Monomial(), c});
  return p;
}

Poly Poly::variable(const Ring& ring, int i) {
  if (i < 0 || i >= ring.nvars) throw Error(Errc::invalid_argument, "variable index out of range");
  return monomial(ring, Monomial::variable(i), 1);
}

Poly Poly::monomial(const Ring& ring, const Monomial& m, Coeff c) {
  Poly p(ring);
  c %= ring.prime();
  if (c) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(const Ring& ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return ring.order.greater(a.m, b.m); });
  Poly p(ring);
  const PrimeField& f = ring.field;
  for (auto& t : terms) {
    Coeff c = t.c % ring.prime();
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c = f.add(p.terms_.back().c, c);
      if (p.terms_.back().c == 0) p.terms_.pop_back();
    } else if (c) {
      p.terms_.push_back({t.m, c});
    }
  }
  return p;
}

Poly Poly::from_sorted_terms(const Ring& ring, std::vector<Term> terms) {
  Poly p(ring);
  p.terms_ = std::move(terms);
  return p;
}

int Poly::degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, ring_.order.degree(t.m));
  return d;
}

bool Poly::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  int d = ring_.order.degree(terms_.front().m);
  for (const auto& t : terms_)
    if (ring_.order.degree(t.m) != d) return false;
  return true;
}

std::optional<int> Poly::homogeneous_degree() const noexcept {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return ring_.order.degree(terms_.front().m);
}

Coeff Poly::coefficient(const Monomial& m) const noexcept {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [&](const Term& t, const Monomial& x) { return ring_.order.greater(t.m, x); });
  if (it != terms_.end() && it->m == m) return it->c;
  return 0;
}

void Poly::check_same_ring(const Poly& o) const {
  if (!(ring_ == o.ring_)) throw Error(Errc::ring_mismatch, "polynomials live in different rings");
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& t : r.terms_) t.c = ring_.field.neg(t.c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_ring(o);
  terms_ = merge(ring_, terms_, o.terms_, Monomial(), 1);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_ring(o);
  terms_ = merge(ring_, terms_, o.terms_, Monomial(), ring_.field.neg(1));
  return *this;
}

void Poly::add_multiple(const Poly& g, const Monomial& m, Coeff c) {
  check_same_ring(g);
  if (c % ring_.prime() == 0 || g.is_zero()) return;
  terms_ = merge(ring_, terms_, g.terms_, m, c % ring_.prime());
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_ring(b);
  const Poly& small = a.size() <= b.size() ? a : b;
  const Poly& large = a.size() <= b.size() ? b : a;
  Poly r(a.ring_);
  if (small.is_zero()) return r;
  if (small.size() <= 24) {
    for (const auto& t : small.terms_) r.terms_ = merge(a.ring_, r.terms_, large.terms_, t.m, t.c);
    return r;
  }
  const PrimeField& f = a.ring_.field;
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(small.size() * large.size() / 4 + 16);
  for (const auto& s : small.terms_)
    for (const auto& l : large.terms_) {
      Coeff& slot = acc[s.m * l.m];
      slot = f.add(slot, f.mul(s.c, l.c));
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c) terms.push_back({m, c});
  std::sort(terms.begin(), terms.end(), [&](const Term& x, const Term& y) { return a.ring_.order.greater(x.m, y.m); });
  r.terms_ = std::move(terms);
  return r;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly Poly::scaled(Coeff c) const {
  c %= ring_.prime();
  Poly r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.c = ring_.field.mul(t.c, c);
  return r;
}

Poly Poly::times_term(const Monomial& m, Coeff c) const {
  c %= ring_.prime();
  Poly r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m * m, ring_.field.mul(t.c, c)});
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_.field.inv(leading_coeff()));
}

Coeff Poly::evaluate(std::span<const Coeff> point) const {
  if (static_cast<int>(point.size()) < ring_.nvars) throw Error(Errc::invalid_argument, "evaluation point too short");
  const PrimeField& f = ring_.field;
  Coeff sum = 0;
  for (const auto& t : terms_) {
    Coeff v = t.c;
    for (int i = 0; i < ring_.nvars; ++i) {
      int e = t.m[i];
      if (e) v = f.mul(v, f.pow(point[i], static_cast<std::uint64_t>(e)));
    }
    sum = f.add(sum, v);
  }
  return sum;
}

Poly Poly::substitute(std::span<const Poly> images) const {
  if (static_cast<int>(images.size()) != ring_.nvars)
    throw Error(Errc::invalid_argument, "substitution needs one image per variable");
  if (images.empty()) return *this;
  const Ring& target = images.front().ring();
  for (const auto& im : images)
    if (!(im.ring() == target)) throw Error(Errc::ring_mismatch, "substitution images in different rings");
  if (target.prime() != ring_.prime()) throw Error(Errc::ring_mismatch, "substitution changes the prime");
  // powers[i][e] = images[i]^e, filled lazily
  std::vector<std::vector<Poly>> powers(ring_.nvars);
  auto power = [&](int i, int e) -> const Poly& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(Poly::constant(target, 1));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
    return pw[e];
  };
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  const PrimeField& f = target.field;
  for (const auto& t : terms_) {
    Poly prod = Poly::constant(target, t.c);
    for (int i = 0; i < ring_.nvars && !prod.is_zero(); ++i)
      if (t.m[i]) prod = prod * power(i, t.m[i]);
    for (const auto& pt : prod.terms_) {
      Coeff& slot = acc[pt.m];
      slot = f.add(slot, pt.c);
    }
  }
  std::vector<Term> terms;
  for (const auto& [m, c] : acc)
    if (c) terms.push_back({m, c});
  return from_terms(target, std::move(terms));
}

Poly Poly::derivative(int var) const {
  if (var < 0 || var >= ring_.nvars) throw Error(Errc::invalid_argument, "variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    int e = t.m[var];
    if (!e) continue;
    Coeff c = ring_.field.mul(t.c, ring_.field.from_int(e));
    if (!c) continue;
    Monomial m = t.m;
    m.set(var, e - 1);
    terms.push_back({m, c});
  }
  return from_terms(ring_, std::move(terms));
}

Poly Poly::permute_variables(const Ring& target, std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != ring_.nvars) throw Error(Errc::invalid_argument, "permutation size mismatch");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (int i = 0; i < ring_.nvars; ++i) {
      if (perm[i] < 0 || perm[i] >= target.nvars) throw Error(Errc::invalid_argument, "permutation target out of range");
      m.set(perm[i], t.m[i]);
    }
    terms.push_back({m, t.c});
  }
  return from_terms(target, std::move(terms));
}

Poly Poly::embed(const Ring& target) const {
  if (target.nvars < ring_.nvars || target.prime() != ring_.prime())
    throw Error(Errc::ring_mismatch, "cannot embed into a smaller ring");
  std::vector<Term> terms(terms_.begin(), terms_.end());
  return from_terms(target, std::move(terms));
}

Poly Poly::divide_exact(const Poly& g) const {
  check_same_ring(g);
  if (g.is_zero()) throw Error(Errc::invalid_argument, "division by zero polynomial");
  Poly rem = *this;
  std::vector<Term> quot;
  Coeff lcinv = ring_.field.inv(g.leading_coeff());
  while (!rem.is_zero()) {
    const Term& lt = rem.leading_term();
    if (!g.leading_monomial().divides(lt.m)) throw Error(Errc::invalid_argument, "polynomial division is not exact");
    Monomial q = lt.m / g.leading_monomial();
    Coeff c = ring_.field.mul(lt.c, lcinv);
    quot.push_back({q, c});
    rem.add_multiple(g, q, ring_.field.neg(c));
  }
  return from_sorted_terms(ring_, std::move(quot));
}

bool operator==(const Poly& a, const Poly& b) {
  if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

std::string monomial_to_string(const Monomial& m, int nvars) {
  std::string s;
  for (int i = 0; i < nvars; ++i) {
    int e = m[i];
    if (!e) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::int64_t c = ring_.field.to_signed(t.c);
    bool neg = c < 0;
    std::int64_t mag = neg ? -c : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    if (t.m.is_one()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << monomial_to_string(t.m, ring_.nvars);
    }
    first = false;
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(const Ring& ring, std::string_view s) : ring_(ring), s_(s) {}

  Poly parse() {
    Poly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  const Ring& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw Error(Errc::invalid_argument, "cannot parse polynomial '" + std::string(s_) + "': " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::int64_t number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }
  Poly expr() {
    bool neg = eat('-');
    if (!neg) eat('+');
    Poly r = term();
    if (neg) r = -r;
    for (;;) {
      if (eat('+')) {
        r += term();
      } else if (eat('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }
  Poly term() {
    Poly r = factor();
    while (eat('*')) r = r * factor();
    return r;
  }
  Poly factor() {
    Poly base = atom();
    if (eat('^')) {
      std::int64_t e = number();
      Poly r = Poly::constant(ring_, 1);
      for (std::int64_t i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }
  Poly atom() {
    skip();
    if (eat('(')) {
      Poly r = expr();
      if (!eat(')')) fail("missing ')'");
      return r;
    }
    if (pos_ < s_.size() && s_[pos_] == 'x') {
      ++pos_;
      std::int64_t i = number();
      if (i >= ring_.nvars) fail("variable out of range");
      return Poly::variable(ring_, static_cast<int>(i));
    }
    return Poly::constant(ring_, ring_.field.from_int(number()));
  }
};

}  // namespace

Poly Poly::parse(const Ring& ring, std::string_view text) { return Parser(ring, text).parse(); }

}  // namespace pfaffcy
