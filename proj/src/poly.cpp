#include "triadlab/poly.hpp"

#include <algorithm>
#include <cctype>

namespace triadlab {

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < kNumVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (int i = 0; i < kNumVars; ++i) m.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
  return m;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m;
  for (int i = 0; i < kNumVars; ++i) m.e[i] = static_cast<std::uint16_t>(e[i] - o.e[i]);
  return m;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial m;
  for (int i = 0; i < kNumVars; ++i) m.e[i] = std::max(e[i], o.e[i]);
  return m;
}

bool Monomial::coprime(const Monomial& o) const {
  for (int i = 0; i < kNumVars; ++i)
    if (e[i] && o.e[i]) return false;
  return true;
}

std::string Monomial::str() const {
  static const char* names = "aXYZT";
  std::string s;
  for (int i = 0; i < kNumVars; ++i) {
    if (!e[i]) continue;
    s += names[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

int compare(const Monomial& x, const Monomial& y) {
  int dx = x.degree(), dy = y.degree();
  if (dx != dy) return dx > dy ? 1 : -1;
  for (int v = kT; v >= kX; --v)
    if (x.e[v] != y.e[v]) return x.e[v] < y.e[v] ? 1 : -1;
  if (x.e[kA] != y.e[kA]) return x.e[kA] > y.e[kA] ? 1 : -1;
  return 0;
}

Poly::Poly(const Scalar& c, const Monomial& m) {
  if (!c.is_zero()) t_.push_back({m, c});
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return compare(x.m, y.m) > 0; });
  Poly p;
  for (auto& t : terms) {
    if (!p.t_.empty() && p.t_.back().m == t.m) {
      p.t_.back().c += t.c;
      if (p.t_.back().c.is_zero()) p.t_.pop_back();
    } else if (!t.c.is_zero()) {
      p.t_.push_back(std::move(t));
    }
  }
  return p;
}

Poly Poly::from_upoly(const UPoly& u) {
  std::vector<Term> ts;
  for (int i = u.degree(); i >= 0; --i) {
    Scalar c = u.coeff(i);
    if (!c.is_zero()) ts.push_back({Monomial::var(kA, i), c});
  }
  Poly p;
  p.t_ = std::move(ts);
  return p;
}

bool Poly::is_homogeneous() const {
  for (const auto& t : t_)
    if (t.m.degree() != t_.front().m.degree()) return false;
  return true;
}

bool Poly::is_a_only() const {
  for (const auto& t : t_)
    if (t.m.degree() != 0) return false;
  return true;
}

UPoly Poly::as_upoly() const {
  if (t_.empty()) return UPoly();
  Scalar zero = t_.front().c - t_.front().c;
  std::vector<Scalar> cs;
  for (const auto& t : t_) {
    if (t.m.degree() != 0) throw std::domain_error("polynomial involves X,Y,Z,T");
    std::size_t k = t.m.e[kA];
    if (cs.size() <= k) cs.resize(k + 1, zero);
    cs[k] = t.c;
  }
  return UPoly(std::move(cs));
}

Scalar Poly::constant_term() const {
  if (!t_.empty() && t_.back().m.is_one()) return t_.back().c;
  return t_.empty() ? Scalar() : t_.front().c - t_.front().c;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  if (!o.t_.empty()) r.add_mul_term(Scalar(o.t_.front().c.field(), 1), Monomial{}, o);
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  if (!o.t_.empty()) r.add_mul_term(Scalar(o.t_.front().c.field(), -1), Monomial{}, o);
  return r;
}

void Poly::add_mul_term(const Scalar& c, const Monomial& m, const Poly& o) {
  if (c.is_zero() || o.t_.empty()) return;
  std::vector<Term> out;
  out.reserve(t_.size() + o.t_.size());
  auto i = t_.begin();
  auto j = o.t_.begin();
  while (i != t_.end() || j != o.t_.end()) {
    if (j == o.t_.end()) {
      out.push_back(std::move(*i++));
      continue;
    }
    Monomial mj = j->m * m;
    int cmp = i == t_.end() ? -1 : compare(i->m, mj);
    if (cmp > 0) {
      out.push_back(std::move(*i++));
    } else if (cmp < 0) {
      out.push_back({mj, j->c * c});
      ++j;
    } else {
      Scalar s = i->c + j->c * c;
      if (!s.is_zero()) out.push_back({mj, s});
      ++i;
      ++j;
    }
  }
  t_ = std::move(out);
}

Poly Poly::operator*(const Poly& o) const {
  if (t_.empty() || o.t_.empty()) return Poly();
  if (t_.size() > o.t_.size()) return o * *this;
  Poly r;
  for (const auto& t : t_) r.add_mul_term(t.c, t.m, o);
  return r;
}

Poly Poly::scaled(const Scalar& s) const {
  if (s.is_zero()) return Poly();
  Poly r = *this;
  for (auto& t : r.t_) t.c *= s;
  return r;
}

Poly Poly::mul_term(const Scalar& c, const Monomial& m) const {
  if (c.is_zero()) return Poly();
  Poly r = *this;
  for (auto& t : r.t_) {
    t.m = t.m * m;
    t.c *= c;
  }
  return r;
}

Poly Poly::mul_upoly(const UPoly& u) const { return *this * from_upoly(u); }

bool Poly::operator==(const Poly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (std::size_t i = 0; i < t_.size(); ++i)
    if (!(t_[i].m == o.t_[i].m) || t_[i].c != o.t_[i].c) return false;
  return true;
}

Poly Poly::homogeneous_part(int d) const {
  Poly r;
  for (const auto& t : t_)
    if (t.m.degree() == d) r.t_.push_back(t);
  return r;
}

Poly Poly::specialize_a(const Scalar& alpha) const {
  std::vector<Term> ts;
  for (const auto& t : t_) {
    Scalar c = t.c;
    for (int k = 0; k < t.m.e[kA]; ++k) c *= alpha;
    if (c.is_zero()) continue;
    ts.push_back({t.m.without_a(), c});
  }
  return from_terms(std::move(ts));
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& t : t_) {
    std::string cs = t.c.str();
    bool neg = t.c.is_negative();
    if (neg) cs = cs.substr(1);
    if (!out.empty()) out += neg ? "-" : "+";
    else if (neg) out += "-";
    if (t.m.is_one()) {
      out += cs;
    } else {
      if (cs != "1") out += cs;
      out += t.m.str();
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, Field f) : s_(s), f_(f) {}

  Poly parse() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("empty polynomial", pos_);
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  std::string_view s_;
  Field f_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) ||
           c == '(';
  }

  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  Poly expr() {
    bool neg = false;
    if (peek('+') || peek('-')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    Poly acc = term();
    if (neg) acc = -acc;
    while (peek('+') || peek('-')) {
      bool minus = s_[pos_] == '-';
      ++pos_;
      Poly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (peek('/')) {
        std::size_t at = pos_++;
        mpz_class d = integer();
        if (d == 0) throw ParseError("division by zero", at);
        acc = acc.scaled(Scalar(f_, mpq_class(1, d)));
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly base = primary();
    while (peek('^')) {
      ++pos_;
      std::size_t at = pos_;
      mpz_class e = integer();
      if (e > 1000) throw ParseError("exponent too large", at);
      Poly r(Scalar(f_, 1));
      for (long i = 0; i < e.get_si(); ++i) r = r * base;
      base = r;
    }
    return base;
  }

  Poly primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly(Scalar(f_, mpq_class(integer())));
    const std::string names = "aXYZT";
    auto k = names.find(c);
    if (k == std::string::npos || !std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError(std::string("unexpected '") + c + "'", start);
      throw ParseError("unknown identifier '" + std::string(s_.substr(start, pos_ - start)) + "'",
                       start);
    }
    ++pos_;
    return Poly(Scalar(f_, 1), Monomial::var(static_cast<int>(k)));
  }
};

}  // namespace

Poly parse_poly(std::string_view text, Field field) { return PolyParser(text, field).parse(); }

}  // namespace triadlab
