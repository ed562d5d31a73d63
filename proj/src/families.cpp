#include "triadlab/families.hpp"

#include <algorithm>
#include <cctype>

namespace triadlab {

mpq_class NumericPolynomial::operator()(long n) const {
  mpq_class x(n), v(0), p(1);
  for (const auto& ci : c) {
    v += ci * p;
    p *= x;
  }
  return v;
}

NumericPolynomial NumericPolynomial::operator+(const NumericPolynomial& o) const {
  NumericPolynomial r;
  for (int i = 0; i < 4; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

NumericPolynomial NumericPolynomial::operator-(const NumericPolynomial& o) const {
  NumericPolynomial r;
  for (int i = 0; i < 4; ++i) r.c[i] = c[i] - o.c[i];
  return r;
}

NumericPolynomial NumericPolynomial::scaled(long k) const {
  NumericPolynomial r;
  for (int i = 0; i < 4; ++i) r.c[i] = c[i] * k;
  return r;
}

std::string NumericPolynomial::str() const {
  std::string s;
  for (int i = 3; i >= 0; --i) {
    if (c[i] == 0) continue;
    mpq_class a = abs(c[i]);
    if (!s.empty())
      s += c[i] < 0 ? " - " : " + ";
    else if (c[i] < 0)
      s += "-";
    if (i == 0 || a != 1) s += a.get_str();
    if (i > 0) s += i == 1 ? "n" : "n^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

long euler_B(long n) { return (n + 1) * (n + 2) * (n + 3) / 6; }

namespace {

/// B(n - t) expanded in powers of n.
NumericPolynomial shifted_B(long t) {
  // (n + 1 - t)(n + 2 - t)(n + 3 - t) / 6
  std::array<mpq_class, 4> p{1, 0, 0, 0};
  for (long r = 1; r <= 3; ++r) {
    mpq_class k(r - t);
    std::array<mpq_class, 4> q{};
    for (int i = 0; i < 3; ++i) {
      q[i + 1] += p[i];
      q[i] += p[i] * k;
    }
    p = q;
  }
  NumericPolynomial out;
  for (int i = 0; i < 4; ++i) out.c[i] = p[i] / 6;
  return out;
}

}  // namespace

NumericPolynomial euler_poly(const Chiffres& c) {
  NumericPolynomial out;
  for (auto [t, k] : c.items()) out = out + shifted_B(t).scaled(k);
  return out;
}

TriadTerms terms_of(const Complex3& c) {
  return {Chiffres(c.L1.generators()), Chiffres(c.L0.generators()), Chiffres(c.Lm1.generators())};
}

long triad_c1(const TriadTerms& t) { return t[0].c1() - t[1].c1() + t[2].c1(); }

QFunction parse_q(std::string_view text) {
  QFunction q;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> long {
    skip();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw ParseError("expected an integer", start);
    return std::stol(std::string(text.substr(start, pos - start)));
  };
  skip();
  if (pos == text.size()) return q;
  for (;;) {
    std::size_t at = pos;
    long n = number();
    skip();
    if (pos >= text.size() || text[pos] != ':') throw ParseError("expected ':'", pos);
    ++pos;
    long v = number();
    if (v < 0) throw ParseError("q values must be nonnegative", at);
    if (q.count(static_cast<int>(n))) throw ParseError("repeated degree", at);
    if (v > 0) q[static_cast<int>(n)] = static_cast<int>(v);
    skip();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  return q;
}

std::string format_q(const QFunction& q) {
  std::string s;
  for (auto [n, v] : q) {
    if (!s.empty()) s += ",";
    s += std::to_string(n) + ":" + std::to_string(v);
  }
  return s;
}

Chiffres q_module(const QFunction& q) {
  DegreeList d;
  for (auto [n, v] : q)
    for (int i = 0; i < v; ++i) d.push_back(n);
  return Chiffres(d);
}

long shift_h0(const QFunction& q, const TriadTerms& terms) {
  long s = 0;
  for (auto [n, v] : q) s += static_cast<long>(n) * v;
  return s + triad_c1(terms);
}

NumericPolynomial curve_polynomial(const FamilyShape& s) {
  // F(n) = chi(J_C(n + h)); the curve polynomial is B(n) - F(n - h)
  NumericPolynomial f = euler_poly(s.terms[0]) - euler_poly(s.terms[1]) + euler_poly(s.terms[2]) - euler_poly(s.P);
  NumericPolynomial shifted;
  // substitute n -> n - h
  for (int i = 0; i < 4; ++i) {
    // (n - h)^i expanded
    std::array<mpq_class, 4> p{1, 0, 0, 0};
    for (int r = 0; r < i; ++r) {
      std::array<mpq_class, 4> q{};
      for (int j = 0; j < 3; ++j) {
        q[j + 1] += p[j];
        q[j] -= p[j] * s.h;
      }
      p = q;
    }
    for (int j = 0; j < 4; ++j) shifted.c[j] += f.c[i] * p[j];
  }
  return shifted_B(0) - shifted;
}

DegreeGenus degree_genus(const FamilyShape& s) {
  int rank = s.terms[0].rank() - s.terms[1].rank() + s.terms[2].rank() - s.P.rank();
  if (rank != 1)
    throw DomainError(ErrorCode::RankMismatch,
                      "rank(L1) - rank(L0) + rank(L-1) - rank(P) = " + std::to_string(rank) + ", expected 1");
  NumericPolynomial v = curve_polynomial(s);
  mpq_class d = v(1) - v(0), g = 1 - v(0);
  if (d.get_den() != 1 || g.get_den() != 1)
    throw DomainError(ErrorCode::NonInteger, "degree or genus is not an integer: " + v.str());
  for (long n : {-3L, -1L, 2L, 5L, 11L})
    if (v(n) != d * n + 1 - g)
      throw DomainError(ErrorCode::NonInteger, "B(n) - chi(J_C(n)) = " + v.str() + " is not d n + 1 - g");
  return DegreeGenus{d.get_num().get_si(), g.get_num().get_si()};
}

int KoszulQ::sharp(int m) const {
  const int mu = std::max(n[0] + n[3], n[1] + n[2]);
  if (m < n[0] + n[1]) return 0;
  if (m < n[0] + n[2]) return 1;
  if (m < mu) return 2;
  return 3;
}

QFunction KoszulQ::q() const {
  QFunction out;
  const int mu = std::max(n[0] + n[3], n[1] + n[2]);
  for (int m = n[0] + n[1]; m <= mu; ++m) {
    int v = sharp(m) - sharp(m - 1);
    if (v > 0) out[m] = v;
  }
  return out;
}

KoszulQ koszul_q_sharp(int n1, int n2, int n3, int n4) {
  if (n1 < 1 || n1 > n2 || n2 > n3 || n3 > n4)
    throw DomainError(ErrorCode::ShapeMismatch, "degrees must satisfy 1 <= n1 <= n2 <= n3 <= n4");
  return KoszulQ{{n1, n2, n3, n4}};
}

std::vector<GradedMatrix> koszul_complex(const std::vector<Poly>& f, const Context& ctx) {
  if (f.empty()) throw DomainError(ErrorCode::ShapeMismatch, "empty sequence");
  const std::size_t r = f.size();
  for (const auto& p : f)
    if (p.is_zero() || !p.is_homogeneous()) throw DomainError(ErrorCode::NotHomogeneous, "sequence element " + p.str());
  // index subsets of each size, lexicographic
  std::vector<std::vector<std::vector<std::size_t>>> levels(r + 1);
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    levels[cur.size()].push_back(cur);
    for (std::size_t i = start; i < r; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  for (auto& l : levels) std::sort(l.begin(), l.end());
  auto degrees = [&](std::size_t p) {
    DegreeList d;
    for (const auto& s : levels[p]) {
      int deg = 0;
      for (std::size_t i : s) deg += f[i].degree();
      d.push_back(deg);
    }
    return d;
  };
  std::vector<GradedMatrix> out;
  for (std::size_t p = 1; p <= r; ++p) {
    GradedMatrix m(degrees(p), degrees(p - 1));
    for (std::size_t j = 0; j < levels[p].size(); ++j) {
      const auto& s = levels[p][j];
      for (std::size_t k = 0; k < s.size(); ++k) {
        std::vector<std::size_t> rest = s;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        auto it = std::lower_bound(levels[p - 1].begin(), levels[p - 1].end(), rest);
        std::size_t row = static_cast<std::size_t>(it - levels[p - 1].begin());
        // k is 0-based here, so (-1)^(p-k) becomes (-1)^(p-1-k)
        bool negative = (p - 1 - k) % 2 == 1;
        m.set(row, j, negative ? -f[s[k]] : f[s[k]]);
      }
    }
    out.push_back(std::move(m));
  }
  (void)ctx;
  return out;
}

std::string FamilyReport::bracket() const {
  return P.str() + " → [" + terms[0].str() + " → " + terms[1].str() + " → " + terms[2].str() + "]";
}

FamilyReport family_report(const Triad& t, const QFunction& q, const Context& ctx) {
  FamilyReport r;
  r.P = q_module(q);
  r.terms = terms_of(t.complex);
  r.h0 = shift_h0(q, r.terms);
  r.dg = degree_genus(FamilyShape{r.P, r.terms, r.h0});
  r.n_generators = homology(t.complex, 1, ctx).generators.source();
  r.window = support_window(t, ctx);
  r.special = fiber_functor(t, FiberPoint::Special, ctx).hilbert;
  r.generic = fiber_functor(t, FiberPoint::Generic, ctx).hilbert;
  return r;
}

}  // namespace triadlab
