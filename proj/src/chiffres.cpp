#include "triadlab/chiffres.hpp"

#include <cctype>
#include <map>

#include "triadlab/poly.hpp"

namespace triadlab {

Chiffres::Chiffres(const DegreeList& degrees) {
  std::map<int, int> m;
  for (int d : degrees) ++m[d];
  items_.assign(m.begin(), m.end());
}

namespace {

long read_int(std::string_view s, std::size_t& pos) {
  std::size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  std::size_t digits = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (digits == pos) throw ParseError("malformed item", start);
  if (pos - digits > 6) throw ParseError("integer too large", start);
  return std::stol(std::string(s.substr(start, pos - start)));
}

void skip_ws(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

std::vector<std::pair<int, int>> parse_items(std::string_view s) {
  std::vector<std::pair<int, int>> out;
  std::size_t pos = 0;
  skip_ws(s, pos);
  if (pos == s.size()) return out;
  for (;;) {
    skip_ws(s, pos);
    int twist = static_cast<int>(read_int(s, pos));
    int mult = 1;
    skip_ws(s, pos);
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      skip_ws(s, pos);
      std::size_t at = pos;
      long m = read_int(s, pos);
      if (m <= 0) throw ParseError("nonpositive multiplicity", at);
      mult = static_cast<int>(m);
    }
    out.emplace_back(twist, mult);
    skip_ws(s, pos);
    if (pos == s.size()) break;
    if (s[pos] != ',') throw ParseError(std::string("unexpected '") + s[pos] + "'", pos);
    ++pos;
  }
  return out;
}

std::string format_item(int twist, int mult) {
  std::string s = std::to_string(twist);
  if (mult > 1) s += "^" + std::to_string(mult);
  return s;
}

}  // namespace

Chiffres Chiffres::parse(std::string_view text) {
  std::map<int, int> m;
  for (auto [t, k] : parse_items(text)) m[t] += k;
  Chiffres c;
  c.items_.assign(m.begin(), m.end());
  return c;
}

std::string Chiffres::str() const {
  std::string s;
  for (auto [t, k] : items_) {
    if (!s.empty()) s += ",";
    s += format_item(t, k);
  }
  return s;
}

int Chiffres::rank() const {
  int r = 0;
  for (auto [t, k] : items_) r += k;
  return r;
}

long Chiffres::c1() const {
  long c = 0;
  for (auto [t, k] : items_) c -= static_cast<long>(t) * k;
  return c;
}

int Chiffres::multiplicity(int twist) const {
  for (auto [t, k] : items_)
    if (t == twist) return k;
  return 0;
}

DegreeList Chiffres::expand() const {
  DegreeList d;
  for (auto [t, k] : items_) d.insert(d.end(), k, t);
  return d;
}

Chiffres Chiffres::operator+(const Chiffres& o) const {
  DegreeList d = expand();
  DegreeList e = o.expand();
  d.insert(d.end(), e.begin(), e.end());
  return Chiffres(d);
}

DegreeList parse_degree_list(std::string_view text) {
  DegreeList d;
  for (auto [t, k] : parse_items(text)) d.insert(d.end(), k, t);
  return d;
}

std::string format_degree_list(const DegreeList& degrees) {
  std::string s;
  std::size_t i = 0;
  while (i < degrees.size()) {
    std::size_t j = i;
    while (j < degrees.size() && degrees[j] == degrees[i]) ++j;
    if (!s.empty()) s += ",";
    s += format_item(degrees[i], static_cast<int>(j - i));
    i = j;
  }
  return s;
}

}  // namespace triadlab
