#include "triadlab/session.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace triadlab {

const char* entity_kind_name(EntityKind k) {
  switch (k) {
    case EntityKind::Poly: return "poly";
    case EntityKind::Chiffres: return "chiffres";
    case EntityKind::Q: return "q";
    case EntityKind::Matrix: return "matrix";
    case EntityKind::Module: return "module";
    case EntityKind::Triad: return "triad";
    case EntityKind::Morphism: return "morphism";
    case EntityKind::Subquotient: return "subquotient";
    case EntityKind::Cocycle: return "cocycle";
  }
  return "?";
}

Context Session::context() const { return Context{field, limits}; }

const Declaration* Session::find(const std::string& name) const {
  for (const auto& d : declarations)
    if (d.name == name) return &d;
  return nullptr;
}

const Triad& Session::triad(const std::string& name) const {
  auto it = triads.find(name);
  if (it == triads.end()) throw SessionError("no triad named '" + name + "'", 0, 0);
  return it->second;
}

const PresentedModule& Session::module(const std::string& name) const {
  auto it = modules.find(name);
  if (it == modules.end()) throw SessionError("no module named '" + name + "'", 0, 0);
  return it->second;
}

Field parse_field(std::string_view text) {
  std::string t(text);
  if (t == "QQ") return Field::rationals();
  if (t.rfind("Fp:", 0) == 0 && t.size() > 3 &&
      std::all_of(t.begin() + 3, t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
      t.size() <= 13) {
    unsigned long long p = std::stoull(t.substr(3));
    bool prime = p >= 2 && p < (1ULL << 31);
    for (unsigned long long d = 2; prime && d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (prime) return Field::prime(static_cast<std::uint32_t>(p));
    throw SessionError("field modulus " + t.substr(3) + " is not a prime below 2^31", 0, 0);
  }
  throw SessionError("expected QQ or Fp:<p>, got '" + t + "'", 0, 0);
}

namespace {

bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

/// A statement with its position in the file.
struct Statement {
  std::string text;
  std::size_t line = 0;  // first line

  std::pair<std::size_t, std::size_t> where(std::size_t offset) const {
    std::size_t l = line, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++l;
        col = 1;
      } else {
        ++col;
      }
    }
    return {l, col};
  }
  [[noreturn]] void fail(const std::string& msg, std::size_t offset) const {
    auto [l, c] = where(offset);
    throw SessionError(msg, l, c);
  }
};

std::vector<Statement> split_statements(std::string_view text) {
  std::vector<Statement> out;
  Statement cur;
  int depth = 0;
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line(text.substr(pos, nl - pos));
    ++line_no;
    pos = nl + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (depth == 0) {
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      cur = Statement{line, line_no};
    } else {
      cur.text += "\n" + line;
    }
    for (char c : line) depth += c == '[' ? 1 : c == ']' ? -1 : 0;
    if (depth < 0) cur.fail("unbalanced ']'", cur.text.size());
    if (depth == 0) out.push_back(cur);
  }
  if (depth > 0) cur.fail("unclosed '['", 0);
  return out;
}

struct Cursor {
  const Statement& st;
  std::size_t pos = 0;

  void skip() {
    while (pos < st.text.size() && std::isspace(static_cast<unsigned char>(st.text[pos]))) ++pos;
  }
  bool done() {
    skip();
    return pos >= st.text.size();
  }
  std::string word() {
    skip();
    std::size_t start = pos;
    while (pos < st.text.size() && is_name_char(st.text[pos])) ++pos;
    if (start == pos) st.fail("expected a name", start);
    return st.text.substr(start, pos - start);
  }
  void expect(char c) {
    skip();
    if (pos >= st.text.size() || st.text[pos] != c) st.fail(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  std::string rest() {
    skip();
    std::string r = st.text.substr(pos);
    pos = st.text.size();
    while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back()))) r.pop_back();
    return r;
  }
  /// A bracketed group (brackets kept) or a run of non-space characters.
  std::string value() {
    std::size_t start = pos;
    if (pos < st.text.size() && st.text[pos] == '[') {
      int depth = 0;
      for (; pos < st.text.size(); ++pos) {
        depth += st.text[pos] == '[' ? 1 : st.text[pos] == ']' ? -1 : 0;
        if (depth == 0) break;
      }
      ++pos;
    } else {
      while (pos < st.text.size() && !std::isspace(static_cast<unsigned char>(st.text[pos]))) ++pos;
    }
    return st.text.substr(start, pos - start);
  }
};

std::string strip_brackets(const std::string& v) {
  std::string s = v;
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  std::size_t b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

std::string degrees_text(const DegreeList& d) { return d.empty() ? "[]" : format_degree_list(d); }

std::string entries_text(const GradedMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      s += m.at(i, j).str();
    }
  }
  return s + "]";
}

/// Statement parser: fills the session one declaration at a time.
class Builder {
 public:
  Builder(Session& s) : s_(s) {}

  void statement(const Statement& st) {
    Cursor cur{st};
    std::size_t kw_at = (cur.skip(), cur.pos);
    std::string kw = cur.word();
    if (kw == "field") {
      if (!s_.declarations.empty() || s_.field_declared) st.fail("field must be the first statement", kw_at);
      s_.field_declared = true;
      std::size_t at = (cur.skip(), cur.pos);
      std::string f = cur.rest();
      try {
        Field parsed = parse_field(f);
        if (!override_) s_.field = parsed;
      } catch (const SessionError& e) {
        st.fail(std::string(e.what()).substr(std::string(e.what()).find(": ") + 2), at);
      }
      return;
    }
    if (kw == "command") {
      std::string c = cur.rest();
      if (c.empty()) st.fail("empty command", cur.pos);
      s_.commands.push_back(c);
      return;
    }
    static const std::map<std::string, EntityKind> kinds{
        {"poly", EntityKind::Poly},         {"chiffres", EntityKind::Chiffres},
        {"q", EntityKind::Q},               {"matrix", EntityKind::Matrix},
        {"module", EntityKind::Module},     {"triad", EntityKind::Triad},
        {"morphism", EntityKind::Morphism}, {"subquotient", EntityKind::Subquotient},
        {"cocycle", EntityKind::Cocycle}};
    auto k = kinds.find(kw);
    if (k == kinds.end()) st.fail("unknown statement '" + kw + "'", kw_at);
    Declaration d;
    d.kind = k->second;
    d.line = st.line;
    std::size_t name_at = (cur.skip(), cur.pos);
    d.name = cur.word();
    if (names_.count(d.name)) st.fail("duplicate name '" + d.name + "'", name_at);
    cur.expect('=');
    st_ = &st;
    switch (d.kind) {
      case EntityKind::Poly: poly(d, cur); break;
      case EntityKind::Chiffres: chiffres(d, cur); break;
      case EntityKind::Q: q(d, cur); break;
      case EntityKind::Matrix: matrix(d, cur); break;
      case EntityKind::Module: module(d, cur); break;
      case EntityKind::Triad: triad(d, cur); break;
      case EntityKind::Morphism: morphism(d, cur); break;
      case EntityKind::Subquotient: subquotient(d, cur); break;
      case EntityKind::Cocycle: cocycle(d, cur); break;
    }
    names_.insert(d.name);
    s_.declarations.push_back(std::move(d));
  }

  bool override_ = false;

 private:
  Session& s_;
  std::set<std::string> names_;
  const Statement* st_ = nullptr;
  std::map<std::string, std::size_t> at_;  // key -> offset of its value

  Context ctx() const { return s_.context(); }

  /// Rethrows a ParseError with the position shifted to the statement.
  template <class F>
  auto positioned(std::size_t offset, F&& f) {
    try {
      return f();
    } catch (const ParseError& e) {
      std::string msg = e.what();
      msg = msg.substr(0, msg.rfind(" at position"));
      st_->fail(msg, offset + e.position());
    }
  }

  std::map<std::string, std::string> pairs(Cursor& cur, const std::vector<std::string>& allowed) {
    std::map<std::string, std::string> out;
    at_.clear();
    while (!cur.done()) {
      std::size_t key_at = cur.pos;
      std::string key = cur.word();
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
        st_->fail("unexpected key '" + key + "'", key_at);
      if (out.count(key)) st_->fail("repeated key '" + key + "'", key_at);
      if (cur.pos >= cur.st.text.size() || cur.st.text[cur.pos] != '=') st_->fail("expected '='", cur.pos);
      ++cur.pos;
      at_[key] = cur.pos;
      out[key] = cur.value();
    }
    return out;
  }

  const std::string& need(const std::map<std::string, std::string>& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) st_->fail("missing key '" + key + "'", st_->text.size());
    return it->second;
  }

  template <class T>
  const T& ref(const std::map<std::string, T>& table, EntityKind kind, const std::string& key,
               const std::string& name) {
    auto it = table.find(name);
    if (it != table.end()) return it->second;
    const Declaration* other = s_.find(name);
    std::string why = other ? "'" + name + "' is a " + entity_kind_name(other->kind) + ", expected a " +
                                  entity_kind_name(kind)
                            : "undeclared " + std::string(entity_kind_name(kind)) + " '" + name + "'";
    st_->fail(why, at_.count(key) ? at_[key] : 0);
  }

  DegreeList degrees(const std::string& key, const std::string& v) {
    std::string body = strip_brackets(v);
    std::size_t off = at_[key] + (v.size() && v[0] == '[' ? 1 : 0);
    return positioned(off, [&] { return parse_degree_list(body); });
  }

  void poly(Declaration& d, Cursor& cur) {
    std::size_t at = (cur.skip(), cur.pos);
    std::string body = cur.rest();
    Poly p = positioned(at, [&] { return parse_poly(body, s_.field); });
    s_.polys[d.name] = p;
    d.args = {{"value", p.str()}};
  }

  void chiffres(Declaration& d, Cursor& cur) {
    std::size_t at = (cur.skip(), cur.pos);
    std::string body = strip_brackets(cur.rest());
    Chiffres c = positioned(at, [&] { return Chiffres::parse(body); });
    s_.chiffres[d.name] = c;
    d.args = {{"value", c.empty() ? "[]" : c.str()}};
  }

  void q(Declaration& d, Cursor& cur) {
    std::size_t at = (cur.skip(), cur.pos);
    std::string body = strip_brackets(cur.rest());
    QFunction q = positioned(at, [&] { return parse_q(body); });
    s_.qs[d.name] = q;
    d.args = {{"value", q.empty() ? "[]" : format_q(q)}};
  }

  void matrix(Declaration& d, Cursor& cur) {
    auto p = pairs(cur, {"source", "target", "entries"});
    DegreeList src = degrees("source", need(p, "source"));
    DegreeList tgt = degrees("target", need(p, "target"));
    const std::string& e = need(p, "entries");
    GradedMatrix m(src, tgt);
    if (src.empty() || tgt.empty()) {
      if (!strip_brackets(e).empty()) st_->fail("entries of an empty matrix must be []", at_["entries"]);
    } else {
      m = positioned(at_["entries"], [&] { return parse_matrix(src, tgt, e, s_.field); });
    }
    require_graded(m, "matrix " + d.name);
    s_.matrices[d.name] = m;
    d.args = {{"source", degrees_text(src)}, {"target", degrees_text(tgt)}, {"entries", entries_text(m)}};
  }

  void module(Declaration& d, Cursor& cur) {
    std::size_t form_at = (cur.skip(), cur.pos);
    d.form = cur.word();
    PresentedModule m;
    if (d.form == "quotient") {
      auto p = pairs(cur, {"twist", "relations"});
      const std::string& tw = need(p, "twist");
      int twist = 0;
      try {
        std::size_t used = 0;
        twist = std::stoi(tw, &used);
        if (used != tw.size()) throw std::invalid_argument(tw);
      } catch (const std::exception&) {
        st_->fail("twist must be an integer", at_["twist"]);
      }
      const std::string& r = need(p, "relations");
      if (r.empty() || r[0] != '[') st_->fail("relations must be a bracketed list", at_["relations"]);
      std::vector<Poly> rels;
      std::string body = strip_brackets(r);
      std::size_t base = at_["relations"] + 1;
      if (!body.empty()) base += r.find_first_not_of(" \t\n", 1) - 1;
      std::size_t start = 0;
      while (!body.empty()) {
        std::size_t comma = body.find(',', start);
        std::string piece = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        Poly q = positioned(base + start, [&] { return parse_poly(piece, s_.field); });
        if (!q.is_zero() && !q.is_homogeneous())
          throw DomainError(ErrorCode::NotHomogeneous, "relation " + q.str() + " of module " + d.name);
        rels.push_back(q);
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      m = PresentedModule::quotient(twist, rels);
      std::string canon = "[";
      for (std::size_t i = 0; i < rels.size(); ++i) canon += (i ? ", " : "") + rels[i].str();
      d.args = {{"twist", std::to_string(twist)}, {"relations", canon + "]"}};
    } else if (d.form == "free") {
      auto p = pairs(cur, {"degrees"});
      DegreeList g = degrees("degrees", need(p, "degrees"));
      m = PresentedModule::free(g);
      d.args = {{"degrees", degrees_text(g)}};
    } else if (d.form == "cokernel") {
      auto p = pairs(cur, {"relations"});
      const std::string& r = need(p, "relations");
      m = PresentedModule(ref(s_.matrices, EntityKind::Matrix, "relations", r));
      d.args = {{"relations", r}};
    } else {
      st_->fail("module form must be quotient, free or cokernel", form_at);
    }
    s_.modules[d.name] = m;
  }

  void triad(Declaration& d, Cursor& cur) {
    auto p = pairs(cur, {"d1", "d0", "L1", "L0", "Lm1"});
    Complex3 c;
    c.d1 = ref(s_.matrices, EntityKind::Matrix, "d1", need(p, "d1"));
    c.d0 = ref(s_.matrices, EntityKind::Matrix, "d0", need(p, "d0"));
    d.args = {{"d1", p["d1"]}, {"d0", p["d0"]}};
    auto term = [&](const char* key, const DegreeList& degrees) {
      if (!p.count(key)) return PresentedModule::free(degrees);
      d.args.emplace_back(key, p[key]);
      PresentedModule m = ref(s_.modules, EntityKind::Module, key, p[key]);
      if (m.generators() != degrees)
        throw DomainError(ErrorCode::ShapeMismatch, std::string(key) + " of triad " + d.name +
                                                        " has generators " + degrees_text(m.generators()) +
                                                        ", the differentials need " + degrees_text(degrees));
      return m;
    };
    c.L1 = term("L1", c.d1.source());
    c.L0 = term("L0", c.d1.target());
    c.Lm1 = term("Lm1", c.d0.target());
    if (c.d0.source() != c.d1.target())
      throw DomainError(ErrorCode::ShapeMismatch, "d0 source does not match d1 target in triad " + d.name);
    s_.triads[d.name] = triad_validate(std::move(c), ctx(), d.name);
  }

  void morphism(Declaration& d, Cursor& cur) {
    auto p = pairs(cur, {"f1", "f0", "fm1"});
    Morphism f;
    f.f1 = ref(s_.matrices, EntityKind::Matrix, "f1", need(p, "f1"));
    f.f0 = ref(s_.matrices, EntityKind::Matrix, "f0", need(p, "f0"));
    f.fm1 = ref(s_.matrices, EntityKind::Matrix, "fm1", need(p, "fm1"));
    s_.morphisms[d.name] = f;
    d.args = {{"f1", p["f1"]}, {"f0", p["f0"]}, {"fm1", p["fm1"]}};
  }

  void subquotient(Declaration& d, Cursor& cur) {
    auto p = pairs(cur, {"M0", "J", "M1"});
    SubquotientDatum s{ref(s_.modules, EntityKind::Module, "M0", need(p, "M0")),
                       ref(s_.matrices, EntityKind::Matrix, "J", need(p, "J")),
                       ref(s_.matrices, EntityKind::Matrix, "M1", need(p, "M1"))};
    if (s.J.target() != s.M0.generators() || s.M1.target() != s.M0.generators())
      throw DomainError(ErrorCode::ShapeMismatch, "J and M1 must map into the generators of M0 in " + d.name);
    s_.subquotients[d.name] = s;
    d.args = {{"M0", p["M0"]}, {"J", p["J"]}, {"M1", p["M1"]}};
  }

  void cocycle(Declaration& d, Cursor& cur) {
    auto p = pairs(cur, {"H", "u", "C", "delta0", "delta1"});
    PresentedModule h = ref(s_.modules, EntityKind::Module, "H", need(p, "H"));
    GradedMatrix u = ref(s_.matrices, EntityKind::Matrix, "u", need(p, "u"));
    d.args = {{"H", p["H"]}, {"u", p["u"]}};
    if (p.count("C")) {
      if (p.count("delta0") || p.count("delta1")) st_->fail("give either C or delta0 and delta1", at_["C"]);
      d.args.emplace_back("C", p["C"]);
      s_.cocycles.emplace(d.name,
                          ExtCocycle::from_module(ref(s_.modules, EntityKind::Module, "C", p["C"]), h, u, ctx()));
    } else {
      GradedMatrix d0 = ref(s_.matrices, EntityKind::Matrix, "delta0", need(p, "delta0"));
      GradedMatrix d1 = ref(s_.matrices, EntityKind::Matrix, "delta1", need(p, "delta1"));
      d.args.emplace_back("delta0", p["delta0"]);
      d.args.emplace_back("delta1", p["delta1"]);
      s_.cocycles.emplace(d.name, ExtCocycle::from_resolution(d0, d1, h, u, ctx()));
    }
  }
};

}  // namespace

Session parse_session(std::string_view text, const Context& base, std::optional<Field> field) {
  Session s;
  s.limits = base.limits;
  if (field) s.field = *field;
  Builder b(s);
  b.override_ = field.has_value();
  for (const auto& st : split_statements(text)) b.statement(st);
  return s;
}

std::string format_session(const Session& s) {
  std::string out;
  if (s.field_declared) out += "field " + s.field.name() + "\n";
  for (const auto& d : s.declarations) {
    out += std::string(entity_kind_name(d.kind)) + " " + d.name + " =";
    if (!d.form.empty()) out += " " + d.form;
    for (const auto& [k, v] : d.args) out += k == "value" ? " " + v : " " + k + "=" + v;
    out += "\n";
  }
  for (const auto& c : s.commands) out += "command " + c + "\n";
  return out;
}

}  // namespace triadlab
