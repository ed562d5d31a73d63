#include "triadlab/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "triadlab/session.hpp"

namespace triadlab::cli {

std::vector<std::string> split_command(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false, any = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
      any = true;
    } else if (!quoted && std::isspace(static_cast<unsigned char>(c))) {
      if (any) out.push_back(cur);
      cur.clear();
      any = false;
    } else {
      cur += c;
      any = true;
    }
  }
  if (any) out.push_back(cur);
  return out;
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string session;
  std::string out;
  std::string field;
  std::optional<int> bound, max_degree;
  std::string format = "text";
  bool matrices = false;

  // triad selection
  std::string triad, cone, compact, trivial;
  // command arguments
  std::string module, cocycle, subquotient, source, target, map, q, at = "special", degrees;
  std::optional<int> truncate;
  int length = 4;
};

/// Ordered report lines; `text` overrides "key: value" in the text rendering.
class Report {
 public:
  void add(const std::string& key, const std::string& value, const std::string& text = "") {
    lines_.push_back({key, value, text.empty() ? key + ": " + value : text});
  }
  /// Shown only with --format=records.
  void record(const std::string& key, const std::string& value) { lines_.push_back({key, value, ""}); }
  /// Shown only as text.
  void title(const std::string& text) { lines_.push_back({"", "", text}); }
  void append(const Report& o) { lines_.insert(lines_.end(), o.lines_.begin(), o.lines_.end()); }

  std::string render(bool records) const {
    std::string s;
    for (const auto& l : lines_) {
      if (records) {
        if (!l.key.empty()) s += l.key + "=" + l.value + "\n";
      } else if (!l.text.empty()) {
        s += l.text + "\n";
      }
    }
    return s;
  }

 private:
  struct Line {
    std::string key, value, text;
  };
  std::vector<Line> lines_;
};

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string chiffres(const DegreeList& d) { return Chiffres(d).str(); }

std::string ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string range_text(const DegreeRange& r) {
  return r.empty() ? "empty" : std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

void add_terms(Report& r, const Complex3& c) {
  std::string l1 = chiffres(c.L1.generators()), l0 = chiffres(c.L0.generators()), lm1 = chiffres(c.Lm1.generators());
  r.title("terms: " + l1 + " → " + l0 + " → " + lm1);
  r.record("L1", l1);
  r.record("L0", l0);
  r.record("Lm1", lm1);
}

void add_matrices(Report& r, const Complex3& c, const Options& o) {
  if (!o.matrices) return;
  r.add("d1", c.d1.str());
  r.add("d0", c.d0.str());
  for (int i : {1, 0, -1}) {
    const PresentedModule& m = c.term(i);
    if (!m.is_free()) r.add(i == 1 ? "rel.L1" : i == 0 ? "rel.L0" : "rel.Lm1", m.relations().str());
  }
}

std::string hilbert_text(const PresentedModule& m, const Context& ctx) {
  Finiteness f = is_finite_over_A(m, ctx.limits.finiteness_bound, ctx);
  if (f.verdict == Finiteness::Verdict::NotFinite) return "not finite over A";
  if (f.verdict == Finiteness::Verdict::Inconclusive) return "inconclusive";
  if (!f.bottom) return "0";
  return std::to_string(*f.bottom) + ".." + std::to_string(*f.top) + ": " +
         ints(special_hilbert(m, *f.bottom, *f.top, ctx));
}

std::string ideal_text(const std::vector<Poly>& gens) {
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i].str();
  return s + ")";
}

/// Session-free commands still get a session object for uniformity.
Session load_session(const Options& o, const Context& base) {
  std::optional<Field> field;
  if (!o.field.empty()) {
    try {
      field = parse_field(o.field);
    } catch (const SessionError& e) {
      throw UsageError(std::string("--field: ") + e.what());
    }
  }
  if (o.session.empty()) {
    Session s;
    s.limits = base.limits;
    if (field) s.field = *field;
    return s;
  }
  std::ifstream in(o.session);
  if (!in) throw UsageError("cannot read session file " + o.session);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_session(buf.str(), base, field);
}

const Triad& named_triad(const Session& s, const std::string& name) {
  auto it = s.triads.find(name);
  if (it == s.triads.end()) throw UsageError("no triad named '" + name + "' in the session");
  return it->second;
}

template <class T>
const T& named(const std::map<std::string, T>& table, const std::string& kind, const std::string& name) {
  if (name.empty()) throw UsageError("missing --" + kind);
  auto it = table.find(name);
  if (it == table.end()) throw UsageError("no " + kind + " named '" + name + "' in the session");
  return it->second;
}

/// --triad, --cone, --compact-cone or --trivial.
Triad select_triad(const Options& o, const Session& s, const Context& ctx) {
  int given = !o.triad.empty() + !o.cone.empty() + !o.compact.empty() + !o.trivial.empty();
  if (given != 1) throw UsageError("give exactly one of --triad, --cone, --compact-cone, --trivial");
  if (!o.triad.empty()) return named_triad(s, o.triad);
  if (!o.cone.empty()) return cone_triad(named(s.cocycles, "cocycle", o.cone), ctx);
  if (!o.compact.empty()) return compact_cone_triad(named(s.cocycles, "cocycle", o.compact), ctx);
  return trivial_triad(named(s.subquotients, "subquotient", o.trivial), ctx);
}

void add_psi(Report& r, const PsiReport& p, const std::string& prefix) {
  r.add(prefix + "heart_injective", yes(p.heart_injective));
  r.add(prefix + "heart_surjective", yes(p.heart_surjective));
  r.add(prefix + "cokernel_injective", yes(p.cokernel_injective));
  r.add(prefix + "quotient_flat", yes(p.quotient_flat));
  r.add(prefix + "kernel_surjective", yes(p.kernel_surjective));
  r.add(prefix + "special_kernel_surjective", yes(p.special_kernel_surjective));
  r.add(prefix + "psi", yes(p.is_psi()));
  r.add(prefix + "strong", yes(p.is_strong()));
}

void add_flags(Report& r, const TriadReport& t) {
  r.add("modular", yes(t.modular));
  r.add("representable", yes(t.representable));
  r.add("exact", yes(t.exact));
  r.add("elementary", yes(t.elementary));
}

Report analyze(const Triad& t, const Options& o, const Context& ctx) {
  Report r;
  TriadReport rep = triad_invariants(t, ctx);
  add_terms(r, t.complex);
  add_matrices(r, t.complex, o);
  r.add("majeure", yes(t.is_majeure()));
  r.add("n_gens", chiffres(rep.n_generators), "N gens: " + chiffres(rep.n_generators));
  r.add("c1_n", std::to_string(rep.c1_n), "c1(N): " + std::to_string(rep.c1_n));
  r.add("window", range_text(rep.window));
  for (std::size_t i = 0; i < rep.heart.size(); ++i) {
    int n = rep.window.lo + static_cast<int>(i);
    r.add("H." + std::to_string(n), rep.heart[i].str(), "H_" + std::to_string(n) + ": " + rep.heart[i].str());
  }
  for (std::size_t i = 0; i < rep.cokernel.size(); ++i) {
    int n = rep.window.lo + static_cast<int>(i);
    r.add("C." + std::to_string(n), rep.cokernel[i].str(), "C_" + std::to_string(n) + ": " + rep.cokernel[i].str());
  }
  add_flags(r, rep);
  r.add("special", ints(rep.special), "V(k): " + ints(rep.special));
  r.add("generic", ints(rep.generic), "V(K): " + ints(rep.generic));
  return r;
}

Report resolve(const Session& s, const Options& o, const Context& ctx) {
  const PresentedModule& m = named(s.modules, "module", o.module);
  if (o.length < 1) throw UsageError("--length must be positive");
  std::vector<GradedMatrix> res = free_resolution(m, static_cast<std::size_t>(o.length), ctx);
  Report r;
  r.title("module " + o.module);
  std::string f0 = res.empty() ? chiffres(m.generators()) : chiffres(res[0].target());
  r.add("F0", f0);
  for (std::size_t i = 0; i < res.size(); ++i) r.add("F" + std::to_string(i + 1), chiffres(res[i].source()));
  if (o.matrices)
    for (std::size_t i = 0; i < res.size(); ++i) r.add("delta" + std::to_string(i), res[i].str());
  return r;
}

Report fiber(const Triad& t, const Options& o, const Context& ctx) {
  FiberPoint p;
  if (o.at == "special")
    p = FiberPoint::Special;
  else if (o.at == "generic")
    p = FiberPoint::Generic;
  else if (o.at == "base")
    p = FiberPoint::Base;
  else
    throw UsageError("--at must be special, generic or base");
  FiberValue v = fiber_functor(t, p, ctx);
  Report r;
  r.add("point", o.at);
  r.add("window", range_text(v.window));
  r.add("hilbert", ints(v.hilbert));
  for (std::size_t i = 0; i < v.pieces.size(); ++i) {
    int n = v.window.lo + static_cast<int>(i);
    r.add("piece." + std::to_string(n), v.pieces[i].str(), "V(A)_" + std::to_string(n) + ": " + v.pieces[i].str());
  }
  r.add("zero", yes(is_zero_module(v.module, ctx)));
  return r;
}

Report triad_summary(const Triad& t, const Options& o, const Context& ctx) {
  Report r;
  add_terms(r, t.complex);
  add_matrices(r, t.complex, o);
  TriadReport rep = triad_invariants(t, ctx);
  r.add("n_gens", chiffres(rep.n_generators), "N gens: " + chiffres(rep.n_generators));
  add_flags(r, rep);
  return r;
}

Report psi(const Session& s, const Options& o, const Context& ctx) {
  Report r;
  if (o.truncate) {
    const Triad& t = select_triad(o, s, ctx);
    Complex3 q = quotient_at_most(t.complex, *o.truncate, ctx);
    r.title("projection onto the quotient in degrees <= " + std::to_string(*o.truncate));
    add_psi(r, psi_check(t.complex, q, Morphism::identity(t.complex, ctx), ctx), "");
    return r;
  }
  const Triad& src = named(s.triads, "source", o.source);
  const Triad& tgt = named(s.triads, "target", o.target);
  Morphism f = o.map.empty() ? Morphism::identity(src.complex, ctx) : named(s.morphisms, "map", o.map);
  add_psi(r, psi_check(src.complex, tgt.complex, f, ctx), "");
  return r;
}

Report with_map(const Triad& input, const TriadMap& m, const Options& o, const Context& ctx) {
  Report r = triad_summary(m.triad, o, ctx);
  add_psi(r, psi_check(m.triad.complex, input.complex, m.map, ctx), "map.");
  return r;
}

Report subquotient(const Triad& t, const Context& ctx) {
  Subquotient q = subquotient_of(t, ctx);
  Report r;
  auto mod = [&](const std::string& name, const PresentedModule& m) {
    r.add(name + ".hilbert", hilbert_text(m, ctx), name + ": " + hilbert_text(m, ctx));
    r.add(name + ".ann", ideal_text(annihilator(m, ctx)), "  ann " + ideal_text(annihilator(m, ctx)));
  };
  mod("M0", q.datum.M0);
  mod("J", q.J);
  mod("M1", q.M1);
  mod("M", q.M);
  mod("Mm1", q.Mm1);
  r.add("consistent", yes(q.consistent));
  return r;
}

Report koszul(const Options& o, const Context& ctx) {
  DegreeList n;
  try {
    n = parse_degree_list(o.degrees);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--degrees: ") + e.what());
  }
  if (n.size() != 4) throw UsageError("--degrees needs four integers n1,n2,n3,n4");
  KoszulQ k = koszul_q_sharp(n[0], n[1], n[2], n[3]);
  Report r;
  r.add("degrees", format_degree_list(n));
  const int mu = std::max(n[0] + n[3], n[1] + n[2]);
  std::string sharp;
  for (int m = n[0] + n[1]; m <= mu; ++m) sharp += (sharp.empty() ? "" : ",") + std::to_string(m) + ":" + std::to_string(k.sharp(m));
  r.add("q_sharp", sharp);
  r.add("q", format_q(k.q()));
  r.add("P", q_module(k.q()).str());
  std::vector<Poly> f;
  for (int v = 0; v < 4; ++v) f.push_back(Poly(ctx.one(), Monomial::var(kX + v, n[v])));
  std::vector<GradedMatrix> kc = koszul_complex(f, ctx);
  bool dd = true;
  for (std::size_t i = 0; i + 1 < kc.size(); ++i) dd = dd && (kc[i] * kc[i + 1]).is_zero();
  for (std::size_t i = 0; i < kc.size(); ++i) r.add("K" + std::to_string(i + 1), chiffres(kc[i].source()));
  r.add("dd_zero", yes(dd), std::string("d∘d = 0: ") + yes(dd));
  return r;
}

Report family(const Triad& t, const Session& s, const Options& o, const Context& ctx) {
  if (o.q.empty()) throw UsageError("missing --q");
  QFunction q;
  if (auto it = s.qs.find(o.q); it != s.qs.end()) {
    q = it->second;
  } else {
    try {
      q = parse_q(o.q);
    } catch (const ParseError& e) {
      throw UsageError(std::string("--q: ") + e.what());
    }
  }
  FamilyReport f = family_report(t, q, ctx);
  Report r;
  r.add("bracket", f.bracket(), "family: " + f.bracket());
  r.add("P", f.P.str());
  r.record("L1", f.terms[0].str());
  r.record("L0", f.terms[1].str());
  r.record("Lm1", f.terms[2].str());
  r.title("(d,g) = (" + std::to_string(f.dg.d) + "," + std::to_string(f.dg.g) + "), h0 = " + std::to_string(f.h0));
  r.record("d", std::to_string(f.dg.d));
  r.record("g", std::to_string(f.dg.g));
  r.record("h0", std::to_string(f.h0));
  r.add("n_gens", chiffres(f.n_generators), "N gens: " + chiffres(f.n_generators));
  r.add("window", range_text(f.window));
  r.add("special", ints(f.special), "V(k): " + ints(f.special));
  r.add("generic", ints(f.generic), "V(K): " + ints(f.generic));
  return r;
}

void add_triad_options(CLI::App* c, Options& o) {
  c->add_option("--triad", o.triad, "triad declared in the session");
  c->add_option("--cone", o.cone, "cone triad of a declared cocycle");
  c->add_option("--compact-cone", o.compact, "compact cone triad of a declared cocycle");
  c->add_option("--trivial", o.trivial, "trivial triad of a declared subquotient");
}

/// Builds the parser; the chosen subcommand name lands in o.command.
void configure(CLI::App& app, Options& o) {
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--session", o.session, "session file (.tl)");
  app.add_option("--out", o.out, "write the report to this file instead of standard output");
  app.add_option("--field", o.field, "QQ or Fp:<p>; overrides the session");
  app.add_option("--bound", o.bound, "nilpotency bound of the finiteness test");
  app.add_option("--max-degree", o.max_degree, "largest S-pair degree");
  app.add_option("--format", o.format, "text or records")->check(CLI::IsMember({"text", "records"}));
  app.add_flag("--matrices", o.matrices, "also print differentials");

  auto sub = [&](const char* name, const char* help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->callback([&o, name] { o.command = name; });
    return c;
  };
  sub("check", "validate a session and run its command lines");
  sub("resolve", "minimal free resolution of a module")->add_option("--module", o.module)->required();
  app.get_subcommand("resolve")->add_option("--length", o.length, "number of maps");
  add_triad_options(sub("analyze", "invariants of a triad"), o);
  CLI::App* fib = sub("fiber", "value of the associated functor");
  add_triad_options(fib, o);
  fib->add_option("--at", o.at, "special, generic or base");
  add_triad_options(sub("dual", "dual triad"), o);
  CLI::App* ps = sub("psi", "pseudo-isomorphism check");
  add_triad_options(ps, o);
  ps->add_option("--source", o.source);
  ps->add_option("--target", o.target);
  ps->add_option("--map", o.map, "declared morphism; identity by default");
  ps->add_option("--truncate", o.truncate, "check the projection onto degrees <= r");
  sub("trivial", "trivial triad of a subquotient")->add_option("--subquotient", o.subquotient)->required();
  sub("cone", "cone triad of a cocycle")->add_option("--cocycle", o.cocycle)->required();
  sub("compact-cone", "compact cone triad of a cocycle")->add_option("--cocycle", o.cocycle)->required();
  add_triad_options(sub("reduce-elementary", "elementary reduction"), o);
  add_triad_options(sub("majeure", "majeure resolution"), o);
  add_triad_options(sub("subquotient", "subquotient of a triad"), o);
  sub("koszul", "q-sharp of a Koszul family")->add_option("--degrees", o.degrees, "n1,n2,n3,n4")->required();
  CLI::App* fam = sub("family", "degree and genus of a family");
  add_triad_options(fam, o);
  fam->add_option("--q", o.q, "q-function like 2:1,3:3, or a declared q")->required();
}

/// Result of parsing one argument vector.
struct Parsed {
  Options options;
  std::optional<int> exit;  // set when parsing already decided the outcome
  std::string message;
};

Parsed parse_args(const std::vector<std::string>& args) {
  Parsed p;
  CLI::App app{"Exact triad calculus over k[a]_(a)", "triadlab"};
  configure(app, p.options);
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp&) {
    p.exit = kOk;
    p.message = app.help();
  } catch (const CLI::CallForAllHelp&) {
    p.exit = kOk;
    p.message = app.help("", CLI::AppFormatMode::All);
  } catch (const CLI::ParseError& e) {
    p.exit = kUsageError;
    p.message = std::string(e.what()) + "\n" + app.help();
  }
  return p;
}

Report execute(const Options& o, const Session& s, const Context& ctx, int depth) {
  const std::string& c = o.command;
  if (c == "check") {
    Report r;
    r.add("field", s.field.name());
    r.add("declarations", std::to_string(s.declarations.size()));
    for (const auto& [name, t] : s.triads) {
      const Complex3& x = t.complex;
      r.add("triad." + name,
            chiffres(x.L1.generators()) + " → " + chiffres(x.L0.generators()) + " → " + chiffres(x.Lm1.generators()),
            "triad " + name + ": " + chiffres(x.L1.generators()) + " → " + chiffres(x.L0.generators()) + " → " +
                chiffres(x.Lm1.generators()) + (t.is_majeure() ? " (majeure)" : ""));
    }
    if (depth > 0 && !s.commands.empty()) throw UsageError("check cannot run inside a session command");
    for (const auto& line : s.commands) {
      Parsed p = parse_args(split_command(line));
      if (p.exit) throw UsageError("session command '" + line + "': " + p.message);
      if (p.options.command == "check") throw UsageError("session command '" + line + "' cannot be check");
      r.add("command", line, "> " + line);
      r.append(execute(p.options, s, ctx, depth + 1));
    }
    r.add("status", "ok");
    return r;
  }
  if (c == "resolve") return resolve(s, o, ctx);
  if (c == "analyze") return analyze(select_triad(o, s, ctx), o, ctx);
  if (c == "fiber") return fiber(select_triad(o, s, ctx), o, ctx);
  if (c == "dual") return triad_summary(dual_triad(select_triad(o, s, ctx), ctx), o, ctx);
  if (c == "psi") return psi(s, o, ctx);
  if (c == "trivial") return triad_summary(trivial_triad(named(s.subquotients, "subquotient", o.subquotient), ctx), o, ctx);
  if (c == "cone") return triad_summary(cone_triad(named(s.cocycles, "cocycle", o.cocycle), ctx), o, ctx);
  if (c == "compact-cone")
    return triad_summary(compact_cone_triad(named(s.cocycles, "cocycle", o.cocycle), ctx), o, ctx);
  if (c == "reduce-elementary") {
    Triad t = select_triad(o, s, ctx);
    return with_map(t, elementary_reduction(t, ctx), o, ctx);
  }
  if (c == "majeure") {
    Triad t = select_triad(o, s, ctx);
    return with_map(t, resolution_majeure(t, ctx), o, ctx);
  }
  if (c == "subquotient") return subquotient(select_triad(o, s, ctx), ctx);
  if (c == "koszul") return koszul(o, ctx);
  if (c == "family") return family(select_triad(o, s, ctx), s, o, ctx);
  throw UsageError("unknown command " + c);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Parsed p = parse_args(args);
  if (p.exit) {
    (*p.exit == kOk ? out : err) << p.message;
    return *p.exit;
  }
  const Options& o = p.options;
  try {
    Context base;
    if (o.bound) base.limits.finiteness_bound = *o.bound;
    if (o.max_degree) base.limits.max_degree = *o.max_degree;
    Session s = load_session(o, base);
    std::string text = execute(o, s, s.context(), 0).render(o.format == "records");
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!(f << text)) throw UsageError("cannot write " + o.out);
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const SessionError& e) {
    err << "session error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const ResourceAbort& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceAbort;
  }
}

}  // namespace triadlab::cli
