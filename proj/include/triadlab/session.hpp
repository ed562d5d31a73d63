#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "triadlab/families.hpp"

namespace triadlab {

/// Syntax or semantic problem in a session file; line and column are 1-based.
class SessionError : public std::runtime_error {
 public:
  SessionError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

enum class EntityKind { Poly, Chiffres, Q, Matrix, Module, Triad, Morphism, Subquotient, Cocycle };

const char* entity_kind_name(EntityKind k);

/// One statement `kind name = body`, kept in canonical form. `form` is the
/// leading word of a module body; `args` holds key=value pairs (or the single
/// key "value" for poly, chiffres and q).
struct Declaration {
  EntityKind kind = EntityKind::Poly;
  std::string name;
  std::string form;
  std::vector<std::pair<std::string, std::string>> args;
  std::size_t line = 0;

  bool operator==(const Declaration& o) const {
    return kind == o.kind && name == o.name && form == o.form && args == o.args;
  }
};

/// Parsed and validated session.
///
///   field QQ | field Fp:<p>
///   poly f = X^2 - a*T
///   chiffres P = 2,3^3
///   q Q = 2:1,3:3
///   matrix d = source=1^3,2^6 target=0,1^4 entries=[X, Y, ...; ...]
///   module H = quotient twist=-1 relations=[X,Y,Z,a*T,T^2]
///   module F = free degrees=0,1^4
///   module M = cokernel relations=<matrix>
///   triad L = d1=<matrix> d0=<matrix> [L1=<module> L0=<module> Lm1=<module>]
///   morphism f = f1=<matrix> f0=<matrix> fm1=<matrix>
///   subquotient S = M0=<module> J=<matrix> M1=<matrix>
///   cocycle E = H=<module> u=<matrix> (C=<module> | delta0=<matrix> delta1=<matrix>)
///   command <subcommand> <flags...>
///
/// `#` starts a comment; a statement continues while a '[' is open.
struct Session {
  Field field;
  bool field_declared = false;
  Limits limits;
  std::vector<Declaration> declarations;
  std::vector<std::string> commands;

  std::map<std::string, Poly> polys;
  std::map<std::string, Chiffres> chiffres;
  std::map<std::string, QFunction> qs;
  std::map<std::string, GradedMatrix> matrices;
  std::map<std::string, PresentedModule> modules;
  std::map<std::string, Triad> triads;
  std::map<std::string, Morphism> morphisms;
  std::map<std::string, SubquotientDatum> subquotients;
  std::map<std::string, ExtCocycle> cocycles;

  Context context() const;
  const Declaration* find(const std::string& name) const;
  /// Looks up a name of the given kind; SessionError when it is missing.
  const Triad& triad(const std::string& name) const;
  const PresentedModule& module(const std::string& name) const;

  bool operator==(const Session& o) const {
    return field == o.field && field_declared == o.field_declared && declarations == o.declarations &&
           commands == o.commands;
  }
};

/// `field` overrides any field statement in the text; limits come from `base`. Throws SessionError on
/// syntax and naming problems and DomainError when an entity fails validation.
Session parse_session(std::string_view text, const Context& base = {}, std::optional<Field> field = {});
std::string format_session(const Session& s);

/// "QQ" or "Fp:<p>"; SessionError otherwise (line 0).
Field parse_field(std::string_view text);

}  // namespace triadlab
