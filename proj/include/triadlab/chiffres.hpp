#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace triadlab {

/// Generator degrees of a free module, in basis order. Degree n stands for R_A(-n).
using DegreeList = std::vector<int>;

/// The multiset {(twist, multiplicity)} of a dissocie module, e.g. "1^3,2^6".
class Chiffres {
 public:
  Chiffres() = default;
  explicit Chiffres(const DegreeList& degrees);

  /// Grammar `item ("," item)*`, `item := int ("^" int)?`; "" is the zero module.
  static Chiffres parse(std::string_view text);
  std::string str() const;

  const std::vector<std::pair<int, int>>& items() const { return items_; }
  int rank() const;
  /// c1 = -sum(twist * multiplicity).
  long c1() const;
  bool empty() const { return items_.empty(); }
  int multiplicity(int twist) const;
  DegreeList expand() const;
  Chiffres operator+(const Chiffres& o) const;
  bool operator==(const Chiffres&) const = default;

 private:
  std::vector<std::pair<int, int>> items_;
};

/// Same grammar as chiffres but keeps the written order (used for basis order).
DegreeList parse_degree_list(std::string_view text);
std::string format_degree_list(const DegreeList& degrees);

}  // namespace triadlab
