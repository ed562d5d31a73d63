#pragma once

#include <vector>

#include "triadlab/groebner.hpp"

namespace triadlab {

/// Composable matrices: chain[i] maps F_{i+1} to F_i.
/// kept[i] lists the surviving basis indices of F_i after minimalize.
struct ChainIds {
  std::vector<std::vector<std::size_t>> kept;
  /// With tracking: inclusion[i] embeds the reduced F_i into the original F_i
  /// so that the inclusions form a chain map.
  std::vector<GradedMatrix> inclusion;
};

/// Cancels every A-unit sitting in a degree-0 slot of a pivotable matrix.
/// Each pivot removes one basis vector from two consecutive terms; frozen
/// matrices only lose the matching rows or columns. The result is isomorphic
/// to the input over A and stays inside B.
ChainIds minimalize(std::vector<GradedMatrix>& chain, const std::vector<bool>& pivotable,
                    const Context& ctx, bool track_inclusion = false);

/// True when no degree-0 slot of m holds an A-unit.
bool is_minimal(const GradedMatrix& m);

/// The submodule generated by the columns of gens inside coker(rel).
struct ImagePresentation {
  GradedMatrix generators;  // minimal, a subset of the columns of gens
  std::vector<std::size_t> chosen;
  GradedMatrix relations;  // presents the submodule on those generators
  PresentedModule module() const { return PresentedModule(relations); }
};

ImagePresentation image_presentation(const GradedMatrix& gens, const GradedMatrix& rel, const Context& ctx,
                                     bool minimal_relations = false);

struct KernelPresentation {
  GradedMatrix generators;  // into the source of m
  GradedMatrix relations;
};

/// Minimal generators of ker m and a minimal presentation of the kernel.
KernelPresentation kernel_presentation(const GradedMatrix& m, const Context& ctx);

/// Minimal presentation of m; kept lists the original generators that survive
/// (they generate the module and the identity on them is an isomorphism).
PresentedModule minimal_presentation(const PresentedModule& m, const Context& ctx,
                                     std::vector<std::size_t>* kept = nullptr);

/// Minimal graded free resolution: result[0] is the presentation F1 -> F0,
/// result[i] maps F_{i+1} -> F_i. Stops early once the resolution ends.
std::vector<GradedMatrix> free_resolution(const PresentedModule& m, std::size_t length, const Context& ctx);

/// Over A: zero iff it has no minimal generators.
bool is_zero_module(const PresentedModule& m, const Context& ctx);

}  // namespace triadlab
