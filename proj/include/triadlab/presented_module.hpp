#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "triadlab/graded_matrix.hpp"

namespace triadlab {

struct GbCache;

/// Graded module given as the cokernel of its relation matrix.
class PresentedModule {
 public:
  PresentedModule() : cache_(std::make_shared<GbCacheHolder>()) {}
  explicit PresentedModule(GradedMatrix relations);
  static PresentedModule free(const DegreeList& generators);
  /// Cyclic module R_A(twist)/(relations); the generator sits in degree -twist.
  static PresentedModule quotient(int twist, const std::vector<Poly>& relations);

  const DegreeList& generators() const { return rel_.target(); }
  const GradedMatrix& relations() const { return rel_; }
  std::size_t num_generators() const { return rel_.rows(); }
  bool is_free() const { return rel_.is_zero(); }
  std::string str() const;

  /// Lazily built cache slot (filled by the groebner module).
  struct GbCacheHolder {
    std::once_flag once;
    std::shared_ptr<const GbCache> value;
  };
  GbCacheHolder& cache() const { return *cache_; }

 private:
  GradedMatrix rel_;
  std::shared_ptr<GbCacheHolder> cache_;
};

}  // namespace triadlab
