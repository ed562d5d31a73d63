#include "triadlab/presented_module.hpp"

namespace triadlab {

PresentedModule::PresentedModule(GradedMatrix relations)
    : rel_(std::move(relations)), cache_(std::make_shared<GbCacheHolder>()) {}

PresentedModule PresentedModule::free(const DegreeList& generators) {
  return PresentedModule(GradedMatrix({}, generators));
}

PresentedModule PresentedModule::quotient(int twist, const std::vector<Poly>& relations) {
  int g = -twist;
  DegreeList src;
  std::vector<Vec> cols;
  for (const auto& p : relations) {
    if (p.is_zero()) continue;
    src.push_back(g + p.degree());
    cols.push_back(Vec{p});
  }
  return PresentedModule(GradedMatrix(src, {g}, cols));
}

std::string PresentedModule::str() const {
  return "coker(" + rel_.str() + ")";
}

}  // namespace triadlab
