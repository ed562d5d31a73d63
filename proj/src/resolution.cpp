#include "triadlab/resolution.hpp"

namespace triadlab {

namespace {

bool is_unit_entry(const Poly& p) { return !p.is_zero() && p.is_a_only() && !p.constant_term().is_zero(); }

bool is_scalar(const Poly& p) { return p.size() == 1 && p.lead().m.is_one(); }

GradedMatrix drop_row(const GradedMatrix& m, std::size_t r) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (i != r) idx.push_back(i);
  return m.select_rows(idx);
}

GradedMatrix drop_column(const GradedMatrix& m, std::size_t c) {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (j != c) idx.push_back(j);
  return m.select_columns(idx);
}

GradedMatrix eliminate(const GradedMatrix& d, std::size_t r, std::size_t c) {
  const Poly& u = d.at(r, c);
  const bool scalar = is_scalar(u);
  Scalar inv = scalar ? u.lead().c.inverse() : Scalar();
  DegreeList src, tgt;
  for (std::size_t j = 0; j < d.cols(); ++j)
    if (j != c) src.push_back(d.source()[j]);
  for (std::size_t k = 0; k < d.rows(); ++k)
    if (k != r) tgt.push_back(d.target()[k]);
  GradedMatrix out(src, tgt);
  std::size_t jj = 0;
  for (std::size_t j = 0; j < d.cols(); ++j) {
    if (j == c) continue;
    const Poly& drj = d.at(r, j);
    std::size_t kk = 0;
    for (std::size_t k = 0; k < d.rows(); ++k) {
      if (k == r) continue;
      const Poly& dkc = d.at(k, c);
      Poly e;
      if (scalar) {
        e = d.at(k, j);
        if (!dkc.is_zero() && !drj.is_zero()) e -= (dkc * drj).scaled(inv);
      } else {
        e = u * d.at(k, j);
        if (!dkc.is_zero() && !drj.is_zero()) e -= dkc * drj;
      }
      out.set(kk, jj, std::move(e));
      ++kk;
    }
    ++jj;
  }
  return out;
}

}  // namespace

bool is_minimal(const GradedMatrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m.slot_degree(i, j) == 0 && is_unit_entry(m.at(i, j))) return false;
  return true;
}

ChainIds minimalize(std::vector<GradedMatrix>& chain, const std::vector<bool>& pivotable, const Context& ctx,
                    bool track_inclusion) {
  ChainIds ids;
  const std::size_t n = chain.size();
  ids.kept.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    std::size_t rank = i < n ? chain[i].rows() : chain[n - 1].cols();
    for (std::size_t k = 0; k < rank; ++k) ids.kept[i].push_back(k);
  }
  if (n == 0) return ids;
  if (track_inclusion)
    for (std::size_t i = 0; i <= n; ++i)
      ids.inclusion.push_back(GradedMatrix::identity(i < n ? chain[i].target() : chain[n - 1].source(), ctx));
  for (;;) {
    bool found = false;
    std::size_t bi = 0, br = 0, bc = 0;
    bool best_scalar = false;
    for (std::size_t i = 0; i < n && !best_scalar; ++i) {
      if (!pivotable[i]) continue;
      const GradedMatrix& d = chain[i];
      for (std::size_t c = 0; c < d.cols() && !best_scalar; ++c) {
        for (std::size_t r = 0; r < d.rows(); ++r) {
          if (d.slot_degree(r, c) != 0 || !is_unit_entry(d.at(r, c))) continue;
          bool sc = is_scalar(d.at(r, c));
          if (!found || (sc && !best_scalar)) {
            found = true;
            best_scalar = sc;
            bi = i;
            br = r;
            bc = c;
          }
          if (sc) break;
        }
      }
    }
    if (!found) break;
    if (track_inclusion) {
      const GradedMatrix& d = chain[bi];
      const Poly& u = d.at(br, bc);
      const bool scalar = is_scalar(u);
      GradedMatrix& inc = ids.inclusion[bi + 1];
      const Vec pivot_col = inc.column(bc);
      std::vector<Vec> cols;
      for (std::size_t j = 0; j < d.cols(); ++j) {
        if (j == bc) continue;
        const Poly& drj = d.at(br, j);
        Vec v = scalar ? inc.column(j) : vec_scale(inc.column(j), u);
        if (!drj.is_zero())
          v = vec_sub(v, vec_scale(pivot_col, scalar ? drj.scaled(u.lead().c.inverse()) : drj));
        cols.push_back(std::move(v));
      }
      DegreeList src;
      for (std::size_t j = 0; j < d.cols(); ++j)
        if (j != bc) src.push_back(inc.source()[j]);
      inc = GradedMatrix(src, inc.target(), cols);
      ids.inclusion[bi] = drop_column(ids.inclusion[bi], br);
      // dropping a row of chain[bi+1] leaves coordinates multiplied by u
      if (!scalar)
        for (std::size_t k = bi + 2; k <= n; ++k) ids.inclusion[k] = ids.inclusion[k].scaled(u);
    }
    chain[bi] = eliminate(chain[bi], br, bc);
    if (bi > 0) chain[bi - 1] = drop_column(chain[bi - 1], br);
    if (bi + 1 < n) chain[bi + 1] = drop_row(chain[bi + 1], bc);
    ids.kept[bi].erase(ids.kept[bi].begin() + static_cast<std::ptrdiff_t>(br));
    ids.kept[bi + 1].erase(ids.kept[bi + 1].begin() + static_cast<std::ptrdiff_t>(bc));
  }
  return ids;
}

ImagePresentation image_presentation(const GradedMatrix& gens, const GradedMatrix& rel, const Context& ctx,
                                     bool minimal_relations) {
  const std::size_t m = gens.cols();
  GradedMatrix all = gens.hconcat(rel);
  GradedMatrix syz = syzygies(all, ctx);
  std::vector<std::size_t> head;
  for (std::size_t j = 0; j < m; ++j) head.push_back(j);
  GradedMatrix k = syz.select_rows(head);
  // drop relations that became zero
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < k.cols(); ++j)
    if (!vec_is_zero(k.column(j))) nz.push_back(j);
  k = k.select_columns(nz);
  std::vector<GradedMatrix> chain{gens, k};
  std::vector<bool> piv{false, true};
  if (minimal_relations && k.cols() > 0) {
    chain.push_back(syzygies(k, ctx));
    piv.push_back(true);
  }
  ChainIds ids = minimalize(chain, piv, ctx);
  ImagePresentation out;
  out.generators = chain[0];
  out.chosen = ids.kept[1];
  out.relations = chain[1];
  return out;
}

KernelPresentation kernel_presentation(const GradedMatrix& m, const Context& ctx) {
  KernelPresentation out;
  GradedMatrix s = syzygies(m, ctx);
  if (s.cols() == 0) {
    out.generators = GradedMatrix({}, m.source());
    out.relations = GradedMatrix({}, {});
    return out;
  }
  GradedMatrix z1 = syzygies(s, ctx);
  std::vector<GradedMatrix> chain{s, z1};
  std::vector<bool> piv{false, true};
  if (z1.cols() > 0) {
    chain.push_back(syzygies(z1, ctx));
    piv.push_back(true);
  }
  minimalize(chain, piv, ctx);
  out.generators = chain[0];
  out.relations = chain[1];
  return out;
}

PresentedModule minimal_presentation(const PresentedModule& m, const Context& ctx,
                                     std::vector<std::size_t>* kept) {
  const GradedMatrix& rel = m.relations();
  std::vector<GradedMatrix> chain{rel};
  std::vector<bool> piv{true};
  if (rel.cols() > 0) {
    chain.push_back(syzygies(rel, ctx));
    piv.push_back(true);
  }
  ChainIds ids = minimalize(chain, piv, ctx);
  if (kept) *kept = ids.kept[0];
  return PresentedModule(chain[0]);
}

std::vector<GradedMatrix> free_resolution(const PresentedModule& m, std::size_t length, const Context& ctx) {
  std::vector<GradedMatrix> chain{m.relations()};
  std::vector<bool> piv{true};
  minimalize(chain, piv, ctx);
  while (chain.size() <= length && chain.back().cols() > 0) {
    chain.push_back(syzygies(chain.back(), ctx));
    piv.push_back(true);
    minimalize(chain, piv, ctx);
  }
  while (!chain.empty() && chain.back().cols() == 0 && chain.size() > 1) chain.pop_back();
  if (chain.size() > length) chain.resize(length);
  if (m.num_generators() == 0 || chain.front().rows() == 0) return {};
  return chain;
}

bool is_zero_module(const PresentedModule& m, const Context& ctx) {
  std::vector<GradedMatrix> chain{m.relations()};
  minimalize(chain, {true}, ctx);
  return chain[0].rows() == 0;
}

}  // namespace triadlab
