#include "triadlab/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace triadlab {

int compare_terms(std::size_t ci, const Monomial& mi, std::size_t cj, const Monomial& mj,
                  const ModuleOrder& order) {
  if (order.priority_block) {
    bool bi = ci < order.priority_block, bj = cj < order.priority_block;
    if (bi != bj) return bi ? 1 : -1;
  }
  if (order.position == ModuleOrder::Position::PositionOverTerm) {
    if (ci != cj) return ci < cj ? 1 : -1;
    return compare(mi, mj);
  }
  int c = compare(mi, mj);
  if (c != 0) return c;
  if (ci != cj) return ci < cj ? 1 : -1;
  return 0;
}

bool lead_term(const Vec& v, const ModuleOrder& order, LeadTerm& out) {
  bool found = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const Term& t = v[i].lead();
    if (!found || compare_terms(i, t.m, out.comp, out.mon, order) > 0) {
      out.comp = i;
      out.mon = t.m;
      out.coef = t.c;
      found = true;
    }
  }
  return found;
}

std::size_t GroebnerBasis::find_divisor(std::size_t comp, const Monomial& m) const {
  for (std::size_t k : by_comp_[comp])
    if (leads_[k].mon.divides(m)) return k;
  return npos;
}

namespace {

void sub_mul(Vec& v, const Scalar& c, const Monomial& q, const Vec& g) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!g[i].is_zero()) v[i].add_mul_term(c, q, g[i]);
}

}  // namespace

void GroebnerBasis::top_reduce(Vec& v) const {
  LeadTerm lt;
  while (lead_term(v, order_, lt)) {
    std::size_t k = find_divisor(lt.comp, lt.mon);
    if (k == npos) return;
    const LeadTerm& g = leads_[k];
    sub_mul(v, -(lt.coef / g.coef), lt.mon / g.mon, elems_[k]);
  }
}

void GroebnerBasis::top_reduce_block(Vec& v, std::size_t block) const {
  LeadTerm lt;
  while (lead_term(v, order_, lt) && lt.comp < block) {
    std::size_t k = find_divisor(lt.comp, lt.mon);
    if (k == npos) return;
    const LeadTerm& g = leads_[k];
    sub_mul(v, -(lt.coef / g.coef), lt.mon / g.mon, elems_[k]);
  }
}

Vec GroebnerBasis::normal_form(const Vec& v) const {
  Vec p = v;
  Vec r(v.size());
  LeadTerm lt;
  while (lead_term(p, order_, lt)) {
    std::size_t k = find_divisor(lt.comp, lt.mon);
    if (k == npos) {
      r[lt.comp].append_term({lt.mon, lt.coef});
      p[lt.comp].pop_lead();
      continue;
    }
    const LeadTerm& g = leads_[k];
    sub_mul(p, -(lt.coef / g.coef), lt.mon / g.mon, elems_[k]);
  }
  return r;
}

bool GroebnerBasis::contains(const Vec& v) const {
  Vec p = v;
  top_reduce(p);
  return vec_is_zero(p);
}

void GroebnerBasis::push(Vec v) {
  LeadTerm lt;
  if (!lead_term(v, order_, lt)) return;
  if (!lt.coef.is_one()) {
    Scalar inv = lt.coef.inverse();
    for (auto& p : v) p = p.scaled(inv);
    lt.coef = lt.coef * inv;
  }
  by_comp_[lt.comp].push_back(elems_.size());
  elems_.push_back(std::move(v));
  leads_.push_back(lt);
}

void GroebnerBasis::interreduce() {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    bool redundant = false;
    for (std::size_t j : by_comp_[leads_[i].comp]) {
      if (j == i || !leads_[j].mon.divides(leads_[i].mon)) continue;
      if (leads_[j].mon == leads_[i].mon && j > i) continue;
      redundant = true;
      break;
    }
    if (!redundant) keep.push_back(i);
  }
  GroebnerBasis min(ambient_, order_);
  for (auto i : keep) min.push(elems_[i]);
  GroebnerBasis out(ambient_, order_);
  std::vector<Vec> reduced;
  for (std::size_t i = 0; i < min.elems_.size(); ++i) {
    // reduce the tail against the other minimal elements
    GroebnerBasis others(ambient_, order_);
    for (std::size_t j = 0; j < min.elems_.size(); ++j)
      if (j != i) others.push(min.elems_[j]);
    reduced.push_back(others.normal_form(min.elems_[i]));
  }
  std::vector<std::size_t> idx(reduced.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::vector<LeadTerm> lts(reduced.size());
  for (std::size_t i = 0; i < reduced.size(); ++i) lead_term(reduced[i], order_, lts[i]);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    return compare_terms(lts[x].comp, lts[x].mon, lts[y].comp, lts[y].mon, order_) > 0;
  });
  for (auto i : idx) out.push(std::move(reduced[i]));
  *this = std::move(out);
}

Vec s_vector(const Vec& f, const LeadTerm& lf, const Vec& g, const LeadTerm& lg) {
  Monomial l = lf.mon.lcm(lg.mon);
  Vec s(f.size());
  sub_mul(s, lf.coef.inverse(), l / lf.mon, f);
  sub_mul(s, -lg.coef.inverse(), l / lg.mon, g);
  return s;
}

bool GroebnerBasis::buchberger_criterion_holds() const {
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    for (std::size_t j = i + 1; j < elems_.size(); ++j) {
      if (leads_[i].comp != leads_[j].comp) continue;
      Vec s = s_vector(elems_[i], leads_[i], elems_[j], leads_[j]);
      if (!vec_is_zero(normal_form(s))) return false;
    }
  }
  return true;
}

GroebnerBasis groebner_basis(const DegreeList& ambient, const std::vector<Vec>& gens,
                             const ModuleOrder& order, const Context& ctx) {
  GroebnerBasis gb(ambient, order);
  constexpr std::size_t kGen = GroebnerBasis::npos;
  // (degree, kind, j, i): kind 0 = input generator i, kind 1 = pair (i, j)
  using Item = std::tuple<int, int, std::size_t, std::size_t>;
  std::set<Item> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool ok = false;
    int d = vec_degree(gens[i], ambient, &ok);
    if (vec_is_zero(gens[i])) continue;
    if (!ok) throw DomainError(ErrorCode::NotHomogeneous, "generator " + vec_str(gens[i]));
    queue.insert({d, 0, kGen, i});
  }
  const bool ideal_case = ambient.size() == 1;
  std::size_t processed = 0;

  auto add_element = [&](Vec v, int deg) {
    (void)deg;
    std::size_t n = gb.size();
    gb.push(std::move(v));
    const LeadTerm& ln = gb.leads()[n];
    for (std::size_t k = 0; k < n; ++k) {
      const LeadTerm& lk = gb.leads()[k];
      if (lk.comp != ln.comp) continue;
      int d = lk.mon.lcm(ln.mon).degree() + ambient[ln.comp];
      queue.insert({d, 1, n, k});
      pending.insert({k, n});
    }
  };

  while (!queue.empty()) {
    auto [deg, kind, j, i] = *queue.begin();
    queue.erase(queue.begin());
    if (++processed > ctx.limits.max_pairs)
      throw ResourceAbort("Groebner basis exceeded the S-pair limit");
    if (deg > ctx.limits.max_degree)
      throw ResourceAbort("Groebner basis exceeded the degree limit " +
                          std::to_string(ctx.limits.max_degree));
    Vec v;
    if (kind == 0) {
      v = gens[i];
    } else {
      pending.erase({i, j});
      const LeadTerm& li = gb.leads()[i];
      const LeadTerm& lj = gb.leads()[j];
      Monomial l = li.mon.lcm(lj.mon);
      if (ideal_case && li.mon.coprime(lj.mon)) continue;
      bool chain = false;
      for (std::size_t k = 0; k < gb.size() && !chain; ++k) {
        if (k == i || k == j || gb.leads()[k].comp != li.comp) continue;
        if (!gb.leads()[k].mon.divides(l)) continue;
        if (pending.count({std::min(i, k), std::max(i, k)})) continue;
        if (pending.count({std::min(j, k), std::max(j, k)})) continue;
        chain = true;
      }
      if (chain) continue;
      v = s_vector(gb.elements()[i], li, gb.elements()[j], lj);
    }
    gb.top_reduce(v);
    if (vec_is_zero(v)) continue;
    add_element(std::move(v), deg);
  }
  gb.interreduce();
  return gb;
}

Vec normal_form(const Vec& v, const GroebnerBasis& gb) {
  if (v.size() != gb.ambient().size())
    throw DomainError(ErrorCode::ShapeMismatch, "vector and basis live in different modules");
  return gb.normal_form(v);
}

GradedMatrix syzygies(const GradedMatrix& gens, const Context& ctx) {
  const std::size_t r = gens.rows(), m = gens.cols();
  if (m == 0) return GradedMatrix({}, {});
  DegreeList amb = gens.target();
  amb.insert(amb.end(), gens.source().begin(), gens.source().end());
  std::vector<Vec> aug;
  aug.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    Vec v = gens.column(j);
    v.resize(r + m);
    v[r + j] = Poly(ctx.one());
    aug.push_back(std::move(v));
  }
  ModuleOrder ord;
  ord.priority_block = r;
  GroebnerBasis gb = groebner_basis(amb, aug, ord, ctx);
  DegreeList src;
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < gb.size(); ++k) {
    if (gb.leads()[k].comp < r) continue;
    const Vec& e = gb.elements()[k];
    Vec s(e.begin() + r, e.end());
    src.push_back(vec_degree(s, gens.source()));
    cols.push_back(std::move(s));
  }
  return GradedMatrix(src, gens.source(), cols);
}

struct GbCache {
  GroebnerBasis gb;
};

const GroebnerBasis& relation_gb(const PresentedModule& m, const Context& ctx) {
  auto& holder = m.cache();
  std::call_once(holder.once, [&] {
    auto c = std::make_shared<GbCache>();
    c->gb = groebner_basis(m.generators(), m.relations().columns(), ModuleOrder{}, ctx);
    holder.value = c;
  });
  return holder.value->gb;
}

Lifter::Lifter(const GradedMatrix& gens, const GradedMatrix& rel, const Context& ctx)
    : gens_(gens), rel_(rel), ctx_(ctx) {
  const std::size_t r = gens.rows(), m = gens.cols();
  DegreeList amb = gens.target();
  amb.insert(amb.end(), gens.source().begin(), gens.source().end());
  std::vector<Vec> aug;
  for (std::size_t j = 0; j < m; ++j) {
    Vec v = gens.column(j);
    v.resize(r + m);
    v[r + j] = Poly(ctx.one());
    aug.push_back(std::move(v));
  }
  for (std::size_t j = 0; j < rel.cols(); ++j) {
    Vec v = rel.column(j);
    v.resize(r + m);
    aug.push_back(std::move(v));
  }
  ModuleOrder ord;
  ord.priority_block = r;
  gb_ = groebner_basis(amb, aug, ord, ctx);
}

namespace {

// Extended gcd in k[a]: returns g with g = s*x + t*y.
UPoly ext_gcd(const UPoly& x, const UPoly& y, UPoly& s, UPoly& t, const Context& ctx) {
  UPoly r0 = x, r1 = y;
  UPoly s0(ctx.one()), s1, t0, t1(ctx.one());
  while (!r1.is_zero()) {
    UPoly q, rem;
    r0.divmod(r1, q, rem);
    UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  s = s0;
  t = t0;
  return r0;
}

}  // namespace

bool Lifter::lift(const Vec& v, Vec& c, Poly& u) const {
  const std::size_t r = gens_.rows(), m = gens_.cols();
  Vec w = v;
  w.resize(r + m);
  gb_.top_reduce_block(w, r);
  bool in_b = true;
  for (std::size_t i = 0; i < r; ++i)
    if (!w[i].is_zero()) in_b = false;
  if (in_b) {
    c.assign(m, Poly());
    for (std::size_t j = 0; j < m; ++j) c[j] = -w[r + j];
    u = Poly(ctx_.one());
    return true;
  }
  // Over A: look for a syzygy of [v | gens | rel] whose v-coefficient is a unit.
  bool ok = false;
  int d = vec_degree(v, gens_.target(), &ok);
  if (!ok) return false;
  GradedMatrix vm({d}, gens_.target(), {v});
  GradedMatrix all = vm.hconcat(gens_).hconcat(rel_);
  GradedMatrix syz = syzygies(all, ctx_);
  UPoly g;
  Vec comb(all.cols());
  for (std::size_t k = 0; k < syz.cols(); ++k) {
    const Vec& s = syz.column(k);
    if (s[0].is_zero() || !s[0].is_a_only()) continue;
    UPoly sk = s[0].as_upoly();
    if (g.is_zero()) {
      g = sk;
      comb = s;
      continue;
    }
    UPoly x, y;
    UPoly ng = ext_gcd(g, sk, x, y, ctx_);
    Vec nc(all.cols());
    Poly px = Poly::from_upoly(x), py = Poly::from_upoly(y);
    for (std::size_t i = 0; i < nc.size(); ++i) nc[i] = comb[i] * px + s[i] * py;
    g = ng;
    comb = nc;
  }
  if (g.is_zero() || !g.is_local_unit()) return false;
  // u v + gens c' + rel r = 0  =>  gens (-c') = u v mod rel
  u = comb[0];
  c.assign(m, Poly());
  for (std::size_t j = 0; j < m; ++j) c[j] = -comb[1 + j];
  return true;
}

bool Lifter::contains(const Vec& v) const {
  Vec c;
  Poly u;
  return lift(v, c, u);
}

}  // namespace triadlab
