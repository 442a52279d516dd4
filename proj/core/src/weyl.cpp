#include "lietwist/weyl.hpp"

#include <algorithm>
#include <deque>

namespace lietwist {

WeylPtr WeylGroup::generate(const ScopePtr& scope, std::uint64_t cap) {
  auto g = std::make_shared<WeylGroup>();
  g->scope_ = scope;
  const std::size_t r = scope->rank();
  for (std::size_t i = 0; i < scope->num_simple(); ++i) g->generators_.push_back(scope->simple_reflection(i));

  std::unordered_map<IntMatrix, int, IntMatrixHash> seen;
  std::vector<WeylElement> elems;
  std::vector<IntMatrix> inv;  // inv[k] = elems[k]^-1, since (s w)^-1 = w^-1 s
  std::deque<std::size_t> queue;
  elems.push_back({IntMatrix::identity(r), 0, 1});
  inv.push_back(IntMatrix::identity(r));
  seen.emplace(elems[0].matrix, 0);
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t k = queue.front();
    queue.pop_front();
    for (const auto& s : g->generators_) {
      IntMatrix m = s * elems[k].matrix;
      if (seen.count(m)) continue;
      if (elems.size() >= cap)
        fail(ErrorCode::OrderCapExceeded, "Weyl group order exceeds cap " + std::to_string(cap));
      int len = elems[k].length + 1;
      seen.emplace(m, len);
      elems.push_back({std::move(m), len, (len % 2) ? -1 : 1});
      inv.push_back(inv[k] * s);
      queue.push_back(elems.size() - 1);
    }
  }
  std::vector<std::size_t> order(elems.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (elems[a].length != elems[b].length) return elems[a].length < elems[b].length;
    return elems[a].matrix < elems[b].matrix;
  });
  for (std::size_t i : order) g->elements_.push_back(std::move(elems[i]));
  for (std::size_t i = 0; i < g->elements_.size(); ++i) g->index_.emplace(g->elements_[i].matrix, i);
  g->inverse_.resize(g->elements_.size());
  for (std::size_t i = 0; i < order.size(); ++i) g->inverse_[i] = g->index_.at(inv[order[i]]);
  return g;
}

std::optional<std::size_t> WeylGroup::index_of(const IntMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

WeylPtr generate_weyl(const RootDatum& datum) {
  const std::uint64_t cap = datum.limits().max_weyl_order;
  if (datum.weyl_order_formula() > cap)
    fail(ErrorCode::OrderCapExceeded, "Weyl group of " + datum.label().str() + " has order " +
                                          std::to_string(datum.weyl_order_formula()) + " > cap " +
                                          std::to_string(cap));
  return WeylGroup::generate(datum.roots(), cap);
}

CosetReps coset_representatives(const WeylGroup& w, const SubgroupPtr& sub) {
  if (sub->group_roots() != w.scope())
    fail(ErrorCode::MismatchedDatum, "subgroup does not belong to this Weyl group's datum");
  const RootSystem& g = *w.scope();
  const RootSystem& h = sub->system();
  CosetReps out;
  out.subgroup = sub;
  for (std::size_t i = 0; i < w.order(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < h.num_simple() && ok; ++j)
      ok = g.is_positive(w[i].matrix.apply(h.simple_root(j)));
    if (ok) out.reps.push_back(i);
  }
  return out;
}

ChamberResult to_dominant_chamber(const RootSystem& scope, const RationalWeight& mu) {
  ChamberResult res;
  Weight v = mu.numerators();
  IntMatrix w = IntMatrix::identity(scope.rank());
  int length = 0;
  while (true) {
    std::size_t k = scope.num_simple();
    for (std::size_t i = 0; i < scope.num_simple(); ++i)
      if (v.dot(scope.simple_coroot(i)) < 0) {
        k = i;
        break;
      }
    if (k == scope.num_simple()) break;
    v = v.plus_multiple(-v.dot(scope.simple_coroot(k)), scope.simple_root(k));
    w = scope.simple_reflection(k) * w;
    ++length;
  }
  for (std::size_t i = 0; i < scope.num_simple(); ++i)
    if (v.dot(scope.simple_coroot(i)) == 0) return res;
  res.regular = true;
  res.w = {std::move(w), length, (length % 2) ? -1 : 1};
  res.image = RationalWeight(v, mu.den());
  return res;
}

ChamberResult to_dominant_chamber(const RootDatum& datum, const RationalWeight& mu) {
  if (mu.size() != datum.rank()) fail(ErrorCode::DimensionMismatch, "weight has wrong length");
  return to_dominant_chamber(datum.system(), mu);
}

std::shared_ptr<const WeylContext> WeylContext::build(const SubgroupPtr& sub) {
  auto ctx = std::make_shared<WeylContext>();
  ctx->sub_ = sub;
  ctx->wg_ = generate_weyl(sub->datum());
  ctx->wh_ = WeylGroup::generate(sub->roots(), sub->datum().limits().max_weyl_order);
  ctx->reps_ = coset_representatives(*ctx->wg_, sub);
  if (ctx->reps_.reps.size() * ctx->wh_->order() != ctx->wg_->order())
    fail(ErrorCode::InternalInconsistency, "|W^H| * |W_H| != |W_G|");
  return ctx;
}

TorusElement apply_weyl(const WeylElement& w, const TorusElement& a) { return apply_matrix(w.matrix, a); }

namespace {

TorusElement signed_sum(const std::vector<const WeylElement*>& elems, const TorusElement& a, bool sign) {
  TorusElement out(a.rank(), a.twist());
  for (const WeylElement* w : elems) {
    TorusElement t = apply_matrix(w->matrix, a);
    if (sign && w->det < 0) out -= t;
    else out += t;
  }
  return out;
}

std::vector<const WeylElement*> all_of(const WeylGroup& w) {
  std::vector<const WeylElement*> v;
  for (const auto& e : w.elements()) v.push_back(&e);
  return v;
}

} // namespace

TorusElement antisymmetrize(const WeylGroup& w, const TorusElement& a) { return signed_sum(all_of(w), a, true); }
TorusElement symmetrize(const WeylGroup& w, const TorusElement& a) { return signed_sum(all_of(w), a, false); }

TorusElement apply_antisymmetrizer(const WeylContext& ctx, Antisymmetrizer kind, const TorusElement& a) {
  if (a.rank() != ctx.subgroup()->datum().rank())
    fail(ErrorCode::DatumMismatch, "torus element does not match the datum");
  const WeylGroup& g = ctx.group();
  switch (kind) {
  case Antisymmetrizer::JG: return antisymmetrize(g, a);
  case Antisymmetrizer::JH: return antisymmetrize(ctx.sub_group(), a);
  case Antisymmetrizer::JM:
  case Antisymmetrizer::JMop: {
    std::vector<const WeylElement*> v;
    for (std::size_t i : ctx.reps().reps)
      v.push_back(&g[kind == Antisymmetrizer::JM ? i : g.inverse_index(i)]);
    return signed_sum(v, a, true);
  }
  }
  return a;
}

bool is_invariant(const WeylGroup& w, const TorusElement& a) {
  for (const auto& s : w.generators())
    if (!(apply_matrix(s, a) == a)) return false;
  return true;
}

bool is_anti_invariant(const WeylGroup& w, const TorusElement& a) {
  for (const auto& s : w.generators())
    if (!(apply_matrix(s, a) == -a)) return false;
  return true;
}

} // namespace lietwist
