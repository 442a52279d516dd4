#include "lietwist/random.hpp"

#include <algorithm>

namespace lietwist {

Int Sampler::uniform(Int lo, Int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<Int>(rng_() % span);
}

double Sampler::unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

Weight Sampler::weight(std::size_t rank, Int box) {
  Weight w(rank);
  for (std::size_t i = 0; i < rank; ++i) w[i] = uniform(-box, box);
  return w;
}

TorusElement Sampler::torus_element(const TwistClass& twist, Int box, std::size_t max_terms) {
  TorusElement t(twist.rank(), twist);
  const auto n = static_cast<std::size_t>(uniform(1, static_cast<Int>(max_terms)));
  for (std::size_t k = 0; k < n; ++k) {
    Int c = uniform(1, 9) * (uniform(0, 1) ? 1 : -1);
    t.add_term(weight(twist.rank(), box), c);
  }
  return t;
}

RationalWeight Sampler::dominant_weight(const RootSystem& scope, const TwistClass& twist, Int box, Int max_dimension) {
  if (max_dimension <= 0) return dominant_draw(scope, twist, box);
  // rejection; keep the smallest draw in case the budget is never met
  RationalWeight best;
  Int best_dim = 0;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    RationalWeight x = dominant_draw(scope, twist, box);
    Int d = irreducible_dimension(scope, x);
    if (d <= max_dimension) return x;
    if (attempt == 0 || d < best_dim) {
      best = x;
      best_dim = d;
    }
  }
  return best;
}

RationalWeight Sampler::dominant_draw(const RootSystem& scope, const TwistClass& twist, Int box) {
  RationalWeight x = twist.shift() + RationalWeight(weight(twist.rank(), box));
  Weight v = x.numerators();
  while (true) {
    bool moved = false;
    for (std::size_t i = 0; i < scope.num_simple(); ++i) {
      Int p = v.dot(scope.simple_coroot(i));
      if (p < 0) {
        v = v.plus_multiple(-p, scope.simple_root(i));
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return RationalWeight(v, x.den());
}

GroupElement Sampler::group_element(const ScopePtr& scope, const TwistClass& twist, Int box, std::size_t max_terms,
                                    Int max_dimension) {
  GroupElement g(scope, twist);
  const auto n = static_cast<std::size_t>(uniform(1, static_cast<Int>(max_terms)));
  for (std::size_t k = 0; k < n; ++k) {
    Int c = uniform(1, 9) * (uniform(0, 1) ? 1 : -1);
    g.add(dominant_weight(*scope, twist, box, max_dimension), c);
  }
  return g;
}

Int default_box(const RootSystem& g) {
  Int m = 1;
  const RationalWeight& r = g.rho();
  for (std::size_t i = 0; i < r.size(); ++i) m = std::max(m, (r[i] * Rational(3)).floor() < 0 ? -(r[i] * Rational(3)).floor() : (r[i] * Rational(3)).floor());
  return m;
}

} // namespace lietwist
