#include "lietwist/charring.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace lietwist {

// ---------------------------------------------------------------- GroupElement

GroupElement GroupElement::one(const ScopePtr& scope) {
  GroupElement g(scope, TwistClass(scope->rank()));
  g.add_offset(Weight(scope->rank()), 1);
  return g;
}

GroupElement GroupElement::irreducible(const ScopePtr& scope, const RationalWeight& highest, Int coeff) {
  GroupElement g(scope, TwistClass(highest));
  g.add(highest, coeff);
  return g;
}

void GroupElement::add_offset(const Weight& offset, Int c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(offset, c);
  if (!inserted) {
    it->second = add_checked(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void GroupElement::add(const RationalWeight& highest, Int c) {
  if (highest.size() != rank()) fail(ErrorCode::DimensionMismatch, "highest weight has wrong length");
  if (!scope_->is_dominant(highest))
    fail(ErrorCode::NotDominant, highest.str() + " is not dominant");
  RationalWeight d = highest - twist_.shift();
  if (!d.is_integral())
    fail(ErrorCode::BadTwist, highest.str() + " is not in the twist class " + twist_.str());
  add_offset(d.integral(), c);
}

Int GroupElement::coeff(const RationalWeight& highest) const {
  RationalWeight d = highest - twist_.shift();
  if (!d.is_integral()) return 0;
  auto it = terms_.find(d.integral());
  return it == terms_.end() ? 0 : it->second;
}

std::vector<std::pair<RationalWeight, Int>> GroupElement::sorted_terms() const {
  std::vector<std::pair<Weight, Int>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end());
  std::vector<std::pair<RationalWeight, Int>> out;
  for (const auto& [w, c] : v) out.emplace_back(highest_weight(w), c);
  return out;
}

GroupElement& GroupElement::operator+=(const GroupElement& o) {
  if (o.is_zero()) return *this;
  if (scope_ && o.scope_ && scope_ != o.scope_ && rank() != o.rank())
    fail(ErrorCode::DatumMismatch, "group elements over different data");
  if (is_zero()) {
    scope_ = o.scope_;
    twist_ = o.twist_;
  }
  if (!(twist_ == o.twist_)) fail(ErrorCode::BadTwist, "adding group elements of different twist classes");
  for (const auto& [w, c] : o.terms_) add_offset(w, c);
  return *this;
}

GroupElement& GroupElement::operator-=(const GroupElement& o) { return *this += -o; }

GroupElement GroupElement::scaled(Int k) const {
  GroupElement g(scope_, twist_);
  if (k == 0) return g;
  for (const auto& [w, c] : terms_) g.terms_.emplace(w, mul_checked(k, c));
  return g;
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.twist_ == b.twist_ && a.terms_ == b.terms_ && a.rank() == b.rank();
}

std::string GroupElement::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (const auto& [l, c] : sorted_terms()) {
    if (!s.empty()) s += " + ";
    s += std::to_string(c) + "*[" + l.str() + "]";
  }
  return s;
}

// ---------------------------------------------------------------- products

TorusElement product_one_minus(std::size_t rank, const std::vector<Weight>& weights) {
  TorusElement p = TorusElement::one(rank);
  for (const auto& a : weights) {
    TorusElement f = TorusElement::one(rank);
    f.add_term(a, -1);
    p = multiply(p, f);
  }
  return p;
}

TorusElement weyl_denominator(const RootSystem& scope) {
  std::vector<Weight> neg;
  for (const auto& a : scope.positive_roots()) neg.push_back(-a);
  return multiply(TorusElement::monomial(scope.rho()), product_one_minus(scope.rank(), neg));
}

TorusElement euler_class(const SubgroupDatum& sub) {
  return multiply(TorusElement::monomial(-rho(sub, RhoKind::M)),
                  product_one_minus(sub.datum().rank(), sub.complement_positive()));
}

// ---------------------------------------------------------------- Freudenthal

namespace {

struct Scaled {
  const RootSystem& sys;
  Int s;

  Int form(const Weight& x, const Weight& y) const {
    Int t = 0;
    for (const auto& c : sys.positive_coroots()) t = add_checked(t, mul_checked(x.dot(c), y.dot(c)));
    return t;
  }
  bool dominant(const Weight& v) const {
    for (std::size_t i = 0; i < sys.num_simple(); ++i)
      if (v.dot(sys.simple_coroot(i)) < 0) return false;
    return true;
  }
  Weight dominant_rep(Weight v) const {
    while (true) {
      bool moved = false;
      for (std::size_t i = 0; i < sys.num_simple(); ++i) {
        Int p = v.dot(sys.simple_coroot(i));
        if (p < 0) {
          v = v.plus_multiple(-p, sys.simple_root(i));
          moved = true;
          break;
        }
      }
      if (!moved) return v;
    }
  }
};

Int scale_for(const RationalWeight& lambda) { return lcm_checked(lambda.den(), 2); }

// Scaled dominant weights of V(lambda) with multiplicities.
std::map<Weight, Int> freudenthal(const RootSystem& sys, const RationalWeight& lambda, Int s) {
  if (!sys.is_dominant(lambda)) fail(ErrorCode::NotDominant, lambda.str() + " is not dominant");
  Scaled sc{sys, s};
  const Weight top = lambda.scaled_to(s);
  std::vector<Weight> sroots;
  for (const auto& a : sys.positive_roots()) sroots.push_back(a.scaled(s));
  Weight two_rho_v(sys.rank());
  for (const auto& c : sys.positive_coroots()) two_rho_v += c;

  std::vector<Weight> dom{top};
  std::unordered_set<Weight, WeightHash> seen{top};
  for (std::size_t k = 0; k < dom.size(); ++k)
    for (const auto& a : sroots) {
      Weight v = dom[k] - a;
      if (sc.dominant(v) && seen.insert(v).second) dom.push_back(v);
    }
  std::sort(dom.begin(), dom.end(), [&](const Weight& a, const Weight& b) {
    Int da = (top - a).dot(two_rho_v), db = (top - b).dot(two_rho_v);
    if (da != db) return da < db;
    return a < b;
  });

  const Weight rho_s = sys.rho().scaled_to(s);
  const Int top_norm = sc.form(top + rho_s, top + rho_s);
  std::map<Weight, Int> mult;
  std::unordered_map<Weight, Int, WeightHash> lookup;
  for (const auto& mu : dom) {
    Int m = 1;
    if (!(mu == top)) {
      Int num = 0;
      for (const auto& a : sroots) {
        for (Int k = 1;; ++k) {
          Weight v = mu.plus_multiple(k, a);
          auto it = lookup.find(sc.dominant_rep(v));
          if (it == lookup.end()) break;
          num = add_checked(num, mul_checked(it->second, sc.form(v, a)));
        }
      }
      num = mul_checked(num, 2);
      Int den = sub_checked(top_norm, sc.form(mu + rho_s, mu + rho_s));
      if (den <= 0 || num % den != 0)
        fail(ErrorCode::InternalInconsistency, "Freudenthal recursion produced a non-integer multiplicity");
      m = num / den;
    }
    if (m != 0) {
      lookup.emplace(mu, m);
      mult.emplace(mu, m);
    }
  }
  return mult;
}

} // namespace

std::map<RationalWeight, Int> dominant_multiplicities(const RootSystem& scope, const RationalWeight& lambda) {
  const Int s = scale_for(lambda);
  std::map<RationalWeight, Int> out;
  for (const auto& [w, m] : freudenthal(scope, lambda, s)) out.emplace(RationalWeight(w, s), m);
  return out;
}

TorusElement irreducible_restriction(const RootSystem& scope, const RationalWeight& lambda) {
  if (lambda.size() != scope.rank()) fail(ErrorCode::DimensionMismatch, "weight has wrong length");
  const Int s = scale_for(lambda);
  TorusElement out(scope.rank(), TwistClass(lambda));
  for (const auto& [mu, m] : freudenthal(scope, lambda, s)) {
    std::vector<Weight> orbit{mu};
    std::unordered_set<Weight, WeightHash> seen{mu};
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (std::size_t i = 0; i < scope.num_simple(); ++i) {
        Int p = orbit[k].dot(scope.simple_coroot(i));
        if (p == 0) continue;
        Weight v = orbit[k].plus_multiple(-p, scope.simple_root(i));
        if (seen.insert(v).second) orbit.push_back(v);
      }
    for (const auto& v : orbit) out.add_monomial(RationalWeight(v, s), m);
  }
  return out;
}

TorusElement expand(const GroupElement& a) {
  if (a.is_zero()) return TorusElement(a.scope() ? a.rank() : 0, a.twist());
  TorusElement out(a.rank(), a.twist());
  for (const auto& [l, c] : a.sorted_terms()) out += irreducible_restriction(*a.scope(), l).scaled(c);
  return out;
}

Int irreducible_dimension(const RootSystem& scope, const RationalWeight& lambda) {
  const Int s = scale_for(lambda);
  const Weight top = lambda.scaled_to(s) + scope.rho().scaled_to(s);
  const Weight rho_s = scope.rho().scaled_to(s);
  Rational d(1);
  for (const auto& c : scope.positive_coroots()) d *= Rational(top.dot(c), rho_s.dot(c));
  if (!d.is_integer()) fail(ErrorCode::InternalInconsistency, "Weyl dimension formula gave a fraction");
  return d.num();
}

Int dimension(const GroupElement& a) {
  Int total = 0;
  for (const auto& [l, c] : a.sorted_terms())
    total = add_checked(total, mul_checked(c, irreducible_dimension(*a.scope(), l)));
  return total;
}

std::map<RationalWeight, Int> anti_invariant_decompose(const RootSystem& scope, const TorusElement& a) {
  for (std::size_t i = 0; i < scope.num_simple(); ++i) {
    TorusElement t;
    try {
      t = apply_matrix(scope.simple_reflection(i), a);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ShiftNotStable)
        fail(ErrorCode::NotAntiInvariant, "twist class is not Weyl-stable");
      throw;
    }
    if (!(t == -a)) fail(ErrorCode::NotAntiInvariant, "element is not anti-invariant");
  }
  std::map<RationalWeight, Int> out;
  for (const auto& [w, c] : a.terms()) {
    RationalWeight x = a.exponent(w);
    if (scope.is_strictly_dominant(x)) out.emplace(x, c);
  }
  return out;
}

GroupElement collect_invariant(const ScopePtr& scope, const TorusElement& a) {
  GroupElement g(scope, a.twist());
  TorusElement prod = multiply(weyl_denominator(*scope), a);
  for (const auto& [l, c] : anti_invariant_decompose(*scope, prod)) g.add(l - scope->rho(), c);
  return g;
}

// ---------------------------------------------------------------- division

TorusElement exact_divide(const TorusElement& a, const TorusElement& d) {
  if (a.rank() != d.rank()) fail(ErrorCode::DatumMismatch, "division over different lattices");
  if (d.is_zero()) fail(ErrorCode::InexactDivision, "division by zero");
  TwistClass qt = a.twist() - d.twist();
  TorusElement q(a.rank(), qt);
  if (a.is_zero()) return q;
  // Work with absolute scaled exponents so twists do not interfere.
  const Int s = lcm_checked(a.twist().shift().den(), d.twist().shift().den());
  auto scaled_map = [&](const TorusElement& x) {
    std::map<Weight, Int> m;
    for (const auto& [w, c] : x.terms()) m.emplace(x.exponent(w).scaled_to(s), c);
    return m;
  };
  std::map<Weight, Int> r = scaled_map(a);
  const std::map<Weight, Int> dm = scaled_map(d);
  const auto [dlead, dc] = *dm.rbegin();
  const Weight low = r.begin()->first - dm.begin()->first;
  constexpr std::size_t kMaxSteps = std::size_t{1} << 22;
  for (std::size_t step = 0; !r.empty(); ++step) {
    if (step > kMaxSteps) fail(ErrorCode::InexactDivision, "division did not terminate");
    const auto [lead, c] = *r.rbegin();
    if (c % dc != 0) fail(ErrorCode::InexactDivision, "leading coefficient not divisible");
    const Weight e = lead - dlead;
    if (e < low) fail(ErrorCode::InexactDivision, "remainder below the quotient's lowest term");
    const Int qc = c / dc;
    q.add_monomial(RationalWeight(e, s), qc);
    for (const auto& [w, v] : dm) {
      Weight key = e + w;
      Int nv = sub_checked(r[key], mul_checked(qc, v));
      if (nv == 0) r.erase(key);
      else r[key] = nv;
    }
  }
  return q;
}

} // namespace lietwist
