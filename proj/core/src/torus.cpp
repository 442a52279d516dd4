#include "lietwist/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lietwist {

namespace {

void check_rank(const TorusElement& a, const TorusElement& b) {
  if (a.rank() != b.rank())
    fail(ErrorCode::DatumMismatch, "torus elements live over different lattices");
}

} // namespace

TorusElement TorusElement::one(std::size_t rank) {
  TorusElement t(rank);
  t.add_term(Weight(rank), 1);
  return t;
}

TorusElement TorusElement::monomial(const RationalWeight& exponent, Int coeff) {
  TorusElement t(exponent.size(), TwistClass(exponent));
  t.add_term(exponent.floor(), coeff);
  return t;
}

RationalWeight TorusElement::exponent(const Weight& offset) const {
  return twist_.shift() + RationalWeight(offset);
}

Weight TorusElement::offset_of(const RationalWeight& exponent) const {
  RationalWeight d = exponent - twist_.shift();
  if (!d.is_integral())
    fail(ErrorCode::BadTwist, "exponent " + exponent.str() + " is not in the twist class " + twist_.str());
  return d.integral();
}

Int TorusElement::coeff(const Weight& offset) const {
  auto it = terms_.find(offset);
  return it == terms_.end() ? 0 : it->second;
}

Int TorusElement::coeff_at(const RationalWeight& exponent) const {
  RationalWeight d = exponent - twist_.shift();
  if (!d.is_integral()) return 0;
  return coeff(d.integral());
}

void TorusElement::add_term(const Weight& offset, Int c) {
  if (c == 0) return;
  if (offset.size() != rank_) fail(ErrorCode::DimensionMismatch, "weight has wrong length");
  auto [it, inserted] = terms_.try_emplace(offset, c);
  if (!inserted) {
    it->second = add_checked(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void TorusElement::add_monomial(const RationalWeight& exponent, Int c) { add_term(offset_of(exponent), c); }

std::vector<std::pair<Weight, Int>> TorusElement::sorted_terms() const {
  std::vector<std::pair<Weight, Int>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end());
  return v;
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  check_rank(*this, o);
  if (o.is_zero()) return *this;
  if (is_zero()) twist_ = o.twist_;
  if (!(twist_ == o.twist_)) fail(ErrorCode::BadTwist, "adding elements of different twist classes");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) { return *this += -o; }

TorusElement TorusElement::operator-() const {
  TorusElement t(rank_, twist_);
  for (const auto& [w, c] : terms_) t.terms_.emplace(w, neg_checked(c));
  return t;
}

TorusElement TorusElement::scaled(Int k) const {
  TorusElement t(rank_, twist_);
  if (k == 0) return t;
  for (const auto& [w, c] : terms_) t.terms_.emplace(w, mul_checked(k, c));
  return t;
}

TorusElement TorusElement::shifted(const RationalWeight& shift) const {
  RationalWeight total = twist_.shift() + shift;
  TorusElement t(rank_, TwistClass(total));
  Weight carry = total.floor();
  for (const auto& [w, c] : terms_) t.terms_.emplace(w + carry, c);
  return t;
}

bool operator==(const TorusElement& a, const TorusElement& b) {
  if (a.rank_ != b.rank_) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.twist_ == b.twist_ && a.terms_ == b.terms_;
}

Int TorusElement::augmentation() const {
  Int s = 0;
  for (const auto& [w, c] : terms_) s = add_checked(s, c);
  return s;
}

std::string TorusElement::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : sorted_terms()) {
    if (!s.empty()) s += " + ";
    s += std::to_string(c) + "*e^" + exponent(w).str();
  }
  return s;
}

TorusElement multiply(const TorusElement& a, const TorusElement& b) {
  check_rank(a, b);
  RationalWeight total = a.twist().shift() + b.twist().shift();
  TorusElement t(a.rank(), TwistClass(total));
  Weight carry = total.floor();
  for (const auto& [u, c] : a.terms())
    for (const auto& [v, d] : b.terms()) t.add_term(u + v + carry, mul_checked(c, d));
  return t;
}

TorusElement dualize(const TorusElement& a) {
  // -(delta + mu) = (-delta) + (-mu); recanonicalize the shift.
  RationalWeight neg = -a.twist().shift();
  TorusElement t(a.rank(), TwistClass(neg));
  Weight carry = neg.floor();
  for (const auto& [w, c] : a.terms()) t.add_term(carry - w, c);
  return t;
}

std::complex<double> numeric_evaluate(const TorusElement& a, std::span<const double> angles) {
  if (angles.size() != a.rank()) fail(ErrorCode::DimensionMismatch, "angle vector has wrong length");
  const RationalWeight& d = a.twist().shift();
  double base = 0.0;
  for (std::size_t i = 0; i < angles.size(); ++i) base += d[i].to_double() * angles[i];
  std::complex<double> sum = 0.0;
  for (const auto& [w, c] : a.sorted_terms()) {
    double phase = base;
    for (std::size_t i = 0; i < angles.size(); ++i) phase += static_cast<double>(w[i]) * angles[i];
    sum += static_cast<double>(c) * std::polar(1.0, 2.0 * std::numbers::pi * phase);
  }
  return sum;
}

TorusElement apply_matrix(const IntMatrix& m, const TorusElement& a) {
  const RationalWeight& d = a.twist().shift();
  RationalWeight moved = m.apply(d) - d;
  if (!moved.is_integral())
    fail(ErrorCode::ShiftNotStable, "twist " + d.str() + " is not stable under the Weyl group");
  const Weight& k = moved.integral();
  TorusElement t(a.rank(), a.twist());
  for (const auto& [w, c] : a.terms()) t.add_term(k + m.apply(w), c);
  return t;
}

} // namespace lietwist
