#include "lietwist/serialize.hpp"

#include <sstream>

namespace lietwist {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

Int parse_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return static_cast<Int>(v);
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "bad integer '" + s + "'");
  }
}

template <class F>
void each_line(const std::string& text, F f) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (!line.empty()) f(line);
  }
}

} // namespace

RationalWeight parse_rational_weight(const std::string& text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') fail(ErrorCode::ParseError, "expected [..] in '" + t + "'");
  std::vector<Rational> coords;
  std::string body = t.substr(1, t.size() - 2);
  if (!trim(body).empty()) {
    std::istringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        coords.push_back(Rational::parse(trim(item)));
      } catch (const Error&) {
        fail(ErrorCode::ParseError, "bad coordinate '" + item + "'");
      }
    }
  }
  if (coords.size() > kMaxRank) fail(ErrorCode::ParseError, "too many coordinates");
  return RationalWeight::from(coords);
}

std::string to_text(const TorusElement& a) {
  std::string s = "twist: " + a.twist().str() + "\n";
  for (const auto& [w, c] : a.sorted_terms()) s += std::to_string(c) + " @ " + a.exponent(w).str() + "\n";
  return s;
}

std::string to_text(const GroupElement& a) {
  std::string s = "twist: " + a.twist().str() + "\n";
  for (const auto& [l, c] : a.sorted_terms()) s += std::to_string(c) + " @ " + l.str() + "\n";
  return s;
}

TorusElement torus_from_text(std::size_t rank, const std::string& text) {
  TorusElement out(rank);
  bool header = false;
  each_line(text, [&](const std::string& line) {
    if (line.rfind("twist:", 0) == 0) {
      RationalWeight t = parse_rational_weight(line.substr(6));
      if (t.size() != rank) fail(ErrorCode::ParseError, "twist has wrong length");
      out = TorusElement(rank, TwistClass(t));
      header = true;
      return;
    }
    auto at = line.find('@');
    if (at == std::string::npos) fail(ErrorCode::ParseError, "expected 'coeff @ [..]' in '" + line + "'");
    Int c = parse_int(trim(line.substr(0, at)));
    RationalWeight x = parse_rational_weight(line.substr(at + 1));
    if (x.size() != rank) fail(ErrorCode::ParseError, "weight has wrong length");
    if (!header) {
      out = TorusElement(rank, TwistClass(x));
      header = true;
    }
    if (!out.twist().contains(x)) fail(ErrorCode::ParseError, "weight " + x.str() + " not in the twist class");
    out.add_monomial(x, c);
  });
  return out;
}

GroupElement group_from_text(const ScopePtr& scope, const std::string& text) {
  TorusElement t = torus_from_text(scope->rank(), text);
  GroupElement g(scope, t.twist());
  for (const auto& [w, c] : t.sorted_terms()) g.add(t.exponent(w), c);
  return g;
}

} // namespace lietwist
