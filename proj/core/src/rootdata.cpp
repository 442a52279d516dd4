#include "lietwist/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace lietwist {

namespace {

using Vec = std::vector<Int>;

std::string lower(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Simple roots in a Euclidean realization (coordinates doubled where the
// standard ones are half-integers; the Cartan matrix is scale invariant).
std::vector<Vec> realization(char type, int n) {
  std::vector<Vec> r;
  auto unit = [](std::size_t dim, std::size_t i, Int v) {
    Vec e(dim, 0);
    e[i] = v;
    return e;
  };
  auto diff = [](std::size_t dim, std::size_t i, std::size_t j) {
    Vec e(dim, 0);
    e[i] = 1;
    e[j] = -1;
    return e;
  };
  const auto un = static_cast<std::size_t>(n);
  switch (type) {
  case 'A':
    for (std::size_t i = 0; i < un; ++i) r.push_back(diff(un + 1, i, i + 1));
    break;
  case 'B':
  case 'C':
    for (std::size_t i = 0; i + 1 < un; ++i) r.push_back(diff(un, i, i + 1));
    r.push_back(unit(un, un - 1, type == 'B' ? 1 : 2));
    break;
  case 'D': {
    for (std::size_t i = 0; i + 1 < un; ++i) r.push_back(diff(un, i, i + 1));
    Vec last(un, 0);
    last[un - 2] = 1;
    last[un - 1] = 1;
    r.push_back(last);
    break;
  }
  case 'E': {
    // Bourbaki realization inside R^8, doubled.
    r.push_back({1, -1, -1, -1, -1, -1, -1, 1});
    r.push_back({2, 2, 0, 0, 0, 0, 0, 0});
    for (std::size_t i = 0; i + 2 < un; ++i) {
      Vec e(8, 0);
      e[i] = -2;
      e[i + 1] = 2;
      r.push_back(e);
    }
    break;
  }
  case 'F':
    r.push_back({0, 2, -2, 0});
    r.push_back({0, 0, 2, -2});
    r.push_back({0, 0, 0, 2});
    r.push_back({1, -1, -1, -1});
    break;
  case 'G':
    r.push_back({1, -1, 0});
    r.push_back({-2, 1, 1});
    break;
  default:
    fail(ErrorCode::UnknownSeries, std::string("unknown series ") + type);
  }
  return r;
}

Int inner(const Vec& a, const Vec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = add_checked(s, mul_checked(a[i], b[i]));
  return s;
}

// <v, a^v> = 2(v, a)/(a, a); exact or nullopt.
std::optional<Int> coroot_pairing(const Vec& v, const Vec& a) {
  Int num = mul_checked(2, inner(v, a));
  Int den = inner(a, a);
  if (num % den != 0) return std::nullopt;
  return num / den;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t factor_weyl_order(const SimpleFactor& f) {
  switch (f.type) {
  case 'A': return factorial(f.rank + 1);
  case 'B':
  case 'C': return (std::uint64_t{1} << f.rank) * factorial(f.rank);
  case 'D': return (std::uint64_t{1} << (f.rank - 1)) * factorial(f.rank);
  case 'E': return f.rank == 6 ? 51840 : (f.rank == 7 ? 2903040 : 696729600);
  case 'F': return 1152;
  case 'G': return 12;
  }
  return 0;
}

bool valid_factor(char type, int n) {
  switch (type) {
  case 'A': return n >= 1;
  case 'B':
  case 'C': return n >= 2;
  case 'D': return n >= 2;
  case 'E': return n >= 6 && n <= 8;
  case 'F': return n == 4;
  case 'G': return n == 2;
  }
  return false;
}

// Rational inverse of a square integer matrix (Gauss-Jordan).
std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n + i] = Rational(1);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) fail(ErrorCode::LatticeNotIntermediate, "lattice basis is singular");
    std::swap(a[p], a[c]);
    Rational inv = Rational(1) / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Rational f = a[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

RationalWeight apply_rational(const std::vector<std::vector<Rational>>& m, const RationalWeight& x) {
  std::vector<Rational> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    Rational s;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!m[i][j].is_zero()) s += m[i][j] * x[j];
    out[i] = s;
  }
  return RationalWeight::from(out);
}

Int height(const Weight& coeffs) {
  Int h = 0;
  for (Int c : coeffs) h += c;
  return h;
}

// Canonical order: height, then simple coordinates lexicographically descending.
bool canonical_less(const Weight& a, const Weight& b) {
  Int ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  return b < a;
}

} // namespace

// ---------------------------------------------------------------- labels

SeriesLabel SeriesLabel::parse(const std::string& text) {
  SeriesLabel label;
  std::string t = trim(text);
  if (t.empty()) fail(ErrorCode::UnknownSeries, "empty series label");
  std::string norm;
  for (char ch : t) norm.push_back(ch == '*' ? 'x' : ch);
  for (const auto& raw : split(norm, 'x')) {
    std::string part = trim(raw);
    if (part.size() < 2) fail(ErrorCode::UnknownSeries, "bad series factor '" + part + "'");
    char type = static_cast<char>(std::toupper(static_cast<unsigned char>(part[0])));
    int n = 0;
    for (std::size_t i = 1; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        fail(ErrorCode::UnknownSeries, "bad series factor '" + part + "'");
      n = n * 10 + (part[i] - '0');
      if (n > 1000) fail(ErrorCode::UnknownSeries, "bad series factor '" + part + "'");
    }
    if (type == 'T' || type == 'U') {
      label.central_rank += n;
      continue;
    }
    if (!valid_factor(type, n)) fail(ErrorCode::UnknownSeries, "unknown series '" + part + "'");
    label.factors.push_back({type, n});
  }
  return label;
}

std::string SeriesLabel::str() const {
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += "x";
    s += f.type;
    s += std::to_string(f.rank);
  }
  if (central_rank > 0) {
    if (!s.empty()) s += "x";
    s += "T" + std::to_string(central_rank);
  }
  return s;
}

std::size_t SeriesLabel::semisimple_rank() const {
  std::size_t n = 0;
  for (const auto& f : factors) n += static_cast<std::size_t>(f.rank);
  return n;
}

LatticeChoice LatticeChoice::parse(const std::string& text) {
  LatticeChoice c;
  std::string t = lower(trim(text));
  if (t.empty() || t == "weight" || t == "sc" || t == "spin" || t == "simply-connected") {
    c.kind = Kind::Weight;
  } else if (t == "root" || t == "adjoint" || t == "ad") {
    c.kind = Kind::Root;
  } else if (t == "vector" || t == "so" || t == "classical") {
    c.kind = Kind::Vector;
  } else if (t.rfind("gens:", 0) == 0) {
    c.kind = Kind::Generators;
    for (const auto& g : split(t.substr(5), ';')) {
      std::vector<Rational> coords;
      for (const auto& x : split(g, ',')) {
        try {
          coords.push_back(Rational::parse(trim(x)));
        } catch (const Error&) {
          fail(ErrorCode::LatticeNotIntermediate, "bad lattice generator '" + g + "'");
        }
      }
      c.generators.push_back(RationalWeight::from(coords));
    }
  } else {
    fail(ErrorCode::LatticeNotIntermediate, "unknown lattice choice '" + text + "'");
  }
  return c;
}

std::string LatticeChoice::str() const {
  switch (kind) {
  case Kind::Weight: return "weight";
  case Kind::Root: return "root";
  case Kind::Vector: return "vector";
  case Kind::Generators: {
    std::string s = "gens:";
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (i) s += ";";
      for (std::size_t j = 0; j < generators[i].size(); ++j) {
        if (j) s += ",";
        s += generators[i][j].str();
      }
    }
    return s;
  }
  }
  return "weight";
}

// ---------------------------------------------------------------- RootSystem

RootSystem::RootSystem(std::size_t rank, std::vector<Weight> positive, std::vector<Covector> coroots,
                       std::vector<std::size_t> simple)
    : rank_(rank), positive_(std::move(positive)), coroots_(std::move(coroots)),
      simple_(std::move(simple)) {
  Weight sum(rank_);
  for (std::size_t i = 0; i < positive_.size(); ++i) {
    sum += positive_[i];
    index_.emplace(positive_[i], static_cast<long>(i + 1));
    index_.emplace(-positive_[i], -static_cast<long>(i + 1));
  }
  rho_ = RationalWeight(sum, 2);
}

bool RootSystem::is_positive(const Weight& root) const {
  auto it = index_.find(root);
  return it != index_.end() && it->second > 0;
}

Covector RootSystem::coroot_of(const Weight& root) const {
  auto it = index_.find(root);
  if (it == index_.end()) fail(ErrorCode::NotARoot, root.str() + " is not a root");
  const auto i = static_cast<std::size_t>(std::labs(it->second) - 1);
  return it->second > 0 ? coroots_[i] : -coroots_[i];
}

std::optional<std::size_t> RootSystem::positive_index(const Weight& root) const {
  auto it = index_.find(root);
  if (it == index_.end() || it->second < 0) return std::nullopt;
  return static_cast<std::size_t>(it->second - 1);
}

std::vector<Weight> RootSystem::all_roots() const {
  std::vector<Weight> out = positive_;
  for (const auto& r : positive_) out.push_back(-r);
  return out;
}

Rational RootSystem::pair(const RationalWeight& x, const Weight& root) const {
  return x.dot(coroot_of(root));
}

bool RootSystem::is_dominant(const RationalWeight& x) const {
  for (std::size_t i = 0; i < num_simple(); ++i)
    if (x.numerators().dot(simple_coroot(i)) < 0) return false;
  return true;
}

bool RootSystem::is_strictly_dominant(const RationalWeight& x) const {
  for (std::size_t i = 0; i < num_simple(); ++i)
    if (x.numerators().dot(simple_coroot(i)) <= 0) return false;
  return true;
}

bool RootSystem::is_regular(const RationalWeight& x) const {
  for (const auto& c : coroots_)
    if (x.numerators().dot(c) == 0) return false;
  return true;
}

IntMatrix RootSystem::reflection(std::size_t i) const {
  IntMatrix m = IntMatrix::identity(rank_);
  const Weight& b = positive_[i];
  const Covector& c = coroots_[i];
  for (std::size_t r = 0; r < rank_; ++r)
    for (std::size_t s = 0; s < rank_; ++s)
      m(r, s) = sub_checked(m(r, s), mul_checked(b[r], c[s]));
  return m;
}

Rational RootSystem::form(const RationalWeight& x, const RationalWeight& y) const {
  Int s = 0;
  for (const auto& c : coroots_)
    s = add_checked(s, mul_checked(x.numerators().dot(c), y.numerators().dot(c)));
  return Rational(s, mul_checked(x.den(), y.den()));
}

// ---------------------------------------------------------------- RootDatum

DatumPtr RootDatum::build(const std::string& label, const std::string& lattice, const Limits& limits) {
  return build(SeriesLabel::parse(label), LatticeChoice::parse(lattice), limits);
}

DatumPtr RootDatum::build(const SeriesLabel& label, const LatticeChoice& lattice, const Limits& limits) {
  if (limits.max_rank > kMaxRank)
    fail(ErrorCode::RankCapExceeded, "rank cap exceeds storage limit " + std::to_string(kMaxRank));
  const std::size_t n = label.semisimple_rank();
  const std::size_t c = static_cast<std::size_t>(label.central_rank);
  const std::size_t r = n + c;
  if (r == 0) fail(ErrorCode::UnknownSeries, "empty series label");
  if (r > limits.max_rank)
    fail(ErrorCode::RankCapExceeded,
         "rank " + std::to_string(r) + " exceeds cap " + std::to_string(limits.max_rank));

  std::shared_ptr<RootDatum> d(new RootDatum());
  d->label_ = label;
  d->lattice_ = lattice;
  d->limits_ = limits;
  d->rank_ = r;

  // Cartan matrix, block diagonal; vector-lattice generators per factor.
  d->cartan_ = IntMatrix(n, n);
  std::vector<Weight> vector_gens;
  std::size_t off = 0;
  for (const auto& f : label.factors) {
    auto simple = realization(f.type, f.rank);
    const auto k = simple.size();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        d->cartan_(off + i, off + j) = *coroot_pairing(simple[i], simple[j]);
    const bool classical = f.type == 'A' || f.type == 'B' || f.type == 'C' || f.type == 'D';
    const std::size_t dim = simple[0].size();
    for (std::size_t e = 0; e < (classical ? dim : k); ++e) {
      Weight g(n);
      for (std::size_t j = 0; j < k; ++j) {
        if (classical) {
          Vec unit(dim, 0);
          unit[e] = 1;
          auto p = coroot_pairing(unit, simple[j]);
          if (!p) fail(ErrorCode::InternalInconsistency, "vector lattice not integral");
          g[off + j] = *p;
        } else {
          g[off + j] = (e == j) ? 1 : 0;
        }
      }
      vector_gens.push_back(g);
    }
    off += k;
  }

  // The lattice L between Q and P, in fundamental-weight coordinates.
  std::vector<Weight> gens;
  switch (lattice.kind) {
  case LatticeChoice::Kind::Weight:
    for (std::size_t i = 0; i < n; ++i) {
      Weight e(n);
      e[i] = 1;
      gens.push_back(e);
    }
    break;
  case LatticeChoice::Kind::Root:
    for (std::size_t i = 0; i < n; ++i) gens.push_back(d->cartan_.row(i));
    break;
  case LatticeChoice::Kind::Vector:
    gens = vector_gens;
    break;
  case LatticeChoice::Kind::Generators:
    for (const auto& g : lattice.generators) {
      if (g.size() != n)
        fail(ErrorCode::LatticeNotIntermediate,
             "lattice generator " + g.str() + " must have " + std::to_string(n) + " coordinates");
      if (!g.is_integral())
        fail(ErrorCode::LatticeNotIntermediate,
             "lattice generator " + g.str() + " is not in the weight lattice");
      gens.push_back(g.integral());
    }
    break;
  }
  Lattice l = Lattice::from_generators(n, gens);
  for (std::size_t i = 0; i < n; ++i)
    if (!l.contains(d->cartan_.row(i)))
      fail(ErrorCode::LatticeNotIntermediate, "lattice does not contain the root lattice");

  d->basis_ = IntMatrix::identity(r);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) d->basis_(i, j) = l.basis()[j][i];
  d->basis_inverse_ = rational_inverse(d->basis_);

  // Simple roots in X(T) coordinates; simple coroots are rows of the basis matrix.
  std::vector<Weight> simple_x, simple_cov;
  for (std::size_t i = 0; i < n; ++i) {
    Weight f(r);
    for (std::size_t j = 0; j < n; ++j) f[j] = d->cartan_(i, j);
    RationalWeight x = apply_rational(d->basis_inverse_, RationalWeight(f));
    if (!x.is_integral())
      fail(ErrorCode::LatticeNotIntermediate, "simple root not in the chosen lattice");
    simple_x.push_back(x.integral());
    simple_cov.push_back(d->basis_.row(i));
  }

  // Reflection closure in simple-root coordinates, tracking coroots.
  std::map<Weight, Weight> coroot_coeffs;  // root coeffs -> coroot coeffs over simple coroots
  std::deque<Weight> queue;
  for (std::size_t i = 0; i < n; ++i) {
    Weight e(n);
    e[i] = 1;
    coroot_coeffs.emplace(e, e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Weight beta = queue.front();
    queue.pop_front();
    Weight gamma = coroot_coeffs.at(beta);
    for (std::size_t j = 0; j < n; ++j) {
      // <beta, a_j^v> and <a_j, gamma^v>
      Int p = 0, q = 0;
      for (std::size_t i = 0; i < n; ++i) {
        p += beta[i] * d->cartan_(i, j);
        q += gamma[i] * d->cartan_(j, i);
      }
      Weight b2 = beta, g2 = gamma;
      b2[j] -= p;
      g2[j] -= q;
      if (coroot_coeffs.emplace(b2, g2).second) queue.push_back(b2);
    }
  }
  std::vector<Weight> pos;
  for (const auto& [beta, gamma] : coroot_coeffs)
    if (std::all_of(beta.begin(), beta.end(), [](Int v) { return v >= 0; })) pos.push_back(beta);
  std::sort(pos.begin(), pos.end(), canonical_less);

  std::vector<Weight> roots, coroots;
  std::vector<std::size_t> simple_idx(n);
  for (std::size_t k = 0; k < pos.size(); ++k) {
    const Weight& beta = pos[k];
    const Weight& gamma = coroot_coeffs.at(beta);
    Weight x(r), cv(r);
    for (std::size_t i = 0; i < n; ++i) {
      if (beta[i]) x = x.plus_multiple(beta[i], simple_x[i]);
      if (gamma[i]) cv = cv.plus_multiple(gamma[i], simple_cov[i]);
    }
    roots.push_back(x);
    coroots.push_back(cv);
    if (height(beta) == 1)
      for (std::size_t i = 0; i < n; ++i)
        if (beta[i] == 1) simple_idx[i] = k;
  }
  d->simple_coords_ = pos;
  d->roots_ = std::make_shared<RootSystem>(r, std::move(roots), std::move(coroots), std::move(simple_idx));
  return d;
}

RationalWeight RootDatum::to_fundamental(const RationalWeight& x) const { return basis_.apply(x); }

RationalWeight RootDatum::from_fundamental(const RationalWeight& f) const {
  if (f.size() != rank_) fail(ErrorCode::DimensionMismatch, "weight has wrong length");
  return apply_rational(basis_inverse_, f);
}

Weight RootDatum::root_from_simple_coordinates(const Weight& coeffs) const {
  if (coeffs.size() != semisimple_rank())
    fail(ErrorCode::DimensionMismatch, "simple-root coordinates have wrong length");
  Weight x(rank_);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i]) x = x.plus_multiple(coeffs[i], roots_->simple_root(i));
  return x;
}

Lattice RootDatum::root_lattice() const {
  std::vector<Weight> g;
  for (std::size_t i = 0; i < roots_->num_simple(); ++i) g.push_back(roots_->simple_root(i));
  return Lattice::from_generators(rank_, g);
}

Pi1Report RootDatum::pi1() const {
  Pi1Report rep;
  rep.free_rank = static_cast<std::size_t>(label_.central_rank);
  // P / L for the semisimple part.
  const std::size_t n = semisimple_rank();
  IntMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = basis_(i, j);
  for (Int v : smith_invariants(b))
    if (v > 1) rep.torsion.push_back(v);
  return rep;
}

std::uint64_t RootDatum::weyl_order_formula() const {
  std::uint64_t o = 1;
  for (const auto& f : label_.factors) o *= factor_weyl_order(f);
  return o;
}

// ---------------------------------------------------------------- subgroups

SubgroupPtr SubgroupDatum::full(const DatumPtr& parent) {
  std::vector<Weight> g;
  for (std::size_t i = 0; i < parent->system().num_simple(); ++i) g.push_back(parent->system().simple_root(i));
  return from_roots(parent, g);
}

SubgroupPtr SubgroupDatum::from_roots(const DatumPtr& parent, const std::vector<Weight>& generators) {
  const RootSystem& g = parent->system();
  std::set<Weight> s;
  std::deque<Weight> queue;
  for (const auto& a : generators) {
    if (a.size() != parent->rank() || !g.is_root(a))
      fail(ErrorCode::NotASubsetOfRoots, a.str() + " is not a root of " + parent->label().str());
    for (const Weight& b : {a, -a})
      if (s.insert(b).second) queue.push_back(b);
  }
  // Reflection closure.
  while (!queue.empty()) {
    Weight b = queue.front();
    queue.pop_front();
    std::vector<Weight> cur(s.begin(), s.end());
    for (const auto& a : cur) {
      Covector cv = g.coroot_of(a);
      Weight r1 = b.plus_multiple(-b.dot(cv), a);
      if (s.insert(r1).second) queue.push_back(r1);
      Covector cb = g.coroot_of(b);
      Weight r2 = a.plus_multiple(-a.dot(cb), b);
      if (s.insert(r2).second) queue.push_back(r2);
    }
  }
  for (const auto& a : s)
    for (const auto& b : s) {
      Weight sum = a + b;
      if (g.is_root(sum) && !s.count(sum))
        fail(ErrorCode::SubsystemNotClosed,
             "root subsystem is not closed: " + a.str() + " + " + b.str() + " is missing");
    }

  std::shared_ptr<SubgroupDatum> sub(new SubgroupDatum());
  sub->parent_ = parent;
  std::vector<Weight> pos;
  std::vector<Covector> cov;
  for (std::size_t i = 0; i < g.positive_roots().size(); ++i) {
    const Weight& a = g.positive_roots()[i];
    if (s.count(a)) {
      pos.push_back(a);
      cov.push_back(g.positive_coroots()[i]);
    } else {
      sub->complement_.push_back(a);
    }
  }
  std::set<Weight> pos_set(pos.begin(), pos.end());
  std::vector<std::size_t> simple;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    bool decomposable = false;
    for (const auto& b : pos)
      if (pos_set.count(pos[i] - b)) {
        decomposable = true;
        break;
      }
    if (!decomposable) simple.push_back(i);
  }
  sub->levi_ = true;
  for (std::size_t i : simple) {
    auto idx = g.positive_index(pos[i]);
    if (std::find(g.simple_indices().begin(), g.simple_indices().end(), *idx) == g.simple_indices().end())
      sub->levi_ = false;
  }
  sub->roots_ = std::make_shared<RootSystem>(parent->rank(), std::move(pos), std::move(cov), std::move(simple));
  return sub;
}

RationalWeight rho(const RootDatum& datum) { return datum.system().rho(); }

RationalWeight rho(const SubgroupDatum& sub, RhoKind which) {
  switch (which) {
  case RhoKind::G: return sub.group_roots()->rho();
  case RhoKind::H: return sub.system().rho();
  case RhoKind::M: {
    Weight s(sub.datum().rank());
    for (const auto& a : sub.complement_positive()) s += a;
    return RationalWeight(s, 2);
  }
  }
  return {};
}

Rational pair(const RootDatum& datum, const RationalWeight& x, const Weight& alpha) {
  if (x.size() != datum.rank()) fail(ErrorCode::DimensionMismatch, "weight has wrong length");
  return datum.system().pair(x, alpha);
}

Lattice subgroup_character_lattice(const SubgroupDatum& sub) {
  const std::size_t r = sub.datum().rank();
  const RootSystem& h = sub.system();
  if (h.num_simple() == 0) return Lattice::full(r);
  IntMatrix a(h.num_simple(), r);
  for (std::size_t i = 0; i < h.num_simple(); ++i)
    for (std::size_t j = 0; j < r; ++j) a(i, j) = h.simple_coroot(i)[j];
  return integer_kernel(a);
}

// ---------------------------------------------------------------- presets

namespace {

struct Preset {
  const char* label;
  std::vector<const char*> names;
  std::vector<std::vector<Int>> simple_coords;
};

const std::vector<Preset>& presets() {
  static const std::vector<Preset> p = {
      {"G2", {"a2long", "a2", "su3"}, {{0, 1}, {3, 1}}},
      {"B3", {"so3xso4", "b1xd2"}, {{1, 1, 1}, {0, 1, 0}, {0, 1, 2}}},
      {"F4", {"b4", "spin9"}, {{0, 1, 2, 2}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}},
      {"C2", {"a1xa1", "sp1xsp1", "c1xc1"}, {{2, 1}, {0, 1}}},
  };
  return p;
}

std::vector<std::size_t> parse_indices(const std::string& list) {
  std::vector<std::size_t> out;
  if (trim(list).empty()) return out;
  for (const auto& t : split(list, ',')) {
    std::string s = trim(t);
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      fail(ErrorCode::NotASubsetOfRoots, "bad root index '" + s + "'");
    out.push_back(static_cast<std::size_t>(std::stoul(s)));
  }
  return out;
}

} // namespace

std::vector<std::string> preset_names(const RootDatum& datum) {
  std::vector<std::string> out = {"T", "G", "levi"};
  for (const auto& p : presets())
    if (datum.label().str() == p.label) out.push_back(p.names.front());
  return out;
}

std::vector<Weight> resolve_subgroup(const RootDatum& datum, const std::string& descriptor) {
  const RootSystem& g = datum.system();
  std::string s = lower(trim(descriptor));
  if (s == "t" || s == "torus" || s.empty()) return {};
  if (s == "g" || s == "full") {
    std::vector<Weight> out;
    for (std::size_t i = 0; i < g.num_simple(); ++i) out.push_back(g.simple_root(i));
    return out;
  }
  if (s == "levi") {
    if (g.num_simple() == 0) return {};
    return {g.simple_root(0)};
  }
  if (s.rfind("levi:", 0) == 0) {
    std::vector<Weight> out;
    for (std::size_t i : parse_indices(s.substr(5))) {
      if (i >= g.num_simple())
        fail(ErrorCode::NotASubsetOfRoots, "simple root index " + std::to_string(i) + " out of range");
      out.push_back(g.simple_root(i));
    }
    return out;
  }
  if (s.rfind("roots:", 0) == 0) {
    std::vector<Weight> out;
    for (std::size_t i : parse_indices(s.substr(6))) {
      if (i >= g.positive_roots().size())
        fail(ErrorCode::NotASubsetOfRoots, "positive root index " + std::to_string(i) + " out of range");
      out.push_back(g.positive_roots()[i]);
    }
    return out;
  }
  for (const auto& p : presets()) {
    if (datum.label().str() != p.label) continue;
    for (const char* name : p.names)
      if (s == name) {
        std::vector<Weight> out;
        for (const auto& c : p.simple_coords)
          out.push_back(datum.root_from_simple_coordinates(Weight::from(c)));
        return out;
      }
  }
  fail(ErrorCode::NotASubsetOfRoots, "unknown subgroup '" + descriptor + "' for " + datum.label().str());
}

SubgroupPtr make_subgroup(const DatumPtr& datum, const std::string& descriptor) {
  return SubgroupDatum::from_roots(datum, resolve_subgroup(*datum, descriptor));
}

} // namespace lietwist
