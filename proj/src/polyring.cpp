#include "macrui/polyring.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <unordered_map>

namespace macrui {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::span<const int> exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars)) {
    throw Error(ErrorKind::kInvalidArgument, "too many variables");
  }
  for (std::size_t i = 0; i < exps.size(); ++i) set(static_cast<int>(i), exps[i]);
}

void Monomial::set(int i, int e) {
  if (i < 0 || i >= kMaxVars) throw Error(ErrorKind::kInvalidArgument, "variable index out of range");
  if (e < 0 || e > 255) throw Error(ErrorKind::kInvalidArgument, "exponent out of range");
  exps_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    const int e = a.exps_[i] + b.exps_[i];
    if (e > 255) throw Error(ErrorKind::kInvalidArgument, "exponent overflow");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    if (b.exps_[i] > a.exps_[i]) throw Error(ErrorKind::kInternal, "monomial does not divide");
    r.exps_[i] = static_cast<std::uint8_t>(a.exps_[i] - b.exps_[i]);
  }
  return r;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da > db;
  return a.exps_ > b.exps_;
}

Monomial Monomial::swapped(int i, int j) const {
  Monomial r = *this;
  std::swap(r.exps_[static_cast<std::size_t>(i)], r.exps_[static_cast<std::size_t>(j)]);
  return r;
}

std::size_t Monomial::hash() const {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::memcpy(&lo, exps_.data(), 8);
  std::memcpy(&hi, exps_.data() + 8, 8);
  return static_cast<std::size_t>(lo * 0x9E3779B97F4A7C15ULL ^ (hi + (lo >> 29)));
}

// ---------------------------------------------------------------------------
// VarSpace

VarSpace VarSpace::z(int N) {
  if (N < 0 || N > kMaxVars) throw Error(ErrorKind::kInvalidArgument, "bad number of variables");
  return VarSpace(false, N, 0);
}

VarSpace VarSpace::xy(int n, int m) {
  if (n < 0 || m < 0 || n + m > kMaxVars) {
    throw Error(ErrorKind::kInvalidArgument, "bad number of variables");
  }
  return VarSpace(true, n, m);
}

std::vector<int> VarSpace::x_block() const {
  std::vector<int> b;
  for (int i = 0; i < n_; ++i) b.push_back(i);
  return b;
}

std::vector<int> VarSpace::y_block() const {
  std::vector<int> b;
  for (int j = 0; j < m_; ++j) b.push_back(n_ + j);
  return b;
}

std::vector<int> VarSpace::all() const {
  std::vector<int> b;
  for (int i = 0; i < dim(); ++i) b.push_back(i);
  return b;
}

std::string VarSpace::var_name(int index) const {
  if (!xy_) return "z" + std::to_string(index + 1);
  if (index < n_) return "x" + std::to_string(index + 1);
  return "y" + std::to_string(index - n_ + 1);
}

// ---------------------------------------------------------------------------
// MultiPoly

namespace {

using TermMap = std::unordered_map<Monomial, QTScalar, MonomialHash>;

void accumulate(TermMap& acc, const Monomial& m, const QTScalar& c) {
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) it->second += c;
}

std::vector<MultiPoly::Term> sorted_terms(TermMap&& acc) {
  std::vector<MultiPoly::Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.emplace_back(m, std::move(c));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return grlex_greater(a.first, b.first); });
  return out;
}

}  // namespace

MultiPoly MultiPoly::constant(VarSpace space, const QTScalar& c) {
  MultiPoly p(space);
  if (!c.is_zero()) p.terms_.emplace_back(Monomial(), c);
  return p;
}

MultiPoly MultiPoly::variable(VarSpace space, int index) {
  if (index < 0 || index >= space.dim()) {
    throw Error(ErrorKind::kInvalidArgument, "variable index out of range");
  }
  Monomial m;
  m.set(index, 1);
  return monomial(space, m);
}

MultiPoly MultiPoly::monomial(VarSpace space, const Monomial& m, const QTScalar& c) {
  MultiPoly p(space);
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

MultiPoly MultiPoly::from_terms(VarSpace space, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
  MultiPoly p(space);
  for (auto& term : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == term.first) {
      p.terms_.back().second += term.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!term.second.is_zero()) {
      p.terms_.push_back(std::move(term));
    }
  }
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

int MultiPoly::total_degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }

QTScalar MultiPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& term, const Monomial& x) {
    return grlex_greater(term.first, x);
  });
  if (it != terms_.end() && it->first == m) return it->second;
  return QTScalar();
}

int MultiPoly::degree_in(int index) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[index]);
  return d;
}

MultiPoly MultiPoly::homogeneous_component(int d) const {
  MultiPoly p(space_);
  for (const auto& term : terms_)
    if (term.first.degree() == d) p.terms_.push_back(term);
  return p;
}

MultiPoly MultiPoly::swap_qt() const {
  MultiPoly p(space_);
  p.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) p.terms_.emplace_back(m, c.swap_qt());
  return p;
}

MultiPoly MultiPoly::swap_variables(int i, int j) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_) terms.emplace_back(m.swapped(i, j), c);
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
  MultiPoly p(space_);
  p.terms_ = std::move(terms);
  return p;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p(space_);
  p.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) p.terms_.emplace_back(m, -c);
  return p;
}

void MultiPoly::check_space(const MultiPoly& other) const {
  if (!(space_ == other.space_)) {
    throw Error(ErrorKind::kSpaceMismatch, "polynomials live in different variable spaces");
  }
}

namespace {

std::vector<MultiPoly::Term> merge(std::span<const MultiPoly::Term> a,
                                   std::span<const MultiPoly::Term> b, bool subtract) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].first, a[i].first)) {
      out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
      ++j;
    } else {
      QTScalar c = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_space(rhs);
  terms_ = merge(terms_, rhs.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_space(rhs);
  terms_ = merge(terms_, rhs.terms_, true);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const QTScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& term : terms_) term.second *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_space(b);
  MultiPoly p(a.space_);
  if (a.is_zero() || b.is_zero()) return p;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const auto& single = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
    const auto& other = a.terms_.size() == 1 ? b : a;
    p.terms_.reserve(other.terms_.size());
    // Multiplying by a monomial preserves the order.
    for (const auto& [m, c] : other.terms_) p.terms_.emplace_back(m * single.first, c * single.second);
    return p;
  }
  TermMap acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) accumulate(acc, ma * mb, ca * cb);
  p.terms_ = sorted_terms(std::move(acc));
  return p;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(space_, 1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.to_string();
    bool negative = false;
    if (c.is_polynomial() && c.num().size() == 1 && cs.front() == '-') {
      negative = true;
      cs.erase(0, 1);
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool simple = c.is_polynomial() && c.num().size() == 1;
    std::string vars;
    for (int i = 0; i < space_.dim(); ++i) {
      if (m[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += space_.var_name(i);
      if (m[i] > 1) vars += "^" + std::to_string(m[i]);
    }
    if (vars.empty()) {
      os << (simple ? cs : "(" + cs + ")");
    } else {
      if (cs != "1") os << (simple ? cs : "(" + cs + ")") << "*";
      os << vars;
    }
  }
  return os.str();
}

MultiPoly poly_arith(const MultiPoly& f, const MultiPoly& g, PolyOp op) {
  switch (op) {
    case PolyOp::kAdd: return f + g;
    case PolyOp::kSub: return f - g;
    case PolyOp::kMul: return f * g;
  }
  throw Error(ErrorKind::kInternal, "unknown polynomial operation");
}

// ---------------------------------------------------------------------------
// Division

MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g) {
  if (!(f.space() == g.space())) {
    throw Error(ErrorKind::kSpaceMismatch, "polynomials live in different variable spaces");
  }
  if (g.is_zero()) throw Error(ErrorKind::kDivisionByZero, "division by the zero polynomial");
  const VarSpace space = f.space();
  if (g.size() == 1) {
    const auto& [gm, gc] = g.leading_term();
    const QTScalar inv = gc.inverse();
    std::vector<MultiPoly::Term> quotient;
    std::vector<MultiPoly::Term> rem_terms;
    for (const auto& [m, c] : f.terms()) {
      if (gm.divides(m)) {
        quotient.emplace_back(m / gm, c * inv);
      } else {
        rem_terms.emplace_back(m, c);
      }
    }
    if (!rem_terms.empty()) {
      throw NonDivisibleError("monomial does not divide every term",
                              MultiPoly::from_terms(space, std::move(rem_terms)));
    }
    return MultiPoly::from_terms(space, std::move(quotient));
  }

  // Long division; the running dividend is kept ordered so its leading term
  // is always at begin().
  std::map<Monomial, QTScalar, GrlexGreater> rest;
  for (const auto& [m, c] : f.terms()) rest.emplace(m, c);
  const auto& [lm, lc] = g.leading_term();
  const QTScalar inv = lc.inverse();
  const auto tail = g.terms().subspan(1);
  std::vector<MultiPoly::Term> quotient;
  std::vector<MultiPoly::Term> remainder;
  while (!rest.empty()) {
    auto it = rest.begin();
    const Monomial m = it->first;
    QTScalar c = std::move(it->second);
    rest.erase(it);
    if (!lm.divides(m)) {
      remainder.emplace_back(m, std::move(c));
      continue;
    }
    const Monomial qm = m / lm;
    const QTScalar qc = c * inv;
    for (const auto& [tm, tc] : tail) {
      const Monomial pm = qm * tm;
      auto [pos, inserted] = rest.try_emplace(pm, -(qc * tc));
      if (!inserted) {
        pos->second -= qc * tc;
        if (pos->second.is_zero()) rest.erase(pos);
      }
    }
    quotient.emplace_back(qm, qc);
  }
  if (!remainder.empty()) {
    throw NonDivisibleError("nonzero remainder dividing by " + g.to_string(),
                            MultiPoly::from_terms(space, std::move(remainder)));
  }
  return MultiPoly::from_terms(space, std::move(quotient));
}

MultiPoly exact_divide_by_factors(const MultiPoly& f, std::span<const MultiPoly> factors) {
  MultiPoly h = f;
  for (const auto& g : factors) h = exact_divide(h, g);
  return h;
}

// ---------------------------------------------------------------------------
// Substitution and evaluation

namespace {

// Powers of a fixed polynomial, computed on demand.
class PowerCache {
 public:
  explicit PowerCache(MultiPoly base) : powers_{MultiPoly::constant(base.space(), 1), base} {}
  const MultiPoly& get(int k) {
    while (static_cast<int>(powers_.size()) <= k) powers_.push_back(powers_.back() * powers_[1]);
    return powers_[static_cast<std::size_t>(k)];
  }

 private:
  std::vector<MultiPoly> powers_;
};

}  // namespace

MultiPoly substitute(const MultiPoly& f, const std::map<int, MultiPoly>& bindings) {
  const VarSpace space = f.space();
  std::vector<MultiPoly> images;
  images.reserve(static_cast<std::size_t>(space.dim()));
  for (int i = 0; i < space.dim(); ++i) {
    auto it = bindings.find(i);
    if (it == bindings.end()) {
      images.push_back(MultiPoly::variable(space, i));
    } else {
      if (!(it->second.space() == space)) {
        throw Error(ErrorKind::kSpaceMismatch, "binding lives in a different variable space");
      }
      images.push_back(it->second);
    }
  }
  for (const auto& [var, img] : bindings) {
    if (var < 0 || var >= space.dim()) {
      throw Error(ErrorKind::kInvalidArgument, "binding for a variable outside the space");
    }
  }
  return substitute_into(f, space, images);
}

MultiPoly substitute_into(const MultiPoly& f, const VarSpace& target,
                          std::span<const MultiPoly> images) {
  const int dim = f.space().dim();
  if (static_cast<int>(images.size()) != dim) {
    throw Error(ErrorKind::kInvalidArgument, "need one image per variable");
  }
  for (const auto& img : images) {
    if (!(img.space() == target)) {
      throw Error(ErrorKind::kSpaceMismatch, "image lives in a different variable space");
    }
  }

  // Fast path: every image is a single term (or zero).
  const bool monomial_images = std::all_of(images.begin(), images.end(),
                                           [](const MultiPoly& p) { return p.size() <= 1; });
  TermMap acc;
  if (monomial_images) {
    for (const auto& [m, c] : f.terms()) {
      Monomial out;
      QTScalar coeff = c;
      bool zero = false;
      for (int i = 0; i < dim && !zero; ++i) {
        if (m[i] == 0) continue;
        const auto& img = images[static_cast<std::size_t>(i)];
        if (img.is_zero()) {
          zero = true;
          break;
        }
        const auto& [im, ic] = img.leading_term();
        for (int k = 0; k < m[i]; ++k) out = out * im;
        if (!ic.is_one()) coeff *= ic.pow(m[i]);
      }
      if (!zero) accumulate(acc, out, coeff);
    }
    return MultiPoly::from_terms(target, sorted_terms(std::move(acc)));
  }

  std::vector<PowerCache> caches;
  caches.reserve(images.size());
  for (const auto& img : images) caches.emplace_back(img);
  for (const auto& [m, c] : f.terms()) {
    MultiPoly prod = MultiPoly::constant(target, c);
    for (int i = 0; i < dim && !prod.is_zero(); ++i)
      if (m[i] > 0) prod = prod * caches[static_cast<std::size_t>(i)].get(m[i]);
    for (const auto& [pm, pc] : prod.terms()) accumulate(acc, pm, pc);
  }
  return MultiPoly::from_terms(target, sorted_terms(std::move(acc)));
}

QTScalar evaluate(const MultiPoly& f, std::span<const QTScalar> point) {
  const int dim = f.space().dim();
  if (static_cast<int>(point.size()) != dim) {
    throw Error(ErrorKind::kInvalidArgument, "point has the wrong dimension");
  }
  std::vector<std::vector<QTScalar>> powers(static_cast<std::size_t>(dim), {QTScalar(1)});
  auto power = [&](int i, int k) -> const QTScalar& {
    auto& p = powers[static_cast<std::size_t>(i)];
    while (static_cast<int>(p.size()) <= k) p.push_back(p.back() * point[static_cast<std::size_t>(i)]);
    return p[static_cast<std::size_t>(k)];
  };
  QTScalar sum;
  for (const auto& [m, c] : f.terms()) {
    QTScalar v = c;
    for (int i = 0; i < dim; ++i)
      if (m[i] > 0) v *= power(i, m[i]);
    sum += v;
  }
  return sum;
}

Rational evaluate_numeric(const MultiPoly& f, const Rational& q0, const Rational& t0,
                          std::span<const Rational> point) {
  const int dim = f.space().dim();
  if (static_cast<int>(point.size()) != dim) {
    throw Error(ErrorKind::kInvalidArgument, "point has the wrong dimension");
  }
  Rational sum = 0;
  for (const auto& [m, c] : f.terms()) {
    Rational v = c.eval(q0, t0);
    for (int i = 0; i < dim; ++i) {
      for (int k = 0; k < m[i]; ++k) v *= point[static_cast<std::size_t>(i)];
    }
    sum += v;
  }
  sum.canonicalize();
  return sum;
}

MultiPoly shift_variable(const MultiPoly& f, int var, const QTScalar& factor) {
  if (var < 0 || var >= f.space().dim()) {
    throw Error(ErrorKind::kInvalidArgument, "variable index out of range");
  }
  std::vector<QTScalar> powers{QTScalar(1)};
  std::vector<MultiPoly::Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) {
    while (static_cast<int>(powers.size()) <= m[var]) powers.push_back(powers.back() * factor);
    terms.emplace_back(m, c * powers[static_cast<std::size_t>(m[var])]);
  }
  return MultiPoly::from_terms(f.space(), std::move(terms));
}

bool is_symmetric(const MultiPoly& f, std::span<const int> block) {
  for (std::size_t k = 0; k + 1 < block.size(); ++k)
    if (!(f.swap_variables(block[k], block[k + 1]) == f)) return false;
  return true;
}

std::pair<MultiPoly, QTPolynomial> clear_denominators(const MultiPoly& f) {
  QTPolynomial l(1);
  for (const auto& [m, c] : f.terms()) {
    if (c.den().is_one()) continue;
    const QTPolynomial g = gcd(l, c.den());
    l *= *divide_exact(c.den(), g);
  }
  std::vector<MultiPoly::Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) {
    terms.emplace_back(m, QTScalar(c.num() * *divide_exact(l, c.den())));
  }
  return {MultiPoly::from_terms(f.space(), std::move(terms)), std::move(l)};
}

MultiPoly binomial(VarSpace space, int i, int j, const QTScalar& c) {
  return MultiPoly::variable(space, i) - MultiPoly::variable(space, j) * c;
}

}  // namespace macrui
