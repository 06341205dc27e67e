#include "macrui/scalar.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "qt_dense.hpp"

namespace macrui {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDivisionByZero: return "division_by_zero";
    case ErrorKind::kPole: return "pole";
    case ErrorKind::kNonDivisible: return "non_divisible";
    case ErrorKind::kSpaceMismatch: return "space_mismatch";
    case ErrorKind::kNotSymmetric: return "not_symmetric";
    case ErrorKind::kSingularSystem: return "singular_system";
    case ErrorKind::kInvalidArgument: return "invalid_argument";
    case ErrorKind::kInternal: return "internal";
  }
  return "unknown";
}

namespace {

std::uint64_t key(std::uint32_t q, std::uint32_t t) {
  return (static_cast<std::uint64_t>(q) << 32) | t;
}

std::uint64_t key(const QTTerm& term) { return key(term.q_exp, term.t_exp); }

}  // namespace

// ---------------------------------------------------------------------------
// QTPolynomial

QTPolynomial::QTPolynomial(long c) {
  if (c != 0) terms_.push_back({0, 0, Integer(c)});
}

QTPolynomial::QTPolynomial(const Integer& c) {
  if (c != 0) terms_.push_back({0, 0, c});
}

QTPolynomial QTPolynomial::monomial(std::uint32_t q_exp, std::uint32_t t_exp,
                                    const Integer& coeff) {
  QTPolynomial p;
  if (coeff != 0) p.terms_.push_back({q_exp, t_exp, coeff});
  return p;
}

QTPolynomial QTPolynomial::from_terms(std::vector<QTTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const QTTerm& a, const QTTerm& b) { return key(a) < key(b); });
  QTPolynomial p;
  p.terms_.reserve(terms.size());
  for (auto& term : terms) {
    if (!p.terms_.empty() && key(p.terms_.back()) == key(term)) {
      p.terms_.back().coeff += term.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (term.coeff != 0) {
      p.terms_.push_back(std::move(term));
    }
  }
  return p;
}

bool QTPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].q_exp == 0 &&
                            terms_[0].t_exp == 0);
}

bool QTPolynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].q_exp == 0 && terms_[0].t_exp == 0 &&
         terms_[0].coeff == 1;
}

Integer QTPolynomial::constant_value() const {
  if (terms_.empty() || terms_[0].q_exp != 0 || terms_[0].t_exp != 0) return 0;
  return terms_[0].coeff;
}

std::uint32_t QTPolynomial::degree_q() const {
  return terms_.empty() ? 0 : terms_.back().q_exp;
}

std::uint32_t QTPolynomial::degree_t() const {
  std::uint32_t d = 0;
  for (const auto& term : terms_) d = std::max(d, term.t_exp);
  return d;
}

std::uint32_t QTPolynomial::min_q() const {
  return terms_.empty() ? 0 : terms_.front().q_exp;
}

std::uint32_t QTPolynomial::min_t() const {
  if (terms_.empty()) return 0;
  std::uint32_t d = terms_.front().t_exp;
  for (const auto& term : terms_) d = std::min(d, term.t_exp);
  return d;
}

Integer QTPolynomial::content() const {
  Integer g = 0;
  for (const auto& term : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), term.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

QTPolynomial QTPolynomial::operator-() const {
  QTPolynomial r = *this;
  for (auto& term : r.terms_) term.coeff = -term.coeff;
  return r;
}

namespace {

template <bool kSubtract>
std::vector<QTTerm> merge(const std::vector<QTTerm>& a, const std::vector<QTTerm>& b) {
  std::vector<QTTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && key(a[i]) < key(b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || key(b[j]) < key(a[i])) {
      out.push_back(b[j++]);
      if constexpr (kSubtract) out.back().coeff = -out.back().coeff;
    } else {
      Integer c = kSubtract ? Integer(a[i].coeff - b[j].coeff)
                            : Integer(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].q_exp, a[i].t_exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

QTPolynomial& QTPolynomial::operator+=(const QTPolynomial& rhs) {
  if (rhs.terms_.empty()) return *this;
  if (terms_.empty()) return *this = rhs;
  terms_ = merge<false>(terms_, rhs.terms_);
  return *this;
}

QTPolynomial& QTPolynomial::operator-=(const QTPolynomial& rhs) {
  if (rhs.terms_.empty()) return *this;
  terms_ = merge<true>(terms_, rhs.terms_);
  return *this;
}

QTPolynomial operator*(const QTPolynomial& a, const QTPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) {
    const auto& m = b.terms_[0];
    QTPolynomial r = a;
    for (auto& term : r.terms_) {
      term.q_exp += m.q_exp;
      term.t_exp += m.t_exp;
      term.coeff *= m.coeff;
    }
    return r;
  }
  if (a.terms_.size() == 1) return b * a;
  std::vector<QTTerm> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      prods.push_back({x.q_exp + y.q_exp, x.t_exp + y.t_exp, x.coeff * y.coeff});
    }
  }
  return QTPolynomial::from_terms(std::move(prods));
}

QTPolynomial& QTPolynomial::operator*=(const QTPolynomial& rhs) {
  return *this = *this * rhs;
}

QTPolynomial QTPolynomial::pow(unsigned k) const {
  QTPolynomial result(1);
  QTPolynomial base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

QTPolynomial QTPolynomial::scaled(const Integer& c) const {
  if (c == 0) return {};
  QTPolynomial r = *this;
  for (auto& term : r.terms_) term.coeff *= c;
  return r;
}

QTPolynomial QTPolynomial::divexact(const Integer& c) const {
  QTPolynomial r = *this;
  for (auto& term : r.terms_) {
    mpz_divexact(term.coeff.get_mpz_t(), term.coeff.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

QTPolynomial QTPolynomial::shifted(std::uint32_t q_exp, std::uint32_t t_exp) const {
  QTPolynomial r = *this;
  for (auto& term : r.terms_) {
    term.q_exp += q_exp;
    term.t_exp += t_exp;
  }
  return r;
}

QTPolynomial QTPolynomial::unshifted(std::uint32_t q_exp, std::uint32_t t_exp) const {
  QTPolynomial r = *this;
  for (auto& term : r.terms_) {
    term.q_exp -= q_exp;
    term.t_exp -= t_exp;
  }
  return r;
}

QTPolynomial QTPolynomial::swap_qt() const {
  std::vector<QTTerm> terms = terms_;
  for (auto& term : terms) std::swap(term.q_exp, term.t_exp);
  return from_terms(std::move(terms));
}

Rational QTPolynomial::eval(const Rational& q0, const Rational& t0) const {
  Rational result = 0;
  std::vector<Rational> qpow{1};
  std::vector<Rational> tpow{1};
  for (const auto& term : terms_) {
    while (qpow.size() <= term.q_exp) qpow.push_back(qpow.back() * q0);
    while (tpow.size() <= term.t_exp) tpow.push_back(tpow.back() * t0);
    result += Rational(term.coeff) * qpow[term.q_exp] * tpow[term.t_exp];
  }
  result.canonicalize();
  return result;
}

std::size_t QTPolynomial::hash() const {
  std::size_t h = terms_.size();
  for (const auto& term : terms_) {
    const std::size_t c = mpz_get_ui(term.coeff.get_mpz_t()) ^
                          (static_cast<std::size_t>(mpz_sgn(term.coeff.get_mpz_t())) << 7);
    h ^= key(term) + c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string QTPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& term : terms_) {
    Integer c = term.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    }
    first = false;
    const bool has_var = term.q_exp > 0 || term.t_exp > 0;
    if (!has_var || c != 1) {
      os << c.get_str();
      if (has_var) os << "*";
    }
    if (term.q_exp > 0) {
      os << "q";
      if (term.q_exp > 1) os << "^" << term.q_exp;
      if (term.t_exp > 0) os << "*";
    }
    if (term.t_exp > 0) {
      os << "t";
      if (term.t_exp > 1) os << "^" << term.t_exp;
    }
  }
  return os.str();
}

std::optional<QTPolynomial> divide_exact(const QTPolynomial& a, const QTPolynomial& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return QTPolynomial{};
  if (b.is_one()) return a;
  if (b.size() == 1) {
    const auto& m = b.leading_term();
    std::vector<QTTerm> terms;
    terms.reserve(a.size());
    for (const auto& term : a.terms()) {
      if (term.q_exp < m.q_exp || term.t_exp < m.t_exp) return std::nullopt;
      if (!mpz_divisible_p(term.coeff.get_mpz_t(), m.coeff.get_mpz_t())) return std::nullopt;
      Integer c;
      mpz_divexact(c.get_mpz_t(), term.coeff.get_mpz_t(), m.coeff.get_mpz_t());
      terms.push_back({term.q_exp - m.q_exp, term.t_exp - m.t_exp, std::move(c)});
    }
    return QTPolynomial::from_terms(std::move(terms));
  }
  if (a.degree_q() < b.degree_q() || a.degree_t() < b.degree_t()) return std::nullopt;
  // Long division in lex order (q before t); the remainder is kept in a map
  // ordered by descending key so the leading term sits at begin().
  std::map<std::uint64_t, Integer, std::greater<>> rem;
  for (const auto& term : a.terms()) rem.emplace(key(term), term.coeff);
  const QTTerm& lb = b.leading_term();
  std::vector<QTTerm> quot;
  while (!rem.empty()) {
    auto it = rem.begin();
    const auto rq = static_cast<std::uint32_t>(it->first >> 32);
    const auto rt = static_cast<std::uint32_t>(it->first & 0xffffffffU);
    if (rq < lb.q_exp || rt < lb.t_exp) return std::nullopt;
    if (!mpz_divisible_p(it->second.get_mpz_t(), lb.coeff.get_mpz_t())) return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), it->second.get_mpz_t(), lb.coeff.get_mpz_t());
    const std::uint32_t dq = rq - lb.q_exp;
    const std::uint32_t dt = rt - lb.t_exp;
    for (const auto& term : b.terms()) {
      const std::uint64_t k = key(term.q_exp + dq, term.t_exp + dt);
      auto [pos, inserted] = rem.try_emplace(k, 0);
      mpz_submul(pos->second.get_mpz_t(), c.get_mpz_t(), term.coeff.get_mpz_t());
      if (pos->second == 0) rem.erase(pos);
    }
    quot.push_back({dq, dt, std::move(c)});
  }
  return QTPolynomial::from_terms(std::move(quot));
}

namespace {

QTPolynomial positive_leading(QTPolynomial p) {
  if (!p.is_zero() && p.leading_term().coeff < 0) return -p;
  return p;
}

}  // namespace

QTPolynomial gcd(const QTPolynomial& a, const QTPolynomial& b) {
  if (a.is_zero() && b.is_zero()) {
    throw Error(ErrorKind::kInvalidArgument, "gcd(0, 0) is undefined");
  }
  if (a.is_zero()) return positive_leading(b);
  if (b.is_zero()) return positive_leading(a);
  if (a.is_one() || b.is_one()) return QTPolynomial(1);
  if (a == b) return positive_leading(a);

  Integer c = a.content();
  const Integer cb = b.content();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
  const std::uint32_t mq = std::min(a.min_q(), b.min_q());
  const std::uint32_t mt = std::min(a.min_t(), b.min_t());
  const QTPolynomial mono = QTPolynomial::monomial(mq, mt, c);
  if (a.size() == 1 || b.size() == 1) return mono;

  QTPolynomial pa = a.unshifted(a.min_q(), a.min_t()).divexact(a.content());
  QTPolynomial pb = b.unshifted(b.min_q(), b.min_t()).divexact(b.content());
  if (pa.is_constant() || pb.is_constant()) return mono;

  // Cheap divisibility shortcut before running the PRS.
  const bool a_smaller = pa.size() <= pb.size();
  const QTPolynomial& small = a_smaller ? pa : pb;
  const QTPolynomial& large = a_smaller ? pb : pa;
  if (divide_exact(large, small)) return positive_leading(small) * mono;

  // Main variable: the one in which the combined degree is smaller keeps the
  // PRS short.
  const bool main_is_t =
      pa.degree_t() + pb.degree_t() <= pa.degree_q() + pb.degree_q();
  auto g = detail::gcd(detail::to_dense(pa, main_is_t), detail::to_dense(pb, main_is_t));
  return positive_leading(detail::from_dense(g, main_is_t)) * mono;
}

// ---------------------------------------------------------------------------
// QTScalar

QTScalar::QTScalar(const Rational& c) {
  Rational r = c;
  r.canonicalize();
  num_ = QTPolynomial(r.get_num());
  den_ = QTPolynomial(r.get_den());
}

void QTScalar::normalize_sign() {
  if (den_.leading_term().coeff < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

QTScalar QTScalar::fraction(QTPolynomial num, QTPolynomial den) {
  if (den.is_zero()) throw Error(ErrorKind::kDivisionByZero, "zero denominator");
  if (num.is_zero()) return QTScalar();
  if (!den.is_one()) {
    const QTPolynomial g = gcd(num, den);
    if (!g.is_one()) {
      num = *divide_exact(num, g);
      den = *divide_exact(den, g);
    }
  }
  QTScalar s(std::move(num), std::move(den), true);
  s.normalize_sign();
  return s;
}

QTScalar QTScalar::qt_power(long q_exp, long t_exp) {
  const auto aq = static_cast<std::uint32_t>(q_exp < 0 ? -q_exp : q_exp);
  const auto at = static_cast<std::uint32_t>(t_exp < 0 ? -t_exp : t_exp);
  QTPolynomial num = QTPolynomial::monomial(q_exp > 0 ? aq : 0, t_exp > 0 ? at : 0);
  QTPolynomial den = QTPolynomial::monomial(q_exp < 0 ? aq : 0, t_exp < 0 ? at : 0);
  return QTScalar(std::move(num), std::move(den), true);
}

QTScalar QTScalar::operator-() const { return QTScalar(-num_, den_, true); }

QTScalar& QTScalar::operator+=(const QTScalar& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    QTPolynomial num = num_ + rhs.num_;
    if (den_.is_one()) {
      num_ = std::move(num);
      return *this;
    }
    return *this = fraction(std::move(num), den_);
  }
  // Henrici: with g = gcd(b, d), gcd(a d/g + c b/g, b d/g) divides g.
  const QTPolynomial g = gcd(den_, rhs.den_);
  if (g.is_one()) {
    QTPolynomial num = num_ * rhs.den_ + rhs.num_ * den_;
    if (num.is_zero()) return *this = QTScalar();
    *this = QTScalar(std::move(num), den_ * rhs.den_, true);
    normalize_sign();
    return *this;
  }
  const QTPolynomial bd = *divide_exact(den_, g);
  const QTPolynomial dd = *divide_exact(rhs.den_, g);
  QTPolynomial num = num_ * dd + rhs.num_ * bd;
  if (num.is_zero()) return *this = QTScalar();
  const QTPolynomial g2 = gcd(num, g);
  if (!g2.is_one()) num = *divide_exact(num, g2);
  QTPolynomial den = bd * dd * (g2.is_one() ? g : *divide_exact(g, g2));
  *this = QTScalar(std::move(num), std::move(den), true);
  normalize_sign();
  return *this;
}

QTScalar& QTScalar::operator-=(const QTScalar& rhs) { return *this += -rhs; }

QTScalar& QTScalar::operator*=(const QTScalar& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = QTScalar();
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ *= rhs.num_;
    return *this;
  }
  QTPolynomial a = num_;
  QTPolynomial b = den_;
  QTPolynomial c = rhs.num_;
  QTPolynomial d = rhs.den_;
  if (!d.is_one()) {
    const QTPolynomial g1 = gcd(a, d);
    if (!g1.is_one()) {
      a = *divide_exact(a, g1);
      d = *divide_exact(d, g1);
    }
  }
  if (!b.is_one()) {
    const QTPolynomial g2 = gcd(c, b);
    if (!g2.is_one()) {
      c = *divide_exact(c, g2);
      b = *divide_exact(b, g2);
    }
  }
  *this = QTScalar(a * c, b * d, true);
  normalize_sign();
  return *this;
}

QTScalar QTScalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::kDivisionByZero, "inverse of zero scalar");
  QTScalar r(den_, num_, true);
  r.normalize_sign();
  return r;
}

QTScalar& QTScalar::operator/=(const QTScalar& rhs) { return *this *= rhs.inverse(); }

QTScalar QTScalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  return QTScalar(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)), true);
}

QTScalar QTScalar::swap_qt() const {
  QTScalar r(num_.swap_qt(), den_.swap_qt(), true);
  r.normalize_sign();
  return r;
}

Rational QTScalar::eval(const Rational& q0, const Rational& t0) const {
  const Rational d = den_.eval(q0, t0);
  if (d == 0) {
    throw Error(ErrorKind::kPole, "denominator " + den_.to_string() + " vanishes at q=" +
                                      q0.get_str() + ", t=" + t0.get_str());
  }
  Rational r = num_.eval(q0, t0) / d;
  r.canonicalize();
  return r;
}

std::size_t QTScalar::hash() const { return num_.hash() * 31 + den_.hash(); }

std::string QTScalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto wrap = [](const QTPolynomial& p) {
    return p.size() == 1 ? p.to_string() : "(" + p.to_string() + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

QTScalar qt_arith(const QTScalar& a, const QTScalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return a + b;
    case ArithOp::kSub: return a - b;
    case ArithOp::kMul: return a * b;
    case ArithOp::kDiv:
      if (b.is_zero()) throw Error(ErrorKind::kDivisionByZero, "division by zero scalar");
      return a / b;
  }
  return {};
}

}  // namespace macrui
