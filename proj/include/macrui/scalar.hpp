#pragma once

// Exact coefficient field Q(q,t).
//
// QTPolynomial is an element of Z[q,t] stored as a sparse list of terms sorted
// ascending by (q exponent, t exponent). QTScalar is a reduced fraction of two
// such polynomials: gcd(num, den) is a unit and the lexicographically leading
// term of the denominator (q compared before t) has a positive coefficient, so
// two scalars are equal iff their representations are equal.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "macrui/error.hpp"

namespace macrui {

using Integer = mpz_class;
using Rational = mpq_class;

struct QTTerm {
  std::uint32_t q_exp = 0;
  std::uint32_t t_exp = 0;
  Integer coeff;

  friend bool operator==(const QTTerm&, const QTTerm&) = default;
};

class QTPolynomial {
 public:
  QTPolynomial() = default;
  QTPolynomial(long c);  // NOLINT(google-explicit-constructor)
  QTPolynomial(const Integer& c);  // NOLINT(google-explicit-constructor)

  static QTPolynomial monomial(std::uint32_t q_exp, std::uint32_t t_exp,
                               const Integer& coeff = 1);
  static QTPolynomial q() { return monomial(1, 0); }
  static QTPolynomial t() { return monomial(0, 1); }
  /// Builds from arbitrary terms: merges duplicates, drops zeros, sorts.
  static QTPolynomial from_terms(std::vector<QTTerm> terms);

  std::span<const QTTerm> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Constant term value; only meaningful when is_constant().
  Integer constant_value() const;

  std::uint32_t degree_q() const;
  std::uint32_t degree_t() const;
  std::uint32_t min_q() const;
  std::uint32_t min_t() const;

  /// Leading term in lex order with q before t; undefined for zero.
  const QTTerm& leading_term() const { return terms_.back(); }

  /// Positive gcd of the integer coefficients (0 for the zero polynomial).
  Integer content() const;

  QTPolynomial operator-() const;
  QTPolynomial& operator+=(const QTPolynomial& rhs);
  QTPolynomial& operator-=(const QTPolynomial& rhs);
  QTPolynomial& operator*=(const QTPolynomial& rhs);
  friend QTPolynomial operator+(QTPolynomial a, const QTPolynomial& b) { return a += b; }
  friend QTPolynomial operator-(QTPolynomial a, const QTPolynomial& b) { return a -= b; }
  friend QTPolynomial operator*(const QTPolynomial& a, const QTPolynomial& b);
  friend bool operator==(const QTPolynomial&, const QTPolynomial&) = default;

  QTPolynomial pow(unsigned k) const;
  QTPolynomial scaled(const Integer& c) const;
  /// Divides every coefficient by c; c must divide each exactly.
  QTPolynomial divexact(const Integer& c) const;
  /// Multiplies by q^a t^b.
  QTPolynomial shifted(std::uint32_t q_exp, std::uint32_t t_exp) const;
  /// Divides by q^a t^b; every term must contain it.
  QTPolynomial unshifted(std::uint32_t q_exp, std::uint32_t t_exp) const;
  QTPolynomial swap_qt() const;

  Rational eval(const Rational& q0, const Rational& t0) const;

  std::size_t hash() const;
  std::string to_string() const;

 private:
  std::vector<QTTerm> terms_;
};

/// Returns a/b when b divides a exactly in Z[q,t], std::nullopt otherwise.
std::optional<QTPolynomial> divide_exact(const QTPolynomial& a,
                                         const QTPolynomial& b);

/// Greatest common divisor in Z[q,t]; positive content gcd and positive
/// leading coefficient. gcd(p, 0) is p normalized. Both zero is an error.
QTPolynomial gcd(const QTPolynomial& a, const QTPolynomial& b);

class QTScalar {
 public:
  QTScalar() : num_(0), den_(1) {}
  QTScalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QTScalar(const Integer& c) : num_(c), den_(1) {}  // NOLINT
  QTScalar(const Rational& c);  // NOLINT(google-explicit-constructor)
  QTScalar(QTPolynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT

  /// Builds and reduces num/den. Throws on a zero denominator.
  static QTScalar fraction(QTPolynomial num, QTPolynomial den);
  static QTScalar q() { return QTScalar(QTPolynomial::q()); }
  static QTScalar t() { return QTScalar(QTPolynomial::t()); }
  /// q^a t^b for any integers a, b.
  static QTScalar qt_power(long q_exp, long t_exp);

  const QTPolynomial& num() const { return num_; }
  const QTPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  QTScalar operator-() const;
  QTScalar& operator+=(const QTScalar& rhs);
  QTScalar& operator-=(const QTScalar& rhs);
  QTScalar& operator*=(const QTScalar& rhs);
  QTScalar& operator/=(const QTScalar& rhs);
  friend QTScalar operator+(QTScalar a, const QTScalar& b) { return a += b; }
  friend QTScalar operator-(QTScalar a, const QTScalar& b) { return a -= b; }
  friend QTScalar operator*(QTScalar a, const QTScalar& b) { return a *= b; }
  friend QTScalar operator/(QTScalar a, const QTScalar& b) { return a /= b; }
  friend bool operator==(const QTScalar&, const QTScalar&) = default;

  QTScalar inverse() const;
  QTScalar pow(long k) const;
  QTScalar swap_qt() const;

  /// Exact value at rational (q0, t0). Throws ErrorKind::kPole when the
  /// denominator vanishes there.
  Rational eval(const Rational& q0, const Rational& t0) const;

  std::size_t hash() const;
  std::string to_string() const;

 private:
  QTScalar(QTPolynomial num, QTPolynomial den, bool /*reduced*/)
      : num_(std::move(num)), den_(std::move(den)) {}
  void normalize_sign();

  QTPolynomial num_;
  QTPolynomial den_;
};

/// Applies one of the four field operations; used by the qt_arith surface.
enum class ArithOp { kAdd, kSub, kMul, kDiv };
QTScalar qt_arith(const QTScalar& a, const QTScalar& b, ArithOp op);

}  // namespace macrui

template <>
struct std::hash<macrui::QTScalar> {
  std::size_t operator()(const macrui::QTScalar& s) const { return s.hash(); }
};
