#pragma once

// Sparse multivariate polynomials over Q(q,t).
//
// Exponent vectors are packed into 16 bytes (at most 16 variables, exponents
// up to 255). Terms are stored sorted by descending graded lexicographic
// order, with variable 0 the most significant.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "macrui/scalar.hpp"

namespace macrui {

inline constexpr int kMaxVars = 16;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exps);

  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  void set(int i, int e);
  int degree() const;
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Graded lex: larger total degree first, then lex with variable 0 first.
  friend bool grlex_greater(const Monomial& a, const Monomial& b);

  Monomial swapped(int i, int j) const;
  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
};

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// The variable alphabet of a polynomial: z_1..z_N, or x_1..x_n then y_1..y_m.
class VarSpace {
 public:
  static VarSpace z(int N);
  static VarSpace xy(int n, int m);

  bool is_xy() const { return xy_; }
  int dim() const { return n_ + m_; }
  /// Z-space size, or the x-block size of an XY-space.
  int n() const { return n_; }
  int m() const { return m_; }
  /// 0-based storage index of x_i or z_i (i is 1-based).
  int x(int i) const { return i - 1; }
  int y(int j) const { return n_ + j - 1; }
  std::vector<int> x_block() const;
  std::vector<int> y_block() const;
  std::vector<int> all() const;
  std::string var_name(int index) const;

  friend bool operator==(const VarSpace&, const VarSpace&) = default;

 private:
  VarSpace(bool xy, int n, int m) : xy_(xy), n_(n), m_(m) {}
  bool xy_ = false;
  int n_ = 0;
  int m_ = 0;
};

class MultiPoly {
 public:
  using Term = std::pair<Monomial, QTScalar>;

  explicit MultiPoly(VarSpace space) : space_(space) {}
  static MultiPoly constant(VarSpace space, const QTScalar& c);
  static MultiPoly variable(VarSpace space, int index);
  static MultiPoly monomial(VarSpace space, const Monomial& m, const QTScalar& c = 1);
  /// Builds from arbitrary terms: combines duplicates and drops zeros.
  static MultiPoly from_terms(VarSpace space, std::vector<Term> terms);

  const VarSpace& space() const { return space_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int total_degree() const;
  const Term& leading_term() const { return terms_.front(); }
  QTScalar coeff(const Monomial& m) const;
  /// Degree in one variable.
  int degree_in(int index) const;

  MultiPoly homogeneous_component(int d) const;
  MultiPoly top_degree_part() const { return homogeneous_component(total_degree()); }
  MultiPoly swap_qt() const;
  /// Reorders variable i and j.
  MultiPoly swap_variables(int i, int j) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const QTScalar& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const QTScalar& c) { return a *= c; }
  friend MultiPoly operator*(const QTScalar& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly pow(unsigned k) const;

  std::string to_string() const;

 private:
  void check_space(const MultiPoly& other) const;

  VarSpace space_;
  std::vector<Term> terms_;
};

enum class PolyOp { kAdd, kSub, kMul };
MultiPoly poly_arith(const MultiPoly& f, const MultiPoly& g, PolyOp op);

/// Raised when an exact division leaves a remainder; carries the remainder.
class NonDivisibleError : public Error {
 public:
  NonDivisibleError(const std::string& what, MultiPoly remainder)
      : Error(ErrorKind::kNonDivisible, what), remainder_(std::move(remainder)) {}
  const MultiPoly& remainder() const { return remainder_; }

 private:
  MultiPoly remainder_;
};

/// h with f = g h. Throws NonDivisibleError (with the remainder of the
/// multivariate long division) when g does not divide f.
MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g);

/// Divides successively by each factor.
MultiPoly exact_divide_by_factors(const MultiPoly& f, std::span<const MultiPoly> factors);

/// Substitutes variable -> image; images live in the same space as f and
/// unbound variables are left unchanged.
MultiPoly substitute(const MultiPoly& f, const std::map<int, MultiPoly>& bindings);

/// Full substitution into another space: images[i] is the image of variable i.
MultiPoly substitute_into(const MultiPoly& f, const VarSpace& target,
                          std::span<const MultiPoly> images);

/// Substitutes every variable by a scalar.
QTScalar evaluate(const MultiPoly& f, std::span<const QTScalar> point);

/// Specializes q, t to rationals and evaluates at a rational point.
Rational evaluate_numeric(const MultiPoly& f, const Rational& q0, const Rational& t0,
                          std::span<const Rational> point);

/// v -> factor * v, i.e. coefficients of v^k terms scaled by factor^k.
MultiPoly shift_variable(const MultiPoly& f, int var, const QTScalar& factor);

/// Invariance under all adjacent transpositions of the given variables.
bool is_symmetric(const MultiPoly& f, std::span<const int> block);

/// Writes f = F / d with F having polynomial coefficients in Z[q,t].
std::pair<MultiPoly, QTPolynomial> clear_denominators(const MultiPoly& f);

/// x_i - c x_j as a polynomial in the given space.
MultiPoly binomial(VarSpace space, int i, int j, const QTScalar& c = 1);

}  // namespace macrui
