#pragma once

// Symmetric and shifted-symmetric polynomials: the m, p and p* bases, basis
// changes, the automorphism sigma, and the homomorphisms into the deformed
// rings of x/y polynomials.

#include <map>
#include <string_view>
#include <vector>

#include "macrui/partition.hpp"
#include "macrui/polyring.hpp"

namespace macrui {

enum class Basis { kMonomial, kPower, kShiftedPower };

std::string_view to_string(Basis basis);

struct SymExpansion {
  Basis basis = Basis::kMonomial;
  int N = 0;
  std::map<Partition, QTScalar> coeffs;

  /// Adds c to the coefficient of lambda, dropping it if it becomes zero.
  void add(const Partition& lambda, const QTScalar& c);
  QTScalar coeff(const Partition& lambda) const;
  int degree() const;

  friend bool operator==(const SymExpansion&, const SymExpansion&) = default;
};

/// A point of evaluation, one coordinate per variable.
using EvalPoint = std::vector<QTScalar>;

MultiPoly monomial_sym(const Partition& lambda, int N);
MultiPoly power_sum(const Partition& lambda, int N);
/// p_r(z_1..z_N) for a single r.
MultiPoly power_sum(int r, int N);

/// Coefficients of f (symmetric in all variables of its space) in the m basis.
SymExpansion to_m_expansion(const MultiPoly& f);

/// Rewrites an m-expansion in products of power sums. Throws kSingularSystem
/// when e.N is smaller than the degree.
SymExpansion m_to_p(const SymExpansion& e);

/// Coefficient of m_nu in p_mu, as an integer (|mu| = |nu|).
Integer power_sum_m_coefficient(const Partition& mu, const Partition& nu);

/// Scales the coefficient of p_mu by prod (1 - q^{mu_k}) / (1 - t^{mu_k}).
SymExpansion sigma_auto(const SymExpansion& e);

/// (1 - q^r) / (1 - t^r).
QTScalar qt_ratio(int r);

/// sum_i x_i^r + (1 - q^r)/(1 - t^r) sum_j y_j^r in XY(n, m).
MultiPoly deformed_newton(int r, int n, int m);

/// Image of a p-expansion under p_r -> deformed_newton(r, n, m).
MultiPoly phi(const SymExpansion& e, int n, int m);

/// Block symmetry plus the quasi-invariance condition on the hyperplane x_1 = y_1.
bool membership_Lambda_nm(const MultiPoly& f);

/// sum_{i=1}^N (z_i^r - 1) t^{r(i-1)}.
MultiPoly shifted_power_sum(int r, int N);
MultiPoly shifted_power_product(const Partition& mu, int N);

/// True when f(z_1, z_2 t^{-1}, ..., z_N t^{1-N}) is symmetric.
bool is_shifted_symmetric(const MultiPoly& f);

/// Expansion of a shifted-symmetric polynomial in products of p*_r. Throws
/// kNotSymmetric for inputs that are not shifted-symmetric and
/// kSingularSystem when N is smaller than the degree.
SymExpansion to_pstar_expansion(const MultiPoly& f);

/// Image of a p*-expansion under the explicit shifted homomorphism to XY(n, m).
MultiPoly phi_natural(const SymExpansion& e, int n, int m);
/// Image of a single p*_r.
MultiPoly phi_natural_generator(int r, int n, int m);

/// The polynomial an expansion represents in Z(e.N).
MultiPoly to_polynomial(const SymExpansion& e);

}  // namespace macrui
