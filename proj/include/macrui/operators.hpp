#pragma once

// Difference operators: the Macdonald-Ruijsenaars operator in finitely many
// variables, its deformed two-block version, Hecke generators and the
// Cherednik-Dunkl operators.

#include <span>
#include <vector>

#include "macrui/partition.hpp"
#include "macrui/polyring.hpp"

namespace macrui {

/// Result of a difference operator together with the denominators that were
/// cleared and divided out exactly.
struct OperatorResult {
  MultiPoly value;
  std::vector<MultiPoly> divisibility_witnesses;
};

/// (1/(1-q)) sum_i prod_{j != i} (z_i - t z_j)/(z_i - z_j) (T_{q,z_i} - 1) f,
/// acting on all variables of f's space.
MultiPoly apply_MR(const MultiPoly& f);
/// The same operator acting only on the listed variables.
MultiPoly apply_MR(const MultiPoly& f, std::span<const int> block);

/// Deformed operator on XY(n, m); throws NonDivisibleError when f is outside
/// the deformed ring.
MultiPoly apply_deformed_MR(const MultiPoly& f);
OperatorResult apply_deformed_MR_detailed(const MultiPoly& f);

/// (1/(1-q)) sum_i (q^{lambda_i} - 1) t^{i-1}.
QTScalar mr_eigenvalue(const Partition& lambda);

/// Checks sum A_i + (1-q)/(1-t) sum B_j = (t^n q^m - 1)/(t - 1) and
/// sum C_l = (t^N - 1)/(t - 1) for N = n + m, with all denominators cleared.
bool coefficient_sum_identity(int n, int m);

/// T_i = 1 + (x_i - t x_{i+1})/(x_i - x_{i+1}) (s_i - 1), 1 <= i <= N-1.
MultiPoly apply_hecke_T(const MultiPoly& f, int i);
/// T_i^{-1} = t^{-1} T_i - (1 - t)/t.
MultiPoly apply_hecke_T_inv(const MultiPoly& f, int i);

/// (omega f)(z_1..z_N) = f(q z_N, z_1, ..., z_{N-1}).
MultiPoly apply_omega(const MultiPoly& f);

/// D_i = T_i ... T_{N-1} omega T_1^{-1} ... T_{i-1}^{-1}, 1 <= i <= N. With
/// this normalization sum_i t^{i-1} (D_i - 1) restricts to (1-q) times the MR
/// operator on symmetric polynomials.
MultiPoly apply_cherednik_dunkl(const MultiPoly& f, int i);

/// g(D_1, ..., D_N) f for shifted-symmetric g and symmetric f. Throws
/// kNotSymmetric when the result is not symmetric.
MultiPoly operator_from_shifted_symmetric(const MultiPoly& g, const MultiPoly& f);

}  // namespace macrui
