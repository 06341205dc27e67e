#pragma once

// Macdonald polynomials P_lambda(x; q, t) in the normalization where they are
// eigenfunctions of the MR operator with eigenvalue mr_eigenvalue(lambda)
// (Macdonald's book with t replaced by 1/t), their branching coefficients,
// tableau formulas, and super Macdonald polynomials.

#include <map>
#include <vector>

#include "macrui/partition.hpp"
#include "macrui/polyring.hpp"
#include "macrui/symfun.hpp"

namespace macrui {

/// Stable m-expansion of P_lambda (valid in any number of variables).
const SymExpansion& macdonald_expansion(const Partition& lambda);

/// P_lambda(z_1..z_N). Throws kInvalidArgument when l(lambda) > N.
MultiPoly macdonald_P(const Partition& lambda, int N);

/// psi_{lambda/mu} for every mu with lambda/mu a horizontal strip, extracted
/// from P_lambda(z_1, z_2, ...) = sum psi z_1^{|lambda/mu|} P_mu(z_2, ...).
/// The coefficients do not depend on N; N only has to admit lambda.
std::map<Partition, QTScalar> branching_coefficients(const Partition& lambda, int N);
QTScalar branching_coefficient(const Partition& lambda, const Partition& mu);

/// Product formula for psi_{lambda/mu}; zero unless lambda/mu is a horizontal strip.
QTScalar psi_product_formula(const Partition& lambda, const Partition& mu);

/// A filling with entries decreasing strictly down columns and weakly along rows.
struct ReverseTableau {
  Partition shape;
  Partition inner;
  std::vector<std::vector<int>> rows;  // rows[i][j] is the entry of box (i+1, j+1); 0 inside inner
};

/// All reverse tableaux of shape lambda/mu with entries in 1..N.
std::vector<ReverseTableau> reverse_tableaux(const Partition& lambda, const Partition& mu, int N);

/// Product of branching coefficients along the chain of shapes of a tableau.
QTScalar tableau_weight(const ReverseTableau& T);

/// Sum over reverse tableaux of psi_T prod x_{T(s)}.
MultiPoly macdonald_P_combinatorial(const Partition& lambda, int N);
MultiPoly skew_P_combinatorial(const Partition& lambda, const Partition& mu, int N);

/// Sign eps with sigma(P_lambda(q,t)) = eps H(lambda,q,t)/H(lambda',t,q) P_lambda'(t,q),
/// measured on p-expansions. Throws kInternal when the ratio is not +-1.
int sigma_duality_sign(const Partition& lambda);

/// phi(P_lambda) in XY(n, m).
MultiPoly super_P(const Partition& lambda, int n, int m);

/// Bitableau formula: sum over mu of H(mu,q,t)/H(mu',t,q) P_{lambda/mu}(x; q,t)
/// P_{mu'}(y; t,q), i.e. the primed part read through its transpose. Throws
/// kInvalidArgument outside the fat hook.
MultiPoly super_P_combinatorial(const Partition& lambda, int n, int m);

}  // namespace macrui
