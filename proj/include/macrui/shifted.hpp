#pragma once

// Shifted (interpolation) Macdonald polynomials P*_lambda, evaluation at
// partition points, duality, and shifted super Macdonald polynomials.

#include "macrui/partition.hpp"
#include "macrui/polyring.hpp"
#include "macrui/symfun.hpp"

namespace macrui {

/// Stable p*-expansion of P*_lambda, solved from the vanishing conditions
/// P*(q^mu) = 0 for |mu| <= |lambda|, mu != lambda, and P*(q^lambda) = H(lambda).
const SymExpansion& shifted_expansion(const Partition& lambda);

/// P*_lambda(z_1..z_N) from the vanishing characterization. Throws
/// kInvalidArgument when l(lambda) > N.
MultiPoly shifted_P_vanishing(const Partition& lambda, int N);

/// P*_lambda built by peeling z_1: sum over strips of
/// psi t^{|mu|} prod_{s in lambda/mu} (z_1 - q^{a'(s)} t^{l'(s)}) P*_mu(z_2..z_N).
/// The recursion is monic in P_lambda; the result is rescaled by
/// (t/q)^{n(lambda') - n(lambda)} to match P*(q^lambda) = H(lambda). Zero when
/// l(lambda) > N.
MultiPoly shifted_P_branching(const Partition& lambda, int N);

/// Sum over reverse tableaux of psi_T prod_s (z_{T(s)} - q^{a'(s)} t^{l'(s)}) t^{T(s)-1},
/// with the same rescaling.
MultiPoly shifted_P_combinatorial(const Partition& lambda, int N);

enum class EvalBase { kQ, kT };

/// f(base^{mu_1}, ..., base^{mu_N}).
QTScalar eval_at_partition(const MultiPoly& f, const Partition& mu, EvalBase base);

/// P*_lambda(q^mu; q, t) == H(lambda,q,t)/H(lambda',t,q) P*_lambda'(t^mu'; t, q).
bool duality_check(const Partition& lambda, const Partition& mu, int N);

/// (q^{lambda_1}, ..., q^{lambda_n}, t^{nu'_1 + n}, ..., t^{nu'_m + n}) with
/// nu = (lambda_{n+1}, lambda_{n+2}, ...). Throws outside the fat hook.
EvalPoint eval_F(const Partition& lambda, int n, int m);

/// phi-natural image of P*_lambda in XY(n, m).
MultiPoly shifted_super_P(const Partition& lambda, int n, int m);

/// Bitableau formula; unprimed entries k carry (x_k - q^{a'} t^{l'}) t^{k-1},
/// primed entries j carry (y_j - t^n q^{a'} t^{l'}) q^{j-1}; rescaled like
/// shifted_P_combinatorial. Throws outside the fat hook.
MultiPoly shifted_super_P_combinatorial(const Partition& lambda, int n, int m);

}  // namespace macrui
