#pragma once

// Dense recursive representation of Z[x][y] used by the bivariate gcd.
// UPoly is a univariate integer polynomial indexed by exponent with no
// trailing zeros (empty means zero). BPoly is a polynomial in the main
// variable whose coefficients are UPolys.

#include <optional>
#include <vector>

#include "macrui/scalar.hpp"

namespace macrui::detail {

using UPoly = std::vector<Integer>;
using BPoly = std::vector<UPoly>;

int degree(const UPoly& a);
void trim(UPoly& a);
Integer content(const UPoly& a);
UPoly mul(const UPoly& a, const UPoly& b);
/// a -= b * c * x^shift
void sub_mul_shifted(UPoly& a, const UPoly& b, const UPoly& c, std::size_t shift);
std::optional<UPoly> divide_exact(const UPoly& a, const UPoly& b);
/// Primitive part with positive leading coefficient.
UPoly primitive_part(const UPoly& a);
UPoly gcd(const UPoly& a, const UPoly& b);

int degree(const BPoly& a);
void trim(BPoly& a);
UPoly content(const BPoly& a);
BPoly primitive_part(const BPoly& a);
BPoly gcd(const BPoly& a, const BPoly& b);

/// main_is_t selects which of q, t becomes the outer variable.
BPoly to_dense(const QTPolynomial& p, bool main_is_t);
QTPolynomial from_dense(const BPoly& p, bool main_is_t);

}  // namespace macrui::detail
