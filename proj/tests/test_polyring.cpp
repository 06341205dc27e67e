#include <doctest.h>

#include "generators.hpp"
#include "macrui/polyring.hpp"

using namespace macrui;
using macrui::testing::uniform;

namespace {

const QTScalar Q = QTScalar::q();
const QTScalar T = QTScalar::t();

MultiPoly random_poly(VarSpace space, int max_terms = 4, int max_deg = 3) {
  std::vector<MultiPoly::Term> terms;
  const long n = uniform(1, max_terms);
  for (long k = 0; k < n; ++k) {
    Monomial m;
    for (int i = 0; i < space.dim(); ++i) m.set(i, static_cast<int>(uniform(0, max_deg)));
    QTScalar c = uniform(0, 2) == 0 ? testing::random_scalar()
                                    : QTScalar(testing::random_qt_polynomial(2, 1));
    terms.emplace_back(m, c);
  }
  return MultiPoly::from_terms(space, std::move(terms));
}

MultiPoly random_nonzero_poly(VarSpace space, int max_terms = 3, int max_deg = 2) {
  while (true) {
    auto p = random_poly(space, max_terms, max_deg);
    if (!p.is_zero()) return p;
  }
}

}  // namespace

TEST_CASE("arithmetic examples") {
  const auto S = VarSpace::z(2);
  const auto x1 = MultiPoly::variable(S, 0);
  const auto x2 = MultiPoly::variable(S, 1);
  CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
  CHECK(poly_arith(x1, MultiPoly(S), PolyOp::kAdd) == x1);

  // (x1 - t x2)(x2 - t x1) = -t x1^2 + (1 + t^2) x1 x2 - t x2^2.
  const auto prod = poly_arith(x1 - T * x2, x2 - T * x1, PolyOp::kMul);
  const auto expected = (-T) * x1.pow(2) + (1 + T * T) * (x1 * x2) + (-T) * x2.pow(2);
  CHECK(prod == expected);
  CHECK(prod.size() == 3);
  CHECK(prod.to_string() == "-t*z1^2 + (1 + t^2)*z1*z2 - t*z2^2");

  CHECK_THROWS_AS(x1 + MultiPoly::variable(VarSpace::z(3), 0), Error);
  CHECK_THROWS_AS(MultiPoly::variable(VarSpace::xy(1, 1), 0) * MultiPoly::variable(VarSpace::z(2), 0),
                  Error);
}

TEST_CASE("exact division examples") {
  const auto S = VarSpace::xy(2, 0);
  const auto x1 = MultiPoly::variable(S, 0);
  const auto x2 = MultiPoly::variable(S, 1);
  CHECK(exact_divide(x1 * x1 - x2 * x2, x1 - x2) == x1 + x2);
  const auto f = x1 * x2 + Q * x1;
  CHECK(exact_divide(f, MultiPoly::constant(S, 1)) == f);
  CHECK(exact_divide(f, x1) == x2 + MultiPoly::constant(S, Q));
  try {
    exact_divide(x1 * x1 + x2, x1 - x2);
    FAIL("expected a non-divisibility error");
  } catch (const NonDivisibleError& e) {
    CHECK(e.kind() == ErrorKind::kNonDivisible);
    CHECK_FALSE(e.remainder().is_zero());
  }
  CHECK_THROWS_AS(exact_divide(x1 + MultiPoly::constant(S, 1), x2), NonDivisibleError);
  CHECK_THROWS_AS(exact_divide(x1, MultiPoly(S)), Error);
}

TEST_CASE("substitution examples") {
  const auto S = VarSpace::xy(2, 1);
  const auto x1 = MultiPoly::variable(S, S.x(1));
  const auto x2 = MultiPoly::variable(S, S.x(2));
  const auto y1 = MultiPoly::variable(S, S.y(1));
  CHECK(substitute(x1 * x2, {{S.x(2), MultiPoly::constant(S, Q * Q)}}) == (Q * Q) * x1);
  CHECK(substitute(x1 - y1, {{S.y(1), x1}}).is_zero());

  // p*_1 = sum (z_i - 1) t^{i-1} at (q, 1, 1) is q - 1.
  const auto Z = VarSpace::z(3);
  MultiPoly pstar1(Z);
  for (int i = 0; i < 3; ++i)
    pstar1 += (MultiPoly::variable(Z, i) - MultiPoly::constant(Z, 1)) * T.pow(i);
  const auto v = substitute(pstar1, {{0, MultiPoly::constant(Z, Q)},
                                     {1, MultiPoly::constant(Z, 1)},
                                     {2, MultiPoly::constant(Z, 1)}});
  CHECK(v == MultiPoly::constant(Z, Q - 1));
  const std::vector<QTScalar> point{Q, 1, 1};
  CHECK(evaluate(pstar1, point) == Q - 1);
}

TEST_CASE("shift examples") {
  const auto S = VarSpace::xy(2, 1);
  const auto x1 = MultiPoly::variable(S, S.x(1));
  const auto x2 = MultiPoly::variable(S, S.x(2));
  const auto y1 = MultiPoly::variable(S, S.y(1));
  CHECK(shift_variable(x1 * x1 * x2, S.x(1), Q) == (Q * Q) * (x1 * x1 * x2));
  const auto c = MultiPoly::constant(S, Q + 3);
  CHECK(shift_variable(c, S.y(1), T) == c);
  CHECK(shift_variable(shift_variable(x1 * y1, S.y(1), T), S.x(1), Q) == (Q * T) * (x1 * y1));
}

TEST_CASE("symmetry examples") {
  const auto S = VarSpace::xy(2, 1);
  const auto x1 = MultiPoly::variable(S, S.x(1));
  const auto x2 = MultiPoly::variable(S, S.x(2));
  const auto y1 = MultiPoly::variable(S, S.y(1));
  CHECK(is_symmetric(x1 + x2, S.x_block()));
  CHECK_FALSE(is_symmetric(x1 - x2, S.x_block()));
  const auto f = x1 * y1 + x2 * y1;
  CHECK(is_symmetric(f, S.x_block()));
  CHECK(is_symmetric(f, S.y_block()));
  CHECK_FALSE(is_symmetric(f, S.all()));
}

TEST_CASE("division round trip") {
  for (int trial = 0; trial < 60; ++trial) {
    const auto S = trial % 2 ? VarSpace::z(3) : VarSpace::xy(2, 2);
    const auto f = random_poly(S);
    const auto g = random_nonzero_poly(S);
    CHECK(exact_divide(f * g, g) == f);
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  const auto S = VarSpace::z(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_poly(S, 3, 2);
    const auto g = random_poly(S, 3, 2);
    std::map<int, MultiPoly> bindings{{0, random_poly(S, 2, 1)},
                                      {2, MultiPoly::constant(S, testing::random_scalar())}};
    CHECK(substitute(f * g, bindings) == substitute(f, bindings) * substitute(g, bindings));
    CHECK(substitute(f + g, bindings) == substitute(f, bindings) + substitute(g, bindings));
    CHECK(substitute(f, {}) == f);
  }
}

TEST_CASE("substitution into another space") {
  const auto Z = VarSpace::z(2);
  const auto XY = VarSpace::xy(1, 1);
  const auto f = MultiPoly::variable(Z, 0) * MultiPoly::variable(Z, 1) + MultiPoly::constant(Z, T);
  const std::vector<MultiPoly> images{MultiPoly::variable(XY, 0) + MultiPoly::variable(XY, 1),
                                      MultiPoly::variable(XY, 1)};
  const auto x = MultiPoly::variable(XY, 0);
  const auto y = MultiPoly::variable(XY, 1);
  CHECK(substitute_into(f, XY, images) == x * y + y * y + MultiPoly::constant(XY, T));
}

TEST_CASE("shift by t then 1/t is the identity") {
  const auto S = VarSpace::xy(2, 1);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_poly(S);
    const int v = static_cast<int>(uniform(0, 2));
    CHECK(shift_variable(shift_variable(f, v, T), v, T.inverse()) == f);
  }
}

TEST_CASE("sigma f - f is divisible by x_i - x_{i+1}") {
  const auto S = VarSpace::z(4);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_poly(S);
    const int i = static_cast<int>(uniform(0, 2));
    const auto diff = f.swap_variables(i, i + 1) - f;
    const auto g = binomial(S, i, i + 1);
    CHECK(exact_divide(diff, g) * g == diff);
  }
}

TEST_CASE("clear_denominators gives polynomial coefficients") {
  const auto S = VarSpace::z(2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_poly(S);
    const auto [F, d] = clear_denominators(f);
    for (const auto& [m, c] : F.terms()) CHECK(c.is_polynomial());
    CHECK(F * QTScalar(d).inverse() == f);
  }
}

TEST_CASE("numeric evaluation agrees with symbolic evaluation") {
  const auto S = VarSpace::z(2);
  const Rational q0(3, 5);
  const Rational t0(-2, 7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_poly(S);
    const std::vector<Rational> point{Rational(1, 2), Rational(-3)};
    const std::vector<QTScalar> spoint{QTScalar(point[0]), QTScalar(point[1])};
    try {
      CHECK(evaluate_numeric(f, q0, t0, point) == evaluate(f, spoint).eval(q0, t0));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kPole);
    }
  }
}

TEST_CASE("monomial exponent limits") {
  Monomial m;
  CHECK_THROWS_AS(m.set(0, 256), Error);
  CHECK_THROWS_AS(m.set(kMaxVars, 1), Error);
  m.set(0, 200);
  CHECK_THROWS_AS(m * m, Error);
}
