#include <doctest.h>

#include "generators.hpp"
#include "macrui/scalar.hpp"

using namespace macrui;
using macrui::testing::random_nonzero_qt_polynomial;
using macrui::testing::random_scalar;

namespace {

const QTPolynomial q = QTPolynomial::q();
const QTPolynomial t = QTPolynomial::t();
const QTScalar Q = QTScalar::q();
const QTScalar T = QTScalar::t();

}  // namespace

TEST_CASE("polynomial basics") {
  const QTPolynomial p = (q - 1) * (q + 1);
  CHECK(p == q * q - 1);
  CHECK(p.degree_q() == 2);
  CHECK(p.to_string() == "-1 + q^2");
  CHECK((q * t - t * q).is_zero());
  CHECK(QTPolynomial(0).is_zero());
  CHECK(((1 - q * t) * (1 + q * t)).to_string() == "1 - q^2*t^2");
}

TEST_CASE("exact division of bivariate polynomials") {
  auto d = divide_exact(1 - q.pow(2) * t.pow(2), 1 - q * t);
  REQUIRE(d);
  CHECK(*d == 1 + q * t);
  CHECK_FALSE(divide_exact(q * q + t, q - t));
  CHECK_FALSE(divide_exact(q + 1, QTPolynomial(2)));
  CHECK(*divide_exact(2 * q + 4, QTPolynomial(2)) == q + 2);
}

TEST_CASE("qt_gcd examples") {
  CHECK(gcd(q * q - 1, q - 1) == q - 1);
  // Normalized so the lex-leading term (-q t) becomes positive.
  const QTPolynomial g = gcd(1 - q * t, 1 - q.pow(2) * t.pow(2));
  CHECK(g == q * t - 1);
  CHECK(divide_exact(1 - q * t, g));
  CHECK(divide_exact(1 - q.pow(2) * t.pow(2), g));
  CHECK(gcd(1 - q, QTPolynomial(0)) == q - 1);
  CHECK(gcd(QTPolynomial(0), 2 * t + 4) == 2 * t + 4);
  CHECK(gcd(6 * q * t, 4 * q * q) == 2 * q);
  CHECK(gcd((q - t) * (q + 2 * t) * t, (q - t) * (q * t - 3)) == q - t);
  CHECK_THROWS_AS(gcd(QTPolynomial(0), QTPolynomial(0)), Error);
}

TEST_CASE("gcd exactly divides both inputs and cofactors are coprime") {
  for (int trial = 0; trial < 150; ++trial) {
    const auto a = random_nonzero_qt_polynomial(4, 3);
    const auto b = random_nonzero_qt_polynomial(4, 3);
    const auto common = random_nonzero_qt_polynomial(3, 2);
    const auto x = a * common;
    const auto y = b * common;
    const auto g = gcd(x, y);
    auto cx = divide_exact(x, g);
    auto cy = divide_exact(y, g);
    REQUIRE(cx);
    REQUIRE(cy);
    CHECK(divide_exact(g, gcd(common, common)));
    CHECK(gcd(*cx, *cy).is_one());
  }
}

TEST_CASE("qt_arith examples") {
  CHECK(qt_arith(QTScalar(q - 1), QTScalar(1 - q), ArithOp::kDiv) == QTScalar(-1));
  const QTScalar r = qt_arith(QTScalar(1 - q * q), QTScalar(1 - t * t), ArithOp::kDiv);
  CHECK(gcd(r.num(), r.den()).is_one());
  CHECK(r * QTScalar(1 - t * t) == QTScalar(1 - q * q));
  CHECK(QTScalar::fraction(q * q - 1, q - 1) == QTScalar(q + 1));
  CHECK_THROWS_AS(qt_arith(Q, QTScalar(0), ArithOp::kDiv), Error);
  CHECK_THROWS_AS(QTScalar::fraction(q, QTPolynomial(0)), Error);
}

TEST_CASE("normalization makes representation canonical") {
  const QTScalar a = QTScalar::fraction(1 - q, 1 - t);
  const QTScalar b = QTScalar::fraction(q - 1, t - 1);
  CHECK(a == b);
  CHECK(a.den().leading_term().coeff > 0);
  CHECK(QTScalar::fraction(QTPolynomial(0), q + 7) == QTScalar());
  CHECK(QTScalar::fraction(QTPolynomial(0), q + 7).den().is_one());
  CHECK(QTScalar(Rational(-3, 6)) == QTScalar::fraction(QTPolynomial(-1), QTPolynomial(2)));
  CHECK(QTScalar::qt_power(-2, 1) == T / (Q * Q));
}

TEST_CASE("qt_eval examples") {
  CHECK(QTScalar::fraction(1 - q, 1 - t).eval(Rational(1, 2), Rational(2)) == Rational(-1, 2));
  CHECK_THROWS_AS(QTScalar::fraction(QTPolynomial(1), t - q).eval(Rational(1, 3), Rational(1, 3)),
                  Error);
  CHECK(QTScalar(q + 1).eval(Rational(3), Rational(17, 5)) == Rational(4));
}

TEST_CASE("field axioms on random scalars") {
  for (int trial = 0; trial < 60; ++trial) {
    const QTScalar a = random_scalar();
    const QTScalar b = random_scalar();
    const QTScalar c = random_scalar();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == QTScalar());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == QTScalar(1));
      CHECK((b / a) * a == b);
    }
  }
}

TEST_CASE("normalize(x g, y g) == normalize(x, y)") {
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = testing::random_qt_polynomial(3, 2);
    const auto y = random_nonzero_qt_polynomial(3, 2);
    const auto g = random_nonzero_qt_polynomial(2, 2);
    CHECK(QTScalar::fraction(x * g, y * g) == QTScalar::fraction(x, y));
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  const Rational q0(2, 3);
  const Rational t0(-5, 7);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const QTScalar a = random_scalar();
    const QTScalar b = random_scalar();
    try {
      const Rational ea = a.eval(q0, t0);
      const Rational eb = b.eval(q0, t0);
      CHECK((a * b).eval(q0, t0) == ea * eb);
      CHECK((a + b).eval(q0, t0) == ea + eb);
      ++checked;
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kPole);
    }
  }
  CHECK(checked > 30);
}

TEST_CASE("swap_qt is an involutive automorphism") {
  for (int trial = 0; trial < 30; ++trial) {
    const QTScalar a = random_scalar();
    const QTScalar b = random_scalar();
    CHECK(a.swap_qt().swap_qt() == a);
    CHECK((a * b).swap_qt() == a.swap_qt() * b.swap_qt());
  }
  CHECK(QTScalar::fraction(1 - q, 1 - t).swap_qt() == QTScalar::fraction(1 - t, 1 - q));
}
