#include "macrui/operators.hpp"

#include <algorithm>
#include <utility>

#include "macrui/symfun.hpp"

namespace macrui {

namespace {

// One summand of a (deformed) MR operator over the common denominator:
// prefactor * kernel * (T_{factor, var} f - f).
struct Summand {
  int var;
  QTScalar shift;
  QTScalar prefactor;
  MultiPoly kernel;
};

struct Expansion {
  std::vector<Summand> summands;
  std::vector<MultiPoly> denominator;  // factors of the common denominator
};

// Builds the summands for the operator with A-type variables xs (shift by q,
// weight t) and B-type variables ys (shift by t, weight q). Every coefficient
// A_i or B_j times the full denominator is a polynomial kernel.
Expansion build_expansion(VarSpace space, std::span<const int> xs, std::span<const int> ys) {
  const QTScalar q = QTScalar::q();
  const QTScalar t = QTScalar::t();
  struct Pair {
    int a;
    int b;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t k = i + 1; k < xs.size(); ++k) pairs.push_back({xs[i], xs[k]});
  for (std::size_t j = 0; j < ys.size(); ++j)
    for (std::size_t l = j + 1; l < ys.size(); ++l) pairs.push_back({ys[j], ys[l]});
  for (int x : xs)
    for (int y : ys) pairs.push_back({x, y});

  Expansion out;
  for (const auto& p : pairs) out.denominator.push_back(binomial(space, p.a, p.b));

  auto rest_of_denominator = [&](int v) {
    MultiPoly prod = MultiPoly::constant(space, 1);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (pairs[k].a != v && pairs[k].b != v) prod = prod * out.denominator[k];
    return prod;
  };

  const bool both = !xs.empty() && !ys.empty();
  // With both blocks present the prefactors 1/(1-q), 1/(1-t) are brought to
  // the common factor 1/((1-q)(1-t)) applied at the end.
  const QTScalar a_pref = both ? 1 - t : QTScalar(1);
  const QTScalar b_pref = both ? 1 - q : QTScalar(1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    MultiPoly k = rest_of_denominator(xs[i]);
    for (std::size_t s = 0; s < xs.size(); ++s)
      if (s != i) k = k * binomial(space, xs[i], xs[s], t);
    for (int y : ys) k = k * binomial(space, xs[i], y, q);
    const QTScalar sign = i % 2 ? QTScalar(-1) : QTScalar(1);
    out.summands.push_back({xs[i], q, a_pref * sign, std::move(k)});
  }
  for (std::size_t j = 0; j < ys.size(); ++j) {
    MultiPoly k = rest_of_denominator(ys[j]);
    for (int x : xs) k = k * binomial(space, ys[j], x, t);
    for (std::size_t l = 0; l < ys.size(); ++l)
      if (l != j) k = k * binomial(space, ys[j], ys[l], q);
    const QTScalar sign = (xs.size() + j) % 2 ? QTScalar(-1) : QTScalar(1);
    out.summands.push_back({ys[j], t, b_pref * sign, std::move(k)});
  }
  return out;
}

QTScalar overall_factor(bool has_x, bool has_y) {
  const QTScalar q = QTScalar::q();
  const QTScalar t = QTScalar::t();
  if (has_x && has_y) return ((1 - q) * (1 - t)).inverse();
  if (has_x) return (1 - q).inverse();
  return (1 - t).inverse();
}

OperatorResult apply_two_block(const MultiPoly& f, std::span<const int> xs, std::span<const int> ys) {
  const VarSpace space = f.space();
  OperatorResult result{MultiPoly(space), {}};
  if (f.is_zero() || (xs.empty() && ys.empty())) return result;
  const auto [F, d] = clear_denominators(f);
  Expansion ex = build_expansion(space, xs, ys);
  MultiPoly numerator(space);
  for (const auto& s : ex.summands) {
    const MultiPoly diff = shift_variable(F, s.var, s.shift) - F;
    if (diff.is_zero()) continue;
    numerator += (s.kernel * diff) * s.prefactor;
  }
  MultiPoly g = exact_divide_by_factors(numerator, ex.denominator);
  result.value = g * (overall_factor(!xs.empty(), !ys.empty()) / QTScalar(d));
  result.divisibility_witnesses = std::move(ex.denominator);
  return result;
}

}  // namespace

MultiPoly apply_MR(const MultiPoly& f) {
  const auto block = f.space().all();
  return apply_MR(f, block);
}

MultiPoly apply_MR(const MultiPoly& f, std::span<const int> block) {
  for (int v : block) {
    if (v < 0 || v >= f.space().dim()) {
      throw Error(ErrorKind::kInvalidArgument, "operator block outside the variable space");
    }
  }
  return apply_two_block(f, block, {}).value;
}

OperatorResult apply_deformed_MR_detailed(const MultiPoly& f) {
  if (!f.space().is_xy()) throw Error(ErrorKind::kInvalidArgument, "expected an x/y polynomial");
  const auto xs = f.space().x_block();
  const auto ys = f.space().y_block();
  return apply_two_block(f, xs, ys);
}

MultiPoly apply_deformed_MR(const MultiPoly& f) { return apply_deformed_MR_detailed(f).value; }

QTScalar mr_eigenvalue(const Partition& lambda) {
  const QTScalar q = QTScalar::q();
  const QTScalar t = QTScalar::t();
  QTScalar s;
  for (int i = 1; i <= lambda.length(); ++i) s += (q.pow(lambda.part(i)) - 1) * t.pow(i - 1);
  return s / (1 - q);
}

bool coefficient_sum_identity(int n, int m) {
  if (n < 0 || m < 0 || n + m < 1) throw Error(ErrorKind::kInvalidArgument, "need n + m >= 1");
  const QTScalar q = QTScalar::q();
  const QTScalar t = QTScalar::t();
  const auto space = VarSpace::xy(n, m);
  const auto xs = space.x_block();
  const auto ys = space.y_block();

  // Each summand kernel equals (coefficient) * (common denominator) up to the
  // prefactor, so the identity becomes polynomial after multiplying through.
  auto check = [&](std::span<const int> a, std::span<const int> b, const QTScalar& rhs) {
    Expansion ex = build_expansion(space, a, b);
    MultiPoly lhs(space);
    for (const auto& s : ex.summands) {
      const bool is_b = std::find(b.begin(), b.end(), s.var) != b.end();
      // Strip the common-prefactor normalization back to plain A_i, B_j.
      QTScalar w = s.prefactor;
      if (!a.empty() && !b.empty()) w /= is_b ? 1 - q : 1 - t;
      if (is_b) w *= (1 - q) / (1 - t);
      lhs += s.kernel * w;
    }
    MultiPoly den = MultiPoly::constant(space, 1);
    for (const auto& factor : ex.denominator) den = den * factor;
    return lhs == den * rhs;
  };
  const bool ab = check(xs, ys, (t.pow(n) * q.pow(m) - 1) / (t - 1));
  const auto all = space.all();
  const bool c = check(all, {}, (t.pow(n + m) - 1) / (t - 1));
  return ab && c;
}

MultiPoly apply_hecke_T(const MultiPoly& f, int i) {
  const int N = f.space().dim();
  if (i < 1 || i > N - 1) throw Error(ErrorKind::kInvalidArgument, "Hecke index out of range");
  const int a = i - 1;
  const int b = i;
  const MultiPoly diff = f.swap_variables(a, b) - f;
  if (diff.is_zero()) return f;
  const MultiPoly quotient = exact_divide(diff, binomial(f.space(), a, b));
  return f + binomial(f.space(), a, b, QTScalar::t()) * quotient;
}

MultiPoly apply_hecke_T_inv(const MultiPoly& f, int i) {
  const QTScalar t = QTScalar::t();
  return apply_hecke_T(f, i) * t.inverse() - f * ((1 - t) / t);
}

MultiPoly apply_omega(const MultiPoly& f) {
  const VarSpace space = f.space();
  const int N = space.dim();
  if (N == 0) return f;
  std::vector<MultiPoly> images;
  images.push_back(MultiPoly::variable(space, N - 1) * QTScalar::q());
  for (int k = 1; k < N; ++k) images.push_back(MultiPoly::variable(space, k - 1));
  return substitute_into(f, space, images);
}

MultiPoly apply_cherednik_dunkl(const MultiPoly& f, int i) {
  const int N = f.space().dim();
  if (i < 1 || i > N) throw Error(ErrorKind::kInvalidArgument, "Cherednik-Dunkl index out of range");
  MultiPoly g = f;
  for (int k = i - 1; k >= 1; --k) g = apply_hecke_T_inv(g, k);
  g = apply_omega(g);
  for (int k = N - 1; k >= i; --k) g = apply_hecke_T(g, k);
  return g;
}

MultiPoly operator_from_shifted_symmetric(const MultiPoly& g, const MultiPoly& f) {
  if (!(g.space() == f.space())) {
    throw Error(ErrorKind::kSpaceMismatch, "operator symbol and argument use different spaces");
  }
  const int N = f.space().dim();
  MultiPoly out(f.space());
  // Monomials of g are applied right to left; the D_i commute so the order
  // inside a monomial is immaterial.
  for (const auto& [m, c] : g.terms()) {
    MultiPoly h = f;
    for (int i = N; i >= 1; --i)
      for (int k = 0; k < m[i - 1]; ++k) h = apply_cherednik_dunkl(h, i);
    out += h * c;
  }
  if (!is_symmetric(out, out.space().all())) {
    throw Error(ErrorKind::kNotSymmetric, "operator image is not symmetric");
  }
  return out;
}

}  // namespace macrui
