#include "macrui/shifted.hpp"

#include <mutex>

#include "macrui/linalg.hpp"
#include "macrui/macdonald.hpp"

namespace macrui {

namespace {

// p*_r at the point q^nu (trailing coordinates equal to 1 contribute nothing).
QTScalar pstar_at(int r, const Partition& nu) {
  const QTScalar q = QTScalar::q();
  const QTScalar t = QTScalar::t();
  QTScalar s;
  for (int i = 1; i <= nu.length(); ++i) s += (q.pow(static_cast<long>(r) * nu.part(i)) - 1) * t.pow(static_cast<long>(r) * (i - 1));
  return s;
}

struct VanishingSystem {
  std::vector<Partition> basis;  // p*_mu with |mu| <= d; also the evaluation points
  Matrix<QTScalar> matrix;       // matrix[point][unknown]
};

const VanishingSystem& vanishing_system(int d) {
  static std::mutex mutex;
  static std::map<int, VanishingSystem> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  VanishingSystem sys;
  sys.basis = partitions_up_to(d);
  for (const auto& nu : sys.basis) {
    std::vector<QTScalar> gens(static_cast<std::size_t>(d) + 1);
    for (int r = 1; r <= d; ++r) gens[static_cast<std::size_t>(r)] = pstar_at(r, nu);
    std::vector<QTScalar> row;
    for (const auto& mu : sys.basis) {
      QTScalar v(1);
      for (int p : mu.parts()) v *= gens[static_cast<std::size_t>(p)];
      row.push_back(std::move(v));
    }
    sys.matrix.push_back(std::move(row));
  }
  return cache.emplace(d, std::move(sys)).first->second;
}

MultiPoly var(VarSpace s, int i) { return MultiPoly::variable(s, i); }

// z - q^{a'(s)} t^{l'(s)} for the box s = (row, col).
MultiPoly box_factor(VarSpace space, int v, int row, int col) {
  return var(space, v) - MultiPoly::constant(space, QTScalar::qt_power(col - 1, row - 1));
}

void require_length(const Partition& lambda, int N) {
  if (lambda.length() > N) {
    throw Error(ErrorKind::kInvalidArgument,
                "partition " + lambda.to_string() + " needs at least " +
                    std::to_string(lambda.length()) + " variables");
  }
}

// Skew tableau sum with shifted box factors, written in Z(N). Entry k
// contributes (z_k - q^{a'} t^{l'}) t^{k-1}.
MultiPoly shifted_skew_sum(const Partition& lambda, const Partition& mu, int N) {
  const QTScalar t = QTScalar::t();
  const auto space = VarSpace::z(N);
  MultiPoly total(space);
  for (const auto& T : reverse_tableaux(lambda, mu, N)) {
    MultiPoly term = MultiPoly::constant(space, tableau_weight(T));
    for (int i = 1; i <= lambda.length(); ++i) {
      for (int j = mu.part(i) + 1; j <= lambda.part(i); ++j) {
        const int k = T.rows[i - 1][j - 1];
        term = term * box_factor(space, k - 1, i, j) * t.pow(k - 1);
      }
    }
    total += term;
  }
  return total;
}

// Tableau and branching sums are monic in P_lambda; the vanishing
// normalization P*(q^lambda) = H(lambda) differs by (t/q)^{n(lambda') - n(lambda)}.
QTScalar monic_to_H(const Partition& lambda) {
  const long e = lambda.conjugate().n_statistic() - lambda.n_statistic();
  return QTScalar::qt_power(-e, e);
}

MultiPoly monic_branching(const Partition& lambda, int N) {
  const auto space = VarSpace::z(N);
  if (lambda.length() > N) return MultiPoly(space);
  if (N == 0) return MultiPoly::constant(space, 1);
  std::vector<MultiPoly> tail;
  for (int k = 1; k < N; ++k) tail.push_back(var(space, k));
  MultiPoly total(space);
  for (const auto& [mu, psi] : branching_coefficients(lambda, N)) {
    if (psi.is_zero() || mu.length() > N - 1) continue;
    MultiPoly strip = MultiPoly::constant(space, psi * QTScalar::t().pow(mu.weight()));
    for (int i = 1; i <= lambda.length(); ++i)
      for (int j = mu.part(i) + 1; j <= lambda.part(i); ++j) strip = strip * box_factor(space, 0, i, j);
    total += strip * substitute_into(monic_branching(mu, N - 1), space, tail);
  }
  return total;
}

}  // namespace

const SymExpansion& shifted_expansion(const Partition& lambda) {
  static std::mutex mutex;
  static std::map<Partition, SymExpansion> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
  }
  const int d = lambda.weight();
  const VanishingSystem& sys = vanishing_system(d);
  std::vector<QTScalar> rhs;
  for (const auto& nu : sys.basis) rhs.push_back(nu == lambda ? hook_H(lambda) : QTScalar());
  const auto sol = solve_linear(sys.matrix, std::move(rhs));
  SymExpansion e{Basis::kShiftedPower, d, {}};
  for (std::size_t k = 0; k < sol.size(); ++k) e.add(sys.basis[k], sol[k]);
  std::lock_guard lock(mutex);
  return cache.try_emplace(lambda, std::move(e)).first->second;
}

MultiPoly shifted_P_vanishing(const Partition& lambda, int N) {
  require_length(lambda, N);
  SymExpansion e = shifted_expansion(lambda);
  e.N = N;
  return to_polynomial(e);
}

MultiPoly shifted_P_branching(const Partition& lambda, int N) {
  return monic_branching(lambda, N) * monic_to_H(lambda);
}

MultiPoly shifted_P_combinatorial(const Partition& lambda, int N) {
  return shifted_skew_sum(lambda, Partition{}, N) * monic_to_H(lambda);
}

QTScalar eval_at_partition(const MultiPoly& f, const Partition& mu, EvalBase base) {
  const int N = f.space().dim();
  require_length(mu, N);
  const QTScalar b = base == EvalBase::kQ ? QTScalar::q() : QTScalar::t();
  std::vector<QTScalar> point;
  for (int i = 1; i <= N; ++i) point.push_back(b.pow(mu.part(i)));
  return evaluate(f, point);
}

bool duality_check(const Partition& lambda, const Partition& mu, int N) {
  const Partition lc = lambda.conjugate();
  const Partition mc = mu.conjugate();
  const QTScalar lhs = eval_at_partition(shifted_P_vanishing(lambda, N), mu, EvalBase::kQ);
  const QTScalar ratio = QTScalar::fraction(hook_polynomial(lambda), hook_polynomial(lc).swap_qt());
  const MultiPoly dual = shifted_P_vanishing(lc, N).swap_qt();
  return lhs == ratio * eval_at_partition(dual, mc, EvalBase::kT);
}

EvalPoint eval_F(const Partition& lambda, int n, int m) {
  if (!in_fat_hook(lambda, n, m)) {
    throw Error(ErrorKind::kInvalidArgument, lambda.to_string() + " is outside the fat hook");
  }
  std::vector<int> rest;
  for (int i = n + 1; i <= lambda.length(); ++i) rest.push_back(lambda.part(i));
  const Partition nu = Partition(std::move(rest)).conjugate();
  EvalPoint point;
  for (int i = 1; i <= n; ++i) point.push_back(QTScalar::q().pow(lambda.part(i)));
  for (int j = 1; j <= m; ++j) point.push_back(QTScalar::t().pow(nu.part(j) + n));
  return point;
}

MultiPoly shifted_super_P(const Partition& lambda, int n, int m) {
  return phi_natural(shifted_expansion(lambda), n, m);
}

MultiPoly shifted_super_P_combinatorial(const Partition& lambda, int n, int m) {
  if (!in_fat_hook(lambda, n, m)) {
    throw Error(ErrorKind::kInvalidArgument, lambda.to_string() + " is outside the fat hook");
  }
  const auto space = VarSpace::xy(n, m);
  std::vector<MultiPoly> x_images;
  for (int i = 1; i <= n; ++i) x_images.push_back(var(space, space.x(i)));
  std::vector<MultiPoly> y_images;
  for (int j = 1; j <= m; ++j) y_images.push_back(var(space, space.y(j)));
  const QTScalar t = QTScalar::t();
  MultiPoly total(space);
  for (const auto& mu : subpartitions(lambda)) {
    if (mu.part(1) > m) continue;
    const MultiPoly x_part = shifted_skew_sum(lambda, mu, n);
    if (x_part.is_zero()) continue;
    // Primed boxes of mu, read through the transpose with q and t exchanged.
    // The box constants become q^{a'} t^{l'} of mu; rescaling y inserts the
    // t^n shift.
    const MultiPoly y_part = shifted_skew_sum(mu.conjugate(), Partition{}, m).swap_qt();
    if (y_part.is_zero()) continue;
    std::vector<MultiPoly> y_scaled;
    for (const auto& y : y_images) y_scaled.push_back(y * t.pow(-n));
    const MultiPoly y_poly = substitute_into(y_part, space, y_scaled) * t.pow(static_cast<long>(n) * mu.weight());
    const QTScalar h = QTScalar::fraction(hook_polynomial(mu), hook_polynomial(mu.conjugate()).swap_qt());
    total += substitute_into(x_part, space, x_images) * y_poly * h;
  }
  return total * monic_to_H(lambda);
}

}  // namespace macrui
