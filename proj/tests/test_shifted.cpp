#include <doctest.h>

#include "macrui/linalg.hpp"
#include "macrui/macdonald.hpp"
#include "macrui/shifted.hpp"

using namespace macrui;

namespace {

const QTScalar Q = QTScalar::q();
const QTScalar T = QTScalar::t();

MultiPoly var(VarSpace s, int i) { return MultiPoly::variable(s, i); }
MultiPoly cst(VarSpace s, const QTScalar& c) { return MultiPoly::constant(s, c); }

// P*_lambda(q^lambda) = H(lambda) fixes P* as this multiple of the monic one.
QTScalar normalization(const Partition& lam) {
  const long e = lam.conjugate().n_statistic() - lam.n_statistic();
  return QTScalar::qt_power(-e, e);
}

}  // namespace

TEST_CASE("shifted Macdonald examples") {
  CHECK(shifted_P_vanishing({}, 3) == cst(VarSpace::z(3), 1));
  CHECK(shifted_P_vanishing({1}, 3) == shifted_power_sum(1, 3));
  CHECK(eval_at_partition(shifted_P_vanishing({2}, 2), {2}, EvalBase::kQ) == T * (Q * Q - 1) * (Q - 1));
  CHECK_THROWS_AS(shifted_P_vanishing({1, 1}, 1), Error);

  const auto S1 = VarSpace::z(1);
  const auto S2 = VarSpace::z(2);
  CHECK(shifted_P_branching({1}, 1) == var(S1, 0) - cst(S1, 1));
  CHECK(shifted_P_branching({1}, 2) == var(S2, 0) - cst(S2, 1) + (var(S2, 1) - cst(S2, 1)) * T);
  CHECK(shifted_P_branching({}, 2) == cst(S2, 1));
  CHECK(shifted_P_combinatorial({1}, 2) == var(S2, 0) - cst(S2, 1) + (var(S2, 1) - cst(S2, 1)) * T);
  CHECK(shifted_P_combinatorial({1, 1}, 1).is_zero());
}

TEST_CASE("vanishing, branching and tableau constructions agree") {
  for (int N = 1; N <= 4; ++N) {
    for (const auto& lam : partitions_up_to(4, PartitionFilter::max_length(N))) {
      const auto P = shifted_P_vanishing(lam, N);
      CHECK(shifted_P_branching(lam, N) == P);
      CHECK(shifted_P_combinatorial(lam, N) == P);
      CHECK(is_shifted_symmetric(P));
    }
  }
}

TEST_CASE("top-degree part of P* is P in the variables z_i t^{i-1}") {
  for (int N = 1; N <= 4; ++N) {
    const auto S = VarSpace::z(N);
    std::vector<MultiPoly> scaled;
    for (int i = 0; i < N; ++i) scaled.push_back(var(S, i) * T.pow(i));
    for (const auto& lam : partitions_up_to(4, PartitionFilter::max_length(N))) {
      const auto expected = substitute_into(macdonald_P(lam, N), S, scaled) * normalization(lam);
      CHECK(shifted_P_combinatorial(lam, N).top_degree_part() == expected);
    }
  }
}

TEST_CASE("tableau routes vanish past the number of variables") {
  CHECK(shifted_P_branching({1, 1}, 1).is_zero());
  CHECK(shifted_P_branching({2, 1, 1}, 2).is_zero());
}

TEST_CASE("normalization and extra vanishing") {
  const int N = 5;
  for (const auto& lam : partitions_up_to(3)) {
    const auto P = shifted_P_vanishing(lam, N);
    CHECK(eval_at_partition(P, lam, EvalBase::kQ) == hook_H(lam));
    for (const auto& mu : partitions_up_to(lam.weight() + 2, PartitionFilter::max_length(N))) {
      if (mu.contains(lam)) continue;
      CHECK(eval_at_partition(P, mu, EvalBase::kQ).is_zero());
    }
  }
}

TEST_CASE("evaluation at partitions") {
  const auto p1 = shifted_power_sum(1, 3);
  CHECK(eval_at_partition(p1, {}, EvalBase::kQ).is_zero());
  CHECK(eval_at_partition(p1, {1}, EvalBase::kQ) == Q - 1);
  CHECK(eval_at_partition(p1, {2, 1}, EvalBase::kQ) == (Q * Q - 1) + (Q - 1) * T);
  CHECK(eval_at_partition(p1, {1}, EvalBase::kT) == T - 1);
  CHECK_THROWS_AS(eval_at_partition(p1, {1, 1, 1, 1}, EvalBase::kQ), Error);
}

TEST_CASE("duality") {
  CHECK(duality_check({1}, {1}, 3));
  CHECK(duality_check({1}, {}, 3));
  CHECK(duality_check({2}, {2, 1}, 3));
  for (const auto& lam : partitions_up_to(3))
    for (const auto& mu : partitions_up_to(3)) CHECK(duality_check(lam, mu, 3));
}

TEST_CASE("F points") {
  CHECK(eval_F({1}, 1, 1) == EvalPoint{Q, T});
  CHECK(eval_F({}, 1, 1) == EvalPoint{QTScalar(1), T});
  CHECK(eval_F({2, 1}, 1, 2) == EvalPoint{Q * Q, T * T, T});
  CHECK_THROWS_AS(eval_F({2, 2}, 1, 1), Error);
}

TEST_CASE("shifted super examples") {
  const auto S = VarSpace::xy(1, 1);
  const auto P1 = shifted_super_P({1}, 1, 1);
  CHECK(P1 == var(S, 0) - cst(S, 1) + (var(S, 1) - cst(S, T)) * ((1 - Q) / (1 - T)));
  CHECK(evaluate(P1, eval_F({1}, 1, 1)) == Q - 1);
  CHECK(evaluate(shifted_super_P({2}, 1, 1), eval_F({1}, 1, 1)).is_zero());
}

TEST_CASE("kernel of phi-natural") {
  for (int d = 0; d <= 4; ++d) {
    std::vector<MultiPoly> images;
    for (const auto& lam : partitions_up_to(d)) {
      if (lam.weight() != d && d > 0) continue;
      const auto P = shifted_super_P(lam, 1, 1);
      CHECK(P.is_zero() == !in_fat_hook(lam, 1, 1));
      if (!P.is_zero()) images.push_back(P);
    }
  }
  // Independence of all nonzero images up to weight 4 at once, since the
  // shifted polynomials are not homogeneous.
  std::vector<MultiPoly> images;
  for (const auto& lam : partitions_up_to(4, PartitionFilter::fat_hook(1, 1)))
    images.push_back(shifted_super_P(lam, 1, 1));
  std::map<Monomial, std::size_t, GrlexGreater> columns;
  for (const auto& P : images)
    for (const auto& [mono, c] : P.terms()) columns.try_emplace(mono, columns.size());
  Matrix<QTScalar> A(images.size(), std::vector<QTScalar>(columns.size()));
  for (std::size_t r = 0; r < images.size(); ++r)
    for (const auto& [mono, c] : images[r].terms()) A[r][columns.at(mono)] = c;
  CHECK(matrix_rank(A) == images.size());
}

TEST_CASE("shifted super vanishing at F points") {
  for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}}) {
    const auto hook = PartitionFilter::fat_hook(n, m);
    for (const auto& lam : partitions_up_to(3, hook)) {
      const auto P = shifted_super_P(lam, n, m);
      CHECK(evaluate(P, eval_F(lam, n, m)) == hook_H(lam));
      for (const auto& mu : partitions_up_to(lam.weight() + 1, hook)) {
        if (mu.contains(lam)) continue;
        CHECK(evaluate(P, eval_F(mu, n, m)).is_zero());
      }
    }
  }
}

TEST_CASE("shifted super block symmetry and quasi-invariance") {
  for (auto [n, m] : {std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
    const auto S = VarSpace::xy(n, m);
    for (const auto& lam : partitions_up_to(3, PartitionFilter::fat_hook(n, m))) {
      const auto P = shifted_super_P(lam, n, m);
      // x_i -> x_i t^{1-i}, y_j -> y_j q^{1-j} makes both blocks symmetric.
      std::vector<MultiPoly> images;
      for (int i = 1; i <= n; ++i) images.push_back(var(S, S.x(i)) * T.pow(1 - i));
      for (int j = 1; j <= m; ++j) images.push_back(var(S, S.y(j)) * Q.pow(1 - j));
      const auto R = substitute_into(P, S, images);
      CHECK(is_symmetric(R, S.x_block()));
      CHECK(is_symmetric(R, S.y_block()));
      // T_{q,x_i} P = T_{t,y_j} P on x_i t^{i-1} = y_j q^{j-1}.
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= m; ++j) {
          const auto diff = shift_variable(P, S.x(i), Q) - shift_variable(P, S.y(j), T);
          std::map<int, MultiPoly> on_plane{{S.x(i), var(S, S.y(j)) * (Q.pow(j - 1) * T.pow(1 - i))}};
          CHECK(substitute(diff, on_plane).is_zero());
        }
      }
    }
  }
}

TEST_CASE("shifted super bitableau examples") {
  const auto X = VarSpace::xy(1, 0);
  CHECK(shifted_super_P_combinatorial({1}, 1, 0) == var(X, 0) - cst(X, 1));
  const auto Y = VarSpace::xy(0, 1);
  CHECK(shifted_super_P_combinatorial({1}, 0, 1) == (var(Y, 0) - cst(Y, 1)) * ((1 - Q) / (1 - T)));
  CHECK(shifted_super_P_combinatorial({1}, 0, 1) == shifted_super_P({1}, 0, 1));
  CHECK_THROWS_AS(shifted_super_P_combinatorial({2, 2}, 1, 1), Error);
}

TEST_CASE("shifted super bitableau formula equals the phi-natural route") {
  for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}}) {
    for (const auto& lam : partitions_up_to(4, PartitionFilter::fat_hook(n, m))) {
      CHECK(shifted_super_P_combinatorial(lam, n, m) == shifted_super_P(lam, n, m));
    }
  }
}

TEST_CASE("top degree of the shifted super formula is the rescaled super polynomial") {
  for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}}) {
    const auto S = VarSpace::xy(n, m);
    std::vector<MultiPoly> images;
    for (int i = 1; i <= n; ++i) images.push_back(var(S, S.x(i)) * T.pow(i - 1));
    for (int j = 1; j <= m; ++j) images.push_back(var(S, S.y(j)) * Q.pow(j - 1));
    for (const auto& lam : partitions_up_to(4, PartitionFilter::fat_hook(n, m))) {
      const auto top = shifted_super_P_combinatorial(lam, n, m).top_degree_part();
      CHECK(top == substitute_into(super_P_combinatorial(lam, n, m), S, images) * normalization(lam));
    }
  }
}
