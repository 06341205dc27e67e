#include <doctest.h>

#include "macrui/linalg.hpp"
#include "macrui/macdonald.hpp"
#include "macrui/operators.hpp"

using namespace macrui;

namespace {

const QTScalar Q = QTScalar::q();
const QTScalar T = QTScalar::t();

MultiPoly var(VarSpace s, int i) { return MultiPoly::variable(s, i); }

// f(z_1..z_k) placed on the listed variables of a larger space.
MultiPoly embed(const MultiPoly& f, VarSpace target, const std::vector<int>& slots) {
  std::vector<MultiPoly> images;
  for (int v : slots) images.push_back(var(target, v));
  return substitute_into(f, target, images);
}

std::vector<int> range(int from, int count) {
  std::vector<int> out;
  for (int k = 0; k < count; ++k) out.push_back(from + k);
  return out;
}

}  // namespace

TEST_CASE("Macdonald polynomial examples") {
  CHECK(macdonald_P({1, 1, 1}, 3) == monomial_sym({1, 1, 1}, 3));
  CHECK(macdonald_P({1}, 3) == monomial_sym({1}, 3));
  CHECK(macdonald_P({2}, 2) == monomial_sym({2}, 2) + monomial_sym({1, 1}, 2) * ((1 + Q) * (T - 1) / (T - Q)));
  CHECK(macdonald_P({}, 2) == MultiPoly::constant(VarSpace::z(2), 1));
  CHECK_THROWS_AS(macdonald_P({1, 1}, 1), Error);
}

TEST_CASE("Macdonald polynomials are MR eigenfunctions") {
  for (int N = 1; N <= 4; ++N) {
    for (const auto& lam : partitions_up_to(5, PartitionFilter::max_length(N))) {
      const auto P = macdonald_P(lam, N);
      CHECK(apply_MR(P) == P * mr_eigenvalue(lam));
      const auto e = to_m_expansion(P);
      CHECK(e.coeff(lam) == QTScalar(1));
      for (const auto& [mu, c] : e.coeffs) CHECK(dominance_leq(mu, lam));
    }
  }
}

TEST_CASE("branching coefficient examples") {
  auto b1 = branching_coefficients({1}, 2);
  CHECK(b1.at(Partition{}) == QTScalar(1));
  CHECK(b1.at(Partition{1}) == QTScalar(1));
  CHECK(branching_coefficient({1, 1}, {1}) == QTScalar(1));
  CHECK(branching_coefficient({2}, {1}) == (1 + Q) * (T - 1) / (T - Q));
  CHECK(branching_coefficient({2}, {2, 1}).is_zero());
  CHECK(branching_coefficient({2, 2}, {}).is_zero());
  CHECK_THROWS_AS(branching_coefficients({1, 1}, 1), Error);
}

TEST_CASE("branching reassembles P from P in one fewer variable") {
  for (int N = 2; N <= 4; ++N) {
    const auto S = VarSpace::z(N);
    for (const auto& lam : partitions_up_to(5, PartitionFilter::max_length(N))) {
      MultiPoly sum(S);
      for (const auto& [mu, psi] : branching_coefficients(lam, N)) {
        if (mu.length() > N - 1) continue;
        const auto rest = embed(macdonald_P(mu, N - 1), S, range(1, N - 1));
        sum += var(S, 0).pow(static_cast<unsigned>(lam.weight() - mu.weight())) * rest * psi;
      }
      CHECK(sum == macdonald_P(lam, N));
    }
  }
}

TEST_CASE("branching coefficients match the product formula") {
  for (const auto& lam : partitions_up_to(6)) {
    for (const auto& mu : subpartitions(lam)) {
      CHECK(branching_coefficient(lam, mu) == psi_product_formula(lam, mu));
    }
  }
}

TEST_CASE("tableau examples") {
  const auto S2 = VarSpace::z(2);
  CHECK(macdonald_P_combinatorial({1}, 2) == var(S2, 0) + var(S2, 1));
  CHECK(macdonald_P_combinatorial({2}, 2) == macdonald_P({2}, 2));
  CHECK(macdonald_P_combinatorial({1, 1}, 1).is_zero());
  CHECK(skew_P_combinatorial({2, 1}, {2, 1}, 2) == MultiPoly::constant(S2, 1));
  const auto S1 = VarSpace::z(1);
  CHECK(skew_P_combinatorial({1}, {}, 1) == var(S1, 0));
  CHECK(skew_P_combinatorial({2}, {1}, 1) == var(S1, 0) * branching_coefficient({2}, {1}));
  CHECK_THROWS_AS(skew_P_combinatorial({1}, {2}, 1), Error);
}

TEST_CASE("reverse tableaux are well formed and their weights sum to P") {
  for (int N = 1; N <= 3; ++N) {
    const auto S = VarSpace::z(N);
    for (const auto& lam : partitions_up_to(4, PartitionFilter::max_length(N))) {
      MultiPoly sum(S);
      for (const auto& T0 : reverse_tableaux(lam, {}, N)) {
        Monomial m;
        for (int i = 0; i < lam.length(); ++i) {
          for (int j = 0; j < lam.part(i + 1); ++j) {
            const int e = T0.rows[i][j];
            REQUIRE(e >= 1);
            REQUIRE(e <= N);
            if (j > 0) CHECK(e <= T0.rows[i][j - 1]);
            if (i > 0) CHECK(e < T0.rows[i - 1][j]);
            m.set(e - 1, m[e - 1] + 1);
          }
        }
        sum += MultiPoly::monomial(S, m, tableau_weight(T0));
      }
      CHECK(sum == macdonald_P(lam, N));
    }
  }
}

TEST_CASE("combinatorial formula equals the eigen-solve") {
  for (int N = 1; N <= 5; ++N) {
    for (const auto& lam : partitions_up_to(5, PartitionFilter::max_length(N))) {
      CHECK(macdonald_P_combinatorial(lam, N) == macdonald_P(lam, N));
    }
  }
}

TEST_CASE("skew decomposition over two blocks of variables") {
  const auto S = VarSpace::z(4);
  for (const auto& lam : partitions_up_to(4)) {
    MultiPoly sum(S);
    for (const auto& mu : subpartitions(lam)) {
      if (mu.length() > 2) continue;
      sum += embed(skew_P_combinatorial(lam, mu, 2), S, {0, 1}) * embed(macdonald_P(mu, 2), S, {2, 3});
    }
    CHECK(sum == macdonald_P(lam, 4));
  }
}

TEST_CASE("sigma duality holds with a positive sign") {
  for (const auto& lam : partitions_up_to(5)) {
    CHECK(sigma_duality_sign(lam) == 1);
  }
}

TEST_CASE("super Macdonald examples") {
  const auto S = VarSpace::xy(1, 1);
  CHECK(super_P({1}, 1, 1) == var(S, 0) + var(S, 1) * ((1 - Q) / (1 - T)));
  CHECK(super_P({2, 2}, 1, 1).is_zero());
  const auto P11 = super_P({1, 1}, 1, 1);
  Monomial xy;
  xy.set(0, 1);
  xy.set(1, 1);
  CHECK(P11.leading_term().first == xy);
  CHECK(P11.leading_term().second == (1 - Q) / (1 - T));
}

TEST_CASE("super Macdonald leading monomial") {
  for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}}) {
    for (const auto& lam : partitions_up_to(5, PartitionFilter::fat_hook(n, m))) {
      const auto P = super_P(lam, n, m);
      REQUIRE_FALSE(P.is_zero());
      Monomial lead;
      for (int i = 1; i <= n; ++i) lead.set(i - 1, lam.part(i));
      const auto conj = lam.conjugate();
      for (int j = 1; j <= m; ++j) lead.set(n + j - 1, std::max(conj.part(j) - n, 0));
      // Lexicographic leader: the largest exponent vector among all terms.
      Monomial best = P.terms().front().first;
      for (const auto& [mono, c] : P.terms()) {
        std::array<int, 16> a{}, b{};
        for (int k = 0; k < n + m; ++k) {
          a[k] = mono[k];
          b[k] = best[k];
        }
        if (a > b) best = mono;
      }
      CHECK(best == lead);
    }
  }
}

TEST_CASE("kernel of phi is spanned by P outside the fat hook") {
  for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}}) {
    for (int d = 1; d <= 5; ++d) {
      std::vector<MultiPoly> images;
      for (const auto& lam : enumerate_partitions(d)) {
        const auto P = super_P(lam, n, m);
        CHECK(P.is_zero() == !in_fat_hook(lam, n, m));
        if (!P.is_zero()) images.push_back(P);
      }
      // Independence: rank of the coefficient matrix equals the count.
      std::map<Monomial, std::size_t, GrlexGreater> columns;
      for (const auto& P : images)
        for (const auto& [mono, c] : P.terms()) columns.try_emplace(mono, columns.size());
      Matrix<QTScalar> A(images.size(), std::vector<QTScalar>(columns.size()));
      for (std::size_t r = 0; r < images.size(); ++r)
        for (const auto& [mono, c] : images[r].terms()) A[r][columns.at(mono)] = c;
      CHECK(matrix_rank(A) == images.size());
    }
  }
}

TEST_CASE("super Macdonald polynomials are deformed MR eigenfunctions") {
  for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}}) {
    for (const auto& lam : partitions_up_to(4, PartitionFilter::fat_hook(n, m))) {
      const auto P = super_P(lam, n, m);
      CHECK(apply_deformed_MR(P) == P * mr_eigenvalue(lam));
    }
  }
}

TEST_CASE("bitableau formula examples") {
  const auto X = VarSpace::xy(1, 0);
  CHECK(super_P_combinatorial({1}, 1, 0) == var(X, 0));
  const auto Y = VarSpace::xy(0, 1);
  CHECK(super_P_combinatorial({1}, 0, 1) == var(Y, 0) * ((1 - Q) / (1 - T)));
  CHECK(super_P_combinatorial({1, 1}, 1, 1) == super_P({1, 1}, 1, 1));
  CHECK_THROWS_AS(super_P_combinatorial({2, 2}, 1, 1), Error);
}

TEST_CASE("bitableau formula equals the p-basis route") {
  for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}}) {
    for (const auto& lam : partitions_up_to(4, PartitionFilter::fat_hook(n, m))) {
      CHECK(super_P_combinatorial(lam, n, m) == super_P(lam, n, m));
    }
  }
}

TEST_CASE("shifted power sums of the Cherednik-Dunkl operators act diagonally on P") {
  for (int N = 1; N <= 3; ++N) {
    for (const auto& lam : partitions_up_to(3, PartitionFilter::max_length(N))) {
      const auto P = macdonald_P(lam, N);
      std::vector<QTScalar> point;
      for (int i = 1; i <= N; ++i) point.push_back(Q.pow(lam.part(i)));
      for (int r = 1; r <= 2; ++r) {
        const auto g = shifted_power_sum(r, N);
        CHECK(operator_from_shifted_symmetric(g, P) == P * evaluate(g, point));
      }
    }
  }
}
