#include "macrui/macdonald.hpp"

#include <mutex>

#include "macrui/operators.hpp"

namespace macrui {

namespace {

template <typename K, typename V>
class Cache {
 public:
  template <typename F>
  const V& get(const K& key, F compute) {
    {
      std::lock_guard lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    V value = compute();
    std::lock_guard lock(mutex_);
    return map_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<K, V> map_;
};

// Row nu: m-expansion of M m_nu in |nu| variables.
const std::map<Partition, SymExpansion>& mr_matrix(int d) {
  static Cache<int, std::map<Partition, SymExpansion>> cache;
  return cache.get(d, [d] {
    std::map<Partition, SymExpansion> rows;
    for (const auto& nu : enumerate_partitions(d))
      rows.emplace(nu, to_m_expansion(apply_MR(monomial_sym(nu, d))));
    return rows;
  });
}

}  // namespace

const SymExpansion& macdonald_expansion(const Partition& lambda) {
  static Cache<Partition, SymExpansion> cache;
  return cache.get(lambda, [&] {
    const int d = lambda.weight();
    SymExpansion e{Basis::kMonomial, d, {}};
    e.add(lambda, 1);
    if (d == 0) return e;
    const auto& rows = mr_matrix(d);
    const QTScalar top = mr_eigenvalue(lambda);
    // Reverse lexicographic order extends dominance, so every nu that can
    // feed u_mu has already been solved.
    for (const auto& mu : enumerate_partitions(d)) {
      if (mu == lambda || !dominance_leq(mu, lambda)) continue;
      QTScalar rhs;
      for (const auto& [nu, u] : e.coeffs) {
        if (nu == mu) continue;
        rhs += u * rows.at(nu).coeff(mu);
      }
      e.add(mu, rhs / (top - mr_eigenvalue(mu)));
    }
    return e;
  });
}

MultiPoly macdonald_P(const Partition& lambda, int N) {
  if (lambda.length() > N) {
    throw Error(ErrorKind::kInvalidArgument,
                "partition " + lambda.to_string() + " needs at least " +
                    std::to_string(lambda.length()) + " variables");
  }
  const SymExpansion& e = macdonald_expansion(lambda);
  MultiPoly p(VarSpace::z(N));
  for (const auto& [mu, c] : e.coeffs)
    if (mu.length() <= N) p += monomial_sym(mu, N) * c;
  return p;
}

namespace {

std::vector<int> remove_part(std::span<const int> parts, int k) {
  std::vector<int> out(parts.begin(), parts.end());
  if (k == 0) return out;
  for (auto it = out.begin(); it != out.end(); ++it) {
    if (*it == k) {
      out.erase(it);
      break;
    }
  }
  return out;
}

const std::map<Partition, QTScalar>& branching_table(const Partition& lambda) {
  static Cache<Partition, std::map<Partition, QTScalar>> cache;
  return cache.get(lambda, [&] {
    // m_nu(z_1, z_2, ...) = sum over distinct values k in nu and 0 of
    // z_1^k m_{nu minus one k}(z_2, ...).
    std::map<int, SymExpansion> by_power;
    for (const auto& [nu, u] : macdonald_expansion(lambda).coeffs) {
      std::vector<int> values{0};
      for (int p : nu.parts())
        if (p != values.back()) values.push_back(p);
      for (int k : values) {
        auto [it, inserted] = by_power.try_emplace(k, SymExpansion{Basis::kMonomial, 0, {}});
        it->second.add(Partition(remove_part(nu.parts(), k)), u);
      }
    }
    std::map<Partition, QTScalar> psi;
    for (auto& [k, rest] : by_power) {
      // Peel P_mu from the top: the lexicographically largest surviving
      // partition carries exactly psi_{lambda/mu}.
      while (!rest.coeffs.empty()) {
        const auto [mu, c] = *rest.coeffs.rbegin();
        if (!lambda.interlaces(mu)) {
          throw Error(ErrorKind::kInternal, "branching produced " + mu.to_string() +
                                                " outside the strips of " + lambda.to_string());
        }
        psi.emplace(mu, c);
        for (const auto& [nu, v] : macdonald_expansion(mu).coeffs) rest.add(nu, -(c * v));
      }
    }
    return psi;
  });
}

}  // namespace

std::map<Partition, QTScalar> branching_coefficients(const Partition& lambda, int N) {
  if (lambda.length() > N) {
    throw Error(ErrorKind::kInvalidArgument, "partition longer than the number of variables");
  }
  std::map<Partition, QTScalar> out;
  const auto& table = branching_table(lambda);
  for (const auto& mu : horizontal_strips_below(lambda)) {
    auto it = table.find(mu);
    out.emplace(mu, it == table.end() ? QTScalar() : it->second);
  }
  return out;
}

QTScalar branching_coefficient(const Partition& lambda, const Partition& mu) {
  if (!lambda.interlaces(mu)) return QTScalar();
  const auto& table = branching_table(lambda);
  auto it = table.find(mu);
  return it == table.end() ? QTScalar() : it->second;
}

QTScalar psi_product_formula(const Partition& lambda, const Partition& mu) {
  if (!lambda.interlaces(mu)) return QTScalar();
  // Macdonald's product with his t written as tau = 1/t.
  const QTScalar q = QTScalar::q();
  const QTScalar tau = QTScalar::qt_power(0, -1);
  // (a; q)_k
  auto poch = [&](const QTScalar& a, int k) {
    QTScalar r(1);
    for (int s = 0; s < k; ++s) r *= 1 - a * q.pow(s);
    return r;
  };
  QTScalar psi(1);
  for (int i = 1; i <= mu.length(); ++i) {
    for (int j = i; j <= mu.length(); ++j) {
      const QTScalar u = tau.pow(j - i);
      const int a1 = mu.part(i) - mu.part(j);
      const int b1 = lambda.part(i) - mu.part(j);
      const int a2 = lambda.part(i) - lambda.part(j + 1);
      const int b2 = mu.part(i) - lambda.part(j + 1);
      // f(q^a u)/f(q^b u) = (tau q^a u; q)_{b-a} / (q^{a+1} u; q)_{b-a} for a <= b.
      psi *= poch(tau * q.pow(a1) * u, b1 - a1) / poch(q.pow(a1 + 1) * u, b1 - a1);
      psi *= poch(q.pow(b2 + 1) * u, a2 - b2) / poch(tau * q.pow(b2) * u, a2 - b2);
    }
  }
  return psi;
}

namespace {

// Skew tableau sum over entries k..N in variables z_k..z_N, memoized on the
// current outer shape.
class SkewSum {
 public:
  SkewSum(const Partition& inner, int N) : inner_(inner), N_(N), space_(VarSpace::z(N)) {}

  MultiPoly operator()(const Partition& outer, int k) {
    if (outer == inner_) return MultiPoly::constant(space_, 1);
    if (k > N_) return MultiPoly(space_);
    const auto key = std::make_pair(outer, k);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    MultiPoly total(space_);
    for (const auto& nu : horizontal_strips_below(outer)) {
      if (!nu.contains(inner_)) continue;
      const QTScalar psi = branching_coefficient(outer, nu);
      if (psi.is_zero()) continue;
      MultiPoly rest = (*this)(nu, k + 1);
      if (rest.is_zero()) continue;
      Monomial m;
      m.set(k - 1, outer.weight() - nu.weight());
      total += MultiPoly::monomial(space_, m, psi) * rest;
    }
    memo_.emplace(key, total);
    return total;
  }

 private:
  Partition inner_;
  int N_;
  VarSpace space_;
  std::map<std::pair<Partition, int>, MultiPoly> memo_;
};

}  // namespace

MultiPoly skew_P_combinatorial(const Partition& lambda, const Partition& mu, int N) {
  if (!lambda.contains(mu)) {
    throw Error(ErrorKind::kInvalidArgument, mu.to_string() + " is not inside " + lambda.to_string());
  }
  SkewSum sum(mu, N);
  return sum(lambda, 1);
}

MultiPoly macdonald_P_combinatorial(const Partition& lambda, int N) {
  return skew_P_combinatorial(lambda, Partition{}, N);
}

std::vector<ReverseTableau> reverse_tableaux(const Partition& lambda, const Partition& mu, int N) {
  if (!lambda.contains(mu)) {
    throw Error(ErrorKind::kInvalidArgument, mu.to_string() + " is not inside " + lambda.to_string());
  }
  std::vector<ReverseTableau> out;
  ReverseTableau current{lambda, mu, {}};
  for (int i = 1; i <= lambda.length(); ++i)
    current.rows.emplace_back(static_cast<std::size_t>(lambda.part(i)), 0);
  // Entry k fills the strip outer/nu; larger entries sit further inside.
  auto rec = [&](auto&& self, const Partition& outer, int k) -> void {
    if (outer == mu) {
      out.push_back(current);
      return;
    }
    if (k > N) return;
    for (const auto& nu : horizontal_strips_below(outer)) {
      if (!nu.contains(mu)) continue;
      for (int i = 1; i <= outer.length(); ++i)
        for (int j = nu.part(i) + 1; j <= outer.part(i); ++j) current.rows[i - 1][j - 1] = k;
      self(self, nu, k + 1);
    }
    for (int i = 1; i <= outer.length(); ++i)
      for (int j = mu.part(i) + 1; j <= outer.part(i); ++j) current.rows[i - 1][j - 1] = 0;
  };
  rec(rec, lambda, 1);
  return out;
}

QTScalar tableau_weight(const ReverseTableau& T) {
  QTScalar w(1);
  Partition outer = T.shape;
  int k = 1;
  while (!(outer == T.inner)) {
    std::vector<int> parts;
    for (int i = 1; i <= outer.length(); ++i) {
      int keep = 0;
      for (int j = 1; j <= outer.part(i); ++j)
        if (j <= T.inner.part(i) || T.rows[i - 1][j - 1] > k) keep = j;
      parts.push_back(keep);
    }
    Partition nu(std::move(parts));
    w *= branching_coefficient(outer, nu);
    outer = nu;
    ++k;
  }
  return w;
}

int sigma_duality_sign(const Partition& lambda) {
  const SymExpansion lhs = sigma_auto(m_to_p(macdonald_expansion(lambda)));
  const Partition conj = lambda.conjugate();
  SymExpansion rhs = m_to_p(macdonald_expansion(conj));
  const QTScalar ratio = QTScalar::fraction(hook_polynomial(lambda), hook_polynomial(conj).swap_qt());
  for (auto& [mu, c] : rhs.coeffs) c = c.swap_qt() * ratio;
  if (lhs.coeffs == rhs.coeffs) return 1;
  for (auto& [mu, c] : rhs.coeffs) c = -c;
  if (lhs.coeffs == rhs.coeffs) return -1;
  throw Error(ErrorKind::kInternal, "sigma image of P" + lambda.to_string() +
                                        " is not a signed multiple of the conjugate");
}

MultiPoly super_P(const Partition& lambda, int n, int m) {
  return phi(m_to_p(macdonald_expansion(lambda)), n, m);
}

MultiPoly super_P_combinatorial(const Partition& lambda, int n, int m) {
  if (!in_fat_hook(lambda, n, m)) {
    throw Error(ErrorKind::kInvalidArgument,
                lambda.to_string() + " is outside the fat (" + std::to_string(n) + "," +
                    std::to_string(m) + ") hook");
  }
  const auto space = VarSpace::xy(n, m);
  std::vector<MultiPoly> x_images;
  for (int i = 0; i < n; ++i) x_images.push_back(MultiPoly::variable(space, space.x(i + 1)));
  std::vector<MultiPoly> y_images;
  for (int j = 0; j < m; ++j) y_images.push_back(MultiPoly::variable(space, space.y(j + 1)));
  MultiPoly total(space);
  // mu is the shape occupied by the primed entries; its transpose is an
  // ordinary reverse tableau in the y alphabet with q and t exchanged.
  for (const auto& mu : subpartitions(lambda)) {
    if (mu.part(1) > m) continue;
    const MultiPoly x_part = skew_P_combinatorial(lambda, mu, n);
    if (x_part.is_zero()) continue;
    const MultiPoly y_part = macdonald_P_combinatorial(mu.conjugate(), m).swap_qt();
    if (y_part.is_zero()) continue;
    const QTScalar h = QTScalar::fraction(hook_polynomial(mu), hook_polynomial(mu.conjugate()).swap_qt());
    total += substitute_into(x_part, space, x_images) * substitute_into(y_part, space, y_images) * h;
  }
  return total;
}

}  // namespace macrui
