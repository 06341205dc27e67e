#include "macrui/symfun.hpp"

#include <algorithm>
#include <mutex>

#include "macrui/linalg.hpp"

namespace macrui {

std::string_view to_string(Basis basis) {
  switch (basis) {
    case Basis::kMonomial: return "m";
    case Basis::kPower: return "p";
    case Basis::kShiftedPower: return "pstar";
  }
  return "?";
}

void SymExpansion::add(const Partition& lambda, const QTScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

QTScalar SymExpansion::coeff(const Partition& lambda) const {
  auto it = coeffs.find(lambda);
  return it == coeffs.end() ? QTScalar() : it->second;
}

int SymExpansion::degree() const {
  int d = -1;
  for (const auto& [lam, c] : coeffs) d = std::max(d, lam.weight());
  return d;
}

MultiPoly monomial_sym(const Partition& lambda, int N) {
  if (lambda.length() > N) {
    throw Error(ErrorKind::kInvalidArgument,
                "partition " + lambda.to_string() + " is longer than " + std::to_string(N));
  }
  const auto space = VarSpace::z(N);
  std::vector<int> exps(static_cast<std::size_t>(N), 0);
  std::copy(lambda.parts().begin(), lambda.parts().end(), exps.begin());
  std::sort(exps.begin(), exps.end());
  std::vector<MultiPoly::Term> terms;
  do {
    terms.emplace_back(Monomial(exps), QTScalar(1));
  } while (std::next_permutation(exps.begin(), exps.end()));
  return MultiPoly::from_terms(space, std::move(terms));
}

MultiPoly power_sum(int r, int N) {
  const auto space = VarSpace::z(N);
  if (r == 0) return MultiPoly::constant(space, N);
  std::vector<MultiPoly::Term> terms;
  for (int i = 0; i < N; ++i) {
    Monomial m;
    m.set(i, r);
    terms.emplace_back(m, QTScalar(1));
  }
  return MultiPoly::from_terms(space, std::move(terms));
}

MultiPoly power_sum(const Partition& lambda, int N) {
  MultiPoly p = MultiPoly::constant(VarSpace::z(N), 1);
  for (int r : lambda.parts()) p = p * power_sum(r, N);
  return p;
}

SymExpansion to_m_expansion(const MultiPoly& f) {
  if (!is_symmetric(f, f.space().all())) {
    throw Error(ErrorKind::kNotSymmetric, "polynomial is not symmetric");
  }
  const int N = f.space().dim();
  SymExpansion e{Basis::kMonomial, N, {}};
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> parts;
    bool decreasing = true;
    for (int i = 0; i < N; ++i) {
      if (i > 0 && m[i] > m[i - 1]) {
        decreasing = false;
        break;
      }
      parts.push_back(m[i]);
    }
    if (decreasing) e.add(Partition(std::move(parts)), c);
  }
  return e;
}

namespace {

// Counts assignments of the parts of mu to rows whose sums give nu.
Integer count_fillings(std::span<const int> mu, std::size_t k, std::vector<int>& room) {
  if (k == mu.size()) {
    return std::all_of(room.begin(), room.end(), [](int r) { return r == 0; }) ? 1 : 0;
  }
  Integer total = 0;
  for (auto& r : room) {
    if (r < mu[k]) continue;
    r -= mu[k];
    total += count_fillings(mu, k + 1, room);
    r += mu[k];
  }
  return total;
}

struct InverseTable {
  std::vector<Partition> partitions;
  Matrix<Rational> m_in_p;  // row nu: coefficients of m_nu in the p basis
};

const InverseTable& inverse_table(int d) {
  static std::mutex mutex;
  static std::map<int, InverseTable> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  InverseTable table;
  table.partitions = enumerate_partitions(d);
  const std::size_t n = table.partitions.size();
  Matrix<Rational> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = Rational(power_sum_m_coefficient(table.partitions[i], table.partitions[j]));
  table.m_in_p = invert(a);
  return cache.emplace(d, std::move(table)).first->second;
}

}  // namespace

Integer power_sum_m_coefficient(const Partition& mu, const Partition& nu) {
  if (mu.weight() != nu.weight()) return 0;
  std::vector<int> room(nu.parts().begin(), nu.parts().end());
  return count_fillings(mu.parts(), 0, room);
}

SymExpansion m_to_p(const SymExpansion& e) {
  if (e.basis != Basis::kMonomial) throw Error(ErrorKind::kInvalidArgument, "expected an m-expansion");
  if (e.degree() > e.N) {
    throw Error(ErrorKind::kSingularSystem,
                "power sums are dependent in fewer variables than the degree");
  }
  SymExpansion out{Basis::kPower, e.N, {}};
  for (const auto& [nu, c] : e.coeffs) {
    const auto& table = inverse_table(nu.weight());
    const auto row = static_cast<std::size_t>(
        std::find(table.partitions.begin(), table.partitions.end(), nu) - table.partitions.begin());
    for (std::size_t j = 0; j < table.partitions.size(); ++j) {
      const Rational& r = table.m_in_p[row][j];
      if (r != 0) out.add(table.partitions[j], c * QTScalar(r));
    }
  }
  return out;
}

QTScalar qt_ratio(int r) {
  const QTPolynomial one(1);
  return QTScalar::fraction(one - QTPolynomial::monomial(static_cast<std::uint32_t>(r), 0),
                            one - QTPolynomial::monomial(0, static_cast<std::uint32_t>(r)));
}

SymExpansion sigma_auto(const SymExpansion& e) {
  if (e.basis != Basis::kPower) throw Error(ErrorKind::kInvalidArgument, "expected a p-expansion");
  SymExpansion out{Basis::kPower, e.N, {}};
  for (const auto& [mu, c] : e.coeffs) {
    QTScalar f = c;
    for (int r : mu.parts()) f *= qt_ratio(r);
    out.add(mu, f);
  }
  return out;
}

MultiPoly deformed_newton(int r, int n, int m) {
  if (r < 1) throw Error(ErrorKind::kInvalidArgument, "deformed Newton sum needs r >= 1");
  const auto space = VarSpace::xy(n, m);
  const QTScalar ratio = qt_ratio(r);
  std::vector<MultiPoly::Term> terms;
  for (int i = 0; i < n + m; ++i) {
    Monomial mono;
    mono.set(i, r);
    terms.emplace_back(mono, i < n ? QTScalar(1) : ratio);
  }
  return MultiPoly::from_terms(space, std::move(terms));
}

namespace {

// Substitutes generator images into an expansion in products of generators.
template <typename Gen>
MultiPoly expand_with(const SymExpansion& e, VarSpace space, Gen generator) {
  std::map<int, MultiPoly> images;
  auto image = [&](int r) -> const MultiPoly& {
    auto it = images.find(r);
    if (it == images.end()) it = images.emplace(r, generator(r)).first;
    return it->second;
  };
  MultiPoly out(space);
  for (const auto& [mu, c] : e.coeffs) {
    MultiPoly term = MultiPoly::constant(space, c);
    for (int r : mu.parts()) term = term * image(r);
    out += term;
  }
  return out;
}

}  // namespace

MultiPoly phi(const SymExpansion& e, int n, int m) {
  if (e.basis != Basis::kPower) throw Error(ErrorKind::kInvalidArgument, "expected a p-expansion");
  return expand_with(e, VarSpace::xy(n, m), [&](int r) { return deformed_newton(r, n, m); });
}

bool membership_Lambda_nm(const MultiPoly& f) {
  const VarSpace& space = f.space();
  if (!space.is_xy()) throw Error(ErrorKind::kInvalidArgument, "expected an x/y polynomial");
  if (!is_symmetric(f, space.x_block()) || !is_symmetric(f, space.y_block())) return false;
  if (space.n() == 0 || space.m() == 0) return true;
  const int x1 = space.x(1);
  const int y1 = space.y(1);
  const MultiPoly diff =
      shift_variable(f, x1, QTScalar::q()) - shift_variable(f, y1, QTScalar::t());
  return substitute(diff, {{y1, MultiPoly::variable(space, x1)}}).is_zero();
}

MultiPoly shifted_power_sum(int r, int N) {
  if (r < 1) throw Error(ErrorKind::kInvalidArgument, "shifted power sum needs r >= 1");
  const auto space = VarSpace::z(N);
  std::vector<MultiPoly::Term> terms;
  QTScalar constant;
  for (int i = 0; i < N; ++i) {
    const QTScalar w = QTScalar::qt_power(0, static_cast<long>(r) * i);
    Monomial m;
    m.set(i, r);
    terms.emplace_back(m, w);
    constant -= w;
  }
  terms.emplace_back(Monomial(), constant);
  return MultiPoly::from_terms(space, std::move(terms));
}

MultiPoly shifted_power_product(const Partition& mu, int N) {
  MultiPoly p = MultiPoly::constant(VarSpace::z(N), 1);
  for (int r : mu.parts()) p = p * shifted_power_sum(r, N);
  return p;
}

namespace {

// z_i -> z_i t^{-(i-1)}, turning shifted symmetry into ordinary symmetry.
MultiPoly unshift_t(const MultiPoly& f) {
  MultiPoly g = f;
  for (int i = 1; i < f.space().dim(); ++i) g = shift_variable(g, i, QTScalar::qt_power(0, -i));
  return g;
}

}  // namespace

bool is_shifted_symmetric(const MultiPoly& f) {
  return is_symmetric(unshift_t(f), f.space().all());
}

SymExpansion to_pstar_expansion(const MultiPoly& f) {
  const int N = f.space().dim();
  const MultiPoly g = unshift_t(f);
  if (!is_symmetric(g, f.space().all())) {
    throw Error(ErrorKind::kNotSymmetric, "polynomial is not shifted-symmetric");
  }
  // In the rescaled variables p*_r = p_r - kappa_r with kappa_r = sum t^{r(i-1)},
  // so each p_nu = prod (p*_r + kappa_r) is expanded binomially.
  const SymExpansion in_p = m_to_p(to_m_expansion(g));
  std::map<int, QTScalar> kappa;
  auto kappa_of = [&](int r) -> const QTScalar& {
    auto it = kappa.find(r);
    if (it == kappa.end()) {
      QTScalar s;
      for (int i = 0; i < N; ++i) s += QTScalar::qt_power(0, static_cast<long>(r) * i);
      it = kappa.emplace(r, s).first;
    }
    return it->second;
  };
  SymExpansion out{Basis::kShiftedPower, N, {}};
  for (const auto& [nu, c] : in_p.coeffs) {
    const auto parts = nu.parts();
    const std::size_t l = parts.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << l); ++mask) {
      std::vector<int> kept;
      QTScalar w = c;
      for (std::size_t k = 0; k < l; ++k) {
        if (mask & (std::size_t{1} << k)) {
          kept.push_back(parts[k]);
        } else {
          w *= kappa_of(parts[k]);
        }
      }
      out.add(Partition(std::move(kept)), w);
    }
  }
  return out;
}

MultiPoly phi_natural_generator(int r, int n, int m) {
  if (r < 1) throw Error(ErrorKind::kInvalidArgument, "generator index needs r >= 1");
  const auto space = VarSpace::xy(n, m);
  const QTScalar ratio = qt_ratio(r);
  const QTScalar tn = QTScalar::qt_power(0, static_cast<long>(r) * n);
  std::vector<MultiPoly::Term> terms;
  QTScalar constant;
  for (int i = 0; i < n; ++i) {
    const QTScalar w = QTScalar::qt_power(0, static_cast<long>(r) * i);
    Monomial mono;
    mono.set(space.x(i + 1), r);
    terms.emplace_back(mono, w);
    constant -= w;
  }
  for (int j = 0; j < m; ++j) {
    const QTScalar w = ratio * QTScalar::qt_power(static_cast<long>(r) * j, 0);
    Monomial mono;
    mono.set(space.y(j + 1), r);
    terms.emplace_back(mono, w);
    constant -= w * tn;
  }
  terms.emplace_back(Monomial(), constant);
  return MultiPoly::from_terms(space, std::move(terms));
}

MultiPoly phi_natural(const SymExpansion& e, int n, int m) {
  if (e.basis != Basis::kShiftedPower) {
    throw Error(ErrorKind::kInvalidArgument, "expected a p*-expansion");
  }
  return expand_with(e, VarSpace::xy(n, m), [&](int r) { return phi_natural_generator(r, n, m); });
}

MultiPoly to_polynomial(const SymExpansion& e) {
  const auto space = VarSpace::z(e.N);
  MultiPoly out(space);
  for (const auto& [mu, c] : e.coeffs) {
    switch (e.basis) {
      case Basis::kMonomial: out += monomial_sym(mu, e.N) * c; break;
      case Basis::kPower: out += power_sum(mu, e.N) * c; break;
      case Basis::kShiftedPower: out += shifted_power_product(mu, e.N) * c; break;
    }
  }
  return out;
}

}  // namespace macrui
