#include "macrui/verify.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <thread>

#include "macrui/linalg.hpp"
#include "macrui/macdonald.hpp"
#include "macrui/operators.hpp"
#include "macrui/shifted.hpp"

namespace macrui {

namespace {

// A check returns an empty string on success and a witness otherwise.
using Check = std::function<std::string()>;

struct Task {
  std::string instance;
  Check check;
};

const QTScalar kQ = QTScalar::q();
const QTScalar kT = QTScalar::t();

std::string differ(const MultiPoly& a, const MultiPoly& b) {
  if (a == b) return {};
  return "difference: " + (a - b).to_string();
}

std::string differ(const QTScalar& a, const QTScalar& b) {
  if (a == b) return {};
  return "difference: " + (a - b).to_string();
}

std::string expect(bool ok, const std::string& witness) { return ok ? std::string() : witness; }

std::string hook_name(int n, int m) { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

const std::vector<std::pair<int, int>> kSuperShapes{{1, 1}, {2, 1}, {1, 2}};

MultiPoly var(VarSpace s, int i) { return MultiPoly::variable(s, i); }

std::vector<MultiPoly> monomials_up_to(VarSpace S, int d) {
  std::vector<MultiPoly> out;
  const int N = S.dim();
  std::vector<int> e(static_cast<std::size_t>(N), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == N) {
      out.push_back(MultiPoly::monomial(S, Monomial(e)));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, left - k);
    }
    e[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0, d);
  return out;
}

std::size_t rank_of(const std::vector<MultiPoly>& polys) {
  std::map<Monomial, std::size_t, GrlexGreater> columns;
  for (const auto& P : polys)
    for (const auto& [mono, c] : P.terms()) columns.try_emplace(mono, columns.size());
  Matrix<QTScalar> A(polys.size(), std::vector<QTScalar>(columns.size()));
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (const auto& [mono, c] : polys[r].terms()) A[r][columns.at(mono)] = c;
  return matrix_rank(A);
}

std::vector<Task> eigen_tasks(int w) {
  std::vector<Task> tasks;
  const int N = std::max(w, 1);
  for (const auto& lam : partitions_up_to(w, PartitionFilter::max_length(N))) {
    tasks.push_back({"M P" + lam.to_string() + " N=" + std::to_string(N), [lam, N] {
                       const auto P = macdonald_P(lam, N);
                       return differ(apply_MR(P), P * mr_eigenvalue(lam));
                     }});
  }
  for (auto [n, m] : kSuperShapes) {
    for (const auto& lam : partitions_up_to(w, PartitionFilter::fat_hook(n, m))) {
      tasks.push_back({"deformed M SP" + lam.to_string() + " " + hook_name(n, m), [lam, n, m] {
                         const auto P = super_P(lam, n, m);
                         return differ(apply_deformed_MR(P), P * mr_eigenvalue(lam));
                       }});
    }
  }
  return tasks;
}

std::vector<Task> commdia_tasks(int w) {
  std::vector<Task> tasks;
  for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
    for (const auto& mu : partitions_up_to(w)) {
      tasks.push_back({"phi M p" + mu.to_string() + " " + hook_name(n, m), [mu, n, m] {
                         const int N = std::max(mu.weight(), 1);
                         SymExpansion p{Basis::kPower, N, {}};
                         p.add(mu, 1);
                         SymExpansion Mp = m_to_p(to_m_expansion(apply_MR(to_polynomial(p))));
                         return differ(phi(Mp, n, m), apply_deformed_MR(phi(p, n, m)));
                       }});
    }
  }
  return tasks;
}

std::vector<Task> kernel_tasks(int w) {
  std::vector<Task> tasks;
  for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}}) {
    for (int d = 0; d <= w; ++d) {
      for (const auto& lam : enumerate_partitions(d)) {
        tasks.push_back({"phi(P" + lam.to_string() + ") zero iff off hook " + hook_name(n, m), [lam, n, m] {
                           const bool zero = super_P(lam, n, m).is_zero();
                           return expect(zero == !in_fat_hook(lam, n, m), zero ? "image vanished" : "image nonzero");
                         }});
      }
      tasks.push_back({"rank of phi(P) in degree " + std::to_string(d) + " " + hook_name(n, m), [d, n, m] {
                         std::vector<MultiPoly> images;
                         for (const auto& lam : enumerate_partitions(d)) {
                           auto P = super_P(lam, n, m);
                           if (!P.is_zero()) images.push_back(std::move(P));
                         }
                         const std::size_t expected = enumerate_partitions(d, PartitionFilter::fat_hook(n, m)).size();
                         const std::size_t rank = rank_of(images);
                         return expect(rank == expected && images.size() == expected,
                                       "rank " + std::to_string(rank) + " of " + std::to_string(images.size()) +
                                           " images, expected " + std::to_string(expected));
                       }});
    }
  }
  for (const auto& lam : partitions_up_to(w)) {
    tasks.push_back({"phi-natural(P*" + lam.to_string() + ") zero iff off hook (1,1)", [lam] {
                       const bool zero = shifted_super_P(lam, 1, 1).is_zero();
                       return expect(zero == !in_fat_hook(lam, 1, 1), zero ? "image vanished" : "image nonzero");
                     }});
  }
  tasks.push_back({"independence of phi-natural(P*) up to weight " + std::to_string(w) + " (1,1)", [w] {
                     std::vector<MultiPoly> images;
                     for (const auto& lam : partitions_up_to(w, PartitionFilter::fat_hook(1, 1)))
                       images.push_back(shifted_super_P(lam, 1, 1));
                     const std::size_t rank = rank_of(images);
                     return expect(rank == images.size(), "rank " + std::to_string(rank) + " of " +
                                                              std::to_string(images.size()));
                   }});
  return tasks;
}

std::vector<Task> duality_tasks(int w) {
  std::vector<Task> tasks;
  for (const auto& lam : partitions_up_to(w)) {
    tasks.push_back({"sigma P" + lam.to_string() + " = +H/H' P'", [lam] {
                       const int eps = sigma_duality_sign(lam);
                       return expect(eps == 1, "sign " + std::to_string(eps));
                     }});
  }
  const int N = std::max(w, 1);
  for (const auto& lam : partitions_up_to(w)) {
    for (const auto& mu : partitions_up_to(w)) {
      tasks.push_back({"P*" + lam.to_string() + "(q^" + mu.to_string() + ") duality", [lam, mu, N] {
                         return expect(duality_check(lam, mu, N), "sides differ");
                       }});
    }
  }
  return tasks;
}

std::vector<Task> vanishing_tasks(int w) {
  std::vector<Task> tasks;
  const int N = std::max(w, 1);
  for (const auto& lam : partitions_up_to(w)) {
    tasks.push_back({"P*" + lam.to_string() + " vanishing = branching N=" + std::to_string(N), [lam, N] {
                       return differ(shifted_P_branching(lam, N), shifted_P_vanishing(lam, N));
                     }});
    tasks.push_back({"P*" + lam.to_string() + " vanishing = tableaux N=" + std::to_string(N), [lam, N] {
                       return differ(shifted_P_combinatorial(lam, N), shifted_P_vanishing(lam, N));
                     }});
    tasks.push_back({"P*" + lam.to_string() + "(q^lambda) = H", [lam, N] {
                       return differ(eval_at_partition(shifted_P_vanishing(lam, N), lam, EvalBase::kQ), hook_H(lam));
                     }});
    tasks.push_back({"P*" + lam.to_string() + " extra vanishing up to weight " + std::to_string(lam.weight() + 2),
                     [lam] {
                       const int M = lam.weight() + 2;
                       const auto P = shifted_P_vanishing(lam, M);
                       for (const auto& mu : partitions_up_to(M)) {
                         if (mu.contains(lam)) continue;
                         const auto v = eval_at_partition(P, mu, EvalBase::kQ);
                         if (!v.is_zero()) return "nonzero at " + mu.to_string() + ": " + v.to_string();
                       }
                       return std::string();
                     }});
  }
  for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}}) {
    const auto hook = PartitionFilter::fat_hook(n, m);
    for (const auto& lam : partitions_up_to(w, hook)) {
      tasks.push_back({"SP*" + lam.to_string() + " at F points " + hook_name(n, m), [lam, n, m, hook] {
                         const auto P = shifted_super_P(lam, n, m);
                         if (auto d = differ(evaluate(P, eval_F(lam, n, m)), hook_H(lam)); !d.empty()) return d;
                         for (const auto& mu : partitions_up_to(lam.weight() + 1, hook)) {
                           if (mu.contains(lam)) continue;
                           const auto v = evaluate(P, eval_F(mu, n, m));
                           if (!v.is_zero()) return "nonzero at F" + mu.to_string() + ": " + v.to_string();
                         }
                         return std::string();
                       }});
    }
  }
  return tasks;
}

std::vector<Task> combinatorial_tasks(int w) {
  std::vector<Task> tasks;
  for (int N = 1; N <= std::max(w, 1); ++N) {
    for (const auto& lam : partitions_up_to(w, PartitionFilter::max_length(N))) {
      tasks.push_back({"tableau P" + lam.to_string() + " N=" + std::to_string(N), [lam, N] {
                         return differ(macdonald_P_combinatorial(lam, N), macdonald_P(lam, N));
                       }});
    }
  }
  for (const auto& lam : partitions_up_to(w)) {
    tasks.push_back({"skew decomposition P" + lam.to_string() + " 2+2", [lam] {
                       const auto S = VarSpace::z(4);
                       const std::vector<MultiPoly> to_x{var(S, 0), var(S, 1)};
                       const std::vector<MultiPoly> to_y{var(S, 2), var(S, 3)};
                       MultiPoly sum(S);
                       for (const auto& mu : subpartitions(lam)) {
                         if (mu.length() > 2) continue;
                         const auto x = substitute_into(skew_P_combinatorial(lam, mu, 2), S, to_x);
                         const auto y = substitute_into(macdonald_P(mu, 2), S, to_y);
                         sum += x * y;
                       }
                       return differ(sum, macdonald_P(lam, 4));
                     }});
  }
  for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}}) {
    for (const auto& lam : partitions_up_to(w, PartitionFilter::fat_hook(n, m))) {
      tasks.push_back({"bitableau SP" + lam.to_string() + " " + hook_name(n, m), [lam, n, m] {
                         return differ(super_P_combinatorial(lam, n, m), super_P(lam, n, m));
                       }});
      tasks.push_back({"bitableau SP*" + lam.to_string() + " " + hook_name(n, m), [lam, n, m] {
                         return differ(shifted_super_P_combinatorial(lam, n, m), shifted_super_P(lam, n, m));
                       }});
    }
  }
  return tasks;
}

std::vector<Task> cherednik_tasks(int w) {
  std::vector<Task> tasks;
  for (int N = 2; N <= 3; ++N) {
    tasks.push_back({"Hecke quadratic relation N=" + std::to_string(N), [N, w] {
                       const auto S = VarSpace::z(N);
                       for (const auto& f : monomials_up_to(S, w)) {
                         for (int i = 1; i < N; ++i) {
                           const auto Tf = apply_hecke_T(f, i);
                           const auto rel = apply_hecke_T(Tf, i) + Tf * (kT - 1) - f * kT;
                           if (!rel.is_zero()) return "fails on " + f.to_string() + ", i=" + std::to_string(i);
                         }
                       }
                       return std::string();
                     }});
    tasks.push_back({"[D_i, D_j] = 0 N=" + std::to_string(N), [N, w] {
                       const auto S = VarSpace::z(N);
                       for (const auto& f : monomials_up_to(S, w)) {
                         for (int i = 1; i <= N; ++i) {
                           for (int j = i + 1; j <= N; ++j) {
                             const auto a = apply_cherednik_dunkl(apply_cherednik_dunkl(f, j), i);
                             const auto b = apply_cherednik_dunkl(apply_cherednik_dunkl(f, i), j);
                             if (!(a == b)) return "fails on " + f.to_string();
                           }
                         }
                       }
                       return std::string();
                     }});
  }
  for (int N = 1; N <= 3; ++N) {
    for (const auto& lam : partitions_up_to(w, PartitionFilter::max_length(N))) {
      tasks.push_back({"p*_1(D) m" + lam.to_string() + " = (1-q) M N=" + std::to_string(N), [lam, N] {
                         const auto f = monomial_sym(lam, N);
                         return differ(operator_from_shifted_symmetric(shifted_power_sum(1, N), f), apply_MR(f) * (1 - kQ));
                       }});
      tasks.push_back({"p*_2(D) P" + lam.to_string() + " = p*_2(q^lambda) P N=" + std::to_string(N), [lam, N] {
                         const auto P = macdonald_P(lam, N);
                         const auto g = shifted_power_sum(2, N);
                         EvalPoint point;
                         for (int i = 1; i <= N; ++i) point.push_back(kQ.pow(lam.part(i)));
                         return differ(operator_from_shifted_symmetric(g, P), P * evaluate(g, point));
                       }});
    }
  }
  return tasks;
}

// Truncation of Pi = exp(sum_s c_s p_s(z) p_s(w) / s) to w-degree <= d in Z(4)
// with z = (z1, z2), w = (z3, z4).
std::string pi_balance(int d) {
  const auto S = VarSpace::z(4);
  const std::vector<int> zb{0, 1};
  const std::vector<int> wb{2, 3};
  auto truncate = [&](const MultiPoly& f) {
    std::vector<MultiPoly::Term> keep;
    for (const auto& [mono, c] : f.terms())
      if (mono[2] + mono[3] <= d) keep.emplace_back(mono, c);
    return MultiPoly::from_terms(S, std::move(keep));
  };
  auto ps = [&](const std::vector<int>& block, int s) {
    MultiPoly p(S);
    for (int v : block) p += var(S, v).pow(static_cast<unsigned>(s));
    return p;
  };
  MultiPoly L(S);
  for (int s = 1; s <= d; ++s)
    L += ps(zb, s) * ps(wb, s) * ((1 - QTScalar::qt_power(0, -s)) / (1 - kQ.pow(s)) / QTScalar(s));
  MultiPoly Pi = MultiPoly::constant(S, 1);
  MultiPoly power = MultiPoly::constant(S, 1);
  Integer factorial = 1;
  for (int k = 1; k <= d; ++k) {
    power = truncate(power * L);
    factorial *= k;
    Pi += power * QTScalar(Rational(1) / Rational(factorial));
  }
  return differ(truncate(apply_MR(Pi, zb)), truncate(apply_MR(Pi, wb)));
}

std::vector<Task> identity_tasks(int w) {
  std::vector<Task> tasks;
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      if (n + m == 0) continue;
      tasks.push_back({"coefficient sums " + hook_name(n, m), [n, m] {
                         return expect(coefficient_sum_identity(n, m), "identity fails");
                       }});
    }
  }
  for (const auto& lam : partitions_up_to(w)) {
    tasks.push_back({"conjugate identity " + lam.to_string(), [lam] {
                       const Partition conj = lam.conjugate();
                       QTScalar lhs;
                       for (int j = 1; j <= conj.length(); ++j) lhs += (kQ.pow(conj.part(j)) - 1) * kT.pow(j - 1);
                       QTScalar rhs;
                       for (int i = 1; i <= lam.length(); ++i) rhs += (kT.pow(lam.part(i)) - 1) * kQ.pow(i - 1);
                       return differ(lhs / (1 - kQ), rhs / (1 - kT));
                     }});
  }
  tasks.push_back({"deformed Newton sums vanish at q=1/2, t=2, x=1, y=2", [] {
                     const std::vector<Rational> point{Rational(1), Rational(2)};
                     for (int r = 1; r <= 6; ++r) {
                       const auto v = evaluate_numeric(deformed_newton(r, 1, 1), Rational(1, 2), Rational(2), point);
                       if (v != 0) return "r=" + std::to_string(r) + " gives " + v.get_str();
                     }
                     return std::string();
                   }});
  for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}}) {
    for (int s = 1; s <= std::max(w, 1); ++s) {
      tasks.push_back({"phi of log Pi, degree " + std::to_string(s) + " " + hook_name(n, m), [s, n, m] {
                         const auto S = VarSpace::xy(n, m);
                         const QTScalar c = (1 - QTScalar::qt_power(0, -s)) / (1 - kQ.pow(s));
                         SymExpansion e{Basis::kPower, s, {}};
                         e.add(Partition{s}, c);
                         MultiPoly px(S);
                         MultiPoly py(S);
                         for (int i : S.x_block()) px += var(S, i).pow(static_cast<unsigned>(s));
                         for (int j : S.y_block()) py += var(S, j).pow(static_cast<unsigned>(s));
                         return differ(phi(e, n, m), px * c - py * QTScalar::qt_power(0, -s));
                       }});
    }
  }
  const int d = std::min(std::max(w, 1), 3);
  tasks.push_back({"M^z Pi = M^w Pi to w-degree " + std::to_string(d), [d] { return pi_balance(d); }});
  return tasks;
}

std::vector<Task> build(const std::string& name, int w) {
  if (name == "eigen") return eigen_tasks(w);
  if (name == "commdia") return commdia_tasks(w);
  if (name == "kernel") return kernel_tasks(w);
  if (name == "duality") return duality_tasks(w);
  if (name == "vanishing") return vanishing_tasks(w);
  if (name == "combinatorial") return combinatorial_tasks(w);
  if (name == "cherednik") return cherednik_tasks(w);
  if (name == "identities") return identity_tasks(w);
  throw Error(ErrorKind::kInvalidArgument, "unknown suite '" + name + "'");
}

}  // namespace

std::size_t Report::passed() const {
  std::size_t k = 0;
  for (const auto& c : checks) k += c.pass ? 1 : 0;
  return k;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"eigen",     "commdia",       "kernel",    "duality",
                                              "vanishing", "combinatorial", "cherednik", "identities"};
  return names;
}

Report run_suite(const std::string& name, int max_weight, unsigned threads) {
  if (max_weight < 0) throw Error(ErrorKind::kInvalidArgument, "max weight must be non-negative");
  std::vector<Task> tasks = build(name, max_weight);
  Report report{name, max_weight, std::vector<CheckResult>(tasks.size())};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      CheckResult& r = report.checks[k];
      r.instance = tasks[k].instance;
      try {
        r.witness = tasks[k].check();
        r.pass = r.witness.empty();
      } catch (const std::exception& e) {
        r.pass = false;
        r.witness = std::string("error: ") + e.what();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return report;
}

Json to_json(const Report& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json item{{"instance", c.instance}, {"pass", c.pass}};
    if (!c.pass) item["witness"] = c.witness;
    checks.push_back(std::move(item));
  }
  return Json{{"suite", report.suite},
              {"max_weight", report.max_weight},
              {"passed", report.passed()},
              {"failed", report.failed()},
              {"checks", std::move(checks)}};
}

}  // namespace macrui
