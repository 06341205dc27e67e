#include "qt_dense.hpp"

#include <algorithm>
#include <utility>

namespace macrui::detail {

int degree(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer content(const UPoly& a) {
  Integer g = 0;
  for (const auto& c : a) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(r);
  return r;
}

void sub_mul_shifted(UPoly& a, const UPoly& b, const UPoly& c, std::size_t shift) {
  if (b.empty() || c.empty()) return;
  const std::size_t need = b.size() + c.size() - 1 + shift;
  if (a.size() < need) a.resize(need);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] == 0) continue;
    for (std::size_t j = 0; j < c.size(); ++j) {
      mpz_submul(a[i + j + shift].get_mpz_t(), b[i].get_mpz_t(), c[j].get_mpz_t());
    }
  }
  trim(a);
}

std::optional<UPoly> divide_exact(const UPoly& a, const UPoly& b) {
  if (b.empty()) return std::nullopt;
  if (a.empty()) return UPoly{};
  if (a.size() < b.size()) return std::nullopt;
  UPoly r = a;
  UPoly quot(a.size() - b.size() + 1);
  const Integer& lb = b.back();
  for (int k = degree(r) - degree(b); k >= 0; --k) {
    const std::size_t top = static_cast<std::size_t>(k) + b.size() - 1;
    if (top >= r.size() || r[top] == 0) continue;
    if (!mpz_divisible_p(r[top].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer qk;
    mpz_divexact(qk.get_mpz_t(), r[top].get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_submul(r[j + k].get_mpz_t(), qk.get_mpz_t(), b[j].get_mpz_t());
    }
    quot[k] = std::move(qk);
  }
  trim(r);
  if (!r.empty()) return std::nullopt;
  trim(quot);
  return quot;
}

UPoly primitive_part(const UPoly& a) {
  if (a.empty()) return {};
  Integer c = content(a);
  if (a.back() < 0) c = -c;
  if (c == 1) return a;
  UPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

namespace {

// Lazy pseudo-remainder: lc(b)^k * a mod b for some k. Enough for gcd because
// primitive parts are taken afterwards.
UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const Integer& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    Integer la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_submul(a[j + shift].get_mpz_t(), la.get_mpz_t(), b[j].get_mpz_t());
    }
    trim(a);
  }
  return a;
}

}  // namespace

UPoly gcd(const UPoly& a_in, const UPoly& b_in) {
  if (a_in.empty() || b_in.empty()) {
    UPoly r = a_in.empty() ? b_in : a_in;
    if (!r.empty() && r.back() < 0)
      for (auto& c : r) c = -c;
    return r;
  }
  Integer g = content(a_in);
  const Integer cb = content(b_in);
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cb.get_mpz_t());
  UPoly a = primitive_part(a_in);
  UPoly b = primitive_part(b_in);
  if (a.size() < b.size()) std::swap(a, b);
  while (true) {
    if (b.size() == 1) {
      b = UPoly{1};
      break;
    }
    if (a == b) break;
    UPoly r = pseudo_remainder(std::move(a), b);
    if (r.empty()) break;
    a = std::move(b);
    b = primitive_part(r);
  }
  for (auto& c : b) c *= g;
  return b;
}

int degree(const BPoly& a) { return static_cast<int>(a.size()) - 1; }

void trim(BPoly& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}

UPoly content(const BPoly& a) {
  UPoly g;
  // Start from the smallest coefficient; gcds shrink fastest that way.
  std::vector<const UPoly*> order;
  for (const auto& c : a)
    if (!c.empty()) order.push_back(&c);
  std::sort(order.begin(), order.end(),
            [](const UPoly* x, const UPoly* y) { return x->size() < y->size(); });
  for (const UPoly* c : order) {
    g = gcd(g, *c);
    if (g.size() == 1 && g[0] == 1) break;
  }
  return g;
}

BPoly primitive_part(const BPoly& a) {
  if (a.empty()) return {};
  UPoly c = content(a);
  // Sign: make the leading coefficient's leading integer positive.
  const bool negate = a.back().back() < 0;
  if (c.size() == 1 && c[0] == 1 && !negate) return a;
  if (negate)
    for (auto& x : c) x = -x;
  BPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].empty()) continue;
    auto d = divide_exact(a[i], c);
    if (!d) throw Error(ErrorKind::kInternal, "content does not divide coefficient");
    r[i] = std::move(*d);
  }
  return r;
}

namespace {

BPoly pseudo_remainder(BPoly a, const BPoly& b) {
  const UPoly& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    UPoly la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c = mul(c, lb);
    for (std::size_t j = 0; j < b.size(); ++j) {
      sub_mul_shifted(a[j + shift], la, b[j], 0);
    }
    trim(a);
  }
  return a;
}

}  // namespace

BPoly gcd(const BPoly& a_in, const BPoly& b_in) {
  if (a_in.empty()) return primitive_part(b_in);
  if (b_in.empty()) return primitive_part(a_in);
  UPoly ca = content(a_in);
  UPoly cb = content(b_in);
  UPoly c = gcd(ca, cb);
  BPoly a = primitive_part(a_in);
  BPoly b = primitive_part(b_in);
  if (a.size() < b.size()) std::swap(a, b);
  while (true) {
    if (b.size() == 1) {
      b = BPoly{UPoly{1}};
      break;
    }
    if (a == b) break;
    BPoly r = pseudo_remainder(std::move(a), b);
    if (r.empty()) break;
    a = std::move(b);
    b = primitive_part(r);
  }
  for (auto& coeff : b) coeff = mul(coeff, c);
  trim(b);
  return b;
}

BPoly to_dense(const QTPolynomial& p, bool main_is_t) {
  BPoly r;
  for (const auto& term : p.terms()) {
    const std::uint32_t outer = main_is_t ? term.t_exp : term.q_exp;
    const std::uint32_t inner = main_is_t ? term.q_exp : term.t_exp;
    if (r.size() <= outer) r.resize(outer + 1);
    if (r[outer].size() <= inner) r[outer].resize(inner + 1);
    r[outer][inner] = term.coeff;
  }
  return r;
}

QTPolynomial from_dense(const BPoly& p, bool main_is_t) {
  std::vector<QTTerm> terms;
  for (std::size_t outer = 0; outer < p.size(); ++outer) {
    for (std::size_t inner = 0; inner < p[outer].size(); ++inner) {
      if (p[outer][inner] == 0) continue;
      const auto o = static_cast<std::uint32_t>(outer);
      const auto i = static_cast<std::uint32_t>(inner);
      terms.push_back(main_is_t ? QTTerm{i, o, p[outer][inner]}
                                : QTTerm{o, i, p[outer][inner]});
    }
  }
  return QTPolynomial::from_terms(std::move(terms));
}

}  // namespace macrui::detail
