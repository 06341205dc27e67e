#include "macrui/json_io.hpp"

#include <charconv>

namespace macrui {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::kInvalidArgument, what); }

Integer parse_integer(const std::string& s) {
  Integer z;
  if (s.empty() || z.set_str(s, 10) != 0) bad("not an integer: '" + s + "'");
  return z;
}

}  // namespace

Json to_json(const QTPolynomial& p) {
  Json out = Json::array();
  for (const auto& term : p.terms()) out.push_back(Json::array({term.q_exp, term.t_exp, term.coeff.get_str()}));
  return out;
}

Json to_json(const QTScalar& c) { return Json{{"num", to_json(c.num())}, {"den", to_json(c.den())}}; }

Json to_json(const Partition& lambda) {
  Json out = Json::array();
  for (int p : lambda.parts()) out.push_back(p);
  return out;
}

Json to_json(const MultiPoly& f) {
  const int dim = f.space().dim();
  Json out = Json::array();
  for (const auto& [mono, c] : f.terms()) {
    Json exp = Json::array();
    for (int i = 0; i < dim; ++i) exp.push_back(static_cast<int>(mono[i]));
    out.push_back(Json{{"exp", std::move(exp)}, {"coeff", to_json(c)}});
  }
  return out;
}

Json to_json(const SymExpansion& e) {
  Json terms = Json::array();
  for (const auto& [mu, c] : e.coeffs) terms.push_back(Json{{"partition", to_json(mu)}, {"coeff", to_json(c)}});
  return Json{{"basis", std::string(to_string(e.basis))}, {"N", e.N}, {"terms", std::move(terms)}};
}

Json to_json(const VarSpace& space) {
  Json vars = Json::array();
  for (int i = 0; i < space.dim(); ++i) vars.push_back(space.var_name(i));
  return vars;
}

QTPolynomial qt_polynomial_from_json(const Json& j) {
  if (!j.is_array()) bad("scalar side must be a list of [q_exp, t_exp, coeff]");
  std::vector<QTTerm> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned() ||
        !t[2].is_string()) {
      bad("malformed scalar term " + t.dump());
    }
    terms.push_back({t[0].get<std::uint32_t>(), t[1].get<std::uint32_t>(), parse_integer(t[2].get<std::string>())});
  }
  return QTPolynomial::from_terms(std::move(terms));
}

QTScalar scalar_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) bad("scalar must have num and den");
  return QTScalar::fraction(qt_polynomial_from_json(j.at("num")), qt_polynomial_from_json(j.at("den")));
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) bad("partition must be a list of integers");
  std::vector<int> parts;
  for (const auto& p : j) {
    if (!p.is_number_integer()) bad("partition must be a list of integers");
    parts.push_back(p.get<int>());
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1])) bad("not a partition: " + j.dump());
  }
  return Partition(std::move(parts));
}

MultiPoly poly_from_json(const Json& j, VarSpace space) {
  if (!j.is_array()) bad("polynomial must be a list of terms");
  std::vector<MultiPoly::Term> terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("coeff")) bad("malformed term " + t.dump());
    const auto& exp = t.at("exp");
    if (!exp.is_array() || static_cast<int>(exp.size()) != space.dim()) {
      bad("exponent vector does not match " + std::to_string(space.dim()) + " variables");
    }
    std::vector<int> e;
    for (const auto& x : exp) {
      if (!x.is_number_integer() || x.get<int>() < 0) bad("exponents must be non-negative integers");
      e.push_back(x.get<int>());
    }
    terms.emplace_back(Monomial(e), scalar_from_json(t.at("coeff")));
  }
  MultiPoly out(space);
  // from_terms expects distinct sorted monomials; summing tolerates any input order.
  for (auto& [m, c] : terms) out += MultiPoly::monomial(space, m, c);
  return out;
}

SymExpansion expansion_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("N") || !j.contains("terms")) {
    bad("expansion must have basis, N and terms");
  }
  SymExpansion e;
  const auto basis = j.at("basis").get<std::string>();
  if (basis == "m") e.basis = Basis::kMonomial;
  else if (basis == "p") e.basis = Basis::kPower;
  else if (basis == "pstar") e.basis = Basis::kShiftedPower;
  else bad("unknown basis " + basis);
  e.N = j.at("N").get<int>();
  for (const auto& t : j.at("terms")) e.add(partition_from_json(t.at("partition")), scalar_from_json(t.at("coeff")));
  return e;
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  if (text.empty()) return Partition{};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      bad("invalid partition syntax '" + text + "'");
    }
    if (value <= 0 || (!parts.empty() && value > parts.back())) {
      bad("'" + text + "' is not a weakly decreasing list of positive integers");
    }
    parts.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) bad("invalid rational '" + text + "'");
  if (r.get_den() == 0) bad("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace macrui
