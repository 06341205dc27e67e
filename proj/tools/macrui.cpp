// macrui: command-line front end for the Macdonald polynomial library.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "macrui/json_io.hpp"
#include "macrui/macdonald.hpp"
#include "macrui/operators.hpp"
#include "macrui/shifted.hpp"
#include "macrui/verify.hpp"

using namespace macrui;

namespace {

enum Exit { kOk = 0, kChecksFailed = 1, kBadRequest = 2, kComputeError = 3 };

struct Params {
  std::string verb;
  std::optional<std::string> lambda, mu, suite, at, poly, basis;
  std::optional<int> n, m, N, max_weight;
  std::string format = "json";
};

// Flags each verb accepts; anything else given on the command line is a
// verb/parameter mismatch.
const std::map<std::string, std::set<std::string>>& verb_flags() {
  static const std::map<std::string, std::set<std::string>> table{
      {"macdonald", {"lambda", "N", "basis", "at"}},
      {"macdonald-comb", {"lambda", "N", "at"}},
      {"skew", {"lambda", "mu", "N", "at"}},
      {"super", {"lambda", "n", "m", "at"}},
      {"super-comb", {"lambda", "n", "m", "at"}},
      {"shifted", {"lambda", "N", "basis", "at"}},
      {"shifted-comb", {"lambda", "N", "at"}},
      {"shifted-super", {"lambda", "n", "m", "at"}},
      {"shifted-super-comb", {"lambda", "n", "m", "at"}},
      {"apply-mr", {"lambda", "poly", "N", "at"}},
      {"apply-deformed-mr", {"lambda", "poly", "n", "m", "at"}},
      {"eigenvalue", {"lambda", "at"}},
      {"eval", {"lambda", "mu", "N", "n", "m", "at"}},
      {"verify", {"suite", "max-weight"}},
  };
  return table;
}

struct RequestError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::set<std::string> given_flags(const Params& p) {
  std::set<std::string> g;
  if (p.lambda) g.insert("lambda");
  if (p.mu) g.insert("mu");
  if (p.n) g.insert("n");
  if (p.m) g.insert("m");
  if (p.N) g.insert("N");
  if (p.suite) g.insert("suite");
  if (p.max_weight) g.insert("max-weight");
  if (p.at) g.insert("at");
  if (p.poly) g.insert("poly");
  if (p.basis) g.insert("basis");
  return g;
}

void validate(const Params& p) {
  const auto& allowed = verb_flags().at(p.verb);
  for (const auto& f : given_flags(p)) {
    if (!allowed.contains(f)) throw RequestError("--" + f + " is not accepted by '" + p.verb + "'");
  }
  auto need = [&](bool present, const char* flag) {
    if (!present) throw RequestError("'" + p.verb + "' requires --" + flag);
  };
  const bool xy_verb = p.verb.find("super") != std::string::npos || p.verb == "apply-deformed-mr";
  if (p.verb == "verify") {
    need(p.suite.has_value(), "suite");
  } else if (p.verb == "apply-mr" || p.verb == "apply-deformed-mr") {
    if (p.lambda.has_value() == p.poly.has_value()) throw RequestError("give exactly one of --lambda and --poly");
    if (p.verb == "apply-mr" && p.poly) need(p.N.has_value(), "N");
  } else {
    need(p.lambda.has_value(), "lambda");
  }
  if (xy_verb) {
    need(p.n.has_value(), "n");
    need(p.m.has_value(), "m");
  }
  if (p.verb == "skew" || p.verb == "eval") need(p.mu.has_value(), "mu");
  if (p.verb == "eval" && p.N && (p.n || p.m)) throw RequestError("'eval' takes either --N or --n/--m");
  if (p.verb == "eval" && p.n.has_value() != p.m.has_value()) throw RequestError("'eval' needs both --n and --m");
  for (auto v : {p.n, p.m, p.N, p.max_weight}) {
    if (v && *v < 0) throw RequestError("numeric parameters must be non-negative");
  }
  if (p.n && p.m && *p.n + *p.m > kMaxVars) throw RequestError("too many variables");
  if (p.N && *p.N > kMaxVars) throw RequestError("too many variables");
  if (p.format != "json" && p.format != "text") throw RequestError("--format must be json or text");
  if (p.basis) {
    const std::set<std::string> ok = p.verb == "macdonald" ? std::set<std::string>{"poly", "m", "p"}
                                                           : std::set<std::string>{"poly", "pstar"};
    if (!ok.contains(*p.basis)) throw RequestError("unsupported --basis " + *p.basis + " for " + p.verb);
  }
}

std::pair<Rational, Rational> parse_at(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw RequestError("--at expects q0,t0");
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

std::string read_poly_text(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw RequestError("cannot read " + arg.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A computed value: polynomial, scalar, expansion or report.
struct Value {
  std::optional<MultiPoly> poly;
  std::optional<QTScalar> scalar;
  std::optional<SymExpansion> expansion;
  std::optional<Report> report;
  std::string note;
};

QTScalar specialize(const QTScalar& c, const std::pair<Rational, Rational>& at) {
  return QTScalar(c.eval(at.first, at.second));
}

void specialize(Value& v, const std::pair<Rational, Rational>& at) {
  if (v.poly) {
    std::vector<MultiPoly::Term> terms;
    for (const auto& [mono, c] : v.poly->terms()) {
      QTScalar x = specialize(c, at);
      if (!x.is_zero()) terms.emplace_back(mono, std::move(x));
    }
    v.poly = MultiPoly::from_terms(v.poly->space(), std::move(terms));
  }
  if (v.scalar) v.scalar = specialize(*v.scalar, at);
  if (v.expansion) {
    SymExpansion e{v.expansion->basis, v.expansion->N, {}};
    for (const auto& [mu, c] : v.expansion->coeffs) e.add(mu, specialize(c, at));
    v.expansion = std::move(e);
  }
}

unsigned thread_count() {
  if (const char* env = std::getenv("MACRUI_THREADS")) {
    char* end = nullptr;
    const long k = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && k >= 1) return static_cast<unsigned>(k);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Value compute(const Params& p) {
  Value v;
  const Partition lambda = p.lambda ? parse_partition(*p.lambda) : Partition{};
  const Partition mu = p.mu ? parse_partition(*p.mu) : Partition{};
  const int N = p.N.value_or(lambda.length());
  const int n = p.n.value_or(0);
  const int m = p.m.value_or(0);
  const std::string basis = p.basis.value_or("poly");
  const std::string& verb = p.verb;

  if (verb == "macdonald") {
    if (basis == "poly") {
      v.poly = macdonald_P(lambda, N);
    } else {
      // Expansions default to the stable number of variables |lambda|.
      const int M = p.N.value_or(lambda.weight());
      if (lambda.length() > M) throw Error(ErrorKind::kInvalidArgument, "partition longer than N");
      SymExpansion e{Basis::kMonomial, M, {}};
      for (const auto& [nu, c] : macdonald_expansion(lambda).coeffs)
        if (nu.length() <= M) e.add(nu, c);
      v.expansion = basis == "m" ? e : m_to_p(e);
    }
  } else if (verb == "macdonald-comb") {
    v.poly = macdonald_P_combinatorial(lambda, N);
  } else if (verb == "skew") {
    v.poly = skew_P_combinatorial(lambda, mu, p.N.value_or(std::max(lambda.length(), 1)));
  } else if (verb == "super") {
    v.poly = super_P(lambda, n, m);
    if (!in_fat_hook(lambda, n, m)) v.note = "outside fat hook";
  } else if (verb == "super-comb") {
    v.poly = super_P_combinatorial(lambda, n, m);
  } else if (verb == "shifted") {
    if (basis == "poly") {
      v.poly = shifted_P_vanishing(lambda, N);
    } else {
      const int M = p.N.value_or(lambda.weight());
      if (lambda.length() > M) throw Error(ErrorKind::kInvalidArgument, "partition longer than N");
      SymExpansion e = shifted_expansion(lambda);
      e.N = M;
      v.expansion = std::move(e);
    }
  } else if (verb == "shifted-comb") {
    v.poly = shifted_P_combinatorial(lambda, N);
  } else if (verb == "shifted-super") {
    v.poly = shifted_super_P(lambda, n, m);
    if (!in_fat_hook(lambda, n, m)) v.note = "outside fat hook";
  } else if (verb == "shifted-super-comb") {
    v.poly = shifted_super_P_combinatorial(lambda, n, m);
  } else if (verb == "apply-mr") {
    const MultiPoly f = p.poly ? poly_from_json(Json::parse(read_poly_text(*p.poly)), VarSpace::z(N))
                               : monomial_sym(lambda, N);
    v.poly = apply_MR(f);
  } else if (verb == "apply-deformed-mr") {
    MultiPoly f(VarSpace::xy(n, m));
    if (p.poly) {
      f = poly_from_json(Json::parse(read_poly_text(*p.poly)), VarSpace::xy(n, m));
    } else {
      SymExpansion e{Basis::kPower, std::max(lambda.weight(), 1), {}};
      e.add(lambda, 1);
      f = phi(e, n, m);
    }
    v.poly = apply_deformed_MR(f);
  } else if (verb == "eigenvalue") {
    v.scalar = mr_eigenvalue(lambda);
  } else if (verb == "eval") {
    if (p.n) {
      v.scalar = evaluate(shifted_super_P(lambda, n, m), eval_F(mu, n, m));
    } else {
      const int M = p.N.value_or(std::max(lambda.length(), mu.length()));
      v.scalar = eval_at_partition(shifted_P_vanishing(lambda, M), mu, EvalBase::kQ);
    }
  } else if (verb == "verify") {
    v.report = run_suite(*p.suite, p.max_weight.value_or(4), thread_count());
  }
  if (p.at) specialize(v, parse_at(*p.at));
  return v;
}

Json request_json(const Params& p) {
  Json r{{"verb", p.verb}};
  auto part = [](const std::string& s) -> Json {
    try {
      return to_json(parse_partition(s));
    } catch (const Error&) {
      return s;
    }
  };
  if (p.lambda) r["lambda"] = part(*p.lambda);
  if (p.mu) r["mu"] = part(*p.mu);
  if (p.n) r["n"] = *p.n;
  if (p.m) r["m"] = *p.m;
  if (p.N) r["N"] = *p.N;
  if (p.suite) r["suite"] = *p.suite;
  if (p.max_weight) r["max_weight"] = *p.max_weight;
  if (p.basis) r["basis"] = *p.basis;
  if (p.at) r["at"] = *p.at;
  if (p.poly) r["poly"] = *p.poly;
  return r;
}

void print_text(const Value& v) {
  if (v.poly) std::cout << v.poly->to_string() << "\n";
  if (v.scalar) std::cout << v.scalar->to_string() << "\n";
  if (v.expansion) {
    std::cout << "basis " << to_string(v.expansion->basis) << ", N = " << v.expansion->N << "\n";
    for (const auto& [mu, c] : v.expansion->coeffs) std::cout << "  " << mu.to_string() << ": " << c.to_string() << "\n";
  }
  if (v.report) {
    for (const auto& c : v.report->checks) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.instance;
      if (!c.pass) std::cout << "  [" << c.witness << "]";
      std::cout << "\n";
    }
    std::cout << v.report->suite << ": " << v.report->passed() << " passed, " << v.report->failed() << " failed\n";
  }
  if (!v.note.empty()) std::cout << "note: " << v.note << "\n";
}

int emit_error(const Params& p, const std::string& kind, const std::string& message, int code) {
  if (p.format == "text") {
    std::cerr << "error (" << kind << "): " << message << "\n";
  } else {
    Json out{{"request", request_json(p)}, {"error", Json{{"kind", kind}, {"message", message}}}};
    std::cout << out.dump() << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  Params p;
  CLI::App app{"Exact Macdonald, super and shifted Macdonald polynomials and their operators"};
  std::vector<std::string> verbs;
  for (const auto& [v, flags] : verb_flags()) verbs.push_back(v);
  app.add_option("verb", p.verb, "What to compute")->required()->check(CLI::IsMember(verbs));
  app.add_option("--lambda", p.lambda, "Partition, comma separated (empty for the empty partition)");
  app.add_option("--mu", p.mu, "Second partition");
  app.add_option("--n", p.n, "Number of x variables");
  app.add_option("--m", p.m, "Number of y variables");
  app.add_option("--N", p.N, "Number of z variables (default: length of lambda)");
  app.add_option("--suite", p.suite, "Verification suite")->check(CLI::IsMember(suite_names()));
  app.add_option("--max-weight", p.max_weight, "Largest partition weight for verify (default 4)");
  app.add_option("--format", p.format, "json or text");
  app.add_option("--at", p.at, "Specialize q,t to rationals, e.g. 1/2,3");
  app.add_option("--poly", p.poly, "Input polynomial as JSON, or @file");
  app.add_option("--basis", p.basis, "poly, m, p (macdonald) or pstar (shifted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kBadRequest;
  }

  try {
    validate(p);
  } catch (const RequestError& e) {
    return emit_error(p, "invalid_request", e.what(), kBadRequest);
  }

  Value v;
  try {
    v = compute(p);
  } catch (const Error& e) {
    const int code = e.kind() == ErrorKind::kInvalidArgument ? kBadRequest : kComputeError;
    return emit_error(p, std::string(to_string(e.kind())), e.what(), code);
  } catch (const RequestError& e) {
    return emit_error(p, "invalid_request", e.what(), kBadRequest);
  } catch (const Json::exception& e) {
    return emit_error(p, "invalid_request", e.what(), kBadRequest);
  }

  if (p.format == "text") {
    print_text(v);
  } else {
    Json out{{"request", request_json(p)}};
    if (v.poly) out["result"] = to_json(*v.poly);
    if (v.scalar) out["result"] = to_json(*v.scalar);
    if (v.expansion) out["result"] = to_json(*v.expansion);
    if (v.report) out["result"] = to_json(*v.report);
    if (!v.note.empty()) out["note"] = v.note;
    std::cout << out.dump() << "\n";
  }
  return v.report && v.report->failed() > 0 ? kChecksFailed : kOk;
}
