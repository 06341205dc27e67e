#include <doctest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

#include "macrui/json_io.hpp"
#include "macrui/macdonald.hpp"
#include "macrui/operators.hpp"
#include "macrui/shifted.hpp"

using namespace macrui;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + MACRUI_CLI + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), k);
  const int st = pclose(pipe);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

Json run_json(const std::string& args, int expected_status = 0) {
  const Run r = run(args);
  CHECK(r.status == expected_status);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("macdonald verb emits P") {
  const Json j = run_json("macdonald --lambda 2 --N 2 --format json");
  CHECK(j.at("request").at("lambda") == Json::parse("[2]"));
  const auto S = VarSpace::z(2);
  CHECK(poly_from_json(j.at("result"), S) == macdonald_P({2}, 2));
}

TEST_CASE("default N is the length of lambda") {
  const Json j = run_json("macdonald --lambda 2,1");
  CHECK(poly_from_json(j.at("result"), VarSpace::z(2)) == macdonald_P({2, 1}, 2));
}

TEST_CASE("super verb outside the hook") {
  const Json j = run_json("super --lambda 2,2 --n 1 --m 1");
  CHECK(j.at("result").empty());
  CHECK(j.at("note") == "outside fat hook");
}

TEST_CASE("combinatorial verbs agree with the algebraic ones") {
  const auto S = VarSpace::xy(2, 1);
  CHECK(poly_from_json(run_json("super-comb --lambda 2,1,1 --n 2 --m 1").at("result"), S) == super_P({2, 1, 1}, 2, 1));
  CHECK(poly_from_json(run_json("shifted-super-comb --lambda 2,1 --n 2 --m 1").at("result"), S) ==
        shifted_super_P({2, 1}, 2, 1));
  const auto Z = VarSpace::z(3);
  CHECK(poly_from_json(run_json("shifted-comb --lambda 2,1 --N 3").at("result"), Z) == shifted_P_vanishing({2, 1}, 3));
  CHECK(poly_from_json(run_json("macdonald-comb --lambda 2,1 --N 3").at("result"), Z) == macdonald_P({2, 1}, 3));
}

TEST_CASE("scalar verbs") {
  CHECK(scalar_from_json(run_json("eigenvalue --lambda 2").at("result")) == -(1 + QTScalar::q()));
  const QTScalar q = QTScalar::q();
  const QTScalar t = QTScalar::t();
  CHECK(scalar_from_json(run_json("eval --lambda 1 --mu 2,1").at("result")) == (q * q - 1) + (q - 1) * t);
  CHECK(scalar_from_json(run_json("eval --lambda 2 --mu 2 --N 2").at("result")) == hook_H({2}));
  CHECK(scalar_from_json(run_json("eval --lambda 1 --mu 1 --n 1 --m 1").at("result")) == q - 1);
}

TEST_CASE("operator verbs") {
  const auto Z = VarSpace::z(2);
  CHECK(poly_from_json(run_json("apply-mr --lambda 1,1 --N 2").at("result"), Z) == apply_MR(monomial_sym({1, 1}, 2)));
  const std::string input = to_json(macdonald_P({2}, 2)).dump();
  const Json j = run_json("apply-mr --N 2 --poly '" + input + "'");
  CHECK(poly_from_json(j.at("result"), Z) == macdonald_P({2}, 2) * mr_eigenvalue({2}));
  const auto S = VarSpace::xy(1, 1);
  SymExpansion p1{Basis::kPower, 1, {}};
  p1.add({1}, 1);
  CHECK(poly_from_json(run_json("apply-deformed-mr --lambda 1 --n 1 --m 1").at("result"), S) ==
        apply_deformed_MR(phi(p1, 1, 1)));
}

TEST_CASE("expansion output") {
  const Json j = run_json("macdonald --lambda 2 --basis m");
  CHECK(expansion_from_json(j.at("result")) == macdonald_expansion({2}));
  const Json s = run_json("shifted --lambda 1,1 --basis pstar");
  CHECK(expansion_from_json(s.at("result")).coeffs == shifted_expansion({1, 1}).coeffs);
}

TEST_CASE("numeric specialization") {
  const Json j = run_json("eigenvalue --lambda 2 --at 1/2,3");
  CHECK(scalar_from_json(j.at("result")) == QTScalar(Rational(-3, 2)));
  // t = q is a pole of P_(2).
  const Run r = run("macdonald --lambda 2 --N 2 --at 2,2");
  CHECK(r.status == 3);
  CHECK(Json::parse(r.out).at("error").at("kind") == "pole");
}

TEST_CASE("verify suites") {
  const Json j = run_json("verify --suite eigen --max-weight 4");
  CHECK(j.at("result").at("failed") == 0);
  CHECK(j.at("result").at("passed").get<int>() > 0);
  for (const char* suite : {"kernel", "identities", "cherednik", "duality", "vanishing", "combinatorial", "commdia"}) {
    const Json r = run_json(std::string("verify --suite ") + suite + " --max-weight 2");
    CHECK(r.at("result").at("failed") == 0);
  }
}

TEST_CASE("output is deterministic across runs and thread counts") {
  const Run a = run("verify --suite kernel --max-weight 3", "MACRUI_THREADS=1");
  const Run b = run("verify --suite kernel --max-weight 3", "MACRUI_THREADS=4");
  CHECK(a.out == b.out);
  CHECK(run("super --lambda 2,1 --n 1 --m 1").out == run("super --lambda 2,1 --n 1 --m 1").out);
}

TEST_CASE("request errors") {
  Run r = run("macdonald --lambda 1,2");
  CHECK(r.status == 2);
  CHECK(Json::parse(r.out).at("error").at("kind") == "invalid_argument");
  r = run("macdonald --lambda 2 --n 1");
  CHECK(r.status == 2);
  CHECK(Json::parse(r.out).at("error").at("kind") == "invalid_request");
  r = run("super --lambda 2");
  CHECK(r.status == 2);
  r = run("skew --lambda 2 --mu 3");
  CHECK(r.status == 2);
  r = run("super-comb --lambda 2,2 --n 1 --m 1");
  CHECK(r.status == 2);
  r = run("apply-mr --N 2 --poly '[{\"exp\":[1,0],\"coeff\":{\"num\":[[0,0,\"1\"]],\"den\":[[0,0,\"1\"]]}}]'");
  CHECK(r.status == 3);
  CHECK(Json::parse(r.out).at("error").at("kind") == "non_divisible");
  r = run("nonsense");
  CHECK(r.status == 2);
  r = run("verify --suite nonsense");
  CHECK(r.status == 2);
}

TEST_CASE("text format") {
  const Run r = run("eigenvalue --lambda 1,1 --format text");
  CHECK(r.status == 0);
  CHECK(r.out == "-1 - t\n");
}
