#include <doctest.h>

#include <json.hpp>
#include <random>

#include "torelli/laurent.hpp"

using namespace torelli;
using nlohmann::json;

namespace {

using Rng = std::mt19937_64;

LaurentPoly random_poly(Rng& rng, int max_deg, int max_coeff) {
  std::uniform_int_distribution<int> exp(-max_deg, max_deg);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  std::uniform_int_distribution<int> nterms(0, 3);
  LaurentPoly p;
  int n = nterms(rng);
  for (int k = 0; k < n; ++k)
    p = p + LaurentPoly::monomial(coeff(rng), exp(rng));
  return p;
}

LaurentMatrix random_matrix(Rng& rng, int dim, int max_deg) {
  LaurentMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m.at(i, j) = random_poly(rng, max_deg, 4);
  return m;
}

const LaurentPoly one = LaurentPoly::constant(1);
const LaurentPoly t = LaurentPoly::t();
const LaurentPoly tinv = LaurentPoly::monomial(1, -1);

}  // namespace

TEST_CASE("polynomial arithmetic: pinned examples") {
  CHECK(t * tinv == one);
  CHECK((one + t) + (-(one + t)) == LaurentPoly());
  CHECK((one + t) * (one - t) == one - t * t);
}

TEST_CASE("zero coefficients are never stored") {
  LaurentPoly p = (one + t) - t;
  CHECK(p.terms().size() == 1);
  CHECK(((one + t) - (one + t)).terms().empty());
  CHECK(LaurentPoly::monomial(0, 5).is_zero());
}

TEST_CASE("commutative ring laws on random samples") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    LaurentPoly p = random_poly(rng, 4, 5);
    LaurentPoly q = random_poly(rng, 4, 5);
    LaurentPoly r = random_poly(rng, 4, 5);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == LaurentPoly());
  }
}

TEST_CASE("matrix identity laws") {
  Rng rng(12);
  LaurentMatrix a = random_matrix(rng, 3, 2);
  CHECK(a * LaurentMatrix::identity(3) == a);
  CHECK(LaurentMatrix::identity(3) * LaurentMatrix::identity(3) ==
        LaurentMatrix::identity(3));
}

TEST_CASE("matrix multiplication is associative on random samples") {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    LaurentMatrix a = random_matrix(rng, 3, 2);
    LaurentMatrix b = random_matrix(rng, 3, 2);
    LaurentMatrix c = random_matrix(rng, 3, 2);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("matrix dimension mismatch is rejected") {
  CHECK_THROWS_AS(LaurentMatrix(2) * LaurentMatrix(3), std::invalid_argument);
  CHECK_THROWS_AS(LaurentMatrix(0), std::invalid_argument);
}

TEST_CASE("evaluation: pinned examples") {
  CHECK(evaluate_at(LaurentMatrix::identity(4), -1) == IntMatrix::identity(4));
  LaurentMatrix m(1);
  m.at(0, 0) = LaurentPoly::monomial(-1, 1);  // -t
  IntMatrix e = evaluate_at(m, -1);
  CHECK(e.at(0, 0) == 1);
}

TEST_CASE("evaluation rejects non-unit points") {
  LaurentMatrix m = LaurentMatrix::identity(2);
  CHECK_THROWS_AS(evaluate_at(m, 0), std::domain_error);
  CHECK_THROWS_AS(evaluate_at(m, 2), std::domain_error);
  CHECK_THROWS_AS(LaurentPoly::t().evaluate(-3), std::domain_error);
}

TEST_CASE("evaluation is a ring homomorphism on random samples") {
  Rng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentMatrix a = random_matrix(rng, 3, 3);
    LaurentMatrix b = random_matrix(rng, 3, 3);
    for (int t0 : {+1, -1}) {
      CHECK(evaluate_at(a * b, t0) == evaluate_at(a, t0) * evaluate_at(b, t0));
    }
  }
}

TEST_CASE("integer determinant helper") {
  IntMatrix m(2);
  m.at(0, 0) = 3;
  m.at(0, 1) = 7;
  m.at(1, 0) = 1;
  m.at(1, 1) = 4;
  CHECK(m.determinant() == 5);
  CHECK(IntMatrix::identity(5).determinant() == 1);
  IntMatrix swap2(2);
  swap2.at(0, 1) = 1;
  swap2.at(1, 0) = 1;
  CHECK(swap2.determinant() == -1);
  CHECK(IntMatrix(3).determinant() == 0);
}

TEST_CASE("polynomial text form") {
  CHECK(LaurentPoly().str() == "0");
  CHECK(t.str() == "t");
  CHECK((-t).str() == "-t");
  CHECK((one + t * t).str() == "t^2 + 1");
  CHECK(tinv.str() == "t^-1");
  CHECK(LaurentPoly::monomial(-3, 2).str() == "-3t^2");
  CHECK((t - one).str() == "t - 1");
}

TEST_CASE("JSON forms parse and carry exponent-sorted pairs") {
  LaurentMatrix m(2);
  m.at(0, 0) = t + tinv;
  m.at(1, 0) = LaurentPoly::constant(-2);
  json parsed = json::parse(m.json());
  CHECK(parsed["dim"] == 2);
  CHECK(parsed["entries"][0][0] == json::parse("[[-1,1],[1,1]]"));
  CHECK(parsed["entries"][0][1] == json::parse("[]"));
  CHECK(parsed["entries"][1][0] == json::parse("[[0,-2]]"));

  IntMatrix e = IntMatrix::identity(2);
  CHECK(json::parse(e.json()) == json::parse("[[1,0],[0,1]]"));
}
