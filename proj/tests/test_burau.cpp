#include <doctest.h>

#include "test_support.hpp"
#include "torelli/burau.hpp"

using namespace torelli;
using namespace torelli::testing;

namespace {

LaurentPoly c(long long v) { return LaurentPoly::constant(v); }
LaurentPoly mono(long long v, int e) { return LaurentPoly::monomial(v, e); }

const BraidWord full_twist_b3 = BraidWord(3, {1, 2, 1, 2, 1, 2});

}  // namespace

TEST_CASE("generator matrices under the fixed convention") {
  LaurentMatrix s1 = burau_generator(3, 1, +1);
  CHECK(s1.at(0, 0) == mono(-1, 1));
  CHECK(s1.at(0, 1) == c(1));
  CHECK(s1.at(1, 0) == c(0));
  CHECK(s1.at(1, 1) == c(1));

  LaurentMatrix s2 = burau_generator(3, 2, +1);
  CHECK(s2.at(0, 0) == c(1));
  CHECK(s2.at(0, 1) == c(0));
  CHECK(s2.at(1, 0) == mono(1, 1));
  CHECK(s2.at(1, 1) == mono(-1, 1));
}

TEST_CASE("inverse generators multiply to the identity") {
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i <= n - 1; ++i) {
      LaurentMatrix prod =
          burau_generator(n, i, +1) * burau_generator(n, i, -1);
      CHECK(prod == LaurentMatrix::identity(n - 1));
    }
  }
}

TEST_CASE("generator index range is checked") {
  CHECK_THROWS_AS(burau_generator(3, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(burau_generator(3, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(burau_generator(1, 1, 1), std::invalid_argument);
}

TEST_CASE("braid relations hold exactly at the Laurent level") {
  for (int n = 3; n <= 6; ++n) {
    for (int i = 1; i + 1 <= n - 1; ++i) {
      BraidWord lhs(n, {i, i + 1, i});
      BraidWord rhs(n, {i + 1, i, i + 1});
      CHECK(burau(lhs) == burau(rhs));
    }
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j)
        CHECK(burau(BraidWord(n, {i, j})) == burau(BraidWord(n, {j, i})));
  }
}

TEST_CASE("identity braid maps to the identity matrix") {
  CHECK(burau(BraidWord(4)) == LaurentMatrix::identity(3));
}

TEST_CASE("full twist in B_3: -I at t = -1, so outside the kernel") {
  IntMatrix m = burau_at(full_twist_b3, -1);
  CHECK(m == -IntMatrix::identity(2));
  CHECK(is_pure(full_twist_b3));
  CHECK_FALSE(in_burau_kernel(full_twist_b3));
}

TEST_CASE("squared full twist in B_3 lies in the kernel") {
  BraidWord w = full_twist_b3 * full_twist_b3;
  CHECK(burau_at(w, -1).is_identity());
  CHECK(in_burau_kernel(w));
  CHECK(in_burau_kernel(BraidWord(3)));
}

TEST_CASE("representation property on random pairs") {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + trial % 5;
    BraidWord u = random_braid(rng, n, trial % 13);
    BraidWord v = random_braid(rng, n, (trial + 4) % 13);
    CHECK(burau(u * v) == burau(u) * burau(v));
  }
}

TEST_CASE("specializing the product equals specializing generator-wise") {
  Rng rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    BraidWord w = random_braid(rng, 4, trial % 12);
    CHECK(burau_at(w, -1) == evaluate_at(burau(w), -1));
    CHECK(burau_at(w, 1) == evaluate_at(burau(w), 1));
  }
}

TEST_CASE("induced permutations") {
  CHECK(permutation(BraidWord(3, {1})).str() == "(1 2)");
  CHECK(permutation(BraidWord(3, {1, 1})).is_identity());
  CHECK(is_pure(BraidWord(3, {1, 1})));
  CHECK(permutation(full_twist_b3).is_identity());
}

TEST_CASE("permutation composition convention: words act left to right") {
  Rng rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + trial % 4;
    BraidWord u = random_braid(rng, n, trial % 9);
    BraidWord v = random_braid(rng, n, (trial + 2) % 9);
    CHECK(permutation(u * v) == permutation(u).then(permutation(v)));
  }
  // concrete witness that the order matters: s1 s2 sends 1 -> 3
  CHECK(permutation(BraidWord(3, {1, 2})).image_of(1) == 3);
  CHECK(permutation(BraidWord(3, {1, 2})).image_of(3) == 2);
}

TEST_CASE("center words") {
  CHECK(center_word(3) == full_twist_b3);
  for (int n = 2; n <= 6; ++n) {
    CHECK(permutation(center_word(n)).is_identity());
  }
}

TEST_CASE("pure braid generators") {
  CHECK(pure_generator(3, 1, 2) == BraidWord(3, {1, 1}));
  CHECK(pure_generator(4, 1, 3) == BraidWord(4, {2, 1, 1, -2}));
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) CHECK(is_pure(pure_generator(n, i, j)));
  CHECK_THROWS_AS(pure_generator(3, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(pure_generator(3, 1, 4), std::invalid_argument);
}

TEST_CASE("kernel membership is stable under products, inverses, conjugation") {
  Rng rng(34);
  BraidWord k = full_twist_b3 * full_twist_b3;  // in K_3
  for (int trial = 0; trial < 40; ++trial) {
    BraidWord a = random_braid(rng, 3, 1 + trial % 8);
    BraidWord x = a * k * a.inverse();
    CHECK(in_burau_kernel(x));
    CHECK(in_burau_kernel(x.inverse()));
    BraidWord b = random_braid(rng, 3, trial % 8);
    CHECK(in_burau_kernel((b * k * b.inverse()) * x));
  }
}

TEST_CASE("braid parsing and printing") {
  BraidWord w = BraidWord::parse("s1 s2^-1", 3);
  CHECK(w.letters() == std::vector<Letter>{1, -2});
  CHECK(w.str() == "s1 s2^-1");
  CHECK(BraidWord::parse("s1 s1^-1", 3).is_identity());
  CHECK_THROWS_AS(BraidWord::parse("s3", 3), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("z1", 3), ParseError);
  CHECK_THROWS_AS(BraidWord(3, {3}), std::invalid_argument);
}
