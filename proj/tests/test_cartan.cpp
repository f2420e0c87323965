#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "qfold/cartan.hpp"

using namespace qf;

namespace {
CartanData c2() { return validate_cartan({{2, -1}, {-2, 2}}); }
CartanData g2row() { return validate_cartan({{2, -1}, {-3, 2}}); }
} // namespace

TEST_CASE("GCM validation and minimal symmetrizers") {
  CartanData a1 = validate_cartan({{2}});
  CHECK(a1.s == std::vector<long>{1});

  CHECK(c2().s == std::vector<long>{2, 1});
  CHECK(g2row().s == std::vector<long>{3, 1});
  CHECK(validate_cartan({{2, -2}, {-2, 2}}).s == std::vector<long>{1, 1});
  CHECK(validate_cartan({{2, -4}, {-2, 2}}).s == std::vector<long>{1, 2});

  CHECK_THROWS_WITH_AS(validate_cartan({{2, 1}, {1, 2}}), doctest::Contains("NotGCM"), Error);
  CHECK_THROWS_WITH_AS(validate_cartan({{2, -1}, {0, 2}}), doctest::Contains("NotGCM"), Error);
  CHECK_THROWS_WITH_AS(validate_cartan({{3}}), doctest::Contains("NotGCM"), Error);
  // symmetrizable on every rank-2 matrix; a genuinely non-symmetrizable cycle
  CHECK_THROWS_WITH_AS(
      validate_cartan({{2, -1, -2}, {-2, 2, -1}, {-1, -2, 2}}),
      doctest::Contains("NotSymmetrizable"), Error);
  // valid but non-minimal symmetrizer is rejected
  CHECK_THROWS_WITH_AS(validate_cartan({{2, -1}, {-1, 2}}, {{2, 2}}),
                       doctest::Contains("NotMinimalSymmetrizer"), Error);
}

TEST_CASE("D*B = C exactly for validated data") {
  for (const auto& C : std::vector<std::vector<std::vector<long>>>{
           {{2}}, {{2, -1}, {-2, 2}}, {{2, -1}, {-3, 2}}, {{2, -2}, {-2, 2}},
           {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}}) {
    CartanData cd = validate_cartan(C);
    for (int i = 0; i < cd.rank; ++i)
      for (int j = 0; j < cd.rank; ++j) {
        CHECK(cd.B[i][j] == cd.s[i] * cd.C[i][j]);
        CHECK(cd.B[i][j] == cd.B[j][i]);
      }
  }
}

TEST_CASE("pairings and the symmetric form") {
  CartanData cd = c2();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(pairing(cd, i, cd.fundamental(j)) == (i == j ? 1 : 0));
      CHECK(pairing(cd, i, cd.alpha(j)) == cd.C[i][j]);
    }
  CHECK(sym_form(cd, cd.alpha(0), cd.alpha(1)) == Rat(-2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(sym_form(cd, cd.alpha(i), cd.alpha(j)) == Rat(cd.B[i][j]));

  // sym_form(alpha_i, mu) = s_i <i, mu> on random weights
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> coord(-9, 9);
  for (int t = 0; t < 100; ++t) {
    Weight mu({coord(rng), coord(rng)});
    for (int i = 0; i < 2; ++i)
      CHECK(sym_form(cd, cd.alpha(i), mu) == Rat(cd.s[i] * pairing(cd, i, mu)));
  }
  CHECK(sym_form(cd, cd.fundamental(0), cd.fundamental(1)) ==
        sym_form(cd, cd.fundamental(1), cd.fundamental(0)));
}

TEST_CASE("exponent denominators") {
  CHECK(validate_cartan({{2}}).d == 2);           // (beta, beta) = 1/2
  CHECK(validate_cartan({{2, -1}, {-1, 2}}).d == 3);
  CHECK(c2().d == 1);
  CHECK(g2row().d == 1);
  // singular datum: d defaults to 1, fundamental weights not in root span
  CartanData aff = validate_cartan({{2, -2}, {-2, 2}});
  CHECK(aff.d == 1);
  CHECK_FALSE(aff.c_invertible);
  CHECK_THROWS_WITH_AS(sym_form(aff, aff.fundamental(0), aff.fundamental(0)),
                       doctest::Contains("NotInRootSpan"), Error);
  // but root-lattice pairings still work
  CHECK(sym_form(aff, aff.alpha(0), aff.alpha(1)) == Rat(-2));
}

TEST_CASE("dominance") {
  CartanData cd = c2();
  CHECK(is_dominant(cd, cd.fundamental(0)));
  CHECK_FALSE(is_dominant(cd, cd.zero() - cd.fundamental(0)));
  CHECK(is_dominant(cd, cd.fundamental(0) + 3 * cd.fundamental(1)));
}

TEST_CASE("minimal symmetrizer is permutation-equivariant") {
  std::vector<std::vector<long>> C = {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};
  CartanData base = validate_cartan(C);
  std::vector<int> perm = {0, 1, 2};
  std::mt19937 rng(17);
  for (int t = 0; t < 12; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<long>> P(3, std::vector<long>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) P[i][j] = C[perm[i]][perm[j]];
    CartanData cd = validate_cartan(P);
    for (int i = 0; i < 3; ++i) CHECK(cd.s[i] == base.s[perm[i]]);
  }
}
