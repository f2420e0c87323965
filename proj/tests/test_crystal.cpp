#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfold/crystal.hpp"
#include "qfold/module.hpp"
#include "qfold/oracle.hpp"
#include "qfold/quiver.hpp"
#include "qfold/tensor.hpp"

using namespace qf;

namespace {

CartanData a1() { return validate_cartan({{2}}); }
CartanData c2() { return validate_cartan({{2, -1}, {-2, 2}}); }
CartanData g2row() { return validate_cartan({{2, -1}, {-3, 2}}); }
CartanData affine_a1() { return validate_cartan({{2, -2}, {-2, 2}}); }

Weight fundamental_with_dim(const CartanData& cd, long dim) {
  for (int i = 0; i < cd.rank; ++i)
    if (weyl_dim(cd, cd.fundamental(i)) == dim) return cd.fundamental(i);
  FAIL("no fundamental weight of dimension " << dim);
  return cd.zero();
}

// unfolded datum and index permutation from the canonical quiver layout
struct Unfolded {
  CartanData hat;
  std::vector<int> a;
};
Unfolded unfold(const CartanData& cd) {
  Quiver q = fold_from_cartan(cd);
  return {unfolded_cartan(q), q.a_vertex};
}

// lift a folded dominant weight through the orbit map (vertex v belongs to
// orbit orbit_of[v], ordered compatibly with fold_from_cartan's layout)
Weight unfold_weight(const CartanData& cd, const Weight& lambda) {
  Quiver q = fold_from_cartan(cd);
  Weight hat(std::vector<long>(static_cast<size_t>(q.nv), 0));
  for (int v = 0; v < q.nv; ++v)
    hat.c[static_cast<size_t>(v)] =
        lambda.c[static_cast<size_t>(q.orbit_of[static_cast<size_t>(v)])];
  return hat;
}

} // namespace

TEST_CASE("sl2 strings as crystals") {
  Crystal b = build_crystal(a1(), Weight({2}), 8);
  CHECK(b.complete);
  CHECK(b.size() == 3);
  CHECK(b.f(0, 0) == 1);
  CHECK(b.f(0, 1) == 2);
  CHECK(b.f(0, 2) == -1);
  CHECK(b.e(0, 0) == -1);
  // string data
  StringData top = string_data(b, 0, 0);
  CHECK(top.eps == 0);
  CHECK(top.phi == 2);
  StringData bottom = string_data(b, 2, 0);
  CHECK(bottom.eps == 2);
  CHECK(bottom.phi == 0);
  CHECK(bottom.top == 0);
  CHECK_THROWS_WITH_AS(build_crystal(a1(), Weight({-1}), 3),
                       doctest::Contains("NotDominant"), Error);
}

TEST_CASE("crystal counts match module characters") {
  struct Case {
    CartanData cd;
    Weight lambda;
    long depth;
  };
  std::vector<Case> cases = {
      {c2(), fundamental_with_dim(c2(), 4), 12},
      {c2(), fundamental_with_dim(c2(), 5), 12},
      {c2(), c2().fundamental(0) + c2().fundamental(1), 12},
      {g2row(), g2row().fundamental(g2row().s[0] == 1 ? 0 : 1), 12},
      {affine_a1(), affine_a1().fundamental(0), 4},
  };
  for (const auto& tc : cases) {
    Crystal b = build_crystal(tc.cd, tc.lambda, tc.depth);
    CharacterTable oracle = freudenthal_character(tc.cd, tc.lambda, tc.depth);
    auto ch = b.character();
    CHECK(ch == oracle.mult);
    // phi - eps = <i, wt> on every vertex
    for (int v = 0; v < b.size(); ++v)
      for (int i = 0; i < tc.cd.rank; ++i)
        CHECK(b.verts[v].phi[i] - b.verts[v].eps[i] == pairing(tc.cd, i, b.verts[v].wt));
  }
}

TEST_CASE("G2 short fundamental crystal has 7 vertices") {
  CartanData g = g2row();
  int short_node = g.s[0] == 1 ? 0 : 1;
  Crystal b = build_crystal(g, g.fundamental(short_node), 12);
  CHECK(b.complete);
  CHECK(b.size() == 7);
}

TEST_CASE("tensor crystals decompose like tensor modules") {
  // A1: B(1) ⊗ B(1) = B(2) + B(0)
  Crystal b1 = build_crystal(a1(), Weight({1}), 4);
  Crystal t = tensor_crystal(b1, b1);
  CHECK(t.size() == 4);
  auto dec = decompose_by_highest_weight(t);
  CHECK(dec.size() == 2);
  CHECK(dec.at({0}) == 1);
  CHECK(dec.at({1}) == 1);

  // unit object
  Crystal b0 = build_crystal(a1(), Weight({0}), 2);
  Crystal tb0 = tensor_crystal(b1, b0);
  auto iso = crystal_isomorphic(tb0, b1);
  CHECK(iso.has_value());
  Crystal b0t = tensor_crystal(b0, b1);
  CHECK(crystal_isomorphic(b0t, b1).has_value());

  // A1 (2,1): B(2) ⊗ B(1) = B(3) + B(1)
  Crystal b2 = build_crystal(a1(), Weight({2}), 6);
  auto dec21 = decompose_by_highest_weight(tensor_crystal(b2, b1));
  CHECK(dec21.size() == 2);
  CHECK(dec21.at({0}) == 1);
  CHECK(dec21.at({1}) == 1);

  // module side comparison on C2
  CartanData cd = c2();
  Weight f4 = fundamental_with_dim(cd, 4);
  HWModule m4 = build_module(cd, f4, 12);
  TensorModule tm = tensor_module({&m4, &m4});
  auto mod_dec = decompose_tensor_module(tm);
  Crystal c4 = build_crystal(cd, f4, 12);
  auto cry_dec = decompose_by_highest_weight(tensor_crystal(c4, c4));
  CHECK(mod_dec == cry_dec);
}

TEST_CASE("tensor rule is associative up to isomorphism") {
  Crystal x = build_crystal(a1(), Weight({1}), 4);
  Crystal y = build_crystal(a1(), Weight({2}), 6);
  Crystal z = build_crystal(a1(), Weight({1}), 4);
  Crystal lhs = tensor_crystal(tensor_crystal(x, y), z);
  Crystal rhs = tensor_crystal(x, tensor_crystal(y, z));
  CHECK(crystal_isomorphic(lhs, rhs).has_value());

  CartanData cd = c2();
  Crystal u = build_crystal(cd, fundamental_with_dim(cd, 4), 12);
  Crystal lhs2 = tensor_crystal(tensor_crystal(u, u), u);
  Crystal rhs2 = tensor_crystal(u, tensor_crystal(u, u));
  CHECK(crystal_isomorphic(lhs2, rhs2).has_value());
}

TEST_CASE("isomorphism detects genuine differences") {
  Crystal b2 = build_crystal(a1(), Weight({2}), 6);
  Crystal b1 = build_crystal(a1(), Weight({1}), 4);
  CHECK_FALSE(crystal_isomorphic(b2, tensor_crystal(b1, b1)).has_value());
  CHECK(crystal_isomorphic(b2, b2).has_value());
}

TEST_CASE("folding the A3 crystal with the arm swap gives C2 crystals") {
  CartanData cd = c2();
  Unfolded u = unfold(cd);
  REQUIRE(u.hat.rank == 3);
  for (int k = 0; k < 2; ++k) {
    Weight lam = cd.fundamental(k);
    Weight lam_hat = unfold_weight(cd, lam);
    Crystal bhat = build_crystal(u.hat, lam_hat, 24);
    REQUIRE(bhat.complete);
    Crystal folded = fold_crystal(bhat, u.a);
    CHECK(folded.cd.C == cd.C);
    Crystal direct = build_crystal(cd, lam, 24);
    auto iso = crystal_isomorphic(folded, direct);
    CHECK(iso.has_value());
  }
  // trivial automorphism folds to the identity
  Crystal base = build_crystal(cd, cd.fundamental(0), 12);
  // (folding needs a simply-laced source; use A3 with the identity instead)
  Crystal bhat = build_crystal(u.hat, unfold_weight(cd, cd.fundamental(1)), 24);
  Crystal same = fold_crystal(bhat, {0, 1, 2});
  CHECK(crystal_isomorphic(same, bhat).has_value());
  (void)base;
}

TEST_CASE("folding the D4 star with triality gives the G2 7-dim crystal") {
  CartanData g = g2row();
  Unfolded u = unfold(g);
  REQUIRE(u.hat.rank == 4);
  int short_node = g.s[0] == 1 ? 0 : 1;
  Weight lam = g.fundamental(short_node);
  Crystal bhat = build_crystal(u.hat, unfold_weight(g, lam), 24);
  REQUIRE(bhat.complete);
  CHECK(bhat.size() == 28);
  Crystal folded = fold_crystal(bhat, u.a);
  CHECK(folded.size() == 7);
  Crystal direct = build_crystal(g, lam, 24);
  CHECK(crystal_isomorphic(folded, direct).has_value());
}

TEST_CASE("window stabilization towards the limit crystal") {
  CartanData cd = c2();
  Weight l3 = 3 * (cd.fundamental(0) + cd.fundamental(1));
  Weight l4 = 4 * (cd.fundamental(0) + cd.fundamental(1));
  Crystal b3 = build_crystal(cd, l3, 3);
  Crystal b4 = build_crystal(cd, l4, 3);
  CHECK(crystal_window_match(b3, b4, 3));
  // sanity: the window counts differ from a small-lambda crystal
  Crystal small = build_crystal(cd, cd.fundamental(0), 3);
  CHECK_FALSE(crystal_window_match(b3, small, 3));
}

TEST_CASE("non-invariant highest weight is rejected") {
  CartanData cd = c2();
  Unfolded u = unfold(cd);
  // A3 weight that is not a-invariant: fundamental at one swapped arm
  Weight bad(std::vector<long>(3, 0));
  bad.c[0] = 1;
  Crystal bhat = build_crystal(u.hat, bad, 12);
  CHECK_THROWS_WITH_AS(fold_crystal(bhat, u.a),
                       doctest::Contains("NonInvariantHighestWeight"), Error);
}
