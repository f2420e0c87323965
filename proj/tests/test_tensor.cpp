#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfold/oracle.hpp"
#include "qfold/tensor.hpp"

using namespace qf;

namespace {

CartanData a1() { return validate_cartan({{2}}); }
CartanData c2() { return validate_cartan({{2, -1}, {-2, 2}}); }

Weight fundamental_with_dim(const CartanData& cd, long dim) {
  for (int i = 0; i < cd.rank; ++i)
    if (weyl_dim(cd, cd.fundamental(i)) == dim) return cd.fundamental(i);
  FAIL("no fundamental weight of dimension " << dim);
  return cd.zero();
}

} // namespace

TEST_CASE("tensor grading and characters") {
  HWModule m1 = build_module(a1(), Weight({1}), 4);
  TensorModule t = tensor_module({&m1, &m1});
  CHECK(t.space->total_dim() == 4);
  auto ch = t.character();
  CHECK(ch.at({0}) == 1);
  CHECK(ch.at({1}) == 2);
  CHECK(ch.at({2}) == 1);
  // product of factor characters
  CharacterTable c = freudenthal_character(a1(), Weight({1}), 8);
  CharacterTable conv = char_convolve(a1(), c, c);
  for (const auto& [nu, mult] : conv.mult) CHECK(ch.at(nu) == mult);

  // C2 pair: convolution matches the product grading
  CartanData cd = c2();
  HWModule f4 = build_module(cd, fundamental_with_dim(cd, 4), 12);
  HWModule f5 = build_module(cd, fundamental_with_dim(cd, 5), 12);
  TensorModule tc = tensor_module({&f4, &f5});
  CharacterTable c4 = freudenthal_character(cd, f4.lambda, 12);
  CharacterTable c5 = freudenthal_character(cd, f5.lambda, 12);
  CharacterTable cc = char_convolve(cd, c4, c5);
  auto chc = tc.character();
  for (const auto& [nu, mult] : cc.mult) CHECK(chc.at(nu) == mult);
  CHECK_THROWS_WITH_AS(tensor_module({&m1, &f4}), doctest::Contains("CartanMismatch"),
                       Error);
}

TEST_CASE("coproduct action satisfies the defining relations") {
  HWModule m1 = build_module(a1(), Weight({1}), 4);
  HWModule m2 = build_module(a1(), Weight({2}), 6);
  TensorModule t = tensor_module({&m1, &m2});
  Report rep = verify_tensor_relations(t);
  for (const auto& item : rep.items) {
    INFO(item.name);
    CHECK(item.pass);
  }
  CartanData cd = c2();
  HWModule f4 = build_module(cd, fundamental_with_dim(cd, 4), 12);
  TensorModule t2 = tensor_module({&f4, &f4});
  Report rep2 = verify_tensor_relations(t2);
  for (const auto& item : rep2.items) {
    INFO(item.name);
    CHECK(item.pass);
  }
}

TEST_CASE("quasi-R-matrix on the sl2 square") {
  HWModule m = build_module(a1(), Weight({1}), 4);
  TensorModule t = tensor_module({&m, &m});
  GradedOp theta = compute_theta(t, 4);
  // Theta = 1 + (v^{-1} - v) F ⊗ E: the single nontrivial block maps the
  // component (top, lowered) to (lowered, top)
  int src = t.space->find({0, 1});
  int dst = t.space->find({1, 0});
  REQUIRE(src >= 0);
  REQUIRE(dst >= 0);
  const RMat* blk = theta.block(src, dst);
  REQUIRE(blk != nullptr);
  long d = m.cd.d;
  RatFunc c = blk->at(0, 0);
  RatFunc vm = RatFunc::v_power(-d, d) - RatFunc::v_power(d, d);
  CHECK((c == vm || c == -vm));
  // diagonal blocks are identities
  for (size_t k = 0; k < t.space->comps.size(); ++k) {
    const RMat* dblk = theta.block(static_cast<int>(k), static_cast<int>(k));
    REQUIRE(dblk != nullptr);
    CHECK(*dblk == RMat::identity(t.space->comps[k].dim, d));
  }
  // Psi^2 = id  <=>  Theta bar(Theta) = id
  GradedOp psi = psi_operator(t, theta);
  GradedOp psi2 = psi.compose(psi);
  CHECK_FALSE(psi.semilinear == false);
  CHECK(psi2.semilinear == false);
  CHECK(psi2.is_identity());
}

TEST_CASE("Psi intertwines the bar-twisted action") {
  CartanData cd = c2();
  HWModule f4 = build_module(cd, fundamental_with_dim(cd, 4), 12);
  TensorModule t = tensor_module({&f4, &f4});
  GradedOp theta = compute_theta(t, 16);
  GradedOp psi = psi_operator(t, theta);
  CHECK(psi.compose(psi).is_identity());
  for (int i = 0; i < cd.rank; ++i) {
    // bar(E_i) = E_i and bar(F_i) = F_i: Psi commutes with both images
    CHECK(psi.compose(t.deltaE(i)).equals(t.deltaE(i).compose(psi)));
    CHECK(psi.compose(t.deltaF(i)).equals(t.deltaF(i).compose(psi)));
    // Psi Delta(K~_i) = Delta(K~_{-i}) Psi
    CHECK(psi.compose(t.ktilde(i, +1)).equals(t.ktilde(i, -1).compose(psi)));
  }
}

TEST_CASE("braiding intertwines the coproduct action") {
  HWModule m = build_module(a1(), Weight({1}), 4);
  TensorModule tij = tensor_module({&m, &m});
  TensorModule tji = tensor_module({&m, &m});
  GradedOp R = braiding(tij, tji, 4);
  long d = m.cd.d;
  // R(v ⊗ v) = v^{-(lambda, lambda)} v ⊗ v with (lambda, lambda) = 1/2
  int top = tij.space->find({0, 0});
  const RMat* tb = R.block(top, top);
  REQUIRE(tb != nullptr);
  CHECK(tb->at(0, 0) == RatFunc::v_power(-1, d)); // exponent -1/2 scaled by d=2
  for (int i = 0; i < m.cd.rank; ++i) {
    CHECK(R.compose(tij.deltaE(i)).equals(tji.deltaE(i).compose(R)));
    CHECK(R.compose(tij.deltaF(i)).equals(tji.deltaF(i).compose(R)));
    CHECK(R.compose(tij.ktilde(i, 1)).equals(tji.ktilde(i, 1).compose(R)));
  }
  GradedOp Rinv = braiding_inverse(tij, tji, 4);
  CHECK(Rinv.compose(R).is_identity());
  CHECK(R.compose(Rinv).is_identity());
}

TEST_CASE("braiding across distinct factors") {
  CartanData cd = c2();
  HWModule f4 = build_module(cd, fundamental_with_dim(cd, 4), 12);
  HWModule f5 = build_module(cd, fundamental_with_dim(cd, 5), 12);
  TensorModule tij = tensor_module({&f4, &f5});
  TensorModule tji = tensor_module({&f5, &f4});
  GradedOp R = braiding(tij, tji, 16);
  for (int i = 0; i < cd.rank; ++i) {
    CHECK(R.compose(tij.deltaE(i)).equals(tji.deltaE(i).compose(R)));
    CHECK(R.compose(tij.deltaF(i)).equals(tji.deltaF(i).compose(R)));
  }
  CHECK(braiding_inverse(tij, tji, 16).compose(R).is_identity());
  // unit factor: R = identity up to the trivial scalar
  HWModule unit = build_module(cd, cd.zero(), 2);
  TensorModule tu = tensor_module({&f4, &unit});
  TensorModule ut = tensor_module({&unit, &f4});
  GradedOp Ru = braiding(tu, ut, 16);
  for (const auto& [k, blk] : Ru.blocks)
    for (int r = 0; r < blk.rows(); ++r)
      for (int c = 0; c < blk.cols(); ++c)
        CHECK((blk.at(r, c).is_zero() || blk.at(r, c).is_one()));
}

TEST_CASE("Yang-Baxter on sl2 (1,1,1)") {
  Report rep = verify_yang_baxter(a1(), Weight({1}), Weight({1}), Weight({1}), 6);
  for (const auto& item : rep.items) {
    INFO(item.name << " " << item.detail);
    CHECK(item.pass);
  }
}

TEST_CASE("tensor decomposition by singular vectors") {
  // L(lambda) ⊗ L(0) = L(lambda)
  CartanData cd = c2();
  HWModule f4 = build_module(cd, fundamental_with_dim(cd, 4), 12);
  HWModule unit = build_module(cd, cd.zero(), 2);
  TensorModule tu = tensor_module({&f4, &unit});
  auto dec = decompose_tensor_module(tu);
  CHECK(dec.size() == 1);
  CHECK(dec.at({0, 0}) == 1);

  // A1: L(1) ⊗ L(1) = L(2) + L(0)
  HWModule m = build_module(a1(), Weight({1}), 4);
  TensorModule t = tensor_module({&m, &m});
  auto d2 = decompose_tensor_module(t);
  CHECK(d2.size() == 2);
  CHECK(d2.at({0}) == 1);
  CHECK(d2.at({1}) == 1); // singular vector at total weight 0 = (1+1) - alpha
}

TEST_CASE("product form is contravariant for the coproduct") {
  HWModule m = build_module(a1(), Weight({1}), 4);
  TensorModule t = tensor_module({&m, &m});
  TensorGram g = tensor_form(t);
  Report rep = verify_tensor_contravariance(t, g);
  for (const auto& item : rep.items) {
    INFO(item.name << " " << item.detail);
    CHECK(item.pass);
  }
  CartanData cd = c2();
  HWModule f4 = build_module(cd, fundamental_with_dim(cd, 4), 12);
  TensorModule t2 = tensor_module({&f4, &f4});
  TensorGram g2 = tensor_form(t2);
  Report rep2 = verify_tensor_contravariance(t2, g2);
  for (const auto& item : rep2.items) CHECK(item.pass);
}
