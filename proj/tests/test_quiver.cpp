#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfold/quiver.hpp"

using namespace qf;

TEST_CASE("A1 quiver is a point") {
  CartanData cd = validate_cartan({{2}});
  Quiver q = fold_from_cartan(cd);
  CHECK(q.nv == 1);
  CHECK(q.arrow_count() == 0);
  CHECK(q.order == 1);
  CHECK(validate_admissible(q).all_pass());
  CartanData back = cartan_from_quiver(q);
  CHECK(back.C == cd.C);
}

TEST_CASE("C2 folds to A3 with arm swap") {
  CartanData cd = validate_cartan({{2, -1}, {-2, 2}});
  Quiver q = fold_from_cartan(cd);
  CHECK(q.nv == 3);
  CHECK(q.arrow_count() == 4); // 2 unoriented arrows
  CHECK(q.order == 2);
  CHECK(q.orbits.size() == 2);
  CHECK(q.orbits[0].size() == 2);
  CHECK(q.orbits[1].size() == 1);
  // a swaps the two arm vertices
  CHECK(q.a_vertex[0] == 1);
  CHECK(q.a_vertex[1] == 0);
  CHECK(q.a_vertex[2] == 2);
  CHECK(validate_admissible(q).all_pass());
  CartanData back = cartan_from_quiver(q);
  CHECK(back.C == cd.C);
  CHECK(back.s == cd.s);
  // unfolded datum is the simply-laced A3 path
  CartanData hat = unfolded_cartan(q);
  CHECK(hat.s == std::vector<long>{1, 1, 1});
  long offdiag = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) offdiag += hat.C[i][j];
  CHECK(offdiag == -4);
}

TEST_CASE("G2-type row folds to D4 with triality") {
  CartanData cd = validate_cartan({{2, -1}, {-3, 2}});
  Quiver q = fold_from_cartan(cd);
  CHECK(q.nv == 4);
  CHECK(q.arrow_count() == 6); // 3 unoriented arrows: a star
  CHECK(q.order == 3);
  CHECK(validate_admissible(q).all_pass());
  CartanData back = cartan_from_quiver(q);
  CHECK(back.C == cd.C);
  CHECK(back.s == cd.s);
}

TEST_CASE("round trip on the rank-2 battery") {
  std::vector<std::pair<long, long>> ab = {{1, 1}, {1, 2}, {2, 1}, {1, 3},
                                           {3, 1}, {2, 2}, {1, 4}, {4, 1}};
  for (auto [a, b] : ab) {
    CartanData cd = validate_cartan({{2, -a}, {-b, 2}});
    Quiver q = fold_from_cartan(cd);
    REQUIRE(validate_admissible(q).all_pass());
    CartanData back = cartan_from_quiver(q);
    CHECK(back.C == cd.C);
    CHECK(back.s == cd.s);
    // structural: no intra-orbit arrows, a^o = id (covered by the validator)
  }
}

TEST_CASE("A2 swap configuration is rejected") {
  Quiver q;
  q.nv = 2;
  q.H = {{0, 1}, {1, 0}};
  q.a_vertex = {1, 0};
  q.a_arrow = {1, 0}; // a(h) = bar(h), the only choice compatible with s,t
  q.order = 2;
  q.rebuild_orbits();
  Report rep = validate_admissible(q);
  CHECK_FALSE(rep.all_pass());
  bool clause_b = false;
  for (const auto& item : rep.items)
    if (item.name == "arrow-endpoint-orbits" && !item.pass) clause_b = true;
  CHECK(clause_b);
  CHECK_THROWS_WITH_AS(cartan_from_quiver(q), doctest::Contains("NotAdmissible"), Error);
}

TEST_CASE("automorphism not commuting with s,t is flagged") {
  // two disjoint arrows, a swaps sources but fixes targets
  Quiver q;
  q.nv = 4;
  q.H = {{0, 2}, {2, 0}, {1, 3}, {3, 1}};
  q.a_vertex = {1, 0, 2, 3};
  q.a_arrow = {0, 1, 2, 3};
  q.order = 2;
  q.rebuild_orbits();
  Report rep = validate_admissible(q);
  bool clause_a = false;
  for (const auto& item : rep.items)
    if (item.name == "automorphism-arrow-compat" && !item.pass) clause_a = true;
  CHECK(clause_a);
}

TEST_CASE("framing") {
  CartanData cd = validate_cartan({{2, -1}, {-2, 2}});
  Quiver q = fold_from_cartan(cd);
  FramedQuiver f = frame(q, 2, {{1, 0}, {0, 1}});
  CHECK(f.lambda[0] == cd.fundamental(0));
  CHECK(f.lambda[1] == cd.fundamental(1));
  Quiver full = full_quiver(f);
  CHECK(full.nv == 9);
  CHECK(validate_admissible(full).all_pass());
  // per-vertex framing constant on orbits is accepted
  FramedQuiver g = frame(q, 1, {{3, 3, 5}});
  CHECK(g.omega[0] == std::vector<long>{3, 5});
  // varying along the orbit is an error
  CHECK_THROWS_WITH_AS(frame(q, 1, {{3, 4, 5}}),
                       doctest::Contains("NonInvariantFraming"), Error);

  CartanData a1 = validate_cartan({{2}});
  FramedQuiver fa = frame(fold_from_cartan(a1), 1, {{3}});
  CHECK(fa.lambda[0] == Weight({3}));
}
