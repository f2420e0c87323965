#include "qfold/suite.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "qfold/crystal.hpp"
#include "qfold/dot.hpp"
#include "qfold/forms.hpp"
#include "qfold/module.hpp"
#include "qfold/oracle.hpp"
#include "qfold/quiver.hpp"
#include "qfold/tensor.hpp"

namespace qf {

void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (int k = 0; k < n; ++k) fn(k);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      int k = next.fetch_add(1);
      if (k >= n) return;
      fn(k);
    }
  };
  std::vector<std::thread> pool;
  int nt = std::min(jobs, n);
  pool.reserve(static_cast<size_t>(nt));
  for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

namespace {

struct Instance {
  std::string name;
  CartanData cd;
  Weight lambda;
  long depth;
};

CartanData cd_a1() { return validate_cartan({{2}}); }
CartanData cd_a2() { return validate_cartan({{2, -1}, {-1, 2}}); }
CartanData cd_c2() { return validate_cartan({{2, -1}, {-2, 2}}); }
CartanData cd_g2() { return validate_cartan({{2, -1}, {-3, 2}}); }
CartanData cd_b3() { return validate_cartan({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}); }
CartanData cd_affine() { return validate_cartan({{2, -2}, {-2, 2}}); }

Weight fundamental_with_dim(const CartanData& cd, long dim) {
  for (int i = 0; i < cd.rank; ++i)
    if (weyl_dim(cd, cd.fundamental(i)) == dim) return cd.fundamental(i);
  fail("InternalError", "no fundamental weight of dimension " + std::to_string(dim));
}

Weight g2_short_fundamental(const CartanData& g) {
  return g.fundamental(g.s[0] == 1 ? 0 : 1);
}

// the six data every operator identity is checked on
std::vector<Instance> relation_instances() {
  std::vector<Instance> out;
  out.push_back({"A1 n=2", cd_a1(), Weight({2}), 8});
  {
    CartanData a2 = cd_a2();
    out.push_back({"A2 adjoint", a2, a2.fundamental(0) + a2.fundamental(1), 12});
  }
  {
    CartanData c2 = cd_c2();
    out.push_back({"C2 4-dim fundamental", c2, fundamental_with_dim(c2, 4), 12});
  }
  {
    CartanData g2 = cd_g2();
    out.push_back({"G2-type 7-dim fundamental", g2, g2_short_fundamental(g2), 12});
  }
  {
    CartanData b3 = cd_b3();
    out.push_back({"B3 spinor window", b3, fundamental_with_dim(b3, 8), 4});
  }
  {
    CartanData af = cd_affine();
    out.push_back({"affine A1 basic window", af, af.fundamental(0), 4});
  }
  return out;
}

void merge(Report& into, const std::string& prefix, const Report& from) {
  for (const auto& item : from.items)
    into.add(prefix + ": " + item.name, item.pass, item.detail);
}

Report group_defining_relations(const SuiteOptions& opt) {
  Report rep;
  rep.title = "defining relations on the instance battery";
  auto insts = relation_instances();
  std::vector<Report> parts(insts.size());
  parallel_for(static_cast<int>(insts.size()), opt.jobs, [&](int k) {
    const auto& inst = insts[static_cast<size_t>(k)];
    HWModule m = build_module(inst.cd, inst.lambda, inst.depth);
    parts[static_cast<size_t>(k)] = verify_defining_relations(m);
  });
  for (size_t k = 0; k < insts.size(); ++k) merge(rep, insts[k].name, parts[k]);
  return rep;
}

Report group_divided_powers(const SuiteOptions& opt) {
  Report rep;
  rep.title = "divided power identities";
  auto insts = relation_instances();
  std::vector<Report> parts(insts.size());
  parallel_for(static_cast<int>(insts.size()), opt.jobs, [&](int k) {
    const auto& inst = insts[static_cast<size_t>(k)];
    HWModule m = build_module(inst.cd, inst.lambda, inst.depth);
    Report local;
    for (int i = 0; i < inst.cd.rank; ++i)
      for (long n = 1; n <= 3; ++n)
        merge(local, "i=" + std::to_string(i) + " n=" + std::to_string(n),
              verify_divided_power_relation(m, i, n));
    parts[static_cast<size_t>(k)] = std::move(local);
  });
  for (size_t k = 0; k < insts.size(); ++k) merge(rep, insts[k].name, parts[k]);
  // scalar identity for n <= 6, s <= 3
  bool scal = true;
  for (long s = 1; s <= 3; ++s)
    for (long n = 1; n <= 6; ++n) {
      RatFunc lhs(Int(0), 1);
      for (long r = 0; r < n; ++r) lhs += RatFunc::v_power(s * (n - 1 - 2 * r), 1);
      if (!(lhs == rf_qint(n, s, 1))) scal = false;
    }
  rep.add("shift multiset equals [n], n <= 6, s <= 3", scal);
  return rep;
}

Report group_ef_commutation(const SuiteOptions& opt) {
  Report rep;
  rep.title = "E^{(n)}F commutation";
  auto insts = relation_instances();
  std::vector<Report> parts(insts.size());
  parallel_for(static_cast<int>(insts.size()), opt.jobs, [&](int k) {
    const auto& inst = insts[static_cast<size_t>(k)];
    HWModule m = build_module(inst.cd, inst.lambda, inst.depth);
    Report local;
    for (int i = 0; i < inst.cd.rank; ++i)
      for (long n = 1; n <= 3; ++n)
        merge(local, "i=" + std::to_string(i) + " n=" + std::to_string(n),
              verify_EF_commutation(m, i, n));
    parts[static_cast<size_t>(k)] = std::move(local);
  });
  for (size_t k = 0; k < insts.size(); ++k) merge(rep, insts[k].name, parts[k]);
  return rep;
}

Report group_character_oracle(const SuiteOptions&) {
  Report rep;
  rep.title = "weight multiplicities against the recursion oracle";
  struct Case {
    std::string name;
    CartanData cd;
    Weight lambda;
    long depth;
    long total; // -1 for infinite-dimensional
  };
  CartanData c2 = cd_c2(), g2 = cd_g2(), af = cd_affine();
  Weight f4 = fundamental_with_dim(c2, 4), f5 = fundamental_with_dim(c2, 5);
  std::vector<Case> cases = {
      {"C2 4-dim fundamental", c2, f4, 12, 4},
      {"C2 5-dim fundamental", c2, f5, 12, 5},
      {"C2 sum of fundamentals", c2, c2.fundamental(0) + c2.fundamental(1), 12, 16},
      {"G2-type short fundamental", g2, g2_short_fundamental(g2), 12, 7},
      {"affine A1 basic, window 4", af, af.fundamental(0), 4, -1},
  };
  for (const auto& tc : cases) {
    HWModule m = build_module(tc.cd, tc.lambda, tc.depth);
    CharacterTable oracle = freudenthal_character(tc.cd, tc.lambda, tc.depth);
    bool match = m.character() == oracle.mult;
    rep.add(tc.name + ": multiplicities equal the recursion", match);
    if (tc.total >= 0) {
      long total = 0;
      for (const auto& b : m.blocks) total += b.dim;
      rep.add(tc.name + ": total equals the product-formula dimension " +
                  std::to_string(tc.total),
              m.saturated && total == tc.total &&
                  weyl_dim(tc.cd, tc.lambda) == tc.total);
    }
  }
  return rep;
}

Report group_crystal_counts(const SuiteOptions&) {
  Report rep;
  rep.title = "crystal vertex counts match module characters";
  struct Case {
    std::string name;
    CartanData cd;
    Weight lambda;
    long depth;
  };
  CartanData c2 = cd_c2(), g2 = cd_g2(), af = cd_affine();
  std::vector<Case> cases = {
      {"C2 4-dim fundamental", c2, fundamental_with_dim(c2, 4), 12},
      {"C2 5-dim fundamental", c2, fundamental_with_dim(c2, 5), 12},
      {"C2 sum of fundamentals", c2, c2.fundamental(0) + c2.fundamental(1), 12},
      {"G2-type short fundamental", g2, g2_short_fundamental(g2), 12},
      {"affine A1 basic, window 4", af, af.fundamental(0), 4},
  };
  for (const auto& tc : cases) {
    HWModule m = build_module(tc.cd, tc.lambda, tc.depth);
    Crystal b = build_crystal(tc.cd, tc.lambda, tc.depth);
    rep.add(tc.name, b.character() == m.character());
  }
  return rep;
}

Report group_crystal_folding(const SuiteOptions& opt) {
  Report rep;
  rep.title = "orbit-folded crystals against directly built ones";
  // C2 from A3 with the arm swap: every dominant weight with |B| <= 500
  CartanData c2 = cd_c2();
  Quiver q = fold_from_cartan(c2);
  CartanData hat = unfolded_cartan(q);
  auto unfold_weight = [&](const Weight& lam) {
    Weight out(std::vector<long>(static_cast<size_t>(q.nv), 0));
    for (int v = 0; v < q.nv; ++v)
      out.c[static_cast<size_t>(v)] =
          lam.c[static_cast<size_t>(q.orbit_of[static_cast<size_t>(v)])];
    return out;
  };
  std::vector<Weight> lams;
  for (long a = 0; a <= 16; ++a)
    for (long b = 0; b <= 16; ++b) {
      Weight lam({a, b});
      if (weyl_dim(c2, lam) <= 500) lams.push_back(lam);
    }
  std::vector<std::pair<std::string, bool>> results(lams.size());
  parallel_for(static_cast<int>(lams.size()), opt.jobs, [&](int k) {
    const Weight& lam = lams[static_cast<size_t>(k)];
    Crystal direct = build_crystal(c2, lam, 64);
    Crystal bhat = build_crystal(hat, unfold_weight(lam), 64);
    Crystal folded = fold_crystal(bhat, q.a_vertex);
    bool ok = direct.complete && bhat.complete &&
              crystal_isomorphic(folded, direct).has_value();
    results[static_cast<size_t>(k)] = {
        "C2 " + lam.str() + " (|B| = " + std::to_string(direct.size()) + ")", ok};
  });
  for (const auto& [name, ok] : results) rep.add(name, ok);

  // G2-type from the D4 star with triality, 7-vertex instance
  CartanData g2 = cd_g2();
  Quiver qd4 = fold_from_cartan(g2);
  CartanData hat4 = unfolded_cartan(qd4);
  Weight lam = g2_short_fundamental(g2);
  Weight lam_hat(std::vector<long>(static_cast<size_t>(qd4.nv), 0));
  for (int v = 0; v < qd4.nv; ++v)
    lam_hat.c[static_cast<size_t>(v)] =
        lam.c[static_cast<size_t>(qd4.orbit_of[static_cast<size_t>(v)])];
  Crystal bhat = build_crystal(hat4, lam_hat, 64);
  Crystal folded = fold_crystal(bhat, qd4.a_vertex);
  Crystal direct = build_crystal(g2, lam, 64);
  rep.add("G2-type short fundamental from D4 triality (|B| = 7)",
          folded.size() == 7 && crystal_isomorphic(folded, direct).has_value());
  return rep;
}

Report group_tensor_decomposition(const SuiteOptions&) {
  Report rep;
  rep.title = "crystal vs module tensor decompositions";
  struct Pair {
    std::string name;
    CartanData cd;
    Weight l1, l2;
    long depth;
  };
  CartanData a1 = cd_a1(), c2 = cd_c2();
  Weight f4 = fundamental_with_dim(c2, 4), f5 = fundamental_with_dim(c2, 5);
  std::vector<Pair> pairs = {
      {"A1 (1,1)", a1, Weight({1}), Weight({1}), 8},
      {"A1 (2,1)", a1, Weight({2}), Weight({1}), 8},
      {"C2 (4-dim, 4-dim)", c2, f4, f4, 12},
      {"C2 (4-dim, 5-dim)", c2, f4, f5, 12},
  };
  for (const auto& pc : pairs) {
    HWModule m1 = build_module(pc.cd, pc.l1, pc.depth);
    HWModule m2 = build_module(pc.cd, pc.l2, pc.depth);
    TensorModule t = tensor_module({&m1, &m2});
    auto mod_dec = decompose_tensor_module(t);
    Crystal b1 = build_crystal(pc.cd, pc.l1, pc.depth);
    Crystal b2 = build_crystal(pc.cd, pc.l2, pc.depth);
    auto cry_dec = decompose_by_highest_weight(tensor_crystal(b1, b2));
    rep.add(pc.name, mod_dec == cry_dec);
  }
  return rep;
}

Report group_forms(const SuiteOptions& opt) {
  Report rep;
  rep.title = "contravariant forms";
  auto insts = relation_instances();
  std::vector<Report> parts(insts.size());
  parallel_for(static_cast<int>(insts.size()), opt.jobs, [&](int k) {
    const auto& inst = insts[static_cast<size_t>(k)];
    HWModule m = build_module(inst.cd, inst.lambda, inst.depth);
    GramTable g = contravariant_form(m);
    parts[static_cast<size_t>(k)] = verify_contravariance(m, g);
  });
  for (size_t k = 0; k < insts.size(); ++k) merge(rep, insts[k].name, parts[k]);

  // product-form contravariance on the decomposition pairs
  CartanData a1 = cd_a1(), c2 = cd_c2();
  Weight f4 = fundamental_with_dim(c2, 4), f5 = fundamental_with_dim(c2, 5);
  struct Pair {
    std::string name;
    CartanData cd;
    Weight l1, l2;
  };
  std::vector<Pair> pairs = {
      {"A1 (1,1)", a1, Weight({1}), Weight({1})},
      {"A1 (2,1)", a1, Weight({2}), Weight({1})},
      {"C2 (4-dim, 4-dim)", c2, f4, f4},
      {"C2 (4-dim, 5-dim)", c2, f4, f5},
  };
  for (const auto& pc : pairs) {
    HWModule m1 = build_module(pc.cd, pc.l1, 12);
    HWModule m2 = build_module(pc.cd, pc.l2, 12);
    TensorModule t = tensor_module({&m1, &m2});
    TensorGram g = tensor_form(t);
    merge(rep, "product form " + pc.name, verify_tensor_contravariance(t, g));
  }

  // divided-power basis of the sl2 strings is almost orthogonal
  for (long n = 1; n <= 6; ++n) {
    HWModule m = build_module(a1, Weight({n}), 2 * n + 2);
    GramTable g = contravariant_form(m);
    OrthogonalityReport orep = almost_orthogonality(m, g);
    rep.add("sl2 string n=" + std::to_string(n) + " almost orthogonal (order " +
                std::to_string(orep.order) + ")",
            orep.almost_orthogonal);
  }
  return rep;
}

Report group_psi_involution(const SuiteOptions&) {
  Report rep;
  rep.title = "bar involution of tensor products";
  struct Case {
    std::string name;
    CartanData cd;
    Weight lam;
    long depth;
  };
  CartanData a1 = cd_a1(), c2 = cd_c2();
  std::vector<Case> cases = {
      {"A1 L(1) ⊗ L(1)", a1, Weight({1}), 8},
      {"C2 L(4-dim) ⊗ L(4-dim)", c2, fundamental_with_dim(c2, 4), 12},
  };
  for (const auto& tc : cases) {
    HWModule m = build_module(tc.cd, tc.lam, tc.depth);
    TensorModule t = tensor_module({&m, &m});
    GradedOp theta = compute_theta(t, 32);
    GradedOp psi = psi_operator(t, theta);
    rep.add(tc.name + ": Psi^2 = id", psi.compose(psi).is_identity());
    bool inter = true;
    for (int i = 0; i < tc.cd.rank; ++i) {
      if (!psi.compose(t.deltaE(i)).equals(t.deltaE(i).compose(psi))) inter = false;
      if (!psi.compose(t.deltaF(i)).equals(t.deltaF(i).compose(psi))) inter = false;
      if (!psi.compose(t.ktilde(i, 1)).equals(t.ktilde(i, -1).compose(psi))) inter = false;
    }
    rep.add(tc.name + ": Psi Delta(u) = Delta(bar u) Psi", inter);
  }
  return rep;
}

Report group_yang_baxter(const SuiteOptions& opt) {
  Report rep;
  rep.title = "Yang-Baxter equation";
  CartanData a1 = cd_a1(), c2 = cd_c2();
  Weight f4 = fundamental_with_dim(c2, 4);
  std::vector<Report> parts(2);
  parallel_for(2, opt.jobs, [&](int k) {
    if (k == 0)
      parts[0] = verify_yang_baxter(a1, Weight({1}), Weight({1}), Weight({1}), 8);
    else
      parts[1] = verify_yang_baxter(c2, f4, f4, f4, 12);
  });
  merge(rep, "A1 (1,1,1) 8-dim", parts[0]);
  merge(rep, "C2 (4,4,4)-dim 64-dim", parts[1]);
  return rep;
}

Report group_quiver_roundtrip(const SuiteOptions&) {
  Report rep;
  rep.title = "quiver folding round trips";
  std::vector<std::pair<long, long>> ab = {{1, 1}, {1, 2}, {2, 1}, {1, 3},
                                           {3, 1}, {2, 2}, {1, 4}, {4, 1}};
  for (auto [a, b] : ab) {
    CartanData cd = validate_cartan({{2, -a}, {-b, 2}});
    Quiver q = fold_from_cartan(cd);
    bool ok = validate_admissible(q).all_pass();
    CartanData back = cartan_from_quiver(q);
    ok = ok && back.C == cd.C && back.s == cd.s;
    std::ostringstream nm;
    nm << "[[2,-" << a << "],[-" << b << ",2]]";
    rep.add(nm.str(), ok);
  }
  // the swap on a single arrow is rejected by clause (b)
  Quiver bad;
  bad.nv = 2;
  bad.H = {{0, 1}, {1, 0}};
  bad.a_vertex = {1, 0};
  bad.a_arrow = {1, 0};
  bad.order = 2;
  bad.rebuild_orbits();
  Report vrep = validate_admissible(bad);
  bool clause_b = false;
  for (const auto& item : vrep.items)
    if (item.name == "arrow-endpoint-orbits" && !item.pass) clause_b = true;
  rep.add("swap on one arrow violates the orbit clause", clause_b && !vrep.all_pass());
  return rep;
}

Report group_binf_stabilization(const SuiteOptions&) {
  Report rep;
  rep.title = "highest-weight independence inside a fixed window";
  CartanData c2 = cd_c2();
  Weight l3 = 3 * (c2.fundamental(0) + c2.fundamental(1));
  Weight l4 = 4 * (c2.fundamental(0) + c2.fundamental(1));
  Crystal b3 = build_crystal(c2, l3, 3);
  Crystal b4 = build_crystal(c2, l4, 3);
  bool counts = true;
  auto ch3 = b3.character(), ch4 = b4.character();
  if (ch3 != ch4) counts = false;
  rep.add("per-offset counts agree, window height <= 3", counts);
  rep.add("window graphs match", crystal_window_match(b3, b4, 3));
  return rep;
}

} // namespace

std::vector<std::string> suite_group_ids() {
  return {"defining-relations", "divided-powers",     "ef-commutation",
          "character-oracle",   "crystal-counts",     "crystal-folding",
          "tensor-decomposition", "contravariant-forms", "psi-involution",
          "yang-baxter",        "quiver-roundtrip",   "binf-stabilization"};
}

SuiteResult run_suite_group(const std::string& id, const SuiteOptions& opt) {
  SuiteResult res;
  SuiteItem item;
  item.id = id;
  auto t0 = std::chrono::steady_clock::now();
  if (id == "defining-relations")
    item.report = group_defining_relations(opt);
  else if (id == "divided-powers")
    item.report = group_divided_powers(opt);
  else if (id == "ef-commutation")
    item.report = group_ef_commutation(opt);
  else if (id == "character-oracle")
    item.report = group_character_oracle(opt);
  else if (id == "crystal-counts")
    item.report = group_crystal_counts(opt);
  else if (id == "crystal-folding")
    item.report = group_crystal_folding(opt);
  else if (id == "tensor-decomposition")
    item.report = group_tensor_decomposition(opt);
  else if (id == "contravariant-forms")
    item.report = group_forms(opt);
  else if (id == "psi-involution")
    item.report = group_psi_involution(opt);
  else if (id == "yang-baxter")
    item.report = group_yang_baxter(opt);
  else if (id == "quiver-roundtrip")
    item.report = group_quiver_roundtrip(opt);
  else if (id == "binf-stabilization")
    item.report = group_binf_stabilization(opt);
  else
    fail("BadArgument", "unknown verification group: " + id);
  item.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  res.items.push_back(std::move(item));
  return res;
}

SuiteResult run_full_suite(const SuiteOptions& opt) {
  SuiteResult res;
  for (const auto& id : suite_group_ids()) {
    SuiteResult one = run_suite_group(id, opt);
    res.items.push_back(std::move(one.items[0]));
  }
  return res;
}

} // namespace qf
