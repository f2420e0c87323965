#include "qfold/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qf {

void Quiver::rebuild_orbits() {
  orbit_of.assign(static_cast<size_t>(nv), -1);
  orbits.clear();
  for (int v = 0; v < nv; ++v) {
    if (orbit_of[static_cast<size_t>(v)] >= 0) continue;
    std::vector<int> orb;
    int x = v;
    do {
      orbit_of[static_cast<size_t>(x)] = static_cast<int>(orbits.size());
      orb.push_back(x);
      x = a_vertex[static_cast<size_t>(x)];
    } while (x != v);
    orbits.push_back(std::move(orb));
  }
}

long Quiver::unoriented_between(int oa, int ob) const {
  long n = 0;
  for (int h = 0; h < arrow_count(); h += 2) {
    int s = orbit_of[static_cast<size_t>(H[static_cast<size_t>(h)].src)];
    int t = orbit_of[static_cast<size_t>(H[static_cast<size_t>(h)].dst)];
    if ((s == oa && t == ob) || (s == ob && t == oa)) ++n;
  }
  return n;
}

Quiver fold_from_cartan(const CartanData& cd) {
  Quiver q;
  std::vector<int> offset(static_cast<size_t>(cd.rank) + 1, 0);
  for (int i = 0; i < cd.rank; ++i)
    offset[static_cast<size_t>(i) + 1] =
        offset[static_cast<size_t>(i)] + static_cast<int>(cd.s[static_cast<size_t>(i)]);
  q.nv = offset[static_cast<size_t>(cd.rank)];
  q.a_vertex.resize(static_cast<size_t>(q.nv));
  q.vertex_name.resize(static_cast<size_t>(q.nv));
  for (int i = 0; i < cd.rank; ++i) {
    long si = cd.s[static_cast<size_t>(i)];
    for (long r = 0; r < si; ++r) {
      int v = offset[static_cast<size_t>(i)] + static_cast<int>(r);
      q.a_vertex[static_cast<size_t>(v)] =
          offset[static_cast<size_t>(i)] + static_cast<int>((r + 1) % si);
      std::ostringstream nm;
      nm << "(" << i << "," << r << ")";
      q.vertex_name[static_cast<size_t>(v)] = nm.str();
    }
  }

  long o = 1;
  for (long si : cd.s) o = std::lcm(o, si);
  q.order = static_cast<int>(o);

  // Arrow layout between orbits i < j: k = -c_ij * gcd(s_i,s_j) / s_j full
  // free a-orbits of length L = lcm(s_i,s_j); copy c joins (i, u mod s_i) to
  // (j, (u + c) mod s_j).
  struct Pending {
    int src, dst;
  };
  std::vector<Pending> omega_arrows;
  std::vector<int> arrow_orbit_next; // successor under a within omega arrows
  for (int i = 0; i < cd.rank; ++i)
    for (int j = i + 1; j < cd.rank; ++j) {
      long cij = cd.C[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (cij == 0) continue;
      long si = cd.s[static_cast<size_t>(i)], sj = cd.s[static_cast<size_t>(j)];
      long L = std::lcm(si, sj);
      long total = -cij * si;
      long k = total / L; // integral by symmetrizability
      check(k * L == total, "InternalError", "arrow orbit count not integral");
      for (long c = 0; c < k; ++c) {
        size_t base = omega_arrows.size();
        for (long u = 0; u < L; ++u) {
          Pending p;
          p.src = offset[static_cast<size_t>(i)] + static_cast<int>(u % si);
          p.dst = offset[static_cast<size_t>(j)] + static_cast<int>((u + c) % sj);
          omega_arrows.push_back(p);
          arrow_orbit_next.push_back(static_cast<int>(base + (u + 1) % L));
        }
      }
    }

  q.H.resize(2 * omega_arrows.size());
  q.a_arrow.resize(2 * omega_arrows.size());
  for (size_t m = 0; m < omega_arrows.size(); ++m) {
    q.H[2 * m] = {omega_arrows[m].src, omega_arrows[m].dst};
    q.H[2 * m + 1] = {omega_arrows[m].dst, omega_arrows[m].src};
    int nxt = arrow_orbit_next[m];
    q.a_arrow[2 * m] = 2 * nxt;
    q.a_arrow[2 * m + 1] = 2 * nxt + 1;
  }
  q.rebuild_orbits();
  return q;
}

Report validate_admissible(const Quiver& q) {
  Report rep;
  rep.title = "admissible-automorphism validation";
  const int na = q.arrow_count();

  bool perm_ok = static_cast<int>(q.a_vertex.size()) == q.nv &&
                 static_cast<int>(q.a_arrow.size()) == na;
  if (perm_ok) {
    std::vector<int> seen(static_cast<size_t>(q.nv), 0);
    for (int v : q.a_vertex)
      if (v < 0 || v >= q.nv)
        perm_ok = false;
      else
        seen[static_cast<size_t>(v)]++;
    for (int c : seen) perm_ok = perm_ok && c == 1;
  }
  rep.add("permutation-wellformed", perm_ok);
  if (!perm_ok) return rep;

  bool bar_ok = true;
  for (int h = 0; h < na; ++h) {
    const auto& fwd = q.H[static_cast<size_t>(h)];
    const auto& rev = q.H[static_cast<size_t>(Quiver::bar(h))];
    if (fwd.src != rev.dst || fwd.dst != rev.src) bar_ok = false;
  }
  rep.add("bar-involution", bar_ok, "bar(h) reverses source and target");

  bool compat = true;
  for (int h = 0; h < na; ++h) {
    int ah = q.a_arrow[static_cast<size_t>(h)];
    if (ah < 0 || ah >= na) {
      compat = false;
      break;
    }
    if (q.a_vertex[static_cast<size_t>(q.H[static_cast<size_t>(h)].src)] !=
            q.H[static_cast<size_t>(ah)].src ||
        q.a_vertex[static_cast<size_t>(q.H[static_cast<size_t>(h)].dst)] !=
            q.H[static_cast<size_t>(ah)].dst)
      compat = false;
  }
  rep.add("automorphism-arrow-compat", compat,
          "a(s(h)) = s(a(h)) and a(t(h)) = t(a(h))");

  bool bar_a = true;
  for (int h = 0; h < na; ++h)
    if (q.a_arrow[static_cast<size_t>(Quiver::bar(h))] !=
        Quiver::bar(q.a_arrow[static_cast<size_t>(h)]))
      bar_a = false;
  rep.add("bar-commutes-with-a", bar_a);

  bool omega_pres = true;
  for (int h = 0; h < na; h += 2)
    if (!q.in_omega(q.a_arrow[static_cast<size_t>(h)])) omega_pres = false;
  rep.add("omega-preserved", omega_pres, "a maps Omega into Omega");

  bool no_loops = true;
  for (const auto& ar : q.H)
    if (ar.src == ar.dst) no_loops = false;
  rep.add("no-loops", no_loops);

  // clause (b): endpoints of every arrow lie in different a-orbits
  Quiver tmp = q;
  tmp.rebuild_orbits();
  bool diff_orbit = true;
  for (const auto& ar : tmp.H)
    if (tmp.orbit_of[static_cast<size_t>(ar.src)] ==
        tmp.orbit_of[static_cast<size_t>(ar.dst)])
      diff_orbit = false;
  rep.add("arrow-endpoint-orbits", diff_orbit,
          "s(h) and t(h) lie in different a-orbits");

  bool ord = q.order >= 1;
  if (ord) {
    for (int v = 0; v < q.nv; ++v) {
      int x = v;
      for (int k = 0; k < q.order; ++k) x = q.a_vertex[static_cast<size_t>(x)];
      if (x != v) ord = false;
    }
    for (const auto& orb : tmp.orbits)
      if (q.order % static_cast<int>(orb.size()) != 0) ord = false;
  }
  rep.add("order-divides", ord, "a^o = id and orbit sizes divide o");
  return rep;
}

CartanData cartan_from_quiver(const Quiver& q) {
  Report rep = validate_admissible(q);
  check(rep.all_pass(), "NotAdmissible",
        rep.first_failure() ? rep.first_failure()->name : "invalid quiver");
  Quiver t = q;
  t.rebuild_orbits();
  const int m = static_cast<int>(t.orbits.size());
  std::vector<std::vector<long>> C(static_cast<size_t>(m), std::vector<long>(static_cast<size_t>(m), 0));
  std::vector<long> s(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    C[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
    s[static_cast<size_t>(i)] = static_cast<long>(t.orbits[static_cast<size_t>(i)].size());
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      long n = t.unoriented_between(i, j);
      if (n == 0) continue;
      check(n % s[static_cast<size_t>(i)] == 0, "NonIntegerEntry",
            "arrow count between orbits not divisible by the orbit size");
      C[static_cast<size_t>(i)][static_cast<size_t>(j)] = -(n / s[static_cast<size_t>(i)]);
    }
  return validate_cartan(C, s);
}

FramedQuiver frame(const Quiver& q, int N, const std::vector<std::vector<long>>& omega) {
  check(N >= 1, "BadArgument", "framing count must be positive");
  check(static_cast<int>(omega.size()) == N, "BadArgument",
        "one dimension vector per framing copy");
  Quiver t = q;
  t.rebuild_orbits();
  const size_t m = t.orbits.size();
  FramedQuiver f;
  f.base = t;
  f.N = N;
  for (const auto& om : omega) {
    std::vector<long> per_orbit;
    if (om.size() == m) {
      per_orbit = om;
    } else if (om.size() == static_cast<size_t>(q.nv)) {
      per_orbit.assign(m, -1);
      for (int v = 0; v < q.nv; ++v) {
        size_t ob = static_cast<size_t>(t.orbit_of[static_cast<size_t>(v)]);
        if (per_orbit[ob] < 0)
          per_orbit[ob] = om[static_cast<size_t>(v)];
        else
          check(per_orbit[ob] == om[static_cast<size_t>(v)], "NonInvariantFraming",
                "framing dimension varies along an a-orbit");
      }
    } else {
      fail("BadArgument", "framing vector length matches neither orbits nor vertices");
    }
    for (long x : per_orbit)
      check(x >= 0, "BadArgument", "framing dimensions must be nonnegative");
    f.omega.push_back(per_orbit);
    f.lambda.emplace_back(per_orbit);
  }
  return f;
}

Quiver full_quiver(const FramedQuiver& f) {
  // Framing copy k of base vertex v gets id (k+1)*nv + v.
  const Quiver& b = f.base;
  Quiver q;
  q.nv = b.nv * (f.N + 1);
  q.a_vertex.resize(static_cast<size_t>(q.nv));
  q.vertex_name.resize(static_cast<size_t>(q.nv));
  for (int v = 0; v < b.nv; ++v) {
    q.a_vertex[static_cast<size_t>(v)] = b.a_vertex[static_cast<size_t>(v)];
    q.vertex_name[static_cast<size_t>(v)] = b.vertex_name.empty()
                                                ? std::to_string(v)
                                                : b.vertex_name[static_cast<size_t>(v)];
    for (int k = 0; k < f.N; ++k) {
      int fv = (k + 1) * b.nv + v;
      q.a_vertex[static_cast<size_t>(fv)] =
          (k + 1) * b.nv + b.a_vertex[static_cast<size_t>(v)];
      q.vertex_name[static_cast<size_t>(fv)] =
          q.vertex_name[static_cast<size_t>(v)] + "^" + std::to_string(k + 1);
    }
  }
  q.order = b.order;
  q.H = b.H;
  q.a_arrow = b.a_arrow;
  // arrows v -> v^k, one per base vertex per copy, permuted like the vertices
  for (int k = 0; k < f.N; ++k) {
    size_t first = q.H.size();
    for (int v = 0; v < b.nv; ++v) {
      q.H.push_back({v, (k + 1) * b.nv + v});
      q.H.push_back({(k + 1) * b.nv + v, v});
    }
    for (int v = 0; v < b.nv; ++v) {
      int av = b.a_vertex[static_cast<size_t>(v)];
      q.a_arrow.push_back(static_cast<int>(first) + 2 * av);
      q.a_arrow.push_back(static_cast<int>(first) + 2 * av + 1);
    }
  }
  q.rebuild_orbits();
  return q;
}

CartanData unfolded_cartan(const Quiver& q) {
  const size_t n = static_cast<size_t>(q.nv);
  std::vector<std::vector<long>> C(n, std::vector<long>(n, 0));
  for (size_t i = 0; i < n; ++i) C[i][i] = 2;
  for (int h = 0; h < q.arrow_count(); h += 2) {
    size_t a = static_cast<size_t>(q.H[static_cast<size_t>(h)].src);
    size_t b = static_cast<size_t>(q.H[static_cast<size_t>(h)].dst);
    check(a != b, "NotAdmissible", "loop in quiver");
    C[a][b] -= 1;
    C[b][a] -= 1;
  }
  return validate_cartan(C);
}

} // namespace qf
