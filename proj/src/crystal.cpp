#include "qfold/crystal.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace qf {

namespace {

std::string mono_label(const Monomial& m) {
  if (m.empty()) return "1";
  std::ostringstream os;
  for (const auto& [key, e] : m) {
    os << "Y" << key.first << "(" << key.second << ")";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

// zero-dropping exponent update
void mono_mul(Monomial& m, const std::pair<int, long>& key, int delta) {
  auto it = m.find(key);
  int val = (it == m.end() ? 0 : it->second) + delta;
  if (val == 0) {
    if (it != m.end()) m.erase(it);
  } else if (it == m.end()) {
    m.emplace(key, val);
  } else {
    it->second = val;
  }
}

struct MonomialOps {
  const CartanData& cd;

  // c_ij = 1 for i < j, 0 otherwise; matches the quiver orientation that
  // points from the smaller index to the larger.
  long csign(int i, int j) const { return i < j ? 1 : 0; }

  long wt_coord(const Monomial& m, int i) const {
    long w = 0;
    for (const auto& [key, e] : m)
      if (key.first == i) w += e;
    return w;
  }

  // max over n of the prefix sums p_i(n), never below 0
  long phi(const Monomial& m, int i) const {
    long best = 0, run = 0;
    for (const auto& [key, e] : m) {
      if (key.first != i) continue;
      run += e;
      best = std::max(best, run);
    }
    return best;
  }

  long eps(const Monomial& m, int i) const { return phi(m, i) - wt_coord(m, i); }

  // apply A_i(n)^{+-1}
  void mul_A(Monomial& m, int i, long n, int sign) const {
    mono_mul(m, {i, n}, sign);
    mono_mul(m, {i, n + 1}, sign);
    for (int j = 0; j < cd.rank; ++j) {
      if (j == i) continue;
      long cji = cd.C[static_cast<size_t>(j)][static_cast<size_t>(i)];
      if (cji == 0) continue;
      mono_mul(m, {j, n + csign(j, i)}, static_cast<int>(sign * cji));
    }
  }

  std::optional<Monomial> ftilde(const Monomial& m, int i) const {
    long ph = phi(m, i);
    if (ph == 0) return std::nullopt;
    // smallest n with p_i(n) = phi
    long run = 0, nf = 0;
    bool found = false;
    for (const auto& [key, e] : m) {
      if (key.first != i) continue;
      run += e;
      if (!found && run == ph) {
        nf = key.second;
        found = true;
      }
    }
    Monomial out = m;
    mul_A(out, i, nf, -1);
    return out;
  }

  std::optional<Monomial> etilde(const Monomial& m, int i) const {
    long ph = phi(m, i);
    if (ph - wt_coord(m, i) == 0) return std::nullopt; // eps = 0
    // largest n with p_i(n) = phi.  The prefix sum is a step function with
    // jumps at the support points of index i; eps > 0 rules the +infinity
    // tail out, so every maximizing plateau ends at a later support point.
    std::vector<std::pair<long, long>> pref; // (n_k, p_i(n_k))
    long run = 0;
    for (const auto& [key, e] : m) {
      if (key.first != i) continue;
      run += e;
      pref.emplace_back(key.second, run);
    }
    check(!pref.empty(), "InternalError", "eps > 0 needs support");
    bool set = false;
    long ne = 0;
    if (ph == 0) {
      // the empty prefix attains the max on (-inf, n_0)
      ne = pref.front().first - 1;
      set = true;
    }
    for (size_t k = 0; k < pref.size(); ++k) {
      if (pref[k].second != ph) continue;
      check(k + 1 < pref.size(), "InternalError", "plateau reaches the tail");
      ne = pref[k + 1].first - 1;
      set = true;
    }
    check(set, "InternalError", "string maximum not located");
    Monomial out = m;
    mul_A(out, i, ne, +1);
    return out;
  }
};

} // namespace

std::map<std::vector<long>, long> Crystal::character() const {
  std::map<std::vector<long>, long> ch;
  for (const auto& v : verts) ch[v.nu] += 1;
  return ch;
}

Crystal build_crystal(const CartanData& cd, const Weight& lambda, long depth) {
  check(is_dominant(cd, lambda), "NotDominant", "highest weight must be dominant");
  check(depth >= 0, "BadArgument", "negative depth");
  Crystal b;
  b.cd = cd;
  b.lambda = lambda;
  b.depth = depth;
  MonomialOps ops{cd};

  Monomial top;
  for (int i = 0; i < cd.rank; ++i)
    if (lambda.c[static_cast<size_t>(i)] != 0)
      top[{i, 0}] = static_cast<int>(lambda.c[static_cast<size_t>(i)]);

  std::map<Monomial, int> index;
  auto add_vertex = [&](const Monomial& m, const std::vector<long>& nu) {
    Crystal::V v;
    v.mono = m;
    v.nu = nu;
    v.wt = cd.lower(lambda, nu);
    v.eps.resize(static_cast<size_t>(cd.rank));
    v.phi.resize(static_cast<size_t>(cd.rank));
    for (int i = 0; i < cd.rank; ++i) {
      v.phi[static_cast<size_t>(i)] = ops.phi(m, i);
      v.eps[static_cast<size_t>(i)] = ops.eps(m, i);
      // crystal axiom: phi - eps = <i, wt>
      check(v.phi[static_cast<size_t>(i)] - v.eps[static_cast<size_t>(i)] ==
                pairing(cd, i, v.wt),
            "InternalError", "monomial weight bookkeeping broke");
    }
    v.label = mono_label(m);
    index[m] = static_cast<int>(b.verts.size());
    b.verts.push_back(std::move(v));
    return static_cast<int>(b.verts.size()) - 1;
  };

  add_vertex(top, std::vector<long>(static_cast<size_t>(cd.rank), 0));
  b.hw = 0;

  std::deque<int> queue{0};
  std::vector<std::map<int, int>> fmap; // vertex -> (i -> target)
  fmap.emplace_back();
  bool truncated = false;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    const Monomial m = b.verts[static_cast<size_t>(v)].mono;
    const std::vector<long> nu = b.verts[static_cast<size_t>(v)].nu;
    for (int i = 0; i < cd.rank; ++i) {
      auto next = ops.ftilde(m, i);
      if (!next) continue;
      if (cd.height(nu) + 1 > depth) {
        truncated = true;
        continue;
      }
      std::vector<long> nnu = nu;
      nnu[static_cast<size_t>(i)] += 1;
      auto it = index.find(*next);
      int tv;
      if (it == index.end()) {
        tv = add_vertex(*next, nnu);
        fmap.emplace_back();
        queue.push_back(tv);
      } else {
        tv = it->second;
        check(b.verts[static_cast<size_t>(tv)].nu == nnu, "InternalError",
              "monomial reached at two different weights");
      }
      fmap[static_cast<size_t>(v)][i] = tv;
    }
  }
  b.complete = !truncated;

  b.fE.assign(static_cast<size_t>(cd.rank), std::vector<int>(b.verts.size(), -1));
  b.eE.assign(static_cast<size_t>(cd.rank), std::vector<int>(b.verts.size(), -1));
  for (size_t v = 0; v < b.verts.size(); ++v)
    for (const auto& [i, tv] : fmap[v]) {
      b.fE[static_cast<size_t>(i)][v] = tv;
      b.eE[static_cast<size_t>(i)][static_cast<size_t>(tv)] = static_cast<int>(v);
    }
  return b;
}

Crystal tensor_crystal(const Crystal& b1, const Crystal& b2) {
  check(b1.cd.C == b2.cd.C && b1.cd.s == b2.cd.s, "CartanMismatch",
        "tensor factors over different Cartan data");
  check(b1.complete && b2.complete, "BadArgument",
        "tensor product needs complete factor crystals");
  const CartanData& cd = b1.cd;
  Crystal t;
  t.cd = cd;
  t.lambda = b1.lambda + b2.lambda;
  t.depth = b1.depth + b2.depth;
  t.complete = true;

  const int n1 = b1.size(), n2 = b2.size();
  auto vid = [&](int x, int y) { return x * n2 + y; };
  t.verts.resize(static_cast<size_t>(n1) * static_cast<size_t>(n2));
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < n2; ++y) {
      Crystal::V v;
      const auto& vx = b1.verts[static_cast<size_t>(x)];
      const auto& vy = b2.verts[static_cast<size_t>(y)];
      v.nu.resize(static_cast<size_t>(cd.rank));
      for (int i = 0; i < cd.rank; ++i)
        v.nu[static_cast<size_t>(i)] = vx.nu[static_cast<size_t>(i)] + vy.nu[static_cast<size_t>(i)];
      v.wt = vx.wt + vy.wt;
      v.eps.resize(static_cast<size_t>(cd.rank));
      v.phi.resize(static_cast<size_t>(cd.rank));
      for (int i = 0; i < cd.rank; ++i) {
        long e1 = vx.eps[static_cast<size_t>(i)], p1 = vx.phi[static_cast<size_t>(i)];
        long e2 = vy.eps[static_cast<size_t>(i)], p2 = vy.phi[static_cast<size_t>(i)];
        v.eps[static_cast<size_t>(i)] = e1 + std::max(0L, e2 - p1);
        v.phi[static_cast<size_t>(i)] = p2 + std::max(0L, p1 - e2);
      }
      v.label = vx.label + " (x) " + vy.label;
      t.verts[static_cast<size_t>(vid(x, y))] = std::move(v);
    }
  t.hw = vid(b1.hw, b2.hw);

  t.fE.assign(static_cast<size_t>(cd.rank), std::vector<int>(t.verts.size(), -1));
  t.eE.assign(static_cast<size_t>(cd.rank), std::vector<int>(t.verts.size(), -1));
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < n2; ++y)
      for (int i = 0; i < cd.rank; ++i) {
        long p1 = b1.verts[static_cast<size_t>(x)].phi[static_cast<size_t>(i)];
        long e2 = b2.verts[static_cast<size_t>(y)].eps[static_cast<size_t>(i)];
        int tv = -1;
        if (p1 > e2) {
          int fx = b1.f(i, x);
          if (fx >= 0) tv = vid(fx, y);
        } else {
          int fy = b2.f(i, y);
          if (fy >= 0) tv = vid(x, fy);
        }
        if (tv >= 0) {
          t.fE[static_cast<size_t>(i)][static_cast<size_t>(vid(x, y))] = tv;
          t.eE[static_cast<size_t>(i)][static_cast<size_t>(tv)] = vid(x, y);
        }
      }
  return t;
}

Crystal fold_crystal(const Crystal& bhat, const std::vector<int>& a_perm) {
  const CartanData& hat = bhat.cd;
  check(a_perm.size() == static_cast<size_t>(hat.rank), "BadArgument",
        "automorphism must permute the unfolded index set");
  if (bhat.size() > 1)
    for (const auto& v : bhat.verts)
      check(!v.mono.empty(), "BadArgument", "folding needs monomial payloads");

  // index orbits in order of their smallest member
  std::vector<int> orbit_of(static_cast<size_t>(hat.rank), -1);
  std::vector<std::vector<int>> orbits;
  for (int i = 0; i < hat.rank; ++i) {
    if (orbit_of[static_cast<size_t>(i)] >= 0) continue;
    std::vector<int> orb;
    int x = i;
    do {
      orbit_of[static_cast<size_t>(x)] = static_cast<int>(orbits.size());
      orb.push_back(x);
      x = a_perm[static_cast<size_t>(x)];
      check(x >= 0 && x < hat.rank, "BadArgument", "invalid permutation");
    } while (x != i);
    orbits.push_back(std::move(orb));
  }
  const int m = static_cast<int>(orbits.size());

  // folded Cartan datum: c_{AB} = sum over j in B of chat_{iA, j}
  std::vector<std::vector<long>> C(static_cast<size_t>(m), std::vector<long>(static_cast<size_t>(m), 0));
  std::vector<long> sizes(static_cast<size_t>(m));
  for (int A = 0; A < m; ++A) {
    sizes[static_cast<size_t>(A)] = static_cast<long>(orbits[static_cast<size_t>(A)].size());
    int rep = orbits[static_cast<size_t>(A)][0];
    for (int B = 0; B < m; ++B) {
      if (A == B) {
        C[static_cast<size_t>(A)][static_cast<size_t>(B)] = 2;
        continue;
      }
      long acc = 0;
      for (int j : orbits[static_cast<size_t>(B)])
        acc += hat.C[static_cast<size_t>(rep)][static_cast<size_t>(j)];
      C[static_cast<size_t>(A)][static_cast<size_t>(B)] = acc;
    }
  }
  CartanData fold_cd = validate_cartan(C, sizes);

  // induced action on monomials
  auto sigma = [&](const Monomial& mo) {
    Monomial out;
    for (const auto& [key, e] : mo)
      out[{a_perm[static_cast<size_t>(key.first)], key.second}] = e;
    return out;
  };
  const auto& top = bhat.verts[static_cast<size_t>(bhat.hw)];
  check(sigma(top.mono) == top.mono, "NonInvariantHighestWeight",
        "highest-weight monomial is not a-invariant");

  // collect a-fixed vertices
  std::vector<int> fixed;
  std::map<int, int> newid;
  for (int v = 0; v < bhat.size(); ++v) {
    const auto& vert = bhat.verts[static_cast<size_t>(v)];
    if (sigma(vert.mono) == vert.mono) {
      newid[v] = static_cast<int>(fixed.size());
      fixed.push_back(v);
    }
  }

  Crystal out;
  out.cd = fold_cd;
  out.depth = bhat.depth;
  out.complete = bhat.complete;
  for (int v : fixed) {
    const auto& vert = bhat.verts[static_cast<size_t>(v)];
    Crystal::V w;
    w.mono = vert.mono;
    w.label = vert.label;
    w.nu.resize(static_cast<size_t>(m));
    w.wt.c.resize(static_cast<size_t>(m));
    w.eps.resize(static_cast<size_t>(m));
    w.phi.resize(static_cast<size_t>(m));
    for (int A = 0; A < m; ++A) {
      int rep = orbits[static_cast<size_t>(A)][0];
      for (int j : orbits[static_cast<size_t>(A)]) {
        check(vert.nu[static_cast<size_t>(j)] == vert.nu[static_cast<size_t>(rep)],
              "OrbitOperatorMismatch", "root offset varies along an orbit");
        check(vert.eps[static_cast<size_t>(j)] == vert.eps[static_cast<size_t>(rep)],
              "OrbitOperatorMismatch", "string datum varies along an orbit");
        check(vert.wt.c[static_cast<size_t>(j)] == vert.wt.c[static_cast<size_t>(rep)],
              "OrbitOperatorMismatch", "weight varies along an orbit");
      }
      w.nu[static_cast<size_t>(A)] = vert.nu[static_cast<size_t>(rep)];
      w.wt.c[static_cast<size_t>(A)] = vert.wt.c[static_cast<size_t>(rep)];
      w.eps[static_cast<size_t>(A)] = vert.eps[static_cast<size_t>(rep)];
      w.phi[static_cast<size_t>(A)] =
          w.eps[static_cast<size_t>(A)] + pairing(fold_cd, A, w.wt);
    }
    out.verts.push_back(std::move(w));
  }
  out.hw = newid.at(bhat.hw);
  out.lambda = out.verts[static_cast<size_t>(out.hw)].wt;

  out.fE.assign(static_cast<size_t>(m), std::vector<int>(out.verts.size(), -1));
  out.eE.assign(static_cast<size_t>(m), std::vector<int>(out.verts.size(), -1));
  for (size_t k = 0; k < fixed.size(); ++k) {
    for (int A = 0; A < m; ++A) {
      int cur = fixed[k];
      bool dead = false;
      for (int j : orbits[static_cast<size_t>(A)]) {
        cur = bhat.f(j, cur);
        if (cur < 0) {
          dead = true;
          break;
        }
      }
      if (dead) continue;
      auto it = newid.find(cur);
      // the composite of commuting arrows lands on an a-fixed vertex
      check(it != newid.end(), "OrbitOperatorMismatch",
            "orbit operator left the a-fixed set");
      out.fE[static_cast<size_t>(A)][k] = it->second;
      out.eE[static_cast<size_t>(A)][static_cast<size_t>(it->second)] = static_cast<int>(k);
    }
  }
  return out;
}

namespace {

// BFS matching of the components rooted at (u0, w0); extends map/seen on
// success, leaves them untouched on failure.
bool match_component(const Crystal& b1, const Crystal& b2, int u0, int w0,
                     std::vector<int>& map, std::vector<int>& seen) {
  std::vector<int> trial_map = map, trial_seen = seen;
  std::deque<int> queue;
  auto bind = [&](int u, int w) {
    if (trial_map[static_cast<size_t>(u)] >= 0)
      return trial_map[static_cast<size_t>(u)] == w;
    if (trial_seen[static_cast<size_t>(w)]) return false;
    const auto& vu = b1.verts[static_cast<size_t>(u)];
    const auto& vw = b2.verts[static_cast<size_t>(w)];
    if (vu.wt != vw.wt || vu.eps != vw.eps || vu.phi != vw.phi || vu.nu != vw.nu)
      return false;
    trial_map[static_cast<size_t>(u)] = w;
    trial_seen[static_cast<size_t>(w)] = 1;
    queue.push_back(u);
    return true;
  };
  if (!bind(u0, w0)) return false;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    int w = trial_map[static_cast<size_t>(u)];
    for (int i = 0; i < b1.cd.rank; ++i) {
      int fu = b1.f(i, u), fw = b2.f(i, w);
      if ((fu < 0) != (fw < 0)) return false;
      if (fu >= 0 && !bind(fu, fw)) return false;
      int eu = b1.e(i, u), ew = b2.e(i, w);
      if ((eu < 0) != (ew < 0)) return false;
      if (eu >= 0 && !bind(eu, ew)) return false;
    }
  }
  map = std::move(trial_map);
  seen = std::move(trial_seen);
  return true;
}

} // namespace

std::optional<std::vector<int>> crystal_isomorphic(const Crystal& b1, const Crystal& b2) {
  if (b1.cd.C != b2.cd.C || b1.size() != b2.size()) return std::nullopt;
  // component tops: vertices killed by every e~_i, in index order
  auto tops = [](const Crystal& b) {
    std::vector<int> out;
    for (int v = 0; v < b.size(); ++v) {
      bool top = true;
      for (long e : b.verts[static_cast<size_t>(v)].eps)
        if (e != 0) top = false;
      if (top) out.push_back(v);
    }
    return out;
  };
  std::vector<int> t1 = tops(b1), t2 = tops(b2);
  if (t1.size() != t2.size()) return std::nullopt;

  std::vector<int> map(static_cast<size_t>(b1.size()), -1);
  std::vector<int> seen(static_cast<size_t>(b2.size()), 0);
  std::vector<bool> used(t2.size(), false);
  for (int u : t1) {
    bool matched = false;
    for (size_t k = 0; k < t2.size() && !matched; ++k) {
      if (used[k]) continue;
      if (b1.verts[static_cast<size_t>(u)].nu != b2.verts[static_cast<size_t>(t2[k])].nu)
        continue;
      if (match_component(b1, b2, u, t2[k], map, seen)) {
        used[k] = true;
        matched = true;
      }
    }
    if (!matched) return std::nullopt;
  }
  for (int v = 0; v < b1.size(); ++v)
    if (map[static_cast<size_t>(v)] < 0) return std::nullopt;
  return map;
}

bool crystal_window_match(const Crystal& b1, const Crystal& b2, long height) {
  if (b1.cd.C != b2.cd.C) return false;
  // per-offset counts
  std::map<std::vector<long>, long> c1, c2;
  for (int v = 0; v < b1.size(); ++v)
    if (b1.height(v) <= height) c1[b1.verts[static_cast<size_t>(v)].nu] += 1;
  for (int v = 0; v < b2.size(); ++v)
    if (b2.height(v) <= height) c2[b2.verts[static_cast<size_t>(v)].nu] += 1;
  if (c1 != c2) return false;
  // deterministic BFS matching of the f-edge structure inside the window
  const int rank = b1.cd.rank;
  std::map<int, int> map{{b1.hw, b2.hw}};
  std::deque<int> queue{b1.hw};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    int w = map.at(u);
    for (int i = 0; i < rank; ++i) {
      int fu = b1.f(i, u), fw = b2.f(i, w);
      bool in1 = fu >= 0 && b1.height(fu) <= height;
      bool in2 = fw >= 0 && b2.height(fw) <= height;
      if (in1 != in2) return false;
      if (!in1) continue;
      auto it = map.find(fu);
      if (it == map.end()) {
        map[fu] = fw;
        queue.push_back(fu);
      } else if (it->second != fw) {
        return false;
      }
    }
  }
  return true;
}

std::map<std::vector<long>, long> decompose_by_highest_weight(const Crystal& b) {
  std::map<std::vector<long>, long> out;
  for (const auto& v : b.verts) {
    bool top = true;
    for (long e : v.eps)
      if (e != 0) top = false;
    if (top) out[v.nu] += 1;
  }
  return out;
}

StringData string_data(const Crystal& b, int v, int i) {
  StringData s;
  s.eps = b.verts[static_cast<size_t>(v)].eps[static_cast<size_t>(i)];
  s.phi = b.verts[static_cast<size_t>(v)].phi[static_cast<size_t>(i)];
  int cur = v;
  for (long k = 0; k < s.eps; ++k) {
    cur = b.e(i, cur);
    check(cur >= 0, "InternalError", "string shorter than eps");
  }
  s.top = cur;
  return s;
}

} // namespace qf
