#include "qfold/oracle.hpp"

#include <functional>

namespace qf {

namespace {

// (alpha, beta) for root-lattice vectors via the symmetric matrix B.
Rat root_form(const CartanData& cd, const std::vector<long>& x, const std::vector<long>& y) {
  Rat acc(0);
  for (int i = 0; i < cd.rank; ++i) {
    if (x[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < cd.rank; ++j)
      acc += Rat(x[static_cast<size_t>(i)]) * Rat(cd.B[static_cast<size_t>(i)][static_cast<size_t>(j)]) *
             Rat(y[static_cast<size_t>(j)]);
  }
  return acc;
}

// enumerate nonzero nu with 0 <= nu <= bound componentwise
void enumerate_below(const std::vector<long>& bound, long max_height,
                     const std::function<void(const std::vector<long>&)>& fn) {
  std::vector<long> cur(bound.size(), 0);
  std::function<void(size_t, long)> rec = [&](size_t k, long height) {
    if (k == bound.size()) {
      if (height > 0) fn(cur);
      return;
    }
    for (long x = 0; x <= bound[k] && height + x <= max_height; ++x) {
      cur[k] = x;
      rec(k + 1, height + x);
    }
    cur[k] = 0;
  };
  rec(0, 0);
}

} // namespace

std::map<std::vector<long>, long> positive_roots(const CartanData& cd, long max_height) {
  // Peterson: (beta, beta - 2 rho) c_beta = sum_{b'+b''=beta} (b',b'') c_b' c_b''
  // with c_beta = sum_{n | beta} mult(beta/n)/n and (rho, alpha_i) = s_i.
  const size_t n = static_cast<size_t>(cd.rank);
  std::map<std::vector<long>, Rat> c;
  std::map<std::vector<long>, long> mult;
  // list all nu with height 1..max_height in height order
  std::vector<std::vector<long>> by_height;
  std::vector<long> bound(n, max_height);
  enumerate_below(bound, max_height, [&](const std::vector<long>& nu) {
    by_height.push_back(nu);
  });
  std::sort(by_height.begin(), by_height.end(),
            [&](const std::vector<long>& a, const std::vector<long>& b) {
              long ha = cd.height(a), hb = cd.height(b);
              if (ha != hb) return ha < hb;
              return a < b;
            });
  auto rho_pair = [&](const std::vector<long>& beta) {
    Rat acc(0);
    for (size_t i = 0; i < n; ++i) acc += Rat(beta[i]) * Rat(cd.s[i]);
    return acc;
  };
  for (const auto& beta : by_height) {
    long h = cd.height(beta);
    if (h == 1) {
      c[beta] = Rat(1);
      mult[beta] = 1;
      continue;
    }
    // RHS over ordered decompositions beta = b' + b'' with both nonzero
    Rat rhs(0);
    std::vector<long> bp(n, 0);
    std::function<void(size_t)> rec = [&](size_t k) {
      if (k == n) {
        long hp = cd.height(bp);
        if (hp == 0 || hp == h) return;
        auto it = c.find(bp);
        if (it == c.end()) return;
        std::vector<long> bq(n);
        for (size_t i = 0; i < n; ++i) bq[i] = beta[i] - bp[i];
        auto jt = c.find(bq);
        if (jt == c.end()) return;
        rhs += root_form(cd, bp, bq) * it->second * jt->second;
        return;
      }
      for (long x = 0; x <= beta[k]; ++x) {
        bp[k] = x;
        rec(k + 1);
      }
      bp[k] = 0;
    };
    rec(0);
    // divisor part sum_{n >= 2, n | beta} mult(beta/n)/n of c_beta
    Rat corr(0);
    for (long nn = 2; nn <= h; ++nn) {
      bool div = true;
      std::vector<long> bb(n);
      for (size_t i = 0; i < n; ++i) {
        if (beta[i] % nn != 0) {
          div = false;
          break;
        }
        bb[i] = beta[i] / nn;
      }
      if (!div) continue;
      auto it = mult.find(bb);
      if (it != mult.end()) corr += Rat(it->second, nn);
    }
    Rat lhs_coeff = root_form(cd, beta, beta) - 2 * rho_pair(beta);
    Rat cb;
    if (lhs_coeff == 0) {
      // (beta, beta - 2 rho) < 0 for every root of height >= 2, so a
      // vanishing coefficient certifies mult(beta) = 0; c_beta is the
      // divisor part and the equation degenerates to rhs = 0.
      check(rhs == 0, "InternalError", "inconsistent Peterson step");
      cb = corr;
    } else {
      cb = rhs / lhs_coeff;
    }
    Rat m = cb - corr;
    check(boost::multiprecision::denominator(m) == 1, "InternalError",
          "non-integral root multiplicity");
    Int mi = boost::multiprecision::numerator(m);
    check(mi >= 0, "InternalError", "negative root multiplicity");
    if (cb != 0) c[beta] = cb;
    if (mi > 0) mult[beta] = mi.convert_to<long>();
  }
  return mult;
}

CharacterTable freudenthal_character(const CartanData& cd, const Weight& lambda, long depth) {
  check(is_dominant(cd, lambda), "NotDominant", "highest weight must be dominant");
  check(depth >= 0, "DepthExceeded", "negative depth window");
  CharacterTable tab;
  tab.lambda = lambda;
  tab.depth = depth;
  const size_t n = static_cast<size_t>(cd.rank);
  auto roots = positive_roots(cd, depth);

  std::vector<std::vector<long>> by_height;
  enumerate_below(std::vector<long>(n, depth), depth, [&](const std::vector<long>& nu) {
    by_height.push_back(nu);
  });
  std::sort(by_height.begin(), by_height.end(),
            [&](const std::vector<long>& a, const std::vector<long>& b) {
              long ha = cd.height(a), hb = cd.height(b);
              if (ha != hb) return ha < hb;
              return a < b;
            });

  tab.mult[std::vector<long>(n, 0)] = 1;
  for (const auto& nu : by_height) {
    // mu = lambda - nu
    Weight mu = cd.lower(lambda, nu);
    // denominator (lambda + mu + 2 rho, nu)
    Weight wsum = lambda + mu + 2 * cd.rho();
    Rat denom = sym_form_root(cd, wsum, nu);
    Rat acc(0);
    for (const auto& [alpha, malpha] : roots) {
      long ha = cd.height(alpha);
      for (long k = 1; k * ha <= cd.height(nu); ++k) {
        std::vector<long> nu2(n);
        bool ok = true;
        for (size_t i = 0; i < n; ++i) {
          nu2[i] = nu[i] - k * alpha[i];
          if (nu2[i] < 0) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        auto it = tab.mult.find(nu2);
        if (it == tab.mult.end() || it->second == 0) continue;
        Weight muk = cd.lower(lambda, nu2); // mu + k alpha
        Rat term = sym_form_root(cd, muk, alpha);
        acc += Rat(2) * Rat(malpha) * Rat(it->second) * term;
      }
    }
    long m = 0;
    if (acc != 0) {
      check(denom != 0, "InternalError", "vanishing Freudenthal denominator");
      Rat mv = acc / denom;
      check(boost::multiprecision::denominator(mv) == 1, "InternalError",
            "non-integral weight multiplicity");
      Int mi = boost::multiprecision::numerator(mv);
      check(mi >= 0, "InternalError", "negative weight multiplicity");
      m = mi.convert_to<long>();
    }
    if (m > 0) tab.mult[nu] = m;
  }
  // drop zero entry bookkeeping: keep only positive multiplicities plus top
  return tab;
}

long freudenthal_multiplicity(const CartanData& cd, const Weight& lambda,
                              const std::vector<long>& nu, long depth) {
  check(cd.height(nu) <= depth, "DepthExceeded", "weight outside the depth window");
  CharacterTable tab = freudenthal_character(cd, lambda, depth);
  auto it = tab.mult.find(nu);
  return it == tab.mult.end() ? 0 : it->second;
}

bool is_finite_type(const CartanData& cd) {
  // Sylvester criterion on the symmetrized matrix B.
  const size_t n = static_cast<size_t>(cd.rank);
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = Rat(cd.B[i][j]);
  for (size_t k = 0; k < n; ++k) {
    // pivots of symmetric elimination are ratios of leading principal minors
    if (a[k][k] <= 0) return false;
    for (size_t r = k + 1; r < n; ++r) {
      if (a[r][k] == 0) continue;
      Rat f = a[r][k] / a[k][k];
      for (size_t cidx = k; cidx < n; ++cidx) a[r][cidx] -= f * a[k][cidx];
    }
  }
  return true;
}

Int weyl_dim(const CartanData& cd, const Weight& lambda) {
  check(is_finite_type(cd), "NotFiniteType", "Weyl dimension needs finite type");
  check(is_dominant(cd, lambda), "NotDominant", "highest weight must be dominant");
  const size_t n = static_cast<size_t>(cd.rank);
  // close the simple roots under simple reflections
  std::map<std::vector<long>, bool> roots;
  std::vector<std::vector<long>> queue;
  for (size_t i = 0; i < n; ++i) {
    std::vector<long> e(n, 0);
    e[i] = 1;
    roots[e] = true;
    queue.push_back(e);
  }
  size_t iterations = 0;
  while (!queue.empty()) {
    check(++iterations < 100000, "NotFiniteType", "root closure does not terminate");
    std::vector<long> alpha = queue.back();
    queue.pop_back();
    for (size_t i = 0; i < n; ++i) {
      // <i, alpha> in pairing coordinates = (C alpha)_i
      long r = 0;
      for (size_t j = 0; j < n; ++j) r += cd.C[i][j] * alpha[j];
      std::vector<long> beta = alpha;
      beta[i] -= r;
      bool positive = true, nonzero = false;
      for (long x : beta) {
        if (x < 0) positive = false;
        if (x != 0) nonzero = true;
      }
      if (!positive || !nonzero) continue;
      if (!roots.count(beta)) {
        roots[beta] = true;
        queue.push_back(beta);
      }
    }
  }
  Weight lr = lambda + cd.rho();
  Rat dim(1);
  for (const auto& [alpha, flag] : roots) {
    (void)flag;
    dim *= sym_form_root(cd, lr, alpha) / sym_form_root(cd, cd.rho(), alpha);
  }
  check(boost::multiprecision::denominator(dim) == 1, "InternalError",
        "non-integral Weyl dimension");
  return boost::multiprecision::numerator(dim);
}

CharacterTable char_convolve(const CartanData& cd, const CharacterTable& c1,
                             const CharacterTable& c2) {
  CharacterTable out;
  out.lambda = c1.lambda + c2.lambda;
  out.depth = std::min(c1.depth, c2.depth);
  for (const auto& [n1, m1] : c1.mult)
    for (const auto& [n2, m2] : c2.mult) {
      std::vector<long> nu(n1.size());
      for (size_t i = 0; i < nu.size(); ++i) nu[i] = n1[i] + n2[i];
      if (cd.height(nu) > out.depth) continue;
      out.mult[nu] += m1 * m2;
    }
  return out;
}

} // namespace qf
