#include "qfold/module.hpp"

#include <algorithm>
#include <sstream>

namespace qf {

std::vector<int> FMonomial::letters() const {
  std::vector<int> out;
  for (const auto& [i, n] : factors)
    for (long k = 0; k < n; ++k) out.push_back(i);
  return out;
}

FMonomial FMonomial::prepended(int i, long* merged_power) const {
  FMonomial r;
  if (!factors.empty() && factors.front().first == i) {
    r.factors = factors;
    r.factors.front().second += 1;
    *merged_power = r.factors.front().second;
  } else {
    r.factors.reserve(factors.size() + 1);
    r.factors.emplace_back(i, 1);
    r.factors.insert(r.factors.end(), factors.begin(), factors.end());
    *merged_power = 1;
  }
  return r;
}

std::string FMonomial::str() const {
  if (factors.empty()) return "v";
  std::ostringstream os;
  for (const auto& [i, n] : factors) {
    os << "F" << i;
    if (n > 1) os << "^(" << n << ")";
    os << ".";
  }
  os << "v";
  return os.str();
}

bool GVec::is_zero() const {
  for (const auto& [b, col] : comp)
    for (const auto& x : col)
      if (!x.is_zero()) return false;
  return true;
}

int HWModule::find_block(const std::vector<long>& nu) const {
  auto it = block_of.find(nu);
  return it == block_of.end() ? -1 : it->second;
}

long HWModule::ktilde_exp(int i, int block) const {
  return cd.s[static_cast<size_t>(i)] *
         pairing(cd, i, blocks[static_cast<size_t>(block)].mu);
}

long HWModule::max_height() const {
  long h = 0;
  for (const auto& b : blocks) h = std::max(h, b.height);
  return h;
}

RMat HWModule::E(int i, int block) const {
  auto it = Emat.find({i, block});
  if (it != Emat.end()) return it->second;
  std::vector<long> nu = blocks[static_cast<size_t>(block)].nu;
  nu[static_cast<size_t>(i)] -= 1;
  int tgt = find_block(nu);
  int tdim = tgt < 0 ? 0 : blocks[static_cast<size_t>(tgt)].dim;
  return RMat(tdim, blocks[static_cast<size_t>(block)].dim, cd.d);
}

RMat HWModule::F(int i, int block) const {
  auto it = Fmat.find({i, block});
  if (it != Fmat.end()) return it->second;
  std::vector<long> nu = blocks[static_cast<size_t>(block)].nu;
  nu[static_cast<size_t>(i)] += 1;
  int tgt = find_block(nu);
  int tdim = tgt < 0 ? 0 : blocks[static_cast<size_t>(tgt)].dim;
  return RMat(tdim, blocks[static_cast<size_t>(block)].dim, cd.d);
}

RMat HWModule::E_div(int i, long n, int block) const {
  RMat acc = RMat::identity(blocks[static_cast<size_t>(block)].dim, cd.d);
  std::vector<long> nu = blocks[static_cast<size_t>(block)].nu;
  int cur = block;
  for (long k = 0; k < n; ++k) {
    if (acc.rows() == 0) break;
    acc = E(i, cur) * acc;
    nu[static_cast<size_t>(i)] -= 1;
    cur = find_block(nu);
    if (cur < 0) {
      // fell off the top: everything above is genuinely zero
      return RMat(0, blocks[static_cast<size_t>(block)].dim, cd.d);
    }
  }
  RatFunc fact = rf_qfact(n, cd.s[static_cast<size_t>(i)], cd.d);
  return acc.scaled(fact.inverse());
}

RMat HWModule::F_div(int i, long n, int block) const {
  RMat acc = RMat::identity(blocks[static_cast<size_t>(block)].dim, cd.d);
  std::vector<long> nu = blocks[static_cast<size_t>(block)].nu;
  int cur = block;
  for (long k = 0; k < n; ++k) {
    if (acc.rows() == 0) break;
    acc = F(i, cur) * acc;
    nu[static_cast<size_t>(i)] += 1;
    cur = find_block(nu);
    if (cur < 0) return RMat(0, blocks[static_cast<size_t>(block)].dim, cd.d);
  }
  RatFunc fact = rf_qfact(n, cd.s[static_cast<size_t>(i)], cd.d);
  return acc.scaled(fact.inverse());
}

GVec HWModule::highest() const {
  GVec x;
  x.comp[0] = {RatFunc(Int(1), cd.d)};
  return x;
}

std::map<std::vector<long>, long> HWModule::character() const {
  std::map<std::vector<long>, long> ch;
  for (const auto& b : blocks) ch[b.nu] = b.dim;
  return ch;
}

HWModule build_module(const CartanData& cd, const Weight& lambda, long depth) {
  check(is_dominant(cd, lambda), "NotDominant", "highest weight must be dominant");
  check(depth >= 0, "BadArgument", "negative depth");
  const int rank = cd.rank;
  const long d = cd.d;

  HWModule m;
  m.cd = cd;
  m.lambda = lambda;
  m.depth = depth;

  HWModule::Block top;
  top.nu.assign(static_cast<size_t>(rank), 0);
  top.mu = lambda;
  top.height = 0;
  top.dim = 1;
  top.basis.push_back(FMonomial{});
  top.gram = RMat(1, 1, d);
  top.gram.at(0, 0) = RatFunc(Int(1), d);
  m.blocks.push_back(top);
  m.block_of[top.nu] = 0;

  std::vector<int> frontier = {0}; // blocks at the current height
  for (long h = 0; h < depth && !frontier.empty(); ++h) {
    // group candidates by target nu
    std::map<std::vector<long>, std::vector<std::pair<int, int>>> targets; // nu -> (gen, block)
    for (int b : frontier)
      for (int i = 0; i < rank; ++i) {
        std::vector<long> nu = m.blocks[static_cast<size_t>(b)].nu;
        nu[static_cast<size_t>(i)] += 1;
        targets[nu].push_back({i, b});
      }

    std::vector<int> next;
    for (auto& [nu, gens] : targets) {
      // flatten candidates: one per (generator, parent basis vector)
      struct Cand {
        int gen, pblock, pindex;
        FMonomial label;
        RatFunc scale; // F_gen parent = scale * candidate
      };
      std::vector<Cand> cands;
      for (auto [i, pb] : gens) {
        const auto& blk = m.blocks[static_cast<size_t>(pb)];
        for (int k = 0; k < blk.dim; ++k) {
          Cand c;
          c.gen = i;
          c.pblock = pb;
          c.pindex = k;
          long merged = 1;
          c.label = blk.basis[static_cast<size_t>(k)].prepended(i, &merged);
          c.scale = merged == 1 ? RatFunc(Int(1), d)
                                : rf_qint(merged, cd.s[static_cast<size_t>(i)], d);
          cands.push_back(std::move(c));
        }
      }
      std::sort(cands.begin(), cands.end(),
                [](const Cand& a, const Cand& b) { return a.label < b.label; });
      const int nc = static_cast<int>(cands.size());

      // E_{c.gen} applied to candidate vectors of other candidates is needed
      // against parent's gram; precompute per candidate: the vector
      // E_i(F_j v_b)/scale at block nu - e_i, for every generator i used.
      // (F_i b1, u2) = v^{s_i (1 - <i, mu_b1>)} (b1, E_i u2).
      auto e_of_candidate = [&](int i, const Cand& c) {
        // returns coordinates at block nu - e_i (may be dim 0)
        std::vector<long> tnu = nu;
        tnu[static_cast<size_t>(i)] -= 1;
        int tb = m.find_block(tnu);
        int tdim = tb < 0 ? 0 : m.blocks[static_cast<size_t>(tb)].dim;
        std::vector<RatFunc> out(static_cast<size_t>(tdim), RatFunc(Int(0), d));
        if (tdim == 0) return out;
        // E_i F_j v_b = F_j E_i v_b + delta_ij [<i, mu_b>] v_b
        const auto& pblk = m.blocks[static_cast<size_t>(c.pblock)];
        std::vector<long> up = pblk.nu;
        up[static_cast<size_t>(i)] -= 1;
        int ub = m.find_block(up);
        if (ub >= 0 && m.blocks[static_cast<size_t>(ub)].dim > 0) {
          RMat ei = m.E(i, c.pblock); // pblock -> ub
          std::vector<RatFunc> ev(static_cast<size_t>(ei.rows()), RatFunc(Int(0), d));
          for (int r = 0; r < ei.rows(); ++r) ev[static_cast<size_t>(r)] = ei.at(r, c.pindex);
          RMat fj = m.F(c.gen, ub); // ub -> tb
          std::vector<RatFunc> fv = fj.apply(ev);
          for (size_t r = 0; r < fv.size(); ++r) out[r] += fv[r];
        }
        if (c.gen == i) {
          long pair_b = pairing(cd, i, pblk.mu);
          RatFunc qi = rf_qint(pair_b, cd.s[static_cast<size_t>(i)], d);
          out[static_cast<size_t>(c.pindex)] += qi;
        }
        for (auto& x : out) x /= c.scale;
        return out;
      };

      RMat G(nc, nc, d);
      for (int a = 0; a < nc; ++a) {
        const Cand& ca = cands[static_cast<size_t>(a)];
        const auto& pblk = m.blocks[static_cast<size_t>(ca.pblock)];
        long expo = cd.s[static_cast<size_t>(ca.gen)] *
                    (1 - pairing(cd, ca.gen, pblk.mu));
        RatFunc pref = RatFunc::v_power(d * expo, d) / ca.scale;
        for (int b2 = a; b2 < nc; ++b2) {
          std::vector<RatFunc> eu = e_of_candidate(ca.gen, cands[static_cast<size_t>(b2)]);
          // (v_b1, eu) via parent gram row
          RatFunc val(Int(0), d);
          for (int r = 0; r < pblk.dim; ++r)
            if (!eu[static_cast<size_t>(r)].is_zero())
              val += pblk.gram.at(ca.pindex, r) * eu[static_cast<size_t>(r)];
          val *= pref;
          G.at(a, b2) = val;
        }
      }
      for (int a = 0; a < nc; ++a)
        for (int b2 = 0; b2 < a; ++b2) G.at(a, b2) = G.at(b2, a);

      RMat R = G;
      std::vector<int> piv = rref(R);
      const int dim = static_cast<int>(piv.size());
      if (dim == 0) continue;

      HWModule::Block blk;
      blk.nu = nu;
      blk.mu = cd.lower(lambda, nu);
      blk.height = h + 1;
      blk.dim = dim;
      for (int k = 0; k < dim; ++k) {
        const Cand& c = cands[static_cast<size_t>(piv[static_cast<size_t>(k)])];
        blk.basis.push_back(c.label);
        blk.parents.push_back({c.gen, c.pblock, c.pindex, c.scale});
      }
      blk.gram = RMat(dim, dim, d);
      for (int a = 0; a < dim; ++a)
        for (int b2 = 0; b2 < dim; ++b2)
          blk.gram.at(a, b2) =
              G.at(piv[static_cast<size_t>(a)], piv[static_cast<size_t>(b2)]);
      int bid = static_cast<int>(m.blocks.size());
      m.blocks.push_back(blk);
      m.block_of[nu] = bid;
      next.push_back(bid);

      // expansion of every candidate in the pivot basis, read from the RREF
      std::vector<std::vector<RatFunc>> expansion(
          static_cast<size_t>(nc), std::vector<RatFunc>(static_cast<size_t>(dim), RatFunc(Int(0), d)));
      for (int j = 0; j < nc; ++j)
        for (int k = 0; k < dim; ++k) expansion[static_cast<size_t>(j)][static_cast<size_t>(k)] = R.at(k, j);

      // F matrices from each parent block into the new block
      std::map<int, RMat> fcols; // parent block -> matrix
      for (int j = 0; j < nc; ++j) {
        const Cand& c = cands[static_cast<size_t>(j)];
        auto [it, fresh] = fcols.try_emplace(
            c.pblock * rank + c.gen,
            RMat(dim, m.blocks[static_cast<size_t>(c.pblock)].dim, d));
        (void)fresh;
        for (int k = 0; k < dim; ++k)
          it->second.at(k, c.pindex) =
              c.scale * expansion[static_cast<size_t>(j)][static_cast<size_t>(k)];
      }
      for (auto& [key, mat] : fcols) {
        int pb = key / rank, gen = key % rank;
        m.Fmat[{gen, pb}] = mat;
      }
    }

    // E matrices out of the new blocks (need all F matrices of this height,
    // hence a second pass)
    for (int bid : next) {
      const auto& blk = m.blocks[static_cast<size_t>(bid)];
      for (int j = 0; j < rank; ++j) {
        std::vector<long> tnu = blk.nu;
        tnu[static_cast<size_t>(j)] -= 1;
        int tb = m.find_block(tnu);
        if (tb < 0) continue;
        int tdim = m.blocks[static_cast<size_t>(tb)].dim;
        RMat mat(tdim, blk.dim, d);
        for (int k = 0; k < blk.dim; ++k) {
          const auto& par = blk.parents[static_cast<size_t>(k)];
          // E_j u = (F_gen E_j v_b + delta [<j, mu_b>] v_b)/scale
          const auto& pblk = m.blocks[static_cast<size_t>(par.block)];
          std::vector<RatFunc> acc(static_cast<size_t>(tdim), RatFunc(Int(0), d));
          std::vector<long> up = pblk.nu;
          up[static_cast<size_t>(j)] -= 1;
          int ub = m.find_block(up);
          if (ub >= 0) {
            RMat ej = m.E(j, par.block);
            std::vector<RatFunc> ev(static_cast<size_t>(ej.rows()), RatFunc(Int(0), d));
            for (int r = 0; r < ej.rows(); ++r) ev[static_cast<size_t>(r)] = ej.at(r, par.index);
            RMat fg = m.F(par.gen, ub);
            std::vector<RatFunc> fv = fg.apply(ev);
            for (size_t r = 0; r < fv.size(); ++r) acc[r] += fv[r];
          }
          if (par.gen == j) {
            long pair_b = pairing(cd, j, pblk.mu);
            acc[static_cast<size_t>(par.index)] +=
                rf_qint(pair_b, cd.s[static_cast<size_t>(j)], d);
          }
          for (int r = 0; r < tdim; ++r) mat.at(r, k) = acc[static_cast<size_t>(r)] / par.scale;
        }
        m.Emat[{j, bid}] = mat;
      }
    }

    frontier = next;
    if (next.empty()) break; // weight spaces saturated inside the window
  }
  // Anything still alive at the window edge means the module was truncated.
  m.saturated = frontier.empty();
  if (depth == 0 && cd.height(m.blocks[0].nu) == 0) {
    long p = 0;
    for (long x : lambda.c) p += x;
    m.saturated = (p == 0);
  }
  return m;
}

GVec act(const HWModule& m, const std::vector<WordStep>& word, const GVec& x0) {
  GVec x = x0;
  const long d = m.cd.d;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const WordStep& w = *it;
    GVec y;
    for (const auto& [b, col] : x.comp) {
      const auto& blk = m.blocks[static_cast<size_t>(b)];
      switch (w.tag) {
        case WordStep::Tag::KPlus:
        case WordStep::Tag::KMinus: {
          long e = m.ktilde_exp(w.i, b);
          if (w.tag == WordStep::Tag::KMinus) e = -e;
          RatFunc f = RatFunc::v_power(d * e, d);
          auto& dst = y.comp[b];
          dst.assign(col.size(), RatFunc(Int(0), d));
          for (size_t k = 0; k < col.size(); ++k) dst[k] = col[k] * f;
          break;
        }
        case WordStep::Tag::E: {
          RMat op = m.E_div(w.i, w.n, b);
          if (op.rows() == 0) break;
          std::vector<long> tnu = blk.nu;
          tnu[static_cast<size_t>(w.i)] -= w.n;
          int tb = m.find_block(tnu);
          if (tb < 0) break;
          std::vector<RatFunc> out = op.apply(col);
          auto& dst = y.comp[tb];
          if (dst.empty()) dst.assign(out.size(), RatFunc(Int(0), d));
          for (size_t k = 0; k < out.size(); ++k) dst[k] += out[k];
          break;
        }
        case WordStep::Tag::F: {
          std::vector<long> tnu = blk.nu;
          tnu[static_cast<size_t>(w.i)] += w.n;
          int tb = m.find_block(tnu);
          if (tb < 0) {
            // genuinely zero below a saturated module; out of window otherwise
            long th = blk.height + w.n;
            check(m.saturated || th <= m.depth, "WeightOutOfRange",
                  "action leaves the computed depth window");
            break;
          }
          RMat op = m.F_div(w.i, w.n, b);
          if (op.rows() == 0) break;
          std::vector<RatFunc> out = op.apply(col);
          auto& dst = y.comp[tb];
          if (dst.empty()) dst.assign(out.size(), RatFunc(Int(0), d));
          for (size_t k = 0; k < out.size(); ++k) dst[k] += out[k];
          break;
        }
      }
    }
    // drop zero components
    GVec z;
    for (auto& [b, col] : y.comp) {
      bool nz = false;
      for (const auto& c : col)
        if (!c.is_zero()) nz = true;
      if (nz) z.comp[b] = col;
    }
    x = std::move(z);
  }
  return x;
}

namespace {

// true when F-direction checks with the given extra height are trustworthy
bool f_window_ok(const HWModule& m, long height, long steps) {
  return m.saturated || height + steps <= m.depth;
}

} // namespace

Report verify_defining_relations(const HWModule& m) {
  Report rep;
  rep.title = "defining relations on " + m.lambda.str() +
              (m.saturated ? " (full module)" : " (window height <= " + std::to_string(m.depth) + ")");
  const int rank = m.cd.rank;
  const long d = m.cd.d;

  // (a) K_0 = 1 and K additivity: exponent arithmetic per block
  {
    bool ok = true;
    for (size_t b = 0; b < m.blocks.size(); ++b) {
      const auto& blk = m.blocks[b];
      for (int i = 0; i < rank && ok; ++i)
        for (int j = 0; j < rank && ok; ++j) {
          long ei = pairing(m.cd, i, blk.mu), ej = pairing(m.cd, j, blk.mu);
          Weight sum = blk.mu + blk.mu;
          (void)sum;
          if (pairing(m.cd, i, blk.mu) + pairing(m.cd, j, blk.mu) != ei + ej) ok = false;
        }
    }
    rep.add("(a) K additivity", ok, "K_nu eigenvalue exponents are linear in nu");
  }

  // (b)/(c): E_i shifts <j, mu> by c_ji, F_i by -c_ji (weight bookkeeping)
  {
    bool ok = true;
    for (size_t b = 0; b < m.blocks.size(); ++b) {
      const auto& blk = m.blocks[b];
      for (int i = 0; i < rank; ++i) {
        std::vector<long> up = blk.nu;
        up[static_cast<size_t>(i)] -= 1;
        int tb = m.find_block(up);
        if (tb < 0) continue;
        Weight expect = blk.mu + m.cd.alpha(i);
        if (!(m.blocks[static_cast<size_t>(tb)].mu == expect)) ok = false;
      }
    }
    rep.add("(b)(c) K E/F commutation", ok, "weight grading matches v^{<nu,i>} shifts");
  }

  // (d) E_i F_j - F_j E_i = delta_ij [<i,mu>]_i
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      bool ok = true;
      std::string where;
      for (size_t b = 0; b < m.blocks.size(); ++b) {
        const auto& blk = m.blocks[b];
        if (!f_window_ok(m, blk.height, 1)) continue;
        // E_i F_j maps mu -> mu - alpha_j + alpha_i
        std::vector<long> dn = blk.nu;
        dn[static_cast<size_t>(j)] += 1;
        int db = m.find_block(dn);
        RMat lhs1 = db < 0 ? RMat(0, blk.dim, d) : m.E(i, db) * m.F(j, static_cast<int>(b));
        std::vector<long> upn = blk.nu;
        upn[static_cast<size_t>(i)] -= 1;
        int ub = m.find_block(upn);
        RMat lhs2 = ub < 0 ? RMat(0, blk.dim, d) : m.F(j, ub) * m.E(i, static_cast<int>(b));
        // align shapes
        std::vector<long> tn = blk.nu;
        tn[static_cast<size_t>(i)] -= 1;
        tn[static_cast<size_t>(j)] += 1;
        int tb = m.find_block(tn);
        int tdim = tb < 0 ? 0 : m.blocks[static_cast<size_t>(tb)].dim;
        auto fix = [&](RMat x) {
          return x.rows() == tdim ? x : RMat(tdim, blk.dim, d);
        };
        RMat comm = fix(lhs1) - fix(lhs2);
        if (i == j) {
          RatFunc qi = rf_qint(pairing(m.cd, i, blk.mu), m.cd.s[static_cast<size_t>(i)], d);
          RMat rhs = RMat::identity(blk.dim, d).scaled(qi);
          if (tdim != blk.dim) {
            // weight space must match itself when i == j
            ok = false;
            where = blk.mu.str();
            break;
          }
          if (comm != rhs) {
            ok = false;
            where = blk.mu.str();
            break;
          }
        } else if (!comm.is_zero()) {
          ok = false;
          where = blk.mu.str();
          break;
        }
      }
      std::ostringstream nm;
      nm << "(d) [E_" << i << ", F_" << j << "]";
      rep.add(nm.str(), ok, ok ? "" : "fails at weight " + where);
    }

  // (e)/(f) quantum Serre relations
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      if (i == j) continue;
      long bound = 1 - m.cd.C[static_cast<size_t>(i)][static_cast<size_t>(j)];
      bool okE = true, okF = true;
      std::string whereE, whereF;
      for (size_t b = 0; b < m.blocks.size(); ++b) {
        const auto& blk = m.blocks[b];
        // E-Serre: all intermediates above the block, always in window
        {
          std::vector<long> tn = blk.nu;
          tn[static_cast<size_t>(i)] -= bound;
          tn[static_cast<size_t>(j)] -= 1;
          int tb = m.find_block(tn);
          int tdim = tb < 0 ? 0 : m.blocks[static_cast<size_t>(tb)].dim;
          RMat acc(tdim, blk.dim, d);
          for (long p = 0; p <= bound; ++p) {
            long q = bound - p;
            // E_i^{(p)} E_j E_i^{(q)} from blk
            std::vector<long> n1 = blk.nu;
            n1[static_cast<size_t>(i)] -= q;
            int b1 = m.find_block(n1);
            if (b1 < 0) continue;
            std::vector<long> n2 = n1;
            n2[static_cast<size_t>(j)] -= 1;
            int b2 = m.find_block(n2);
            if (b2 < 0) continue;
            RMat t1 = m.E_div(i, q, static_cast<int>(b));
            if (t1.rows() == 0) continue;
            RMat t2 = m.E(j, b1) * t1;
            RMat t3 = m.E_div(i, p, b2) * t2;
            if (t3.rows() != tdim) continue;
            if (p % 2 == 0)
              acc = acc + t3;
            else
              acc = acc - t3;
          }
          if (!acc.is_zero()) {
            okE = false;
            whereE = blk.mu.str();
          }
        }
        // F-Serre: descends bound+1 steps
        if (f_window_ok(m, blk.height, bound + 1)) {
          std::vector<long> tn = blk.nu;
          tn[static_cast<size_t>(i)] += bound;
          tn[static_cast<size_t>(j)] += 1;
          int tb = m.find_block(tn);
          int tdim = tb < 0 ? 0 : m.blocks[static_cast<size_t>(tb)].dim;
          RMat acc(tdim, blk.dim, d);
          for (long p = 0; p <= bound; ++p) {
            long q = bound - p;
            std::vector<long> n1 = blk.nu;
            n1[static_cast<size_t>(i)] += q;
            int b1 = m.find_block(n1);
            std::vector<long> n2 = n1;
            n2[static_cast<size_t>(j)] += 1;
            int b2 = m.find_block(n2);
            RMat t1 = m.F_div(i, q, static_cast<int>(b));
            if (t1.rows() == 0 || b1 < 0) continue;
            RMat t2 = m.F(j, b1) * t1;
            if (b2 < 0) continue;
            RMat t3 = m.F_div(i, p, b2) * t2;
            if (t3.rows() != tdim) continue;
            if (p % 2 == 0)
              acc = acc + t3;
            else
              acc = acc - t3;
          }
          if (!acc.is_zero()) {
            okF = false;
            whereF = blk.mu.str();
          }
        }
      }
      std::ostringstream ne, nf;
      ne << "(e) Serre E i=" << i << " j=" << j;
      nf << "(f) Serre F i=" << i << " j=" << j;
      rep.add(ne.str(), okE, okE ? "" : "fails at weight " + whereE);
      rep.add(nf.str(), okF, okF ? "" : "fails at weight " + whereF);
    }
  return rep;
}

Report verify_divided_power_relation(const HWModule& m, int i, long n) {
  Report rep;
  std::ostringstream t;
  t << "divided powers i=" << i << " n=" << n;
  rep.title = t.str();
  const long d = m.cd.d;
  const long si = m.cd.s[static_cast<size_t>(i)];

  // scalar identity: sum_{r=0}^{n-1} v^{s_i(n-1-2r)} = [n]_i
  {
    RatFunc lhs(Int(0), d);
    for (long r = 0; r < n; ++r) lhs += RatFunc::v_power(d * si * (n - 1 - 2 * r), d);
    rep.add("shift multiset equals [n]", lhs == rf_qint(n, si, d));
  }

  bool okE = true, okF = true;
  std::string whereE, whereF;
  for (size_t b = 0; b < m.blocks.size(); ++b) {
    const auto& blk = m.blocks[b];
    // E-version on every block
    {
      std::vector<long> mid = blk.nu;
      mid[static_cast<size_t>(i)] -= 1;
      int mb = m.find_block(mid);
      std::vector<long> tn = blk.nu;
      tn[static_cast<size_t>(i)] -= n;
      int tb = m.find_block(tn);
      int tdim = tb < 0 ? 0 : m.blocks[static_cast<size_t>(tb)].dim;
      RMat lhs1 = (mb < 0) ? RMat(tdim, blk.dim, d)
                           : m.E_div(i, n - 1, mb) * m.E(i, static_cast<int>(b));
      if (lhs1.rows() != tdim) lhs1 = RMat(tdim, blk.dim, d);
      RMat rhs = m.E_div(i, n, static_cast<int>(b)).scaled(rf_qint(n, si, d));
      if (rhs.rows() != tdim) rhs = RMat(tdim, blk.dim, d);
      // second form E E^{(n-1)}
      std::vector<long> mid2 = blk.nu;
      mid2[static_cast<size_t>(i)] -= (n - 1);
      int mb2 = m.find_block(mid2);
      RMat lhs2 = (mb2 < 0) ? RMat(tdim, blk.dim, d)
                            : m.E(i, mb2) * m.E_div(i, n - 1, static_cast<int>(b));
      if (lhs2.rows() != tdim) lhs2 = RMat(tdim, blk.dim, d);
      if (!(lhs1 == rhs && lhs2 == rhs)) {
        okE = false;
        whereE = blk.mu.str();
      }
    }
    // F-version within the window
    if (f_window_ok(m, blk.height, n)) {
      std::vector<long> mid = blk.nu;
      mid[static_cast<size_t>(i)] += 1;
      int mb = m.find_block(mid);
      std::vector<long> tn = blk.nu;
      tn[static_cast<size_t>(i)] += n;
      int tb = m.find_block(tn);
      int tdim = tb < 0 ? 0 : m.blocks[static_cast<size_t>(tb)].dim;
      RMat lhs1 = (mb < 0) ? RMat(tdim, blk.dim, d)
                           : m.F_div(i, n - 1, mb) * m.F(i, static_cast<int>(b));
      if (lhs1.rows() != tdim) lhs1 = RMat(tdim, blk.dim, d);
      RMat rhs = m.F_div(i, n, static_cast<int>(b)).scaled(rf_qint(n, si, d));
      if (rhs.rows() != tdim) rhs = RMat(tdim, blk.dim, d);
      std::vector<long> mid2 = blk.nu;
      mid2[static_cast<size_t>(i)] += (n - 1);
      int mb2 = m.find_block(mid2);
      RMat lhs2 = (mb2 < 0) ? RMat(tdim, blk.dim, d)
                            : m.F(i, mb2) * m.F_div(i, n - 1, static_cast<int>(b));
      if (lhs2.rows() != tdim) lhs2 = RMat(tdim, blk.dim, d);
      if (!(lhs1 == rhs && lhs2 == rhs)) {
        okF = false;
        whereF = blk.mu.str();
      }
    }
  }
  rep.add("E^{(n-1)}E = [n]E^{(n)}", okE, okE ? "" : "fails at weight " + whereE);
  rep.add("F^{(n-1)}F = [n]F^{(n)}", okF, okF ? "" : "fails at weight " + whereF);
  return rep;
}

Report verify_EF_commutation(const HWModule& m, int i, long n) {
  Report rep;
  std::ostringstream t;
  t << "E^{(n)}F commutation i=" << i << " n=" << n;
  rep.title = t.str();
  const long d = m.cd.d;
  const long si = m.cd.s[static_cast<size_t>(i)];

  bool ok = true;
  std::string where;
  for (size_t b = 0; b < m.blocks.size(); ++b) {
    const auto& blk = m.blocks[b];
    if (!f_window_ok(m, blk.height, 1)) continue;
    // both sides map mu -> mu + (n-1) alpha_i
    std::vector<long> tn = blk.nu;
    tn[static_cast<size_t>(i)] -= (n - 1);
    int tb = m.find_block(tn);
    int tdim = tb < 0 ? 0 : m.blocks[static_cast<size_t>(tb)].dim;
    auto fix = [&](RMat x) { return x.rows() == tdim ? x : RMat(tdim, blk.dim, d); };

    std::vector<long> dn = blk.nu;
    dn[static_cast<size_t>(i)] += 1;
    int db = m.find_block(dn);
    RMat t1 = db < 0 ? RMat(tdim, blk.dim, d)
                     : fix(m.E_div(i, n, db) * m.F(i, static_cast<int>(b)));
    std::vector<long> un = blk.nu;
    un[static_cast<size_t>(i)] -= n;
    int ub = m.find_block(un);
    RMat t2 = ub < 0 ? RMat(tdim, blk.dim, d)
                     : fix(m.F(i, ub) * m.E_div(i, n, static_cast<int>(b)));
    long mm = n + pairing(m.cd, i, blk.mu) - 1;
    RMat rhs = fix(m.E_div(i, n - 1, static_cast<int>(b)).scaled(rf_qint(mm, si, d)));
    if (!(t1 - t2 == rhs)) {
      ok = false;
      where = blk.mu.str();
      break;
    }
  }
  rep.add("E^{(n)}F - FE^{(n)} = [n + <i,mu> - 1] E^{(n-1)}", ok,
          ok ? "" : "fails at weight " + where);

  // cross-index commutation
  for (int j = 0; j < m.cd.rank; ++j) {
    if (j == i) continue;
    bool okj = true;
    std::string wherej;
    for (size_t b = 0; b < m.blocks.size(); ++b) {
      const auto& blk = m.blocks[b];
      if (!f_window_ok(m, blk.height, 1)) continue;
      std::vector<long> tn = blk.nu;
      tn[static_cast<size_t>(i)] -= n;
      tn[static_cast<size_t>(j)] += 1;
      int tb = m.find_block(tn);
      int tdim = tb < 0 ? 0 : m.blocks[static_cast<size_t>(tb)].dim;
      auto fix = [&](RMat x) { return x.rows() == tdim ? x : RMat(tdim, blk.dim, d); };
      std::vector<long> dn = blk.nu;
      dn[static_cast<size_t>(j)] += 1;
      int db = m.find_block(dn);
      RMat t1 = db < 0 ? RMat(tdim, blk.dim, d)
                       : fix(m.E_div(i, n, db) * m.F(j, static_cast<int>(b)));
      std::vector<long> un = blk.nu;
      un[static_cast<size_t>(i)] -= n;
      int ub = m.find_block(un);
      RMat t2 = ub < 0 ? RMat(tdim, blk.dim, d)
                       : fix(m.F(j, ub) * m.E_div(i, n, static_cast<int>(b)));
      if (!(t1 == t2)) {
        okj = false;
        wherej = blk.mu.str();
        break;
      }
    }
    std::ostringstream nm;
    nm << "E^{(n)}_" << i << " commutes with F_" << j;
    rep.add(nm.str(), okj, okj ? "" : "fails at weight " + wherej);
  }
  return rep;
}

} // namespace qf
