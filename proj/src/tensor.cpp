#include "qfold/tensor.hpp"

#include <functional>
#include <sstream>

namespace qf {

namespace {

RMat scalar_identity(int n, const RatFunc& f) {
  RMat m = RMat::identity(n, f.denom());
  return m.scaled(f);
}

// enumerate nu >= 0 of the given height
void each_nu(int rank, long height, const std::function<void(const std::vector<long>&)>& fn) {
  std::vector<long> nu(static_cast<size_t>(rank), 0);
  std::function<void(size_t, long)> rec = [&](size_t k, long rem) {
    if (k + 1 == static_cast<size_t>(rank)) {
      nu[k] = rem;
      fn(nu);
      nu[k] = 0;
      return;
    }
    for (long x = 0; x <= rem; ++x) {
      nu[k] = x;
      rec(k + 1, rem - x);
    }
    nu[k] = 0;
  };
  if (rank == 0) return;
  rec(0, height);
}

} // namespace

TensorModule tensor_module(std::vector<const HWModule*> factors) {
  check(!factors.empty(), "BadArgument", "empty tensor product");
  for (const auto* f : factors)
    check(f->cd.C == factors[0]->cd.C && f->cd.s == factors[0]->cd.s &&
              f->cd.d == factors[0]->cd.d,
          "CartanMismatch", "tensor factors over different Cartan data");
  TensorModule t;
  t.factors = factors;
  t.space = std::make_unique<GradedSpace>(factors);
  return t;
}

bool TensorModule::saturated() const {
  for (const auto* f : factors)
    if (!f->saturated) return false;
  return true;
}

GradedOp TensorModule::deltaE(int i) const {
  const GradedSpace& s = *space;
  const long d = s.denom();
  GradedOp op = GradedOp::zero(s, s);
  const size_t nf = factors.size();
  for (size_t c = 0; c < s.comps.size(); ++c) {
    const auto& comp = s.comps[c];
    for (size_t k = 0; k < nf; ++k) {
      std::vector<int> tgt = comp.fblock;
      std::vector<long> nu = factors[k]->blocks[static_cast<size_t>(tgt[k])].nu;
      nu[static_cast<size_t>(i)] -= 1;
      int tb = factors[k]->find_block(nu);
      if (tb < 0) continue;
      tgt[k] = tb;
      int tc = s.find(tgt);
      if (tc < 0) continue;
      RMat m(1, 1, d);
      m.at(0, 0) = RatFunc(Int(1), d);
      for (size_t f = 0; f < nf; ++f) {
        int fdim = factors[f]->blocks[static_cast<size_t>(comp.fblock[f])].dim;
        if (f < k) {
          long e = factors[f]->ktilde_exp(i, comp.fblock[f]);
          m = m.kron(scalar_identity(fdim, RatFunc::v_power(d * e, d)));
        } else if (f == k) {
          m = m.kron(factors[f]->E(i, comp.fblock[f]));
        } else {
          m = m.kron(RMat::identity(fdim, d));
        }
      }
      op.add_block(static_cast<int>(c), tc, std::move(m));
    }
  }
  op.prune();
  return op;
}

GradedOp TensorModule::deltaF(int i) const {
  const GradedSpace& s = *space;
  const long d = s.denom();
  GradedOp op = GradedOp::zero(s, s);
  const size_t nf = factors.size();
  for (size_t c = 0; c < s.comps.size(); ++c) {
    const auto& comp = s.comps[c];
    for (size_t k = 0; k < nf; ++k) {
      std::vector<int> tgt = comp.fblock;
      std::vector<long> nu = factors[k]->blocks[static_cast<size_t>(tgt[k])].nu;
      nu[static_cast<size_t>(i)] += 1;
      int tb = factors[k]->find_block(nu);
      if (tb < 0) continue;
      tgt[k] = tb;
      int tc = s.find(tgt);
      if (tc < 0) continue;
      RMat m(1, 1, d);
      m.at(0, 0) = RatFunc(Int(1), d);
      for (size_t f = 0; f < nf; ++f) {
        int fdim = factors[f]->blocks[static_cast<size_t>(comp.fblock[f])].dim;
        if (f < k) {
          m = m.kron(RMat::identity(fdim, d));
        } else if (f == k) {
          m = m.kron(factors[f]->F(i, comp.fblock[f]));
        } else {
          long e = factors[f]->ktilde_exp(i, comp.fblock[f]);
          m = m.kron(scalar_identity(fdim, RatFunc::v_power(-d * e, d)));
        }
      }
      op.add_block(static_cast<int>(c), tc, std::move(m));
    }
  }
  op.prune();
  return op;
}

GradedOp TensorModule::ktilde(int i, int sign) const {
  const GradedSpace& s = *space;
  const long d = s.denom();
  GradedOp op = GradedOp::zero(s, s);
  for (size_t c = 0; c < s.comps.size(); ++c) {
    long e = s.ktilde_exp(i, s.comps[c]);
    op.add_block(static_cast<int>(c), static_cast<int>(c),
                 scalar_identity(s.comps[c].dim, RatFunc::v_power(sign * d * e, d)));
  }
  return op;
}

GradedOp TensorModule::deltaE_div(int i, long n) const {
  GradedOp acc = GradedOp::identity(*space);
  GradedOp e = deltaE(i);
  for (long k = 0; k < n; ++k) acc = e.compose(acc);
  return acc.scaled(
      rf_qfact(n, factors[0]->cd.s[static_cast<size_t>(i)], space->denom()).inverse());
}

GradedOp TensorModule::deltaF_div(int i, long n) const {
  GradedOp acc = GradedOp::identity(*space);
  GradedOp f = deltaF(i);
  for (long k = 0; k < n; ++k) acc = f.compose(acc);
  return acc.scaled(
      rf_qfact(n, factors[0]->cd.s[static_cast<size_t>(i)], space->denom()).inverse());
}

std::map<std::vector<long>, long> TensorModule::character() const {
  std::map<std::vector<long>, long> ch;
  for (const auto& c : space->comps) ch[c.nu_total] += c.dim;
  return ch;
}

Report verify_tensor_relations(const TensorModule& t) {
  Report rep;
  rep.title = "coproduct defining relations";
  const CartanData& cd = t.factors[0]->cd;
  const long d = cd.d;
  check(t.saturated(), "BadArgument", "relation suite needs saturated tensor factors");

  for (int i = 0; i < cd.rank; ++i)
    for (int j = 0; j < cd.rank; ++j) {
      GradedOp comm =
          t.deltaE(i).compose(t.deltaF(j)) - t.deltaF(j).compose(t.deltaE(i));
      bool ok;
      if (i == j) {
        GradedOp rhs = GradedOp::zero(*t.space, *t.space);
        for (size_t c = 0; c < t.space->comps.size(); ++c) {
          long e = t.space->ktilde_exp(i, t.space->comps[c]) /
                   cd.s[static_cast<size_t>(i)];
          rhs.add_block(static_cast<int>(c), static_cast<int>(c),
                        scalar_identity(t.space->comps[c].dim,
                                        rf_qint(e, cd.s[static_cast<size_t>(i)], d)));
        }
        rhs.prune();
        ok = comm.equals(rhs);
      } else {
        ok = comm.is_zero();
      }
      std::ostringstream nm;
      nm << "(d) [Delta E_" << i << ", Delta F_" << j << "]";
      rep.add(nm.str(), ok);
    }

  for (int i = 0; i < cd.rank; ++i)
    for (int j = 0; j < cd.rank; ++j) {
      if (i == j) continue;
      long bound = 1 - cd.C[static_cast<size_t>(i)][static_cast<size_t>(j)];
      GradedOp accE = GradedOp::zero(*t.space, *t.space);
      GradedOp accF = GradedOp::zero(*t.space, *t.space);
      for (long p = 0; p <= bound; ++p) {
        long q = bound - p;
        GradedOp te =
            t.deltaE_div(i, p).compose(t.deltaE(j)).compose(t.deltaE_div(i, q));
        GradedOp tf =
            t.deltaF_div(i, p).compose(t.deltaF(j)).compose(t.deltaF_div(i, q));
        if (p % 2 == 0) {
          accE = accE + te;
          accF = accF + tf;
        } else {
          accE = accE - te;
          accF = accF - tf;
        }
      }
      std::ostringstream ne, nf;
      ne << "(e) Serre E i=" << i << " j=" << j;
      nf << "(f) Serre F i=" << i << " j=" << j;
      rep.add(ne.str(), accE.is_zero());
      rep.add(nf.str(), accF.is_zero());
    }

  bool kok = true;
  for (const auto& c : t.space->comps)
    for (int i = 0; i < cd.rank; ++i) {
      long total = 0;
      for (size_t f = 0; f < t.factors.size(); ++f)
        total += t.factors[f]->ktilde_exp(i, c.fblock[f]);
      if (total != t.space->ktilde_exp(i, c)) kok = false;
    }
  rep.add("(a)(b)(c) K exponents additive", kok);
  return rep;
}

GradedOp bar_on_tensor(const TensorModule& t) {
  // every basis vector is a (product of) divided-power monomial vectors,
  // all bar-fixed, so the matrix is the identity and only the semilinear
  // twist carries the involution
  GradedOp b = GradedOp::identity(*t.space);
  b.semilinear = true;
  return b;
}

GradedOp bar_on_module(const TensorModule& single_factor) {
  check(single_factor.factors.size() == 1, "BadArgument",
        "module bar takes the one-factor tensor view");
  return bar_on_tensor(single_factor);
}

// ---------------------------------------------------------------------------
// quasi-R-matrix

namespace {

// The four factor parts of the coproduct generators on a 2-factor module:
//   A_i = E_i ⊗ 1, B_i = K~_i ⊗ E_i, C_i = F_i ⊗ K~_{-i}, D_i = 1 ⊗ F_i.
struct CoproductParts {
  std::vector<GradedOp> A, B, C, D;
};

CoproductParts coproduct_parts(const TensorModule& t) {
  const GradedSpace& s = *t.space;
  const HWModule& m1 = *t.factors[0];
  const HWModule& m2 = *t.factors[1];
  const long d = s.denom();
  CoproductParts out;
  for (int i = 0; i < m1.cd.rank; ++i) {
    GradedOp a = GradedOp::zero(s, s), b = GradedOp::zero(s, s);
    GradedOp cc = GradedOp::zero(s, s), dd = GradedOp::zero(s, s);
    for (size_t c = 0; c < s.comps.size(); ++c) {
      const auto& comp = s.comps[c];
      int d1 = m1.blocks[static_cast<size_t>(comp.fblock[0])].dim;
      int d2 = m2.blocks[static_cast<size_t>(comp.fblock[1])].dim;
      auto shifted = [&](int which, long delta) {
        const HWModule& mf = which == 0 ? m1 : m2;
        std::vector<long> nu = mf.blocks[static_cast<size_t>(comp.fblock[which])].nu;
        nu[static_cast<size_t>(i)] += delta;
        int tb = mf.find_block(nu);
        if (tb < 0) return -1;
        std::vector<int> tgt = comp.fblock;
        tgt[static_cast<size_t>(which)] = tb;
        return s.find(tgt);
      };
      int upA = shifted(0, -1);
      if (upA >= 0)
        a.add_block(static_cast<int>(c), upA,
                    m1.E(i, comp.fblock[0]).kron(RMat::identity(d2, d)));
      int upB = shifted(1, -1);
      if (upB >= 0) {
        long e = m1.ktilde_exp(i, comp.fblock[0]);
        b.add_block(static_cast<int>(c), upB,
                    scalar_identity(d1, RatFunc::v_power(d * e, d))
                        .kron(m2.E(i, comp.fblock[1])));
      }
      int dnC = shifted(0, 1);
      if (dnC >= 0) {
        long e = m2.ktilde_exp(i, comp.fblock[1]);
        cc.add_block(static_cast<int>(c), dnC,
                     m1.F(i, comp.fblock[0])
                         .kron(scalar_identity(d2, RatFunc::v_power(-d * e, d))));
      }
      int dnD = shifted(1, 1);
      if (dnD >= 0)
        dd.add_block(static_cast<int>(c), dnD,
                     RMat::identity(d1, d).kron(m2.F(i, comp.fblock[1])));
    }
    a.prune();
    b.prune();
    cc.prune();
    dd.prune();
    out.A.push_back(std::move(a));
    out.B.push_back(std::move(b));
    out.C.push_back(std::move(cc));
    out.D.push_back(std::move(dd));
  }
  return out;
}

} // namespace

GradedOp compute_theta(const TensorModule& t, long depth) {
  check(t.factors.size() == 2, "BadArgument", "quasi-R-matrix needs two factors");
  const GradedSpace& s = *t.space;
  const CartanData& cd = t.factors[0]->cd;
  const long d = cd.d;
  const int rank = cd.rank;
  const HWModule& m1 = *t.factors[0];
  const HWModule& m2 = *t.factors[1];

  CoproductParts parts = coproduct_parts(t);

  // component reached from c by the nu-displacement (dn1, dn2); -1 if absent
  auto comp_at = [&](int c, const std::vector<long>& dn1, const std::vector<long>& dn2) {
    const auto& comp = s.comps[static_cast<size_t>(c)];
    std::vector<long> n1 = m1.blocks[static_cast<size_t>(comp.fblock[0])].nu;
    std::vector<long> n2 = m2.blocks[static_cast<size_t>(comp.fblock[1])].nu;
    for (int k = 0; k < rank; ++k) {
      n1[static_cast<size_t>(k)] += dn1[static_cast<size_t>(k)];
      n2[static_cast<size_t>(k)] += dn2[static_cast<size_t>(k)];
    }
    int b1 = m1.find_block(n1), b2 = m2.find_block(n2);
    if (b1 < 0 || b2 < 0) return -1;
    return s.find({b1, b2});
  };
  auto neg = [&](std::vector<long> v) {
    for (long& x : v) x = -x;
    return v;
  };

  // theta blocks by stage: stage[nu] maps source comp -> matrix
  std::map<std::vector<long>, std::map<int, RMat>> theta_blocks;
  auto theta_known = [&](const std::vector<long>& nu, int sc, int tc) -> RMat {
    int rows = s.comps[static_cast<size_t>(tc)].dim;
    int cols = s.comps[static_cast<size_t>(sc)].dim;
    if (cd.height(nu) == 0) return RMat::identity(rows, d);
    auto it = theta_blocks.find(nu);
    if (it != theta_blocks.end()) {
      auto jt = it->second.find(sc);
      if (jt != it->second.end()) return jt->second;
    }
    return RMat(rows, cols, d);
  };

  long max_h = std::min(depth, m1.max_height());
  for (long h = 1; h <= max_h; ++h) {
    // variables: X_nu from source comp sc to comp_at(sc, +nu, -nu)
    struct Var {
      std::vector<long> nu;
      int sc, tc, rows, cols, offset;
    };
    std::vector<Var> vars;
    std::map<std::pair<std::vector<long>, int>, int> vindex;
    int total = 0;
    each_nu(rank, h, [&](const std::vector<long>& nu) {
      for (size_t c = 0; c < s.comps.size(); ++c) {
        int tc = comp_at(static_cast<int>(c), nu, neg(nu));
        if (tc < 0) continue;
        Var v;
        v.nu = nu;
        v.sc = static_cast<int>(c);
        v.tc = tc;
        v.rows = s.comps[static_cast<size_t>(tc)].dim;
        v.cols = s.comps[c].dim;
        v.offset = total;
        total += v.rows * v.cols;
        vindex[{nu, static_cast<int>(c)}] = static_cast<int>(vars.size());
        vars.push_back(std::move(v));
      }
    });
    if (vars.empty()) continue;

    std::vector<std::vector<RatFunc>> rows;
    std::vector<RatFunc> rhs;
    auto fresh_rows = [&](int n) {
      int base = static_cast<int>(rows.size());
      for (int k = 0; k < n; ++k) {
        rows.emplace_back(static_cast<size_t>(total), RatFunc(Int(0), d));
        rhs.emplace_back(Int(0), d);
      }
      return base;
    };
    // result += sign * L * X  (block rows: L.rows x X.cols)
    auto add_left = [&](int base, const RMat& L, const Var& x, int sign) {
      for (int r = 0; r < L.rows(); ++r)
        for (int k = 0; k < L.cols(); ++k) {
          if (L.at(r, k).is_zero()) continue;
          RatFunc f = sign > 0 ? L.at(r, k) : -L.at(r, k);
          for (int c = 0; c < x.cols; ++c)
            rows[static_cast<size_t>(base + r * x.cols + c)]
                [static_cast<size_t>(x.offset + k * x.cols + c)] += f;
        }
    };
    // result += sign * X * R  (block rows: X.rows x R.cols)
    auto add_right = [&](int base, const Var& x, const RMat& R, int sign) {
      for (int r = 0; r < x.rows; ++r)
        for (int k = 0; k < x.cols; ++k)
          for (int c = 0; c < R.cols(); ++c) {
            if (R.at(k, c).is_zero()) continue;
            RatFunc f = sign > 0 ? R.at(k, c) : -R.at(k, c);
            rows[static_cast<size_t>(base + r * R.cols() + c)]
                [static_cast<size_t>(x.offset + r * x.cols + k)] += f;
          }
    };
    // move sign * M to the right-hand side
    auto add_const = [&](int base, const RMat& M, int sign) {
      for (int r = 0; r < M.rows(); ++r)
        for (int c = 0; c < M.cols(); ++c) {
          if (M.at(r, c).is_zero()) continue;
          rhs[static_cast<size_t>(base + r * M.cols() + c)] -=
              sign > 0 ? M.at(r, c) : -M.at(r, c);
        }
    };

    std::vector<long> zero(static_cast<size_t>(rank), 0);
    each_nu(rank, h, [&](const std::vector<long>& nu) {
      for (int i = 0; i < rank; ++i) {
        std::vector<long> ei(static_cast<size_t>(rank), 0);
        ei[static_cast<size_t>(i)] = 1;
        std::vector<long> nu_prev = nu;
        nu_prev[static_cast<size_t>(i)] -= 1;
        bool has_prev = nu_prev[static_cast<size_t>(i)] >= 0;

        const GradedOp& A = parts.A[static_cast<size_t>(i)];
        const GradedOp& B = parts.B[static_cast<size_t>(i)];
        const GradedOp& C = parts.C[static_cast<size_t>(i)];
        const GradedOp& D = parts.D[static_cast<size_t>(i)];

        for (size_t sc = 0; sc < s.comps.size(); ++sc) {
          // ---- E_i equation, displacement (nu - e_i, -nu)
          {
            std::vector<long> dn1(static_cast<size_t>(rank)), dn2(static_cast<size_t>(rank));
            for (int k = 0; k < rank; ++k) {
              dn1[static_cast<size_t>(k)] = nu[static_cast<size_t>(k)] - ei[static_cast<size_t>(k)];
              dn2[static_cast<size_t>(k)] = -nu[static_cast<size_t>(k)];
            }
            int tc = comp_at(static_cast<int>(sc), dn1, dn2);
            if (tc >= 0) {
              int tdim = s.comps[static_cast<size_t>(tc)].dim;
              int sdim = s.comps[sc].dim;
              int sA = comp_at(static_cast<int>(sc), neg(ei), zero);
              const RMat* Ablk_s = sA >= 0 ? A.block(static_cast<int>(sc), sA) : nullptr;
              int tX = comp_at(static_cast<int>(sc), nu, neg(nu));
              const RMat* Ablk_t = tX >= 0 ? A.block(tX, tc) : nullptr;
              int sB = comp_at(static_cast<int>(sc), zero, neg(ei));
              const RMat* Bblk_s = sB >= 0 ? B.block(static_cast<int>(sc), sB) : nullptr;
              int tP = has_prev ? comp_at(static_cast<int>(sc), nu_prev, neg(nu_prev)) : -1;
              const RMat* Bblk_t = tP >= 0 ? B.block(tP, tc) : nullptr;
              if (Ablk_s || Ablk_t || Bblk_s || Bblk_t) {
                int base = fresh_rows(tdim * sdim);
                if (Ablk_s) {
                  auto vit = vindex.find({nu, sA});
                  if (vit != vindex.end())
                    add_right(base, vars[static_cast<size_t>(vit->second)],
                              Ablk_s->entrywise_bar(), +1);
                }
                if (has_prev && Bblk_s)
                  add_const(base,
                            theta_known(nu_prev, sB, tc) * Bblk_s->entrywise_bar(), +1);
                if (Ablk_t) {
                  auto vit = vindex.find({nu, static_cast<int>(sc)});
                  if (vit != vindex.end())
                    add_left(base, *Ablk_t, vars[static_cast<size_t>(vit->second)], -1);
                }
                if (has_prev && Bblk_t)
                  add_const(base,
                            *Bblk_t * theta_known(nu_prev, static_cast<int>(sc), tP), -1);
              }
            }
          }
          // ---- F_i equation, displacement (nu, -nu + e_i)
          {
            std::vector<long> dn1(static_cast<size_t>(rank)), dn2(static_cast<size_t>(rank));
            for (int k = 0; k < rank; ++k) {
              dn1[static_cast<size_t>(k)] = nu[static_cast<size_t>(k)];
              dn2[static_cast<size_t>(k)] = -nu[static_cast<size_t>(k)] + ei[static_cast<size_t>(k)];
            }
            int tc = comp_at(static_cast<int>(sc), dn1, dn2);
            if (tc >= 0) {
              int tdim = s.comps[static_cast<size_t>(tc)].dim;
              int sdim = s.comps[sc].dim;
              int sD = comp_at(static_cast<int>(sc), zero, ei);
              const RMat* Dblk_s = sD >= 0 ? D.block(static_cast<int>(sc), sD) : nullptr;
              int sC = comp_at(static_cast<int>(sc), ei, zero);
              const RMat* Cblk_s = sC >= 0 ? C.block(static_cast<int>(sc), sC) : nullptr;
              int tX = comp_at(static_cast<int>(sc), nu, neg(nu));
              const RMat* Dblk_t = tX >= 0 ? D.block(tX, tc) : nullptr;
              int tP = has_prev ? comp_at(static_cast<int>(sc), nu_prev, neg(nu_prev)) : -1;
              const RMat* Cblk_t = tP >= 0 ? C.block(tP, tc) : nullptr;
              if (Dblk_s || Cblk_s || Dblk_t || Cblk_t) {
                int base = fresh_rows(tdim * sdim);
                if (Dblk_s) {
                  auto vit = vindex.find({nu, sD});
                  if (vit != vindex.end())
                    add_right(base, vars[static_cast<size_t>(vit->second)],
                              Dblk_s->entrywise_bar(), +1);
                }
                if (has_prev && Cblk_s)
                  add_const(base,
                            theta_known(nu_prev, sC, tc) * Cblk_s->entrywise_bar(), +1);
                if (Dblk_t) {
                  auto vit = vindex.find({nu, static_cast<int>(sc)});
                  if (vit != vindex.end())
                    add_left(base, *Dblk_t, vars[static_cast<size_t>(vit->second)], -1);
                }
                if (has_prev && Cblk_t)
                  add_const(base,
                            *Cblk_t * theta_known(nu_prev, static_cast<int>(sc), tP), -1);
              }
            }
          }
        }
      }
    });

    if (rows.empty()) {
      // nothing constrains this stage; only possible when there are no
      // variables either (handled above) — otherwise the system is singular
      fail("Underdetermined", "no equations constrain a quasi-R-matrix stage");
    }
    RMat Amat(static_cast<int>(rows.size()), total, d);
    RMat Bvec(static_cast<int>(rows.size()), 1, d);
    for (size_t r = 0; r < rows.size(); ++r) {
      for (int c = 0; c < total; ++c) Amat.at(static_cast<int>(r), c) = rows[r][static_cast<size_t>(c)];
      Bvec.at(static_cast<int>(r), 0) = rhs[r];
    }
    bool unique = false;
    auto sol = solve(Amat, Bvec, &unique);
    check(sol.has_value(), "Inconsistent",
          "quasi-R-matrix constraints have no solution at stage " + std::to_string(h));
    check(unique, "Underdetermined",
          "quasi-R-matrix constraints have a kernel at stage " + std::to_string(h));
    for (const Var& v : vars) {
      RMat m(v.rows, v.cols, d);
      bool nz = false;
      for (int r = 0; r < v.rows; ++r)
        for (int c = 0; c < v.cols; ++c) {
          m.at(r, c) = sol->at(v.offset + r * v.cols + c, 0);
          if (!m.at(r, c).is_zero()) nz = true;
        }
      if (nz) theta_blocks[v.nu][v.sc] = std::move(m);
    }
  }

  GradedOp theta = GradedOp::identity(s);
  for (const auto& [nu, per_src] : theta_blocks)
    for (const auto& [sc, mat] : per_src) {
      int tc = comp_at(sc, nu, neg(nu));
      theta.add_block(sc, tc, mat);
    }
  theta.prune();

  // global verification of the characterizing property
  for (int i = 0; i < rank; ++i) {
    GradedOp dE = t.deltaE(i), dF = t.deltaF(i);
    check(theta.compose(dE.entrywise_bar()).equals(dE.compose(theta)), "Inconsistent",
          "Theta fails the E-intertwining check");
    check(theta.compose(dF.entrywise_bar()).equals(dF.compose(theta)), "Inconsistent",
          "Theta fails the F-intertwining check");
  }
  return theta;
}

GradedOp psi_operator(const TensorModule& t, const GradedOp& theta) {
  return theta.compose(bar_on_tensor(t));
}

GradedOp braiding(const TensorModule& t_ij, const TensorModule& t_ji, long depth) {
  check(t_ij.factors.size() == 2 && t_ji.factors.size() == 2, "BadArgument",
        "braiding needs two factors");
  check(t_ij.factors[0] == t_ji.factors[1] && t_ij.factors[1] == t_ji.factors[0],
        "CartanMismatch", "swapped tensor module must share the factor modules");
  const CartanData& cd = t_ij.factors[0]->cd;
  check(cd.c_invertible, "NotFiniteType",
        "braiding normalization needs the weight-lattice symmetric form");
  const long d = cd.d;
  const GradedSpace& sij = *t_ij.space;
  const GradedSpace& sji = *t_ji.space;

  // P: swap coordinates (k1, k2) -> (k2, k1)
  GradedOp swap_op = GradedOp::zero(sij, sji);
  for (size_t c = 0; c < sij.comps.size(); ++c) {
    const auto& comp = sij.comps[c];
    int tc = sji.find({comp.fblock[1], comp.fblock[0]});
    check(tc >= 0, "InternalError", "swapped component missing");
    int d1 = t_ij.factors[0]->blocks[static_cast<size_t>(comp.fblock[0])].dim;
    int d2 = t_ij.factors[1]->blocks[static_cast<size_t>(comp.fblock[1])].dim;
    RMat m(d1 * d2, d1 * d2, d);
    for (int k1 = 0; k1 < d1; ++k1)
      for (int k2 = 0; k2 < d2; ++k2)
        m.at(k2 * d1 + k1, k1 * d2 + k2) = RatFunc(Int(1), d);
    swap_op.add_block(static_cast<int>(c), tc, std::move(m));
  }

  // Pi: scale component (mu1, mu2) of the swapped module by v^{-(mu1,mu2)}
  GradedOp pi = GradedOp::zero(sji, sji);
  for (size_t c = 0; c < sji.comps.size(); ++c) {
    const auto& comp = sji.comps[c];
    Weight mu1 = t_ji.factors[0]->blocks[static_cast<size_t>(comp.fblock[0])].mu;
    Weight mu2 = t_ji.factors[1]->blocks[static_cast<size_t>(comp.fblock[1])].mu;
    Rat form = sym_form(cd, mu1, mu2);
    Rat scaled = form * Rat(d);
    check(boost::multiprecision::denominator(scaled) == 1, "InternalError",
          "braiding exponent not on the 1/d lattice");
    long e = boost::multiprecision::numerator(scaled).convert_to<long>();
    pi.add_block(static_cast<int>(c), static_cast<int>(c),
                 scalar_identity(comp.dim, RatFunc::v_power(-e, d)));
  }

  GradedOp theta = compute_theta(t_ji, depth);
  return theta.compose(pi.compose(swap_op));
}

GradedOp braiding_inverse(const TensorModule& t_ij, const TensorModule& t_ji, long depth) {
  // R^{-1} = P^{-1} Pi^{-1} bar(Theta): uses Theta bar(Theta) = id.
  const CartanData& cd = t_ij.factors[0]->cd;
  check(cd.c_invertible, "NotFiniteType",
        "braiding normalization needs the weight-lattice symmetric form");
  const long d = cd.d;
  const GradedSpace& sij = *t_ij.space;
  const GradedSpace& sji = *t_ji.space;

  GradedOp theta_bar = compute_theta(t_ji, depth).entrywise_bar();

  GradedOp pi_inv = GradedOp::zero(sji, sji);
  for (size_t c = 0; c < sji.comps.size(); ++c) {
    const auto& comp = sji.comps[c];
    Weight mu1 = t_ji.factors[0]->blocks[static_cast<size_t>(comp.fblock[0])].mu;
    Weight mu2 = t_ji.factors[1]->blocks[static_cast<size_t>(comp.fblock[1])].mu;
    Rat scaled = sym_form(cd, mu1, mu2) * Rat(d);
    long e = boost::multiprecision::numerator(scaled).convert_to<long>();
    pi_inv.add_block(static_cast<int>(c), static_cast<int>(c),
                     scalar_identity(comp.dim, RatFunc::v_power(e, d)));
  }

  GradedOp unswap = GradedOp::zero(sji, sij);
  for (size_t c = 0; c < sji.comps.size(); ++c) {
    const auto& comp = sji.comps[c];
    int tc = sij.find({comp.fblock[1], comp.fblock[0]});
    int d1 = t_ji.factors[0]->blocks[static_cast<size_t>(comp.fblock[0])].dim;
    int d2 = t_ji.factors[1]->blocks[static_cast<size_t>(comp.fblock[1])].dim;
    RMat m(d1 * d2, d1 * d2, d);
    for (int k1 = 0; k1 < d1; ++k1)
      for (int k2 = 0; k2 < d2; ++k2)
        m.at(k2 * d1 + k1, k1 * d2 + k2) = RatFunc(Int(1), d);
    unswap.add_block(static_cast<int>(c), tc, std::move(m));
  }
  return unswap.compose(pi_inv.compose(theta_bar));
}

std::map<std::vector<long>, long> decompose_tensor_module(const TensorModule& t) {
  const GradedSpace& s = *t.space;
  const CartanData& cd = t.factors[0]->cd;
  const long d = cd.d;
  // group components by total nu
  std::map<std::vector<long>, std::vector<int>> groups;
  for (size_t c = 0; c < s.comps.size(); ++c)
    groups[s.comps[c].nu_total].push_back(static_cast<int>(c));

  std::vector<GradedOp> dE;
  for (int i = 0; i < cd.rank; ++i) dE.push_back(t.deltaE(i));

  std::map<std::vector<long>, long> out;
  for (const auto& [nu, comps] : groups) {
    int D = 0;
    std::map<int, int> offset;
    for (int c : comps) {
      offset[c] = D;
      D += s.comps[static_cast<size_t>(c)].dim;
    }
    // stacked matrix of all Delta(E_i) restricted to this total weight
    std::vector<RMat> stacks;
    int rows_total = 0;
    for (int i = 0; i < cd.rank; ++i) {
      // targets grouped by component as well
      std::map<int, int> toffset;
      int TD = 0;
      for (int c : comps) {
        for (const auto& [k, blk] : dE[static_cast<size_t>(i)].blocks) {
          if (k.first != c) continue;
          if (!toffset.count(k.second)) {
            toffset[k.second] = TD;
            TD += s.comps[static_cast<size_t>(k.second)].dim;
          }
        }
      }
      RMat st(TD, D, d);
      for (int c : comps)
        for (const auto& [k, blk] : dE[static_cast<size_t>(i)].blocks) {
          if (k.first != c) continue;
          int ro = toffset.at(k.second), co = offset.at(c);
          for (int r = 0; r < blk.rows(); ++r)
            for (int cc = 0; cc < blk.cols(); ++cc) st.at(ro + r, co + cc) = blk.at(r, cc);
        }
      rows_total += TD;
      stacks.push_back(std::move(st));
    }
    RMat big(rows_total, D, d);
    int ro = 0;
    for (const RMat& st : stacks) {
      for (int r = 0; r < st.rows(); ++r)
        for (int c = 0; c < st.cols(); ++c) big.at(ro + r, c) = st.at(r, c);
      ro += st.rows();
    }
    long kdim = D - rank(big);
    if (kdim > 0) out[nu] = kdim;
  }
  return out;
}

TensorGram tensor_form(const TensorModule& t) {
  TensorGram g;
  const long d = t.space->denom();
  for (size_t c = 0; c < t.space->comps.size(); ++c) {
    const auto& comp = t.space->comps[c];
    RMat m(1, 1, d);
    m.at(0, 0) = RatFunc(Int(1), d);
    for (size_t f = 0; f < t.factors.size(); ++f)
      m = m.kron(t.factors[f]->blocks[static_cast<size_t>(comp.fblock[f])].gram);
    g.comp[static_cast<int>(c)] = std::move(m);
  }
  return g;
}

Report verify_tensor_contravariance(const TensorModule& t, const TensorGram& g) {
  Report rep;
  rep.title = "coproduct contravariance of the product form";
  const CartanData& cd = t.factors[0]->cd;
  const long d = cd.d;
  bool ok = true;
  std::string where;
  for (int i = 0; i < cd.rank && ok; ++i) {
    GradedOp dF = t.deltaF(i);
    GradedOp dEv = t.deltaE(i);
    for (const auto& [k, fblk] : dF.blocks) {
      auto [c, e] = k; // F: comp c -> comp e
      const RMat& Gc = g.comp.at(c);
      const RMat& Ge = g.comp.at(e);
      // (Delta F x, y) = (x, v_i Delta(K~_{-i}) Delta(E_i) y)
      long kexp = t.space->ktilde_exp(i, t.space->comps[static_cast<size_t>(c)]);
      RatFunc pref = RatFunc::v_power(d * (cd.s[static_cast<size_t>(i)] - kexp), d);
      const RMat* eblk = dEv.block(e, c);
      RMat rhs = eblk ? (Gc * *eblk).scaled(pref)
                      : RMat(Gc.rows(), Ge.cols(), d);
      RMat lhs = fblk.transposed() * Ge;
      if (!(lhs == rhs)) {
        ok = false;
        where = "component " + std::to_string(c) + " i=" + std::to_string(i);
        break;
      }
    }
  }
  rep.add("(Delta F x, y) = (x, v_i K~_{-i} E_i y)", ok, ok ? "" : "fails at " + where);
  // normalization on the top line
  int topc = t.space->find(std::vector<int>(t.factors.size(), 0));
  rep.add("(v ⊗ v, v ⊗ v) = 1",
          topc >= 0 && g.comp.at(topc).at(0, 0).is_one());
  return rep;
}

Report verify_yang_baxter(const CartanData& cd, const Weight& l1, const Weight& l2,
                          const Weight& l3, long depth) {
  Report rep;
  rep.title = "Yang-Baxter on " + l1.str() + " ⊗ " + l2.str() + " ⊗ " + l3.str();
  HWModule M1 = build_module(cd, l1, depth);
  HWModule M2 = build_module(cd, l2, depth);
  HWModule M3 = build_module(cd, l3, depth);
  check(M1.saturated && M2.saturated && M3.saturated, "BadArgument",
        "Yang-Baxter check needs saturated modules; raise the depth");

  const HWModule* mods[3] = {&M1, &M2, &M3};
  // tensor modules for every arrangement that appears
  auto make3 = [&](int a, int b, int c) {
    return tensor_module({mods[a], mods[b], mods[c]});
  };
  TensorModule t123 = make3(0, 1, 2), t213 = make3(1, 0, 2), t231 = make3(1, 2, 0);
  TensorModule t321 = make3(2, 1, 0), t132 = make3(0, 2, 1), t312 = make3(2, 0, 1);

  // pairwise braidings
  auto make2 = [&](int a, int b) { return tensor_module({mods[a], mods[b]}); };
  TensorModule t12 = make2(0, 1), t21 = make2(1, 0);
  TensorModule t13 = make2(0, 2), t31 = make2(2, 0);
  TensorModule t23 = make2(1, 2), t32 = make2(2, 1);
  GradedOp R12 = braiding(t12, t21, depth);
  GradedOp R13 = braiding(t13, t31, depth);
  GradedOp R23 = braiding(t23, t32, depth);

  // lift a 2-factor operator to positions (1,2) or (2,3) of a 3-factor space
  auto lift = [&](const GradedOp& R, const TensorModule& from2, const TensorModule& to2,
                  const TensorModule& from3, const TensorModule& to3, bool front) {
    GradedOp out = GradedOp::zero(*from3.space, *to3.space);
    const long d = cd.d;
    for (size_t c = 0; c < from3.space->comps.size(); ++c) {
      const auto& comp = from3.space->comps[c];
      int spec = front ? comp.fblock[2] : comp.fblock[0];
      std::vector<int> pair2 = front
                                   ? std::vector<int>{comp.fblock[0], comp.fblock[1]}
                                   : std::vector<int>{comp.fblock[1], comp.fblock[2]};
      int c2 = from2.space->find(pair2);
      if (c2 < 0) continue;
      for (const auto& [k, blk] : R.blocks) {
        if (k.first != c2) continue;
        const auto& t2comp = to2.space->comps[static_cast<size_t>(k.second)];
        std::vector<int> tgt = front
                                   ? std::vector<int>{t2comp.fblock[0], t2comp.fblock[1], spec}
                                   : std::vector<int>{spec, t2comp.fblock[0], t2comp.fblock[1]};
        int tc = to3.space->find(tgt);
        if (tc < 0) continue;
        const HWModule* sm = front ? from3.factors[2] : from3.factors[0];
        int sd = sm->blocks[static_cast<size_t>(spec)].dim;
        RMat m = front ? blk.kron(RMat::identity(sd, d))
                       : RMat::identity(sd, d).kron(blk);
        out.add_block(static_cast<int>(c), tc, std::move(m));
      }
    }
    out.prune();
    return out;
  };

  // left composite: 123 -(R12 front)-> 213 -(R13 back)-> 231 -(R23 front)-> 321
  GradedOp L1 = lift(R12, t12, t21, t123, t213, true);
  GradedOp L2 = lift(R13, t13, t31, t213, t231, false);
  GradedOp L3 = lift(R23, t23, t32, t231, t321, true);
  GradedOp lhs = L3.compose(L2).compose(L1);
  // right composite: 123 -(R23 back)-> 132 -(R13 front)-> 312 -(R12 back)-> 321
  GradedOp Rr1 = lift(R23, t23, t32, t123, t132, false);
  GradedOp Rr2 = lift(R13, t13, t31, t132, t312, true);
  GradedOp Rr3 = lift(R12, t12, t21, t312, t321, false);
  GradedOp rhs = Rr3.compose(Rr2).compose(Rr1);

  rep.add("R23 R13 R12 = R12 R13 R23", lhs.equals(rhs),
          "dimension " + std::to_string(t123.space->total_dim()));
  return rep;
}

} // namespace qf
