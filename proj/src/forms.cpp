#include "qfold/forms.hpp"

#include <sstream>

namespace qf {

GramTable contravariant_form(const HWModule& m) {
  GramTable g;
  const long d = m.cd.d;
  // blocks are stored in construction order: parents precede children
  for (size_t b = 0; b < m.blocks.size(); ++b) {
    const auto& blk = m.blocks[b];
    RMat G(blk.dim, blk.dim, d);
    if (blk.height == 0) {
      G.at(0, 0) = RatFunc(Int(1), d);
      g.block[blk.nu] = G;
      continue;
    }
    for (int k = 0; k < blk.dim; ++k) {
      const auto& par = blk.parents[static_cast<size_t>(k)];
      const auto& pblk = m.blocks[static_cast<size_t>(par.block)];
      const RMat& pg = g.block.at(pblk.nu);
      RMat eg = m.E(par.gen, static_cast<int>(b)); // block -> parent block
      long expo = m.cd.s[static_cast<size_t>(par.gen)] *
                  (1 - pairing(m.cd, par.gen, pblk.mu));
      RatFunc pref = RatFunc::v_power(d * expo, d) / par.scale;
      for (int l = 0; l < blk.dim; ++l) {
        RatFunc acc(Int(0), d);
        for (int r = 0; r < pblk.dim; ++r)
          if (!eg.at(r, l).is_zero()) acc += pg.at(par.index, r) * eg.at(r, l);
        G.at(k, l) = pref * acc;
      }
    }
    g.block[blk.nu] = G;
  }
  return g;
}

OrthogonalityReport almost_orthogonality(const HWModule& m, const GramTable& g,
                                         long order) {
  OrthogonalityReport rep;
  if (order <= 0) order = 2 * m.max_height() + 4;
  rep.order = order;
  for (const auto& [nu, G] : g.block) {
    for (int r = 0; r < G.rows(); ++r)
      for (int c = 0; c < G.cols(); ++c) {
        Expansion e = expand_vinv(G.at(r, c), static_cast<int>(order));
        rep.classes[{nu, r, c}] = e.cls;
        if (r == c) {
          if (e.cls != SeriesClass::Unit) rep.almost_orthogonal = false;
        } else {
          if (e.cls != SeriesClass::Small) rep.almost_orthogonal = false;
        }
      }
  }
  return rep;
}

Report verify_contravariance(const HWModule& m, const GramTable& g) {
  Report rep;
  rep.title = "contravariance of the form on " + m.lambda.str();
  const long d = m.cd.d;
  bool ok = true;
  std::string where;
  for (size_t a = 0; a < m.blocks.size(); ++a) {
    const auto& blk = m.blocks[a];
    for (int i = 0; i < m.cd.rank; ++i) {
      std::vector<long> dn = blk.nu;
      dn[static_cast<size_t>(i)] += 1;
      int c = m.find_block(dn);
      if (c < 0) continue; // F_i is zero out of this block
      const RMat& Ga = g.block.at(blk.nu);
      const RMat& Gc = g.block.at(m.blocks[static_cast<size_t>(c)].nu);
      RMat fi = m.F(i, static_cast<int>(a)); // a -> c
      RMat ei = m.E(i, c);                   // c -> a
      long expo = m.cd.s[static_cast<size_t>(i)] * (1 - pairing(m.cd, i, blk.mu));
      RMat lhs = fi.transposed() * Gc;
      RMat rhs = (Ga * ei).scaled(RatFunc::v_power(d * expo, d));
      if (!(lhs == rhs)) {
        ok = false;
        where = blk.mu.str() + " i=" + std::to_string(i);
      }
    }
  }
  rep.add("(F_i x, y) = (x, v_i K~_{-i} E_i y)", ok, ok ? "" : "fails at " + where);

  // stored construction grams agree with the recursion output
  bool agree = true;
  for (const auto& blk : m.blocks)
    if (!(g.block.at(blk.nu) == blk.gram)) agree = false;
  rep.add("recursion matches construction grams", agree);

  // weight orthogonality and normalization are structural: blocks are the
  // only stored pairings and the top block is 1x1 with entry 1
  bool norm = g.block.at(std::vector<long>(static_cast<size_t>(m.cd.rank), 0))
                  .at(0, 0)
                  .is_one();
  rep.add("(v, v) = 1", norm);
  return rep;
}

} // namespace qf
