#include "qfold/graded.hpp"

namespace qf {

GradedSpace::GradedSpace(std::vector<const HWModule*> fs) : factors(std::move(fs)) {
  check(!factors.empty(), "BadArgument", "graded space needs at least one factor");
  for (const auto* f : factors) {
    check(f->cd.C == factors[0]->cd.C && f->cd.s == factors[0]->cd.s,
          "CartanMismatch", "tensor factors over different Cartan data");
  }
  // enumerate the product of factor blocks, lexicographic in block indices
  std::vector<int> cur(factors.size(), 0);
  const size_t n = factors.size();
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == n) {
      Comp c;
      c.fblock = cur;
      c.nu_total.assign(static_cast<size_t>(rank()), 0);
      c.dim = 1;
      for (size_t f = 0; f < n; ++f) {
        const auto& blk = factors[f]->blocks[static_cast<size_t>(cur[f])];
        for (size_t i = 0; i < c.nu_total.size(); ++i) c.nu_total[i] += blk.nu[i];
        c.dim *= blk.dim;
      }
      index[c.fblock] = static_cast<int>(comps.size());
      comps.push_back(std::move(c));
      return;
    }
    for (int b = 0; b < static_cast<int>(factors[k]->blocks.size()); ++b) {
      cur[k] = b;
      rec(k + 1);
    }
  };
  rec(0);
}

int GradedSpace::rank() const { return factors[0]->cd.rank; }
long GradedSpace::denom() const { return factors[0]->cd.d; }

int GradedSpace::find(const std::vector<int>& fblock) const {
  auto it = index.find(fblock);
  return it == index.end() ? -1 : it->second;
}

long GradedSpace::ktilde_exp(int i, const Comp& c) const {
  long e = 0;
  for (size_t f = 0; f < factors.size(); ++f)
    e += factors[f]->ktilde_exp(i, c.fblock[f]);
  return e;
}

int GradedSpace::total_dim() const {
  int t = 0;
  for (const auto& c : comps) t += c.dim;
  return t;
}

GradedOp GradedOp::identity(const GradedSpace& s) {
  GradedOp op;
  op.src = &s;
  op.dst = &s;
  for (size_t c = 0; c < s.comps.size(); ++c)
    op.blocks[{static_cast<int>(c), static_cast<int>(c)}] =
        RMat::identity(s.comps[c].dim, s.denom());
  return op;
}

GradedOp GradedOp::zero(const GradedSpace& s, const GradedSpace& d) {
  GradedOp op;
  op.src = &s;
  op.dst = &d;
  return op;
}

void GradedOp::add_block(int sc, int dc, RMat m) {
  if (m.is_zero()) return;
  auto [it, fresh] = blocks.try_emplace({sc, dc}, m);
  if (!fresh) it->second = it->second + m;
}

const RMat* GradedOp::block(int sc, int dc) const {
  auto it = blocks.find({sc, dc});
  return it == blocks.end() ? nullptr : &it->second;
}

GradedOp GradedOp::compose(const GradedOp& inner) const {
  check(src == inner.dst, "DimensionMismatch", "operator composition mismatch");
  GradedOp out;
  out.src = inner.src;
  out.dst = dst;
  out.semilinear = semilinear != inner.semilinear;
  for (const auto& [ik, imat] : inner.blocks) {
    auto [isc, idc] = ik;
    // outer blocks starting at idc
    for (const auto& [ok, omat] : blocks) {
      auto [osc, odc] = ok;
      if (osc != idc) continue;
      RMat m = semilinear ? omat * imat.entrywise_bar() : omat * imat;
      out.add_block(isc, odc, std::move(m));
    }
  }
  out.prune();
  return out;
}

GradedOp operator+(const GradedOp& a, const GradedOp& b) {
  check(a.src == b.src && a.dst == b.dst && a.semilinear == b.semilinear,
        "DimensionMismatch", "operator addition mismatch");
  GradedOp out = a;
  for (const auto& [k, m] : b.blocks) out.add_block(k.first, k.second, m);
  out.prune();
  return out;
}

GradedOp operator-(const GradedOp& a, const GradedOp& b) {
  return a + b.scaled(RatFunc(Int(-1), a.src->denom()));
}

GradedOp GradedOp::scaled(const RatFunc& f) const {
  GradedOp out = *this;
  for (auto& [k, m] : out.blocks) m = m.scaled(f);
  out.prune();
  return out;
}

GradedOp GradedOp::entrywise_bar() const {
  GradedOp out = *this;
  for (auto& [k, m] : out.blocks) m = m.entrywise_bar();
  return out;
}

bool GradedOp::is_zero() const {
  for (const auto& [k, m] : blocks)
    if (!m.is_zero()) return false;
  return true;
}

bool GradedOp::equals(const GradedOp& o) const {
  if (src != o.src || dst != o.dst || semilinear != o.semilinear) return false;
  for (const auto& [k, m] : blocks) {
    const RMat* om = o.block(k.first, k.second);
    if (om ? !(m == *om) : !m.is_zero()) return false;
  }
  for (const auto& [k, m] : o.blocks)
    if (!block(k.first, k.second) && !m.is_zero()) return false;
  return true;
}

bool GradedOp::is_identity() const {
  if (src != dst) return false;
  for (const auto& [k, m] : blocks) {
    if (k.first == k.second) {
      if (!(m == RMat::identity(m.rows(), m.denom()))) return false;
    } else if (!m.is_zero()) {
      return false;
    }
  }
  for (size_t c = 0; c < src->comps.size(); ++c)
    if (!block(static_cast<int>(c), static_cast<int>(c))) return false;
  return true;
}

void GradedOp::prune() {
  for (auto it = blocks.begin(); it != blocks.end();)
    it = it->second.is_zero() ? blocks.erase(it) : std::next(it);
}

} // namespace qf
