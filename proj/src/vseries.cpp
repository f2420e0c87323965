#include "qfold/vseries.hpp"

#include <sstream>

namespace qf {

const char* series_class_name(SeriesClass c) {
  switch (c) {
    case SeriesClass::Unit: return "unit";
    case SeriesClass::Small: return "small";
    default: return "other";
  }
}

std::string VSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order; ++k) {
    if (at(k).is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << at(k).str() << ")";
    if (k > 0) os << "*v^-" << k;
    first = false;
  }
  if (first) os << "0";
  os << " + O(v^-" << order + 1 << ")";
  return os.str();
}

Expansion expand_vinv(const RatFunc& x, int order) {
  check(order >= 0, "BadArgument", "expansion order must be >= 0");
  Expansion out;
  out.series.order = order;
  out.series.coeffs.assign(static_cast<size_t>(order) + 1, CycInt(Int(0)));
  if (x.is_zero()) {
    out.cls = SeriesClass::Small;
    return out;
  }
  const long d = x.denom();
  // integer v-exponents only: every populated exponent divisible by d
  auto exp_ok = [&](const ZPoly& p, long off) {
    for (size_t k = 0; k < p.c.size(); ++k)
      if (p.c[k] != 0 && (off + static_cast<long>(k)) % d != 0) return false;
    return true;
  };
  check(exp_ok(x.num_poly(), x.num_offset()) && exp_ok(x.den_poly(), 0),
        "NotExpandable", "fractional v-exponents");

  // Rewrite in w = v^{-1}: a term v^{e} becomes w^{-e}.  Collect descending
  // v-exponents as ascending w-exponents.
  auto to_w = [&](const ZPoly& p, long off) {
    // returns (w-offset, coeffs ascending in w)
    std::vector<Int> c;
    long top = (off + p.deg()) / d; // highest v-exponent
    c.assign(static_cast<size_t>(p.deg() / d) + 1, Int(0));
    for (size_t k = 0; k < p.c.size(); ++k) {
      if (p.c[k] == 0) continue;
      long ve = (off + static_cast<long>(k)) / d;
      c[static_cast<size_t>(top - ve)] = p.c[k];
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    return std::make_pair(-top, c); // value = w^{-top} * sum c[j] w^j
  };
  auto [no, nc] = to_w(x.num_poly(), x.num_offset());
  auto [dofs, dc] = to_w(x.den_poly(), 0);
  check(!dc.empty(), "NotExpandable", "zero denominator");
  check(dc[0] == 1 || dc[0] == -1, "NotExpandable",
        "denominator's highest-exponent coefficient is not invertible over Z");

  // quotient = w^{no - dofs} * (nc / dc) as a power series in w
  long lead = no - dofs; // w-exponent of the first quotient term
  long steps = static_cast<long>(order) - lead; // need q_j for j = 0..steps
  std::vector<Int> q;
  if (steps >= 0) {
    q.assign(static_cast<size_t>(steps) + 1, Int(0));
    for (long j = 0; j <= steps; ++j) {
      Int acc = (static_cast<size_t>(j) < nc.size()) ? nc[static_cast<size_t>(j)] : Int(0);
      for (long t = 1; t <= j && static_cast<size_t>(t) < dc.size(); ++t)
        acc -= dc[static_cast<size_t>(t)] * q[static_cast<size_t>(j - t)];
      q[static_cast<size_t>(j)] = dc[0] == 1 ? acc : -acc;
    }
  }

  bool positive = false;
  for (long j = 0; j < static_cast<long>(q.size()); ++j) {
    long wexp = lead + j; // coefficient of v^{-wexp}
    if (q[static_cast<size_t>(j)] == 0) continue;
    if (wexp < 0) {
      positive = true;
    } else if (wexp <= order) {
      out.series.coeffs[static_cast<size_t>(wexp)] = CycInt(q[static_cast<size_t>(j)]);
    }
  }
  out.has_positive_part = positive;
  if (positive) {
    out.cls = SeriesClass::Other;
  } else {
    Int c0 = out.series.at(0).is_rational_integer() ? out.series.at(0).as_integer() : Int(2);
    if (c0 == 0)
      out.cls = SeriesClass::Small;
    else if (c0 == 1 || c0 == -1)
      out.cls = SeriesClass::Unit;
    else
      out.cls = SeriesClass::Other;
  }
  return out;
}

} // namespace qf
