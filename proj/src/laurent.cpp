#include "qfold/laurent.hpp"

#include <sstream>

namespace qf {

Laurent::Laurent(Int n, int order, long denom) : order_(order), denom_(denom) {
  check(denom >= 1, "BadDenominator", "exponent denominator must be >= 1");
  if (n != 0) t_.emplace(0, CycInt(std::move(n), order));
}

Laurent Laurent::monomial(CycInt c, long scaled_exp, long denom) {
  Laurent r;
  r.order_ = c.order();
  r.denom_ = denom;
  if (!c.is_zero()) r.t_.emplace(scaled_exp, std::move(c));
  return r;
}

Laurent Laurent::v_power(long scaled_exp, long denom, int order) {
  return monomial(CycInt(Int(1), order), scaled_exp, denom);
}

bool Laurent::is_one() const {
  return t_.size() == 1 && t_.begin()->first == 0 &&
         t_.begin()->second == CycInt(Int(1), order_);
}

CycInt Laurent::coeff(long scaled_exp) const {
  auto it = t_.find(scaled_exp);
  return it == t_.end() ? CycInt(Int(0), order_) : it->second;
}

long Laurent::min_exp() const {
  check(!t_.empty(), "EmptyLaurent", "zero polynomial has no exponents");
  return t_.begin()->first;
}

long Laurent::max_exp() const {
  check(!t_.empty(), "EmptyLaurent", "zero polynomial has no exponents");
  return t_.rbegin()->first;
}

void Laurent::put(long e, CycInt c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(e, std::move(c));
  if (!fresh) {
    it->second = it->second + c; // unreachable in current callers
  }
}

void Laurent::require_compatible(const Laurent& a, const Laurent& b) {
  check(a.order_ == b.order_, "MixedOrder", "mixing coefficient rings");
  check(a.denom_ == b.denom_, "MixedDenominator",
        "mixing exponent lattices; rescale explicitly");
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  Laurent::require_compatible(a, b);
  Laurent r = a;
  for (const auto& [e, c] : b.t_) {
    auto it = r.t_.find(e);
    if (it == r.t_.end()) {
      r.t_.emplace(e, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) r.t_.erase(it);
    }
  }
  return r;
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent::require_compatible(a, b);
  Laurent r;
  r.order_ = a.order_;
  r.denom_ = a.denom_;
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) {
      CycInt p = ca * cb;
      if (p.is_zero()) continue;
      auto it = r.t_.find(ea + eb);
      if (it == r.t_.end()) {
        r.t_.emplace(ea + eb, std::move(p));
      } else {
        it->second = it->second + p;
        if (it->second.is_zero()) r.t_.erase(it);
      }
    }
  return r;
}

bool Laurent::operator==(const Laurent& o) const {
  return order_ == o.order_ && denom_ == o.denom_ && t_ == o.t_;
}

Laurent Laurent::pow(unsigned long n) const {
  Laurent r(Int(1), order_, denom_);
  Laurent base = *this;
  while (n > 0) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

Laurent Laurent::bar() const {
  Laurent r;
  r.order_ = order_;
  r.denom_ = denom_;
  for (const auto& [e, c] : t_) r.t_.emplace(-e, c.conj());
  return r;
}

Laurent Laurent::rescaled(long newdenom) const {
  check(newdenom % denom_ == 0, "BadDenominator",
        "new denominator must be a multiple of the old one");
  long f = newdenom / denom_;
  Laurent r;
  r.order_ = order_;
  r.denom_ = newdenom;
  for (const auto& [e, c] : t_) r.t_.emplace(e * f, c);
  return r;
}

Laurent Laurent::divexact(const Laurent& a, const Laurent& b) {
  require_compatible(a, b);
  check(!b.is_zero(), "InexactDivision", "division by zero");
  if (a.is_zero()) return Laurent(Int(0), a.order_, a.denom_);
  // Long division from the top exponent down; coefficients live in Z[zeta]
  // so each step must divide exactly over the leading coefficient.  Only the
  // unit-leading case (common in quantum integers) is required here, but a
  // rational-integer leading coefficient is handled as well.
  Laurent rem = a;
  Laurent q;
  q.order_ = a.order_;
  q.denom_ = a.denom_;
  const long eb = b.max_exp();
  const long qmin = a.min_exp() - b.min_exp(); // lowest exponent an exact quotient can use
  const CycInt lead = b.coeff(eb);
  check(lead.is_rational_integer(), "InexactDivision",
        "unsupported leading coefficient");
  const Int lv = lead.as_integer();
  while (!rem.is_zero()) {
    long er = rem.max_exp();
    check(er - eb >= qmin, "InexactDivision", "nonzero remainder");
    std::vector<Int> cc = rem.coeff(er).coeffs();
    CycInt f(Int(0), a.order_);
    for (size_t k = 0; k < cc.size(); ++k) {
      if (cc[k] == 0) continue;
      check(cc[k] % lv == 0, "InexactDivision", "coefficient does not divide");
      f = f + CycInt::zeta_power(a.order_, static_cast<long>(k)) *
                  CycInt(cc[k] / lv, a.order_);
    }
    Laurent term = Laurent::monomial(f, er - eb, a.denom_);
    q += term;
    rem -= term * b;
    check(rem.is_zero() || rem.max_exp() < er, "InexactDivision",
          "no progress in division");
  }
  return q;
}

std::string Laurent::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    std::string cs = it->second.str();
    if (!first) os << " + ";
    long e = it->first;
    if (e == 0) {
      os << "(" << cs << ")";
    } else {
      if (cs != "1") os << "(" << cs << ")*";
      os << "v^";
      if (denom_ == 1)
        os << e;
      else
        os << "(" << e << "/" << denom_ << ")";
    }
    first = false;
  }
  return os.str();
}

Laurent qint(long n, long s, int order) {
  check(s >= 1, "BadArgument", "qint needs s >= 1");
  if (n == 0) return Laurent(Int(0), order, 1);
  if (n < 0) return -qint(-n, s, order);
  Laurent r(Int(0), order, 1);
  for (long k = 0; k < n; ++k)
    r += Laurent::v_power(s * (n - 1 - 2 * k), 1, order);
  return r;
}

Laurent qfact(long n, long s, int order) {
  check(n >= 0, "BadArgument", "qfact needs n >= 0");
  Laurent r(Int(1), order, 1);
  for (long k = 1; k <= n; ++k) r *= qint(k, s, order);
  return r;
}

Laurent qbinom(long m, long n, long s, int order) {
  check(n >= 0, "BadArgument", "qbinom needs n >= 0");
  Laurent num(Int(1), order, 1);
  for (long k = 0; k < n; ++k) num *= qint(m - k, s, order);
  return Laurent::divexact(num, qfact(n, s, order));
}

} // namespace qf
