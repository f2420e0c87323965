#include "qfold/ratfunc.hpp"

#include <sstream>

namespace qf {

namespace {

// (offset, poly) pair from a scaled-exponent term map.
std::pair<long, ZPoly> pack(const std::map<long, Int>& terms) {
  ZPoly p;
  if (terms.empty()) return {0, p};
  long lo = terms.begin()->first;
  long hi = terms.rbegin()->first;
  p.c.assign(static_cast<size_t>(hi - lo) + 1, Int(0));
  for (const auto& [e, c] : terms) p.c[static_cast<size_t>(e - lo)] = c;
  p.trim();
  return {lo, p};
}

} // namespace

RatFunc::RatFunc(Int n, long denom) : denom_(denom), off_(0) {
  check(denom >= 1, "BadDenominator", "exponent denominator must be >= 1");
  den_.c = {Int(1)};
  if (n != 0) num_.c = {std::move(n)};
}

RatFunc::RatFunc(const Rat& q, long denom) : denom_(denom), off_(0) {
  check(denom >= 1, "BadDenominator", "exponent denominator must be >= 1");
  Int n = boost::multiprecision::numerator(q);
  Int d = boost::multiprecision::denominator(q);
  if (n != 0) num_.c = {n};
  den_.c = {d};
  canonicalize();
}

RatFunc RatFunc::v_power(long scaled_exp, long denom) {
  RatFunc r(Int(1), denom);
  r.off_ = scaled_exp;
  return r;
}

RatFunc RatFunc::from_laurent(const Laurent& p) {
  RatFunc r(Int(0), p.denom());
  std::map<long, Int> t;
  for (const auto& [e, c] : p.terms()) {
    check(c.is_rational_integer(), "NotInteger",
          "rational functions carry zeta-free coefficients only");
    t[e] = c.as_integer();
  }
  auto [lo, poly] = pack(t);
  r.off_ = lo;
  r.num_ = std::move(poly);
  r.den_.c = {Int(1)};
  r.canonicalize();
  return r;
}

RatFunc RatFunc::fraction(const Laurent& num, const Laurent& den) {
  return from_laurent(num) / from_laurent(den);
}

bool RatFunc::is_one() const {
  return off_ == 0 && num_.deg() == 0 && !num_.is_zero() && num_.c[0] == 1 &&
         den_.deg() == 0 && den_.c[0] == 1;
}

Laurent RatFunc::as_laurent(int order) const {
  check(is_laurent(), "NotLaurent", "value has a nontrivial denominator");
  Laurent r(Int(0), order, denom_);
  for (size_t k = 0; k < num_.c.size(); ++k)
    if (num_.c[k] != 0)
      r += Laurent::monomial(CycInt(num_.c[k], order),
                             off_ + static_cast<long>(k), denom_);
  return r;
}

void RatFunc::require_compatible(const RatFunc& a, const RatFunc& b) {
  check(a.denom_ == b.denom_, "MixedDenominator",
        "mixing exponent lattices; rescale explicitly");
}

void RatFunc::canonicalize() {
  check(!den_.is_zero(), "DivisionByZero", "zero denominator");
  if (num_.is_zero()) {
    off_ = 0;
    den_.c = {Int(1)};
    return;
  }
  // shift so both have nonzero constant term; the shift moves into off_
  size_t nz = 0;
  while (num_.c[nz] == 0) ++nz;
  if (nz > 0) {
    num_.c.erase(num_.c.begin(), num_.c.begin() + static_cast<long>(nz));
    off_ += static_cast<long>(nz);
  }
  size_t dz = 0;
  while (den_.c[dz] == 0) ++dz;
  if (dz > 0) {
    den_.c.erase(den_.c.begin(), den_.c.begin() + static_cast<long>(dz));
    off_ -= static_cast<long>(dz);
  }
  ZPoly g = zpoly_gcd(num_, den_);
  if (!(g.deg() == 0 && g.c[0] == 1)) {
    num_ = zpoly_divexact(num_, g);
    den_ = zpoly_divexact(den_, g);
  }
  Int cn = zpoly_content(num_), cd = zpoly_content(den_);
  Int cg = boost::multiprecision::gcd(cn, cd);
  if (cg > 1) {
    for (Int& x : num_.c) x /= cg;
    for (Int& x : den_.c) x /= cg;
  }
  if (den_.c.back() < 0) {
    for (Int& x : num_.c) x = -x;
    for (Int& x : den_.c) x = -x;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  for (Int& x : r.num_.c) x = -x;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  RatFunc::require_compatible(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RatFunc r(Int(0), a.denom_);
  // common offset handling: a = x^oa na/da, b = x^ob nb/db
  long o = std::min(a.off_, b.off_);
  ZPoly ta = a.num_ * b.den_;
  ZPoly tb = b.num_ * a.den_;
  // shift each by (off - o)
  auto shift = [](ZPoly p, long k) {
    if (p.is_zero() || k == 0) return p;
    p.c.insert(p.c.begin(), static_cast<size_t>(k), Int(0));
    return p;
  };
  r.num_ = shift(std::move(ta), a.off_ - o) + shift(std::move(tb), b.off_ - o);
  r.den_ = a.den_ * b.den_;
  r.off_ = o;
  r.canonicalize();
  return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  RatFunc::require_compatible(a, b);
  RatFunc r(Int(0), a.denom_);
  if (a.is_zero() || b.is_zero()) return r;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_ * b.den_;
  r.off_ = a.off_ + b.off_;
  r.canonicalize();
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::inverse() const {
  check(!is_zero(), "DivisionByZero", "inverse of zero");
  RatFunc r(Int(0), denom_);
  r.num_ = den_;
  r.den_ = num_;
  r.off_ = -off_;
  r.canonicalize();
  return r;
}

bool RatFunc::operator==(const RatFunc& o) const {
  return denom_ == o.denom_ && off_ == o.off_ && num_ == o.num_ && den_ == o.den_;
}

RatFunc RatFunc::bar() const {
  // v^{off} * num(x)/den(x)  ->  v^{-off} * num(1/x)/den(1/x)
  RatFunc r(Int(0), denom_);
  if (is_zero()) return r;
  ZPoly rn = num_, rd = den_;
  std::reverse(rn.c.begin(), rn.c.end());
  std::reverse(rd.c.begin(), rd.c.end());
  rn.trim();
  rd.trim();
  r.num_ = std::move(rn);
  r.den_ = std::move(rd);
  r.off_ = -(off_ + num_.deg()) + den_.deg();
  r.canonicalize();
  return r;
}

RatFunc RatFunc::rescaled(long newdenom) const {
  check(newdenom % denom_ == 0, "BadDenominator",
        "new denominator must be a multiple of the old one");
  long f = newdenom / denom_;
  if (f == 1) {
    RatFunc r = *this;
    return r;
  }
  RatFunc r(Int(0), newdenom);
  if (is_zero()) return r;
  auto stretch = [f](const ZPoly& p) {
    ZPoly q;
    if (p.is_zero()) return q;
    q.c.assign(static_cast<size_t>(p.deg()) * f + 1, Int(0));
    for (size_t k = 0; k < p.c.size(); ++k) q.c[k * f] = p.c[k];
    return q;
  };
  r.num_ = stretch(num_);
  r.den_ = stretch(den_);
  r.off_ = off_ * f;
  r.canonicalize();
  return r;
}

Rat RatFunc::eval_at_one() const {
  Int n = 0, d = 0;
  for (const Int& x : num_.c) n += x;
  for (const Int& x : den_.c) d += x;
  check(d != 0, "DivisionByZero", "denominator vanishes at v=1");
  return Rat(n) / Rat(d);
}

std::string RatFunc::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  auto poly = [&](const ZPoly& p, long off) {
    std::ostringstream ps;
    bool first = true;
    for (size_t k = p.c.size(); k-- > 0;) {
      if (p.c[k] == 0) continue;
      long e = off + static_cast<long>(k);
      if (!first) ps << (p.c[k] > 0 ? " + " : " - ");
      Int a = p.c[k] > 0 || first ? p.c[k] : -p.c[k];
      bool unit = (a == 1 || a == -1) && e != 0;
      if (!unit)
        ps << a;
      else if (a == -1)
        ps << "-";
      if (e != 0) {
        if (!unit) ps << "*";
        ps << "v^";
        if (denom_ == 1)
          ps << e;
        else
          ps << "(" << e << "/" << denom_ << ")";
      }
      first = false;
    }
    return ps.str();
  };
  os << "(" << poly(num_, off_) << ")";
  if (!is_laurent()) os << "/(" << poly(den_, 0) << ")";
  return os.str();
}

RatFunc rf_qint(long n, long s, long denom) {
  if (n == 0) return RatFunc(Int(0), denom);
  if (n < 0) return -rf_qint(-n, s, denom);
  RatFunc r(Int(0), denom);
  for (long k = 0; k < n; ++k)
    r += RatFunc::v_power(denom * s * (n - 1 - 2 * k), denom);
  return r;
}

RatFunc rf_qfact(long n, long s, long denom) {
  RatFunc r(Int(1), denom);
  for (long k = 1; k <= n; ++k) r *= rf_qint(k, s, denom);
  return r;
}

} // namespace qf
