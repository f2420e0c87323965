#include "qfold/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace qf {

void ZPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

ZPoly ZPoly::x_power_minus_one(long n) {
  ZPoly p;
  p.c.assign(static_cast<size_t>(n) + 1, Int(0));
  p.c[0] = -1;
  p.c[static_cast<size_t>(n)] = 1;
  return p;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j] == 0) continue;
      r.c[i + j] += a.c[i] * b.c[j];
    }
  }
  r.trim();
  return r;
}

ZPoly zpoly_divexact(const ZPoly& a, const ZPoly& b) {
  check(!b.is_zero(), "InexactDivision", "division by zero polynomial");
  ZPoly rem = a, q;
  if (a.is_zero()) return q;
  check(a.deg() >= b.deg(), "InexactDivision", "degree too small");
  q.c.assign(static_cast<size_t>(a.deg() - b.deg()) + 1, Int(0));
  const Int& lead = b.c.back();
  for (int k = a.deg() - b.deg(); k >= 0; --k) {
    Int top = rem.c.size() > static_cast<size_t>(k + b.deg())
                  ? rem.c[static_cast<size_t>(k + b.deg())]
                  : Int(0);
    if (top == 0) continue;
    check(top % lead == 0, "InexactDivision", "leading coefficient does not divide");
    Int f = top / lead;
    q.c[static_cast<size_t>(k)] = f;
    for (int j = 0; j <= b.deg(); ++j)
      rem.c[static_cast<size_t>(k + j)] -= f * b.c[static_cast<size_t>(j)];
  }
  rem.trim();
  check(rem.is_zero(), "InexactDivision", "nonzero remainder");
  q.trim();
  return q;
}

ZPoly zpoly_rem_monic(ZPoly a, const ZPoly& b) {
  // b monic
  while (!a.is_zero() && a.deg() >= b.deg()) {
    Int f = a.c.back();
    int shift = a.deg() - b.deg();
    for (int j = 0; j <= b.deg(); ++j)
      a.c[static_cast<size_t>(shift + j)] -= f * b.c[static_cast<size_t>(j)];
    a.trim();
  }
  return a;
}

Int zpoly_content(const ZPoly& a) {
  Int g = 0;
  for (const Int& x : a.c) g = boost::multiprecision::gcd(g, x);
  return g;
}

ZPoly zpoly_primitive(const ZPoly& a) {
  Int g = zpoly_content(a);
  if (g == 0 || g == 1) return a;
  ZPoly r = a;
  for (Int& x : r.c) x /= g;
  return r;
}

ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
  Int ca = zpoly_content(a), cb = zpoly_content(b);
  Int cg = boost::multiprecision::gcd(ca, cb);
  a = zpoly_primitive(a);
  b = zpoly_primitive(b);
  while (!b.is_zero()) {
    // pseudo-remainder of a by b
    int d = a.deg() - b.deg();
    if (d < 0) {
      std::swap(a, b);
      continue;
    }
    ZPoly r = a;
    const Int lead = b.c.back();
    for (int k = d; k >= 0; --k) {
      // scale remaining part so the division step stays integral
      Int top = (r.deg() == b.deg() + k) ? r.c.back() : Int(0);
      if (top == 0) {
        r.trim();
        if (r.deg() < b.deg() + k) continue;
      }
      for (Int& x : r.c) x *= lead;
      top = r.c[static_cast<size_t>(b.deg() + k)];
      Int f = top / lead; // exact by construction after scaling
      for (int j = 0; j <= b.deg(); ++j)
        r.c[static_cast<size_t>(k + j)] -= f * b.c[static_cast<size_t>(j)];
      r.trim();
    }
    a = b;
    b = zpoly_primitive(r);
  }
  a = zpoly_primitive(a);
  if (!a.is_zero() && a.c.back() < 0)
    for (Int& x : a.c) x = -x;
  if (cg == 0) cg = 1;
  ZPoly g = a;
  for (Int& x : g.c) x *= cg;
  return g;
}

const ZPoly& cyclotomic_poly(int o) {
  static std::map<int, ZPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(o);
  if (it != cache.end()) return it->second;
  check(o >= 1, "BadOrder", "cyclotomic order must be >= 1");
  ZPoly p = ZPoly::x_power_minus_one(o);
  for (int d = 1; d < o; ++d) {
    if (o % d != 0) continue;
    // recursion is shallow; compute the divisor without re-locking
    ZPoly q = ZPoly::x_power_minus_one(d);
    for (int e = 1; e < d; ++e)
      if (d % e == 0) {
        auto ite = cache.find(e);
        q = zpoly_divexact(q, ite->second);
      }
    auto [itd, fresh] = cache.emplace(d, q);
    p = zpoly_divexact(p, itd->second);
    (void)fresh;
  }
  auto [ito, ok] = cache.emplace(o, p);
  (void)ok;
  return ito->second;
}

CycInt::CycInt(Int n, int order) : o_(order) {
  check(order >= 1, "BadOrder", "root-of-unity order must be >= 1");
  c_.assign(static_cast<size_t>(cyclotomic_poly(order).deg()), Int(0));
  if (c_.empty()) c_.resize(1); // never happens: deg(Phi_o) >= 1
  c_[0] = std::move(n);
}

CycInt CycInt::zeta_power(int order, long k) {
  CycInt r(Int(0), order);
  long e = ((k % order) + order) % order;
  std::vector<Int> raw(static_cast<size_t>(order), Int(0));
  raw[static_cast<size_t>(e)] = 1;
  r.reduce(std::move(raw));
  return r;
}

void CycInt::reduce(std::vector<Int> raw) {
  ZPoly p;
  p.c = std::move(raw);
  p.trim();
  p = zpoly_rem_monic(std::move(p), cyclotomic_poly(o_));
  c_.assign(static_cast<size_t>(cyclotomic_poly(o_).deg()), Int(0));
  for (size_t i = 0; i < p.c.size(); ++i) c_[i] = p.c[i];
}

bool CycInt::is_zero() const {
  for (const Int& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycInt::is_rational_integer() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Int CycInt::as_integer() const {
  check(is_rational_integer(), "NotInteger", "cyclotomic value is not a rational integer");
  return c_[0];
}

void CycInt::require_same(const CycInt& a, const CycInt& b) {
  check(a.o_ == b.o_, "MixedOrder", "mixing roots of unity of different orders");
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (Int& x : r.c_) x = -x;
  return r;
}

CycInt operator+(const CycInt& a, const CycInt& b) {
  CycInt::require_same(a, b);
  CycInt r = a;
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

CycInt operator-(const CycInt& a, const CycInt& b) {
  CycInt::require_same(a, b);
  CycInt r = a;
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
  return r;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  CycInt::require_same(a, b);
  CycInt r(Int(0), a.o_);
  std::vector<Int> raw(2 * a.c_.size(), Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) raw[i + j] += a.c_[i] * b.c_[j];
  }
  r.reduce(std::move(raw));
  return r;
}

bool CycInt::operator<(const CycInt& o) const {
  if (o_ != o.o_) return o_ < o.o_;
  return c_ < o.c_;
}

CycInt CycInt::conj() const {
  CycInt r(Int(0), o_);
  std::vector<Int> raw(static_cast<size_t>(o_), Int(0));
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    size_t e = (o_ - static_cast<long>(k)) % o_;
    raw[e] += c_[k];
  }
  r.reduce(std::move(raw));
  return r;
}

std::string CycInt::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!first && c_[k] > 0) os << "+";
    if (k == 0) {
      os << c_[k];
    } else {
      if (c_[k] == -1)
        os << "-";
      else if (c_[k] != 1)
        os << c_[k] << "*";
      os << "z";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

} // namespace qf
