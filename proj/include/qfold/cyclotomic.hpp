#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "qfold/error.hpp"

namespace qf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Dense polynomial over Z, coefficient of x^k at c[k].  Highest stored
// coefficient is nonzero; the zero polynomial has an empty vector.
struct ZPoly {
  std::vector<Int> c;

  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  void trim();

  static ZPoly x_power_minus_one(long n);
  friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  bool operator==(const ZPoly& o) const { return c == o.c; }
};

// Exact division; fails if the remainder is nonzero or leading coefficient
// does not divide.
ZPoly zpoly_divexact(const ZPoly& a, const ZPoly& b);
// Remainder of a modulo monic b.
ZPoly zpoly_rem_monic(ZPoly a, const ZPoly& b);
Int zpoly_content(const ZPoly& a);
ZPoly zpoly_primitive(const ZPoly& a);
// Nonnegative-content gcd in Z[x] via primitive Euclid.
ZPoly zpoly_gcd(ZPoly a, ZPoly b);
// o-th cyclotomic polynomial, cached.
const ZPoly& cyclotomic_poly(int o);

// Element of Z[zeta], zeta a primitive o-th root of unity, reduced modulo
// the o-th cyclotomic polynomial so representation is canonical.  o = 1
// degenerates to plain Z.
class CycInt {
public:
  CycInt() : o_(1), c_(1) {}
  explicit CycInt(Int n, int order = 1);
  static CycInt zeta_power(int order, long k);

  int order() const { return o_; }
  bool is_zero() const;
  // True when the reduced form has zero coefficients above degree 0.
  bool is_rational_integer() const;
  Int as_integer() const;
  const std::vector<Int>& coeffs() const { return c_; }

  CycInt operator-() const;
  friend CycInt operator+(const CycInt& a, const CycInt& b);
  friend CycInt operator-(const CycInt& a, const CycInt& b);
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  bool operator==(const CycInt& o) const { return o_ == o.o_ && c_ == o.c_; }
  bool operator!=(const CycInt& o) const { return !(*this == o); }
  bool operator<(const CycInt& o) const;

  // zeta -> zeta^{-1}, the coefficient half of the bar involution.
  CycInt conj() const;

  std::string str() const;

private:
  int o_;
  std::vector<Int> c_; // length deg(Phi_o), coefficient of zeta^k at c_[k]
  void reduce(std::vector<Int> raw); // raw has arbitrary length
  static void require_same(const CycInt& a, const CycInt& b);
};

} // namespace qf
