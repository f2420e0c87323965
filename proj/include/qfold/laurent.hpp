#pragma once

#include <map>
#include <string>

#include "qfold/cyclotomic.hpp"

namespace qf {

// Laurent polynomial in v^{1/denom} with Z[zeta_order] coefficients.  A term
// stored at key e is the monomial v^{e/denom}.  No zero coefficients are
// stored, so equality is structural.  Binary operations require matching
// (order, denom); use rescaled() to lift explicitly.
class Laurent {
public:
  Laurent() : order_(1), denom_(1) {}
  explicit Laurent(Int n, int order = 1, long denom = 1);
  static Laurent monomial(CycInt c, long scaled_exp, long denom = 1);
  static Laurent v_power(long scaled_exp, long denom = 1, int order = 1);

  int order() const { return order_; }
  long denom() const { return denom_; }
  bool is_zero() const { return t_.empty(); }
  bool is_one() const;
  const std::map<long, CycInt>& terms() const { return t_; }
  CycInt coeff(long scaled_exp) const;
  long min_exp() const; // scaled; requires nonzero
  long max_exp() const;

  Laurent operator-() const;
  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent& operator+=(const Laurent& b) { return *this = *this + b; }
  Laurent& operator-=(const Laurent& b) { return *this = *this - b; }
  Laurent& operator*=(const Laurent& b) { return *this = *this * b; }
  bool operator==(const Laurent& o) const;
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  Laurent pow(unsigned long n) const;
  // v -> v^{-1}, zeta -> zeta^{-1}.
  Laurent bar() const;
  // Lift to a finer exponent lattice; newdenom must be a multiple of denom.
  Laurent rescaled(long newdenom) const;

  // Exact division; throws Error("InexactDivision") when b does not divide.
  static Laurent divexact(const Laurent& a, const Laurent& b);

  std::string str() const;

private:
  int order_;
  long denom_;
  std::map<long, CycInt> t_;
  void put(long e, CycInt c);
  static void require_compatible(const Laurent& a, const Laurent& b);
};

// Balanced quantum integer [n] in v^s: (v^{sn} - v^{-sn})/(v^s - v^{-s}).
Laurent qint(long n, long s, int order = 1);
// [n]! = [1][2]...[n].
Laurent qfact(long n, long s, int order = 1);
// [m][m-1]...[m-n+1]/[n]!, exact by construction.
Laurent qbinom(long m, long n, long s, int order = 1);
inline Laurent bar(const Laurent& x) { return x.bar(); }

} // namespace qf
