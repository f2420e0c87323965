#pragma once

#include <string>

#include "qfold/cyclotomic.hpp"
#include "qfold/laurent.hpp"

namespace qf {

// Rational function in v^{1/denom} with integer (zeta-free) coefficients:
// v^{off/denom} * num(x)/den(x) where x = v^{1/denom}.  Canonical form:
//   - den has a nonzero constant term and positive leading coefficient,
//   - gcd(num, den) = 1 in Z[x] including contents,
// so equality is structural.  Binary operations require matching denom.
class RatFunc {
public:
  RatFunc() : denom_(1), off_(0) { den_.c = {Int(1)}; }
  explicit RatFunc(Int n, long denom = 1);
  explicit RatFunc(const Rat& q, long denom = 1);
  static RatFunc v_power(long scaled_exp, long denom = 1);
  static RatFunc from_laurent(const Laurent& p); // requires zeta-free coeffs
  static RatFunc fraction(const Laurent& num, const Laurent& den);

  long denom() const { return denom_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_laurent() const { return den_.deg() == 0 && den_.c[0] == 1; }
  Laurent as_laurent(int order = 1) const; // requires is_laurent()
  long num_offset() const { return off_; }
  const ZPoly& num_poly() const { return num_; }
  const ZPoly& den_poly() const { return den_; }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }
  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc inverse() const;
  // v -> v^{-1} on numerator and denominator.
  RatFunc bar() const;
  RatFunc rescaled(long newdenom) const;
  // Substitute v -> 1 (classical specialization); denominator must not
  // vanish there.  Used by sanity tests only.
  Rat eval_at_one() const;

  std::string str() const;

private:
  long denom_;
  long off_;   // scaled exponent of the Laurent prefactor on num
  ZPoly num_;  // zero polynomial means the value 0 (then off_ = 0, den_ = 1)
  ZPoly den_;
  void canonicalize();
  static void require_compatible(const RatFunc& a, const RatFunc& b);
};

// Quantum integers over the module's exponent lattice: exponents are scaled
// by denom so the value is [n] in v^s as an element of Q(v^{1/denom}).
RatFunc rf_qint(long n, long s, long denom);
RatFunc rf_qfact(long n, long s, long denom);

} // namespace qf
