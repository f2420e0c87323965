#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfold/cyclotomic.hpp"

namespace qf {

// Weight in the pairing coordinate system: c[i] = <i, w> for i in I'.
struct Weight {
  std::vector<long> c;

  Weight() = default;
  explicit Weight(std::vector<long> v) : c(std::move(v)) {}
  size_t rank() const { return c.size(); }
  bool operator==(const Weight& o) const { return c == o.c; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  bool operator<(const Weight& o) const { return c < o.c; }
  std::string str() const;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(long k, const Weight& a);

// Symmetrizable Cartan datum: GCM C, minimal positive symmetrizer s,
// symmetric matrix B with b_ij = s_i c_ij, and the exponent denominator d
// clearing the symmetric form on fundamental weights (1 when C is singular).
struct CartanData {
  int rank = 0;
  std::vector<std::vector<long>> C;
  std::vector<long> s;
  std::vector<std::vector<long>> B;
  long d = 1;
  bool c_invertible = false;
  std::vector<std::vector<Rat>> fundamental_gram; // (beta_i, beta_j) when invertible

  Weight alpha(int j) const;        // simple root in pairing coordinates
  Weight fundamental(int i) const;  // beta_i
  Weight rho() const;               // all-ones weight
  Weight zero() const { return Weight(std::vector<long>(rank, 0)); }
  // lambda - sum nu_i alpha_i
  Weight lower(const Weight& lambda, const std::vector<long>& nu) const;
  long height(const std::vector<long>& nu) const;
  std::string str() const;
};

// Validates GCM axioms and symmetrizability; computes the componentwise
// minimal positive symmetrizer when s is omitted.  A supplied s must be a
// valid minimal symmetrizer.  Errors: NotGCM, NotSymmetrizable,
// NotMinimalSymmetrizer.
CartanData validate_cartan(const std::vector<std::vector<long>>& C,
                           const std::optional<std::vector<long>>& s = std::nullopt);

long pairing(const CartanData& cd, int i, const Weight& mu);
bool is_dominant(const CartanData& cd, const Weight& w);

// Symmetric bilinear form value (w, sum_j root[j] alpha_j): exact, defined
// for every weight against a rational root-lattice vector.
Rat sym_form_root(const CartanData& cd, const Weight& w, const std::vector<Rat>& root);
Rat sym_form_root(const CartanData& cd, const Weight& w, const std::vector<long>& root);
// General symmetric form: expresses one argument in the root lattice over Q.
// Errors: NotInRootSpan when neither argument lies in the rational root span.
Rat sym_form(const CartanData& cd, const Weight& a, const Weight& b);

// Rational root coordinates of w if w = sum y_j alpha_j has a solution.
std::optional<std::vector<Rat>> root_coordinates(const CartanData& cd, const Weight& w);

} // namespace qf
