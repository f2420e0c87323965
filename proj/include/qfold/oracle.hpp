#pragma once

#include <map>
#include <vector>

#include "qfold/cartan.hpp"

namespace qf {

// Character table indexed by root-lattice offset nu (mu = lambda - sum nu_i
// alpha_i); multiplicities are truncated at the depth window.
struct CharacterTable {
  Weight lambda;
  long depth = 0;
  std::map<std::vector<long>, long> mult; // nu -> multiplicity
};

// Positive roots with multiplicities inside the height window, obtained by
// Peterson's recursion over the symmetrized form (valid for any symmetrizable
// datum; imaginary roots included in non-finite type).
std::map<std::vector<long>, long> positive_roots(const CartanData& cd, long max_height);

// Classical Freudenthal recursion seeded by mult(lambda) = 1.
// Errors: NotDominant, DepthExceeded.
long freudenthal_multiplicity(const CartanData& cd, const Weight& lambda,
                              const std::vector<long>& nu, long depth);
CharacterTable freudenthal_character(const CartanData& cd, const Weight& lambda, long depth);

// Weyl dimension via the product formula; requires positive-definite
// symmetrized form.  Errors: NotFiniteType, NotDominant.
Int weyl_dim(const CartanData& cd, const Weight& lambda);
bool is_finite_type(const CartanData& cd);

// Convolution of two character tables (same datum assumed), truncated to the
// joint depth window.
CharacterTable char_convolve(const CartanData& cd, const CharacterTable& c1,
                             const CharacterTable& c2);

} // namespace qf
