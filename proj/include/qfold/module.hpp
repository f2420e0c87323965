#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qfold/cartan.hpp"
#include "qfold/matrix.hpp"
#include "qfold/oracle.hpp"
#include "qfold/report.hpp"

namespace qf {

// Divided-power F-word applied to the highest weight vector, e.g.
// F_1^{(2)} F_0 v.  Adjacent factors carry distinct indices; the canonical
// order compares the letter expansion lexicographically.
struct FMonomial {
  std::vector<std::pair<int, long>> factors; // (i', n), n >= 1

  std::vector<int> letters() const;
  bool operator==(const FMonomial& o) const { return factors == o.factors; }
  bool operator<(const FMonomial& o) const { return letters() < o.letters(); }
  // Prepend one F_i; returns the merged word and the quantum-integer scale
  // c such that F_i (old vector) = c * (new vector), as [n+1] when the head
  // index matches.
  FMonomial prepended(int i, long* merged_power) const;
  std::string str() const;
};

// Weight-graded vector: block index -> coordinate column.
struct GVec {
  std::map<int, std::vector<RatFunc>> comp;
  bool is_zero() const;
};

// Integrable highest weight module over Q(v^{1/d}) with exact generator
// matrices.  Weight spaces are Shapovalov-radical quotients of the Verma
// weight spaces; the basis at each block consists of pivot divided-power
// F-monomial vectors.
struct HWModule {
  CartanData cd;
  Weight lambda;
  long depth = 0;       // height window for lambda - mu
  bool saturated = true; // generation halted on its own inside the window

  struct Parent {
    int gen = -1;   // generator index i'
    int block = -1; // parent block
    int index = 0;  // parent basis vector
    RatFunc scale;  // F_gen parent = scale * this vector
  };
  struct Block {
    std::vector<long> nu; // root-lattice offset of lambda - mu
    Weight mu;
    long height = 0;
    int dim = 0;
    std::vector<FMonomial> basis;
    std::vector<Parent> parents;
    RMat gram; // contravariant form restricted to this block
  };

  std::vector<Block> blocks;
  std::map<std::vector<long>, int> block_of;
  // (generator, source block) -> matrix into the shifted block.
  std::map<std::pair<int, int>, RMat> Emat, Fmat;

  int find_block(const std::vector<long>& nu) const;
  long ktilde_exp(int i, int block) const; // s_i <i, mu>
  long max_height() const;
  // Zero-padded accessors: missing blocks act as zero spaces.
  RMat E(int i, int block) const;
  RMat F(int i, int block) const;
  // E_i^{(n)} and F_i^{(n)} out of a block, divided exactly by [n]!.
  RMat E_div(int i, long n, int block) const;
  RMat F_div(int i, long n, int block) const;
  // Highest-weight vector as a graded vector.
  GVec highest() const;

  std::map<std::vector<long>, long> character() const;
};

// Shapovalov construction.  Errors: NotDominant.
HWModule build_module(const CartanData& cd, const Weight& lambda, long depth);

// One action step: generator tag, index, divided power.
struct WordStep {
  enum class Tag { E, F, KPlus, KMinus } tag;
  int i = 0;
  long n = 1;
};

// Applies the word left-to-right in composition order (rightmost acts
// first).  Errors: WeightOutOfRange when a truncated module window is left.
GVec act(const HWModule& m, const std::vector<WordStep>& word, const GVec& x);

// Relations (a)-(f) of the presentation, checked per weight block.
Report verify_defining_relations(const HWModule& m);
// E^{(n-1)} E = [n] E^{(n)} and the F-counterpart, plus the scalar identity
// sum_r v^{s(n-1-2r)} = [n].
Report verify_divided_power_relation(const HWModule& m, int i, long n);
// E^{(n)} F - F E^{(n)} = [m] E^{(n-1)} with m = n + <i, mu> - 1, and plain
// commutation across distinct indices.
Report verify_EF_commutation(const HWModule& m, int i, long n);

} // namespace qf
