#pragma once

#include <map>
#include <vector>

#include "qfold/matrix.hpp"
#include "qfold/module.hpp"

namespace qf {

// Weight-graded space refined by factor: a component is a tuple of factor
// blocks; its basis is the row-major product of factor bases.
struct GradedSpace {
  const std::vector<const HWModule*> factors;
  struct Comp {
    std::vector<int> fblock;      // per-factor block index
    std::vector<long> nu_total;   // summed root offset
    int dim = 0;
  };
  std::vector<Comp> comps;
  std::map<std::vector<int>, int> index; // fblock tuple -> component

  explicit GradedSpace(std::vector<const HWModule*> fs);
  int rank() const;
  long denom() const;
  int find(const std::vector<int>& fblock) const;
  long ktilde_exp(int i, const Comp& c) const; // additive across factors
  int total_dim() const;
};

// Block operator between graded spaces; missing blocks are zero.  An
// operator may be bar-semilinear: apply() then conjugates the input
// coordinates first, and composition tracks the twist.
struct GradedOp {
  const GradedSpace* src = nullptr;
  const GradedSpace* dst = nullptr;
  bool semilinear = false;
  std::map<std::pair<int, int>, RMat> blocks; // (src comp, dst comp) -> matrix

  static GradedOp identity(const GradedSpace& s);
  static GradedOp zero(const GradedSpace& s, const GradedSpace& d);

  void add_block(int sc, int dc, RMat m);
  const RMat* block(int sc, int dc) const;
  GradedOp compose(const GradedOp& inner) const; // (*this) o inner
  friend GradedOp operator+(const GradedOp& a, const GradedOp& b);
  friend GradedOp operator-(const GradedOp& a, const GradedOp& b);
  GradedOp scaled(const RatFunc& f) const;
  // entrywise bar on every block (does not touch the semilinear flag)
  GradedOp entrywise_bar() const;
  bool is_zero() const;
  bool equals(const GradedOp& o) const;
  bool is_identity() const;
  void prune();
};

} // namespace qf
