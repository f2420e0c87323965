#pragma once

#include <map>

#include "qfold/module.hpp"
#include "qfold/vseries.hpp"

namespace qf {

// Contravariant Gram tables, one symmetric exact matrix per weight block in
// the module's pivot basis; weight spaces are orthogonal by fiat.
struct GramTable {
  std::map<std::vector<long>, RMat> block; // nu -> gram
  long expansion_order = 0;                // order used by classification runs
};

// Recomputes the form by the contravariance recursion, peeling one F from
// the first argument via the stored parent links: (F_i b, y) =
// (b, v_i Ktilde_{-i} E_i y), normalized to 1 on the highest-weight line.
GramTable contravariant_form(const HWModule& m);

// Per-entry series classes of a Gram block.
struct OrthogonalityReport {
  bool almost_orthogonal = true;
  long order = 0;
  // (nu, row, col) -> class
  std::map<std::tuple<std::vector<long>, int, int>, SeriesClass> classes;
};

// Diagonal entries must expand in 1 + v^{-1}O[[v^{-1}]] and off-diagonal
// ones in v^{-1}O[[v^{-1}]].  order <= 0 picks 2*height window + 4.
OrthogonalityReport almost_orthogonality(const HWModule& m, const GramTable& g,
                                         long order = 0);

// Contravariance as an exact matrix identity on every weight block:
// gram_{mu+alpha_i} F_i = (v_i Ktilde_{-i} E_i)^T-transport of gram_mu.
Report verify_contravariance(const HWModule& m, const GramTable& g);

} // namespace qf
