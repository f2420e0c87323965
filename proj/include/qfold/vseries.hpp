#pragma once

#include <string>
#include <vector>

#include "qfold/cyclotomic.hpp"
#include "qfold/ratfunc.hpp"

namespace qf {

// Truncated element of O[[v^-1]]: coeffs[k] multiplies v^{-k}, k = 0..order.
struct VSeries {
  int order = 0;
  std::vector<CycInt> coeffs;

  CycInt at(int k) const {
    return k >= 0 && k <= order ? coeffs[static_cast<size_t>(k)]
                                : CycInt(Int(0));
  }
  std::string str() const;
};

enum class SeriesClass { Unit, Small, Other };

const char* series_class_name(SeriesClass c);

struct Expansion {
  VSeries series;
  SeriesClass cls = SeriesClass::Other;
  bool has_positive_part = false; // nonzero terms at positive powers of v
};

// Expand x in Z((v^{-1})) to the given truncation order.  Requires integer
// v-exponents and a denominator whose highest-exponent coefficient is a unit
// of Z; otherwise throws Error("NotExpandable").
Expansion expand_vinv(const RatFunc& x, int order);

} // namespace qf
