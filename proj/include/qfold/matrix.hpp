#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qfold/ratfunc.hpp"

namespace qf {

// Dense matrix over Q(v^{1/d}); all entries share one exponent denominator.
class RMat {
public:
  RMat() : rows_(0), cols_(0), d_(1) {}
  RMat(int rows, int cols, long d)
      : rows_(rows), cols_(cols), d_(d),
        a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), RatFunc(Int(0), d)) {}
  static RMat identity(int n, long d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long denom() const { return d_; }
  RatFunc& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const RatFunc& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  bool is_zero() const;
  bool operator==(const RMat& o) const;
  bool operator!=(const RMat& o) const { return !(*this == o); }

  friend RMat operator+(const RMat& x, const RMat& y);
  friend RMat operator-(const RMat& x, const RMat& y);
  friend RMat operator*(const RMat& x, const RMat& y);
  RMat scaled(const RatFunc& f) const;
  RMat transposed() const;
  RMat entrywise_bar() const;
  RMat kron(const RMat& y) const;

  std::vector<RatFunc> apply(const std::vector<RatFunc>& x) const;

  std::string str() const;

private:
  int rows_, cols_;
  long d_;
  std::vector<RatFunc> a_;
};

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(RMat& m);
int rank(RMat m);
// Solve A X = B exactly; nullopt when inconsistent.  When A has a nontrivial
// kernel the minimal (free variables = 0) solution is returned and *unique is
// set to false if provided.
std::optional<RMat> solve(const RMat& A, const RMat& B, bool* unique = nullptr);
// Basis of ker(A) as matrix columns (may have zero columns).
RMat kernel(const RMat& A);

} // namespace qf
