#include "qfold/matrix.hpp"

#include <sstream>

namespace qf {

RMat RMat::identity(int n, long d) {
  RMat m(n, n, d);
  for (int i = 0; i < n; ++i) m.at(i, i) = RatFunc(Int(1), d);
  return m;
}

bool RMat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool RMat::operator==(const RMat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

RMat operator+(const RMat& x, const RMat& y) {
  check(x.rows_ == y.rows_ && x.cols_ == y.cols_, "DimensionMismatch", "matrix add");
  RMat r = x;
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
  return r;
}

RMat operator-(const RMat& x, const RMat& y) {
  check(x.rows_ == y.rows_ && x.cols_ == y.cols_, "DimensionMismatch", "matrix sub");
  RMat r = x;
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= y.a_[i];
  return r;
}

RMat operator*(const RMat& x, const RMat& y) {
  check(x.cols_ == y.rows_, "DimensionMismatch", "matrix mul");
  RMat r(x.rows_, y.cols_, x.d_);
  for (int i = 0; i < x.rows_; ++i)
    for (int k = 0; k < x.cols_; ++k) {
      const RatFunc& f = x.at(i, k);
      if (f.is_zero()) continue;
      for (int j = 0; j < y.cols_; ++j) {
        if (y.at(k, j).is_zero()) continue;
        r.at(i, j) += f * y.at(k, j);
      }
    }
  return r;
}

RMat RMat::scaled(const RatFunc& f) const {
  RMat r = *this;
  for (auto& x : r.a_) x *= f;
  return r;
}

RMat RMat::transposed() const {
  RMat r(cols_, rows_, d_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

RMat RMat::entrywise_bar() const {
  RMat r = *this;
  for (auto& x : r.a_) x = x.bar();
  return r;
}

RMat RMat::kron(const RMat& y) const {
  RMat r(rows_ * y.rows_, cols_ * y.cols_, d_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero()) continue;
      for (int p = 0; p < y.rows_; ++p)
        for (int q = 0; q < y.cols_; ++q)
          r.at(i * y.rows_ + p, j * y.cols_ + q) = at(i, j) * y.at(p, q);
    }
  return r;
}

std::vector<RatFunc> RMat::apply(const std::vector<RatFunc>& x) const {
  check(static_cast<int>(x.size()) == cols_, "DimensionMismatch", "matrix apply");
  std::vector<RatFunc> r(static_cast<size_t>(rows_), RatFunc(Int(0), d_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !x[static_cast<size_t>(j)].is_zero())
        r[static_cast<size_t>(i)] += at(i, j) * x[static_cast<size_t>(j)];
  return r;
}

std::string RMat::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).str();
    }
    os << "]\n";
  }
  return os.str();
}

std::vector<int> rref(RMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!m.at(r, col).is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
    RatFunc p = m.at(row, col);
    for (int j = col; j < m.cols(); ++j) m.at(row, j) /= p;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      RatFunc f = m.at(r, col);
      for (int j = col; j < m.cols(); ++j) m.at(r, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(RMat m) { return static_cast<int>(rref(m).size()); }

std::optional<RMat> solve(const RMat& A, const RMat& B, bool* unique) {
  check(A.rows() == B.rows(), "DimensionMismatch", "solve");
  RMat aug(A.rows(), A.cols() + B.cols(), A.denom());
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    for (int j = 0; j < B.cols(); ++j) aug.at(i, A.cols() + j) = B.at(i, j);
  }
  std::vector<int> piv = rref(aug);
  // consistency: no pivot in the B side
  int arank = 0;
  for (int p : piv)
    if (p < A.cols()) ++arank;
  if (arank != static_cast<int>(piv.size())) return std::nullopt;
  if (unique) *unique = (arank == A.cols());
  RMat X(A.cols(), B.cols(), A.denom());
  for (int k = 0; k < arank; ++k) {
    int col = piv[static_cast<size_t>(k)];
    for (int j = 0; j < B.cols(); ++j) X.at(col, j) = aug.at(k, A.cols() + j);
  }
  return X;
}

RMat kernel(const RMat& A) {
  RMat m = A;
  std::vector<int> piv = rref(m);
  std::vector<bool> is_piv(static_cast<size_t>(A.cols()), false);
  for (int p : piv) is_piv[static_cast<size_t>(p)] = true;
  int nfree = A.cols() - static_cast<int>(piv.size());
  RMat K(A.cols(), nfree, A.denom());
  int kcol = 0;
  for (int col = 0; col < A.cols(); ++col) {
    if (is_piv[static_cast<size_t>(col)]) continue;
    K.at(col, kcol) = RatFunc(Int(1), A.denom());
    for (int k = 0; k < static_cast<int>(piv.size()); ++k)
      K.at(piv[static_cast<size_t>(k)], kcol) = -m.at(k, col);
    ++kcol;
  }
  return K;
}

} // namespace qf
