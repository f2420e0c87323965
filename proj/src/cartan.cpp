#include "qfold/cartan.hpp"

#include <numeric>
#include <sstream>

namespace qf {

std::string Weight::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ",";
    os << c[i];
  }
  os << ")";
  return os.str();
}

Weight operator+(const Weight& a, const Weight& b) {
  check(a.rank() == b.rank(), "DimensionMismatch", "weight ranks differ");
  Weight r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  check(a.rank() == b.rank(), "DimensionMismatch", "weight ranks differ");
  Weight r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
  return r;
}

Weight operator*(long k, const Weight& a) {
  Weight r = a;
  for (long& x : r.c) x *= k;
  return r;
}

Weight CartanData::alpha(int j) const {
  Weight w(std::vector<long>(rank, 0));
  for (int i = 0; i < rank; ++i) w.c[static_cast<size_t>(i)] = C[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return w;
}

Weight CartanData::fundamental(int i) const {
  Weight w(std::vector<long>(rank, 0));
  w.c[static_cast<size_t>(i)] = 1;
  return w;
}

Weight CartanData::rho() const { return Weight(std::vector<long>(rank, 1)); }

Weight CartanData::lower(const Weight& lambda, const std::vector<long>& nu) const {
  Weight w = lambda;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      w.c[static_cast<size_t>(i)] -= C[static_cast<size_t>(i)][static_cast<size_t>(j)] * nu[static_cast<size_t>(j)];
  return w;
}

long CartanData::height(const std::vector<long>& nu) const {
  long h = 0;
  for (long x : nu) h += x;
  return h;
}

std::string CartanData::str() const {
  std::ostringstream os;
  os << "C=[";
  for (int i = 0; i < rank; ++i) {
    if (i) os << ";";
    for (int j = 0; j < rank; ++j) {
      if (j) os << ",";
      os << C[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
  }
  os << "] s=(";
  for (int i = 0; i < rank; ++i) {
    if (i) os << ",";
    os << s[static_cast<size_t>(i)];
  }
  os << ")";
  return os.str();
}

namespace {

// Exact rational linear solve A x = b; returns nullopt when inconsistent.
// A is n x n but possibly singular.
std::optional<std::vector<Rat>> solve_rational(std::vector<std::vector<Rat>> A,
                                               std::vector<Rat> b) {
  const size_t n = A.size();
  std::vector<size_t> piv_col;
  size_t row = 0;
  for (size_t col = 0; col < n && row < n; ++col) {
    size_t sel = row;
    while (sel < n && A[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(A[sel], A[row]);
    std::swap(b[sel], b[row]);
    Rat p = A[row][col];
    for (size_t j = col; j < n; ++j) A[row][j] /= p;
    b[row] /= p;
    for (size_t r = 0; r < n; ++r) {
      if (r == row || A[r][col] == 0) continue;
      Rat f = A[r][col];
      for (size_t j = col; j < n; ++j) A[r][j] -= f * A[row][j];
      b[r] -= f * b[row];
    }
    piv_col.push_back(col);
    ++row;
  }
  for (size_t r = row; r < n; ++r)
    if (b[r] != 0) return std::nullopt;
  std::vector<Rat> x(n, Rat(0));
  for (size_t k = 0; k < piv_col.size(); ++k) x[piv_col[k]] = b[k];
  return x;
}

} // namespace

CartanData validate_cartan(const std::vector<std::vector<long>>& C,
                           const std::optional<std::vector<long>>& s_opt) {
  CartanData cd;
  const size_t n = C.size();
  check(n >= 1, "NotGCM", "empty matrix");
  for (const auto& row : C)
    check(row.size() == n, "NotGCM", "matrix is not square");
  for (size_t i = 0; i < n; ++i) {
    check(C[i][i] == 2, "NotGCM", "diagonal entry is not 2");
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      check(C[i][j] <= 0, "NotGCM", "positive off-diagonal entry");
      check((C[i][j] == 0) == (C[j][i] == 0), "NotGCM",
            "zero pattern is not symmetric");
    }
  }
  cd.rank = static_cast<int>(n);
  cd.C = C;

  // Minimal symmetrizer per connected component: propagate the exact ratios
  // s_j = s_i * c_ij / c_ji along edges, then clear denominators.
  std::vector<Rat> ratio(n, Rat(0));
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (size_t start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = ncomp;
    ratio[start] = 1;
    std::vector<size_t> stack{start};
    while (!stack.empty()) {
      size_t i = stack.back();
      stack.pop_back();
      for (size_t j = 0; j < n; ++j) {
        if (i == j || C[i][j] == 0) continue;
        // both entries are negative, so the ratio is positive
        Rat rj = ratio[i] * Rat(-C[i][j]) / Rat(-C[j][i]);
        if (comp[j] < 0) {
          comp[j] = ncomp;
          ratio[j] = rj;
          stack.push_back(j);
        } else {
          check(ratio[j] == rj, "NotSymmetrizable",
                "inconsistent symmetrizer ratios on a cycle");
        }
      }
    }
    ++ncomp;
  }
  std::vector<long> smin(n, 1);
  for (int cidx = 0; cidx < ncomp; ++cidx) {
    Int l = 1;
    for (size_t i = 0; i < n; ++i)
      if (comp[i] == cidx)
        l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(ratio[i]));
    Int g = 0;
    for (size_t i = 0; i < n; ++i)
      if (comp[i] == cidx)
        g = boost::multiprecision::gcd(g, Int(boost::multiprecision::numerator(ratio[i]) * l /
                                              boost::multiprecision::denominator(ratio[i])));
    for (size_t i = 0; i < n; ++i)
      if (comp[i] == cidx) {
        Int v = boost::multiprecision::numerator(ratio[i]) * l /
                boost::multiprecision::denominator(ratio[i]) / g;
        smin[i] = v.convert_to<long>();
      }
  }
  if (s_opt) {
    check(s_opt->size() == n, "NotSymmetrizable", "symmetrizer length mismatch");
    for (size_t i = 0; i < n; ++i) {
      check((*s_opt)[i] >= 1, "NotSymmetrizable", "symmetrizer must be positive");
      for (size_t j = 0; j < n; ++j)
        check((*s_opt)[i] * C[i][j] == (*s_opt)[j] * C[j][i], "NotSymmetrizable",
              "provided s does not symmetrize C");
    }
    check(*s_opt == smin, "NotMinimalSymmetrizer",
          "provided symmetrizer is valid but not componentwise minimal");
  }
  cd.s = smin;
  cd.B.assign(n, std::vector<long>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) cd.B[i][j] = cd.s[i] * C[i][j];

  // d from the fundamental-weight gram matrix G = diag(s) C^{-1} when C is
  // invertible; the braiding normalization never needs d in the singular
  // (affine) case, where d stays 1.
  std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) A[i][j] = Rat(C[i][j]);
  bool inv = true;
  std::vector<std::vector<Rat>> Cinv(n, std::vector<Rat>(n, Rat(0)));
  {
    // invert by solving against unit vectors
    for (size_t k = 0; k < n && inv; ++k) {
      std::vector<Rat> e(n, Rat(0));
      e[k] = 1;
      auto x = solve_rational(A, e);
      if (!x) {
        inv = false;
        break;
      }
      for (size_t i = 0; i < n; ++i) Cinv[i][k] = (*x)[i];
    }
    if (inv) {
      // detect singular-but-consistent: verify C * Cinv = I
      for (size_t i = 0; i < n && inv; ++i)
        for (size_t j = 0; j < n && inv; ++j) {
          Rat acc(0);
          for (size_t k = 0; k < n; ++k) acc += Rat(C[i][k]) * Cinv[k][j];
          if (acc != Rat(i == j ? 1 : 0)) inv = false;
        }
    }
  }
  cd.c_invertible = inv;
  if (inv) {
    cd.fundamental_gram.assign(n, std::vector<Rat>(n, Rat(0)));
    Int dd = 1;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        cd.fundamental_gram[i][j] = Rat(cd.s[i]) * Cinv[i][j];
        dd = boost::multiprecision::lcm(
            dd, boost::multiprecision::denominator(cd.fundamental_gram[i][j]));
      }
    cd.d = dd.convert_to<long>();
  } else {
    cd.d = 1;
  }
  return cd;
}

long pairing(const CartanData& cd, int i, const Weight& mu) {
  check(mu.rank() == static_cast<size_t>(cd.rank), "DimensionMismatch",
        "weight rank does not match Cartan datum");
  check(i >= 0 && i < cd.rank, "DimensionMismatch", "index out of range");
  return mu.c[static_cast<size_t>(i)];
}

bool is_dominant(const CartanData& cd, const Weight& w) {
  check(w.rank() == static_cast<size_t>(cd.rank), "DimensionMismatch",
        "weight rank does not match Cartan datum");
  for (long x : w.c)
    if (x < 0) return false;
  return true;
}

Rat sym_form_root(const CartanData& cd, const Weight& w, const std::vector<Rat>& root) {
  check(w.rank() == root.size() && w.rank() == static_cast<size_t>(cd.rank),
        "DimensionMismatch", "rank mismatch");
  // (w, alpha_j) = s_j <j, w>
  Rat acc(0);
  for (size_t j = 0; j < root.size(); ++j)
    acc += root[j] * Rat(cd.s[j]) * Rat(w.c[j]);
  return acc;
}

Rat sym_form_root(const CartanData& cd, const Weight& w, const std::vector<long>& root) {
  std::vector<Rat> r(root.size());
  for (size_t i = 0; i < root.size(); ++i) r[i] = Rat(root[i]);
  return sym_form_root(cd, w, r);
}

std::optional<std::vector<Rat>> root_coordinates(const CartanData& cd, const Weight& w) {
  // w = sum y_j alpha_j  <=>  C y = coords(w)
  const size_t n = static_cast<size_t>(cd.rank);
  std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n));
  std::vector<Rat> b(n);
  for (size_t i = 0; i < n; ++i) {
    b[i] = Rat(w.c[i]);
    for (size_t j = 0; j < n; ++j) A[i][j] = Rat(cd.C[i][j]);
  }
  return solve_rational(std::move(A), std::move(b));
}

Rat sym_form(const CartanData& cd, const Weight& a, const Weight& b) {
  if (auto rb = root_coordinates(cd, b)) return sym_form_root(cd, a, *rb);
  if (auto ra = root_coordinates(cd, a)) return sym_form_root(cd, b, *ra);
  fail("NotInRootSpan", "neither weight lies in the rational root span");
}

} // namespace qf
