#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qfold/cartan.hpp"
#include "qfold/report.hpp"

namespace qf {

// Monomial in the variables Y_i(n): (i, n) -> exponent, zeros dropped.
using Monomial = std::map<std::pair<int, long>, int>;

// Edge-colored weighted digraph with deterministic vertex numbering; edges
// fE[i][v] realize f~_i with eE[i][v] the inverse partial map.
struct Crystal {
  CartanData cd;
  Weight lambda;
  long depth = 0;
  bool complete = true;

  struct V {
    Monomial mono;           // payload for monomial models, empty otherwise
    std::vector<long> nu;    // root offset of lambda - wt
    Weight wt;
    std::vector<long> eps, phi;
    std::string label;
  };
  std::vector<V> verts;
  std::vector<std::vector<int>> fE, eE; // [i][v] -> vertex or -1
  int hw = 0;

  long height(int v) const { return cd.height(verts[static_cast<size_t>(v)].nu); }
  int f(int i, int v) const { return fE[static_cast<size_t>(i)][static_cast<size_t>(v)]; }
  int e(int i, int v) const { return eE[static_cast<size_t>(i)][static_cast<size_t>(v)]; }
  std::map<std::vector<long>, long> character() const;
  int size() const { return static_cast<int>(verts.size()); }
};

// Connected monomial crystal grown from prod_i Y_i(0)^{<i,lambda>} by the
// Kashiwara operators with the sign convention c_ij = [i < j].
// Errors: NotDominant.
Crystal build_crystal(const CartanData& cd, const Weight& lambda, long depth);

// Tensor product by the signature rule
//   f~(b1 ⊗ b2) = f~b1 ⊗ b2 if phi(b1) > eps(b2), else b1 ⊗ f~b2,
// with the matching e~ convention.  Errors: CartanMismatch.
Crystal tensor_crystal(const Crystal& b1, const Crystal& b2);

// Orbit-folding: vertices are the a-fixed monomials, operators the products
// over index orbits, weights folded by reading any orbit member.  Returns a
// crystal over the orbit Cartan datum.  Errors: NonInvariantHighestWeight,
// OrbitOperatorMismatch, BadArgument (non-monomial payload).
Crystal fold_crystal(const Crystal& bhat, const std::vector<int>& a_perm);

// Edge-label- and weight-preserving bijection rooted at the highest-weight
// vertices; nullopt when none exists.
std::optional<std::vector<int>> crystal_isomorphic(const Crystal& b1, const Crystal& b2);

// Same BFS matching restricted to the height window, comparing counts and
// edge structure only (weights differ across the compared highest weights).
bool crystal_window_match(const Crystal& b1, const Crystal& b2, long height);

// Multiset of weights of the vertices killed by every e~_i, as root offsets.
std::map<std::vector<long>, long> decompose_by_highest_weight(const Crystal& b);

struct StringData {
  long eps = 0;
  long phi = 0;
  int top = -1; // e~^max target
};
StringData string_data(const Crystal& b, int v, int i);

} // namespace qf
