#pragma once

#include <memory>

#include "qfold/graded.hpp"

namespace qf {

// Tensor product of highest weight modules with the coproduct action
//   Delta(E_i) = E_i ⊗ 1 + K~_i ⊗ E_i,
//   Delta(F_i) = F_i ⊗ K~_{-i} + 1 ⊗ F_i,
// iterated left-to-right for N factors.  Move-only: operators hold pointers
// into the graded space.
struct TensorModule {
  std::vector<const HWModule*> factors;
  std::unique_ptr<GradedSpace> space;

  TensorModule() = default;
  TensorModule(TensorModule&&) = default;
  TensorModule& operator=(TensorModule&&) = default;
  TensorModule(const TensorModule&) = delete;

  GradedOp deltaE(int i) const;
  GradedOp deltaF(int i) const;
  GradedOp ktilde(int i, int sign) const; // diagonal v^{±s_i <i, mu>}
  GradedOp deltaE_div(int i, long n) const;
  GradedOp deltaF_div(int i, long n) const;
  std::map<std::vector<long>, long> character() const;
  bool saturated() const;
};

// Errors: CartanMismatch.
TensorModule tensor_module(std::vector<const HWModule*> factors);

// Defining relations for the coproduct action (matrix identities per block).
Report verify_tensor_relations(const TensorModule& t);

// Componentwise bar: semilinear with identity matrix in the divided-power
// monomial product basis.  A single module is the one-factor case.
GradedOp bar_on_tensor(const TensorModule& t);
GradedOp bar_on_module(const TensorModule& single_factor);

// Quasi-R-matrix on a two-factor tensor module: Theta_0 = id and
// Psi = Theta o (bar ⊗ bar) intertwines Delta(u) with Delta(bar u).
// Determined degreewise by an exact linear solve.  Errors: Underdetermined,
// Inconsistent.
GradedOp compute_theta(const TensorModule& t, long depth);
// Psi as a semilinear graded operator.
GradedOp psi_operator(const TensorModule& t, const GradedOp& theta);

// Braiding T_ij -> T_ji: swap the factors, scale the (mu1, mu2)-block by
// v^{-(mu1,mu2)}, then apply the quasi-R-matrix of the swapped pair.  Both
// tensor modules must be built over the same factor modules in opposite
// order.  Errors: NotFiniteType (form on the weight lattice required).
GradedOp braiding(const TensorModule& t_ij, const TensorModule& t_ji, long depth);
// Inverse from the bar-conjugate quasi-R-matrix; braiding o inverse = id.
GradedOp braiding_inverse(const TensorModule& t_ij, const TensorModule& t_ji, long depth);

// Exact blockwise Yang-Baxter check on L(l1) ⊗ L(l2) ⊗ L(l3).
Report verify_yang_baxter(const CartanData& cd, const Weight& l1, const Weight& l2,
                          const Weight& l3, long depth);

// Highest-weight multiset: for each total weight, the dimension of the joint
// kernel of all Delta(E_i).
std::map<std::vector<long>, long> decompose_tensor_module(const TensorModule& t);

// Product form on components (Kronecker of factor grams) plus its coproduct
// contravariance check.
struct TensorGram {
  std::map<int, RMat> comp; // component index -> gram
};
TensorGram tensor_form(const TensorModule& t);
Report verify_tensor_contravariance(const TensorModule& t, const TensorGram& g);

} // namespace qf
