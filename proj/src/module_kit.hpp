// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "rep.hpp"
#include "scalar.hpp"

namespace entk {

/// Finite-dimensional C*-algebra: a direct sum of full matrix blocks.
struct FDAlgebra {
  std::vector<unsigned> block_sizes;

  friend bool operator==(const FDAlgebra& a, const FDAlgebra& b) {
    return a.block_sizes == b.block_sizes;
  }
};

/// Element of an FDAlgebra: one exact matrix per block.
class FDElement {
 public:
  FDElement() = default;
  FDElement(FDAlgebra alg, std::vector<ScalarMatrix> blocks);

  static FDElement zero(const FDAlgebra& alg);
  static FDElement unit(const FDAlgebra& alg);

  const FDAlgebra& algebra() const { return alg_; }
  const std::vector<ScalarMatrix>& blocks() const { return blocks_; }
  ScalarMatrix& block(std::size_t b) { return blocks_[b]; }
  const ScalarMatrix& block(std::size_t b) const { return blocks_[b]; }

  bool is_zero() const;

  FDElement& operator+=(const FDElement& o);
  friend FDElement operator+(FDElement a, const FDElement& b) { return a += b; }
  friend FDElement operator-(const FDElement& a, const FDElement& b);
  friend FDElement operator*(const FDElement& a, const FDElement& b);
  FDElement adjoint() const;
  FDElement scaled(const Scalar& c) const;

  friend bool operator==(const FDElement& a, const FDElement& b) {
    return a.alg_ == b.alg_ && a.blocks_ == b.blocks_;
  }
  friend bool operator!=(const FDElement& a, const FDElement& b) { return !(a == b); }

 private:
  FDAlgebra alg_;
  std::vector<ScalarMatrix> blocks_;
};

/// Element of the free right module A^n, coordinates in A.
struct ModuleVector {
  std::vector<FDElement> coords;

  friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
    return a.coords == b.coords;
  }
};

ModuleVector standard_basis_vector(const FDAlgebra& alg, unsigned n, unsigned i);  // e_i, 1-based
std::vector<ModuleVector> standard_basis(const FDAlgebra& alg, unsigned n);
ModuleVector module_right_mul(const ModuleVector& x, const FDElement& a);
ModuleVector module_add(const ModuleVector& x, const ModuleVector& y);

/// <x, y> = sum_i x_i* y_i, the A-valued inner product.
FDElement module_inner(const ModuleVector& x, const ModuleVector& y);

bool check_orthonormal(const std::vector<ModuleVector>& f);

/// n x n matrix over A acting as V x = sum_j sum_i e_j v_ji <e_i, x>.
struct ModuleMatrix {
  std::vector<std::vector<FDElement>> entries;

  friend bool operator==(const ModuleMatrix& a, const ModuleMatrix& b) {
    return a.entries == b.entries;
  }
};

ModuleMatrix module_matrix_identity(const FDAlgebra& alg, unsigned n);
/// theta_{e_i, e_j} : x -> e_i <e_j, x> as a matrix (the (i,j) matrix unit).
ModuleMatrix theta_matrix_unit(const FDAlgebra& alg, unsigned n, unsigned i, unsigned j);
ModuleMatrix module_matrix_adjoint(const ModuleMatrix& m);
ModuleMatrix module_matrix_mul(const ModuleMatrix& a, const ModuleMatrix& b);
ModuleVector apply_matrix(const ModuleMatrix& m, const ModuleVector& x);
bool check_unitary_matrix(const ModuleMatrix& m);

/// Coefficients <f_i, x>; requires F orthonormal of size n. The caller gets
/// exact reconstruction x = sum f_i . coeff_i.
std::vector<FDElement> basis_expand(const ModuleVector& x, const std::vector<ModuleVector>& f);

/// U with u_ij = <e_i, f_j>; checks orthonormality and certifies generation
/// through exact unitarity of U (an isometry of a finite-dimensional
/// *-algebra is automatically surjective, and UU* = I is verified outright).
ModuleMatrix basis_to_unitary(const std::vector<ModuleVector>& f);

/// (K_0(A), [1_A]) as a finitely generated abelian group with a marked
/// class: Z^free_rank (+) (+)_j Z/torsion[j], unit coordinates listed free
/// part first.
struct K0Data {
  unsigned free_rank = 0;
  std::vector<Int> torsion;  // each >= 2
  std::vector<Int> unit;     // length = free_rank + torsion.size()
};

void validate_k0(const K0Data& k);

/// Least m >= 1 with m.[1] = 0, or nullopt for infinite order.
std::optional<Int> unit_order(const K0Data& k);

/// Invariant basis number, detected as: the class of the unit has infinite
/// additive order in K_0. (The finite factors have IBN and K_0 = Z or R with
/// [1] of infinite order; B(H) has K_0 = 0 and fails IBN.)
bool ibn(const K0Data& k);

/// K_0 of a finite-dimensional algebra: Z^blocks with [1] = (block sizes).
K0Data fd_to_k0(const FDAlgebra& alg);

}  // namespace entk
