// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#include "module_kit.hpp"

#include "error.hpp"

namespace entk {

namespace {

ScalarMatrix zero_matrix(unsigned k) {
  return ScalarMatrix(k, std::vector<Scalar>(k, Scalar::zero()));
}

ScalarMatrix add_matrix(const ScalarMatrix& a, const ScalarMatrix& b) {
  ScalarMatrix out = a;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) out[r][c] += b[r][c];
  return out;
}

void require_same_algebra(const FDElement& a, const FDElement& b) {
  if (!(a.algebra() == b.algebra())) fail(Errc::invalid, "shape mismatch");
}

}  // namespace

FDElement::FDElement(FDAlgebra alg, std::vector<ScalarMatrix> blocks)
    : alg_(std::move(alg)), blocks_(std::move(blocks)) {
  if (alg_.block_sizes.empty()) fail(Errc::invalid, "algebra must have at least one block");
  if (blocks_.size() != alg_.block_sizes.size())
    fail(Errc::invalid, "element block count mismatch");
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    unsigned k = alg_.block_sizes[b];
    if (k < 1) fail(Errc::invalid, "block size must be positive");
    if (blocks_[b].size() != k) fail(Errc::invalid, "element block is not square");
    for (const auto& row : blocks_[b])
      if (row.size() != k) fail(Errc::invalid, "element block is not square");
  }
}

FDElement FDElement::zero(const FDAlgebra& alg) {
  std::vector<ScalarMatrix> blocks;
  for (unsigned k : alg.block_sizes) blocks.push_back(zero_matrix(k));
  return FDElement(alg, std::move(blocks));
}

FDElement FDElement::unit(const FDAlgebra& alg) {
  std::vector<ScalarMatrix> blocks;
  for (unsigned k : alg.block_sizes) blocks.push_back(matrix_identity(k));
  return FDElement(alg, std::move(blocks));
}

bool FDElement::is_zero() const {
  for (const auto& m : blocks_)
    for (const auto& row : m)
      for (const auto& c : row)
        if (!c.is_zero()) return false;
  return true;
}

FDElement& FDElement::operator+=(const FDElement& o) {
  require_same_algebra(*this, o);
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    blocks_[b] = add_matrix(blocks_[b], o.blocks_[b]);
  return *this;
}

FDElement operator-(const FDElement& a, const FDElement& b) {
  FDElement out = a;
  out += b.scaled(Scalar(-1));
  return out;
}

FDElement operator*(const FDElement& a, const FDElement& b) {
  require_same_algebra(a, b);
  std::vector<ScalarMatrix> blocks;
  for (std::size_t i = 0; i < a.blocks().size(); ++i)
    blocks.push_back(matrix_mul(a.block(i), b.block(i)));
  return FDElement(a.algebra(), std::move(blocks));
}

FDElement FDElement::adjoint() const {
  std::vector<ScalarMatrix> blocks;
  for (const auto& m : blocks_) blocks.push_back(matrix_adjoint(m));
  return FDElement(alg_, std::move(blocks));
}

FDElement FDElement::scaled(const Scalar& c) const {
  std::vector<ScalarMatrix> blocks = blocks_;
  for (auto& m : blocks)
    for (auto& row : m)
      for (auto& v : row) v *= c;
  return FDElement(alg_, std::move(blocks));
}

ModuleVector standard_basis_vector(const FDAlgebra& alg, unsigned n, unsigned i) {
  if (i < 1 || i > n) fail(Errc::invalid, "basis index out of range");
  ModuleVector v;
  for (unsigned c = 1; c <= n; ++c)
    v.coords.push_back(c == i ? FDElement::unit(alg) : FDElement::zero(alg));
  return v;
}

std::vector<ModuleVector> standard_basis(const FDAlgebra& alg, unsigned n) {
  std::vector<ModuleVector> out;
  for (unsigned i = 1; i <= n; ++i) out.push_back(standard_basis_vector(alg, n, i));
  return out;
}

ModuleVector module_right_mul(const ModuleVector& x, const FDElement& a) {
  ModuleVector out;
  for (const FDElement& c : x.coords) out.coords.push_back(c * a);
  return out;
}

ModuleVector module_add(const ModuleVector& x, const ModuleVector& y) {
  if (x.coords.size() != y.coords.size()) fail(Errc::invalid, "shape mismatch");
  ModuleVector out;
  for (std::size_t i = 0; i < x.coords.size(); ++i)
    out.coords.push_back(x.coords[i] + y.coords[i]);
  return out;
}

FDElement module_inner(const ModuleVector& x, const ModuleVector& y) {
  if (x.coords.empty() || x.coords.size() != y.coords.size())
    fail(Errc::invalid, "shape mismatch");
  FDElement out = FDElement::zero(x.coords[0].algebra());
  for (std::size_t i = 0; i < x.coords.size(); ++i)
    out += x.coords[i].adjoint() * y.coords[i];
  return out;
}

bool check_orthonormal(const std::vector<ModuleVector>& f) {
  if (f.empty()) fail(Errc::invalid, "empty family");
  const FDAlgebra& alg = f[0].coords.at(0).algebra();
  FDElement one = FDElement::unit(alg);
  FDElement zero = FDElement::zero(alg);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) {
      FDElement ip = module_inner(f[i], f[j]);
      if (ip != (i == j ? one : zero)) return false;
    }
  return true;
}

ModuleMatrix module_matrix_identity(const FDAlgebra& alg, unsigned n) {
  ModuleMatrix m;
  m.entries.assign(n, std::vector<FDElement>(n, FDElement::zero(alg)));
  for (unsigned i = 0; i < n; ++i) m.entries[i][i] = FDElement::unit(alg);
  return m;
}

ModuleMatrix theta_matrix_unit(const FDAlgebra& alg, unsigned n, unsigned i, unsigned j) {
  if (i < 1 || i > n || j < 1 || j > n) fail(Errc::invalid, "index out of range");
  ModuleMatrix m;
  m.entries.assign(n, std::vector<FDElement>(n, FDElement::zero(alg)));
  m.entries[i - 1][j - 1] = FDElement::unit(alg);
  return m;
}

ModuleMatrix module_matrix_adjoint(const ModuleMatrix& m) {
  std::size_t n = m.entries.size();
  ModuleMatrix out;
  out.entries.assign(n, std::vector<FDElement>(n, FDElement::zero(m.entries[0][0].algebra())));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.entries[c][r] = m.entries[r][c].adjoint();
  return out;
}

ModuleMatrix module_matrix_mul(const ModuleMatrix& a, const ModuleMatrix& b) {
  std::size_t n = a.entries.size();
  if (b.entries.size() != n) fail(Errc::invalid, "shape mismatch");
  ModuleMatrix out;
  out.entries.assign(n, std::vector<FDElement>(n, FDElement::zero(a.entries[0][0].algebra())));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t c = 0; c < n; ++c)
        out.entries[r][c] += a.entries[r][k] * b.entries[k][c];
  return out;
}

ModuleVector apply_matrix(const ModuleMatrix& m, const ModuleVector& x) {
  std::size_t n = m.entries.size();
  if (x.coords.size() != n) fail(Errc::invalid, "shape mismatch");
  ModuleVector out;
  for (std::size_t j = 0; j < n; ++j) {
    FDElement acc = FDElement::zero(x.coords[0].algebra());
    for (std::size_t i = 0; i < n; ++i) acc += m.entries[j][i] * x.coords[i];
    out.coords.push_back(std::move(acc));
  }
  return out;
}

bool check_unitary_matrix(const ModuleMatrix& m) {
  std::size_t n = m.entries.size();
  for (const auto& row : m.entries)
    if (row.size() != n) return false;
  const FDAlgebra& alg = m.entries[0][0].algebra();
  ModuleMatrix id = module_matrix_identity(alg, static_cast<unsigned>(n));
  ModuleMatrix adj = module_matrix_adjoint(m);
  return module_matrix_mul(adj, m) == id && module_matrix_mul(m, adj) == id;
}

std::vector<FDElement> basis_expand(const ModuleVector& x, const std::vector<ModuleVector>& f) {
  if (f.size() != x.coords.size()) fail(Errc::invalid, "basis size must match the module rank");
  if (!check_orthonormal(f)) fail(Errc::invalid, "family is not orthonormal");
  std::vector<FDElement> out;
  for (const ModuleVector& fi : f) out.push_back(module_inner(fi, x));
  return out;
}

ModuleMatrix basis_to_unitary(const std::vector<ModuleVector>& f) {
  if (f.empty()) fail(Errc::invalid, "empty family");
  auto n = static_cast<unsigned>(f.size());
  if (f[0].coords.size() != n) fail(Errc::invalid, "basis size must match the module rank");
  if (!check_orthonormal(f)) fail(Errc::invalid, "family is not orthonormal");
  const FDAlgebra& alg = f[0].coords[0].algebra();
  std::vector<ModuleVector> e = standard_basis(alg, n);

  ModuleMatrix u;
  u.entries.assign(n, std::vector<FDElement>(n, FDElement::zero(alg)));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) u.entries[i][j] = module_inner(e[i], f[j]);

  // Orthonormality gives U*U = I; UU* = I certifies that the family
  // generates (no proper isometries in a finite-dimensional *-algebra).
  if (!check_unitary_matrix(u)) fail(Errc::invalid, "family is orthonormal but not a basis");
  return u;
}

void validate_k0(const K0Data& k) {
  for (const Int& t : k.torsion)
    if (t < 2) fail(Errc::invalid, "torsion orders must be >= 2");
  if (k.unit.size() != k.free_rank + k.torsion.size())
    fail(Errc::invalid, "unit class length inconsistent with the group data");
}

std::optional<Int> unit_order(const K0Data& k) {
  validate_k0(k);
  for (unsigned i = 0; i < k.free_rank; ++i)
    if (k.unit[i] != 0) return std::nullopt;
  Int order = 1;
  for (std::size_t j = 0; j < k.torsion.size(); ++j) {
    const Int& m = k.torsion[j];
    Int u = k.unit[k.free_rank + j] % m;
    if (u < 0) u += m;
    if (u == 0) continue;
    Int g = gcd(u, m);
    Int component_order = m / g;
    order = lcm(order, component_order);
  }
  return order;
}

bool ibn(const K0Data& k) { return !unit_order(k).has_value(); }

K0Data fd_to_k0(const FDAlgebra& alg) {
  if (alg.block_sizes.empty()) fail(Errc::invalid, "algebra must have at least one block");
  K0Data k;
  k.free_rank = static_cast<unsigned>(alg.block_sizes.size());
  for (unsigned s : alg.block_sizes) {
    if (s < 1) fail(Errc::invalid, "block size must be positive");
    k.unit.push_back(Int(s));
  }
  return k;
}

}  // namespace entk
