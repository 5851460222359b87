// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "basis.hpp"
#include "sparse.hpp"

namespace entk {

/// Row-major square matrix of exact scalars.
using ScalarMatrix = std::vector<std::vector<Scalar>>;

ScalarMatrix matrix_identity(unsigned n);
ScalarMatrix matrix_adjoint(const ScalarMatrix& m);
ScalarMatrix matrix_mul(const ScalarMatrix& a, const ScalarMatrix& b);
/// Exact test of U*U = UU* = I.
bool matrix_is_unitary(const ScalarMatrix& m);

/// One direct summand of a representation space.
///
/// A Fock block carries the shift action on all words over {1..n}: generator
/// i prepends the letter i, its adjoint strips it. A cycle block is a
/// computable essential summand built from the periodic tail of its cycle
/// word: position k on the cycle plus a finite branch word, with the
/// canonical-name constraint that the branch may not end in the letter that
/// extends the tail (such a name would denote the same vector as a shorter
/// branch one position earlier on the cycle).
struct Block {
  enum class Kind { fock, cycle };
  Kind kind = Kind::fock;
  Word cycle_word;  // nonempty exactly when kind == cycle

  static Block fock() { return Block{}; }
  static Block cycle(Word w) { return Block{Kind::cycle, std::move(w)}; }

  friend bool operator==(const Block& a, const Block& b) {
    return a.kind == b.kind && a.cycle_word == b.cycle_word;
  }
  friend bool operator!=(const Block& a, const Block& b) { return !(a == b); }
};

/// A finitely presented representation of the Toeplitz relations
/// v_i* v_j = delta_ij I on the word-indexed space spanned by its blocks.
///
/// Generators act as T_i = D . sum_j B_j u_ji where B_j are the block
/// (permutative) base actions, u the optional scalar twist (an exact unitary
/// matrix), and D the optional diagonal phase map keyed by enumeration rank.
/// Every action maps finitely supported vectors to finitely supported
/// vectors with no truncation of any kind.
class Representation {
 public:
  Representation(unsigned n, std::vector<Block> blocks,
                 std::optional<ScalarMatrix> twist = std::nullopt,
                 std::map<Int, Scalar> conj_phases = {});

  unsigned n() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const std::optional<ScalarMatrix>& twist() const { return twist_; }
  const std::map<Int, Scalar>& conj_phases() const { return conj_phases_; }

  bool pure_shift() const;      // every block is Fock
  bool pure_essential() const;  // every block is a cycle
  std::size_t fock_block_count() const;

  // Canonical naming. rank/unrank realize the order isomorphism with the
  // naturals induced by (depth, block, k, length-lex word).
  bool canonical(const BasisName& b) const;
  void require_canonical(const BasisName& b) const;
  Int level_count(std::size_t depth) const;
  Int count_upto(std::size_t depth) const;  // names of depth <= depth
  Int rank(const BasisName& b) const;
  BasisName unrank(Int r) const;
  std::vector<BasisName> names_upto(std::size_t depth) const;

  SparseVector apply_generator(Letter i, const SparseVector& v) const;
  SparseVector apply_generator_adjoint(Letter i, const SparseVector& v) const;

  /// sigma(x): xi |-> sum_i x_i T_i xi for a coefficient vector x of length n.
  std::function<SparseVector(const SparseVector&)> sigma(std::vector<Scalar> x) const;

  // Rank-space views of the same actions.
  RankVector to_ranks(const SparseVector& v) const;
  SparseVector to_names(const RankVector& v) const;
  RankVector gen(Letter i, const RankVector& v) const;
  RankVector gen_adj(Letter i, const RankVector& v) const;

 private:
  // Base permutative actions, one block at a time; the adjoint image is
  // empty exactly when the name is outside the generator's range.
  BasisName base_image(Letter i, const BasisName& b) const;
  std::optional<BasisName> base_preimage(Letter i, const BasisName& b) const;
  SparseVector base_fwd(Letter i, const SparseVector& v) const;
  SparseVector base_adj(Letter i, const SparseVector& v) const;

  const Int& block_level_count(std::size_t block, std::size_t depth) const;
  // First letter of the periodic tail at position j of a cycle block.
  Letter tail_letter(std::size_t block, unsigned j) const;
  // Letter a canonical branch word at position k may not end with.
  Letter forbidden_letter(std::size_t block, unsigned k) const;

  Scalar phase_at(const BasisName& b) const;

  // Names deeper than this have no rank; plenty for any finite computation
  // (the tables stay a few kilobytes).
  static constexpr std::size_t kMaxDepth = 96;

  unsigned n_;
  std::vector<Block> blocks_;
  std::optional<ScalarMatrix> twist_;
  std::map<Int, Scalar> conj_phases_;

  // Immutable enumeration tables, filled at construction: powers of n,
  // per-block and total level counts, and cumulative counts.
  std::vector<Int> pow_;
  std::vector<std::vector<Int>> block_level_;  // [depth][block]
  std::vector<Int> level_total_;
  std::vector<Int> cum_upto_;  // names of depth <= d
};

using RepPtr = std::shared_ptr<const Representation>;

/// Blockwise direct sum; twists must agree (or both be absent) and conj
/// phases are carried across by name.
Representation direct_sum(const Representation& a, const Representation& b);

Representation fock_rep(unsigned n);
Representation fock_multiple(unsigned n, unsigned k);  // k Fock blocks
Representation cycle_rep(unsigned n, Word cycle);

/// The k-th power of the shift family. For n = 1 this is S^k presented in
/// its canonical form as k Fock blocks (the residue classes mod k). For
/// n >= 2 the analogous tensor-power family has infinite-dimensional defect
/// and is not a multiplicity-k object, so it is rejected here; use
/// fock_multiple instead.
Representation fock_power(unsigned n, unsigned k);

bool blocks_equal(const Representation& a, const Representation& b);
bool conj_equal(const Representation& a, const Representation& b);
ScalarMatrix twist_or_identity(const Representation& r);

}  // namespace entk
