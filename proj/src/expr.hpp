// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <memory>
#include <vector>

#include "rep.hpp"
#include "sparse.hpp"

namespace entk {

/// A unitary given by a bijection of canonical basis names between a source
/// and a target representation, times a diagonal of unimodular phases keyed
/// by source rank. Four bijection kinds are closed under the operations the
/// witness calculus needs:
///
///   rank    - the n-th source name maps to the n-th target name;
///   wold    - essential-part names map to essential-part names and shift-part
///             names to shift-part names, each by rank within the part;
///   defect  - defect names (Fock vacua) map to defect names in order, all
///             remaining names follow in enumeration order. This is the
///             weakest alignment that still transports the defect projection,
///             and it exists whenever the multiplicities agree - even when
///             the essential parts of the two sides have different sizes;
///   composed / direct_sum - closure under the calculus itself.
class BasisUnitary {
 public:
  enum class Kind { rank, wold, defect, composed, direct_sum };

  static BasisUnitary rank_matching(RepPtr source, RepPtr target,
                                    std::map<Int, Scalar> phases = {});
  static BasisUnitary wold_matching(RepPtr source, RepPtr target,
                                    std::map<Int, Scalar> phases = {});
  static BasisUnitary defect_matching(RepPtr source, RepPtr target,
                                      std::map<Int, Scalar> phases = {});
  /// apply(v) = outer.apply(inner.apply(v)).
  static BasisUnitary composed(std::shared_ptr<const BasisUnitary> outer,
                               std::shared_ptr<const BasisUnitary> inner);
  /// Blockwise sum: source = left.source (+) right.source as built by
  /// direct_sum(), likewise the target.
  static BasisUnitary blockwise_sum(std::shared_ptr<const BasisUnitary> left,
                                    std::shared_ptr<const BasisUnitary> right,
                                    RepPtr source_sum, RepPtr target_sum);

  Kind kind() const { return kind_; }
  const RepPtr& source() const { return source_; }
  const RepPtr& target() const { return target_; }
  const std::map<Int, Scalar>& phases() const { return phases_; }
  const std::shared_ptr<const BasisUnitary>& left() const { return left_; }
  const std::shared_ptr<const BasisUnitary>& right() const { return right_; }

  /// Image of the source rank r: (target rank, phase).
  std::pair<Int, Scalar> map_rank(const Int& r) const;
  /// Preimage of the target rank r: (source rank, conjugated phase).
  std::pair<Int, Scalar> unmap_rank(const Int& r) const;

  RankVector apply(const RankVector& v) const;
  RankVector apply_adjoint(const RankVector& v) const;

  BasisUnitary adjoint() const;

 private:
  BasisUnitary() = default;
  void validate_phases() const;

  struct Parts;  // cached sub-enumerations for wold/defect matchings

  Kind kind_ = Kind::rank;
  RepPtr source_;
  RepPtr target_;
  std::map<Int, Scalar> phases_;
  std::shared_ptr<const BasisUnitary> left_;
  std::shared_ptr<const BasisUnitary> right_;
  std::size_t split_source_ = 0;  // direct_sum: block count of the left source
  std::size_t split_target_ = 0;
  std::shared_ptr<const Parts> parts_;
};

using BasisUnitaryPtr = std::shared_ptr<const BasisUnitary>;

/// Syntax tree for bounded-operator witness entries: scalars, generators and
/// their adjoints, basis unitaries, sums, products, and blockwise sums.
/// Expressions act on rank-space vectors; every atom interprets ranks
/// through its own representation's enumeration, which is exactly the
/// canonical identification of the underlying spaces.
class OperatorExpr {
 public:
  enum class Kind { scalar, gen, gen_adj, basis_u, basis_u_adj, sum, prod, block_sum };

  static OperatorExpr scalar(Scalar c);
  static OperatorExpr gen(RepPtr rep, Letter i);
  static OperatorExpr gen_adj(RepPtr rep, Letter i);
  static OperatorExpr basis_u(BasisUnitaryPtr w);
  static OperatorExpr basis_u_adj(BasisUnitaryPtr w);
  static OperatorExpr sum(std::vector<OperatorExpr> terms);
  /// prod({f, g, h}) acts as f(g(h(v))).
  static OperatorExpr prod(std::vector<OperatorExpr> factors);
  /// Acts as `left` on the first `split` blocks of `frame_sum` (reframed to
  /// `frame_left`) and as `right` on the rest (reframed to `frame_right`).
  static OperatorExpr block_sum(OperatorExpr left, OperatorExpr right, RepPtr frame_sum,
                                RepPtr frame_left, RepPtr frame_right, std::size_t split);

  Kind kind() const { return kind_; }
  const Scalar& scalar_value() const { return scalar_; }
  const RepPtr& rep() const { return rep_; }
  Letter letter() const { return letter_; }
  const BasisUnitaryPtr& unitary() const { return unitary_; }
  const std::vector<OperatorExpr>& children() const { return children_; }

  RankVector apply(const RankVector& v) const;

  /// Syntactic adjoint: products reverse, atoms swap with their adjoints,
  /// scalars conjugate.
  OperatorExpr adjoint() const;

 private:
  Kind kind_ = Kind::scalar;
  Scalar scalar_ = Scalar::one();
  RepPtr rep_;
  Letter letter_ = 1;
  BasisUnitaryPtr unitary_;
  std::vector<OperatorExpr> children_;
  RepPtr frame_sum_, frame_left_, frame_right_;
  std::size_t split_ = 0;
};

}  // namespace entk
