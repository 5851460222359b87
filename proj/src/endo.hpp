// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "witness.hpp"

namespace entk {

/// Finite-rank operator sum c . |ket><bra| with exact coefficients.
class SparseOperator {
 public:
  using Key = std::pair<BasisName, BasisName>;  // (ket, bra)
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      if (a.first != b.first) return basis_less(a.first, b.first);
      return basis_less(a.second, b.second);
    }
  };
  using Map = std::map<Key, Scalar, KeyLess>;

  SparseOperator() = default;
  static SparseOperator rank_one(BasisName ket, BasisName bra, Scalar c = Scalar::one());

  bool is_zero() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }

  void add_term(const BasisName& ket, const BasisName& bra, const Scalar& c);
  SparseOperator& operator+=(const SparseOperator& o);
  SparseOperator scaled(const Scalar& c) const;
  SparseOperator adjoint() const;
  /// Operator product: |k1><b1| . |k2><b2| = [b1 = k2] |k1><b2|.
  friend SparseOperator compose(const SparseOperator& a, const SparseOperator& b);

  SparseVector apply(const SparseVector& v) const;

  friend bool operator==(const SparseOperator& a, const SparseOperator& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const SparseOperator& a, const SparseOperator& b) { return !(a == b); }

  std::string str() const;

 private:
  Map terms_;
};

/// The *-endomorphism a |-> sum_i T_i a T_i* induced by a Toeplitz family;
/// unital exactly when the defect vanishes (multiplicity zero).
struct Endomorphism {
  RepPtr rep;
  bool unital() const;
};

SparseOperator endo_apply(const Endomorphism& alpha, const SparseOperator& a);

/// Rank-keyed image of an operator, for comparisons across representations
/// identified along their enumerations.
std::map<std::pair<Int, Int>, Scalar> operator_ranks(const Representation& rep,
                                                     const SparseOperator& a);

/// Decides whether the induced endomorphisms of B(H) coincide.
///
/// Relies on the scalar commutant having invariant basis number (so equal
/// endomorphisms force equal generator counts) and on the equivalence of
/// "alpha = beta" with scalar free equivalence of the two families. A
/// refutation always comes with a concrete rank-one operator on which the
/// two endomorphisms differ, found by enumerating |k><b| pairs in rank
/// order; the scalar candidate matrix is forced, so its failure refutes
/// equality outright.
struct EndoEqualResult {
  enum class Verdict { equal, depth_certified, not_equal };
  Verdict verdict = Verdict::not_equal;
  std::string reason;
  std::optional<FreeWitness> witness;
  VerificationReport report;
  std::optional<SparseOperator> witness_op;  // named in omega's enumeration
  std::string image_omega, image_tau;        // the differing images, printed
};
EndoEqualResult decide_endo_equal(RepPtr omega, RepPtr tau, unsigned depth);

/// Decides conjugacy alpha = Ad_W . beta . Ad_W* through scalar quasifree
/// equivalence. Without a supplied witness only the conj-free pure-shift
/// case is decided (a multiple of the Fock representation is determined by
/// its multiplicity); a mismatch in generator count or multiplicity is an
/// exact refutation. Everything else is honestly `unknown`.
struct EndoConjugacyResult {
  enum class Verdict { conjugate, depth_certified, not_conjugate, unknown };
  Verdict verdict = Verdict::unknown;
  std::string reason;
  std::optional<QuasifreeWitness> witness;
  VerificationReport report;
};
EndoConjugacyResult decide_endo_conjugate(RepPtr omega, RepPtr tau,
                                          const std::optional<QuasifreeWitness>& supplied,
                                          unsigned depth);

/// Checks X a = alpha(a) X for all rank-one a and basis vectors to depth,
/// i.e. membership of X in the intertwiner space of alpha.
VerificationReport intertwiner_check(const OperatorExpr& x, const Endomorphism& alpha,
                                     unsigned depth);

/// Two routes to omega = Ad_W . tau . gamma_U, compared line by line:
/// `direct` pushes gamma_U through the symbolic algebra and evaluates
/// tau(gamma_U(v_i)) conjugated by W; `via_witness` verifies the quasifree
/// witness (W, scalar U). The routes must agree check-for-check.
struct GammaConjugationResult {
  VerificationReport direct;
  VerificationReport via_witness;
  bool agree() const;
};
GammaConjugationResult gamma_conjugation_check(RepPtr omega, RepPtr tau, BasisUnitaryPtr w,
                                               const ScalarMatrix& u, unsigned depth);

}  // namespace entk
