// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "expr.hpp"
#include "rep.hpp"

namespace entk {

/// An n x n matrix witnessing free equivalence: omega(v_i) = sum_j tau(v_j) u_ji.
/// Scalar-flavored witnesses hold exact complex numbers and carry an exact
/// unitarity certificate established at construction; bounded-flavored ones
/// hold operator expressions whose unitarity is verified vector-by-vector.
class FreeWitness {
 public:
  static FreeWitness scalar(ScalarMatrix entries);  // checks unitarity exactly
  static FreeWitness bounded(unsigned n, std::vector<std::vector<OperatorExpr>> entries);
  static FreeWitness identity(unsigned n);

  unsigned n() const { return n_; }
  bool is_scalar() const { return scalar_flavor_; }
  const ScalarMatrix& scalar_entries() const { return scalar_entries_; }
  /// Entry u_{j i} as an expression (row j, column i), 1-based.
  OperatorExpr entry(Letter j, Letter i) const;

 private:
  FreeWitness() = default;
  unsigned n_ = 0;
  bool scalar_flavor_ = true;
  ScalarMatrix scalar_entries_;
  std::vector<std::vector<OperatorExpr>> op_entries_;
};

/// W plus U asserting omega(v_i) = sum_j W tau(v_j) W* u_ji. A null W means
/// the two enumerations are identified rank-by-rank with no phases.
struct QuasifreeWitness {
  BasisUnitaryPtr W;  // may be null
  FreeWitness U;
};

struct CheckLine {
  std::string name;
  unsigned long vectors = 0;
  bool pass = true;
};

struct Counterexample {
  std::string check;
  Int rank;                // of the exact refuting basis vector
  std::string basis_name;  // in the left representation's naming
  std::string lhs;
  std::string rhs;
};

/// Outcome of an exhaustive exact check on every basis vector to a depth.
/// A pass certifies the identities on each tested vector exactly; a
/// counterexample is an exact refutation, not a tolerance artifact.
struct VerificationReport {
  unsigned depth = 0;
  std::vector<CheckLine> checks;
  std::optional<Counterexample> counterexample;

  bool passed() const {
    for (const CheckLine& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Checks omega(v_i) e = sum_j tau(v_j) U_ji e and both unitarity relations
/// of U on every basis vector of depth <= depth (tau acting through the
/// rank identification).
VerificationReport verify_free(const Representation& omega, const Representation& tau,
                               const FreeWitness& u, unsigned depth);

VerificationReport verify_quasifree(const Representation& omega, const Representation& tau,
                                    const QuasifreeWitness& q, unsigned depth);

/// The explicit witness between essential representations:
/// u_{jk} = tau(v_j)* omega(v_k). Requires multiplicity zero on both sides.
FreeWitness essential_free_witness(RepPtr omega, RepPtr tau);

FreeWitness invert_free_witness(const FreeWitness& u);
/// For u : omega -> tau and v : tau -> kappa, the composite omega -> kappa
/// is the matrix product v.u.
FreeWitness compose_free_witness(const FreeWitness& u, const FreeWitness& v);

QuasifreeWitness invert_quasifree_witness(const QuasifreeWitness& q);
/// q1 : omega -> tau, q2 : tau -> kappa; the composite carries W1 W2 and
/// t_{ki} = sum_j W1 v_{kj} W1* u_{ji}.
QuasifreeWitness compose_quasifree_witness(const QuasifreeWitness& q1,
                                           const QuasifreeWitness& q2);

struct WitnessedPair {
  RepPtr omega, tau;
  QuasifreeWitness w;
};

struct SumWitness {
  RepPtr omega, tau;
  QuasifreeWitness w;
};

/// Blockwise sum of two witnesses; the result connects the direct sums.
/// Scalar flavor survives only when both summands carry the same matrix.
SumWitness direct_sum_witness(const WitnessedPair& a, const WitnessedPair& b);

/// Decision by multiplicity. On equality, the constructed witness is
/// W = basis alignment carrying the defect onto the defect (part-wise when
/// the essential parts are compatible, defect-aligned otherwise) and
/// u_{jk} = (Ad_W tau)(v_j)* omega(v_k), which is exactly unitary for any
/// such W; for conj-free pure shifts this collapses to the scalar matrix
/// tau_twist* omega_twist.
struct BhDecision {
  bool equivalent = false;
  unsigned mult_omega = 0;
  unsigned mult_tau = 0;
  std::optional<QuasifreeWitness> witness;
};
BhDecision decide_bh_quasifree(RepPtr omega, RepPtr tau);

/// Certification of scalar free equivalence to a depth. The candidate matrix
/// c_{ji} = <tau(v_j) e0, omega(v_i) e0> at the rank-0 basis vector is forced
/// whenever a scalar witness exists (tau(v_j)* omega(v_i) = u_ji I), so any
/// exact violation of unitarity, scalarness, or the defining identity
/// refutes scalar free equivalence outright. `exact` marks the structural
/// case (equal blocks and conj), where the identity reduces to the matrix
/// equation twist_omega = twist_tau . U and holds at every depth.
struct ScalarFreeResult {
  bool verified = false;
  bool exact = false;
  unsigned depth = 0;
  std::optional<FreeWitness> witness;
  VerificationReport report;
};
ScalarFreeResult scalar_free_check(RepPtr omega, RepPtr tau, unsigned depth);

}  // namespace entk
