// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "rep.hpp"

namespace entk {

/// Result of splitting a representation into its essential part and its
/// shift part (a multiple of the Fock representation).
struct WoldReport {
  unsigned multiplicity = 0;
  std::vector<std::size_t> shift_block_indices;
  std::vector<std::size_t> essential_block_indices;
  std::vector<BasisName> defect_names;  // from the scan, at the given depth
  unsigned scan_depth = 0;
  RepPtr reconstruction;  // essential blocks first, then the Fock multiple
};

/// Scan for basis vectors fixed by the defect projection p_n = I - sum v_i v_i*.
/// This path never looks at block kinds: it evaluates p_n through the
/// generator actions, vector by vector, so it independently cross-checks the
/// structural multiplicity. For this representation class the defect
/// operator is an exact 0/1 diagonal, so per-vector membership is exact.
std::vector<BasisName> defect_basis(const Representation& rep, unsigned depth);

/// Number of Fock blocks; agrees with the size of every defect scan.
unsigned multiplicity(const Representation& rep);

WoldReport wold(const Representation& rep, unsigned scan_depth = 4);

}  // namespace entk
