// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>

#include "word.hpp"

namespace entk {

/// Canonical name of one orthonormal basis vector of a block-structured
/// representation space.
///
/// Fock blocks are indexed by plain words; cycle blocks by a position k on
/// the cycle together with a finite branch word w. `depth` is |w| in both
/// cases. The total order (depth, block, k, length-lex word) makes the basis
/// order-isomorphic to the naturals, which is what every rank computation
/// below relies on.
struct BasisName {
  std::size_t block = 0;
  bool cyclic = false;  // cycle-block names carry a position k
  unsigned k = 0;
  Word word;

  std::size_t depth() const { return word.size(); }

  static BasisName fock(std::size_t block, Word w) {
    BasisName b;
    b.block = block;
    b.word = std::move(w);
    return b;
  }
  static BasisName cycle(std::size_t block, unsigned k, Word w) {
    BasisName b;
    b.block = block;
    b.cyclic = true;
    b.k = k;
    b.word = std::move(w);
    return b;
  }

  std::string str() const;

  friend bool operator==(const BasisName& a, const BasisName& b) {
    return a.block == b.block && a.cyclic == b.cyclic && a.k == b.k && a.word == b.word;
  }
  friend bool operator!=(const BasisName& a, const BasisName& b) { return !(a == b); }
};

/// (depth, block, k, length-lex word), the canonical enumeration order.
bool basis_less(const BasisName& a, const BasisName& b);

struct BasisLess {
  bool operator()(const BasisName& a, const BasisName& b) const { return basis_less(a, b); }
};

}  // namespace entk
