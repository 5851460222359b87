// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#include "basis.hpp"

namespace entk {

std::string BasisName::str() const {
  std::string out = "(b" + std::to_string(block);
  if (cyclic) out += ",k" + std::to_string(k);
  out += ",[";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(word[i]);
  }
  out += "])";
  return out;
}

bool basis_less(const BasisName& a, const BasisName& b) {
  if (a.depth() != b.depth()) return a.depth() < b.depth();
  if (a.block != b.block) return a.block < b.block;
  if (a.k != b.k) return a.k < b.k;
  return length_lex_less(a.word, b.word);
}

}  // namespace entk
