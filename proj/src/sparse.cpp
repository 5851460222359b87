// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#include "sparse.hpp"

namespace entk {

Scalar inner(const SparseVector& a, const SparseVector& b) {
  // Walk the smaller support.
  const SparseVector& small = a.support_size() <= b.support_size() ? a : b;
  const SparseVector& large = a.support_size() <= b.support_size() ? b : a;
  Scalar out;
  for (const auto& [name, c] : small.entries()) {
    Scalar other = large.at(name);
    if (other.is_zero()) continue;
    if (&small == &a)
      out += c.conj() * other;
    else
      out += other.conj() * c;
  }
  return out;
}

Scalar inner(const RankVector& a, const RankVector& b) {
  Scalar out;
  for (const auto& [r, c] : a.entries()) {
    auto it = b.entries().find(r);
    if (it != b.entries().end()) out += c.conj() * it->second;
  }
  return out;
}

std::string RankVector::str() const {
  if (entries_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [r, c] : entries_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + c.str() + ")e" + r.get_str();
  }
  return out;
}

}  // namespace entk
