// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>

#include "basis.hpp"
#include "scalar.hpp"

namespace entk {

/// Finitely supported vector on the canonical basis. Entries with
/// coefficient exactly zero are never stored, so two vectors are equal iff
/// their entry maps are equal.
class SparseVector {
 public:
  using Map = std::map<BasisName, Scalar, BasisLess>;

  SparseVector() = default;

  static SparseVector unit(BasisName b) {
    SparseVector v;
    v.entries_.emplace(std::move(b), Scalar::one());
    return v;
  }

  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  const Map& entries() const { return entries_; }

  Scalar at(const BasisName& b) const {
    auto it = entries_.find(b);
    return it == entries_.end() ? Scalar::zero() : it->second;
  }

  void add_term(const BasisName& b, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = entries_.emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }

  SparseVector& operator+=(const SparseVector& o) {
    for (const auto& [b, c] : o.entries_) add_term(b, c);
    return *this;
  }
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }

  SparseVector scaled(const Scalar& c) const {
    SparseVector out;
    if (c.is_zero()) return out;
    for (const auto& [b, v] : entries_) out.entries_.emplace(b, c * v);
    return out;
  }

  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const SparseVector& a, const SparseVector& b) { return !(a == b); }

 private:
  Map entries_;
};

/// <xi, eta> = sum conj(xi_b) * eta_b, conjugate-linear in the first slot.
Scalar inner(const SparseVector& a, const SparseVector& b);

/// The same vector arithmetic keyed by enumeration rank instead of names.
/// This is the shared coordinate system used whenever two representations
/// are identified along their canonical enumerations.
class RankVector {
 public:
  using Map = std::map<Int, Scalar>;

  RankVector() = default;

  static RankVector unit(Int r) {
    RankVector v;
    v.entries_.emplace(std::move(r), Scalar::one());
    return v;
  }

  bool empty() const { return entries_.empty(); }
  const Map& entries() const { return entries_; }

  void add_term(const Int& r, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = entries_.emplace(r, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }

  RankVector& operator+=(const RankVector& o) {
    for (const auto& [r, c] : o.entries_) add_term(r, c);
    return *this;
  }
  friend RankVector operator+(RankVector a, const RankVector& b) { return a += b; }

  RankVector scaled(const Scalar& c) const {
    RankVector out;
    if (c.is_zero()) return out;
    for (const auto& [r, v] : entries_) out.entries_.emplace(r, c * v);
    return out;
  }

  friend bool operator==(const RankVector& a, const RankVector& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const RankVector& a, const RankVector& b) { return !(a == b); }

  std::string str() const;

 private:
  Map entries_;
};

Scalar inner(const RankVector& a, const RankVector& b);

}  // namespace entk
