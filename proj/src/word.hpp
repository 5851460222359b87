// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace entk {

/// Letters are 1-based generator indices; the valid range 1..n is a property
/// of the surrounding algebra or representation, not of the letter itself.
using Letter = unsigned;

/// A finite word over {1..n}. The empty word is a first-class value: it names
/// the vacuum basis vector and the unit monomial.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  static Word single(Letter l) { return Word(std::vector<Letter>{l}); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  const std::vector<Letter>& letters() const { return letters_; }

  bool valid_for(unsigned n) const {
    for (Letter l : letters_)
      if (l < 1 || l > n) return false;
    return true;
  }

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

 private:
  std::vector<Letter> letters_;
};

Word concat(const Word& a, const Word& b);

/// Drops `w` first letter for each prepend; returns w' with w = prefix.w',
/// or nullopt when prefix does not match. The suffix logic behind the
/// Toeplitz relation v_i* v_j = delta_ij I.
std::optional<Word> strip_prefix(const Word& prefix, const Word& w);

/// Length-lex order: shorter first, then lexicographic. The canonical total
/// order used everywhere a word enumeration is needed.
bool length_lex_less(const Word& a, const Word& b);

struct LengthLexLess {
  bool operator()(const Word& a, const Word& b) const { return length_lex_less(a, b); }
};

}  // namespace entk
