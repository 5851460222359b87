// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#include "word.hpp"

namespace entk {

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.letters().begin(), a.letters().end());
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(out));
}

std::optional<Word> strip_prefix(const Word& prefix, const Word& w) {
  if (prefix.size() > w.size()) return std::nullopt;
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (prefix[i] != w[i]) return std::nullopt;
  return Word(std::vector<Letter>(w.letters().begin() + static_cast<std::ptrdiff_t>(prefix.size()),
                                  w.letters().end()));
}

bool length_lex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters() < b.letters();
}

}  // namespace entk
