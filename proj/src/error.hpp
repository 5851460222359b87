// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace entk {

enum class Errc {
  parse,          // malformed input file or string
  invalid,        // structurally valid input violating a precondition
  rank_mismatch,  // operands built over different generator counts n
  not_unitary,
  not_essential,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace entk
