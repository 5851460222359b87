// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#include "scalar.hpp"

#include <cctype>
#include <vector>

#include "error.hpp"

namespace entk {

namespace {

std::string rational_str(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
  if (s.empty()) fail(Errc::parse, "empty rational literal");
  std::size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') ++pos;
  bool digits = false;
  bool slash = false;
  bool digits_after_slash = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (slash ? digits_after_slash : digits) = true;
    } else if (c == '/' && !slash && digits) {
      slash = true;
    } else {
      fail(Errc::parse, "bad rational literal '" + s + "'");
    }
  }
  if (!digits || (slash && !digits_after_slash))
    fail(Errc::parse, "bad rational literal '" + s + "'");

  // mpq_set_str takes an optional '-' but not '+'.
  const std::string body = s[0] == '+' ? s.substr(1) : s;
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), body.c_str(), 10) != 0)
    fail(Errc::parse, "bad rational literal '" + s + "'");
  if (q.get_den() == 0) fail(Errc::parse, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (re != 0) out += rational_str(re);
  if (im != 0) {
    Rational mag = abs(im);
    if (re != 0)
      out += (im < 0) ? "-" : "+";
    else if (im < 0)
      out += "-";
    if (mag != 1) out += rational_str(mag);
    out += "i";
  }
  return out;
}

Scalar Scalar::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail(Errc::parse, "empty scalar literal");

  // Split into at most two signed terms.
  std::vector<std::string> terms;
  std::size_t start = 0;
  for (std::size_t p = 1; p < s.size(); ++p) {
    if (s[p] == '+' || s[p] == '-') {
      terms.push_back(s.substr(start, p - start));
      start = p;
    }
  }
  terms.push_back(s.substr(start));
  if (terms.size() > 2) fail(Errc::parse, "bad scalar literal '" + text + "'");

  Rational re(0), im(0);
  bool re_seen = false, im_seen = false;
  for (const std::string& term : terms) {
    if (!term.empty() && term.back() == 'i') {
      if (im_seen) fail(Errc::parse, "duplicate imaginary part in '" + text + "'");
      im_seen = true;
      std::string body = term.substr(0, term.size() - 1);
      if (body.empty() || body == "+")
        im = 1;
      else if (body == "-")
        im = -1;
      else
        im = parse_rational(body);
    } else {
      if (re_seen) fail(Errc::parse, "duplicate real part in '" + text + "'");
      re_seen = true;
      re = parse_rational(term);
    }
  }
  return Scalar(std::move(re), std::move(im));
}

}  // namespace entk
