// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#include "algebra.hpp"

#include "error.hpp"

namespace entk {

AlgebraElement::AlgebraElement(unsigned n) : n_(n) {
  if (n < 1) fail(Errc::invalid, "generator count n must be >= 1");
}

AlgebraElement AlgebraElement::unit(unsigned n) {
  return monomial(n, Word(), Word());
}

AlgebraElement AlgebraElement::monomial(unsigned n, Word alpha, Word beta, Scalar coef) {
  AlgebraElement out(n);
  if (!alpha.valid_for(n) || !beta.valid_for(n))
    fail(Errc::invalid, "monomial letter out of range");
  out.add_term(alpha, beta, coef);
  return out;
}

AlgebraElement AlgebraElement::generator(unsigned n, Letter i) {
  return monomial(n, Word::single(i), Word());
}

AlgebraElement AlgebraElement::generator_adjoint(unsigned n, Letter i) {
  return monomial(n, Word(), Word::single(i));
}

void AlgebraElement::add_term(const Word& alpha, const Word& beta, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(alpha, beta);
  auto [it, inserted] = terms_.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (n_ != o.n_) fail(Errc::rank_mismatch, "rank mismatch");
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
  AlgebraElement out(n_);
  if (c.is_zero()) return out;
  for (const auto& [key, v] : terms_) out.terms_.emplace(key, c * v);
  return out;
}

AlgebraElement nf_mul(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.n() != b.n()) fail(Errc::rank_mismatch, "rank mismatch");
  AlgebraElement out(a.n());
  for (const auto& [ka, ca] : a.terms()) {
    const Word& alpha = ka.first;
    const Word& beta = ka.second;
    for (const auto& [kb, cb] : b.terms()) {
      const Word& gamma = kb.first;
      const Word& delta = kb.second;
      // v_beta* v_gamma collapses along the longer of beta, gamma.
      if (auto tail = strip_prefix(beta, gamma)) {
        out.add_term(concat(alpha, *tail), delta, ca * cb);
      } else if (auto head = strip_prefix(gamma, beta)) {
        out.add_term(alpha, concat(delta, *head), ca * cb);
      }
      // otherwise the monomials are orthogonal and contribute nothing
    }
  }
  return out;
}

AlgebraElement nf_adjoint(const AlgebraElement& a) {
  AlgebraElement out(a.n());
  for (const auto& [key, c] : a.terms()) out.add_term(key.second, key.first, c.conj());
  return out;
}

AlgebraElement defect_element(unsigned n) {
  AlgebraElement out = AlgebraElement::unit(n);
  for (Letter i = 1; i <= n; ++i)
    out.add_term(Word::single(i), Word::single(i), Scalar(-1));
  return out;
}

AlgebraElement gamma_u(const AlgebraElement& a, const ScalarMatrix& u) {
  unsigned n = a.n();
  if (u.size() != n) fail(Errc::not_unitary, "not unitary");
  for (const auto& row : u)
    if (row.size() != n) fail(Errc::not_unitary, "not unitary");
  if (!matrix_is_unitary(u)) fail(Errc::not_unitary, "not unitary");

  // Images of the generators: g_i = sum_j u[j][i] v_j.
  std::vector<AlgebraElement> g;
  g.reserve(n);
  for (Letter i = 1; i <= n; ++i) {
    AlgebraElement gi(n);
    for (Letter j = 1; j <= n; ++j)
      gi.add_term(Word::single(j), Word(), u[j - 1][i - 1]);
    g.push_back(std::move(gi));
  }

  AlgebraElement out(n);
  for (const auto& [key, c] : a.terms()) {
    AlgebraElement acc = AlgebraElement::unit(n).scaled(c);
    for (Letter l : key.first.letters()) acc = nf_mul(acc, g[l - 1]);
    for (std::size_t t = key.second.size(); t > 0; --t)
      acc = nf_mul(acc, nf_adjoint(g[key.second[t - 1] - 1]));
    out += acc;
  }
  return out;
}

SparseVector evaluate(const AlgebraElement& a, const Representation& rep,
                      const SparseVector& xi) {
  if (a.n() != rep.n()) fail(Errc::rank_mismatch, "rank mismatch");
  SparseVector out;
  for (const auto& [key, c] : a.terms()) {
    const Word& alpha = key.first;
    const Word& beta = key.second;
    SparseVector v = xi;
    // v_beta* acts first: the adjoint of the first letter of beta is applied
    // first, matching (T_b0 T_b1 ...)* = ... T_b1* T_b0*.
    for (std::size_t t = 0; t < beta.size() && !v.empty(); ++t)
      v = rep.apply_generator_adjoint(beta[t], v);
    for (std::size_t t = alpha.size(); t > 0 && !v.empty(); --t)
      v = rep.apply_generator(alpha[t - 1], v);
    out += v.scaled(c);
  }
  return out;
}

}  // namespace entk
