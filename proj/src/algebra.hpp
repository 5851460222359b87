// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <utility>

#include "rep.hpp"
#include "scalar.hpp"
#include "word.hpp"

namespace entk {

/// Element of the dense *-subalgebra spanned by the monomials v_alpha v_beta*
/// over n isometries with the relations v_i* v_j = delta_ij I, kept in normal
/// form: a finite coefficient map on (alpha, beta) pairs with no explicit
/// zeros. The pair (empty, empty) is the unit I.
///
/// Products reduce monomial-by-monomial with
///   (v_a v_b*)(v_c v_d*) = v_(a.c') v_d*   if c = b.c'
///                        = v_a v_(d.b')*   if b = c.b'
///                        = 0               otherwise,
/// which is confluent for these relations, so normal forms are unique and
/// equality is a term-map comparison.
class AlgebraElement {
 public:
  struct KeyLess {
    bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
      if (a.first != b.first) return length_lex_less(a.first, b.first);
      return length_lex_less(a.second, b.second);
    }
  };
  using Terms = std::map<std::pair<Word, Word>, Scalar, KeyLess>;

  explicit AlgebraElement(unsigned n);

  static AlgebraElement zero(unsigned n) { return AlgebraElement(n); }
  static AlgebraElement unit(unsigned n);
  static AlgebraElement monomial(unsigned n, Word alpha, Word beta,
                                 Scalar coef = Scalar::one());
  static AlgebraElement generator(unsigned n, Letter i);          // v_i
  static AlgebraElement generator_adjoint(unsigned n, Letter i);  // v_i*

  unsigned n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Word& alpha, const Word& beta, const Scalar& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  AlgebraElement scaled(const Scalar& c) const;
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out = a;
    out += b.scaled(Scalar(-1));
    return out;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

 private:
  unsigned n_;
  Terms terms_;
};

/// Normal-form product; errors with "rank mismatch" when the operand ns differ.
AlgebraElement nf_mul(const AlgebraElement& a, const AlgebraElement& b);

/// The involution: swap alpha and beta, conjugate coefficients.
AlgebraElement nf_adjoint(const AlgebraElement& a);

/// p_n = I - sum_i v_i v_i*, the defect projection of the relations.
AlgebraElement defect_element(unsigned n);

/// The automorphism induced by an exact scalar unitary U: on generators
/// v_i |-> sum_j v_j u_ji, extended *-homomorphically to every monomial.
AlgebraElement gamma_u(const AlgebraElement& a, const ScalarMatrix& u);

/// Exact action of an element through a representation: each monomial acts
/// as the composite of generator adjoints (beta) followed by generators
/// (alpha). Finitely supported in, finitely supported out.
SparseVector evaluate(const AlgebraElement& a, const Representation& rep,
                      const SparseVector& xi);

}  // namespace entk
