// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic generators shared by the test suites. Everything is driven
// by a seeded mt19937 through plain modulo so runs are reproducible.

#pragma once

#include <random>
#include <vector>

#include "algebra.hpp"
#include "rep.hpp"
#include "witness.hpp"

namespace entk::testing {

using Rng = std::mt19937;

inline unsigned pick(Rng& rng, unsigned bound) { return rng() % bound; }

inline Scalar random_coef(Rng& rng) {
  static const int nums[] = {-3, -2, -1, 1, 2, 3};
  Rational re(nums[pick(rng, 6)], 1 + pick(rng, 3));
  re.canonicalize();
  Rational im(0);
  if (pick(rng, 2) == 0) {
    im = Rational(nums[pick(rng, 6)], 1 + pick(rng, 3));
    im.canonicalize();
  }
  return Scalar(re, im);
}

inline const std::vector<Scalar>& phase_pool() {
  static const std::vector<Scalar> pool = {
      Scalar(1),
      Scalar(-1),
      Scalar::i(),
      Scalar(Rational(0), Rational(-1)),
      Scalar(Rational(3, 5), Rational(4, 5)),
      Scalar(Rational(3, 5), Rational(-4, 5)),
      Scalar(Rational(5, 13), Rational(12, 13)),
  };
  return pool;
}

inline Scalar random_phase(Rng& rng) { return phase_pool()[pick(rng, 7)]; }

inline Word random_word(Rng& rng, unsigned n, unsigned max_len) {
  unsigned len = pick(rng, max_len + 1);
  std::vector<Letter> letters;
  for (unsigned t = 0; t < len; ++t) letters.push_back(1 + pick(rng, n));
  return Word(std::move(letters));
}

inline AlgebraElement random_element(Rng& rng, unsigned n, unsigned max_terms = 4,
                                     unsigned max_len = 3) {
  AlgebraElement out(n);
  unsigned terms = 1 + pick(rng, max_terms);
  for (unsigned t = 0; t < terms; ++t)
    out.add_term(random_word(rng, n, max_len), random_word(rng, n, max_len),
                 random_coef(rng));
  return out;
}

inline SparseVector random_vector(Rng& rng, const Representation& rep, unsigned depth,
                                  unsigned max_terms = 4) {
  std::vector<BasisName> names = rep.names_upto(depth);
  SparseVector out;
  unsigned terms = 1 + pick(rng, max_terms);
  for (unsigned t = 0; t < terms; ++t)
    out.add_term(names[pick(rng, static_cast<unsigned>(names.size()))], random_coef(rng));
  return out;
}

/// Product of elementary exact unitaries: permutation swaps, unimodular
/// diagonals, and embedded 2x2 rotations with Pythagorean entries.
inline ScalarMatrix random_unitary(Rng& rng, unsigned n, unsigned factors = 3) {
  ScalarMatrix u = matrix_identity(n);
  for (unsigned f = 0; f < factors; ++f) {
    ScalarMatrix e = matrix_identity(n);
    unsigned kind = pick(rng, 3);
    if (kind == 0 && n >= 2) {
      unsigned i = pick(rng, n), j = pick(rng, n);
      if (i != j) {
        e[i][i] = Scalar(0);
        e[j][j] = Scalar(0);
        e[i][j] = Scalar(1);
        e[j][i] = Scalar(1);
      }
    } else if (kind == 1) {
      unsigned i = pick(rng, n);
      e[i][i] = random_phase(rng);
    } else if (n >= 2) {
      unsigned i = pick(rng, n), j = pick(rng, n);
      if (i != j) {
        Scalar a, b;
        if (pick(rng, 2) == 0) {
          a = Scalar(Rational(3, 5));
          b = Scalar(Rational(4, 5));
        } else {
          a = Scalar(Rational(5, 13));
          b = Scalar(Rational(12, 13));
        }
        if (pick(rng, 2) == 0) b *= Scalar::i();
        e[i][i] = a;
        e[i][j] = b;
        e[j][i] = Scalar(0) - b.conj();
        e[j][j] = a.conj();
      }
    }
    u = matrix_mul(u, e);
  }
  return u;
}

inline std::vector<Word> cycle_pool(unsigned n) {
  std::vector<Word> pool;
  for (Letter l = 1; l <= n; ++l) pool.push_back(Word::single(l));
  if (n >= 2) {
    pool.push_back(Word({1, 2}));
    pool.push_back(Word({2, 1}));
    pool.push_back(Word({1, 2, 2}));
  }
  if (n >= 3) pool.push_back(Word({1, 3}));
  return pool;
}

struct RepOptions {
  unsigned fock_blocks = 1;
  unsigned cycle_blocks = 0;
  bool allow_twist = false;
  bool allow_conj = false;
};

inline RepPtr random_rep(Rng& rng, unsigned n, const RepOptions& opt) {
  std::vector<Block> blocks;
  std::vector<Word> pool = cycle_pool(n);
  for (unsigned b = 0; b < opt.fock_blocks; ++b) blocks.push_back(Block::fock());
  for (unsigned b = 0; b < opt.cycle_blocks; ++b)
    blocks.push_back(Block::cycle(pool[pick(rng, static_cast<unsigned>(pool.size()))]));
  // Deterministic shuffle.
  for (std::size_t i = blocks.size(); i > 1; --i)
    std::swap(blocks[i - 1], blocks[pick(rng, static_cast<unsigned>(i))]);

  std::optional<ScalarMatrix> twist;
  if (opt.allow_twist && pick(rng, 2) == 0) twist = random_unitary(rng, n);
  std::map<Int, Scalar> phases;
  if (opt.allow_conj && pick(rng, 2) == 0) {
    unsigned count = 1 + pick(rng, 3);
    for (unsigned t = 0; t < count; ++t) phases[Int(pick(rng, 6))] = random_phase(rng);
  }
  return std::make_shared<Representation>(n, std::move(blocks), std::move(twist),
                                          std::move(phases));
}

}  // namespace entk::testing
