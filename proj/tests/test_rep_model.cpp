// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "error.hpp"
#include "helpers.hpp"
#include "rep.hpp"

using namespace entk;
using namespace entk::testing;

namespace {

// Independent oracle for cycle blocks: realize every canonical name as a
// truncated infinite string (branch word followed by the periodic tail) and
// compute the generator action by literal prepending plus a lookup over all
// canonical names. Never consults the block action code paths.
struct CycleOracle {
  Word mu;
  unsigned n;
  unsigned truncation;
  Representation rep;

  CycleOracle(Word cycle, unsigned alphabet, unsigned trunc = 16)
      : mu(cycle), n(alphabet), truncation(trunc), rep(cycle_rep(alphabet, cycle)) {}

  Letter tail_letter(unsigned pos) const {
    auto p = static_cast<unsigned>(mu.size());
    return mu[(pos + p - 1) % p];
  }

  std::vector<Letter> string_of(const BasisName& b) const {
    std::vector<Letter> s(b.word.letters());
    unsigned pos = b.k;
    while (s.size() < truncation) {
      s.push_back(tail_letter(pos));
      pos = (pos + 1) % static_cast<unsigned>(mu.size());
    }
    s.resize(truncation);
    return s;
  }

  BasisName name_of(const std::vector<Letter>& s, unsigned max_depth) const {
    // Truncation length 16 separates all canonical names at these depths:
    // two distinct names agree on at most depth + period < 16 letters.
    std::vector<BasisName> hits;
    for (const BasisName& cand : rep.names_upto(max_depth))
      if (string_of(cand) == s) hits.push_back(cand);
    REQUIRE(hits.size() == 1);
    return hits[0];
  }

  BasisName oracle_image(Letter i, const BasisName& b) const {
    std::vector<Letter> s = string_of(b);
    s.insert(s.begin(), i);
    s.pop_back();
    return name_of(s, static_cast<unsigned>(b.word.size()) + 1);
  }
};

SparseVector unit(const BasisName& b) { return SparseVector::unit(b); }

}  // namespace

TEST_CASE("fock generator prepends and its adjoint strips") {
  Representation fock = fock_rep(2);
  BasisName e2 = BasisName::fock(0, Word::single(2));
  CHECK(fock.apply_generator(1, unit(e2)) == unit(BasisName::fock(0, Word({1, 2}))));
  CHECK(fock.apply_generator_adjoint(1, unit(BasisName::fock(0, Word({1, 2})))) == unit(e2));
  CHECK(fock.apply_generator_adjoint(2, unit(BasisName::fock(0, Word({1, 2})))).empty());
  CHECK(fock.apply_generator_adjoint(1, unit(BasisName::fock(0, Word()))).empty());
}

TEST_CASE("cycle action walks the cycle on branch-free names") {
  // mu = (1,2): prepending the tail letter moves one step back on the cycle.
  Representation rep = cycle_rep(2, Word({1, 2}));
  BasisName k1 = BasisName::cycle(0, 1, Word());
  BasisName k0 = BasisName::cycle(0, 0, Word());
  CHECK(rep.apply_generator(2, unit(k1)) == unit(k0));
  // and the adjoint inverts it
  CHECK(rep.apply_generator_adjoint(2, unit(k0)) == unit(k1));
  // any other letter opens a branch
  CHECK(rep.apply_generator(1, unit(k1)) == unit(BasisName::cycle(0, 1, Word::single(1))));
}

TEST_CASE("cycle action agrees with the infinite-string oracle") {
  for (unsigned n = 2; n <= 3; ++n) {
    for (const Word& mu : {Word::single(1), Word::single(2), Word({1, 2}), Word({1, 2, 2})}) {
      CycleOracle oracle(mu, n);
      for (const BasisName& b : oracle.rep.names_upto(4)) {
        for (Letter i = 1; i <= n; ++i) {
          SparseVector image = oracle.rep.apply_generator(i, unit(b));
          REQUIRE(image.support_size() == 1);
          CHECK(image.entries().begin()->first == oracle.oracle_image(i, b));
          CHECK(image.entries().begin()->second == Scalar::one());
        }
      }
    }
  }
}

TEST_CASE("cycle adjoint is the permutative inverse") {
  for (unsigned n = 2; n <= 3; ++n) {
    for (const Word& mu : {Word::single(1), Word({1, 2}), Word({1, 2, 2})}) {
      Representation rep = cycle_rep(n, mu);
      for (const BasisName& b : rep.names_upto(3)) {
        for (Letter i = 1; i <= n; ++i) {
          SparseVector fwd = rep.apply_generator(i, unit(b));
          CHECK(rep.apply_generator_adjoint(i, fwd) == unit(b));
          // adjoint(b) is nonzero only when b is in the range of generator i
          SparseVector back = rep.apply_generator_adjoint(i, unit(b));
          if (!back.empty())
            CHECK(rep.apply_generator(i, back) == unit(b));
        }
      }
    }
  }
}

TEST_CASE("scalar twist mixes base generators") {
  ScalarMatrix swap{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}};
  Representation rep(2, {Block::fock()}, swap);
  BasisName vac = BasisName::fock(0, Word());
  CHECK(rep.apply_generator(1, unit(vac)) == unit(BasisName::fock(0, Word::single(2))));
}

TEST_CASE("letter range is checked") {
  Representation fock = fock_rep(2);
  CHECK_THROWS_AS(fock.apply_generator(3, unit(BasisName::fock(0, Word()))), Error);
  CHECK_THROWS_AS(fock.apply_generator(0, unit(BasisName::fock(0, Word()))), Error);
}

TEST_CASE("isometry and adjoint identities on a random corpus") {
  Rng rng(3001);
  for (int t = 0; t < 20; ++t) {
    unsigned n = 1 + pick(rng, 2);
    RepOptions opt;
    opt.fock_blocks = pick(rng, 2);
    opt.cycle_blocks = 1 + pick(rng, 2) - (opt.fock_blocks ? 1 : 0);
    if (opt.fock_blocks + opt.cycle_blocks == 0) opt.fock_blocks = 1;
    opt.allow_twist = true;
    opt.allow_conj = true;
    RepPtr rep = random_rep(rng, n, opt);
    std::vector<BasisName> names = rep->names_upto(3);
    for (const BasisName& b : names) {
      for (const BasisName& c : names) {
        SparseVector eb = unit(b), ec = unit(c);
        for (Letter i = 1; i <= n; ++i) {
          SparseVector ti_b = rep->apply_generator(i, eb);
          // adjoint correctness: <T_i e_b, e_c> = <e_b, T_i* e_c>
          CHECK(inner(ti_b, ec) == inner(eb, rep->apply_generator_adjoint(i, ec)));
          for (Letter j = 1; j <= n; ++j) {
            Scalar lhs = inner(ti_b, rep->apply_generator(j, ec));
            CHECK(lhs == ((i == j) ? inner(eb, ec) : Scalar::zero()));
          }
        }
      }
    }
  }
}

TEST_CASE("basis enumeration and level counts") {
  Representation fock = fock_rep(2);
  std::vector<BasisName> names = fock.names_upto(1);
  REQUIRE(names.size() == 3);
  CHECK(names[0] == BasisName::fock(0, Word()));
  CHECK(names[1] == BasisName::fock(0, Word::single(1)));
  CHECK(names[2] == BasisName::fock(0, Word::single(2)));

  Representation c12 = cycle_rep(2, Word({1, 2}));
  std::vector<BasisName> c12names = c12.names_upto(0);
  REQUIRE(c12names.size() == 2);
  CHECK(c12names[0] == BasisName::cycle(0, 0, Word()));
  CHECK(c12names[1] == BasisName::cycle(0, 1, Word()));

  // Cycle((1)), n=2: one name at depth one, and (0,(1)) is not canonical.
  Representation c1 = cycle_rep(2, Word::single(1));
  std::vector<BasisName> c1names = c1.names_upto(1);
  REQUIRE(c1names.size() == 2);
  CHECK(c1names[0] == BasisName::cycle(0, 0, Word()));
  CHECK(c1names[1] == BasisName::cycle(0, 0, Word::single(2)));
  CHECK_FALSE(c1.canonical(BasisName::cycle(0, 0, Word::single(1))));

  // Count formulas per level.
  for (unsigned n = 1; n <= 3; ++n) {
    Representation f = fock_rep(n);
    for (unsigned d = 0; d <= 4; ++d) {
      Int expected = 1;
      for (unsigned t = 0; t < d; ++t) expected *= n;
      CHECK(f.level_count(d) == expected);
    }
  }
  Representation c122(3, {Block::cycle(Word({1, 2}))});
  CHECK(c122.level_count(0) == 2);
  CHECK(c122.level_count(1) == 2 * 2);      // p(n-1)
  CHECK(c122.level_count(2) == 2 * 2 * 3);  // p(n-1)n
}

TEST_CASE("rank is the position in the enumeration, with exact inverse") {
  Rng rng(3002);
  for (int t = 0; t < 12; ++t) {
    unsigned n = 1 + pick(rng, 3);
    RepOptions opt;
    opt.fock_blocks = pick(rng, 3);
    opt.cycle_blocks = (n >= 2) ? pick(rng, 3) : 0;
    if (opt.fock_blocks + opt.cycle_blocks == 0) opt.fock_blocks = 1;
    RepPtr rep = random_rep(rng, n, opt);
    std::vector<BasisName> names = rep->names_upto(3);
    for (std::size_t idx = 0; idx < names.size(); ++idx) {
      CHECK(rep->rank(names[idx]) == Int(static_cast<unsigned long>(idx)));
      CHECK(rep->unrank(Int(static_cast<unsigned long>(idx))) == names[idx]);
    }
    // enumeration is strictly increasing in the canonical order
    for (std::size_t idx = 1; idx < names.size(); ++idx)
      CHECK(basis_less(names[idx - 1], names[idx]));
  }
}

TEST_CASE("sigma is the linear extension of the generator family") {
  Representation fock = fock_rep(2);
  BasisName vac = BasisName::fock(0, Word());

  auto as_gen1 = fock.sigma({Scalar(1), Scalar(0)});
  CHECK(as_gen1(unit(vac)) == fock.apply_generator(1, unit(vac)));

  auto zero = fock.sigma({Scalar(0), Scalar(0)});
  CHECK(zero(unit(vac)).empty());

  // unit vector (3/5, 4/5 i): image of the vacuum has norm exactly one
  auto iso = fock.sigma({Scalar(Rational(3, 5)), Scalar(Rational(0), Rational(4, 5))});
  SparseVector image = iso(unit(vac));
  SparseVector expected;
  expected.add_term(BasisName::fock(0, Word::single(1)), Scalar(Rational(3, 5)));
  expected.add_term(BasisName::fock(0, Word::single(2)), Scalar(Rational(0), Rational(4, 5)));
  CHECK(image == expected);
  CHECK(inner(image, image) == Scalar::one());

  CHECK_THROWS_AS(fock.sigma({Scalar(1)}), Error);
}

TEST_CASE("sigma satisfies the Toeplitz identity on random data") {
  Rng rng(3003);
  Representation rep = cycle_rep(2, Word({1, 2}));
  for (int t = 0; t < 40; ++t) {
    std::vector<Scalar> x{random_coef(rng), random_coef(rng)};
    std::vector<Scalar> y{random_coef(rng), random_coef(rng)};
    SparseVector xi = random_vector(rng, rep, 2);
    SparseVector eta = random_vector(rng, rep, 2);
    Scalar xy = x[0].conj() * y[0] + x[1].conj() * y[1];
    CHECK(inner(rep.sigma(x)(xi), rep.sigma(y)(eta)) == xy * inner(xi, eta));
  }
}

TEST_CASE("direct sums concatenate blocks") {
  Representation a = fock_rep(2);
  Representation b = cycle_rep(2, Word::single(1));
  Representation sum = direct_sum(a, b);
  REQUIRE(sum.blocks().size() == 2);
  CHECK(sum.blocks()[0].kind == Block::Kind::fock);
  CHECK(sum.blocks()[1].kind == Block::Kind::cycle);

  Representation left = direct_sum(direct_sum(a, b), a);
  Representation right = direct_sum(a, direct_sum(b, a));
  CHECK(left.blocks() == right.blocks());

  CHECK_THROWS_AS(direct_sum(a, fock_rep(3)), Error);
}

TEST_CASE("direct sum twist compatibility") {
  ScalarMatrix swap{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}};
  Representation twisted(2, {Block::fock()}, swap);
  Representation plain = fock_rep(2);
  CHECK_THROWS_AS(direct_sum(twisted, plain), Error);
  Representation both = direct_sum(twisted, twisted);
  REQUIRE(both.twist().has_value());
  CHECK(*both.twist() == swap);
  // an explicit identity twist merges with an absent one
  Representation id_twist(2, {Block::fock()}, matrix_identity(2));
  CHECK(direct_sum(id_twist, plain).blocks().size() == 2);
}

TEST_CASE("direct sum carries conj phases across by name") {
  std::map<Int, Scalar> phases{{Int(0), Scalar::i()}};
  Representation a(2, {Block::fock()}, std::nullopt, phases);
  Representation b = cycle_rep(2, Word::single(2));
  Representation sum = direct_sum(b, a);
  // a's vacuum is now the second depth-0 name of the sum
  BasisName moved = BasisName::fock(1, Word());
  auto it = sum.conj_phases().find(sum.rank(moved));
  REQUIRE(it != sum.conj_phases().end());
  CHECK(it->second == Scalar::i());
}

TEST_CASE("power of the shift") {
  Representation s3 = fock_power(1, 3);
  CHECK(s3.blocks().size() == 3);
  CHECK(s3.n() == 1);
  CHECK(fock_power(2, 1).blocks().size() == 1);
  CHECK_THROWS_AS(fock_power(2, 2), Error);
}

TEST_CASE("representation validation") {
  CHECK_THROWS_AS(Representation(2, {}), Error);
  CHECK_THROWS_AS(Representation(2, {Block::cycle(Word())}), Error);
  CHECK_THROWS_AS(Representation(2, {Block::cycle(Word::single(3))}), Error);
  ScalarMatrix bad{{Scalar(1), Scalar(1)}, {Scalar(0), Scalar(1)}};
  CHECK_THROWS_AS(Representation(2, {Block::fock()}, bad), Error);
  std::map<Int, Scalar> bad_phase{{Int(0), Scalar(2)}};
  CHECK_THROWS_AS(Representation(2, {Block::fock()}, std::nullopt, bad_phase), Error);
}
