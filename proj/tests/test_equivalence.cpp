// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "error.hpp"
#include "helpers.hpp"
#include "witness.hpp"
#include "wold.hpp"

using namespace entk;
using namespace entk::testing;

namespace {

RepPtr make(Representation r) { return std::make_shared<Representation>(std::move(r)); }

RepPtr fock2() { return make(fock_rep(2)); }
RepPtr cyc(Word w) { return make(cycle_rep(2, std::move(w))); }

// A random pair with equal multiplicity, plus its constructed witness.
struct VerifiedInstance {
  RepPtr omega, tau;
  QuasifreeWitness w;
};

VerifiedInstance random_verified_pair(Rng& rng, unsigned n, unsigned check_depth) {
  RepOptions opt;
  opt.fock_blocks = pick(rng, 3);
  opt.cycle_blocks = pick(rng, 3);
  if (opt.fock_blocks + opt.cycle_blocks == 0) opt.cycle_blocks = 1;
  opt.allow_twist = true;
  opt.allow_conj = true;
  RepPtr omega = random_rep(rng, n, opt);

  RepOptions opt2 = opt;  // same Fock count keeps the multiplicity equal
  opt2.cycle_blocks = pick(rng, 3);
  if (opt.fock_blocks + opt2.cycle_blocks == 0) opt2.cycle_blocks = 1;
  RepPtr tau = random_rep(rng, n, opt2);

  BhDecision d = decide_bh_quasifree(omega, tau);
  REQUIRE(d.equivalent);
  REQUIRE(verify_quasifree(*omega, *tau, *d.witness, check_depth).passed());
  return {omega, tau, *d.witness};
}

}  // namespace

TEST_CASE("essential witness: reflexive, cross-cycle, and split-cycle cases") {
  RepPtr c1 = cyc(Word::single(1));
  RepPtr c2 = cyc(Word::single(2));
  RepPtr c12 = cyc(Word({1, 2}));
  RepPtr split = make(direct_sum(*c1, *c2));

  FreeWitness refl = essential_free_witness(c1, c1);
  CHECK(verify_free(*c1, *c1, refl, 5).passed());

  FreeWitness cross = essential_free_witness(c1, c2);
  CHECK(verify_free(*c1, *c2, cross, 5).passed());

  FreeWitness vs_split = essential_free_witness(c12, split);
  CHECK(verify_free(*c12, *split, vs_split, 4).passed());
}

TEST_CASE("essential witness requires multiplicity zero") {
  CHECK_THROWS_AS(essential_free_witness(fock2(), cyc(Word::single(1))), Error);
}

TEST_CASE("verify_free catches defect mismatches") {
  // identity witness verifies a representation against itself
  RepPtr f = fock2();
  CHECK(verify_free(*f, *f, FreeWitness::identity(2), 4).passed());

  // scalar swap connects the twisted Fock representation to the plain one
  ScalarMatrix swap{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}};
  RepPtr twisted = make(Representation(2, {Block::fock()}, swap));
  CHECK(verify_free(*twisted, *f, FreeWitness::scalar(swap), 5).passed());

  // Fock against Fock+Fock: the identity witness fails and the verifier
  // exhibits an exact counterexample vector (rank order finds the shared
  // vacuum first).
  RepPtr two = make(fock_multiple(2, 2));
  VerificationReport report = verify_free(*f, *two, FreeWitness::identity(2), 3);
  CHECK_FALSE(report.passed());
  REQUIRE(report.counterexample.has_value());
  CHECK(report.counterexample->rank == 0);
}

TEST_CASE("scalar witness inversion is the conjugate transpose") {
  CHECK(invert_free_witness(FreeWitness::identity(2)).scalar_entries() == matrix_identity(2));

  ScalarMatrix swap{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}};
  CHECK(invert_free_witness(FreeWitness::scalar(swap)).scalar_entries() == swap);

  ScalarMatrix u{{Scalar(0), Scalar::i()}, {Scalar(1), Scalar(0)}};
  ScalarMatrix expected{{Scalar(0), Scalar(1)},
                        {Scalar(Rational(0), Rational(-1)), Scalar(0)}};
  CHECK(invert_free_witness(FreeWitness::scalar(u)).scalar_entries() == expected);
}

TEST_CASE("scalar witness composition is the matrix product") {
  ScalarMatrix swap{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}};
  FreeWitness a = FreeWitness::scalar(swap);
  CHECK(compose_free_witness(FreeWitness::identity(2), a).scalar_entries() == swap);
  CHECK(compose_free_witness(a, a).scalar_entries() == matrix_identity(2));
}

TEST_CASE("witness inversion and composition preserve verification") {
  Rng rng(5001);
  RepPtr f = fock2();
  for (int t = 0; t < 10; ++t) {
    ScalarMatrix u = random_unitary(rng, 2);
    ScalarMatrix w2 = random_unitary(rng, 2);
    RepPtr omega = make(Representation(2, {Block::fock()}, u));
    RepPtr middle = f;
    // omega = middle . u, middle = kappa . w2 with kappa twisted oppositely
    RepPtr kappa = make(Representation(2, {Block::fock()}, matrix_adjoint(w2)));
    FreeWitness u_w = FreeWitness::scalar(u);
    FreeWitness w2_w = FreeWitness::scalar(w2);
    REQUIRE(verify_free(*omega, *middle, u_w, 3).passed());
    REQUIRE(verify_free(*middle, *kappa, w2_w, 3).passed());

    CHECK(verify_free(*middle, *omega, invert_free_witness(u_w), 3).passed());
    CHECK(verify_free(*omega, *kappa, compose_free_witness(u_w, w2_w), 4).passed());
  }
}

TEST_CASE("quasifree inversion of a scalar witness conjugates the entries") {
  RepPtr f = fock2();
  std::map<Int, Scalar> phases{{Int(0), Scalar::i()}};
  auto w = std::make_shared<const BasisUnitary>(BasisUnitary::rank_matching(f, f, phases));
  ScalarMatrix u{{Scalar(0), Scalar::i()}, {Scalar(1), Scalar(0)}};
  QuasifreeWitness q{w, FreeWitness::scalar(u)};
  QuasifreeWitness inv = invert_quasifree_witness(q);
  REQUIRE(inv.U.is_scalar());
  // v_{jk} = conj(u_{kj}): scalars pass through W untouched
  for (unsigned j = 0; j < 2; ++j)
    for (unsigned k = 0; k < 2; ++k)
      CHECK(inv.U.scalar_entries()[j][k] == u[k][j].conj());
}

TEST_CASE("composition with the identity witness leaves a scalar witness unchanged") {
  ScalarMatrix swap{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}};
  QuasifreeWitness q{nullptr, FreeWitness::scalar(swap)};
  QuasifreeWitness id{nullptr, FreeWitness::identity(2)};
  CHECK(compose_quasifree_witness(q, id).U.scalar_entries() == swap);
  CHECK(compose_quasifree_witness(id, q).U.scalar_entries() == swap);
}

TEST_CASE("bounded witness inversion and composition preserve verification") {
  RepPtr c1 = cyc(Word::single(1));
  RepPtr c2 = cyc(Word::single(2));
  RepPtr c12 = cyc(Word({1, 2}));

  FreeWitness u = essential_free_witness(c1, c2);
  CHECK(verify_free(*c2, *c1, invert_free_witness(u), 4).passed());

  FreeWitness v = essential_free_witness(c2, c12);
  CHECK(verify_free(*c1, *c12, compose_free_witness(u, v), 3).passed());
}

TEST_CASE("quasifree inversion and composition") {
  Rng rng(5002);
  for (int t = 0; t < 6; ++t) {
    VerifiedInstance a = random_verified_pair(rng, 2, 3);
    QuasifreeWitness inv = invert_quasifree_witness(a.w);
    CHECK(verify_quasifree(*a.tau, *a.omega, inv, 3).passed());
  }

  // chain omega -> tau -> kappa through constructed witnesses
  for (int t = 0; t < 4; ++t) {
    VerifiedInstance a = random_verified_pair(rng, 2, 3);
    BhDecision second = decide_bh_quasifree(a.tau, a.omega);
    REQUIRE(second.equivalent);
    QuasifreeWitness composite = compose_quasifree_witness(a.w, *second.witness);
    CHECK(verify_quasifree(*a.omega, *a.omega, composite, 3).passed());
  }

  // scalar-through-W collapse: pure-W witnesses compose to (W1 W2, I)
  RepPtr c1 = cyc(Word::single(1));
  auto w_ptr = std::make_shared<const BasisUnitary>(BasisUnitary::rank_matching(c1, c1));
  QuasifreeWitness pure_w{w_ptr, FreeWitness::identity(2)};
  QuasifreeWitness composed = compose_quasifree_witness(pure_w, pure_w);
  CHECK(composed.U.is_scalar());
  CHECK(composed.U.scalar_entries() == matrix_identity(2));
  CHECK(verify_quasifree(*c1, *c1, composed, 3).passed());
}

TEST_CASE("blockwise witness sums") {
  RepPtr c1 = cyc(Word::single(1));
  RepPtr c2 = cyc(Word::single(2));
  RepPtr f = fock2();

  // identity (+) identity stays scalar and verifies on the sums
  WitnessedPair id1{f, f, QuasifreeWitness{nullptr, FreeWitness::identity(2)}};
  SumWitness idsum = direct_sum_witness(id1, id1);
  CHECK(idsum.w.U.is_scalar());
  CHECK(verify_quasifree(*idsum.omega, *idsum.tau, idsum.w, 3).passed());

  // the cross-cycle witness (+) the identity Fock witness
  WitnessedPair cross{c1, c2, QuasifreeWitness{nullptr, essential_free_witness(c1, c2)}};
  WitnessedPair idf{f, f, QuasifreeWitness{nullptr, FreeWitness::identity(2)}};
  SumWitness mixed = direct_sum_witness(cross, idf);
  CHECK_FALSE(mixed.w.U.is_scalar());
  CHECK(mixed.omega->blocks().size() == 2);
  CHECK(verify_quasifree(*mixed.omega, *mixed.tau, mixed.w, 4).passed());

  // scalar flavor survives exactly for equal matrices (summable pairs force
  // equal scalar witnesses, so the unequal branch is checked definitionally)
  ScalarMatrix swap{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}};
  RepPtr twisted = make(Representation(2, {Block::fock()}, swap));
  WitnessedPair swapped{twisted, f, QuasifreeWitness{nullptr, FreeWitness::scalar(swap)}};
  SumWitness even = direct_sum_witness(swapped, swapped);
  CHECK(even.w.U.is_scalar());
  CHECK(verify_quasifree(*even.omega, *even.tau, even.w, 3).passed());
  WitnessedPair fake{f, f, QuasifreeWitness{nullptr, FreeWitness::scalar(swap)}};
  CHECK_FALSE(direct_sum_witness(id1, fake).w.U.is_scalar());
}

TEST_CASE("decision by multiplicity: Fock multiples") {
  for (unsigned n = 1; n <= 2; ++n) {
    for (unsigned a = 1; a <= 4; ++a) {
      for (unsigned b = 1; b <= 4; ++b) {
        BhDecision d = decide_bh_quasifree(make(fock_multiple(n, a)), make(fock_multiple(n, b)));
        CHECK(d.equivalent == (a == b));
        if (a == b) {
          CHECK(d.witness->U.is_scalar());
        } else {
          CHECK(d.mult_omega == a);
          CHECK(d.mult_tau == b);
        }
      }
    }
  }
}

TEST_CASE("decision by multiplicity: mixed pairs verify") {
  RepPtr a = make(direct_sum(fock_rep(2), cycle_rep(2, Word::single(1))));
  RepPtr b = make(direct_sum(fock_rep(2), cycle_rep(2, Word::single(2))));
  BhDecision d = decide_bh_quasifree(a, b);
  REQUIRE(d.equivalent);
  CHECK(verify_quasifree(*a, *b, *d.witness, 4).passed());

  BhDecision no = decide_bh_quasifree(fock2(), make(fock_multiple(2, 2)));
  CHECK_FALSE(no.equivalent);
  CHECK(no.mult_omega == 1);
  CHECK(no.mult_tau == 2);
}

TEST_CASE("decision handles essential parts of different size (defect alignment)") {
  // Both have multiplicity 1, but the essential part is empty on the left
  // and infinite-dimensional on the right; the wold part matching does not
  // exist and the witness must rely on defect alignment alone.
  RepPtr plain = fock2();
  RepPtr mixed = make(direct_sum(fock_rep(2), cycle_rep(2, Word::single(1))));
  BhDecision d = decide_bh_quasifree(plain, mixed);
  REQUIRE(d.equivalent);
  CHECK(verify_quasifree(*plain, *mixed, *d.witness, 4).passed());

  // and in the other direction
  BhDecision back = decide_bh_quasifree(mixed, plain);
  REQUIRE(back.equivalent);
  CHECK(verify_quasifree(*mixed, *plain, *back.witness, 4).passed());
}

TEST_CASE("verified quasifree witnesses connect equal multiplicities") {
  Rng rng(5003);
  for (int t = 0; t < 8; ++t) {
    VerifiedInstance inst = random_verified_pair(rng, 2, 3);
    CHECK(multiplicity(*inst.omega) == multiplicity(*inst.tau));
  }
}

TEST_CASE("scalar free check: structural, refuted, and forced-candidate cases") {
  RepPtr f = fock2();
  ScalarMatrix swap{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}};
  RepPtr twisted = make(Representation(2, {Block::fock()}, swap));

  ScalarFreeResult hit = scalar_free_check(twisted, f, 4);
  CHECK(hit.verified);
  CHECK(hit.exact);
  CHECK(hit.witness->scalar_entries() == swap);

  ScalarFreeResult self = scalar_free_check(f, f, 3);
  CHECK(self.verified);
  CHECK(self.exact);
  CHECK(self.witness->scalar_entries() == matrix_identity(2));

  ScalarFreeResult defect = scalar_free_check(f, make(fock_multiple(2, 2)), 3);
  CHECK_FALSE(defect.verified);
  CHECK(defect.report.counterexample.has_value());

  // cycle against cycle: the forced candidates are not scalar multiples of I
  ScalarFreeResult cycles = scalar_free_check(cyc(Word::single(1)), cyc(Word::single(2)), 3);
  CHECK_FALSE(cycles.verified);
}

TEST_CASE("the refutations of unequal multiplicity are robust against witness search") {
  // spot check: no scalar witness and no basis alignment connects
  // representations of different multiplicity
  Rng rng(5004);
  RepPtr one = fock2();
  RepPtr two = make(fock_multiple(2, 2));
  for (int t = 0; t < 10; ++t) {
    ScalarMatrix u = random_unitary(rng, 2);
    CHECK_FALSE(verify_free(*one, *two, FreeWitness::scalar(u), 2).passed());
  }
  CHECK_THROWS_AS(BasisUnitary::defect_matching(two, one), Error);
}
