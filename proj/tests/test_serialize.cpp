// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "error.hpp"
#include "helpers.hpp"
#include "serialize.hpp"

using namespace entk;
using namespace entk::testing;

namespace {

RepPtr roundtrip(const Representation& rep) {
  std::string text = wrap_document(rep_to_json(rep)).dump();
  return rep_from_json(parse_document(text));
}

}  // namespace

TEST_CASE("representation round trips") {
  Rng rng(8001);
  for (int t = 0; t < 20; ++t) {
    unsigned n = 1 + pick(rng, 3);
    RepOptions opt;
    opt.fock_blocks = pick(rng, 3);
    opt.cycle_blocks = (n >= 2) ? pick(rng, 3) : 0;
    if (opt.fock_blocks + opt.cycle_blocks == 0) opt.fock_blocks = 1;
    opt.allow_twist = true;
    opt.allow_conj = true;
    RepPtr rep = random_rep(rng, n, opt);
    RepPtr back = roundtrip(*rep);
    CHECK(back->n() == rep->n());
    CHECK(back->blocks() == rep->blocks());
    CHECK((back->twist() == rep->twist()));
    CHECK(back->conj_phases() == rep->conj_phases());
  }
}

TEST_CASE("representation parsing rejects bad documents") {
  CHECK_THROWS_AS(parse_document("not json"), Error);
  CHECK_THROWS_AS(parse_document("{\"n\":2}"), Error);  // no format_version
  CHECK_THROWS_AS(parse_document("{\"format_version\":2}"), Error);

  auto parse_rep = [](const char* text) { return rep_from_json(parse_document(text)); };
  // empty cycle word
  CHECK_THROWS_AS(
      parse_rep(R"({"format_version":1,"n":2,"blocks":[{"kind":"cycle","word":[]}]})"),
      Error);
  // non-unitary twist
  CHECK_THROWS_WITH_AS(
      parse_rep(
          R"({"format_version":1,"n":2,"blocks":[{"kind":"fock"}],"twist":[["1","0"],["0","1/2"]]})"),
      "twist is not unitary", Error);
  // letter out of range
  CHECK_THROWS_AS(
      parse_rep(R"({"format_version":1,"n":2,"blocks":[{"kind":"cycle","word":[3]}]})"),
      Error);
  // no blocks
  CHECK_THROWS_AS(parse_rep(R"({"format_version":1,"n":2,"blocks":[]})"), Error);
  // non-unimodular conj phase
  CHECK_THROWS_AS(
      parse_rep(
          R"({"format_version":1,"n":2,"blocks":[{"kind":"fock"}],"conj":{"phases":{"0":"2"}}})"),
      Error);
}

TEST_CASE("algebra element round trips") {
  Rng rng(8002);
  for (int t = 0; t < 30; ++t) {
    AlgebraElement a = random_element(rng, 1 + pick(rng, 3));
    AlgebraElement back = elem_from_json(parse_document(wrap_document(elem_to_json(a)).dump()));
    CHECK(back == a);
  }
  CHECK_THROWS_AS(
      elem_from_json(parse_document(
          R"({"format_version":1,"n":2,"terms":[{"alpha":[3],"beta":[],"coef":"1"}]})")),
      Error);
}

TEST_CASE("vector round trips validate canonicality") {
  Rng rng(8003);
  Representation rep = direct_sum(fock_rep(2), cycle_rep(2, Word::single(1)));
  for (int t = 0; t < 20; ++t) {
    SparseVector v = random_vector(rng, rep, 3);
    SparseVector back = vec_from_json(parse_document(wrap_document(vec_to_json(v)).dump()), rep);
    CHECK(back == v);
  }
  // (block 1, k 0, word [1]) is non-canonical for Cycle((1))
  CHECK_THROWS_AS(
      vec_from_json(
          parse_document(
              R"({"format_version":1,"entries":[{"name":{"block":1,"k":0,"word":[1]},"coef":"1"}]})"),
          rep),
      Error);
}

TEST_CASE("witness round trips: scalar flavor") {
  RepPtr omega = std::make_shared<Representation>(fock_rep(2));
  RepPtr tau = omega;
  WitnessEnv env{omega, tau};
  std::map<Int, Scalar> phases{{Int(0), Scalar::i()}};
  auto w = std::make_shared<const BasisUnitary>(BasisUnitary::rank_matching(tau, omega, phases));
  QuasifreeWitness q{w, FreeWitness::identity(2)};
  std::string text = wrap_document(witness_to_json(q, env)).dump();
  QuasifreeWitness back = witness_from_json(parse_document(text), env);
  CHECK(back.U.is_scalar());
  CHECK(back.U.scalar_entries() == matrix_identity(2));
  REQUIRE(back.W);
  CHECK(back.W->kind() == BasisUnitary::Kind::rank);
  CHECK(back.W->phases() == phases);
  // and the round trip is stable as text
  CHECK(wrap_document(witness_to_json(back, env)).dump() == text);
}

TEST_CASE("witness round trips: bounded flavor") {
  RepPtr omega = std::make_shared<Representation>(cycle_rep(2, Word::single(1)));
  RepPtr tau = std::make_shared<Representation>(cycle_rep(2, Word::single(2)));
  WitnessEnv env{omega, tau};
  BhDecision d = decide_bh_quasifree(omega, tau);
  REQUIRE(d.equivalent);
  std::string text = wrap_document(witness_to_json(*d.witness, env)).dump();
  QuasifreeWitness back = witness_from_json(parse_document(text), env);
  CHECK_FALSE(back.U.is_scalar());
  CHECK(verify_quasifree(*omega, *tau, back, 3).passed());
  CHECK(wrap_document(witness_to_json(back, env)).dump() == text);
}

TEST_CASE("witness parsing rejects bad documents") {
  RepPtr omega = std::make_shared<Representation>(fock_rep(2));
  WitnessEnv env{omega, omega};
  auto parse_w = [&](const char* text) {
    return witness_from_json(parse_document(text), env);
  };
  // non-unitary scalar entries
  CHECK_THROWS_AS(
      parse_w(
          R"({"format_version":1,"U":{"flavor":"scalar","entries":[["1","1"],["0","1"]]}})"),
      Error);
  // unknown matching
  CHECK_THROWS_AS(
      parse_w(
          R"({"format_version":1,"W":{"matching":"slide"},"U":{"flavor":"scalar","entries":[["1","0"],["0","1"]]}})"),
      Error);
  // bad expression node
  CHECK_THROWS_AS(
      parse_w(
          R"({"format_version":1,"U":{"flavor":"bounded","entries":[[{"spin":1},{"scalar":"0"}],[{"scalar":"0"},{"scalar":"1"}]]}})"),
      Error);
  // basisU reference without a W
  CHECK_THROWS_AS(
      parse_w(
          R"({"format_version":1,"U":{"flavor":"bounded","entries":[[{"basisU":"W"},{"scalar":"0"}],[{"scalar":"0"},{"scalar":"1"}]]}})"),
      Error);
}

TEST_CASE("expression round trip through the witness env") {
  RepPtr omega = std::make_shared<Representation>(cycle_rep(2, Word::single(1)));
  RepPtr tau = std::make_shared<Representation>(cycle_rep(2, Word::single(2)));
  WitnessEnv env{omega, tau};
  OperatorExpr e = OperatorExpr::sum(
      {OperatorExpr::prod({OperatorExpr::gen_adj(tau, 1), OperatorExpr::gen(omega, 2)}),
       OperatorExpr::scalar(Scalar(Rational(1, 2), Rational(1)))});
  Json j = expr_to_json(e, env, nullptr);
  OperatorExpr back = expr_from_json(j, env, nullptr);
  CHECK(expr_to_json(back, env, nullptr) == j);
  // same action on a few vectors
  for (unsigned long r = 0; r < 6; ++r) {
    RankVector v = RankVector::unit(Int(r));
    CHECK(e.apply(v) == back.apply(v));
  }
}

TEST_CASE("k0 and algebra documents") {
  K0Data k{1, {Int(2)}, {Int(0), Int(1)}};
  K0Data back = k0_from_json(parse_document(wrap_document(k0_to_json(k)).dump()));
  CHECK(back.free_rank == 1);
  CHECK(back.torsion == k.torsion);
  CHECK(back.unit == k.unit);
  CHECK_THROWS_AS(
      k0_from_json(parse_document(
          R"({"format_version":1,"free_rank":1,"torsion":[],"unit":[0,1]})")),
      Error);

  FDAlgebra alg{{2, 3}};
  FDAlgebra alg_back = fd_from_json(parse_document(wrap_document(fd_to_json(alg)).dump()));
  CHECK(alg_back == alg);

  ModuleBasisDoc doc = module_basis_from_json(parse_document(
      R"({"format_version":1,"algebra":{"blocks":[1]},"n":2,
          "vectors":[[[[["1"]]],[[["0"]]]],[[[["0"]]],[[["1"]]]]]})"));
  CHECK(doc.n == 2);
  REQUIRE(doc.vectors.size() == 2);
  CHECK(check_orthonormal(doc.vectors));
}
