// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#include "endo.hpp"

#include <memory>

#include "algebra.hpp"
#include "error.hpp"
#include "module_kit.hpp"
#include "wold.hpp"

namespace entk {

namespace {

// The decisions below lean on the relative commutant of B(H) -- the scalars
// -- having invariant basis number. Established through the K-theory
// checker, not assumed: K0(C) = Z with [1] = 1.
void require_scalar_commutant_ibn() {
  if (!ibn(fd_to_k0(FDAlgebra{{1}})))
    fail(Errc::internal, "the scalar commutant lost invariant basis number");
}

}  // namespace

SparseOperator SparseOperator::rank_one(BasisName ket, BasisName bra, Scalar c) {
  SparseOperator out;
  out.add_term(ket, bra, c);
  return out;
}

void SparseOperator::add_term(const BasisName& ket, const BasisName& bra, const Scalar& c) {
  if (c.is_zero()) return;
  Key key{ket, bra};
  auto [it, inserted] = terms_.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SparseOperator& SparseOperator::operator+=(const SparseOperator& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

SparseOperator SparseOperator::scaled(const Scalar& c) const {
  SparseOperator out;
  if (c.is_zero()) return out;
  for (const auto& [key, v] : terms_) out.terms_.emplace(key, c * v);
  return out;
}

SparseOperator SparseOperator::adjoint() const {
  SparseOperator out;
  for (const auto& [key, c] : terms_) out.add_term(key.second, key.first, c.conj());
  return out;
}

SparseOperator compose(const SparseOperator& a, const SparseOperator& b) {
  SparseOperator out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      if (ka.second == kb.first) out.add_term(ka.first, kb.second, ca * cb);
  return out;
}

SparseVector SparseOperator::apply(const SparseVector& v) const {
  SparseVector out;
  for (const auto& [key, c] : terms_) {
    Scalar amp = v.at(key.second);
    if (!amp.is_zero()) out.add_term(key.first, c * amp);
  }
  return out;
}

std::string SparseOperator::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + c.str() + ")|" + key.first.str() + "><" + key.second.str() + "|";
  }
  return out;
}

bool Endomorphism::unital() const { return multiplicity(*rep) == 0; }

SparseOperator endo_apply(const Endomorphism& alpha, const SparseOperator& a) {
  const Representation& rep = *alpha.rep;
  SparseOperator out;
  for (const auto& [key, c] : a.terms()) {
    for (Letter i = 1; i <= rep.n(); ++i) {
      SparseVector ket = rep.apply_generator(i, SparseVector::unit(key.first));
      SparseVector bra = rep.apply_generator(i, SparseVector::unit(key.second));
      for (const auto& [kn, kc] : ket.entries())
        for (const auto& [bn, bc] : bra.entries()) out.add_term(kn, bn, c * kc * bc.conj());
    }
  }
  return out;
}

std::map<std::pair<Int, Int>, Scalar> operator_ranks(const Representation& rep,
                                                     const SparseOperator& a) {
  std::map<std::pair<Int, Int>, Scalar> out;
  for (const auto& [key, c] : a.terms())
    out.emplace(std::make_pair(rep.rank(key.first), rep.rank(key.second)), c);
  return out;
}

namespace {

std::string ranks_str(const std::map<std::pair<Int, Int>, Scalar>& m) {
  if (m.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : m) {
    if (!first) out += " + ";
    first = false;
    out += "(" + c.str() + ")|" + key.first.get_str() + "><" + key.second.get_str() + "|";
  }
  return out;
}

}  // namespace

EndoEqualResult decide_endo_equal(RepPtr omega, RepPtr tau, unsigned depth) {
  if (!omega || !tau) fail(Errc::invalid, "missing representation");
  require_scalar_commutant_ibn();
  EndoEqualResult out;

  auto search_discrepancy = [&]() {
    Int bound = omega->count_upto(depth);
    Endomorphism alpha{omega};
    Endomorphism beta{tau};
    for (Int m = 0; m < bound; ++m) {
      for (Int k = 0; k <= m; ++k) {
        for (int side = 0; side < 2; ++side) {
          if (side == 1 && k == m) continue;
          Int rk = side == 0 ? k : m;
          Int rb = side == 0 ? m : k;
          SparseOperator a_omega = SparseOperator::rank_one(omega->unrank(rk),
                                                            omega->unrank(rb));
          SparseOperator a_tau =
              SparseOperator::rank_one(tau->unrank(rk), tau->unrank(rb));
          auto img_omega = operator_ranks(*omega, endo_apply(alpha, a_omega));
          auto img_tau = operator_ranks(*tau, endo_apply(beta, a_tau));
          if (img_omega != img_tau) {
            out.witness_op = a_omega;
            out.image_omega = ranks_str(img_omega);
            out.image_tau = ranks_str(img_tau);
            return;
          }
        }
      }
    }
  };

  if (omega->n() != tau->n()) {
    out.verdict = EndoEqualResult::Verdict::not_equal;
    out.reason = "generator counts differ (n=" + std::to_string(omega->n()) +
                 " vs m=" + std::to_string(tau->n()) +
                 "); the scalar commutant has invariant basis number, so equal "
                 "endomorphisms force n = m";
    search_discrepancy();
    return out;
  }

  ScalarFreeResult check = scalar_free_check(omega, tau, depth);
  out.report = check.report;
  if (check.verified) {
    out.witness = check.witness;
    out.verdict = check.exact ? EndoEqualResult::Verdict::equal
                              : EndoEqualResult::Verdict::depth_certified;
    return out;
  }

  out.verdict = EndoEqualResult::Verdict::not_equal;
  out.reason = "scalar free equivalence refuted exactly; the induced endomorphisms differ";
  search_discrepancy();
  return out;
}

namespace {

// Exact structural conjugacy: a trivial W, identical blocks and conj, and
// the twists related by the scalar witness matrix.
bool structurally_conjugate(const Representation& omega, const Representation& tau,
                            const QuasifreeWitness& q) {
  if (!q.U.is_scalar()) return false;
  if (q.W && !(q.W->kind() == BasisUnitary::Kind::rank && q.W->phases().empty()))
    return false;
  if (!blocks_equal(omega, tau) || !conj_equal(omega, tau)) return false;
  return matrix_mul(twist_or_identity(tau), q.U.scalar_entries()) == twist_or_identity(omega);
}

}  // namespace

EndoConjugacyResult decide_endo_conjugate(RepPtr omega, RepPtr tau,
                                          const std::optional<QuasifreeWitness>& supplied,
                                          unsigned depth) {
  if (!omega || !tau) fail(Errc::invalid, "missing representation");
  require_scalar_commutant_ibn();
  EndoConjugacyResult out;

  if (omega->n() != tau->n()) {
    out.verdict = EndoConjugacyResult::Verdict::not_conjugate;
    out.reason = "generator counts differ; the scalar commutant has invariant basis number";
    return out;
  }
  unsigned m_omega = multiplicity(*omega);
  unsigned m_tau = multiplicity(*tau);
  if (m_omega != m_tau) {
    out.verdict = EndoConjugacyResult::Verdict::not_conjugate;
    out.reason = "multiplicity differs (" + std::to_string(m_omega) + " vs " +
                 std::to_string(m_tau) +
                 ") and is invariant under scalar quasifree equivalence";
    return out;
  }

  if (supplied) {
    if (!supplied->U.is_scalar()) {
      out.verdict = EndoConjugacyResult::Verdict::unknown;
      out.reason = "supplied witness has operator-valued entries; conjugacy here requires a "
                   "scalar matrix (the relative commutant is the scalars)";
      return out;
    }
    out.report = verify_quasifree(*omega, *tau, *supplied, depth);
    if (out.report.passed()) {
      out.witness = supplied;
      out.verdict = structurally_conjugate(*omega, *tau, *supplied)
                        ? EndoConjugacyResult::Verdict::conjugate
                        : EndoConjugacyResult::Verdict::depth_certified;
    } else {
      out.verdict = EndoConjugacyResult::Verdict::unknown;
      out.reason = "supplied witness refuted exactly; this rejects the witness, not the "
                   "conjugacy";
    }
    return out;
  }

  if (omega->pure_shift() && tau->pure_shift()) {
    if (!omega->conj_phases().empty() || !tau->conj_phases().empty()) {
      out.verdict = EndoConjugacyResult::Verdict::unknown;
      out.reason = "pure shifts with conj phases are unitarily equivalent, but the "
                   "intertwining unitary has no finite-phase presentation in this witness "
                   "class; supply a witness";
      return out;
    }
    ScalarMatrix u = matrix_mul(matrix_adjoint(twist_or_identity(*tau)),
                                twist_or_identity(*omega));
    QuasifreeWitness w{nullptr, FreeWitness::scalar(std::move(u))};
    out.report = verify_quasifree(*omega, *tau, w, depth);
    if (!out.report.passed())
      fail(Errc::internal, "structural pure-shift witness failed its own verification");
    out.witness = std::move(w);
    out.verdict = EndoConjugacyResult::Verdict::conjugate;
    out.reason = "equal multiplicity pure shifts; a Fock multiple is determined by its "
                 "multiplicity up to unitary equivalence";
    return out;
  }

  out.verdict = EndoConjugacyResult::Verdict::unknown;
  out.reason = "representations with essential blocks are not decided without a witness; "
               "scalar quasifree classification of cycle representations is not available";
  return out;
}

VerificationReport intertwiner_check(const OperatorExpr& x, const Endomorphism& alpha,
                                     unsigned depth) {
  const Representation& rep = *alpha.rep;
  VerificationReport report;
  report.depth = depth;
  Int bound = rep.count_upto(depth);

  // Precompute X e_r for every tested r.
  std::map<Int, RankVector> x_images;
  for (Int r = 0; r < bound; ++r) x_images.emplace(r, x.apply(RankVector::unit(r)));

  CheckLine line{"intertwines-rank-one", 0, true};
  for (Int k = 0; k < bound && line.pass; ++k) {
    for (Int b = 0; b < bound && line.pass; ++b) {
      SparseOperator a = SparseOperator::rank_one(rep.unrank(k), rep.unrank(b));
      SparseOperator alpha_a = endo_apply(alpha, a);
      for (Int r = 0; r < bound; ++r) {
        ++line.vectors;
        // lhs = X (a e_r); a e_r = [r = b] e_k.
        RankVector lhs = (r == b) ? x_images.at(k) : RankVector();
        RankVector rhs =
            rep.to_ranks(alpha_a.apply(rep.to_names(x_images.at(r))));
        if (lhs != rhs) {
          line.pass = false;
          report.counterexample = Counterexample{
              "intertwines-rank-one with a=|" + k.get_str() + "><" + b.get_str() + "|", r,
              rep.unrank(r).str(), lhs.str(), rhs.str()};
          break;
        }
      }
    }
  }
  report.checks.push_back(std::move(line));
  return report;
}

bool GammaConjugationResult::agree() const {
  if (direct.passed() != via_witness.passed()) return false;
  if (direct.passed()) return true;
  if (!direct.counterexample || !via_witness.counterexample) return false;
  const Counterexample& a = *direct.counterexample;
  const Counterexample& b = *via_witness.counterexample;
  return a.check == b.check && a.rank == b.rank && a.lhs == b.lhs && a.rhs == b.rhs;
}

GammaConjugationResult gamma_conjugation_check(RepPtr omega, RepPtr tau, BasisUnitaryPtr w,
                                               const ScalarMatrix& u, unsigned depth) {
  if (!omega || !tau) fail(Errc::invalid, "missing representation");
  if (omega->n() != tau->n()) fail(Errc::rank_mismatch, "rank mismatch");
  unsigned n = omega->n();
  if (!matrix_is_unitary(u) || u.size() != n) fail(Errc::not_unitary, "not unitary");

  GammaConjugationResult out;

  // Route one: push gamma_U through the symbolic algebra, evaluate in tau,
  // conjugate by W.
  out.direct.depth = depth;
  Int bound = omega->count_upto(depth);
  for (Letter i = 1; i <= n; ++i) {
    AlgebraElement gi = gamma_u(AlgebraElement::generator(n, i), u);
    CheckLine line{"identity[i=" + std::to_string(i) + "]", 0, true};
    for (Int r = 0; r < bound; ++r) {
      ++line.vectors;
      RankVector e = RankVector::unit(r);
      RankVector lhs = omega->gen(i, e);
      RankVector pulled = w ? w->apply_adjoint(e) : e;
      SparseVector named = tau->to_names(pulled);
      RankVector rhs = tau->to_ranks(evaluate(gi, *tau, named));
      if (w) rhs = w->apply(rhs);
      if (lhs != rhs) {
        line.pass = false;
        if (!out.direct.counterexample)
          out.direct.counterexample = Counterexample{line.name, r, omega->unrank(r).str(),
                                                     lhs.str(), rhs.str()};
        break;
      }
    }
    out.direct.checks.push_back(std::move(line));
  }

  // Route two: the same statement as a quasifree witness.
  QuasifreeWitness q{std::move(w), FreeWitness::scalar(u)};
  out.via_witness = verify_quasifree(*omega, *tau, q, depth);
  return out;
}

}  // namespace entk
