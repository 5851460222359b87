// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#include "entk.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "error.hpp"
#include "serialize.hpp"
#include "wold.hpp"

using namespace entk;

struct entk_rep {
  RepPtr rep;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
}

int status_of(Errc code) {
  switch (code) {
    case Errc::parse: return ENTK_ERR_PARSE;
    case Errc::invalid: return ENTK_ERR_INVALID;
    case Errc::rank_mismatch: return ENTK_ERR_RANK_MISMATCH;
    case Errc::not_unitary: return ENTK_ERR_NOT_UNITARY;
    case Errc::not_essential: return ENTK_ERR_NOT_ESSENTIAL;
    case Errc::internal: return ENTK_ERR_INTERNAL;
  }
  return ENTK_ERR_INTERNAL;
}

template <typename Fn>
int guarded(char** err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    set_err(err, e.what());
    return status_of(e.code());
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return ENTK_ERR_INTERNAL;
  }
}

// Deterministic key/value report text.
class ReportText {
 public:
  void kv(const std::string& key, const std::string& value) {
    buf_ += key;
    buf_ += ": ";
    buf_ += value;
    buf_ += '\n';
  }
  void verification(const VerificationReport& r) {
    kv("verify.depth", std::to_string(r.depth));
    for (const CheckLine& line : r.checks) {
      kv("verify.check",
         line.name + " vectors=" + std::to_string(line.vectors) +
             (line.pass ? " pass" : " FAIL"));
    }
    kv("verify.result", r.passed() ? "pass" : "fail");
    if (r.counterexample) {
      const Counterexample& c = *r.counterexample;
      kv("counterexample.check", c.check);
      kv("counterexample.rank", c.rank.get_str());
      kv("counterexample.basis", c.basis_name);
      kv("counterexample.lhs", c.lhs);
      kv("counterexample.rhs", c.rhs);
    }
  }
  std::string str() const { return buf_; }

 private:
  std::string buf_;
};

const Representation& deref(const entk_rep* rep) {
  if (!rep || !rep->rep) fail(Errc::invalid, "null representation handle");
  return *rep->rep;
}

RepPtr share(const entk_rep* rep) {
  if (!rep || !rep->rep) fail(Errc::invalid, "null representation handle");
  return rep->rep;
}

std::string witness_doc(const QuasifreeWitness& q, const WitnessEnv& env) {
  return wrap_document(witness_to_json(q, env)).dump();
}

}  // namespace

extern "C" {

const char* entk_version(void) { return "1.0.0"; }

void entk_string_free(char* s) { std::free(s); }

void entk_rep_free(entk_rep* rep) { delete rep; }

int entk_rep_parse(const char* json, entk_rep** out, char** err) {
  return guarded(err, [&]() {
    if (!json || !out) fail(Errc::invalid, "null argument");
    Json j = parse_document(json);
    auto* handle = new entk_rep{rep_from_json(j)};
    *out = handle;
    return ENTK_OK;
  });
}

int entk_rep_to_json(const entk_rep* rep, char** out, char** err) {
  return guarded(err, [&]() {
    if (!out) fail(Errc::invalid, "null argument");
    *out = dup_string(wrap_document(rep_to_json(deref(rep))).dump());
    return ENTK_OK;
  });
}

int entk_rep_multiplicity(const entk_rep* rep, unsigned* out, char** err) {
  return guarded(err, [&]() {
    if (!out) fail(Errc::invalid, "null argument");
    *out = multiplicity(deref(rep));
    return ENTK_OK;
  });
}

int entk_rep_defect(const entk_rep* rep, unsigned depth, char** names_json, char** err) {
  return guarded(err, [&]() {
    if (!names_json) fail(Errc::invalid, "null argument");
    Json names = Json::array();
    for (const BasisName& b : defect_basis(deref(rep), depth))
      names.push_back(name_to_json(b));
    *names_json = dup_string(wrap_document(Json{{"defect", std::move(names)}}).dump());
    return ENTK_OK;
  });
}

int entk_mult_report(const entk_rep* rep, char** report, char** err) {
  return guarded(err, [&]() {
    if (!report) fail(Errc::invalid, "null argument");
    ReportText t;
    t.kv("multiplicity", std::to_string(multiplicity(deref(rep))));
    *report = dup_string(t.str());
    return ENTK_OK;
  });
}

int entk_wold_report(const entk_rep* rep, unsigned scan_depth, char** report, char** err) {
  return guarded(err, [&]() {
    if (!report) fail(Errc::invalid, "null argument");
    WoldReport w = wold(deref(rep), scan_depth);
    ReportText t;
    t.kv("multiplicity", std::to_string(w.multiplicity));
    auto list = [](const std::vector<std::size_t>& v) {
      std::string out = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
      }
      return out + "]";
    };
    t.kv("shift-blocks", list(w.shift_block_indices));
    t.kv("essential-blocks", list(w.essential_block_indices));
    t.kv("defect.scan-depth", std::to_string(w.scan_depth));
    Json names = Json::array();
    for (const BasisName& b : w.defect_names) names.push_back(name_to_json(b));
    t.kv("defect.names", names.dump());
    t.kv("reconstruction", wrap_document(rep_to_json(*w.reconstruction)).dump());
    *report = dup_string(t.str());
    return ENTK_OK;
  });
}

int entk_equiv(const entk_rep* omega, const entk_rep* tau, const char* mode, unsigned depth,
               int* decision, char** witness_json, char** report, char** err) {
  return guarded(err, [&]() {
    if (!mode || !decision || !report) fail(Errc::invalid, "null argument");
    if (witness_json) *witness_json = nullptr;
    RepPtr o = share(omega);
    RepPtr t = share(tau);
    WitnessEnv env{o, t};
    ReportText text;
    std::string mode_s = mode;

    if (mode_s == "bh-quasifree") {
      BhDecision d = decide_bh_quasifree(o, t);
      text.kv("multiplicity.omega", std::to_string(d.mult_omega));
      text.kv("multiplicity.tau", std::to_string(d.mult_tau));
      if (!d.equivalent) {
        text.kv("decision", "not-equivalent");
        text.kv("reason", "multiplicities differ");
        *decision = ENTK_DECIDED_NO;
      } else {
        text.kv("decision", "equivalent");
        VerificationReport ver = verify_quasifree(*o, *t, *d.witness, depth);
        text.verification(ver);
        if (!ver.passed())
          fail(Errc::internal, "constructed witness failed its own verification");
        std::string doc = witness_doc(*d.witness, env);
        text.kv("witness", doc);
        if (witness_json) *witness_json = dup_string(doc);
        *decision = ENTK_DECIDED_YES;
      }
    } else if (mode_s == "scalar-free") {
      ScalarFreeResult r = scalar_free_check(o, t, depth);
      if (r.verified) {
        text.kv("decision", r.exact ? "scalar-verified-exact" : "scalar-verified-at-depth");
        text.verification(r.report);
        QuasifreeWitness q{nullptr, *r.witness};
        std::string doc = witness_doc(q, env);
        text.kv("witness", doc);
        if (witness_json) *witness_json = dup_string(doc);
        *decision = r.exact ? ENTK_DECIDED_YES : ENTK_UNDECIDED;
      } else {
        text.kv("decision", "refuted");
        text.verification(r.report);
        *decision = ENTK_DECIDED_NO;
      }
    } else {
      fail(Errc::invalid, "mode must be 'bh-quasifree' or 'scalar-free'");
    }
    *report = dup_string(text.str());
    return ENTK_OK;
  });
}

int entk_verify(const entk_rep* omega, const entk_rep* tau, const char* witness_json,
                unsigned depth, int* decision, char** report, char** err) {
  return guarded(err, [&]() {
    if (!witness_json || !decision || !report) fail(Errc::invalid, "null argument");
    RepPtr o = share(omega);
    RepPtr t = share(tau);
    QuasifreeWitness q = witness_from_json(parse_document(witness_json), WitnessEnv{o, t});
    VerificationReport ver = verify_quasifree(*o, *t, q, depth);
    ReportText text;
    text.kv("decision", ver.passed() ? "verified" : "refuted");
    text.verification(ver);
    *decision = ver.passed() ? ENTK_DECIDED_YES : ENTK_DECIDED_NO;
    *report = dup_string(text.str());
    return ENTK_OK;
  });
}

int entk_endo_equal(const entk_rep* omega, const entk_rep* tau, unsigned depth, int* decision,
                    char** report, char** err) {
  return guarded(err, [&]() {
    if (!decision || !report) fail(Errc::invalid, "null argument");
    RepPtr o = share(omega);
    RepPtr t = share(tau);
    EndoEqualResult r = decide_endo_equal(o, t, depth);
    ReportText text;
    switch (r.verdict) {
      case EndoEqualResult::Verdict::equal:
        text.kv("decision", "equal");
        *decision = ENTK_DECIDED_YES;
        break;
      case EndoEqualResult::Verdict::depth_certified:
        text.kv("decision", "equal-at-depth");
        *decision = ENTK_UNDECIDED;
        break;
      case EndoEqualResult::Verdict::not_equal:
        text.kv("decision", "not-equal");
        *decision = ENTK_DECIDED_NO;
        break;
    }
    if (!r.reason.empty()) text.kv("reason", r.reason);
    if (r.witness) {
      QuasifreeWitness q{nullptr, *r.witness};
      text.kv("witness", witness_doc(q, WitnessEnv{o, t}));
    }
    if (!r.report.checks.empty()) text.verification(r.report);
    if (r.witness_op) {
      text.kv("discrepancy.operator", r.witness_op->str());
      text.kv("discrepancy.image.omega", r.image_omega);
      text.kv("discrepancy.image.tau", r.image_tau);
    }
    *report = dup_string(text.str());
    return ENTK_OK;
  });
}

int entk_endo_conjugate(const entk_rep* omega, const entk_rep* tau, const char* witness_json,
                        unsigned depth, int* decision, char** report, char** err) {
  return guarded(err, [&]() {
    if (!decision || !report) fail(Errc::invalid, "null argument");
    RepPtr o = share(omega);
    RepPtr t = share(tau);
    std::optional<QuasifreeWitness> supplied;
    if (witness_json)
      supplied = witness_from_json(parse_document(witness_json), WitnessEnv{o, t});
    EndoConjugacyResult r = decide_endo_conjugate(o, t, supplied, depth);
    ReportText text;
    switch (r.verdict) {
      case EndoConjugacyResult::Verdict::conjugate:
        text.kv("decision", "conjugate");
        *decision = ENTK_DECIDED_YES;
        break;
      case EndoConjugacyResult::Verdict::depth_certified:
        text.kv("decision", "conjugate-at-depth");
        *decision = ENTK_UNDECIDED;
        break;
      case EndoConjugacyResult::Verdict::not_conjugate:
        text.kv("decision", "not-conjugate");
        *decision = ENTK_DECIDED_NO;
        break;
      case EndoConjugacyResult::Verdict::unknown:
        text.kv("decision", "unknown");
        *decision = ENTK_UNDECIDED;
        break;
    }
    if (!r.reason.empty()) text.kv("reason", r.reason);
    if (r.witness) text.kv("witness", witness_doc(*r.witness, WitnessEnv{o, t}));
    if (!r.report.checks.empty()) text.verification(r.report);
    *report = dup_string(text.str());
    return ENTK_OK;
  });
}

int entk_intertwiner(const char* expr_json, const entk_rep* rep, unsigned depth, int* decision,
                     char** report, char** err) {
  return guarded(err, [&]() {
    if (!expr_json || !decision || !report) fail(Errc::invalid, "null argument");
    RepPtr r = share(rep);
    Json doc = parse_document(expr_json);
    OperatorExpr x = expr_from_json(doc.contains("expr") ? doc.at("expr") : doc,
                                    WitnessEnv{r, nullptr}, nullptr);
    VerificationReport ver = intertwiner_check(x, Endomorphism{r}, depth);
    ReportText text;
    text.kv("decision", ver.passed() ? "intertwines" : "refuted");
    text.verification(ver);
    *decision = ver.passed() ? ENTK_DECIDED_YES : ENTK_DECIDED_NO;
    *report = dup_string(text.str());
    return ENTK_OK;
  });
}

int entk_gamma_conjugation(const entk_rep* omega, const entk_rep* tau, const char* witness_json,
                           unsigned depth, int* decision, char** report, char** err) {
  return guarded(err, [&]() {
    if (!witness_json || !decision || !report) fail(Errc::invalid, "null argument");
    RepPtr o = share(omega);
    RepPtr t = share(tau);
    QuasifreeWitness q = witness_from_json(parse_document(witness_json), WitnessEnv{o, t});
    if (!q.U.is_scalar())
      fail(Errc::invalid, "gamma conjugation requires a scalar-flavored witness");
    GammaConjugationResult r =
        gamma_conjugation_check(o, t, q.W, q.U.scalar_entries(), depth);
    if (!r.agree())
      fail(Errc::internal, "automorphism route and witness route disagree");
    ReportText text;
    text.kv("decision", r.direct.passed() ? "verified" : "refuted");
    text.kv("routes-agree", "yes");
    text.verification(r.via_witness);
    *decision = r.direct.passed() ? ENTK_DECIDED_YES : ENTK_DECIDED_NO;
    *report = dup_string(text.str());
    return ENTK_OK;
  });
}

int entk_algebra_eval(const char* elem_json, const entk_rep* rep, const char* vec_json,
                      char** result_vec_json, char** err) {
  return guarded(err, [&]() {
    if (!elem_json || !vec_json || !result_vec_json) fail(Errc::invalid, "null argument");
    const Representation& r = deref(rep);
    AlgebraElement a = elem_from_json(parse_document(elem_json));
    SparseVector v = vec_from_json(parse_document(vec_json), r);
    SparseVector out = evaluate(a, r, v);
    *result_vec_json = dup_string(wrap_document(vec_to_json(out)).dump());
    return ENTK_OK;
  });
}

int entk_module_check_basis(const char* basis_json, int* decision, char** report, char** err) {
  return guarded(err, [&]() {
    if (!basis_json || !decision || !report) fail(Errc::invalid, "null argument");
    ModuleBasisDoc doc = module_basis_from_json(parse_document(basis_json));
    ReportText text;
    bool ortho = check_orthonormal(doc.vectors);
    bool basis = false;
    if (ortho && doc.vectors.size() == doc.n) {
      ModuleMatrix u = basis_to_unitary(doc.vectors);
      basis = check_unitary_matrix(u);
    }
    text.kv("orthonormal", ortho ? "yes" : "no");
    text.kv("basis", basis ? "yes" : "no");
    *decision = basis ? ENTK_DECIDED_YES : ENTK_DECIDED_NO;
    *report = dup_string(text.str());
    return ENTK_OK;
  });
}

int entk_module_to_unitary(const char* basis_json, char** matrix_json, char** report,
                           char** err) {
  return guarded(err, [&]() {
    if (!basis_json || !matrix_json || !report) fail(Errc::invalid, "null argument");
    ModuleBasisDoc doc = module_basis_from_json(parse_document(basis_json));
    if (doc.vectors.size() != doc.n)
      fail(Errc::invalid, "a basis of A^n must have exactly n vectors");
    ModuleMatrix u = basis_to_unitary(doc.vectors);
    std::string out = wrap_document(module_matrix_to_json(u)).dump();
    ReportText text;
    text.kv("unitary", out);
    *matrix_json = dup_string(out);
    *report = dup_string(text.str());
    return ENTK_OK;
  });
}

namespace {

int ibn_common(const K0Data& k, int* has_ibn, char** order, char** report) {
  std::optional<Int> ord = unit_order(k);
  bool b = ibn(k);
  ReportText text;
  text.kv("unit-order", ord ? ord->get_str() : "infinite");
  text.kv("ibn", b ? "true" : "false");
  if (has_ibn) *has_ibn = b ? 1 : 0;
  if (order) *order = dup_string(ord ? ord->get_str() : "infinite");
  if (report) *report = dup_string(text.str());
  return ENTK_OK;
}

}  // namespace

int entk_ibn_k0(const char* k0_json, int* has_ibn, char** order, char** report, char** err) {
  return guarded(err, [&]() {
    if (!k0_json) fail(Errc::invalid, "null argument");
    K0Data k = k0_from_json(parse_document(k0_json));
    return ibn_common(k, has_ibn, order, report);
  });
}

int entk_ibn_fd(const char* fd_json, int* has_ibn, char** order, char** report, char** err) {
  return guarded(err, [&]() {
    if (!fd_json) fail(Errc::invalid, "null argument");
    FDAlgebra alg = fd_from_json(parse_document(fd_json));
    return ibn_common(fd_to_k0(alg), has_ibn, order, report);
  });
}

}  // extern "C"
