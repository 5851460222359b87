// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#include "serialize.hpp"

#include "error.hpp"

namespace entk {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) fail(Errc::parse, std::string("expected an object with field '") + name + "'");
  auto it = j.find(name);
  if (it == j.end()) fail(Errc::parse, std::string("missing field '") + name + "'");
  return *it;
}

unsigned uint_field(const Json& j, const char* name) {
  const Json& f = field(j, name);
  if (!f.is_number_unsigned()) fail(Errc::parse, std::string("field '") + name + "' must be a nonnegative integer");
  return f.get<unsigned>();
}

std::string string_field(const Json& j, const char* name) {
  const Json& f = field(j, name);
  if (!f.is_string()) fail(Errc::parse, std::string("field '") + name + "' must be a string");
  return f.get<std::string>();
}

Word word_from_json(const Json& j, const char* name) {
  if (!j.is_array()) fail(Errc::parse, std::string("field '") + name + "' must be an array of letters");
  std::vector<Letter> letters;
  for (const Json& l : j) {
    if (!l.is_number_unsigned() || l.get<unsigned long long>() < 1)
      fail(Errc::parse, std::string("field '") + name + "' must hold positive integers");
    letters.push_back(l.get<Letter>());
  }
  return Word(std::move(letters));
}

Json word_to_json(const Word& w) {
  Json out = Json::array();
  for (Letter l : w.letters()) out.push_back(l);
  return out;
}

Int int_from_json(const Json& j, const char* what) {
  if (j.is_number_unsigned()) return Int(j.get<unsigned long>());
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Int v;
    if (mpz_set_str(v.get_mpz_t(), j.get<std::string>().c_str(), 10) != 0)
      fail(Errc::parse, std::string(what) + ": bad integer literal");
    return v;
  }
  fail(Errc::parse, std::string(what) + " must be an integer");
}

ScalarMatrix scalar_matrix_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.empty())
    fail(Errc::parse, std::string(what) + " must be a nonempty array of rows");
  ScalarMatrix m;
  for (const Json& row : j) {
    if (!row.is_array()) fail(Errc::parse, std::string(what) + " rows must be arrays");
    std::vector<Scalar> r;
    for (const Json& cell : row) {
      if (!cell.is_string())
        fail(Errc::parse, std::string(what) + " entries must be scalar strings");
      r.push_back(Scalar::parse(cell.get<std::string>()));
    }
    m.push_back(std::move(r));
  }
  return m;
}

Json scalar_matrix_to_json(const ScalarMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const Scalar& c : row) r.push_back(c.str());
    out.push_back(std::move(r));
  }
  return out;
}

std::map<Int, Scalar> phases_from_json(const Json& j) {
  if (!j.is_object()) fail(Errc::parse, "'phases' must be an object keyed by rank");
  std::map<Int, Scalar> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    Int r;
    if (mpz_set_str(r.get_mpz_t(), it.key().c_str(), 10) != 0 || r < 0)
      fail(Errc::parse, "phase key must be a nonnegative integer: '" + it.key() + "'");
    if (!it.value().is_string()) fail(Errc::parse, "phase values must be scalar strings");
    out.emplace(std::move(r), Scalar::parse(it.value().get<std::string>()));
  }
  return out;
}

Json phases_to_json(const std::map<Int, Scalar>& phases) {
  Json out = Json::object();
  for (const auto& [r, z] : phases) out[r.get_str()] = z.str();
  return out;
}

}  // namespace

Json parse_document(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::parse, "malformed JSON");
  if (!j.is_object()) fail(Errc::parse, "document must be a JSON object");
  auto it = j.find("format_version");
  if (it == j.end()) fail(Errc::parse, "missing field 'format_version'");
  if (!it->is_number_integer() || it->get<int>() != kFormatVersion)
    fail(Errc::parse, "unsupported format_version");
  return j;
}

Json wrap_document(Json payload) {
  payload["format_version"] = kFormatVersion;
  return payload;
}

Json rep_to_json(const Representation& rep) {
  Json j;
  j["n"] = rep.n();
  Json blocks = Json::array();
  for (const Block& b : rep.blocks()) {
    Json bj;
    if (b.kind == Block::Kind::fock) {
      bj["kind"] = "fock";
    } else {
      bj["kind"] = "cycle";
      bj["word"] = word_to_json(b.cycle_word);
    }
    blocks.push_back(std::move(bj));
  }
  j["blocks"] = std::move(blocks);
  if (rep.twist()) j["twist"] = scalar_matrix_to_json(*rep.twist());
  if (!rep.conj_phases().empty()) j["conj"] = Json{{"phases", phases_to_json(rep.conj_phases())}};
  return j;
}

RepPtr rep_from_json(const Json& j) {
  unsigned n = uint_field(j, "n");
  const Json& bj = field(j, "blocks");
  if (!bj.is_array() || bj.empty())
    fail(Errc::parse, "field 'blocks' must be a nonempty array");
  std::vector<Block> blocks;
  for (const Json& b : bj) {
    std::string kind = string_field(b, "kind");
    if (kind == "fock") {
      blocks.push_back(Block::fock());
    } else if (kind == "cycle") {
      blocks.push_back(Block::cycle(word_from_json(field(b, "word"), "word")));
    } else {
      fail(Errc::parse, "block kind must be 'fock' or 'cycle'");
    }
  }
  std::optional<ScalarMatrix> twist;
  if (j.contains("twist")) twist = scalar_matrix_from_json(j.at("twist"), "twist");
  std::map<Int, Scalar> phases;
  if (j.contains("conj")) phases = phases_from_json(field(j.at("conj"), "phases"));
  return std::make_shared<Representation>(n, std::move(blocks), std::move(twist),
                                          std::move(phases));
}

Json elem_to_json(const AlgebraElement& a) {
  Json j;
  j["n"] = a.n();
  Json terms = Json::array();
  for (const auto& [key, c] : a.terms()) {
    Json t;
    t["alpha"] = word_to_json(key.first);
    t["beta"] = word_to_json(key.second);
    t["coef"] = c.str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

AlgebraElement elem_from_json(const Json& j) {
  unsigned n = uint_field(j, "n");
  AlgebraElement out(n);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) fail(Errc::parse, "field 'terms' must be an array");
  for (const Json& t : terms) {
    Word alpha = word_from_json(field(t, "alpha"), "alpha");
    Word beta = word_from_json(field(t, "beta"), "beta");
    if (!alpha.valid_for(n) || !beta.valid_for(n))
      fail(Errc::parse, "term letter out of range");
    out.add_term(alpha, beta, Scalar::parse(string_field(t, "coef")));
  }
  return out;
}

Json name_to_json(const BasisName& b) {
  Json j;
  j["block"] = b.block;
  if (b.cyclic) j["k"] = b.k;
  j["word"] = word_to_json(b.word);
  return j;
}

BasisName name_from_json(const Json& j) {
  BasisName b;
  b.block = uint_field(j, "block");
  if (j.contains("k")) {
    b.cyclic = true;
    b.k = uint_field(j, "k");
  }
  b.word = word_from_json(field(j, "word"), "word");
  return b;
}

Json vec_to_json(const SparseVector& v) {
  Json entries = Json::array();
  for (const auto& [name, c] : v.entries()) {
    Json e;
    e["name"] = name_to_json(name);
    e["coef"] = c.str();
    entries.push_back(std::move(e));
  }
  return Json{{"entries", std::move(entries)}};
}

SparseVector vec_from_json(const Json& j, const Representation& rep) {
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) fail(Errc::parse, "field 'entries' must be an array");
  SparseVector out;
  for (const Json& e : entries) {
    BasisName name = name_from_json(field(e, "name"));
    if (!rep.canonical(name))
      fail(Errc::parse, "entry name " + name.str() + " is not canonical for this representation");
    out.add_term(name, Scalar::parse(string_field(e, "coef")));
  }
  return out;
}

Json expr_to_json(const OperatorExpr& e, const WitnessEnv& env, const BasisUnitaryPtr& w) {
  switch (e.kind()) {
    case OperatorExpr::Kind::scalar:
      return Json{{"scalar", e.scalar_value().str()}};
    case OperatorExpr::Kind::gen:
    case OperatorExpr::Kind::gen_adj: {
      std::string ref;
      if (e.rep() == env.omega)
        ref = "omega";
      else if (e.rep() == env.tau)
        ref = "tau";
      else
        fail(Errc::invalid, "expression references a representation outside the document");
      Json inner{{"rep", ref}, {"i", e.letter()}};
      return Json{{e.kind() == OperatorExpr::Kind::gen ? "gen" : "genAdj", std::move(inner)}};
    }
    case OperatorExpr::Kind::basis_u:
    case OperatorExpr::Kind::basis_u_adj: {
      if (e.unitary() != w)
        fail(Errc::invalid, "expression references a basis unitary outside the document");
      return Json{{e.kind() == OperatorExpr::Kind::basis_u ? "basisU" : "basisUAdj", "W"}};
    }
    case OperatorExpr::Kind::sum:
    case OperatorExpr::Kind::prod: {
      Json arr = Json::array();
      for (const OperatorExpr& c : e.children()) arr.push_back(expr_to_json(c, env, w));
      return Json{{e.kind() == OperatorExpr::Kind::sum ? "sum" : "prod", std::move(arr)}};
    }
    case OperatorExpr::Kind::block_sum:
      fail(Errc::invalid, "blockwise-sum expressions have no document form");
  }
  fail(Errc::internal, "unreachable");
}

OperatorExpr expr_from_json(const Json& j, const WitnessEnv& env, const BasisUnitaryPtr& w) {
  if (j.is_string()) return OperatorExpr::scalar(Scalar::parse(j.get<std::string>()));
  if (!j.is_object() || j.size() != 1)
    fail(Errc::parse, "expression must be an object with one key");
  const std::string key = j.begin().key();
  const Json& val = j.begin().value();
  auto rep_of = [&](const Json& node) -> RepPtr {
    std::string ref = string_field(node, "rep");
    if (ref == "omega") return env.omega;
    if (ref == "tau") return env.tau;
    fail(Errc::parse, "expression rep must be 'omega' or 'tau'");
  };
  if (key == "scalar") {
    if (!val.is_string()) fail(Errc::parse, "'scalar' takes a string");
    return OperatorExpr::scalar(Scalar::parse(val.get<std::string>()));
  }
  if (key == "gen") return OperatorExpr::gen(rep_of(val), uint_field(val, "i"));
  if (key == "genAdj") return OperatorExpr::gen_adj(rep_of(val), uint_field(val, "i"));
  if (key == "basisU" || key == "basisUAdj") {
    if (!w) fail(Errc::parse, "expression references W but the document has no W");
    return key == "basisU" ? OperatorExpr::basis_u(w) : OperatorExpr::basis_u_adj(w);
  }
  if (key == "sum" || key == "prod") {
    if (!val.is_array() || val.empty()) fail(Errc::parse, "'" + key + "' takes a nonempty array");
    std::vector<OperatorExpr> children;
    for (const Json& c : val) children.push_back(expr_from_json(c, env, w));
    return key == "sum" ? OperatorExpr::sum(std::move(children))
                        : OperatorExpr::prod(std::move(children));
  }
  fail(Errc::parse, "unknown expression node '" + key + "'");
}

Json witness_to_json(const QuasifreeWitness& q, const WitnessEnv& env) {
  Json j;
  if (q.W) {
    Json wj;
    switch (q.W->kind()) {
      case BasisUnitary::Kind::rank:
        wj["matching"] = "rank";
        break;
      case BasisUnitary::Kind::wold:
        wj["matching"] = "wold";
        break;
      case BasisUnitary::Kind::defect:
        wj["matching"] = "defect";
        break;
      default:
        fail(Errc::invalid, "composed basis unitaries have no document form");
    }
    if (!q.W->phases().empty()) wj["phases"] = phases_to_json(q.W->phases());
    j["W"] = std::move(wj);
  }
  Json uj;
  if (q.U.is_scalar()) {
    uj["flavor"] = "scalar";
    uj["entries"] = scalar_matrix_to_json(q.U.scalar_entries());
  } else {
    uj["flavor"] = "bounded";
    Json rows = Json::array();
    for (Letter jj = 1; jj <= q.U.n(); ++jj) {
      Json row = Json::array();
      for (Letter i = 1; i <= q.U.n(); ++i)
        row.push_back(expr_to_json(q.U.entry(jj, i), env, q.W));
      rows.push_back(std::move(row));
    }
    uj["entries"] = std::move(rows);
  }
  j["U"] = std::move(uj);
  return j;
}

QuasifreeWitness witness_from_json(const Json& j, const WitnessEnv& env) {
  if (!env.omega || !env.tau) fail(Errc::invalid, "witness context needs both representations");
  BasisUnitaryPtr w;
  if (j.contains("W")) {
    const Json& wj = j.at("W");
    std::string matching = wj.contains("matching") ? string_field(wj, "matching") : "rank";
    std::map<Int, Scalar> phases;
    if (wj.contains("phases")) phases = phases_from_json(wj.at("phases"));
    if (matching == "rank")
      w = std::make_shared<BasisUnitary>(
          BasisUnitary::rank_matching(env.tau, env.omega, std::move(phases)));
    else if (matching == "wold")
      w = std::make_shared<BasisUnitary>(
          BasisUnitary::wold_matching(env.tau, env.omega, std::move(phases)));
    else if (matching == "defect")
      w = std::make_shared<BasisUnitary>(
          BasisUnitary::defect_matching(env.tau, env.omega, std::move(phases)));
    else
      fail(Errc::parse, "matching must be 'rank', 'wold', or 'defect'");
  }
  const Json& uj = field(j, "U");
  std::string flavor = string_field(uj, "flavor");
  if (flavor == "scalar") {
    ScalarMatrix m = scalar_matrix_from_json(field(uj, "entries"), "entries");
    return QuasifreeWitness{std::move(w), FreeWitness::scalar(std::move(m))};
  }
  if (flavor != "bounded") fail(Errc::parse, "flavor must be 'scalar' or 'bounded'");
  const Json& rows = field(uj, "entries");
  unsigned n = env.omega->n();
  if (!rows.is_array() || rows.size() != n)
    fail(Errc::parse, "witness entries must form an n x n array");
  std::vector<std::vector<OperatorExpr>> entries;
  for (const Json& row : rows) {
    if (!row.is_array() || row.size() != n)
      fail(Errc::parse, "witness entries must form an n x n array");
    std::vector<OperatorExpr> r;
    for (const Json& cell : row) r.push_back(expr_from_json(cell, env, w));
    entries.push_back(std::move(r));
  }
  return QuasifreeWitness{std::move(w), FreeWitness::bounded(n, std::move(entries))};
}

Json k0_to_json(const K0Data& k) {
  Json j;
  j["free_rank"] = k.free_rank;
  Json torsion = Json::array();
  for (const Int& t : k.torsion) torsion.push_back(t.get_str());
  j["torsion"] = std::move(torsion);
  Json unit = Json::array();
  for (const Int& u : k.unit) unit.push_back(u.get_str());
  j["unit"] = std::move(unit);
  return j;
}

K0Data k0_from_json(const Json& j) {
  K0Data k;
  k.free_rank = uint_field(j, "free_rank");
  const Json& torsion = field(j, "torsion");
  if (!torsion.is_array()) fail(Errc::parse, "field 'torsion' must be an array");
  for (const Json& t : torsion) k.torsion.push_back(int_from_json(t, "torsion order"));
  const Json& unit = field(j, "unit");
  if (!unit.is_array()) fail(Errc::parse, "field 'unit' must be an array");
  for (const Json& u : unit) k.unit.push_back(int_from_json(u, "unit coordinate"));
  validate_k0(k);
  return k;
}

Json fd_to_json(const FDAlgebra& alg) {
  Json blocks = Json::array();
  for (unsigned s : alg.block_sizes) blocks.push_back(s);
  return Json{{"blocks", std::move(blocks)}};
}

FDAlgebra fd_from_json(const Json& j) {
  const Json& blocks = field(j, "blocks");
  if (!blocks.is_array() || blocks.empty())
    fail(Errc::parse, "field 'blocks' must be a nonempty array");
  FDAlgebra alg;
  for (const Json& b : blocks) {
    if (!b.is_number_unsigned() || b.get<unsigned>() < 1)
      fail(Errc::parse, "block sizes must be positive integers");
    alg.block_sizes.push_back(b.get<unsigned>());
  }
  return alg;
}

Json fd_element_to_json(const FDElement& e) {
  Json out = Json::array();
  for (const ScalarMatrix& m : e.blocks()) out.push_back(scalar_matrix_to_json(m));
  return out;
}

FDElement fd_element_from_json(const Json& j, const FDAlgebra& alg) {
  if (!j.is_array() || j.size() != alg.block_sizes.size())
    fail(Errc::parse, "element must list one matrix per algebra block");
  std::vector<ScalarMatrix> blocks;
  for (std::size_t b = 0; b < alg.block_sizes.size(); ++b)
    blocks.push_back(scalar_matrix_from_json(j[b], "element block"));
  return FDElement(alg, std::move(blocks));
}

Json module_matrix_to_json(const ModuleMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.entries) {
    Json r = Json::array();
    for (const FDElement& e : row) r.push_back(fd_element_to_json(e));
    rows.push_back(std::move(r));
  }
  return Json{{"entries", std::move(rows)}};
}

ModuleBasisDoc module_basis_from_json(const Json& j) {
  ModuleBasisDoc doc;
  doc.algebra = fd_from_json(field(j, "algebra"));
  doc.n = uint_field(j, "n");
  if (doc.n < 1) fail(Errc::parse, "field 'n' must be positive");
  const Json& vectors = field(j, "vectors");
  if (!vectors.is_array() || vectors.empty())
    fail(Errc::parse, "field 'vectors' must be a nonempty array");
  for (const Json& v : vectors) {
    if (!v.is_array() || v.size() != doc.n)
      fail(Errc::parse, "each vector must list n coordinates");
    ModuleVector mv;
    for (const Json& c : v) mv.coords.push_back(fd_element_from_json(c, doc.algebra));
    doc.vectors.push_back(std::move(mv));
  }
  return doc;
}

}  // namespace entk
