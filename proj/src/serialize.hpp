// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "algebra.hpp"
#include "endo.hpp"
#include "module_kit.hpp"
#include "witness.hpp"

namespace entk {

using Json = nlohmann::json;

// Every on-disk document is a JSON object carrying "format_version": 1.
inline constexpr int kFormatVersion = 1;

/// Parses text and checks the version field.
Json parse_document(const std::string& text);
/// Adds the version field to a payload object.
Json wrap_document(Json payload);

Json rep_to_json(const Representation& rep);
RepPtr rep_from_json(const Json& j);

Json elem_to_json(const AlgebraElement& a);
AlgebraElement elem_from_json(const Json& j);

Json name_to_json(const BasisName& b);
BasisName name_from_json(const Json& j);

Json vec_to_json(const SparseVector& v);
/// Names are validated as canonical for `rep`.
SparseVector vec_from_json(const Json& j, const Representation& rep);

/// Rep endpoints a witness document refers to: "omega" is the left
/// representation, "tau" the right one; W maps tau's enumeration onto
/// omega's.
struct WitnessEnv {
  RepPtr omega, tau;
};

Json witness_to_json(const QuasifreeWitness& q, const WitnessEnv& env);
QuasifreeWitness witness_from_json(const Json& j, const WitnessEnv& env);

Json expr_to_json(const OperatorExpr& e, const WitnessEnv& env, const BasisUnitaryPtr& w);
OperatorExpr expr_from_json(const Json& j, const WitnessEnv& env, const BasisUnitaryPtr& w);

Json k0_to_json(const K0Data& k);
K0Data k0_from_json(const Json& j);

Json fd_to_json(const FDAlgebra& alg);
FDAlgebra fd_from_json(const Json& j);

Json fd_element_to_json(const FDElement& e);
FDElement fd_element_from_json(const Json& j, const FDAlgebra& alg);

Json module_matrix_to_json(const ModuleMatrix& m);

struct ModuleBasisDoc {
  FDAlgebra algebra;
  unsigned n = 0;
  std::vector<ModuleVector> vectors;
};
ModuleBasisDoc module_basis_from_json(const Json& j);

}  // namespace entk
