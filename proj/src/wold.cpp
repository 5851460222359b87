// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#include "wold.hpp"

#include <memory>

#include "algebra.hpp"
#include "error.hpp"

namespace entk {

std::vector<BasisName> defect_basis(const Representation& rep, unsigned depth) {
  AlgebraElement p = defect_element(rep.n());
  std::vector<BasisName> out;
  for (const BasisName& name : rep.names_upto(depth)) {
    SparseVector e = SparseVector::unit(name);
    if (evaluate(p, rep, e) == e) out.push_back(name);
  }
  return out;
}

unsigned multiplicity(const Representation& rep) {
  return static_cast<unsigned>(rep.fock_block_count());
}

WoldReport wold(const Representation& rep, unsigned scan_depth) {
  WoldReport report;
  report.scan_depth = scan_depth;
  for (std::size_t b = 0; b < rep.blocks().size(); ++b) {
    if (rep.blocks()[b].kind == Block::Kind::fock)
      report.shift_block_indices.push_back(b);
    else
      report.essential_block_indices.push_back(b);
  }
  report.multiplicity = multiplicity(rep);
  report.defect_names = defect_basis(rep, scan_depth);

  // Reconstruction: essential blocks (in order), then the Fock multiple,
  // with twist kept and conj phases carried across by name.
  std::vector<Block> blocks;
  std::vector<std::size_t> old_index;  // reconstruction block -> original block
  for (std::size_t b : report.essential_block_indices) {
    blocks.push_back(rep.blocks()[b]);
    old_index.push_back(b);
  }
  for (std::size_t b : report.shift_block_indices) {
    blocks.push_back(rep.blocks()[b]);
    old_index.push_back(b);
  }
  std::vector<std::size_t> new_index(rep.blocks().size());
  for (std::size_t nb = 0; nb < old_index.size(); ++nb) new_index[old_index[nb]] = nb;

  Representation plain(rep.n(), blocks, rep.twist(), {});
  std::map<Int, Scalar> phases;
  for (const auto& [r, z] : rep.conj_phases()) {
    BasisName name = rep.unrank(r);
    name.block = new_index[name.block];
    phases.emplace(plain.rank(name), z);
  }
  report.reconstruction = std::make_shared<Representation>(
      rep.n(), std::move(blocks), rep.twist(), std::move(phases));
  return report;
}

}  // namespace entk
