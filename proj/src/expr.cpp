// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#include "expr.hpp"

#include <algorithm>

#include "error.hpp"

namespace entk {

struct BasisUnitary::Parts {
  // wold: sub-representations of the essential and shift blocks, plus the
  // position of each full block inside its part.
  std::shared_ptr<const Representation> src_ess, src_shift, tgt_ess, tgt_shift;
  std::vector<std::size_t> src_part_pos, tgt_part_pos;       // block -> position in part
  std::vector<std::size_t> src_ess_blocks, src_shift_blocks;  // part position -> block
  std::vector<std::size_t> tgt_ess_blocks, tgt_shift_blocks;
  // defect: sorted ranks of the Fock vacua on either side.
  std::vector<Int> src_defect, tgt_defect;
};

namespace {

void split_blocks(const Representation& rep, std::vector<std::size_t>& ess,
                  std::vector<std::size_t>& shift, std::vector<std::size_t>& pos) {
  pos.assign(rep.blocks().size(), 0);
  for (std::size_t b = 0; b < rep.blocks().size(); ++b) {
    if (rep.blocks()[b].kind == Block::Kind::fock) {
      pos[b] = shift.size();
      shift.push_back(b);
    } else {
      pos[b] = ess.size();
      ess.push_back(b);
    }
  }
}

std::shared_ptr<const Representation> sub_rep(const Representation& rep,
                                              const std::vector<std::size_t>& blocks) {
  if (blocks.empty()) return nullptr;
  std::vector<Block> bl;
  bl.reserve(blocks.size());
  for (std::size_t b : blocks) bl.push_back(rep.blocks()[b]);
  return std::make_shared<Representation>(rep.n(), std::move(bl));
}

std::vector<Int> defect_ranks(const Representation& rep) {
  // Depth-0 names come first in the enumeration, blocks in order; a Fock
  // block contributes one vacuum, a cycle block p names, none of them defect.
  std::vector<Int> out;
  Int offset = 0;
  for (const Block& b : rep.blocks()) {
    if (b.kind == Block::Kind::fock) {
      out.push_back(offset);
      offset += 1;
    } else {
      offset += static_cast<unsigned long>(b.cycle_word.size());
    }
  }
  return out;
}

// Index of r within the sorted list, or npos when absent.
std::size_t index_in(const std::vector<Int>& sorted, const Int& r) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), r);
  if (it != sorted.end() && *it == r) return static_cast<std::size_t>(it - sorted.begin());
  return static_cast<std::size_t>(-1);
}

Int count_less(const std::vector<Int>& sorted, const Int& r) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), r);
  return Int(static_cast<unsigned long>(it - sorted.begin()));
}

// The j-th rank outside the sorted exclusion list.
Int nth_outside(const std::vector<Int>& sorted, Int j) {
  Int r = j;
  for (const Int& d : sorted)
    if (d <= r) r += 1;
  return r;
}

}  // namespace

void BasisUnitary::validate_phases() const {
  for (const auto& [r, z] : phases_) {
    if (r < 0) fail(Errc::invalid, "phase rank must be nonnegative");
    if (!z.is_unimodular()) fail(Errc::invalid, "phase must be unimodular");
  }
}

BasisUnitary BasisUnitary::rank_matching(RepPtr source, RepPtr target,
                                         std::map<Int, Scalar> phases) {
  if (!source || !target) fail(Errc::invalid, "basis unitary needs both endpoints");
  BasisUnitary w;
  w.kind_ = Kind::rank;
  w.source_ = std::move(source);
  w.target_ = std::move(target);
  w.phases_ = std::move(phases);
  w.validate_phases();
  return w;
}

BasisUnitary BasisUnitary::wold_matching(RepPtr source, RepPtr target,
                                         std::map<Int, Scalar> phases) {
  if (!source || !target) fail(Errc::invalid, "basis unitary needs both endpoints");
  auto parts = std::make_shared<Parts>();
  split_blocks(*source, parts->src_ess_blocks, parts->src_shift_blocks, parts->src_part_pos);
  split_blocks(*target, parts->tgt_ess_blocks, parts->tgt_shift_blocks, parts->tgt_part_pos);
  if (parts->src_ess_blocks.empty() != parts->tgt_ess_blocks.empty() ||
      parts->src_shift_blocks.empty() != parts->tgt_shift_blocks.empty())
    fail(Errc::invalid, "wold matching requires compatible part structure");
  parts->src_ess = sub_rep(*source, parts->src_ess_blocks);
  parts->src_shift = sub_rep(*source, parts->src_shift_blocks);
  parts->tgt_ess = sub_rep(*target, parts->tgt_ess_blocks);
  parts->tgt_shift = sub_rep(*target, parts->tgt_shift_blocks);
  BasisUnitary w;
  w.kind_ = Kind::wold;
  w.source_ = std::move(source);
  w.target_ = std::move(target);
  w.phases_ = std::move(phases);
  w.parts_ = std::move(parts);
  w.validate_phases();
  return w;
}

BasisUnitary BasisUnitary::defect_matching(RepPtr source, RepPtr target,
                                           std::map<Int, Scalar> phases) {
  if (!source || !target) fail(Errc::invalid, "basis unitary needs both endpoints");
  auto parts = std::make_shared<Parts>();
  parts->src_defect = defect_ranks(*source);
  parts->tgt_defect = defect_ranks(*target);
  if (parts->src_defect.size() != parts->tgt_defect.size())
    fail(Errc::invalid, "defect matching requires equal multiplicity");
  BasisUnitary w;
  w.kind_ = Kind::defect;
  w.source_ = std::move(source);
  w.target_ = std::move(target);
  w.phases_ = std::move(phases);
  w.parts_ = std::move(parts);
  w.validate_phases();
  return w;
}

BasisUnitary BasisUnitary::composed(std::shared_ptr<const BasisUnitary> outer,
                                    std::shared_ptr<const BasisUnitary> inner) {
  if (!outer || !inner) fail(Errc::invalid, "composition needs both factors");
  BasisUnitary w;
  w.kind_ = Kind::composed;
  w.source_ = inner->source();
  w.target_ = outer->target();
  w.left_ = std::move(outer);
  w.right_ = std::move(inner);
  return w;
}

BasisUnitary BasisUnitary::blockwise_sum(std::shared_ptr<const BasisUnitary> left,
                                         std::shared_ptr<const BasisUnitary> right,
                                         RepPtr source_sum, RepPtr target_sum) {
  if (!left || !right) fail(Errc::invalid, "blockwise sum needs both summands");
  if (!source_sum || !target_sum) fail(Errc::invalid, "blockwise sum needs the sum spaces");
  BasisUnitary w;
  w.kind_ = Kind::direct_sum;
  w.source_ = std::move(source_sum);
  w.target_ = std::move(target_sum);
  w.split_source_ = left->source()->blocks().size();
  w.split_target_ = left->target()->blocks().size();
  w.left_ = std::move(left);
  w.right_ = std::move(right);
  return w;
}

std::pair<Int, Scalar> BasisUnitary::map_rank(const Int& r) const {
  switch (kind_) {
    case Kind::rank: {
      auto it = phases_.find(r);
      return {r, it == phases_.end() ? Scalar::one() : it->second};
    }
    case Kind::wold: {
      BasisName name = source_->unrank(r);
      bool shift = source_->blocks()[name.block].kind == Block::Kind::fock;
      const auto& sub_src = shift ? parts_->src_shift : parts_->src_ess;
      const auto& sub_tgt = shift ? parts_->tgt_shift : parts_->tgt_ess;
      const auto& tgt_blocks = shift ? parts_->tgt_shift_blocks : parts_->tgt_ess_blocks;
      BasisName local = name;
      local.block = parts_->src_part_pos[name.block];
      BasisName out = sub_tgt->unrank(sub_src->rank(local));
      out.block = tgt_blocks[out.block];
      auto it = phases_.find(r);
      return {target_->rank(out), it == phases_.end() ? Scalar::one() : it->second};
    }
    case Kind::defect: {
      auto it = phases_.find(r);
      Scalar phase = it == phases_.end() ? Scalar::one() : it->second;
      std::size_t idx = index_in(parts_->src_defect, r);
      if (idx != static_cast<std::size_t>(-1)) return {parts_->tgt_defect[idx], phase};
      Int j = r - count_less(parts_->src_defect, r);
      return {nth_outside(parts_->tgt_defect, j), phase};
    }
    case Kind::composed: {
      auto [mid, p1] = right_->map_rank(r);
      auto [out, p2] = left_->map_rank(mid);
      return {out, p1 * p2};
    }
    case Kind::direct_sum: {
      BasisName name = source_->unrank(r);
      if (name.block < split_source_) {
        BasisName local = name;
        auto [tr, ph] = left_->map_rank(left_->source()->rank(local));
        BasisName out = left_->target()->unrank(tr);
        return {target_->rank(out), ph};
      }
      BasisName local = name;
      local.block -= split_source_;
      auto [tr, ph] = right_->map_rank(right_->source()->rank(local));
      BasisName out = right_->target()->unrank(tr);
      out.block += split_target_;
      return {target_->rank(out), ph};
    }
  }
  fail(Errc::internal, "unreachable");
}

std::pair<Int, Scalar> BasisUnitary::unmap_rank(const Int& r) const {
  switch (kind_) {
    case Kind::rank: {
      auto it = phases_.find(r);
      return {r, it == phases_.end() ? Scalar::one() : it->second.conj()};
    }
    case Kind::wold: {
      BasisName name = target_->unrank(r);
      bool shift = target_->blocks()[name.block].kind == Block::Kind::fock;
      const auto& sub_src = shift ? parts_->src_shift : parts_->src_ess;
      const auto& sub_tgt = shift ? parts_->tgt_shift : parts_->tgt_ess;
      const auto& src_blocks = shift ? parts_->src_shift_blocks : parts_->src_ess_blocks;
      BasisName local = name;
      local.block = parts_->tgt_part_pos[name.block];
      BasisName out = sub_src->unrank(sub_tgt->rank(local));
      out.block = src_blocks[out.block];
      Int sr = source_->rank(out);
      auto it = phases_.find(sr);
      return {sr, it == phases_.end() ? Scalar::one() : it->second.conj()};
    }
    case Kind::defect: {
      Int sr;
      std::size_t idx = index_in(parts_->tgt_defect, r);
      if (idx != static_cast<std::size_t>(-1)) {
        sr = parts_->src_defect[idx];
      } else {
        Int j = r - count_less(parts_->tgt_defect, r);
        sr = nth_outside(parts_->src_defect, j);
      }
      auto it = phases_.find(sr);
      return {sr, it == phases_.end() ? Scalar::one() : it->second.conj()};
    }
    case Kind::composed: {
      auto [mid, p2] = left_->unmap_rank(r);
      auto [out, p1] = right_->unmap_rank(mid);
      return {out, p1 * p2};
    }
    case Kind::direct_sum: {
      BasisName name = target_->unrank(r);
      if (name.block < split_target_) {
        auto [sr, ph] = left_->unmap_rank(left_->target()->rank(name));
        BasisName out = left_->source()->unrank(sr);
        return {source_->rank(out), ph};
      }
      BasisName local = name;
      local.block -= split_target_;
      auto [sr, ph] = right_->unmap_rank(right_->target()->rank(local));
      BasisName out = right_->source()->unrank(sr);
      out.block += split_source_;
      return {source_->rank(out), ph};
    }
  }
  fail(Errc::internal, "unreachable");
}

RankVector BasisUnitary::apply(const RankVector& v) const {
  RankVector out;
  for (const auto& [r, c] : v.entries()) {
    auto [tr, ph] = map_rank(r);
    out.add_term(tr, ph * c);
  }
  return out;
}

RankVector BasisUnitary::apply_adjoint(const RankVector& v) const {
  RankVector out;
  for (const auto& [r, c] : v.entries()) {
    auto [sr, ph] = unmap_rank(r);
    out.add_term(sr, ph * c);
  }
  return out;
}

BasisUnitary BasisUnitary::adjoint() const {
  switch (kind_) {
    case Kind::rank: {
      std::map<Int, Scalar> phases;
      for (const auto& [r, z] : phases_) phases.emplace(r, z.conj());
      return rank_matching(target_, source_, std::move(phases));
    }
    case Kind::wold:
    case Kind::defect: {
      std::map<Int, Scalar> phases;
      for (const auto& [r, z] : phases_) phases.emplace(map_rank(r).first, z.conj());
      return kind_ == Kind::wold ? wold_matching(target_, source_, std::move(phases))
                                 : defect_matching(target_, source_, std::move(phases));
    }
    case Kind::composed:
      return composed(std::make_shared<BasisUnitary>(right_->adjoint()),
                      std::make_shared<BasisUnitary>(left_->adjoint()));
    case Kind::direct_sum:
      return blockwise_sum(std::make_shared<BasisUnitary>(left_->adjoint()),
                           std::make_shared<BasisUnitary>(right_->adjoint()), target_, source_);
  }
  fail(Errc::internal, "unreachable");
}

OperatorExpr OperatorExpr::scalar(Scalar c) {
  OperatorExpr e;
  e.kind_ = Kind::scalar;
  e.scalar_ = std::move(c);
  return e;
}

OperatorExpr OperatorExpr::gen(RepPtr rep, Letter i) {
  if (!rep) fail(Errc::invalid, "generator atom needs a representation");
  if (i < 1 || i > rep->n()) fail(Errc::invalid, "letter out of range");
  OperatorExpr e;
  e.kind_ = Kind::gen;
  e.rep_ = std::move(rep);
  e.letter_ = i;
  return e;
}

OperatorExpr OperatorExpr::gen_adj(RepPtr rep, Letter i) {
  OperatorExpr e = gen(std::move(rep), i);
  e.kind_ = Kind::gen_adj;
  return e;
}

OperatorExpr OperatorExpr::basis_u(BasisUnitaryPtr w) {
  if (!w) fail(Errc::invalid, "basis unitary atom is empty");
  OperatorExpr e;
  e.kind_ = Kind::basis_u;
  e.unitary_ = std::move(w);
  return e;
}

OperatorExpr OperatorExpr::basis_u_adj(BasisUnitaryPtr w) {
  OperatorExpr e = basis_u(std::move(w));
  e.kind_ = Kind::basis_u_adj;
  return e;
}

OperatorExpr OperatorExpr::sum(std::vector<OperatorExpr> terms) {
  OperatorExpr e;
  e.kind_ = Kind::sum;
  e.children_ = std::move(terms);
  return e;
}

OperatorExpr OperatorExpr::prod(std::vector<OperatorExpr> factors) {
  OperatorExpr e;
  e.kind_ = Kind::prod;
  e.children_ = std::move(factors);
  return e;
}

OperatorExpr OperatorExpr::block_sum(OperatorExpr left, OperatorExpr right, RepPtr frame_sum,
                                     RepPtr frame_left, RepPtr frame_right, std::size_t split) {
  if (!frame_sum || !frame_left || !frame_right)
    fail(Errc::invalid, "block sum needs all three frames");
  OperatorExpr e;
  e.kind_ = Kind::block_sum;
  e.children_.push_back(std::move(left));
  e.children_.push_back(std::move(right));
  e.frame_sum_ = std::move(frame_sum);
  e.frame_left_ = std::move(frame_left);
  e.frame_right_ = std::move(frame_right);
  e.split_ = split;
  return e;
}

RankVector OperatorExpr::apply(const RankVector& v) const {
  switch (kind_) {
    case Kind::scalar:
      return v.scaled(scalar_);
    case Kind::gen:
      return rep_->gen(letter_, v);
    case Kind::gen_adj:
      return rep_->gen_adj(letter_, v);
    case Kind::basis_u:
      return unitary_->apply(v);
    case Kind::basis_u_adj:
      return unitary_->apply_adjoint(v);
    case Kind::sum: {
      RankVector out;
      for (const OperatorExpr& c : children_) out += c.apply(v);
      return out;
    }
    case Kind::prod: {
      RankVector out = v;
      for (auto it = children_.rbegin(); it != children_.rend(); ++it) {
        if (out.empty()) break;
        out = it->apply(out);
      }
      return out;
    }
    case Kind::block_sum: {
      RankVector in_left, in_right;
      for (const auto& [r, c] : v.entries()) {
        BasisName name = frame_sum_->unrank(r);
        if (name.block < split_) {
          in_left.add_term(frame_left_->rank(name), c);
        } else {
          BasisName local = name;
          local.block -= split_;
          in_right.add_term(frame_right_->rank(local), c);
        }
      }
      RankVector out;
      RankVector left_out = children_[0].apply(in_left);
      for (const auto& [r, c] : left_out.entries()) {
        BasisName name = frame_left_->unrank(r);
        out.add_term(frame_sum_->rank(name), c);
      }
      RankVector right_out = children_[1].apply(in_right);
      for (const auto& [r, c] : right_out.entries()) {
        BasisName name = frame_right_->unrank(r);
        name.block += split_;
        out.add_term(frame_sum_->rank(name), c);
      }
      return out;
    }
  }
  fail(Errc::internal, "unreachable");
}

OperatorExpr OperatorExpr::adjoint() const {
  switch (kind_) {
    case Kind::scalar:
      return scalar(scalar_.conj());
    case Kind::gen:
      return gen_adj(rep_, letter_);
    case Kind::gen_adj:
      return gen(rep_, letter_);
    case Kind::basis_u:
      return basis_u_adj(unitary_);
    case Kind::basis_u_adj:
      return basis_u(unitary_);
    case Kind::sum: {
      std::vector<OperatorExpr> terms;
      terms.reserve(children_.size());
      for (const OperatorExpr& c : children_) terms.push_back(c.adjoint());
      return sum(std::move(terms));
    }
    case Kind::prod: {
      std::vector<OperatorExpr> factors;
      factors.reserve(children_.size());
      for (auto it = children_.rbegin(); it != children_.rend(); ++it)
        factors.push_back(it->adjoint());
      return prod(std::move(factors));
    }
    case Kind::block_sum:
      return block_sum(children_[0].adjoint(), children_[1].adjoint(), frame_sum_, frame_left_,
                       frame_right_, split_);
  }
  fail(Errc::internal, "unreachable");
}

}  // namespace entk
