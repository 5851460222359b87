// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0

#include "rep.hpp"

#include <utility>

#include "error.hpp"

namespace entk {

ScalarMatrix matrix_identity(unsigned n) {
  ScalarMatrix m(n, std::vector<Scalar>(n, Scalar::zero()));
  for (unsigned i = 0; i < n; ++i) m[i][i] = Scalar::one();
  return m;
}

ScalarMatrix matrix_adjoint(const ScalarMatrix& m) {
  std::size_t n = m.size();
  ScalarMatrix out(n, std::vector<Scalar>(n, Scalar::zero()));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out[c][r] = m[r][c].conj();
  return out;
}

ScalarMatrix matrix_mul(const ScalarMatrix& a, const ScalarMatrix& b) {
  std::size_t n = a.size();
  if (b.size() != n) fail(Errc::invalid, "matrix size mismatch");
  ScalarMatrix out(n, std::vector<Scalar>(n, Scalar::zero()));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[r][k].is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) out[r][c] += a[r][k] * b[k][c];
    }
  return out;
}

bool matrix_is_unitary(const ScalarMatrix& m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) return false;
  ScalarMatrix id = matrix_identity(static_cast<unsigned>(n));
  ScalarMatrix adj = matrix_adjoint(m);
  return matrix_mul(adj, m) == id && matrix_mul(m, adj) == id;
}

Representation::Representation(unsigned n, std::vector<Block> blocks,
                               std::optional<ScalarMatrix> twist,
                               std::map<Int, Scalar> conj_phases)
    : n_(n), blocks_(std::move(blocks)), twist_(std::move(twist)),
      conj_phases_(std::move(conj_phases)) {
  if (n_ < 1) fail(Errc::invalid, "generator count n must be >= 1");
  if (blocks_.empty()) fail(Errc::invalid, "representation must have at least one block");
  for (const Block& b : blocks_) {
    if (b.kind == Block::Kind::cycle) {
      if (b.cycle_word.empty()) fail(Errc::invalid, "cycle word must be nonempty");
      if (!b.cycle_word.valid_for(n_)) fail(Errc::invalid, "cycle word letter out of range");
    } else if (!b.cycle_word.empty()) {
      fail(Errc::invalid, "fock block must not carry a cycle word");
    }
  }
  if (twist_) {
    if (twist_->size() != n_) fail(Errc::not_unitary, "twist is not n x n");
    for (const auto& row : *twist_)
      if (row.size() != n_) fail(Errc::not_unitary, "twist is not n x n");
    if (!matrix_is_unitary(*twist_)) fail(Errc::not_unitary, "twist is not unitary");
  }
  for (const auto& [r, z] : conj_phases_) {
    if (r < 0) fail(Errc::invalid, "conj phase rank must be nonnegative");
    if (!z.is_unimodular()) fail(Errc::invalid, "conj phase must be unimodular");
  }

  pow_.reserve(kMaxDepth + 1);
  pow_.push_back(1);
  for (std::size_t d = 1; d <= kMaxDepth; ++d) pow_.push_back(pow_.back() * n_);

  block_level_.assign(kMaxDepth + 1, std::vector<Int>(blocks_.size()));
  level_total_.assign(kMaxDepth + 1, Int(0));
  cum_upto_.assign(kMaxDepth + 1, Int(0));
  for (std::size_t d = 0; d <= kMaxDepth; ++d) {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      const Block& blk = blocks_[b];
      Int count;
      if (blk.kind == Block::Kind::fock) {
        count = pow_[d];
      } else {
        auto p = static_cast<unsigned long>(blk.cycle_word.size());
        count = d == 0 ? Int(p) : Int(p) * Int(n_ - 1) * pow_[d - 1];
      }
      level_total_[d] += count;
      block_level_[d][b] = std::move(count);
    }
    cum_upto_[d] = (d == 0 ? Int(0) : cum_upto_[d - 1]) + level_total_[d];
  }
}

bool Representation::pure_shift() const {
  for (const Block& b : blocks_)
    if (b.kind != Block::Kind::fock) return false;
  return true;
}

bool Representation::pure_essential() const {
  for (const Block& b : blocks_)
    if (b.kind != Block::Kind::cycle) return false;
  return true;
}

std::size_t Representation::fock_block_count() const {
  std::size_t k = 0;
  for (const Block& b : blocks_)
    if (b.kind == Block::Kind::fock) ++k;
  return k;
}

Letter Representation::tail_letter(std::size_t block, unsigned j) const {
  const Word& m = blocks_[block].cycle_word;
  auto p = static_cast<unsigned>(m.size());
  return m[(j + p - 1) % p];
}

Letter Representation::forbidden_letter(std::size_t block, unsigned k) const {
  auto p = static_cast<unsigned>(blocks_[block].cycle_word.size());
  return tail_letter(block, (k + p - 1) % p);
}

bool Representation::canonical(const BasisName& b) const {
  if (b.block >= blocks_.size()) return false;
  const Block& blk = blocks_[b.block];
  if (!b.word.valid_for(n_)) return false;
  if (blk.kind == Block::Kind::fock) return !b.cyclic && b.k == 0;
  if (!b.cyclic) return false;
  auto p = static_cast<unsigned>(blk.cycle_word.size());
  if (b.k >= p) return false;
  return b.word.empty() || b.word.back() != forbidden_letter(b.block, b.k);
}

void Representation::require_canonical(const BasisName& b) const {
  if (!canonical(b)) fail(Errc::invalid, "basis name " + b.str() + " is not canonical");
}

const Int& Representation::block_level_count(std::size_t block, std::size_t depth) const {
  if (depth > kMaxDepth) fail(Errc::invalid, "depth beyond the supported enumeration range");
  return block_level_[depth][block];
}

Int Representation::level_count(std::size_t depth) const {
  if (depth > kMaxDepth) fail(Errc::invalid, "depth beyond the supported enumeration range");
  return level_total_[depth];
}

Int Representation::count_upto(std::size_t depth) const {
  if (depth > kMaxDepth) fail(Errc::invalid, "depth beyond the supported enumeration range");
  return cum_upto_[depth];
}

Int Representation::rank(const BasisName& b) const {
  require_canonical(b);
  std::size_t depth = b.depth();
  if (depth > kMaxDepth) fail(Errc::invalid, "depth beyond the supported enumeration range");
  Int r = depth == 0 ? Int(0) : cum_upto_[depth - 1];
  for (std::size_t blk = 0; blk < b.block; ++blk) r += block_level_[depth][blk];

  if (blocks_[b.block].kind == Block::Kind::fock) {
    for (std::size_t t = 0; t < depth; ++t)
      r += Int(b.word[t] - 1) * pow_[depth - 1 - t];
    return r;
  }

  if (depth == 0) return r + Int(b.k);
  Int per_k = Int(n_ - 1) * pow_[depth - 1];
  r += Int(b.k) * per_k;
  Letter f = forbidden_letter(b.block, b.k);
  for (std::size_t t = 0; t + 1 < depth; ++t)
    r += Int(b.word[t] - 1) * Int(n_ - 1) * pow_[depth - 2 - t];
  for (Letter c = 1; c < b.word.back(); ++c)
    if (c != f) r += 1;
  return r;
}

BasisName Representation::unrank(Int r) const {
  if (r < 0) fail(Errc::invalid, "rank must be nonnegative");
  if (r >= cum_upto_[kMaxDepth])
    fail(Errc::invalid, "rank beyond the supported enumeration range");
  std::size_t depth = 0;
  while (r >= level_total_[depth]) {
    r -= level_total_[depth];
    ++depth;
  }
  std::size_t block = 0;
  for (;; ++block) {
    const Int& bc = block_level_[depth][block];
    if (r < bc) break;
    r -= bc;
  }

  const Block& blk = blocks_[block];
  if (blk.kind == Block::Kind::fock) {
    std::vector<Letter> letters(depth, 1);
    for (std::size_t t = 0; t < depth; ++t) {
      Int q = r / pow_[depth - 1 - t];
      r -= q * pow_[depth - 1 - t];
      letters[t] = static_cast<Letter>(q.get_ui() + 1);
    }
    return BasisName::fock(block, Word(std::move(letters)));
  }

  Int per_k = depth == 0 ? Int(1) : Int(n_ - 1) * pow_[depth - 1];
  Int kq = r / per_k;
  auto k = static_cast<unsigned>(kq.get_ui());
  r -= kq * per_k;
  if (depth == 0) return BasisName::cycle(block, k, Word());

  std::vector<Letter> letters(depth, 1);
  for (std::size_t t = 0; t + 1 < depth; ++t) {
    Int q = Int(n_ - 1) * pow_[depth - 2 - t];
    Int digit = r / q;
    r -= digit * q;
    letters[t] = static_cast<Letter>(digit.get_ui() + 1);
  }
  Letter f = forbidden_letter(block, k);
  Int idx = r;
  for (Letter c = 1; c <= n_; ++c) {
    if (c == f) continue;
    if (idx == 0) {
      letters[depth - 1] = c;
      return BasisName::cycle(block, k, Word(std::move(letters)));
    }
    idx -= 1;
  }
  fail(Errc::internal, "unrank fell off the letter range");
}

std::vector<BasisName> Representation::names_upto(std::size_t depth) const {
  std::vector<BasisName> out;
  for (std::size_t d = 0; d <= depth; ++d) {
    for (std::size_t blk = 0; blk < blocks_.size(); ++blk) {
      const Block& b = blocks_[blk];
      if (b.kind == Block::Kind::fock) {
        // Odometer over words of length d, lex order.
        std::vector<Letter> w(d, 1);
        for (;;) {
          out.push_back(BasisName::fock(blk, Word(w)));
          std::size_t t = d;
          while (t > 0 && w[t - 1] == n_) {
            w[t - 1] = 1;
            --t;
          }
          if (t == 0) break;
          ++w[t - 1];
        }
      } else {
        auto p = static_cast<unsigned>(b.cycle_word.size());
        for (unsigned k = 0; k < p; ++k) {
          if (d == 0) {
            out.push_back(BasisName::cycle(blk, k, Word()));
            continue;
          }
          Letter f = forbidden_letter(blk, k);
          std::vector<Letter> w(d, 1);
          for (;;) {
            if (w[d - 1] != f) out.push_back(BasisName::cycle(blk, k, Word(w)));
            std::size_t t = d;
            while (t > 0 && w[t - 1] == n_) {
              w[t - 1] = 1;
              --t;
            }
            if (t == 0) break;
            ++w[t - 1];
          }
        }
      }
    }
  }
  return out;
}

BasisName Representation::base_image(Letter i, const BasisName& b) const {
  const Block& blk = blocks_[b.block];
  if (blk.kind == Block::Kind::fock) {
    std::vector<Letter> w;
    w.reserve(b.word.size() + 1);
    w.push_back(i);
    w.insert(w.end(), b.word.letters().begin(), b.word.letters().end());
    return BasisName::fock(b.block, Word(std::move(w)));
  }
  auto p = static_cast<unsigned>(blk.cycle_word.size());
  if (!b.word.empty()) {
    std::vector<Letter> w;
    w.reserve(b.word.size() + 1);
    w.push_back(i);
    w.insert(w.end(), b.word.letters().begin(), b.word.letters().end());
    return BasisName::cycle(b.block, b.k, Word(std::move(w)));
  }
  unsigned prev = (b.k + p - 1) % p;
  if (i == tail_letter(b.block, prev)) return BasisName::cycle(b.block, prev, Word());
  return BasisName::cycle(b.block, b.k, Word::single(i));
}

std::optional<BasisName> Representation::base_preimage(Letter i, const BasisName& b) const {
  const Block& blk = blocks_[b.block];
  if (blk.kind == Block::Kind::fock) {
    auto rest = strip_prefix(Word::single(i), b.word);
    if (!rest) return std::nullopt;
    return BasisName::fock(b.block, std::move(*rest));
  }
  auto p = static_cast<unsigned>(blk.cycle_word.size());
  if (!b.word.empty()) {
    if (b.word.front() != i) return std::nullopt;
    auto rest = strip_prefix(Word::single(i), b.word);
    return BasisName::cycle(b.block, b.k, std::move(*rest));
  }
  if (i == tail_letter(b.block, b.k)) return BasisName::cycle(b.block, (b.k + 1) % p, Word());
  return std::nullopt;
}

SparseVector Representation::base_fwd(Letter i, const SparseVector& v) const {
  SparseVector out;
  for (const auto& [name, c] : v.entries()) out.add_term(base_image(i, name), c);
  return out;
}

SparseVector Representation::base_adj(Letter i, const SparseVector& v) const {
  SparseVector out;
  for (const auto& [name, c] : v.entries()) {
    auto pre = base_preimage(i, name);
    if (pre) out.add_term(*pre, c);
  }
  return out;
}

Scalar Representation::phase_at(const BasisName& b) const {
  auto it = conj_phases_.find(rank(b));
  return it == conj_phases_.end() ? Scalar::one() : it->second;
}

SparseVector Representation::apply_generator(Letter i, const SparseVector& v) const {
  if (i < 1 || i > n_) fail(Errc::invalid, "letter out of range");
  for (const auto& [name, c] : v.entries()) require_canonical(name);

  SparseVector out;
  if (!twist_) {
    out = base_fwd(i, v);
  } else {
    for (Letter j = 1; j <= n_; ++j) {
      const Scalar& u = (*twist_)[j - 1][i - 1];
      if (u.is_zero()) continue;
      out += base_fwd(j, v).scaled(u);
    }
  }
  if (conj_phases_.empty()) return out;
  SparseVector phased;
  for (const auto& [name, c] : out.entries()) phased.add_term(name, phase_at(name) * c);
  return phased;
}

SparseVector Representation::apply_generator_adjoint(Letter i, const SparseVector& v) const {
  if (i < 1 || i > n_) fail(Errc::invalid, "letter out of range");
  for (const auto& [name, c] : v.entries()) require_canonical(name);

  SparseVector pre = v;
  if (!conj_phases_.empty()) {
    SparseVector phased;
    for (const auto& [name, c] : v.entries())
      phased.add_term(name, phase_at(name).conj() * c);
    pre = std::move(phased);
  }
  if (!twist_) return base_adj(i, pre);
  SparseVector out;
  for (Letter j = 1; j <= n_; ++j) {
    const Scalar& u = (*twist_)[j - 1][i - 1];
    if (u.is_zero()) continue;
    out += base_adj(j, pre).scaled(u.conj());
  }
  return out;
}

std::function<SparseVector(const SparseVector&)> Representation::sigma(
    std::vector<Scalar> x) const {
  if (x.size() != n_) fail(Errc::invalid, "coefficient vector length mismatch");
  return [this, x = std::move(x)](const SparseVector& v) {
    SparseVector out;
    for (Letter i = 1; i <= n_; ++i) {
      if (x[i - 1].is_zero()) continue;
      out += apply_generator(i, v).scaled(x[i - 1]);
    }
    return out;
  };
}

RankVector Representation::to_ranks(const SparseVector& v) const {
  RankVector out;
  for (const auto& [name, c] : v.entries()) out.add_term(rank(name), c);
  return out;
}

SparseVector Representation::to_names(const RankVector& v) const {
  SparseVector out;
  for (const auto& [r, c] : v.entries()) out.add_term(unrank(r), c);
  return out;
}

RankVector Representation::gen(Letter i, const RankVector& v) const {
  return to_ranks(apply_generator(i, to_names(v)));
}

RankVector Representation::gen_adj(Letter i, const RankVector& v) const {
  return to_ranks(apply_generator_adjoint(i, to_names(v)));
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.n() != b.n()) fail(Errc::rank_mismatch, "rank mismatch");
  std::optional<ScalarMatrix> twist;
  if (a.twist() && b.twist()) {
    if (*a.twist() != *b.twist())
      fail(Errc::invalid, "direct sum requires equal twists");
    twist = a.twist();
  } else if (a.twist() || b.twist()) {
    // Treat an absent twist as the identity matrix; sums mix only when the
    // present twist actually is the identity.
    const auto& present = a.twist() ? *a.twist() : *b.twist();
    if (present != matrix_identity(a.n()))
      fail(Errc::invalid, "direct sum requires equal twists");
    twist = std::nullopt;
  }

  std::vector<Block> blocks = a.blocks();
  blocks.insert(blocks.end(), b.blocks().begin(), b.blocks().end());
  Representation plain(a.n(), blocks, twist, {});

  std::map<Int, Scalar> phases;
  for (const auto& [r, z] : a.conj_phases()) {
    BasisName name = a.unrank(r);
    phases.emplace(plain.rank(name), z);
  }
  std::size_t shift = a.blocks().size();
  for (const auto& [r, z] : b.conj_phases()) {
    BasisName name = b.unrank(r);
    name.block += shift;
    phases.emplace(plain.rank(name), z);
  }
  if (phases.empty()) return plain;
  return Representation(a.n(), std::move(blocks), std::move(twist), std::move(phases));
}

Representation fock_rep(unsigned n) { return Representation(n, {Block::fock()}); }

Representation fock_multiple(unsigned n, unsigned k) {
  if (k < 1) fail(Errc::invalid, "need at least one block");
  return Representation(n, std::vector<Block>(k, Block::fock()));
}

Representation cycle_rep(unsigned n, Word cycle) {
  return Representation(n, {Block::cycle(std::move(cycle))});
}

Representation fock_power(unsigned n, unsigned k) {
  if (k < 1) fail(Errc::invalid, "need k >= 1");
  if (n == 1 || k == 1) return fock_multiple(n, k);
  fail(Errc::invalid,
       "fock_power with k >= 2 is defined only for n = 1 (there S^k splits into k shift "
       "blocks); for n >= 2 the k-fold power family has infinite-dimensional defect and is "
       "not a multiplicity-k object - use fock_multiple");
}

bool blocks_equal(const Representation& a, const Representation& b) {
  return a.n() == b.n() && a.blocks() == b.blocks();
}

bool conj_equal(const Representation& a, const Representation& b) {
  return a.conj_phases() == b.conj_phases();
}

ScalarMatrix twist_or_identity(const Representation& r) {
  return r.twist() ? *r.twist() : matrix_identity(r.n());
}

}  // namespace entk
