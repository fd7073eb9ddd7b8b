#include "qrps/qbf.hpp"

#include <algorithm>
#include <stdexcept>

namespace qrps {

Clause::Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {
  for (Lit l : lits_) {
    if (l == 0) throw std::invalid_argument("literal 0 is not allowed in a clause");
  }
  std::sort(lits_.begin(), lits_.end(), lit_less);
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

bool Clause::contains(Lit l) const noexcept {
  return std::binary_search(lits_.begin(), lits_.end(), l, lit_less);
}

bool Clause::is_tautology() const noexcept {
  for (std::size_t i = 1; i < lits_.size(); ++i) {
    if (var_of(lits_[i - 1]) == var_of(lits_[i])) return true;
  }
  return false;
}

Clause Clause::without(Lit l) const {
  Clause c;
  c.lits_.reserve(lits_.size());
  for (Lit x : lits_) {
    if (x != l) c.lits_.push_back(x);
  }
  return c;
}

Clause normalize_clause(std::vector<Lit> lits) { return Clause(std::move(lits)); }

std::string to_string(const Clause& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(c.lits()[i]);
  }
  s += "}";
  return s;
}

void Prefix::append_block(Quantifier q, const std::vector<Var>& vars) {
  if (vars.empty()) throw std::invalid_argument("empty quantifier block");
  for (Var v : vars) {
    if (v <= 0) throw std::invalid_argument("variable indices must be positive");
    if (contains(v)) {
      throw std::invalid_argument("variable " + std::to_string(v) + " declared twice");
    }
  }
  const bool merge = !blocks_.empty() && blocks_.back().quant == q;
  if (!merge) blocks_.push_back(Block{q, {}});
  Block& blk = blocks_.back();
  const auto block_idx = static_cast<std::int32_t>(blocks_.size() - 1);
  for (Var v : vars) {
    if (v > max_var_) {
      max_var_ = v;
      info_.resize(static_cast<std::size_t>(max_var_) + 1);
    }
    info_[static_cast<std::size_t>(v)] = {block_idx, static_cast<std::int32_t>(count_++)};
    blk.vars.push_back(v);
  }
}

bool Prefix::contains(Var v) const noexcept {
  return v > 0 && v <= max_var_ && info_[static_cast<std::size_t>(v)].pos >= 0;
}

const Prefix::VarInfo& Prefix::info(Var v) const {
  if (!contains(v)) {
    throw std::invalid_argument("variable " + std::to_string(v) + " not in prefix");
  }
  return info_[static_cast<std::size_t>(v)];
}

Quantifier Prefix::quantifier(Var v) const {
  return blocks_[static_cast<std::size_t>(info(v).block)].quant;
}

int Prefix::position(Var v) const { return info(v).pos; }

int Prefix::block_of(Var v) const { return info(v).block; }

std::vector<Var> Prefix::flattened() const {
  std::vector<Var> out;
  out.reserve(count_);
  for (const Block& b : blocks_) out.insert(out.end(), b.vars.begin(), b.vars.end());
  return out;
}

void validate(const QBF& q) {
  for (const Clause& c : q.matrix) {
    for (Lit l : c) {
      if (!q.prefix.contains(var_of(l))) {
        throw std::invalid_argument("matrix variable " + std::to_string(var_of(l)) +
                                    " not quantified");
      }
    }
  }
}

}  // namespace qrps
