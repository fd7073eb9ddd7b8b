#ifndef QRPS_QBF_HPP_
#define QRPS_QBF_HPP_

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

namespace qrps {

/// DIMACS-style literal: positive value = variable, negative = its negation.
/// Zero is reserved as a terminator in the file formats and never a literal.
using Lit = std::int32_t;
using Var = std::int32_t;

inline Var var_of(Lit l) noexcept { return l < 0 ? -l : l; }
inline Lit negated(Lit l) noexcept { return -l; }
inline bool is_positive(Lit l) noexcept { return l > 0; }

/// Order literals by variable index, negative phase first (-v < v).
inline bool lit_less(Lit a, Lit b) noexcept {
  const Var va = var_of(a), vb = var_of(b);
  return va != vb ? va < vb : a < b;
}

/// A clause as a duplicate-free literal set, kept sorted by (variable, phase).
/// Tautological clauses (containing l and -l) are representable; the calculus
/// rules reject them where required.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Lit> lits);

  const std::vector<Lit>& lits() const noexcept { return lits_; }
  bool empty() const noexcept { return lits_.empty(); }
  std::size_t size() const noexcept { return lits_.size(); }
  bool contains(Lit l) const noexcept;
  bool is_tautology() const noexcept;

  /// Clause with literal `l` removed (no-op if absent).
  Clause without(Lit l) const;

  auto begin() const noexcept { return lits_.begin(); }
  auto end() const noexcept { return lits_.end(); }

  bool operator==(const Clause&) const = default;

 private:
  std::vector<Lit> lits_;
};

/// Sorts, deduplicates, and rejects zero literals. Same as Clause's ctor;
/// exists as the named normalization entry point.
Clause normalize_clause(std::vector<Lit> lits);

std::string to_string(const Clause& c);

enum class Quantifier : std::uint8_t { exists, forall };

struct Block {
  Quantifier quant;
  std::vector<Var> vars;
  bool operator==(const Block&) const = default;
};

/// Prenex quantifier prefix: maximal alternating blocks over distinct
/// positive variable indices. Induces the total order <_P by position.
class Prefix {
 public:
  Prefix() = default;

  /// Appends variables under quantifier `q`; merges into the last block when
  /// the quantifier matches. Throws std::invalid_argument on non-positive or
  /// duplicate variables, or an empty variable list.
  void append_block(Quantifier q, const std::vector<Var>& vars);

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  bool contains(Var v) const noexcept;
  Quantifier quantifier(Var v) const;  // throws std::invalid_argument if unknown
  bool is_existential(Var v) const { return quantifier(v) == Quantifier::exists; }
  bool is_universal(Var v) const { return quantifier(v) == Quantifier::forall; }

  /// 0-based position in the flattened variable order.
  int position(Var v) const;
  /// Index of the block containing v.
  int block_of(Var v) const;
  /// v <_P w.
  bool precedes(Var v, Var w) const { return position(v) < position(w); }

  std::vector<Var> flattened() const;
  int var_count() const noexcept { return static_cast<int>(count_); }
  Var max_var() const noexcept { return max_var_; }

  bool operator==(const Prefix& o) const { return blocks_ == o.blocks_; }

 private:
  struct VarInfo {
    std::int32_t block = -1;
    std::int32_t pos = -1;
  };
  const VarInfo& info(Var v) const;

  std::vector<Block> blocks_;
  std::vector<VarInfo> info_;  // indexed by variable
  std::size_t count_ = 0;
  Var max_var_ = 0;
};

/// Prenex CNF formula: prefix + ordered clause list. Clause order is
/// significant (axiom steps address clauses by 1-based index).
struct QBF {
  Prefix prefix;
  std::vector<Clause> matrix;

  bool operator==(const QBF&) const = default;
};

/// Throws std::invalid_argument if some matrix variable is not quantified.
void validate(const QBF& q);

}  // namespace qrps

#endif  // QRPS_QBF_HPP_
