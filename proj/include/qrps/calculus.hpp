#ifndef QRPS_CALCULUS_HPP_
#define QRPS_CALCULUS_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qrps/qbf.hpp"
#include "qrps/symmetry.hpp"

namespace qrps {

/// Step ids are implicit: step k is steps[k-1], so ids are consecutive from 1
/// by construction and premises always point backwards.
struct AxiomStep {
  int clause_index;  // 1-based index into the matrix
  bool operator==(const AxiomStep&) const = default;
};

struct ResolveStep {
  int premise1;
  int premise2;
  Lit pivot;  // the pivot literal as it occurs in premise1
  bool operator==(const ResolveStep&) const = default;
};

struct ReduceStep {
  int premise;
  Lit reduced;  // universal literal removed from the premise
  bool operator==(const ReduceStep&) const = default;
};

struct SymApplyStep {
  int premise;
  std::string symmetry;  // name resolved against the symmetry sidecar
  bool operator==(const SymApplyStep&) const = default;
};

using ProofStep = std::variant<AxiomStep, ResolveStep, ReduceStep, SymApplyStep>;

struct Proof {
  Var max_var = 0;
  std::vector<ProofStep> steps;
  bool operator==(const Proof&) const = default;
};

struct StepCounts {
  int axioms = 0;
  int resolutions = 0;
  int reductions = 0;
  int sym_applications = 0;

  /// Rule applications in the step-count sense: everything but axioms.
  int rule_applications() const { return resolutions + reductions + sym_applications; }
  int total() const { return axioms + rule_applications(); }
  bool operator==(const StepCounts&) const = default;
};

StepCounts count_steps(const Proof& pf);

enum class RuleViolation {
  none,
  axiom_index_out_of_range,
  premise_out_of_range,
  unknown_variable,
  pivot_not_existential,
  pivot_missing,
  pivot_complement_missing,
  tautological_resolvent,
  reduced_literal_missing,
  reduced_literal_not_universal,
  complement_present,
  existential_blocks_reduction,
  symmetry_rule_disabled,
  unknown_symmetry,
  not_a_symmetry,
  empty_clause_not_derived,
};

std::string to_string(RuleViolation v);

class RuleError : public std::runtime_error {
 public:
  explicit RuleError(RuleViolation v) : std::runtime_error(qrps::to_string(v)), reason_(v) {}
  RuleViolation reason() const noexcept { return reason_; }

 private:
  RuleViolation reason_;
};

/// Rule R: pivot must occur in c1, its complement in c2, and the pivot
/// variable must be existential; the resolvent must not be tautological.
/// The try_ variants report the violation instead of throwing.
RuleViolation try_resolve(const Clause& c1, const Clause& c2, Lit pivot, const Prefix& p,
                          Clause& out);
Clause resolve(const Clause& c1, const Clause& c2, Lit pivot, const Prefix& p);

/// Rule U: l must be a universal literal of c, its complement absent, and no
/// existential literal of c may come after l in the prefix order. Universal
/// literals after l do not block the reduction.
RuleViolation try_reduce(const Clause& c, Lit l, const Prefix& p, Clause& out);
Clause reduce(const Clause& c, Lit l, const Prefix& p);

enum class Verdict { accept, reject };

/// failing_step 0 means the proof as a whole (empty clause never derived).
struct CheckReport {
  Verdict verdict = Verdict::reject;
  std::optional<int> failing_step;
  RuleViolation reason = RuleViolation::none;
  StepCounts step_counts;
  /// Recomputed conclusion per step, up to (excluding) a failing step.
  std::vector<Clause> derived;
};

/// Replays every step: axioms must reference matrix clauses, R/U validate via
/// the rules above, and S steps validate only when allow_sym is set, the name
/// resolves in syms, and the map is a symmetry of q. Accepts iff all steps
/// check out and the final conclusion is the empty clause. Never throws; all
/// failures are reject verdicts with reasons.
CheckReport check_proof(const QBF& q, const std::vector<Symmetry>& syms, const Proof& pf,
                        bool allow_sym);

/// Constructive symmetry-rule elimination: repeatedly replaces the earliest S
/// step by the sigma-image of its premise's derivation (axiom leaves map to
/// matrix clauses because sigma is a symmetry), deduplicating identical steps
/// after each round. The result has no S steps, ends in the same final
/// clause, and passes check_proof with allow_sym=false.
///
/// Throws std::invalid_argument unless check_proof(q, syms, pf, true) accepts.
Proof eliminate_symmetry_steps(const QBF& q, const std::vector<Symmetry>& syms, const Proof& pf);

/// Trace format (ASCII, LF), ids consecutive from 1:
///   p qrps <max-var> <num-steps>
///   <id> a <matrix-clause-index> 0
///   <id> r <id1> <id2> <pivot-lit> 0
///   <id> u <id1> <reduced-lit> 0
///   <id> y <id1> <sym-name> 0
/// The serializer always writes the header; the parser accepts headerless
/// traces and infers max-var from the literals present. `c` comment lines
/// are skipped.
Proof parse_trace(std::string_view text);
std::string serialize_trace(const Proof& pf);

}  // namespace qrps

#endif  // QRPS_CALCULUS_HPP_
