#ifndef QRPS_SHORT_PROOFS_HPP_
#define QRPS_SHORT_PROOFS_HPP_

#include <vector>

#include "qrps/calculus.hpp"
#include "qrps/families.hpp"
#include "qrps/qbf.hpp"
#include "qrps/symmetry.hpp"

namespace qrps {

struct ProvedInstance {
  /// The refuted instance; for the breaker strategies the breaker clauses are
  /// appended to the matrix.
  QBF formula;
  /// Symmetries referenced by the trace (empty for breaker proofs).
  std::vector<Symmetry> symmetries;
  Proof proof;
};

/// Each generator emits the fixed refutation script for its instance. Axiom
/// steps are emitted right before their first use (premise-1 side first) and
/// reused afterwards, so traces are byte-deterministic. Rule-application
/// counts (axioms excluded) are exactly 4n, 2n+1, 5n, and 3n+2.

/// Plain Q-Res refutation of kbkf_n plus its breaker, 4n rule applications.
ProvedInstance prove_kbkf_breaker(int n);

/// Plain Q-Res refutation of quparity_n plus its breaker, 2n+1 rule
/// applications (n >= 2).
ProvedInstance prove_quparity_breaker(int n);

/// Q-Res+S refutation of the unmodified kbkf_n, 5n rule applications.
ProvedInstance prove_kbkf_sym(int n);

/// Q-Res+S refutation of the unmodified quparity_n, 3n+2 rule applications
/// (n >= 2).
ProvedInstance prove_quparity_sym(int n);

enum class Strategy { breaker, symrule };

/// Dispatcher for the four generators. Throws std::invalid_argument for
/// kbkf_hard (no short proofs exist to emit) or out-of-range n.
ProvedInstance prove_family(FamilyId f, Strategy s, int n);

}  // namespace qrps

#endif  // QRPS_SHORT_PROOFS_HPP_
