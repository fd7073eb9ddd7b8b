#ifndef QRPS_ORACLE_HPP_
#define QRPS_ORACLE_HPP_

#include "qrps/qbf.hpp"

namespace qrps {

inline constexpr int kDefaultOracleVarLimit = 24;

/// Brute-force game-semantics evaluation: existential variables branch with
/// OR, universal with AND, in prefix order; the recursion stops early once
/// every clause is satisfied or some clause is falsified. Deliberately free
/// of solver machinery so it can serve as an independent ground truth.
///
/// Throws std::invalid_argument when the prefix has more than max_vars
/// variables or the matrix mentions unquantified variables.
bool evaluate(const QBF& q, int max_vars = kDefaultOracleVarLimit);

}  // namespace qrps

#endif  // QRPS_ORACLE_HPP_
