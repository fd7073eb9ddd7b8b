#ifndef QRPS_QDIMACS_HPP_
#define QRPS_QDIMACS_HPP_

#include <string>
#include <string_view>

#include "qrps/qbf.hpp"

namespace qrps {

/// Parses QDIMACS text: `c` comment lines, a `p cnf <nvars> <nclauses>`
/// header, quantifier lines `e v.. 0` / `a v.. 0`, then exactly <nclauses>
/// clause lines of signed integers terminated by 0. Adjacent lines with the
/// same quantifier merge into one block. Throws ParseError on malformed
/// input, undeclared or out-of-range variables, or a clause count mismatch.
QBF parse_qdimacs(std::string_view text);

/// Canonical QDIMACS text, LF line endings: header, one line per block, one
/// clause per line with normalized literal order. parse(serialize(q)) == q.
std::string serialize_qdimacs(const QBF& q);

}  // namespace qrps

#endif  // QRPS_QDIMACS_HPP_
