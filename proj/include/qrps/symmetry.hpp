#ifndef QRPS_SYMMETRY_HPP_
#define QRPS_SYMMETRY_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qrps/qbf.hpp"

namespace qrps {

/// A negation-consistent literal bijection, stored as the image of each
/// positive literal; unlisted variables are fixed. The full map follows from
/// sigma(-v) = -sigma(v).
class Symmetry {
 public:
  Symmetry() = default;

  /// Throws std::invalid_argument when the name contains whitespace, is empty
  /// or "0", or the image is not bijective (the image variable set must equal
  /// the mapped variable set, since everything else is fixed).
  Symmetry(std::string name, std::map<Var, Lit> image);

  const std::string& name() const noexcept { return name_; }
  const std::map<Var, Lit>& image() const noexcept { return image_; }

  Lit apply(Lit l) const;
  Clause apply(const Clause& c) const;
  Symmetry inverse() const;
  bool is_identity() const;

 private:
  std::string name_;
  std::map<Var, Lit> image_;
};

/// True iff every moved variable stays within its quantifier block and the
/// induced literal map is bijective. Throws std::invalid_argument when the
/// map mentions a variable missing from the prefix.
bool is_admissible(const Symmetry& s, const Prefix& p);

/// Literal-wise image of the clause, renormalized.
Clause apply_to_clause(const Symmetry& s, const Clause& c);

/// True iff s is admissible for q's prefix and maps the matrix clause
/// multiset to itself. Unknown variables make this false, not an error.
bool is_symmetry(const Symmetry& s, const QBF& q);

/// Clausal symmetry breaker for the given verified symmetries: for each
/// existential variable x (prefix order) and each sigma moving x, the
/// implication (AND_{y before x} y<->sigma(y)) -> (x -> sigma(x)) is
/// simplified by dropping fixed-variable conjuncts, dropping implications
/// with an unsatisfiable antecedent (some y<->-y conjunct) or whose
/// consequent is one direction of a surviving conjunct on the same variable
/// pair; implications reduced to an empty antecedent emit the clause
/// {-x, sigma(x)}. Output keeps iteration order, deduplicated.
///
/// Throws std::invalid_argument if some sigma is not a symmetry of q, or
/// std::domain_error("non-clausal breaker") when an implication survives
/// with a nonempty antecedent.
std::vector<Clause> breaker_clauses(const QBF& q, const std::vector<Symmetry>& syms);

/// Sidecar format (ASCII, LF): `c` comment lines and per symmetry one line
/// `s <name> v1 m1 v2 m2 ... 0` with positive variables v and signed image
/// literals m; unlisted variables are fixed.
std::vector<Symmetry> parse_symmetries(std::string_view text);
std::string serialize_symmetries(const std::vector<Symmetry>& syms);

}  // namespace qrps

#endif  // QRPS_SYMMETRY_HPP_
