#ifndef QRPS_FAMILIES_HPP_
#define QRPS_FAMILIES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrps/qbf.hpp"
#include "qrps/symmetry.hpp"

namespace qrps {

enum class FamilyId { kbkf, quparity, kbkf_hard };

std::optional<FamilyId> family_from_name(std::string_view name);
std::string family_name(FamilyId f);

/// Variable index schemes (1-based j):
///   kbkf:       x_j = 3(j-1)+1, y_j = 3(j-1)+2, a_j = 3j, z_j = 3n+j
///   quparity:   x_j = j, a_1 = n+1, a_2 = n+2, y_j = n+1+j (j = 2..n)
///   kbkf_hard:  x_j = 4(j-1)+1, b_j = 4(j-1)+2, y_j = 4(j-1)+3, a_j = 4j,
///               z_j = 4n+j
namespace kbkf_vars {
inline Var x(int j) { return 3 * (j - 1) + 1; }
inline Var y(int j) { return 3 * (j - 1) + 2; }
inline Var a(int j) { return 3 * j; }
inline Var z(int n, int j) { return 3 * n + j; }
}  // namespace kbkf_vars

namespace quparity_vars {
inline Var x(int j) { return j; }
inline Var a1(int n) { return n + 1; }
inline Var a2(int n) { return n + 2; }
inline Var y(int n, int j) { return n + 1 + j; }
}  // namespace quparity_vars

namespace kbkf_hard_vars {
inline Var x(int j) { return 4 * (j - 1) + 1; }
inline Var b(int j) { return 4 * (j - 1) + 2; }
inline Var y(int j) { return 4 * (j - 1) + 3; }
inline Var a(int j) { return 4 * j; }
inline Var z(int n, int j) { return 4 * n + j; }
}  // namespace kbkf_hard_vars

/// Generates the family instance. Throws std::invalid_argument when n is out
/// of range (kbkf, kbkf_hard: n >= 1; quparity: n >= 2).
QBF gen_family(FamilyId f, int n);

/// The documented symmetries: kbkf -> sigma_i = (x_i y_i)(a_i -a_i);
/// quparity -> sigma_1 = (x_1 x_2) and, for i >= 2, sigma_i flipping x_i,
/// a_1, a_2, and y_i..y_n; kbkf_hard -> none.
std::vector<Symmetry> family_symmetries(FamilyId f, int n);

}  // namespace qrps

#endif  // QRPS_FAMILIES_HPP_
