#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrps/families.hpp"
#include "qrps/oracle.hpp"
#include "qrps/qdimacs.hpp"

using namespace qrps;

namespace {

QBF qbf_of(const std::string& text) { return parse_qdimacs(text); }

}  // namespace

TEST_CASE("basic game semantics") {
  CHECK(evaluate(qbf_of("p cnf 1 1\ne 1 0\n1 0\n")));
  CHECK_FALSE(evaluate(qbf_of("p cnf 1 2\ne 1 0\n1 0\n-1 0\n")));
  CHECK_FALSE(evaluate(qbf_of("p cnf 1 1\na 1 0\n1 0\n")));
  CHECK(evaluate(qbf_of("p cnf 2 1\na 1 0\ne 2 0\n1 2 0\n")));
  // Empty matrix is vacuously true; an empty clause falsifies everything.
  CHECK(evaluate(qbf_of("p cnf 1 0\ne 1 0\n")));
  CHECK_FALSE(evaluate(qbf_of("p cnf 1 1\ne 1 0\n0\n")));
}

TEST_CASE("quantifier order matters") {
  // exists x forall a. (x <-> a) is false, forall a exists x. (x <-> a) true.
  const std::string matrix = "1 -2 0\n-1 2 0\n";
  CHECK_FALSE(evaluate(qbf_of("p cnf 2 2\ne 1 0\na 2 0\n" + matrix)));
  CHECK(evaluate(qbf_of("p cnf 2 2\na 2 0\ne 1 0\n" + matrix)));
}

TEST_CASE("family instances are false") {
  for (int n = 1; n <= 4; ++n) CHECK_FALSE(evaluate(gen_family(FamilyId::kbkf, n)));
  for (int n = 1; n <= 3; ++n) CHECK_FALSE(evaluate(gen_family(FamilyId::kbkf_hard, n)));
  for (int n = 2; n <= 6; ++n) CHECK_FALSE(evaluate(gen_family(FamilyId::quparity, n)));
}

TEST_CASE("variable limit guards the recursion") {
  CHECK_THROWS_AS(evaluate(gen_family(FamilyId::kbkf, 7)), std::invalid_argument);
  CHECK_FALSE(evaluate(gen_family(FamilyId::kbkf, 7), /*max_vars=*/28));
  CHECK_THROWS_AS(evaluate(gen_family(FamilyId::kbkf, 2), /*max_vars=*/5),
                  std::invalid_argument);
}

TEST_CASE("evaluation is invariant under a verified symmetry") {
  for (int n = 2; n <= 4; ++n) {
    const QBF q = gen_family(FamilyId::quparity, n);
    const bool value = evaluate(q);
    for (const Symmetry& s : family_symmetries(FamilyId::quparity, n)) {
      QBF mapped = q;
      for (Clause& c : mapped.matrix) c = apply_to_clause(s, c);
      CHECK(evaluate(mapped) == value);
    }
  }
}
