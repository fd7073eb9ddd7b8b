#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qrps/errors.hpp"
#include "qrps/families.hpp"
#include "qrps/oracle.hpp"
#include "qrps/symmetry.hpp"
#include "test_util.hpp"

using namespace qrps;

TEST_CASE("symmetry construction enforces bijectivity and sane names") {
  CHECK_NOTHROW(Symmetry("id", {}));
  CHECK_NOTHROW(Symmetry("swap", {{1, 2}, {2, 1}}));
  CHECK_NOTHROW(Symmetry("flip", {{1, -1}}));
  CHECK_NOTHROW(Symmetry("cycle", {{1, 2}, {2, 3}, {3, 1}}));
  // 2 would be hit by both 1 and the implicit fixpoint 2 -> 2.
  CHECK_THROWS_AS(Symmetry("bad", {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Symmetry("bad", {{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Symmetry("", {}), std::invalid_argument);
  CHECK_THROWS_AS(Symmetry("0", {}), std::invalid_argument);
  CHECK_THROWS_AS(Symmetry("two words", {}), std::invalid_argument);
}

TEST_CASE("admissibility follows quantifier blocks") {
  const Prefix& kbkf1 = gen_family(FamilyId::kbkf, 1).prefix;
  CHECK(is_admissible(Symmetry("id", {}), kbkf1));

  const auto sigma1 = family_symmetries(FamilyId::kbkf, 1)[0];
  CHECK(is_admissible(sigma1, kbkf1));

  // x_1 and y_1 of the hardened variant sit in blocks separated by b_1.
  const Prefix& hard1 = gen_family(FamilyId::kbkf_hard, 1).prefix;
  const Symmetry transplanted("sigma1", {{1, 3}, {3, 1}, {4, -4}});
  CHECK_FALSE(is_admissible(transplanted, hard1));

  CHECK_THROWS_AS(is_admissible(Symmetry("oob", {{9, -9}}), kbkf1), std::invalid_argument);
}

TEST_CASE("clause images") {
  const auto sigma1 = family_symmetries(FamilyId::kbkf, 1)[0];
  CHECK(apply_to_clause(sigma1, normalize_clause({-1, -2})) == normalize_clause({-1, -2}));
  CHECK(apply_to_clause(sigma1, normalize_clause({1, -3, -4})) == normalize_clause({2, 3, -4}));
  CHECK(apply_to_clause(Symmetry("id", {}), normalize_clause({5, -7})) ==
        normalize_clause({5, -7}));
}

TEST_CASE("applying a symmetry then its inverse is the identity") {
  std::mt19937 rng(7);
  const QBF q = gen_family(FamilyId::quparity, 5);
  const auto syms = family_symmetries(FamilyId::quparity, 5);
  std::uniform_int_distribution<std::size_t> pick_sym(0, syms.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_clause(0, q.matrix.size() - 1);
  for (int iter = 0; iter < 200; ++iter) {
    const Symmetry& s = syms[pick_sym(rng)];
    const Clause& c = q.matrix[pick_clause(rng)];
    CHECK(apply_to_clause(s.inverse(), apply_to_clause(s, c)) == c);
  }
}

TEST_CASE("is_symmetry checks the clause multiset") {
  const QBF q = gen_family(FamilyId::kbkf, 1);
  CHECK(is_symmetry(family_symmetries(FamilyId::kbkf, 1)[0], q));
  // Flipping x_1 sends C_1 to {1, -2}, which is not a matrix clause.
  CHECK_FALSE(is_symmetry(Symmetry("flip", {{1, -1}}), q));
  // Maps over unknown variables are not symmetries rather than errors.
  CHECK_FALSE(is_symmetry(Symmetry("oob", {{99, -99}}), q));
}

TEST_CASE("breaker synthesis reproduces the kbkf breaker") {
  for (int n : {1, 3, 10}) {
    const QBF q = gen_family(FamilyId::kbkf, n);
    const auto breakers = breaker_clauses(q, family_symmetries(FamilyId::kbkf, n));
    REQUIRE(breakers.size() == static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      CHECK(breakers[static_cast<std::size_t>(i) - 1] ==
            normalize_clause({-kbkf_vars::x(i), kbkf_vars::y(i)}));
    }
  }
}

TEST_CASE("breaker synthesis reproduces the quparity breaker") {
  for (int n : {2, 4, 10}) {
    const QBF q = gen_family(FamilyId::quparity, n);
    const auto breakers = breaker_clauses(q, family_symmetries(FamilyId::quparity, n));
    REQUIRE(breakers.size() == static_cast<std::size_t>(n));
    CHECK(breakers[0] == normalize_clause({-1, 2}));
    for (int i = 2; i <= n; ++i) {
      CHECK(breakers[static_cast<std::size_t>(i) - 1] == normalize_clause({-i}));
    }
  }
}

TEST_CASE("identity symmetries contribute no breaker clauses") {
  const QBF q = gen_family(FamilyId::kbkf, 2);
  CHECK(breaker_clauses(q, {Symmetry("id", {})}).empty());
  CHECK(breaker_clauses(q, {}).empty());
}

TEST_CASE("breaker synthesis rejects non-symmetries") {
  const QBF q = gen_family(FamilyId::kbkf, 2);
  CHECK_THROWS_AS(breaker_clauses(q, {Symmetry("flip", {{1, -1}})}), std::invalid_argument);
}

TEST_CASE("a surviving antecedent reports a non-clausal breaker") {
  // sigma = (x1 x2)(x3 x4) over one block: the implication for x3 keeps the
  // conjunct x1 <-> x2, which has no clausal form without auxiliaries.
  QBF q;
  q.prefix.append_block(Quantifier::exists, {1, 2, 3, 4});
  q.matrix.push_back(normalize_clause({1, 2}));
  q.matrix.push_back(normalize_clause({3, 4}));
  const Symmetry s("pairswap", {{1, 2}, {2, 1}, {3, 4}, {4, 3}});
  REQUIRE(is_symmetry(s, q));
  CHECK_THROWS_AS(breaker_clauses(q, {s}), std::domain_error);
}

TEST_CASE("breakers preserve the truth value on oracle-sized instances") {
  for (int n = 1; n <= 4; ++n) {
    QBF q = gen_family(FamilyId::kbkf, n);
    const bool before = evaluate(q);
    for (const Clause& c : breaker_clauses(q, family_symmetries(FamilyId::kbkf, n))) {
      q.matrix.push_back(c);
    }
    CHECK(evaluate(q) == before);
  }
  for (int n = 2; n <= 5; ++n) {
    QBF q = gen_family(FamilyId::quparity, n);
    const bool before = evaluate(q);
    for (const Clause& c : breaker_clauses(q, family_symmetries(FamilyId::quparity, n))) {
      q.matrix.push_back(c);
    }
    CHECK(evaluate(q) == before);
  }
}

TEST_CASE("breakers keep a true symmetric instance true") {
  QBF q;
  q.prefix.append_block(Quantifier::exists, {1, 2});
  q.matrix.push_back(normalize_clause({1, 2}));
  const Symmetry s("swap", {{1, 2}, {2, 1}});
  REQUIRE(is_symmetry(s, q));
  REQUIRE(evaluate(q));
  for (const Clause& c : breaker_clauses(q, {s})) q.matrix.push_back(c);
  CHECK(evaluate(q));
}

TEST_CASE("symmetry sidecar files round-trip") {
  const std::string text = qrps_test::golden("kbkf_2.sym");
  const auto syms = parse_symmetries(text);
  REQUIRE(syms.size() == 2);
  CHECK(syms[0].name() == "sigma1");
  CHECK(syms[1].apply(6) == -6);
  CHECK(serialize_symmetries(syms) == text);

  const auto qsyms = parse_symmetries(qrps_test::golden("quparity_2.sym"));
  REQUIRE(qsyms.size() == 2);
  CHECK(serialize_symmetries(qsyms) == qrps_test::golden("quparity_2.sym"));
  for (const Symmetry& s : qsyms) CHECK(is_symmetry(s, gen_family(FamilyId::quparity, 2)));
}

TEST_CASE("generated symmetries serialize to the golden sidecars") {
  CHECK(serialize_symmetries(family_symmetries(FamilyId::kbkf, 2)) ==
        qrps_test::golden("kbkf_2.sym"));
  CHECK(serialize_symmetries(family_symmetries(FamilyId::quparity, 2)) ==
        qrps_test::golden("quparity_2.sym"));
}

TEST_CASE("sidecar parser rejects malformed lines") {
  CHECK_THROWS_AS(parse_symmetries("s sigma1 1 2 2 1\n"), ParseError);   // no terminator
  CHECK_THROWS_AS(parse_symmetries("s sigma1 1 2 2 0\n"), ParseError);   // dangling variable
  CHECK_THROWS_AS(parse_symmetries("x sigma1 1 2 0\n"), ParseError);     // unknown tag
  CHECK_THROWS_AS(parse_symmetries("s sigma1 0 2 0\n"), ParseError);     // variable 0
  CHECK_THROWS_AS(parse_symmetries("s sigma1 1 2 1 3 0\n"), ParseError); // mapped twice
  CHECK_THROWS_AS(parse_symmetries("s sigma1 1 2 0\n"), ParseError);     // not bijective
  CHECK(parse_symmetries("c only a comment\n").empty());
}
