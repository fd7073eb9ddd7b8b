#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>

#include "qrps/calculus.hpp"
#include "qrps/families.hpp"
#include "qrps/oracle.hpp"
#include "qrps/short_proofs.hpp"

using namespace qrps;

namespace {

/// Conclusions of the non-axiom steps, in step order, via the checker.
std::vector<Clause> rule_conclusions(const ProvedInstance& inst, bool allow_sym) {
  const CheckReport rep = check_proof(inst.formula, inst.symmetries, inst.proof, allow_sym);
  REQUIRE(rep.verdict == Verdict::accept);
  std::vector<Clause> out;
  for (std::size_t i = 0; i < inst.proof.steps.size(); ++i) {
    if (!std::holds_alternative<AxiomStep>(inst.proof.steps[i])) out.push_back(rep.derived[i]);
  }
  return out;
}

std::vector<Lit> lits(std::vector<Lit> v) { return v; }

/// Closed forms of every intermediate clause in the four scripts.

std::vector<Clause> kbkf_breaker_expected(int n) {
  namespace v = kbkf_vars;
  std::vector<Clause> out;
  const auto neg_a = [&](int lo, int hi) {
    std::vector<Lit> ls;
    for (int i = lo; i <= hi; ++i) ls.push_back(-v::a(i));
    return ls;
  };
  out.push_back(normalize_clause({-v::x(1)}));
  for (int j = 1; j <= n - 1; ++j) {
    auto tilde = neg_a(1, j);
    tilde.push_back(-v::x(j + 1));
    tilde.push_back(-v::y(j + 1));
    out.push_back(normalize_clause(tilde));
    auto uj = neg_a(1, j);
    uj.push_back(-v::x(j + 1));
    out.push_back(normalize_clause(uj));
  }
  auto v0 = neg_a(1, n);
  for (int i = 1; i <= n; ++i) v0.push_back(-v::z(n, i));
  out.push_back(normalize_clause(v0));
  for (int j = 1; j <= n; ++j) {
    auto vj = neg_a(1, n);
    for (int i = j + 1; i <= n; ++i) vj.push_back(-v::z(n, i));
    out.push_back(normalize_clause(vj));
  }
  for (int j = 1; j <= n; ++j) out.push_back(normalize_clause(neg_a(j + 1, n)));
  return out;
}

std::vector<Clause> quparity_breaker_expected(int n) {
  namespace v = quparity_vars;
  const Lit a1 = v::a1(n), a2 = v::a2(n);
  std::vector<Clause> out;
  out.push_back(normalize_clause({v::x(2), -v::y(n, 2), a1, a2}));
  out.push_back(normalize_clause({-v::y(n, 2), a1, a2}));
  for (int j = 3; j <= n; ++j) {
    out.push_back(normalize_clause({v::y(n, j - 1), -v::y(n, j), a1, a2}));
  }
  for (int j = 3; j <= n; ++j) out.push_back(normalize_clause({-v::y(n, j), a1, a2}));
  out.push_back(normalize_clause({a1, a2}));
  out.push_back(normalize_clause({a2}));
  out.push_back(Clause{});
  return out;
}

std::vector<Clause> kbkf_sym_expected(int n) {
  namespace v = kbkf_vars;
  std::vector<Clause> out;
  for (int j = n; j >= 1; --j) {
    std::vector<Lit> uj{v::y(n)};
    for (int i = j; i <= n; ++i) uj.push_back(v::a(i));
    for (int i = 1; i <= j - 1; ++i) uj.push_back(-v::z(n, i));
    out.push_back(normalize_clause(uj));
  }
  const auto pos_a = [&](int hi) {
    std::vector<Lit> ls;
    for (int i = 1; i <= hi; ++i) ls.push_back(v::a(i));
    return ls;
  };
  for (int j = n; j >= 2; --j) {
    auto vj = pos_a(j - 1);
    vj.push_back(v::y(j));
    out.push_back(normalize_clause(vj));  // V_j
    auto vjp = pos_a(j - 1);
    vjp.push_back(v::x(j));
    out.push_back(normalize_clause(vjp));  // V_j'
    auto vpp = pos_a(j - 1);
    vpp.push_back(v::y(j - 1));
    vpp.push_back(-v::y(j));
    out.push_back(normalize_clause(vpp));  // V_j''
    auto wj = pos_a(j - 1);
    wj.push_back(v::y(j - 1));
    out.push_back(normalize_clause(wj));  // W_{j-1}
  }
  out.push_back(normalize_clause({v::y(1)}));   // V_1
  out.push_back(normalize_clause({v::x(1)}));   // V_1'
  out.push_back(normalize_clause({-v::y(1)}));  // V_1''
  out.push_back(Clause{});
  return out;
}

std::vector<Clause> quparity_sym_expected(int n) {
  namespace v = quparity_vars;
  const Lit a1 = v::a1(n), a2 = v::a2(n);
  const auto xs = [&](int hi) {
    std::vector<Lit> ls;
    for (int i = 1; i <= hi; ++i) ls.push_back(v::x(i));
    return ls;
  };
  std::vector<Clause> out;
  if (n == 2) {
    out.push_back(normalize_clause({v::x(1), v::x(2), a1, a2}));
  } else {
    out.push_back(normalize_clause({v::y(n, n - 1), v::x(n), a1, a2}));
    for (int j = n - 1; j >= 3; --j) {
      std::vector<Lit> uj{v::y(n, j - 1)};
      for (int i = j; i <= n; ++i) uj.push_back(v::x(i));
      uj.push_back(a1);
      uj.push_back(a2);
      out.push_back(normalize_clause(uj));
    }
    auto u2 = xs(n);
    u2.push_back(a1);
    u2.push_back(a2);
    out.push_back(normalize_clause(u2));
  }
  auto with_a1 = xs(n);
  with_a1.push_back(a1);
  out.push_back(normalize_clause(with_a1));
  out.push_back(normalize_clause(xs(n)));  // V_n
  for (int j = n; j >= 2; --j) {
    auto wj = xs(j - 1);
    wj.push_back(-v::x(j));
    out.push_back(normalize_clause(wj));     // W_j
    out.push_back(normalize_clause(xs(j - 1)));  // V_{j-1}
  }
  out.push_back(normalize_clause({v::x(2)}));   // W_1
  out.push_back(normalize_clause({-v::x(2)}));  // W_2
  out.push_back(Clause{});
  return out;
}

}  // namespace

TEST_CASE("kbkf breaker refutations: counts, acceptance, intermediates") {
  for (int n : {1, 2, 3, 7}) {
    const auto inst = prove_kbkf_breaker(n);
    CHECK(inst.formula.matrix.size() == 5 * static_cast<std::size_t>(n) + 1);
    CHECK(count_steps(inst.proof).rule_applications() == 4 * n);
    CHECK(count_steps(inst.proof).sym_applications == 0);
    CHECK(rule_conclusions(inst, false) == kbkf_breaker_expected(n));
  }
}

TEST_CASE("breaker proofs refute the formula with the synthesized breaker") {
  for (int n = 1; n <= 12; ++n) {
    const QBF base = gen_family(FamilyId::kbkf, n);
    const auto breakers = breaker_clauses(base, family_symmetries(FamilyId::kbkf, n));
    const auto inst = prove_kbkf_breaker(n);
    REQUIRE(inst.formula.matrix.size() == base.matrix.size() + breakers.size());
    const std::vector<Clause> tail(inst.formula.matrix.begin() +
                                       static_cast<long>(base.matrix.size()),
                                   inst.formula.matrix.end());
    CHECK(tail == breakers);
  }
  for (int n = 2; n <= 12; ++n) {
    const QBF base = gen_family(FamilyId::quparity, n);
    const auto breakers = breaker_clauses(base, family_symmetries(FamilyId::quparity, n));
    const auto inst = prove_quparity_breaker(n);
    REQUIRE(inst.formula.matrix.size() == base.matrix.size() + breakers.size());
    const std::vector<Clause> tail(inst.formula.matrix.begin() +
                                       static_cast<long>(base.matrix.size()),
                                   inst.formula.matrix.end());
    CHECK(tail == breakers);
  }
}

TEST_CASE("kbkf breaker n=1 starts from {-x_1} and takes 4 steps") {
  const auto inst = prove_kbkf_breaker(1);
  const auto concl = rule_conclusions(inst, false);
  REQUIRE(concl.size() == 4);
  CHECK(concl.front() == normalize_clause({-1}));
  CHECK(concl.back().empty());
}

TEST_CASE("quparity breaker refutations: counts, acceptance, intermediates") {
  for (int n : {2, 3, 5, 8}) {
    const auto inst = prove_quparity_breaker(n);
    CHECK(count_steps(inst.proof).rule_applications() == 2 * n + 1);
    CHECK(rule_conclusions(inst, false) == quparity_breaker_expected(n));
  }
}

TEST_CASE("quparity breaker n=2: second step is {-y_2, a_1, a_2}") {
  const auto inst = prove_quparity_breaker(2);
  const auto concl = rule_conclusions(inst, false);
  REQUIRE(concl.size() == 5);
  CHECK(concl[1] == normalize_clause({3, 4, -5}));
  CHECK(concl.back().empty());
}

TEST_CASE("kbkf symmetry-rule refutations: counts, acceptance, intermediates") {
  for (int n : {1, 2, 3, 6}) {
    const auto inst = prove_kbkf_sym(n);
    CHECK(inst.formula == gen_family(FamilyId::kbkf, n));
    CHECK(count_steps(inst.proof).rule_applications() == 5 * n);
    CHECK(count_steps(inst.proof).sym_applications == n);
    CHECK(rule_conclusions(inst, true) == kbkf_sym_expected(n));
  }
}

TEST_CASE("kbkf sym n=1: the S step concludes {x_1}") {
  const auto inst = prove_kbkf_sym(1);
  const CheckReport rep = check_proof(inst.formula, inst.symmetries, inst.proof, true);
  REQUIRE(rep.verdict == Verdict::accept);
  for (std::size_t i = 0; i < inst.proof.steps.size(); ++i) {
    if (std::holds_alternative<SymApplyStep>(inst.proof.steps[i])) {
      CHECK(rep.derived[i] == normalize_clause(lits({1})));
    }
  }
  CHECK(count_steps(inst.proof).rule_applications() == 5);
}

TEST_CASE("kbkf sym n=4 accepts with S and rejects without") {
  const auto inst = prove_kbkf_sym(4);
  CHECK(count_steps(inst.proof).rule_applications() == 20);
  CHECK(check_proof(inst.formula, inst.symmetries, inst.proof, true).verdict ==
        Verdict::accept);
  CHECK(check_proof(inst.formula, inst.symmetries, inst.proof, false).verdict ==
        Verdict::reject);
}

TEST_CASE("quparity symmetry-rule refutations: counts, acceptance, intermediates") {
  for (int n : {2, 3, 4, 7}) {
    const auto inst = prove_quparity_sym(n);
    CHECK(inst.formula == gen_family(FamilyId::quparity, n));
    CHECK(count_steps(inst.proof).rule_applications() == 3 * n + 2);
    CHECK(rule_conclusions(inst, true) == quparity_sym_expected(n));
  }
}

TEST_CASE("quparity sym n=3: the sigma_3 image of V_3 and the final S pair") {
  const auto inst = prove_quparity_sym(3);
  const CheckReport rep = check_proof(inst.formula, inst.symmetries, inst.proof, true);
  REQUIRE(rep.verdict == Verdict::accept);
  std::vector<Clause> sym_concl;
  for (std::size_t i = 0; i < inst.proof.steps.size(); ++i) {
    if (std::holds_alternative<SymApplyStep>(inst.proof.steps[i])) {
      sym_concl.push_back(rep.derived[i]);
    }
  }
  REQUIRE(sym_concl.size() == 4);  // sigma_3, sigma_2, then sigma_1, sigma_2
  CHECK(sym_concl[0] == normalize_clause({1, 2, -3}));
  CHECK(sym_concl[2] == normalize_clause({2}));
  CHECK(sym_concl[3] == normalize_clause({-2}));
}

TEST_CASE("accepted refutations refute formulas the oracle calls false") {
  for (int n = 1; n <= 4; ++n) {
    const auto br = prove_kbkf_breaker(n);
    REQUIRE(check_proof(br.formula, {}, br.proof, false).verdict == Verdict::accept);
    CHECK_FALSE(evaluate(br.formula));
    const auto sy = prove_kbkf_sym(n);
    REQUIRE(check_proof(sy.formula, sy.symmetries, sy.proof, true).verdict == Verdict::accept);
    CHECK_FALSE(evaluate(sy.formula));
  }
  for (int n = 2; n <= 5; ++n) {
    const auto br = prove_quparity_breaker(n);
    REQUIRE(check_proof(br.formula, {}, br.proof, false).verdict == Verdict::accept);
    CHECK_FALSE(evaluate(br.formula));
  }
}

TEST_CASE("prove_family dispatch") {
  CHECK(prove_family(FamilyId::kbkf, Strategy::breaker, 2).proof ==
        prove_kbkf_breaker(2).proof);
  CHECK(prove_family(FamilyId::quparity, Strategy::symrule, 3).proof ==
        prove_quparity_sym(3).proof);
  CHECK_THROWS_AS(prove_family(FamilyId::kbkf_hard, Strategy::breaker, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(prove_family(FamilyId::quparity, Strategy::breaker, 1),
                  std::invalid_argument);
}

TEST_CASE("proof generation stays linear: n = 10000 smoke test") {
  const auto t0 = std::chrono::steady_clock::now();
  const int n = 10000;
  CHECK(count_steps(prove_kbkf_breaker(n).proof).rule_applications() == 4 * n);
  CHECK(count_steps(prove_quparity_breaker(n).proof).rule_applications() == 2 * n + 1);
  CHECK(count_steps(prove_kbkf_sym(n).proof).rule_applications() == 5 * n);
  // The quparity sigma_i move y_i..y_n each, so that sidecar alone is
  // quadratic in total size; the trace part is exercised at a size where the
  // sidecar stays manageable.
  CHECK(count_steps(prove_quparity_sym(2000).proof).rule_applications() == 3 * 2000 + 2);
  const auto elapsed = std::chrono::steady_clock::now() - t0;
#ifdef NDEBUG
  CHECK(std::chrono::duration_cast<std::chrono::seconds>(elapsed).count() < 10);
#else
  // Instrumented builds run this an order of magnitude slower.
  CHECK(std::chrono::duration_cast<std::chrono::seconds>(elapsed).count() < 120);
#endif
}
