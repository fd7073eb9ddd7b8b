#include "qrps/families.hpp"

#include <stdexcept>

namespace qrps {

std::optional<FamilyId> family_from_name(std::string_view name) {
  if (name == "kbkf") return FamilyId::kbkf;
  if (name == "quparity") return FamilyId::quparity;
  if (name == "kbkf-hard") return FamilyId::kbkf_hard;
  return std::nullopt;
}

std::string family_name(FamilyId f) {
  switch (f) {
    case FamilyId::kbkf: return "kbkf";
    case FamilyId::quparity: return "quparity";
    case FamilyId::kbkf_hard: return "kbkf-hard";
  }
  return "?";
}

namespace {

void require_n(FamilyId f, int n) {
  const int min_n = f == FamilyId::quparity ? 2 : 1;
  if (n < min_n) {
    throw std::invalid_argument(family_name(f) + " requires n >= " + std::to_string(min_n));
  }
}

/// Shared by kbkf and kbkf_hard: the hardened variant uses a different index
/// scheme and adds the universal blocker b_j to every C_{2j}.
QBF gen_kbkf_like(int n, bool hardened) {
  auto x = [&](int j) { return hardened ? kbkf_hard_vars::x(j) : kbkf_vars::x(j); };
  auto y = [&](int j) { return hardened ? kbkf_hard_vars::y(j) : kbkf_vars::y(j); };
  auto a = [&](int j) { return hardened ? kbkf_hard_vars::a(j) : kbkf_vars::a(j); };
  auto z = [&](int j) { return hardened ? kbkf_hard_vars::z(n, j) : kbkf_vars::z(n, j); };

  QBF q;
  for (int j = 1; j <= n; ++j) {
    if (hardened) {
      q.prefix.append_block(Quantifier::exists, {x(j)});
      q.prefix.append_block(Quantifier::forall, {kbkf_hard_vars::b(j)});
      q.prefix.append_block(Quantifier::exists, {y(j)});
    } else {
      q.prefix.append_block(Quantifier::exists, {x(j), y(j)});
    }
    q.prefix.append_block(Quantifier::forall, {a(j)});
  }
  std::vector<Var> zs;
  for (int j = 1; j <= n; ++j) zs.push_back(z(j));
  q.prefix.append_block(Quantifier::exists, zs);

  std::vector<Lit> all_neg_z;
  for (int j = 1; j <= n; ++j) all_neg_z.push_back(-z(j));

  auto blocker = [&](int j) -> std::vector<Lit> {
    return hardened ? std::vector<Lit>{kbkf_hard_vars::b(j)} : std::vector<Lit>{};
  };

  // C_1
  q.matrix.push_back(Clause({-x(1), -y(1)}));
  // C_{2j}, C_{2j+1} for j = 1..n-1
  for (int j = 1; j <= n - 1; ++j) {
    std::vector<Lit> c2 = {x(j), -a(j), -x(j + 1), -y(j + 1)};
    for (Lit b : blocker(j)) c2.push_back(b);
    q.matrix.push_back(Clause(std::move(c2)));
    q.matrix.push_back(Clause({y(j), a(j), -x(j + 1), -y(j + 1)}));
  }
  // C_{2n}, C_{2n+1}
  std::vector<Lit> c2n = {x(n), -a(n)};
  c2n.insert(c2n.end(), all_neg_z.begin(), all_neg_z.end());
  for (Lit b : blocker(n)) c2n.push_back(b);
  q.matrix.push_back(Clause(std::move(c2n)));
  std::vector<Lit> c2n1 = {y(n), a(n)};
  c2n1.insert(c2n1.end(), all_neg_z.begin(), all_neg_z.end());
  q.matrix.push_back(Clause(std::move(c2n1)));
  // B_{2j-1}, B_{2j} for j = 1..n
  for (int j = 1; j <= n; ++j) {
    q.matrix.push_back(Clause({a(j), z(j)}));
    q.matrix.push_back(Clause({-a(j), z(j)}));
  }
  return q;
}

QBF gen_quparity(int n) {
  namespace v = quparity_vars;
  QBF q;
  std::vector<Var> xs;
  for (int j = 1; j <= n; ++j) xs.push_back(v::x(j));
  q.prefix.append_block(Quantifier::exists, xs);
  q.prefix.append_block(Quantifier::forall, {v::a1(n), v::a2(n)});
  std::vector<Var> ys;
  for (int j = 2; j <= n; ++j) ys.push_back(v::y(n, j));
  q.prefix.append_block(Quantifier::exists, ys);

  const Lit a1 = v::a1(n), a2 = v::a2(n);

  // A_j..D_j over the given universal tail (a1, a2) or (-a1, -a2).
  auto push_group = [&](Lit u1, Lit u2) {
    q.matrix.push_back(Clause({-v::x(1), -v::x(2), -v::y(n, 2), u1, u2}));
    q.matrix.push_back(Clause({-v::x(1), v::x(2), v::y(n, 2), u1, u2}));
    q.matrix.push_back(Clause({v::x(1), -v::x(2), v::y(n, 2), u1, u2}));
    q.matrix.push_back(Clause({v::x(1), v::x(2), -v::y(n, 2), u1, u2}));
    for (int j = 3; j <= n; ++j) {
      q.matrix.push_back(Clause({-v::y(n, j - 1), -v::x(j), -v::y(n, j), u1, u2}));
      q.matrix.push_back(Clause({-v::y(n, j - 1), v::x(j), v::y(n, j), u1, u2}));
      q.matrix.push_back(Clause({v::y(n, j - 1), -v::x(j), v::y(n, j), u1, u2}));
      q.matrix.push_back(Clause({v::y(n, j - 1), v::x(j), -v::y(n, j), u1, u2}));
    }
  };

  push_group(a1, a2);
  q.matrix.push_back(Clause({a1, a2, v::y(n, n)}));     // E_1
  q.matrix.push_back(Clause({-a1, -a2, -v::y(n, n)}));  // E_2
  push_group(-a1, -a2);
  return q;
}

}  // namespace

QBF gen_family(FamilyId f, int n) {
  require_n(f, n);
  switch (f) {
    case FamilyId::kbkf: return gen_kbkf_like(n, false);
    case FamilyId::kbkf_hard: return gen_kbkf_like(n, true);
    case FamilyId::quparity: return gen_quparity(n);
  }
  throw std::logic_error("unreachable");
}

std::vector<Symmetry> family_symmetries(FamilyId f, int n) {
  require_n(f, n);
  std::vector<Symmetry> out;
  switch (f) {
    case FamilyId::kbkf:
      for (int i = 1; i <= n; ++i) {
        std::map<Var, Lit> image;
        image[kbkf_vars::x(i)] = kbkf_vars::y(i);
        image[kbkf_vars::y(i)] = kbkf_vars::x(i);
        image[kbkf_vars::a(i)] = -kbkf_vars::a(i);
        out.emplace_back("sigma" + std::to_string(i), std::move(image));
      }
      break;
    case FamilyId::quparity: {
      namespace v = quparity_vars;
      {
        std::map<Var, Lit> image;
        image[v::x(1)] = v::x(2);
        image[v::x(2)] = v::x(1);
        out.emplace_back("sigma1", std::move(image));
      }
      for (int i = 2; i <= n; ++i) {
        std::map<Var, Lit> image;
        image[v::x(i)] = -v::x(i);
        image[v::a1(n)] = -v::a1(n);
        image[v::a2(n)] = -v::a2(n);
        for (int j = i; j <= n; ++j) image[v::y(n, j)] = -v::y(n, j);
        out.emplace_back("sigma" + std::to_string(i), std::move(image));
      }
      break;
    }
    case FamilyId::kbkf_hard:
      // The blockers b_j separate x_i from y_i, so none of the kbkf maps
      // remain admissible; the family ships without symmetries.
      break;
  }
  return out;
}

}  // namespace qrps
