#include "qrps/calculus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "qrps/errors.hpp"
#include "line_reader.hpp"

namespace qrps {

StepCounts count_steps(const Proof& pf) {
  StepCounts c;
  for (const ProofStep& s : pf.steps) {
    std::visit(
        [&](const auto& step) {
          using T = std::decay_t<decltype(step)>;
          if constexpr (std::is_same_v<T, AxiomStep>) ++c.axioms;
          else if constexpr (std::is_same_v<T, ResolveStep>) ++c.resolutions;
          else if constexpr (std::is_same_v<T, ReduceStep>) ++c.reductions;
          else ++c.sym_applications;
        },
        s);
  }
  return c;
}

std::string to_string(RuleViolation v) {
  switch (v) {
    case RuleViolation::none: return "no violation";
    case RuleViolation::axiom_index_out_of_range: return "axiom clause index out of range";
    case RuleViolation::premise_out_of_range: return "premise id out of range";
    case RuleViolation::unknown_variable: return "literal variable not in prefix";
    case RuleViolation::pivot_not_existential: return "pivot variable is not existential";
    case RuleViolation::pivot_missing: return "pivot literal not in first premise";
    case RuleViolation::pivot_complement_missing:
      return "negated pivot not in second premise";
    case RuleViolation::tautological_resolvent: return "resolvent is tautological";
    case RuleViolation::reduced_literal_missing: return "reduced literal not in premise";
    case RuleViolation::reduced_literal_not_universal:
      return "reduced literal is not universal";
    case RuleViolation::complement_present: return "complement of reduced literal present";
    case RuleViolation::existential_blocks_reduction:
      return "existential literal after the reduced literal";
    case RuleViolation::symmetry_rule_disabled: return "symmetry rule disabled";
    case RuleViolation::unknown_symmetry: return "symmetry name not found";
    case RuleViolation::not_a_symmetry: return "map is not a symmetry of the formula";
    case RuleViolation::empty_clause_not_derived: return "empty clause not derived";
  }
  return "?";
}

RuleViolation try_resolve(const Clause& c1, const Clause& c2, Lit pivot, const Prefix& p,
                          Clause& out) {
  if (!p.contains(var_of(pivot))) return RuleViolation::unknown_variable;
  if (!p.is_existential(var_of(pivot))) return RuleViolation::pivot_not_existential;
  if (!c1.contains(pivot)) return RuleViolation::pivot_missing;
  if (!c2.contains(-pivot)) return RuleViolation::pivot_complement_missing;
  std::vector<Lit> lits;
  lits.reserve(c1.size() + c2.size() - 2);
  for (Lit l : c1) {
    if (l != pivot) lits.push_back(l);
  }
  for (Lit l : c2) {
    if (l != -pivot) lits.push_back(l);
  }
  Clause r(std::move(lits));
  if (r.is_tautology()) return RuleViolation::tautological_resolvent;
  out = std::move(r);
  return RuleViolation::none;
}

Clause resolve(const Clause& c1, const Clause& c2, Lit pivot, const Prefix& p) {
  Clause out;
  if (const RuleViolation v = try_resolve(c1, c2, pivot, p, out); v != RuleViolation::none) {
    throw RuleError(v);
  }
  return out;
}

RuleViolation try_reduce(const Clause& c, Lit l, const Prefix& p, Clause& out) {
  if (!p.contains(var_of(l))) return RuleViolation::unknown_variable;
  if (!c.contains(l)) return RuleViolation::reduced_literal_missing;
  if (!p.is_universal(var_of(l))) return RuleViolation::reduced_literal_not_universal;
  if (c.contains(-l)) return RuleViolation::complement_present;
  const int l_pos = p.position(var_of(l));
  for (Lit k : c) {
    if (k == l) continue;
    if (!p.contains(var_of(k))) return RuleViolation::unknown_variable;
    if (p.is_existential(var_of(k)) && p.position(var_of(k)) > l_pos) {
      return RuleViolation::existential_blocks_reduction;
    }
  }
  out = c.without(l);
  return RuleViolation::none;
}

Clause reduce(const Clause& c, Lit l, const Prefix& p) {
  Clause out;
  if (const RuleViolation v = try_reduce(c, l, p, out); v != RuleViolation::none) {
    throw RuleError(v);
  }
  return out;
}

CheckReport check_proof(const QBF& q, const std::vector<Symmetry>& syms, const Proof& pf,
                        bool allow_sym) {
  CheckReport rep;
  rep.step_counts = count_steps(pf);
  rep.derived.reserve(pf.steps.size());

  std::map<std::string, const Symmetry*> by_name;
  for (const Symmetry& s : syms) by_name.emplace(s.name(), &s);
  std::map<std::string, bool> verified;  // is_symmetry is pricey; cache per name

  const auto reject = [&](int id, RuleViolation why) {
    rep.verdict = Verdict::reject;
    rep.failing_step = id;
    rep.reason = why;
    return rep;
  };

  for (std::size_t i = 0; i < pf.steps.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const auto premise_ok = [&](int ref) { return ref >= 1 && ref < id; };

    Clause concl;
    RuleViolation v = RuleViolation::none;
    if (const auto* ax = std::get_if<AxiomStep>(&pf.steps[i])) {
      if (ax->clause_index < 1 ||
          static_cast<std::size_t>(ax->clause_index) > q.matrix.size()) {
        return reject(id, RuleViolation::axiom_index_out_of_range);
      }
      concl = q.matrix[static_cast<std::size_t>(ax->clause_index) - 1];
    } else if (const auto* r = std::get_if<ResolveStep>(&pf.steps[i])) {
      if (!premise_ok(r->premise1) || !premise_ok(r->premise2)) {
        return reject(id, RuleViolation::premise_out_of_range);
      }
      v = try_resolve(rep.derived[static_cast<std::size_t>(r->premise1) - 1],
                      rep.derived[static_cast<std::size_t>(r->premise2) - 1], r->pivot,
                      q.prefix, concl);
    } else if (const auto* u = std::get_if<ReduceStep>(&pf.steps[i])) {
      if (!premise_ok(u->premise)) return reject(id, RuleViolation::premise_out_of_range);
      v = try_reduce(rep.derived[static_cast<std::size_t>(u->premise) - 1], u->reduced,
                     q.prefix, concl);
    } else {
      const auto& y = std::get<SymApplyStep>(pf.steps[i]);
      if (!premise_ok(y.premise)) return reject(id, RuleViolation::premise_out_of_range);
      if (!allow_sym) return reject(id, RuleViolation::symmetry_rule_disabled);
      const auto it = by_name.find(y.symmetry);
      if (it == by_name.end()) return reject(id, RuleViolation::unknown_symmetry);
      auto cached = verified.find(y.symmetry);
      if (cached == verified.end()) {
        cached = verified.emplace(y.symmetry, is_symmetry(*it->second, q)).first;
      }
      if (!cached->second) return reject(id, RuleViolation::not_a_symmetry);
      concl = it->second->apply(rep.derived[static_cast<std::size_t>(y.premise) - 1]);
    }
    if (v != RuleViolation::none) return reject(id, v);
    rep.derived.push_back(std::move(concl));
  }

  if (rep.derived.empty() || !rep.derived.back().empty()) {
    return reject(0, RuleViolation::empty_clause_not_derived);
  }
  rep.verdict = Verdict::accept;
  return rep;
}

namespace {

/// Rule content with premises already remapped, as a dedup key.
std::string step_key(const ProofStep& s) {
  return std::visit(
      [](const auto& step) -> std::string {
        using T = std::decay_t<decltype(step)>;
        if constexpr (std::is_same_v<T, AxiomStep>) {
          return "a " + std::to_string(step.clause_index);
        } else if constexpr (std::is_same_v<T, ResolveStep>) {
          return "r " + std::to_string(step.premise1) + ' ' + std::to_string(step.premise2) +
                 ' ' + std::to_string(step.pivot);
        } else if constexpr (std::is_same_v<T, ReduceStep>) {
          return "u " + std::to_string(step.premise) + ' ' + std::to_string(step.reduced);
        } else {
          return "y " + std::to_string(step.premise) + ' ' + step.symmetry;
        }
      },
      s);
}

void remap_premises(ProofStep& s, const std::vector<int>& new_id) {
  std::visit(
      [&](auto& step) {
        using T = std::decay_t<decltype(step)>;
        if constexpr (std::is_same_v<T, ResolveStep>) {
          step.premise1 = new_id[static_cast<std::size_t>(step.premise1)];
          step.premise2 = new_id[static_cast<std::size_t>(step.premise2)];
        } else if constexpr (std::is_same_v<T, ReduceStep>) {
          step.premise = new_id[static_cast<std::size_t>(step.premise)];
        } else if constexpr (std::is_same_v<T, SymApplyStep>) {
          step.premise = new_id[static_cast<std::size_t>(step.premise)];
        }
      },
      s);
}

/// Drops duplicate rule applications, redirecting later references to the
/// first occurrence. The final step is always kept so the proof still ends
/// in the same conclusion.
void dedup_steps(Proof& pf) {
  std::unordered_map<std::string, int> seen;
  std::vector<int> remap(pf.steps.size() + 1, 0);
  std::vector<ProofStep> out;
  for (std::size_t i = 0; i < pf.steps.size(); ++i) {
    ProofStep s = pf.steps[i];
    remap_premises(s, remap);
    const std::string key = step_key(s);
    const bool last = i + 1 == pf.steps.size();
    const auto it = seen.find(key);
    if (it != seen.end() && !last) {
      remap[i + 1] = it->second;
      continue;
    }
    out.push_back(std::move(s));
    remap[i + 1] = static_cast<int>(out.size());
    seen.emplace(key, remap[i + 1]);
  }
  pf.steps = std::move(out);
}

int find_matrix_index(const QBF& q, const Clause& c) {
  for (std::size_t i = 0; i < q.matrix.size(); ++i) {
    if (q.matrix[i] == c) return static_cast<int>(i) + 1;
  }
  throw std::logic_error("symmetry image of an axiom is not a matrix clause");
}

}  // namespace

Proof eliminate_symmetry_steps(const QBF& q, const std::vector<Symmetry>& syms,
                               const Proof& pf) {
  if (check_proof(q, syms, pf, true).verdict != Verdict::accept) {
    throw std::invalid_argument("proof is not an accepted refutation under Q-Res+S");
  }
  std::map<std::string, const Symmetry*> by_name;
  for (const Symmetry& s : syms) by_name.emplace(s.name(), &s);

  Proof cur = pf;
  while (true) {
    std::size_t s_idx = cur.steps.size();
    for (std::size_t i = 0; i < cur.steps.size(); ++i) {
      if (std::holds_alternative<SymApplyStep>(cur.steps[i])) {
        s_idx = i;
        break;
      }
    }
    if (s_idx == cur.steps.size()) break;

    const auto& sym_step = std::get<SymApplyStep>(cur.steps[s_idx]);
    const Symmetry& sigma = *by_name.at(sym_step.symmetry);
    const int s_id = static_cast<int>(s_idx) + 1;

    std::vector<ProofStep> out(cur.steps.begin(), cur.steps.begin() + static_cast<long>(s_idx));
    std::vector<int> new_id(cur.steps.size() + 1, 0);
    for (int i = 1; i < s_id; ++i) new_id[static_cast<std::size_t>(i)] = i;

    // Emit the sigma-image of the derivation ending at old step `id`. The
    // subtree precedes the earliest S step, so it is S-free.
    std::map<int, int> memo;
    const std::function<int(int)> image = [&](int id) -> int {
      if (const auto it = memo.find(id); it != memo.end()) return it->second;
      const ProofStep& st = cur.steps[static_cast<std::size_t>(id) - 1];
      ProofStep img;
      if (const auto* ax = std::get_if<AxiomStep>(&st)) {
        const Clause& orig = q.matrix[static_cast<std::size_t>(ax->clause_index) - 1];
        img = AxiomStep{find_matrix_index(q, sigma.apply(orig))};
      } else if (const auto* r = std::get_if<ResolveStep>(&st)) {
        const int p1 = image(r->premise1);
        const int p2 = image(r->premise2);
        img = ResolveStep{p1, p2, sigma.apply(r->pivot)};
      } else if (const auto* u = std::get_if<ReduceStep>(&st)) {
        const int p = image(u->premise);
        img = ReduceStep{p, sigma.apply(u->reduced)};
      } else {
        throw std::logic_error("S step inside the premise tree of the earliest S step");
      }
      out.push_back(std::move(img));
      const int nid = static_cast<int>(out.size());
      memo.emplace(id, nid);
      return nid;
    };

    new_id[static_cast<std::size_t>(s_id)] = image(sym_step.premise);

    for (std::size_t i = s_idx + 1; i < cur.steps.size(); ++i) {
      ProofStep st = cur.steps[i];
      remap_premises(st, new_id);
      out.push_back(std::move(st));
      new_id[i + 1] = static_cast<int>(out.size());
    }

    cur.steps = std::move(out);
    dedup_steps(cur);
  }
  return cur;
}

Proof parse_trace(std::string_view text) {
  detail::LineReader in{text};
  Proof pf;
  Lit max_lit = 0;
  std::optional<long long> declared_steps;
  bool have_header = false;

  auto toks = in.next();
  if (!toks.empty() && toks[0] == "p") {
    if (toks.size() != 4 || toks[1] != "qrps") {
      throw ParseError(in.line_no, "expected header 'p qrps <max-var> <num-steps>'");
    }
    const auto mv = detail::parse_int(toks[2]);
    const auto ns = detail::parse_int(toks[3]);
    if (!mv || !ns || *mv < 0 || *ns < 0) throw ParseError(in.line_no, "malformed header counts");
    pf.max_var = static_cast<Var>(*mv);
    declared_steps = *ns;
    have_header = true;
    toks = in.next();
  }

  for (; !toks.empty(); toks = in.next()) {
    const int expected = static_cast<int>(pf.steps.size()) + 1;
    const auto id = detail::parse_int(toks[0]);
    if (!id) throw ParseError(in.line_no, "malformed step id");
    if (*id != expected) {
      throw ParseError(in.line_no, "id gap: expected step " + std::to_string(expected) +
                                       ", found " + std::to_string(*id));
    }
    if (toks.size() < 2) throw ParseError(in.line_no, "missing step tag");
    if (toks.back() != "0") throw ParseError(in.line_no, "step line not 0-terminated");

    const auto premise = [&](std::string_view tok) -> int {
      const auto p = detail::parse_int(tok);
      if (!p || *p < 1 || *p >= expected) {
        throw ParseError(in.line_no, "forward or unknown premise id");
      }
      return static_cast<int>(*p);
    };
    const auto literal = [&](std::string_view tok) -> Lit {
      const auto l = detail::parse_int(tok);
      if (!l || *l == 0) throw ParseError(in.line_no, "malformed literal");
      max_lit = std::max(max_lit, var_of(static_cast<Lit>(*l)));
      return static_cast<Lit>(*l);
    };

    const std::string_view tag = toks[1];
    if (tag == "a") {
      if (toks.size() != 4) throw ParseError(in.line_no, "axiom step wants one clause index");
      const auto idx = detail::parse_int(toks[2]);
      if (!idx || *idx < 1) throw ParseError(in.line_no, "malformed matrix clause index");
      pf.steps.push_back(AxiomStep{static_cast<int>(*idx)});
    } else if (tag == "r") {
      if (toks.size() != 6) throw ParseError(in.line_no, "resolution step wants id1 id2 pivot");
      pf.steps.push_back(ResolveStep{premise(toks[2]), premise(toks[3]), literal(toks[4])});
    } else if (tag == "u") {
      if (toks.size() != 5) throw ParseError(in.line_no, "reduction step wants id1 literal");
      pf.steps.push_back(ReduceStep{premise(toks[2]), literal(toks[3])});
    } else if (tag == "y") {
      if (toks.size() != 5) throw ParseError(in.line_no, "symmetry step wants id1 name");
      if (toks[2] == "0" || toks[3] == "0") throw ParseError(in.line_no, "malformed symmetry step");
      pf.steps.push_back(SymApplyStep{premise(toks[2]), std::string(toks[3])});
    } else {
      throw ParseError(in.line_no, "unknown step tag '" + std::string(tag) + "'");
    }
  }

  if (declared_steps && *declared_steps != static_cast<long long>(pf.steps.size())) {
    throw ParseError("step count mismatch: header declares " + std::to_string(*declared_steps) +
                     ", trace has " + std::to_string(pf.steps.size()));
  }
  if (!have_header) pf.max_var = max_lit;
  return pf;
}

std::string serialize_trace(const Proof& pf) {
  std::string out = "p qrps " + std::to_string(pf.max_var) + ' ' +
                    std::to_string(pf.steps.size()) + '\n';
  for (std::size_t i = 0; i < pf.steps.size(); ++i) {
    out += std::to_string(i + 1);
    std::visit(
        [&](const auto& step) {
          using T = std::decay_t<decltype(step)>;
          if constexpr (std::is_same_v<T, AxiomStep>) {
            out += " a " + std::to_string(step.clause_index);
          } else if constexpr (std::is_same_v<T, ResolveStep>) {
            out += " r " + std::to_string(step.premise1) + ' ' +
                   std::to_string(step.premise2) + ' ' + std::to_string(step.pivot);
          } else if constexpr (std::is_same_v<T, ReduceStep>) {
            out += " u " + std::to_string(step.premise) + ' ' + std::to_string(step.reduced);
          } else {
            out += " y " + std::to_string(step.premise) + ' ' + step.symmetry;
          }
        },
        pf.steps[i]);
    out += " 0\n";
  }
  return out;
}

}  // namespace qrps
