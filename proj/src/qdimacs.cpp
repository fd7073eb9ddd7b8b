#include "qrps/qdimacs.hpp"

#include <vector>

#include "qrps/errors.hpp"
#include "line_reader.hpp"

namespace qrps {

using detail::parse_int;

QBF parse_qdimacs(std::string_view text) {
  detail::LineReader in{text};

  auto header = in.next();
  if (header.size() != 4 || header[0] != "p" || header[1] != "cnf") {
    throw ParseError(in.line_no, "expected header 'p cnf <nvars> <nclauses>'");
  }
  const auto nvars = parse_int(header[2]);
  const auto nclauses = parse_int(header[3]);
  if (!nvars || !nclauses || *nvars < 0 || *nclauses < 0) {
    throw ParseError(in.line_no, "malformed header counts");
  }

  QBF q;
  std::size_t clauses_read = 0;
  bool in_prefix = true;

  for (auto toks = in.next(); !toks.empty(); toks = in.next()) {
    if (toks[0] == "e" || toks[0] == "a") {
      if (!in_prefix) throw ParseError(in.line_no, "quantifier line after first clause");
      if (toks.back() != "0") throw ParseError(in.line_no, "quantifier line not 0-terminated");
      std::vector<Var> vars;
      for (std::size_t i = 1; i + 1 < toks.size(); ++i) {
        const auto v = parse_int(toks[i]);
        if (!v || *v <= 0) throw ParseError(in.line_no, "quantified variables must be positive");
        if (*v > *nvars) {
          throw ParseError(in.line_no, "variable " + std::to_string(*v) + " exceeds header count");
        }
        vars.push_back(static_cast<Var>(*v));
      }
      if (vars.empty()) throw ParseError(in.line_no, "empty quantifier block");
      const Quantifier quant = toks[0] == "e" ? Quantifier::exists : Quantifier::forall;
      try {
        q.prefix.append_block(quant, vars);
      } catch (const std::invalid_argument& e) {
        throw ParseError(in.line_no, e.what());
      }
      continue;
    }

    in_prefix = false;
    if (clauses_read == static_cast<std::size_t>(*nclauses)) {
      throw ParseError(in.line_no, "more clauses than the header declares");
    }
    if (toks.back() != "0") throw ParseError(in.line_no, "clause not 0-terminated");
    std::vector<Lit> lits;
    for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
      const auto l = parse_int(toks[i]);
      if (!l || *l == 0) throw ParseError(in.line_no, "malformed literal");
      const Var v = var_of(static_cast<Lit>(*l));
      if (v > *nvars) {
        throw ParseError(in.line_no, "variable " + std::to_string(v) + " exceeds header count");
      }
      if (!q.prefix.contains(v)) {
        throw ParseError(in.line_no, "variable " + std::to_string(v) + " not declared in prefix");
      }
      lits.push_back(static_cast<Lit>(*l));
    }
    q.matrix.push_back(Clause(std::move(lits)));
    ++clauses_read;
  }

  if (clauses_read != static_cast<std::size_t>(*nclauses)) {
    throw ParseError("clause count mismatch: header declares " + std::to_string(*nclauses) +
                     ", file has " + std::to_string(clauses_read));
  }
  return q;
}

std::string serialize_qdimacs(const QBF& q) {
  std::string out = "p cnf " + std::to_string(q.prefix.max_var()) + ' ' +
                    std::to_string(q.matrix.size()) + '\n';
  for (const Block& b : q.prefix.blocks()) {
    out += b.quant == Quantifier::exists ? 'e' : 'a';
    for (Var v : b.vars) {
      out += ' ';
      out += std::to_string(v);
    }
    out += " 0\n";
  }
  for (const Clause& c : q.matrix) {
    for (Lit l : c) {
      out += std::to_string(l);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

}  // namespace qrps
