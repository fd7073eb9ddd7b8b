#include "qrps/symmetry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qrps/errors.hpp"
#include "line_reader.hpp"

namespace qrps {

Symmetry::Symmetry(std::string name, std::map<Var, Lit> image)
    : name_(std::move(name)), image_(std::move(image)) {
  if (name_.empty() || name_ == "0" ||
      name_.find_first_of(" \t\r\n") != std::string::npos) {
    throw std::invalid_argument("symmetry name must be a nonzero whitespace-free token");
  }
  std::set<Var> keys, image_vars;
  for (const auto& [v, m] : image_) {
    if (v <= 0) throw std::invalid_argument("mapped variables must be positive");
    if (m == 0) throw std::invalid_argument("image literal 0");
    keys.insert(v);
    image_vars.insert(var_of(m));
  }
  // Unlisted variables are fixed, so the explicit part must permute itself.
  if (keys != image_vars) {
    throw std::invalid_argument("symmetry image is not a bijection");
  }
}

Lit Symmetry::apply(Lit l) const {
  const auto it = image_.find(var_of(l));
  if (it == image_.end()) return l;
  return l > 0 ? it->second : -it->second;
}

Clause Symmetry::apply(const Clause& c) const {
  std::vector<Lit> lits;
  lits.reserve(c.size());
  for (Lit l : c) lits.push_back(apply(l));
  return Clause(std::move(lits));
}

Symmetry Symmetry::inverse() const {
  std::map<Var, Lit> inv;
  for (const auto& [v, m] : image_) {
    inv[var_of(m)] = m > 0 ? v : -v;
  }
  return Symmetry(name_ + "_inv", std::move(inv));
}

bool Symmetry::is_identity() const {
  return std::all_of(image_.begin(), image_.end(),
                     [](const auto& e) { return e.second == e.first; });
}

bool is_admissible(const Symmetry& s, const Prefix& p) {
  for (const auto& [v, m] : s.image()) {
    if (!p.contains(v)) {
      throw std::invalid_argument("symmetry variable " + std::to_string(v) + " not in prefix");
    }
    const Var w = var_of(m);
    if (!p.contains(w)) {
      throw std::invalid_argument("symmetry variable " + std::to_string(w) + " not in prefix");
    }
    if (p.block_of(v) != p.block_of(w)) return false;
  }
  return true;  // bijectivity holds by construction
}

Clause apply_to_clause(const Symmetry& s, const Clause& c) { return s.apply(c); }

bool is_symmetry(const Symmetry& s, const QBF& q) {
  for (const auto& [v, m] : s.image()) {
    if (!q.prefix.contains(v) || !q.prefix.contains(var_of(m))) return false;
  }
  if (!is_admissible(s, q.prefix)) return false;

  std::vector<Clause> image;
  image.reserve(q.matrix.size());
  for (const Clause& c : q.matrix) image.push_back(s.apply(c));

  auto clause_less = [](const Clause& a, const Clause& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lit_less);
  };
  std::vector<Clause> original = q.matrix;
  std::sort(original.begin(), original.end(), clause_less);
  std::sort(image.begin(), image.end(), clause_less);
  return original == image;
}

std::vector<Clause> breaker_clauses(const QBF& q, const std::vector<Symmetry>& syms) {
  for (const Symmetry& s : syms) {
    if (!is_symmetry(s, q)) {
      throw std::invalid_argument("'" + s.name() + "' is not a symmetry of the formula");
    }
  }

  const std::vector<Var> order = q.prefix.flattened();
  std::vector<Clause> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Var x = order[i];
    if (!q.prefix.is_existential(x)) continue;
    for (const Symmetry& s : syms) {
      const Lit sx = s.apply(x);
      if (sx == x) continue;

      bool drop = false;
      bool antecedent_empty = true;
      for (std::size_t j = 0; j < i && !drop; ++j) {
        const Var y = order[j];
        const Lit sy = s.apply(y);
        if (sy == y) continue;  // fixed: conjunct y<->y is trivially true
        if (sy == -y) {
          drop = true;  // y<->-y: antecedent unsatisfiable
          continue;
        }
        // y <-> s(y) on the pair {x, var(s(x))} entails the consequent when
        // the orientations agree.
        if ((sy == x && sx == y) || (sy == -x && sx == -y)) {
          drop = true;
          continue;
        }
        antecedent_empty = false;
      }
      if (drop) continue;
      if (!antecedent_empty) throw std::domain_error("non-clausal breaker");

      Clause c = normalize_clause({-x, sx});
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Symmetry> parse_symmetries(std::string_view text) {
  std::vector<Symmetry> out;
  detail::LineReader in{text};
  for (auto toks = in.next(); !toks.empty(); toks = in.next()) {
    if (toks[0] != "s") throw ParseError(in.line_no, "expected 's' line");
    if (toks.size() < 3 || toks.back() != "0") {
      throw ParseError(in.line_no, "symmetry line not 0-terminated");
    }
    if (toks.size() % 2 != 1) throw ParseError(in.line_no, "dangling variable without image");
    std::map<Var, Lit> image;
    for (std::size_t k = 2; k + 1 < toks.size(); k += 2) {
      const auto v = detail::parse_int(toks[k]);
      const auto m = detail::parse_int(toks[k + 1]);
      if (!v || *v <= 0) throw ParseError(in.line_no, "mapped variable must be positive");
      if (!m || *m == 0) throw ParseError(in.line_no, "malformed image literal");
      if (!image.emplace(static_cast<Var>(*v), static_cast<Lit>(*m)).second) {
        throw ParseError(in.line_no, "variable mapped twice");
      }
    }
    try {
      out.emplace_back(std::string(toks[1]), std::move(image));
    } catch (const std::invalid_argument& e) {
      throw ParseError(in.line_no, e.what());
    }
  }
  return out;
}

std::string serialize_symmetries(const std::vector<Symmetry>& syms) {
  std::string out;
  for (const Symmetry& s : syms) {
    out += "s " + s.name();
    for (const auto& [v, m] : s.image()) {
      out += ' ';
      out += std::to_string(v);
      out += ' ';
      out += std::to_string(m);
    }
    out += " 0\n";
  }
  return out;
}

}  // namespace qrps
