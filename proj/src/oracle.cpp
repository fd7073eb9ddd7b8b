#include "qrps/oracle.hpp"

#include <stdexcept>
#include <vector>

namespace qrps {
namespace {

enum class MatrixState { satisfied, falsified, open };

struct Evaluator {
  const QBF& q;
  std::vector<Var> order;
  std::vector<signed char> value;  // indexed by variable: -1 unset, 0, 1

  MatrixState matrix_state() const {
    bool all_satisfied = true;
    for (const Clause& c : q.matrix) {
      bool satisfied = false;
      bool open = false;
      for (Lit l : c) {
        const signed char v = value[static_cast<std::size_t>(var_of(l))];
        if (v < 0) {
          open = true;
        } else if ((v == 1) == is_positive(l)) {
          satisfied = true;
          break;
        }
      }
      if (satisfied) continue;
      if (!open) return MatrixState::falsified;
      all_satisfied = false;
    }
    return all_satisfied ? MatrixState::satisfied : MatrixState::open;
  }

  bool eval(std::size_t depth) {
    switch (matrix_state()) {
      case MatrixState::satisfied: return true;
      case MatrixState::falsified: return false;
      case MatrixState::open: break;
    }
    // An open clause always has an unset variable, so depth < order.size().
    const Var v = order[depth];
    auto branch = [&](signed char b) {
      value[static_cast<std::size_t>(v)] = b;
      const bool r = eval(depth + 1);
      value[static_cast<std::size_t>(v)] = -1;
      return r;
    };
    if (q.prefix.is_existential(v)) return branch(0) || branch(1);
    return branch(0) && branch(1);
  }
};

}  // namespace

bool evaluate(const QBF& q, int max_vars) {
  if (q.prefix.var_count() > max_vars) {
    throw std::invalid_argument("formula has " + std::to_string(q.prefix.var_count()) +
                                " variables, above the evaluation limit of " +
                                std::to_string(max_vars));
  }
  validate(q);
  Evaluator ev{q, q.prefix.flattened(), {}};
  ev.value.assign(static_cast<std::size_t>(q.prefix.max_var()) + 1, -1);
  return ev.eval(0);
}

}  // namespace qrps
