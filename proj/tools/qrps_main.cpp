#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "qrps/calculus.hpp"
#include "qrps/errors.hpp"
#include "qrps/families.hpp"
#include "qrps/oracle.hpp"
#include "qrps/qdimacs.hpp"
#include "qrps/short_proofs.hpp"
#include "qrps/symmetry.hpp"

using nlohmann::json;
using namespace qrps;

// Exit codes: 0 success/accept/true, 1 reject/false, 2 usage or I/O error.
namespace {

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
  } else {
    write_file(path, content);
  }
}

FamilyId parse_family(const std::string& name) {
  const auto f = family_from_name(name);
  if (!f) throw std::runtime_error("unknown family '" + name + "'");
  return *f;
}

json counts_json(const StepCounts& c) {
  return json{{"axioms", c.axioms},
              {"resolutions", c.resolutions},
              {"reductions", c.reductions},
              {"symmetries", c.sym_applications},
              {"rule_applications", c.rule_applications()},
              {"total", c.total()}};
}

void print_counts(const StepCounts& c) {
  std::cout << "axiom steps:       " << c.axioms << '\n'
            << "resolution steps:  " << c.resolutions << '\n'
            << "reduction steps:   " << c.reductions << '\n'
            << "symmetry steps:    " << c.sym_applications << '\n'
            << "rule applications: " << c.rule_applications() << '\n'
            << "total steps:       " << c.total() << '\n';
}

struct GenArgs {
  std::string family;
  int n = 0;
  bool with_breaker = false;
  std::string out;
  std::string syms_out;
};

int run_gen(const GenArgs& a) {
  const FamilyId f = parse_family(a.family);
  QBF q = gen_family(f, a.n);
  const auto syms = family_symmetries(f, a.n);
  if (a.with_breaker) {
    for (Clause& c : breaker_clauses(q, syms)) q.matrix.push_back(std::move(c));
  }
  emit(a.out, serialize_qdimacs(q));
  if (!a.syms_out.empty()) write_file(a.syms_out, serialize_symmetries(syms));
  return kOk;
}

struct ProveArgs {
  std::string family;
  int n = 0;
  std::string strategy;
  std::string out;
  std::string formula_out;
  std::string syms_out;
};

int run_prove(const ProveArgs& a) {
  Strategy s;
  if (a.strategy == "breaker") {
    s = Strategy::breaker;
  } else if (a.strategy == "symrule") {
    s = Strategy::symrule;
  } else {
    throw std::runtime_error("unknown strategy '" + a.strategy + "'");
  }
  const ProvedInstance inst = prove_family(parse_family(a.family), s, a.n);
  emit(a.out, serialize_trace(inst.proof));
  if (!a.formula_out.empty()) write_file(a.formula_out, serialize_qdimacs(inst.formula));
  if (!a.syms_out.empty()) write_file(a.syms_out, serialize_symmetries(inst.symmetries));
  return kOk;
}

struct CheckArgs {
  std::string formula;
  std::string trace;
  std::string syms;
  bool no_sym = false;
  bool as_json = false;
};

int run_check(const CheckArgs& a) {
  const QBF q = parse_qdimacs(read_file(a.formula));
  const Proof pf = parse_trace(read_file(a.trace));
  std::vector<Symmetry> syms;
  if (!a.syms.empty()) syms = parse_symmetries(read_file(a.syms));
  const CheckReport rep = check_proof(q, syms, pf, !a.no_sym);
  const bool accepted = rep.verdict == Verdict::accept;

  if (a.as_json) {
    json j{{"verdict", accepted ? "accept" : "reject"}, {"steps", counts_json(rep.step_counts)}};
    if (accepted) {
      j["failing_step"] = nullptr;
      j["reason"] = nullptr;
    } else {
      j["failing_step"] = *rep.failing_step;
      j["reason"] = to_string(rep.reason);
    }
    std::cout << j.dump(2) << '\n';
  } else if (accepted) {
    std::cout << "ACCEPT\n";
    print_counts(rep.step_counts);
  } else if (*rep.failing_step == 0) {
    std::cout << "REJECT: " << to_string(rep.reason) << '\n';
  } else {
    std::cout << "REJECT step " << *rep.failing_step << ": " << to_string(rep.reason) << '\n';
  }
  return accepted ? kOk : kRejected;
}

struct DesymArgs {
  std::string formula;
  std::string trace;
  std::string syms;
  std::string out;
};

int run_desym(const DesymArgs& a) {
  const QBF q = parse_qdimacs(read_file(a.formula));
  const Proof pf = parse_trace(read_file(a.trace));
  const auto syms = parse_symmetries(read_file(a.syms));
  const CheckReport rep = check_proof(q, syms, pf, true);
  if (rep.verdict != Verdict::accept) {
    std::cout << "REJECT";
    if (*rep.failing_step != 0) std::cout << " step " << *rep.failing_step;
    std::cout << ": " << to_string(rep.reason) << '\n';
    return kRejected;
  }
  const Proof plain = eliminate_symmetry_steps(q, syms, pf);
  emit(a.out, serialize_trace(plain));
  return kOk;
}

struct EvalArgs {
  std::string formula;
  int max_vars = kDefaultOracleVarLimit;
};

int run_eval(const EvalArgs& a) {
  const QBF q = parse_qdimacs(read_file(a.formula));
  const bool value = evaluate(q, a.max_vars);
  std::cout << (value ? "TRUE" : "FALSE") << '\n';
  return value ? kOk : kRejected;
}

struct SymVerifyArgs {
  std::string formula;
  std::string symfile;
};

int run_sym_verify(const SymVerifyArgs& a) {
  const QBF q = parse_qdimacs(read_file(a.formula));
  const auto syms = parse_symmetries(read_file(a.symfile));
  bool all_ok = true;
  for (const Symmetry& s : syms) {
    std::string verdict = "ok";
    try {
      if (!is_admissible(s, q.prefix)) {
        verdict = "not admissible";
      } else if (!is_symmetry(s, q)) {
        verdict = "does not preserve the matrix";
      }
    } catch (const std::invalid_argument&) {
      verdict = "unknown variable";
    }
    all_ok = all_ok && verdict == "ok";
    std::cout << s.name() << ": " << verdict << '\n';
  }
  return all_ok ? kOk : kRejected;
}

struct StatsArgs {
  std::string trace;
  bool as_json = false;
};

int run_stats(const StatsArgs& a) {
  const Proof pf = parse_trace(read_file(a.trace));
  const StepCounts c = count_steps(pf);
  if (a.as_json) {
    json j{{"max_var", pf.max_var}, {"steps", counts_json(c)}};
    std::cout << j.dump(2) << '\n';
  } else {
    print_counts(c);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generator, prover, checker, and oracle for symmetric QBF families"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Write a family instance as QDIMACS");
  gen->add_option("--family", gen_args.family, "kbkf, quparity, or kbkf-hard")->required();
  gen->add_option("--n", gen_args.n, "instance size")->required();
  gen->add_flag("--with-breaker", gen_args.with_breaker,
                "append the clausal symmetry breaker to the matrix");
  gen->add_option("--out", gen_args.out, "output file (default stdout)");
  gen->add_option("--syms", gen_args.syms_out, "also write the symmetry sidecar");

  ProveArgs prove_args;
  auto* prove = app.add_subcommand("prove", "Emit a linear-size refutation trace");
  prove->add_option("--family", prove_args.family, "kbkf or quparity")->required();
  prove->add_option("--n", prove_args.n, "instance size")->required();
  prove->add_option("--strategy", prove_args.strategy, "breaker or symrule")->required();
  prove->add_option("--out", prove_args.out, "trace output file (default stdout)");
  prove->add_option("--formula-out", prove_args.formula_out, "write the refuted QDIMACS");
  prove->add_option("--syms-out", prove_args.syms_out, "write the symmetry sidecar");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Check a trace against a formula");
  check->add_option("formula", check_args.formula, "QDIMACS file")->required();
  check->add_option("trace", check_args.trace, "trace file")->required();
  check->add_option("--syms", check_args.syms, "symmetry sidecar file");
  check->add_flag("--no-sym", check_args.no_sym, "disable the symmetry rule");
  check->add_flag("--json", check_args.as_json, "machine-readable report");

  DesymArgs desym_args;
  auto* desym = app.add_subcommand("desym", "Rewrite a trace without symmetry steps");
  desym->add_option("formula", desym_args.formula, "QDIMACS file")->required();
  desym->add_option("trace", desym_args.trace, "trace file")->required();
  desym->add_option("--syms", desym_args.syms, "symmetry sidecar file")->required();
  desym->add_option("--out", desym_args.out, "rewritten trace (default stdout)");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Brute-force evaluate a formula");
  eval->add_option("formula", eval_args.formula, "QDIMACS file")->required();
  eval->add_option("--max-vars", eval_args.max_vars, "variable limit (default 24)");

  SymVerifyArgs sym_args;
  auto* sym = app.add_subcommand("sym", "Symmetry utilities");
  sym->require_subcommand(1);
  auto* verify = sym->add_subcommand("verify", "Verify each symmetry in a sidecar");
  verify->add_option("formula", sym_args.formula, "QDIMACS file")->required();
  verify->add_option("symfile", sym_args.symfile, "symmetry sidecar file")->required();

  StatsArgs stats_args;
  auto* stats = app.add_subcommand("stats", "Step tallies of a trace");
  stats->add_option("trace", stats_args.trace, "trace file")->required();
  stats->add_flag("--json", stats_args.as_json, "machine-readable tallies");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (prove->parsed()) return run_prove(prove_args);
    if (check->parsed()) return run_check(check_args);
    if (desym->parsed()) return run_desym(desym_args);
    if (eval->parsed()) return run_eval(eval_args);
    if (sym->parsed() && verify->parsed()) return run_sym_verify(sym_args);
    if (stats->parsed()) return run_stats(stats_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
