#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ndlogic/entailment.hpp"
#include "ndlogic/error.hpp"
#include "ndlogic/json_io.hpp"
#include "ndlogic/logics.hpp"
#include "ndlogic/prover.hpp"
#include "ndlogic/render.hpp"
#include "ndlogic/separation.hpp"
#include "ndlogic/suite.hpp"
#include "ndlogic/syntax.hpp"

namespace ndlogic::cli {

namespace {

constexpr std::string_view kBuiltin = "builtin:";

// Inline JSON, @file, or a path.
std::string read_source(const std::string& spec) {
  const auto first = spec.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (spec[first] == '{' || spec[first] == '[')) return spec;
  const std::string path = spec.starts_with("@") ? spec.substr(1) : spec;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

AnyMatrix load_matrix(const std::string& spec) {
  if (spec.starts_with(kBuiltin)) return logics::builtin_matrix(std::string_view(spec).substr(kBuiltin.size()));
  return matrix_from_json(read_source(spec));
}

Calculus load_calculus(const std::string& spec) {
  if (spec.starts_with(kBuiltin)) return logics::builtin_calculus(std::string_view(spec).substr(kBuiltin.size()));
  return calculus_from_json(read_source(spec));
}

const NdAlgebra& algebra_of(const AnyMatrix& m) {
  return std::visit([](const auto& x) -> const NdAlgebra& { return x.algebra; }, m);
}

bool subsignature(const Signature& small, const Signature& big) {
  return std::all_of(small.connectives().begin(), small.connectives().end(), [&](const auto& kv) {
    return big.contains(kv.first) && big.arity(kv.first) == kv.second;
  });
}

// Signature for reading statements against a calculus: its own connectives
// (with the bundled infix spellings when they fit) plus any connective the
// statement applies in prefix form.
Signature calculus_signature(const Calculus& c, const std::string& statement_text) {
  Signature sig = signature_of(c);
  for (const auto& known : {logics::sigma_mci(), logics::sigma_ex1()}) {
    if (subsignature(sig, known)) {
      sig = known;
      break;
    }
  }
  const auto texts = statement_formula_texts(statement_text);
  const Signature inferred = infer_signature(texts);
  for (const auto& [name, arity] : inferred.connectives()) {
    if (!sig.contains(name)) sig.add(name, arity);
  }
  return sig;
}

struct StatementArg {
  std::optional<std::string> one_dim;
  std::optional<std::string> two_dim;

  std::string text() const { return read_source(one_dim ? *one_dim : *two_dim); }
};

void require_statement(const StatementArg& s) {
  if (!!s.one_dim == !!s.two_dim) throw CLI::ValidationError("give exactly one of --statement and --bstatement");
}

ThetaSet theta_for(const Calculus& c, const std::optional<std::string>& theta, const Signature& sig) {
  if (!theta) return c.theta.value_or(ThetaSet());
  return ThetaSet(formulas_from_json(read_source(*theta), sig));
}

void print_valuation(std::ostream& out, const Valuation& v, const NdAlgebra& alg) {
  out << "countermodel:\n";
  for (std::size_t i = 0; i < v.domain().size(); ++i) {
    out << "  " << to_string(v.domain()[i]) << " = " << alg.name(v.values()[i]) << "\n";
  }
}

int report_verdict(std::ostream& out, const Verdict& v, const NdAlgebra& alg) {
  if (v.valid) {
    out << "valid\n";
    return 0;
  }
  out << "invalid\n";
  print_valuation(out, *v.countermodel, alg);
  return 1;
}

int cmd_check(const std::string& matrix_spec, const StatementArg& st, const std::string& aspect, std::ostream& out) {
  require_statement(st);
  const AnyMatrix m = load_matrix(matrix_spec);
  const NdAlgebra& alg = algebra_of(m);
  const std::string text = st.text();
  if (const auto* nd = std::get_if<NdMatrix>(&m)) {
    if (st.two_dim) throw DimensionMismatchError("a B-statement needs a B-matrix");
    return report_verdict(out, entails_1d(*nd, statement_from_json(text, alg.signature())), alg);
  }
  const BMatrix& b = std::get<BMatrix>(m);
  if (st.two_dim) return report_verdict(out, b_entails(b, bstatement_from_json(text, alg.signature())), alg);
  const Aspect a = aspect == "f" ? Aspect::f : Aspect::t;
  return report_verdict(out, aspect_entails(b, a, statement_from_json(text, alg.signature())), alg);
}

int cmd_prove(const std::string& calc_spec, const StatementArg& st, const std::optional<std::string>& theta,
              const SearchLimits& limits, bool dot, bool json, std::ostream& out, std::ostream& err) {
  require_statement(st);
  const Calculus c = load_calculus(calc_spec);
  const std::string text = st.text();
  const Signature sig = calculus_signature(c, text);
  const ThetaSet th = theta_for(c, theta, sig);
  ProofOutcome o;
  if (st.two_dim) {
    o = prove(c, bstatement_from_json(text, sig), th, limits);
  } else {
    o = prove(c, statement_from_json(text, sig), th, limits);
  }
  // keep DOT and JSON output machine-readable
  std::ostream& summary = (dot || json) && o.tree ? err : out;
  summary << to_string(o.kind);
  if (o.tree) summary << ": " << o.tree->node_count() << "-node tree";
  summary << " (" << o.nodes << " search nodes, fence " << o.fence_size << ")\n";
  if (o.kind == ProofOutcome::Kind::proved) {
    out << (dot ? render_dot(*o.tree) : json ? proof_to_json(*o.tree) + "\n" : render_text(*o.tree));
    return 0;
  }
  if (o.open_label) out << "open label: " << format_label(*o.open_label) << "\n";
  if (!o.detail.empty()) out << o.detail << "\n";
  return 1;
}

int cmd_check_proof(const std::string& calc_spec, const StatementArg& st, const std::string& proof_spec,
                    std::ostream& out) {
  require_statement(st);
  const Calculus c = load_calculus(calc_spec);
  const std::string text = st.text();
  const Signature sig = calculus_signature(c, text);
  const DerivationTree t = proof_from_json(read_source(proof_spec), sig);
  const bool ok = st.two_dim ? check_proof(c, bstatement_from_json(text, sig), t)
                             : check_proof(c, statement_from_json(text, sig), t);
  out << (ok ? "proof checks" : "proof does not check") << " (" << t.node_count() << " nodes)\n";
  return ok ? 0 : 1;
}

int cmd_product(const std::string& a, const std::string& b, const std::optional<std::string>& output,
                std::ostream& out) {
  const AnyMatrix ma = load_matrix(a);
  const AnyMatrix mb = load_matrix(b);
  const auto* na = std::get_if<NdMatrix>(&ma);
  const auto* nb = std::get_if<NdMatrix>(&mb);
  if (!na || !nb) throw DimensionMismatchError("product needs two one-dimensional matrices");
  const std::string text = matrix_to_json(b_product(*na, *nb)) + "\n";
  if (!output) {
    out << text;
    return 0;
  }
  std::ofstream f(*output, std::ios::binary);
  if (!f) throw InputError("cannot write file '" + *output + "'");
  f << text;
  out << "wrote " << *output << "\n";
  return 0;
}

int cmd_separators(const std::string& matrix_spec, int depth, std::ostream& out) {
  if (depth < 0) throw InputError("--depth must be non-negative");
  const AnyMatrix m = load_matrix(matrix_spec);
  const auto rep = std::visit([&](const auto& x) { return expressiveness_report(x, depth); }, m);
  out << to_string(rep, algebra_of(m));
  return rep.sufficiently_expressive() ? 0 : 1;
}

int cmd_validate(const std::string& calc_spec, const std::string& matrix_spec, std::ostream& out) {
  const Calculus c = load_calculus(calc_spec);
  const AnyMatrix m = load_matrix(matrix_spec);
  const NdAlgebra& alg = algebra_of(m);
  std::size_t ok = 0;
  for (const auto& r : c.rules) {
    const Verdict v = std::visit([&](const auto& x) { return validate_rule(x, r); }, m);
    out << r.name << ": " << (v.valid ? "valid" : "invalid") << "\n";
    if (v.valid) {
      ++ok;
    } else {
      std::ostringstream cm;
      print_valuation(cm, *v.countermodel, alg);
      std::string line;
      std::istringstream lines(cm.str());
      while (std::getline(lines, line)) out << "  " << line << "\n";
    }
  }
  out << ok << "/" << c.rules.size() << " rules valid\n";
  return ok == c.rules.size() ? 0 : 1;
}

int cmd_builtin(const std::optional<std::string>& name, bool as_calculus, std::ostream& out) {
  if (!name) {
    for (const auto& n : logics::builtin_names()) out << n << "\n";
    return 0;
  }
  if (as_calculus) {
    out << calculus_to_json(logics::builtin_calculus(*name)) << "\n";
    return 0;
  }
  try {
    const AnyMatrix m = logics::builtin_matrix(*name);
    out << std::visit([](const auto& x) { return matrix_to_json(x); }, m) << "\n";
  } catch (const InputError&) {
    out << calculus_to_json(logics::builtin_calculus(*name)) << "\n";
  }
  return 0;
}

int cmd_verify_suite(bool timings, std::ostream& out) {
  const SuiteReport r = verify_paper_suite();
  out << to_string(r, timings);
  const auto passed = std::count_if(r.items.begin(), r.items.end(), [](const SuiteItem& i) { return i.passed; });
  out << passed << "/" << r.items.size() << " items passed\n";
  return r.all_passed() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Workbench for finite non-deterministic matrix logics", "ndlogic"};
  app.require_subcommand(1);

  std::string matrix;
  std::string calculus;
  std::string proof;
  std::string aspect = "t";
  StatementArg st;
  std::optional<std::string> theta;
  std::optional<std::string> output;
  std::optional<std::string> builtin_name;
  std::size_t max_nodes = SearchLimits{}.max_nodes;
  std::optional<std::size_t> max_depth;
  bool dot = false;
  bool json = false;
  bool as_calculus = false;
  bool no_timings = false;
  int depth = 2;
  std::string product_a;
  std::string product_b;

  const auto add_statement = [&](CLI::App* sub) {
    sub->add_option("--statement", st.one_dim, "SET-SET statement JSON (inline, @file or path)");
    sub->add_option("--bstatement", st.two_dim, "B-statement JSON (inline, @file or path)");
  };

  auto* check = app.add_subcommand("check", "Decide a statement in a matrix");
  check->add_option("--matrix", matrix, "Matrix JSON or builtin:NAME")->required();
  add_statement(check);
  check->add_option("--aspect", aspect, "Aspect for SET-SET statements in a B-matrix")->check(CLI::IsMember({"t", "f"}));

  auto* prove_cmd = app.add_subcommand("prove", "Search for a proof");
  prove_cmd->add_option("--calculus", calculus, "Calculus JSON or builtin:NAME")->required();
  add_statement(prove_cmd);
  prove_cmd->add_option("--theta", theta, "JSON array of unary formulas");
  prove_cmd->add_option("--max-nodes", max_nodes, "Node limit");
  prove_cmd->add_option("--max-depth", max_depth, "Depth limit");
  auto* dot_flag = prove_cmd->add_flag("--dot", dot, "Print the proof as a DOT digraph");
  prove_cmd->add_flag("--json", json, "Print the proof as JSON")->excludes(dot_flag);

  auto* check_proof_cmd = app.add_subcommand("check-proof", "Check a proof tree");
  check_proof_cmd->add_option("--calculus", calculus, "Calculus JSON or builtin:NAME")->required();
  add_statement(check_proof_cmd);
  check_proof_cmd->add_option("--proof", proof, "Proof tree JSON")->required();

  auto* product = app.add_subcommand("product", "B-product of two matrices");
  product->add_option("accept", product_a, "Matrix for acceptance")->required();
  product->add_option("reject", product_b, "Matrix for rejection")->required();
  product->add_option("-o,--output", output, "Write the B-matrix JSON here");

  auto* separators = app.add_subcommand("separators", "Separator report");
  separators->add_option("--matrix", matrix, "Matrix JSON or builtin:NAME")->required();
  separators->add_option("--depth", depth, "Maximum separator depth");

  auto* validate = app.add_subcommand("validate-calculus", "Check every rule against a matrix");
  validate->add_option("--calculus", calculus, "Calculus JSON or builtin:NAME")->required();
  validate->add_option("--matrix", matrix, "Matrix JSON or builtin:NAME")->required();

  auto* builtin = app.add_subcommand("builtin", "List or print bundled artifacts");
  builtin->add_option("name", builtin_name, "Artifact name");
  builtin->add_flag("--calculus", as_calculus, "Print the calculus of that name");

  auto* suite = app.add_subcommand("verify-suite", "Run the verification battery");
  suite->add_flag("--no-timings", no_timings, "Omit timings");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(matrix, st, aspect, out);
    if (prove_cmd->parsed()) return cmd_prove(calculus, st, theta, SearchLimits{max_nodes, max_depth}, dot, json, out, err);
    if (check_proof_cmd->parsed()) return cmd_check_proof(calculus, st, proof, out);
    if (product->parsed()) return cmd_product(product_a, product_b, output, out);
    if (separators->parsed()) return cmd_separators(matrix, depth, out);
    if (validate->parsed()) return cmd_validate(calculus, matrix, out);
    if (builtin->parsed()) return cmd_builtin(builtin_name, as_calculus, out);
    if (suite->parsed()) return cmd_verify_suite(!no_timings, out);
  } catch (const CLI::ValidationError& e) {
    err << "ndlogic: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "ndlogic: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ndlogic::cli
