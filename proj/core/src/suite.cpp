#include "ndlogic/suite.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <tuple>

#include "ndlogic/entailment.hpp"
#include "ndlogic/prover.hpp"
#include "ndlogic/random.hpp"
#include "ndlogic/separation.hpp"
#include "ndlogic/syntax.hpp"

namespace ndlogic {

namespace {

using logics::sigma_mci;

Formula F(std::string_view text) { return parse_formula(text, sigma_mci()); }

FormulaSet S(std::initializer_list<std::string_view> texts) {
  FormulaSet out;
  for (auto t : texts) out.insert(F(t));
  return out;
}

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

std::string fmt_names(const NdAlgebra& a, ValueSet s) {
  std::string out;
  for (const auto& n : a.names(s)) out += (out.empty() ? "" : ",") + n;
  return out;
}

bool valid(const NdMatrix& m, const FormulaSet& a, const FormulaSet& s) { return entails_1d(m, {a, s}).valid; }

Outcome mci_tables(const SuiteInputs& in) {
  Outcome o;
  const auto& ref = logics::mci_artifacts();
  if (!(in.mci.m5 == ref.m5)) o.fail("m5 differs from the reference tables");
  if (!(in.mci.m5_rej == ref.m5_rej)) o.fail("m5_rej differs from the reference tables");
  if (!(in.mci.b5 == ref.b5)) o.fail("b5 differs from the reference tables");
  if (o.passed) {
    const auto& a = in.mci.b5.algebra;
    o.detail = "D = {" + fmt_names(a, in.mci.b5.designated) + "}, Y = {" + fmt_names(a, in.mci.b5.antidesignated) + "}";
  }
  return o;
}

Outcome hallmarks(const SuiteInputs& in) {
  Outcome o;
  const NdMatrix& m = in.mci.m5;
  if (valid(m, S({"p", "neg(p)"}), S({"q"}))) o.fail("p, neg p entails q");
  if (!valid(m, S({"cons(p)", "p", "neg(p)"}), {})) o.fail("gentle explosion fails");
  const auto h = logics::hmci_axioms(4);
  int checked = 0;
  for (const auto& r : h.calculus.rules) {
    if (r.name.rfind("ax", 0) == 0 || r.name == "mp") continue;
    ++checked;
    if (!validate_rule(m, r).valid) o.fail(r.name + " is invalid");
  }
  const std::array<std::pair<FormulaSet, FormulaSet>, 3> disj = {{
      {S({"p"}), S({"or(p,q)"})},
      {S({"q"}), S({"or(p,q)"})},
      {S({"or(p,q)"}), S({"p", "q"})},
  }};
  for (const auto& [a, s] : disj) {
    if (!valid(m, a, s)) o.fail("disjunction fact " + to_string(Statement1D{a, s}) + " fails");
  }
  if (o.passed) o.detail = std::to_string(checked) + " axiom schemas valid, 3 disjunction facts valid";
  return o;
}

Outcome itneg(const SuiteInputs&) {
  Outcome o;
  int n = 0;
  for (int k = 1; k <= 6; ++k) {
    for (int m = 1; m <= 2 * k; ++m, ++n) {
      const int a = logics::iterated_neg(k, m);
      const int b = logics::iterated_neg_closed_form(k, m);
      if (a != b) {
        o.fail("k=" + std::to_string(k) + " m=" + std::to_string(m) + ": " + std::to_string(a) + " vs " +
               std::to_string(b));
      }
    }
  }
  if (o.passed) o.detail = std::to_string(n) + " (k, m) pairs agree";
  return o;
}

Outcome chain_axioms(const SuiteInputs& in) {
  Outcome o;
  for (int k = 1; k <= in.chain_max_k; ++k) {
    const NdMatrix m = logics::mk_matrix(k).matrix;
    for (const auto& r : logics::hmci_axioms(2 * k - 1).calculus.rules) {
      if (!validate_rule(m, r).valid) o.fail(r.name + " invalid in M_" + std::to_string(k));
    }
  }
  if (o.passed) o.detail = "all axioms of H^(2k-1) and mp valid in M_k for k <= " + std::to_string(in.chain_max_k);
  return o;
}

Outcome chain_strictness(const SuiteInputs& in) {
  Outcome o;
  for (int k = 1; k <= in.chain_max_k; ++k) {
    const int s = k + 1;
    const NdMatrix m = logics::mk_matrix(k).matrix;
    const Formula target = logics::ci_j_formula(2 * k);
    const Verdict v = entails_1d(m, {{}, {target}});
    const std::string tag = " at k=" + std::to_string(k);
    if (v.valid || !v.countermodel) {
      o.fail("ci_" + std::to_string(2 * k) + " valid" + tag);
      continue;
    }
    const Valuation& cm = *v.countermodel;
    const Formula cons_p = F("cons(p)");
    Formula negs = cons_p;
    for (int i = 0; i < 2 * k; ++i) negs = Formula::apply("neg", {negs});
    if (m.algebra.name(cm(Formula::var("p"))) != "1") o.fail("countermodel does not start at v(p)=1" + tag);
    if (m.algebra.name(cm(cons_p)) != std::to_string(s + 1)) o.fail("v(cons p) != s+1" + tag);
    if (m.algebra.name(cm(negs)) != std::to_string(2 * s)) o.fail("v(neg^2k cons p) != 2s" + tag);
  }
  if (o.passed) o.detail = "ci_2k refuted in M_k with the expected trace for k <= " + std::to_string(in.chain_max_k);
  return o;
}

Outcome chain_homomorphism(const SuiteInputs& in) {
  Outcome o;
  const NdMatrix two = logics::boolean_positive();
  for (int k = 1; k <= in.chain_max_k; ++k) {
    const NdMatrix m = logics::mk_matrix(k).matrix;
    std::map<std::string, std::string> h;
    for (int v = 1; v <= 2 * (k + 1); ++v) h[std::to_string(v)] = v > k + 1 ? "T" : "F";
    const auto rep = check_strong_hom(m, two, h, two.algebra.signature());
    if (!rep.holds) o.fail("M_" + std::to_string(k) + ": " + (rep.violations.empty() ? "" : rep.violations[0]));
    if (!is_surjective(m, two, h)) o.fail("map not surjective at k=" + std::to_string(k));
  }
  if (o.passed) o.detail = "positive fragment of M_k maps onto the two-valued matrix";
  return o;
}

Outcome hmci2d_soundness(const SuiteInputs& in) {
  Outcome o;
  int ok = 0;
  for (const auto& r : in.mci.hmci2d.rules) {
    if (validate_rule(in.mci.b5, r).valid) {
      ++ok;
    } else {
      o.fail(r.name + " invalid in b5");
    }
  }
  if (in.mci.hmci2d.rules.size() != 28) o.fail("hmci2d has " + std::to_string(in.mci.hmci2d.rules.size()) + " rules");
  o.detail = std::to_string(ok) + "/" + std::to_string(in.mci.hmci2d.rules.size()) + " rules valid" +
             (o.passed ? "" : "; " + o.detail);
  return o;
}

Outcome ex2_soundness(const SuiteInputs&) {
  Outcome o;
  const auto ex2 = logics::example2();
  for (const auto& r : ex2.calculus.rules) {
    if (!validate_rule(ex2.matrix, r).valid) o.fail(r.name + " invalid");
  }
  const auto naming = logics::resolve_example2_naming();
  if (naming.f_reads_as != "g" || naming.t_reads_as != "h") o.fail("naming repair did not settle on f=g, t=h");
  const auto ex1 = logics::example1();
  for (int i = 0; i <= 4; ++i) {
    if (!validate_rule(ex1.matrix, ex1.rule(i)).valid) o.fail("ex1 rule " + std::to_string(i) + " invalid");
  }
  if (o.passed) o.detail = "3/3 rules valid; printed f reads as g, t as h; ex1 rules valid for i <= 4";
  return o;
}

Outcome derivations_check(const SuiteInputs& in) {
  Outcome o;
  for (const auto& p : logics::reference_derivations()) {
    if (!check_proof(in.mci.hmci2d, p.statement, p.tree)) o.fail(p.name + " does not check");
  }
  if (o.passed) o.detail = "3 transcribed trees check";
  return o;
}

Outcome derivations_prove(const SuiteInputs& in) {
  Outcome o;
  const ThetaSet theta(S({"p", "cons(p)"}));
  SearchLimits limits;
  limits.max_nodes = 10000;
  std::string nodes;
  for (const auto& p : logics::reference_derivations()) {
    const auto out = prove(in.mci.hmci2d, p.statement, theta, limits);
    if (out.kind != ProofOutcome::Kind::proved) {
      o.fail(p.name + ": " + std::string(to_string(out.kind)));
      continue;
    }
    if (!check_proof(in.mci.hmci2d, p.statement, *out.tree)) o.fail(p.name + ": found tree does not check");
    nodes += (nodes.empty() ? "" : ", ") + std::to_string(out.nodes);
  }
  if (o.passed) o.detail = "proved with " + nodes + " search nodes";
  return o;
}

Outcome b5_separators(const SuiteInputs& in) {
  Outcome o;
  const auto rep = expressiveness_report(in.mci.b5, 1);
  const auto& a = in.mci.b5.algebra;
  if (rep.pairs.size() != 10) o.fail("expected 10 pairs");
  for (const auto& pr : rep.pairs) {
    const std::string pair = "<" + a.name(pr.first) + "," + a.name(pr.second) + ">";
    if (!pr.separation) {
      o.fail(pair + " unseparated");
      continue;
    }
    const bool it = a.name(pr.first) == "I" && a.name(pr.second) == "T";
    const std::string want = it ? "cons(p)" : "p";
    if (to_string(pr.separation->separator) != want) {
      o.fail(pair + " separated by " + to_string(pr.separation->separator) + ", expected " + want);
    }
  }
  if (o.passed) o.detail = "10/10 pairs separated at depth <= 1; <I,T> by cons(p)";
  return o;
}

Outcome unseparated_witnesses(const SuiteInputs& in) {
  Outcome o;
  const NdMatrix& m = in.mci.m5;
  const auto& a = m.algebra;
  for (const auto& [x, y] : {std::pair{"t", "T"}, std::pair{"f", "F"}}) {
    if (separator_for_pair(m, a.value_id(x), a.value_id(y), 3)) {
      o.fail(std::string("<") + x + "," + y + "> separated in m5 at depth 3");
    }
  }
  const auto ex1 = logics::example1();
  const auto& e = ex1.matrix.algebra;
  if (separator_for_pair(ex1.matrix, e.value_id("f"), e.value_id("bot"), 2)) o.fail("<f,bot> separated in ex1");
  if (o.passed) o.detail = "<t,T>, <f,F> unseparated in m5 up to depth 3; <f,bot> in ex1 up to depth 2";
  return o;
}

Outcome compression(const SuiteInputs&) {
  Outcome o;
  const auto ex2 = logics::example2();
  for (int i = 1; i <= 3; ++i) {
    Formula h = Formula::var("p");
    for (int j = 0; j < i; ++j) h = Formula::apply("h", {h});
    const Formula p = Formula::var("p");
    const auto s = BStatement::make({h}, {p, Formula::apply("g", {p})}, {}, {});
    const auto out = prove(ex2.calculus, s, ThetaSet());
    const std::string tag = " at i=" + std::to_string(i);
    if (out.kind != ProofOutcome::Kind::proved) {
      o.fail("not proved" + tag);
      continue;
    }
    if (!check_proof(ex2.calculus, s, *out.tree)) o.fail("proof does not check" + tag);
    if (!b_entails(ex2.matrix, s).valid) o.fail("statement invalid in the B-matrix" + tag);
  }
  if (o.passed) o.detail = "h^i(p) |> p, g(p) proved, checked and valid for i = 1..3";
  return o;
}

Outcome recovery(const SuiteInputs& in) {
  Outcome o;
  FormulaSampler gen(sigma_mci(), {"p", "q"}, 2, in.seed);
  int mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const Statement1D s = gen.statement(2);
    if (aspect_entails(in.mci.b5, Aspect::t, s).valid != entails_1d(in.mci.m5, s).valid) ++mismatches;
    if (aspect_entails(in.mci.b5, Aspect::f, s).valid != entails_1d(in.mci.m5_rej, s).valid) ++mismatches;
  }
  if (mismatches > 0) o.fail(std::to_string(mismatches) + " mismatches");
  if (o.passed) o.detail = "200 statements, 0 mismatches";
  return o;
}

// Consequence-relation properties over one-dimensional matrices and b5.
// Each property runs 500 instances per relation.
struct Relations {
  std::vector<std::pair<std::string, NdMatrix>> one_dim;
  BMatrix b;
};

template <class Check1, class CheckB>
Outcome property(const SuiteInputs& in, const Relations& rel, std::uint64_t salt, Check1 check1, CheckB checkb) {
  Outcome o;
  int violations = 0;
  int nonvacuous = 0;
  for (const auto& [name, m] : rel.one_dim) {
    FormulaSampler gen(m.algebra.signature(), {"p", "q"}, 2, in.seed + salt);
    for (int i = 0; i < 500; ++i) {
      const int r = check1(m, gen);
      if (r < 0) ++violations;
      if (r > 0) ++nonvacuous;
      if (r < 0 && o.passed) o.fail("violation in " + name);
    }
  }
  FormulaSampler gen(rel.b.algebra.signature(), {"p", "q"}, 2, in.seed + salt + 1);
  for (int i = 0; i < 500; ++i) {
    const int r = checkb(rel.b, gen);
    if (r < 0) ++violations;
    if (r > 0) ++nonvacuous;
    if (r < 0 && o.passed) o.fail("violation in b5");
  }
  o.detail = std::to_string(violations) + " violations, " + std::to_string(nonvacuous) + " non-vacuous instances" +
             (o.passed ? "" : "; " + o.detail);
  return o;
}

// Result convention for property checks: -1 violation, 0 vacuous, 1 held.
int overlap_1d(const NdMatrix& m, FormulaSampler& g) {
  Statement1D s = g.statement(2);
  const Formula x = g.formula();
  s.antecedent.insert(x);
  s.succedent.insert(x);
  return entails_1d(m, s).valid ? 1 : -1;
}

int overlap_b(const BMatrix& b, FormulaSampler& g) {
  BStatement s = g.bstatement(2);
  const Formula x = g.formula();
  const Attitude a = kAttitudes[static_cast<std::size_t>(g.uniform(0, 3))];
  s[a].insert(x);
  s[flip(a)].insert(x);
  return b_entails(b, s).valid ? 1 : -1;
}

int dilution_1d(const NdMatrix& m, FormulaSampler& g) {
  // Seed with an overlapping or otherwise valid statement half the time.
  Statement1D s = g.statement(2);
  if (g.uniform(0, 1) == 0) {
    const Formula x = g.formula();
    s.antecedent.insert(x);
    s.succedent.insert(Formula::apply("or", {x, g.formula()}));
  }
  if (!entails_1d(m, s).valid) return 0;
  Statement1D t = s;
  for (const auto& f : g.formula_set(2)) t.antecedent.insert(f);
  for (const auto& f : g.formula_set(2)) t.succedent.insert(f);
  return entails_1d(m, t).valid ? 1 : -1;
}

int dilution_b(const BMatrix& b, FormulaSampler& g) {
  BStatement s = g.bstatement(1);
  if (g.uniform(0, 1) == 0) {
    const Formula x = g.formula();
    s[Attitude::acc].insert(x);
    s[Attitude::nacc].insert(Formula::apply("or", {x, g.formula()}));
  }
  if (!b_entails(b, s).valid) return 0;
  BStatement t = s;
  for (auto a : kAttitudes) {
    for (const auto& f : g.formula_set(1)) t[a].insert(f);
  }
  return b_entails(b, t).valid ? 1 : -1;
}

int cut_1d(const NdMatrix& m, FormulaSampler& g) {
  const Statement1D s = g.statement(2);
  const Formula x = g.formula();
  Statement1D left = s;
  left.antecedent.insert(x);
  Statement1D right = s;
  right.succedent.insert(x);
  if (!entails_1d(m, left).valid || !entails_1d(m, right).valid) return 0;
  return entails_1d(m, s).valid ? 1 : -1;
}

int cut_b(const BMatrix& b, FormulaSampler& g) {
  const BStatement s = g.bstatement(1);
  const Formula x = g.formula();
  const Attitude a = g.uniform(0, 1) == 0 ? Attitude::acc : Attitude::rej;
  BStatement left = s;
  left[a].insert(x);
  BStatement right = s;
  right[flip(a)].insert(x);
  if (!b_entails(b, left).valid || !b_entails(b, right).valid) return 0;
  return b_entails(b, s).valid ? 1 : -1;
}

int substitution_1d(const NdMatrix& m, FormulaSampler& g) {
  Statement1D s = g.statement(2);
  if (g.uniform(0, 1) == 0) {
    const Formula x = g.formula();
    s.antecedent.insert(x);
    s.succedent.insert(Formula::apply("or", {g.formula(), x}));
  }
  if (!entails_1d(m, s).valid) return 0;
  return entails_1d(m, substitute(s, g.substitution())).valid ? 1 : -1;
}

int substitution_b(const BMatrix& b, FormulaSampler& g) {
  BStatement s = g.bstatement(1);
  if (g.uniform(0, 1) == 0) {
    const Formula x = g.formula();
    s[Attitude::rej].insert(x);
    s[Attitude::nrej].insert(x);
  }
  if (!b_entails(b, s).valid) return 0;
  return b_entails(b, substitute(s, g.substitution())).valid ? 1 : -1;
}

Outcome observations(const SuiteInputs& in) {
  Outcome o;
  const BMatrix& b = in.mci.b5;
  const auto gap = b_entails(b, BStatement::make({}, S({"p"}), {}, S({"p"})));
  if (gap.valid) o.fail("nacc {p} nrej {p} is valid");
  if (b_entails(b, BStatement::make(S({"p", "cons(p)"}), {}, {}, S({"p"}))).valid) {
    o.fail("acc {p, cons p} nrej {p} is valid");
  }
  if (b_entails(b, BStatement::make(S({"p", "cons(p)"}), {}, S({"p"}), {})).valid) {
    o.fail("acc {p, cons p} rej {p} is valid");
  }
  const ThetaSet theta(S({"p", "cons(p)"}));
  for (const char* c : {"and", "or", "imp"}) {
    const Formula x = Formula::apply(c, {Formula::var("p"), Formula::var("q")});
    const Formula cx = Formula::apply("cons", {x});
    for (const auto& s : {BStatement::make({x, cx}, {}, {x}, {}), BStatement::make({x}, {}, {cx, x}, {})}) {
      const auto out = prove(in.mci.hmci2d, s, theta);
      if (out.kind != ProofOutcome::Kind::proved || !check_proof(in.mci.hmci2d, s, *out.tree)) {
        o.fail(to_string(s) + " not proved");
      }
    }
  }
  if (o.passed) {
    o.detail = "gap witness " + to_string(*gap.countermodel, b.algebra) + "; glut statements invalid; 6 compound variants proved";
  }
  return o;
}

}  // namespace

bool SuiteReport::all_passed() const {
  return !items.empty() && std::all_of(items.begin(), items.end(), [](const SuiteItem& i) { return i.passed; });
}

bool SuiteReport::criterion_passed(int criterion) const {
  bool any = false;
  for (const auto& i : items) {
    if (i.criterion != criterion) continue;
    any = true;
    if (!i.passed) return false;
  }
  return any;
}

SuiteReport verify_paper_suite(const SuiteInputs& in) {
  Relations rel{{{"m5", in.mci.m5}, {"M_1", logics::mk_matrix(1).matrix}}, in.mci.b5};
  using Fn = std::function<Outcome()>;
  const std::vector<std::tuple<std::string, int, Fn>> checks = {
      {"mci-tables", 1, [&] { return mci_tables(in); }},
      {"mci-hallmarks", 2, [&] { return hallmarks(in); }},
      {"itneg-closed-form", 3, [&] { return itneg(in); }},
      {"chain-axioms", 4, [&] { return chain_axioms(in); }},
      {"chain-strictness", 4, [&] { return chain_strictness(in); }},
      {"chain-homomorphism", 4, [&] { return chain_homomorphism(in); }},
      {"hmci2d-soundness", 5, [&] { return hmci2d_soundness(in); }},
      {"example2-soundness", 5, [&] { return ex2_soundness(in); }},
      {"derivations-check", 6, [&] { return derivations_check(in); }},
      {"derivations-prove", 6, [&] { return derivations_prove(in); }},
      {"b5-separators", 7, [&] { return b5_separators(in); }},
      {"unseparated-witnesses", 7, [&] { return unseparated_witnesses(in); }},
      {"dimensional-compression", 8, [&] { return compression(in); }},
      {"aspect-recovery", 9, [&] { return recovery(in); }},
      {"overlap", 10, [&] { return property(in, rel, 11, overlap_1d, overlap_b); }},
      {"dilution", 10, [&] { return property(in, rel, 23, dilution_1d, dilution_b); }},
      {"finite-cut", 10, [&] { return property(in, rel, 37, cut_1d, cut_b); }},
      {"substitution-invariance", 10, [&] { return property(in, rel, 41, substitution_1d, substitution_b); }},
      {"gap-glut-observations", 11, [&] { return observations(in); }},
  };
  SuiteReport report;
  for (const auto& [name, criterion, fn] : checks) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("error: ") + e.what());
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.items.push_back({name, criterion, o.passed, o.detail, ms});
  }
  return report;
}

std::string to_string(const SuiteReport& r, bool timings) {
  std::string out;
  for (const auto& i : r.items) {
    out += i.passed ? "PASS  " : "FAIL  ";
    out += "[" + std::to_string(i.criterion) + "] " + i.name;
    if (timings) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "  (%.1f ms)", i.millis);
      out += buf;
    }
    out += "  " + i.detail + "\n";
  }
  return out;
}

}  // namespace ndlogic
