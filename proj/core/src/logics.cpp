#include "ndlogic/logics.hpp"

#include <array>
#include <charconv>

#include "ndlogic/entailment.hpp"
#include "ndlogic/error.hpp"
#include "ndlogic/syntax.hpp"

namespace ndlogic::logics {

namespace {

Formula P(std::string_view text) { return parse_formula(text, sigma_mci()); }

FormulaSet S(std::initializer_list<std::string_view> texts) {
  FormulaSet out;
  for (auto t : texts) out.insert(P(t));
  return out;
}

// Values are f, F, I, T, t in this order.
constexpr std::array<const char*, 5> kMciValues = {"f", "F", "I", "T", "t"};
constexpr std::uint64_t kD5 = 0b11100;  // I, T, t
constexpr std::uint64_t kR5 = 0b01101;  // f, I, T
constexpr std::uint64_t kIt = 0b10100;  // {I, t}

bool in_d5(ValueId v) { return (kD5 >> v) & 1U; }

// Reference tables, row-major with the first argument outermost.
// Binary: 'f' = {f}, 'D' = {I,t}. Unary: one comma-separated cell per value.
constexpr std::string_view kAndRef = "fffff" "fffff" "ffDDD" "ffDDD" "ffDDD";
constexpr std::string_view kOrRef = "ffDDD" "ffDDD" "DDDDD" "DDDDD" "DDDDD";
constexpr std::string_view kImpRef = "DDDDD" "DDDDD" "ffDDD" "ffDDD" "ffDDD";
constexpr std::array<std::string_view, 5> kNegRef = {"I t", "T", "I t", "F", "f"};
constexpr std::array<std::string_view, 5> kConsRef = {"T", "T", "F", "T", "T"};

NdAlgebra build_mci_algebra() {
  NdAlgebra a(sigma_mci(), std::vector<std::string>(kMciValues.begin(), kMciValues.end()));
  const ValueSet f = ValueSet::single(0);
  const ValueSet it(kIt);
  for (ValueId x = 0; x < 5; ++x) {
    for (ValueId y = 0; y < 5; ++y) {
      const std::array<ValueId, 2> xy = {x, y};
      a.set("and", xy, in_d5(x) && in_d5(y) ? it : f);
      a.set("or", xy, in_d5(x) || in_d5(y) ? it : f);
      a.set("imp", xy, !in_d5(x) || in_d5(y) ? it : f);
    }
  }
  const auto val = [&](std::string_view n) { return a.value_id(n); };
  const auto set1 = [&](const char* c, std::string_view x, ValueSet out) {
    const std::array<ValueId, 1> arg = {val(x)};
    a.set(c, arg, out);
  };
  set1("neg", "f", it);
  set1("neg", "F", ValueSet::single(val("T")));
  set1("neg", "I", it);
  set1("neg", "T", ValueSet::single(val("F")));
  set1("neg", "t", f);
  for (auto v : kMciValues) set1("cons", v, ValueSet::single(val(std::string_view(v) == "I" ? "F" : "T")));
  return a;
}

ValueSet parse_ref_cell(const NdAlgebra& a, std::string_view cell) {
  ValueSet out;
  std::size_t pos = 0;
  while (pos < cell.size()) {
    std::size_t end = cell.find(' ', pos);
    if (end == std::string_view::npos) end = cell.size();
    out.insert(a.value_id(cell.substr(pos, end - pos)));
    pos = end + 1;
  }
  return out;
}

void check_against_reference(const NdAlgebra& a) {
  const auto fail = [](const std::string& what) { throw Error("mCi table mismatch: " + what); };
  const std::array<std::pair<const char*, std::string_view>, 3> bins = {
      {{"and", kAndRef}, {"or", kOrRef}, {"imp", kImpRef}}};
  for (const auto& [name, ref] : bins) {
    for (ValueId x = 0; x < 5; ++x) {
      for (ValueId y = 0; y < 5; ++y) {
        const std::array<ValueId, 2> xy = {x, y};
        const ValueSet want = ref[x * 5 + y] == 'f' ? ValueSet::single(0) : ValueSet(kIt);
        if (a.interpret(name, xy) != want) fail(std::string(name) + " at " + kMciValues[x] + "," + kMciValues[y]);
      }
    }
  }
  for (ValueId x = 0; x < 5; ++x) {
    const std::array<ValueId, 1> arg = {x};
    if (a.interpret("neg", arg) != parse_ref_cell(a, kNegRef[x])) fail(std::string("neg at ") + kMciValues[x]);
    if (a.interpret("cons", arg) != parse_ref_cell(a, kConsRef[x])) fail(std::string("cons at ") + kMciValues[x]);
  }
}

RuleSchema rule2(std::string name, std::initializer_list<std::string_view> acc,
                 std::initializer_list<std::string_view> nrej, std::initializer_list<std::string_view> rej,
                 std::initializer_list<std::string_view> nacc) {
  return RuleSchema::two_dim(std::move(name), S(acc), S(nacc), S(rej), S(nrej));
}

int parse_index(std::string_view text, std::string_view what) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("bad index '" + std::string(text) + "' in builtin " + std::string(what));
  }
  return out;
}

Formula apply_n(const std::string& c, int n, Formula f) {
  for (int i = 0; i < n; ++i) f = Formula::apply(c, {f});
  return f;
}

// Derivation transcription: each node adds one formula to acc or rej of its
// parent's label, then names the rule that expands it.
struct Step {
  char side = 0;  // 'a', 'r', or 0 for the root / star
  std::string formula;
  std::string rule;
  Substitution subst;
  std::vector<Step> kids;
  bool star = false;
};

Step star() {
  Step s;
  s.star = true;
  return s;
}

Step add(char side, std::string formula, std::string rule = {}, Substitution subst = {}, std::vector<Step> kids = {}) {
  return Step{side, std::move(formula), std::move(rule), std::move(subst), std::move(kids), false};
}

DerivationTree materialize(const Step& s, NodeLabel label) {
  if (s.star) return DerivationTree::star();
  if (s.side == 'a') label.acc.insert(P(s.formula));
  if (s.side == 'r') label.rej.insert(P(s.formula));
  DerivationTree t = DerivationTree::leaf(label);
  t.rule = s.rule;
  t.substitution = s.subst;
  for (const auto& k : s.kids) t.children.push_back(materialize(k, label));
  return t;
}

Substitution sub(std::initializer_list<std::pair<std::string_view, std::string_view>> binds) {
  Substitution s;
  for (const auto& [v, f] : binds) s.bind(std::string(v), P(f));
  return s;
}

}  // namespace

Signature sigma_mci() {
  static const Signature sig = [] {
    Signature s;
    s.add("neg", 1);
    s.add("cons", 1);
    s.add("and", 2);
    s.add("or", 2);
    s.add("imp", 2);
    s.set_notation("imp", "->");
    s.set_notation("and", "&");
    s.set_notation("or", "|");
    return s;
  }();
  return sig;
}

const MciArtifacts& mci_artifacts() {
  static const MciArtifacts art = [] {
    NdAlgebra a = build_mci_algebra();
    check_against_reference(a);
    if (!check_total(a)) throw Error("mCi algebra is not total");
    NdMatrix m5{a, ValueSet(kD5)};
    NdMatrix m5_rej{a, ValueSet(kR5)};
    return MciArtifacts{sigma_mci(), m5, m5_rej, b_product(m5, m5_rej), hmci2d()};
  }();
  return art;
}

Calculus hmci2d() {
  // Slots per rule: acc, nrej, rej, nacc.
  std::vector<RuleSchema> rules = {
      rule2("imp1", {"q"}, {}, {}, {"imp(p,q)"}),
      rule2("imp2", {}, {}, {}, {"p", "imp(p,q)"}),
      rule2("imp3", {"imp(p,q)", "p"}, {}, {}, {"q"}),
      rule2("imp4", {"p"}, {"imp(p,q)"}, {}, {"q"}),
      rule2("imp5", {"imp(p,q)", "cons(imp(p,q))"}, {}, {"imp(p,q)"}, {}),
      rule2("and1", {"p", "q"}, {}, {}, {"and(p,q)"}),
      rule2("and2", {"and(p,q)"}, {}, {}, {"p"}),
      rule2("and3", {"and(p,q)"}, {}, {}, {"q"}),
      rule2("and4", {}, {"and(p,q)"}, {}, {"and(p,q)"}),
      rule2("and5", {"and(p,q)", "cons(and(p,q))"}, {}, {"and(p,q)"}, {}),
      rule2("or1", {"p"}, {}, {}, {"or(p,q)"}),
      rule2("or2", {"q"}, {}, {}, {"or(p,q)"}),
      rule2("or3", {"or(p,q)"}, {}, {}, {"p", "q"}),
      rule2("or4", {}, {"or(p,q)"}, {}, {"p", "q"}),
      rule2("or5", {"or(p,q)", "cons(or(p,q))"}, {}, {"or(p,q)"}, {}),
      rule2("cons1", {"cons(p)"}, {"cons(p)"}, {}, {}),
      rule2("cons2", {}, {}, {}, {"cons(cons(p))"}),
      rule2("cons3", {}, {}, {"cons(p)"}, {"cons(p)"}),
      rule2("cons4", {}, {"p"}, {}, {"cons(p)"}),
      rule2("cons5", {}, {"cons(p)"}, {}, {"p"}),
      rule2("neg1", {}, {"neg(p)", "p"}, {}, {}),
      rule2("neg2", {"neg(p)", "cons(p)", "p"}, {}, {}, {}),
      rule2("neg3", {"neg(p)", "p"}, {"p"}, {}, {}),
      rule2("neg4", {"cons(neg(p))"}, {}, {"neg(p)", "p"}, {}),
      rule2("neg5", {}, {}, {"neg(p)", "p"}, {"neg(p)"}),
      rule2("neg6", {}, {}, {}, {"neg(p)", "cons(p)"}),
      rule2("neg7", {}, {}, {}, {"neg(p)", "p"}),
      rule2("neg8", {}, {"p"}, {}, {"cons(neg(p))"}),
  };
  return Calculus{"hmci2d", 2, std::move(rules), ThetaSet(S({"p", "cons(p)"}))};
}

NdMatrix boolean_positive() {
  Signature sig;
  sig.add("and", 2);
  sig.add("or", 2);
  sig.add("imp", 2);
  sig.set_notation("imp", "->");
  sig.set_notation("and", "&");
  sig.set_notation("or", "|");
  NdAlgebra a(sig, {"F", "T"});
  for (ValueId x = 0; x < 2; ++x) {
    for (ValueId y = 0; y < 2; ++y) {
      const std::array<ValueId, 2> xy = {x, y};
      a.set("and", xy, ValueSet::single(x & y));
      a.set("or", xy, ValueSet::single(x | y));
      a.set("imp", xy, ValueSet::single((1 - x) | y));
    }
  }
  return NdMatrix{a, ValueSet::single(1)};
}

MkMatrix mk_matrix(int k) {
  if (k < 1 || k > 31) throw InputError("mk_matrix needs 1 <= k <= 31, got " + std::to_string(k));
  const int s = k + 1;
  const int n = 2 * s;
  std::vector<std::string> names;
  for (int v = 1; v <= n; ++v) names.push_back(std::to_string(v));
  NdAlgebra a(sigma_mci(), names);
  // Values are 1-based in the definition; ValueId is value - 1.
  const auto id = [](int v) { return static_cast<ValueId>(v - 1); };
  const auto one = [&](int v) { return ValueSet::single(id(v)); };
  const auto des = [&](int v) { return v > s; };
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      const std::array<ValueId, 2> xy = {id(x), id(y)};
      a.set("or", xy, one(!des(x) && !des(y) ? 1 : s + 1));
      a.set("and", xy, one(des(x) && des(y) ? s + 1 : 1));
      a.set("imp", xy, one(des(x) && !des(y) ? 1 : s + 1));
    }
    const std::array<ValueId, 1> arg = {id(x)};
    a.set("cons", arg, one(x == n ? 1 : s + 1));
    int neg = 0;
    if (x == 1 || x == n) {
      neg = s + 1;
    } else if (x <= s) {
      neg = x + s;
    } else {
      neg = x - (s - 1);
    }
    a.set("neg", arg, one(neg));
  }
  ValueSet d;
  for (int v = s + 1; v <= n; ++v) d.insert(id(v));
  return MkMatrix{k, NdMatrix{a, d}};
}

int iterated_neg(int k, int m) {
  if (m < 1 || m > 2 * k) throw InputError("iterated_neg needs 1 <= m <= 2k");
  const MkMatrix mk = mk_matrix(k);
  ValueId v = static_cast<ValueId>(k + 1);  // the value k+2
  for (int i = 0; i < m; ++i) {
    const std::array<ValueId, 1> arg = {v};
    v = mk.matrix.algebra.interpret("neg", arg).members().front();
  }
  return static_cast<int>(v) + 1;
}

int iterated_neg_closed_form(int k, int m) {
  if (m < 1 || m > 2 * k) throw InputError("iterated_neg_closed_form needs 1 <= m <= 2k");
  return m % 2 == 0 ? (k + 2) + m / 2 : 1 + (m + 1) / 2;
}

std::vector<RuleSchema> cpl_positive_axioms() {
  const std::array<std::string_view, 9> ax = {
      "imp(p,imp(q,p))",
      "imp(imp(p,imp(q,r)),imp(imp(p,q),imp(p,r)))",
      "imp(and(p,q),p)",
      "imp(and(p,q),q)",
      "imp(p,imp(q,and(p,q)))",
      "imp(p,or(p,q))",
      "imp(q,or(p,q))",
      "imp(imp(p,r),imp(imp(q,r),imp(or(p,q),r)))",
      "imp(imp(imp(p,q),p),p)",
  };
  std::vector<RuleSchema> out;
  for (std::size_t i = 0; i < ax.size(); ++i) {
    out.push_back(RuleSchema::one_dim("ax" + std::to_string(i + 1), {}, {P(ax[i])}));
  }
  return out;
}

RuleSchema modus_ponens() { return RuleSchema::one_dim("mp", S({"p", "imp(p,q)"}), S({"q"})); }

Formula ci_j_formula(int j) {
  const Formula cp = Formula::apply("cons", {Formula::var("p")});
  return Formula::apply("cons", {apply_n("neg", j, cp)});
}

HmciFamily hmci_axioms(int k) {
  if (k < 0) throw InputError("hmci_axioms needs k >= 0");
  std::vector<RuleSchema> rules = cpl_positive_axioms();
  rules.push_back(RuleSchema::one_dim("ExM", {}, S({"or(p,neg(p))"})));
  rules.push_back(RuleSchema::one_dim("bc1", {}, S({"imp(cons(p),imp(p,imp(neg(p),q)))"})));
  rules.push_back(RuleSchema::one_dim("ci", {}, S({"imp(neg(cons(p)),and(p,neg(p)))"})));
  for (int j = 0; j <= k; ++j) {
    rules.push_back(RuleSchema::one_dim("ci_" + std::to_string(j), {}, {ci_j_formula(j)}));
  }
  rules.push_back(modus_ponens());
  return HmciFamily{k, Calculus{"hmci:" + std::to_string(k), 1, std::move(rules), std::nullopt}};
}

Calculus cplpos() {
  std::vector<RuleSchema> rules = cpl_positive_axioms();
  rules.push_back(modus_ponens());
  return Calculus{"cplpos", 1, std::move(rules), std::nullopt};
}

Signature sigma_ex1() {
  Signature s;
  s.add("g", 1);
  s.add("h", 1);
  return s;
}

RuleSchema Example1::rule(int i) const {
  if (i < 0) throw InputError("ex1 rule index must be non-negative");
  const Formula p = Formula::var("p");
  return RuleSchema::one_dim("ex1_" + std::to_string(i), {apply_n("h", i, p)}, {p, Formula::apply("g", {p})});
}

Calculus Example1::rules_up_to(int i) const {
  if (i < 0) throw InputError("ex1 rule index must be non-negative");
  Calculus c{"ex1-rules:" + std::to_string(i), 1, {}, std::nullopt};
  for (int j = 0; j <= i; ++j) c.rules.push_back(rule(j));
  return c;
}

Example1 example1() {
  NdAlgebra a(sigma_ex1(), {"t", "f", "bot"});
  const ValueSet all = ValueSet::all(3);
  for (ValueId x = 0; x < 3; ++x) {
    const std::array<ValueId, 1> arg = {x};
    a.set("g", arg, x == 2 ? ValueSet::single(0) : all);
    a.set("h", arg, x == 1 ? ValueSet::single(1) : all);
  }
  return Example1{NdMatrix{a, ValueSet::single(0)}};
}

namespace {

// The printed second and third rules, with the printed connective names
// replaced by `f_as` and `t_as`.
std::vector<RuleSchema> example2_rules(const std::string& f_as, const std::string& t_as) {
  const Formula p = Formula::var("p");
  return {
      RuleSchema::two_dim("r1", {p}, {}, {p}, {}),
      RuleSchema::two_dim("r2", {}, {Formula::apply(f_as, {p}), p}, {}, {p}),
      RuleSchema::two_dim("r3", {}, {}, {p}, {Formula::apply(t_as, {p})}),
  };
}

}  // namespace

Example2 example2() {
  // The printed rules call the connectives f and t; they stand for g and h.
  const NdMatrix m = example1().matrix;
  BMatrix b{m.algebra, m.designated, ValueSet::single(1)};
  return Example2{b, Calculus{"ex2-calc", 2, example2_rules("g", "h"), ThetaSet()}};
}

NamingRepair resolve_example2_naming() {
  const BMatrix b = example2().matrix;
  NamingRepair out;
  for (const std::string cand : {"g", "h"}) {
    const std::string other = cand == "g" ? "h" : "g";
    const auto rules = example2_rules(cand, other);
    if (validate_rule(b, rules[1]).valid && out.f_reads_as.empty()) out.f_reads_as = cand;
    const auto rules_t = example2_rules(other, cand);
    if (validate_rule(b, rules_t[2]).valid && out.t_reads_as.empty()) out.t_reads_as = cand;
  }
  return out;
}

std::vector<TranscribedProof> reference_derivations() {
  std::vector<TranscribedProof> out;

  // p & neg p proves neg cons p.
  {
    const Step tree = add(0, "", "and2", sub({{"p", "p"}, {"q", "neg(p)"}}),
        {add('a', "p", "and3", sub({{"p", "p"}, {"q", "neg(p)"}}),
             {add('a', "neg(p)", "neg7", sub({{"p", "cons(p)"}}),
                  {add('a', "neg(cons(p))"),
                   add('a', "cons(p)", "neg2", sub({{"p", "p"}}), {star()})})})});
    const auto s = BStatement::make(S({"and(p,neg(p))"}), S({"neg(cons(p))"}), {}, {});
    out.push_back({"and-neg-to-neg-cons", s, materialize(tree, NodeLabel{S({"and(p,neg(p))"}), {}})});
  }

  // neg cons p proves p & neg p.
  {
    const Step closing_cons = add('a', "cons(cons(p))", "neg2", sub({{"p", "cons(p)"}}), {star()});
    const Step tree = add(0, "", "neg6", sub({{"p", "p"}}),
        {add('a', "neg(p)", "cons5", sub({{"p", "p"}}),
             {add('a', "p", "and1", sub({{"p", "p"}, {"q", "neg(p)"}}), {add('a', "and(p,neg(p))")}),
              add('r', "cons(p)", "cons3", sub({{"p", "p"}}),
                  {add('a', "cons(p)", "cons2", sub({{"p", "p"}}), {closing_cons})})}),
         add('a', "cons(p)", "cons2", sub({{"p", "p"}}), {closing_cons})});
    const auto s = BStatement::make(S({"neg(cons(p))"}), S({"and(p,neg(p))"}), {}, {});
    out.push_back({"neg-cons-to-and-neg", s, materialize(tree, NodeLabel{S({"neg(cons(p))"}), {}})});
  }

  // cons neg cons p is a theorem.
  {
    const Step tail = add('r', "cons(p)", "neg5", sub({{"p", "cons(p)"}}),
        {add('a', "neg(cons(p))", "cons3", sub({{"p", "p"}}),
             {add('a', "cons(p)", "cons2", sub({{"p", "p"}}),
                  {add('a', "cons(cons(p))", "neg2", sub({{"p", "cons(p)"}}), {star()})})})});
    const Step tree = add(0, "", "cons4", sub({{"p", "neg(cons(p))"}}),
        {add('a', "cons(neg(cons(p)))"),
         add('r', "neg(cons(p))", "neg8", sub({{"p", "cons(p)"}}), {add('a', "cons(neg(cons(p)))"), tail})});
    const auto s = BStatement::make({}, S({"cons(neg(cons(p)))"}), {}, {});
    out.push_back({"cons-neg-cons-theorem", s, materialize(tree, NodeLabel{})});
  }
  return out;
}

AnyMatrix builtin_matrix(std::string_view name) {
  if (name == "mci5") return mci_artifacts().m5;
  if (name == "mci5-rej") return mci_artifacts().m5_rej;
  if (name == "mci-b") return mci_artifacts().b5;
  if (name == "ex1") return example1().matrix;
  if (name == "ex2") return example2().matrix;
  if (name == "cplpos") return boolean_positive();
  if (name.starts_with("mk:")) return mk_matrix(parse_index(name.substr(3), name)).matrix;
  throw InputError("unknown builtin matrix '" + std::string(name) + "'");
}

Calculus builtin_calculus(std::string_view name) {
  if (name == "hmci2d") return mci_artifacts().hmci2d;
  if (name == "ex2-calc") return example2().calculus;
  if (name == "cplpos") return cplpos();
  if (name.starts_with("hmci:")) return hmci_axioms(parse_index(name.substr(5), name)).calculus;
  if (name.starts_with("ex1-rules:")) return example1().rules_up_to(parse_index(name.substr(10), name));
  throw InputError("unknown builtin calculus '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() {
  return {"mci5", "mci5-rej", "mci-b", "hmci2d", "hmci:k", "mk:k", "ex1", "ex1-rules:i", "ex2", "ex2-calc", "cplpos"};
}

}  // namespace ndlogic::logics
