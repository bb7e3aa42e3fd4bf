#include "ndlogic/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <map>
#include <set>

#include "json.hpp"
#include "ndlogic/error.hpp"
#include "ndlogic/syntax.hpp"

namespace ndlogic {

namespace {

using json = nlohmann::ordered_json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

void require_object(const json& j, std::string_view what) {
  if (!j.is_object()) throw InputError(std::string(what) + " must be a JSON object");
}

void allow_keys(const json& j, std::initializer_list<std::string_view> keys, std::string_view what) {
  for (const auto& [k, v] : j.items()) {
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
      throw InputError("unknown key '" + k + "' in " + std::string(what));
    }
  }
}

const json& field(const json& j, const char* key, std::string_view what) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing key '") + key + "' in " + std::string(what));
  return *it;
}

std::string as_string(const json& j, std::string_view what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> string_list(const json& j, std::string_view what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(as_string(e, what));
  return out;
}

FormulaSet formula_set(const json& j, const Signature& sig, std::string_view what) {
  FormulaSet out;
  for (const auto& s : string_list(j, what)) out.insert(parse_formula(s, sig));
  return out;
}

FormulaSet optional_set(const json& j, const char* key, const Signature& sig) {
  auto it = j.find(key);
  return it == j.end() ? FormulaSet{} : formula_set(*it, sig, key);
}

json formulas_json(const FormulaSet& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(to_string(f));
  return out;
}

Signature signature_from(const json& j) {
  require_object(j, "signature");
  allow_keys(j, {"connectives", "notation"}, "signature");
  Signature sig;
  const json& cons = field(j, "connectives", "signature");
  require_object(cons, "connectives");
  for (const auto& [name, arity] : cons.items()) {
    if (!arity.is_number_integer() || arity.get<int>() < 0) {
      throw InputError("arity of '" + name + "' must be a non-negative integer");
    }
    sig.add(name, arity.get<int>());
  }
  if (auto it = j.find("notation"); it != j.end()) {
    require_object(*it, "notation");
    for (const auto& [name, token] : it->items()) sig.set_notation(name, as_string(token, "notation"));
  }
  return sig;
}

json signature_json(const Signature& sig) {
  json out;
  out["connectives"] = json::object();
  for (const auto& [name, arity] : sig.connectives()) out["connectives"][name] = arity;
  if (!sig.notation().empty()) {
    out["notation"] = json::object();
    for (const auto& [name, token] : sig.notation()) out["notation"][name] = token;
  }
  return out;
}

json value_list(const NdAlgebra& a, ValueSet s) {
  json out = json::array();
  for (const auto& n : a.names(s)) out.push_back(n);
  return out;
}

json matrix_json(const NdAlgebra& a, ValueSet designated, const ValueSet* antidesignated) {
  json out;
  out["signature"] = signature_json(a.signature());
  out["values"] = a.values();
  out["designated"] = value_list(a, designated);
  if (antidesignated) out["antidesignated"] = value_list(a, *antidesignated);
  json interp = json::object();
  for (const auto& name : a.signature().names()) {
    const auto& t = a.table(name);
    json cells = json::object();
    for (std::size_t i = 0; i < t.cells.size(); ++i) {
      std::string key;
      for (auto v : a.cell_args(t, i)) key += (key.empty() ? "" : ",") + a.name(v);
      cells[key] = value_list(a, t.cells[i]);
    }
    interp[name] = std::move(cells);
  }
  out["interpretation"] = std::move(interp);
  return out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = s.find(',', pos);
    std::string part = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    part.erase(0, part.find_first_not_of(' '));
    part.erase(part.find_last_not_of(' ') + 1);
    out.push_back(part);
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return out;
}

json tree_json(const DerivationTree& t, const NodeLabel* parent) {
  json out;
  if (t.is_star()) {
    out["star"] = true;
    return out;
  }
  FormulaSet acc;
  FormulaSet rej;
  if (parent) {
    std::set_difference(t.label->acc.begin(), t.label->acc.end(), parent->acc.begin(), parent->acc.end(),
                        std::inserter(acc, acc.end()));
    std::set_difference(t.label->rej.begin(), t.label->rej.end(), parent->rej.begin(), parent->rej.end(),
                        std::inserter(rej, rej.end()));
  } else {
    acc = t.label->acc;
    rej = t.label->rej;
  }
  out["acc"] = formulas_json(acc);
  out["rej"] = formulas_json(rej);
  if (!t.is_leaf()) {
    out["rule"] = t.rule;
    json subst = json::object();
    for (const auto& [v, f] : t.substitution.bindings()) subst[v] = to_string(f);
    out["subst"] = std::move(subst);
    json kids = json::array();
    for (const auto& c : t.children) kids.push_back(tree_json(c, &*t.label));
    out["children"] = std::move(kids);
  }
  return out;
}

DerivationTree tree_from(const json& j, const NodeLabel* parent, const Signature& sig) {
  require_object(j, "proof node");
  if (j.contains("star")) {
    allow_keys(j, {"star"}, "proof node");
    if (j["star"] != true) throw InputError("\"star\" must be true");
    return DerivationTree::star();
  }
  allow_keys(j, {"acc", "rej", "rule", "subst", "children"}, "proof node");
  NodeLabel label = parent ? *parent : NodeLabel{};
  for (const auto& f : optional_set(j, "acc", sig)) label.acc.insert(f);
  for (const auto& f : optional_set(j, "rej", sig)) label.rej.insert(f);
  DerivationTree t = DerivationTree::leaf(label);
  if (auto it = j.find("rule"); it != j.end()) t.rule = as_string(*it, "rule");
  if (auto it = j.find("subst"); it != j.end()) {
    require_object(*it, "subst");
    for (const auto& [v, f] : it->items()) t.substitution.bind(v, parse_formula(as_string(f, "subst"), sig));
  }
  if (auto it = j.find("children"); it != j.end()) {
    if (!it->is_array()) throw InputError("children must be an array");
    for (const auto& c : *it) t.children.push_back(tree_from(c, &label, sig));
  }
  if (!t.children.empty() && t.rule.empty()) throw InputError("expanded proof node without a rule");
  return t;
}

void collect_arities(const Formula& f, std::map<std::string, int>& out) {
  if (f.is_var()) return;
  out.emplace(f.symbol(), static_cast<int>(f.args().size()));
  for (const auto& a : f.args()) collect_arities(a, out);
}

}  // namespace

Signature signature_from_json(std::string_view text) { return signature_from(parse_json(text)); }

std::string signature_to_json(const Signature& sig) { return signature_json(sig).dump(2); }

Signature infer_signature(std::span<const std::string> formulas) {
  std::map<std::string, int> arities;
  for (const auto& text : formulas) {
    // Scan for `ident (` and count the top-level commas of its argument list.
    for (std::size_t i = 0; i < text.size();) {
      const auto is_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
      const auto is_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
      if (!is_start(text[i])) {
        ++i;
        continue;
      }
      std::size_t end = i;
      while (end < text.size() && is_char(text[end])) ++end;
      const std::string name = text.substr(i, end - i);
      std::size_t k = end;
      while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
      if (k < text.size() && text[k] == '(') {
        int depth = 0;
        int arity = 1;
        bool any = false;
        for (std::size_t m = k; m < text.size(); ++m) {
          if (text[m] == '(') {
            ++depth;
          } else if (text[m] == ')') {
            if (--depth == 0) break;
          } else if (depth == 1 && text[m] == ',') {
            ++arity;
          } else if (depth >= 1 && !std::isspace(static_cast<unsigned char>(text[m]))) {
            any = true;
          }
        }
        if (!any) arity = 0;
        auto [it, fresh] = arities.emplace(name, arity);
        if (!fresh && it->second != arity) throw ArityError("connective '" + name + "' used with two arities");
      }
      i = end;
    }
  }
  Signature sig;
  for (const auto& [name, arity] : arities) sig.add(name, arity);
  return sig;
}

AnyMatrix matrix_from_json(std::string_view text) {
  const json j = parse_json(text);
  require_object(j, "matrix");
  allow_keys(j, {"signature", "values", "designated", "antidesignated", "interpretation"}, "matrix");
  NdAlgebra a(signature_from(field(j, "signature", "matrix")), string_list(field(j, "values", "matrix"), "values"));
  const auto names_to_set = [&](const json& list, std::string_view what) {
    const auto names = string_list(list, what);
    return a.value_set(names);
  };
  const json& interp = field(j, "interpretation", "matrix");
  require_object(interp, "interpretation");
  for (const auto& [name, cells] : interp.items()) {
    if (!a.signature().contains(name)) throw InputError("interpretation of undeclared connective '" + name + "'");
    require_object(cells, "interpretation of " + name);
    for (const auto& [key, out] : cells.items()) {
      std::vector<ValueId> args;
      for (const auto& v : split_commas(key)) args.push_back(a.value_id(v));
      if (static_cast<int>(args.size()) != a.signature().arity(name)) {
        throw ArityError("cell '" + key + "' of " + name + " has the wrong number of arguments");
      }
      const ValueSet s = names_to_set(out, "cell of " + name);
      if (s.empty()) throw InputError("cell '" + key + "' of " + name + " is empty");
      a.set(name, args, s);
    }
  }
  for (const auto& name : a.signature().names()) {
    const auto& t = a.table(name);
    for (std::size_t i = 0; i < t.cells.size(); ++i) {
      if (t.cells[i].empty()) {
        std::string key;
        for (auto v : a.cell_args(t, i)) key += (key.empty() ? "" : ",") + a.name(v);
        throw InputError("missing cell '" + key + "' of " + name);
      }
    }
  }
  const ValueSet d = names_to_set(field(j, "designated", "matrix"), "designated");
  if (auto it = j.find("antidesignated"); it != j.end()) {
    return BMatrix{a, d, names_to_set(*it, "antidesignated")};
  }
  return NdMatrix{a, d};
}

std::string matrix_to_json(const NdMatrix& m) { return matrix_json(m.algebra, m.designated, nullptr).dump(2); }

std::string matrix_to_json(const BMatrix& b) {
  return matrix_json(b.algebra, b.designated, &b.antidesignated).dump(2);
}

Statement1D statement_from_json(std::string_view text, const Signature& sig) {
  const json j = parse_json(text);
  require_object(j, "statement");
  allow_keys(j, {"antecedent", "succedent"}, "statement");
  return Statement1D{optional_set(j, "antecedent", sig), optional_set(j, "succedent", sig)};
}

std::string statement_to_json(const Statement1D& s) {
  json out;
  out["antecedent"] = formulas_json(s.antecedent);
  out["succedent"] = formulas_json(s.succedent);
  return out.dump();
}

BStatement bstatement_from_json(std::string_view text, const Signature& sig) {
  const json j = parse_json(text);
  require_object(j, "B-statement");
  allow_keys(j, {"acc", "nacc", "rej", "nrej"}, "B-statement");
  return BStatement::make(optional_set(j, "acc", sig), optional_set(j, "nacc", sig), optional_set(j, "rej", sig),
                          optional_set(j, "nrej", sig));
}

std::string bstatement_to_json(const BStatement& s) {
  json out;
  for (auto a : kAttitudes) out[std::string(to_string(a))] = formulas_json(s[a]);
  return out.dump();
}

FormulaSet formulas_from_json(std::string_view text, const Signature& sig) {
  return formula_set(parse_json(text), sig, "formula list");
}

std::vector<std::string> statement_formula_texts(std::string_view text) {
  const json j = parse_json(text);
  require_object(j, "statement");
  std::vector<std::string> out;
  for (const auto& [k, v] : j.items()) {
    for (const auto& s : string_list(v, k)) out.push_back(s);
  }
  return out;
}

Calculus calculus_from_json(std::string_view text, const Signature* sig) {
  const json j = parse_json(text);
  require_object(j, "calculus");
  allow_keys(j, {"name", "dimension", "theta", "signature", "rules"}, "calculus");
  Signature effective;
  if (auto it = j.find("signature"); it != j.end()) {
    effective = signature_from(*it);
  } else if (sig) {
    effective = *sig;
  } else {
    std::vector<std::string> texts;
    const auto add_texts = [&](const json& list) {
      for (const auto& s : string_list(list, "formulas")) texts.push_back(s);
    };
    if (auto it = j.find("theta"); it != j.end()) add_texts(*it);
    const json& rules = field(j, "rules", "calculus");
    if (!rules.is_array()) throw InputError("rules must be an array");
    for (const auto& r : rules) {
      require_object(r, "rule");
      for (const char* k : {"acc", "nacc", "rej", "nrej"}) {
        if (auto f = r.find(k); f != r.end()) add_texts(*f);
      }
    }
    effective = infer_signature(texts);
  }
  Calculus c;
  c.name = as_string(field(j, "name", "calculus"), "name");
  const json& dim = field(j, "dimension", "calculus");
  if (!dim.is_number_integer()) throw InputError("dimension must be 1 or 2");
  c.dimension = dim.get<int>();
  if (auto it = j.find("theta"); it != j.end()) c.theta = ThetaSet(formula_set(*it, effective, "theta"));
  const json& rules = field(j, "rules", "calculus");
  if (!rules.is_array()) throw InputError("rules must be an array");
  for (const auto& r : rules) {
    require_object(r, "rule");
    allow_keys(r, {"name", "acc", "nacc", "rej", "nrej"}, "rule");
    RuleSchema rs;
    rs.name = as_string(field(r, "name", "rule"), "rule name");
    rs.dimension = c.dimension;
    rs.body = BStatement::make(optional_set(r, "acc", effective), optional_set(r, "nacc", effective),
                               optional_set(r, "rej", effective), optional_set(r, "nrej", effective));
    c.rules.push_back(std::move(rs));
  }
  c.validate();
  return c;
}

std::string calculus_to_json(const Calculus& c) {
  json out;
  out["name"] = c.name;
  out["dimension"] = c.dimension;
  if (c.theta) out["theta"] = formulas_json(c.theta->formulas());
  json rules = json::array();
  for (const auto& r : c.rules) {
    json jr;
    jr["name"] = r.name;
    for (auto a : kAttitudes) jr[std::string(to_string(a))] = formulas_json(r.body[a]);
    rules.push_back(std::move(jr));
  }
  out["rules"] = std::move(rules);
  return out.dump(2);
}

Signature signature_of(const Calculus& c) {
  std::map<std::string, int> arities;
  for (const auto& r : c.rules) {
    for (const auto& f : r.body.all_formulas()) collect_arities(f, arities);
  }
  if (c.theta) {
    for (const auto& f : c.theta->formulas()) collect_arities(f, arities);
  }
  Signature sig;
  for (const auto& [name, arity] : arities) sig.add(name, arity);
  return sig;
}

DerivationTree proof_from_json(std::string_view text, const Signature& sig) {
  return tree_from(parse_json(text), nullptr, sig);
}

std::string proof_to_json(const DerivationTree& t) { return tree_json(t, nullptr).dump(2); }

}  // namespace ndlogic
