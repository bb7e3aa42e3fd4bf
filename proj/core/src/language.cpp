#include "ndlogic/language.hpp"

#include <algorithm>
#include <cctype>

#include "ndlogic/error.hpp"

namespace ndlogic {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

bool is_infix_token(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isgraph(u) && !std::isalnum(u) && u != '_' && u != '(' && u != ')' && u != ',';
  });
}

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

// ---------------------------------------------------------------- Signature

void Signature::add(std::string name, int arity) {
  if (!is_identifier(name)) throw InputError("connective name '" + name + "' is not an identifier");
  if (arity < 0) throw InputError("connective '" + name + "' has negative arity");
  if (arities_.contains(name)) throw InputError("connective '" + name + "' declared twice");
  arities_.emplace(std::move(name), arity);
}

void Signature::set_notation(const std::string& connective, std::string infix) {
  auto it = arities_.find(connective);
  if (it == arities_.end()) throw InputError("notation for undeclared connective '" + connective + "'");
  if (it->second != 2) throw InputError("infix notation requires a binary connective: '" + connective + "'");
  if (!is_infix_token(infix)) throw InputError("invalid infix token '" + infix + "'");
  for (const auto& [other, tok] : notation_) {
    if (tok == infix && other != connective) throw InputError("infix token '" + infix + "' used twice");
  }
  notation_[connective] = std::move(infix);
}

bool Signature::contains(std::string_view name) const { return arities_.find(name) != arities_.end(); }

int Signature::arity(std::string_view name) const {
  auto it = arities_.find(name);
  if (it == arities_.end()) throw InputError("unknown connective '" + std::string(name) + "'");
  return it->second;
}

std::vector<std::string> Signature::names() const {
  std::vector<std::string> out;
  out.reserve(arities_.size());
  for (const auto& [name, _] : arities_) out.push_back(name);
  return out;
}

std::string Signature::connective_for_infix(std::string_view token) const {
  for (const auto& [name, tok] : notation_) {
    if (tok == token) return name;
  }
  return {};
}

// ---------------------------------------------------------------- Formula

Formula Formula::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->is_var = true;
  n->hash = mix(0x51ed27ULL, std::hash<std::string>{}(name));
  n->symbol = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::apply(std::string connective, std::vector<Formula> args) {
  auto n = std::make_shared<Node>();
  std::size_t h = mix(0xc0ffeeULL, std::hash<std::string>{}(connective));
  for (const auto& a : args) {
    n->size += a.size();
    n->depth = std::max(n->depth, a.depth());
    h = mix(h, a.hash());
  }
  n->depth += 1;
  n->hash = h;
  n->symbol = std::move(connective);
  n->args = std::move(args);
  return Formula(std::move(n));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.is_var() != b.is_var() || a.symbol() != b.symbol()) {
    return false;
  }
  return std::equal(a.args().begin(), a.args().end(), b.args().begin(), b.args().end());
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.is_var() != b.is_var()) return a.is_var() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_var()) return a.symbol() <=> b.symbol();
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.symbol() <=> b.symbol(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.args().begin(), a.args().end(), b.args().begin(),
                                                b.args().end());
}

// ---------------------------------------------------------------- Substitution

void Substitution::bind(const std::string& var, Formula f) { map_.insert_or_assign(var, std::move(f)); }

Formula Substitution::operator()(const std::string& var) const {
  auto it = map_.find(var);
  return it == map_.end() ? Formula::var(var) : it->second;
}

Substitution Substitution::after(const Substitution& first) const {
  Substitution out;
  for (const auto& [v, f] : first.map_) out.bind(v, substitute(f, *this));
  for (const auto& [v, f] : map_) {
    if (!first.map_.contains(v)) out.bind(v, f);
  }
  return out;
}

Formula substitute(const Formula& f, const Substitution& s) {
  if (f.is_var()) return s(f.symbol());
  std::vector<Formula> args;
  args.reserve(f.args().size());
  bool changed = false;
  for (const auto& a : f.args()) {
    args.push_back(substitute(a, s));
    changed = changed || !(args.back() == a);
  }
  return changed ? Formula::apply(f.symbol(), std::move(args)) : f;
}

FormulaSet substitute(const FormulaSet& fs, const Substitution& s) {
  FormulaSet out;
  for (const auto& f : fs) out.insert(substitute(f, s));
  return out;
}

// ---------------------------------------------------------------- subformulas

void collect_variables(const Formula& f, std::set<std::string>& out) {
  if (f.is_var()) {
    out.insert(f.symbol());
    return;
  }
  for (const auto& a : f.args()) collect_variables(a, out);
}

std::vector<std::string> variables(const Formula& f) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  auto walk = [&](auto&& self, const Formula& g) -> void {
    if (g.is_var()) {
      if (seen.insert(g.symbol()).second) order.push_back(g.symbol());
      return;
    }
    for (const auto& a : g.args()) self(self, a);
  };
  walk(walk, f);
  return order;
}

namespace {
void add_subformulas(const Formula& f, FormulaSet& out) {
  if (!out.insert(f).second) return;
  for (const auto& a : f.args()) add_subformulas(a, out);
}
}  // namespace

FormulaSet subformulas(const Formula& f) {
  FormulaSet out;
  add_subformulas(f, out);
  return out;
}

FormulaSet subformulas(const FormulaSet& fs) {
  FormulaSet out;
  for (const auto& f : fs) add_subformulas(f, out);
  return out;
}

// ---------------------------------------------------------------- ThetaSet

ThetaSet::ThetaSet() : formulas_{Formula::var(std::string(kUnaryVar))} {}

ThetaSet::ThetaSet(const FormulaSet& formulas) : formulas_(formulas) {
  const Formula p = Formula::var(std::string(kUnaryVar));
  if (!formulas_.contains(p)) throw InputError("theta set must contain the variable p");
  for (const auto& f : formulas_) {
    std::set<std::string> vars;
    collect_variables(f, vars);
    if (vars.size() > 1 || (vars.size() == 1 && *vars.begin() != kUnaryVar)) {
      throw InputError("theta members must be formulas over the single variable p");
    }
  }
}

FormulaSet gen_subformulas(const ThetaSet& theta, const FormulaSet& fs) {
  const FormulaSet subs = subformulas(fs);
  FormulaSet out;
  const std::string p(kUnaryVar);
  for (const auto& t : theta.formulas()) {
    for (const auto& s : subs) out.insert(substitute(t, Substitution{{p, s}}));
  }
  return out;
}

// ---------------------------------------------------------------- enumeration

std::vector<Formula> enumerate_unary_formulas(const Signature& sig, int max_depth) {
  std::vector<Formula> out{Formula::var(std::string(kUnaryVar))};
  if (max_depth <= 0) return out;

  std::size_t below_prev = 0;  // first index of depth d-1
  for (int d = 1; d <= max_depth; ++d) {
    const std::size_t prefix = out.size();  // formulas of depth < d
    for (const auto& [name, arity] : sig.connectives()) {
      if (arity == 0) {
        if (d == 1) out.push_back(Formula::apply(name, {}));
        continue;
      }
      std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
      while (true) {
        bool fresh = std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return i >= below_prev; });
        if (fresh) {
          std::vector<Formula> args;
          args.reserve(idx.size());
          for (auto i : idx) args.push_back(out[i]);
          out.push_back(Formula::apply(name, std::move(args)));
        }
        std::size_t k = idx.size();
        while (k > 0) {
          --k;
          if (++idx[k] < prefix) break;
          idx[k] = 0;
          if (k == 0) goto next_connective;
        }
      }
    next_connective:;
    }
    below_prev = prefix;
    if (out.size() == prefix) break;
  }
  return out;
}

}  // namespace ndlogic
