#include "ndlogic/statement.hpp"

#include "ndlogic/syntax.hpp"

namespace ndlogic {

std::string_view to_string(Attitude a) {
  switch (a) {
    case Attitude::acc: return "acc";
    case Attitude::nacc: return "nacc";
    case Attitude::rej: return "rej";
    case Attitude::nrej: return "nrej";
  }
  return "?";
}

FormulaSet BStatement::all_formulas() const {
  FormulaSet out;
  for (const auto& s : sets) out.insert(s.begin(), s.end());
  return out;
}

BStatement as_t_aspect(const Statement1D& s) { return BStatement::make(s.antecedent, s.succedent, {}, {}); }

BStatement as_f_aspect(const Statement1D& s) { return BStatement::make({}, {}, s.antecedent, s.succedent); }

BStatement substitute(const BStatement& s, const Substitution& sub) {
  BStatement out;
  for (auto a : kAttitudes) out[a] = substitute(s[a], sub);
  return out;
}

Statement1D substitute(const Statement1D& s, const Substitution& sub) {
  return {substitute(s.antecedent, sub), substitute(s.succedent, sub)};
}

std::string to_string(const Statement1D& s) { return to_string(s.antecedent) + " |> " + to_string(s.succedent); }

std::string to_string(const BStatement& s) {
  return "acc " + to_string(s[Attitude::acc]) + " rej " + to_string(s[Attitude::rej]) + " |> nacc " +
         to_string(s[Attitude::nacc]) + " nrej " + to_string(s[Attitude::nrej]);
}

}  // namespace ndlogic
