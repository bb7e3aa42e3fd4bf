#pragma once

#include <array>
#include <string>
#include <string_view>

#include "ndlogic/language.hpp"

namespace ndlogic {

enum class Attitude { acc, nacc, rej, nrej };

inline constexpr std::array<Attitude, 4> kAttitudes = {Attitude::acc, Attitude::nacc, Attitude::rej, Attitude::nrej};

constexpr Attitude flip(Attitude a) {
  switch (a) {
    case Attitude::acc: return Attitude::nacc;
    case Attitude::nacc: return Attitude::acc;
    case Attitude::rej: return Attitude::nrej;
    case Attitude::nrej: return Attitude::rej;
  }
  return a;
}

std::string_view to_string(Attitude a);

/// SET-SET statement: antecedent / succedent.
struct Statement1D {
  FormulaSet antecedent;
  FormulaSet succedent;

  friend bool operator==(const Statement1D&, const Statement1D&) = default;
};

/// Four attitude-indexed formula sets. The antecedent is the pair
/// (acc, rej); the succedent is the pair (nacc, nrej).
struct BStatement {
  std::array<FormulaSet, 4> sets;

  FormulaSet& operator[](Attitude a) { return sets[static_cast<std::size_t>(a)]; }
  const FormulaSet& operator[](Attitude a) const { return sets[static_cast<std::size_t>(a)]; }

  FormulaSet all_formulas() const;

  static BStatement make(FormulaSet acc, FormulaSet nacc, FormulaSet rej, FormulaSet nrej) {
    return BStatement{{std::move(acc), std::move(nacc), std::move(rej), std::move(nrej)}};
  }

  friend bool operator==(const BStatement&, const BStatement&) = default;
};

/// t-aspect embedding: acc = antecedent, nacc = succedent.
BStatement as_t_aspect(const Statement1D& s);
/// f-aspect embedding: rej = antecedent, nrej = succedent.
BStatement as_f_aspect(const Statement1D& s);

BStatement substitute(const BStatement& s, const Substitution& sub);
Statement1D substitute(const Statement1D& s, const Substitution& sub);

std::string to_string(const Statement1D& s);
/// e.g. `acc {p} rej {p} |> nacc {} nrej {}`.
std::string to_string(const BStatement& s);

}  // namespace ndlogic
