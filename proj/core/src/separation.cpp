#include "ndlogic/separation.hpp"

#include <algorithm>

#include "ndlogic/entailment.hpp"
#include "ndlogic/error.hpp"
#include "ndlogic/syntax.hpp"

namespace ndlogic {

namespace {

struct Region {
  Attitude set;
  ValueSet inside;
  ValueSet outside;
};

std::vector<Region> regions_of(const NdAlgebra& alg, ValueSet designated, const ValueSet* antidesignated) {
  std::vector<Region> out{{Attitude::acc, designated, designated.complement(alg.num_values())}};
  if (antidesignated != nullptr) {
    out.push_back({Attitude::rej, *antidesignated, antidesignated->complement(alg.num_values())});
  }
  return out;
}

std::optional<Separation> separates(const std::vector<ValueSet>& images, const std::vector<Region>& regions,
                                    const Formula& theta, ValueId x, ValueId y) {
  for (const auto& r : regions) {
    if (images[x].subset_of(r.inside) && images[y].subset_of(r.outside)) return Separation{theta, r.set, true};
    if (images[y].subset_of(r.inside) && images[x].subset_of(r.outside)) return Separation{theta, r.set, false};
  }
  return std::nullopt;
}

std::optional<Separation> search_pair(const NdAlgebra& alg, const std::vector<Region>& regions, ValueId x, ValueId y,
                                      int max_depth) {
  if (x == y) throw InputError("separator search needs two distinct values");
  if (x >= alg.num_values() || y >= alg.num_values()) throw InputError("value index out of range");
  if (!check_total(alg)) throw NonTotalAlgebraError("separator search requires a total algebra");
  for (const auto& theta : enumerate_unary_formulas(alg.signature(), max_depth)) {
    if (auto s = separates(unary_images(alg, theta), regions, theta, x, y)) return s;
  }
  return std::nullopt;
}

ExpressivenessReport report(const NdAlgebra& alg, const std::vector<Region>& regions, int max_depth) {
  if (!check_total(alg)) throw NonTotalAlgebraError("expressiveness report requires a total algebra");
  ExpressivenessReport rep;
  rep.max_depth = max_depth;
  const auto n = static_cast<ValueId>(alg.num_values());
  for (ValueId x = 0; x < n; ++x) {
    for (ValueId y = x + 1; y < n; ++y) rep.pairs.push_back({x, y, std::nullopt});
  }
  std::size_t open = rep.pairs.size();
  if (open == 0) return rep;
  for (const auto& theta : enumerate_unary_formulas(alg.signature(), max_depth)) {
    const auto images = unary_images(alg, theta);
    for (auto& pair : rep.pairs) {
      if (pair.separation) continue;
      if ((pair.separation = separates(images, regions, theta, pair.first, pair.second))) --open;
    }
    if (open == 0) break;
  }
  return rep;
}

}  // namespace

std::vector<ValueSet> unary_images(const NdAlgebra& alg, const Formula& theta) {
  std::set<std::string> vars;
  collect_variables(theta, vars);
  std::vector<ValueSet> out(alg.num_values());
  for (ValueId v = 0; v < alg.num_values(); ++v) {
    if (vars.empty()) {
      out[v] = induced_multifunction(alg, theta, {});
    } else {
      const ValueId in[] = {v};
      out[v] = induced_multifunction(alg, theta, in);
    }
  }
  return out;
}

std::optional<Separation> separator_for_pair(const NdMatrix& m, ValueId x, ValueId y, int max_depth) {
  return search_pair(m.algebra, regions_of(m.algebra, m.designated, nullptr), x, y, max_depth);
}

std::optional<Separation> separator_for_pair(const BMatrix& b, ValueId x, ValueId y, int max_depth) {
  return search_pair(b.algebra, regions_of(b.algebra, b.designated, &b.antidesignated), x, y, max_depth);
}

bool ExpressivenessReport::sufficiently_expressive() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairSeparation& p) { return p.separation.has_value(); });
}

ExpressivenessReport expressiveness_report(const NdMatrix& m, int max_depth) {
  return report(m.algebra, regions_of(m.algebra, m.designated, nullptr), max_depth);
}

ExpressivenessReport expressiveness_report(const BMatrix& b, int max_depth) {
  return report(b.algebra, regions_of(b.algebra, b.designated, &b.antidesignated), max_depth);
}

std::string to_string(const ExpressivenessReport& r, const NdAlgebra& alg) {
  std::string out;
  for (const auto& p : r.pairs) {
    out += "<" + alg.name(p.first) + "," + alg.name(p.second) + ">: ";
    if (p.separation) {
      const auto& s = *p.separation;
      const std::string set = s.set == Attitude::acc ? "designated" : "antidesignated";
      const auto& in = s.first_inside ? alg.name(p.first) : alg.name(p.second);
      out += to_string(s.separator) + " via " + set + " (" + in + " inside)\n";
    } else {
      out += "none up to depth " + std::to_string(r.max_depth) + "\n";
    }
  }
  out += r.sufficiently_expressive()
             ? "sufficiently expressive up to depth " + std::to_string(r.max_depth) + "\n"
             : "not shown sufficiently expressive up to depth " + std::to_string(r.max_depth) + "\n";
  return out;
}

}  // namespace ndlogic
