#include "ndlogic/matrix.hpp"

#include <algorithm>
#include <set>

#include "ndlogic/error.hpp"

namespace ndlogic {

std::vector<ValueId> ValueSet::members() const {
  std::vector<ValueId> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<ValueId>(std::countr_zero(b)));
  return out;
}

NdAlgebra::NdAlgebra(Signature sig, std::vector<std::string> values) : sig_(std::move(sig)), values_(std::move(values)) {
  if (values_.empty()) throw InputError("an algebra needs at least one value");
  if (values_.size() > kMaxValues) throw InputError("at most 64 truth-values are supported");
  std::set<std::string> seen;
  for (const auto& v : values_) {
    if (v.empty() || v.find(',') != std::string::npos) throw InputError("invalid value name '" + v + "'");
    if (!seen.insert(v).second) throw InputError("duplicate value '" + v + "'");
  }
  for (const auto& [name, arity] : sig_.connectives()) {
    std::size_t cells = 1;
    for (int i = 0; i < arity; ++i) cells *= values_.size();
    tables_.emplace(name, Table{arity, std::vector<ValueSet>(cells)});
  }
}

ValueId NdAlgebra::value_id(std::string_view name) const {
  auto it = std::find(values_.begin(), values_.end(), name);
  if (it == values_.end()) throw InputError("unknown truth-value '" + std::string(name) + "'");
  return static_cast<ValueId>(it - values_.begin());
}

ValueSet NdAlgebra::value_set(std::span<const std::string> names) const {
  ValueSet s;
  for (const auto& n : names) s.insert(value_id(n));
  return s;
}

std::vector<std::string> NdAlgebra::names(ValueSet s) const {
  std::vector<std::string> out;
  for (auto v : s.members()) out.push_back(values_.at(v));
  return out;
}

const NdAlgebra::Table& NdAlgebra::table(std::string_view connective) const {
  auto it = tables_.find(connective);
  if (it == tables_.end()) throw InputError("algebra does not interpret '" + std::string(connective) + "'");
  return it->second;
}

std::size_t NdAlgebra::cell_index(const Table& t, std::span<const ValueId> args) const {
  if (static_cast<int>(args.size()) != t.arity) throw ArityError("wrong number of arguments for table lookup");
  std::size_t idx = 0;
  for (auto a : args) {
    if (a >= values_.size()) throw InputError("value index out of range");
    idx = idx * values_.size() + a;
  }
  return idx;
}

std::vector<ValueId> NdAlgebra::cell_args(const Table& t, std::size_t index) const {
  std::vector<ValueId> args(static_cast<std::size_t>(t.arity));
  for (std::size_t i = args.size(); i-- > 0;) {
    args[i] = static_cast<ValueId>(index % values_.size());
    index /= values_.size();
  }
  return args;
}

ValueSet NdAlgebra::interpret(std::string_view connective, std::span<const ValueId> args) const {
  const Table& t = table(connective);
  return t.cells[cell_index(t, args)];
}

void NdAlgebra::set(std::string_view connective, std::span<const ValueId> args, ValueSet out) {
  auto it = tables_.find(connective);
  if (it == tables_.end()) throw InputError("algebra does not interpret '" + std::string(connective) + "'");
  if (!out.subset_of(ValueSet::all(values_.size()))) throw InputError("output set exceeds the carrier");
  it->second.cells[cell_index(it->second, args)] = out;
}

bool check_total(const NdAlgebra& alg) {
  for (const auto& name : alg.signature().names()) {
    const auto& t = alg.table(name);
    if (std::any_of(t.cells.begin(), t.cells.end(), [](ValueSet s) { return s.empty(); })) return false;
  }
  return true;
}

bool is_deterministic(const NdAlgebra& alg) {
  for (const auto& name : alg.signature().names()) {
    const auto& t = alg.table(name);
    if (std::any_of(t.cells.begin(), t.cells.end(), [](ValueSet s) { return s.size() != 1; })) return false;
  }
  return true;
}

BMatrix b_product(const NdMatrix& accept, const NdMatrix& reject) {
  const auto& a = accept.algebra;
  const auto& b = reject.algebra;
  if (a.values() != b.values()) throw AlgebraMismatchError("B-product: value lists differ");
  if (!(a.signature() == b.signature())) throw AlgebraMismatchError("B-product: signatures differ");
  for (const auto& name : a.signature().names()) {
    const auto& ta = a.table(name);
    const auto& tb = b.table(name);
    for (std::size_t i = 0; i < ta.cells.size(); ++i) {
      if (ta.cells[i] != tb.cells[i]) {
        std::string tuple;
        for (auto v : a.cell_args(ta, i)) tuple += (tuple.empty() ? "" : ",") + a.name(v);
        throw AlgebraMismatchError("B-product: interpretations of '" + name + "' differ at (" + tuple + ")");
      }
    }
  }
  return BMatrix{a, accept.designated, reject.designated};
}

StrongHomReport check_strong_hom(const NdMatrix& source, const NdMatrix& target,
                                 const std::map<std::string, std::string>& map, const Signature& subsig) {
  StrongHomReport report;
  const auto& src = source.algebra;
  const auto& dst = target.algebra;
  auto fail = [&](std::string msg) {
    report.holds = false;
    report.violations.push_back(std::move(msg));
  };

  std::vector<ValueId> h(src.num_values());
  for (ValueId v = 0; v < src.num_values(); ++v) {
    auto it = map.find(src.name(v));
    if (it == map.end()) {
      fail("value " + src.name(v) + " is unmapped");
      return report;
    }
    h[v] = dst.value_id(it->second);
  }

  for (ValueId v = 0; v < src.num_values(); ++v) {
    if (source.designated.contains(v) != target.designated.contains(h[v])) {
      fail("designation not preserved at " + src.name(v) + " -> " + dst.name(h[v]));
    }
  }

  for (const auto& [name, arity] : subsig.connectives()) {
    if (!src.signature().contains(name) || !dst.signature().contains(name)) {
      fail("connective '" + name + "' is not interpreted by both matrices");
      continue;
    }
    const auto& ts = src.table(name);
    const auto& td = dst.table(name);
    for (std::size_t i = 0; i < ts.cells.size(); ++i) {
      auto args = src.cell_args(ts, i);
      std::vector<ValueId> mapped(args.size());
      std::transform(args.begin(), args.end(), mapped.begin(), [&](ValueId a) { return h[a]; });
      ValueSet allowed = td.cells[dst.cell_index(td, mapped)];
      ValueSet image;
      for (auto out : ts.cells[i].members()) image.insert(h[out]);
      if (!image.subset_of(allowed)) {
        std::string tuple;
        for (auto a : args) tuple += (tuple.empty() ? "" : ",") + src.name(a);
        fail(name + "(" + tuple + "): image {" + [&] {
          std::string s;
          for (const auto& n : dst.names(image)) s += (s.empty() ? "" : ",") + n;
          return s;
        }() + "} not within target cell");
      }
    }
  }
  return report;
}

bool is_surjective(const NdMatrix& source, const NdMatrix& target, const std::map<std::string, std::string>& map) {
  ValueSet hit;
  for (const auto& v : source.algebra.values()) {
    auto it = map.find(v);
    if (it != map.end()) hit.insert(target.algebra.value_id(it->second));
  }
  return hit == ValueSet::all(target.algebra.num_values());
}

}  // namespace ndlogic
