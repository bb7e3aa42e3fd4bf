#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ndlogic/language.hpp"

namespace ndlogic {

/// Index of a truth-value in its algebra's declared value list.
using ValueId = std::uint32_t;

inline constexpr std::size_t kMaxValues = 64;

/// Subset of an algebra's truth-values.
class ValueSet {
 public:
  constexpr ValueSet() = default;
  constexpr explicit ValueSet(std::uint64_t bits) : bits_(bits) {}
  static constexpr ValueSet single(ValueId v) { return ValueSet(std::uint64_t{1} << v); }
  static constexpr ValueSet all(std::size_t n) {
    return ValueSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(ValueId v) const { return (bits_ >> v) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool subset_of(ValueSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr void insert(ValueId v) { bits_ |= std::uint64_t{1} << v; }

  /// Complement relative to the first n values.
  constexpr ValueSet complement(std::size_t n) const { return ValueSet(~bits_ & all(n).bits_); }

  friend constexpr ValueSet operator|(ValueSet a, ValueSet b) { return ValueSet(a.bits_ | b.bits_); }
  friend constexpr ValueSet operator&(ValueSet a, ValueSet b) { return ValueSet(a.bits_ & b.bits_); }
  friend constexpr bool operator==(ValueSet, ValueSet) = default;

  /// Members in ascending order.
  std::vector<ValueId> members() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Finite non-deterministic algebra: every connective maps each tuple of
/// values to a (possibly empty) set of values. Cells start empty.
class NdAlgebra {
 public:
  struct Table {
    int arity = 0;
    std::vector<ValueSet> cells;  // mixed-radix index, first argument most significant

    friend bool operator==(const Table&, const Table&) = default;
  };

  NdAlgebra() = default;
  /// Throws InputError on duplicate or too many values.
  NdAlgebra(Signature sig, std::vector<std::string> values);

  const Signature& signature() const { return sig_; }
  const std::vector<std::string>& values() const { return values_; }
  std::size_t num_values() const { return values_.size(); }
  const std::string& name(ValueId v) const { return values_.at(v); }
  /// Throws InputError for an unknown name.
  ValueId value_id(std::string_view name) const;
  ValueSet value_set(std::span<const std::string> names) const;
  std::vector<std::string> names(ValueSet s) const;

  const Table& table(std::string_view connective) const;
  ValueSet interpret(std::string_view connective, std::span<const ValueId> args) const;
  void set(std::string_view connective, std::span<const ValueId> args, ValueSet out);

  std::size_t cell_index(const Table& t, std::span<const ValueId> args) const;
  /// Argument tuple of a cell index (inverse of cell_index).
  std::vector<ValueId> cell_args(const Table& t, std::size_t index) const;

  friend bool operator==(const NdAlgebra&, const NdAlgebra&) = default;

 private:
  Signature sig_;
  std::vector<std::string> values_;
  std::map<std::string, Table, std::less<>> tables_;
};

/// True iff no interpretation cell is empty.
bool check_total(const NdAlgebra& alg);
/// True iff every cell is a singleton.
bool is_deterministic(const NdAlgebra& alg);

struct NdMatrix {
  NdAlgebra algebra;
  ValueSet designated;

  friend bool operator==(const NdMatrix&, const NdMatrix&) = default;
};

struct BMatrix {
  NdAlgebra algebra;
  ValueSet designated;
  ValueSet antidesignated;

  friend bool operator==(const BMatrix&, const BMatrix&) = default;
};

/// Either kind of matrix, as loaded from JSON or a builtin name.
using AnyMatrix = std::variant<NdMatrix, BMatrix>;

/// Throws AlgebraMismatchError unless both matrices share the same algebra.
BMatrix b_product(const NdMatrix& accept, const NdMatrix& reject);

struct StrongHomReport {
  bool holds = true;
  std::vector<std::string> violations;

  explicit operator bool() const { return holds; }
};

/// Checks that `map` (source value name -> target value name) is a
/// homomorphism on the connectives of `subsig` and reflects designation.
StrongHomReport check_strong_hom(const NdMatrix& source, const NdMatrix& target,
                                 const std::map<std::string, std::string>& map, const Signature& subsig);

bool is_surjective(const NdMatrix& source, const NdMatrix& target,
                   const std::map<std::string, std::string>& map);

}  // namespace ndlogic
