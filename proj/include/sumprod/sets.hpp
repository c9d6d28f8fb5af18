#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumprod/field.hpp"

namespace sumprod {

/// Fixed-length bitset over residues [0, n).
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  void set(std::size_t i) noexcept { words_[i >> 6] |= u64{1} << (i & 63); }
  std::size_t count() const noexcept;
  bool all() const noexcept { return count() == size_; }
  Bitset& operator|=(const Bitset& other) noexcept;
  std::vector<u32> to_vector() const;

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<u64> words_;
};

/// A finite subset of F_p held both as a sorted list and as a bitset.
class FpSet {
 public:
  // Elements are deduplicated and sorted; each must be < p.
  FpSet(Prime p, std::vector<u32> elements);
  FpSet(Prime p, const Bitset& bits);

  static FpSet whole_field(const Prime& p);

  const Prime& prime() const noexcept { return prime_; }
  u32 modulus() const noexcept { return prime_.value(); }
  std::span<const u32> elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  bool contains(u32 x) const noexcept { return x < bits_.size() && bits_.test(x); }
  const Bitset& bits() const noexcept { return bits_; }

  // Same set without the element 0.
  FpSet nonzero() const;

  friend bool operator==(const FpSet& a, const FpSet& b) noexcept {
    return a.prime_ == b.prime_ && a.elems_ == b.elems_;
  }

 private:
  Prime prime_;
  std::vector<u32> elems_;
  Bitset bits_;
};

enum class FamilyKind { random, ap, geometric, subgroup, interval, explicit_set };

std::string_view to_string(FamilyKind kind) noexcept;
FamilyKind parse_family_kind(std::string_view name);

/// Declarative description of one of the standard set families.
///
///   random     `size` distinct residues, seeded Fisher-Yates prefix of [0,p)
///   ap         {start + k*step : 0 <= k < size}
///   geometric  {start * step^k : 0 <= k < size}
///   subgroup   the multiplicative subgroup of order `order`
///   interval   {start, ..., start + size - 1}
///   explicit   `elements` as given
struct FamilySpec {
  FamilyKind kind = FamilyKind::random;
  u64 size = 0;
  u64 order = 0;
  std::int64_t start = 0;
  std::int64_t step = 1;
  std::vector<u32> elements;
  u64 seed = 0;
};

FpSet make_family(const FamilySpec& spec, const Prime& p);

enum class SetOp { sum, diff, prod, ratio };

std::string_view to_string(SetOp op) noexcept;
SetOp parse_set_op(std::string_view name);

// {a op b}; ratio skips zero denominators. Throws EmptyResult for a ratio
// set whose denominators are all zero.
FpSet combine(const FpSet& a, const FpSet& b, SetOp op);

// {lambda*a + mu}; throws ZeroDilation when lambda = 0.
FpSet dilate_translate(const FpSet& a, Elem lambda, Elem mu);

// {1/a : a in A, a != 0}.
FpSet invert_elements(const FpSet& a);

// Set file: {"elements":[...],"p":P} followed by a newline.
std::string set_to_json(const FpSet& set);
FpSet set_from_json(std::string_view text);
void save_set(const FpSet& set, const std::filesystem::path& path);
FpSet load_set(const std::filesystem::path& path);

/// A set expression over named base sets.
///
/// Grammar (binary operators evaluate left to right):
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/')? factor)*     juxtaposition multiplies
///   factor := NAME | '(' expr ')' | 'inv' '(' expr ')'
///           | 'shift' '(' expr ',' INT ')' | 'dilate' '(' expr ',' INT ')'
class SetExpr {
 public:
  enum class Kind { leaf, binary, shift, dilate, invert };

  static SetExpr leaf(std::string name);
  static SetExpr binary(SetOp op, SetExpr lhs, SetExpr rhs);
  static SetExpr shift(SetExpr inner, std::int64_t amount);
  static SetExpr dilate(SetExpr inner, std::int64_t factor);
  static SetExpr invert(SetExpr inner);

  static SetExpr parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  std::string to_string() const;

  // Evaluates with every leaf bound to `base` (the single-base-set case).
  FpSet eval(const FpSet& base) const;

 private:
  Kind kind_ = Kind::leaf;
  std::string name_;
  SetOp op_ = SetOp::sum;
  std::int64_t scalar_ = 0;
  std::shared_ptr<const SetExpr> lhs_;
  std::shared_ptr<const SetExpr> rhs_;
};

FpSet eval_expr(const SetExpr& expr, const FpSet& base);

}  // namespace sumprod
