#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

#include "sumprod/errors.hpp"

namespace sumprod {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

bool is_prime(u64 n) noexcept;

/// A residue in [0, p). Elements do not carry their modulus; arithmetic goes
/// through the owning Prime.
struct Elem {
  u32 value = 0;

  friend auto operator<=>(const Elem&, const Elem&) = default;
};

/// An odd prime modulus p < 2^31 together with cached inverse data.
///
/// Products of two residues fit in 64 bits, so every operation is a single
/// widening multiply and reduction. For p up to 2^22 an inverse table is
/// built once and shared between copies.
class Prime {
 public:
  static constexpr u64 kMaxModulus = (u64{1} << 31) - 1;

  explicit Prime(u64 p);

  u32 value() const noexcept { return p_; }

  Elem elem(std::int64_t x) const noexcept { return Elem{reduce(x)}; }
  u32 reduce(std::int64_t x) const noexcept {
    const std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<u32>(r < 0 ? r + p_ : r);
  }

  u32 add(u32 a, u32 b) const noexcept {
    const u32 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u32 sub(u32 a, u32 b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  u32 neg(u32 a) const noexcept { return a == 0 ? 0 : p_ - a; }
  u32 mul(u32 a, u32 b) const noexcept {
    return static_cast<u32>(static_cast<u64>(a) * b % p_);
  }
  u32 inv(u32 a) const;
  u32 pow(u32 base, u64 exp) const noexcept;

  Elem add(Elem a, Elem b) const noexcept { return {add(a.value, b.value)}; }
  Elem sub(Elem a, Elem b) const noexcept { return {sub(a.value, b.value)}; }
  Elem neg(Elem a) const noexcept { return {neg(a.value)}; }
  Elem mul(Elem a, Elem b) const noexcept { return {mul(a.value, b.value)}; }
  Elem inv(Elem a) const { return {inv(a.value)}; }

  // Smallest generator of F_p^*, found by trial over the prime factors of p-1.
  u32 primitive_root() const noexcept { return primitive_root_; }
  const std::vector<u64>& factors_of_order() const noexcept {
    return *factors_;
  }

  // Inverse table indexed by residue (entry 0 unused), or nullptr when p is
  // above the table threshold.
  const u32* inverse_table() const noexcept {
    return inverses_ ? inverses_->data() : nullptr;
  }

  friend bool operator==(const Prime& a, const Prime& b) noexcept {
    return a.p_ == b.p_;
  }

 private:
  u32 p_;
  u32 primitive_root_ = 0;
  std::shared_ptr<const std::vector<u64>> factors_;
  std::shared_ptr<const std::vector<u32>> inverses_;
};

/// A point of the projective line F_p ∪ {∞}.
class ProjPoint {
 public:
  static ProjPoint finite(Elem e) noexcept { return ProjPoint(false, e); }
  static ProjPoint finite(u32 v) noexcept { return ProjPoint(false, Elem{v}); }
  static ProjPoint infinity() noexcept { return ProjPoint(true, Elem{}); }

  bool is_infinity() const noexcept { return infinite_; }
  Elem value() const;  // throws InvalidArgument at infinity

  // Homogeneous coordinates (x : z); finite points are (v : 1), ∞ is (1 : 0).
  u32 hx() const noexcept { return infinite_ ? 1 : value_.value; }
  u32 hz() const noexcept { return infinite_ ? 0 : 1; }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  ProjPoint(bool inf, Elem v) : infinite_(inf), value_(v) {}

  bool infinite_;
  Elem value_;
};

/// The cross-ratio [a,b,c,d] = (a-b)(c-d) / ((a-c)(b-d)).
///
/// Evaluated on homogeneous coordinates, with (a-b) read as the determinant
/// of the two coordinate vectors. At ∞ this is the limit value: the two
/// factors containing ∞ cancel up to the sign fixed by their order, so
/// [a,b,c,∞] = (a-b)/(a-c) and [a,∞,c,d] = (d-c)/(a-c).
Elem cross_ratio(const Prime& p, const ProjPoint& a, const ProjPoint& b,
                 const ProjPoint& c, const ProjPoint& d);

}  // namespace sumprod
