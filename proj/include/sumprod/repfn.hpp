#pragma once

#include <span>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sumprod/sets.hpp"

namespace sumprod {

/// Sparse multiset value -> count, stored sorted by value.
class RepFn {
 public:
  using Entry = std::pair<u32, u64>;

  RepFn() = default;
  explicit RepFn(std::vector<Entry> entries);
  // Builds from a dense count array indexed by residue.
  static RepFn from_dense(std::span<const u64> counts);

  u64 operator()(u32 x) const noexcept;
  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t support_size() const noexcept { return entries_.size(); }
  u64 total_mass() const noexcept { return total_; }
  u64 max_count() const noexcept;
  // Σ count^k, exact.
  u128 power_sum(int k) const noexcept;

 private:
  std::vector<Entry> entries_;
  u64 total_ = 0;
};

nlohmann::json to_json(const RepFn& r);

// r(x) = #{(a,b) in A x B : a op b = x}; ratio skips b = 0.
RepFn rep_fn(const FpSet& a, const FpSet& b, SetOp op);

enum class EnergyKind { additive, multiplicative };

/// Integer-order energies.
///
/// additive, 2:       Σ_x r_{A+B}(x)^2
/// additive, 3:       Σ_x r_{A-B}(x)^3
/// multiplicative, 2: #{(a,a',b,b') : a b' = a' b}
/// multiplicative, 3: #{(a1,a2,a3,b1,b2,b3) : a_i b_j = a_j b_i for all i,j}
///
/// The multiplicative forms are cross-multiplied, so zero elements take part:
/// they count pairs (resp. triples) of points of A x B on a common line
/// through the origin, with the origin itself on every such line.
u64 energy(const FpSet& a, const FpSet& b, EnergyKind kind, int order);

// E_{3/2}(A,B) = Σ_d r_{A-B}(d)^{3/2}.
double energy_three_halves(const FpSet& a, const FpSet& b);

// E^x(A-a, A-b) (order 2) or E_3^x(A-a, A-b) (order 3): ordered pairs or
// triples of points of A x A collinear with the pivot (a, b).
u64 shifted_mult_energy(const FpSet& set, Elem a, Elem b, int order);

// Σ_{d in A-A} |A_d| |A op A_d| with A_d = A ∩ (A + d) for op in {sum, diff},
// and the multiplicative analogue A_d = A ∩ dA over A \ {0} for op in
// {prod, ratio}.
u64 popular_difference_sum(const FpSet& set, SetOp op);

}  // namespace sumprod
