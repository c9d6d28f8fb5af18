#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "sumprod/repfn.hpp"

namespace sumprod {

/// Sparse map (x, y) -> count for q(x,y), sorted by (x, y).
class QFn {
 public:
  struct Entry {
    u32 x;
    u32 y;
    u64 count;
  };

  QFn() = default;
  explicit QFn(std::vector<Entry> entries);

  u64 operator()(u32 x, u32 y) const noexcept;
  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t support_size() const noexcept { return entries_.size(); }
  u64 total_mass() const noexcept { return total_; }
  u128 sum_squares() const noexcept;

 private:
  std::vector<Entry> entries_;
  u64 total_ = 0;
};

// t(x) = #{(a,b,c) in A^3 : c != a, b - a = x (c - a)}. Cost |A|^3.
RepFn t_fn(const FpSet& a, const Budget& budget = {}, int jobs = 0);

// q(x,y) = #{(a,b,c,d) : c != a, b - a = x (c - a), d - a = y (c - a)}.
// Cost |A|^4.
QFn q_fn(const FpSet& a, const Budget& budget = {}, int jobs = 0);

// Σ q(x,y)^2 without materialising the sparse map; uses a dense p x p table
// when it fits.
u128 q_sum_squares(const FpSet& a, const Budget& budget = {}, int jobs = 0);

enum class CountMethod { brute, ratio, shifted_energy, line };

std::string_view to_string(CountMethod m) noexcept;
CountMethod parse_count_method(std::string_view name);

inline constexpr std::size_t kBruteTriplesMax = 12;
inline constexpr std::size_t kBruteQuadsMax = 10;

/// Ordered triples (u,v,w) of points of A x A lying on a common line,
/// repeated points included.
///
///   brute           direct loop, |A| <= 12
///   ratio           Σ t(x)^2 + 3|A|^4 - 2|A|^3
///   shifted_energy  Σ_{a,b} E^x(A-a, A-b)
///   line            |P| + 3|P|(|P|-1) + Σ_l i(i-1)(i-2), P = A x A
u64 count_collinear_triples(const FpSet& a, CountMethod method,
                            const Budget& budget = {}, int jobs = 0);

/// Ordered collinear quadruples.
///
///   brute           direct loop, |A| <= 10
///   ratio           Σ q^2 + T(A) + 2|A|^4(|A|-1)
///   shifted_energy  Σ_{a,b} E_3^x(A-a, A-b)
///   line            |P| + 7|P|(|P|-1) + Σ_l (36 C(i,3) + 24 C(i,4))
u64 count_collinear_quadruples(const FpSet& a, CountMethod method,
                               const Budget& budget = {}, int jobs = 0);

struct Residuals {
  u64 t_count = 0;
  double rho_t = 0.0;
  std::optional<u64> q_count;
  std::optional<double> rho_q;
};

// rho_T = (T - |A|^6/p) / (p^{1/2} |A|^{7/2}),
// rho_Q = (Q - |A|^8/p^2) / (|A|^5 ln|A|)  (left empty when |A| = 1).
// T is counted by the ratio method. Q is skipped when `with_q` is false;
// otherwise `q_method` picks the counter, defaulting to the line method when
// p|A|^2 < |A|^4 and the ratio method otherwise.
Residuals asymptotic_residuals(const FpSet& a, bool with_q = true,
                               std::optional<CountMethod> q_method = {},
                               const Budget& budget = {}, int jobs = 0);

}  // namespace sumprod
