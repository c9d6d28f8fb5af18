#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "sumprod/repfn.hpp"

namespace sumprod {

enum class PinnedVariant { full, strict };

std::string_view to_string(PinnedVariant v) noexcept;

// R[A] = {(b-a)/(c-a) : a,b,c in A; b,c != a}. The full variant allows
// b = c (so 1 is always in), the strict variant R°[A] wants a,b,c pairwise
// distinct. TooSmall below |A| = 2 (full) or 3 (strict).
FpSet pinned_ratios(const FpSet& a, PinnedVariant variant = PinnedVariant::full,
                    const Budget& budget = {}, int jobs = 0);

// C[A]: cross-ratios of pairwise distinct quadruples. TooSmall below |A| = 4.
FpSet cross_ratio_set(const FpSet& a, const Budget& budget = {});

// (A - a)^{-1} = {1/(x - a) : x in A, x != a}.
FpSet inverted_shift(const FpSet& set, Elem a);

// E_R(A,B) = #{(a,a1,a2,b,b1,b2) : (a1-a)/(a2-a) = (b1-b)/(b2-b)} with
// a2 != a and b2 != b. A zero numerator is a legitimate ratio.
u64 pinned_ratio_energy(const FpSet& a, const FpSet& b, const Budget& budget = {});

// E_C(A) = number of pairs of quadruples with equal cross-ratio. A quadruple
// (a,b,c,d) counts when a is distinct from b, c, d and b != d; the value
// (a-b)(c-d)/((a-c)(b-d)) is then defined and may be 0.
u64 cross_ratio_energy(const FpSet& a, const Budget& budget = {});

struct CrossRatioEnergies {
  u64 e_r = 0;
  u64 e_c = 0;
  // Σ_{a,b in A} E_R((A-a)^{-1}, (A-b)^{-1}); equals e_c.
  u64 decomposition = 0;
};

CrossRatioEnergies cross_ratio_energies(const FpSet& a, const FpSet& b,
                                        const Budget& budget = {});

struct RatioGrowth {
  std::size_t size = 0;
  std::size_t ratios = 0;
  u32 p = 0;
  std::string regime;  // small (|A| <= p^{5/12}), large (|A| >= p^{3/5}), middle
  double c_small = 0;    // |R| / (|A|^{8/5} log^{-8/15}|A|)
  double c_large = 0;    // |R| / min(p, |A|^{5/2} p^{-1/2})
  double c_uniform = 0;  // |R| / min(p, |A|^{17/11} log^{-4/9}|A|)
  double c_floor = 0;    // |R| / |A|^{3/2}
};

RatioGrowth ratio_growth_monitor(const FpSet& a, const Budget& budget = {},
                                 int jobs = 0);

nlohmann::json to_json(const RatioGrowth& g);

}  // namespace sumprod
