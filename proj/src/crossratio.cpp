#include "sumprod/crossratio.hpp"

#include <algorithm>
#include <cmath>

#include "sumprod/parallel.hpp"
#include "sumprod/triples.hpp"

namespace sumprod {

std::string_view to_string(PinnedVariant v) noexcept {
  return v == PinnedVariant::full ? "full" : "strict";
}

FpSet pinned_ratios(const FpSet& a, PinnedVariant variant, const Budget& budget,
                    int jobs) {
  const std::size_t n = a.size();
  const std::size_t min_size = variant == PinnedVariant::full ? 2 : 3;
  if (n < min_size) {
    throw Error(ErrorKind::TooSmall, "R[A] needs |A| >= " + std::to_string(min_size));
  }
  const Prime& p = a.prime();
  const u32 mod = p.value();
  budget.require(static_cast<long double>(n) * n * n + mod, "pinned ratios");
  const std::size_t chunks = static_cast<std::size_t>(std::max(1, resolve_jobs(jobs)));
  std::vector<Bitset> partial(chunks, Bitset(mod));
  const auto el = a.elements();
  const bool strict = variant == PinnedVariant::strict;
  parallel_chunks(n, chunks, jobs, [&](std::size_t chunk, std::size_t begin,
                                       std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i) continue;
        const u32 s = p.inv(p.sub(el[k], el[i]));
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i || (strict && j == k)) continue;
          partial[chunk].set(p.mul(p.sub(el[j], el[i]), s));
        }
      }
    }
  });
  Bitset all(mod);
  for (const auto& b : partial) all |= b;
  return FpSet(p, all);
}

FpSet cross_ratio_set(const FpSet& a, const Budget& budget) {
  const std::size_t n = a.size();
  if (n < 4) throw Error(ErrorKind::TooSmall, "C[A] needs |A| >= 4");
  const Prime& p = a.prime();
  budget.require(static_cast<long double>(n) * n * n * n, "cross-ratio set");
  const auto el = a.elements();
  Bitset out(p.value());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const u32 num1 = p.sub(el[i], el[j]);
        const u32 inv1 = p.inv(p.sub(el[i], el[k]));
        for (std::size_t l = 0; l < n; ++l) {
          if (l == i || l == j || l == k) continue;
          const u32 num = p.mul(num1, p.sub(el[k], el[l]));
          const u32 den = p.inv(p.sub(el[j], el[l]));
          out.set(p.mul(p.mul(num, inv1), den));
        }
      }
    }
  return FpSet(p, out);
}

FpSet inverted_shift(const FpSet& set, Elem a) {
  const Prime& p = set.prime();
  std::vector<u32> out;
  out.reserve(set.size());
  for (u32 x : set.elements()) {
    if (x != a.value) out.push_back(p.inv(p.sub(x, a.value)));
  }
  return FpSet(p, std::move(out));
}

u64 pinned_ratio_energy(const FpSet& a, const FpSet& b, const Budget& budget) {
  if (!(a.prime() == b.prime())) {
    throw Error(ErrorKind::InvalidArgument, "sets over different fields");
  }
  // E_R(A,B) = Σ_x t_A(x) t_B(x).
  const RepFn ta = t_fn(a, budget, 1);
  const RepFn tb = t_fn(b, budget, 1);
  u128 s = 0;
  for (const auto& [x, c] : ta.entries()) s += static_cast<u128>(c) * tb(x);
  return narrow_u64(s, "pinned ratio energy");
}

namespace {

std::vector<u64> cross_ratio_counts(const FpSet& a) {
  const Prime& p = a.prime();
  const auto el = a.elements();
  const std::size_t n = el.size();
  std::vector<u64> counts(p.value(), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      const u32 inv_ac = p.inv(p.sub(el[i], el[k]));
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const u32 f = p.mul(p.sub(el[i], el[j]), inv_ac);
        for (std::size_t l = 0; l < n; ++l) {
          if (l == i || l == j) continue;
          const u32 v = p.mul(p.mul(f, p.sub(el[k], el[l])), p.inv(p.sub(el[j], el[l])));
          ++counts[v];
        }
      }
    }
  return counts;
}

}  // namespace

u64 cross_ratio_energy(const FpSet& a, const Budget& budget) {
  const long double n = static_cast<long double>(a.size());
  budget.require(n * n * n * n + a.modulus(), "cross-ratio energy");
  u128 s = 0;
  for (u64 c : cross_ratio_counts(a)) s += static_cast<u128>(c) * c;
  return narrow_u64(s, "cross-ratio energy");
}

CrossRatioEnergies cross_ratio_energies(const FpSet& a, const FpSet& b,
                                        const Budget& budget) {
  const long double n = static_cast<long double>(a.size());
  budget.require(n * n * (n * n * n + a.modulus()), "cross-ratio energies");
  CrossRatioEnergies out;
  out.e_r = pinned_ratio_energy(a, b, budget);
  out.e_c = cross_ratio_energy(a, budget);
  std::vector<FpSet> shifted;
  for (u32 x : a.elements()) shifted.push_back(inverted_shift(a, Elem{x}));
  u128 s = 0;
  for (const auto& u : shifted)
    for (const auto& v : shifted) {
      if (u.size() < 2 || v.size() < 2) continue;
      s += pinned_ratio_energy(u, v, budget);
    }
  out.decomposition = narrow_u64(s, "cross-ratio energy decomposition");
  return out;
}

RatioGrowth ratio_growth_monitor(const FpSet& a, const Budget& budget, int jobs) {
  if (a.size() < 3) throw Error(ErrorKind::TooSmall, "ratio monitor needs |A| >= 3");
  RatioGrowth g;
  g.size = a.size();
  g.p = a.modulus();
  g.ratios = pinned_ratios(a, PinnedVariant::full, budget, jobs).size();
  const double n = static_cast<double>(g.size);
  const double p = g.p;
  const double r = static_cast<double>(g.ratios);
  const double ln = std::log(n);
  if (n <= std::pow(p, 5.0 / 12.0)) {
    g.regime = "small";
  } else if (n >= std::pow(p, 3.0 / 5.0)) {
    g.regime = "large";
  } else {
    g.regime = "middle";
  }
  g.c_small = r / (std::pow(n, 1.6) / std::pow(ln, 8.0 / 15.0));
  g.c_large = r / std::min(p, std::pow(n, 2.5) / std::sqrt(p));
  g.c_uniform = r / std::min(p, std::pow(n, 1.5 + 1.0 / 22.0) * std::pow(ln, -4.0 / 9.0));
  g.c_floor = r / std::pow(n, 1.5);
  return g;
}

nlohmann::json to_json(const RatioGrowth& g) {
  return nlohmann::json{{"size", g.size},         {"ratios", g.ratios},
                        {"p", g.p},               {"regime", g.regime},
                        {"c_small", g.c_small},   {"c_large", g.c_large},
                        {"c_uniform", g.c_uniform}, {"c_floor", g.c_floor}};
}

}  // namespace sumprod
