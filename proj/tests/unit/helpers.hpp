#pragma once

#include <vector>

#include "sumprod/sets.hpp"

inline sumprod::FpSet set_of(sumprod::u64 p, std::vector<sumprod::u32> elems) {
  return sumprod::FpSet(sumprod::Prime(p), std::move(elems));
}

inline sumprod::FpSet random_set(sumprod::u64 p, sumprod::u64 size, sumprod::u64 seed) {
  sumprod::FamilySpec f;
  f.kind = sumprod::FamilyKind::random;
  f.size = size;
  f.seed = seed;
  return sumprod::make_family(f, sumprod::Prime(p));
}
