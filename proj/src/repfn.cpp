#include "sumprod/repfn.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace sumprod {

RepFn::RepFn(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  std::vector<Entry> merged;
  for (const auto& e : entries_) {
    if (e.second == 0) continue;
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
    } else {
      merged.push_back(e);
    }
  }
  entries_ = std::move(merged);
  for (const auto& e : entries_) total_ += e.second;
}

RepFn RepFn::from_dense(std::span<const u64> counts) {
  RepFn r;
  for (std::size_t x = 0; x < counts.size(); ++x) {
    if (counts[x] != 0) {
      r.entries_.emplace_back(static_cast<u32>(x), counts[x]);
      r.total_ += counts[x];
    }
  }
  return r;
}

u64 RepFn::operator()(u32 x) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{x, 0});
  return it != entries_.end() && it->first == x ? it->second : 0;
}

u64 RepFn::max_count() const noexcept {
  u64 m = 0;
  for (const auto& e : entries_) m = std::max(m, e.second);
  return m;
}

u128 RepFn::power_sum(int k) const noexcept {
  u128 s = 0;
  for (const auto& e : entries_) {
    u128 term = 1;
    for (int i = 0; i < k; ++i) term *= e.second;
    s += term;
  }
  return s;
}

nlohmann::json to_json(const RepFn& r) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [x, c] : r.entries()) j[std::to_string(x)] = c;
  return j;
}

RepFn rep_fn(const FpSet& a, const FpSet& b, SetOp op) {
  const Prime& p = a.prime();
  std::vector<u64> counts(p.value(), 0);
  for (u32 y : b.elements()) {
    if (op == SetOp::ratio && y == 0) continue;
    const u32 yi = op == SetOp::ratio ? p.inv(y) : 0;
    for (u32 x : a.elements()) {
      switch (op) {
        case SetOp::sum: ++counts[p.add(x, y)]; break;
        case SetOp::diff: ++counts[p.sub(x, y)]; break;
        case SetOp::prod: ++counts[p.mul(x, y)]; break;
        case SetOp::ratio: ++counts[p.mul(x, yi)]; break;
      }
    }
  }
  return RepFn::from_dense(counts);
}

namespace {

// Buckets points of X x Y by their direction from the origin. Returns the
// per-direction counts and the number of points at the origin.
struct DirectionBuckets {
  std::vector<u64> counts;  // index p means the vertical direction
  u64 at_origin = 0;
  u64 total = 0;
};

DirectionBuckets bucket_directions(const Prime& p, std::span<const u32> xs,
                                   std::span<const u32> ys) {
  DirectionBuckets out;
  out.counts.assign(static_cast<std::size_t>(p.value()) + 1, 0);
  for (u32 x : xs) {
    if (x == 0) {
      for (u32 y : ys) {
        if (y == 0) {
          ++out.at_origin;
        } else {
          ++out.counts[p.value()];
        }
      }
      continue;
    }
    const u32 xi = p.inv(x);
    for (u32 y : ys) ++out.counts[p.mul(y, xi)];
  }
  out.total = static_cast<u64>(xs.size()) * ys.size();
  return out;
}

// Number of ordered k-tuples of points that lie on one line through the
// origin, counting the origin as lying on every line.
u128 concurrent_tuples(const DirectionBuckets& b, int order) {
  // Split by how many of the k points sit at the origin; the rest must share
  // one line: sum_j C(k,j) o^{k-j} sum_l c_l^j, with the j = 0 term o^k.
  const u128 o = b.at_origin;
  u128 s = 1;
  for (int i = 0; i < order; ++i) s *= o;
  u128 binom = 1;
  for (int j = 1; j <= order; ++j) {
    binom = binom * static_cast<u128>(order - j + 1) / static_cast<u128>(j);
    u128 opow = 1;
    for (int i = 0; i < order - j; ++i) opow *= o;
    u128 sum = 0;
    for (u64 c : b.counts) {
      u128 v = 1;
      for (int i = 0; i < j; ++i) v *= c;
      sum += v;
    }
    s += binom * opow * sum;
  }
  return s;
}

}  // namespace

u64 energy(const FpSet& a, const FpSet& b, EnergyKind kind, int order) {
  if (order != 2 && order != 3) {
    throw Error(ErrorKind::InvalidArgument, "energy order must be 2 or 3");
  }
  if (kind == EnergyKind::additive) {
    const RepFn r = rep_fn(a, b, order == 2 ? SetOp::sum : SetOp::diff);
    return narrow_u64(r.power_sum(order), "additive energy");
  }
  const auto buckets = bucket_directions(a.prime(), a.elements(), b.elements());
  return narrow_u64(concurrent_tuples(buckets, order), "multiplicative energy");
}

double energy_three_halves(const FpSet& a, const FpSet& b) {
  const RepFn r = rep_fn(a, b, SetOp::diff);
  double s = 0.0;
  for (const auto& [x, c] : r.entries()) {
    const double v = static_cast<double>(c);
    s += v * std::sqrt(v);
  }
  return s;
}

u64 shifted_mult_energy(const FpSet& set, Elem a, Elem b, int order) {
  if (order != 2 && order != 3) {
    throw Error(ErrorKind::InvalidArgument, "energy order must be 2 or 3");
  }
  const Prime& p = set.prime();
  std::vector<u32> xs, ys;
  xs.reserve(set.size());
  ys.reserve(set.size());
  for (u32 x : set.elements()) {
    xs.push_back(p.sub(x, a.value));
    ys.push_back(p.sub(x, b.value));
  }
  return narrow_u64(concurrent_tuples(bucket_directions(p, xs, ys), order),
                    "shifted multiplicative energy");
}

u64 popular_difference_sum(const FpSet& set, SetOp op) {
  const bool multiplicative = op == SetOp::prod || op == SetOp::ratio;
  const FpSet base = multiplicative ? set.nonzero() : set;
  if (base.empty()) return 0;
  const Prime& p = base.prime();
  const FpSet differences =
      combine(base, base, multiplicative ? SetOp::ratio : SetOp::diff);
  u128 total = 0;
  for (u32 d : differences.elements()) {
    // A_d = A ∩ (A + d), or A ∩ dA multiplicatively.
    std::vector<u32> slice;
    for (u32 x : base.elements()) {
      const u32 pre = multiplicative ? p.mul(x, p.inv(d)) : p.sub(x, d);
      if (base.contains(pre)) slice.push_back(x);
    }
    const FpSet ad(p, std::move(slice));
    total += static_cast<u128>(ad.size()) * combine(base, ad, op).size();
  }
  return narrow_u64(total, "popular difference sum");
}

}  // namespace sumprod
