#include "sumprod/triples.hpp"

#include <algorithm>
#include <cmath>

#include "sumprod/incidence.hpp"
#include "sumprod/parallel.hpp"

namespace sumprod {

QFn::QFn(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const Entry& l, const Entry& r) {
    return l.x != r.x ? l.x < r.x : l.y < r.y;
  });
  for (const auto& e : entries_) total_ += e.count;
}

u64 QFn::operator()(u32 x, u32 y) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{x, y},
                             [](const Entry& e, const std::pair<u32, u32>& k) {
                               return e.x != k.first ? e.x < k.first : e.y < k.second;
                             });
  return it != entries_.end() && it->x == x && it->y == y ? it->count : 0;
}

u128 QFn::sum_squares() const noexcept {
  u128 s = 0;
  for (const auto& e : entries_) s += static_cast<u128>(e.count) * e.count;
  return s;
}

namespace {

std::size_t chunk_count(int jobs) {
  return static_cast<std::size_t>(std::max(1, resolve_jobs(jobs)));
}

long double pw(long double x, int k) {
  long double r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// V_k for every ordered pair k = (a, c), a != c: the |A| values
// (b - a)/(c - a), b in A, stored row by row.
struct RatioRows {
  std::size_t n = 0;
  std::size_t pairs = 0;
  std::vector<u32> values;  // pairs x n

  std::span<const u32> row(std::size_t k) const {
    return {values.data() + k * n, n};
  }
};

RatioRows ratio_rows(const FpSet& a, int jobs) {
  const Prime& p = a.prime();
  const auto el = a.elements();
  RatioRows r;
  r.n = el.size();
  r.pairs = r.n * (r.n - 1);
  r.values.resize(r.pairs * r.n);
  parallel_for(r.n, jobs, [&](std::size_t i) {
    std::size_t k = i * (r.n - 1);
    for (std::size_t j = 0; j < r.n; ++j) {
      if (j == i) continue;
      const u32 s = p.inv(p.sub(el[j], el[i]));
      u32* out = r.values.data() + k * r.n;
      for (std::size_t b = 0; b < r.n; ++b) out[b] = p.mul(p.sub(el[b], el[i]), s);
      ++k;
    }
  });
  return r;
}

// Calls row_fn(x, row) for each x with t(x) > 0 where row[y] = q(x, y),
// x ascending within a chunk and chunks in order of x.
template <class RowFn>
void for_each_q_row(const FpSet& a, const Budget& budget, int jobs,
                    std::size_t chunks, RowFn&& row_fn) {
  const u32 mod = a.modulus();
  const std::size_t n = a.size();
  budget.require(pw(n, 4) + static_cast<long double>(mod) * mod, "q(x,y) rows");
  if (n < 2) return;
  const RatioRows rows = ratio_rows(a, jobs);

  // Group pair indices by the values x their ratio rows contain.
  std::vector<u32> start(static_cast<std::size_t>(mod) + 1, 0);
  for (u32 v : rows.values) ++start[v + 1];
  for (u32 x = 0; x < mod; ++x) start[x + 1] += start[x];
  std::vector<u32> members(rows.values.size());
  {
    std::vector<u32> fill(start.begin(), start.end() - 1);
    for (std::size_t k = 0; k < rows.pairs; ++k)
      for (u32 v : rows.row(k)) members[fill[v]++] = static_cast<u32>(k);
  }

  parallel_chunks(mod, chunks, jobs, [&](std::size_t chunk, std::size_t begin,
                                         std::size_t end) {
    std::vector<u32> row(mod, 0);
    for (std::size_t x = begin; x < end; ++x) {
      if (start[x] == start[x + 1]) continue;
      for (u32 m = start[x]; m < start[x + 1]; ++m)
        for (u32 y : rows.row(members[m])) ++row[y];
      row_fn(chunk, static_cast<u32>(x), std::span<u32>(row));
    }
  });
}

bool collinear3(const Prime& p, Point2 u, Point2 v, Point2 w) {
  const u32 dx1 = p.sub(v.x, u.x), dy1 = p.sub(v.y, u.y);
  const u32 dx2 = p.sub(w.x, u.x), dy2 = p.sub(w.y, u.y);
  return p.mul(dx1, dy2) == p.mul(dy1, dx2);
}

std::vector<Point2> grid(const FpSet& a) {
  std::vector<Point2> pts;
  pts.reserve(a.size() * a.size());
  for (u32 x : a.elements())
    for (u32 y : a.elements()) pts.push_back({x, y});
  return pts;
}

u64 brute_triples(const FpSet& a) {
  const Prime& p = a.prime();
  const auto pts = grid(a);
  u64 count = 0;
  for (const auto& u : pts)
    for (const auto& v : pts)
      for (const auto& w : pts) count += collinear3(p, u, v, w) ? 1 : 0;
  return count;
}

u64 brute_quadruples(const FpSet& a) {
  const Prime& p = a.prime();
  const auto pts = grid(a);
  u64 count = 0;
  for (const auto& u : pts) {
    for (const auto& v : pts) {
      for (const auto& w : pts) {
        if (!collinear3(p, u, v, w)) continue;
        if (u == v && u == w) {
          count += pts.size();
          continue;
        }
        const Point2 far = u != v ? v : w;
        for (const auto& z : pts) count += collinear3(p, u, far, z) ? 1 : 0;
      }
    }
  }
  return count;
}

u128 shifted_energy_sum(const FpSet& a, int order, const Budget& budget, int jobs) {
  const std::size_t n = a.size();
  budget.require(pw(n, 2) * (pw(n, 2) + a.modulus()), "shifted energy sum");
  const std::size_t chunks = chunk_count(jobs);
  std::vector<u128> partial(chunks, 0);
  const auto el = a.elements();
  parallel_chunks(n * n, chunks, jobs, [&](std::size_t chunk, std::size_t begin,
                                           std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      partial[chunk] += shifted_mult_energy(a, Elem{el[k / n]}, Elem{el[k % n]}, order);
    }
  });
  u128 s = 0;
  for (u128 v : partial) s += v;
  return s;
}

u128 binom(u128 n, int k) {
  u128 r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - static_cast<u128>(i)) / static_cast<u128>(i + 1);
  return n < static_cast<u128>(k) ? 0 : r;
}

}  // namespace

RepFn t_fn(const FpSet& a, const Budget& budget, int jobs) {
  const Prime& p = a.prime();
  const std::size_t n = a.size();
  const u32 mod = p.value();
  budget.require(pw(n, 3) + mod, "t(x)");
  const std::size_t chunks = chunk_count(jobs);
  std::vector<std::vector<u64>> partial(chunks);
  const auto el = a.elements();
  parallel_chunks(n, chunks, jobs, [&](std::size_t chunk, std::size_t begin,
                                       std::size_t end) {
    auto& counts = partial[chunk];
    counts.assign(mod, 0);
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const u32 s = p.inv(p.sub(el[j], el[i]));
        for (u32 b : el) ++counts[p.mul(p.sub(b, el[i]), s)];
      }
    }
  });
  std::vector<u64> total(mod, 0);
  for (const auto& c : partial) {
    if (c.empty()) continue;
    for (u32 x = 0; x < mod; ++x) total[x] += c[x];
  }
  return RepFn::from_dense(total);
}

QFn q_fn(const FpSet& a, const Budget& budget, int jobs) {
  const std::size_t chunks = chunk_count(jobs);
  std::vector<std::vector<QFn::Entry>> partial(chunks);
  for_each_q_row(a, budget, jobs, chunks,
                 [&](std::size_t chunk, u32 x, std::span<u32> row) {
                   for (u32 y = 0; y < row.size(); ++y) {
                     if (row[y] != 0) {
                       partial[chunk].push_back({x, y, row[y]});
                       row[y] = 0;
                     }
                   }
                 });
  std::vector<QFn::Entry> all;
  for (auto& part : partial) all.insert(all.end(), part.begin(), part.end());
  return QFn(std::move(all));
}

u128 q_sum_squares(const FpSet& a, const Budget& budget, int jobs) {
  const std::size_t chunks = chunk_count(jobs);
  std::vector<u128> partial(chunks, 0);
  for_each_q_row(a, budget, jobs, chunks,
                 [&](std::size_t chunk, u32, std::span<u32> row) {
                   u128 s = 0;
                   for (u32& c : row) {
                     s += static_cast<u64>(c) * c;
                     c = 0;
                   }
                   partial[chunk] += s;
                 });
  u128 s = 0;
  for (u128 v : partial) s += v;
  return s;
}

std::string_view to_string(CountMethod m) noexcept {
  switch (m) {
    case CountMethod::brute: return "brute";
    case CountMethod::ratio: return "ratio";
    case CountMethod::shifted_energy: return "shifted_energy";
    case CountMethod::line: return "line";
  }
  return "?";
}

CountMethod parse_count_method(std::string_view name) {
  if (name == "brute") return CountMethod::brute;
  if (name == "ratio") return CountMethod::ratio;
  if (name == "shifted_energy" || name == "energy") return CountMethod::shifted_energy;
  if (name == "line") return CountMethod::line;
  throw Error(ErrorKind::InvalidArgument, "unknown count method: " + std::string(name));
}

u64 count_collinear_triples(const FpSet& a, CountMethod method,
                            const Budget& budget, int jobs) {
  if (a.empty()) return 0;
  const u128 n = a.size();
  switch (method) {
    case CountMethod::brute:
      if (a.size() > kBruteTriplesMax) {
        throw Error(ErrorKind::MethodUnavailable, "brute triples need |A| <= 12");
      }
      budget.require(pw(static_cast<long double>(n), 6), "brute triples");
      return brute_triples(a);
    case CountMethod::ratio: {
      const RepFn t = t_fn(a, budget, jobs);
      return narrow_u64(t.power_sum(2) + 3 * n * n * n * n - 2 * n * n * n,
                        "collinear triples");
    }
    case CountMethod::shifted_energy:
      return narrow_u64(shifted_energy_sum(a, 2, budget, jobs), "collinear triples");
    case CountMethod::line: {
      const auto h = incidence_histogram(a, budget, jobs);
      const u128 pts = n * n;
      return narrow_u64(pts + 3 * pts * (pts - 1) + falling_moment(h, 3),
                        "collinear triples");
    }
  }
  throw Error(ErrorKind::MethodUnavailable, "unknown method");
}

u64 count_collinear_quadruples(const FpSet& a, CountMethod method,
                               const Budget& budget, int jobs) {
  if (a.empty()) return 0;
  const u128 n = a.size();
  switch (method) {
    case CountMethod::brute:
      if (a.size() > kBruteQuadsMax) {
        throw Error(ErrorKind::MethodUnavailable, "brute quadruples need |A| <= 10");
      }
      budget.require(pw(static_cast<long double>(n), 6) * 2, "brute quadruples");
      return brute_quadruples(a);
    case CountMethod::ratio: {
      const u128 t = count_collinear_triples(a, CountMethod::ratio, budget, jobs);
      return narrow_u64(q_sum_squares(a, budget, jobs) + t + 2 * n * n * n * n * (n - 1),
                        "collinear quadruples");
    }
    case CountMethod::shifted_energy:
      return narrow_u64(shifted_energy_sum(a, 3, budget, jobs), "collinear quadruples");
    case CountMethod::line: {
      const auto h = incidence_histogram(a, budget, jobs);
      const u128 pts = n * n;
      u128 s = pts + 7 * pts * (pts - 1);
      const auto counts = h.counts();
      for (std::size_t i = 3; i < counts.size(); ++i) {
        s += static_cast<u128>(counts[i]) * (36 * binom(i, 3) + 24 * binom(i, 4));
      }
      return narrow_u64(s, "collinear quadruples");
    }
  }
  throw Error(ErrorKind::MethodUnavailable, "unknown method");
}

Residuals asymptotic_residuals(const FpSet& a, bool with_q,
                               std::optional<CountMethod> q_method,
                               const Budget& budget, int jobs) {
  if (a.empty()) throw Error(ErrorKind::InvalidArgument, "empty set");
  const long double n = static_cast<long double>(a.size());
  const long double p = a.modulus();
  Residuals r;
  r.t_count = count_collinear_triples(a, CountMethod::ratio, budget, jobs);
  r.rho_t = static_cast<double>((static_cast<long double>(r.t_count) - pw(n, 6) / p) /
                                (std::sqrt(p) * std::pow(n, 3.5L)));
  if (!with_q) return r;
  const CountMethod m = q_method.value_or(p * n * n < pw(n, 4) ? CountMethod::line
                                                               : CountMethod::ratio);
  r.q_count = count_collinear_quadruples(a, m, budget, jobs);
  if (a.size() > 1) {
    r.rho_q = static_cast<double>((static_cast<long double>(*r.q_count) - pw(n, 8) / (p * p)) /
                                  (pw(n, 5) * std::log(n)));
  }
  return r;
}

}  // namespace sumprod
