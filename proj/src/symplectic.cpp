#include "sumprod/symplectic.hpp"

#include <algorithm>
#include <cmath>

#include "sumprod/parallel.hpp"

namespace sumprod {

u32 omega(const Prime& p, Point2 u, Point2 v) noexcept {
  return p.sub(p.mul(u.x, v.y), p.mul(u.y, v.x));
}

FpSet omega_set(const PointSet2D& pts, const Budget& budget, int jobs) {
  const Prime& p = pts.prime();
  const std::size_t n = pts.size();
  if (pts.contains(Point2{0, 0})) {
    throw Error(ErrorKind::InvalidArgument, "omega_set: P contains the origin");
  }
  budget.require(static_cast<long double>(n) * n / 2 + p.value(), "omega set");
  const std::size_t chunks = static_cast<std::size_t>(std::max(1, resolve_jobs(jobs)));
  std::vector<Bitset> partial(chunks, Bitset(p.value()));
  const auto el = pts.points();
  parallel_chunks(n, chunks, jobs, [&](std::size_t chunk, std::size_t begin,
                                       std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const u32 w = omega(p, el[i], el[j]);
        if (w == 0) continue;
        partial[chunk].set(w);
        partial[chunk].set(p.neg(w));
      }
  });
  Bitset all(p.value());
  for (const auto& b : partial) all |= b;
  return FpSet(p, all);
}

ProjPoint direction(const Prime& p, Point2 u) {
  if (u.x == 0 && u.y == 0) {
    throw Error(ErrorKind::InvalidArgument, "the origin has no direction");
  }
  if (u.x == 0) return ProjPoint::infinity();
  return ProjPoint::finite(p.mul(u.y, p.inv(u.x)));
}

QuadIdentity quad_identity(const Prime& p, const Quad& q) noexcept {
  QuadIdentity r;
  const auto& [a, b, c, d] = q;
  r.lhs = p.mul(omega(p, a, d), omega(p, b, c));
  r.rhs = p.sub(p.mul(omega(p, a, c), omega(p, b, d)),
                p.mul(omega(p, a, b), omega(p, c, d)));
  auto m4 = [&p](u32 w, u32 x, u32 y, u32 z) { return p.mul(p.mul(w, x), p.mul(y, z)); };
  const u32 plus = p.add(m4(a.x, b.y, c.x, d.y), m4(a.y, b.x, c.y, d.x));
  const u32 minus = p.add(m4(a.x, b.x, c.y, d.y), m4(a.y, b.y, c.x, d.x));
  r.expanded = p.sub(plus, minus);
  r.holds = r.lhs == r.rhs && r.lhs == p.neg(r.expanded);
  return r;
}

bool slope_cross_ratio_check(const Prime& p, const Quad& q) {
  const Elem cr = cross_ratio(p, direction(p, q.a), direction(p, q.b),
                              direction(p, q.c), direction(p, q.d));
  const u32 num = p.mul(omega(p, q.a, q.b), omega(p, q.c, q.d));
  const u32 den = p.mul(omega(p, q.a, q.c), omega(p, q.b, q.d));
  return p.mul(num, p.inv(den)) == cr.value;
}

namespace {

using QuadPts = std::array<Point2, 4>;

Point2 scale(const Prime& p, Point2 u, u32 x) {
  return {p.mul(u.x, x), p.mul(u.y, x)};
}

// (a,b,c,d) -> (xa, b/x, c/x, xd)
QuadPts scaled(const Prime& p, const QuadPts& q, u32 x) {
  const u32 xi = p.inv(x);
  return {scale(p, q[0], x), scale(p, q[1], xi), scale(p, q[2], xi), scale(p, q[3], x)};
}

bool related(const Prime& p, const QuadPts& q, const QuadPts& r) {
  const u32 x = q[0].x != 0 ? p.mul(r[0].x, p.inv(q[0].x)) : p.mul(r[0].y, p.inv(q[0].y));
  return x != 0 && scaled(p, q, x) == r;
}

}  // namespace

PhiFibers phi_fibers(const Prime& p, const std::array<ProjPoint, 4>& directions,
                     const PointSet2D& pts, const Budget& budget) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (directions[i] == directions[j]) {
        throw Error(ErrorKind::DegenerateQuadruple, "directions must be distinct");
      }
  std::array<std::vector<Point2>, 4> lines;
  for (const auto& u : pts.points()) {
    if (u.x == 0 && u.y == 0) continue;
    const ProjPoint d = direction(p, u);
    for (int i = 0; i < 4; ++i)
      if (d == directions[i]) lines[i].push_back(u);
  }
  long double total = 1;
  for (const auto& l : lines) {
    if (l.empty()) throw Error(ErrorKind::EmptyDirection, "no point of P on a direction line");
    total *= static_cast<long double>(l.size());
  }
  budget.require(total * (24 + p.value()), "phi fibers");

  std::vector<QuadPts> quads;
  quads.reserve(static_cast<std::size_t>(total));
  for (const auto& a : lines[0])
    for (const auto& b : lines[1])
      for (const auto& c : lines[2])
        for (const auto& d : lines[3]) quads.push_back({a, b, c, d});

  using Image = std::array<u32, 6>;
  std::vector<std::pair<Image, u32>> keyed;
  keyed.reserve(quads.size());
  for (u32 k = 0; k < quads.size(); ++k) {
    const auto& [a, b, c, d] = quads[k];
    keyed.push_back({Image{omega(p, a, d), omega(p, b, c), omega(p, a, c),
                           omega(p, b, d), omega(p, a, b), omega(p, c, d)},
                     k});
  }
  std::sort(keyed.begin(), keyed.end());

  PhiFibers out;
  out.quadruples = quads.size();
  for (std::size_t i = 0; i < keyed.size();) {
    std::size_t j = i;
    while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
    ++out.images;
    ++out.fiber_sizes[j - i];
    for (std::size_t u = i; u < j; ++u)
      for (std::size_t v = u + 1; v < j; ++v)
        if (!related(p, quads[keyed[u].second], quads[keyed[v].second])) {
          out.scaling_relation = false;
        }
    i = j;
  }

  auto in_p = [&pts](const QuadPts& q) {
    return std::all_of(q.begin(), q.end(), [&](Point2 u) { return pts.contains(u); });
  };
  const u32 minus_one = p.value() - 1;
  u64 paired = 0;
  for (const auto& q : quads) {
    if (in_p(scaled(p, q, minus_one))) ++paired;
    bool canonical = true;
    for (u32 x = 2; x < p.value() && canonical; ++x) {
      const QuadPts r = scaled(p, q, x);
      if (r < q && in_p(r)) canonical = false;
    }
    if (canonical) ++out.scaling_classes;
  }
  out.sign_classes = out.quadruples - paired / 2;
  return out;
}

nlohmann::json to_json(const PhiFibers& f) {
  nlohmann::json sizes = nlohmann::json::object();
  for (const auto& [s, c] : f.fiber_sizes) sizes[std::to_string(s)] = c;
  return {{"quadruples", f.quadruples},
          {"images", f.images},
          {"fiber_sizes", sizes},
          {"scaling_relation", f.scaling_relation},
          {"sign_classes", f.sign_classes},
          {"scaling_classes", f.scaling_classes}};
}

TeqCounts count_teq_solutions(const FpSet& t, const Budget& budget) {
  const Prime& p = t.prime();
  const RepFn tt = rep_fn(t, t, SetOp::prod);
  const auto support = tt.entries();
  budget.require(static_cast<long double>(support.size()) * support.size() + p.value(),
                 "teq counts");
  std::vector<u64> diff(p.value(), 0);
  for (const auto& [u, cu] : support)
    for (const auto& [v, cv] : support) diff[p.sub(u, v)] += cu * cv;
  TeqCounts out;
  u128 n6 = 0;
  for (u32 s = 0; s < p.value(); ++s) {
    out.second_moment += static_cast<u128>(diff[s]) * diff[s];
    if (s == 0) continue;
    n6 += static_cast<u128>(tt(s)) * diff[s];
    out.max_pointwise = std::max(out.max_pointwise, diff[s]);
  }
  out.n6 = narrow_u64(n6, "teq solutions");
  const double n = static_cast<double>(t.size());
  out.c_second = static_cast<double>(out.second_moment) / std::pow(n, 6.5);
  out.c_max = static_cast<double>(out.max_pointwise) / std::pow(n, 2.75);
  return out;
}

RichnessSplit split_by_line_richness(const PointSet2D& pts, u64 w, bool with_omega,
                                     const Budget& budget) {
  if (w < 1) throw Error(ErrorKind::InvalidArgument, "w must be >= 1");
  const Prime& p = pts.prime();
  std::vector<u64> per_line(static_cast<std::size_t>(p.value()) + 1, 0);
  std::vector<u32> key(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const ProjPoint d = direction(p, pts.points()[i]);
    key[i] = d.is_infinity() ? p.value() : d.value().value;
    ++per_line[key[i]];
  }
  std::vector<Point2> sparse, rich;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    (per_line[key[i]] >= w ? rich : sparse).push_back(pts.points()[i]);
  }
  RichnessSplit out{PointSet2D(p, std::move(sparse)), PointSet2D(p, std::move(rich)), {}, {}};
  if (with_omega) {
    out.omega_sparse = omega_set(out.sparse, budget).size();
    if (!out.sparse.empty()) {
      out.c_omega = static_cast<double>(*out.omega_sparse) * std::sqrt(static_cast<double>(w)) /
                    static_cast<double>(out.sparse.size());
    }
  }
  return out;
}

}  // namespace sumprod
