#include "sumprod/incidence.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sumprod/parallel.hpp"

namespace sumprod {

Line Line::through(const Prime& p, Point2 u, Point2 v) {
  if (u == v) {
    throw Error(ErrorKind::InvalidArgument, "a line needs two distinct points");
  }
  if (u.x == v.x) return vertical(u.x);
  const u32 m = p.mul(p.sub(v.y, u.y), p.inv(p.sub(v.x, u.x)));
  return non_vertical(m, p.sub(u.y, p.mul(m, u.x)));
}

PointSet2D::PointSet2D(Prime p, std::vector<Point2> points)
    : prime_(std::move(p)), points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  for (const auto& u : points_) {
    if (u.x >= prime_.value() || u.y >= prime_.value()) {
      throw Error(ErrorKind::InvalidArgument, "point coordinate out of range");
    }
  }
}

PointSet2D PointSet2D::cartesian(const FpSet& a, const FpSet& b) {
  std::vector<Point2> pts;
  pts.reserve(a.size() * b.size());
  for (u32 x : a.elements())
    for (u32 y : b.elements()) pts.push_back({x, y});
  return PointSet2D(a.prime(), std::move(pts));
}

bool PointSet2D::contains(Point2 u) const noexcept {
  return std::binary_search(points_.begin(), points_.end(), u);
}

PointSet3D::PointSet3D(Prime p, std::vector<Point3> points)
    : prime_(std::move(p)), points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  for (const auto& u : points_) {
    if (u.x >= prime_.value() || u.y >= prime_.value() || u.z >= prime_.value()) {
      throw Error(ErrorKind::InvalidArgument, "point coordinate out of range");
    }
  }
}

std::string points_to_json(const PointSet2D& pts) {
  nlohmann::json j;
  j["p"] = pts.prime().value();
  auto arr = nlohmann::json::array();
  for (const auto& u : pts.points()) arr.push_back({u.x, u.y});
  j["points"] = std::move(arr);
  return j.dump() + "\n";
}

PointSet2D points_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    std::vector<Point2> pts;
    for (const auto& e : j.at("points")) {
      pts.push_back({e.at(0).get<u32>(), e.at(1).get<u32>()});
    }
    return PointSet2D(Prime(j.at("p").get<u64>()), std::move(pts));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("point file: ") + e.what());
  }
}

void save_points(const PointSet2D& pts, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  out << points_to_json(pts);
}

PointSet2D load_points(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return points_from_json(buf.str());
}

IncidenceHistogram::IncidenceHistogram(u32 p, std::size_t set_size,
                                       std::vector<u64> by_incidence)
    : p_(p), n_(set_size), counts_(std::move(by_incidence)) {}

std::size_t IncidenceHistogram::max_incidence() const noexcept {
  for (std::size_t k = counts_.size(); k-- > 0;) {
    if (counts_[k] != 0) return k;
  }
  return 0;
}

IncidenceHistogram incidence_histogram(const FpSet& a, const Budget& budget,
                                       int jobs) {
  if (a.empty()) {
    throw Error(ErrorKind::InvalidArgument, "incidence histogram of empty set");
  }
  const Prime& p = a.prime();
  const u32 mod = p.value();
  const std::size_t n = a.size();
  budget.require(static_cast<long double>(mod) *
                     (static_cast<long double>(n) * n + mod),
                 "incidence histogram");

  const std::size_t chunks = static_cast<std::size_t>(std::max(1, resolve_jobs(jobs)));
  std::vector<std::vector<u64>> partial(chunks, std::vector<u64>(n + 1, 0));
  parallel_chunks(mod, chunks, jobs, [&](std::size_t chunk, std::size_t begin,
                                         std::size_t end) {
    std::vector<u32> bucket(mod, 0);
    auto& hist = partial[chunk];
    for (std::size_t m = begin; m < end; ++m) {
      // Line y = m x + c contains (x, y) iff c = y - m x.
      for (u32 x : a.elements()) {
        const u32 mx = p.mul(static_cast<u32>(m), x);
        for (u32 y : a.elements()) ++bucket[p.sub(y, mx)];
      }
      for (u32 c = 0; c < mod; ++c) {
        ++hist[bucket[c]];
        bucket[c] = 0;
      }
    }
  });

  std::vector<u64> counts(n + 1, 0);
  for (const auto& hist : partial)
    for (std::size_t k = 0; k <= n; ++k) counts[k] += hist[k];
  // Vertical lines: |A| of them carry |A| points, the rest none.
  counts[n] += n;
  counts[0] += mod - n;
  return IncidenceHistogram(mod, n, std::move(counts));
}

u64 moment(const IncidenceHistogram& h, int k) {
  if (k < 1 || k > 4) {
    throw Error(ErrorKind::InvalidArgument, "moment order must be in 1..4");
  }
  u128 s = 0;
  const auto counts = h.counts();
  for (std::size_t i = 1; i < counts.size(); ++i) {
    u128 term = counts[i];
    for (int e = 0; e < k; ++e) term *= i;
    s += term;
  }
  return narrow_u64(s, "incidence moment");
}

u128 falling_moment(const IncidenceHistogram& h, int k) {
  u128 s = 0;
  const auto counts = h.counts();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i < static_cast<std::size_t>(k)) continue;
    u128 term = counts[i];
    for (int e = 0; e < k; ++e) term *= (i - static_cast<std::size_t>(e));
    s += term;
  }
  return s;
}

u64 rich_lines(const IncidenceHistogram& h, u64 m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "M must be >= 1");
  u64 s = 0;
  const auto counts = h.counts();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i > m && i <= 2 * m) s += counts[i];
  }
  return s;
}

u64 rich_lines(const FpSet& a, u64 m, const Budget& budget) {
  return rich_lines(incidence_histogram(a, budget), m);
}

u128 scaled_deviation_sum(const IncidenceHistogram& h) {
  const i128 n2 = static_cast<i128>(h.set_size()) * static_cast<i128>(h.set_size());
  const i128 p = h.modulus();
  u128 s = 0;
  const auto counts = h.counts();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const i128 dev = p * static_cast<i128>(i) - n2;
    s += static_cast<u128>(dev * dev) * counts[i];
  }
  return s;
}

u64 count_point_line(const PointSet2D& pts, std::span<const Line> lines,
                     const Budget& budget) {
  std::vector<Line> unique(lines.begin(), lines.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  budget.require(static_cast<long double>(pts.size()) * unique.size(),
                 "point-line incidences");
  const Prime& p = pts.prime();
  u64 total = 0;
  for (const auto& l : unique)
    for (const auto& u : pts.points()) total += l.contains(p, u) ? 1 : 0;
  return total;
}

Plane Plane::make(const Prime& p, u32 a, u32 b, u32 c, u32 d) {
  a %= p.value();
  b %= p.value();
  c %= p.value();
  d %= p.value();
  const u32 lead = a != 0 ? a : b != 0 ? b : c;
  if (lead == 0) {
    throw Error(ErrorKind::InvalidArgument, "plane needs a nonzero normal");
  }
  const u32 s = p.inv(lead);
  return Plane{p.mul(a, s), p.mul(b, s), p.mul(c, s), p.mul(d, s)};
}

bool Plane::contains(const Prime& p, Point3 u) const noexcept {
  return p.add(p.add(p.mul(a, u.x), p.mul(b, u.y)), p.mul(c, u.z)) == d;
}

u64 max_collinear(const PointSet3D& pts, const Budget& budget) {
  const std::size_t n = pts.size();
  if (n <= 2) return n;
  budget.require(static_cast<long double>(n) * n * 2, "max collinear");
  const Prime& p = pts.prime();
  u64 best = 2;
  std::vector<std::array<u32, 3>> dirs;
  dirs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point3 u = pts.points()[i];
    dirs.clear();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point3 v = pts.points()[j];
      std::array<u32, 3> d{p.sub(v.x, u.x), p.sub(v.y, u.y), p.sub(v.z, u.z)};
      const u32 lead = d[0] != 0 ? d[0] : d[1] != 0 ? d[1] : d[2];
      const u32 s = p.inv(lead);
      for (auto& c : d) c = p.mul(c, s);
      dirs.push_back(d);
    }
    std::sort(dirs.begin(), dirs.end());
    u64 run = 0;
    for (std::size_t k = 0; k < dirs.size(); ++k) {
      run = (k > 0 && dirs[k] == dirs[k - 1]) ? run + 1 : 1;
      best = std::max(best, run + 1);
    }
  }
  return best;
}

PointPlaneCount count_point_plane(const PointSet3D& pts,
                                  std::span<const Plane> planes,
                                  const Budget& budget) {
  std::vector<Plane> unique(planes.begin(), planes.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  budget.require(static_cast<long double>(pts.size()) * unique.size() +
                     static_cast<long double>(pts.size()) * pts.size() * 2,
                 "point-plane incidences");
  const Prime& p = pts.prime();
  PointPlaneCount out;
  for (const auto& pl : unique)
    for (const auto& u : pts.points()) out.incidences += pl.contains(p, u) ? 1 : 0;
  out.max_collinear = max_collinear(pts, budget);
  return out;
}

}  // namespace sumprod
