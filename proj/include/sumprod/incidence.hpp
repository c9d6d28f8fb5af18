#pragma once

#include <compare>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "sumprod/sets.hpp"

namespace sumprod {

struct Point2 {
  u32 x = 0;
  u32 y = 0;
  friend auto operator<=>(const Point2&, const Point2&) = default;
};

struct Point3 {
  u32 x = 0;
  u32 y = 0;
  u32 z = 0;
  friend auto operator<=>(const Point3&, const Point3&) = default;
};

/// A line of F_p^2 in canonical form: y = m x + c, or x = x0.
class Line {
 public:
  static Line non_vertical(u32 slope, u32 intercept) noexcept {
    return Line(false, slope, intercept);
  }
  static Line vertical(u32 x0) noexcept { return Line(true, 0, x0); }
  // The unique line through two distinct points.
  static Line through(const Prime& p, Point2 u, Point2 v);

  bool is_vertical() const noexcept { return vertical_; }
  u32 slope() const noexcept { return a_; }
  u32 intercept() const noexcept { return b_; }
  u32 x0() const noexcept { return b_; }

  bool contains(const Prime& p, Point2 u) const noexcept {
    return vertical_ ? u.x == b_ : u.y == p.add(p.mul(a_, u.x), b_);
  }

  friend auto operator<=>(const Line&, const Line&) = default;

 private:
  Line(bool v, u32 a, u32 b) : vertical_(v), a_(a), b_(b) {}
  bool vertical_;
  u32 a_;
  u32 b_;
};

/// Deduplicated, sorted planar point set.
class PointSet2D {
 public:
  PointSet2D(Prime p, std::vector<Point2> points);
  static PointSet2D cartesian(const FpSet& a, const FpSet& b);

  const Prime& prime() const noexcept { return prime_; }
  std::span<const Point2> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  bool contains(Point2 u) const noexcept;

  friend bool operator==(const PointSet2D& a, const PointSet2D& b) noexcept {
    return a.prime_ == b.prime_ && a.points_ == b.points_;
  }

 private:
  Prime prime_;
  std::vector<Point2> points_;
};

class PointSet3D {
 public:
  PointSet3D(Prime p, std::vector<Point3> points);

  const Prime& prime() const noexcept { return prime_; }
  std::span<const Point3> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

 private:
  Prime prime_;
  std::vector<Point3> points_;
};

// Point-set file: {"p": P, "points": [[x,y], ...]}.
std::string points_to_json(const PointSet2D& pts);
PointSet2D points_from_json(std::string_view text);
void save_points(const PointSet2D& pts, const std::filesystem::path& path);
PointSet2D load_points(const std::filesystem::path& path);

/// Distribution of i(l) = |l ∩ (A x A)| over all p^2 + p lines.
class IncidenceHistogram {
 public:
  IncidenceHistogram(u32 p, std::size_t set_size, std::vector<u64> by_incidence);

  u32 modulus() const noexcept { return p_; }
  std::size_t set_size() const noexcept { return n_; }
  // Number of lines with exactly k points (k = 0 included).
  u64 count(std::size_t k) const noexcept {
    return k < counts_.size() ? counts_[k] : 0;
  }
  u64 zero_lines() const noexcept { return count(0); }
  u64 total_lines() const noexcept {
    return static_cast<u64>(p_) * p_ + p_;
  }
  std::size_t max_incidence() const noexcept;
  std::span<const u64> counts() const noexcept { return counts_; }

 private:
  u32 p_;
  std::size_t n_;
  std::vector<u64> counts_;
};

// Cost model: p * |A|^2 ops for the per-slope bucketing.
IncidenceHistogram incidence_histogram(const FpSet& a,
                                       const Budget& budget = {},
                                       int jobs = 0);

// Σ_l i(l)^k for k in 1..4.
u64 moment(const IncidenceHistogram& h, int k);

// Σ_l i(l)(i(l)-1)...(i(l)-k+1), the number of ordered k-tuples of distinct
// collinear points counted per line.
u128 falling_moment(const IncidenceHistogram& h, int k);

// |L_M| = #{l : M < i(l) <= 2M}.
u64 rich_lines(const IncidenceHistogram& h, u64 m);
u64 rich_lines(const FpSet& a, u64 m, const Budget& budget = {});

// Σ_l (p i(l) - |A|^2)^2, i.e. p^2 Σ_l (i(l) - |A|^2/p)^2 in integers.
u128 scaled_deviation_sum(const IncidenceHistogram& h);

// I(P, L) over the deduplicated point and line sets.
u64 count_point_line(const PointSet2D& pts, std::span<const Line> lines,
                     const Budget& budget = {});

/// Plane a x + b y + c z = d, normalised so the first nonzero of (a,b,c) is 1.
struct Plane {
  u32 a = 0, b = 0, c = 0, d = 0;
  static Plane make(const Prime& p, u32 a, u32 b, u32 c, u32 d);
  bool contains(const Prime& p, Point3 u) const noexcept;
  friend auto operator<=>(const Plane&, const Plane&) = default;
};

struct PointPlaneCount {
  u64 incidences = 0;
  u64 max_collinear = 0;
};

// Exact I(P, Π) and the largest number of collinear points of P.
PointPlaneCount count_point_plane(const PointSet3D& pts,
                                  std::span<const Plane> planes,
                                  const Budget& budget = {});

u64 max_collinear(const PointSet3D& pts, const Budget& budget = {});

}  // namespace sumprod
