#pragma once

#include <array>
#include <map>
#include <optional>

#include "json.hpp"
#include "sumprod/incidence.hpp"
#include "sumprod/repfn.hpp"

namespace sumprod {

// ω(u,v) = u1 v2 - u2 v1.
u32 omega(const Prime& p, Point2 u, Point2 v) noexcept;

// ω(P) = {ω(u,v) : u,v in P} \ {0}. P must not contain the origin.
FpSet omega_set(const PointSet2D& pts, const Budget& budget = {}, int jobs = 0);

// Direction of u != 0 as a slope u2/u1, ∞ for the vertical axis.
ProjPoint direction(const Prime& p, Point2 u);

struct Quad {
  Point2 a, b, c, d;
};

struct QuadIdentity {
  u32 lhs = 0;       // t_ad t_bc
  u32 rhs = 0;       // t_ac t_bd - t_ab t_cd
  u32 expanded = 0;  // a1b2c1d2 + a2b1c2d1 - a1b1c2d2 - a2b2c1d1
  // lhs == rhs and lhs == -expanded. Expanding t_ad t_bc directly gives the
  // polynomial above with the opposite sign.
  bool holds = false;
};

QuadIdentity quad_identity(const Prime& p, const Quad& q) noexcept;

// t_ab t_cd / (t_ac t_bd) == [δ_a, δ_b, δ_c, δ_d]. Throws DegenerateQuadruple
// unless the four directions are pairwise distinct.
bool slope_cross_ratio_check(const Prime& p, const Quad& q);

struct PhiFibers {
  u64 quadruples = 0;
  u64 images = 0;
  std::map<u64, u64> fiber_sizes;  // size -> number of fibers
  // Every size-2 fiber is {q, q'} with (a',d') = x(a,d), (b',c') = x^{-1}(b,c).
  bool scaling_relation = true;
  // Orbits of q -> -q, and of the full scaling q ~ q' above, within P.
  u64 sign_classes = 0;
  u64 scaling_classes = 0;
};

// Groups all quadruples (one point of P on each of the four origin-lines)
// by Φ = (t_ad, t_bc, t_ac, t_bd, t_ab, t_cd). Throws EmptyDirection when a
// line carries no point of P.
PhiFibers phi_fibers(const Prime& p, const std::array<ProjPoint, 4>& directions,
                     const PointSet2D& pts, const Budget& budget = {});

nlohmann::json to_json(const PhiFibers& f);

struct TeqCounts {
  u64 n6 = 0;              // Σ_{s != 0} r_TT(s) r_{TT-TT}(s)
  u128 second_moment = 0;  // Σ_s r_{TT-TT}(s)^2
  u64 max_pointwise = 0;   // max_{s != 0} r_{TT-TT}(s)
  double c_second = 0;     // second_moment / |T|^{13/2}
  double c_max = 0;        // max_pointwise / |T|^{11/4}
};

TeqCounts count_teq_solutions(const FpSet& t, const Budget& budget = {});

struct RichnessSplit {
  PointSet2D sparse;  // P1: origin-lines with fewer than w points
  PointSet2D rich;    // P2: origin-lines with at least w points
  std::optional<std::size_t> omega_sparse;  // |ω(P1)| when computed
  std::optional<double> c_omega;            // |ω(P1)| √w / |P1|
};

RichnessSplit split_by_line_richness(const PointSet2D& pts, u64 w,
                                     bool with_omega = true,
                                     const Budget& budget = {});

}  // namespace sumprod
