#include <algorithm>
#include <cmath>

#include "checks.hpp"
#include "sumprod/crossratio.hpp"
#include "sumprod/incidence.hpp"
#include "sumprod/repfn.hpp"
#include "sumprod/rng.hpp"
#include "sumprod/symplectic.hpp"
#include "sumprod/triples.hpp"

namespace sumprod::detail {
namespace {

using nlohmann::json;

double dsize(const FpSet& s) { return static_cast<double>(s.size()); }

// Records lhs, rhs and lhs/rhs as the implied constant.
void record(CheckContext& c, double lhs, double rhs) {
  c.out.lhs = lhs;
  c.out.rhs = rhs;
  c.out.implied_constant = lhs / rhs;
}

Elem elem_param(CheckContext& c, const char* key, std::int64_t fallback) {
  const Elem e = c.prime().elem(c.param<std::int64_t>(key, fallback));
  if (e.value == 0) throw Error(ErrorKind::InvalidArgument, std::string(key) + " must be nonzero");
  return e;
}

FpSet shifted(const FpSet& a, Elem alpha) {
  return dilate_translate(a, Elem{1}, alpha);
}

u64 mult_e3(const FpSet& a) {
  const FpSet nz = a.nonzero();
  if (nz.empty()) return 0;
  return energy(nz, nz, EnergyKind::multiplicative, 3);
}

void t_asymp(CheckContext& c) {
  const auto r = asymptotic_residuals(c.set(), false, {}, c.budget, 1);
  const double n = dsize(c.set()), p = c.set().modulus();
  c.out.lhs = r.t_count;
  c.out.rhs = std::pow(n, 6) / p;
  c.out.implied_constant = r.rho_t;
}

void q_asymp(CheckContext& c) {
  if (c.set().size() < 2) return c.skip("needs |A| >= 2");
  const auto r = asymptotic_residuals(c.set(), true, {}, c.budget, 1);
  const double n = dsize(c.set()), p = c.set().modulus();
  c.out.lhs = *r.q_count;
  c.out.rhs = std::pow(n, 8) / (p * p);
  c.out.implied_constant = r.rho_q;
}

// |L_M| << min(p|A|^2/M^2, |A|^5/M^4) for M >= 2|A|^2/p.
void lm_upper(CheckContext& c) {
  const double n = dsize(c.set()), p = c.set().modulus();
  const u64 m_min = std::max<u64>(1, static_cast<u64>(std::ceil(2 * n * n / p)));
  if (!c.hypothesis("some M in [2|A|^2/p, |A|]", m_min <= c.set().size())) {
    return c.require_all_hypotheses();
  }
  const auto h = incidence_histogram(c.set(), c.budget, 1);
  double worst = 0;
  json per_m = json::object();
  for (u64 m = m_min; m <= c.set().size(); ++m) {
    const u64 count = rich_lines(h, m);
    const double lm = static_cast<double>(count);
    const double md = static_cast<double>(m);
    const double bound = std::min(p * n * n / (md * md), std::pow(n, 5) / std::pow(md, 4));
    per_m[std::to_string(m)] = count;
    if (lm / bound >= worst) {
      worst = lm / bound;
      record(c, lm, bound);
      c.out.extras["M"] = m;
      c.out.extras["c_quintic"] = lm * std::pow(md, 4) / std::pow(n, 5);
    }
  }
  c.out.extras["rich_lines"] = per_m;
}

// I(A x A, L) / (|A|^{3/4}|B|^{1/2}|L|^{3/4} + |A||B| + |L|) on a random line family.
void sdz_incidence(CheckContext& c) {
  const Prime& p = c.prime();
  const double n = dsize(c.set());
  const double pd = p.value();
  const u64 lines = c.param<u64>("lines", std::max<u64>(1, std::min<u64>(
      static_cast<u64>(pd * pd / n), 4 * c.set().size() * c.set().size())));
  c.hypothesis("|A||L| <= p^2", n * static_cast<double>(lines) <= pd * pd);
  c.require_all_hypotheses();
  if (c.out.status == Status::skipped) return;
  SplitMix64 rng(c.inst.seed ^ 0x1f83d9abu);
  std::vector<Line> fam;
  fam.reserve(lines);
  for (u64 i = 0; i < lines; ++i) {
    fam.push_back(Line::non_vertical(static_cast<u32>(rng.below(p.value())),
                                     static_cast<u32>(rng.below(p.value()))));
  }
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  const auto pts = PointSet2D::cartesian(c.set(), c.set());
  const double inc = static_cast<double>(count_point_line(pts, fam, c.budget));
  const double l = static_cast<double>(fam.size());
  record(c, inc, std::pow(n, 0.75) * std::sqrt(n) * std::pow(l, 0.75) + n * n + l);
  c.out.extras["lines"] = fam.size();
}

// I(P, Π) / (|P|^2/p + |P|^{3/2} + k|P|) with P drawn from A^3 and |Π| = |P|.
void rudnev_incidence(CheckContext& c) {
  const Prime& p = c.prime();
  SplitMix64 rng(c.inst.seed ^ 0x2545f491u);
  const auto el = c.set().elements();
  const u64 target = c.param<u64>("points", 200);
  std::vector<Point3> pts;
  for (u64 i = 0; i < target * 2 && pts.size() < target; ++i) {
    pts.push_back({el[rng.below(el.size())], el[rng.below(el.size())], el[rng.below(el.size())]});
  }
  const PointSet3D pset(p, pts);
  std::vector<Plane> planes;
  while (planes.size() < pset.size()) {
    const u32 a = static_cast<u32>(rng.below(p.value())), b = static_cast<u32>(rng.below(p.value())),
              cc = static_cast<u32>(rng.below(p.value())), d = static_cast<u32>(rng.below(p.value()));
    if (a == 0 && b == 0 && cc == 0) continue;
    planes.push_back(Plane::make(p, a, b, cc, d));
  }
  const auto r = count_point_plane(pset, planes, c.budget);
  const double np = static_cast<double>(pset.size());
  record(c, static_cast<double>(r.incidences),
         np * np / p.value() + std::pow(np, 1.5) + static_cast<double>(r.max_collinear) * np);
  c.out.extras["max_collinear"] = r.max_collinear;
  c.out.extras["points"] = pset.size();
}

void ra_common(CheckContext& c, int part) {
  if (c.set().size() < 3) return c.skip("needs |A| >= 3");
  const double n = dsize(c.set()), p = c.set().modulus();
  if (part == 1 && !c.hypothesis("|A| <= p^{5/12}", n <= std::pow(p, 5.0 / 12.0))) {
    return c.require_all_hypotheses();
  }
  const RatioGrowth g = ratio_growth_monitor(c.set(), c.budget, 1);
  const double r = static_cast<double>(g.ratios);
  const double ln = std::log(n);
  double rhs = 0;
  switch (part) {
    case 1: rhs = std::pow(n, 1.6) / std::pow(ln, 8.0 / 15.0); break;
    case 2: rhs = std::min(p, std::pow(n, 2.5) / std::sqrt(p)); break;
    default: rhs = std::min(p, std::pow(n, 1.5 + 1.0 / 22.0) * std::pow(ln, -4.0 / 9.0));
  }
  record(c, r, rhs);
  c.out.extras["regime"] = g.regime;
  c.out.extras["c_floor"] = g.c_floor;
  c.out.extras["saturated"] = g.ratios + 1 >= g.p;
}

void ra_small(CheckContext& c) { ra_common(c, 1); }
void ra_large(CheckContext& c) { ra_common(c, 2); }
void ra_uniform(CheckContext& c) { ra_common(c, 3); }

// E_3^x(A) << |A+λA|^{15/4} |A|^{-3/4} log|A|, given |A|^11 |A+λA| <= p^8.
void soly2(CheckContext& c) {
  const FpSet& a = c.set();
  if (a.size() < 2) return c.skip("needs |A| >= 2");
  const Elem lambda = elem_param(c, "lambda", 1);
  const double n = dsize(a), p = a.modulus();
  const double s = dsize(combine(a, dilate_translate(a, lambda, Elem{0}), SetOp::sum));
  c.hypothesis("|A|^11 |A+lA| <= p^8", 11 * std::log(n) + std::log(s) <= 8 * std::log(p));
  c.require_all_hypotheses();
  if (c.out.status == Status::skipped) return;
  record(c, static_cast<double>(mult_e3(a)), std::pow(s, 3.75) / std::pow(n, 0.75) * std::log(n));
}

// E_3^x(A+α) << |AA|^5 log|A| / |A|^2, given |AA| <= p^{2/3}.
void soly22(CheckContext& c) {
  const FpSet& a = c.set();
  if (a.size() < 2) return c.skip("needs |A| >= 2");
  const Elem alpha = elem_param(c, "alpha", 1);
  const double n = dsize(a), p = a.modulus();
  const double aa = dsize(combine(a, a, SetOp::prod));
  c.hypothesis("|AA| <= p^{2/3}", aa <= std::pow(p, 2.0 / 3.0));
  c.require_all_hypotheses();
  if (c.out.status == Status::skipped) return;
  record(c, static_cast<double>(mult_e3(shifted(a, alpha))),
         std::pow(aa, 5) * std::log(n) / (n * n));
}

// E^x(A,B) << |A+λA|^{3/2}|B|^{3/2}/|A|^{1/2}, with B = A/A.
void energy_lemma(CheckContext& c) {
  const FpSet a = c.set().nonzero();
  if (a.size() < 2) return c.skip("needs two nonzero elements");
  const Elem lambda = elem_param(c, "lambda", 1);
  const FpSet b = combine(a, a, SetOp::ratio);
  const double n = dsize(a), p = a.modulus(), nb = dsize(b);
  const double s = dsize(combine(a, dilate_translate(a, lambda, Elem{0}), SetOp::sum));
  c.hypothesis("|A||A+lA||B| <= p^2", n * s * nb <= p * p);
  c.hypothesis("max(|A+lA|,|B|) <= (|A||A+lA||B|)^{1/2}", std::max(s, nb) <= std::sqrt(n * s * nb));
  c.require_all_hypotheses();
  if (c.out.status == Status::skipped) return;
  record(c, static_cast<double>(energy(a, b, EnergyKind::multiplicative, 2)),
         std::pow(s, 1.5) * std::pow(nb, 1.5) / std::sqrt(n));
}

// E^x(A+α,B) << |AA|^{3/2}|B|^{3/2}/|A|^{1/2}, B = (A+α)/(A+α).
void energym(CheckContext& c) {
  const FpSet& a = c.set();
  const Elem alpha = elem_param(c, "alpha", 1);
  const FpSet sh = shifted(a, alpha).nonzero();
  if (sh.size() < 2) return c.skip("needs two nonzero shifted elements");
  const FpSet b = combine(sh, sh, SetOp::ratio);
  const double n = dsize(a), p = a.modulus(), nb = dsize(b);
  const double aa = dsize(combine(a, a, SetOp::prod));
  c.hypothesis("|A||AA||B| <= p^2", n * aa * nb <= p * p);
  c.hypothesis("max(|AA|,|B|) <= (|A||AA||B|)^{1/2}", std::max(aa, nb) <= std::sqrt(n * aa * nb));
  c.require_all_hypotheses();
  if (c.out.status == Status::skipped) return;
  record(c, static_cast<double>(energy(sh, b, EnergyKind::multiplicative, 2)),
         std::pow(aa, 1.5) * std::pow(nb, 1.5) / std::sqrt(n));
}

// Lower-bound monitors of the form prod |X_i|^{e_i} >> |A|^e / log^f |A|,
// evaluated in logs.
void power_monitor(CheckContext& c, double log_lhs, double log_rhs) {
  c.out.lhs = log_lhs;
  c.out.rhs = log_rhs;
  c.out.implied_constant = std::exp(log_lhs - log_rhs);
  c.out.extras["log_scale"] = true;
}

void fsmp_ratio(CheckContext& c) {
  const FpSet& a = c.set();
  const FpSet nz = a.nonzero();
  if (nz.size() < 2) return c.skip("needs two nonzero elements");
  const Elem lambda = elem_param(c, "lambda", 1);
  const double n = dsize(a), p = a.modulus();
  if (!c.hypothesis("|A| <= p^{5/9}", n <= std::pow(p, 5.0 / 9.0))) return c.require_all_hypotheses();
  const double s = dsize(combine(a, dilate_translate(a, lambda, Elem{0}), SetOp::sum));
  const double r = dsize(combine(a, a, SetOp::ratio));
  const double ln = std::log(n);
  power_monitor(c, 21 * std::log(s) + 10 * std::log(r), 37 * ln - 4 * std::log(ln));
}

void fsmp_prod(CheckContext& c) {
  const FpSet& a = c.set();
  if (a.size() < 2) return c.skip("needs |A| >= 2");
  const Elem lambda = elem_param(c, "lambda", 1);
  const double n = dsize(a), p = a.modulus();
  if (!c.hypothesis("|A| <= p^{9/16}", n <= std::pow(p, 9.0 / 16.0))) return c.require_all_hypotheses();
  const double s = dsize(combine(a, dilate_translate(a, lambda, Elem{0}), SetOp::sum));
  const double m = dsize(combine(a, a, SetOp::prod));
  const double ln = std::log(n);
  power_monitor(c, 18 * std::log(s) + 9 * std::log(m), 32 * ln - 6 * std::log(ln));
}

// With B = C = A \ {0}: |AC|^3 |(A-1)B|^2 >> |A|^4 |B||C|.
void gs_lemma(CheckContext& c) {
  const FpSet& a = c.set();
  const FpSet b = a.nonzero();
  if (b.empty()) return c.skip("needs a nonzero element");
  const double n = dsize(a), p = a.modulus(), nb = dsize(b);
  const double ac = dsize(combine(a, b, SetOp::prod));
  const FpSet am1 = dilate_translate(a, Elem{1}, Elem{a.modulus() - 1});
  const double ab = dsize(combine(am1, b, SetOp::prod));
  c.hypothesis("|AC| <= |(A-1)B|", ac <= ab);
  c.hypothesis("|AC||B||C| <= p^2", ac * nb * nb <= p * p);
  c.require_all_hypotheses();
  if (c.out.status == Status::skipped) return;
  record(c, std::pow(ac, 3) * ab * ab, std::pow(n, 4) * nb * nb);
}

// |A(B+C)| >> (|A||B||C|)^{1/2} with B = C = A.
void abc_product(CheckContext& c) {
  const FpSet& a = c.set();
  const double n = dsize(a), p = a.modulus();
  c.hypothesis("|A||B||C| <= p^2", n * n * n <= p * p);
  c.require_all_hypotheses();
  if (c.out.status == Status::skipped) return;
  const FpSet bc = combine(a, a, SetOp::sum);
  record(c, dsize(combine(a, bc, SetOp::prod)), std::pow(n, 1.5));
}

void proddiff(CheckContext& c) {
  const FpSet& a = c.set();
  if (a.size() < 2) return c.skip("needs |A| >= 2");
  const double n = dsize(a), p = a.modulus();
  if (!c.hypothesis("|A| <= p^{125/384}", n <= std::pow(p, 125.0 / 384.0))) {
    return c.require_all_hypotheses();
  }
  const FpSet d = combine(a, a, SetOp::diff);
  const double dd = dsize(combine(d, d, SetOp::prod));
  record(c, dd, std::pow(dsize(d), 5.0 / 6.0) * std::pow(n, 128.0 / 375.0) /
                    std::pow(std::log(n), 32.0 / 75.0));
}

void aa_shift(CheckContext& c) {
  const FpSet& a = c.set();
  const Elem lambda = elem_param(c, "lambda", 1);
  const double n = dsize(a), p = a.modulus();
  if (!c.hypothesis("|A| <= p^{9/16}", n <= std::pow(p, 9.0 / 16.0))) return c.require_all_hypotheses();
  const FpSet s = combine(a, dilate_translate(a, lambda, Elem{0}), SetOp::sum);
  record(c, dsize(combine(s, s, SetOp::prod)), std::pow(n, 1.5 + 1.0 / 90.0));
}

// Growth of (A-a)(A-b) through the pair (a,b) with the least E^x(A-a, A-b).
void pd_pinned(CheckContext& c) {
  const FpSet& a = c.set();
  const double n = dsize(a), p = a.modulus();
  c.budget.require(n * n * (n * n + p), "pinned product pair search");
  u64 best = UINT64_MAX;
  u32 ba = 0, bb = 0;
  for (u32 x : a.elements())
    for (u32 y : a.elements()) {
      const u64 e = shifted_mult_energy(a, Elem{x}, Elem{y}, 2);
      if (e < best) {
        best = e;
        ba = x;
        bb = y;
      }
    }
  const Prime& pr = a.prime();
  const FpSet left = dilate_translate(a, Elem{1}, Elem{pr.neg(ba)});
  const FpSet right = dilate_translate(a, Elem{1}, Elem{pr.neg(bb)});
  const double prod = dsize(combine(left, right, SetOp::prod));
  record(c, prod, std::min(p, std::pow(n, 2.5) / std::sqrt(p)));
  c.out.extras["a"] = ba;
  c.out.extras["b"] = bb;
  c.out.extras["energy"] = best;
}

void fsmpm(CheckContext& c) {
  const FpSet& a = c.set();
  const Elem alpha = elem_param(c, "alpha", 1);
  const double n = dsize(a), p = a.modulus();
  const Prime& pr = a.prime();
  const FpSet sh = dilate_translate(a, Elem{1}, Elem{pr.neg(alpha.value)});
  if (sh.nonzero().empty()) return c.skip("A - alpha has no nonzero element");
  const double aa = dsize(combine(a, a, SetOp::prod));
  const double ratio = dsize(combine(sh, sh, SetOp::ratio));
  const double prod = dsize(combine(sh, sh, SetOp::prod));
  const bool h1 = c.hypothesis("|A| <= p^{13/24}", n <= std::pow(p, 13.0 / 24.0));
  const bool h2 = c.hypothesis("|A| <= p^{23/42}", n <= std::pow(p, 23.0 / 42.0));
  const double ln = std::log(n);
  if (h1) {
    power_monitor(c, 13 * std::log(aa) + 5 * std::log(ratio), 21 * ln);
  }
  if (h2) {
    const double l2 = 23 * std::log(aa) + 9 * std::log(prod);
    c.out.extras["companion_constant"] = std::exp(l2 - 37 * ln);
  }
  if (!h1 && !h2) c.require_all_hypotheses();
}

// Largest A with A - A inside ξΓ ∪ {0}, by clique search on the Cayley graph
// x ~ y iff x - y in ξΓ; we may take 0 in A, so A \ {0} lies in ξΓ.
std::size_t max_clique(const std::vector<std::vector<bool>>& adj, std::vector<std::size_t> cand,
                       std::size_t current, std::size_t best, u64& nodes, u64 limit) {
  if (++nodes > limit) throw Error(ErrorKind::BudgetExceeded, "clique search");
  if (cand.empty()) return std::max(best, current);
  while (!cand.empty()) {
    if (current + cand.size() <= best) return best;
    const std::size_t v = cand.back();
    cand.pop_back();
    std::vector<std::size_t> next;
    for (std::size_t u : cand)
      if (adj[v][u]) next.push_back(u);
    best = max_clique(adj, std::move(next), current + 1, best, nodes, limit);
  }
  return std::max(best, current);
}

void mult_sbgp(CheckContext& c) {
  const Prime& p = c.prime();
  const u64 pm1 = p.value() - 1;
  u64 order = c.param<u64>("order", 0);
  if (order == 0) {
    const double cap = std::pow(static_cast<double>(p.value()), 0.75);
    for (u64 d = 2; d <= pm1; d += 2)
      if (pm1 % d == 0 && static_cast<double>(d) < cap) order = d;
  }
  if (order == 0) return c.skip("no even subgroup order below p^{3/4}");
  FamilySpec f;
  f.kind = FamilyKind::subgroup;
  f.order = order;
  const FpSet g = make_family(f, p);
  const double gs = dsize(g), pd = p.value();
  c.hypothesis("|G| < p^{3/4}", gs < std::pow(pd, 0.75));
  std::size_t best = 1;
  u64 nodes = 0;
  const u64 limit = std::min<u64>(c.budget.max_ops, 50'000'000);
  // One search per coset ξΓ.
  std::vector<bool> seen(p.value(), false);
  for (u32 xi = 1; xi < p.value(); ++xi) {
    if (seen[xi]) continue;
    std::vector<u32> coset;
    for (u32 y : g.elements()) {
      coset.push_back(p.mul(xi, y));
      seen[coset.back()] = true;
    }
    std::vector<bool> in_coset(p.value(), false);
    for (u32 y : coset) in_coset[y] = true;
    const std::size_t m = coset.size();
    std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        adj[i][j] = i != j && in_coset[p.sub(coset[i], coset[j])];
    std::vector<std::size_t> cand(m);
    for (std::size_t i = 0; i < m; ++i) cand[i] = i;
    best = std::max(best, 1 + max_clique(adj, cand, 0, best > 0 ? best - 1 : 0, nodes, limit));
  }
  double bound;
  if (gs < std::pow(pd, 0.75)) {
    bound = std::pow(gs, 5.0 / 12.0);
  } else if (gs < std::pow(pd, 5.0 / 6.0)) {
    bound = std::pow(pd, -5.0 / 8.0) * std::pow(gs, 1.25);
  } else {
    bound = std::pow(gs, 5.0 / 3.0) / pd;
  }
  record(c, static_cast<double>(best), bound);
  c.out.extras["order"] = order;
  c.out.extras["search_nodes"] = nodes;
}

PointSet2D punctured_grid(const FpSet& a) {
  std::vector<Point2> pts;
  for (u32 x : a.elements())
    for (u32 y : a.elements())
      if (x != 0 || y != 0) pts.push_back({x, y});
  return PointSet2D(a.prime(), std::move(pts));
}

void omega_growth(CheckContext& c) {
  const PointSet2D pts = punctured_grid(c.set());
  const double n = static_cast<double>(pts.size()), p = c.set().modulus();
  const FpSet w = omega_set(pts, c.budget, 1);
  c.hypothesis("P not on one line through the origin", !w.empty());
  c.hypothesis("|P| <= p^{161/162}", n <= std::pow(p, 161.0 / 162.0));
  c.require_all_hypotheses();
  if (c.out.status == Status::skipped) return;
  record(c, dsize(w), std::pow(n, 108.0 / 161.0) / std::pow(std::log(n), 40.0 / 161.0));
}

void omega_eq_counts(CheckContext& c) {
  const FpSet& t = c.set();
  const double n = dsize(t), p = t.modulus();
  c.hypothesis("|T| <= p^{2/3}", n <= std::pow(p, 2.0 / 3.0));
  c.require_all_hypotheses();
  if (c.out.status == Status::skipped) return;
  const TeqCounts r = count_teq_solutions(t, c.budget);
  c.out.lhs = exact_json(r.second_moment);
  c.out.rhs = std::pow(n, 6.5);
  c.out.implied_constant = r.c_second;
  c.out.extras["n6"] = r.n6;
  c.out.extras["max_pointwise"] = r.max_pointwise;
  c.out.extras["c_max"] = r.c_max;
}

// |ω(P1)| >> |P1|/√w on the part of P with at most w points per
// origin-line.
void omega_split(CheckContext& c) {
  const PointSet2D pts = punctured_grid(c.set());
  const u64 w = c.param<u64>("w", 4);
  const RichnessSplit s = split_by_line_richness(pts, w, true, c.budget);
  c.out.extras["rich"] = s.rich.size();
  c.out.extras["sparse"] = s.sparse.size();
  if (!c.hypothesis("P1 nonempty", !s.sparse.empty())) return c.require_all_hypotheses();
  record(c, static_cast<double>(*s.omega_sparse),
         static_cast<double>(s.sparse.size()) / std::sqrt(static_cast<double>(w)));
}

}  // namespace

std::vector<CheckEntry> monitor_checks() {
  return {
      {"T_asymp", Tier::monitor, "T(A) = |A|^6/p + O(p^{1/2}|A|^{7/2})", t_asymp},
      {"Q_asymp", Tier::monitor, "Q(A) = |A|^8/p^2 + O(|A|^5 log|A|)", q_asymp},
      {"LM_upper", Tier::monitor, "|L_M| << min(p|A|^2/M^2, |A|^5/M^4)", lm_upper},
      {"sdz_incidence", Tier::monitor, "I(A x B, L) vs |A|^{3/4}|B|^{1/2}|L|^{3/4} + |P| + |L|",
       sdz_incidence},
      {"rudnev_incidence", Tier::monitor, "I(P, planes) vs |P|^2/p + |P|^{3/2} + k|P|",
       rudnev_incidence},
      {"RA_small", Tier::monitor, "|R[A]| >> |A|^{8/5} log^{-8/15}|A|", ra_small},
      {"RA_large", Tier::monitor, "|R[A]| >> min(p, |A|^{5/2}/p^{1/2})", ra_large},
      {"RA_uniform", Tier::monitor, "|R[A]| >> min(p, |A|^{3/2+1/22} log^{-4/9}|A|)", ra_uniform},
      {"soly2", Tier::monitor, "E_3^x(A) << |A+lA|^{15/4}|A|^{-3/4} log|A|", soly2},
      {"soly22", Tier::monitor, "E_3^x(A+a) << |AA|^5 log|A|/|A|^2", soly22},
      {"energy_lemma", Tier::monitor, "E^x(A,B) << |A+lA|^{3/2}|B|^{3/2}/|A|^{1/2}", energy_lemma},
      {"energym", Tier::monitor, "E^x(A+a,B) << |AA|^{3/2}|B|^{3/2}/|A|^{1/2}", energym},
      {"fsmp_ratio", Tier::monitor, "|A+lA|^21 |A/A|^10 >> |A|^37 / log^4", fsmp_ratio},
      {"fsmp_prod", Tier::monitor, "|A+lA|^18 |AA|^9 >> |A|^32 / log^6", fsmp_prod},
      {"gs_lemma", Tier::monitor, "|AC|^3 |(A-1)B|^2 >> |A|^4|B||C|", gs_lemma},
      {"abc_product", Tier::monitor, "|A(B+C)| >> (|A||B||C|)^{1/2}", abc_product},
      {"proddiff", Tier::monitor, "|(A-A)(A-A)| >> |A-A|^{5/6}|A|^{128/375}", proddiff},
      {"aa_shift", Tier::monitor, "|(A+lA)(A+lA)| >> |A|^{3/2+1/90}", aa_shift},
      {"pd_pinned", Tier::monitor, "|(A-a)(A-b)| >> min(p, |A|^{5/2}/p^{1/2})", pd_pinned},
      {"fsmpm", Tier::monitor, "|AA|^13 |(A-a)/(A-a)|^5 >> |A|^21", fsmpm},
      {"mult_sbgp", Tier::monitor, "A-A in xG + {0} forces |A| << |G|^{5/12}", mult_sbgp},
      {"omega_growth", Tier::monitor, "|w(P)| >> |P|^{108/161}", omega_growth},
      {"omega_eq_counts", Tier::monitor, "sum r_{TT-TT}^2 << |T|^{13/2}", omega_eq_counts},
      {"omega_split", Tier::monitor, "|w(P1)| >> |P1|/sqrt(w)", omega_split},
  };
}

}  // namespace sumprod::detail
