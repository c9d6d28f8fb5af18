#include <cmath>
#include <map>

#include "checks.hpp"
#include "sumprod/crossratio.hpp"
#include "sumprod/experiments.hpp"
#include "sumprod/incidence.hpp"
#include "sumprod/repfn.hpp"
#include "sumprod/rng.hpp"
#include "sumprod/symplectic.hpp"
#include "sumprod/triples.hpp"

namespace sumprod::detail {
namespace {

using nlohmann::json;

u128 upow(u128 b, int e) {
  u128 r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void set_sides(CheckContext& c, u128 lhs, u128 rhs) {
  c.out.lhs = exact_json(lhs);
  c.out.rhs = exact_json(rhs);
}

void line_moment_1(CheckContext& c) {
  const auto h = incidence_histogram(c.set(), c.budget, 1);
  const u128 n = c.set().size();
  const u128 lhs = moment(h, 1);
  const u128 rhs = (u128{c.set().modulus()} + 1) * n * n;
  set_sides(c, lhs, rhs);
  c.expect(lhs == rhs, "sum of i(l) differs from (p+1)|A|^2");
}

void line_moment_2(CheckContext& c) {
  const auto h = incidence_histogram(c.set(), c.budget, 1);
  const u128 n = c.set().size();
  const u128 lhs = moment(h, 2);
  const u128 rhs = n * n * n * n + u128{c.set().modulus()} * n * n;
  set_sides(c, lhs, rhs);
  c.expect(lhs == rhs, "sum of i(l)^2 differs from |A|^4 + p|A|^2");
}

// Σ (i - |A|^2/p)^2 <= p|A|^2, scaled by p^2.
void line_moment_dev(CheckContext& c) {
  const auto h = incidence_histogram(c.set(), c.budget, 1);
  const u128 n = c.set().size();
  const u128 p = c.set().modulus();
  const u128 lhs = scaled_deviation_sum(h);
  const u128 rhs = p * p * p * n * n;
  set_sides(c, lhs, rhs);
  c.expect(lhs <= rhs, "line deviation sum above p|A|^2");
}

void t_total(CheckContext& c) {
  const u128 n = c.set().size();
  if (n < 2) return c.skip("needs |A| >= 2");
  const RepFn t = t_fn(c.set(), c.budget, 1);
  set_sides(c, t.total_mass(), n * n * (n - 1));
  c.expect(t.total_mass() == n * n * (n - 1), "sum of t(x) differs from |A|^2(|A|-1)");
  c.expect(t(0) == n * (n - 1) && t(1) == n * (n - 1), "t(0) or t(1) differs from |A|(|A|-1)");
}

void q_total(CheckContext& c) {
  const u128 n = c.set().size();
  if (n < 2) return c.skip("needs |A| >= 2");
  const QFn q = q_fn(c.set(), c.budget, 1);
  set_sides(c, q.total_mass(), n * n * n * (n - 1));
  c.expect(q.total_mass() == n * n * n * (n - 1), "sum of q(x,y) differs from |A|^3(|A|-1)");
  c.expect(q(0, 0) == n * (n - 1), "q(0,0) differs from |A|(|A|-1)");
}

void t_symmetry(CheckContext& c) {
  if (c.set().size() < 2) return c.skip("needs |A| >= 2");
  const Prime& p = c.prime();
  const RepFn t = t_fn(c.set(), c.budget, 1);
  u64 bad = 0;
  for (const auto& [x, k] : t.entries()) bad += t(p.sub(1, x)) != k ? 1 : 0;
  set_sides(c, bad, 0);
  c.expect(bad == 0, "t(x) != t(1-x)");
}

void q_symmetry(CheckContext& c) {
  if (c.set().size() < 2) return c.skip("needs |A| >= 2");
  const Prime& p = c.prime();
  const QFn q = q_fn(c.set(), c.budget, 1);
  u64 bad = 0;
  for (const auto& e : q.entries()) bad += q(p.sub(1, e.x), p.sub(1, e.y)) != e.count ? 1 : 0;
  set_sides(c, bad, 0);
  c.expect(bad == 0, "q(x,y) != q(1-x,1-y)");
}

template <class Counter>
void methods_agree(CheckContext& c, Counter count, std::size_t brute_max) {
  json values = json::object();
  std::vector<u64> got;
  std::vector<std::string> skipped;
  for (CountMethod m : {CountMethod::brute, CountMethod::ratio,
                        CountMethod::shifted_energy, CountMethod::line}) {
    if (m == CountMethod::brute && c.set().size() > brute_max) {
      skipped.emplace_back("brute");
      continue;
    }
    try {
      const u64 v = count(c.set(), m, c.budget, 1);
      values[std::string(to_string(m))] = v;
      got.push_back(v);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      skipped.emplace_back(to_string(m));
    }
  }
  c.out.extras["methods"] = values;
  c.out.extras["skipped_methods"] = skipped;
  if (got.size() < 2) return c.skip("fewer than two methods within budget");
  const auto [lo, hi] = std::minmax_element(got.begin(), got.end());
  set_sides(c, *lo, *hi);
  c.expect(*lo == *hi, "counting methods disagree");
}

void triples_methods(CheckContext& c) {
  methods_agree(c, count_collinear_triples, kBruteTriplesMax);
}

void quads_methods(CheckContext& c) {
  methods_agree(c, count_collinear_quadruples, kBruteQuadsMax);
}

i128 absdiff(u128 a, u128 b) { return a > b ? static_cast<i128>(a - b) : static_cast<i128>(b - a); }

void triples_residual(CheckContext& c) {
  const u128 n = c.set().size();
  if (n < 2) return c.skip("needs |A| >= 2");
  const u128 t = count_collinear_triples(c.set(), CountMethod::ratio, c.budget, 1);
  const u128 sum_t2 = t_fn(c.set(), c.budget, 1).power_sum(2);
  const u128 dev = static_cast<u128>(absdiff(t, sum_t2 + upow(n, 4)));
  set_sides(c, dev, 3 * upow(n, 4));
  c.expect(dev <= 3 * upow(n, 4), "|T - (sum t^2 + |A|^4)| above 3|A|^4");
}

void quads_residual(CheckContext& c) {
  const u128 n = c.set().size();
  if (n < 2) return c.skip("needs |A| >= 2");
  const u128 t = count_collinear_triples(c.set(), CountMethod::ratio, c.budget, 1);
  const u128 q = count_collinear_quadruples(c.set(), CountMethod::ratio, c.budget, 1);
  const u128 sum_q2 = q_sum_squares(c.set(), c.budget, 1);
  const u128 dev = static_cast<u128>(absdiff(q, sum_q2 + upow(n, 5)));
  set_sides(c, dev, t + 2 * upow(n, 5));
  c.expect(dev <= t + 2 * upow(n, 5), "|Q - (sum q^2 + |A|^5)| above T + 2|A|^5");
}

// |kA - lA| |A|^{k+l-1} <= |A+A|^{k+l}.
void plunnecke(CheckContext& c) {
  const FpSet& a = c.set();
  const u128 n = a.size();
  const u128 doubling = combine(a, a, SetOp::sum).size();
  std::vector<std::pair<int, int>> pairs;
  if (c.inst.params.contains("k")) {
    pairs.emplace_back(c.param("k", 1), c.param("l", 1));
  } else {
    for (int s = 1; s <= 4; ++s)
      for (int k = 0; k <= s; ++k) pairs.emplace_back(k, s - k);
  }
  c.budget.require(static_cast<long double>(a.modulus()) * a.modulus() * 8, "plunnecke");
  // Iterated sums kA and lA.
  std::map<int, FpSet> multiples;
  multiples.emplace(1, a);
  auto mult = [&](int k) -> const FpSet& {
    for (int i = 2; i <= k; ++i)
      if (!multiples.count(i)) multiples.emplace(i, combine(multiples.at(i - 1), a, SetOp::sum));
    return multiples.at(k);
  };
  json detail = json::array();
  double worst = -1;
  for (auto [k, l] : pairs) {
    if (k + l < 1) continue;
    u128 size;
    if (k == 0) {
      size = mult(l).size();  // |-lA| = |lA|
    } else if (l == 0) {
      size = mult(k).size();
    } else {
      size = combine(mult(k), mult(l), SetOp::diff).size();
    }
    const u128 lhs = size * upow(n, k + l - 1);
    const u128 rhs = upow(doubling, k + l);
    detail.push_back({{"k", k}, {"l", l}, {"size", exact_json(size)}});
    const double ratio = static_cast<double>(lhs) / static_cast<double>(rhs);
    if (ratio > worst) {
      worst = ratio;
      set_sides(c, lhs, rhs);
    }
    c.expect(lhs <= rhs, "Plunnecke bound fails at k=" + std::to_string(k) +
                             " l=" + std::to_string(l));
  }
  c.out.extras["pairs"] = detail;
}

void csest(CheckContext& c) {
  const FpSet& a = c.set();
  const u128 n = a.size();
  const u128 e = energy(a, a, EnergyKind::additive, 2);
  const u128 sum = combine(a, a, SetOp::sum).size();
  const u128 diff = combine(a, a, SetOp::diff).size();
  set_sides(c, std::min(sum, diff) * e, upow(n, 4));
  c.out.extras["energy"] = exact_json(e);
  c.expect(sum * e >= upow(n, 4), "|A+A| E(A) < |A|^4");
  c.expect(diff * e >= upow(n, 4), "|A-A| E(A) < |A|^4");
}

double three_halves(const RepFn& r) {
  double s = 0;
  for (const auto& [x, k] : r.entries()) s += std::pow(static_cast<double>(k), 1.5);
  return s;
}

bool le_rel(double lhs, double rhs) { return lhs <= rhs * (1 + 1e-9); }

// E(A, A±A) >= Σ_d |A_d||A±A_d| >= |A|^2 (Σ_d |A_d|^{3/2})^2 / E_3(A).
void shsh_chain(CheckContext& c) {
  const FpSet& a = c.set();
  const FpSet nz = a.nonzero();
  c.budget.require(static_cast<long double>(a.size()) * a.size() * a.modulus() * 4, "shsh chain");
  json forms = json::array();
  struct Form {
    const char* name;
    const FpSet& base;
    SetOp op;
    EnergyKind kind;
  };
  const Form all[] = {{"additive_sum", a, SetOp::sum, EnergyKind::additive},
                      {"additive_diff", a, SetOp::diff, EnergyKind::additive},
                      {"mult_prod", nz, SetOp::prod, EnergyKind::multiplicative},
                      {"mult_ratio", nz, SetOp::ratio, EnergyKind::multiplicative}};
  bool first = true;
  for (const auto& f : all) {
    if (f.base.empty()) continue;
    const bool mult = f.kind == EnergyKind::multiplicative;
    const FpSet other = combine(f.base, f.base, f.op);
    const u128 e = energy(f.base, other, f.kind, 2);
    const u128 mid = popular_difference_sum(f.base, f.op);
    const RepFn r = rep_fn(f.base, f.base, mult ? SetOp::ratio : SetOp::diff);
    const double e3 = static_cast<double>(r.power_sum(3));
    const double n = static_cast<double>(f.base.size());
    const double e32 = three_halves(r);
    const double low = n * n * e32 * e32 / e3;
    forms.push_back({{"form", f.name}, {"energy", exact_json(e)},
                     {"middle", exact_json(mid)}, {"lower", low}});
    if (first) {
      set_sides(c, e, mid);
      first = false;
    }
    c.expect(e >= mid, std::string(f.name) + ": E(A,A op A) below the popular-difference sum");
    c.expect(le_rel(low, static_cast<double>(mid)),
             std::string(f.name) + ": popular-difference sum below the E_3 bound");
  }
  c.out.extras["forms"] = forms;
}

// E(A, A-A) |A-A| E_3(A) >= |A|^8, and the multiplicative form on A \ {0}.
void shsh_difs(CheckContext& c) {
  const FpSet& a = c.set();
  json forms = json::array();
  bool first = true;
  for (bool mult : {false, true}) {
    const FpSet base = mult ? a.nonzero() : a;
    if (base.empty()) continue;
    const SetOp op = mult ? SetOp::ratio : SetOp::diff;
    const EnergyKind kind = mult ? EnergyKind::multiplicative : EnergyKind::additive;
    const FpSet d = combine(base, base, op);
    const u128 e = energy(base, d, kind, 2);
    const u128 e3 = rep_fn(base, base, op).power_sum(3);
    const u128 lhs = e * d.size() * e3;
    const u128 rhs = upow(base.size(), 8);
    forms.push_back({{"form", mult ? "multiplicative" : "additive"},
                     {"energy", exact_json(e)}, {"difference_set", d.size()},
                     {"e3", exact_json(e3)}});
    if (first) {
      c.out.lhs = exact_json(e);
      c.out.rhs = static_cast<double>(rhs) / (static_cast<double>(d.size()) * static_cast<double>(e3));
      first = false;
    }
    c.expect(lhs >= rhs, mult ? "multiplicative difs bound fails" : "additive difs bound fails");
  }
  c.out.extras["forms"] = forms;
}

// E(A) <= E_3(A)^{1/3} E_{3/2}(A)^{2/3}, additive and multiplicative.
void holder(CheckContext& c) {
  bool first = true;
  for (bool mult : {false, true}) {
    const FpSet base = mult ? c.set().nonzero() : c.set();
    if (base.empty()) continue;
    const RepFn r = rep_fn(base, base, mult ? SetOp::ratio : SetOp::diff);
    const double e = static_cast<double>(r.power_sum(2));
    const double bound = std::cbrt(static_cast<double>(r.power_sum(3))) *
                         std::pow(three_halves(r), 2.0 / 3.0);
    if (first) {
      c.out.lhs = e;
      c.out.rhs = bound;
      first = false;
    }
    c.out.extras[mult ? "multiplicative" : "additive"] = {{"energy", e}, {"bound", bound}};
    c.expect(le_rel(e, bound), "Holder bound fails");
  }
}

// |L_M| <= 4p|A|^2/M^2 for M >= 2|A|^2/p.
void rich_line_hard(CheckContext& c) {
  const u128 n = c.set().size();
  const u128 p = c.set().modulus();
  const u64 m_min = static_cast<u64>((2 * n * n + p - 1) / p);
  std::vector<u64> ms;
  if (c.inst.params.contains("M")) {
    const u64 m = c.param<u64>("M", 1);
    if (!c.hypothesis("M >= 2|A|^2/p", u128{m} * p >= 2 * n * n)) {
      return c.require_all_hypotheses();
    }
    ms.push_back(m);
  } else {
    for (u64 m = std::max<u64>(1, m_min); m <= n; ++m) ms.push_back(m);
    c.hypothesis("some M in [2|A|^2/p, |A|]", !ms.empty());
    if (ms.empty()) return c.require_all_hypotheses();
  }
  const auto h = incidence_histogram(c.set(), c.budget, 1);
  double worst = -1;
  for (u64 m : ms) {
    const u128 lhs = u128{rich_lines(h, m)} * m * m;
    const u128 rhs = 4 * p * n * n;
    const double ratio = static_cast<double>(lhs) / static_cast<double>(rhs);
    if (ratio > worst) {
      worst = ratio;
      c.out.lhs = rich_lines(h, m);
      c.out.rhs = static_cast<double>(rhs) / static_cast<double>(u128{m} * m);
      c.out.extras["M"] = m;
    }
    c.expect(lhs <= rhs, "rich-line bound fails at M=" + std::to_string(m));
  }
}

bool is_subgroup(const FpSet& g) {
  const u64 d = g.size();
  if (g.contains(0) || d == 0 || (g.modulus() - 1) % d != 0) return false;
  FamilySpec f;
  f.kind = FamilyKind::subgroup;
  f.order = d;
  return make_family(f, g.prime()) == g;
}

// |Γ ∩ (Γ+x_1) ∩ ... ∩ (Γ+x_k)| = |Γ|^{k+1}/(p-1)^k + θ k 2^{k+3} √p, |θ| <= 1.
void subgroup_shift_theta(CheckContext& c) {
  const FpSet& g = c.set();
  if (!is_subgroup(g)) return c.skip("set is not a multiplicative subgroup");
  const Prime& p = c.prime();
  const int k = c.param("k", 1);
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be >= 1");
  std::vector<u32> shifts;
  if (c.inst.params.contains("shifts")) {
    shifts = c.inst.params.at("shifts").get<std::vector<u32>>();
  } else {
    SplitMix64 rng(c.inst.seed);
    while (shifts.size() < static_cast<std::size_t>(k)) {
      const u32 x = static_cast<u32>(1 + rng.below(p.value() - 1));
      if (std::find(shifts.begin(), shifts.end(), x) == shifts.end()) shifts.push_back(x);
    }
  }
  std::vector<u32> inter;
  for (u32 y : g.elements()) {
    bool in = true;
    for (u32 x : shifts) in = in && g.contains(p.sub(y, x));
    if (in) inter.push_back(y);
  }
  const double n = static_cast<double>(g.size());
  const double main = std::pow(n, k + 1) / std::pow(static_cast<double>(p.value() - 1), k);
  const double scale = k * std::pow(2.0, k + 3) * std::sqrt(static_cast<double>(p.value()));
  const double theta = (static_cast<double>(inter.size()) - main) / scale;
  c.out.lhs = inter.size();
  c.out.rhs = main;
  c.out.implied_constant = theta;
  c.out.extras["theta"] = theta;
  c.out.extras["shifts"] = shifts;
  c.hypothesis("32k 2^{20k ln(k+1)} <= |G|",
               32.0 * k * std::pow(2.0, 20.0 * k * std::log(k + 1.0)) <= n);
  c.hypothesis("p >= 4k|G|(|G|^{1/(2k+1)} + 1)",
               static_cast<double>(p.value()) >= 4.0 * k * n * (std::pow(n, 1.0 / (2 * k + 1)) + 1));
  c.require_all_hypotheses();
  if (c.out.status == Status::skipped) return;
  c.expect(std::abs(theta) <= 1, "|theta| > 1");
}

Point2 random_point(const Prime& p, SplitMix64& rng) {
  return {static_cast<u32>(rng.below(p.value())), static_cast<u32>(rng.below(p.value()))};
}

void symplectic_identity(CheckContext& c) {
  const Prime& p = c.prime();
  SplitMix64 rng(c.inst.seed);
  const u64 count = c.param<u64>("quads", 200);
  u64 good = 0;
  for (u64 i = 0; i < count; ++i) {
    const Quad q{random_point(p, rng), random_point(p, rng), random_point(p, rng),
                 random_point(p, rng)};
    good += quad_identity(p, q).holds ? 1 : 0;
  }
  set_sides(c, good, count);
  c.expect(good == count, "t_ad t_bc = t_ac t_bd - t_ab t_cd fails");
}

void slope_cr(CheckContext& c) {
  const Prime& p = c.prime();
  SplitMix64 rng(c.inst.seed ^ 0x5bd1e995u);
  const u64 count = c.param<u64>("quads", 200);
  u64 good = 0, tested = 0;
  while (tested < count) {
    std::array<Point2, 4> pts;
    std::array<ProjPoint, 4> dirs{ProjPoint::infinity(), ProjPoint::infinity(),
                                  ProjPoint::infinity(), ProjPoint::infinity()};
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i) {
      pts[i] = random_point(p, rng);
      if (pts[i].x == 0 && pts[i].y == 0) {
        ok = false;
        break;
      }
      dirs[i] = direction(p, pts[i]);
      for (int j = 0; j < i; ++j) ok = ok && !(dirs[i] == dirs[j]);
    }
    if (!ok) continue;
    ++tested;
    good += slope_cross_ratio_check(p, {pts[0], pts[1], pts[2], pts[3]}) ? 1 : 0;
  }
  set_sides(c, good, count);
  c.expect(good == count, "slope cross-ratio identity fails");
}

FpSet one_minus(const FpSet& s) {
  const Prime& p = s.prime();
  std::vector<u32> out;
  for (u32 x : s.elements()) out.push_back(p.sub(1, x));
  return FpSet(p, std::move(out));
}

void ratio_symmetry(CheckContext& c) {
  const FpSet& a = c.set();
  if (a.size() < 3) return c.skip("needs |A| >= 3");
  const FpSet r = pinned_ratios(a, PinnedVariant::full, c.budget, 1);
  const FpSet strict = pinned_ratios(a, PinnedVariant::strict, c.budget, 1);
  set_sides(c, strict.size(), one_minus(strict).size());
  c.expect(one_minus(strict) == strict, "strict R is not closed under x -> 1-x");
  auto with = [&](const FpSet& s, std::initializer_list<u32> extra) {
    std::vector<u32> v(s.elements().begin(), s.elements().end());
    v.insert(v.end(), extra);
    return FpSet(s.prime(), std::move(v));
  };
  c.expect(r == with(strict, {1}), "R differs from strict R plus {1}");
  c.expect(!r.contains(0) && r.contains(1), "0 in R or 1 not in R");
  const RepFn t = t_fn(a, c.budget, 1);
  std::vector<u32> support;
  for (const auto& [x, k] : t.entries()) support.push_back(x);
  c.expect(FpSet(a.prime(), support) == with(strict, {0, 1}),
           "support of t differs from strict R plus {0,1}");
  c.out.extras["R"] = r.size();
  c.out.extras["R_strict"] = strict.size();
}

void cross_ratio_symmetry(CheckContext& c) {
  const FpSet& a = c.set();
  if (a.size() < 4) return c.skip("needs |A| >= 4");
  const FpSet cr = cross_ratio_set(a, c.budget);
  set_sides(c, cr.size(), one_minus(cr).size());
  c.expect(one_minus(cr) == cr, "C is not closed under x -> 1-x");
  c.expect(invert_elements(cr) == cr, "C is not closed under inversion");
  for (u32 x : a.elements()) {
    const FpSet r = pinned_ratios(inverted_shift(a, Elem{x}), PinnedVariant::strict, c.budget, 1);
    bool inside = true;
    for (u32 v : r.elements()) inside = inside && cr.contains(v);
    c.expect(inside, "strict R[(A-a)^-1] not inside C");
  }
  c.out.extras["C"] = cr.size();
}

void cr_energy_decomposition(CheckContext& c) {
  const FpSet& a = c.set();
  if (a.size() > 20) return c.skip("needs |A| <= 20");
  const auto e = cross_ratio_energies(a, a, c.budget);
  set_sides(c, e.e_c, e.decomposition);
  c.out.extras["E_R"] = e.e_r;
  c.expect(e.e_c == e.decomposition, "E_C differs from the sum of pinned energies");
}

void fourfold_closure(CheckContext& c) {
  const FpSet& a = c.set();
  c.budget.require(static_cast<long double>(a.modulus()) * a.modulus() * 2, "fourfold closure");
  const Coverage cov = fourfold_coverage(a, false, 0, c.budget);
  const FpSet full = fourfold_product(a);
  const bool whole = full.size() == a.modulus();
  set_sides(c, cov.covered_count, full.size());
  c.expect(cov.covered == whole, "early-exit coverage flag disagrees");
  c.expect(cov.covered_count == full.size(), "early-exit coverage size disagrees");
}

void sumset_bounds(CheckContext& c) {
  const FpSet& a = c.set();
  const u64 n = a.size();
  const u64 s = combine(a, a, SetOp::sum).size();
  set_sides(c, s, u128{n} * n);
  c.expect(s <= n * n && s >= n, "|A+A| outside [|A|, |A|^2]");
}

}  // namespace

std::vector<CheckEntry> exact_checks() {
  return {
      {"line_moment_1", Tier::exact, "sum of i(l) = (p+1)|A|^2", line_moment_1},
      {"line_moment_2", Tier::exact, "sum of i(l)^2 = |A|^4 + p|A|^2", line_moment_2},
      {"line_moment_dev", Tier::exact, "sum of (i(l) - |A|^2/p)^2 <= p|A|^2", line_moment_dev},
      {"t_total", Tier::exact, "sum of t = |A|^2(|A|-1)", t_total},
      {"q_total", Tier::exact, "sum of q = |A|^3(|A|-1)", q_total},
      {"t_symmetry", Tier::exact, "t(x) = t(1-x)", t_symmetry},
      {"q_symmetry", Tier::exact, "q(x,y) = q(1-x,1-y)", q_symmetry},
      {"triples_methods", Tier::exact, "all T(A) counters agree", triples_methods},
      {"quads_methods", Tier::exact, "all Q(A) counters agree", quads_methods},
      {"triples_residual", Tier::exact, "|T - sum t^2 - |A|^4| <= 3|A|^4", triples_residual},
      {"quads_residual", Tier::exact, "|Q - sum q^2 - |A|^5| <= T + 2|A|^5", quads_residual},
      {"plunnecke", Tier::exact, "|kA-lA| <= |A+A|^{k+l}/|A|^{k+l-1}", plunnecke},
      {"csest", Tier::exact, "|A+A|, |A-A| >= |A|^4/E(A)", csest},
      {"shsh_chain", Tier::exact, "E(A,A op A) >= popular difference sum", shsh_chain},
      {"shsh_difs", Tier::exact, "E(A,A-A) >= |A|^8/(|A-A| E_3(A))", shsh_difs},
      {"holder", Tier::exact, "E <= E_3^{1/3} E_{3/2}^{2/3}", holder},
      {"rich_line_hard", Tier::exact, "|L_M| <= 4p|A|^2/M^2", rich_line_hard},
      {"subgroup_shift_theta", Tier::exact, "subgroup shift intersection with |theta| <= 1",
       subgroup_shift_theta},
      {"symplectic_identity", Tier::exact, "t_ad t_bc = t_ac t_bd - t_ab t_cd", symplectic_identity},
      {"slope_cr", Tier::exact, "t_ab t_cd/(t_ac t_bd) = slope cross-ratio", slope_cr},
      {"ratio_symmetry", Tier::exact, "strict R = 1 - strict R", ratio_symmetry},
      {"cross_ratio_symmetry", Tier::exact, "C = 1 - C = 1/C", cross_ratio_symmetry},
      {"cr_energy_decomposition", Tier::exact, "E_C = sum of pinned ratio energies",
       cr_energy_decomposition},
      {"fourfold_closure", Tier::exact, "early-exit (A-A)^4 equals the full product",
       fourfold_closure},
      {"sumset_bounds", Tier::exact, "|A| <= |A+A| <= |A|^2", sumset_bounds},
  };
}

}  // namespace sumprod::detail
