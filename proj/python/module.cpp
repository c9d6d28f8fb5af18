#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sumprod/crossratio.hpp"
#include "sumprod/errors.hpp"
#include "sumprod/experiments.hpp"
#include "sumprod/incidence.hpp"
#include "sumprod/repfn.hpp"
#include "sumprod/symplectic.hpp"
#include "sumprod/triples.hpp"
#include "sumprod/verify.hpp"

namespace py = pybind11;
using namespace sumprod;

namespace {

FpSet to_set(u64 p, const std::vector<u32>& a) { return FpSet(Prime(p), a); }

std::vector<u32> from_set(const FpSet& s) { return {s.elements().begin(), s.elements().end()}; }

Budget budget_of(std::optional<u64> ops) { return ops ? Budget::ops(*ops) : Budget{}; }

py::object big(u128 v) { return py::int_(py::str(to_decimal(v))); }

}  // namespace

PYBIND11_MODULE(_sumprod, m) {
  m.doc() = "Sum-product quantities over prime fields";

  static py::exception<Error> exc(m, "SumprodError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = exc;
      py::object inst = err(e.what());
      inst.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(exc.ptr(), inst.ptr());
    }
  });

  m.def("is_prime", &is_prime);

  m.def(
      "make_family",
      [](u64 p, const std::string& kind, u64 size, u64 order, std::int64_t start,
         std::int64_t step, std::vector<u32> elements, u64 seed) {
        FamilySpec f;
        f.kind = parse_family_kind(kind);
        f.size = size;
        f.order = order;
        f.start = start;
        f.step = step;
        f.elements = std::move(elements);
        f.seed = seed;
        return from_set(make_family(f, Prime(p)));
      },
      py::arg("p"), py::arg("kind"), py::arg("size") = 0, py::arg("order") = 0,
      py::arg("start") = 0, py::arg("step") = 1, py::arg("elements") = std::vector<u32>{},
      py::arg("seed") = 0);

  m.def(
      "combine",
      [](u64 p, const std::vector<u32>& a, const std::vector<u32>& b, const std::string& op) {
        return from_set(combine(to_set(p, a), to_set(p, b), parse_set_op(op)));
      },
      py::arg("p"), py::arg("a"), py::arg("b"), py::arg("op"));

  m.def(
      "eval_expr",
      [](u64 p, const std::vector<u32>& a, const std::string& expr) {
        return from_set(eval_expr(SetExpr::parse(expr), to_set(p, a)));
      },
      py::arg("p"), py::arg("a"), py::arg("expr"));

  m.def(
      "energy",
      [](u64 p, const std::vector<u32>& a, const std::vector<u32>& b, const std::string& kind,
         int order) {
        if (kind != "additive" && kind != "multiplicative") {
          throw Error(ErrorKind::InvalidArgument, "kind is additive or multiplicative");
        }
        return energy(to_set(p, a), to_set(p, b),
                      kind == "additive" ? EnergyKind::additive : EnergyKind::multiplicative, order);
      },
      py::arg("p"), py::arg("a"), py::arg("b"), py::arg("kind") = "additive",
      py::arg("order") = 2);

  m.def(
      "incidence_histogram",
      [](u64 p, const std::vector<u32>& a) {
        const auto h = incidence_histogram(to_set(p, a));
        return std::vector<u64>(h.counts().begin(), h.counts().end());
      },
      py::arg("p"), py::arg("a"));

  m.def(
      "t_fn",
      [](u64 p, const std::vector<u32>& a) {
        std::map<u32, u64> out;
        const RepFn t = t_fn(to_set(p, a));
        for (const auto& [x, c] : t.entries()) out[x] = c;
        return out;
      },
      py::arg("p"), py::arg("a"));

  m.def(
      "collinear_triples",
      [](u64 p, const std::vector<u32>& a, const std::string& method, std::optional<u64> ops) {
        return count_collinear_triples(to_set(p, a), parse_count_method(method), budget_of(ops));
      },
      py::arg("p"), py::arg("a"), py::arg("method") = "ratio", py::arg("budget") = py::none());

  m.def(
      "collinear_quadruples",
      [](u64 p, const std::vector<u32>& a, const std::string& method, std::optional<u64> ops) {
        return count_collinear_quadruples(to_set(p, a), parse_count_method(method),
                                          budget_of(ops));
      },
      py::arg("p"), py::arg("a"), py::arg("method") = "ratio", py::arg("budget") = py::none());

  m.def(
      "pinned_ratios",
      [](u64 p, const std::vector<u32>& a, bool strict) {
        return from_set(
            pinned_ratios(to_set(p, a), strict ? PinnedVariant::strict : PinnedVariant::full));
      },
      py::arg("p"), py::arg("a"), py::arg("strict") = false);

  m.def(
      "cross_ratio_set",
      [](u64 p, const std::vector<u32>& a) { return from_set(cross_ratio_set(to_set(p, a))); },
      py::arg("p"), py::arg("a"));

  m.def(
      "cross_ratio_energy",
      [](u64 p, const std::vector<u32>& a) { return cross_ratio_energy(to_set(p, a)); },
      py::arg("p"), py::arg("a"));

  m.def(
      "pinned_ratio_energy",
      [](u64 p, const std::vector<u32>& a, const std::vector<u32>& b) {
        return pinned_ratio_energy(to_set(p, a), to_set(p, b));
      },
      py::arg("p"), py::arg("a"), py::arg("b"));

  m.def(
      "omega_set",
      [](u64 p, const std::vector<std::pair<u32, u32>>& pts) {
        std::vector<Point2> v;
        for (auto [x, y] : pts) v.push_back({x, y});
        return from_set(omega_set(PointSet2D(Prime(p), std::move(v))));
      },
      py::arg("p"), py::arg("points"));

  m.def(
      "quad_identity",
      [](u64 p, std::pair<u32, u32> a, std::pair<u32, u32> b, std::pair<u32, u32> c,
         std::pair<u32, u32> d) {
        const QuadIdentity q = quad_identity(
            Prime(p), {{a.first, a.second}, {b.first, b.second}, {c.first, c.second}, {d.first, d.second}});
        py::dict out;
        out["lhs"] = q.lhs;
        out["rhs"] = q.rhs;
        out["expanded"] = q.expanded;
        out["holds"] = q.holds;
        return out;
      },
      py::arg("p"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"));

  m.def(
      "teq_counts",
      [](u64 p, const std::vector<u32>& t) {
        const TeqCounts r = count_teq_solutions(to_set(p, t));
        py::dict out;
        out["n6"] = r.n6;
        out["second_moment"] = big(r.second_moment);
        out["max_pointwise"] = r.max_pointwise;
        return out;
      },
      py::arg("p"), py::arg("t"));

  m.def(
      "fourfold_coverage",
      [](u64 p, const std::vector<u32>& a) {
        const Coverage c = fourfold_coverage(to_set(p, a));
        py::dict out;
        out["covered"] = c.covered;
        out["fraction"] = c.fraction;
        out["covered_count"] = c.covered_count;
        out["steps"] = c.steps;
        return out;
      },
      py::arg("p"), py::arg("a"));

  // JSON-shaped results cross the boundary as text; the Python wrapper
  // decodes them.
  m.def("_check_registry", [] {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : check_registry())
      j.push_back({{"id", c.id}, {"tier", to_string(c.tier)}, {"summary", c.summary}});
    return j.dump();
  });

  m.def(
      "_run_check",
      [](const std::string& id, u64 p, const std::vector<u32>& a, const std::string& params,
         u64 seed) {
        CheckInstance inst{"python", to_set(p, a), nlohmann::json::parse(params), seed};
        py::gil_scoped_release release;
        return to_json(run_check(id, inst)).dump();
      },
      py::arg("id"), py::arg("p"), py::arg("a"), py::arg("params") = "{}", py::arg("seed") = 0);

  m.def(
      "_run_sweep",
      [](const std::string& spec, int jobs) {
        const ExperimentSpec s = ExperimentSpec::from_json(nlohmann::json::parse(spec));
        py::gil_scoped_release release;
        return to_json_text(run_sweep(s, jobs));
      },
      py::arg("spec"), py::arg("jobs") = 1);

  m.def("eval_size_expr", &eval_size_expr, py::arg("expr"), py::arg("p"));
}
