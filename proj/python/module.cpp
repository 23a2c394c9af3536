#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bihilb/combinatorics.hpp"
#include "bihilb/errors.hpp"
#include "bihilb/experiments.hpp"
#include "bihilb/hilbert.hpp"
#include "bihilb/oracle/koszul.hpp"
#include "bihilb/oracle/saturation.hpp"
#include "bihilb/render.hpp"

namespace py = pybind11;
using namespace bihilb;

namespace {

py::object to_py(const BigInt& v) {
  const std::string s = v.str();
  return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

Window window_of(const std::vector<std::int64_t>& w) {
  if (w.size() != 4) throw std::invalid_argument("window must be (lo_a, lo_b, hi_a, hi_b)");
  return Window{{w[0], w[1]}, {w[2], w[3]}};
}

RegionSpec spec_of(int n, int m, std::int64_t d, std::int64_t e) { return RegionSpec(Shape(n, m), {d, e}); }

py::dict result_dict(const HFResult& r) {
  py::dict out;
  out["status"] = r.known() ? "known" : "instance";
  out["value"] = r.known() ? to_py(r.value) : py::none();
  out["rule"] = r.known() ? to_string(r.rule) : "-";
  return out;
}

std::vector<std::vector<std::int64_t>> grid_rows(const IntGrid& g) {
  // rows[b - lo.b][a - lo.a]
  std::vector<std::vector<std::int64_t>> rows(g.window.height(), std::vector<std::int64_t>(g.window.width()));
  for (const auto& mu : g.window.points()) rows[mu.b - g.window.lo.b][mu.a - g.window.lo.a] = g[mu];
  return rows;
}

}  // namespace

PYBIND11_MODULE(_bihilb, m) {
  m.doc() = "Bigraded Hilbert functions of complete-intersection points";

  py::register_exception<Error>(m, "BihilbError", PyExc_RuntimeError);
  py::register_exception<NotCompleteIntersection>(m, "NotCompleteIntersection", PyExc_RuntimeError);
  py::register_exception<PaddingExhausted>(m, "PaddingExhausted", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("binom", [](std::int64_t t, std::int64_t k) { return to_py(binom(t, k)); });
  m.def("dim_s", [](int n, int mm, std::int64_t a, std::int64_t b) { return to_py(dim_s(Shape(n, mm), {a, b})); });
  m.def(
      "chi",
      [](int n, int mm, std::int64_t d, std::int64_t e, std::int64_t a, std::int64_t b) {
        return to_py(chi_equal(Shape(n, mm), {d, e}, {a, b}));
      },
      py::arg("n"), py::arg("m"), py::arg("d"), py::arg("e"), py::arg("a"), py::arg("b"));
  m.def("degree", [](int n, int mm, const std::vector<std::pair<std::int64_t, std::int64_t>>& degrees) {
    DegreeList list;
    for (auto [d, e] : degrees) list.push_back({d, e});
    return to_py(degree_ci(Shape(n, mm), list));
  });
  m.def("epsilon", [](int n, int mm, std::int64_t d, std::int64_t e, std::int64_t a, std::int64_t b) {
    return to_py(epsilon(Shape(n, mm), {d, e}, {a, b}));
  });

  m.def("sigma", [](int n, int mm, std::int64_t d, std::int64_t e) {
    const auto s = sigma(spec_of(n, mm, d, e));
    return std::make_pair(s.a, s.b);
  });
  m.def("classify", [](int n, int mm, std::int64_t d, std::int64_t e, std::int64_t a, std::int64_t b) {
    const auto c = classify(spec_of(n, mm, d, e), {a, b});
    py::dict out;
    out["gamma0"] = c.in_gamma0;
    out["gamma_pos"] = c.in_gamma_pos;
    out["gamma_minus1"] = c.in_gamma_neg1;
    out["memberships"] = c.memberships;
    out["verdict"] = to_string(c.verdict);
    return out;
  });
  m.def("hilbert", [](int n, int mm, std::int64_t d, std::int64_t e, std::int64_t a, std::int64_t b) {
    return result_dict(hf_ci_points(spec_of(n, mm, d, e), {a, b}));
  });
  m.def("table_csv", [](int n, int mm, std::int64_t d, std::int64_t e, const std::vector<std::int64_t>& window) {
    return render_table(hf_table(spec_of(n, mm, d, e), window_of(window)), Format::Csv, false);
  });
  m.def("guaranteed_corners", [](int n, int mm, std::int64_t d, std::int64_t e) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    const Staircase s = guaranteed_corners(spec_of(n, mm, d, e));
    for (const auto& c : s.corners()) out.emplace_back(c.a, c.b);
    return out;
  });
  m.def("dim_iv_mod_i", [](int n, int mm, std::int64_t d, std::int64_t e, std::int64_t a, std::int64_t b) {
    return result_dict(dim_iv_mod_i(spec_of(n, mm, d, e), {a, b}));
  });

  py::class_<oracle::Instance>(m, "Instance")
      .def_property_readonly("n", [](const oracle::Instance& i) { return i.shape.n; })
      .def_property_readonly("m", [](const oracle::Instance& i) { return i.shape.m; })
      .def_property_readonly("prime", [](const oracle::Instance& i) { return i.field.modulus(); })
      .def_property_readonly("term_counts",
                             [](const oracle::Instance& i) {
                               std::vector<std::size_t> out;
                               for (const auto& f : i.forms) out.push_back(f.terms.size());
                               return out;
                             })
      .def("to_json", [](const oracle::Instance& i) { return oracle::serialize_instance(i); })
      .def("__eq__", [](const oracle::Instance& x, const oracle::Instance& y) { return x == y; });

  m.def("parse_instance", [](const std::string& text) { return oracle::parse_instance(text); });
  m.def(
      "random_instance",
      [](int n, int mm, std::int64_t d, std::int64_t e, std::uint64_t prime, std::uint64_t seed) {
        return oracle::random_instance(Shape(n, mm), {d, e}, oracle::PrimeField(prime), seed);
      },
      py::arg("n"), py::arg("m"), py::arg("d"), py::arg("e"), py::arg("prime"), py::arg("seed"));
  m.def("diagonal_example", [](std::uint64_t prime) { return oracle::diagonal_example(oracle::PrimeField(prime)); });

  m.def(
      "hf_v",
      [](const oracle::Instance& inst, const std::vector<std::int64_t>& window) {
        py::gil_scoped_release release;
        return grid_rows(oracle::hf_v_oracle(inst, window_of(window)));
      },
      "HF_V over a window as rows indexed [b - lo_b][a - lo_a]");
  m.def("hf_si", [](const oracle::Instance& inst, std::int64_t a, std::int64_t b) {
    return oracle::hf_si_oracle(inst, {a, b});
  });
  m.def("koszul_homology", [](const oracle::Instance& inst, std::int64_t i, std::int64_t a, std::int64_t b) {
    return oracle::koszul_homology_dim(inst, i, {a, b});
  });

  m.def("verify", [](const oracle::Instance& inst, std::int64_t d, std::int64_t e,
                     const std::vector<std::int64_t>& window) {
    const RegionSpec spec(inst.shape, {d, e});
    VerifyReport r = [&] {
      py::gil_scoped_release release;
      return verify_formula_vs_oracle(spec, window_of(window), inst, "python");
    }();
    py::dict out;
    out["compared"] = r.compared;
    out["matched"] = r.matched;
    out["mismatches"] = r.mismatches.size();
    out["informational"] = r.informational.size();
    return out;
  });
  m.def("generic_profile", [](int n, int mm, std::int64_t d, std::int64_t e, std::uint64_t prime,
                              std::uint64_t seed, std::int64_t bound) {
    GenericReport r = [&] {
      py::gil_scoped_release release;
      return generic_projection_experiment(Shape(n, mm), {d, e}, prime, seed, bound);
    }();
    py::dict out;
    out["profile_x"] = r.profile_x;
    out["profile_y"] = r.profile_y;
    out["stable_x"] = r.stable_x ? py::object(py::int_(*r.stable_x)) : py::none();
    out["stable_y"] = r.stable_y ? py::object(py::int_(*r.stable_y)) : py::none();
    out["generic"] = r.generic();
    return out;
  });
}
