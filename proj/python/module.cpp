#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bentlab/carry.hpp"
#include "bentlab/carry_graph.hpp"
#include "bentlab/classify.hpp"
#include "bentlab/cyclotomy.hpp"
#include "bentlab/families.hpp"
#include "bentlab/field.hpp"
#include "bentlab/walsh.hpp"

namespace py = pybind11;
using namespace bentlab;

namespace {

py::list spectrum_pairs(const WalshSpectrum& spec) {
    py::list out;
    for (const auto& z : spec.coeffs) out.append(py::make_tuple(z.x, z.y));
    return out;
}

py::dict classify_dict(const WalshSpectrum& spec) {
    auto direct = classify_direct(spec);
    auto [hou, report] = classify_hou(spec);
    py::dict d;
    d["is_bent"] = direct.is_bent;
    d["is_weakly_regular"] = direct.is_weakly_regular;
    d["is_regular"] = direct.is_regular;
    d["routes_agree"] = direct.is_bent == hou.is_bent &&
                        direct.is_weakly_regular == hou.is_weakly_regular;
    d["nu_lambda_S0"] = report.lambda_val_zero;
    if (direct.is_weakly_regular) {
        d["sign"] = direct.sigma;
        d["dual"] = std::vector<int>(direct.dual->values.begin(), direct.dual->values.end());
    } else {
        d["sign"] = py::none();
        d["dual"] = py::none();
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Walsh spectra, bent-function classification, and carry "
              "machinery over small ternary fields";

    py::class_<FieldCtx, std::shared_ptr<FieldCtx>>(m, "Field")
        .def_property_readonly("p", &FieldCtx::p)
        .def_property_readonly("n", &FieldCtx::n)
        .def_property_readonly("q", &FieldCtx::q)
        .def_property_readonly("modulus", [](const FieldCtx& c) { return c.modulus(); })
        .def("add", &FieldCtx::add)
        .def("neg", &FieldCtx::neg)
        .def("mul", &FieldCtx::mul)
        .def("inv", &FieldCtx::inv)
        .def("pow", &FieldCtx::pow)
        .def("element_from_log", &FieldCtx::element_from_log)
        .def("discrete_log", &FieldCtx::discrete_log)
        .def("trace", &FieldCtx::trace_abs)
        .def("trace_rel", &FieldCtx::trace_rel)
        .def("subfield_trace", &FieldCtx::subfield_trace)
        .def("fiber_profile",
             [](const FieldCtx& c, long long d) {
                 py::dict out;
                 for (auto [size, count] : c.fiber_profile(d)) out[py::int_(size)] = count;
                 return out;
             })
        .def("dump_line", &FieldCtx::dump_line);

    m.def("build_field",
          [](int p, int n) { return std::const_pointer_cast<FieldCtx>(FieldCtx::build(p, n)); },
          py::arg("p"), py::arg("n"));

    m.def("monomial_table",
          [](const FieldCtx& ctx, long long a_index, long long d) {
              auto f = families::monomial_table(a_index, d, ctx);
              return std::vector<int>(f.values.begin(), f.values.end());
          },
          py::arg("field"), py::arg("a_index"), py::arg("d"));

    m.def("walsh_spectrum",
          [](const FieldCtx& ctx, const std::vector<int>& values) {
              FunctionTable f{ctx.n(), {values.begin(), values.end()}};
              return spectrum_pairs(walsh_spectrum(f, ctx));
          },
          py::arg("field"), py::arg("values"));

    m.def("classify",
          [](const FieldCtx& ctx, const std::vector<int>& values) {
              FunctionTable f{ctx.n(), {values.begin(), values.end()}};
              return classify_dict(walsh_spectrum(f, ctx));
          },
          py::arg("field"), py::arg("values"));

    m.def("is_planar",
          [](const FieldCtx& ctx, const std::vector<long long>& table) {
              return is_planar(table, ctx);
          },
          py::arg("field"), py::arg("table"));

    m.def("monomial_degree", &monomial_degree, py::arg("d"), py::arg("n"));

    m.def("weight", &carry::weight, py::arg("a"), py::arg("p"), py::arg("n"));

    m.def("awc_solve",
          [](int p, int n, const std::vector<int>& coeffs,
             const std::vector<long long>& addends) {
              auto sol = carry::awc_solve({p, n, coeffs, addends});
              py::dict out;
              out["s_digits"] = sol.s.digits;
              out["s_value"] = sol.s.value();
              out["carries"] = sol.carries;
              return out;
          },
          py::arg("p"), py::arg("n"), py::arg("coeffs"), py::arg("addends"));

    m.def("wtinequ_scan",
          [](int k) {
              auto scan = carry::wtinequ_scan(k);
              py::dict out;
              out["min_lhs"] = scan.min_lhs1;
              out["min_lhs_second_form"] = scan.min_lhs2;
              out["argmin"] = scan.argmin1;
              out["multisets_equal"] = scan.multisets_equal;
              return out;
          },
          py::arg("k"));

    m.def("genwi_check", &carry::genwi_check, py::arg("a"), py::arg("b"), py::arg("k"));

    m.def("carry_graph_prove", [] {
        CarryGraph g;
        auto [max_w, ok] = g.verify_arcs_nonpositive();
        py::dict out;
        out["vertices"] = CarryGraph::kVertexCount;
        out["arcs"] = g.arcs().size();
        out["max_arc_weight"] = max_w;
        out["all_nonpositive"] = ok;
        return out;
    });

    m.def("periods",
          [](int p, int n, long long e) {
              auto ctx = FieldCtx::build(p, n);
              CyclotomyCtx cyc(ctx, e);
              py::list out;
              for (const auto& eta : cyc.periods_direct()) {
                  py::list coeffs;
                  for (const auto& c : eta.coeffs()) coeffs.append(c.str());
                  out.append(coeffs);
              }
              return out;
          },
          py::arg("p"), py::arg("n"), py::arg("e") = 4);

    m.def("uniform_periods_predict", &uniform_periods_predict, py::arg("p"), py::arg("n"),
          py::arg("e") = 4);

    m.attr("__version__") = "0.1.0";
}
