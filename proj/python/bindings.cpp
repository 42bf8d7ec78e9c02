#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trig/accept.hpp"
#include "trig/jsonio.hpp"
#include "trig/parse.hpp"

namespace py = pybind11;
using namespace trig;

namespace {

py::object json_to_py(const Json& j) {
    py::module_ pyjson = py::module_::import("json");
    return pyjson.attr("loads")(j.dump());
}

py::dict picard_dict(long g) {
    PicardGroup p = picard_group(g);
    py::dict d;
    d["g"] = g;
    d["free_rank"] = p.free_rank;
    py::list torsion;
    for (const Int& t : p.torsion) torsion.append(t.get_si());
    d["torsion"] = torsion;
    d["a"] = p.coords.a.get_si();
    d["b"] = p.coords.b.get_si();
    d["group"] = group_string(p.free_rank, p.torsion);
    return d;
}

} // namespace

PYBIND11_MODULE(_trig, m) {
    m.doc() = "exact computations for triple covers of the line";

    m.def("picard_group", &picard_dict, py::arg("g"),
          "Picard group of the stack of trigonal curves of genus g >= 2");

    m.def(
        "picard_table",
        [](long from, long to) {
            py::list rows;
            for (const auto& r : picard_table(from, to)) {
                py::dict d;
                d["g"] = r.g;
                d["a"] = r.a.get_si();
                d["b"] = r.b.get_si();
                d["group"] = group_string(r.free_rank, r.torsion);
                rows.append(d);
            }
            return rows;
        },
        py::arg("from_g") = 2, py::arg("to_g") = 200);

    m.def("class_w", [] { return class_of_W().final_class.str(); },
          "class of the singular locus upstairs, as a string");

    m.def("class_y_symbolic", [] {
        auto y = class_of_Y();
        py::dict d;
        d["delta1"] = to_string(y.y.delta1, "g");
        d["gamma1"] = to_string(y.y.gamma1, "g");
        d["sigma1"] = to_string(y.y.sigma1, "g");
        d["restriction_check"] = to_string(restriction_to_gm(y.y), "g");
        return d;
    });

    m.def(
        "in_w",
        [](const std::string& f, const std::string& g) {
            auto ff = parse_form_q(f, "x1", "x2", 3);
            auto gg = parse_form_q(g, "x1", "x2", 3);
            return json_to_py(
                singular_verdict_json(in_W(DualCubic<Rat>(ff, gg))));
        },
        py::arg("f"), py::arg("g") = "0",
        "first-order singularity test for f + eps g over Q");

    m.def(
        "cubic_algebra",
        [](const std::string& f) {
            auto ff = parse_form_q(f, "x1", "x2", 3);
            Json j = algebra_json(form_to_algebra(ff));
            j["fiber_type"] = to_string(fiber_type(ff));
            j["discriminant"] = to_string(cubic_discriminant(ff));
            return json_to_py(j);
        },
        py::arg("cubic"));

    m.def(
        "cubic_from_algebra",
        [](const std::string& f) {
            auto ff = parse_form_q(f, "x1", "x2", 3);
            auto back = algebra_to_form(form_to_algebra(ff));
            return back == ff;
        },
        py::arg("cubic"), "roundtrip check through the cubic algebra");

    m.def(
        "genus_and_maroni",
        [](long m, long n) {
            auto info = genus_and_maroni(m, n);
            py::dict d;
            d["g"] = info.g;
            d["maroni"] = info.maroni;
            d["stratum_codim"] = info.stratum_codim;
            d["in_vhat"] = info.in_vhat;
            return d;
        },
        py::arg("m"), py::arg("n"));

    m.def("section_space_dim", &section_space_dim, py::arg("m"),
          py::arg("n"));

    m.def(
        "splitting_type",
        [](const std::string& matrix_json) {
            auto l = matrix_from_json_q(Json::parse(matrix_json));
            return splitting_type(l);
        },
        py::arg("matrix_json"),
        "splitting type from the matrix JSON schema, over Q");

    m.def(
        "degeneracy_check",
        [](const std::string& matrix_json) {
            auto l = matrix_from_json_q(Json::parse(matrix_json));
            return degeneracy_check(l);
        },
        py::arg("matrix_json"));

    m.def(
        "smooth_check",
        [](const std::string& datum_json) {
            auto d = datum_from_json_q(Json::parse(datum_json));
            return json_to_py(smooth_verdict_json(smooth_check(d)));
        },
        py::arg("datum_json"));

    m.def(
        "codim_probe",
        [](int r, int d, std::uint64_t p, long trials, std::uint64_t seed,
           bool exhaustive) {
            return json_to_py(
                probe_json(codim_probe(r, d, p, trials, seed, exhaustive)));
        },
        py::arg("r"), py::arg("d"), py::arg("p"), py::arg("trials") = 1000,
        py::arg("seed") = 0, py::arg("exhaustive") = false);

    m.def(
        "verify",
        [](const std::string& only) {
            py::list out;
            for (const auto& r : accept::run_all(only)) {
                py::dict d;
                d["id"] = r.id;
                d["pass"] = r.pass;
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("only") = "",
        "run the acceptance checks (empty filter = all)");
}
