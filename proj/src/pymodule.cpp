#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ses/census.hpp"
#include "ses/constructions.hpp"
#include "ses/io.hpp"

namespace py = pybind11;
using namespace ses;

namespace {

FormFamily family_from(const std::string& name) {
    if (name == "irreducible") return FormFamily::Irreducible;
    if (name == "primary") return FormFamily::PrimaryNoLinearBase;
    if (name == "all") return FormFamily::All;
    throw InvalidInput("unknown form family: " + name);
}

py::dict report_to_dict(const ClassCountReport& r) {
    py::dict d;
    d["p"] = r.p;
    d["order_exponent"] = r.order_exponent;
    d["closed_form"] = r.closed_form;
    d["brute_force"] = r.brute_force;
    py::list strata;
    for (const auto& s : r.breakdown)
        strata.append(py::make_tuple(s.label, s.count));
    d["breakdown"] = std::move(strata);
    return d;
}

py::dict analyze(const AltPencil& P) {
    py::dict d;
    d["p"] = P.F.p();
    d["dimV"] = P.dimV;
    d["dimW"] = P.dimW;
    d["pfaffian"] = form_to_string(pfaffian(P));
    d["ses_direct"] = is_ses_direct(P);
    d["ses_pfaffian"] = is_ses_pfaffian(P);
    CentroidBasis C = centroid(P);
    d["centroid_dim"] = C.dim();
    bool field = centroid_is_field(P, C);
    d["centroid_is_field"] = field;
    if (field && P.dimW % C.dim() == 0) d["genus"] = P.dimW / C.dim();
    return d;
}

}  // namespace

PYBIND11_MODULE(_sespencils, m) {
    m.doc() = "alternating bimap pencils, binary-form orbits and"
              " semi-extraspecial class counts";

    m.def("n_closed", &N_closed, py::arg("p"), py::arg("n"),
          "closed form for the GammaL(2,p)-orbit count on irreducible"
          " degree-n ideals, n in 1..5");
    m.def("i_indecomposable", &I_indecomposable, py::arg("p"), py::arg("n"),
          "centrally indecomposable classes of order p^(2n+2), n in 2..5");
    m.def("h_genus1", &H_genus1, py::arg("q"), py::arg("n_plus_1"),
          "genus-1 count over F_q of order q^(n+1)");
    m.def("classes_closed", &classes_closed, py::arg("p"),
          py::arg("order_exponent"),
          "closed-form isoclinism class count for orders p^6..p^12");
    m.def(
        "classes_bruteforce",
        [](std::uint64_t p, unsigned e) {
            return report_to_dict(classes_bruteforce(p, e));
        },
        py::arg("p"), py::arg("order_exponent"),
        "independent enumeration; raises if it disagrees with the closed form");

    m.def(
        "count_orbits",
        [](std::uint64_t p, unsigned n, const std::string& family) {
            return count_orbits(FieldSpec::prime(p), n, family_from(family));
        },
        py::arg("p"), py::arg("n"), py::arg("family") = "irreducible",
        "GammaL(2,p)-orbit count on a family of degree-n form ideals");
    m.def(
        "stabilizer_order",
        [](std::uint64_t p, const std::string& poly) {
            FieldSpec F = FieldSpec::prime(p);
            return stabilizer_gl(FormIdeal::from_poly(parse_poly(poly, F, false), F),
                                 F)
                .size();
        },
        py::arg("p"), py::arg("poly"),
        "order of the GL(2,p) stabilizer of the ideal of a polynomial");
    m.def(
        "dihedral_census",
        [](std::uint64_t p) {
            DihedralCensus dc = dihedral_census(p);
            return py::make_tuple(dc.delta_size, dc.orbit_count);
        },
        py::arg("p"),
        "(number of maximal dihedral subgroups, conjugation orbit count)");
    m.def("sylow3_bijection_check", &sylow3_bijection_check, py::arg("p"),
          "cyclic Sylow-3-normalizer vs quadratic-ideal bijection, p = 2 mod 3");

    m.def("decomposable_pair_orbits", &decomposable_pair_orbits, py::arg("p"),
          py::arg("shape"), "orbit count of quad+quad or quad+cubic pairs");
    m.def("decomposable_pair_closed", &decomposable_pair_closed, py::arg("p"),
          py::arg("shape"));

    m.def(
        "analyze_pencil",
        [](const std::string& path) { return analyze(load_pencil(path)); },
        py::arg("path"),
        "Pfaffian, semi-extraspecial checks, centroid and genus of a pencil file");
    m.def(
        "companion_pencil_json",
        [](std::uint64_t p, const std::string& poly, unsigned c) {
            FieldSpec F = FieldSpec::prime(p);
            return pencil_to_json(companion_pencil(parse_poly(poly, F, false), c, F))
                .dump(2);
        },
        py::arg("p"), py::arg("poly"), py::arg("c") = 1,
        "JSON for the doubled companion pencil of poly^c");
}
