#include "ilab/cone.hpp"
#include "ilab/dsl.hpp"
#include "ilab/level.hpp"
#include "ilab/models.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ilab;

namespace {

py::object fraction(const Rational& r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(r.str());
}

py::list fractions(const RationalVector& v) {
    py::list out;
    for (const auto& x : v) out.append(fraction(x));
    return out;
}

// Accepts int, Fraction or a "a/b" string.
Rational to_rational(const py::handle& h) { return Rational::parse(py::str(h).cast<std::string>()); }

RationalVector to_vector(const py::sequence& s) {
    RationalVector v;
    for (const auto& x : s) v.push_back(to_rational(x));
    return v;
}

std::vector<RationalVector> to_vectors(const py::sequence& s) {
    std::vector<RationalVector> out;
    for (const auto& x : s) out.push_back(to_vector(x.cast<py::sequence>()));
    return out;
}

ClassExpr class_of(const SpaceModel& s, const std::string& text) {
    return evaluate_expression(*parse_expression(text), s);
}

py::dict certificate(const MembershipCertificate& c) {
    py::dict d;
    d["inside"] = c.inside;
    d["coefficients"] = fractions(c.coefficients);
    d["separator"] = fractions(c.separator);
    return d;
}

py::dict report(const ScenarioReport& r) {
    py::list items;
    for (const auto& a : r.records) {
        py::dict d;
        d["file"] = a.pos.file;
        d["line"] = a.pos.line;
        d["col"] = a.pos.col;
        d["desc"] = a.desc;
        d["expected"] = a.expected;
        d["computed"] = a.computed;
        d["pass"] = a.pass;
        items.append(d);
    }
    py::dict out;
    out["scenario"] = r.scenario;
    out["assertions"] = items;
    out["passed"] = r.passed();
    out["failed"] = r.failed();
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    py::register_exception<Error>(m, "IntersectLabError", PyExc_ValueError);

    m.def("spaces", &builtin_space_names);

    m.def("integrate", [](const std::string& space, const std::string& expr) {
        const SpaceModel& s = builtin_space(space);
        return fraction(integrate(*s.algebra, class_of(s, expr)));
    }, py::arg("space"), py::arg("expr"));

    m.def("normal_form", [](const std::string& space, const std::string& expr) {
        const SpaceModel& s = builtin_space(space);
        return normal_form(*s.algebra, class_of(s, expr)).str();
    }, py::arg("space"), py::arg("expr"));

    m.def("pairing_table", [](const std::string& space, const std::vector<std::string>& rows,
                              const std::vector<std::string>& cols) {
        const SpaceModel& s = builtin_space(space);
        std::vector<ClassExpr> r, c;
        for (const auto& x : rows) r.push_back(class_of(s, x));
        for (const auto& x : cols) c.push_back(class_of(s, x));
        Matrix t = pairing_matrix(*s.algebra, r, c);
        py::list out;
        for (std::size_t i = 0; i < t.rows(); ++i) out.append(fractions(t.row(i)));
        return out;
    }, py::arg("space"), py::arg("rows"), py::arg("cols"));

    m.def("class_vector", [](const std::string& space, const std::string& expr) {
        const SpaceModel& s = builtin_space(space);
        return fractions(cone_coordinates(class_of(s, expr), s));
    }, py::arg("space"), py::arg("expr"));

    m.def("dual_cone", [](const py::sequence& rays, std::size_t dim) {
        std::vector<RationalVector> v = to_vectors(rays);
        py::list out;
        for (const auto& r : dual_cone(Cone::from_vectors(dim, v)).ray_vectors()) out.append(fractions(r));
        return out;
    }, py::arg("rays"), py::arg("dim"));

    m.def("membership", [](const py::sequence& rays, const py::sequence& v) {
        return certificate(membership(to_vectors(rays), to_vector(v)));
    }, py::arg("rays"), py::arg("vector"));

    m.def("is_extremal", [](const py::sequence& rays, std::size_t i) {
        return is_extremal_generator(to_vectors(rays), i).extremal;
    }, py::arg("rays"), py::arg("index"));

    m.def("unique_relation", [](const py::sequence& vectors) -> py::object {
        auto r = unique_relation(to_vectors(vectors));
        if (!r) return py::none();
        return fractions(*r);
    }, py::arg("vectors"));

    m.def("cusp_count", [](unsigned n) { return fraction(cusp_count(n)); }, py::arg("n"));

    m.def("group_order", [](const std::string& kind, unsigned n) {
        static const std::map<std::string, GroupKind> kinds{
            {"SL2", GroupKind::SL2}, {"G", GroupKind::G}, {"H", GroupKind::H}, {"SP_stab", GroupKind::SP_stab}};
        auto it = kinds.find(kind);
        if (it == kinds.end()) throw Error(ErrorKind::InvalidArgument, "unknown group '" + kind + "'");
        return py::int_(py::str(group_order(it->second, n).get_str()));
    }, py::arg("kind"), py::arg("n"));

    m.def("sp_pairing_row", [] {
        SpRow r = sp_pairing_row();
        py::dict d;
        d["L2"] = fraction(r.LL);
        d["LD"] = fraction(r.LD);
        d["D2"] = fraction(r.DD);
        d["LM"] = fraction(r.LM);
        d["M2"] = fraction(r.MM);
        d["beta2"] = fraction(r.beta2);
        return d;
    });

    m.def("check_scenario", [](const std::string& text, const std::string& file) {
        return report(check_text(text, file));
    }, py::arg("text"), py::arg("file") = "<input>");
}
