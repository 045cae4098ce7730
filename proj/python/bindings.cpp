#include "mdsgit/cli.hpp"
#include "mdsgit/error.hpp"
#include "mdsgit/gelmac.hpp"
#include "mdsgit/linalg.hpp"
#include "mdsgit/mori.hpp"
#include "mdsgit/toric.hpp"
#include "mdsgit/vgit.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace mdsgit;

namespace {

// Python ints are unbounded, so values travel through their decimal strings.
Integer to_integer(const py::handle& h) {
    if (!py::isinstance<py::int_>(h)) throw py::type_error("expected an int");
    Integer x;
    x.set_str(py::str(h).cast<std::string>(), 10);
    return x;
}

py::int_ to_py(const Integer& x) {
    if (x.fits_slong_p()) return py::int_(x.get_si());
    return py::int_(py::module_::import("builtins").attr("int")(x.get_str()));
}

IntVector to_vector(const py::handle& seq) {
    IntVector v;
    for (auto item : py::iter(seq)) v.push_back(to_integer(item));
    return v;
}

std::vector<IntVector> to_vectors(const py::handle& seq) {
    std::vector<IntVector> out;
    for (auto item : py::iter(seq)) out.push_back(to_vector(item));
    return out;
}

RatVector to_rational_vector(const py::handle& seq) {
    RatVector v;
    for (auto item : py::iter(seq)) {
        if (py::isinstance<py::int_>(item)) {
            v.emplace_back(to_integer(item));
        } else {
            // fractions.Fraction or anything with numerator/denominator
            Rational q(to_integer(item.attr("numerator")), to_integer(item.attr("denominator")));
            q.canonicalize();
            v.push_back(q);
        }
    }
    return v;
}

py::list to_py(const IntVector& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

py::list to_py(const std::vector<IntVector>& vs) {
    py::list out;
    for (const auto& v : vs) out.append(to_py(v));
    return out;
}

py::list to_py(const IntegerMatrix& m) {
    py::list out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.append(to_py(m.row(i)));
    return out;
}

IntegerMatrix to_matrix(const py::handle& rows) {
    auto vs = to_vectors(rows);
    const std::size_t cols = vs.empty() ? 0 : vs[0].size();
    for (const auto& v : vs)
        if (v.size() != cols) throw DimensionMismatch("matrix rows have different lengths");
    return IntegerMatrix::from_rows(vs, cols);
}

py::dict cone_dict(const Cone& c) {
    py::dict d;
    d["dim"] = c.ambient_dim();
    d["rays"] = to_py(c.rays());
    d["lineality"] = to_py(c.lineality());
    d["inequalities"] = to_py(c.facets());
    d["equations"] = to_py(c.equations());
    return d;
}

py::dict weights_dict(const WeightSystem& w) {
    py::dict d;
    d["rho"] = w.rho();
    d["columns"] = to_py(w.columns());
    py::list torsion;
    for (const auto& t : w.torsion()) torsion.append(to_py(t));
    d["torsion"] = torsion;
    return d;
}

WeightSystem to_weights(const py::handle& columns) {
    auto cols = to_vectors(columns);
    if (cols.empty()) throw ValidationError("no characters given");
    const std::size_t rho = cols[0].size();
    return WeightSystem(rho, std::move(cols));
}

Fan to_fan(const py::handle& rays, const py::handle& cones) {
    auto rs = to_vectors(rays);
    if (rs.empty()) throw ValidationError("no rays given");
    std::vector<IndexSet> cs;
    for (auto c : py::iter(cones)) cs.push_back(c.cast<IndexSet>());
    const std::size_t dim = rs[0].size();
    return Fan(dim, std::move(rs), std::move(cs));
}

py::dict fan_dict(const Fan& f) {
    py::dict d;
    d["dim"] = f.dim();
    d["rays"] = to_py(f.rays());
    d["cones"] = f.cones();
    return d;
}

py::dict crossing_dict(const WallCrossing& x) {
    py::dict d;
    d["wall"] = x.wall ? py::object(py::int_(*x.wall)) : py::object(py::none());
    d["boundary"] = x.boundary ? py::object(py::int_(*x.boundary)) : py::object(py::none());
    d["from"] = x.from;
    d["to"] = x.to ? py::object(py::int_(*x.to)) : py::object(py::none());
    d["kind"] = to_string(x.kind);
    d["rays_before"] = x.rays_before;
    d["rays_after"] = x.rays_after;
    d["picard_delta"] = x.picard_delta;
    d["divisor"] = x.divisor ? py::object(py::int_(*x.divisor)) : py::object(py::none());
    return d;
}

}  // namespace

PYBIND11_MODULE(_mdsgit, m) {
    m.doc() = "Exact GIT / Mori chamber decompositions of torus actions on affine space";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<DegenerateLinearization>(m, "DegenerateLinearization", base.ptr());
    py::register_exception<EmptySemistableLocus>(m, "EmptySemistableLocus", base.ptr());
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());

    m.def("smith_normal_form", [](const py::object& rows) {
        SmithForm s = smith_normal_form(to_matrix(rows));
        return py::make_tuple(to_py(s.d), to_py(s.u), to_py(s.v));
    }, py::arg("matrix"), "(d, u, v) with u * m * v = d");

    m.def("saturated_kernel_basis", [](const py::object& rows) {
        return to_py(saturated_kernel_basis(to_matrix(rows)));
    }, py::arg("matrix"));

    m.def("cone_from_generators", [](std::size_t dim, const py::object& gens) {
        auto vs = to_vectors(gens);
        return cone_dict(Cone::from_generators(dim, std::span<const IntVector>(vs)));
    }, py::arg("dim"), py::arg("generators"));

    m.def("dual", [](std::size_t dim, const py::object& gens) {
        auto vs = to_vectors(gens);
        return cone_dict(dual(Cone::from_generators(dim, std::span<const IntVector>(vs))));
    }, py::arg("dim"), py::arg("generators"), "Dual of the cone spanned by the generators");

    m.def("validate_fan", [](const py::object& rays, const py::object& cones) {
        FanReport r = validate_fan(to_fan(rays, cones));
        py::dict d;
        d["simplicial"] = r.simplicial;
        d["intersections_ok"] = r.intersections_ok;
        d["complete"] = r.complete;
        d["violations"] = r.violations;
        return d;
    }, py::arg("rays"), py::arg("cones"));

    m.def("cox_weights", [](const py::object& rays, const py::object& cones) {
        return weights_dict(cox_weights(to_fan(rays, cones)));
    }, py::arg("rays"), py::arg("cones"));

    m.def("gale_dual", [](const py::object& columns) {
        return to_py(gale_dual(to_weights(columns)));
    }, py::arg("columns"));

    m.def("quotient_fan", [](const py::object& columns, const py::object& chi) {
        return fan_dict(quotient_fan(to_weights(columns), to_rational_vector(chi)));
    }, py::arg("columns"), py::arg("chi"));

    m.def("unstable_locus", [](const py::object& columns, const py::object& chi) {
        UnstableLocus u = unstable_locus(to_weights(columns), to_rational_vector(chi));
        py::dict d;
        d["strata"] = u.strata;
        d["min_codimension"] = u.min_codimension;
        return d;
    }, py::arg("columns"), py::arg("chi"));

    m.def("chambers", [](const py::object& columns) {
        ChamberComplex cc = enumerate_chambers(to_weights(columns));
        py::list chambers;
        for (const auto& ch : cc.chambers()) {
            py::dict d;
            d["id"] = ch.id;
            d["cone"] = cone_dict(ch.cone);
            d["representative"] = to_py(clear_denominators(ch.representative));
            d["quotient_columns"] = ch.quotient.columns;
            auto pn = picard_number(ch);
            d["picard_number"] = pn ? py::object(py::int_(*pn)) : py::object(py::none());
            chambers.append(d);
        }
        py::list walls;
        for (std::size_t i = 0; i < cc.walls().size(); ++i) walls.append(crossing_dict(classify_wall(cc, i)));
        py::dict out;
        out["g_ample"] = cone_dict(cc.g_ample());
        out["chambers"] = chambers;
        out["walls"] = walls;
        return out;
    }, py::arg("columns"), "Chamber decomposition of the G-ample cone with classified walls");

    m.def("factor_contraction", [](const py::object& columns, std::size_t from, std::size_t to) {
        ChamberComplex cc = enumerate_chambers(to_weights(columns));
        if (from >= cc.chambers().size() || to >= cc.chambers().size())
            throw py::index_error("chamber id out of range");
        py::list out;
        for (const auto& x : factor_contraction(cc, from, to)) out.append(crossing_dict(x));
        return out;
    }, py::arg("columns"), py::arg("from_chamber"), py::arg("to_chamber"));

    m.def("m0n", [](std::size_t n, std::size_t max_n) {
        RhoReport r = verify_rho_formula(build_config(n, max_n));
        py::dict d;
        d["n"] = r.n;
        d["expected"] = r.expected;
        d["chambers"] = r.chambers;
        d["stable_chambers"] = r.stable_chambers;
        d["seed_rho"] = r.seed_rho;
        d["inconsistent_walls"] = r.inconsistent_walls;
        d["passed"] = r.passed;
        return d;
    }, py::arg("n"), py::arg("max_n") = kDefaultMaxPoints);

    m.def("run", [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"mdsgit"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Runs the command line tool in-process: (exit_code, stdout, stderr)");
}
