#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "splitlab/certify.hpp"
#include "splitlab/cutgen.hpp"
#include "splitlab/errors.hpp"
#include "splitlab/io.hpp"
#include "splitlab/lattice.hpp"
#include "splitlab/ranklab.hpp"
#include "splitlab/splits.hpp"

namespace py = pybind11;
using namespace splitlab;
using geom::Polyhedron;

namespace {

// Rationals cross the boundary as int, str ("p/q") or fractions.Fraction; floats are rejected.
Rat to_rat(const py::handle& h) {
    if (py::isinstance<py::float_>(h)) throw InputError("floats are not exact; pass a Fraction, int or \"p/q\" string");
    return parse_rat(py::str(h).cast<std::string>());
}

Vec to_vec(const py::handle& h) {
    Vec v;
    for (auto x : h) v.push_back(to_rat(x));
    return v;
}

Matrix to_matrix(const py::handle& h) {
    Matrix m;
    for (auto r : h) m.push_back(to_vec(r));
    return m;
}

IntVec to_int_vec(const py::handle& h) {
    Vec v = to_vec(h);
    if (!is_integral(v)) throw InputError("expected integers");
    return splitlab::to_int(v);
}

py::object fraction(const Rat& r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(to_string(r));
}

py::list fractions(const Vec& v) {
    py::list out;
    for (const auto& x : v) out.append(fraction(x));
    return out;
}

py::list fractions(const Matrix& m) {
    py::list out;
    for (const auto& r : m) out.append(fractions(r));
    return out;
}

py::object to_python(const io::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

cutgen::CornerModel model_of(const py::handle& f, const py::handle& rays) {
    return cutgen::CornerModel::make(to_vec(f), to_matrix(rays));
}

splits::Split split_of(const py::handle& pi, const py::handle& pi0) {
    Vec p0{to_rat(pi0)};
    if (!is_integral(p0)) throw InputError("pi0 must be an integer");
    return splits::Split::make(to_int_vec(pi), splitlab::to_int(p0)[0]);
}

}  // namespace

PYBIND11_MODULE(_splitlab, m) {
    m.doc() = "Exact split-rank laboratory for intersection cuts";

    static py::exception<PreconditionError> precondition(m, "PreconditionError", PyExc_ValueError);
    static py::exception<LatticeFreeError> lattice_free(m, "LatticeFreeError", precondition.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const LatticeFreeError& e) {
            py::object err = py::reinterpret_borrow<py::object>(lattice_free.ptr())(e.what());
            err.attr("witness") = fractions(e.witness());
            PyErr_SetObject(lattice_free.ptr(), err.ptr());
        } catch (const PreconditionError& e) {
            precondition(e.what());
        } catch (const InputError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<Polyhedron>(m, "Polyhedron")
        .def_static(
            "from_vertices",
            [](const py::object& points, const py::object& rays, std::optional<std::size_t> dim) {
                Matrix pts = to_matrix(points), rs = to_matrix(rays);
                std::size_t d = dim ? *dim : (!pts.empty() ? pts[0].size() : 0);
                if (d == 0) throw InputError("from_vertices: give dim for an empty point list");
                return geom::convex_hull(d, pts, rs);
            },
            py::arg("points"), py::arg("rays") = py::list(), py::arg("dim") = py::none())
        .def_static(
            "from_inequalities",
            [](std::size_t dim, const py::object& rows) {
                std::vector<geom::Inequality> ineqs;
                for (auto r : rows) {
                    auto t = r.cast<py::tuple>();
                    ineqs.push_back(geom::Inequality::make(to_vec(t[0]), to_rat(t[1])));
                }
                return geom::enumerate_vertices(ineqs, dim);
            },
            py::arg("dim"), py::arg("rows"), "rows: iterable of (a, b) meaning a . x <= b")
        .def_static("from_json", [](const std::string& text) { return io::parse_polyhedron(io::Json::parse(text)); })
        .def("to_json", [](const Polyhedron& p) { return io::polyhedron(p).dump(); })
        .def_property_readonly("dim", &Polyhedron::dim)
        .def_property_readonly("vertices", [](const Polyhedron& p) { return fractions(p.vertices()); })
        .def_property_readonly("rays", [](const Polyhedron& p) { return fractions(p.rays()); })
        .def_property_readonly("inequalities",
                               [](const Polyhedron& p) {
                                   py::list out;
                                   for (const auto& q : p.inequalities())
                                       out.append(py::make_tuple(fractions(q.a), fraction(q.b)));
                                   return out;
                               })
        .def_property_readonly("affine_dimension", &Polyhedron::affine_dimension)
        .def("is_empty", &Polyhedron::is_empty)
        .def("is_bounded", &Polyhedron::is_bounded)
        .def("contains", [](const Polyhedron& p, const py::object& x) { return p.contains(to_vec(x)); })
        .def("lattice_points", [](const Polyhedron& p) { return fractions(geom::lattice_points(p)); })
        .def(py::self == py::self)
        .def("__repr__", [](const Polyhedron& p) {
            return "Polyhedron(dim=" + std::to_string(p.dim()) + ", vertices=" + std::to_string(p.vertices().size()) +
                   ", facets=" + std::to_string(p.inequalities().size()) + ")";
        });

    m.def("integer_hull", &certify::integer_hull, py::arg("l"));

    m.def(
        "gauge", [](const Polyhedron& l, const py::object& f, const py::object& r) { return fraction(cutgen::gauge(l, to_vec(f), to_vec(r))); },
        py::arg("l"), py::arg("f"), py::arg("r"));

    m.def(
        "intersection_cut",
        [](const py::object& f, const py::object& rays, const Polyhedron& l) {
            return fractions(cutgen::intersection_cut(model_of(f, rays), l).psi);
        },
        py::arg("f"), py::arg("rays"), py::arg("l"), "Coefficients psi of the cut sum_j psi_j s_j >= 1");

    m.def(
        "is_2partitionable", [](const py::object& pts) { return to_python(io::partition(certify::is_2partitionable(to_matrix(pts)))); },
        py::arg("points"));

    m.def(
        "has_2hyperplane_property", [](const Polyhedron& l) { return to_python(io::two_hp(certify::has_2hyperplane_property(l))); },
        py::arg("l"));

    m.def(
        "classify_2d", [](const Polyhedron& l) { return certify::to_string(certify::classify_2d(l).kind); }, py::arg("l"));

    m.def(
        "infinite_rank_2d",
        [](const py::object& f, const py::object& rays, const Polyhedron& l) {
            return to_python(io::infinite_rank(certify::infinite_rank_2d(model_of(f, rays), l)));
        },
        py::arg("f"), py::arg("rays"), py::arg("l"));

    m.def(
        "apply_split",
        [](const Polyhedron& q, const py::object& pi, const py::object& pi0) { return splits::apply_split(q, split_of(pi, pi0)); },
        py::arg("q"), py::arg("pi"), py::arg("pi0"));

    m.def(
        "probe",
        [](const py::object& f, const py::object& rays, const Polyhedron& l, long bound, std::size_t rounds,
           const py::object& witnesses, long floor, const py::object& box) {
            auto model = model_of(f, rays);
            auto cone = ranklab::lift(model, l, ranklab::LiftKind::cone_over_l, floor);
            Matrix ws = witnesses.is_none() ? Matrix{model.f} : to_matrix(witnesses);
            ranklab::EnumerateStrategy e{bound, {}, {}};
            if (box.is_none()) {
                for (std::size_t i = 0; i < l.dim(); ++i) {
                    auto [lo, hi] = l.range(unit(l.dim(), i));
                    e.lo.push_back(Rat(floor_rat(*lo) - 1));
                    e.hi.push_back(Rat(ceil_rat(*hi) + 1));
                }
            } else {
                auto t = box.cast<py::tuple>();
                e.lo = to_vec(t[0]);
                e.hi = to_vec(t[1]);
            }
            return to_python(io::probe(ranklab::probe_rounds(cone, e, rounds, ws)));
        },
        py::arg("f"), py::arg("rays"), py::arg("l"), py::arg("bound") = 2, py::arg("rounds") = 3,
        py::arg("witnesses") = py::none(), py::arg("floor") = ranklab::kDefaultFloor, py::arg("box") = py::none(),
        "Enumerate-strategy persistence probe on the lifted cone; box is (lo, hi) vectors");

    m.def(
        "execute_finite_rank",
        [](const py::object& f, const py::object& rays, const Polyhedron& l, const py::object& intersecting,
           const py::object& englobing, std::size_t cap_blocks) {
            auto cone = ranklab::lift(model_of(f, rays), l);
            ranklab::Program prog;
            for (auto s : intersecting) {
                auto t = s.cast<py::tuple>();
                prog.intersecting.push_back(split_of(t[0], t[1]));
            }
            auto e = englobing.cast<py::tuple>();
            prog.englobing = split_of(e[0], e[1]);
            return to_python(io::probe(ranklab::execute_finite_rank(cone, prog, cap_blocks)));
        },
        py::arg("f"), py::arg("rays"), py::arg("l"), py::arg("intersecting"), py::arg("englobing"),
        py::arg("cap_blocks") = 64, "Splits are (pi, pi0) pairs");

    m.def(
        "rotate_facet", [](const Polyhedron& l, std::size_t facet) { return to_python(io::rotation(ranklab::rotate_facet(l, facet))); },
        py::arg("l"), py::arg("facet"));
}
