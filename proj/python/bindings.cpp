#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "char1/additive.hpp"
#include "char1/elliptic.hpp"
#include "char1/errors.hpp"
#include "char1/monoid.hpp"
#include "char1/semiring.hpp"
#include "char1/witt.hpp"
#include "char1/zeta.hpp"

namespace py = pybind11;
using namespace char1;

namespace {

// points as [(rank, [m1, m2, ...]), ...]
SchemeData scheme(const std::vector<std::pair<int, std::vector<std::int64_t>>>& pts) {
    SchemeData x;
    for (auto& [r, t] : pts) x.points.push_back(FinAbGroup::from_cyclic_orders(r, t));
    return x;
}

// ints or decimal strings
CurveModel curve(const py::sequence& a) {
    std::vector<mpz_class> c;
    for (auto item : a) {
        mpz_class z;
        if (z.set_str(py::str(item).cast<std::string>(), 10) != 0) throw ValidationError("curve coefficients must be integers");
        c.push_back(z);
    }
    return CurveModel::from_coefficients(c);
}

ZetaMode mode_of(const std::string& m) {
    if (m == "integral") return ZetaMode::Integral;
    if (m == "discrete") return ZetaMode::Discrete;
    throw ValidationError("mode must be 'integral' or 'discrete'");
}

py::object fraction(const mpq_class& q) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

}  // namespace

PYBIND11_MODULE(_char1, m) {
    m.doc() = "Characteristic-one algebra and F_1 counting functions";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<AccuracyError>(m, "AccuracyError", PyExc_ArithmeticError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    // semirings
    m.def("entropy_S", &entropy_S);
    m.def("entropy_c", &entropy_c);
    m.def("free_energy_sup", [](double x, double y) { return free_energy_sup(x, y).value; });
    m.def("rho_add", py::overload_cast<double, double, double>(&rho_add), py::arg("f"), py::arg("g"), py::arg("temperature"));
    m.def("idempotent_semifield_count", [](int size) { return enumerate_idempotent_semifields(size).size(); });

    // monoids
    m.def(
        "prime_ideals",
        [](int size, std::vector<int> table, int zero, int one) {
            return prime_ideals(PointedMonoid(size, std::move(table), zero, one));
        },
        py::arg("size"), py::arg("table"), py::arg("zero") = 0, py::arg("one") = 1);
    m.def("count_points", [](const std::vector<std::pair<int, std::vector<std::int64_t>>>& pts, std::int64_t n) {
        return py::int_(py::str(count_points_f1n(scheme(pts), n).get_str()));
    });

    // additive structures
    m.def(
        "search_A",
        [](int n, const std::string& mode) {
            std::vector<std::vector<int>> out;
            for (auto& s : search_A(n, mode == "constructive" ? SearchMode::Constructive : SearchMode::Brute)) out.push_back(s.s);
            return out;
        },
        py::arg("n"), py::arg("mode") = "brute");
    m.def("addition_table", [](int n, std::vector<int> s) { return addition_from_symmetry(SymmetryMap{n, std::move(s)}).table; });

    // Witt vectors
    m.def("witt_table", [](int p, int N) {
        std::vector<std::tuple<std::int64_t, std::int64_t, std::string>> rows;
        for (auto& [a, s] : witt_table_rows(witt_coeffs(p, N))) rows.emplace_back(a.num, a.den, format_series(s));
        return rows;
    });
    m.def("witt_table_csv", [](int p, int N) {
        std::ostringstream ss;
        write_witt_table_csv(witt_coeffs(p, N), ss);
        return ss.str();
    });

    // zeta functions over F_1
    m.def("alpha_exponents", [](const std::vector<std::pair<int, std::vector<std::int64_t>>>& pts) {
        py::list out;
        for (auto& a : alpha_exponents(scheme(pts))) out.append(fraction(a));
        return out;
    });
    m.def("canonical_extension", [](const std::vector<std::pair<int, std::vector<std::int64_t>>>& pts, cplx z) {
        return canonical_extension_eval(scheme(pts), z);
    });
    m.def(
        "zeta_logderiv",
        [](const std::vector<std::pair<int, std::vector<std::int64_t>>>& pts, cplx s, const std::string& mode) {
            return zeta_logderiv(LogDerivEvaluator::from_scheme(scheme(pts)), s, mode_of(mode)).value;
        },
        py::arg("points"), py::arg("s"), py::arg("mode") = "integral");
    m.def("f_entire", [](cplx s, double a) { return f_entire(s, a); });
    m.def("hurwitz_zeta", &hurwitz_zeta);
    m.def("mangoldt_profile", [](std::int64_t n) {
        std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> out;
        for (auto& e : mangoldt_profile(n)) out.emplace_back(e.n, e.p, e.factor);
        return out;
    });
    m.def("mangoldt_dirichlet", &mangoldt_dirichlet);

    // elliptic curves; coefficients as decimal strings or ints
    m.def("eta_coeffs", [](std::int64_t N) { return eta_coeffs(N).c; });
    m.def("discriminant", [](const py::sequence& a) { return py::int_(py::str(curve(a).discriminant().get_str())); });
    m.def("count_points_modp", [](const py::sequence& a, std::int64_t p) { return count_points_modp(curve(a), p); });
    m.def("reduction_type", [](const py::sequence& a, std::int64_t p) {
        return std::string(to_string(reduction_type(curve(a), p)));
    });
    m.def("t_coeffs", [](const py::sequence& a, std::int64_t N) { return t_coeffs(curve(a), N).c; });
    m.def("dirichlet_identity_check", [](const py::sequence& a, std::int64_t N) {
        const auto r = dirichlet_identity_check(curve(a), N);
        py::dict d;
        d["holds"] = r.holds;
        d["first_failure"] = r.first_failure;
        d["message"] = r.message;
        return d;
    });
    m.def("singularity_catalog", [](const py::sequence& a, std::tuple<double, double, double, double> w) {
        py::list out;
        auto [r0, r1, i0, i1] = w;
        for (auto& s : singularity_catalog(curve(a), {r0, r1, i0, i1})) {
            py::dict d;
            d["location"] = s.location;
            d["source"] = s.source;
            d["order"] = s.order;
            d["line"] = s.is_line;
            d["conditional"] = s.conditional;
            out.append(d);
        }
        return out;
    });
}
