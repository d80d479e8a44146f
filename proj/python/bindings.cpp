#include "beukers/arith.hpp"
#include "beukers/bounds.hpp"
#include "beukers/cli.hpp"
#include "beukers/constants.hpp"
#include "beukers/forms.hpp"
#include "beukers/legendre.hpp"
#include "beukers/oracle.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace beukers;

namespace {

// Through raw bytes: decimal strings hit the interpreter's digit limit for large values.
py::int_ to_py(const BigInt& v) {
    // Leaked on purpose: destroying Python objects after interpreter shutdown crashes.
    static const py::object& from_bytes = *new py::object(py::module_::import("builtins").attr("int").attr("from_bytes"));
    std::string bytes((mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8, '\0');
    std::size_t count = 0;
    mpz_export(bytes.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
    bytes.resize(count);
    py::int_ magnitude = from_bytes(py::bytes(bytes), "big");
    return sgn(v) < 0 ? py::int_(-magnitude) : magnitude;
}

BigInt from_py(const py::int_& v) {
    static const py::object& abs_fn = *new py::object(py::module_::import("builtins").attr("abs"));
    const py::int_ mag = abs_fn(v);
    const std::size_t len = (mag.attr("bit_length")().cast<std::size_t>() + 7) / 8;
    const std::string bytes = mag.attr("to_bytes")(len, "big").cast<std::string>();
    BigInt out;
    mpz_import(out.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
    return v < py::int_(0) ? BigInt(-out) : out;
}

py::object to_fraction(const Rational& r) {
    static const py::object& fraction = *new py::object(py::module_::import("fractions").attr("Fraction"));
    return fraction(to_py(r.numerator()), to_py(r.denominator()));
}

py::tuple to_interval(const BallReal& b) { return py::make_tuple(to_fraction(b.lower()), to_fraction(b.upper())); }

ZetaKind kind_of(int k) { return zeta_kind_from_int(k); }

py::dict integer_form_dict(const IntegerForm& f) {
    py::dict d;
    d["n"] = f.n;
    d["a"] = to_py(f.a);
    d["b"] = to_py(f.b);
    d["c"] = to_py(f.c);
    d["d_n"] = to_py(f.dn);
    return d;
}

py::dict max_dict(const MaxResult& m) {
    py::dict d;
    py::list point, grid;
    for (const auto& c : m.point) point.append(c.to_string());
    for (const auto& c : m.grid.point) grid.append(to_fraction(c));
    d["point"] = point;
    d["value"] = m.value.to_string();
    d["value_interval"] = to_interval(m.value_ball);
    d["grid_point"] = grid;
    d["grid_value"] = to_fraction(m.grid.value);
    d["residuals_vanish"] = m.residuals_vanish();
    d["grid_below_analytic"] = m.grid_below_analytic();
    if (m.rival_value) d["rival_value"] = m.rival_value->to_string();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact linear forms in zeta(2) and zeta(3) and their verification";

    py::register_exception<IntegralityError>(m, "IntegralityError", PyExc_ArithmeticError);

    py::class_<LinearForm>(m, "LinearForm")
        .def_property_readonly("kind", [](const LinearForm& f) { return power_of(f.kind); })
        .def_property_readonly("rat", [](const LinearForm& f) { return to_fraction(f.rat); })
        .def_property_readonly("zcoef", [](const LinearForm& f) { return to_py(f.zcoef); })
        .def("realize", [](const LinearForm& f, int digits) { return to_interval(f.realize(Precision(digits))); },
             py::arg("digits") = Precision::kDefaultDigits, "Enclosure (lo, hi) of the form's value.")
        .def("__eq__", [](const LinearForm& a, const LinearForm& b) { return a == b; })
        .def("__repr__", [](const LinearForm& f) {
            return "LinearForm(" + f.rat.to_string() + " + " + f.zcoef.get_str() + "*zeta(" +
                   std::to_string(power_of(f.kind)) + "))";
        });

    m.def("i_rs", &i_rs, py::arg("r"), py::arg("s"));
    m.def("j_rs", &j_rs, py::arg("r"), py::arg("s"));
    m.def("beukers_I", &beukers_I, py::arg("n"));
    m.def("beukers_J", &beukers_J, py::arg("n"));
    m.def("integerize", [](int kind, unsigned n) { return integer_form_dict(integerize(beukers_form(kind_of(kind), n), n)); },
          py::arg("kind"), py::arg("n"));

    m.def("legendre", [](unsigned n) {
        const PolyZ p = legendre_binomial(n);
        py::list out;
        for (const auto& c : p.coeffs()) out.append(to_py(c));
        return out;
    }, py::arg("n"), "Coefficients of P_n, ascending powers.");
    m.def("legendre_rodrigues", [](unsigned n) {
        const PolyZ p = legendre_rodrigues(n);
        py::list out;
        for (const auto& c : p.coeffs()) out.append(to_py(c));
        return out;
    }, py::arg("n"));

    m.def("primes", [](std::uint64_t limit) {
        const PrimeTable t(limit);
        return std::vector<std::uint64_t>(t.primes().begin(), t.primes().end());
    }, py::arg("limit"));
    m.def("dn", [](std::uint64_t n) { return to_py(dn_iterated_lcm(n)); }, py::arg("n"));
    m.def("dn_prime_powers", [](std::uint64_t n) { return to_py(dn_prime_powers(PrimeTable(std::max<std::uint64_t>(n, 2)), n).dn); },
          py::arg("n"));

    m.def("zeta", [](unsigned s, int digits) { return to_interval(zeta_ref(s, Precision(digits))); },
          py::arg("s"), py::arg("digits") = Precision::kDefaultDigits);

    m.def("series_abs_In", [](unsigned n, unsigned long terms) {
        const SeriesEnclosure e = series_abs_In(n, terms);
        return py::make_tuple(to_fraction(e.lower()), to_fraction(e.upper()));
    }, py::arg("n"), py::arg("terms"));
    m.def("series_Jn", [](unsigned n, unsigned long terms) {
        const SeriesEnclosure e = series_Jn(n, terms);
        return py::make_tuple(to_fraction(e.lower()), to_fraction(e.upper()));
    }, py::arg("n"), py::arg("terms"));
    m.def("check_ibp", [](unsigned n, unsigned m) {
        const auto [l, r] = check_ibp(n, m);
        return py::make_tuple(to_fraction(l), to_fraction(r));
    }, py::arg("n"), py::arg("m"));

    m.def("verify_chain", [](int kind, unsigned n_max, int digits) {
        const ChainSummary s = verify_chain(kind_of(kind), 1, n_max, Precision(digits));
        py::list rows;
        for (const auto& r : s.reports) {
            py::dict d = integer_form_dict(r.integers);
            d["abs_value"] = to_interval(r.abs_value);
            d["bound"] = to_interval(r.bound);
            d["status"] = to_string(r.status);
            d["holds"] = r.holds();
            rows.append(d);
        }
        return rows;
    }, py::arg("kind"), py::arg("n_max"), py::arg("digits") = Precision::kDefaultDigits);

    m.def("max_g2", [] { return max_dict(max_g2()); });
    m.def("max_g3", [] { return max_dict(max_g3()); });

    m.def("contradiction_threshold", [](int kind, const py::int_& p, const py::int_& q) {
        const ContradictionReport r = contradiction_threshold(kind_of(kind), from_py(p), from_py(q));
        py::dict d;
        d["n_star"] = r.n_star;
        d["product_at_n_star"] = to_interval(r.product_at_n_star);
        d["coarse_bound"] = to_interval(r.coarse_bound);
        d["witness"] = to_py(r.witness);
        return d;
    }, py::arg("kind"), py::arg("p"), py::arg("q"));

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
