// Python bindings for the exact symbolic engine: polynomial arithmetic,
// shapes, symmetric-function expansions, product rules, tableau algorithms,
// and the Hall-Littlewood testers.
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skewsym/colored.hpp"
#include "skewsym/hall_littlewood.hpp"
#include "skewsym/jdt.hpp"
#include "skewsym/qpoly.hpp"
#include "skewsym/shapes.hpp"
#include "skewsym/symfunc.hpp"
#include "skewsym/tableaux.hpp"

namespace py = pybind11;
using namespace skewsym;

PYBIND11_MODULE(_skewsym, m) {
    m.doc() = "Exact engine for skew Schur / quantum power sum product rules";

    py::register_exception<not_divisible>(m, "NotDivisible", PyExc_ArithmeticError);
    py::register_exception<overflow_error>(m, "CoefficientOverflow", PyExc_OverflowError);

    py::class_<QPoly>(m, "QPoly")
        .def(py::init<>())
        .def(py::init<std::int64_t>())
        .def(py::init<std::vector<std::int64_t>>())
        .def_static("q", &QPoly::q)
        .def_static("monomial", &QPoly::monomial, py::arg("coeff"), py::arg("power"))
        .def_static("parse", &QPoly::parse)
        .def("degree", &QPoly::degree)
        .def("is_zero", &QPoly::is_zero)
        .def("coeff", &QPoly::coeff, py::arg("power"))
        .def("eval_int", &QPoly::eval_int, py::arg("q"))
        .def("div_exact", &QPoly::div_exact)
        .def("power", &QPoly::power)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__str__", &QPoly::to_string)
        .def("__repr__", [](const QPoly& p) { return "QPoly(" + p.to_string() + ")"; });
    m.def("q_binomial", &q_binomial, py::arg("n"), py::arg("k"));

    py::class_<Partition>(m, "Partition")
        .def(py::init<>())
        .def(py::init<std::vector<int>>())
        .def_static("parse", &Partition::parse)
        .def("size", &Partition::size)
        .def("length", &Partition::length)
        .def("part", &Partition::part, py::arg("i"))
        .def("parts", [](const Partition& p) {
            std::vector<int> out;
            for (int i = 1; i <= p.length(); ++i) out.push_back(p.part(i));
            return out;
        })
        .def(py::self == py::self)
        .def("__str__", &Partition::to_string)
        .def("__repr__", [](const Partition& p) { return "Partition('" + p.to_string() + "')"; });
    m.def("conjugate", &conjugate);
    m.def("partitions_of", &partitions_of);
    m.def("partitions_up_to", &partitions_up_to);
    m.def("subpartitions", &subpartitions);

    py::class_<SkewShape>(m, "SkewShape")
        .def(py::init<>())
        .def(py::init<Partition, Partition>(), py::arg("outer"), py::arg("inner") = Partition())
        .def_static("parse", &SkewShape::parse)
        .def("outer", &SkewShape::outer)
        .def("inner", &SkewShape::inner)
        .def("size", &SkewShape::size)
        .def(py::self == py::self)
        .def("__str__", &SkewShape::to_string)
        .def("__repr__", [](const SkewShape& s) { return "SkewShape('" + s.to_string() + "')"; });
    m.def("is_horizontal_strip", &is_horizontal_strip);
    m.def("is_vertical_strip", &is_vertical_strip);
    m.def("is_ribbon", &is_ribbon);
    m.def("is_broken_ribbon", &is_broken_ribbon);

    py::class_<SymFunc>(m, "SymFunc")
        .def("nvars", &SymFunc::nvars)
        .def("coeff", &SymFunc::coeff, py::arg("lam"))
        .def("specialize", &SymFunc::specialize, py::arg("q"))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def("scale", &SymFunc::scale)
        .def(py::self == py::self)
        .def("__str__", &SymFunc::to_string)
        .def("__repr__", [](const SymFunc& f) { return "SymFunc(" + f.to_string() + ")"; });

    py::class_<SkewSchurSum>(m, "SkewSchurSum")
        .def("coeff", &SkewSchurSum::coeff, py::arg("shape"))
        .def("specialize", &SkewSchurSum::specialize, py::arg("q"))
        .def(py::self + py::self)
        .def("scale", &SkewSchurSum::scale)
        .def(py::self == py::self)
        .def("__str__", &SkewSchurSum::to_string)
        .def("__repr__",
             [](const SkewSchurSum& s) { return "SkewSchurSum(" + s.to_string() + ")"; });

    m.def("monomial", &monomial, py::arg("lam"), py::arg("nvars"));
    m.def("power_sum", &power_sum, py::arg("r"), py::arg("nvars"));
    m.def("elementary", &elementary, py::arg("r"), py::arg("nvars"));
    m.def("skew_schur", &skew_schur, py::arg("shape"), py::arg("nvars"));
    m.def("qpower", &qpower, py::arg("r"), py::arg("nvars"));
    m.def("qpower_prod", &qpower_prod, py::arg("tau"), py::arg("nvars"));
    m.def("barp", &barp, py::arg("r"), py::arg("nvars"));
    m.def("expand_sum", &expand_sum, py::arg("sum"), py::arg("nvars"));

    m.def("rhs_spr", &rhs_spr, py::arg("lam"), py::arg("mu"), py::arg("r"));
    m.def("rhs_cspr", &rhs_cspr, py::arg("lam"), py::arg("mu"), py::arg("r"));
    m.def("rhs_smnr", &rhs_smnr, py::arg("lam"), py::arg("mu"), py::arg("r"));
    m.def("rhs_qmnr", &rhs_qmnr, py::arg("lam"), py::arg("mu"), py::arg("r"));
    m.def("rhs_sqmnr", &rhs_sqmnr, py::arg("lam"), py::arg("mu"), py::arg("r"));
    m.def("rhs_sqmnr_prime", &rhs_sqmnr_prime, py::arg("lam"), py::arg("mu"), py::arg("r"));
    m.def("rhs_sqmnr3", &rhs_sqmnr3, py::arg("lam"), py::arg("mu"), py::arg("r"));
    m.def("rhs_qpower_prod", &rhs_qpower_prod, py::arg("lam"), py::arg("mu"), py::arg("tau"));

    py::class_<BijectiveReport>(m, "BijectiveReport")
        .def_readonly("passed", &BijectiveReport::pass)
        .def_readonly("cases", &BijectiveReport::cases)
        .def_readonly("survivors", &BijectiveReport::survivors)
        .def_readonly("detail", &BijectiveReport::detail);
    m.def("verify_sqmnr_bijective", &verify_sqmnr_bijective, py::arg("lam"), py::arg("mu"),
          py::arg("r"), py::arg("max_entry"));

    py::class_<BumpStep>(m, "BumpStep")
        .def_readonly("row", &BumpStep::row)
        .def_readonly("col", &BumpStep::col)
        .def_readonly("out", &BumpStep::out)
        .def_readonly("into", &BumpStep::in);

    py::class_<SkewTableau>(m, "SkewTableau")
        .def(py::init<SkewShape, std::vector<std::vector<int>>>())
        .def_static("parse", &SkewTableau::parse)
        .def("shape", &SkewTableau::shape)
        .def("is_semistandard", &SkewTableau::is_semistandard)
        .def("content", &SkewTableau::content, py::arg("max_entry"))
        .def(py::self == py::self)
        .def("__str__", [](const SkewTableau& t) { return t.to_string(true); })
        .def("to_string", &SkewTableau::to_string, py::arg("single_line") = false);

    py::class_<InsertionOutcome>(m, "InsertionOutcome")
        .def_readonly("tableau", &InsertionOutcome::tableau)
        .def_readonly("exit_row", &InsertionOutcome::exit_row)
        .def_readonly("exit_value", &InsertionOutcome::exit_value)
        .def_readonly("trace", &InsertionOutcome::trace);
    m.def("insert", &insert, py::arg("tableau"), py::arg("k"));
    m.def("insert_from_row", &insert_from_row, py::arg("tableau"), py::arg("row"));
    m.def("reverse_insert_from_row", &reverse_insert_from_row, py::arg("tableau"), py::arg("row"));
    m.def(
        "phi",
        [](const SkewTableau& t, const Partition& lam, const Partition& mu) {
            return phi(t, lam, mu);
        },
        py::arg("tableau"), py::arg("lam"), py::arg("mu"));
    m.def("psi", &psi, py::arg("tableau"), py::arg("lam"), py::arg("mu"));
    m.def("all_ssyt", &all_ssyt, py::arg("shape"), py::arg("max_entry"));

    py::class_<StandardTableau>(m, "StandardTableau")
        .def_static("parse", &StandardTableau::parse)
        .def("shape", &StandardTableau::shape)
        .def("size", &StandardTableau::size)
        .def(py::self == py::self)
        .def("__str__", [](const StandardTableau& t) { return t.to_string(true); })
        .def("to_string", &StandardTableau::to_string, py::arg("single_line") = false);
    m.def("rectify", [](const StandardTableau& t) { return rectify(t); });
    m.def("hook_tableau", &hook_tableau, py::arg("r"), py::arg("k"));
    m.def("has_kne", &has_kne, py::arg("tableau"), py::arg("k"));
    m.def("all_syt", &all_syt, py::arg("shape"));
    m.def("count_rectify_to_hook", &count_rectify_to_hook, py::arg("shape"), py::arg("k"));

    m.def("hs_coeff", &hs_coeff);
    m.def("vs_coeff", &vs_coeff);
    m.def("br_coeff", &br_coeff);
    m.def("sk_coeff", &sk_coeff);
    m.def("hl_p_skew", &hl_p_skew, py::arg("shape"), py::arg("nvars"));

    py::class_<ConjectureReport>(m, "ConjectureReport")
        .def_readonly("id", &ConjectureReport::id)
        .def_readonly("passed", &ConjectureReport::pass)
        .def_readonly("divisible", &ConjectureReport::divisible)
        .def_readonly("detail", &ConjectureReport::detail)
        .def("verdict_line", &ConjectureReport::verdict_line);
    m.def("conjecture1", &conjecture1, py::arg("lam"), py::arg("mu"), py::arg("r"),
          py::arg("nvars"));
    m.def("conjecture2", &conjecture2, py::arg("lam"), py::arg("mu"), py::arg("r"),
          py::arg("nvars"));
    m.def("conjecture3", &conjecture3, py::arg("lam"), py::arg("mu"), py::arg("r"),
          py::arg("nvars"));
    m.def("verify_sqmnr_hl_form", &verify_sqmnr_hl_form, py::arg("lam"), py::arg("mu"),
          py::arg("r"), py::arg("nvars"));
}
