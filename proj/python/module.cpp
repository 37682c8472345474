// Python bindings: exact values cross the boundary as strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nico/adjoin.hpp"
#include "nico/curves.hpp"
#include "nico/dsl.hpp"
#include "nico/families.hpp"
#include "nico/liouville.hpp"
#include "nico/pell.hpp"
#include "nico/poly.hpp"
#include "nico/sequence.hpp"
#include "nico/verify.hpp"

namespace py = pybind11;

namespace {

using nico::Int;
using nico::Rat;

Rat parse_rat(const std::string& text) {
    Rat v(text);
    if (v.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    v.canonicalize();
    return v;
}

nico::Sequence eval_text(const std::string& expr) { return nico::eval(nico::parse(expr)); }

py::list sequence_list(const nico::Sequence& s) {
    py::list out;
    for (const auto& e : s.sorted()) out.append(e.str());
    return out;
}

py::dict poly_dict(const nico::RatPolynomial& p) {
    py::list coeffs;
    for (const auto& c : p.coeffs()) coeffs.append(c.get_str());
    py::dict d;
    d["var"] = p.var();
    d["coeffs"] = coeffs;
    d["text"] = p.str();
    return d;
}

py::dict root_report_dict(const nico::RootReport& rep) {
    py::list rational;
    for (const auto& [root, mult] : rep.rational_roots)
        rational.append(py::make_tuple(root.get_str(), mult));
    py::list surds;
    for (const auto& r : rep.surd_roots) surds.append(r.str());
    py::dict d;
    d["rational_roots"] = rational;
    d["surd_roots"] = surds;
    d["residual"] = rep.residual.str();
    d["complex_pair"] = rep.complex_pair;
    return d;
}

py::dict trend_dict(const nico::TrendReport& rep) {
    py::list samples;
    for (const auto& s : rep.samples) {
        py::dict row;
        row["k"] = s.k;
        row["value"] = s.value.str();
        row["error"] = s.error.str();
        samples.append(row);
    }
    py::dict d;
    d["target"] = rep.target.str();
    d["samples"] = samples;
    d["pass"] = rep.pass;
    return d;
}

}  // namespace

PYBIND11_MODULE(_nico, m) {
    m.doc() = "exact square-sum/cube-sum sequence identities";

    py::register_exception<nico::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<nico::EvalError>(m, "EvalError", PyExc_ValueError);

    m.def(
        "nu", [](const std::string& expr) { return nico::nu(eval_text(expr)).str(); },
        py::arg("expr"), "nu of the sequence denoted by the expression, as an exact string");

    m.def(
        "eval_sequence", [](const std::string& expr) { return sequence_list(eval_text(expr)); },
        py::arg("expr"), "sorted elements of the sequence, as exact strings");

    m.def(
        "format_expr", [](const std::string& expr) { return nico::format(nico::parse(expr)); },
        py::arg("expr"), "canonical rendering of the expression");

    m.def(
        "poly",
        [](const std::string& kind, const std::string& expr, const std::string& selector) {
            nico::Sequence s = eval_text(expr);
            nico::RatPolynomial p = [&] {
                if (kind == "translate") return nico::nu_translate_poly(s);
                if (kind == "adjoin1") return nico::nu_adjoin_one_poly(s);
                nico::Selector sel = nico::parse_selector_text(selector);
                if (kind == "subset") return nico::nu_subset_translate_poly(s, sel);
                if (kind == "scale") return nico::nu_scale_subset_poly(s, sel);
                throw std::invalid_argument("kind must be translate, subset, scale, or adjoin1");
            }();
            py::dict d;
            d["poly"] = poly_dict(p);
            d["roots"] = p.is_zero() ? py::dict() : root_report_dict(nico::rational_roots(p));
            return d;
        },
        py::arg("kind"), py::arg("expr"), py::arg("selector") = "",
        "nu as a polynomial in the free parameter, with its root report");

    m.def(
        "adjoin_two",
        [](const std::string& expr, long bound) {
            nico::Sequence s = eval_text(expr);
            py::list out;
            nico::QuadSurd sum0 = nico::sum(s);
            nico::QuadSurd cube0 = nico::cube_sum(s);
            for (long a = 1; a <= bound; ++a)
                for (long b = a; b <= bound; ++b) {
                    nico::QuadSurd total = sum0 + nico::QuadSurd(a) + nico::QuadSurd(b);
                    nico::QuadSurd cubes = cube0 + nico::QuadSurd(a * a * a) + nico::QuadSurd(b * b * b);
                    if (total * total == cubes)
                        out.append(py::make_tuple(std::to_string(a), std::to_string(b)));
                }
            return out;
        },
        py::arg("expr"), py::arg("bound") = 100,
        "integer pairs a <= b within the bound that complete the sequence to nu = 0");

    m.def(
        "initial_segment_pairs",
        [](long n) {
            py::list out;
            for (const auto& [a, b] : nico::adjoin_form_solutions(n))
                out.append(py::make_tuple(a.get_str(), b.get_str()));
            return out;
        },
        py::arg("n"), "the complete pair list for the base [1..n]");

    m.def(
        "pell",
        [](const std::string& d, long count) {
            py::list sols;
            for (const auto& s : nico::pell_solutions(Int(d), count))
                sols.append(py::make_tuple(s.x.get_str(), s.y.get_str()));
            py::dict out;
            out["D"] = d;
            out["solutions"] = sols;
            return out;
        },
        py::arg("d"), py::arg("count") = 5, "solutions of x^2 - D y^2 = 1");

    m.def(
        "repetition_family",
        [](long m, long count) {
            py::list out;
            for (const auto& e : nico::repetition_family(m, count)) {
                Int x = e.t_pos - e.t_neg;
                py::dict row;
                row["n"] = e.n.get_str();
                row["u"] = e.u;
                row["x"] = x.get_str();
                row["t_pos"] = e.t_pos.get_str();
                row["t_neg"] = e.t_neg.get_str();
                out.append(row);
            }
            return out;
        },
        py::arg("m"), py::arg("count") = 5,
        "lengths n whose m-fold repeated segment admits integer shifts with nu = 0");

    m.def(
        "gap_family",
        [](long count) {
            py::list out;
            for (const auto& g : nico::gap_family_solutions(count)) {
                py::dict row;
                row["j"] = g.j.get_str();
                row["r"] = g.r.get_str();
                row["m"] = g.m.get_str();
                out.append(row);
            }
            py::dict d;
            d["gap_family"] = out;
            return d;
        },
        py::arg("count") = 4, "(j, r, m) with (4j+3)^2 - 8r^2 = -7 and m = j + r");

    m.def("family_list", [] {
        constexpr long open_end = std::numeric_limits<long>::max();
        py::list out;
        for (const auto& fam : nico::registry()) {
            py::list params;
            for (const auto& p : fam.params) {
                py::dict row;
                row["name"] = p.name;
                row["lo"] = p.lo;
                row["hi"] = p.hi == open_end ? py::object(py::none()) : py::object(py::cast(p.hi));
                params.append(row);
            }
            py::dict d;
            d["name"] = fam.name;
            d["params"] = params;
            d["note"] = fam.note;
            d["default_grid"] = fam.default_grid;
            out.append(d);
        }
        return out;
    });

    m.def(
        "family_verify",
        [](const std::string& name, const std::vector<long>& params) {
            auto rep = nico::verify_family(name, params);
            py::dict d;
            d["family"] = rep.family;
            d["params"] = rep.params;
            d["nu"] = rep.nu_value.str();
            d["expected"] = rep.expected.str();
            d["pass"] = rep.pass;
            d["size"] = rep.size;
            return d;
        },
        py::arg("name"), py::arg("params"));

    m.def(
        "omit_adjoin",
        [](long n, long m) {
            auto pair = nico::omit_adjoin(n, m);
            py::dict d;
            d["n"] = pair.n;
            d["m"] = pair.m;
            d["a"] = pair.a.get_str();
            d["b"] = pair.b.get_str();
            d["nu"] = nico::nu(pair.seq).str();
            return d;
        },
        py::arg("n"), py::arg("m"),
        "the rational pair restoring nu = 0 after removing m from [1..n]");

    m.def(
        "difference_limit",
        [](long r, long k_max, long precision, const std::string& tol) {
            return trend_dict(nico::difference_limit_probe(r, k_max, precision, parse_rat(tol)));
        },
        py::arg("r"), py::arg("k_max"), py::arg("precision") = 30, py::arg("tol") = "1/1000");

    m.def(
        "truncation_first_difference",
        [](long r, long m_max, long precision, const std::string& tol) {
            return trend_dict(nico::truncation_first_difference(r, m_max, precision, parse_rat(tol)));
        },
        py::arg("r"), py::arg("m_max"), py::arg("precision") = 30, py::arg("tol") = "1/1000");

    m.def(
        "integer_points",
        [](long n, long box) {
            py::list out;
            for (const auto& p : nico::integer_points(n, box))
                out.append(py::make_tuple(p.a, p.b, p.component));
            return out;
        },
        py::arg("n"), py::arg("box") = 20);

    m.def(
        "curve_sample",
        [](long n, const std::string& lo, const std::string& hi, const std::string& step,
           long precision) {
            auto set = nico::curve_sample(n, parse_rat(lo), parse_rat(hi), parse_rat(step), precision);
            py::list out;
            for (const auto& p : set.points) {
                py::dict row;
                row["a"] = p.a.get_str();
                row["b"] = p.b.str();
                row["component"] = p.component;
                row["exact"] = p.exact ? py::object(py::cast(p.b_exact.get_str()))
                                       : py::object(py::none());
                out.append(row);
            }
            return out;
        },
        py::arg("n"), py::arg("lo"), py::arg("hi"), py::arg("step") = "1/2",
        py::arg("precision") = 30);

    m.def(
        "verify",
        [](const std::vector<std::string>& only) {
            py::list out;
            for (const auto& r : nico::run_checks(only)) {
                py::dict d;
                d["check_id"] = r.id;
                d["area"] = r.area;
                d["status"] = r.pass ? "pass" : "fail";
                d["value"] = r.value;
                d["expected"] = r.expected;
                d["tolerance"] = r.tolerance;
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("only") = std::vector<std::string>{}, "run the acceptance checks");
}
