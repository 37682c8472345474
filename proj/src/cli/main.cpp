// Command-line front end: sequence expressions in, exact reports out.
// Data goes to stdout (or --out); diagnostics go to stderr.
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nico/curves.hpp"
#include "nico/decimal.hpp"
#include "nico/dsl.hpp"
#include "nico/families.hpp"
#include "nico/pell.hpp"
#include "nico/poly.hpp"
#include "nico/sequence.hpp"
#include "nico/surd.hpp"
#include "nico/verify.hpp"

namespace {

using json = nlohmann::json;
using nico::Int;
using nico::Rat;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    long precision = 30;
    std::string format = "text";
    std::string out;
};

void emit(const Options& opt, const std::string& data) {
    if (opt.out.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream f(opt.out);
    if (!f) throw std::runtime_error("cannot open output file: " + opt.out);
    f << data;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

long parse_long_arg(const std::string& text, const std::string& what) {
    long v = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || p != text.data() + text.size())
        throw UsageError("expected an integer for " + what + ", got '" + text + "'");
    return v;
}

Rat parse_rat_arg(const std::string& text, const std::string& what) {
    try {
        Rat v(text);
        if (v.get_den() == 0) throw std::invalid_argument("zero denominator");
        v.canonicalize();
        return v;
    } catch (const std::exception&) {
        throw UsageError("expected a rational like -3 or 5/2 for " + what + ", got '" + text + "'");
    }
}

json sequence_json(const nico::Sequence& s) {
    json a = json::array();
    for (const auto& e : s.sorted()) a.push_back(e.str());
    return a;
}

json poly_json(const nico::RatPolynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    return json{{"var", p.var()}, {"coeffs", coeffs}, {"text", p.str()}};
}

json root_report_json(const nico::RootReport& rep) {
    json rational = json::array();
    for (const auto& [root, mult] : rep.rational_roots)
        rational.push_back(json{{"root", root.get_str()}, {"multiplicity", mult}});
    json surds = json::array();
    for (const auto& r : rep.surd_roots) surds.push_back(r.str());
    return json{{"rational_roots", rational},
                {"surd_roots", surds},
                {"residual", rep.residual.str()},
                {"complex_pair", rep.complex_pair}};
}

// ---- nu ----

int run_nu(const Options& opt, const std::string& expr_text) {
    nico::ExprPtr ast = nico::parse(expr_text);
    nico::Sequence s = nico::eval(ast);
    nico::QuadSurd value = nico::nu(s);
    if (opt.format == "json") {
        emit(opt, dump(json{{"expr", nico::format(ast)},
                            {"size", s.size()},
                            {"sum", nico::sum(s).str()},
                            {"nu", value.str()}}));
    } else if (opt.format == "csv") {
        emit(opt, "nu\n" + value.str() + "\n");
    } else {
        emit(opt, value.str() + "\n");
    }
    return 0;
}

// ---- poly ----

int run_poly(const Options& opt, const std::string& kind, const std::string& expr_text,
             const std::string& selector_text) {
    nico::Sequence s = nico::eval(nico::parse(expr_text));
    bool wants_selector = (kind == "subset" || kind == "scale");
    if (wants_selector && selector_text.empty())
        throw UsageError("poly " + kind + " needs --selector ({i,j,...} or mod(m,r))");
    if (!wants_selector && !selector_text.empty())
        throw UsageError("poly " + kind + " does not take --selector");

    nico::RatPolynomial p = [&] {
        if (kind == "translate") return nico::nu_translate_poly(s);
        if (kind == "adjoin1") return nico::nu_adjoin_one_poly(s);
        nico::Selector sel = nico::parse_selector_text(selector_text);
        if (kind == "subset") return nico::nu_subset_translate_poly(s, sel);
        return nico::nu_scale_subset_poly(s, sel);
    }();
    nico::RootReport rep = p.is_zero() ? nico::RootReport{} : nico::rational_roots(p);

    if (opt.format == "json") {
        emit(opt, dump(json{{"kind", kind},
                            {"poly", poly_json(p)},
                            {"roots", root_report_json(rep)}}));
        return 0;
    }
    if (opt.format == "csv") {
        std::ostringstream os;
        os << "degree,coefficient\n";
        for (long k = 0; k <= std::max<long>(p.degree(), 0); ++k)
            os << k << "," << p.coeff(k).get_str() << "\n";
        emit(opt, os.str());
        return 0;
    }
    std::ostringstream os;
    os << p.str() << "\n";
    if (p.is_zero()) {
        emit(opt, os.str());
        return 0;
    }
    os << "rational roots:";
    if (rep.rational_roots.empty()) os << " none";
    for (const auto& [root, mult] : rep.rational_roots) {
        os << " " << root.get_str();
        if (mult > 1) os << " (x" << mult << ")";
    }
    os << "\n";
    if (!rep.surd_roots.empty()) {
        os << "surd roots:";
        for (const auto& r : rep.surd_roots) os << " " << r.str();
        os << "\n";
    }
    if (rep.complex_pair) os << "complex pair remains\n";
    if (rep.residual.degree() > 0) os << "residual: " << rep.residual.str() << "\n";
    emit(opt, os.str());
    return 0;
}

// ---- adjoin2 ----

// (a, b) with a <= b completing s to nu = 0, scanned over 1 <= a <= b <= bound.
std::vector<std::pair<Int, Int>> adjoin_pair_scan(const nico::Sequence& s, const Int& bound) {
    nico::QuadSurd sum0 = nico::sum(s);
    nico::QuadSurd cube0 = nico::cube_sum(s);
    std::vector<std::pair<Int, Int>> out;
    for (Int a = 1; a <= bound; ++a) {
        nico::QuadSurd sa = sum0 + nico::QuadSurd(a);
        Int a3 = a * a * a;
        nico::QuadSurd ca = cube0 + nico::QuadSurd(a3);
        for (Int b = a; b <= bound; ++b) {
            nico::QuadSurd total = sa + nico::QuadSurd(b);
            Int b3 = b * b * b;
            if (total * total == ca + nico::QuadSurd(b3)) out.emplace_back(a, b);
        }
    }
    return out;
}

int run_adjoin2(const Options& opt, const std::string& expr_text, const std::string& bound_text) {
    nico::ExprPtr ast = nico::parse(expr_text);
    nico::Sequence s = nico::eval(ast);

    const auto* range = std::get_if<nico::RangeNode>(&ast->node);
    bool closed_form = (range != nullptr && range->lo == 1 && bound_text.empty());

    std::vector<std::pair<Int, Int>> pairs;
    Int bound = 0;
    if (closed_form) {
        pairs = nico::adjoin_form_solutions(range->hi);
    } else {
        if (!bound_text.empty()) {
            bound = Int(bound_text);
            if (bound < 1) throw UsageError("--bound must be positive");
        } else {
            bound = (range != nullptr && range->lo == 1) ? nico::adjoin_form_default_bound(range->hi)
                                                         : Int(100);
        }
        pairs = adjoin_pair_scan(s, bound);
    }

    if (opt.format == "json") {
        json jp = json::array();
        for (const auto& [a, b] : pairs) jp.push_back(json::array({a.get_str(), b.get_str()}));
        json j{{"expr", nico::format(ast)},
               {"complete", closed_form},
               {"bound", closed_form ? json(nullptr) : json(bound.get_str())},
               {"pairs", jp}};
        emit(opt, dump(j));
        return 0;
    }
    std::ostringstream os;
    if (opt.format == "csv") os << "a,b\n";
    for (const auto& [a, b] : pairs) os << a.get_str() << "," << b.get_str() << "\n";
    emit(opt, os.str());
    return 0;
}

// ---- pell ----

int run_pell(const Options& opt, const std::string& d_text, long m, bool gap, long count) {
    int modes = (d_text.empty() ? 0 : 1) + (m > 0 ? 1 : 0) + (gap ? 1 : 0);
    if (modes != 1) throw UsageError("pell needs exactly one of: D, --m M, --gap");
    if (count < 1) throw UsageError("--count must be positive");

    std::ostringstream os;
    if (!d_text.empty()) {
        Int d(d_text);
        auto sols = nico::pell_solutions(d, count);
        if (opt.format == "json") {
            json js = json::array();
            for (const auto& s : sols) js.push_back(json::array({s.x.get_str(), s.y.get_str()}));
            emit(opt, dump(json{{"D", d.get_str()}, {"solutions", js}}));
            return 0;
        }
        if (opt.format == "csv") {
            os << "k,x,y\n";
            for (const auto& s : sols) os << s.k << "," << s.x.get_str() << "," << s.y.get_str() << "\n";
        } else {
            nico::CFExpansion cf = nico::sqrt_continued_fraction(d);
            os << "x^2 - " << d.get_str() << "*y^2 = 1\n";
            os << "cf(sqrt(" << d.get_str() << ")) = [" << cf.a0.get_str() << ";";
            for (std::size_t i = 0; i < cf.period.size(); ++i)
                os << (i ? ", " : " ") << cf.period[i].get_str();
            os << "]\n";
            for (const auto& s : sols) os << s.k << ": (" << s.x.get_str() << ", " << s.y.get_str() << ")\n";
        }
        emit(opt, os.str());
        return 0;
    }
    if (m > 0) {
        if (m < 2) throw UsageError("--m needs m >= 2 (m - 1 extra copies of each element)");
        auto fam = nico::repetition_family(m, count);
        if (opt.format == "json") {
            json jf = json::array();
            for (const auto& e : fam) {
                Int x = e.t_pos - e.t_neg;
                jf.push_back(json{{"n", e.n.get_str()},
                                  {"u", e.u},
                                  {"x", x.get_str()},
                                  {"t_pos", e.t_pos.get_str()},
                                  {"t_neg", e.t_neg.get_str()}});
            }
            emit(opt, dump(json{{"m", m}, {"family", jf}}));
            return 0;
        }
        if (opt.format == "csv") {
            os << "n,u,x,t_pos,t_neg\n";
            for (const auto& e : fam) {
                Int x = e.t_pos - e.t_neg;
                os << e.n.get_str() << "," << e.u << "," << x.get_str() << ","
                   << e.t_pos.get_str() << "," << e.t_neg.get_str() << "\n";
            }
        } else {
            for (const auto& e : fam) {
                Int x = e.t_pos - e.t_neg;
                os << "n=" << e.n.get_str() << ": t = " << e.t_pos.get_str() << " or "
                   << e.t_neg.get_str() << " (x = " << x.get_str() << ")\n";
            }
        }
        emit(opt, os.str());
        return 0;
    }
    auto gaps = nico::gap_family_solutions(count);
    if (opt.format == "json") {
        json jg = json::array();
        for (const auto& g : gaps)
            jg.push_back(json{{"j", g.j.get_str()}, {"r", g.r.get_str()}, {"m", g.m.get_str()}});
        emit(opt, dump(json{{"gap_family", jg}}));
        return 0;
    }
    if (opt.format == "csv") {
        os << "j,r,m\n";
        for (const auto& g : gaps) os << g.j.get_str() << "," << g.r.get_str() << "," << g.m.get_str() << "\n";
    } else {
        for (const auto& g : gaps)
            os << "(" << g.j.get_str() << ", " << g.r.get_str() << ", " << g.m.get_str() << ")\n";
    }
    emit(opt, os.str());
    return 0;
}

// ---- family ----

std::string param_signature(const nico::FamilyDescriptor& fam) {
    std::string sig = fam.name + "(";
    for (std::size_t i = 0; i < fam.params.size(); ++i) {
        if (i) sig += ", ";
        sig += fam.params[i].name;
    }
    return sig + ")";
}

int run_family_list(const Options& opt) {
    constexpr long kOpen = std::numeric_limits<long>::max();
    const auto& reg = nico::registry();
    if (opt.format == "json") {
        json out = json::array();
        for (const auto& fam : reg) {
            json params = json::array();
            for (const auto& p : fam.params)
                params.push_back(json{{"name", p.name},
                                      {"lo", p.lo},
                                      {"hi", p.hi == kOpen ? json(nullptr) : json(p.hi)}});
            json grid = json::array();
            for (const auto& cell : fam.default_grid) grid.push_back(cell);
            out.push_back(json{{"name", fam.name},
                               {"params", params},
                               {"note", fam.note},
                               {"default_grid", grid}});
        }
        emit(opt, dump(out));
        return 0;
    }
    std::ostringstream os;
    if (opt.format == "csv") {
        os << "name,params,grid_cells,note\n";
        for (const auto& fam : reg) {
            os << fam.name << ",\"";
            for (std::size_t i = 0; i < fam.params.size(); ++i) os << (i ? " " : "") << fam.params[i].name;
            os << "\"," << fam.default_grid.size() << ",\"" << fam.note << "\"\n";
        }
    } else {
        for (const auto& fam : reg) {
            os << param_signature(fam) << "\n    " << fam.note << "\n    grid: "
               << fam.default_grid.size() << " cells\n";
        }
    }
    emit(opt, os.str());
    return 0;
}

std::vector<long> resolve_family_params(const nico::FamilyDescriptor& fam,
                                        const std::vector<std::string>& args) {
    std::vector<std::optional<long>> vals(fam.params.size());
    std::size_t next_positional = 0;
    for (const auto& arg : args) {
        auto eq = arg.find('=');
        if (eq != std::string::npos) {
            std::string name = arg.substr(0, eq);
            std::size_t idx = fam.params.size();
            for (std::size_t i = 0; i < fam.params.size(); ++i)
                if (fam.params[i].name == name) idx = i;
            if (idx == fam.params.size())
                throw UsageError(fam.name + " has no parameter '" + name + "'");
            if (vals[idx]) throw UsageError("parameter '" + name + "' given twice");
            vals[idx] = parse_long_arg(arg.substr(eq + 1), name);
        } else {
            while (next_positional < vals.size() && vals[next_positional]) ++next_positional;
            if (next_positional >= vals.size())
                throw UsageError(fam.name + " takes " + std::to_string(fam.params.size()) +
                                 " parameter(s)");
            vals[next_positional] = parse_long_arg(arg, fam.params[next_positional].name);
        }
    }
    std::vector<long> out;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (!vals[i]) throw UsageError("missing parameter '" + fam.params[i].name + "' for " +
                                       param_signature(fam));
        out.push_back(*vals[i]);
    }
    return out;
}

json family_report_json(const nico::FamilyReport& rep) {
    return json{{"family", rep.family}, {"params", rep.params},
                {"nu", rep.nu_value.str()},  {"expected", rep.expected.str()},
                {"pass", rep.pass},          {"size", rep.size},
                {"ms", rep.ms}};
}

std::string family_report_line(const nico::FamilyReport& rep) {
    std::ostringstream os;
    os << (rep.pass ? "[PASS] " : "[FAIL] ") << rep.family << "(";
    for (std::size_t i = 0; i < rep.params.size(); ++i) os << (i ? ", " : "") << rep.params[i];
    os << ") nu = " << rep.nu_value.str();
    if (!rep.pass) os << " expected " << rep.expected.str();
    os << "  [" << rep.size << " elements]\n";
    return os.str();
}

int run_family_verify(const Options& opt, const std::string& name,
                      const std::vector<std::string>& param_args) {
    std::vector<nico::FamilyReport> reports;
    if (name.empty()) {
        if (!param_args.empty()) throw UsageError("parameters need a family name");
        reports = nico::verify_all();
    } else {
        const auto& fam = nico::find_family(name);
        reports.push_back(nico::verify_family(name, resolve_family_params(fam, param_args)));
    }
    bool all_pass = true;
    for (const auto& rep : reports) all_pass = all_pass && rep.pass;

    if (opt.format == "json") {
        json out = json::array();
        for (const auto& rep : reports) out.push_back(family_report_json(rep));
        emit(opt, dump(out));
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << "family,params,nu,expected,pass\n";
        for (const auto& rep : reports) {
            os << rep.family << ",\"";
            for (std::size_t i = 0; i < rep.params.size(); ++i) os << (i ? " " : "") << rep.params[i];
            os << "\"," << rep.nu_value.str() << "," << rep.expected.str() << ","
               << (rep.pass ? "true" : "false") << "\n";
        }
        emit(opt, os.str());
    } else {
        std::ostringstream os;
        for (const auto& rep : reports) os << family_report_line(rep);
        emit(opt, os.str());
    }
    return all_pass ? 0 : 1;
}

// ---- curve ----

int run_curve(const Options& opt, long n, const std::string& mode, long box,
              const std::string& from_text, const std::string& to_text,
              const std::string& step_text) {
    if (mode == "int-points") {
        if (box < 1) throw UsageError("--box must be positive");
        auto pts = nico::integer_points(n, box);
        if (opt.format == "json") {
            json jp = json::array();
            for (const auto& p : pts)
                jp.push_back(json{{"a", std::to_string(p.a)},
                                  {"b", std::to_string(p.b)},
                                  {"component", p.component}});
            emit(opt, dump(json{{"n", n}, {"box", box}, {"points", jp}}));
            return 0;
        }
        std::ostringstream os;
        if (opt.format == "csv") {
            os << "a,b,component\n";
            for (const auto& p : pts) os << p.a << "," << p.b << "," << p.component << "\n";
        } else {
            for (const auto& p : pts) os << "(" << p.a << ", " << p.b << ") " << p.component << "\n";
        }
        emit(opt, os.str());
        return 0;
    }

    Rat lo = from_text.empty() ? Rat(-(n + 4)) : parse_rat_arg(from_text, "--from");
    Rat hi = to_text.empty() ? Rat(n + 4) : parse_rat_arg(to_text, "--to");
    Rat step = step_text.empty() ? Rat(1, 2) : parse_rat_arg(step_text, "--step");
    if (step <= 0) throw UsageError("--step must be positive");
    if (hi < lo) throw UsageError("--to must not be below --from");

    nico::CurvePointSet set = nico::curve_sample(n, lo, hi, step, opt.precision);
    if (opt.format == "json") {
        json jp = json::array();
        for (const auto& p : set.points)
            jp.push_back(json{{"a", nico::FixedDecimal::of(p.a, opt.precision).str()},
                              {"b", p.b.str()},
                              {"component", p.component},
                              {"exact", p.exact ? json(p.b_exact.get_str()) : json(nullptr)}});
        emit(opt, dump(json{{"n", set.n}, {"points", jp}}));
        return 0;
    }
    std::ostringstream os;
    if (opt.format == "csv") os << "a,b,component\n";
    for (const auto& p : set.points) {
        std::string a_str = nico::FixedDecimal::of(p.a, opt.precision).str();
        if (opt.format == "csv")
            os << a_str << "," << p.b.str() << "," << p.component << "\n";
        else
            os << a_str << "  " << p.b.str() << "  " << p.component << "\n";
    }
    emit(opt, os.str());
    return 0;
}

// ---- verify ----

int run_verify(const Options& opt, const std::vector<std::string>& only) {
    std::vector<nico::CheckResult> results = nico::run_checks(only);
    bool all_pass = true;
    for (const auto& r : results) all_pass = all_pass && r.pass;

    if (opt.format == "json") {
        json out = json::array();
        for (const auto& r : results)
            out.push_back(json{{"check_id", r.id},
                               {"area", r.area},
                               {"status", r.pass ? "pass" : "fail"},
                               {"value", r.value},
                               {"expected", r.expected},
                               {"tolerance", r.tolerance},
                               {"detail", r.detail},
                               {"ms", r.ms}});
        emit(opt, dump(out));
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << "check_id,area,status,ms\n";
        for (const auto& r : results)
            os << r.id << "," << r.area << "," << (r.pass ? "pass" : "fail") << "," << r.ms << "\n";
        emit(opt, os.str());
    } else {
        std::ostringstream os;
        for (const auto& r : results) {
            os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " (" << r.area << ")";
            if (!r.pass) {
                os << "\n    value:    " << r.value << "\n    expected: " << r.expected;
                if (!r.detail.empty()) os << "\n    " << r.detail;
            }
            os << "\n";
        }
        emit(opt, os.str());
    }
    std::size_t passed = 0;
    for (const auto& r : results)
        if (r.pass) ++passed;
    std::cerr << passed << "/" << results.size() << " checks passed\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    if (const char* env = std::getenv("NICO_PRECISION")) {
        std::string text(env);
        long v = 0;
        auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc() || p != text.data() + text.size() || v < 10) {
            std::cerr << "NICO_PRECISION must be an integer >= 10, got '" << text << "'\n";
            return 2;
        }
        opt.precision = v;
    }

    CLI::App app{"Exact tools for sequences whose square of the sum equals the sum of cubes"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--precision", opt.precision, "decimal digits for approximate output")
        ->capture_default_str()
        ->check(CLI::Range(10l, 1000000l));
    app.add_option("--format", opt.format, "text, json, or csv")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", opt.out, "write data to this file instead of stdout");

    std::string nu_expr;
    auto* nu_cmd = app.add_subcommand("nu", "evaluate an expression and print nu (sum squared minus cube sum)");
    nu_cmd->add_option("expr", nu_expr, "sequence expression, e.g. \"[1..100]\"")->required();

    std::string poly_kind, poly_expr, poly_selector;
    auto* poly_cmd = app.add_subcommand("poly", "nu as a polynomial in a free parameter, with its roots");
    poly_cmd->add_option("kind", poly_kind, "translate | subset | scale | adjoin1")
        ->required()
        ->check(CLI::IsMember({"translate", "subset", "scale", "adjoin1"}));
    poly_cmd->add_option("expr", poly_expr, "base sequence expression")->required();
    poly_cmd->add_option("--selector", poly_selector, "positions {i,j,...} or mod(m,r), for subset/scale");

    std::string a2_expr, a2_bound;
    auto* a2_cmd = app.add_subcommand("adjoin2", "integer pairs (a, b) that complete the sequence to nu = 0");
    a2_cmd->add_option("expr", a2_expr, "base sequence expression")->required();
    a2_cmd->add_option("--bound", a2_bound,
                       "scan 1 <= a <= b <= bound (default: complete closed form for [1..n], else 100)");

    std::string pell_d;
    long pell_m = 0, pell_count = 5;
    bool pell_gap = false;
    auto* pell_cmd = app.add_subcommand("pell", "Pell equation solutions and the families they parameterize");
    pell_cmd->add_option("D", pell_d, "list (x, y) with x^2 - D*y^2 = 1");
    pell_cmd->add_option("--m", pell_m, "repeated-sequence family: shifts of [1..n] taken m times");
    pell_cmd->add_flag("--gap", pell_gap, "gap family: (j, r, m) with (4j+3)^2 - 8r^2 = -7, m = j + r");
    pell_cmd->add_option("--count", pell_count, "how many solutions")->capture_default_str();

    auto* fam_cmd = app.add_subcommand("family", "named sequence families");
    fam_cmd->fallthrough();
    fam_cmd->require_subcommand(1);
    auto* fam_list = fam_cmd->add_subcommand("list", "print the family registry");
    std::string fv_name;
    std::vector<std::string> fv_params;
    auto* fam_verify = fam_cmd->add_subcommand("verify", "check nu against the closed form");
    fam_verify->add_option("name", fv_name, "family name (omit to verify every default grid)");
    fam_verify->add_option("params", fv_params, "parameter values, positional or name=value");

    long curve_n = 0, curve_box = 20;
    std::string curve_mode, curve_from, curve_to, curve_step;
    auto* curve_cmd = app.add_subcommand("curve", "the plane cubic nu(w_n; a, b) = 0");
    curve_cmd->add_option("mode", curve_mode, "sample | int-points")
        ->required()
        ->check(CLI::IsMember({"sample", "int-points"}));
    curve_cmd->add_option("--n", curve_n, "family index n >= 3")->required();
    curve_cmd->add_option("--box", curve_box, "int-points: search [-box, box]^2")->capture_default_str();
    curve_cmd->add_option("--from", curve_from, "sample: first a value (rational; default -(n+4))");
    curve_cmd->add_option("--to", curve_to, "sample: last a value (rational; default n+4)");
    curve_cmd->add_option("--step", curve_step, "sample: a increment (rational; default 1/2)");

    std::vector<std::string> verify_only;
    auto* verify_cmd = app.add_subcommand("verify", "run the acceptance checks");
    verify_cmd->add_option("--only", verify_only, "restrict to these areas (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*nu_cmd) return run_nu(opt, nu_expr);
        if (*poly_cmd) return run_poly(opt, poly_kind, poly_expr, poly_selector);
        if (*a2_cmd) return run_adjoin2(opt, a2_expr, a2_bound);
        if (*pell_cmd) return run_pell(opt, pell_d, pell_m, pell_gap, pell_count);
        if (*fam_list) return run_family_list(opt);
        if (*fam_verify) return run_family_verify(opt, fv_name, fv_params);
        if (*curve_cmd) return run_curve(opt, curve_n, curve_mode, curve_box, curve_from, curve_to, curve_step);
        if (*verify_cmd) return run_verify(opt, verify_only);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const nico::ParseError& e) {
        std::cerr << "parse error at offset " << e.offset() << ": " << e.what() << "\n";
        return 2;
    } catch (const nico::EvalError& e) {
        std::cerr << "evaluation error at offset " << e.offset() << ": " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
